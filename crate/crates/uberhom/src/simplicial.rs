//! Simplicial complexes, bi-colourings, and horizontal homology.
//!
//! A bi-colouring assigns each vertex of a finite simplicial complex a colour
//! in `{0, 1}`. The *weight* of a simplex counts its 0-coloured vertices:
//! `w_ε(σ) = dim(σ) + 1 − Σ_{v∈σ} ε(v)`. Deleting a 1-coloured vertex
//! preserves the weight while deleting a 0-coloured vertex lowers it by one,
//! so the simplicial boundary splits as `∂ = ∂_h + ∂_v` with `∂_h` the
//! weight-preserving part. The *horizontal complex* of `(X, ε)` is the
//! bigraded complex of all simplices under `∂_h`, graded by dimension and
//! weight; its homology is the horizontal homology `H^h(X, ε)`.
//!
//! Between a colouring and one of its covers (one bit flipped from 0 to 1),
//! the weight-preserving part of the identity is a chain map — the transition
//! map whose induced maps on horizontal homology assemble into the über
//! complex. Injective coloured simplicial maps likewise induce weight-graded
//! chain maps; non-injective ones need not, and are rejected.
//!
//! Degrees: a simplex of dimension `i` and weight `k` sits at multidegree
//! `[−i, k, 0]`, so the dimension-lowering `∂_h` raises the primary component
//! by one as the complex module requires. [`horizontal_degree`] converts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::complex::{ChainMap, ComplexError, Degree, GradedComplex, HomologySummary};
use crate::linalg::{Field, Scalar, SparseMatrix};

/// Errors from simplicial constructions and coloured maps.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SimplicialError {
    /// A vertex index at or above the declared vertex count.
    #[error("vertex {vertex} out of range for {count} vertices")]
    InvalidVertex { vertex: usize, count: usize },
    /// A simplex listed the same vertex twice.
    #[error("simplex {simplex} repeats a vertex")]
    RepeatedVertex { simplex: String },
    /// The queried tuple is not a simplex of the complex.
    #[error("unknown simplex {simplex}")]
    UnknownSimplex { simplex: String },
    /// A colouring's length disagrees with the vertex count.
    #[error("colouring has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    /// The complex has no simplex at all (zero vertices).
    #[error("a simplicial complex needs at least one vertex")]
    Empty,
    /// Transition maps exist only between a colouring and one of its covers.
    #[error("colourings are not adjacent: the second must flip exactly one 0 to 1")]
    NotAdjacent,
    /// A vertex map fails to send some simplex to a simplex.
    #[error("map is not simplicial: image of {simplex} is not a simplex of the target")]
    NotSimplicial { simplex: String },
    /// The coloured-map conditions fail.
    #[error("map is not coloured: {reason}")]
    NotColoured { reason: String },
    /// The operation requires an injective map.
    #[error("unsupported map: {reason}")]
    UnsupportedMap { reason: String },
    /// A malformed downstream complex.
    #[error(transparent)]
    Complex(#[from] ComplexError),
    /// An exact-arithmetic failure.
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}

/// The multidegree of bidegree `(i, k)`: dimension-`i`, weight-`k` simplices
/// sit at `[−i, k, 0]`.
pub fn horizontal_degree(i: i32, k: i32) -> Degree {
    [-i, k, 0]
}

/// The `(dimension, weight)` bidegree encoded by a horizontal multidegree.
pub fn horizontal_bidegree(d: Degree) -> (i32, i32) {
    (-d[0], d[1])
}

/// Renders a sorted vertex tuple as `{v0,v1,…}`.
pub fn format_simplex(simplex: &[usize]) -> String {
    let parts: Vec<String> = simplex.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// A finite simplicial complex on vertices `0 … m−1`.
///
/// Simplices are canonically sorted vertex tuples, stored lexicographically;
/// every vertex is a 0-simplex and the set is closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `generators` (closing downward) on
    /// `vertex_count` vertices. Every vertex becomes a 0-simplex even when it
    /// appears in no generator.
    ///
    /// # Errors
    /// Rejects out-of-range or repeated vertices and a zero vertex count.
    pub fn from_simplices<I, S>(
        vertex_count: usize,
        generators: I,
    ) -> Result<SimplicialComplex, SimplicialError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        if vertex_count == 0 {
            return Err(SimplicialError::Empty);
        }
        let mut simplices: BTreeSet<Vec<usize>> =
            (0..vertex_count).map(|v| vec![v]).collect();
        for generator in generators {
            let mut sorted = generator.as_ref().to_vec();
            sorted.sort_unstable();
            for &v in &sorted {
                if v >= vertex_count {
                    return Err(SimplicialError::InvalidVertex { vertex: v, count: vertex_count });
                }
            }
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(SimplicialError::RepeatedVertex {
                    simplex: format_simplex(&sorted),
                });
            }
            // Close under faces: every nonempty subset of the generator.
            let n = sorted.len();
            for mask in 1u64..1 << n {
                let face: Vec<usize> = (0..n)
                    .filter(|&p| mask >> p & 1 == 1)
                    .map(|p| sorted[p])
                    .collect();
                simplices.insert(face);
            }
        }
        Ok(SimplicialComplex { vertex_count, simplices })
    }

    /// The full simplex `Δ^{m−1}` on `m` vertices.
    pub fn full_simplex(m: usize) -> SimplicialComplex {
        let all: Vec<usize> = (0..m).collect();
        SimplicialComplex::from_simplices(m, [all]).expect("valid full simplex")
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// All simplices in lexicographic order.
    pub fn simplices(&self) -> impl Iterator<Item = &[usize]> {
        self.simplices.iter().map(Vec::as_slice)
    }

    /// Number of simplices.
    pub fn simplex_count(&self) -> usize {
        self.simplices.len()
    }

    /// Largest simplex dimension.
    pub fn dimension(&self) -> i32 {
        self.simplices.iter().map(|s| s.len() as i32 - 1).max().unwrap_or(-1)
    }

    /// Membership test (the tuple must be sorted).
    pub fn contains(&self, simplex: &[usize]) -> bool {
        self.simplices.contains(simplex)
    }

    /// Whether the 1-skeleton is connected (single vertex counts as
    /// connected).
    pub fn is_connected(&self) -> bool {
        let mut reach = vec![false; self.vertex_count];
        let mut stack = vec![0usize];
        reach[0] = true;
        let edges: Vec<&Vec<usize>> =
            self.simplices.iter().filter(|s| s.len() == 2).collect();
        while let Some(v) = stack.pop() {
            for e in &edges {
                let other = if e[0] == v {
                    e[1]
                } else if e[1] == v {
                    e[0]
                } else {
                    continue;
                };
                if !reach[other] {
                    reach[other] = true;
                    stack.push(other);
                }
            }
        }
        reach.into_iter().all(|r| r)
    }

    /// The weight `dim(σ) + 1 − Σ_{v∈σ} ε(v)`: the number of 0-coloured
    /// vertices of `σ`.
    ///
    /// # Errors
    /// Rejects tuples outside the complex and mismatched colouring lengths.
    pub fn weight(&self, simplex: &[usize], eps: &Colouring) -> Result<usize, SimplicialError> {
        if eps.len() != self.vertex_count {
            return Err(SimplicialError::LengthMismatch {
                expected: self.vertex_count,
                got: eps.len(),
            });
        }
        if !self.contains(simplex) {
            return Err(SimplicialError::UnknownSimplex { simplex: format_simplex(simplex) });
        }
        Ok(simplex.iter().filter(|&&v| !eps.is_one(v)).count())
    }
}

/// A bi-colouring `ε: V → {0,1}` of a vertex set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Colouring {
    bits: Vec<bool>,
}

impl Colouring {
    /// A colouring from explicit bits.
    pub fn new(bits: Vec<bool>) -> Colouring {
        Colouring { bits }
    }

    /// The length-`len` colouring whose 1-bits are the set bits of `mask`
    /// (vertex `v` reads bit `v`).
    ///
    /// # Panics
    /// Panics when `mask` has bits at or above `len`.
    pub fn from_mask(len: usize, mask: u64) -> Colouring {
        assert!(len >= 64 || mask >> len == 0, "mask has bits beyond the vertex count");
        Colouring { bits: (0..len).map(|v| mask >> v & 1 == 1).collect() }
    }

    /// The all-zeros colouring.
    pub fn zeros(len: usize) -> Colouring {
        Colouring { bits: vec![false; len] }
    }

    /// The all-ones colouring.
    pub fn ones(len: usize) -> Colouring {
        Colouring { bits: vec![true; len] }
    }

    /// Number of vertices coloured.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// True for the empty vertex set.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The colour of vertex `v`.
    pub fn is_one(&self, v: usize) -> bool {
        self.bits[v]
    }

    /// The level `ℓ(ε)`: number of 1-coloured vertices.
    pub fn level(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// The 1-bits as a mask (defined for up to 64 vertices).
    pub fn mask(&self) -> u64 {
        assert!(self.bits.len() <= 64, "mask view limited to 64 vertices");
        self.bits
            .iter()
            .enumerate()
            .fold(0, |m, (v, &b)| if b { m | 1 << v } else { m })
    }

    /// The flipped bit position when `other` covers `self` (exactly one 0
    /// becomes 1), else `None`.
    pub fn cover_bit(&self, other: &Colouring) -> Option<usize> {
        if self.len() != other.len() {
            return None;
        }
        let mut flipped = None;
        for v in 0..self.len() {
            match (self.bits[v], other.bits[v]) {
                (false, true) if flipped.is_none() => flipped = Some(v),
                (a, b) if a == b => {}
                _ => return None,
            }
        }
        flipped
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

/// The horizontal complex `C(X, ε)`: all simplices of `X` bigraded by
/// `(dimension, weight)` at multidegree `[−i, k, 0]`, under the
/// weight-preserving differential that deletes 1-coloured vertices with the
/// sign `(−1)^{position}`.
pub fn horizontal_complex(
    x: &SimplicialComplex,
    eps: &Colouring,
    field: Field,
) -> Result<GradedComplex, SimplicialError> {
    if eps.len() != x.vertex_count() {
        return Err(SimplicialError::LengthMismatch {
            expected: x.vertex_count(),
            got: eps.len(),
        });
    }
    let mut by_degree: BTreeMap<Degree, Vec<&[usize]>> = BTreeMap::new();
    let mut location: BTreeMap<&[usize], (Degree, usize)> = BTreeMap::new();
    for simplex in x.simplices() {
        let i = simplex.len() as i32 - 1;
        let k = x.weight(simplex, eps).expect("own simplex") as i32;
        let slot = by_degree.entry(horizontal_degree(i, k)).or_default();
        location.insert(simplex, (horizontal_degree(i, k), slot.len()));
        slot.push(simplex);
    }
    let mut complex = GradedComplex::new(field);
    for (&d, simplices) in &by_degree {
        complex.add_generators(d, simplices.iter().map(|s| format_simplex(s)))?;
    }
    for (&d, simplices) in &by_degree {
        let mut entries = Vec::new();
        for (col, simplex) in simplices.iter().enumerate() {
            if simplex.len() == 1 {
                continue;
            }
            for (p, &v) in simplex.iter().enumerate() {
                if !eps.is_one(v) {
                    continue;
                }
                let mut face = simplex.to_vec();
                face.remove(p);
                let (face_degree, row) = location[face.as_slice()];
                debug_assert_eq!(face_degree, crate::complex::next_degree(d));
                entries.push((row, col, Scalar::sign(p as u32)));
            }
        }
        let rows = by_degree
            .get(&crate::complex::next_degree(d))
            .map_or(0, Vec::len);
        complex.set_differential(d, SparseMatrix::from_entries(rows, simplices.len(), entries)?)?;
    }
    Ok(complex)
}

/// The horizontal homology `H^h(X, ε)`: bigraded ranks with deterministic
/// representatives.
pub fn horizontal_homology(
    x: &SimplicialComplex,
    eps: &Colouring,
    field: Field,
) -> Result<HomologySummary, SimplicialError> {
    Ok(horizontal_complex(x, eps, field)?.homology_with_representatives()?)
}

/// The transition chain map `C(X, ε) → C(X, ε′)` for a covering pair
/// `ε ⋖ ε′`: the weight-preserving part of the identity, sending `σ` to
/// itself when its weight is unchanged (it does not contain the flipped
/// vertex) and to zero otherwise.
///
/// # Errors
/// Rejects non-adjacent colouring pairs.
pub fn transition_chain_map(
    x: &SimplicialComplex,
    eps: &Colouring,
    eps_up: &Colouring,
    field: Field,
) -> Result<ChainMap, SimplicialError> {
    let Some(flipped) = eps.cover_bit(eps_up) else {
        return Err(SimplicialError::NotAdjacent);
    };
    let source = horizontal_complex(x, eps, field)?;
    let target = horizontal_complex(x, eps_up, field)?;
    let mut entries: BTreeMap<Degree, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
    for simplex in x.simplices() {
        if simplex.contains(&flipped) {
            continue;
        }
        let label = format_simplex(simplex);
        let (d, col) = source.position(&label).expect("simplex generates source");
        let (d_target, row) = target.position(&label).expect("simplex generates target");
        debug_assert_eq!(d, d_target, "weight unchanged off the flipped vertex");
        entries.entry(d).or_default().push((row, col, Scalar::one()));
    }
    let mut blocks = BTreeMap::new();
    for (d, triplets) in entries {
        blocks.insert(d, SparseMatrix::from_entries(target.dim(d), source.dim(d), triplets)?);
    }
    Ok(ChainMap::new(source, target, blocks)?)
}

/// A simplicial map between coloured complexes satisfying the coloured-map
/// conditions: every target vertex has at most one 1-coloured preimage, and a
/// target vertex is 1-coloured exactly when such a preimage exists.
#[derive(Clone, Debug)]
pub struct ColouredMap {
    source: SimplicialComplex,
    source_colouring: Colouring,
    target: SimplicialComplex,
    target_colouring: Colouring,
    vertex_map: Vec<usize>,
    injective: bool,
}

impl ColouredMap {
    /// Validates and builds a coloured simplicial map.
    ///
    /// # Errors
    /// Rejects maps that are not simplicial (some simplex image is not a
    /// simplex) and maps violating either coloured-map condition. The second
    /// condition is read over *all* target vertices: a vertex outside the
    /// image has no preimage at all, so it must be 0-coloured.
    pub fn new(
        source: SimplicialComplex,
        source_colouring: Colouring,
        target: SimplicialComplex,
        target_colouring: Colouring,
        vertex_map: Vec<usize>,
    ) -> Result<ColouredMap, SimplicialError> {
        if source_colouring.len() != source.vertex_count() {
            return Err(SimplicialError::LengthMismatch {
                expected: source.vertex_count(),
                got: source_colouring.len(),
            });
        }
        if target_colouring.len() != target.vertex_count() {
            return Err(SimplicialError::LengthMismatch {
                expected: target.vertex_count(),
                got: target_colouring.len(),
            });
        }
        if vertex_map.len() != source.vertex_count() {
            return Err(SimplicialError::LengthMismatch {
                expected: source.vertex_count(),
                got: vertex_map.len(),
            });
        }
        for &image in &vertex_map {
            if image >= target.vertex_count() {
                return Err(SimplicialError::InvalidVertex {
                    vertex: image,
                    count: target.vertex_count(),
                });
            }
        }
        // Simplicial: the image vertex set of each simplex is a simplex.
        for simplex in source.simplices() {
            let mut image: Vec<usize> = simplex.iter().map(|&v| vertex_map[v]).collect();
            image.sort_unstable();
            image.dedup();
            if !target.contains(&image) {
                return Err(SimplicialError::NotSimplicial {
                    simplex: format_simplex(simplex),
                });
            }
        }
        // Coloured condition (1): at most one 1-coloured preimage per vertex.
        let mut one_preimages = vec![0usize; target.vertex_count()];
        for (v, &image) in vertex_map.iter().enumerate() {
            if source_colouring.is_one(v) {
                one_preimages[image] += 1;
                if one_preimages[image] > 1 {
                    return Err(SimplicialError::NotColoured {
                        reason: format!("target vertex {image} has two 1-coloured preimages"),
                    });
                }
            }
        }
        // Coloured condition (2), over every target vertex: 0-coloured iff no
        // 1-coloured preimage.
        for (y, &count) in one_preimages.iter().enumerate() {
            if target_colouring.is_one(y) != (count == 1) {
                return Err(SimplicialError::NotColoured {
                    reason: format!(
                        "target vertex {y} is {}-coloured but has {count} one-coloured preimages",
                        u8::from(target_colouring.is_one(y)),
                    ),
                });
            }
        }
        let mut seen = BTreeSet::new();
        let injective = vertex_map.iter().all(|&image| seen.insert(image));
        Ok(ColouredMap {
            source,
            source_colouring,
            target,
            target_colouring,
            vertex_map,
            injective,
        })
    }

    /// Whether the vertex map is injective.
    pub fn is_injective(&self) -> bool {
        self.injective
    }

    /// The image of a vertex.
    pub fn apply_vertex(&self, v: usize) -> usize {
        self.vertex_map[v]
    }
}

/// The chain map between horizontal complexes induced by an injective
/// coloured map: `σ ↦ ψ(σ)` with the sign of the permutation sorting the
/// image vertices. Injectivity forces `ε_Y(ψ(x)) = ε_X(x)`, so every simplex
/// keeps its (dimension, weight) bidegree.
///
/// # Errors
/// Rejects non-injective maps: collapsing maps need not commute with the
/// horizontal differentials.
pub fn induced_injective_map(psi: &ColouredMap, field: Field) -> Result<ChainMap, SimplicialError> {
    if !psi.injective {
        return Err(SimplicialError::UnsupportedMap {
            reason: "only injective coloured maps induce chain maps".into(),
        });
    }
    let source = horizontal_complex(&psi.source, &psi.source_colouring, field)?;
    let target = horizontal_complex(&psi.target, &psi.target_colouring, field)?;
    let mut entries: BTreeMap<Degree, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
    for simplex in psi.source.simplices() {
        let image: Vec<usize> = simplex.iter().map(|&v| psi.vertex_map[v]).collect();
        let mut sorted = image.clone();
        sorted.sort_unstable();
        let sign = inversion_parity(&image);
        let (d, col) = source
            .position(&format_simplex(simplex))
            .expect("simplex generates source");
        let (d_image, row) = target
            .position(&format_simplex(&sorted))
            .expect("simplicial image is a target simplex");
        assert_eq!(d, d_image, "injective coloured maps preserve dimension and weight");
        entries.entry(d).or_default().push((row, col, Scalar::sign(sign)));
    }
    let mut blocks = BTreeMap::new();
    for (d, triplets) in entries {
        blocks.insert(d, SparseMatrix::from_entries(target.dim(d), source.dim(d), triplets)?);
    }
    Ok(ChainMap::new(source, target, blocks)?)
}

/// Parity of the number of inversions (the sign of the sorting permutation).
fn inversion_parity(values: &[usize]) -> u32 {
    let mut parity = 0;
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if values[i] > values[j] {
                parity += 1;
            }
        }
    }
    parity
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_complex() -> SimplicialComplex {
        SimplicialComplex::from_simplices(2, [[0, 1]]).unwrap()
    }

    fn triangle_skeleton() -> SimplicialComplex {
        SimplicialComplex::from_simplices(3, [[0, 1], [0, 2], [1, 2]]).unwrap()
    }

    #[test]
    fn closure_adds_faces_and_vertices() {
        let x = SimplicialComplex::from_simplices(4, [[0, 1, 2]]).unwrap();
        // One triangle, three edges, four vertices (vertex 3 is isolated).
        assert_eq!(x.simplex_count(), 1 + 3 + 4);
        assert!(x.contains(&[0, 2]));
        assert!(x.contains(&[3]));
        assert_eq!(x.dimension(), 2);
        assert!(!x.is_connected());
        assert!(SimplicialComplex::full_simplex(3).is_connected());
    }

    #[test]
    fn invalid_generators_are_rejected() {
        assert!(matches!(
            SimplicialComplex::from_simplices(2, [[0, 5]]),
            Err(SimplicialError::InvalidVertex { vertex: 5, .. })
        ));
        assert!(matches!(
            SimplicialComplex::from_simplices(2, [[1, 1]]),
            Err(SimplicialError::RepeatedVertex { .. })
        ));
    }

    #[test]
    fn weight_counts_zero_coloured_vertices() {
        let x = edge_complex();
        assert_eq!(x.weight(&[0, 1], &Colouring::ones(2)).unwrap(), 0);
        assert_eq!(x.weight(&[0, 1], &Colouring::zeros(2)).unwrap(), 2);
        let triangle = SimplicialComplex::full_simplex(3);
        let eps = Colouring::new(vec![true, false, true]);
        assert_eq!(triangle.weight(&[0, 1, 2], &eps).unwrap(), 1);
        assert!(matches!(
            triangle.weight(&[0, 3], &eps),
            Err(SimplicialError::UnknownSimplex { .. })
        ));
    }

    #[test]
    fn all_zeros_colouring_gives_zero_differential_and_face_count_ranks() {
        let x = SimplicialComplex::full_simplex(3);
        let c = horizontal_complex(&x, &Colouring::zeros(3), Field::GF2).unwrap();
        for d in c.degrees() {
            assert!(c.differential(d).is_zero());
        }
        let h = c.homology().unwrap();
        // rank at (i, i+1) = number of i-simplices.
        assert_eq!(h.rank_at(horizontal_degree(0, 1)), 3);
        assert_eq!(h.rank_at(horizontal_degree(1, 2)), 3);
        assert_eq!(h.rank_at(horizontal_degree(2, 3)), 1);
    }

    #[test]
    fn all_ones_colouring_recovers_simplicial_homology_in_weight_zero() {
        // The triangle boundary (circle): one component, one loop.
        let x = triangle_skeleton();
        let h = horizontal_homology(&x, &Colouring::ones(3), Field::Rational).unwrap();
        assert_eq!(h.rank_at(horizontal_degree(0, 0)), 1);
        assert_eq!(h.rank_at(horizontal_degree(1, 0)), 1);
        assert_eq!(h.total_rank(), 2);
        // And the full simplex is contractible.
        let disc = SimplicialComplex::full_simplex(3);
        let h = horizontal_homology(&disc, &Colouring::ones(3), Field::Rational).unwrap();
        assert_eq!(h.rank_at(horizontal_degree(0, 0)), 1);
        assert_eq!(h.total_rank(), 1);
    }

    #[test]
    fn half_coloured_edge_has_rank_one_at_bidegree_zero_zero() {
        // K₂ with ε = (1,0): the only 1-coloured vertex can be deleted from
        // the edge, so the edge kills the 0-coloured vertex's class and the
        // 1-coloured vertex survives at weight 0.
        let x = edge_complex();
        let eps = Colouring::new(vec![true, false]);
        let c = horizontal_complex(&x, &eps, Field::Rational).unwrap();
        let d = c.differential(horizontal_degree(1, 1));
        assert_eq!(d.rows(), 1);
        assert_eq!(d.cols(), 1);
        assert_eq!(d.get(0, 0), Some(&Scalar::Int(1)));
        let h = c.homology().unwrap();
        assert_eq!(h.nonzero(), BTreeMap::from([(horizontal_degree(0, 0), 1)]));
    }

    #[test]
    fn boundary_splits_into_horizontal_and_weight_dropping_parts() {
        // For every simplex and colouring of Δ²: deleting a 1-coloured vertex
        // appears in ∂_h with the simplicial sign; deleting a 0-coloured one
        // drops the weight by exactly 1 and is absent from ∂_h.
        let x = SimplicialComplex::full_simplex(3);
        for mask in 0u64..8 {
            let eps = Colouring::from_mask(3, mask);
            let c = horizontal_complex(&x, &eps, Field::Rational).unwrap();
            for simplex in x.simplices() {
                if simplex.len() == 1 {
                    continue;
                }
                let w = x.weight(simplex, &eps).unwrap();
                let (d, col) = c.position(&format_simplex(simplex)).unwrap();
                let matrix = c.differential(d);
                for (p, &v) in simplex.iter().enumerate() {
                    let mut face = simplex.to_vec();
                    face.remove(p);
                    let face_weight = x.weight(&face, &eps).unwrap();
                    if eps.is_one(v) {
                        assert_eq!(face_weight, w, "deleting 1-coloured preserves weight");
                        let (fd, row) = c.position(&format_simplex(&face)).unwrap();
                        assert_eq!(fd, crate::complex::next_degree(d));
                        assert_eq!(matrix.get(row, col), Some(&Scalar::sign(p as u32)));
                    } else {
                        assert_eq!(face_weight, w - 1, "deleting 0-coloured drops weight by 1");
                        let (fd, _) = c.position(&format_simplex(&face)).unwrap();
                        assert_ne!(fd, crate::complex::next_degree(d));
                    }
                }
            }
        }
    }

    #[test]
    fn component_count_appears_at_bidegree_zero_zero() {
        // Two triangles sharing nothing, coloured fully: rank at (0,0) is the
        // number of connected components of the 1-coloured subgraph.
        let x = SimplicialComplex::from_simplices(6, [[0, 1], [1, 2], [3, 4], [4, 5]]).unwrap();
        let h = horizontal_homology(&x, &Colouring::ones(6), Field::GF2).unwrap();
        assert_eq!(h.rank_at(horizontal_degree(0, 0)), 2);
        // Colour only {0, 1, 3}: components {0,1} and {3}.
        let eps = Colouring::from_mask(6, 0b001011);
        let h = horizontal_homology(&x, &eps, Field::GF2).unwrap();
        assert_eq!(h.rank_at(horizontal_degree(0, 0)), 2);
    }

    #[test]
    fn transition_map_on_an_edge_sends_touched_generators_to_zero() {
        let x = edge_complex();
        let eps = Colouring::zeros(2);
        let eps_up = Colouring::from_mask(2, 0b01);
        let f = transition_chain_map(&x, &eps, &eps_up, Field::GF2).unwrap();
        // Vertex 1 keeps its weight, vertex 0 and the edge lose theirs.
        let block = f.block(horizontal_degree(0, 1));
        // Source (0,1): both vertices; target (0,1): vertex 1 only.
        assert_eq!(block.rows(), 1);
        assert_eq!(block.cols(), 2);
        let source_gens = f.source().generators(horizontal_degree(0, 1));
        assert_eq!(source_gens, ["{0}".to_string(), "{1}".to_string()]);
        assert!(block.get(0, 0).is_none());
        assert_eq!(block.get(0, 1), Some(&Scalar::Int(1)));
        assert!(f.block(horizontal_degree(1, 2)).is_zero());
        // Induced map at bidegree (0,1): the target rank vanishes (vertex 1
        // becomes a boundary), so the induced matrix is 0 × 2.
        let induced = f.induced_map_on_homology().unwrap();
        let at = &induced[&horizontal_degree(0, 1)];
        assert_eq!((at.rows(), at.cols()), (0, 2));
        assert!(at.is_zero());
    }

    #[test]
    fn transition_requires_adjacent_colourings() {
        let x = edge_complex();
        let err = transition_chain_map(&x, &Colouring::zeros(2), &Colouring::ones(2), Field::GF2)
            .unwrap_err();
        assert_eq!(err, SimplicialError::NotAdjacent);
    }

    #[test]
    fn identity_coloured_map_induces_identity_blocks() {
        let x = triangle_skeleton();
        let eps = Colouring::from_mask(3, 0b011);
        let psi = ColouredMap::new(x.clone(), eps.clone(), x.clone(), eps, vec![0, 1, 2]).unwrap();
        assert!(psi.is_injective());
        let f = induced_injective_map(&psi, Field::GF2).unwrap();
        for d in f.source().degrees() {
            assert_eq!(f.block(d), SparseMatrix::identity(f.source().dim(d)));
        }
    }

    #[test]
    fn edge_inclusion_into_triangle_is_weight_graded() {
        let x = edge_complex();
        let y = triangle_skeleton();
        let eps_x = Colouring::new(vec![true, false]);
        let eps_y = Colouring::new(vec![true, false, false]);
        let psi = ColouredMap::new(x, eps_x, y, eps_y, vec![0, 1]).unwrap();
        let f = induced_injective_map(&psi, Field::Rational).unwrap();
        // Every nonzero block entry connects equal bidegrees by construction;
        // the chain-map property was verified on construction. Spot-check the
        // edge generator.
        let (d, _) = f.source().position("{0,1}").unwrap();
        assert_eq!(horizontal_bidegree(d), (1, 1));
        assert_eq!(f.block(d).get(0, 0), Some(&Scalar::Int(1)));
    }

    #[test]
    fn sorting_signs_follow_the_permutation_parity() {
        // Map the edge {0,1} to {2,0}: images (2,0) need one transposition,
        // so the induced sign is −1 over Q.
        let x = edge_complex();
        let y = triangle_skeleton();
        let eps_x = Colouring::new(vec![true, false]);
        let eps_y = Colouring::new(vec![false, false, true]);
        let psi = ColouredMap::new(x, eps_x, y, eps_y, vec![2, 0]).unwrap();
        let f = induced_injective_map(&psi, Field::Rational).unwrap();
        let (d, col) = f.source().position("{0,1}").unwrap();
        let (_, row) = f.target().position("{0,2}").unwrap();
        assert_eq!(f.block(d).get(row, col), Some(&Scalar::Int(-1)));
    }

    #[test]
    fn collapse_map_is_coloured_but_not_supported() {
        // Δ² collapses onto an edge: vertices 0,1 ↦ 0 and 2 ↦ 1, with
        // ε = (1,0,0) upstairs and (1,0) downstairs. Both coloured-map
        // conditions hold, yet the map is not injective and induces no chain
        // map.
        let x = SimplicialComplex::full_simplex(3);
        let y = edge_complex();
        let eps_x = Colouring::new(vec![true, false, false]);
        let eps_y = Colouring::new(vec![true, false]);
        let psi = ColouredMap::new(x, eps_x, y, eps_y, vec![0, 0, 1]).unwrap();
        assert!(!psi.is_injective());
        let err = induced_injective_map(&psi, Field::GF2).unwrap_err();
        assert!(matches!(err, SimplicialError::UnsupportedMap { .. }));
    }

    #[test]
    fn colour_conditions_are_enforced() {
        let x = SimplicialComplex::full_simplex(3);
        let y = edge_complex();
        // Two 1-coloured preimages of vertex 0.
        let err = ColouredMap::new(
            x.clone(),
            Colouring::new(vec![true, true, false]),
            y.clone(),
            Colouring::new(vec![true, false]),
            vec![0, 0, 1],
        )
        .unwrap_err();
        assert!(matches!(err, SimplicialError::NotColoured { .. }));
        // A 1-coloured target vertex without any 1-coloured preimage.
        let err = ColouredMap::new(
            x.clone(),
            Colouring::zeros(3),
            y.clone(),
            Colouring::new(vec![true, false]),
            vec![0, 0, 1],
        )
        .unwrap_err();
        assert!(matches!(err, SimplicialError::NotColoured { .. }));
        // A 1-coloured vertex outside the image violates the same clause.
        let err = ColouredMap::new(
            SimplicialComplex::full_simplex(2),
            Colouring::new(vec![true, false]),
            SimplicialComplex::full_simplex(3),
            Colouring::new(vec![true, false, true]),
            vec![0, 1],
        )
        .unwrap_err();
        assert!(matches!(err, SimplicialError::NotColoured { .. }));
        // Non-simplicial image: the diagonal of a square complex.
        let square =
            SimplicialComplex::from_simplices(4, [[0, 1], [1, 2], [2, 3], [0, 3]]).unwrap();
        let err = ColouredMap::new(
            edge_complex(),
            Colouring::new(vec![true, false]),
            square,
            Colouring::new(vec![true, false, false, false]),
            vec![0, 2],
        )
        .unwrap_err();
        assert!(matches!(err, SimplicialError::NotSimplicial { .. }));
    }

    #[test]
    fn colouring_display_and_masks_round_trip() {
        let eps = Colouring::from_mask(5, 0b10110);
        assert_eq!(eps.to_string(), "01101");
        assert_eq!(eps.mask(), 0b10110);
        assert_eq!(eps.level(), 3);
        assert_eq!(Colouring::zeros(3).cover_bit(&Colouring::from_mask(3, 0b100)), Some(2));
        assert_eq!(Colouring::zeros(3).cover_bit(&Colouring::ones(3)), None);
    }
}
