//! The Boolean colouring poset and überhomology.
//!
//! The `2^m` bi-colourings of an `m`-vertex complex form the Boolean poset
//! `B(m)`, ordered by bitwise comparison; `ε′` covers `ε` when exactly one 0
//! flips to 1. The *über complex* collects horizontal homology over the whole
//! poset:
//!
//! ```text
//! Ü^j(X) = ⊕_{ℓ(ε) = j} H^h(X, ε),
//! ```
//!
//! with differential `d^j = Σ (−1)^{s(ε,ε′)} H(transition map ε → ε′)` summed
//! over covering pairs. The sign assignment `s` makes the squares of the poset
//! anticommute (`s_{x,y} + s_{y,z} ≡ s_{x,y′} + s_{y′,z} + 1 (mod 2)` for each
//! square `x ⋖ y, y′ ⋖ z`); this crate uses the Koszul rule — the parity of
//! the 1-bits of `ε` below the flipped index — for every coefficient field.
//! Since transition maps preserve the (dimension, weight) bidegree, the über
//! complex splits as a direct sum over `(i, k)`, and its homology is the
//! triply-graded überhomology `Ḧ^j_{i,k}(X)`.
//!
//! Degrees here are `[j, i, k]` with the poset level `j` primary.
//! [`uber_complex`] materialises the whole complex (fine for small inputs and
//! used to cross-validate `d² = 0`); [`uber_homology`] streams the poset level
//! by level, holding only two adjacent levels, and is the entry point for
//! larger inputs. Per-colouring homology within a level is the crate's
//! designated parallel axis.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::complex::{ComplexError, Degree, GradedComplex, HomologySummary};
use crate::linalg::{rank, Field, LinalgError, Scalar, SparseMatrix};
use crate::par;
use crate::simplicial::{
    horizontal_complex, transition_chain_map, Colouring, SimplicialComplex, SimplicialError,
};

/// Errors from über-complex assembly.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum UberError {
    /// The über pipeline needs a connected complex.
    #[error("überhomology requires a connected complex")]
    Disconnected,
    /// Sign queries need a covering pair.
    #[error("colourings are not a covering pair of the Boolean poset")]
    NotAdjacent,
    /// Colouring masks are carried in machine words.
    #[error("{count} vertices exceed the supported 64")]
    TooManyVertices { count: usize },
    /// A simplicial-layer failure.
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    /// A malformed complex.
    #[error(transparent)]
    Complex(#[from] ComplexError),
    /// An exact-arithmetic failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The über multidegree for poset level `j` and horizontal degree
/// `[−i, k, 0]`.
fn uber_degree(j: i32, horizontal: Degree) -> Degree {
    [j, -horizontal[0], horizontal[1]]
}

/// All colourings covering `ε`: one 0-bit flipped to 1, in increasing
/// bit-index order.
pub fn covers(eps: &Colouring) -> Vec<Colouring> {
    (0..eps.len())
        .filter(|&v| !eps.is_one(v))
        .map(|v| {
            let mut bits: Vec<bool> = (0..eps.len()).map(|u| eps.is_one(u)).collect();
            bits[v] = true;
            Colouring::new(bits)
        })
        .collect()
}

/// A sign assignment on the Boolean poset: a ℤ₂ value for every covering
/// pair, anticommuting on every square.
///
/// This implementation is the Koszul rule; any two sign assignments yield
/// isomorphic complexes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignAssignment;

impl SignAssignment {
    /// The Koszul sign assignment.
    pub fn koszul() -> SignAssignment {
        SignAssignment
    }

    /// The sign of the covering pair `ε ⋖ ε′`: the parity of the 1-bits of
    /// `ε` below the flipped index.
    ///
    /// # Errors
    /// Fails when `ε′` does not cover `ε`.
    pub fn sign(&self, eps: &Colouring, eps_up: &Colouring) -> Result<u8, UberError> {
        let t = eps.cover_bit(eps_up).ok_or(UberError::NotAdjacent)?;
        let parity = (0..t).filter(|&v| eps.is_one(v)).count();
        Ok((parity % 2) as u8)
    }

    /// Exhaustively checks the square condition on all squares of `B(m)`:
    /// for `x ⋖ y, y′ ⋖ z` the two path sums differ by exactly 1 mod 2.
    pub fn square_condition_holds(&self, m: usize) -> bool {
        assert!(m <= 16, "exhaustive square check is meant for small posets");
        for x in 0u64..1 << m {
            for a in 0..m {
                if x >> a & 1 == 1 {
                    continue;
                }
                for b in a + 1..m {
                    if x >> b & 1 == 1 {
                        continue;
                    }
                    let eps = Colouring::from_mask(m, x);
                    let y = Colouring::from_mask(m, x | 1 << a);
                    let y_alt = Colouring::from_mask(m, x | 1 << b);
                    let z = Colouring::from_mask(m, x | 1 << a | 1 << b);
                    let path_one = self.sign(&eps, &y).unwrap() + self.sign(&y, &z).unwrap();
                    let path_two =
                        self.sign(&eps, &y_alt).unwrap() + self.sign(&y_alt, &z).unwrap();
                    if (path_one + path_two) % 2 != 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// The crate's sign for a covering pair (the Koszul assignment).
pub fn sign(eps: &Colouring, eps_up: &Colouring) -> Result<u8, UberError> {
    SignAssignment::koszul().sign(eps, eps_up)
}

/// The Boolean poset complex on elements `1 … m`: one generator per subset in
/// degree = cardinality, differential adding one element with the Koszul
/// sign. Exact in every degree (it is the augmented chain complex of a
/// simplex), and the standard playground for matchings.
pub fn boolean_complex(m: u32, field: Field) -> GradedComplex {
    let label = |bits: u32| -> String {
        let elems: Vec<String> =
            (1..=m).filter(|t| bits >> (t - 1) & 1 == 1).map(|t| t.to_string()).collect();
        format!("{{{}}}", elems.join(","))
    };
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); m as usize + 1];
    for bits in 0..1u32 << m {
        by_size[bits.count_ones() as usize].push(bits);
    }
    let mut c = GradedComplex::new(field);
    for (size, subsets) in by_size.iter().enumerate() {
        c.add_generators([size as i32, 0, 0], subsets.iter().map(|&b| label(b)))
            .expect("subset labels are unique");
    }
    for size in 0..m as usize {
        let mut entries = Vec::new();
        for (col, &bits) in by_size[size].iter().enumerate() {
            for t in 1..=m {
                if bits >> (t - 1) & 1 == 0 {
                    let image = bits | 1 << (t - 1);
                    let row = by_size[size + 1]
                        .iter()
                        .position(|&b| b == image)
                        .expect("image has one more element");
                    let parity = (bits & ((1 << (t - 1)) - 1)).count_ones();
                    entries.push((row, col, Scalar::sign(parity)));
                }
            }
        }
        let matrix =
            SparseMatrix::from_entries(by_size[size + 1].len(), by_size[size].len(), entries)
                .expect("valid boolean differential");
        c.set_differential([size as i32, 0, 0], matrix).expect("shapes match by construction");
    }
    c
}

/// Triply-graded überhomology ranks, keyed by `(j, i, k)`; only nonzero ranks
/// are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UberSummary {
    ranks: BTreeMap<[i32; 3], usize>,
}

impl UberSummary {
    /// The nonzero ranks keyed by `[j, i, k]`.
    pub fn ranks(&self) -> &BTreeMap<[i32; 3], usize> {
        &self.ranks
    }

    /// The rank at one tridegree.
    pub fn rank_at(&self, j: i32, i: i32, k: i32) -> usize {
        self.ranks.get(&[j, i, k]).copied().unwrap_or(0)
    }

    /// One bidegree column `(i, k)` as a map `j → rank` (only nonzero
    /// entries). The `(0, 0)` column of a graph is its bold homology.
    pub fn bidegree_column(&self, i: i32, k: i32) -> BTreeMap<i32, usize> {
        self.ranks
            .iter()
            .filter(|(&[_, ri, rk], _)| ri == i && rk == k)
            .map(|(&[j, _, _], &r)| (j, r))
            .collect()
    }

    /// Collapses a homology summary of a materialised über complex.
    pub fn from_homology(h: &HomologySummary) -> UberSummary {
        UberSummary { ranks: h.nonzero().into_iter().collect() }
    }
}

/// Per-level data: colourings at one poset level with their horizontal
/// complexes and homology, plus the resulting über-basis offsets.
struct Level {
    masks: Vec<u64>,
    summaries: Vec<HomologySummary>,
    /// Horizontal degree → per-colouring offset into that degree's über
    /// basis (prefix sums of the homology ranks).
    offsets: BTreeMap<Degree, Vec<usize>>,
    /// Horizontal degree → total über dimension contributed by this level.
    dims: BTreeMap<Degree, usize>,
}

fn level_data(x: &SimplicialComplex, field: Field, j: usize) -> Result<Level, UberError> {
    let m = x.vertex_count();
    let masks: Vec<u64> =
        (0u64..1 << m).filter(|mask| mask.count_ones() as usize == j).collect();
    let computed = par::map_collect(masks.clone(), |mask| -> Result<_, UberError> {
        let eps = Colouring::from_mask(m, mask);
        Ok(horizontal_complex(x, &eps, field)?.homology_with_representatives()?)
    });
    let mut summaries = Vec::with_capacity(masks.len());
    for item in computed {
        summaries.push(item?);
    }
    let mut offsets: BTreeMap<Degree, Vec<usize>> = BTreeMap::new();
    let mut dims: BTreeMap<Degree, usize> = BTreeMap::new();
    for (idx, summary) in summaries.iter().enumerate() {
        for (&hd, &r) in summary.ranks() {
            if r == 0 {
                continue;
            }
            let dim = dims.entry(hd).or_insert(0);
            offsets.entry(hd).or_insert_with(|| vec![0; summaries.len()])[idx] = *dim;
            *dim += r;
        }
    }
    Ok(Level { masks, summaries, offsets, dims })
}

/// The über differential blocks from `lower` (level `j`) to `upper` (level
/// `j+1`), one sparse matrix per horizontal degree.
fn level_blocks(
    x: &SimplicialComplex,
    field: Field,
    lower: &Level,
    upper: &Level,
) -> Result<BTreeMap<Degree, SparseMatrix>, UberError> {
    let m = x.vertex_count();
    // All covering edges leaving this level, with their poset signs.
    let mut edges = Vec::new();
    for (a, &mask) in lower.masks.iter().enumerate() {
        for t in 0..m {
            if mask >> t & 1 == 1 {
                continue;
            }
            let up_mask = mask | 1 << t;
            let b = upper.masks.binary_search(&up_mask).expect("cover lives one level up");
            let sign = (mask & ((1 << t) - 1)).count_ones() % 2;
            edges.push((a, b, t, sign));
        }
    }
    // Induced maps on homology are independent per edge; compute them in
    // parallel, then merge deterministically.
    let induced = par::map_collect(edges, |(a, b, t, sign)| -> Result<_, UberError> {
        let eps = Colouring::from_mask(m, lower.masks[a]);
        let eps_up = Colouring::from_mask(m, lower.masks[a] | 1 << t);
        let map = transition_chain_map(x, &eps, &eps_up, field)?;
        Ok((a, b, sign, map.induced_map_on_homology()?))
    });
    let mut entries: BTreeMap<Degree, Vec<(usize, usize, Scalar)>> = BTreeMap::new();
    for item in induced {
        let (a, b, sign, blocks) = item?;
        for (hd, block) in blocks {
            if block.is_zero() {
                continue;
            }
            let row_base = upper.offsets[&hd][b];
            let col_base = lower.offsets[&hd][a];
            let slot = entries.entry(hd).or_default();
            for (r, c, s) in block.iter() {
                let signed = if sign == 1 { s.negated() } else { s.clone() };
                slot.push((row_base + r, col_base + c, signed));
            }
        }
    }
    let mut result = BTreeMap::new();
    for (hd, triplets) in entries {
        let rows = upper.dims.get(&hd).copied().unwrap_or(0);
        let cols = lower.dims.get(&hd).copied().unwrap_or(0);
        result.insert(hd, SparseMatrix::from_entries(rows, cols, triplets)?);
    }
    Ok(result)
}

fn check_input(x: &SimplicialComplex) -> Result<(), UberError> {
    if x.vertex_count() > 64 {
        return Err(UberError::TooManyVertices { count: x.vertex_count() });
    }
    if !x.is_connected() {
        return Err(UberError::Disconnected);
    }
    Ok(())
}

/// Materialises the full über complex of a connected complex: basis =
/// homology classes of every colouring at degree `[j, i, k]`, differential =
/// signed induced transition maps. Validates `d² = 0` before returning.
///
/// Memory grows with `2^m`; use [`uber_homology`] when only ranks are needed.
pub fn uber_complex(x: &SimplicialComplex, field: Field) -> Result<GradedComplex, UberError> {
    check_input(x)?;
    let m = x.vertex_count();
    let mut complex = GradedComplex::new(field);
    let mut levels = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let level = level_data(x, field, j)?;
        for (idx, &mask) in level.masks.iter().enumerate() {
            let eps = Colouring::from_mask(m, mask);
            for (&hd, &r) in level.summaries[idx].ranks() {
                let labels =
                    (0..r).map(|c| format!("{eps}|{},{}|{c}", -hd[0], hd[1]));
                complex.add_generators(uber_degree(j as i32, hd), labels)?;
            }
        }
        levels.push(level);
    }
    for j in 0..m {
        let blocks = level_blocks(x, field, &levels[j], &levels[j + 1])?;
        for (hd, matrix) in blocks {
            complex.set_differential(uber_degree(j as i32, hd), matrix)?;
        }
    }
    complex.validate()?;
    Ok(complex)
}

/// The überhomology `Ḧ^j_{i,k}(X)` of a connected complex, streamed level by
/// level: only two adjacent poset levels are held at a time, and per-level
/// work runs on the parallel axis.
pub fn uber_homology(x: &SimplicialComplex, field: Field) -> Result<UberSummary, UberError> {
    check_input(x)?;
    let m = x.vertex_count();
    let mut ranks = BTreeMap::new();
    let mut lower = level_data(x, field, 0)?;
    let mut rank_into: BTreeMap<Degree, usize> = BTreeMap::new();
    for j in 0..=m {
        let upper = if j < m { Some(level_data(x, field, j + 1)?) } else { None };
        let mut rank_out: BTreeMap<Degree, usize> = BTreeMap::new();
        if let Some(upper) = &upper {
            for (hd, matrix) in level_blocks(x, field, &lower, upper)? {
                rank_out.insert(hd, rank(&matrix, &field)?);
            }
        }
        for (&hd, &dim) in &lower.dims {
            let out = rank_out.get(&hd).copied().unwrap_or(0);
            let into = rank_into.get(&hd).copied().unwrap_or(0);
            let rank_h = dim - out - into;
            if rank_h > 0 {
                ranks.insert(uber_degree(j as i32, hd), rank_h);
            }
        }
        rank_into = rank_out;
        if let Some(upper) = upper {
            lower = upper;
        }
    }
    Ok(UberSummary { ranks })
}
