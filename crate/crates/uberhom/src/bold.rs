//! Bold homology of graphs via connected dominating sets.
//!
//! A bi-colouring `ε` of a graph `G` induces the subgraph `G_ε` on its
//! 1-coloured vertices. The *bold chain group* in degree `i` is
//!
//! ```text
//! C𝐇_i(G; R) = ⊕_{ℓ(ε) = i} ⊕_{x ∈ π₀(G_ε)} R⟨x⟩,   C𝐇₀ = 0,
//! ```
//!
//! with differential sending a component `x` to the signed sum of the
//! components absorbing it under each single-vertex colouring increase. Its
//! homology 𝐇(G) — *bold homology* — is the bidegree-(0,0) slice of
//! überhomology.
//!
//! The complex retracts onto the much smaller subcomplex D𝐇 spanned by the
//! generators whose component is a *connected dominating set* (its vertex set
//! touches every closed neighbourhood and induces a connected subgraph): the
//! generators sharing one underlying connected subgraph `H` form a Boolean
//! poset — the free colourings of the vertices outside the closed
//! neighbourhood `ν(H)` — which admits a perfect acyclic matching unless `H`
//! dominates. [`retraction_matching`] realises that matching and certifies it
//! through the layered acyclicity criterion with `φ = |V(H)|`;
//! [`bold_homology`] therefore computes 𝐇 from D𝐇 by default, keeping the
//! full complex as a cross-check oracle.
//!
//! Counting connected dominating sets by size gives the *connected domination
//! polynomial* `D^c_G(x)`; since D𝐇 computes 𝐇, the Euler characteristic
//! satisfies `χ(𝐇(G)) = D^c_G(−1)`, which [`euler_check`] verifies through
//! two independent code paths.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::complex::{ComplexError, GradedComplex, HomologySummary};
use crate::linalg::{Field, LinalgError, Scalar, SparseMatrix};
use crate::morse::{morse_reduce, LayerFunction, MorseError, MorseMatching};
use crate::par;
use crate::simplicial::{format_simplex, Colouring};

/// Refuse exhaustive dominating-set enumeration beyond this vertex count
/// unless the caller opts into the unbounded variants.
pub const ENUMERATION_LIMIT: usize = 28;

/// The full bold complex ranges over all `2^n` colourings; constructions that
/// materialise it are capped here.
const FULL_COMPLEX_LIMIT: usize = 20;

/// Errors from graph construction and dominating-set machinery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoldError {
    /// Vertex sets are carried in machine words.
    #[error("{count} vertices exceed the supported 64")]
    TooManyVertices { count: usize },
    /// Graphs here have at least one vertex.
    #[error("a graph needs at least one vertex")]
    EmptyGraph,
    /// Simple graphs have no loops.
    #[error("loop edge at vertex {vertex}")]
    LoopEdge { vertex: usize },
    /// Simple graphs have no multi-edges.
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    /// An edge endpoint beyond the vertex range.
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    /// Exhaustive enumeration refused without the unbounded override.
    #[error(
        "connected-dominating enumeration on {vertex_count} vertices exceeds \
         the {limit}-vertex bound; use the unbounded variant to override"
    )]
    EnumerationTooLarge { vertex_count: usize, limit: usize },
    /// A generator failing its structural invariants.
    #[error("invalid bold generator: {reason}")]
    InvalidGenerator { reason: String },
    /// A vertex set failing the connected-dominating invariants.
    #[error("invalid dominating set: {reason}")]
    InvalidDominatingSet { reason: String },
    /// A malformed complex.
    #[error(transparent)]
    Complex(#[from] ComplexError),
    /// An exact-arithmetic failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    /// A Morse-reduction failure.
    #[error(transparent)]
    Morse(#[from] MorseError),
}

/// A finite simple graph on vertices `0 … n−1` with adjacency stored as
/// bitmasks (`n ≤ 64`); connectivity is computed once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    connected: bool,
}

impl Graph {
    /// Builds a graph from an edge list.
    ///
    /// # Errors
    /// Rejects `n = 0`, `n > 64`, loops, repeated edges, and out-of-range
    /// endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, BoldError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(BoldError::EmptyGraph);
        }
        if n > 64 {
            return Err(BoldError::TooManyVertices { count: n });
        }
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n {
                return Err(BoldError::VertexOutOfRange { vertex: u, vertex_count: n });
            }
            if v >= n {
                return Err(BoldError::VertexOutOfRange { vertex: v, vertex_count: n });
            }
            if u == v {
                return Err(BoldError::LoopEdge { vertex: u });
            }
            if adj[u] >> v & 1 == 1 {
                return Err(BoldError::DuplicateEdge { u: u.min(v), v: u.max(v) });
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut g = Graph { n, adj, connected: false };
        g.connected = g.component_count(g.vertex_mask()) == 1;
        Ok(g)
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// The edges as sorted pairs `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !((1u64 << u) | ((1u64 << u) - 1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// True when `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// The degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// The open neighbourhood of `v` as a bitmask.
    pub fn neighbour_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// The bitmask of all vertices.
    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 }
    }

    /// True when the whole graph is connected (cached at construction).
    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// The closed neighbourhood `ν(S)` of a vertex bitmask: `S` together with
    /// every vertex adjacent to it.
    pub fn closed_neighbourhood(&self, set: u64) -> u64 {
        let mut out = set;
        let mut rest = set & self.vertex_mask();
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= self.adj[v];
        }
        out & self.vertex_mask()
    }

    /// True when `set` touches every closed neighbourhood, i.e. dominates.
    pub fn dominates(&self, set: u64) -> bool {
        self.closed_neighbourhood(set) == self.vertex_mask()
    }

    /// The connected components of the subgraph induced by `set`, as
    /// bitmasks in increasing order of their minimum vertex.
    pub fn components_of(&self, set: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = set & self.vertex_mask();
        while rest != 0 {
            let comp = self.component_containing(rest & rest.wrapping_neg(), set);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// The number of connected components of the subgraph induced by `set`,
    /// without allocating.
    pub fn component_count(&self, set: u64) -> usize {
        let mut count = 0;
        let mut rest = set & self.vertex_mask();
        while rest != 0 {
            let comp = self.component_containing(rest & rest.wrapping_neg(), set);
            count += 1;
            rest &= !comp;
        }
        count
    }

    /// True when `set` is nonempty and induces a connected subgraph.
    pub fn is_subset_connected(&self, set: u64) -> bool {
        set & self.vertex_mask() != 0 && self.component_count(set) == 1
    }

    /// Mask-BFS growing `seed` to its full component within `set`.
    fn component_containing(&self, seed: u64, set: u64) -> u64 {
        let set = set & self.vertex_mask();
        let mut comp = seed;
        let mut frontier = seed;
        while frontier != 0 {
            let mut next = 0;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            next &= set & !comp;
            comp |= next;
            frontier = next;
        }
        comp
    }
}

/// The vertices of a bitmask in increasing order.
fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

fn vertices_mask(vertices: &[usize]) -> u64 {
    vertices.iter().fold(0u64, |m, &v| m | 1 << v)
}

/// The label shared by every construction naming a generator `(ε, x)`:
/// the colouring bitstring, a bar, then the component's vertex set.
fn generator_label(n: usize, eps_mask: u64, comp_mask: u64) -> String {
    format!("{}|{}", Colouring::from_mask(n, eps_mask), format_simplex(&mask_vertices(comp_mask)))
}

/// The Koszul sign for raising bit `t` of the colouring mask `eps`: the
/// parity of the 1-bits below `t`.
fn raise_parity(eps: u64, t: usize) -> u32 {
    (eps & ((1u64 << t) - 1)).count_ones() % 2
}

/// The connected components of the colouring-induced subgraph `G_ε`, each a
/// sorted vertex list, ordered by minimum vertex.
///
/// The colouring length must match the vertex count.
pub fn components(g: &Graph, eps: &Colouring) -> Vec<Vec<usize>> {
    assert_eq!(eps.len(), g.vertex_count(), "colouring length must match the vertex count");
    g.components_of(eps.mask()).into_iter().map(mask_vertices).collect()
}

/// A basis element of the bold complex: a colouring together with one
/// connected component of the subgraph it induces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoldGenerator {
    colouring: Colouring,
    component: Vec<usize>,
}

impl BoldGenerator {
    /// Builds a generator, checking that `component` really is a connected
    /// component of `G_ε`: 1-coloured, connected, and maximal.
    pub fn new(
        g: &Graph,
        colouring: Colouring,
        component: Vec<usize>,
    ) -> Result<BoldGenerator, BoldError> {
        if colouring.len() != g.vertex_count() {
            return Err(BoldError::InvalidGenerator {
                reason: "colouring length differs from the vertex count".into(),
            });
        }
        let comp_mask = vertices_mask(&component);
        if component.is_empty() || component.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BoldError::InvalidGenerator {
                reason: "component must be a nonempty strictly sorted vertex list".into(),
            });
        }
        if component.iter().any(|&v| v >= g.vertex_count() || !colouring.is_one(v)) {
            return Err(BoldError::InvalidGenerator {
                reason: "component contains a vertex not 1-coloured".into(),
            });
        }
        let grown = g.component_containing(comp_mask & comp_mask.wrapping_neg(), colouring.mask());
        if grown != comp_mask {
            return Err(BoldError::InvalidGenerator {
                reason: "component is not a maximal connected piece of the induced subgraph"
                    .into(),
            });
        }
        Ok(BoldGenerator { colouring, component })
    }

    /// The colouring.
    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    /// The component's sorted vertices.
    pub fn component(&self) -> &[usize] {
        &self.component
    }

    /// The label used for this generator in every complex of this module.
    pub fn label(&self) -> String {
        generator_label(self.colouring.len(), self.colouring.mask(), vertices_mask(&self.component))
    }
}

/// One level of the bold complex: the colouring masks of a fixed weight with
/// their component lists and basis offsets.
struct BoldLevel {
    masks: Vec<u64>,
    comps: Vec<Vec<u64>>,
    offsets: Vec<usize>,
    dim: usize,
}

fn bold_level(g: &Graph, level: usize) -> BoldLevel {
    let masks: Vec<u64> = (0..=g.vertex_mask())
        .filter(|m| m.count_ones() as usize == level)
        .collect();
    let comps = par::map_collect(masks.clone(), |m| g.components_of(m));
    let mut offsets = Vec::with_capacity(masks.len());
    let mut dim = 0;
    for c in &comps {
        offsets.push(dim);
        dim += c.len();
    }
    BoldLevel { masks, comps, offsets, dim }
}

/// The full bold complex `C𝐇(G)`: degree-`i` basis = components over all
/// colourings of weight `i` (degree 0 is empty), differential = signed
/// component absorption. `d² = 0` by the sign-assignment square relation;
/// the test suite asserts it on a family of graphs.
///
/// The basis ranges over all `2^n` colourings — this is the oracle-scale
/// path, capped at 20 vertices; [`bold_homology`] goes through the
/// dominating subcomplex instead.
pub fn bold_complex(g: &Graph, field: Field) -> GradedComplex {
    let n = g.vertex_count();
    assert!(
        n <= FULL_COMPLEX_LIMIT,
        "the full bold complex ranges over 2^{n} colourings; {n} vertices exceed {FULL_COMPLEX_LIMIT}"
    );
    let mut c = GradedComplex::new(field);
    let levels: Vec<BoldLevel> = (1..=n).map(|i| bold_level(g, i)).collect();
    for (level, data) in levels.iter().enumerate() {
        let labels = data.masks.iter().zip(&data.comps).flat_map(|(&m, comps)| {
            comps.iter().map(move |&x| generator_label(n, m, x))
        });
        c.add_generators([level as i32 + 1, 0, 0], labels).expect("generator labels are unique");
    }
    for window in levels.windows(2) {
        let [lower, upper] = window else { unreachable!() };
        let i = lower.masks[0].count_ones() as i32;
        let mut entries = Vec::new();
        for (idx, &mask) in lower.masks.iter().enumerate() {
            for (ci, &comp) in lower.comps[idx].iter().enumerate() {
                let col = lower.offsets[idx] + ci;
                for t in 0..n {
                    if mask >> t & 1 == 1 {
                        continue;
                    }
                    let up = mask | 1 << t;
                    let uidx = upper.masks.binary_search(&up).expect("cover one level up");
                    let seed = comp & comp.wrapping_neg();
                    let target = upper.comps[uidx]
                        .iter()
                        .position(|&y| y & seed != 0)
                        .expect("the component lands inside a unique component");
                    let row = upper.offsets[uidx] + target;
                    entries.push((row, col, Scalar::sign(raise_parity(mask, t))));
                }
            }
        }
        let matrix = SparseMatrix::from_entries(upper.dim, lower.dim, entries)
            .expect("well-shaped bold differential");
        c.set_differential([i, 0, 0], matrix).expect("shapes match by construction");
    }
    c
}

/// A connected dominating set: sorted vertices inducing a connected subgraph
/// whose closed neighbourhood is the whole graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DominatingSet {
    vertices: Vec<usize>,
}

impl DominatingSet {
    /// Builds a set after checking connectivity and domination in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<DominatingSet, BoldError> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BoldError::InvalidDominatingSet {
                reason: "vertices must be a nonempty strictly sorted list".into(),
            });
        }
        if vertices.iter().any(|&v| v >= g.vertex_count()) {
            return Err(BoldError::InvalidDominatingSet {
                reason: "vertex out of range".into(),
            });
        }
        let mask = vertices_mask(&vertices);
        if !g.is_subset_connected(mask) {
            return Err(BoldError::InvalidDominatingSet {
                reason: "induced subgraph is disconnected".into(),
            });
        }
        if !g.dominates(mask) {
            return Err(BoldError::InvalidDominatingSet {
                reason: "closed neighbourhood misses a vertex".into(),
            });
        }
        Ok(DominatingSet { vertices })
    }

    fn from_mask(mask: u64) -> DominatingSet {
        DominatingSet { vertices: mask_vertices(mask) }
    }

    /// The sorted vertices.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The number of vertices.
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    /// True when `v` belongs to the set.
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// The set as a bitmask.
    pub fn mask(&self) -> u64 {
        vertices_mask(&self.vertices)
    }
}

impl fmt::Display for DominatingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_simplex(&self.vertices))
    }
}

/// Visits every connected induced-subgraph vertex set exactly once, growing
/// sets through their neighbourhoods (each set is reached only from the
/// branch rooted at its minimum vertex, with earlier-branched candidates
/// banned). With `dominating_only`, only dominating sets are emitted and
/// branches in which some vertex's closed neighbourhood is entirely banned —
/// so no descendant can ever dominate it — are abandoned.
fn for_each_connected_set<F: FnMut(u64)>(g: &Graph, dominating_only: bool, f: &mut F) {
    let full = g.vertex_mask();
    for v in 0..g.vertex_count() {
        grow(g, 1 << v, g.neighbour_mask(v), (1 << v) - 1, full, dominating_only, f);
    }
}

fn grow<F: FnMut(u64)>(
    g: &Graph,
    set: u64,
    nbhd: u64,
    banned: u64,
    full: u64,
    dominating_only: bool,
    f: &mut F,
) {
    if dominating_only {
        if set | nbhd == full {
            f(set);
        }
        let reachable = !banned;
        for w in 0..g.vertex_count() {
            if (g.neighbour_mask(w) | 1 << w) & reachable == 0 {
                return;
            }
        }
    } else {
        f(set);
    }
    let mut rest = nbhd & !set & !banned;
    let mut banned = banned;
    while rest != 0 {
        let u = rest.trailing_zeros() as usize;
        let ubit = 1u64 << u;
        rest &= !ubit;
        grow(g, set | ubit, nbhd | g.neighbour_mask(u), banned, full, dominating_only, f);
        banned |= ubit;
    }
}

fn cds_masks(g: &Graph) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_connected_set(g, true, &mut |m| out.push(m));
    out
}

/// All connected dominating sets in increasing (size, lexicographic) order.
/// Disconnected graphs have none.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices; use
/// [`connected_dominating_sets_unbounded`] to override.
pub fn connected_dominating_sets(g: &Graph) -> Result<Vec<DominatingSet>, BoldError> {
    if g.vertex_count() > ENUMERATION_LIMIT {
        return Err(BoldError::EnumerationTooLarge {
            vertex_count: g.vertex_count(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(connected_dominating_sets_unbounded(g))
}

/// [`connected_dominating_sets`] without the vertex-count bound. Exhaustive
/// enumeration is exponential: the caller owns the runtime.
pub fn connected_dominating_sets_unbounded(g: &Graph) -> Vec<DominatingSet> {
    let mut sets: Vec<DominatingSet> =
        cds_masks(g).into_iter().map(DominatingSet::from_mask).collect();
    sets.sort_by(|a, b| {
        (a.size(), &a.vertices).cmp(&(b.size(), &b.vertices))
    });
    sets
}

/// An integer polynomial, constant term first, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    /// Builds a polynomial from the coefficients of `x⁰, x¹, …`.
    pub fn new<I: IntoIterator<Item = i64>>(coeffs: I) -> IntPolynomial {
        let mut coeffs: Vec<i64> = coeffs.into_iter().collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> IntPolynomial {
        IntPolynomial::default()
    }

    /// The coefficients, constant term first, no trailing zeros.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The coefficient of `x^k` (zero beyond the stored length).
    pub fn coefficient(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// The degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True when all coefficients vanish.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates at an integer point (Horner, checked in 128-bit).
    pub fn evaluate(&self, x: i64) -> i64 {
        let mut acc: i128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc * i128::from(x) + i128::from(c);
        }
        i64::try_from(acc).expect("polynomial value fits in 64 bits")
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if c < 0 { " - " } else { " + " })?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn counts_to_polynomial(counts: Vec<i64>) -> IntPolynomial {
    IntPolynomial::new(counts)
}

/// The connected domination polynomial `D^c_G(x) = Σ d^c_G(k) x^k`, where
/// `d^c_G(k)` counts connected dominating sets of size `k`.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices; use
/// [`connected_domination_polynomial_unbounded`] to override.
pub fn connected_domination_polynomial(g: &Graph) -> Result<IntPolynomial, BoldError> {
    if g.vertex_count() > ENUMERATION_LIMIT {
        return Err(BoldError::EnumerationTooLarge {
            vertex_count: g.vertex_count(),
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(connected_domination_polynomial_unbounded(g))
}

/// [`connected_domination_polynomial`] without the vertex-count bound.
pub fn connected_domination_polynomial_unbounded(g: &Graph) -> IntPolynomial {
    let mut counts = vec![0i64; g.vertex_count() + 1];
    for_each_connected_set(g, true, &mut |m| counts[m.count_ones() as usize] += 1);
    counts_to_polynomial(counts)
}

/// The connected domination number `γ^c` — the smallest size of a connected
/// dominating set — or `None` when no such set exists (disconnected graphs).
pub fn connected_domination_number(g: &Graph) -> Result<Option<usize>, BoldError> {
    let p = connected_domination_polynomial(g)?;
    Ok(p.coeffs().iter().position(|&c| c != 0))
}

/// The plain domination polynomial `D_G(x)` (connectivity not required),
/// by scanning all `2^n` subsets in parallel chunks.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices.
pub fn domination_polynomial(g: &Graph) -> Result<IntPolynomial, BoldError> {
    let n = g.vertex_count();
    if n > ENUMERATION_LIMIT {
        return Err(BoldError::EnumerationTooLarge {
            vertex_count: n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let closed: Vec<u64> = (0..n).map(|v| g.neighbour_mask(v) | 1 << v).collect();
    let pieces = 1u64 << n.saturating_sub(12).min(8);
    let span = (g.vertex_mask() + 1) / pieces;
    let partials = par::map_collect((0..pieces).collect(), |piece| {
        let mut counts = vec![0i64; n + 1];
        let lo = piece * span;
        for mask in lo..lo + span {
            if closed.iter().all(|&c| c & mask != 0) {
                counts[mask.count_ones() as usize] += 1;
            }
        }
        counts
    });
    let mut counts = vec![0i64; n + 1];
    for partial in partials {
        for (total, c) in counts.iter_mut().zip(partial) {
            *total += c;
        }
    }
    Ok(counts_to_polynomial(counts))
}

fn dominating_complex_from(g: &Graph, sets: &[DominatingSet], field: Field) -> GradedComplex {
    let n = g.vertex_count();
    let mut by_size: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for s in sets {
        by_size.entry(s.size()).or_default().push(s.mask());
    }
    let index: BTreeMap<u64, usize> = by_size
        .values()
        .flat_map(|masks| masks.iter().enumerate().map(|(i, &m)| (m, i)))
        .collect();
    let mut c = GradedComplex::new(field);
    for (&k, masks) in &by_size {
        c.add_generators(
            [k as i32, 0, 0],
            masks.iter().map(|&m| generator_label(n, m, m)),
        )
        .expect("dominating sets are distinct");
    }
    for (&k, masks) in &by_size {
        let Some(above) = by_size.get(&(k + 1)) else { continue };
        let mut entries = Vec::new();
        for (col, &mask) in masks.iter().enumerate() {
            for t in 0..n {
                if mask >> t & 1 == 1 {
                    continue;
                }
                let up = mask | 1 << t;
                let row = index[&up];
                entries.push((row, col, Scalar::sign(raise_parity(mask, t))));
            }
        }
        let matrix = SparseMatrix::from_entries(above.len(), masks.len(), entries)
            .expect("well-shaped dominating differential");
        c.set_differential([k as i32, 0, 0], matrix).expect("shapes match by construction");
    }
    c
}

/// The dominating complex `D𝐇(G)`: the subcomplex of the bold complex
/// spanned by the generators `(1_D, D)` for connected dominating sets `D`
/// (adding any vertex to a connected dominating set keeps it one, so the
/// span is closed under the differential). Homology equals bold homology.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices.
pub fn dominating_complex(g: &Graph, field: Field) -> Result<GradedComplex, BoldError> {
    let sets = connected_dominating_sets(g)?;
    Ok(dominating_complex_from(g, &sets, field))
}

fn toggle_matching_from(n: usize, sets: &[DominatingSet], v0: usize) -> MorseMatching {
    let bit = 1u64 << v0;
    MorseMatching::new(sets.iter().filter(|d| !d.contains(v0)).map(|d| {
        let m = d.mask();
        (generator_label(n, m, m), generator_label(n, m | bit, m | bit))
    }))
}

/// The toggle matching on the dominating complex: every connected dominating
/// set `D` without `v0` pairs with `D ∪ {v0}` (also connected dominating,
/// since `v0` lies in the closed neighbourhood of `D`). Critical generators
/// are the sets containing `v0` essentially — those whose removal of `v0`
/// breaks domination or connectivity. The matching is acyclic: a zig-zag
/// step from the pair of `D` to the pair of `E` needs `E ∪ {v0} = D ∪ {w}`
/// with `v0 ∉ D`, forcing `E = D`, so the step digraph has no edges at all.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices.
pub fn dominating_toggle_matching(g: &Graph, v0: usize) -> Result<MorseMatching, BoldError> {
    assert!(v0 < g.vertex_count(), "toggle vertex out of range");
    let sets = connected_dominating_sets(g)?;
    Ok(toggle_matching_from(g.vertex_count(), &sets, v0))
}

/// Which chain model a bold homology computation runs on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BoldPath {
    /// The dominating complex, Morse-reduced by the toggle matching.
    #[default]
    Dominating,
    /// The full bold complex over all colourings (oracle scale).
    Full,
}

/// Bold homology ranks per degree, through the chosen chain model.
///
/// # Errors
/// Enumeration and arithmetic failures; the `Full` path additionally
/// inherits the 20-vertex cap of [`bold_complex`].
pub fn bold_homology_via(
    g: &Graph,
    field: Field,
    path: BoldPath,
) -> Result<HomologySummary, BoldError> {
    match path {
        BoldPath::Dominating => {
            let sets = connected_dominating_sets(g)?;
            let dh = dominating_complex_from(g, &sets, field);
            let matching = toggle_matching_from(g.vertex_count(), &sets, 0);
            let reduced = morse_reduce(&dh, &matching)?;
            Ok(reduced.homology()?)
        }
        BoldPath::Full => Ok(bold_complex(g, field).homology()?),
    }
}

/// Bold homology 𝐇(G) through the default dominating-complex path.
/// Disconnected graphs have no dominating sets and report zero homology.
///
/// # Errors
/// Refuses graphs beyond [`ENUMERATION_LIMIT`] vertices.
pub fn bold_homology(g: &Graph, field: Field) -> Result<HomologySummary, BoldError> {
    bold_homology_via(g, field, BoldPath::Dominating)
}

/// The retraction matching on the full bold complex, with its layered
/// acyclicity certificate.
///
/// Generators sharing the connected subgraph `H` (the component's vertex
/// set) differ only in the free colouring of the vertices outside `ν(H)`;
/// unless `H` dominates, toggling the smallest such free vertex perfectly
/// matches the class. Critical generators are exactly `(1_D, D)` for
/// connected dominating sets `D`. The returned layer function assigns
/// `φ = |V(H)|` and one block per `H`: matched pairs stay in their block,
/// `φ` is constant on pairs, within-block zig-zag steps do not occur, and
/// cross-block steps strictly grow the component — the layered certificate.
///
/// Capped at 20 vertices like [`bold_complex`].
pub fn retraction_matching(g: &Graph) -> (MorseMatching, LayerFunction) {
    let n = g.vertex_count();
    assert!(
        n <= FULL_COMPLEX_LIMIT,
        "the retraction matching spans all 2^{n} colourings; {n} vertices exceed {FULL_COMPLEX_LIMIT}"
    );
    let full = g.vertex_mask();
    let mut edges = Vec::new();
    let mut layers = LayerFunction::default();
    for_each_connected_set(g, false, &mut |s| {
        let far = full & !g.closed_neighbourhood(s);
        let phi = u64::from(s.count_ones());
        let block = format_simplex(&mask_vertices(s));
        let toggle = far & far.wrapping_neg();
        let mut r = far;
        loop {
            layers.insert(generator_label(n, s | r, s), phi, block.clone());
            if toggle != 0 && r & toggle == 0 {
                edges.push((
                    generator_label(n, s | r, s),
                    generator_label(n, s | r | toggle, s),
                ));
            }
            if r == 0 {
                break;
            }
            r = (r - 1) & far;
        }
    });
    (MorseMatching::new(edges), layers)
}

/// The two sides of the Euler identity `χ(𝐇(G)) = D^c_G(−1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerReport {
    /// The coefficient field the check was requested for (the identity is
    /// field-independent: both sides are alternating sums of chain ranks).
    pub field: Field,
    /// χ(𝐇) via the colouring scan `Σ_ε (−1)^{ℓ(ε)} |π₀(G_ε)|`.
    pub chi_bold: i64,
    /// `D^c_G(−1)` from the connected-dominating enumeration.
    pub dc_at_minus_one: i64,
    /// True when the two sides agree.
    pub passes: bool,
}

impl fmt::Display for EulerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chi = {}, D^c(-1) = {}, {} over {}",
            self.chi_bold,
            self.dc_at_minus_one,
            if self.passes { "pass" } else { "FAIL" },
            self.field,
        )
    }
}

/// χ(𝐇(G)) as the alternating component count `Σ_ε (−1)^{ℓ(ε)} |π₀(G_ε)|`
/// over all `2^n` colourings. By rank–nullity this equals the alternating
/// sum of homology ranks over any field — no elimination is involved, so
/// the value is reachable even where the full homology is not.
///
/// Capped at 32 vertices: the scan is exhaustive.
pub fn bold_euler_characteristic(g: &Graph) -> i64 {
    let n = g.vertex_count();
    assert!(n <= 32, "the euler scan visits 2^{n} colourings; {n} vertices exceed 32");
    par::sum_over_range(1, g.vertex_mask().wrapping_add(1), |mask| {
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        sign * g.component_count(mask) as i64
    })
}

/// Verifies `χ(𝐇(G)) = D^c_G(−1)` through two independent code paths:
/// the alternating component count over all `2^n` colourings (which equals
/// χ(𝐇) by rank–nullity, no elimination involved) against evaluating the
/// connected domination polynomial at −1.
///
/// Capped at 26 vertices: both sides are exhaustive scans.
pub fn euler_check(g: &Graph, field: Field) -> EulerReport {
    let n = g.vertex_count();
    assert!(n <= 26, "euler check scans 2^{n} colourings; {n} vertices exceed 26");
    let chi_bold = bold_euler_characteristic(g);
    let dc = connected_domination_polynomial(g).expect("within the enumeration bound");
    let dc_at_minus_one = dc.evaluate(-1);
    EulerReport { field, chi_bold, dc_at_minus_one, passes: chi_bold == dc_at_minus_one }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::ChainMap;
    use crate::morse::{is_acyclic, layered_acyclicity, validate_matching};

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn complete_bipartite(m: usize, n: usize) -> Graph {
        let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
        Graph::new(m + n, edges).unwrap()
    }

    /// Outer 5-cycle, spokes, inner pentagram.
    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, edges).unwrap()
    }

    /// Outer 6-cycle, spokes, two inner triangles.
    fn durer() -> Graph {
        let mut edges = Vec::new();
        for i in 0..6 {
            edges.push((i, (i + 1) % 6));
            edges.push((i, i + 6));
            edges.push((6 + i, 6 + (i + 2) % 6));
        }
        Graph::new(12, edges).unwrap()
    }

    /// K₄ minus one edge; the missing pair is (0, 3).
    fn diamond() -> Graph {
        Graph::new(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Brute-force oracle built on adjacency lists instead of mask growth.
    fn brute_cds_masks(g: &Graph) -> Vec<u64> {
        let n = g.vertex_count();
        let adj: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..n).filter(|&u| g.has_edge(v, u)).collect())
            .collect();
        let mut out = Vec::new();
        'subset: for mask in 1u64..1 << n {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let mut seen = vec![false; n];
            let mut queue = vec![members[0]];
            seen[members[0]] = true;
            while let Some(v) = queue.pop() {
                for &u in &adj[v] {
                    if mask >> u & 1 == 1 && !seen[u] {
                        seen[u] = true;
                        queue.push(u);
                    }
                }
            }
            if members.iter().any(|&v| !seen[v]) {
                continue;
            }
            for (v, nbrs) in adj.iter().enumerate() {
                if mask >> v & 1 == 0 && !nbrs.iter().any(|&u| mask >> u & 1 == 1) {
                    continue 'subset;
                }
            }
            out.push(mask);
        }
        out
    }

    #[test]
    fn graph_construction_and_validation() {
        let g = complete(3);
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
        assert!(g.is_connected());
        assert_eq!(g.degree(1), 2);
        assert!(g.has_edge(2, 0));

        assert_eq!(Graph::new(0, []), Err(BoldError::EmptyGraph));
        assert_eq!(Graph::new(2, [(0, 0)]), Err(BoldError::LoopEdge { vertex: 0 }));
        assert_eq!(
            Graph::new(2, [(0, 1), (1, 0)]),
            Err(BoldError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(BoldError::VertexOutOfRange { vertex: 2, vertex_count: 2 })
        );
        assert!(!Graph::new(2, []).unwrap().is_connected());
    }

    #[test]
    fn components_of_colouring_induced_subgraphs() {
        let g = cycle(4);
        assert!(components(&g, &Colouring::zeros(4)).is_empty());
        assert_eq!(components(&g, &Colouring::ones(4)), vec![vec![0, 1, 2, 3]]);
        // A seven-vertex graph whose pictured colouring cuts out a triangle
        // and a disjoint edge.
        let g = Graph::new(
            7,
            [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 4), (4, 5), (3, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        let eps = Colouring::new(vec![true, true, true, false, false, true, true]);
        assert_eq!(components(&g, &eps), vec![vec![0, 1, 2], vec![5, 6]]);
    }

    #[test]
    #[should_panic(expected = "colouring length")]
    fn components_reject_mismatched_lengths() {
        components(&cycle(4), &Colouring::zeros(3));
    }

    #[test]
    fn bold_generator_invariants() {
        let g = path(3);
        let eps = Colouring::new(vec![true, false, true]);
        let gen = BoldGenerator::new(&g, eps.clone(), vec![0]).unwrap();
        assert_eq!(gen.label(), "101|{0}");
        assert_eq!(gen.component(), &[0]);
        // {0, 2} is disconnected in the induced subgraph, {1} is 0-coloured,
        // and {0} inside an all-ones colouring is not maximal.
        assert!(BoldGenerator::new(&g, eps.clone(), vec![0, 2]).is_err());
        assert!(BoldGenerator::new(&g, eps, vec![1]).is_err());
        assert!(BoldGenerator::new(&g, Colouring::ones(3), vec![0]).is_err());
    }

    #[test]
    fn bold_complex_of_k1_and_k3() {
        let c = bold_complex(&complete(1), Field::GF2);
        assert_eq!(c.total_dimension(), 1);
        assert_eq!(c.dim([1, 0, 0]), 1);
        assert!(c.differential([1, 0, 0]).is_zero());
        c.validate().unwrap();

        for field in [Field::GF2, Field::Rational] {
            let c = bold_complex(&complete(3), field);
            c.validate().unwrap();
            assert_eq!(c.dim([1, 0, 0]), 3);
            assert_eq!(c.dim([2, 0, 0]), 3);
            assert_eq!(c.dim([3, 0, 0]), 1);
            let h = c.homology().unwrap();
            assert_eq!(h.nonzero(), BTreeMap::from([([1, 0, 0], 1)]));
        }
    }

    #[test]
    fn incomplete_graphs_split_componentwise_in_degree_two() {
        let c = bold_complex(&diamond(), Field::GF2);
        c.validate().unwrap();
        let split: Vec<&String> = c
            .generators([2, 0, 0])
            .iter()
            .filter(|l| l.starts_with("1001|"))
            .collect();
        assert_eq!(split, vec!["1001|{0}", "1001|{3}"]);
    }

    #[test]
    fn bold_complex_squares_to_zero_on_assorted_graphs() {
        for g in [cycle(5), path(4), diamond(), complete_bipartite(2, 3), Graph::new(3, []).unwrap()]
        {
            for field in [Field::GF2, Field::Rational, Field::gfp(3).unwrap()] {
                bold_complex(&g, field).validate().unwrap();
            }
        }
    }

    #[test]
    fn connected_dominating_sets_of_small_graphs() {
        for n in 1..=4 {
            assert_eq!(connected_dominating_sets(&complete(n)).unwrap().len(), (1 << n) - 1);
        }
        let sets = connected_dominating_sets(&cycle(4)).unwrap();
        let listed: Vec<Vec<usize>> = sets.iter().map(|d| d.vertices().to_vec()).collect();
        assert_eq!(
            listed,
            vec![
                vec![0, 1],
                vec![0, 3],
                vec![1, 2],
                vec![2, 3],
                vec![0, 1, 2],
                vec![0, 1, 3],
                vec![0, 2, 3],
                vec![1, 2, 3],
                vec![0, 1, 2, 3],
            ]
        );
        assert!(connected_dominating_sets(&Graph::new(2, []).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn enumeration_agrees_with_the_brute_force_oracle() {
        let samples = [
            cycle(6),
            path(6),
            petersen(),
            diamond(),
            complete_bipartite(2, 4),
            Graph::new(5, [(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap(),
        ];
        for g in samples {
            let mut grown: Vec<u64> =
                connected_dominating_sets(&g).unwrap().iter().map(|d| d.mask()).collect();
            grown.sort_unstable();
            let mut brute = brute_cds_masks(&g);
            brute.sort_unstable();
            assert_eq!(grown, brute);
        }
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let big = path(30);
        assert_eq!(
            connected_dominating_sets(&big).unwrap_err(),
            BoldError::EnumerationTooLarge { vertex_count: 30, limit: ENUMERATION_LIMIT }
        );
        assert!(!connected_dominating_sets_unbounded(&big).is_empty());
    }

    #[test]
    fn domination_polynomials_of_reference_graphs() {
        assert_eq!(
            connected_domination_polynomial(&cycle(4)).unwrap().coeffs(),
            &[0, 0, 4, 4, 1]
        );
        for n in 1..=5 {
            let p = connected_domination_polynomial(&complete(n)).unwrap();
            let binomial: Vec<i64> = (0..=n)
                .map(|k| {
                    let c = (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
                    if k == 0 { 0 } else { c }
                })
                .collect();
            assert_eq!(p.coeffs(), &binomial[..binomial.len()]);
        }
        assert_eq!(domination_polynomial(&complete(1)).unwrap().coeffs(), &[0, 1]);
        assert_eq!(domination_polynomial(&complete(2)).unwrap().coeffs(), &[0, 2, 1]);
        assert_eq!(domination_polynomial(&cycle(4)).unwrap().coeffs(), &[0, 0, 6, 4, 1]);
    }

    #[test]
    fn petersen_connected_domination_polynomial_is_frozen() {
        let p = connected_domination_polynomial(&petersen()).unwrap();
        assert_eq!(p.coeffs(), &[0, 0, 0, 0, 10, 72, 135, 110, 45, 10, 1]);
        assert_eq!(p.evaluate(-1), -1);
        assert_eq!(
            p.to_string(),
            "x^10 + 10x^9 + 45x^8 + 110x^7 + 135x^6 + 72x^5 + 10x^4"
        );
        assert_eq!(connected_domination_number(&petersen()).unwrap(), Some(4));
    }

    #[test]
    fn int_polynomial_basics() {
        assert!(IntPolynomial::new([0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().to_string(), "0");
        let p = IntPolynomial::new([1, -2, 0, 3]);
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.coefficient(1), -2);
        assert_eq!(p.coefficient(9), 0);
        assert_eq!(p.evaluate(2), 1 - 4 + 24);
        assert_eq!(p.to_string(), "3x^3 - 2x + 1");
    }

    #[test]
    fn dominating_complex_of_the_three_path_is_a_boolean_square() {
        let dh = dominating_complex(&path(3), Field::Rational).unwrap();
        dh.validate().unwrap();
        assert_eq!(dh.generators([1, 0, 0]), &["010|{1}".to_string()]);
        assert_eq!(
            dh.generators([2, 0, 0]),
            &["110|{0,1}".to_string(), "011|{1,2}".to_string()]
        );
        assert_eq!(dh.generators([3, 0, 0]), &["111|{0,1,2}".to_string()]);
        assert_eq!(dh.homology().unwrap().total_rank(), 0);
    }

    #[test]
    fn dominating_complex_of_the_square_has_rank_one_in_degree_two() {
        for field in [Field::GF2, Field::Rational] {
            let dh = dominating_complex(&cycle(4), field).unwrap();
            dh.validate().unwrap();
            let dims: Vec<usize> = (1..=4).map(|k| dh.dim([k, 0, 0])).collect();
            assert_eq!(dims, vec![0, 4, 4, 1]);
            assert_eq!(dh.homology().unwrap().nonzero(), BTreeMap::from([([2, 0, 0], 1)]));
        }
    }

    #[test]
    fn dominating_complex_includes_into_the_bold_complex() {
        for g in [path(3), cycle(4), diamond()] {
            let dh = dominating_complex(&g, Field::Rational).unwrap();
            let ch = bold_complex(&g, Field::Rational);
            let mut blocks = BTreeMap::new();
            for d in dh.degrees() {
                let entries: Vec<(usize, usize, Scalar)> = dh
                    .generators(d)
                    .iter()
                    .enumerate()
                    .map(|(col, label)| {
                        let (dd, row) = ch.position(label).expect("label exists upstairs");
                        assert_eq!(dd, d);
                        (row, col, Scalar::Int(1))
                    })
                    .collect();
                blocks
                    .insert(d, SparseMatrix::from_entries(ch.dim(d), dh.dim(d), entries).unwrap());
            }
            ChainMap::new(dh, ch, blocks).expect("inclusion is a chain map");
        }
    }

    #[test]
    fn bold_homology_matches_both_paths_on_reference_graphs() {
        let cases: Vec<(Graph, [i32; 3])> = vec![
            (cycle(5), [3, 0, 0]),
            (complete_bipartite(3, 3), [2, 0, 0]),
            (complete(4), [1, 0, 0]),
        ];
        for (g, degree) in cases {
            for field in [Field::GF2, Field::Rational, Field::gfp(3).unwrap()] {
                let via_dominating = bold_homology_via(&g, field, BoldPath::Dominating).unwrap();
                let via_full = bold_homology_via(&g, field, BoldPath::Full).unwrap();
                assert_eq!(via_dominating.nonzero(), via_full.nonzero());
                assert_eq!(via_dominating.nonzero(), BTreeMap::from([(degree, 1)]));
            }
        }
    }

    #[test]
    fn trees_and_leafy_graphs_have_trivial_bold_homology() {
        let paw = Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let gem = Graph::new(
            5,
            [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)],
        )
        .unwrap();
        let star5 = Graph::new(5, (1..5).map(|v| (0, v))).unwrap();
        for g in [path(3), path(5), star5, paw, gem] {
            assert_eq!(bold_homology(&g, Field::GF2).unwrap().total_rank(), 0);
        }
    }

    #[test]
    fn disconnected_graphs_have_trivial_bold_homology_on_both_paths() {
        let graphs = [Graph::new(2, []).unwrap(), Graph::new(5, [(0, 1), (2, 3), (3, 4)]).unwrap()];
        for g in graphs {
            assert_eq!(bold_homology(&g, Field::GF2).unwrap().total_rank(), 0);
            let full = bold_homology_via(&g, Field::GF2, BoldPath::Full).unwrap();
            assert_eq!(full.total_rank(), 0);
        }
    }

    #[test]
    fn first_bold_homology_detects_completeness() {
        for n in 2..=4 {
            let h = bold_homology(&complete(n), Field::GF2).unwrap();
            assert_eq!(h.rank_at([1, 0, 0]), 1);
        }
        for g in [cycle(4), path(3), diamond(), complete_bipartite(2, 2)] {
            assert_eq!(bold_homology(&g, Field::GF2).unwrap().rank_at([1, 0, 0]), 0);
        }
    }

    #[test]
    fn petersen_bold_homology_sits_in_degree_five() {
        let g = petersen();
        let via_dominating = bold_homology(&g, Field::GF2).unwrap();
        let via_full = bold_homology_via(&g, Field::GF2, BoldPath::Full).unwrap();
        assert_eq!(via_dominating.nonzero(), via_full.nonzero());
        assert_eq!(via_dominating.nonzero(), BTreeMap::from([([5, 0, 0], 1)]));
        assert_eq!(via_dominating.euler_characteristic(), -1);
    }

    #[test]
    fn durer_graph_has_trivial_bold_homology() {
        assert_eq!(bold_homology(&durer(), Field::GF2).unwrap().total_rank(), 0);
    }

    #[test]
    fn homology_support_lies_between_domination_number_and_vertex_count() {
        for g in [cycle(5), complete(4), petersen(), complete_bipartite(2, 3)] {
            let gamma = connected_domination_number(&g).unwrap().unwrap() as i32;
            let n = g.vertex_count() as i32;
            let h = bold_homology(&g, Field::GF2).unwrap();
            for (d, r) in h.nonzero() {
                assert!(r > 0 && gamma <= d[0] && d[0] <= n);
            }
        }
    }

    #[test]
    fn toggle_matching_is_acyclic_and_preserves_homology() {
        for g in [cycle(5), cycle(6), diamond(), petersen()] {
            let dh = dominating_complex(&g, Field::GF2).unwrap();
            for v0 in [0, g.vertex_count() - 1] {
                let m = dominating_toggle_matching(&g, v0).unwrap();
                validate_matching(&dh, &m).unwrap();
                assert!(is_acyclic(&dh, &m).unwrap());
                let reduced = morse_reduce(&dh, &m).unwrap();
                assert_eq!(
                    reduced.homology().unwrap().nonzero(),
                    dh.homology().unwrap().nonzero()
                );
            }
        }
    }

    #[test]
    fn retraction_matching_is_certified_and_retracts_onto_dominating_sets() {
        for g in [path(3), cycle(4), complete(3), diamond(), complete_bipartite(2, 3)] {
            let ch = bold_complex(&g, Field::GF2);
            let (matching, layers) = retraction_matching(&g);
            validate_matching(&ch, &matching).unwrap();
            assert!(layered_acyclicity(&ch, &matching, &layers).unwrap().holds());
            let reduced = morse_reduce(&ch, &matching).unwrap();
            let dh = dominating_complex(&g, Field::GF2).unwrap();
            for d in reduced.degrees().chain(dh.degrees()) {
                let mut critical = reduced.generators(d).to_vec();
                critical.sort();
                let mut dominating = dh.generators(d).to_vec();
                dominating.sort();
                assert_eq!(critical, dominating, "critical basis at {d:?}");
            }
            assert_eq!(
                reduced.homology().unwrap().nonzero(),
                dh.homology().unwrap().nonzero()
            );
        }
    }

    #[test]
    fn retraction_matching_is_empty_exactly_for_complete_graphs() {
        for n in 2..=5 {
            assert!(retraction_matching(&complete(n)).0.is_empty());
        }
        assert!(!retraction_matching(&cycle(4)).0.is_empty());
    }

    #[test]
    fn euler_identity_holds_on_reference_graphs() {
        let report = euler_check(&petersen(), Field::GF2);
        assert_eq!(report.chi_bold, -1);
        assert_eq!(report.dc_at_minus_one, -1);
        assert!(report.passes);

        let report = euler_check(&cycle(6), Field::Rational);
        assert_eq!(report.chi_bold, 1);
        assert_eq!(report.dc_at_minus_one, 1);
        assert!(report.passes);

        for g in [path(4), diamond(), complete(5), durer(), Graph::new(3, [(0, 1)]).unwrap()] {
            assert!(euler_check(&g, Field::GF2).passes);
        }
    }

    #[test]
    fn euler_characteristic_matches_homology_ranks() {
        for g in [cycle(5), diamond(), petersen()] {
            let h = bold_homology(&g, Field::GF2).unwrap();
            assert_eq!(h.euler_characteristic(), euler_check(&g, Field::GF2).chi_bold);
        }
    }

    #[test]
    fn bold_signs_agree_with_the_poset_sign_assignment() {
        for (mask, n) in [(0b0101u64, 4usize), (0b1_0011, 5), (0, 3), (0b110, 4)] {
            for t in 0..n {
                if mask >> t & 1 == 1 {
                    continue;
                }
                let eps = Colouring::from_mask(n, mask);
                let up = Colouring::from_mask(n, mask | 1 << t);
                assert_eq!(
                    u32::from(crate::uber::sign(&eps, &up).unwrap()),
                    raise_parity(mask, t)
                );
            }
        }
    }

    #[test]
    fn bold_homology_is_the_zero_zero_uber_column() {
        use crate::simplicial::SimplicialComplex;
        for g in [path(3), cycle(4), complete(3), diamond()] {
            let skeleton = SimplicialComplex::from_simplices(
                g.vertex_count(),
                g.edges().iter().map(|&(u, v)| vec![u, v]),
            )
            .unwrap();
            let uber = crate::uber::uber_homology(&skeleton, Field::GF2).unwrap();
            let bold = bold_homology(&g, Field::GF2).unwrap();
            let column = uber.bidegree_column(0, 0);
            let bold_nonzero: BTreeMap<i32, usize> =
                bold.nonzero().into_iter().map(|(d, r)| (d[0], r)).collect();
            assert_eq!(column, bold_nonzero);
        }
    }
}
