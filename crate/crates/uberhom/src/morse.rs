//! Algebraic Morse theory: acyclic matchings and zig-zag reduction.
//!
//! A [`MorseMatching`] pairs generators in adjacent degrees along nonzero
//! differential coefficients. Reversing the matched arrows in the differential
//! graph must introduce no directed cycle; the matched generators can then be
//! cancelled, leaving a quasi-isomorphic complex on the unmatched (*critical*)
//! generators whose differential sums over alternating zig-zag paths
//!
//! ```text
//! c → b₁ ⇝ a₁ → b₂ ⇝ a₂ → ⋯ → c′
//! ```
//!
//! with weight `⟨dc,b₁⟩ · Π (−⟨daᵢ,bᵢ⟩⁻¹·⟨daᵢ,bᵢ₊₁⟩)`; each `(aᵢ, bᵢ)` is a
//! matched pair.
//!
//! Any directed cycle after reversal must alternate between two adjacent
//! degrees (a down-step exists only from the upper generator of a pair to its
//! partner), so acyclicity reduces to a cycle search in the *step digraph*
//! whose nodes are the matched pairs of one degree and whose arrows
//! `(a,b) → (a′,b′)` record `⟨da, b′⟩ ≠ 0`. The same digraph, in reverse
//! topological order, drives the reduction: the zig-zag contributions of each
//! pair are memoised as a vector over critical generators.
//!
//! [`layered_acyclicity`] certifies acyclicity without a global cycle search:
//! given a partition of the generators into blocks and a level function φ, the
//! matching is acyclic when matched pairs stay inside one block, each block's
//! sub-matching is acyclic, φ is constant on pairs, weakly increasing along
//! within-block steps, and strictly increasing along cross-block steps. (Any
//! cycle has constant φ, hence no cross-block step, hence lives in one block —
//! contradiction.) The connected-dominating-set retraction uses this with
//! φ = size of an attached subgraph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::complex::{next_degree, ComplexError, Degree, GradedComplex};
use crate::linalg::{dispatch_field, Arith, Field, LinalgError, Scalar, SparseMatrix};

/// Errors from matching validation and reduction.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorseError {
    /// A matching edge references a label absent from the complex.
    #[error("matching references unknown generator {label:?}")]
    UnknownGenerator { label: String },
    /// A generator appears in two matching edges.
    #[error("not a matching: generator {label:?} has two partners")]
    NotAMatching { label: String },
    /// An edge is not a valid matchable incidence.
    #[error("invalid matching edge ({lower:?}, {upper:?}): {reason}")]
    InvalidEdge { lower: String, upper: String, reason: String },
    /// The matching has a directed cycle, so reduction is not defined.
    #[error("matching is not acyclic; morse reduction is undefined")]
    NotCertifiedAcyclic,
    /// The layer function misses a generator of the complex.
    #[error("layer function is not total: no data for generator {label:?}")]
    MissingLayerData { label: String },
    /// A malformed complex.
    #[error(transparent)]
    Complex(#[from] ComplexError),
    /// An exact-arithmetic failure.
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A set of disjoint matched edges `(a, b)` with `a` one degree below `b` and
/// `⟨da, b⟩` invertible.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorseMatching {
    edges: BTreeSet<(String, String)>,
}

impl MorseMatching {
    /// Builds a matching from `(lower, upper)` label pairs.
    pub fn new<I, S>(edges: I) -> MorseMatching
    where
        I: IntoIterator<Item = (S, S)>,
        S: Into<String>,
    {
        MorseMatching {
            edges: edges.into_iter().map(|(a, b)| (a.into(), b.into())).collect(),
        }
    }

    /// The empty matching.
    pub fn empty() -> MorseMatching {
        MorseMatching::default()
    }

    /// The edges in deterministic (lexicographic) order.
    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> {
        self.edges.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }

    /// Number of matched edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// True when no edge is present.
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// A certificate input for [`layered_acyclicity`]: a level `φ` and a block id
/// for every generator.
#[derive(Clone, Debug, Default)]
pub struct LayerFunction {
    phi: BTreeMap<String, u64>,
    partition: BTreeMap<String, String>,
}

impl LayerFunction {
    /// Builds a layer function from explicit maps.
    pub fn new(phi: BTreeMap<String, u64>, partition: BTreeMap<String, String>) -> LayerFunction {
        LayerFunction { phi, partition }
    }

    /// The trivial certificate input: `φ ≡ 0` and a single block containing
    /// every generator of `c` (so certification reduces to the block
    /// acyclicity clause).
    pub fn uniform(c: &GradedComplex) -> LayerFunction {
        let mut phi = BTreeMap::new();
        let mut partition = BTreeMap::new();
        for d in c.degrees() {
            for label in c.generators(d) {
                phi.insert(label.clone(), 0);
                partition.insert(label.clone(), String::from("*"));
            }
        }
        LayerFunction { phi, partition }
    }

    /// Inserts one generator's level and block.
    pub fn insert(&mut self, label: impl Into<String>, phi: u64, block: impl Into<String>) {
        let label = label.into();
        self.phi.insert(label.clone(), phi);
        self.partition.insert(label, block.into());
    }

    fn phi_of(&self, label: &str) -> Result<u64, MorseError> {
        self.phi
            .get(label)
            .copied()
            .ok_or_else(|| MorseError::MissingLayerData { label: label.to_string() })
    }

    fn block_of(&self, label: &str) -> Result<&str, MorseError> {
        self.partition
            .get(label)
            .map(String::as_str)
            .ok_or_else(|| MorseError::MissingLayerData { label: label.to_string() })
    }
}

/// The outcome of a layered-acyclicity certification.
///
/// `Violated` means the *certificate* failed — the matching may still be
/// acyclic for other reasons; run [`is_acyclic`] for a definitive answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LayeredVerdict {
    /// All clauses hold; the matching is acyclic.
    Certified,
    /// A clause failed; `detail` names the offending generators.
    Violated { clause: LayeredClause, detail: String },
}

impl LayeredVerdict {
    /// True when the certificate succeeded.
    pub fn holds(&self) -> bool {
        matches!(self, LayeredVerdict::Certified)
    }
}

/// The individual hypotheses of the layered certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayeredClause {
    /// A matched pair crosses two blocks.
    PairWithinBlock,
    /// A block's sub-matching has a directed cycle.
    BlockAcyclicity,
    /// φ differs on the two endpoints of a matched pair.
    ConstantOnPairs,
    /// φ decreases along a within-block step between distinct pairs.
    NondecreasingWithinBlock,
    /// φ fails to strictly increase along a cross-block step.
    IncreasingAcrossBlocks,
}

/// Confirms that `m` is a well-formed matching on `c`: every edge joins
/// adjacent degrees through an invertible differential coefficient, and no
/// generator is used twice.
pub fn validate_matching(c: &GradedComplex, m: &MorseMatching) -> Result<(), MorseError> {
    resolve(c, m).map(|_| ())
}

/// Decides acyclicity by an explicit cycle search on the step digraphs.
pub fn is_acyclic(c: &GradedComplex, m: &MorseMatching) -> Result<bool, MorseError> {
    let resolved = resolve(c, m)?;
    for (&d, pairs) in &resolved.pairs {
        let adj = step_digraph(c, &resolved, d, pairs)?;
        if topological_order(&adj).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Certifies acyclicity from the layered hypotheses without a global cycle
/// search.
///
/// Returns [`LayeredVerdict::Violated`] naming the first failed clause; that
/// outcome means "certificate failed", not "matching is cyclic".
pub fn layered_acyclicity(
    c: &GradedComplex,
    m: &MorseMatching,
    layers: &LayerFunction,
) -> Result<LayeredVerdict, MorseError> {
    let resolved = resolve(c, m)?;
    // The layer function must be total on the complex.
    for d in c.degrees() {
        for label in c.generators(d) {
            layers.phi_of(label)?;
            layers.block_of(label)?;
        }
    }
    // Pairs stay within one block, and φ is constant on them.
    for (a, b) in m.edges() {
        if layers.block_of(a)? != layers.block_of(b)? {
            return Ok(LayeredVerdict::Violated {
                clause: LayeredClause::PairWithinBlock,
                detail: format!("pair ({a:?}, {b:?}) spans blocks"),
            });
        }
        if layers.phi_of(a)? != layers.phi_of(b)? {
            return Ok(LayeredVerdict::Violated {
                clause: LayeredClause::ConstantOnPairs,
                detail: format!("φ({a:?}) ≠ φ({b:?})"),
            });
        }
    }
    for (&d, pairs) in &resolved.pairs {
        let adj = step_digraph(c, &resolved, d, pairs)?;
        let labels = c.generators(d);
        let upper_labels = c.generators(next_degree(d));
        // Monotonicity along steps. A step goes from the lower generator of
        // one pair to the upper generator of another; only these incidences
        // can appear in a zig-zag cycle, so only they are constrained.
        for (p, targets) in adj.iter().enumerate() {
            let from = &labels[pairs[p].0];
            for &q in targets {
                let to = &upper_labels[pairs[q].1];
                let same_block = layers.block_of(from)? == layers.block_of(to)?;
                let (phi_from, phi_to) = (layers.phi_of(from)?, layers.phi_of(to)?);
                if same_block && phi_from > phi_to {
                    return Ok(LayeredVerdict::Violated {
                        clause: LayeredClause::NondecreasingWithinBlock,
                        detail: format!("step {from:?} → {to:?} decreases φ inside a block"),
                    });
                }
                if !same_block && phi_from >= phi_to {
                    return Ok(LayeredVerdict::Violated {
                        clause: LayeredClause::IncreasingAcrossBlocks,
                        detail: format!("step {from:?} → {to:?} does not increase φ across blocks"),
                    });
                }
            }
        }
        // Per-block acyclicity: cycle search restricted to each block's pairs.
        let block_of_pair: Vec<&str> = pairs
            .iter()
            .map(|&(lo, _)| layers.block_of(&labels[lo]))
            .collect::<Result<_, _>>()?;
        let restricted: Vec<Vec<usize>> = adj
            .iter()
            .enumerate()
            .map(|(p, targets)| {
                targets
                    .iter()
                    .copied()
                    .filter(|&q| block_of_pair[p] == block_of_pair[q])
                    .collect()
            })
            .collect();
        if topological_order(&restricted).is_none() {
            return Ok(LayeredVerdict::Violated {
                clause: LayeredClause::BlockAcyclicity,
                detail: format!("a block's sub-matching below degree {d:?} has a cycle"),
            });
        }
    }
    Ok(LayeredVerdict::Certified)
}

/// Cancels the matched generators, returning the critical complex with the
/// zig-zag differential. Quasi-isomorphic to `c` (same homology in every
/// degree).
///
/// # Errors
/// Fails when the matching is invalid or not acyclic.
pub fn morse_reduce(c: &GradedComplex, m: &MorseMatching) -> Result<GradedComplex, MorseError> {
    let resolved = resolve(c, m)?;
    let field = c.field();
    dispatch_field!(&field, arith, reduce_with(&arith, c, &resolved))
}

fn reduce_with<A: Arith>(
    arith: &A,
    c: &GradedComplex,
    resolved: &Resolved,
) -> Result<GradedComplex, MorseError> {
    let field = c.field();
    let empty = Vec::new();

    // Critical generators keep their labels and relative order.
    let mut reduced = GradedComplex::new(field);
    let mut critical_pos: BTreeMap<Degree, BTreeMap<usize, usize>> = BTreeMap::new();
    for d in c.degrees() {
        let mut pos = BTreeMap::new();
        let mut labels = Vec::new();
        for (i, label) in c.generators(d).iter().enumerate() {
            if !resolved.matched.contains(&(d, i)) {
                pos.insert(i, labels.len());
                labels.push(label.clone());
            }
        }
        critical_pos.insert(d, pos);
        reduced.add_generators(d, labels)?;
    }

    for d in c.degrees() {
        let Some(diff) = c.differential_ref(d) else {
            continue;
        };
        let up = next_degree(d);
        let columns = reduce_columns(arith, diff, &field)?;
        let pairs = resolved.pairs.get(&d).unwrap_or(&empty);
        let crit_up = &critical_pos[&up];

        // Memoised zig-zag contributions: for the upper generator b of each
        // pair, W(b) is the weighted sum of critical generators reachable by
        // paths descending through that pair. Dependencies follow the step
        // digraph, so reverse topological order makes each W available before
        // it is read.
        let adj = step_digraph(c, resolved, d, pairs)?;
        let order = topological_order(&adj).ok_or(MorseError::NotCertifiedAcyclic)?;
        let mut w: Columns<A::Elem> = vec![Vec::new(); pairs.len()];
        for &p in order.iter().rev() {
            let (lower, upper) = pairs[p];
            let pivot = columns[lower]
                .iter()
                .find(|(r, _)| *r == upper)
                .expect("validated matched coefficient");
            let scale = arith.neg(&arith.inv(&pivot.1));
            let mut acc: BTreeMap<usize, A::Elem> = BTreeMap::new();
            let rows =
                UpperRows { up, critical: crit_up, pair_of: &resolved.upper_pair, memo: &w };
            for (row, coeff) in &columns[lower] {
                if *row == upper {
                    continue;
                }
                accumulate(arith, &mut acc, *row, coeff, &rows);
            }
            w[p] = acc
                .into_iter()
                .map(|(i, e)| (i, arith.mul(&e, &scale)))
                .filter(|(_, e)| !arith.is_zero(e))
                .collect();
        }

        // Reduced differential: direct critical incidences plus one zig-zag
        // descent through each adjacent pair.
        let mut entries = Vec::new();
        let rows = UpperRows { up, critical: crit_up, pair_of: &resolved.upper_pair, memo: &w };
        for (j_old, &j_new) in &critical_pos[&d] {
            let mut acc: BTreeMap<usize, A::Elem> = BTreeMap::new();
            for (row, coeff) in &columns[*j_old] {
                accumulate(arith, &mut acc, *row, coeff, &rows);
            }
            for (i, e) in acc {
                if !arith.is_zero(&e) {
                    entries.push((i, j_new, arith.to_scalar(&e)));
                }
            }
        }
        let matrix =
            SparseMatrix::from_entries(reduced.dim(up), reduced.dim(d), entries)?;
        reduced.set_differential(d, matrix)?;
    }
    Ok(reduced)
}

/// Sparse columns over one arithmetic: per column, its `(row, entry)` pairs.
type Columns<E> = Vec<Vec<(usize, E)>>;

/// The matrix's columns with entries reduced into field elements; zero
/// reductions (like an integer 2 read over GF(2)) are dropped.
fn reduce_columns<A: Arith>(
    arith: &A,
    m: &SparseMatrix,
    field: &Field,
) -> Result<Columns<A::Elem>, LinalgError> {
    let mut cols: Columns<A::Elem> = vec![Vec::new(); m.cols()];
    for (r, c, s) in m.iter() {
        let e = arith.lift_scalar(s, field)?;
        if !arith.is_zero(&e) {
            cols[c].push((r, e));
        }
    }
    Ok(cols)
}

/// Read-only lookups classifying the rows one degree above the columns being
/// folded: which rows are critical, which belong to a matched pair, and the
/// memoised zig-zag vector of each pair.
struct UpperRows<'a, E> {
    /// The upper degree itself.
    up: Degree,
    /// Critical row → its position in the reduced complex.
    critical: &'a BTreeMap<usize, usize>,
    /// Upper generator position → index of its pair into `memo`.
    pair_of: &'a BTreeMap<(Degree, usize), usize>,
    /// Memoised zig-zag vector of each pair.
    memo: &'a Columns<E>,
}

/// Adds `coeff · (critical row or W(pair))` into the accumulator, dispatching
/// on the role of the row's generator: critical rows contribute directly,
/// uppers contribute their memoised zig-zag vector, and lowers (matched
/// upward) contribute nothing.
fn accumulate<A: Arith>(
    arith: &A,
    acc: &mut BTreeMap<usize, A::Elem>,
    row: usize,
    coeff: &A::Elem,
    rows: &UpperRows<'_, A::Elem>,
) {
    if let Some(&pos) = rows.critical.get(&row) {
        let cell = acc.entry(pos).or_insert_with(|| arith.zero());
        *cell = arith.add(&cell.clone(), coeff);
    } else if let Some(&q) = rows.pair_of.get(&(rows.up, row)) {
        for (i, e) in &rows.memo[q] {
            let cell = acc.entry(*i).or_insert_with(|| arith.zero());
            *cell = arith.add(&cell.clone(), &arith.mul(coeff, e));
        }
    }
}

/// A validated matching resolved to positions: pairs grouped by lower degree,
/// plus role lookups.
struct Resolved {
    /// Lower degree → list of `(lower index, upper index)` pairs.
    pairs: BTreeMap<Degree, Vec<(usize, usize)>>,
    /// Every matched generator position.
    matched: BTreeSet<(Degree, usize)>,
    /// Position of an upper generator → its pair's index in the lower
    /// degree's list.
    upper_pair: BTreeMap<(Degree, usize), usize>,
}

fn resolve(c: &GradedComplex, m: &MorseMatching) -> Result<Resolved, MorseError> {
    let field = c.field();
    let mut pairs: BTreeMap<Degree, Vec<(usize, usize)>> = BTreeMap::new();
    let mut matched = BTreeSet::new();
    let mut upper_positions: Vec<(Degree, usize, Degree)> = Vec::new();
    for (a, b) in m.edges() {
        let (da, ia) = c
            .position(a)
            .ok_or_else(|| MorseError::UnknownGenerator { label: a.to_string() })?;
        let (db, ib) = c
            .position(b)
            .ok_or_else(|| MorseError::UnknownGenerator { label: b.to_string() })?;
        if db != next_degree(da) {
            return Err(MorseError::InvalidEdge {
                lower: a.to_string(),
                upper: b.to_string(),
                reason: format!("degrees {da:?} and {db:?} are not adjacent"),
            });
        }
        let coeff = c
            .differential_ref(da)
            .and_then(|m| m.get(ib, ia))
            .cloned()
            .unwrap_or(Scalar::Int(0));
        if !crate::linalg::scalar_is_unit(&coeff, &field)? {
            return Err(MorseError::InvalidEdge {
                lower: a.to_string(),
                upper: b.to_string(),
                reason: format!("differential coefficient {coeff} is not invertible in {field}"),
            });
        }
        for (degree, index, label) in [(da, ia, a), (db, ib, b)] {
            if !matched.insert((degree, index)) {
                return Err(MorseError::NotAMatching { label: label.to_string() });
            }
        }
        pairs.entry(da).or_default().push((ia, ib));
        upper_positions.push((db, ib, da));
    }
    let mut upper_pair = BTreeMap::new();
    for (db, ib, da) in upper_positions {
        let idx = pairs[&da].iter().position(|&(_, u)| u == ib).expect("pair just inserted");
        upper_pair.insert((db, ib), idx);
    }
    Ok(Resolved { pairs, matched, upper_pair })
}

/// The step digraph at lower degree `d`: arrow `p → q` when the differential
/// of pair `p`'s lower generator hits pair `q`'s upper generator (`p ≠ q`).
fn step_digraph(
    c: &GradedComplex,
    resolved: &Resolved,
    d: Degree,
    pairs: &[(usize, usize)],
) -> Result<Vec<Vec<usize>>, MorseError> {
    let field = c.field();
    let up = next_degree(d);
    // Column view of the lower generators' differentials.
    let mut cols: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    if let Some(diff) = c.differential_ref(d) {
        for (r, col, s) in diff.iter() {
            if crate::linalg::scalar_is_unit(s, &field)? {
                cols.entry(col).or_default().push(r);
            }
        }
    }
    let mut adj = vec![Vec::new(); pairs.len()];
    for (p, &(lower, upper)) in pairs.iter().enumerate() {
        if let Some(rows) = cols.get(&lower) {
            for &r in rows {
                if r == upper {
                    continue;
                }
                if let Some(&q) = resolved.upper_pair.get(&(up, r)) {
                    adj[p].push(q);
                }
            }
        }
    }
    Ok(adj)
}

/// Kahn topological order; `None` when the digraph has a cycle. Every arrow
/// `p → q` places `p` before `q`.
fn topological_order(adj: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut indegree = vec![0usize; n];
    for targets in adj {
        for &q in targets {
            indegree[q] += 1;
        }
    }
    let mut queue: VecDeque<usize> =
        (0..n).filter(|&p| indegree[p] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(p) = queue.pop_front() {
        order.push(p);
        for &q in &adj[p] {
            indegree[q] -= 1;
            if indegree[q] == 0 {
                queue.push_back(q);
            }
        }
    }
    (order.len() == n).then_some(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Vector;

    fn int_matrix(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> SparseMatrix {
        SparseMatrix::from_entries(
            rows,
            cols,
            entries.iter().map(|&(r, c, v)| (r, c, Scalar::Int(v))),
        )
        .expect("valid matrix")
    }

    use crate::uber::boolean_complex;

    fn toggle_highest_matching(m: u32) -> MorseMatching {
        let label = |bits: u32| -> String {
            let elems: Vec<String> =
                (1..=m).filter(|t| bits >> (t - 1) & 1 == 1).map(|t| t.to_string()).collect();
            format!("{{{}}}", elems.join(","))
        };
        let top = 1 << (m - 1);
        MorseMatching::new(
            (0..1u32 << m)
                .filter(|bits| bits & top == 0)
                .map(|bits| (label(bits), label(bits | top))),
        )
    }

    #[test]
    fn boolean_complex_is_a_complex_over_q_and_gf2() {
        for field in [Field::Rational, Field::GF2, Field::gfp(7).unwrap()] {
            boolean_complex(3, field).validate().unwrap();
        }
    }

    #[test]
    fn empty_matching_validates_and_reduces_to_the_same_complex() {
        let c = boolean_complex(3, Field::Rational);
        let m = MorseMatching::empty();
        validate_matching(&c, &m).unwrap();
        assert!(is_acyclic(&c, &m).unwrap());
        let reduced = morse_reduce(&c, &m).unwrap();
        assert_eq!(reduced.total_dimension(), c.total_dimension());
        for d in c.degrees() {
            assert_eq!(reduced.generators(d), c.generators(d));
            assert_eq!(reduced.differential(d), c.differential(d));
        }
    }

    #[test]
    fn toggle_matching_on_boolean_cube_validates_and_is_acyclic() {
        let c = boolean_complex(3, Field::Rational);
        let m = toggle_highest_matching(3);
        assert_eq!(m.len(), 4);
        assert!(m.edges().any(|(a, b)| a == "{}" && b == "{3}"));
        assert!(m.edges().any(|(a, b)| a == "{1}" && b == "{1,3}"));
        assert!(m.edges().any(|(a, b)| a == "{2}" && b == "{2,3}"));
        assert!(m.edges().any(|(a, b)| a == "{1,2}" && b == "{1,2,3}"));
        validate_matching(&c, &m).unwrap();
        assert!(is_acyclic(&c, &m).unwrap());
    }

    #[test]
    fn perfect_matching_on_boolean_cube_reduces_to_the_zero_complex() {
        for field in [Field::Rational, Field::GF2] {
            let c = boolean_complex(3, field);
            let reduced = morse_reduce(&c, &toggle_highest_matching(3)).unwrap();
            assert_eq!(reduced.total_dimension(), 0);
        }
    }

    #[test]
    fn shared_endpoint_is_not_a_matching() {
        let c = boolean_complex(3, Field::GF2);
        let m = MorseMatching::new([("{1}", "{1,3}"), ("{1}", "{1,2}")]);
        assert_eq!(
            validate_matching(&c, &m),
            Err(MorseError::NotAMatching { label: "{1}".into() })
        );
    }

    #[test]
    fn zero_coefficient_edges_are_rejected() {
        let c = boolean_complex(3, Field::GF2);
        // {1} and {2,3} are not incident at all.
        let m = MorseMatching::new([("{1}", "{2,3}")]);
        assert!(matches!(
            validate_matching(&c, &m),
            Err(MorseError::InvalidEdge { .. })
        ));
    }

    #[test]
    fn coefficients_must_be_invertible_in_the_field() {
        // a ──2──> b is a unit over Q but zero over GF(2).
        let mut c = GradedComplex::new(Field::GF2);
        c.add_generators([0, 0, 0], vec!["a".into()]).unwrap();
        c.add_generators([1, 0, 0], vec!["b".into()]).unwrap();
        c.set_differential([0, 0, 0], int_matrix(1, 1, &[(0, 0, 2)])).unwrap();
        let m = MorseMatching::new([("a", "b")]);
        assert!(matches!(validate_matching(&c, &m), Err(MorseError::InvalidEdge { .. })));

        let mut c_q = GradedComplex::new(Field::Rational);
        c_q.add_generators([0, 0, 0], vec!["a".into()]).unwrap();
        c_q.add_generators([1, 0, 0], vec!["b".into()]).unwrap();
        c_q.set_differential([0, 0, 0], int_matrix(1, 1, &[(0, 0, 2)])).unwrap();
        validate_matching(&c_q, &m).unwrap();
    }

    /// Two generators per degree with all four coefficients 1: matching both
    /// columns creates the alternating cycle x → v ⇝ y → u ⇠ x.
    fn four_cycle_complex() -> (GradedComplex, MorseMatching) {
        let mut c = GradedComplex::new(Field::GF2);
        c.add_generators([1, 0, 0], vec!["x".into(), "y".into()]).unwrap();
        c.add_generators([2, 0, 0], vec!["u".into(), "v".into()]).unwrap();
        c.set_differential(
            [1, 0, 0],
            int_matrix(2, 2, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, 1)]),
        )
        .unwrap();
        (c, MorseMatching::new([("x", "u"), ("y", "v")]))
    }

    #[test]
    fn alternating_four_cycle_is_detected() {
        let (c, m) = four_cycle_complex();
        validate_matching(&c, &m).unwrap();
        // Exhaustive oracle: both cross-incidences are present, which is
        // exactly the 4-edge alternating cycle.
        assert!(c.differential([1, 0, 0]).get(1, 0).is_some(), "x → v");
        assert!(c.differential([1, 0, 0]).get(0, 1).is_some(), "y → u");
        assert!(!is_acyclic(&c, &m).unwrap());
        assert_eq!(
            morse_reduce(&c, &m).unwrap_err(),
            MorseError::NotCertifiedAcyclic
        );
    }

    #[test]
    fn layered_certificate_with_trivial_layers_reduces_to_block_acyclicity() {
        let c = boolean_complex(3, Field::GF2);
        let m = toggle_highest_matching(3);
        let verdict = layered_acyclicity(&c, &m, &LayerFunction::uniform(&c)).unwrap();
        assert_eq!(verdict, LayeredVerdict::Certified);

        let (c4, m4) = four_cycle_complex();
        let verdict = layered_acyclicity(&c4, &m4, &LayerFunction::uniform(&c4)).unwrap();
        assert_eq!(
            verdict,
            LayeredVerdict::Violated {
                clause: LayeredClause::BlockAcyclicity,
                detail: "a block's sub-matching below degree [1, 0, 0] has a cycle".into(),
            }
        );
    }

    #[test]
    fn layered_certificate_rejects_pairs_crossing_blocks() {
        let c = boolean_complex(2, Field::GF2);
        let m = MorseMatching::new([("{}", "{1}")]);
        let mut layers = LayerFunction::uniform(&c);
        layers.insert("{1}", 0, "other");
        let verdict = layered_acyclicity(&c, &m, &layers).unwrap();
        assert!(matches!(
            verdict,
            LayeredVerdict::Violated { clause: LayeredClause::PairWithinBlock, .. }
        ));
    }

    #[test]
    fn layered_certificate_requires_totality() {
        let c = boolean_complex(2, Field::GF2);
        let m = MorseMatching::new([("{}", "{1}")]);
        let layers = LayerFunction::default();
        assert!(matches!(
            layered_acyclicity(&c, &m, &layers),
            Err(MorseError::MissingLayerData { .. })
        ));
    }

    #[test]
    fn layered_certificate_splits_the_four_cycle_across_blocks() {
        // Moving one pair to its own block turns the within-block cycle into
        // two cross-block steps at equal φ, which the strict clause rejects.
        let (c, m) = four_cycle_complex();
        let mut layers = LayerFunction::uniform(&c);
        layers.insert("y", 0, "B");
        layers.insert("v", 0, "B");
        let verdict = layered_acyclicity(&c, &m, &layers).unwrap();
        assert!(matches!(
            verdict,
            LayeredVerdict::Violated { clause: LayeredClause::IncreasingAcrossBlocks, .. }
        ));
    }

    #[test]
    fn zigzag_differential_through_one_pair_has_the_kozlov_sign() {
        // deg 0: a, c; deg 1: b1, b2; d(a) = b1 + b2, d(c) = b1.
        // Matching (a, b1). The only zig-zag path c → b1 ⇝ a → b2 contributes
        // ⟨dc,b1⟩·(−⟨da,b1⟩⁻¹)·⟨da,b2⟩ = −1.
        let mut c = GradedComplex::new(Field::Rational);
        c.add_generators([0, 0, 0], vec!["a".into(), "c".into()]).unwrap();
        c.add_generators([1, 0, 0], vec!["b1".into(), "b2".into()]).unwrap();
        c.set_differential([0, 0, 0], int_matrix(2, 2, &[(0, 0, 1), (1, 0, 1), (0, 1, 1)]))
            .unwrap();
        let reduced = morse_reduce(&c, &MorseMatching::new([("a", "b1")])).unwrap();
        assert_eq!(reduced.generators([0, 0, 0]), ["c".to_string()]);
        assert_eq!(reduced.generators([1, 0, 0]), ["b2".to_string()]);
        assert_eq!(reduced.differential([0, 0, 0]).get(0, 0), Some(&Scalar::Int(-1)));
        // Quasi-isomorphism: both complexes are exact here.
        assert_eq!(reduced.homology().unwrap().total_rank(), 0);
        assert_eq!(c.homology().unwrap().total_rank(), 0);
    }

    #[test]
    fn zigzag_differential_through_two_chained_pairs() {
        // deg 0: a1, a2, c; deg 1: b1, b2, b3.
        // d(a1) = b1 + b2, d(a2) = b2 + b3, d(c) = b1; pairs (a1,b1), (a2,b2).
        // The path c → b1 ⇝ a1 → b2 ⇝ a2 → b3 has weight (−1)² = +1.
        let mut c = GradedComplex::new(Field::Rational);
        c.add_generators([0, 0, 0], ["a1", "a2", "c"].map(String::from)).unwrap();
        c.add_generators([1, 0, 0], ["b1", "b2", "b3"].map(String::from)).unwrap();
        c.set_differential(
            [0, 0, 0],
            int_matrix(3, 3, &[(0, 0, 1), (1, 0, 1), (1, 1, 1), (2, 1, 1), (0, 2, 1)]),
        )
        .unwrap();
        let m = MorseMatching::new([("a1", "b1"), ("a2", "b2")]);
        assert!(is_acyclic(&c, &m).unwrap());
        let reduced = morse_reduce(&c, &m).unwrap();
        assert_eq!(reduced.differential([0, 0, 0]).get(0, 0), Some(&Scalar::Int(1)));
        assert_eq!(reduced.homology().unwrap().total_rank(), 0);
    }

    #[test]
    fn reduction_preserves_homology_of_the_boolean_cube_with_partial_matchings() {
        // Match only two of the four toggle pairs; homology (zero everywhere)
        // and validation must survive.
        for field in [Field::GF2, Field::Rational, Field::gfp(5).unwrap()] {
            let c = boolean_complex(3, field);
            let m = MorseMatching::new([("{}", "{3}"), ("{1,2}", "{1,2,3}")]);
            assert!(is_acyclic(&c, &m).unwrap());
            let reduced = morse_reduce(&c, &m).unwrap();
            reduced.validate().unwrap();
            assert_eq!(reduced.total_dimension(), 4);
            let h_before = c.homology().unwrap();
            let h_after = reduced.homology().unwrap();
            for d in c.degrees() {
                assert_eq!(h_before.rank_at(d), h_after.rank_at(d), "degree {d:?}");
            }
        }
    }

    #[test]
    fn reduced_complex_of_a_circle_keeps_its_homology_representatives_valid() {
        // Triangle boundary as in the complex module, with one edge matched
        // against a vertex: ranks must be preserved at both degrees.
        let mut c = GradedComplex::new(Field::GF2);
        c.add_generators([0, 0, 0], ["v0", "v1", "v2"].map(String::from)).unwrap();
        c.add_generators([1, 0, 0], ["e01", "e02", "e12"].map(String::from)).unwrap();
        // Coboundary orientation: raising differential from vertices to edges.
        c.set_differential(
            [0, 0, 0],
            int_matrix(3, 3, &[(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)]),
        )
        .unwrap();
        let m = MorseMatching::new([("v0", "e01")]);
        let reduced = morse_reduce(&c, &m).unwrap();
        reduced.validate().unwrap();
        let h = reduced.homology().unwrap();
        assert_eq!(h.rank_at([0, 0, 0]), 1);
        assert_eq!(h.rank_at([1, 0, 0]), 1);
        // A reduced cycle really is a cycle of the reduced complex.
        let summary = reduced.homology_with_representatives().unwrap();
        let reps = summary.representatives().unwrap();
        for rep in &reps[&[0, 0, 0]] {
            let entries: Vec<(usize, Scalar)> = rep
                .iter()
                .map(|(label, s)| {
                    let (_, idx) = reduced.position(label).unwrap();
                    (idx, s.clone())
                })
                .collect();
            let v = Vector::from_entries(reduced.dim([0, 0, 0]), entries).unwrap();
            assert!(reduced
                .differential([0, 0, 0])
                .apply(&v, &Field::GF2)
                .unwrap()
                .is_empty());
        }
    }
}
