//! Graph families, operations, interchange formats, and the small-graph
//! catalogue.
//!
//! Families cover the standard zoo — complete graphs `K_n`, complete
//! bipartite `K_{m,n}`, cycles `C_n`, wheels `W_n` (hub last), paths `L_n`,
//! hypercube skeletons `Cube(d)` (binary-coordinate order), the Petersen
//! graph and its generalisation `GP(n,k)` (outer ring first), stars (hub
//! last), and seeded random trees and connected graphs. Operations build
//! Cartesian products (row-major vertex pairs), graph cones (apex last), and
//! neck stretches (two rooted graphs joined by a subdivided edge).
//!
//! Interchange runs through the graph6 text format — 6-bit big-endian chunks
//! of the column-major upper adjacency triangle, offset by 63 — and a plain
//! edge-list format (`n` on the first line, one `u v` pair per line).
//!
//! The module also ships a catalogue of all connected graphs on up to 7
//! vertices (1, 1, 2, 6, 21, 112, 853 isomorphism classes), stored as graph6
//! data and reproducible by [`enumerate_connected_graphs`]: every connected
//! graph on `n ≥ 2` vertices arises from a connected graph on `n − 1`
//! vertices by attaching one new vertex (delete a spanning-tree leaf), so
//! augmenting the previous level and deduplicating up to isomorphism is
//! exhaustive.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bold::{BoldError, Graph};

/// Errors from generation, parsing, and graph operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphGenError {
    /// A family received parameters outside its valid range.
    #[error("invalid family spec: {reason}")]
    InvalidSpec { reason: String },
    /// An unrecognised family name.
    #[error("unknown graph family {name:?}")]
    UnknownFamily { name: String },
    /// Malformed graph6 text.
    #[error("invalid graph6 at byte {offset}: {reason}")]
    InvalidGraph6 { offset: usize, reason: String },
    /// Malformed edge-list text.
    #[error("invalid edge list at line {line}: {reason}")]
    InvalidEdgeList { line: usize, reason: String },
    /// A root vertex outside its graph.
    #[error("root vertex {root} out of range for {vertex_count} vertices")]
    InvalidRoot { root: usize, vertex_count: usize },
    /// A graph-construction failure.
    #[error(transparent)]
    Bold(#[from] BoldError),
}

/// The built-in graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete,
    CompleteBipartite,
    Cycle,
    Wheel,
    Path,
    Cube,
    Petersen,
    GeneralizedPetersen,
    Star,
    RandomTree,
    RandomConnected,
}

impl Family {
    /// All families, for help listings.
    pub const ALL: [Family; 11] = [
        Family::Complete,
        Family::CompleteBipartite,
        Family::Cycle,
        Family::Wheel,
        Family::Path,
        Family::Cube,
        Family::Petersen,
        Family::GeneralizedPetersen,
        Family::Star,
        Family::RandomTree,
        Family::RandomConnected,
    ];

    /// The canonical lowercase name.
    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Cycle => "cycle",
            Family::Wheel => "wheel",
            Family::Path => "path",
            Family::Cube => "cube",
            Family::Petersen => "petersen",
            Family::GeneralizedPetersen => "generalized_petersen",
            Family::Star => "star",
            Family::RandomTree => "random_tree",
            Family::RandomConnected => "random_connected",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphGenError;

    fn from_str(s: &str) -> Result<Family, GraphGenError> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphGenError::UnknownFamily { name: s.to_string() })
    }
}

/// A family together with its integer parameters and, for the random
/// families, a seed (ignored elsewhere; defaults to 0).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    /// A spec without a seed.
    pub fn new(family: Family, params: impl Into<Vec<usize>>) -> FamilySpec {
        FamilySpec { family, params: params.into(), seed: None }
    }

    /// A spec with a seed.
    pub fn with_seed(family: Family, params: impl Into<Vec<usize>>, seed: u64) -> FamilySpec {
        FamilySpec { family, params: params.into(), seed: Some(seed) }
    }
}

fn invalid(reason: impl Into<String>) -> GraphGenError {
    GraphGenError::InvalidSpec { reason: reason.into() }
}

fn params_n(spec: &FamilySpec, count: usize) -> Result<(), GraphGenError> {
    if spec.params.len() == count {
        Ok(())
    } else {
        Err(invalid(format!(
            "{} takes {count} parameter(s), got {}",
            spec.family,
            spec.params.len()
        )))
    }
}

/// Builds the graph described by `spec`, with the documented canonical
/// vertex numbering per family.
pub fn generate(spec: &FamilySpec) -> Result<Graph, GraphGenError> {
    let p = &spec.params;
    match spec.family {
        Family::Complete => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 1 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            Ok(Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))?)
        }
        Family::CompleteBipartite => {
            params_n(spec, 2)?;
            let (m, n) = (p[0], p[1]);
            if m < 1 || n < 1 {
                return Err(invalid("complete bipartite graph needs m, n >= 1"));
            }
            Ok(Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))?)
        }
        Family::Cycle => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 3 {
                return Err(invalid("cycle needs n >= 3"));
            }
            Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?)
        }
        Family::Wheel => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 4 {
                return Err(invalid("wheel needs n >= 4 total vertices"));
            }
            let rim = generate(&FamilySpec::new(Family::Cycle, [n - 1]))?;
            cone(&rim)
        }
        Family::Path => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 1 {
                return Err(invalid("path needs n >= 1"));
            }
            Ok(Graph::new(n, (1..n).map(|i| (i - 1, i)))?)
        }
        Family::Cube => {
            params_n(spec, 1)?;
            let d = p[0];
            if d > 6 {
                return Err(invalid("cube dimension is capped at 6 (64 vertices)"));
            }
            let n = 1usize << d;
            let edges = (0..n).flat_map(move |u| {
                (0..d).filter_map(move |b| {
                    let v = u ^ (1 << b);
                    (u < v).then_some((u, v))
                })
            });
            Ok(Graph::new(n, edges)?)
        }
        Family::Petersen => {
            params_n(spec, 0)?;
            generate(&FamilySpec::new(Family::GeneralizedPetersen, [5, 2]))
        }
        Family::GeneralizedPetersen => {
            params_n(spec, 2)?;
            let (n, k) = (p[0], p[1]);
            if n < 3 || k < 1 || 2 * k >= n {
                return Err(invalid("generalized Petersen graph needs n >= 3 and 1 <= k < n/2"));
            }
            let mut edges = Vec::with_capacity(3 * n);
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((i, n + i));
                edges.push((n + i, n + (i + k) % n));
            }
            Ok(Graph::new(2 * n, edges)?)
        }
        Family::Star => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 2 {
                return Err(invalid("star needs n >= 2 total vertices"));
            }
            Ok(Graph::new(n, (0..n - 1).map(|v| (v, n - 1)))?)
        }
        Family::RandomTree => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 1 {
                return Err(invalid("random tree needs n >= 1"));
            }
            Ok(random_tree(n, spec.seed.unwrap_or(0))?)
        }
        Family::RandomConnected => {
            params_n(spec, 1)?;
            let n = p[0];
            if n < 1 {
                return Err(invalid("random connected graph needs n >= 1"));
            }
            Ok(random_connected(n, spec.seed.unwrap_or(0))?)
        }
    }
}

/// A uniformly random labelled tree on `n` vertices from a Prüfer sequence
/// drawn with a seeded deterministic generator.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, GraphGenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n <= 2 {
        return Ok(Graph::new(n, (1..n).map(|v| (v - 1, v)))?);
    }
    let sequence: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &sequence {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(Graph::new(n, edges)?)
}

/// A random connected graph: edge-probability-½ samples, rejected until
/// connected (the success chance is at least ½ for every `n`).
pub fn random_connected(n: usize, seed: u64) -> Result<Graph, GraphGenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
}

/// The Cartesian product: vertices are pairs `(u, v)` numbered row-major as
/// `u·|V(h)| + v`, adjacent when equal in one coordinate and adjacent in the
/// other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphGenError> {
    let (gn, hn) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    for u in 0..gn {
        for (a, b) in h.edges() {
            edges.push((u * hn + a, u * hn + b));
        }
    }
    for (u, w) in g.edges() {
        for v in 0..hn {
            edges.push((u * hn + v, w * hn + v));
        }
    }
    Ok(Graph::new(gn * hn, edges)?)
}

/// The graph cone: one new apex vertex, numbered last, joined to every
/// vertex.
pub fn cone(g: &Graph) -> Result<Graph, GraphGenError> {
    let n = g.vertex_count();
    let edges = g.edges().into_iter().chain((0..n).map(|v| (v, n)));
    Ok(Graph::new(n + 1, edges)?)
}

/// Joins two rooted graphs by a path with `j` internal subdivision vertices
/// (`j = 0` is the plain edge join). Vertices: `g0` first, then `g1`, then
/// the chain from the `r0` side to the `r1` side.
pub fn neck_stretch(
    g0: &Graph,
    r0: usize,
    g1: &Graph,
    r1: usize,
    j: usize,
) -> Result<Graph, GraphGenError> {
    let (n0, n1) = (g0.vertex_count(), g1.vertex_count());
    if r0 >= n0 {
        return Err(GraphGenError::InvalidRoot { root: r0, vertex_count: n0 });
    }
    if r1 >= n1 {
        return Err(GraphGenError::InvalidRoot { root: r1, vertex_count: n1 });
    }
    let mut edges = g0.edges();
    edges.extend(g1.edges().into_iter().map(|(u, v)| (u + n0, v + n0)));
    let chain: Vec<usize> = std::iter::once(r0)
        .chain((0..j).map(|i| n0 + n1 + i))
        .chain(std::iter::once(r1 + n0))
        .collect();
    edges.extend(chain.windows(2).map(|w| (w[0], w[1])));
    Ok(Graph::new(n0 + n1 + j, edges)?)
}

/// Emits canonical graph6 text: the `N(n)` header, then the column-major
/// upper adjacency triangle in big-endian 6-bit chunks offset by 63.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - i);
            }
        }
        out.push(63 + value);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses graph6 text into a graph.
///
/// # Errors
/// Reports the byte offset of the first bad byte, a truncated body, or
/// trailing bytes; graphs beyond 64 vertices (and the 0-vertex graph) are
/// rejected.
pub fn parse_graph6(s: &str) -> Result<Graph, GraphGenError> {
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(GraphGenError::InvalidGraph6 { offset: 0, reason: "empty input".into() });
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphGenError::InvalidGraph6 {
                offset,
                reason: format!("byte {b:#04x} outside the printable graph6 range 63..=126"),
            });
        }
    }
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(GraphGenError::InvalidGraph6 {
                offset: 1,
                reason: "8-byte vertex counts exceed the 64-vertex cap".into(),
            });
        }
        if bytes.len() < 4 {
            return Err(GraphGenError::InvalidGraph6 {
                offset: bytes.len(),
                reason: "truncated long vertex-count header".into(),
            });
        }
        let n = (usize::from(bytes[1] - 63) << 12)
            | (usize::from(bytes[2] - 63) << 6)
            | usize::from(bytes[3] - 63);
        (n, 4)
    } else {
        (usize::from(bytes[0] - 63), 1)
    };
    if n == 0 {
        return Err(GraphGenError::InvalidGraph6 {
            offset: 0,
            reason: "the 0-vertex graph is not supported".into(),
        });
    }
    if n > 64 {
        return Err(GraphGenError::InvalidGraph6 {
            offset: 0,
            reason: format!("{n} vertices exceed the supported 64"),
        });
    }
    let bit_count = n * (n - 1) / 2;
    let expected = bit_count.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(GraphGenError::InvalidGraph6 {
            offset: bytes.len(),
            reason: format!("body has {} byte(s), expected {expected}", body.len()),
        });
    }
    if body.len() > expected {
        return Err(GraphGenError::InvalidGraph6 {
            offset: body_start + expected,
            reason: "trailing bytes after the adjacency body".into(),
        });
    }
    let mut edges = Vec::new();
    let mut index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let value = body[index / 6] - 63;
            if value >> (5 - index % 6) & 1 == 1 {
                edges.push((u, v));
            }
            index += 1;
        }
    }
    while index < 6 * expected {
        let value = body[index / 6] - 63;
        if value >> (5 - index % 6) & 1 == 1 {
            return Err(GraphGenError::InvalidGraph6 {
                offset: body_start + index / 6,
                reason: "nonzero padding bits".into(),
            });
        }
        index += 1;
    }
    Ok(Graph::new(n, edges)?)
}

/// Emits the edge-list text format: the vertex count on the first line, then
/// one `u v` pair per line in lexicographic order.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text format (blank lines are skipped).
pub fn parse_edge_list(s: &str) -> Result<Graph, GraphGenError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in s.lines().enumerate() {
        let line = idx + 1;
        let text = raw.trim();
        if text.is_empty() {
            continue;
        }
        if n.is_none() {
            n = Some(text.parse::<usize>().map_err(|_| GraphGenError::InvalidEdgeList {
                line,
                reason: format!("expected the vertex count, got {text:?}"),
            })?);
            continue;
        }
        let mut parts = text.split_whitespace();
        let (u, v) = (parts.next(), parts.next());
        let rest = parts.next();
        let (Some(u), Some(v), None) = (u, v, rest) else {
            return Err(GraphGenError::InvalidEdgeList {
                line,
                reason: format!("expected \"u v\", got {text:?}"),
            });
        };
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| GraphGenError::InvalidEdgeList {
                line,
                reason: format!("{t:?} is not a vertex index"),
            })
        };
        edges.push((parse(u)?, parse(v)?));
    }
    let Some(n) = n else {
        return Err(GraphGenError::InvalidEdgeList {
            line: 1,
            reason: "missing the vertex-count line".into(),
        });
    };
    Ok(Graph::new(n, edges)?)
}

/// Decides isomorphism by backtracking over degree-compatible vertex
/// mappings. Meant for small graphs only (capped at 10 vertices).
pub fn brute_force_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    assert!(n <= 10 && b.vertex_count() <= 10, "brute-force isomorphism is capped at 10 vertices");
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }
    fn extend(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.vertex_count() {
            return true;
        }
        for w in 0..b.vertex_count() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// An isomorphism-invariant bucket key: vertex count, edge count, and the
/// sorted multiset of (degree, sorted neighbour degrees) codes.
fn fingerprint(g: &Graph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut codes: Vec<u64> = (0..n)
        .map(|v| {
            let mut nd: Vec<u64> =
                (0..n).filter(|&u| g.has_edge(u, v)).map(|u| g.degree(u) as u64).collect();
            nd.sort_unstable();
            nd.iter().fold(g.degree(v) as u64, |acc, &d| acc * 67 + d + 1)
        })
        .collect();
    codes.sort_unstable();
    let mut key = vec![n as u64, g.edge_count() as u64];
    key.extend(codes);
    key
}

/// All connected graphs on `n ≤ 7` vertices up to isomorphism, by vertex
/// augmentation: each class on `n − 1` vertices is extended by one new
/// vertex attached to every nonempty subset, then deduplicated. Complete
/// because every connected graph keeps a spanning-tree leaf whose removal
/// stays connected. Deterministically ordered by (edge count, graph6 text).
pub fn enumerate_connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "exhaustive enumeration is supported for 1..=7 vertices");
    if n == 1 {
        return vec![Graph::new(1, []).expect("one vertex")];
    }
    let smaller = enumerate_connected_graphs(n - 1);
    let mut classes: Vec<Graph> = Vec::new();
    let mut buckets: HashMap<Vec<u64>, Vec<usize>> = HashMap::new();
    for g in &smaller {
        for attach in 1u64..1 << (n - 1) {
            let mut edges = g.edges();
            edges.extend((0..n - 1).filter(|&v| attach >> v & 1 == 1).map(|v| (v, n - 1)));
            let candidate = Graph::new(n, edges).expect("augmented graph is valid");
            let bucket = buckets.entry(fingerprint(&candidate)).or_default();
            if !bucket.iter().any(|&i| brute_force_isomorphic(&classes[i], &candidate)) {
                bucket.push(classes.len());
                classes.push(candidate);
            }
        }
    }
    classes.sort_by_key(|g| (g.edge_count(), emit_graph6(g)));
    classes
}

const CATALOGUE_DATA: [&str; 7] = [
    include_str!("../data/connected-1.g6"),
    include_str!("../data/connected-2.g6"),
    include_str!("../data/connected-3.g6"),
    include_str!("../data/connected-4.g6"),
    include_str!("../data/connected-5.g6"),
    include_str!("../data/connected-6.g6"),
    include_str!("../data/connected-7.g6"),
];

/// The number of isomorphism classes of connected graphs on 1..=7 vertices.
pub const CATALOGUE_COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

/// The stored catalogue of connected graphs on `n ≤ 7` vertices, embedded as
/// graph6 data; a test keeps it in sync with
/// [`enumerate_connected_graphs`].
pub fn connected_catalogue(n: usize) -> Vec<Graph> {
    assert!((1..=7).contains(&n), "the catalogue covers 1..=7 vertices");
    CATALOGUE_DATA[n - 1]
        .lines()
        .map(|line| parse_graph6(line).expect("stored catalogue entries are valid graph6"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bold::{bold_homology, Graph};
    use crate::linalg::Field;
    use std::collections::BTreeMap;

    fn family(f: Family, params: &[usize]) -> Graph {
        generate(&FamilySpec::new(f, params)).unwrap()
    }

    #[test]
    fn families_have_documented_counts_and_degrees() {
        let c4 = family(Family::Cycle, &[4]);
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));

        let petersen = family(Family::Petersen, &[]);
        assert_eq!((petersen.vertex_count(), petersen.edge_count()), (10, 15));
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert_eq!(petersen, family(Family::GeneralizedPetersen, &[5, 2]));

        let q3 = family(Family::Cube, &[3]);
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));

        let k23 = family(Family::CompleteBipartite, &[2, 3]);
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));

        let w5 = family(Family::Wheel, &[5]);
        assert_eq!((w5.vertex_count(), w5.degree(4)), (5, 4));

        let star = family(Family::Star, &[4]);
        assert_eq!(star.degree(3), 3);
        assert_eq!(star, cone(&Graph::new(3, []).unwrap()).unwrap());

        assert_eq!(family(Family::Path, &[1]).vertex_count(), 1);
        assert!((0..11).all(|i| Family::ALL[i].name().parse::<Family>() == Ok(Family::ALL[i])));
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let bad = [
            FamilySpec::new(Family::Cycle, [2]),
            FamilySpec::new(Family::Wheel, [3]),
            FamilySpec::new(Family::GeneralizedPetersen, [4, 2]),
            FamilySpec::new(Family::Cube, [7]),
            FamilySpec::new(Family::Star, [1]),
            FamilySpec::new(Family::Complete, [0]),
            FamilySpec::new(Family::Petersen, [5]),
            FamilySpec::new(Family::Complete, [2, 2]),
        ];
        for spec in bad {
            assert!(
                matches!(generate(&spec), Err(GraphGenError::InvalidSpec { .. })),
                "{spec:?} should be rejected"
            );
        }
        assert_eq!(
            "durer".parse::<Family>(),
            Err(GraphGenError::UnknownFamily { name: "durer".into() })
        );
    }

    #[test]
    fn random_families_are_seeded_and_connected() {
        for n in 1..=10 {
            for seed in [0, 1, 42] {
                let t = random_tree(n, seed).unwrap();
                assert_eq!(t.edge_count(), n - 1);
                assert!(t.is_connected());
                assert_eq!(t, random_tree(n, seed).unwrap());

                let g = random_connected(n, seed).unwrap();
                assert!(g.is_connected());
                assert_eq!(g, random_connected(n, seed).unwrap());
            }
        }
        let spec = FamilySpec::with_seed(Family::RandomTree, [6], 7);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
    }

    #[test]
    fn cartesian_products_match_reference_identities() {
        let l2 = family(Family::Path, &[2]);
        let c4 = family(Family::Cycle, &[4]);
        assert!(brute_force_isomorphic(
            &cartesian_product(&c4, &l2).unwrap(),
            &family(Family::Cube, &[3])
        ));
        assert!(brute_force_isomorphic(&cartesian_product(&l2, &l2).unwrap(), &c4));
        let k1 = family(Family::Complete, &[1]);
        assert_eq!(cartesian_product(&k1, &c4).unwrap(), c4);
        let k10 = family(Family::Complete, &[10]);
        assert!(cartesian_product(&k10, &k10).is_err());
    }

    #[test]
    fn iterated_products_of_edges_build_cubes_exactly() {
        let l2 = family(Family::Path, &[2]);
        let mut product = family(Family::Complete, &[1]);
        for d in 0..=4 {
            assert_eq!(product, family(Family::Cube, &[d]), "dimension {d}");
            product = cartesian_product(&product, &l2).unwrap();
        }
    }

    #[test]
    fn cones_build_wheels_and_complete_graphs() {
        let c4 = family(Family::Cycle, &[4]);
        assert_eq!(cone(&c4).unwrap(), family(Family::Wheel, &[5]));
        let k3 = family(Family::Complete, &[3]);
        assert_eq!(cone(&k3).unwrap(), family(Family::Complete, &[4]));
    }

    #[test]
    fn neck_stretch_joins_and_subdivides() {
        let k1 = family(Family::Complete, &[1]);
        assert_eq!(
            neck_stretch(&k1, 0, &k1, 0, 0).unwrap(),
            family(Family::Complete, &[2])
        );
        assert!(brute_force_isomorphic(
            &neck_stretch(&k1, 0, &k1, 0, 1).unwrap(),
            &family(Family::Path, &[3])
        ));
        assert_eq!(
            neck_stretch(&k1, 1, &k1, 0, 0).unwrap_err(),
            GraphGenError::InvalidRoot { root: 1, vertex_count: 1 }
        );
    }

    #[test]
    fn neck_stretch_shifts_bold_homology_by_its_subdivision_count() {
        let k3 = family(Family::Complete, &[3]);
        let base = neck_stretch(&k3, 0, &k3, 0, 0).unwrap();
        let reference = bold_homology(&base, Field::GF2).unwrap().nonzero();
        for j in 1..=3 {
            let stretched = neck_stretch(&k3, 0, &k3, 0, j).unwrap();
            let shifted: BTreeMap<_, _> = bold_homology(&stretched, Field::GF2)
                .unwrap()
                .nonzero()
                .into_iter()
                .map(|(d, r)| ([d[0] - j as i32, d[1], d[2]], r))
                .collect();
            assert_eq!(shifted, reference, "{j} subdivision vertices");
        }
    }

    #[test]
    fn graph6_decodes_the_reference_star() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(emit_graph6(&g), "D?{");
        assert_eq!(emit_graph6(&family(Family::Complete, &[1])), "@");
    }

    #[test]
    fn graph6_round_trips_assorted_graphs() {
        let graphs = [
            family(Family::Petersen, &[]),
            family(Family::Cube, &[3]),
            family(Family::Path, &[1]),
            family(Family::Complete, &[7]),
            Graph::new(63, [(0, 62), (5, 40)]).unwrap(),
            Graph::new(64, [(0, 63)]).unwrap(),
            random_connected(12, 3).unwrap(),
        ];
        for g in graphs {
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(
            parse_graph6(""),
            Err(GraphGenError::InvalidGraph6 { offset: 0, reason: "empty input".into() })
        );
        assert!(matches!(
            parse_graph6("D \x07"),
            Err(GraphGenError::InvalidGraph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("D?"),
            Err(GraphGenError::InvalidGraph6 { offset: 2, .. })
        ));
        assert!(matches!(
            parse_graph6("D?{?"),
            Err(GraphGenError::InvalidGraph6 { offset: 3, .. })
        ));
        assert!(matches!(
            parse_graph6("?"),
            Err(GraphGenError::InvalidGraph6 { offset: 0, .. })
        ));
    }

    #[test]
    fn edge_list_round_trips_and_reports_lines() {
        let g = family(Family::Cycle, &[4]);
        let text = emit_edge_list(&g);
        assert_eq!(text, "4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(parse_edge_list("3\n\n0 1\n1 2\n").unwrap(), family(Family::Path, &[3]));
        assert!(matches!(
            parse_edge_list("two\n0 1\n"),
            Err(GraphGenError::InvalidEdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1 2\n"),
            Err(GraphGenError::InvalidEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("2\n0 9\n"),
            Err(GraphGenError::Bold(BoldError::VertexOutOfRange { .. }))
        ));
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn isomorphism_search_distinguishes_same_degree_sequences() {
        // C₆ and two triangles share the degree sequence but differ.
        let c6 = family(Family::Cycle, &[6]);
        let triangles = Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!brute_force_isomorphic(&c6, &triangles));
        let relabelled = Graph::new(6, (0..6).map(|i| ((i * 5 + 2) % 6, (i * 5 + 3) % 6))).unwrap();
        assert!(brute_force_isomorphic(&c6, &relabelled));
    }

    #[test]
    fn catalogue_counts_are_frozen() {
        for (i, &count) in CATALOGUE_COUNTS.iter().enumerate() {
            assert_eq!(connected_catalogue(i + 1).len(), count, "n = {}", i + 1);
        }
    }

    #[test]
    fn stored_catalogue_matches_regeneration() {
        for n in 1..=7 {
            let stored: Vec<String> =
                connected_catalogue(n).iter().map(emit_graph6).collect();
            let fresh: Vec<String> =
                enumerate_connected_graphs(n).iter().map(emit_graph6).collect();
            assert_eq!(stored, fresh, "n = {n}");
        }
    }

    #[test]
    fn catalogue_entries_are_connected_and_distinct() {
        for n in 1..=5 {
            let graphs = connected_catalogue(n);
            for g in &graphs {
                assert_eq!(g.vertex_count(), n);
                assert!(g.is_connected());
            }
            for i in 0..graphs.len() {
                for j in i + 1..graphs.len() {
                    assert!(!brute_force_isomorphic(&graphs[i], &graphs[j]));
                }
            }
        }
    }

    #[test]
    #[ignore = "refreshes the stored catalogue data files from the enumeration"]
    fn regenerate_catalogue_files() {
        for n in 1..=7 {
            let text: String = enumerate_connected_graphs(n)
                .iter()
                .map(|g| emit_graph6(g) + "\n")
                .collect();
            let path = format!("{}/data/connected-{n}.g6", env!("CARGO_MANIFEST_DIR"));
            std::fs::write(path, text).unwrap();
        }
    }
}
