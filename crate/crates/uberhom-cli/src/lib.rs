//! Shared plumbing for the `uberhom` binary: input resolution, the embedded
//! reference table with its row runners, and JSON document assembly. Living
//! in a library target so integration tests can drive the same code paths
//! the binary uses.

pub mod table;

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use uberhom::bold::Graph;
use uberhom::complex::HomologySummary;
use uberhom::linalg::{Field, LinalgError};
use uberhom::simplicial::SimplicialComplex;

/// The JSON document schema version emitted by every subcommand.
pub const SCHEMA_VERSION: u32 = 1;

/// Parses the `--field` argument: `2`, an odd prime below 2^16, or `Q`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p: u64 = s
        .parse()
        .map_err(|_| format!("field must be 2, an odd prime below 65536, or Q, got {s:?}"))?;
    Field::gfp(p).map_err(|e: LinalgError| e.to_string())
}

/// A graph viewed as a 1-dimensional simplicial complex: its vertices and
/// edges.
pub fn one_skeleton(g: &Graph) -> SimplicialComplex {
    SimplicialComplex::from_simplices(
        g.vertex_count(),
        g.edges().into_iter().map(|(u, v)| vec![u, v]),
    )
    .expect("a simple graph is a valid 1-complex")
}

/// Homology ranks keyed by the leading (homological) degree, for JSON and
/// diffing: `{"3": 1}`.
pub fn ranks_by_degree(h: &HomologySummary) -> BTreeMap<i32, usize> {
    h.nonzero().into_iter().map(|(d, r)| (d[0], r)).collect()
}

/// Renders a rank profile in the compact tower notation: `F_(5) + F^2_(6)`,
/// or `0` when trivial.
pub fn format_ranks(ranks: &BTreeMap<i32, usize>) -> String {
    if ranks.is_empty() {
        return "0".to_string();
    }
    ranks
        .iter()
        .map(|(d, r)| if *r == 1 { format!("F_({d})") } else { format!("F^{r}_({d})") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Converts a rank map into a JSON object with string degree keys.
pub fn ranks_to_json(ranks: &BTreeMap<i32, usize>) -> Value {
    Value::Object(ranks.iter().map(|(d, r)| (d.to_string(), json!(r))).collect())
}

/// Assembles the output document: schema version, command, optional input
/// descriptor, field, the payload fields, and the timing metadata. All keys
/// are sorted, so identical inputs produce byte-identical text apart from
/// the `timing_ms` value.
pub fn output_document(
    command: &str,
    input: Option<Value>,
    field: Option<Field>,
    payload: Map<String, Value>,
    timing_ms: u128,
) -> Value {
    let mut doc = Map::new();
    doc.insert("schema_version".into(), json!(SCHEMA_VERSION));
    doc.insert("command".into(), json!(command));
    if let Some(input) = input {
        doc.insert("input".into(), input);
    }
    if let Some(field) = field {
        doc.insert("field".into(), json!(field.to_string()));
    }
    doc.extend(payload);
    doc.insert("timing_ms".into(), json!(timing_ms));
    Value::Object(doc)
}
