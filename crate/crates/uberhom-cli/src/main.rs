//! `uberhom` — bold homology, überhomology, domination polynomials, Euler
//! identity checks, the reference table, and Morse-reduction statistics,
//! from the command line.
//!
//! Inputs name a graph in one of three ways: `--g6 <string>` (graph6 text),
//! `--edges <path>` (an edge-list file: the vertex count on the first line,
//! then one `u v` pair per line), or `--family <name> --params <list>`
//! (with `--seed` for the random families). The coefficient field defaults
//! to GF(2) and is selected with `--field 2|<odd prime>|Q`. Every subcommand
//! prints aligned text by default and a versioned JSON document under
//! `--json`; identical inputs produce byte-identical JSON apart from the
//! `timing_ms` field.
//!
//! Exit codes: 0 on success or a passing check, 1 on a failing check
//! (a diff in `table1`, a failed Euler identity, disagreeing chain models
//! under `--via both`), 2 on usage errors (malformed input, out-of-range
//! guards, bad flags).
//!
//! Parallelism is delegated to the library's rayon core; set
//! `RAYON_NUM_THREADS` to bound the worker count (all merges are ordered,
//! so results do not depend on it).

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use uberhom::bold::{
    bold_homology_via, connected_domination_polynomial, domination_polynomial,
    dominating_complex, dominating_toggle_matching, euler_check, BoldPath, Graph,
};
use uberhom::linalg::Field;
use uberhom::morse::{is_acyclic, morse_reduce, validate_matching};
use uberhom::uber::uber_homology;
use uberhom::graphgen::{emit_graph6, generate, parse_edge_list, parse_graph6, FamilySpec};

use uberhom_cli::table::{matches_filter, run_row, run_stretch, RowOutcome, SKIPPED, ROWS};
use uberhom_cli::{
    format_ranks, one_skeleton, output_document, parse_field, ranks_by_degree, ranks_to_json,
};

#[derive(Parser)]
#[command(name = "uberhom", version, about = "Bold homology and überhomology of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bold homology ranks per homological degree
    Bold(BoldArgs),
    /// Triply-graded überhomology ranks of the graph's 1-skeleton
    Uber(UberArgs),
    /// Domination polynomial coefficients (plain or connected)
    Domp(DompArgs),
    /// Check χ(𝐇) = D^c(−1) through two independent code paths
    Euler(EulerArgs),
    /// Recompute the embedded reference table and diff every feasible row
    Table1(Table1Args),
    /// Dominating-complex generator counts and certified-matching statistics
    Reduce(ReduceArgs),
}

/// Exactly one of `--g6`, `--edges`, `--family` names the input graph.
#[derive(Args)]
#[command(group = ArgGroup::new("input").required(true).multiple(false))]
struct InputArgs {
    /// graph6 text for the input graph
    #[arg(long, group = "input", value_name = "STRING")]
    g6: Option<String>,
    /// path of an edge-list file (vertex count, then one `u v` line per edge)
    #[arg(long, group = "input", value_name = "PATH")]
    edges: Option<PathBuf>,
    /// family name: complete, complete_bipartite, cycle, wheel, path, cube,
    /// petersen, generalized_petersen, star, random_tree, random_connected
    #[arg(long, group = "input", value_name = "NAME")]
    family: Option<String>,
    /// comma-separated integer parameters for --family
    #[arg(
        long,
        value_delimiter = ',',
        requires = "family",
        conflicts_with_all = ["g6", "edges"],
        value_name = "LIST"
    )]
    params: Vec<usize>,
    /// seed for the random families (default 0)
    #[arg(long, requires = "family", conflicts_with_all = ["g6", "edges"])]
    seed: Option<u64>,
}

impl InputArgs {
    /// Builds the graph plus a JSON descriptor and a short display name.
    fn resolve(&self) -> Result<(Graph, Value, String)> {
        if let Some(text) = &self.g6 {
            let g = parse_graph6(text)?;
            return Ok((g, json!({ "graph6": text }), format!("graph6 {text}")));
        }
        if let Some(path) = &self.edges {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading edge list {}", path.display()))?;
            let g = parse_edge_list(&text)?;
            let desc = json!({
                "edge_list": path.display().to_string(),
                "graph6": emit_graph6(&g),
            });
            return Ok((g, desc, path.display().to_string()));
        }
        let name = self.family.as_deref().expect("clap enforces one input source");
        let spec = FamilySpec {
            family: name.parse()?,
            params: self.params.clone(),
            seed: self.seed,
        };
        let g = generate(&spec)?;
        let mut desc = Map::new();
        desc.insert("family".into(), json!(name));
        desc.insert("params".into(), json!(self.params));
        if let Some(seed) = self.seed {
            desc.insert("seed".into(), json!(seed));
        }
        desc.insert("graph6".into(), json!(emit_graph6(&g)));
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        let mut display = format!("{name}({})", params.join(","));
        if let Some(seed) = self.seed {
            let _ = write!(display, " seed {seed}");
        }
        Ok((g, Value::Object(desc), display))
    }
}

/// Which chain model computes bold homology.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// the dominating complex, Morse-reduced (default)
    Dh,
    /// the full bold complex over all colourings
    Ch,
    /// both, checked against each other
    Both,
}

impl Via {
    fn name(self) -> &'static str {
        match self {
            Via::Dh => "dh",
            Via::Ch => "ch",
            Via::Both => "both",
        }
    }
}

#[derive(Args)]
struct BoldArgs {
    #[command(flatten)]
    input: InputArgs,
    /// coefficient field: 2, an odd prime below 65536, or Q
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: Field,
    /// chain model: dh (dominating complex), ch (full complex), or both
    #[arg(long, value_enum, default_value_t = Via::Dh)]
    via: Via,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct UberArgs {
    #[command(flatten)]
    input: InputArgs,
    /// coefficient field: 2, an odd prime below 65536, or Q
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: Field,
    /// compute past the 14-vertex guard
    #[arg(long)]
    force: bool,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct DompArgs {
    #[command(flatten)]
    input: InputArgs,
    /// restrict to connected dominating sets (D^c instead of D)
    #[arg(long)]
    connected_only: bool,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct EulerArgs {
    #[command(flatten)]
    input: InputArgs,
    /// coefficient field carried into the report (the identity itself is
    /// field-independent)
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: Field,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Table1Args {
    /// only rows whose name contains one of these (case-insensitive)
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    rows: Vec<String>,
    /// additionally compute the stretch χ of the skipped rows
    #[arg(long)]
    stretch: bool,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ReduceArgs {
    #[command(flatten)]
    input: InputArgs,
    /// coefficient field: 2, an odd prime below 65536, or Q
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: Field,
    /// emit a JSON document
    #[arg(long)]
    json: bool,
}

/// One subcommand's result, before document assembly.
struct Outcome {
    exit: u8,
    payload: Map<String, Value>,
    text: String,
    input: Option<Value>,
    field: Option<Field>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, json_mode, outcome) = match &cli.command {
        Command::Bold(a) => ("bold", a.json, run_bold(a)),
        Command::Uber(a) => ("uber", a.json, run_uber(a)),
        Command::Domp(a) => ("domp", a.json, run_domp(a)),
        Command::Euler(a) => ("euler", a.json, run_euler(a)),
        Command::Table1(a) => ("table1", a.json, run_table1(a)),
        Command::Reduce(a) => ("reduce", a.json, run_reduce(a)),
    };
    match outcome {
        Ok(outcome) => {
            if json_mode {
                let doc = output_document(
                    name,
                    outcome.input,
                    outcome.field,
                    outcome.payload,
                    start.elapsed().as_millis(),
                );
                println!("{}", serde_json::to_string_pretty(&doc).expect("serialisable"));
            } else {
                println!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run_bold(a: &BoldArgs) -> Result<Outcome> {
    let (g, desc, name) = a.input.resolve()?;
    let n = g.vertex_count();
    if a.via != Via::Dh && n > 20 {
        bail!("the full bold complex is capped at 20 vertices ({n} given); use --via dh");
    }
    let mut payload = Map::new();
    let mut notes = Vec::new();
    let mut exit = 0;
    let summary = match a.via {
        Via::Dh => bold_homology_via(&g, a.field, BoldPath::Dominating)?,
        Via::Ch => bold_homology_via(&g, a.field, BoldPath::Full)?,
        Via::Both => {
            let dh = bold_homology_via(&g, a.field, BoldPath::Dominating)?;
            let ch = bold_homology_via(&g, a.field, BoldPath::Full)?;
            let agree = dh.nonzero() == ch.nonzero();
            payload.insert("agreement".into(), json!(agree));
            if !agree {
                notes.push(format!(
                    "MISMATCH: dominating path {} vs full path {}",
                    format_ranks(&ranks_by_degree(&dh)),
                    format_ranks(&ranks_by_degree(&ch)),
                ));
                exit = 1;
            } else {
                notes.push("both chain models agree".to_string());
            }
            dh
        }
    };
    let ranks = ranks_by_degree(&summary);
    payload.insert("ranks".into(), ranks_to_json(&ranks));
    payload.insert("via".into(), json!(a.via.name()));
    let mut text =
        format!("bold homology of {name} over {}: {}", a.field, format_ranks(&ranks));
    for note in notes {
        let _ = write!(text, "\n{note}");
    }
    Ok(Outcome { exit, payload, text, input: Some(desc), field: Some(a.field) })
}

fn run_uber(a: &UberArgs) -> Result<Outcome> {
    let (g, desc, name) = a.input.resolve()?;
    let n = g.vertex_count();
    if n > 14 && !a.force {
        bail!("überhomology scans 2^{n} colourings; {n} vertices exceed 14 (pass --force)");
    }
    let summary = uber_homology(&one_skeleton(&g), a.field)?;
    let ranks: Map<String, Value> = summary
        .ranks()
        .iter()
        .map(|(d, r)| (format!("{},{},{}", d[0], d[1], d[2]), json!(r)))
        .collect();
    let mut payload = Map::new();
    payload.insert("ranks".into(), Value::Object(ranks));
    let mut text = format!("überhomology of {name} over {}", a.field);
    if summary.ranks().is_empty() {
        text.push_str("\n  (trivial)");
    }
    for (d, r) in summary.ranks() {
        let _ = write!(text, "\n  j={} i={} k={}: rank {r}", d[0], d[1], d[2]);
    }
    Ok(Outcome { exit: 0, payload, text, input: Some(desc), field: Some(a.field) })
}

fn run_domp(a: &DompArgs) -> Result<Outcome> {
    let (g, desc, name) = a.input.resolve()?;
    let poly = if a.connected_only {
        connected_domination_polynomial(&g)?
    } else {
        domination_polynomial(&g)?
    };
    let gamma = poly.coeffs().iter().position(|&c| c != 0);
    let mut payload = Map::new();
    payload.insert("coefficients".into(), json!(poly.coeffs()));
    payload.insert("polynomial".into(), json!(poly.to_string()));
    payload.insert("connected_only".into(), json!(a.connected_only));
    payload.insert("gamma".into(), json!(gamma));
    let symbol = if a.connected_only { "D^c" } else { "D" };
    let text = format!(
        "{symbol}(x) of {name} = {poly}\ncoefficients (ascending): {:?}\ngamma = {}",
        poly.coeffs(),
        gamma.map_or("undefined (no dominating set)".to_string(), |g| g.to_string()),
    );
    Ok(Outcome { exit: 0, payload, text, input: Some(desc), field: None })
}

fn run_euler(a: &EulerArgs) -> Result<Outcome> {
    let (g, desc, name) = a.input.resolve()?;
    let n = g.vertex_count();
    if n > 26 {
        bail!("the euler check scans 2^{n} colourings; {n} vertices exceed 26");
    }
    let report = euler_check(&g, a.field);
    let mut payload = Map::new();
    payload.insert("chi".into(), json!(report.chi_bold));
    payload.insert("dc_at_minus1".into(), json!(report.dc_at_minus_one));
    payload.insert("pass".into(), json!(report.passes));
    let text = format!("euler identity on {name}: {report}");
    let exit = u8::from(!report.passes);
    Ok(Outcome { exit, payload, text, input: Some(desc), field: Some(a.field) })
}

fn run_reduce(a: &ReduceArgs) -> Result<Outcome> {
    let (g, desc, name) = a.input.resolve()?;
    let complex = dominating_complex(&g, a.field)?;
    let matching = dominating_toggle_matching(&g, 0)?;
    validate_matching(&complex, &matching)?;
    let certified = is_acyclic(&complex, &matching)?;
    let reduced = morse_reduce(&complex, &matching)?;
    let dims = |c: &uberhom::complex::GradedComplex| -> BTreeMap<i32, usize> {
        c.degrees().filter(|&d| c.dim(d) > 0).map(|d| (d[0], c.dim(d))).collect()
    };
    let generators = dims(&complex);
    let criticals = dims(&reduced);
    let mut payload = Map::new();
    payload.insert(
        "generators_by_degree".into(),
        Value::Object(generators.iter().map(|(d, c)| (d.to_string(), json!(c))).collect()),
    );
    payload.insert(
        "critical_by_degree".into(),
        Value::Object(criticals.iter().map(|(d, c)| (d.to_string(), json!(c))).collect()),
    );
    payload.insert("matched_pairs".into(), json!(matching.len()));
    payload.insert("certified".into(), json!(certified));
    let mut text = format!(
        "dominating complex of {name} over {}: {} generators, {} matched pairs \
         ({}), {} critical",
        a.field,
        complex.total_dimension(),
        matching.len(),
        if certified { "certified acyclic" } else { "NOT ACYCLIC" },
        reduced.total_dimension(),
    );
    for (d, count) in &generators {
        let _ = write!(
            text,
            "\n  degree {d}: {count} generator(s), {} critical",
            criticals.get(d).copied().unwrap_or(0),
        );
    }
    let exit = u8::from(!certified);
    Ok(Outcome { exit, payload, text, input: Some(desc), field: Some(a.field) })
}

fn row_json(outcome: &RowOutcome) -> Value {
    let as_map = |ranks: &[(i32, usize)]| -> Value {
        Value::Object(ranks.iter().map(|(d, r)| (d.to_string(), json!(r))).collect())
    };
    json!({
        "name": outcome.name,
        "expected_ranks": as_map(&outcome.expected_ranks),
        "ranks": as_map(&outcome.ranks),
        "expected_chi": outcome.expected_chi,
        "chi": outcome.chi,
        "pass": outcome.pass,
    })
}

fn run_table1(a: &Table1Args) -> Result<Outcome> {
    let selected: Vec<_> = ROWS.iter().filter(|r| matches_filter(r.name, &a.rows)).collect();
    let stretch_selected: Vec<_> = if a.stretch {
        SKIPPED.iter().filter(|r| matches_filter(r.name, &a.rows)).collect()
    } else {
        Vec::new()
    };
    if selected.is_empty() && stretch_selected.is_empty() {
        bail!("no table rows match the --rows filter {:?}", a.rows);
    }

    let mut text = String::new();
    let _ = writeln!(
        text,
        "{:<18} {:<22} {:>4}   {:<22} {:>4} {:>9}  status",
        "row", "expected", "chi", "computed", "chi", "time",
    );
    let mut all_pass = true;
    let mut rows_json = Vec::new();
    for row in &selected {
        let outcome = run_row(row);
        all_pass &= outcome.pass;
        let expected: BTreeMap<i32, usize> = outcome.expected_ranks.iter().copied().collect();
        let computed: BTreeMap<i32, usize> = outcome.ranks.iter().copied().collect();
        let _ = writeln!(
            text,
            "{:<18} {:<22} {:>4}   {:<22} {:>4} {:>8.2}s  {}",
            outcome.name,
            format_ranks(&expected),
            outcome.expected_chi,
            format_ranks(&computed),
            outcome.chi,
            outcome.millis as f64 / 1000.0,
            if outcome.pass { "pass" } else { "FAIL" },
        );
        rows_json.push(row_json(&outcome));
    }

    text.push_str("\nskipped (full homology beyond desk scale):\n");
    let mut skipped_json = Vec::new();
    for skip in SKIPPED {
        let _ = writeln!(
            text,
            "  {:<12} {} vertices; expected chi = {}  [--stretch computes chi]",
            skip.name, skip.vertex_count, skip.chi,
        );
        skipped_json.push(json!({
            "name": skip.name,
            "vertex_count": skip.vertex_count,
            "reason": "full homology beyond desk scale",
            "expected_chi": skip.chi,
        }));
    }

    let mut stretch_json = Vec::new();
    if !stretch_selected.is_empty() {
        text.push_str("\nstretch chi of skipped rows (colouring scan):\n");
        for skip in &stretch_selected {
            let outcome = run_stretch(skip);
            all_pass &= outcome.pass;
            let _ = writeln!(
                text,
                "  {:<12} chi = {} (expected {}) {:>8.2}s  {}",
                outcome.name,
                outcome.chi,
                outcome.expected_chi,
                outcome.millis as f64 / 1000.0,
                if outcome.pass { "pass" } else { "FAIL" },
            );
            stretch_json.push(json!({
                "name": outcome.name,
                "chi": outcome.chi,
                "pass": outcome.pass,
            }));
        }
    }

    let _ = write!(
        text,
        "\n{} of {} computed row(s) pass",
        rows_json.iter().filter(|r| r["pass"] == json!(true)).count(),
        rows_json.len(),
    );

    let mut payload = Map::new();
    payload.insert("rows".into(), Value::Array(rows_json));
    payload.insert("skipped".into(), Value::Array(skipped_json));
    if a.stretch {
        payload.insert("stretch".into(), Value::Array(stretch_json));
    }
    payload.insert("pass".into(), json!(all_pass));
    let exit = u8::from(!all_pass);
    Ok(Outcome { exit, payload, text, input: None, field: Some(Field::GF2) })
}
