//! The `zq` command line. [`run`] does all the work so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 infeasible computation (size guard, memo cap,
//! failed reproduction row), 2 usage or input error.

mod args;

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use clap::Parser;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use zq_core::contraction::{bipartite_contraction, contracted_forcing_move, has_forcing_move, max_matching};
use zq_core::families::{
    entries_for, evaluate_row, generate, lookup, probe_conjecture, reproduce_tasks, Conjecture, FamilySpec,
    ProbeReport, QSelector, ReportRow,
};
use zq_core::game::{z_number_with, zq_number_with, SolveOptions};
use zq_core::graph::{ccr_closure, parse_edge_list, parse_graph6, Graph, VertexSet};
use zq_core::spectral::{
    bipartite_prism_certificate, book_certificate, in_sq, inertia, kneser_certificate, srg_certificate,
    SymmetricMatrix, DEFAULT_TOL,
};
use zq_core::threshold::{build_threshold_graph, certificate_matrix, z_classical, zq_formula, CreationSequence};
use zq_core::Error;

pub use args::{Cli, Command, Format, GraphInput};

/// Graphs above this order need `--force` for an exact solve.
pub const SIZE_GUARD: usize = 16;

/// Rough memo cost per state, used to turn `ZQ_CACHE_MB` into an entry cap.
const BYTES_PER_STATE: usize = 64;

enum Failure {
    Usage(String),
    Infeasible(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::MemoOverflow(_) | Error::Infeasible(_) => Failure::Infeasible(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

/// Runs the command line `argv` (program name first). Output goes to `out`,
/// diagnostics to `err`; `stdin` is read only for `--graph6 -`.
pub fn run<I, T>(argv: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, stdin) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Infeasible(msg)) => {
            let _ = writeln!(err, "infeasible: {msg}");
            1
        }
    }
}

fn dispatch(command: Command, stdin: &mut dyn BufRead) -> Outcome {
    match command {
        Command::Compute { input, q, chain, trace, force, format } => {
            let (g, label) = read_graph(&input, stdin)?;
            compute(&g, &label, q, chain, trace, force, format)
        }
        Command::Threshold { seq, q, verify, format } => threshold(&seq, q, verify, format),
        Command::Contract { input, coloured, q, format } => {
            let (g, label) = read_graph(&input, stdin)?;
            contract(&g, &label, &coloured, q, format)
        }
        Command::Certify { name, n, m, seq, q, format } => certify(&name, n, m, seq.as_deref(), q, format),
        Command::Family { name, n, m, q, chain, force, format } => {
            let params: Vec<usize> = [n, m].into_iter().flatten().collect();
            let spec = FamilySpec::from_name(&name, &params)?;
            let g = generate(&spec)?;
            let mut text = compute(&g, &spec.to_string(), q, chain, false, force, format)?;
            let entries = if chain.is_some() { entries_for(&spec) } else { lookup(&spec, q) };
            if format == Format::Text {
                for kv in &entries {
                    let _ = writeln!(text, "registry {}: {} [{:?}] {}", selector(kv.q), kv.value, kv.status, kv.anchor);
                }
            }
            if format == Format::Json {
                let mut v: Value = serde_json::from_str(&text).expect("own output");
                let anchors: Vec<&str> = entries.iter().map(|kv| kv.anchor).collect();
                v["anchors"] = json!(anchors);
                text = to_json(&v);
            }
            Ok(text)
        }
        Command::Reproduce { max_n, q_max, jobs, format } => reproduce(max_n, q_max, jobs, format),
        Command::Probe { name, n, m, jobs, format } => probe(name.as_deref(), n, m, jobs, format),
    }
}

fn read_graph(input: &GraphInput, stdin: &mut dyn BufRead) -> Result<(Graph, String), Failure> {
    if let Some(text) = &input.graph6 {
        let text = if text == "-" {
            let mut line = String::new();
            stdin.read_line(&mut line).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
            line.trim().to_string()
        } else {
            text.clone()
        };
        let g = parse_graph6(&text)?;
        return Ok((g, text));
    }
    if let Some(path) = &input.edges_file {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let g = parse_edge_list(&text)?;
        return Ok((g, path.display().to_string()));
    }
    let seq: CreationSequence = input.seq.as_deref().unwrap_or_default().parse()?;
    Ok((build_threshold_graph(&seq)?, seq.to_string()))
}

fn memo_limit() -> Result<Option<usize>, Failure> {
    match std::env::var("ZQ_CACHE_MB") {
        Err(_) => Ok(None),
        Ok(v) => {
            let mb: usize =
                v.trim().parse().map_err(|_| Failure::Usage(format!("ZQ_CACHE_MB={v:?} is not a count")))?;
            Ok(Some((mb << 20) / BYTES_PER_STATE))
        }
    }
}

fn guard(g: &Graph, force: bool) -> Result<(), Failure> {
    if g.n() > SIZE_GUARD && !force {
        let states = 1u128 << g.n();
        return Err(Failure::Infeasible(format!(
            "{} vertices: the memo table may need up to 2^{} = {states} states; pass --force to solve anyway",
            g.n(),
            g.n()
        )));
    }
    Ok(())
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

fn selector(q: QSelector) -> String {
    match q {
        QSelector::Only(q) => format!("q = {q}"),
        QSelector::AtLeast(q) => format!("q >= {q}"),
        QSelector::Classical => "Z".into(),
    }
}

fn q_label(q: Option<usize>) -> String {
    q.map_or_else(|| "Z".into(), |q| q.to_string())
}

fn compute(
    g: &Graph,
    label: &str,
    q: Option<usize>,
    chain: Option<usize>,
    trace: bool,
    force: bool,
    format: Format,
) -> Outcome {
    guard(g, force)?;
    let limit = memo_limit()?;
    let opts = SolveOptions { memo_limit: limit, ..SolveOptions::default() };
    if let Some(q_max) = chain {
        let mut values = Vec::with_capacity(q_max + 2);
        for q in 0..=q_max {
            values.push(zq_number_with(g, q, opts)?.value);
        }
        values.push(z_number_with(g, limit)?.0);
        return Ok(match format {
            Format::Json => to_json(&json!({ "input": label, "q": format!("0..={q_max},Z"), "value": values })),
            Format::Csv => {
                let mut s = String::from("input,q,value\n");
                for (i, v) in values.iter().enumerate() {
                    let q = if i <= q_max { i.to_string() } else { "Z".into() };
                    let _ = writeln!(s, "{label},{q},{v}");
                }
                s
            }
            Format::Text => format!("{label}: Z_0..Z_{q_max}, Z = {values:?}\n"),
        });
    }
    let (value, strategy, tree) = match q {
        Some(q) => {
            let res = zq_number_with(g, q, opts)?;
            let strategy = trace.then(|| res.strategy(g));
            let tree = trace.then(|| res.trace(g));
            (res.value, strategy, tree)
        }
        None => {
            let (value, set) = z_number_with(g, limit)?;
            let tree = trace.then(|| format!("spend {}\n", set));
            (value, None, tree)
        }
    };
    Ok(match format {
        Format::Json => {
            let mut v = json!({ "input": label, "q": q, "value": value });
            if trace {
                v["strategy"] = match &strategy {
                    Some(s) => serde_json::to_value(s).expect("serialisable"),
                    None => json!(tree),
                };
            }
            to_json(&v)
        }
        Format::Csv => format!("input,q,value\n{label},{},{value}\n", q_label(q)),
        Format::Text => {
            let name = q.map_or_else(|| "Z".into(), |q| format!("Z_{q}"));
            let mut s = format!("{name}({label}) = {value}\n");
            if let Some(tree) = tree {
                s.push_str(&tree);
            }
            s
        }
    })
}

#[derive(Serialize)]
struct ThresholdRow {
    q: usize,
    formula: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    game: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pass: Option<bool>,
}

fn threshold(text: &str, q: Option<usize>, verify: bool, format: Format) -> Outcome {
    let seq: CreationSequence = text.parse()?;
    let qs: Vec<usize> = match q {
        Some(q) => vec![q],
        None => (0..=seq.s()).collect(),
    };
    let g = if verify { Some(build_threshold_graph(&seq)?) } else { None };
    if let Some(g) = &g {
        guard(g, false)?;
    }
    let opts = SolveOptions { memo_limit: memo_limit()?, ..SolveOptions::default() };
    let mut rows = Vec::new();
    for q in qs {
        let formula = zq_formula(&seq, q);
        let game = match &g {
            Some(g) => Some(zq_number_with(g, q, opts)?.value),
            None => None,
        };
        rows.push(ThresholdRow { q, formula, game, pass: game.map(|v| v == formula) });
    }
    let z = z_classical(&seq);
    let failed = rows.iter().any(|r| r.pass == Some(false));
    let text = match format {
        Format::Json => to_json(&json!({
            "input": seq.to_string(),
            "n": seq.n(),
            "s": seq.s(),
            "z": z,
            "q": q,
            "value": if q.is_some() { json!(rows[0].formula) } else { json!(rows.iter().map(|r| r.formula).collect::<Vec<_>>()) },
            "rows": rows,
        })),
        Format::Csv => {
            let mut s = String::from("input,q,formula,game,pass\n");
            for r in &rows {
                let game = r.game.map(|v| v.to_string()).unwrap_or_default();
                let pass = r.pass.map(|p| if p { "PASS" } else { "FAIL" }).unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{game},{pass}", seq.to_bit_string(), r.q, r.formula);
            }
            s
        }
        Format::Text => {
            let mut s = format!("{seq} (n = {}, s = {}, Z = {z})\n", seq.n(), seq.s());
            for r in &rows {
                let _ = write!(s, "Z_{} = {}", r.q, r.formula);
                if let (Some(game), Some(pass)) = (r.game, r.pass) {
                    let _ = write!(s, "  game {game} {}", if pass { "PASS" } else { "FAIL" });
                }
                s.push('\n');
            }
            s
        }
    };
    if failed {
        return Err(Failure::Infeasible(format!("formula and game disagree\n{text}")));
    }
    Ok(text)
}

fn contract(g: &Graph, label: &str, coloured: &[usize], q: usize, format: Format) -> Outcome {
    if let Some(&v) = coloured.iter().find(|&&v| v >= g.n()) {
        return Err(Failure::Usage(format!("vertex {v} outside 0..{}", g.n())));
    }
    let b = VertexSet::from_vertices(coloured.iter().copied());
    let cb = bipartite_contraction(g, b)?;
    let matching = max_matching(&cb);
    let closed = ccr_closure(g, b) == b;
    let move_in_g = if closed { Some(has_forcing_move(g, b, q)?) } else { None };
    let move_in_contraction = contracted_forcing_move(&cb, q);
    Ok(match format {
        Format::Json => to_json(&json!({
            "input": label,
            "q": q,
            "coloured_nodes": cb.coloured_nodes,
            "uncoloured_nodes": cb.uncoloured_nodes,
            "multiplicity": cb.multiplicity,
            "max_matching": matching,
            "closed": closed,
            "forcing_move": move_in_g,
            "contracted_forcing_move": move_in_contraction,
        })),
        Format::Csv => {
            let mut s = String::from("coloured_node,uncoloured_node,multiplicity\n");
            for (i, row) in cb.multiplicity.iter().enumerate() {
                for (j, m) in row.iter().enumerate().filter(|(_, &m)| m > 0) {
                    let _ = writeln!(s, "{},{},{m}", cb.coloured_nodes[i], cb.uncoloured_nodes[j]);
                }
            }
            s
        }
        Format::Text => {
            let mut s = format!("{label} coloured {b}\n");
            let names = |v: &[VertexSet]| v.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ");
            let _ = writeln!(s, "coloured nodes:   {}", names(&cb.coloured_nodes));
            let _ = writeln!(s, "uncoloured nodes: {}", names(&cb.uncoloured_nodes));
            for (i, row) in cb.multiplicity.iter().enumerate() {
                let _ = writeln!(s, "  {}: {row:?}", cb.coloured_nodes[i]);
            }
            let _ = writeln!(s, "maximum matching: {matching}");
            match move_in_g {
                Some(m) => {
                    let _ = writeln!(s, "forcing move with q = {q}: {m}");
                }
                None => s.push_str("colouring is not closed; free forces remain\n"),
            }
            let _ = writeln!(s, "forcing move on the contraction with q = {q}: {move_in_contraction}");
            s
        }
    })
}

fn certify(
    name: &str,
    n: Option<usize>,
    m: Option<usize>,
    seq: Option<&str>,
    q: Option<usize>,
    format: Format,
) -> Outcome {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Failure::Usage(format!("{name} needs --{flag}")));
    let (g, matrix, q) = match name {
        "book" => {
            let n = need(n, "n")?;
            (generate(&FamilySpec::Book(n))?, book_certificate(n)?, 1)
        }
        "bipartite_prism" => {
            let (n, m) = (need(n, "n")?, need(m, "m")?);
            (generate(&FamilySpec::from_name(name, &[n, m])?)?, bipartite_prism_certificate(n, m)?, 1)
        }
        "kneser" => {
            let n = need(n, "n")?;
            (generate(&FamilySpec::Kneser2(n))?, kneser_certificate(n)?, 1)
        }
        "petersen" => {
            let g = generate(&FamilySpec::Petersen)?;
            let (psd, q1) = srg_certificate(&g, 1.0, -2.0)?;
            match q.unwrap_or(1) {
                0 => (g, psd, 0),
                1 => (g, q1, 1),
                q => return Err(Failure::Usage(format!("petersen certificates exist for q = 0, 1, not {q}"))),
            }
        }
        "threshold" => {
            let seq: CreationSequence = seq.ok_or_else(|| Failure::Usage("threshold needs --seq".into()))?.parse()?;
            let q = need(q, "q")?;
            (build_threshold_graph(&seq)?, certificate_matrix(&seq, q)?, q)
        }
        _ => return Err(Failure::Usage(format!("unknown certificate {name:?}"))),
    };
    let inr = inertia(&matrix, DEFAULT_TOL)?;
    let valid = in_sq(&matrix, &g, q, DEFAULT_TOL)?;
    Ok(render_matrix(name, &matrix, q, inr.triple(), valid, format))
}

fn render_matrix(
    name: &str,
    m: &SymmetricMatrix,
    q: usize,
    inr: (usize, usize, usize),
    valid: bool,
    format: Format,
) -> String {
    match format {
        Format::Json => to_json(&json!({
            "input": name,
            "q": q,
            "value": inr.1,
            "inertia": [inr.0, inr.1, inr.2],
            "in_sq": valid,
            "matrix": m.rows(),
        })),
        Format::Csv => m.to_csv(),
        Format::Text => {
            format!("{name}: q = {q}, inertia (neg, zero, pos) = {inr:?}, in S_q: {valid}\n{}", m.to_text(6))
        }
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))
}

fn reproduce(max_n: usize, q_max: usize, jobs: usize, format: Format) -> Outcome {
    let tasks = reproduce_tasks(max_n, q_max);
    let rows: Vec<ReportRow> =
        pool(jobs)?.install(|| tasks.par_iter().map(evaluate_row).collect::<zq_core::Result<_>>())?;
    let failed = rows.iter().filter(|r| !r.pass).count();
    let text = match format {
        Format::Json => to_json(&json!(rows)),
        Format::Csv => {
            let mut s = String::from("family,n,q,expected,computed,status,anchor\n");
            for r in &rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "\"{}\",{},{},\"{}\",{},{status},\"{}\"",
                    r.family, r.n, r.q, r.expected, r.computed, r.anchor
                );
            }
            s
        }
        Format::Text => {
            let width = rows.iter().map(|r| r.family.len()).max().unwrap_or(0);
            let mut s = String::new();
            for r in &rows {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    s,
                    "{status}  {:<width$}  n={:<3} q={:<2} expected {:<12} computed {:<3} {}",
                    r.family, r.n, r.q, r.expected, r.computed, r.anchor
                );
            }
            let _ = writeln!(s, "{} rows, {failed} failed", rows.len());
            s
        }
    };
    if failed > 0 {
        return Err(Failure::Infeasible(format!("{failed} registry rows failed\n{text}")));
    }
    Ok(text)
}

fn probe(name: Option<&str>, n: Option<usize>, m: Option<usize>, jobs: usize, format: Format) -> Outcome {
    let need = |x: Option<usize>, flag: &str| x.ok_or_else(|| Failure::Usage(format!("probe needs --{flag}")));
    let conjectures = match name {
        None => vec![
            Conjecture::BipartitePrism { n: 2, m: 2 },
            Conjecture::BipartitePrism { n: 2, m: 3 },
            Conjecture::Multipartite { part: 2, parts: 3 },
            Conjecture::KneserZ0 { n: 5 },
        ],
        Some("bipartite_prism") => vec![Conjecture::BipartitePrism { n: need(n, "n")?, m: need(m, "m")? }],
        Some("multipartite") => vec![Conjecture::Multipartite { part: need(n, "n")?, parts: need(m, "m")? }],
        Some("kneser_z0") => vec![Conjecture::KneserZ0 { n: need(n, "n")? }],
        Some(other) => return Err(Failure::Usage(format!("unknown conjecture {other:?}"))),
    };
    let reports: Vec<ProbeReport> =
        pool(jobs)?.install(|| conjectures.par_iter().map(|&c| probe_conjecture(c)).collect::<zq_core::Result<_>>())?;
    Ok(match format {
        Format::Json => to_json(&json!(reports)),
        Format::Csv => {
            let mut s = String::from("instance,q,conjectured,computed,agrees\n");
            for r in &reports {
                for row in &r.rows {
                    let _ =
                        writeln!(s, "\"{}\",{},{},{},{}", r.instance, row.q, row.conjectured, row.computed, row.agrees);
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{}: {}", r.instance, if r.all_agree { "agrees" } else { "disagrees" });
                for row in &r.rows {
                    let _ = writeln!(s, "  q={} conjectured {} exact {}", row.q, row.conjectured, row.computed);
                }
            }
            s
        }
    })
}
