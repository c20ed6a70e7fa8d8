//! Known and conjectured `Z_q` values for the named families, checked against
//! the exact solvers.

use std::fmt;

use serde::Serialize;

use super::{generate, FamilySpec};
use crate::error::{Error, Result};
use crate::game::{z0_number, z_number, zq_number};

/// Largest vertex count the report hands to the exact game solver.
pub const GAME_LIMIT: usize = 16;

/// Which parameter an entry describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QSelector {
    Only(usize),
    AtLeast(usize),
    /// The classical zero forcing number `Z(G)`.
    Classical,
}

impl QSelector {
    /// `None` stands for `Z(G)`.
    pub fn matches(&self, q: Option<usize>) -> bool {
        match (self, q) {
            (QSelector::Only(a), Some(q)) => *a == q,
            (QSelector::AtLeast(a), Some(q)) => q >= *a,
            (QSelector::Classical, None) => true,
            _ => false,
        }
    }
}

impl fmt::Display for QSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSelector::Only(q) => write!(f, "{q}"),
            QSelector::AtLeast(q) => write!(f, ">={q}"),
            QSelector::Classical => write!(f, "Z"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Expected {
    Exact(usize),
    /// The true value is one of these.
    OneOf(Vec<usize>),
    AtMost(usize),
    /// Inclusive bounds.
    Range(usize, usize),
}

impl Expected {
    pub fn admits(&self, v: usize) -> bool {
        match self {
            Expected::Exact(x) => v == *x,
            Expected::OneOf(xs) => xs.contains(&v),
            Expected::AtMost(x) => v <= *x,
            Expected::Range(lo, hi) => (*lo..=*hi).contains(&v),
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expected::Exact(x) => write!(f, "{x}"),
            Expected::OneOf(xs) => {
                let s: Vec<String> = xs.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", s.join(","))
            }
            Expected::AtMost(x) => write!(f, "<={x}"),
            Expected::Range(lo, hi) => write!(f, "{lo}..{hi}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Proven,
    Conjecture,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub family: FamilySpec,
    pub q: QSelector,
    pub value: Expected,
    pub status: Status,
    pub anchor: &'static str,
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every registry entry that applies to `spec`.
pub fn entries_for(spec: &FamilySpec) -> Vec<KnownValue> {
    use Expected::*;
    use QSelector::*;
    use Status::*;
    let mut out = Vec::new();
    let mut add = |q, value, status, anchor| out.push(KnownValue { family: spec.clone(), q, value, status, anchor });
    match spec {
        FamilySpec::CartesianProduct(g, h) => match (g.as_ref(), h.as_ref()) {
            (FamilySpec::Complete(n), FamilySpec::Complete(2)) => {
                let anchor = "K_n x K_2: every Z_q equals n";
                add(AtLeast(0), Exact(*n), Proven, anchor);
                add(Classical, Exact(*n), Proven, anchor);
            }
            (FamilySpec::CompleteBipartite(n, m), FamilySpec::Complete(2)) if *n >= 2 && *m >= 2 => {
                add(
                    AtLeast(1),
                    Range(n + m - 1, n + m),
                    Proven,
                    "K_{n,m} x K_2: certificate bound n+m-1, layer forcing set n+m",
                );
                add(Only(0), Exact(2 * n.min(m)), Conjecture, "K_{n,m} x K_2: conjectured Z_0 = 2 min(n,m)");
                add(AtLeast(1), Exact(n + m), Conjecture, "K_{n,m} x K_2: conjectured Z_q = n+m for q >= 1");
            }
            _ => {}
        },
        FamilySpec::Ladder(n) if *n >= 3 => {
            let anchor = "P_n x K_2: every Z_q equals 2";
            add(AtLeast(0), Exact(2), Proven, anchor);
            add(Classical, Exact(2), Proven, anchor);
        }
        // C_3 x K_2 is K_3 x K_2, whose value is 3
        FamilySpec::Prism(n) if *n >= 4 => {
            let anchor = "C_n x K_2: every Z_q equals 4";
            add(AtLeast(0), Exact(4), Proven, anchor);
            add(Classical, Exact(4), Proven, anchor);
        }
        FamilySpec::Book(n) if *n >= 3 => {
            add(Only(0), Exact(2), Proven, "book B_n: Z_0 = 2");
            add(AtLeast(1), Exact(*n), Proven, "book B_n: Z_q = n for q >= 1");
            add(Classical, Exact(*n), Proven, "book B_n: Z = n");
        }
        FamilySpec::CompleteBipartite(n, m) if n + m >= 3 => {
            add(Only(0), Exact(*n.min(m)), Proven, "K_{n,m}: Z_0 = min(n,m)");
            add(AtLeast(1), Exact(n + m - 2), Proven, "K_{n,m}: Z_q = n+m-2 for q >= 1");
            add(Classical, Exact(n + m - 2), Proven, "K_{n,m}: Z = n+m-2");
        }
        FamilySpec::Petersen => {
            add(Only(0), Exact(4), Proven, "Petersen: Z_0 = 4");
            add(AtLeast(1), Exact(5), Proven, "Petersen: Z_1 = Z = 5");
            add(Classical, Exact(5), Proven, "Petersen: Z = 5");
        }
        FamilySpec::CompleteMultipartite { part, parts } if *part >= 2 && *parts >= 3 => {
            let (n, l) = (*part, *parts);
            add(Only(0), Exact(n * (l - 1)), Proven, "G_{n,l}: Z_0 = n(l-1)");
            add(Classical, Exact(n * l - 2), Proven, "G_{n,l}: Z = nl-2");
            add(AtLeast(1), Exact(n * l - 2), Conjecture, "G_{n,l}: conjectured Z_q = nl-2 for q >= 1");
        }
        FamilySpec::Kneser2(n) if *n >= 5 => {
            let n = *n;
            let z = match n {
                5 => 5,
                6 => 10,
                _ => binom2(n) - 6,
            };
            add(Classical, Exact(z), Proven, "K(n,2): Z = C(n,2)-6 for n >= 7, 5 and 10 for n = 5, 6");
            add(AtLeast(n - 1), Exact(z), Proven, "K(n,2): Z_q = Z for q >= n-1 (no n-component coclique)");
            add(Only(2), AtMost(binom2(n - 1)), Proven, "K(n,2): Z_2 <= C(n-1,2) by colouring a copy of K(n-1,2)");
            add(
                Only(1),
                Range(binom2(n - 1) - 1, binom2(n - 1)),
                Proven,
                "K(n,2): certificate -A+I gives Z_1 >= C(n-1,2)-1",
            );
            match n {
                5..=7 => add(Only(0), Exact(binom2(n) - 6), Proven, "K(n,2): Z_0 = C(n,2)-6 for n in 5..7"),
                _ => {
                    let pair = OneOf(vec![binom2(n - 1) - 1, binom2(n - 1)]);
                    for q in 0..=2 {
                        add(Only(q), pair.clone(), Proven, "K(n,2): Z_q in {C(n-1,2)-1, C(n-1,2)} for q <= 2, n >= 8");
                    }
                    add(Only(0), Exact(binom2(n - 1)), Conjecture, "K(n,2): conjectured Z_0 = C(n-1,2) for n >= 8");
                }
            }
            match n {
                5 | 6 => add(Only(1), Exact(binom2(n) - 5), Proven, "K(n,2): Z_1 = C(n,2)-5 for n = 5, 6"),
                7 => add(Only(1), Exact(15), Proven, "K(7,2): Z_1 = 15"),
                _ => add(Only(1), Exact(binom2(n - 1)), Conjecture, "K(n,2): conjectured Z_1 = Z_0 for n >= 7"),
            }
        }
        _ => {}
    }
    out
}

/// Entries for `spec` that speak about `Z_q` (`Some(q)`) or `Z` (`None`).
pub fn lookup(spec: &FamilySpec, q: Option<usize>) -> Vec<KnownValue> {
    entries_for(spec).into_iter().filter(|e| e.q.matches(q)).collect()
}

/// Registry instances with at most `max_vertices` vertices.
pub fn known_values(max_vertices: usize) -> Vec<KnownValue> {
    let cap = max_vertices.min(crate::graph::MAX_VERTICES);
    let mut specs = Vec::new();
    let prod = |g: FamilySpec| FamilySpec::CartesianProduct(Box::new(g), Box::new(FamilySpec::Complete(2)));
    for n in 1..=cap / 2 {
        specs.push(prod(FamilySpec::Complete(n)));
    }
    for n in 3..=cap / 2 {
        specs.push(FamilySpec::Ladder(n));
    }
    for n in 4..=cap / 2 {
        specs.push(FamilySpec::Prism(n));
    }
    for n in 3..=(cap / 2).saturating_sub(1) {
        specs.push(FamilySpec::Book(n));
    }
    for n in 1..=cap {
        for m in n.max(2)..=cap.saturating_sub(n) {
            specs.push(FamilySpec::CompleteBipartite(n, m));
        }
    }
    if cap >= 10 {
        specs.push(FamilySpec::Petersen);
    }
    for part in 2..=cap / 3 {
        for parts in 3..=cap / part {
            specs.push(FamilySpec::CompleteMultipartite { part, parts });
        }
    }
    for n in 5..=11 {
        if binom2(n) <= cap {
            specs.push(FamilySpec::Kneser2(n));
        }
    }
    for n in 2..=cap / 2 {
        for m in n..=(cap / 2).saturating_sub(n) {
            specs.push(prod(FamilySpec::CompleteBipartite(n, m)));
        }
    }
    specs.iter().flat_map(entries_for).collect()
}

/// One exact computation the report will make.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportTask {
    pub family: FamilySpec,
    /// `None` for `Z(G)`.
    pub q: Option<usize>,
    pub expected: Expected,
    pub anchor: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub family: String,
    pub n: usize,
    pub q: String,
    pub expected: String,
    pub computed: usize,
    pub pass: bool,
    pub anchor: &'static str,
}

/// Proven entries with at most `min(max_n, GAME_LIMIT)` vertices, expanded
/// to `q = 0..=q_max` and `Z`.
pub fn reproduce_tasks(max_n: usize, q_max: usize) -> Vec<ReportTask> {
    let mut out = Vec::new();
    for kv in known_values(max_n.min(GAME_LIMIT)) {
        if kv.status != Status::Proven {
            continue;
        }
        let qs: Vec<Option<usize>> = match kv.q {
            QSelector::Only(q) if q <= q_max => vec![Some(q)],
            QSelector::Only(_) => vec![],
            QSelector::AtLeast(q0) => (q0..=q_max).map(Some).collect(),
            QSelector::Classical => vec![None],
        };
        for q in qs {
            out.push(ReportTask { family: kv.family.clone(), q, expected: kv.value.clone(), anchor: kv.anchor });
        }
    }
    out
}

pub fn evaluate_row(task: &ReportTask) -> Result<ReportRow> {
    let g = generate(&task.family)?;
    let computed = match task.q {
        Some(q) => zq_number(&g, q).value,
        None => z_number(&g),
    };
    Ok(ReportRow {
        family: task.family.to_string(),
        n: g.n(),
        q: task.q.map_or_else(|| "Z".to_string(), |q| q.to_string()),
        expected: task.expected.to_string(),
        computed,
        pass: task.expected.admits(computed),
        anchor: task.anchor,
    })
}

/// Sequential reproduction of every feasible proven entry.
pub fn reproduce_report(max_n: usize, q_max: usize) -> Result<Vec<ReportRow>> {
    reproduce_tasks(max_n, q_max).iter().map(evaluate_row).collect()
}

/// Open formulas that can be compared against exact values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    /// `K_{n,m} □ K_2`: `Z_0 = 2 min(n,m)`, `Z_q = n+m` for `q ≥ 1`.
    BipartitePrism { n: usize, m: usize },
    /// `G_{n,ℓ}`: `Z_0 = n(ℓ-1)`, `Z_q = nℓ-2` for `q ≥ 1`.
    Multipartite { part: usize, parts: usize },
    /// `K(n,2)`: `Z_0 = C(n,2)-6` for `n ≤ 7`, `C(n-1,2)` beyond.
    KneserZ0 { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeRow {
    pub q: usize,
    pub conjectured: usize,
    pub computed: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub instance: String,
    pub rows: Vec<ProbeRow>,
    pub all_agree: bool,
}

/// Exact values next to the conjectured ones. Reports only.
pub fn probe_conjecture(c: Conjecture) -> Result<ProbeReport> {
    let (spec, claims): (FamilySpec, Vec<(usize, usize)>) = match c {
        Conjecture::BipartitePrism { n, m } => (
            FamilySpec::CartesianProduct(
                Box::new(FamilySpec::CompleteBipartite(n, m)),
                Box::new(FamilySpec::Complete(2)),
            ),
            vec![(0, 2 * n.min(m)), (1, n + m), (2, n + m)],
        ),
        Conjecture::Multipartite { part, parts } => (
            FamilySpec::CompleteMultipartite { part, parts },
            vec![(0, part * (parts - 1)), (1, (part * parts).saturating_sub(2)), (2, (part * parts).saturating_sub(2))],
        ),
        Conjecture::KneserZ0 { n } => {
            let v = if n <= 7 { binom2(n).saturating_sub(6) } else { binom2(n - 1) };
            (FamilySpec::Kneser2(n), vec![(0, v)])
        }
    };
    let g = generate(&spec)?;
    let psd_only = matches!(c, Conjecture::KneserZ0 { .. });
    let limit = if psd_only { 21 } else { GAME_LIMIT };
    if g.n() > limit {
        return Err(Error::Infeasible(format!("{spec} has {} vertices, limit {limit}", g.n())));
    }
    let rows: Vec<ProbeRow> = claims
        .into_iter()
        .map(|(q, conjectured)| {
            let computed = if psd_only { z0_number(&g) } else { zq_number(&g, q).value };
            ProbeRow { q, conjectured, computed, agrees: computed == conjectured }
        })
        .collect();
    let all_agree = rows.iter().all(|r| r.agrees);
    Ok(ProbeReport { instance: spec.to_string(), rows, all_agree })
}
