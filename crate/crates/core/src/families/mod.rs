//! Named graph families, a registry of known `Z_q` values, reproduction and
//! conjecture-probe reports, and the Kneser component-structure check.

mod kneser;
mod registry;

pub use kneser::{common_element, kneser_pairs, kneser_structure_check, KneserReport};
pub use registry::{
    entries_for, evaluate_row, known_values, lookup, probe_conjecture, reproduce_report, reproduce_tasks, Conjecture,
    Expected, KnownValue, ProbeReport, ProbeRow, QSelector, ReportRow, ReportTask, Status, GAME_LIMIT,
};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A named graph family with its parameters.
///
/// Labelling: `Star(n)` has centre 0 and leaves `1..=n`;
/// `CompleteBipartite(n, m)` puts the `n`-side first; multipartite parts are
/// consecutive blocks. In a product `G □ H` vertex `(u, x)` gets index
/// `x·|G| + u`, so each copy of `G` is a contiguous layer. `Kneser2(n)`
/// vertices are the 2-subsets of `{1..n}` in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    /// `ℓ` parts of `n` vertices each.
    CompleteMultipartite {
        part: usize,
        parts: usize,
    },
    CartesianProduct(Box<FamilySpec>, Box<FamilySpec>),
    Kneser2(usize),
    Petersen,
    /// `K_{1,n} □ K_2`.
    Book(usize),
    /// `P_n □ K_2`.
    Ladder(usize),
    /// `C_n □ K_2`.
    Prism(usize),
}

impl FamilySpec {
    /// Parses a family name with positional parameters, as used on the
    /// command line. `bipartite_prism n m` is `K_{n,m} □ K_2`.
    pub fn from_name(name: &str, params: &[usize]) -> Result<Self> {
        let arity = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Precondition(format!("{name} takes {k} parameter(s), got {}", params.len())))
            }
        };
        let spec = match name {
            "path" => arity(1).map(|_| FamilySpec::Path(params[0])),
            "cycle" => arity(1).map(|_| FamilySpec::Cycle(params[0])),
            "complete" => arity(1).map(|_| FamilySpec::Complete(params[0])),
            "star" => arity(1).map(|_| FamilySpec::Star(params[0])),
            "complete_bipartite" => arity(2).map(|_| FamilySpec::CompleteBipartite(params[0], params[1])),
            "complete_multipartite" | "multipartite" => {
                arity(2).map(|_| FamilySpec::CompleteMultipartite { part: params[0], parts: params[1] })
            }
            "kneser2" | "kneser" => arity(1).map(|_| FamilySpec::Kneser2(params[0])),
            "petersen" => arity(0).map(|_| FamilySpec::Petersen),
            "book" => arity(1).map(|_| FamilySpec::Book(params[0])),
            "ladder" => arity(1).map(|_| FamilySpec::Ladder(params[0])),
            "prism" => arity(1).map(|_| FamilySpec::Prism(params[0])),
            "complete_prism" => arity(1).map(|_| {
                FamilySpec::CartesianProduct(
                    Box::new(FamilySpec::Complete(params[0])),
                    Box::new(FamilySpec::Complete(2)),
                )
            }),
            "bipartite_prism" => arity(2).map(|_| {
                FamilySpec::CartesianProduct(
                    Box::new(FamilySpec::CompleteBipartite(params[0], params[1])),
                    Box::new(FamilySpec::Complete(2)),
                )
            }),
            _ => Err(Error::Precondition(format!("unknown family {name:?}"))),
        }?;
        spec.validate()?;
        Ok(spec)
    }

    /// Number of vertices (saturating for absurd parameters).
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::Star(n) => n.saturating_add(1),
            FamilySpec::CompleteBipartite(n, m) => n.saturating_add(*m),
            FamilySpec::CompleteMultipartite { part, parts } => part.saturating_mul(*parts),
            FamilySpec::CartesianProduct(g, h) => g.order().saturating_mul(h.order()),
            FamilySpec::Kneser2(n) => n.saturating_mul(n.saturating_sub(1)) / 2,
            FamilySpec::Petersen => 10,
            FamilySpec::Book(n) => n.saturating_add(1).saturating_mul(2),
            FamilySpec::Ladder(n) | FamilySpec::Prism(n) => n.saturating_mul(2),
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::Precondition(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path(0) | FamilySpec::Complete(0) => return bad("needs at least one vertex"),
            FamilySpec::Cycle(n) if *n < 3 => return bad("cycles need n >= 3"),
            FamilySpec::Prism(n) if *n < 3 => return bad("prisms need n >= 3"),
            FamilySpec::Star(0) | FamilySpec::Book(0) | FamilySpec::Ladder(0) => return bad("needs n >= 1"),
            FamilySpec::CompleteBipartite(n, m) if *n == 0 || *m == 0 => return bad("parts must be nonempty"),
            FamilySpec::CompleteMultipartite { part, parts } if *part == 0 || *parts == 0 => {
                return bad("parts must be nonempty")
            }
            FamilySpec::Kneser2(n) if *n < 2 => return bad("needs n >= 2"),
            FamilySpec::CartesianProduct(g, h) => {
                g.validate()?;
                h.validate()?;
            }
            _ => {}
        }
        let n = self.order();
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(())
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Star(n) => write!(f, "star({n})"),
            FamilySpec::CompleteBipartite(n, m) => write!(f, "complete_bipartite({n},{m})"),
            FamilySpec::CompleteMultipartite { part, parts } => {
                write!(f, "complete_multipartite({part},{parts})")
            }
            FamilySpec::CartesianProduct(g, h) => write!(f, "{g} x {h}"),
            FamilySpec::Kneser2(n) => write!(f, "kneser2({n})"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Book(n) => write!(f, "book({n})"),
            FamilySpec::Ladder(n) => write!(f, "ladder({n})"),
            FamilySpec::Prism(n) => write!(f, "prism({n})"),
        }
    }
}

/// Builds the graph with the labelling documented on [`FamilySpec`].
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match spec {
        FamilySpec::Path(n) => {
            let e: Vec<_> = (1..*n).map(|i| (i - 1, i)).collect();
            Graph::new(*n, &e)
        }
        FamilySpec::Cycle(n) => {
            let e: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(*n, &e)
        }
        FamilySpec::Complete(n) => Graph::from_fn(*n, |_, _| true),
        FamilySpec::Star(n) => {
            let e: Vec<_> = (1..=*n).map(|i| (0, i)).collect();
            Graph::new(n + 1, &e)
        }
        FamilySpec::CompleteBipartite(n, m) => Graph::from_fn(n + m, |i, j| (i < *n) != (j < *n)),
        FamilySpec::CompleteMultipartite { part, parts } => Graph::from_fn(part * parts, |i, j| i / part != j / part),
        FamilySpec::CartesianProduct(g, h) => cartesian_product(&generate(g)?, &generate(h)?),
        FamilySpec::Kneser2(n) => {
            let pairs = kneser_pairs(*n);
            Graph::from_fn(pairs.len(), |i, j| {
                let (a, b) = pairs[i];
                let (c, d) = pairs[j];
                a != c && a != d && b != c && b != d
            })
        }
        FamilySpec::Petersen => {
            let mut e = Vec::new();
            for i in 0..5 {
                e.push((i, (i + 1) % 5));
                e.push((i, i + 5));
                e.push((5 + i, 5 + (i + 2) % 5));
            }
            Graph::new(10, &e)
        }
        FamilySpec::Book(n) => cartesian_product(&generate(&FamilySpec::Star(*n))?, &k2()),
        FamilySpec::Ladder(n) => cartesian_product(&generate(&FamilySpec::Path(*n))?, &k2()),
        FamilySpec::Prism(n) => cartesian_product(&generate(&FamilySpec::Cycle(*n))?, &k2()),
    }
}

fn k2() -> Graph {
    Graph::new(2, &[(0, 1)]).expect("K_2")
}

/// `G □ H`: `(u, x) ~ (v, y)` iff `u = v` and `xy ∈ E(H)`, or `x = y` and
/// `uv ∈ E(G)`. Vertex `(u, x)` has index `x·|G| + u`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let ng = g.n();
    let n = ng * h.n();
    if n > MAX_VERTICES {
        return Err(Error::VertexCount(n));
    }
    Graph::from_fn(n, |i, j| {
        let (u, x) = (i % ng, i / ng);
        let (v, y) = (j % ng, j / ng);
        (u == v && h.has_edge(x, y)) || (x == y && g.has_edge(u, v))
    })
}
