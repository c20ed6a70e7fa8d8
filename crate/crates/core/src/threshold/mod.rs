//! Connected threshold graphs: creation sequences, the closed form for
//! `Z_q`, the classical `Z` formulas and explicit matrices attaining them.

mod certificate;

pub use certificate::certificate_matrix;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

/// A 0/1 creation sequence that starts with 0 and ends with 1, stored as
/// runs `(k_j, t_j)`: `k_j` isolated vertices followed by `t_j` dominating
/// ones.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CreationSequence {
    runs: Vec<(usize, usize)>,
}

impl CreationSequence {
    pub fn from_runs(runs: Vec<(usize, usize)>) -> Result<Self> {
        if runs.is_empty() {
            return Err(Error::CreationSequence("empty sequence".into()));
        }
        if runs.iter().any(|&(k, t)| k == 0 || t == 0) {
            return Err(Error::CreationSequence("runs must be nonempty".into()));
        }
        Ok(CreationSequence { runs })
    }

    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        match (bits.first(), bits.last()) {
            (None, _) => return Err(Error::CreationSequence("empty sequence".into())),
            (Some(true), _) => return Err(Error::CreationSequence("must start with 0 (an isolated vertex)".into())),
            (_, Some(false)) => {
                return Err(Error::CreationSequence("must end with 1 (the graph must be connected)".into()))
            }
            _ => {}
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for (i, &b) in bits.iter().enumerate() {
            match (b, runs.last_mut()) {
                (false, Some(last)) if !bits[i - 1] => last.0 += 1,
                (false, _) => runs.push((1, 0)),
                (true, Some(last)) => last.1 += 1,
                (true, None) => unreachable!("first bit is 0"),
            }
        }
        Ok(CreationSequence { runs })
    }

    /// Every connected sequence on `n ≥ 2` vertices, in lexicographic order
    /// of the bit strings.
    pub fn all_connected(n: usize) -> Vec<CreationSequence> {
        if n < 2 {
            return Vec::new();
        }
        (0u64..1 << (n - 2))
            .map(|mid| {
                let mut bits = vec![false; n];
                for i in 0..n - 2 {
                    bits[i + 1] = (mid >> (n - 3 - i)) & 1 == 1;
                }
                bits[n - 1] = true;
                CreationSequence::from_bits(&bits).expect("valid by construction")
            })
            .collect()
    }

    pub fn runs(&self) -> &[(usize, usize)] {
        &self.runs
    }

    /// Number of runs `s`.
    pub fn s(&self) -> usize {
        self.runs.len()
    }

    pub fn n(&self) -> usize {
        self.runs.iter().map(|(k, t)| k + t).sum()
    }

    /// Number of dominating vertices.
    pub fn trace(&self) -> usize {
        self.runs.iter().map(|(_, t)| t).sum()
    }

    pub fn bits(&self) -> Vec<bool> {
        let mut out = Vec::with_capacity(self.n());
        for &(k, t) in &self.runs {
            out.extend(std::iter::repeat_n(false, k));
            out.extend(std::iter::repeat_n(true, t));
        }
        out
    }

    pub fn to_bit_string(&self) -> String {
        self.bits().iter().map(|&b| if b { '1' } else { '0' }).collect()
    }

    pub fn stats(&self) -> ThresholdStats {
        let bits = self.bits();
        let s0 = bits.windows(2).filter(|w| w[0] && w[1]).count();
        let s1 = usize::from(bits.len() >= 2 && !bits[0] && bits[1])
            + bits.windows(3).filter(|w| w[0] && !w[1] && w[2]).count();
        ThresholdStats {
            n: bits.len(),
            s: self.s(),
            trace: self.trace(),
            a: self.runs.iter().map(|&(k, _)| k.saturating_sub(2)).collect(),
            p: self.runs.iter().filter(|&&(k, _)| k >= 2).count(),
            s0,
            s1,
        }
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    /// Accepts a raw bit string (`"00100011"`) or run-length tokens
    /// (`"0^3 1^2 0 1"`), separated by whitespace or commas, optionally in
    /// parentheses.
    fn from_str(text: &str) -> Result<Self> {
        let body = text.trim().trim_start_matches('(').trim_end_matches(')');
        let mut bits = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let (digit, count) = match token.split_once('^') {
                Some((d, c)) => {
                    let count: usize = c
                        .trim_matches(|c| c == '(' || c == ')' || c == '{' || c == '}')
                        .parse()
                        .map_err(|_| Error::CreationSequence(format!("bad run length in {token:?}")))?;
                    if count == 0 {
                        return Err(Error::CreationSequence(format!("zero run length in {token:?}")));
                    }
                    (d, count)
                }
                None => (token, 1),
            };
            if digit.is_empty() || !digit.chars().all(|c| c == '0' || c == '1') {
                return Err(Error::CreationSequence(format!("illegal character in {token:?}")));
            }
            if count > 1 && digit.len() != 1 {
                return Err(Error::CreationSequence(format!("run length on a multi-digit token {token:?}")));
            }
            for _ in 0..count {
                bits.extend(digit.chars().map(|c| c == '1'));
            }
        }
        CreationSequence::from_bits(&bits)
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .runs
            .iter()
            .flat_map(|&(k, t)| [(0, k), (1, t)])
            .map(|(d, c)| if c == 1 { d.to_string() } else { format!("{d}^{c}") })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Parameters entering the formulas.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThresholdStats {
    pub n: usize,
    pub s: usize,
    /// `T`, the number of dominating vertices.
    pub trace: usize,
    /// `a_j = max(k_j - 2, 0)`.
    pub a: Vec<usize>,
    /// Runs with `k_j ≥ 2`.
    pub p: usize,
    /// Occurrences of `11`.
    pub s0: usize,
    /// A leading `01` plus occurrences of `101`.
    pub s1: usize,
}

pub fn parse_creation_sequence(text: &str) -> Result<CreationSequence> {
    text.parse()
}

/// Vertex `i` is adjacent to every `j < i` iff bit `i` is 1.
pub fn build_threshold_graph(seq: &CreationSequence) -> Result<Graph> {
    let bits = seq.bits();
    if bits.len() > MAX_VERTICES {
        return Err(Error::VertexCount(bits.len()));
    }
    Graph::from_fn(bits.len(), |i, j| bits[i.max(j)])
}

/// `T` plus the `min(q, s)` largest `a_j`. Values of `q` beyond `s` give the
/// `q = s` value, which is `Z(G)`.
pub fn zq_formula(seq: &CreationSequence, q: usize) -> usize {
    let mut a = seq.stats().a;
    a.sort_unstable_by(|x, y| y.cmp(x));
    seq.trace() + a.iter().take(q.min(seq.s())).sum::<usize>()
}

/// `Z(G)` by both `n - 2T + s_1 + 2 s_0` and `n - s - p`.
///
/// # Panics
/// If the two expressions disagree.
pub fn z_classical(seq: &CreationSequence) -> usize {
    let st = seq.stats();
    let by_patterns = st.n + st.s1 + 2 * st.s0 - 2 * st.trace;
    let by_runs = st.n - st.s - st.p;
    assert_eq!(by_patterns, by_runs, "classical formulas disagree on {seq}");
    by_runs
}
