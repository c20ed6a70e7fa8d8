//! Dense symmetric matrices, eigenvalues by cyclic Jacobi rotations, inertia
//! and membership in `S_q(G)`, plus explicit nullity certificates.

mod certificates;

pub use certificates::{
    adjacency_shift_certificates, bipartite_prism_certificate, book_certificate, kneser_certificate, srg_certificate,
    Certificate,
};

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Relative tolerance below which an eigenvalue counts as zero.
pub const DEFAULT_TOL: f64 = 1e-7;

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds from the upper triangle of `f`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Rejects non-square, asymmetric or non-finite input.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::Dimension(n, row.len()));
            }
            data.extend_from_slice(row);
        }
        if data.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        for i in 0..n {
            for j in 0..i {
                if data[i * n + j] != data[j * n + i] {
                    return Err(Error::Precondition(format!("entry ({i}, {j}) breaks symmetry")));
                }
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn adjacency(g: &Graph) -> Self {
        Self::from_fn(g.n(), |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n + j] = v;
        self.data[j * self.n + i] = v;
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(<[f64]>::to_vec).collect()
    }

    /// `a * self + shift * I`.
    pub fn scaled_shifted(&self, a: f64, shift: f64) -> Self {
        let mut m = self.clone();
        for x in &mut m.data {
            *x *= a;
        }
        for i in 0..self.n {
            m.data[i * self.n + i] += shift;
        }
        m
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Largest absolute eigenvalue.
    pub fn spectral_norm(&self) -> Result<f64> {
        Ok(eigenvalues_sym(self)?.iter().fold(0.0, |acc: f64, x| acc.max(x.abs())))
    }

    /// One row per line, comma separated, shortest round-trip float form.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x}")).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    /// Aligned text with fixed precision.
    pub fn to_text(&self, precision: usize) -> String {
        let cells: Vec<Vec<String>> =
            self.rows().iter().map(|r| r.iter().map(|x| format!("{x:.precision$}")).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        let mut out = String::new();
        for row in cells {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Inertia {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
    pub tol: f64,
}

impl Inertia {
    pub fn triple(&self) -> (usize, usize, usize) {
        (self.n_neg, self.n_zero, self.n_pos)
    }
}

/// All eigenvalues in ascending order.
pub fn eigenvalues_sym(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    if m.data.iter().any(|x| !x.is_finite()) {
        return Err(Error::NonFinite);
    }
    let n = m.n;
    let mut a = m.data.clone();
    let scale = m.frobenius_norm();
    let target = 1e-13 * scale;

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(f64::total_cmp);
    Ok(eig)
}

/// Inertia with eigenvalues in `[-tol·‖m‖, tol·‖m‖]` counted as zero, where
/// `‖m‖` is the spectral norm.
pub fn inertia(m: &SymmetricMatrix, tol: f64) -> Result<Inertia> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Tolerance(tol));
    }
    let eig = eigenvalues_sym(m)?;
    Ok(inertia_of(&eig, tol))
}

pub(crate) fn inertia_of(eig: &[f64], tol: f64) -> Inertia {
    let norm = eig.iter().fold(0.0, |acc: f64, x| acc.max(x.abs()));
    let cut = tol * norm;
    let n_neg = eig.iter().filter(|&&x| x < -cut).count();
    let n_pos = eig.iter().filter(|&&x| x > cut).count();
    Inertia { n_neg, n_zero: eig.len() - n_neg - n_pos, n_pos, tol }
}

pub fn nullity(m: &SymmetricMatrix, tol: f64) -> Result<usize> {
    Ok(inertia(m, tol)?.n_zero)
}

/// Does `m` lie in `S_q(g)`: off-diagonal support exactly the edges of `g`
/// (an entry counts as nonzero when `|x| > tol`) and exactly `q` negative
/// eigenvalues.
pub fn in_sq(m: &SymmetricMatrix, g: &Graph, q: usize, tol: f64) -> Result<bool> {
    if m.n() != g.n() {
        return Err(Error::Dimension(m.n(), g.n()));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Tolerance(tol));
    }
    for i in 0..m.n() {
        for j in i + 1..m.n() {
            if (m.get(i, j).abs() > tol) != g.has_edge(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(inertia(m, tol)?.n_neg == q)
}
