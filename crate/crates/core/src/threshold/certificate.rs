//! Matrices in `S_q(G)` for a connected threshold graph `G` whose nullity is
//! the closed-form value, built by peeling off the last run.
//!
//! Every matrix produced here has a nonzero diagonal entry at the last
//! (universal) vertex, which is what lets the next step attach to it.

use super::{zq_formula, CreationSequence};
use crate::error::{Error, Result};
use crate::spectral::SymmetricMatrix;

/// A matrix in `S_q(G)` with nullity `zq_formula(seq, q)`, for `0 ≤ q ≤ s`.
/// Vertices are numbered in creation order.
pub fn certificate_matrix(seq: &CreationSequence, q: usize) -> Result<SymmetricMatrix> {
    if q > seq.s() {
        return Err(Error::QOutOfRange { q, lo: 0, hi: seq.s() });
    }
    Ok(build(seq.runs(), q))
}

fn build(runs: &[(usize, usize)], q: usize) -> SymmetricMatrix {
    if q == 0 {
        return clique_cover(runs);
    }
    let (k, t) = *runs.last().expect("nonempty");
    if t >= 2 {
        let mut shorter = runs.to_vec();
        shorter.last_mut().expect("nonempty").1 -= 1;
        return duplicate_last(&build(&shorter, q));
    }
    let head = &runs[..runs.len() - 1];
    if head.is_empty() {
        return star_base(k);
    }
    let seq = CreationSequence::from_runs(runs.to_vec()).expect("valid runs");
    let target = zq_formula(&seq, q);
    let head_seq = CreationSequence::from_runs(head.to_vec()).expect("valid runs");
    // append the zero block with no negative directions, or let the new run
    // carry one negative direction itself
    if q < runs.len() && zq_formula(&head_seq, q) + 1 == target {
        border(&build(head, q), k, 1.0)
    } else if k >= 2 {
        zero_block(&build(head, q - 1), k)
    } else {
        border(&build(head, q - 1), 1, -1.0)
    }
}

/// `Σ 1_C 1_C^T` over the cliques `{z} ∪ {dominating vertices after z}`, one
/// per isolated-vertex step `z`. Positive semidefinite with rank equal to the
/// number of zeros, so nullity `T`.
fn clique_cover(runs: &[(usize, usize)]) -> SymmetricMatrix {
    let bits = CreationSequence::from_runs(runs.to_vec()).expect("valid runs").bits();
    let n = bits.len();
    let mut m = SymmetricMatrix::zeros(n);
    for z in (0..n).filter(|&i| !bits[i]) {
        let clique: Vec<usize> = std::iter::once(z).chain((z + 1..n).filter(|&j| bits[j])).collect();
        for &i in &clique {
            for &j in &clique {
                if i <= j {
                    m.set(i, j, m.get(i, j) + 1.0);
                }
            }
        }
    }
    m
}

/// A twin of the last vertex, adjacent to it. Same rank and inertia, nullity
/// up by one.
fn duplicate_last(b: &SymmetricMatrix) -> SymmetricMatrix {
    let n = b.n();
    let w = n - 1;
    let mut m = SymmetricMatrix::zeros(n + 1);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, b.get(i, j));
        }
        m.set(i, n, b.get(i, w));
    }
    m.set(n, n, b.get(w, w));
    m
}

/// `K_{1,k}` with the centre last: one negative eigenvalue, nullity
/// `max(k - 1, 1)`.
fn star_base(k: usize) -> SymmetricMatrix {
    if k == 1 {
        return SymmetricMatrix::from_rows(&[vec![-1.0, 1.0], vec![1.0, -1.0]]).expect("symmetric");
    }
    let mut m = SymmetricMatrix::zeros(k + 1);
    for i in 0..k {
        m.set(i, k, 1.0);
    }
    m.set(k, k, 1.0);
    m
}

/// Appends `k` isolated vertices with diagonal `a` and a universal vertex
/// whose row is the old last row plus `a` on the new block, with diagonal
/// `b_ww + k·a`. That row is dependent, so the rank grows by `k`, the nullity
/// by one, and the negative count by `k` when `a < 0`.
fn border(b: &SymmetricMatrix, k: usize, a_hint: f64) -> SymmetricMatrix {
    let n = b.n();
    let u = n - 1;
    let buu = b.get(u, u);
    let kf = k as f64;
    let a = if buu + kf * a_hint == 0.0 { 2.0 * a_hint } else { a_hint };
    let w = n + k;
    let mut m = SymmetricMatrix::zeros(w + 1);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, b.get(i, j));
        }
        m.set(i, w, b.get(i, u));
    }
    for z in n..w {
        m.set(z, z, a);
        m.set(z, w, a);
    }
    m.set(w, w, buu + kf * a);
    m
}

/// Appends `k ≥ 2` isolated vertices with zero diagonal and a universal
/// vertex joined by ones to everything. Congruent to
/// `b ⊕ [[0, 1], [1, 1]] ⊕ 0_{k-1}`: one more negative eigenvalue and
/// `k - 1` more null directions.
fn zero_block(b: &SymmetricMatrix, k: usize) -> SymmetricMatrix {
    let n = b.n();
    let w = n + k;
    let mut m = SymmetricMatrix::zeros(w + 1);
    for i in 0..n {
        for j in i..n {
            m.set(i, j, b.get(i, j));
        }
        m.set(i, w, 1.0);
    }
    for z in n..w {
        m.set(z, w, 1.0);
    }
    m.set(w, w, 1.0);
    m
}
