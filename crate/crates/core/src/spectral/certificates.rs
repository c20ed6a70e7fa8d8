//! Explicit matrices in `S_q(G)` whose nullity bounds `M_q(G) ≤ Z_q(G)` from
//! below.

use super::{eigenvalues_sym, in_sq, inertia_of, SymmetricMatrix, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::graph::Graph;

/// A matrix together with the number of negative eigenvalues it was built
/// for and its measured nullity.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub q: usize,
    pub nullity: usize,
    pub matrix: SymmetricMatrix,
}

/// `[[A + hI, hI], [hI, A + hI]]` on `H □ K_2` where `A` is the adjacency of
/// `H` and `2h` is its largest eigenvalue.
fn doubled_layer(a: &SymmetricMatrix, h: f64) -> SymmetricMatrix {
    let k = a.n();
    let mut m = SymmetricMatrix::zeros(2 * k);
    for layer in [0, k] {
        for i in 0..k {
            for j in i..k {
                m.set(layer + i, layer + j, a.get(i, j));
            }
            m.set(layer + i, layer + i, a.get(i, i) + h);
        }
    }
    for i in 0..k {
        m.set(i, k + i, h);
    }
    m
}

/// Certificate for the book graph `K_{1,n} □ K_2`: one negative eigenvalue,
/// nullity `n`, spectrum `{2√n, 0^(n), √n^(n), -√n}`.
pub fn book_certificate(n: usize) -> Result<SymmetricMatrix> {
    if n < 3 {
        return Err(Error::Precondition(format!("book certificate needs n >= 3, got {n}")));
    }
    let star = generate(&FamilySpec::Star(n))?;
    Ok(doubled_layer(&SymmetricMatrix::adjacency(&star), (n as f64).sqrt() / 2.0))
}

/// Same construction on `K_{n,m} □ K_2`, nullity `n + m - 1`.
pub fn bipartite_prism_certificate(n: usize, m: usize) -> Result<SymmetricMatrix> {
    if n < 2 || m < 2 {
        return Err(Error::Precondition(format!("bipartite prism needs n, m >= 2, got ({n}, {m})")));
    }
    let kb = generate(&FamilySpec::CompleteBipartite(n, m))?;
    Ok(doubled_layer(&SymmetricMatrix::adjacency(&kb), ((n * m) as f64).sqrt() / 2.0))
}

/// `(A - τI, -A + θI)` for a strongly regular graph with restricted
/// eigenvalues `θ > 0 > τ`. The first is positive semidefinite with nullity
/// `mult(τ)`, the second has one negative eigenvalue and nullity `mult(θ)`.
pub fn srg_certificate(g: &Graph, theta: f64, tau: f64) -> Result<(SymmetricMatrix, SymmetricMatrix)> {
    if !(tau < 0.0 && theta > 0.0) {
        return Err(Error::Precondition(format!("need tau < 0 < theta, got theta={theta}, tau={tau}")));
    }
    let a = SymmetricMatrix::adjacency(g);
    let eig = eigenvalues_sym(&a)?;
    let norm = eig.iter().fold(1.0, |acc: f64, x| acc.max(x.abs()));
    for (name, x) in [("theta", theta), ("tau", tau)] {
        if !eig.iter().any(|e| (e - x).abs() <= DEFAULT_TOL * norm) {
            return Err(Error::Precondition(format!("{name}={x} is not an adjacency eigenvalue")));
        }
    }
    Ok((a.scaled_shifted(1.0, -tau), a.scaled_shifted(-1.0, theta)))
}

/// `-A + I` on `K(n, 2)`: the adjacency eigenvalue 1 has multiplicity
/// `C(n,2) - n` and only the eigenvalue `C(n-2,2)` lies above it, so the
/// result is in `S_1` with nullity `C(n,2) - n`. Checked before returning.
pub fn kneser_certificate(n: usize) -> Result<SymmetricMatrix> {
    if n < 5 {
        return Err(Error::Precondition(format!("kneser certificate needs n >= 5, got {n}")));
    }
    let g = generate(&FamilySpec::Kneser2(n))?;
    let m = SymmetricMatrix::adjacency(&g).scaled_shifted(-1.0, 1.0);
    let inertia = inertia_of(&eigenvalues_sym(&m)?, DEFAULT_TOL);
    let want = n * (n - 1) / 2 - n;
    if inertia.n_neg != 1 || inertia.n_zero != want {
        return Err(Error::Infeasible(format!(
            "kneser certificate inertia {:?}, expected one negative and nullity {want}",
            inertia.triple()
        )));
    }
    Ok(m)
}

/// For every distinct adjacency eigenvalue `λ`: `A - λI` has exactly as many
/// negative eigenvalues as there are eigenvalues below `λ`, and `-A + λI` as
/// many as lie above; both have nullity `mult(λ)`. Works for any graph.
pub fn adjacency_shift_certificates(g: &Graph) -> Result<Vec<Certificate>> {
    let a = SymmetricMatrix::adjacency(g);
    let eig = eigenvalues_sym(&a)?;
    let eps = 1e-6 * eig.iter().fold(1.0, |acc: f64, x| acc.max(x.abs()));
    let mut distinct: Vec<f64> = Vec::new();
    for &x in &eig {
        if distinct.last().is_none_or(|&y| x - y > eps) {
            distinct.push(x);
        }
    }
    let mut out = Vec::new();
    for lambda in distinct {
        for sign in [1.0, -1.0] {
            let matrix = a.scaled_shifted(sign, -sign * lambda);
            let shifted: Vec<f64> = eig.iter().map(|x| sign * (x - lambda)).collect();
            let inertia = inertia_of(&shifted, DEFAULT_TOL);
            out.push(Certificate { q: inertia.n_neg, nullity: inertia.n_zero, matrix });
        }
    }
    for c in &out {
        debug_assert!(in_sq(&c.matrix, g, c.q, DEFAULT_TOL)?);
    }
    Ok(out)
}
