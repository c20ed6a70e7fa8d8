//! Component structure of `K(n,2)` after deleting a vertex set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{generate, FamilySpec};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// The 2-subsets of `{1..n}` in lexicographic order (the vertex labels of
/// `Kneser2(n)`).
pub fn kneser_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect()
}

/// An element of `{1..n}` contained in every pair of `set`, if any. The
/// smallest such element when several exist (only possible for one pair).
pub fn common_element(n: usize, set: VertexSet) -> Option<usize> {
    let pairs = kneser_pairs(n);
    (1..=n).find(|&x| set.iter().all(|v| pairs[v].0 == x || pairs[v].1 == x))
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct KneserReport {
    pub n: usize,
    pub subsets_checked: usize,
    pub exhaustive: bool,
    /// Deleted sets leaving at least four components.
    pub many_components: usize,
    /// Deleted sets leaving a coclique of at least four vertices.
    pub large_cocliques: usize,
    /// Deleted sets leaving exactly three components, one of them with at
    /// least three vertices.
    pub three_with_big: usize,
    pub violations: Vec<String>,
}

/// Checks, for each deleted set `S`, that
///
/// * four or more components are all isolated vertices;
/// * a remaining coclique of size at least four has a common element;
/// * with exactly three components and one of size at least three, the other
///   two are isolated vertices and the big one induces a star.
///
/// Exhaustive over all `2^C(n,2)` subsets when `sample` is `None`, otherwise
/// `sample` uniformly random subsets from a fixed seed.
pub fn kneser_structure_check(n: usize, sample: Option<usize>, seed: u64) -> Result<KneserReport> {
    let g = generate(&FamilySpec::Kneser2(n))?;
    let m = g.n();
    let mut report = KneserReport { n, exhaustive: sample.is_none(), ..Default::default() };
    let full = g.vertices().0;
    match sample {
        None => {
            let count = if m == 64 { u64::MAX } else { 1u64 << m };
            for deleted in 0..count {
                check_one(&g, n, VertexSet(deleted), &mut report);
            }
        }
        Some(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..k {
                let deleted = rng.gen::<u64>() & full;
                check_one(&g, n, VertexSet(deleted), &mut report);
            }
        }
    }
    Ok(report)
}

fn check_one(g: &Graph, n: usize, deleted: VertexSet, report: &mut KneserReport) {
    report.subsets_checked += 1;
    let rest = g.vertices().difference(deleted);
    let comps = g.components_within(rest);
    if comps.len() >= 4 {
        report.many_components += 1;
        if comps.iter().any(|c| c.len() > 1) {
            report.violations.push(format!("deleting {deleted}: a component of size > 1 among {}", comps.len()));
        }
    }
    if rest.len() >= 4 && comps.len() == rest.len() {
        report.large_cocliques += 1;
        if common_element(n, rest).is_none() {
            report.violations.push(format!("deleting {deleted}: coclique {rest} has no common element"));
        }
    }
    if comps.len() == 3 {
        if let Some(big) = comps.iter().find(|c| c.len() >= 3) {
            report.three_with_big += 1;
            let others_single = comps.iter().filter(|c| *c != big).all(|c| c.len() == 1);
            if !others_single || !induces_star(g, *big) {
                report.violations.push(format!("deleting {deleted}: components {comps:?} break the star shape"));
            }
        }
    }
}

/// Connected, with one vertex adjacent to all others and no other edges.
fn induces_star(g: &Graph, set: VertexSet) -> bool {
    let k = set.len();
    let degrees: Vec<usize> = set.iter().map(|v| g.neighbours(v).intersection(set).len()).collect();
    let edges: usize = degrees.iter().sum::<usize>() / 2;
    edges == k - 1 && degrees.iter().any(|&d| d == k - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn common_element_witness() {
        let pairs = kneser_pairs(5);
        let with_five = VertexSet::from_vertices((0..pairs.len()).filter(|&i| pairs[i].1 == 5));
        assert_eq!(with_five.len(), 4);
        assert_eq!(common_element(5, with_five), Some(5));
        // {1,2}, {1,3}, {2,3}: intersecting but no common element
        assert_eq!(common_element(5, VertexSet::from_vertices([0, 1, 4])), None);
    }

    #[test]
    fn star_shapes() {
        let star = generate(&FamilySpec::Star(3)).unwrap();
        assert!(induces_star(&star, star.vertices()));
        let p4 = generate(&FamilySpec::Path(4)).unwrap();
        assert!(!induces_star(&p4, p4.vertices()));
        assert!(induces_star(&p4, VertexSet::from_vertices([0, 1, 2])));
    }

    #[test]
    fn exhaustive_at_five() {
        let r = kneser_structure_check(5, None, 0).unwrap();
        assert_eq!(r.subsets_checked, 1024);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert!(r.many_components > 0 && r.large_cocliques > 0 && r.three_with_big > 0);
    }

    #[test]
    fn sampled_at_six() {
        let r = kneser_structure_check(6, Some(20_000), 7).unwrap();
        assert_eq!(r.subsets_checked, 20_000);
        assert!(!r.exhaustive);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}
