//! Forcing games: the plain zero forcing game, the positive semidefinite
//! variant, and the q-analogue played against an adversarial oracle.
//!
//! Every state is a coloured vertex set normalised to its colour-change
//! closure, since applying the colour change rule on the whole graph is free.

mod solver;

pub use solver::{zq_chain, zq_number, zq_number_with, CacheStats, Move, SolveOptions, Strategy, ZqResult};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ccr_closure, uncoloured_components, Graph, VertexSet};

/// Positive semidefinite forcing closure: repeatedly, for each component `W`
/// of the uncoloured subgraph, apply the colour change rule inside
/// `G[B ∪ W]`.
pub fn psd_closure(g: &Graph, b: VertexSet) -> VertexSet {
    let full = g.vertices().0;
    let mut c = b.0 & full;
    loop {
        let before = c;
        for comp in g.components_within(VertexSet(full & !c)) {
            let mut it = c;
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                let open = g.adj_word(u) & comp.0 & !c;
                if open != 0 && open & (open - 1) == 0 {
                    c |= open;
                }
            }
        }
        if c == before {
            return VertexSet(c);
        }
    }
}

/// Does some coloured vertex have exactly one neighbour in `returned`?
/// For a closed `b` this is exactly "the response forces something".
#[inline]
pub(crate) fn response_forces(g: &Graph, b: u64, returned: u64) -> bool {
    let mut it = b;
    while it != 0 {
        let u = it.trailing_zeros() as usize;
        it &= it - 1;
        let hit = g.adj_word(u) & returned;
        if hit != 0 && hit & (hit - 1) == 0 {
            return true;
        }
    }
    false
}

/// Rule-3 closure without validating `returned` (a union of components).
///
/// Alternates the colour change rule inside `G[b ∪ returned]` (the vertex set
/// is fixed by the original `b`) with the free closure on all of `G`, until
/// neither adds a vertex.
pub(crate) fn rule3_closure_raw(g: &Graph, b: u64, returned: u64) -> u64 {
    let allowed = b | returned;
    let mut c = b;
    loop {
        let before = c;
        loop {
            let inner_before = c;
            let mut it = c & allowed;
            while it != 0 {
                let u = it.trailing_zeros() as usize;
                it &= it - 1;
                let open = g.adj_word(u) & allowed & !c;
                if open != 0 && open & (open - 1) == 0 {
                    c |= open;
                }
            }
            if c == inner_before {
                break;
            }
        }
        c = ccr_closure(g, VertexSet(c)).0;
        if c == before {
            return c;
        }
    }
}

/// Colouring reached after the oracle hands back `returned`, a nonempty list
/// of distinct components of `G[V \ b]`.
pub fn rule3_closure(g: &Graph, b: VertexSet, returned: &[VertexSet]) -> Result<VertexSet> {
    if returned.is_empty() {
        return Err(Error::EmptySet);
    }
    let comps = uncoloured_components(g, b);
    let mut union = 0u64;
    for w in returned {
        if !comps.contains(w) || union & w.0 != 0 {
            return Err(Error::NotAComponent(w.to_string()));
        }
        union |= w.0;
    }
    Ok(VertexSet(rule3_closure_raw(g, b.0 & g.vertices().0, union)))
}

/// A rule-3 offer: distinct whole components of the uncoloured subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MoveFamily {
    pub components: Vec<VertexSet>,
}

impl MoveFamily {
    pub fn union(&self) -> VertexSet {
        self.components.iter().fold(VertexSet::EMPTY, |acc, w| acc.union(*w))
    }
}

/// Calls `f` with each `k`-subset of `0..m` in lexicographic order; stops when
/// `f` returns `false`.
pub(crate) fn for_each_combination(m: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > m {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // rightmost position that can still move
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + m - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All families of exactly `q + 1` uncoloured components such that every
/// nonempty oracle response forces at least one vertex. `b` should be closed.
pub fn admissible_families(g: &Graph, b: VertexSet, q: usize) -> Vec<MoveFamily> {
    let b = b.intersection(g.vertices());
    let comps = uncoloured_components(g, b);
    let size = q + 1;
    let mut out = Vec::new();
    if size > comps.len() || size >= 64 {
        return out;
    }
    for_each_combination(comps.len(), size, |idx| {
        let all_force = (1u64..1 << size).all(|mask| {
            let union = VertexSet(mask).iter().fold(0u64, |acc, i| acc | comps[idx[i]].0);
            response_forces(g, b.0, union)
        });
        if all_force {
            out.push(MoveFamily { components: idx.iter().map(|&i| comps[i]).collect() });
        }
        true
    });
    out
}

/// Smallest initial set whose closure under `close` is everything, by
/// breadth-first search over distinct closures. Closures already reached with
/// fewer tokens are not expanded again.
fn min_forcing_set(
    g: &Graph,
    close: impl Fn(&Graph, VertexSet) -> VertexSet,
    memo_limit: Option<usize>,
) -> Result<(usize, VertexSet)> {
    let full = g.vertices().0;
    let start = close(g, VertexSet::EMPTY).0;
    if start == full {
        return Ok((0, VertexSet::EMPTY));
    }
    // closure -> (predecessor closure, vertex added)
    let mut parent: HashMap<u64, (u64, u8)> = HashMap::new();
    parent.insert(start, (start, u8::MAX));
    let mut level = vec![start];
    for k in 1..=g.n() {
        let mut next = Vec::new();
        for &c in &level {
            let mut it = full & !c;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                let nc = close(g, VertexSet(c | 1 << v)).0;
                if nc == full {
                    let mut set = VertexSet::singleton(v);
                    let mut cur = c;
                    while cur != start {
                        let (prev, u) = parent[&cur];
                        set.insert(u as usize);
                        cur = prev;
                    }
                    return Ok((k, set));
                }
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(nc) {
                    e.insert((c, v as u8));
                    next.push(nc);
                    if let Some(limit) = memo_limit {
                        if parent.len() > limit {
                            return Err(Error::MemoOverflow(limit));
                        }
                    }
                }
            }
        }
        level = next;
    }
    unreachable!("colouring every vertex always succeeds")
}

/// Zero forcing number `Z(G)`.
pub fn z_number(g: &Graph) -> usize {
    zero_forcing_set(g).len()
}

/// A minimum zero forcing set.
pub fn zero_forcing_set(g: &Graph) -> VertexSet {
    min_forcing_set(g, ccr_closure, None).expect("no memo limit").1
}

pub fn z_number_with(g: &Graph, memo_limit: Option<usize>) -> Result<(usize, VertexSet)> {
    min_forcing_set(g, ccr_closure, memo_limit)
}

/// Positive semidefinite zero forcing number `Z_0(G)`, computed with the PSD
/// closure (independently of the game solver).
pub fn z0_number(g: &Graph) -> usize {
    psd_forcing_set(g).len()
}

/// A minimum PSD forcing set.
pub fn psd_forcing_set(g: &Graph) -> VertexSet {
    min_forcing_set(g, psd_closure, None).expect("no memo limit").1
}

pub fn z0_number_with(g: &Graph, memo_limit: Option<usize>) -> Result<(usize, VertexSet)> {
    min_forcing_set(g, psd_closure, memo_limit)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &e).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &e).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, &e).unwrap()
    }

    fn kneser2(n: usize) -> Graph {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        Graph::from_fn(pairs.len(), |i, j| {
            let (a, b) = pairs[i];
            let (c, d) = pairs[j];
            a != c && a != d && b != c && b != d
        })
        .unwrap()
    }

    fn brute_min(g: &Graph, close: impl Fn(&Graph, VertexSet) -> VertexSet) -> usize {
        (0u64..1 << g.n())
            .filter(|&m| close(g, VertexSet(m)) == g.vertices())
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn psd_closure_examples() {
        let k13 = star(3);
        assert_eq!(psd_closure(&k13, vs(&[0])), k13.vertices());
        let p5 = path(5);
        assert_eq!(psd_closure(&p5, vs(&[2])), p5.vertices());
        assert_eq!(psd_closure(&complete(4), vs(&[0])), vs(&[0]));
    }

    #[test]
    fn z_number_examples() {
        assert_eq!(z_number(&path(5)), 1);
        assert_eq!(z_number(&complete(4)), 3);
        assert_eq!(z_number(&kneser2(5)), 5);
        assert_eq!(z_number(&complete(1)), 1);
        let set = zero_forcing_set(&petersen());
        assert_eq!(set.len(), 5);
        assert_eq!(ccr_closure(&petersen(), set), petersen().vertices());
    }

    #[test]
    fn z0_number_examples() {
        assert_eq!(z0_number(&petersen()), 4);
        let k33 = Graph::from_fn(6, |i, j| (i < 3) != (j < 3)).unwrap();
        assert_eq!(z0_number(&k33), 3);
        for leaves in 1..=6 {
            assert_eq!(brute_min(&star(leaves), psd_closure), 1);
            assert_eq!(z0_number(&star(leaves)), 1);
        }
        let set = psd_forcing_set(&petersen());
        assert_eq!(psd_closure(&petersen(), set), petersen().vertices());
    }

    #[test]
    fn level_search_matches_subset_enumeration() {
        let mut s = 0x2545f4914f6cdd1du64;
        for _ in 0..120 {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            let n = 1 + (s % 8) as usize;
            let bits = s >> 3;
            let g = Graph::from_fn(n, |i, j| bits >> ((i * 8 + j) % 61) & 1 == 1).unwrap();
            assert_eq!(z_number(&g), brute_min(&g, ccr_closure), "{g:?}");
            assert_eq!(z0_number(&g), brute_min(&g, psd_closure), "{g:?}");
        }
    }

    #[test]
    fn rule3_examples() {
        let k13 = star(3);
        assert_eq!(rule3_closure(&k13, vs(&[0]), &[vs(&[1])]).unwrap(), vs(&[0, 1]));
        assert_eq!(rule3_closure(&k13, vs(&[0]), &[vs(&[1]), vs(&[2])]).unwrap(), vs(&[0]));

        // The left half is forced inside G[{0,1,2}]; afterwards vertex 2 has a
        // single uncoloured neighbour in G, so the free rule finishes the path.
        let p5 = path(5);
        assert_eq!(rule3_closure(&p5, vs(&[2]), &[vs(&[0, 1])]).unwrap(), p5.vertices());
        assert_eq!(p5_step_by_step(), p5.vertices());
    }

    // Hand simulation of the same move, one force at a time.
    fn p5_step_by_step() -> VertexSet {
        let p5 = path(5);
        let mut c = vs(&[2]);
        // inside G[{0,1,2}]: 2 -> 1, then 1 -> 0
        c.insert(1);
        c.insert(0);
        // free rule on G: 2 has neighbours {1, 3}, only 3 uncoloured
        assert_eq!(p5.neighbours(2).difference(c), vs(&[3]));
        c.insert(3);
        assert_eq!(p5.neighbours(3).difference(c), vs(&[4]));
        c.insert(4);
        c
    }

    #[test]
    fn rule3_rejects_non_components() {
        let p5 = path(5);
        assert_eq!(rule3_closure(&p5, vs(&[2]), &[]), Err(Error::EmptySet));
        assert!(matches!(rule3_closure(&p5, vs(&[2]), &[vs(&[0])]), Err(Error::NotAComponent(_))));
        assert!(matches!(rule3_closure(&p5, vs(&[2]), &[vs(&[0, 1]), vs(&[0, 1])]), Err(Error::NotAComponent(_))));
    }

    #[test]
    fn admissible_family_examples() {
        let k13 = star(3);
        let fams = admissible_families(&k13, vs(&[0]), 0);
        assert_eq!(
            fams.iter().map(|f| f.components.clone()).collect::<Vec<_>>(),
            vec![vec![vs(&[1])], vec![vs(&[2])], vec![vs(&[3])]]
        );
        assert!(admissible_families(&k13, vs(&[0]), 1).is_empty());
        assert!(admissible_families(&path(5), vs(&[2]), 1).is_empty());
        assert_eq!(admissible_families(&path(5), vs(&[2]), 0).len(), 2);
        // fewer than q + 1 components
        assert!(admissible_families(&path(5), vs(&[2]), 2).is_empty());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(5, 5, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1);
        for_each_combination(3, 4, |_| panic!("k > m yields nothing"));
        let mut count = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            count += 1;
            true
        });
        assert_eq!(count, 1);
    }
}
