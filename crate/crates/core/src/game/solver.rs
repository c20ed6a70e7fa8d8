//! Memoised minimax for the q-analogue forcing game.
//!
//! For a closed colouring `B != V`:
//!
//! ```text
//! V(B) = min( 1 + min_{v ∉ B} V(cl(B + v)),
//!             min_{F admissible} max_{∅ ≠ S ⊆ F} V(rule3(B, S)) )
//! ```
//!
//! with `V(V) = 0`. A family is admissible when every response forces a
//! vertex; a response that forces nothing leaves the state unchanged, so such
//! a family can never beat `V(B)` and is skipped. Every expanded move strictly
//! grows `B`, which bounds the recursion depth by `n`.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use super::{for_each_combination, response_forces, rule3_closure_raw, MoveFamily};
use crate::error::{Error, Result};
use crate::graph::{ccr_closure, Graph, VertexSet};

#[derive(Clone, Copy, Debug, Default)]
pub struct SolveOptions {
    /// Abort with [`Error::MemoOverflow`] once the memo holds more states.
    pub memo_limit: Option<usize>,
    /// Offer every family of at least `q + 1` components instead of exactly
    /// `q + 1`. Only useful for checking that the restriction is harmless.
    pub offer_larger_families: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CacheStats {
    pub states: usize,
    pub hits: usize,
}

/// The optimal move recorded for a state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Move {
    Spend(usize),
    Oracle(MoveFamily),
}

#[derive(Clone, Debug)]
struct Entry {
    value: u32,
    best: Option<Move>,
}

/// Game value plus the optimal policy over every state the search touched.
#[derive(Clone, Debug)]
pub struct ZqResult {
    pub value: usize,
    pub q: usize,
    pub stats: CacheStats,
    n: usize,
    root: VertexSet,
    policy: HashMap<u64, Entry>,
}

/// Strategy tree: what to do now, and how to continue after each oracle
/// response.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    Done,
    Spend { vertex: usize, then: Box<Strategy> },
    Oracle { family: Vec<VertexSet>, responses: Vec<(Vec<VertexSet>, Strategy)> },
}

impl Strategy {
    /// Worst-case number of tokens spent along any branch.
    pub fn worst_case_tokens(&self) -> usize {
        match self {
            Strategy::Done => 0,
            Strategy::Spend { then, .. } => 1 + then.worst_case_tokens(),
            Strategy::Oracle { responses, .. } => {
                responses.iter().map(|(_, s)| s.worst_case_tokens()).max().unwrap_or(0)
            }
        }
    }
}

impl ZqResult {
    /// Closed colouring the game starts from.
    pub fn root(&self) -> VertexSet {
        self.root
    }

    /// Optimal move at a closed state the search visited.
    pub fn best_move(&self, state: VertexSet) -> Option<&Move> {
        self.policy.get(&state.0).and_then(|e| e.best.as_ref())
    }

    pub fn value_at(&self, state: VertexSet) -> Option<usize> {
        if state == VertexSet::full(self.n) {
            return Some(0);
        }
        self.policy.get(&state.0).map(|e| e.value as usize)
    }

    /// Expands the policy into a full tree. Exponential in the worst case;
    /// meant for small graphs and traces.
    pub fn strategy(&self, g: &Graph) -> Strategy {
        self.strategy_from(g, self.root)
    }

    fn strategy_from(&self, g: &Graph, state: VertexSet) -> Strategy {
        match self.best_move(state) {
            None => Strategy::Done,
            Some(Move::Spend(v)) => Strategy::Spend {
                vertex: *v,
                then: Box::new(self.strategy_from(g, ccr_closure(g, state.union(VertexSet::singleton(*v))))),
            },
            Some(Move::Oracle(fam)) => {
                let k = fam.components.len();
                let responses = (1u64..1 << k)
                    .map(|mask| {
                        let chosen: Vec<VertexSet> = VertexSet(mask).iter().map(|i| fam.components[i]).collect();
                        let union = chosen.iter().fold(0, |acc, w| acc | w.0);
                        let next = VertexSet(rule3_closure_raw(g, state.0, union));
                        (chosen, self.strategy_from(g, next))
                    })
                    .collect();
                Strategy::Oracle { family: fam.components.clone(), responses }
            }
        }
    }

    /// Plays the recorded policy against `oracle`, which picks the indices
    /// (into the offered family) it returns. Returns the tokens spent.
    pub fn replay(&self, g: &Graph, mut oracle: impl FnMut(&[VertexSet]) -> Vec<usize>) -> Result<usize> {
        let full = g.vertices();
        let mut state = self.root;
        let mut tokens = 0;
        while state != full {
            match self.best_move(state) {
                None => return Err(Error::Precondition(format!("no recorded move at state {state}"))),
                Some(Move::Spend(v)) => {
                    tokens += 1;
                    state = ccr_closure(g, state.union(VertexSet::singleton(*v)));
                }
                Some(Move::Oracle(fam)) => {
                    let picks = oracle(&fam.components);
                    if picks.is_empty() || picks.iter().any(|&i| i >= fam.components.len()) {
                        return Err(Error::Precondition("oracle must return a nonempty subset".into()));
                    }
                    let union = picks.iter().fold(0, |acc, &i| acc | fam.components[i].0);
                    let next = VertexSet(rule3_closure_raw(g, state.0, union));
                    if next == state {
                        return Err(Error::Precondition(format!("response at {state} forced nothing")));
                    }
                    state = next;
                }
            }
        }
        Ok(tokens)
    }

    /// Indented text rendering of the strategy tree.
    pub fn trace(&self, g: &Graph) -> String {
        let mut out = String::new();
        self.trace_from(g, self.root, 0, &mut out);
        out
    }

    fn trace_from(&self, g: &Graph, state: VertexSet, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let value = self.value_at(state).unwrap_or(0);
        match self.best_move(state) {
            None => {
                let _ = writeln!(out, "{pad}done");
            }
            Some(Move::Spend(v)) => {
                let next = ccr_closure(g, state.union(VertexSet::singleton(*v)));
                let _ = writeln!(out, "{pad}spend {v}  [value {value}, coloured {next}]");
                self.trace_from(g, next, depth, out);
            }
            Some(Move::Oracle(fam)) => {
                let offer: Vec<String> = fam.components.iter().map(|w| w.to_string()).collect();
                let _ = writeln!(out, "{pad}offer {}  [value {value}]", offer.join(" "));
                let k = fam.components.len();
                for mask in 1u64..1 << k {
                    let chosen: Vec<String> = VertexSet(mask).iter().map(|i| fam.components[i].to_string()).collect();
                    let union = VertexSet(mask).iter().fold(0, |acc, i| acc | fam.components[i].0);
                    let next = VertexSet(rule3_closure_raw(g, state.0, union));
                    let _ = writeln!(out, "{pad}  oracle returns {} -> coloured {next}", chosen.join(" "));
                    self.trace_from(g, next, depth + 2, out);
                }
            }
        }
    }
}

struct Solver<'g> {
    g: &'g Graph,
    q: usize,
    full: u64,
    opts: SolveOptions,
    memo: HashMap<u64, Entry>,
    stats: CacheStats,
}

impl Solver<'_> {
    fn value(&mut self, b: u64) -> Result<u32> {
        if b == self.full {
            return Ok(0);
        }
        if let Some(e) = self.memo.get(&b) {
            self.stats.hits += 1;
            return Ok(e.value);
        }
        self.stats.states += 1;

        let mut best = u32::MAX;
        let mut best_move = None;

        let comps = self.g.components_within(VertexSet(self.full & !b));
        let sizes = if self.opts.offer_larger_families {
            self.q + 1..=comps.len()
        } else {
            self.q + 1..=(self.q + 1).min(comps.len())
        };
        for size in sizes {
            if size >= 64 {
                break;
            }
            let mut failure = None;
            for_each_combination(comps.len(), size, |idx| {
                let unions: Vec<u64> = (1u64..1 << size)
                    .map(|mask| VertexSet(mask).iter().fold(0, |acc, i| acc | comps[idx[i]].0))
                    .collect();
                if !unions.iter().all(|&u| response_forces(self.g, b, u)) {
                    return true;
                }
                let mut worst = 0;
                for &u in &unions {
                    let next = rule3_closure_raw(self.g, b, u);
                    match self.value(next) {
                        Ok(v) => worst = worst.max(v),
                        Err(e) => {
                            failure = Some(e);
                            return false;
                        }
                    }
                    if worst >= best {
                        break;
                    }
                }
                if worst < best {
                    best = worst;
                    best_move = Some(Move::Oracle(MoveFamily { components: idx.iter().map(|&i| comps[i]).collect() }));
                }
                best > 0
            });
            if let Some(e) = failure {
                return Err(e);
            }
            if best == 0 {
                break;
            }
        }

        if best > 1 {
            let mut it = self.full & !b;
            while it != 0 {
                let v = it.trailing_zeros() as usize;
                it &= it - 1;
                let next = ccr_closure(self.g, VertexSet(b | 1 << v)).0;
                let val = 1 + self.value(next)?;
                if val < best {
                    best = val;
                    best_move = Some(Move::Spend(v));
                    if best == 1 {
                        break;
                    }
                }
            }
        }

        self.memo.insert(b, Entry { value: best, best: best_move });
        if let Some(limit) = self.opts.memo_limit {
            if self.memo.len() > limit {
                return Err(Error::MemoOverflow(limit));
            }
        }
        Ok(best)
    }
}

/// Exact `Z_q(G)` with its optimal strategy.
pub fn zq_number(g: &Graph, q: usize) -> ZqResult {
    zq_number_with(g, q, SolveOptions::default()).expect("no memo limit set")
}

pub fn zq_number_with(g: &Graph, q: usize, opts: SolveOptions) -> Result<ZqResult> {
    let full = g.vertices().0;
    let root = ccr_closure(g, VertexSet::EMPTY);
    let mut solver = Solver { g, q, full, opts, memo: HashMap::new(), stats: CacheStats::default() };
    let value = solver.value(root.0)?;
    Ok(ZqResult { value: value as usize, q, stats: solver.stats, n: g.n(), root, policy: solver.memo })
}

/// `[Z_0, Z_1, ..., Z_{q_max}, Z]`.
pub fn zq_chain(g: &Graph, q_max: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (0..=q_max).map(|q| zq_number(g, q).value).collect();
    out.push(super::z_number(g));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{z0_number, z_number};

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &e).unwrap()
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

    /// K_{1,3} □ K_2: layer a is 0..4 (centre 0), layer b is 4..8.
    fn book3() -> Graph {
        let mut e = Vec::new();
        for layer in [0, 4] {
            for leaf in 1..4 {
                e.push((layer, layer + leaf));
            }
        }
        for v in 0..4 {
            e.push((v, v + 4));
        }
        Graph::new(8, &e).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        Graph::from_fn(a + b, |i, j| (i < a) != (j < a)).unwrap()
    }

    #[test]
    fn book_graph_values() {
        assert_eq!(zq_number(&book3(), 0).value, 2);
        assert_eq!(zq_number(&book3(), 1).value, 3);
    }

    #[test]
    fn star_and_petersen_values() {
        assert_eq!(zq_number(&star(3), 1).value, 2);
        assert_eq!(zq_number(&star(3), 0).value, 1);
        assert_eq!(zq_number(&petersen(), 1).value, 5);
        assert_eq!(zq_number(&petersen(), 0).value, 4);
    }

    #[test]
    fn chains() {
        assert_eq!(zq_chain(&petersen(), 2), vec![4, 5, 5, 5]);
        assert_eq!(zq_chain(&complete_bipartite(2, 3), 1), vec![2, 3, 3]);
        assert_eq!(zq_chain(&Graph::new(1, &[]).unwrap(), 3), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn q_zero_matches_psd_search() {
        for g in [petersen(), book3(), star(4), complete_bipartite(3, 3)] {
            assert_eq!(zq_number(&g, 0).value, z0_number(&g));
        }
    }

    #[test]
    fn saturated_q_matches_z() {
        let g = petersen();
        assert_eq!(zq_number(&g, 9).value, z_number(&g));
    }

    #[test]
    fn strategy_tree_and_replay() {
        let g = book3();
        let res = zq_number(&g, 0);
        let tree = res.strategy(&g);
        assert_eq!(tree.worst_case_tokens(), 2);
        let mut calls = 0usize;
        let spent = res
            .replay(&g, |fam| {
                calls += 1;
                if calls.is_multiple_of(2) {
                    (0..fam.len()).collect()
                } else {
                    vec![fam.len() - 1]
                }
            })
            .unwrap();
        assert!(spent <= res.value);
        assert!(res.trace(&g).contains("offer"));
        assert!(res.stats.states > 0);
    }

    #[test]
    fn memo_limit_fails_fast() {
        let opts = SolveOptions { memo_limit: Some(3), ..Default::default() };
        assert_eq!(zq_number_with(&petersen(), 1, opts).unwrap_err(), Error::MemoOverflow(3));
    }

    #[test]
    fn larger_families_change_nothing_on_named_graphs() {
        let opts = SolveOptions { offer_larger_families: true, ..Default::default() };
        for g in [petersen(), book3(), star(4)] {
            for q in 0..3 {
                assert_eq!(zq_number_with(&g, q, opts).unwrap().value, zq_number(&g, q).value);
            }
        }
    }
}
