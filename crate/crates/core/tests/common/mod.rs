//! Helpers shared by the integration tests and the acceptance runner,
//! including a brute-force `Z_q` evaluator that shares no code with the
//! solver beyond `ccr_closure` and `induced_subgraph`.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zq_core::graph::{ccr_closure, Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random spanning tree (each vertex attaches to an earlier one) plus every
/// other edge independently with probability `p`, under a random labelling.
pub fn random_connected(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((perm[rng.gen_range(0..v)], perm[v]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable_by_key(|&(a, b)| (a.min(b), a.max(b)));
    edges.dedup_by_key(|e| (e.0.min(e.1), e.0.max(e.1)));
    Graph::new(n, &edges).unwrap()
}

/// Random connected graph that is not a tree, or `None` after a few tries.
pub fn random_non_tree(rng: &mut ChaCha8Rng, n: usize) -> Option<Graph> {
    (0..20).map(|_| random_connected(rng, n, 0.3)).find(|g| g.edge_count() >= n)
}

pub fn prufer_tree(code: &[usize]) -> Graph {
    let n = code.len() + 2;
    let mut degree = vec![1usize; n];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

/// Every labelled tree on `n ≥ 2` vertices.
pub fn labelled_trees(n: usize) -> Vec<Graph> {
    if n == 2 {
        return vec![Graph::new(2, &[(0, 1)]).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut x| {
            let code: Vec<usize> = (0..len)
                .map(|_| {
                    let d = x % n;
                    x /= n;
                    d
                })
                .collect();
            prufer_tree(&code)
        })
        .collect()
}

/// One representative per isomorphism class.
pub fn dedup_isomorphic(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for g in graphs {
        if !reps.iter().any(|r| r.is_isomorphic(&g)) {
            reps.push(g);
        }
    }
    reps
}

/// Unlabelled trees on `n` vertices, one representative each.
pub fn trees(n: usize) -> Vec<Graph> {
    dedup_isomorphic(labelled_trees(n))
}

/// Unlabelled connected graphs on `n ≤ 6` vertices.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let labelled = (0u64..1 << pairs.len()).filter_map(|mask| {
        let edges: Vec<_> = VertexSet(mask).iter().map(|i| pairs[i]).collect();
        let g = Graph::new(n, &edges).unwrap();
        g.is_connected().then_some(g)
    });
    dedup_isomorphic(labelled)
}

/// Sets with no free force available.
pub fn closed_sets(g: &Graph) -> Vec<VertexSet> {
    (0u64..1 << g.n()).map(VertexSet).filter(|&b| ccr_closure(g, b) == b).collect()
}

/// Rule 3 by brute force: colour change inside `G[b ∪ returned]`, then on the
/// whole graph, repeated while anything changes.
pub fn brute_rule3(g: &Graph, b: VertexSet, returned: VertexSet) -> VertexSet {
    let allowed = b.union(returned);
    let (h, map) = g.induced_subgraph(allowed).unwrap();
    let back = allowed.to_vec();
    let mut c = b;
    loop {
        let local = VertexSet::from_vertices(c.iter().filter_map(|v| map[v]));
        let inner = ccr_closure(&h, local);
        let lifted = c.union(VertexSet::from_vertices(inner.iter().map(|i| back[i])));
        let next = ccr_closure(g, lifted);
        if next == c {
            return c;
        }
        c = next;
    }
}

/// `Z_q(G)` by value iteration over closed sets in decreasing size. The player
/// may offer any family of at least `q + 1` components; a response that
/// forces nothing leaves the state unchanged and counts as a loss for the
/// player.
pub fn brute_zq(g: &Graph, q: usize) -> usize {
    const INF: usize = usize::MAX;
    let n = g.n();
    let full = g.vertices();
    let mut states = closed_sets(g);
    states.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut value = vec![INF; 1 << n];
    for b in states {
        if b == full {
            value[b.0 as usize] = 0;
            continue;
        }
        let mut best = INF;
        for v in full.difference(b).iter() {
            let next = ccr_closure(g, b.union(VertexSet::singleton(v)));
            best = best.min(1 + value[next.0 as usize]);
        }
        let comps = g.components_within(full.difference(b));
        let m = comps.len();
        for family in 1u64..1 << m {
            if (family.count_ones() as usize) < q + 1 {
                continue;
            }
            let mut worst = 0;
            let mut sub = family;
            while sub != 0 {
                let returned = VertexSet(sub).iter().fold(VertexSet::EMPTY, |acc, i| acc.union(comps[i]));
                let next = brute_rule3(g, b, returned);
                worst = worst.max(if next == b { INF } else { value[next.0 as usize] });
                sub = (sub - 1) & family;
            }
            best = best.min(worst);
        }
        value[b.0 as usize] = best;
    }
    value[0]
}

pub fn rand_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    VertexSet(rng.gen::<u64>() & VertexSet::full(n).0)
}
