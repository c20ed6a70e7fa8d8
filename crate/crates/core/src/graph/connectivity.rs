use std::collections::VecDeque;

use super::Graph;

/// Vertex connectivity: the size of a smallest vertex cut, `n - 1` for
/// complete graphs and 0 for disconnected graphs.
///
/// Computed as the minimum over non-adjacent pairs of the number of
/// internally vertex-disjoint paths (unit-capacity max flow on the
/// vertex-split network).
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    let mut best = g.min_degree();
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            best = best.min(local_connectivity(g, s, t, best));
            if best == 1 {
                return 1;
            }
        }
    }
    best
}

/// Max number of internally disjoint s-t paths, stopping early at `cap`.
fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    let n = g.n();
    // node 2v = v_in, 2v + 1 = v_out
    let m = 2 * n;
    let mut capacity = vec![0i32; m * m];
    let big = n as i32;
    for v in 0..n {
        let inner = if v == s || v == t { big } else { 1 };
        capacity[(2 * v) * m + 2 * v + 1] = inner;
    }
    for (u, v) in g.edges() {
        capacity[(2 * u + 1) * m + 2 * v] = big;
        capacity[(2 * v + 1) * m + 2 * u] = big;
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    let mut parent = vec![usize::MAX; m];
    while flow < cap {
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..m {
                if parent[y] == usize::MAX && capacity[x * m + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        let mut y = sink;
        while y != source {
            let x = parent[y];
            capacity[x * m + y] -= 1;
            capacity[y * m + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}
