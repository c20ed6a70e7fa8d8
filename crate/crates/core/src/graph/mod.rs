//! Simple undirected graphs on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bitset per vertex, so a [`VertexSet`] is a
//! single machine word and doubles as a hash key in the solvers.

mod connectivity;
mod forcing;
mod format;

pub use connectivity::vertex_connectivity;
pub use forcing::{ccr_closure, single_forces, uncoloured_components, ColouredState};
pub use format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A subset of `0..n` packed into one word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        VertexSet(vs.into_iter().fold(0u64, |acc, v| acc | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone)]
pub struct Bits(u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

/// Immutable simple undirected graph with `1 <= n <= 64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    /// Builds a graph from `n` and a symmetric predicate on unordered pairs.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let mut adj = vec![0u64; n];
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub(crate) fn adj_word(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in VertexSet(self.adj[i] & !((2u64 << i) - 1)).iter() {
                out.push((i, j));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Connected components of `G[set]`, ordered by their minimum vertex.
    pub fn components_within(&self, set: VertexSet) -> Vec<VertexSet> {
        let mut rest = set.0;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & set.0 & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components_within(self.vertices()).len() == 1
    }

    /// `G[s]` with vertices renumbered in increasing order; the map sends old
    /// index to new index (`None` outside `s`).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        let s = s.intersection(self.vertices());
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let mut map = vec![None; self.n];
        for (new, old) in s.iter().enumerate() {
            map[old] = Some(new);
        }
        let keep = s.to_vec();
        let mut adj = vec![0u64; keep.len()];
        for (a, &u) in keep.iter().enumerate() {
            for v in VertexSet(self.adj[u] & s.0).iter() {
                adj[a] |= 1 << map[v].expect("neighbour inside s");
            }
        }
        Ok((Graph { n: keep.len(), adj }, map))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Backtracking isomorphism test with degree filtering.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut da: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut db: Vec<usize> = (0..other.n).map(|v| other.degree(v)).collect();
        let (ca, cb) = (da.clone(), db.clone());
        da.sort_unstable();
        db.sort_unstable();
        if da != db {
            return false;
        }
        // BFS order keeps each new vertex adjacent to something already mapped
        let mut order = Vec::with_capacity(self.n);
        let mut seen = 0u64;
        for comp in self.components_within(self.vertices()) {
            let start = comp.min().unwrap();
            seen |= 1 << start;
            let mut head = order.len();
            order.push(start);
            while head < order.len() {
                let v = order[head];
                head += 1;
                for w in VertexSet(self.adj[v] & !seen).iter() {
                    seen |= 1 << w;
                    order.push(w);
                }
            }
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = 0u64;
        self.iso_extend(other, &order, 0, &mut map, &mut used, &ca, &cb)
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_extend(
        &self,
        other: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut [usize],
        used: &mut u64,
        deg_a: &[usize],
        deg_b: &[usize],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..other.n {
            if *used >> w & 1 == 1 || deg_a[v] != deg_b[w] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&u| self.has_edge(u, v) == other.has_edge(map[u], w));
            if !consistent {
                continue;
            }
            map[v] = w;
            *used |= 1 << w;
            if self.iso_extend(other, order, depth + 1, map, used, deg_a, deg_b) {
                return true;
            }
            *used &= !(1 << w);
            map[v] = usize::MAX;
        }
        false
    }
}
