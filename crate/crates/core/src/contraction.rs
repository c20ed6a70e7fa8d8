//! The bipartite contraction of a partially coloured graph and matching
//! criteria for the existence of an oracle move that forces something.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{admissible_families, for_each_combination};
use crate::graph::{ccr_closure, Graph, VertexSet};

/// Coloured and uncoloured components collapsed to single nodes, with the
/// number of original edges between each coloured and uncoloured node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContractedBigraph {
    pub coloured_nodes: Vec<VertexSet>,
    pub uncoloured_nodes: Vec<VertexSet>,
    /// `multiplicity[i][j]`: edges between coloured node `i` and uncoloured
    /// node `j`.
    pub multiplicity: Vec<Vec<usize>>,
}

impl ContractedBigraph {
    /// The simple bipartite graph: coloured nodes first, then uncoloured, and
    /// the set of coloured node indices.
    pub fn to_graph(&self) -> Result<(Graph, VertexSet)> {
        let c = self.coloured_nodes.len();
        let n = c + self.uncoloured_nodes.len();
        let g = Graph::from_fn(n, |i, j| {
            let (i, j) = (i.min(j), i.max(j));
            i < c && j >= c && self.multiplicity[i][j - c] > 0
        })?;
        Ok((g, VertexSet::from_vertices(0..c)))
    }
}

/// Contracts every coloured component and every uncoloured component of `g`
/// to a node. Coloured components with no uncoloured neighbour are dropped.
/// Nodes are ordered by smallest vertex.
pub fn bipartite_contraction(g: &Graph, b: VertexSet) -> Result<ContractedBigraph> {
    let b = b.intersection(g.vertices());
    if b.is_empty() || b == g.vertices() {
        return Err(Error::TrivialColouring);
    }
    let uncoloured_nodes = g.components_within(g.vertices().difference(b));
    let mut coloured_nodes = Vec::new();
    let mut multiplicity = Vec::new();
    for comp in g.components_within(b) {
        let row: Vec<usize> = uncoloured_nodes
            .iter()
            .map(|w| comp.iter().map(|u| g.neighbours(u).intersection(*w).len()).sum())
            .collect();
        if row.iter().any(|&m| m > 0) {
            coloured_nodes.push(comp);
            multiplicity.push(row);
        }
    }
    Ok(ContractedBigraph { coloured_nodes, uncoloured_nodes, multiplicity })
}

/// Maximum matching size, by augmenting paths on the simple bipartite graph.
pub fn max_matching(cb: &ContractedBigraph) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; cb.uncoloured_nodes.len()];
    let mut size = 0;
    for i in 0..cb.coloured_nodes.len() {
        let mut seen = vec![false; owner.len()];
        if augment(cb, i, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

fn augment(cb: &ContractedBigraph, i: usize, seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for j in 0..owner.len() {
        if cb.multiplicity[i][j] == 0 || seen[j] {
            continue;
        }
        seen[j] = true;
        let free = match owner[j] {
            None => true,
            Some(k) => augment(cb, k, seen, owner),
        };
        if free {
            owner[j] = Some(i);
            return true;
        }
    }
    false
}

/// A coloured node joined to the uncoloured nodes `s` by exactly one edge in
/// total, if any (the lowest index).
pub fn degree_one_witness(cb: &ContractedBigraph, s: &[usize]) -> Result<Option<usize>> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&j) = s.iter().find(|&&j| j >= cb.uncoloured_nodes.len()) {
        return Err(Error::Precondition(format!("no uncoloured node {j}")));
    }
    Ok((0..cb.coloured_nodes.len()).find(|&i| s.iter().map(|&j| cb.multiplicity[i][j]).sum::<usize>() == 1))
}

/// Is there a family of `q + 1` uncoloured nodes of the contraction such that
/// every nonempty subset has a coloured node joined to it by exactly one edge?
/// This is a forcing move played on the contracted multigraph itself.
pub fn contracted_forcing_move(cb: &ContractedBigraph, q: usize) -> bool {
    let m = cb.uncoloured_nodes.len();
    let size = q + 1;
    if size > m || size >= 64 {
        return false;
    }
    let mut found = false;
    for_each_combination(m, size, |idx| {
        found = (1u64..1 << size).all(|mask| {
            let s: Vec<usize> = VertexSet(mask).iter().map(|i| idx[i]).collect();
            matches!(degree_one_witness(cb, &s), Ok(Some(_)))
        });
        !found
    });
    found
}

/// Is there a family of `q + 1` uncoloured components every response to which
/// forces a vertex? `b` must be closed under the colour change rule, so no
/// free force is available.
pub fn has_forcing_move(g: &Graph, b: VertexSet, q: usize) -> Result<bool> {
    let b = b.intersection(g.vertices());
    if ccr_closure(g, b) != b {
        return Err(Error::NotClosed);
    }
    Ok(!admissible_families(g, b, q).is_empty())
}
