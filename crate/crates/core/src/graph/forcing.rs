//! The colour change rule and uncoloured components.

use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Components of `G[V \ b]`, ordered by minimum vertex.
pub fn uncoloured_components(g: &Graph, b: VertexSet) -> Vec<VertexSet> {
    g.components_within(g.vertices().difference(b))
}

/// Least superset of `b` closed under the colour change rule: a coloured
/// vertex with exactly one uncoloured neighbour colours that neighbour.
pub fn ccr_closure(g: &Graph, b: VertexSet) -> VertexSet {
    let mut c = b.0 & g.vertices().0;
    loop {
        let before = c;
        let mut it = c;
        while it != 0 {
            let u = it.trailing_zeros() as usize;
            it &= it - 1;
            let open = g.adj_word(u) & !c;
            if open != 0 && open & (open - 1) == 0 {
                c |= open;
            }
        }
        if c == before {
            return VertexSet(c);
        }
    }
}

/// Every available single force `(u, v)`: `u` coloured, `v` its unique
/// uncoloured neighbour. Ordered by forcer.
pub fn single_forces(g: &Graph, b: VertexSet) -> Vec<(usize, usize)> {
    b.intersection(g.vertices())
        .iter()
        .filter_map(|u| {
            let open = g.adj_word(u) & !b.0;
            (open != 0 && open & (open - 1) == 0).then(|| (u, open.trailing_zeros() as usize))
        })
        .collect()
}

/// A graph with a set of coloured vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredState {
    graph: Graph,
    coloured: VertexSet,
    closed: bool,
}

impl ColouredState {
    pub fn new(graph: Graph, coloured: VertexSet) -> Result<Self> {
        if !coloured.is_subset(graph.vertices()) {
            return Err(Error::Precondition(format!("coloured set {coloured} is not inside 0..{}", graph.n())));
        }
        let closed = ccr_closure(&graph, coloured) == coloured;
        Ok(ColouredState { graph, coloured, closed })
    }

    /// Replaces the coloured set by its closure.
    pub fn normalized(mut self) -> Self {
        self.coloured = ccr_closure(&self.graph, self.coloured);
        self.closed = true;
        self
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn coloured(&self) -> VertexSet {
        self.coloured
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn uncoloured_components(&self) -> Vec<VertexSet> {
        uncoloured_components(&self.graph, self.coloured)
    }
}
