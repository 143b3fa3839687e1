use std::collections::HashSet;

use crate::exactnum::CycElem;

use super::{HermitianGram, LatticeError};

/// Directed graph without self-loops or repeated edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedGraph {
    nodes: usize,
    edges: Vec<(usize, usize)>,
}

impl DirectedGraph {
    pub fn new(nodes: usize, edges: Vec<(usize, usize)>) -> Result<Self, LatticeError> {
        let mut seen = HashSet::new();
        for &(a, b) in &edges {
            if a >= nodes || b >= nodes {
                return Err(LatticeError::MalformedGraph(format!("edge ({a},{b}) out of range")));
            }
            if a == b {
                return Err(LatticeError::MalformedGraph(format!("self-loop at {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(LatticeError::MalformedGraph(format!("repeated edge between {a} and {b}")));
            }
        }
        Ok(DirectedGraph { nodes, edges })
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Path 0 → 1 → … → n−1.
    pub fn path(n: usize) -> Self {
        DirectedGraph::new(n, (1..n).map(|i| (i - 1, i)).collect()).unwrap()
    }

    /// n-cycle whose edges alternate direction (n even).
    pub fn alternating_cycle(n: usize) -> Self {
        assert!(n % 2 == 0 && n >= 4);
        let edges = (0..n)
            .map(|i| {
                let j = (i + 1) % n;
                if i % 2 == 0 { (j, i) } else { (i, j) }
            })
            .collect();
        DirectedGraph::new(n, edges).unwrap()
    }

    /// Incidence graph of P²(F₃): nodes 0..13 are points, 13..26 lines,
    /// an edge from each line to each of its points. Line j contains the
    /// points j, j+1, j+3, j+9 (mod 13), matching the 1-based labels
    /// p_{j+1}, l_{j+1} used elsewhere.
    pub fn projective_plane_f3() -> Self {
        let mut edges = Vec::new();
        for j in 0..13 {
            for d in [0, 1, 3, 9] {
                edges.push((13 + j, (j + d) % 13));
            }
        }
        DirectedGraph::new(26, edges).unwrap()
    }
}

/// Gram matrix of the graph lattice: 3 on the diagonal, θ at (α,β) when
/// there is an edge β → α, θ̄ when α → β.
pub fn gram_from_graph(g: &DirectedGraph) -> HermitianGram {
    let n = g.nodes();
    let mut m = vec![vec![CycElem::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = CycElem::int(3);
    }
    let t = CycElem::theta();
    for &(b, a) in g.edges() {
        m[a][b] = t.clone();
        m[b][a] = t.conj();
    }
    HermitianGram::new(m).expect("graph Gram is hermitian")
}
