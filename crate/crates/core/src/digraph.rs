//! Weighted digraphs and their correspondence with square max-plus matrices.
//!
//! Vertices are numbered `0..n`. A finite entry `A_ij` is the edge `i -> j`
//! with weight `A_ij`.

use std::collections::BTreeSet;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::matrix::MaxMatrix;
use crate::scalar::{MaxScalar, Numeric};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge<T> {
    pub tail: usize,
    pub head: usize,
    pub weight: T,
}

#[derive(Clone, Debug, PartialEq)]
pub struct WeightedDigraph<T> {
    vertex_count: usize,
    edges: Vec<Edge<T>>,
}

impl<T: Numeric> WeightedDigraph<T> {
    /// Rejects edges with endpoints out of range and duplicate `(tail, head)` pairs.
    pub fn new(vertex_count: usize, edges: Vec<Edge<T>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.tail >= vertex_count || e.head >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({}, {}) out of range for {} vertices",
                    e.tail, e.head, vertex_count
                )));
            }
            if !seen.insert((e.tail, e.head)) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    e.tail, e.head
                )));
            }
        }
        Ok(WeightedDigraph {
            vertex_count,
            edges,
        })
    }

    pub fn from_matrix(a: &MaxMatrix<T>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let n = a.rows();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if let MaxScalar::Finite(w) = a.get(i, j) {
                    edges.push(Edge {
                        tail: i,
                        head: j,
                        weight: w,
                    });
                }
            }
        }
        Ok(WeightedDigraph {
            vertex_count: n,
            edges,
        })
    }

    pub fn to_matrix(&self) -> MaxMatrix<T> {
        let mut a = MaxMatrix::epsilon(self.vertex_count, self.vertex_count);
        for e in &self.edges {
            a.set(e.tail, e.head, MaxScalar::Finite(e.weight));
        }
        a
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[Edge<T>] {
        &self.edges
    }

    pub fn weight(&self, tail: usize, head: usize) -> Option<T> {
        self.edges
            .iter()
            .find(|e| e.tail == tail && e.head == head)
            .map(|e| e.weight)
    }

    /// Average weight `w(C) / l(C)` of a circuit given as a closed vertex
    /// sequence `v0, v1, ..., v0`.
    pub fn circuit_average_weight(&self, circuit: &[usize]) -> Result<T::Mean> {
        if circuit.len() < 2 {
            return Err(Error::InvalidCircuit(
                "a circuit needs at least one edge".into(),
            ));
        }
        if circuit.first() != circuit.last() {
            return Err(Error::InvalidCircuit(format!(
                "sequence starts at {} but ends at {}",
                circuit[0],
                circuit[circuit.len() - 1]
            )));
        }
        let mut total = T::zero();
        for pair in circuit.windows(2) {
            let w = self.weight(pair[0], pair[1]).ok_or_else(|| {
                Error::InvalidCircuit(format!("no edge {} -> {}", pair[0], pair[1]))
            })?;
            total = total + w;
        }
        Ok(T::mean(total, circuit.len() - 1))
    }

    /// Strongly connected components, each sorted, ordered by smallest vertex.
    pub fn strongly_connected_components(&self) -> Vec<Vec<usize>> {
        let mut g = DiGraph::<(), ()>::with_capacity(self.vertex_count, self.edges.len());
        for _ in 0..self.vertex_count {
            g.add_node(());
        }
        for e in &self.edges {
            g.add_edge(NodeIndex::new(e.tail), NodeIndex::new(e.head), ());
        }
        let mut sccs: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(NodeIndex::index).collect();
                c.sort_unstable();
                c
            })
            .collect();
        sccs.sort_unstable_by_key(|c| c[0]);
        sccs
    }

    /// True iff there is a `u -> v` path for every pair of vertices.
    pub fn is_strongly_connected(&self) -> bool {
        self.vertex_count > 0 && self.strongly_connected_components().len() == 1
    }
}
