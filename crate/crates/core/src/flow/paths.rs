//! Path decompositions and the 0/1 generator patterns they induce.

use num_traits::{Signed, Zero};

use super::{Edge, Flow, FlowGraph};
use crate::array::GTPattern;
use crate::error::{Error, Result};
use crate::rat::{rat, zero, Rat};

/// Weighted top-to-bottom paths; each path lists its column in every layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathDecomposition {
    pub graph: FlowGraph,
    pub paths: Vec<(Vec<usize>, Rat)>,
}

fn path_edges(path: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    path.windows(2).enumerate().map(|(layer, w)| Edge { layer, col: w[0], diagonal: w[1] > w[0] })
}

impl PathDecomposition {
    /// `Σ weight · indicator(path)`.
    pub fn recompose(&self) -> Flow {
        let mut g = self.graph.zero_flow();
        for (path, w) in &self.paths {
            for e in path_edges(path) {
                *g.get_mut(e) += w;
            }
        }
        g
    }
}

/// Greedy decomposition: repeatedly peel the leftmost positive path, preferring
/// straight edges, with weight equal to its smallest edge value.
pub fn path_decompose(g: &Flow) -> Result<PathDecomposition> {
    if !g.is_nonnegative() {
        return Err(Error::Precondition("path decomposition needs a nonnegative flow".into()));
    }
    let n = g.graph.n;
    for i in 1..n {
        for j in 0..g.graph.width(i) {
            if !g.divergence(i, j).is_zero() {
                return Err(Error::Inadmissible { layer: i, col: j, detail: "flow is not conserved".into() });
            }
        }
    }
    let mut rest = g.clone();
    let mut paths = Vec::new();
    while let Some(start) = (0..g.graph.width(0)).find(|&j| rest.outflow(0, j).is_positive()) {
        let mut path = vec![start];
        for layer in 0..n {
            let col = path[layer];
            let next = g
                .graph
                .out_edges(layer, col)
                .into_iter()
                .find(|&e| rest.get(e).is_positive())
                .ok_or_else(|| Error::Internal(format!("flow stops at ({layer},{col})")))?;
            path.push(next.head().1);
        }
        let w = path_edges(&path).map(|e| rest.get(e).clone()).min().expect("n >= 1");
        for e in path_edges(&path) {
            *rest.get_mut(e) -= &w;
        }
        paths.push((path, w));
    }
    Ok(PathDecomposition { graph: g.graph, paths })
}

/// The pattern `Y^P`: row `i` is 1 in columns `1..=p(i)` and 0 after, where `p(i)` is
/// the column of `P` in layer `i`.
pub fn generator_array(graph: &FlowGraph, path: &[usize]) -> Result<GTPattern> {
    let n = graph.n;
    let bad = |msg: String| Err(Error::Precondition(format!("malformed path {path:?}: {msg}")));
    if path.len() != n + 1 {
        return bad(format!("expected {} layers", n + 1));
    }
    for (i, &c) in path.iter().enumerate() {
        if c > graph.last_col(i) {
            return bad(format!("column {c} outside layer {i}"));
        }
        if i > 0 && !(path[i - 1]..=path[i - 1] + 1).contains(&c) {
            return bad(format!("step into layer {i} is not an edge"));
        }
    }
    if path[n] == 0 {
        return bad("ends at the bottom-left node".into());
    }
    let rows = (0..=n)
        .map(|i| (1..=graph.last_col(i)).map(|j| if j <= path[i] { rat(1) } else { zero() }).collect())
        .collect();
    Ok(GTPattern { config: graph.config(), rows })
}
