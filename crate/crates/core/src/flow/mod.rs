//! Flows on the layered graph `H_{n,m}`.
//!
//! Layer `i` has nodes `(i, 0) ..= (i, b_i)`. Every node `(i, j)` with `i < n` has a
//! straight edge `e0_{ij}` to `(i+1, j)` and, when `(i+1, j+1)` exists, a diagonal
//! edge `e1_{ij}` to it.

mod gamma;
mod paths;
mod vertices;
mod zigzag;

pub use gamma::{gamma, gamma_inv, gamma_inv_pattern, gamma_pattern};
pub use paths::{generator_array, path_decompose, PathDecomposition};
pub use vertices::{enumerate_vertices, enumerate_vertex_flows, Forest};
pub use zigzag::{permute_nu, zigzag_swap, zigzag_swap_flow};

use num_traits::Signed;

use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::rat::{zero, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphShape {
    Trapezoid,
    Parallelogram,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FlowGraph {
    pub n: usize,
    pub m: usize,
    pub shape: GraphShape,
}

/// Straight (`e0`) or diagonal (`e1`) edge leaving `(layer, col)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub layer: usize,
    pub col: usize,
    pub diagonal: bool,
}

impl Edge {
    pub fn head(self) -> (usize, usize) {
        (self.layer + 1, self.col + usize::from(self.diagonal))
    }
}

impl FlowGraph {
    pub fn trapezoid(n: usize, m: usize) -> Self {
        FlowGraph { n, m, shape: GraphShape::Trapezoid }
    }

    pub fn parallelogram(n: usize, m: usize) -> Self {
        FlowGraph { n, m, shape: GraphShape::Parallelogram }
    }

    /// The graph matching a trapezoid or parallelogram configuration.
    pub fn for_config(config: &ConvexConfig) -> Result<Self> {
        if config.is_trapezoid() {
            Ok(Self::trapezoid(config.n, config.b[0]))
        } else if config.is_parallelogram() {
            Ok(Self::parallelogram(config.n, config.b[0]))
        } else {
            Err(Error::Precondition(
                "flows need a trapezoid or parallelogram; extend the configuration first".into(),
            ))
        }
    }

    pub fn config(&self) -> ConvexConfig {
        match self.shape {
            GraphShape::Trapezoid => ConvexConfig::trapezoid(self.n, self.m),
            GraphShape::Parallelogram => ConvexConfig::parallelogram(self.n, self.m),
        }
    }

    /// Largest column index in layer `i`.
    pub fn last_col(&self, i: usize) -> usize {
        match self.shape {
            GraphShape::Trapezoid => i + self.m,
            GraphShape::Parallelogram => self.m,
        }
    }

    pub fn width(&self, i: usize) -> usize {
        self.last_col(i) + 1
    }

    /// Number of diagonal edges leaving layer `i`.
    pub fn diagonal_count(&self, i: usize) -> usize {
        self.last_col(i + 1)
    }

    /// Length of `λ`.
    pub fn lambda_len(&self) -> usize {
        self.last_col(self.n)
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for layer in 0..self.n {
            for col in 0..self.width(layer) {
                out.push(Edge { layer, col, diagonal: false });
                if col < self.diagonal_count(layer) {
                    out.push(Edge { layer, col, diagonal: true });
                }
            }
        }
        out
    }

    pub fn out_edges(&self, layer: usize, col: usize) -> Vec<Edge> {
        let mut out = vec![Edge { layer, col, diagonal: false }];
        if col < self.diagonal_count(layer) {
            out.push(Edge { layer, col, diagonal: true });
        }
        out
    }

    pub fn zero_flow(&self) -> Flow {
        Flow {
            graph: *self,
            e0: (0..self.n).map(|i| vec![zero(); self.width(i)]).collect(),
            e1: (0..self.n).map(|i| vec![zero(); self.diagonal_count(i)]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flow {
    pub graph: FlowGraph,
    /// `e0[i][j]` is the value on `e0_{ij}`.
    pub e0: Vec<Vec<Rat>>,
    /// `e1[i][j]` is the value on `e1_{ij}`.
    pub e1: Vec<Vec<Rat>>,
}

impl Flow {
    pub fn new(graph: FlowGraph, e0: Vec<Vec<Rat>>, e1: Vec<Vec<Rat>>) -> Result<Self> {
        if e0.len() != graph.n || e1.len() != graph.n {
            return Err(Error::length("flow layers", graph.n, e0.len().min(e1.len())));
        }
        for i in 0..graph.n {
            if e0[i].len() != graph.width(i) {
                return Err(Error::length("e0 layer", graph.width(i), e0[i].len()));
            }
            if e1[i].len() != graph.diagonal_count(i) {
                return Err(Error::length("e1 layer", graph.diagonal_count(i), e1[i].len()));
            }
        }
        Ok(Flow { graph, e0, e1 })
    }

    pub fn get(&self, e: Edge) -> &Rat {
        if e.diagonal {
            &self.e1[e.layer][e.col]
        } else {
            &self.e0[e.layer][e.col]
        }
    }

    pub fn get_mut(&mut self, e: Edge) -> &mut Rat {
        if e.diagonal {
            &mut self.e1[e.layer][e.col]
        } else {
            &mut self.e0[e.layer][e.col]
        }
    }

    pub fn inflow(&self, i: usize, j: usize) -> Rat {
        if i == 0 {
            return zero();
        }
        let mut v = self.e0[i - 1].get(j).cloned().unwrap_or_else(zero);
        if j > 0 {
            if let Some(d) = self.e1[i - 1].get(j - 1) {
                v += d;
            }
        }
        v
    }

    pub fn outflow(&self, i: usize, j: usize) -> Rat {
        if i == self.graph.n {
            return zero();
        }
        let mut v = self.e0[i][j].clone();
        if let Some(d) = self.e1[i].get(j) {
            v += d;
        }
        v
    }

    /// Inflow minus outflow.
    pub fn divergence(&self, i: usize, j: usize) -> Rat {
        self.inflow(i, j) - self.outflow(i, j)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.e0.iter().chain(&self.e1).flatten().all(|v| !v.is_negative())
    }

    /// `λ` read off the bottom layer, with `λ_{L+1} = 0`.
    pub fn lambda(&self) -> Vec<Rat> {
        let n = self.graph.n;
        let len = self.graph.lambda_len();
        let mut out = vec![zero(); len];
        let mut acc = zero();
        for j in (1..=len).rev() {
            acc += self.divergence(n, j);
            out[j - 1] = acc.clone();
        }
        out
    }

    /// `λ̄` read off the top layer, starting from `λ̄_0 = λ_1`.
    pub fn lambda_bar(&self) -> Vec<Rat> {
        let mut acc = self.lambda().first().cloned().unwrap_or_else(zero);
        (0..self.graph.m)
            .map(|j| {
                acc += self.divergence(0, j);
                acc.clone()
            })
            .collect()
    }

    /// `ν_i` = total diagonal flow leaving layer `i − 1`.
    pub fn nu(&self) -> Vec<Rat> {
        self.e1.iter().map(|r| crate::rat::sum(r.as_slice())).collect()
    }

    /// Nonnegativity, zero divergence inside, and the bottom divergences of `λ`.
    pub fn check_admissible(&self, lambda: &[Rat]) -> Result<()> {
        let g = &self.graph;
        if lambda.len() != g.lambda_len() {
            return Err(Error::length("lambda", g.lambda_len(), lambda.len()));
        }
        for e in g.edges() {
            if self.get(e).is_negative() {
                return Err(Error::Inadmissible {
                    layer: e.layer,
                    col: e.col,
                    detail: format!("negative value on {} edge", if e.diagonal { "e1" } else { "e0" }),
                });
            }
        }
        for i in 1..g.n {
            for j in 0..g.width(i) {
                let d = self.divergence(i, j);
                if d != zero() {
                    return Err(Error::Inadmissible { layer: i, col: j, detail: format!("divergence {d}") });
                }
            }
        }
        let z = zero();
        let lam = |j: usize| if j == 0 { &lambda[0] } else { lambda.get(j - 1).unwrap_or(&z) };
        for j in 0..g.width(g.n) {
            let want = lam(j) - lam(j + 1);
            let d = self.divergence(g.n, j);
            if d != want {
                return Err(Error::Inadmissible {
                    layer: g.n,
                    col: j,
                    detail: format!("divergence {d}, expected {want}"),
                });
            }
        }
        Ok(())
    }

    pub fn scale(&self, k: &Rat) -> Flow {
        let mul = |rows: &Vec<Vec<Rat>>| rows.iter().map(|r| r.iter().map(|v| v * k).collect()).collect();
        Flow { graph: self.graph, e0: mul(&self.e0), e1: mul(&self.e1) }
    }

    pub fn add(&self, other: &Flow) -> Flow {
        let plus = |a: &Vec<Vec<Rat>>, b: &Vec<Vec<Rat>>| {
            a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect()).collect()
        };
        Flow { graph: self.graph, e0: plus(&self.e0, &other.e0), e1: plus(&self.e1, &other.e1) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::rats;

    #[test]
    fn graph_sizes() {
        let t = FlowGraph::trapezoid(3, 2);
        assert_eq!((t.width(0), t.diagonal_count(0), t.lambda_len()), (3, 3, 5));
        assert_eq!(t.edges().len(), 3 + 3 + 4 + 4 + 5 + 5);
        let p = FlowGraph::parallelogram(2, 2);
        assert_eq!((p.width(1), p.diagonal_count(1), p.lambda_len()), (3, 2, 2));
    }

    #[test]
    fn example_flow_reads_off_boundary() {
        let g = fixtures::trapezoid_flow();
        assert_eq!(g.lambda(), rats(&[6, 4, 3, 1, 1]));
        assert_eq!(g.lambda_bar(), rats(&[5, 2]));
        assert_eq!(g.nu(), rats(&[3, 2, 3]));
        g.check_admissible(&g.lambda()).unwrap();
    }

    #[test]
    fn inadmissible_flow_names_node() {
        let mut g = fixtures::trapezoid_flow();
        g.e0[1][2] = crate::rat::rat(5);
        match g.check_admissible(&rats(&[6, 4, 3, 1, 1])) {
            Err(Error::Inadmissible { layer, col, .. }) => assert_eq!((layer, col), (1, 2)),
            other => panic!("{other:?}"),
        }
    }
}
