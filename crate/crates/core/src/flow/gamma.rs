//! The linear bijection between patterns and admissible flows.
//!
//! With sentinels `∂x_{i0} = λ_1` and `∂x_{ij} = 0` past the end of a row,
//!
//! ```text
//! g(e0_{ij}) = ∂x_{ij} − ∂x_{i+1,j+1}
//! g(e1_{ij}) = ∂x_{i+1,j+1} − ∂x_{i,j+1}
//! ```

use super::{Flow, FlowGraph};
use crate::array::{GTPattern, StripConcaveArray};
use crate::error::Result;
use crate::rat::{zero, Rat};

pub fn gamma(x: &StripConcaveArray) -> Result<Flow> {
    gamma_pattern(&x.derivative())
}

pub fn gamma_pattern(p: &GTPattern) -> Result<Flow> {
    let graph = FlowGraph::for_config(&p.config)?;
    let top = p.lambda().first().cloned().unwrap_or_else(zero);
    let z = zero();
    let d = |i: usize, j: usize| -> &Rat {
        if j == 0 {
            &top
        } else {
            p.rows[i].get(j - 1).unwrap_or(&z)
        }
    };
    let mut g = graph.zero_flow();
    for i in 0..graph.n {
        for j in 0..graph.width(i) {
            g.e0[i][j] = d(i, j) - d(i + 1, j + 1);
        }
        for j in 0..graph.diagonal_count(i) {
            g.e1[i][j] = d(i + 1, j + 1) - d(i, j + 1);
        }
    }
    Ok(g)
}

/// Pattern of an admissible flow, with `λ` read off the flow itself.
pub fn gamma_inv_pattern(g: &Flow) -> Result<GTPattern> {
    let lambda = g.lambda();
    g.check_admissible(&lambda)?;
    Ok(rebuild(g, &lambda))
}

fn rebuild(g: &Flow, lambda: &[Rat]) -> GTPattern {
    let graph = g.graph;
    let mut rows = vec![Vec::new(); graph.n + 1];
    rows[graph.n] = lambda.to_vec();
    for i in (0..graph.n).rev() {
        rows[i] = (1..=graph.last_col(i)).map(|j| &rows[i + 1][j - 1] - &g.e1[i][j - 1]).collect();
    }
    GTPattern { config: graph.config(), rows }
}

/// Array with zero left column whose flow is `g`; fails on the first inadmissible node.
pub fn gamma_inv(g: &Flow, lambda: &[Rat]) -> Result<StripConcaveArray> {
    g.check_admissible(lambda)?;
    Ok(rebuild(g, lambda).integrate())
}
