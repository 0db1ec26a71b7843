//! Worked examples: a hexagonal and a trapezoidal array, their derivatives,
//! the flow of the trapezoidal one before and after a zigzag swap, and its tableau.

use crate::array::{GTPattern, StripConcaveArray};
use crate::config::ConvexConfig;
use crate::flow::{Flow, FlowGraph};
use crate::rat::{rat, ratio, rats};
use crate::tableau::SkewTableau;

pub fn hexagon_config() -> ConvexConfig {
    ConvexConfig { n: 3, a: vec![0, 0, 0, 1], b: vec![2, 3, 3, 3] }
}

pub fn hexagon_array() -> StripConcaveArray {
    let rows = vec![
        rats(&[0, 2, 3]),
        vec![rat(2), rat(4), ratio(11, 2), rat(4)],
        rats(&[0, 3, 5, 4]),
        rats(&[5, 8, 8]),
    ];
    StripConcaveArray { config: hexagon_config(), rows }
}

pub fn trapezoid_array() -> StripConcaveArray {
    let rows = vec![
        rats(&[0, 5, 7]),
        rats(&[1, 6, 9, 11]),
        rats(&[-6, -1, 3, 5, 6]),
        rats(&[-8, -2, 2, 5, 6, 7]),
    ];
    StripConcaveArray { config: ConvexConfig::trapezoid(3, 2), rows }
}

pub fn hexagon_pattern() -> GTPattern {
    let rows = vec![
        rats(&[2, 1]),
        vec![rat(2), ratio(3, 2), ratio(-3, 2)],
        rats(&[3, 2, -1]),
        rats(&[3, 0]),
    ];
    GTPattern { config: hexagon_config(), rows }
}

pub fn trapezoid_pattern() -> GTPattern {
    let rows = vec![rats(&[5, 2]), rats(&[5, 3, 2]), rats(&[5, 4, 2, 1]), rats(&[6, 4, 3, 1, 1])];
    GTPattern { config: ConvexConfig::trapezoid(3, 2), rows }
}

fn flow(e0: &[&[i64]], e1: &[&[i64]]) -> Flow {
    Flow {
        graph: FlowGraph::trapezoid(3, 2),
        e0: e0.iter().map(|r| rats(r)).collect(),
        e1: e1.iter().map(|r| rats(r)).collect(),
    }
}

/// The flow of the trapezoidal example.
pub fn trapezoid_flow() -> Flow {
    flow(&[&[1, 2, 0], &[1, 1, 1, 1], &[0, 1, 1, 1, 0]], &[&[0, 1, 2], &[0, 1, 0, 1], &[1, 0, 1, 0, 1]])
}

/// The same flow after the zigzag swap at layer 2.
pub fn swapped_flow() -> Flow {
    flow(&[&[1, 2, 0], &[0, 2, 0, 1], &[0, 2, 0, 2, 0]], &[&[0, 1, 2], &[1, 0, 1, 1], &[0, 1, 0, 0, 1]])
}

pub fn trapezoid_tableau() -> SkewTableau {
    SkewTableau {
        outer: vec![6, 4, 3, 1, 1],
        inner: vec![5, 2],
        rows: vec![vec![3], vec![1, 2], vec![1, 1, 3], vec![2], vec![3]],
    }
}
