//! Convex grid configurations.
//!
//! Row `i` of a configuration holds the nodes `(i, j)` with `a[i] <= j <= b[i]`.
//! The row derivative of that row lives on `a[i]+1 ..= b[i]`.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexConfig {
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConfigKind {
    Triangular,
    Trapezoid,
    Parallelogram,
    General,
}

impl ConvexConfig {
    /// Builds and checks a configuration.
    pub fn new(n: usize, a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let c = ConvexConfig { n, a, b };
        c.check()?;
        Ok(c)
    }

    pub fn trapezoid(n: usize, m: usize) -> Self {
        ConvexConfig { n, a: vec![0; n + 1], b: (0..=n).map(|i| i + m).collect() }
    }

    pub fn triangular(n: usize) -> Self {
        Self::trapezoid(n, 0)
    }

    pub fn parallelogram(n: usize, m: usize) -> Self {
        ConvexConfig { n, a: vec![0; n + 1], b: vec![m; n + 1] }
    }

    /// Verifies the convexity conditions on the row bounds.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if self.n == 0 {
            return bad("n must be positive".into());
        }
        if self.a.len() != self.n + 1 || self.b.len() != self.n + 1 {
            return bad(format!(
                "expected {} row bounds, got a: {}, b: {}",
                self.n + 1,
                self.a.len(),
                self.b.len()
            ));
        }
        if self.a[0] != 0 {
            return bad("a_0 must be 0".into());
        }
        for i in 0..=self.n {
            if self.a[i] > self.b[i] {
                return bad(format!("a_{i} > b_{i}"));
            }
        }
        let mut prev_da = 0i64;
        let mut prev_db = 1i64;
        for i in 1..=self.n {
            let da = self.a[i] as i64 - self.a[i - 1] as i64;
            let db = self.b[i] as i64 - self.b[i - 1] as i64;
            if !(0..=1).contains(&da) || da < prev_da {
                return bad(format!("left boundary is not convex at row {i}"));
            }
            if !(0..=1).contains(&db) || db > prev_db {
                return bad(format!("right boundary is not convex at row {i}"));
            }
            prev_da = da;
            prev_db = db;
        }
        Ok(())
    }

    /// Width of the top row, `b_0`.
    pub fn m(&self) -> usize {
        self.b[0]
    }

    pub fn is_trapezoid(&self) -> bool {
        self.a.iter().all(|&a| a == 0) && (0..=self.n).all(|i| self.b[i] == self.b[0] + i)
    }

    pub fn is_parallelogram(&self) -> bool {
        self.a.iter().all(|&a| a == 0) && self.b.iter().all(|&b| b == self.b[0])
    }

    pub fn kind(&self) -> ConfigKind {
        if self.is_trapezoid() {
            if self.b[0] == 0 {
                ConfigKind::Triangular
            } else {
                ConfigKind::Trapezoid
            }
        } else if self.is_parallelogram() {
            ConfigKind::Parallelogram
        } else {
            ConfigKind::General
        }
    }

    /// Number of nodes in row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.b[i] - self.a[i] + 1
    }

    /// Number of derivative entries in row `i`.
    pub fn deriv_len(&self, i: usize) -> usize {
        self.b[i] - self.a[i]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i <= self.n && self.a[i] <= j && j <= self.b[i]
    }

    /// True when `∂x_{ij}` is defined.
    pub fn has_deriv(&self, i: usize, j: usize) -> bool {
        i <= self.n && self.a[i] < j && j <= self.b[i]
    }

    /// `|V|`.
    pub fn node_count(&self) -> usize {
        (0..=self.n).map(|i| self.row_len(i)).sum()
    }

    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..=self.n).flat_map(move |i| (self.a[i]..=self.b[i]).map(move |j| (i, j)))
    }

    /// Nodes on the outer boundary `V_0`.
    pub fn boundary_nodes(&self) -> Vec<(usize, usize)> {
        self.nodes()
            .filter(|&(i, j)| i == 0 || i == self.n || j == self.a[i] || j == self.b[i])
            .collect()
    }

    pub fn lambda_len(&self) -> usize {
        self.deriv_len(self.n)
    }

    pub fn lambda_bar_len(&self) -> usize {
        self.deriv_len(0)
    }

    /// All pairs `(g, l)` of derivative positions with `∂x_g >= ∂x_l` required.
    ///
    /// Both rhombus families are taken wherever both positions exist in the grid.
    pub fn constraint_pairs(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in self.a[i] + 1..=self.b[i] {
                if self.has_deriv(i - 1, j) {
                    out.push(((i, j), (i - 1, j)));
                }
            }
            for j in self.a[i - 1] + 1..=self.b[i - 1] {
                if self.has_deriv(i, j + 1) {
                    out.push(((i - 1, j), (i, j + 1)));
                }
            }
        }
        out
    }
}
