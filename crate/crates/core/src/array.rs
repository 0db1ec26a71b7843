//! Strip-concave arrays and their row derivatives.

use crate::boundary::BoundarySpec;
use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::rat::{is_integral, zero, Rat};

/// Array entries stored densely: `rows[i][k]` is `x_{i, a_i + k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripConcaveArray {
    pub config: ConvexConfig,
    pub rows: Vec<Vec<Rat>>,
}

/// Row derivative: `rows[i][k]` is `∂x_{i, a_i + 1 + k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GTPattern {
    pub config: ConvexConfig,
    pub rows: Vec<Vec<Rat>>,
}

/// A failed rhombus inequality `∂x_greater >= ∂x_lesser`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub greater: (usize, usize),
    pub lesser: (usize, usize),
}

fn check_rows(config: &ConvexConfig, rows: &[Vec<Rat>], len: impl Fn(usize) -> usize) -> Result<()> {
    if rows.len() != config.n + 1 {
        return Err(Error::length("rows", config.n + 1, rows.len()));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != len(i) {
            return Err(Error::length("row", len(i), row.len()));
        }
    }
    Ok(())
}

impl StripConcaveArray {
    pub fn new(config: ConvexConfig, rows: Vec<Vec<Rat>>) -> Result<Self> {
        config.check()?;
        check_rows(&config, &rows, |i| config.row_len(i))?;
        Ok(StripConcaveArray { config, rows })
    }

    pub fn zeros(config: ConvexConfig) -> Self {
        let rows = (0..=config.n).map(|i| vec![zero(); config.row_len(i)]).collect();
        StripConcaveArray { config, rows }
    }

    /// `x_{ij}`; panics outside `V`.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j - self.config.a[i]]
    }

    pub fn left(&self, i: usize) -> &Rat {
        self.rows[i].first().expect("rows are nonempty")
    }

    pub fn right(&self, i: usize) -> &Rat {
        self.rows[i].last().expect("rows are nonempty")
    }

    pub fn derivative(&self) -> GTPattern {
        let rows = self
            .rows
            .iter()
            .map(|r| r.windows(2).map(|w| &w[1] - &w[0]).collect())
            .collect();
        GTPattern { config: self.config.clone(), rows }
    }

    /// `(λ, λ̄, μ, ν)` read off the four sides.
    pub fn boundary(&self) -> BoundarySpec {
        let d = self.derivative();
        let n = self.config.n;
        BoundarySpec {
            lambda: d.rows[n].clone(),
            lambda_bar: d.rows[0].clone(),
            mu: (1..=n).map(|i| self.left(i) - self.left(i - 1)).collect(),
            nu: (1..=n).map(|i| self.right(i) - self.right(i - 1)).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(is_integral)
    }

    /// Normalization plus every rhombus inequality.
    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none() && self.rows[0][0] == zero()
    }

    pub fn first_violation(&self) -> Option<Violation> {
        self.derivative().first_violation()
    }

    /// Adds `shift[i]` to every entry of row `i`.
    pub fn shift_rows(&self, shift: &[Rat]) -> Self {
        let rows = self
            .rows
            .iter()
            .zip(shift)
            .map(|(r, s)| r.iter().map(|x| x + s).collect())
            .collect();
        StripConcaveArray { config: self.config.clone(), rows }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| x * k).collect()).collect();
        StripConcaveArray { config: self.config.clone(), rows }
    }
}

/// Checks that `x` has a well-formed configuration and satisfies every inequality.
pub fn validate_array(x: &StripConcaveArray) -> Result<bool> {
    x.config.check()?;
    check_rows(&x.config, &x.rows, |i| x.config.row_len(i))?;
    Ok(x.is_valid())
}

impl GTPattern {
    pub fn new(config: ConvexConfig, rows: Vec<Vec<Rat>>) -> Result<Self> {
        config.check()?;
        check_rows(&config, &rows, |i| config.deriv_len(i))?;
        Ok(GTPattern { config, rows })
    }

    /// `∂x_{ij}`; panics outside the derivative range.
    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j - self.config.a[i] - 1]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.rows[i][j - self.config.a[i] - 1]
    }

    pub fn first_violation(&self) -> Option<Violation> {
        self.config
            .constraint_pairs()
            .into_iter()
            .find(|&(g, l)| self.get(g.0, g.1) < self.get(l.0, l.1))
            .map(|(greater, lesser)| Violation { greater, lesser })
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(is_integral)
    }

    pub fn lambda(&self) -> &[Rat] {
        &self.rows[self.config.n]
    }

    pub fn lambda_bar(&self) -> &[Rat] {
        &self.rows[0]
    }

    /// Row sums; with a zero left column these are the right-column entries.
    pub fn row_sums(&self) -> Vec<Rat> {
        self.rows.iter().map(|r| crate::rat::sum(r.as_slice())).collect()
    }

    /// Integrates with the given left column `x_{i, a_i}`.
    pub fn integrate_with(&self, left: &[Rat]) -> StripConcaveArray {
        let rows = self
            .rows
            .iter()
            .zip(left)
            .map(|(r, x0)| {
                let mut acc = x0.clone();
                let mut out = Vec::with_capacity(r.len() + 1);
                out.push(acc.clone());
                for d in r {
                    acc += d;
                    out.push(acc.clone());
                }
                out
            })
            .collect();
        StripConcaveArray { config: self.config.clone(), rows }
    }

    /// Integrates with a zero left column, giving `μ = 0`.
    pub fn integrate(&self) -> StripConcaveArray {
        self.integrate_with(&vec![zero(); self.config.n + 1])
    }

    /// Adds `t` to every entry.
    pub fn shift(&self, t: &Rat) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| x + t).collect()).collect();
        GTPattern { config: self.config.clone(), rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::{rat, ratio, rats};

    #[test]
    fn trapezoid_example_valid_and_boundary() {
        let x = fixtures::trapezoid_array();
        assert!(validate_array(&x).unwrap());
        let s = x.boundary();
        assert_eq!(s.lambda, rats(&[6, 4, 3, 1, 1]));
        assert_eq!(s.lambda_bar, rats(&[5, 2]));
        assert_eq!(s.mu, rats(&[1, -7, -2]));
        assert_eq!(s.nu, rats(&[4, -5, 1]));
    }

    #[test]
    fn perturbed_trapezoid_is_invalid() {
        let mut x = fixtures::trapezoid_array();
        x.rows[1][1] = rat(9);
        assert!(!validate_array(&x).unwrap());
    }

    #[test]
    fn hexagon_derivative() {
        let d = fixtures::hexagon_array().derivative();
        assert_eq!(d, fixtures::hexagon_pattern());
        assert_eq!(d.rows[1][1], ratio(3, 2));
    }

    #[test]
    fn zero_and_constant_rows() {
        for c in [ConvexConfig::trapezoid(3, 2), ConvexConfig::parallelogram(2, 3)] {
            let z = StripConcaveArray::zeros(c.clone());
            assert!(validate_array(&z).unwrap());
            assert!(z.boundary().lambda.iter().all(|v| *v == zero()));
            let shifted = z.shift_rows(&rats(&[0, 4, -1, 7][..=c.n]));
            assert!(shifted.derivative().rows.iter().flatten().all(|v| *v == zero()));
        }
    }

    #[test]
    fn nonzero_corner_is_invalid() {
        let mut z = StripConcaveArray::zeros(ConvexConfig::trapezoid(1, 1));
        for r in &mut z.rows {
            for v in r.iter_mut() {
                *v = rat(1);
            }
        }
        assert!(!z.is_valid());
    }

    #[test]
    fn integrate_round_trip() {
        let x = fixtures::trapezoid_array();
        let left: Vec<Rat> = x.rows.iter().map(|r| r[0].clone()).collect();
        assert_eq!(x.derivative().integrate_with(&left), x);
    }

    #[test]
    fn wrong_shape_is_error() {
        let c = ConvexConfig::trapezoid(1, 1);
        assert!(StripConcaveArray::new(c.clone(), vec![rats(&[0, 1]), rats(&[0, 1])]).is_err());
        assert!(GTPattern::new(c, vec![rats(&[1])]).is_err());
    }
}
