//! Embedding a convex configuration into a trapezoid.
//!
//! Nodes left of the left boundary get derivative `c`, nodes right of the right
//! boundary get `−c`. For `c` large enough the extended data is feasible exactly
//! when the original is.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::array::StripConcaveArray;
use crate::boundary::BoundarySpec;
use crate::config::ConvexConfig;
use crate::error::Result;
use crate::rat::{max_abs, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub original: ConvexConfig,
    /// Trapezoid of size `(n, b_0)`.
    pub config: ConvexConfig,
    pub spec: BoundarySpec,
    pub c: Rat,
    /// Last row whose left bound is 0.
    pub p: usize,
    /// Last row whose right bound grows every step.
    pub q: usize,
}

/// `α · |V|^|V|` with `α` the largest absolute boundary value, or 1 when `α = 0`.
pub fn default_constant(config: &ConvexConfig, spec: &BoundarySpec) -> Rat {
    let alpha = max_abs(spec.lambda.iter().chain(&spec.lambda_bar).chain(&spec.mu).chain(&spec.nu));
    if alpha.is_zero() {
        return Rat::one();
    }
    let v = config.node_count();
    let pow: BigInt = Pow::pow(BigInt::from(v), v as u32);
    alpha * Rat::from_integer(pow)
}

pub fn extend_to_trapezoid(config: &ConvexConfig, spec: &BoundarySpec) -> Result<Extension> {
    let c = default_constant(config, spec);
    extend_to_trapezoid_with(config, spec, &c)
}

pub fn extend_to_trapezoid_with(config: &ConvexConfig, spec: &BoundarySpec, c: &Rat) -> Result<Extension> {
    config.check()?;
    spec.check_dims(config)?;
    let n = config.n;
    let m = config.b[0];
    let p = (0..=n).rev().find(|&i| config.a[i] == 0).unwrap_or(0);
    let q = (0..=n).rev().find(|&i| config.b[i] == m + i).unwrap_or(0);
    let neg = -c.clone();

    let mut lambda = vec![c.clone(); n - p];
    lambda.extend(spec.lambda.iter().cloned());
    lambda.extend(std::iter::repeat_n(neg, n - q));
    let mu = (1..=n).map(|i| if i > p { &spec.mu[i - 1] - c } else { spec.mu[i - 1].clone() }).collect();
    let nu = (1..=n).map(|i| if i > q { &spec.nu[i - 1] - c } else { spec.nu[i - 1].clone() }).collect();

    Ok(Extension {
        original: config.clone(),
        config: ConvexConfig::trapezoid(n, m),
        spec: BoundarySpec { lambda, lambda_bar: spec.lambda_bar.clone(), mu, nu },
        c: c.clone(),
        p,
        q,
    })
}

impl Extension {
    pub fn is_identity(&self) -> bool {
        self.original == self.config
    }

    /// Node `(i, j)` of the original grid is node `(i, j)` of the trapezoid.
    pub fn embed(&self, i: usize, j: usize) -> (usize, usize) {
        (i, j)
    }

    /// Nodes added on the left, `j < a_i`.
    pub fn left_nodes(&self) -> Vec<(usize, usize)> {
        (0..=self.original.n).flat_map(|i| (0..self.original.a[i]).map(move |j| (i, j))).collect()
    }

    /// Nodes added on the right, `b_i < j <= i + b_0`.
    pub fn right_nodes(&self) -> Vec<(usize, usize)> {
        let o = &self.original;
        (0..=o.n).flat_map(|i| (o.b[i] + 1..=i + o.b[0]).map(move |j| (i, j))).collect()
    }

    pub fn restrict(&self, x: &StripConcaveArray) -> StripConcaveArray {
        let o = &self.original;
        let rows = (0..=o.n).map(|i| x.rows[i][o.a[i]..=o.b[i]].to_vec()).collect();
        StripConcaveArray { config: o.clone(), rows }
    }

    /// Extends an array on the original grid with slopes `c` and `−c`.
    pub fn extend_array(&self, x: &StripConcaveArray) -> StripConcaveArray {
        let o = &self.original;
        let rows = (0..=o.n)
            .map(|i| {
                let (a, b) = (o.a[i], o.b[i]);
                (0..=i + o.b[0])
                    .map(|j| {
                        if j < a {
                            x.get(i, a) - &self.c * Rat::from_integer(BigInt::from(a - j))
                        } else if j <= b {
                            x.get(i, j).clone()
                        } else {
                            x.get(i, b) - &self.c * Rat::from_integer(BigInt::from(j - b))
                        }
                    })
                    .collect()
            })
            .collect();
        StripConcaveArray { config: self.config.clone(), rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::{rat, rats};

    #[test]
    fn trapezoid_is_identity() {
        let x = fixtures::trapezoid_array();
        let e = extend_to_trapezoid(&x.config, &x.boundary()).unwrap();
        assert!(e.is_identity());
        assert_eq!(e.spec, x.boundary());
        assert_eq!(e.restrict(&x), x);
    }

    #[test]
    fn hexagon_bookkeeping() {
        let x = fixtures::hexagon_array();
        let e = extend_to_trapezoid_with(&x.config, &x.boundary(), &rat(10)).unwrap();
        assert_eq!((e.p, e.q), (2, 1));
        assert_eq!(e.spec.lambda, rats(&[10, 3, 0, -10, -10]));
        assert_eq!(e.spec.mu, rats(&[2, -2, -5]));
        assert_eq!(e.spec.nu, rats(&[1, -10, -6]));
        assert_eq!(e.left_nodes(), vec![(3, 0)]);
        assert_eq!(e.right_nodes(), vec![(2, 4), (3, 4), (3, 5)]);
        let big = e.extend_array(&x);
        assert!(big.is_valid());
        assert_eq!(big.boundary(), e.spec);
        assert_eq!(e.restrict(&big), x);
    }

    #[test]
    fn parallelogram_extension() {
        let cfg = ConvexConfig::parallelogram(2, 2);
        let spec = BoundarySpec::new(rats(&[3, 1]), rats(&[2, 1]), rats(&[0, 0]), rats(&[1, 0]));
        let e = extend_to_trapezoid_with(&cfg, &spec, &rat(7)).unwrap();
        assert_eq!(e.config, ConvexConfig::trapezoid(2, 2));
        assert_eq!(e.spec.lambda, rats(&[3, 1, -7, -7]));
        assert_eq!(e.spec.nu, rats(&[-6, -7]));
        assert_eq!(e.spec.mu, rats(&[0, 0]));
    }

    #[test]
    fn default_constant_size() {
        let x = fixtures::hexagon_array();
        let c = default_constant(&x.config, &x.boundary());
        let expected: BigInt = Pow::pow(BigInt::from(14), 14u32) * 5;
        assert_eq!(c, Rat::from_integer(expected));
        let z = StripConcaveArray::zeros(ConvexConfig::parallelogram(2, 1));
        assert_eq!(default_constant(&z.config, &z.boundary()), Rat::one());
    }
}
