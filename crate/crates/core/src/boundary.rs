//! Boundary quadruples and deficits.

use std::collections::BTreeMap;

use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::rat::{first_ascent, sum, zero, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySpec {
    pub lambda: Vec<Rat>,
    pub lambda_bar: Vec<Rat>,
    pub mu: Vec<Rat>,
    pub nu: Vec<Rat>,
}

/// The first structural defect of a boundary quadruple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structural {
    /// `λ_j < λ_{j+1}` (1-based `j`).
    LambdaNotMonotone { index: usize },
    /// `λ̄_j < λ̄_{j+1}` (1-based `j`).
    LambdaBarNotMonotone { index: usize },
    /// `|λ| − |λ̄| + |μ| − |ν|` is nonzero.
    Imbalance { value: Rat },
}

impl BoundarySpec {
    pub fn new(lambda: Vec<Rat>, lambda_bar: Vec<Rat>, mu: Vec<Rat>, nu: Vec<Rat>) -> Self {
        BoundarySpec { lambda, lambda_bar, mu, nu }
    }

    /// Spec with `μ = 0`.
    pub fn zero_mu(lambda: Vec<Rat>, lambda_bar: Vec<Rat>, nu: Vec<Rat>) -> Self {
        let mu = vec![zero(); nu.len()];
        BoundarySpec { lambda, lambda_bar, mu, nu }
    }

    pub fn n(&self) -> usize {
        self.nu.len()
    }

    pub fn m(&self) -> usize {
        self.lambda_bar.len()
    }

    /// `|λ| − |λ̄| + |μ| − |ν|`.
    pub fn imbalance(&self) -> Rat {
        sum(&self.lambda) - sum(&self.lambda_bar) + sum(&self.mu) - sum(&self.nu)
    }

    /// Monotonicity then balance, in that order.
    pub fn structural_violation(&self) -> Option<Structural> {
        if let Some(j) = first_ascent(&self.lambda) {
            return Some(Structural::LambdaNotMonotone { index: j + 1 });
        }
        if let Some(j) = first_ascent(&self.lambda_bar) {
            return Some(Structural::LambdaBarNotMonotone { index: j + 1 });
        }
        let value = self.imbalance();
        if value != zero() {
            return Some(Structural::Imbalance { value });
        }
        None
    }

    pub fn is_validated(&self) -> bool {
        self.structural_violation().is_none()
    }

    /// Trapezoid when `|λ| = n + m`, parallelogram when `|λ| = m`.
    pub fn infer_config(&self) -> Result<ConvexConfig> {
        let (n, m) = (self.n(), self.m());
        if n > 0 && self.lambda.len() == n + m {
            Ok(ConvexConfig::trapezoid(n, m))
        } else if n > 0 && self.lambda.len() == m {
            Ok(ConvexConfig::parallelogram(n, m))
        } else {
            Err(Error::Precondition("lengths fit neither a trapezoid nor a parallelogram; give a configuration".into()))
        }
    }

    /// Checks the tuple lengths against a configuration.
    pub fn check_dims(&self, config: &ConvexConfig) -> Result<()> {
        let n = config.n;
        if self.lambda.len() != config.lambda_len() {
            return Err(Error::length("lambda", config.lambda_len(), self.lambda.len()));
        }
        if self.lambda_bar.len() != config.lambda_bar_len() {
            return Err(Error::length("lambda_bar", config.lambda_bar_len(), self.lambda_bar.len()));
        }
        if self.mu.len() != n {
            return Err(Error::length("mu", n, self.mu.len()));
        }
        if self.nu.len() != n {
            return Err(Error::length("nu", n, self.nu.len()));
        }
        Ok(())
    }

    /// Adds `t` to every derivative entry of a trapezoid: shifts `λ`, `λ̄` and `ν` by `t`.
    pub fn shift_trapezoid(&self, t: &Rat) -> Self {
        let add = |v: &[Rat]| v.iter().map(|x| x + t).collect();
        BoundarySpec {
            lambda: add(&self.lambda),
            lambda_bar: add(&self.lambda_bar),
            mu: self.mu.clone(),
            nu: add(&self.nu),
        }
    }

    pub fn scale(&self, k: &Rat) -> Self {
        let mul = |v: &[Rat]| v.iter().map(|x| x * k).collect();
        BoundarySpec {
            lambda: mul(&self.lambda),
            lambda_bar: mul(&self.lambda_bar),
            mu: mul(&self.mu),
            nu: mul(&self.nu),
        }
    }
}

/// `(λ, λ̄, 0, ν − μ)`; feasibility is unchanged.
pub fn shift_mu(spec: &BoundarySpec) -> BoundarySpec {
    BoundarySpec {
        lambda: spec.lambda.clone(),
        lambda_bar: spec.lambda_bar.clone(),
        mu: vec![zero(); spec.mu.len()],
        nu: spec.nu.iter().zip(&spec.mu).map(|(v, u)| v - u).collect(),
    }
}

/// Row offsets `q_i = −(μ_1 + … + μ_i)` that turn an array with boundary `spec`
/// into one with boundary `shift_mu(spec)`.
pub fn mu_offsets(mu: &[Rat]) -> Vec<Rat> {
    let mut acc = zero();
    let mut out = vec![zero()];
    for u in mu {
        acc -= u;
        out.push(acc.clone());
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeficitProfile {
    /// `Δ_0 ..= Δ_n`.
    pub values: Vec<Rat>,
    /// Nonzero `δ_k(j)` keyed by `(k, j)`, `j` 1-based.
    pub per_column: BTreeMap<(usize, usize), Rat>,
}

/// `δ_k(j) = max(0, λ̄_{j−k} − λ_j)` with out-of-range `λ̄` terms dropped.
pub fn deficit_entry(lambda: &[Rat], lambda_bar: &[Rat], k: usize, j: usize) -> Rat {
    if j <= k || j - k > lambda_bar.len() || j > lambda.len() {
        return zero();
    }
    let d = &lambda_bar[j - k - 1] - &lambda[j - 1];
    if d > zero() {
        d
    } else {
        zero()
    }
}

/// `Δ_k` for a single `k`.
pub fn deficit(lambda: &[Rat], lambda_bar: &[Rat], k: usize) -> Rat {
    let mut total = zero();
    for j in k + 1..=lambda.len().min(k + lambda_bar.len()) {
        total += deficit_entry(lambda, lambda_bar, k, j);
    }
    total
}

/// All deficits `Δ_0 ..= Δ_n` where `n = |λ| − |λ̄|` in length.
pub fn deficits(lambda: &[Rat], lambda_bar: &[Rat]) -> Result<DeficitProfile> {
    if let Some(j) = first_ascent(lambda) {
        return Err(Error::Precondition(format!("lambda is not weakly decreasing at {}", j + 1)));
    }
    if let Some(j) = first_ascent(lambda_bar) {
        return Err(Error::Precondition(format!("lambda_bar is not weakly decreasing at {}", j + 1)));
    }
    if lambda.len() < lambda_bar.len() {
        return Err(Error::Precondition("lambda is shorter than lambda_bar".into()));
    }
    let n = lambda.len() - lambda_bar.len();
    let mut per_column = BTreeMap::new();
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut total = zero();
        for j in 1..=lambda.len() {
            let d = deficit_entry(lambda, lambda_bar, k, j);
            if d != zero() {
                total += &d;
                per_column.insert((k, j), d);
            }
        }
        values.push(total);
    }
    Ok(DeficitProfile { values, per_column })
}
