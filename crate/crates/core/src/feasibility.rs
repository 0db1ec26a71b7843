//! Deciding whether a boundary quadruple is realized by some strip-concave array.
//!
//! For a trapezoid of size `(n, m)` the data `(λ, λ̄, μ, ν)` is feasible exactly when
//! it is structurally sound and, for every `I ⊆ {1..n}`,
//!
//! ```text
//! λ[1,|I|] + μ(I) − ν(I) − Δ_|I| >= 0.
//! ```
//!
//! For fixed `|I| = k` the left side is smallest on the `k` indices with the largest
//! `ν_i − μ_i`, so only `n + 1` subsets need checking.

use crate::boundary::{deficit, BoundarySpec, Structural};
use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::rat::{sum, zero, Rat};
use crate::reduce::{extend_to_trapezoid, extend_to_trapezoid_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Trapezoid,
    Parallelogram,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Trapezoid => "trapezoid",
            Family::Parallelogram => "parallelogram",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Structural(Structural),
    /// A subset `I` (1-based, sorted) whose inequality evaluates to `value < 0`.
    Inequality { family: Family, subset: Vec<usize>, value: Rat, deficit: Rat },
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::Structural(Structural::LambdaNotMonotone { index }) => {
                write!(f, "lambda increases after position {index}")
            }
            Certificate::Structural(Structural::LambdaBarNotMonotone { index }) => {
                write!(f, "lambda_bar increases after position {index}")
            }
            Certificate::Structural(Structural::Imbalance { value }) => {
                write!(f, "boundary sums do not balance (excess {value})")
            }
            Certificate::Inequality { family, subset, value, .. } => {
                write!(f, "{} inequality for I = {subset:?} evaluates to {value}", family.name())
            }
        }
    }
}

impl Certificate {
    /// Recomputes the certificate's value on `spec`; structural certificates return `None`.
    pub fn reevaluate(&self, spec: &BoundarySpec) -> Option<Rat> {
        match self {
            Certificate::Structural(_) => None,
            Certificate::Inequality { family: Family::Trapezoid, subset, .. } => {
                Some(trapezoid_value(spec, subset).0)
            }
            Certificate::Inequality { family: Family::Parallelogram, subset, .. } => {
                Some(parallelogram_value(spec, subset).0)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub certificate: Option<Certificate>,
}

impl FeasibilityVerdict {
    fn ok() -> Self {
        FeasibilityVerdict { feasible: true, certificate: None }
    }

    fn fail(c: Certificate) -> Self {
        FeasibilityVerdict { feasible: false, certificate: Some(c) }
    }

    /// Converts an infeasible verdict into an error.
    pub fn into_result(self) -> Result<()> {
        match self.certificate {
            Some(c) if !self.feasible => Err(Error::Infeasible(Box::new(c))),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// One worst-case subset per size.
    #[default]
    Shortcut,
    /// All `2^n` subsets.
    Exhaustive,
}

/// `(λ[1,k] + μ(I) − ν(I) − Δ_k, Δ_k)` for `k = |I|`.
pub fn trapezoid_value(spec: &BoundarySpec, subset: &[usize]) -> (Rat, Rat) {
    let k = subset.len();
    let d = deficit(&spec.lambda, &spec.lambda_bar, k);
    let v = sum(&spec.lambda[..k]) + subset_sum(spec, subset) - &d;
    (v, d)
}

/// The parallelogram inequality for `I`; the deficit is zero when `|I| > m`.
pub fn parallelogram_value(spec: &BoundarySpec, subset: &[usize]) -> (Rat, Rat) {
    let k = subset.len();
    let m = spec.lambda_bar.len();
    let (base, d) = parallelogram_constant(spec, k, m);
    (base + subset_sum(spec, subset), d)
}

fn parallelogram_constant(spec: &BoundarySpec, k: usize, m: usize) -> (Rat, Rat) {
    if k <= m {
        let d = deficit(&spec.lambda, &spec.lambda_bar, k);
        let v = sum(&spec.lambda[..k]) - sum(&spec.lambda_bar[m - k..]) - &d;
        (v, d)
    } else {
        (sum(&spec.lambda) - sum(&spec.lambda_bar), zero())
    }
}

fn subset_sum(spec: &BoundarySpec, subset: &[usize]) -> Rat {
    subset.iter().fold(zero(), |acc, &i| acc + &spec.mu[i - 1] - &spec.nu[i - 1])
}

/// Indices of the `k` largest `ν_i − μ_i`, ties to the smaller index, for every `k`.
fn worst_order(spec: &BoundarySpec) -> Vec<usize> {
    let gap: Vec<Rat> = spec.nu.iter().zip(&spec.mu).map(|(v, u)| v - u).collect();
    let mut order: Vec<usize> = (1..=spec.nu.len()).collect();
    order.sort_by(|&x, &y| gap[y - 1].cmp(&gap[x - 1]).then(x.cmp(&y)));
    order
}

fn check_dims(spec: &BoundarySpec, n: usize, lambda_len: usize, m: usize) -> Result<()> {
    if spec.lambda.len() != lambda_len {
        return Err(Error::length("lambda", lambda_len, spec.lambda.len()));
    }
    if spec.lambda_bar.len() != m {
        return Err(Error::length("lambda_bar", m, spec.lambda_bar.len()));
    }
    if spec.mu.len() != n {
        return Err(Error::length("mu", n, spec.mu.len()));
    }
    if spec.nu.len() != n {
        return Err(Error::length("nu", n, spec.nu.len()));
    }
    Ok(())
}

/// Runs a family of subset inequalities `constant(|I|) + (μ − ν)(I) >= 0`.
fn run_family(
    spec: &BoundarySpec,
    family: Family,
    strategy: Strategy,
    constant: impl Fn(usize) -> (Rat, Rat),
) -> FeasibilityVerdict {
    if let Some(s) = spec.structural_violation() {
        return FeasibilityVerdict::fail(Certificate::Structural(s));
    }
    let n = spec.nu.len();
    let consts: Vec<(Rat, Rat)> = (0..=n).map(&constant).collect();
    let fail = |subset: Vec<usize>| {
        let (c, d) = &consts[subset.len()];
        let value = c + subset_sum(spec, &subset);
        Certificate::Inequality { family, subset, value, deficit: d.clone() }
    };
    match strategy {
        Strategy::Shortcut => {
            let order = worst_order(spec);
            let mut acc = zero();
            for k in 0..=n {
                if k > 0 {
                    let i = order[k - 1];
                    acc += &spec.mu[i - 1];
                    acc -= &spec.nu[i - 1];
                }
                if &consts[k].0 + &acc < zero() {
                    let mut subset = order[..k].to_vec();
                    subset.sort_unstable();
                    return FeasibilityVerdict::fail(fail(subset));
                }
            }
            FeasibilityVerdict::ok()
        }
        Strategy::Exhaustive => {
            assert!(n < usize::BITS as usize, "too many rows for exhaustive search");
            let d: Vec<Rat> = spec.mu.iter().zip(&spec.nu).map(|(u, v)| u - v).collect();
            let mut partial = vec![zero(); 1usize << n];
            let mut worst: Option<Vec<usize>> = None;
            for mask in 0usize..1 << n {
                if mask > 0 {
                    let low = mask.trailing_zeros() as usize;
                    partial[mask] = &partial[mask & (mask - 1)] + &d[low];
                }
                let k = mask.count_ones() as usize;
                if &consts[k].0 + &partial[mask] < zero() {
                    let subset: Vec<usize> = (0..n).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
                    let better = match &worst {
                        None => true,
                        Some(w) => (subset.len(), &subset) < (w.len(), w),
                    };
                    if better {
                        worst = Some(subset);
                    }
                }
            }
            match worst {
                Some(subset) => FeasibilityVerdict::fail(fail(subset)),
                None => FeasibilityVerdict::ok(),
            }
        }
    }
}

pub fn check_trapezoid(spec: &BoundarySpec, n: usize, m: usize) -> Result<FeasibilityVerdict> {
    check_trapezoid_with(spec, n, m, Strategy::Shortcut)
}

pub fn check_trapezoid_with(spec: &BoundarySpec, n: usize, m: usize, strategy: Strategy) -> Result<FeasibilityVerdict> {
    check_dims(spec, n, n + m, m)?;
    Ok(run_family(spec, Family::Trapezoid, strategy, |k| {
        let d = deficit(&spec.lambda, &spec.lambda_bar, k);
        (sum(&spec.lambda[..k]) - &d, d)
    }))
}

pub fn check_parallelogram(spec: &BoundarySpec, n: usize, m: usize) -> Result<FeasibilityVerdict> {
    check_parallelogram_with(spec, n, m, Strategy::Shortcut)
}

pub fn check_parallelogram_with(
    spec: &BoundarySpec,
    n: usize,
    m: usize,
    strategy: Strategy,
) -> Result<FeasibilityVerdict> {
    check_dims(spec, n, m, m)?;
    Ok(run_family(spec, Family::Parallelogram, strategy, |k| parallelogram_constant(spec, k, m)))
}

/// Any convex configuration, through the trapezoid extension.
///
/// Structural defects are reported against the input; inequality certificates
/// refer to the extended data, whose row indices coincide with the input's.
pub fn check_general(config: &ConvexConfig, spec: &BoundarySpec) -> Result<FeasibilityVerdict> {
    check_general_with(config, spec, Strategy::Shortcut, None)
}

pub fn check_general_with(
    config: &ConvexConfig,
    spec: &BoundarySpec,
    strategy: Strategy,
    c: Option<&Rat>,
) -> Result<FeasibilityVerdict> {
    config.check()?;
    spec.check_dims(config)?;
    if let Some(s) = spec.structural_violation() {
        return Ok(FeasibilityVerdict::fail(Certificate::Structural(s)));
    }
    let ext = match c {
        Some(c) => extend_to_trapezoid_with(config, spec, c)?,
        None => extend_to_trapezoid(config, spec)?,
    };
    check_trapezoid_with(&ext.spec, config.n, config.b[0], strategy)
}
