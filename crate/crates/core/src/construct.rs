//! Witness construction for feasible boundary data.

use num_traits::{Signed, Zero};

use crate::array::{GTPattern, StripConcaveArray};
use crate::boundary::{mu_offsets, shift_mu, BoundarySpec};
use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::feasibility::{check_general_with, check_trapezoid, Strategy};
use crate::rat::{first_ascent, is_integral, sum, zero, Rat};
use crate::reduce::{extend_to_trapezoid, extend_to_trapezoid_with};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum BuildMode {
    /// Peel the largest step that keeps the data feasible.
    #[default]
    Accelerated,
    /// Unit steps; integer data only.
    ProofVerbatim,
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

/// Pattern rows (row 0 empty) of the triangular witness for `(λ, ν)`.
///
/// Row `k − 1` is obtained from row `k` by merging the pair `λ_p, λ_{p+1}`
/// bracketing `ν_k` into `λ_p + λ_{p+1} − ν_k`, with the smallest such `p`.
fn triangular_rows(lambda: &[Rat], nu: &[Rat]) -> Result<Vec<Vec<Rat>>> {
    let n = nu.len();
    let mut rows = vec![Vec::new(); n + 1];
    rows[n] = lambda.to_vec();
    for k in (2..=n).rev() {
        let cur = &rows[k];
        let v = &nu[k - 1];
        let p = (1..k)
            .find(|&p| &cur[p - 1] >= v && v >= &cur[p])
            .ok_or_else(|| internal(format!("no bracketing pair for nu_{k}")))?;
        let mut next = Vec::with_capacity(k - 1);
        next.extend_from_slice(&cur[..p - 1]);
        next.push(&cur[p - 1] + &cur[p] - v);
        next.extend_from_slice(&cur[p + 1..]);
        rows[k - 1] = next;
    }
    if n >= 1 && rows[1] != [nu[0].clone()] {
        return Err(internal("triangular recursion did not close"));
    }
    Ok(rows)
}

pub fn build_triangular(lambda: &[Rat], nu: &[Rat]) -> Result<StripConcaveArray> {
    let n = nu.len();
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    if lambda.len() != n {
        return Err(Error::length("lambda", n, lambda.len()));
    }
    let spec = BoundarySpec::zero_mu(lambda.to_vec(), Vec::new(), nu.to_vec());
    check_trapezoid(&spec, n, 0)?.into_result()?;
    let rows = triangular_rows(lambda, nu)?;
    finish(GTPattern { config: ConvexConfig::triangular(n), rows }, &spec)
}

fn finish(pattern: GTPattern, spec: &BoundarySpec) -> Result<StripConcaveArray> {
    let x = pattern.integrate();
    if let Some(v) = x.first_violation() {
        return Err(internal(format!("constructed array violates {:?} >= {:?}", v.greater, v.lesser)));
    }
    if &x.boundary() != spec {
        return Err(internal("constructed array has the wrong boundary"));
    }
    Ok(x)
}

pub fn build_trapezoid(lambda: &[Rat], lambda_bar: &[Rat], nu: &[Rat]) -> Result<StripConcaveArray> {
    build_trapezoid_with(lambda, lambda_bar, nu, BuildMode::Accelerated)
}

pub fn build_trapezoid_with(
    lambda: &[Rat],
    lambda_bar: &[Rat],
    nu: &[Rat],
    mode: BuildMode,
) -> Result<StripConcaveArray> {
    let n = nu.len();
    let m = lambda_bar.len();
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let spec = BoundarySpec::zero_mu(lambda.to_vec(), lambda_bar.to_vec(), nu.to_vec());
    check_trapezoid(&spec, n, m)?.into_result()?;
    if mode == BuildMode::ProofVerbatim
        && !lambda.iter().chain(lambda_bar).chain(nu).all(is_integral)
    {
        return Err(Error::NonInteger("unit-step construction needs integer data".into()));
    }
    // Shift so the smallest entry of λ is zero; λ̄ then stays nonnegative too.
    let low = &lambda[n + m - 1];
    let t = if low.is_negative() { -low.clone() } else { zero() };
    let shifted = spec.shift_trapezoid(&t);
    let mut b = Builder { mode, cap: 10 * n * n };
    let rows = b.rows(&shifted.lambda, &shifted.lambda_bar, &shifted.nu)?;
    let pattern = GTPattern { config: ConvexConfig::trapezoid(n, m), rows }.shift(&-t);
    finish(pattern, &spec)
}

struct Builder {
    mode: BuildMode,
    cap: usize,
}

impl Builder {
    /// Pattern rows for nonnegative feasible `(λ, λ̄, 0, ν)`.
    fn rows(&mut self, lambda: &[Rat], lambda_bar: &[Rat], nu: &[Rat]) -> Result<Vec<Vec<Rat>>> {
        let m = lambda_bar.len();
        if m == 0 {
            return triangular_rows(lambda, nu);
        }
        let last = lambda.len() - 1;
        if lambda[last] == lambda_bar[m - 1] {
            let mut rows = self.rows(&lambda[..last], &lambda_bar[..m - 1], nu)?;
            for r in &mut rows {
                r.push(lambda_bar[m - 1].clone());
            }
            return Ok(rows);
        }
        if lambda[0] == lambda_bar[0] {
            let mut rows = self.rows(&lambda[1..], &lambda_bar[1..], nu)?;
            for r in &mut rows {
                r.insert(0, lambda[0].clone());
            }
            return Ok(rows);
        }

        let top = &lambda_bar[0];
        let s = lambda_bar.iter().take_while(|v| *v == top).count();
        let r = lambda.iter().take_while(|v| *v >= top).count();
        if r < s || r >= lambda.len() {
            return Err(internal(format!("block bounds out of range: r = {r}, s = {s}")));
        }
        let rho = match self.mode {
            BuildMode::ProofVerbatim => Rat::from_integer(1.into()),
            BuildMode::Accelerated => {
                let next_bar = lambda_bar.get(s).cloned().unwrap_or_else(zero);
                let floor = if lambda[r] > next_bar { lambda[r].clone() } else { next_bar };
                top - floor
            }
        };
        if !rho.is_positive() {
            return Err(internal("non-positive step"));
        }
        let mut lam = lambda.to_vec();
        for v in &mut lam[r - s..r] {
            *v -= &rho;
        }
        let mut bar = lambda_bar.to_vec();
        for v in &mut bar[..s] {
            *v -= &rho;
        }
        let mut rows = self.rows(&lam, &bar, nu)?;
        self.lift(&mut rows, r, s, rho)?;
        Ok(rows)
    }

    /// Raises `λ_{r−s+1..r}` and `λ̄_{1..s}` back by `rho`, moving a width-`s` block
    /// in every row so that all rows keep their sums differences and interlace.
    fn lift(&self, rows: &mut [Vec<Rat>], r: usize, s: usize, mut rho: Rat) -> Result<()> {
        let n = rows.len() - 1;
        let m = rows[0].len();
        let config = ConvexConfig::trapezoid(n, m);
        let pairs = config.constraint_pairs();
        let mut steps = 0;
        while rho.is_positive() {
            steps += 1;
            if steps > self.cap.max(10) {
                return Err(internal(format!("lifting exceeded {} steps", self.cap.max(10))));
            }
            let alpha = rows[n][r - s].clone();
            let mut start = Vec::with_capacity(n + 1);
            for (i, row) in rows.iter().enumerate() {
                let p = row.iter().rposition(|v| *v > alpha).map_or(0, |k| k + 1);
                if p + s > row.len() {
                    return Err(internal(format!("no room for the block in row {i}")));
                }
                start.push(p);
            }
            let bumped = |(i, j): (usize, usize)| start[i] < j && j <= start[i] + s;
            let mut eps = rho.clone();
            for &(g, l) in &pairs {
                if bumped(l) && !bumped(g) {
                    let slack = &rows[g.0][g.1 - 1] - &rows[l.0][l.1 - 1];
                    if slack < eps {
                        eps = slack;
                    }
                }
            }
            if eps.is_zero() || eps.is_negative() {
                return Err(internal("lifting stalled"));
            }
            for (row, &p) in rows.iter_mut().zip(&start) {
                for v in &mut row[p..p + s] {
                    *v += &eps;
                }
            }
            rho -= eps;
        }
        Ok(())
    }
}

/// Witness for any convex configuration and any `μ`.
pub fn mu_general_build(config: &ConvexConfig, spec: &BoundarySpec) -> Result<StripConcaveArray> {
    mu_general_build_with(config, spec, BuildMode::Accelerated, None)
}

pub fn mu_general_build_with(
    config: &ConvexConfig,
    spec: &BoundarySpec,
    mode: BuildMode,
    c: Option<&Rat>,
) -> Result<StripConcaveArray> {
    check_general_with(config, spec, Strategy::Shortcut, c)?.into_result()?;
    let ext = match c {
        Some(c) => extend_to_trapezoid_with(config, spec, c)?,
        None => extend_to_trapezoid(config, spec)?,
    };
    let flat = shift_mu(&ext.spec);
    let y = build_trapezoid_with(&flat.lambda, &flat.lambda_bar, &flat.nu, mode)?;
    let lift: Vec<Rat> = mu_offsets(&ext.spec.mu).into_iter().map(|q| -q).collect();
    let x = ext.restrict(&y.shift_rows(&lift));
    if !x.is_valid() || &x.boundary() != spec {
        return Err(internal("restricted witness does not match the requested boundary"));
    }
    Ok(x)
}

fn overlap(a: (&Rat, &Rat), b: (&Rat, &Rat)) -> Rat {
    let (a0, a1) = if a.0 <= a.1 { a } else { (a.1, a.0) };
    let (b0, b1) = if b.0 <= b.1 { b } else { (b.1, b.0) };
    let lo = if a0 > b0 { a0 } else { b0 };
    let hi = if a1 < b1 { a1 } else { b1 };
    if hi > lo {
        hi - lo
    } else {
        zero()
    }
}

/// The `n`-tuple `λ′` whose permutohedron is the set of feasible `ν` for `(λ, λ̄, 0)`.
///
/// `λ′_k = Σ_{t=k}^{n+m} |seg(λ_{t+1}, λ_t) ∩ seg(λ̄_{t−k+1}, λ_1)|` where segments are
/// unordered, `λ̄_j = 0` past its end and `λ_{n+m+1} = 0`.
pub fn reduce_to_triangle(lambda: &[Rat], lambda_bar: &[Rat]) -> Result<Vec<Rat>> {
    if lambda.len() < lambda_bar.len() {
        return Err(Error::Precondition("lambda is shorter than lambda_bar".into()));
    }
    if lambda.iter().chain(lambda_bar).any(Signed::is_negative) {
        return Err(Error::Precondition("entries must be nonnegative; shift first".into()));
    }
    if first_ascent(lambda).is_some() || first_ascent(lambda_bar).is_some() {
        return Err(Error::Precondition("inputs must be weakly decreasing".into()));
    }
    let len = lambda.len();
    let n = len - lambda_bar.len();
    let z = zero();
    let lam = |t: usize| if t <= len { &lambda[t - 1] } else { &z };
    let bar = |j: usize| lambda_bar.get(j - 1).unwrap_or(&z);
    Ok((1..=n)
        .map(|k| {
            let mut acc = zero();
            for t in k..=len {
                acc += overlap((lam(t + 1), lam(t)), (bar(t - k + 1), lam(1)));
            }
            acc
        })
        .collect())
}

/// `ν` majorized by `λ′` with equal totals.
pub fn in_permutohedron(lambda_prime: &[Rat], nu: &[Rat]) -> bool {
    if lambda_prime.len() != nu.len() || sum(lambda_prime) != sum(nu) {
        return false;
    }
    let mut sorted = nu.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    let mut a = zero();
    let mut b = zero();
    for (l, v) in lambda_prime.iter().zip(&sorted) {
        a += l;
        b += v;
        if b > a {
            return false;
        }
    }
    true
}
