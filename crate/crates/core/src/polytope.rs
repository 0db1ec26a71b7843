//! Facets of the boundary cone, lattice-point counts and vertex tests.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::array::StripConcaveArray;
use crate::boundary::BoundarySpec;
use crate::error::{Error, Result};
use crate::linalg::rank;
use crate::rat::{rat, sum, to_i64_vec, zero, Rat};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FacetKind {
    /// `λ[1,|I|] + λ(J+|I|) − λ̄(J) + μ(I) − ν(I) >= 0`; sets are 1-based and sorted.
    Horn { i: Vec<usize>, j: Vec<usize> },
    /// `λ_j >= λ_{j+1}`.
    ChamberLambda(usize),
    /// `λ̄_j >= λ̄_{j+1}`.
    ChamberLambdaBar(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetInequality {
    pub n: usize,
    pub m: usize,
    pub kind: FacetKind,
}

/// Coefficients of a facet over the concatenation `(λ, λ̄, μ, ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    pub lambda: Vec<i64>,
    pub lambda_bar: Vec<i64>,
    pub mu: Vec<i64>,
    pub nu: Vec<i64>,
}

impl FacetInequality {
    pub fn coefficients(&self) -> Coefficients {
        let (n, m) = (self.n, self.m);
        let mut c = Coefficients { lambda: vec![0; n + m], lambda_bar: vec![0; m], mu: vec![0; n], nu: vec![0; n] };
        match &self.kind {
            FacetKind::Horn { i, j } => {
                let k = i.len();
                for t in 0..k {
                    c.lambda[t] += 1;
                }
                for &jj in j {
                    c.lambda[jj + k - 1] += 1;
                    c.lambda_bar[jj - 1] -= 1;
                }
                for &ii in i {
                    c.mu[ii - 1] += 1;
                    c.nu[ii - 1] -= 1;
                }
            }
            FacetKind::ChamberLambda(j) => {
                c.lambda[j - 1] += 1;
                c.lambda[*j] -= 1;
            }
            FacetKind::ChamberLambdaBar(j) => {
                c.lambda_bar[j - 1] += 1;
                c.lambda_bar[*j] -= 1;
            }
        }
        c
    }

    /// Left side of the inequality at `spec`; valid points give a nonnegative value.
    pub fn evaluate(&self, spec: &BoundarySpec) -> Result<Rat> {
        let c = self.coefficients();
        let mut total = zero();
        for (coef, vals, what) in [
            (&c.lambda, &spec.lambda, "lambda"),
            (&c.lambda_bar, &spec.lambda_bar, "lambda_bar"),
            (&c.mu, &spec.mu, "mu"),
            (&c.nu, &spec.nu, "nu"),
        ] {
            if coef.len() != vals.len() {
                return Err(Error::length(what, coef.len(), vals.len()));
            }
            for (a, v) in coef.iter().zip(vals) {
                if *a != 0 {
                    total += rat(*a) * v;
                }
            }
        }
        Ok(total)
    }
}

fn subsets(size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u64..1 << size).map(move |mask| (1..=size).filter(|b| mask >> (b - 1) & 1 == 1).collect())
}

/// Facets of the boundary cone of the `(n, m)` trapezoid, in canonical order.
pub fn facets(n: usize, m: usize) -> Vec<FacetInequality> {
    let mut out = Vec::new();
    let all_i: Vec<Vec<usize>> = subsets(n).collect();
    let all_j: Vec<Vec<usize>> = subsets(m).collect();
    for i in &all_i {
        for j in &all_j {
            let (a, b) = (i.len(), j.len());
            let size_ok = 0 < a + b && a + b < n + m;
            let shape_ok = (a != 0 && a != n) || (a == 0 && b == 1) || (a == n && b + 1 == m);
            if size_ok && shape_ok {
                out.push(FacetKind::Horn { i: i.clone(), j: j.clone() });
            }
        }
    }
    if !(n == 1 || (n == 2 && m == 0)) {
        out.extend((1..n + m).map(FacetKind::ChamberLambda));
        out.extend((1..m).map(FacetKind::ChamberLambdaBar));
    }
    let mut out: Vec<FacetInequality> = out.into_iter().map(|kind| FacetInequality { n, m, kind }).collect();
    out.sort();
    out.dedup();
    out
}

/// The closed-form facet count, `(2^n − 2)·2^m + n + 4m − 2` for `n >= 2` and `2m` for `n = 1`.
pub fn facet_count_formula(n: usize, m: usize) -> i128 {
    let (n, m) = (n as i128, m as i128);
    if n == 1 {
        2 * m
    } else {
        ((1i128 << n) - 2) * (1i128 << m) + n + 4 * m - 2
    }
}

/// Counts integer patterns row by row, memoized on `(row index, row)`.
struct Counter<'a> {
    lambda: &'a [i64],
    /// Required sum of each row.
    sums: Vec<i64>,
    n: usize,
    memo: HashMap<(usize, Vec<i64>), BigUint>,
}

impl Counter<'_> {
    /// Completions of the pattern below row `i`, which is `row`.
    fn below(&mut self, i: usize, row: &[i64]) -> BigUint {
        if i + 1 == self.n {
            return BigUint::from(u8::from(interlaces(row, self.lambda)));
        }
        if let Some(c) = self.memo.get(&(i, row.to_vec())) {
            return c.clone();
        }
        let depth = self.n - (i + 1);
        let len = row.len() + 1;
        let bounds: Vec<(i64, i64)> = (0..len)
            .map(|k| {
                let mut lo = self.lambda[k + depth];
                let mut hi = self.lambda[k];
                if k < row.len() {
                    lo = lo.max(row[k]);
                }
                if k > 0 {
                    hi = hi.min(row[k - 1]);
                }
                (lo, hi)
            })
            .collect();
        let mut rows = Vec::new();
        fill(&bounds, self.sums[i + 1], &mut Vec::with_capacity(len), &mut rows);
        let mut total = BigUint::zero();
        for next in rows {
            total += self.below(i + 1, &next);
        }
        self.memo.insert((i, row.to_vec()), total.clone());
        total
    }
}

/// `upper` interlaces `lower` when `lower[k] >= upper[k] >= lower[k+1]`.
fn interlaces(upper: &[i64], lower: &[i64]) -> bool {
    upper.len() + 1 == lower.len() && upper.iter().enumerate().all(|(k, &u)| lower[k] >= u && u >= lower[k + 1])
}

/// All rows inside `bounds` with entry sum `target`.
fn fill(bounds: &[(i64, i64)], target: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let k = cur.len();
    if k == bounds.len() {
        if target == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let rest = &bounds[k + 1..];
    let rest_lo: i64 = rest.iter().map(|b| b.0).sum();
    let rest_hi: i64 = rest.iter().map(|b| b.1).sum();
    let (lo, hi) = bounds[k];
    for v in lo.max(target - rest_hi)..=hi.min(target - rest_lo) {
        cur.push(v);
        fill(bounds, target - v, cur, out);
        cur.pop();
    }
}

fn kostka_i64(lambda: &[i64], lambda_bar: &[i64], nu: &[i64]) -> Result<BigUint> {
    let n = nu.len();
    if lambda.len() != lambda_bar.len() + n {
        return Err(Error::length("lambda", lambda_bar.len() + n, lambda.len()));
    }
    if n == 0 {
        return Ok(BigUint::from(u8::from(lambda == lambda_bar)));
    }
    let decreasing = |v: &[i64]| v.windows(2).all(|w| w[0] >= w[1]);
    if !decreasing(lambda) || !decreasing(lambda_bar) {
        return Ok(BigUint::zero());
    }
    if lambda_bar.iter().enumerate().any(|(k, &v)| v > lambda[k] || v < lambda[k + n]) {
        return Ok(BigUint::zero());
    }
    let mut sums = vec![lambda_bar.iter().sum::<i64>()];
    for v in nu {
        sums.push(sums.last().unwrap() + v);
    }
    if sums[n] != lambda.iter().sum::<i64>() {
        return Ok(BigUint::zero());
    }
    let mut counter = Counter { lambda, sums, n, memo: HashMap::new() };
    Ok(counter.below(0, lambda_bar))
}

/// Number of integer arrays with boundary `(λ, λ̄, 0, ν)`, i.e. the skew Kostka number.
pub fn kostka(lambda: &[Rat], lambda_bar: &[Rat], nu: &[Rat]) -> Result<BigUint> {
    kostka_i64(
        &to_i64_vec(lambda, "lambda")?,
        &to_i64_vec(lambda_bar, "lambda_bar")?,
        &to_i64_vec(nu, "nu")?,
    )
}

/// Number of `(1/k)`-integer arrays with boundary `(λ, λ̄, 0, ν)`.
pub fn count_scaled_points(lambda: &[Rat], lambda_bar: &[Rat], nu: &[Rat], k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let s = rat(i64::from(k));
    let scale = |v: &[Rat]| v.iter().map(|x| x * &s).collect::<Vec<_>>();
    for (v, what) in [(lambda, "lambda"), (lambda_bar, "lambda_bar"), (nu, "nu")] {
        to_i64_vec(v, what)?;
    }
    kostka(&scale(lambda), &scale(lambda_bar), &scale(nu))
}

/// Which boundary entries are held fixed when testing for a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedSides {
    /// All four sides: the polytope with prescribed `(λ, λ̄, μ, ν)`.
    All,
    /// Top, bottom and left side: `ν` varies.
    AllButRight,
}

/// Rank of the tight inequalities at `x` and the number of free entries.
pub fn tight_rank(x: &StripConcaveArray, sides: FixedSides) -> (usize, usize) {
    let c = &x.config;
    let n = c.n;
    let fixed = |i: usize, j: usize| {
        i == 0 || i == n || j == c.a[i] || (j == c.b[i] && sides == FixedSides::All)
    };
    let mut index = HashMap::new();
    for (i, j) in c.nodes() {
        if !fixed(i, j) {
            let next = index.len();
            index.insert((i, j), next);
        }
    }
    let d = x.derivative();
    let dv = |(i, j): (usize, usize)| &d.rows[i][j - c.a[i] - 1];
    let mut matrix = Vec::new();
    for (g, l) in c.constraint_pairs() {
        if dv(g) != dv(l) {
            continue;
        }
        let mut row = vec![zero(); index.len()];
        for ((i, j), sign) in [(g, 1), ((g.0, g.1 - 1), -1), (l, -1), ((l.0, l.1 - 1), 1)] {
            if let Some(&k) = index.get(&(i, j)) {
                row[k] += rat(sign);
            }
        }
        if row.iter().any(|v| !v.is_zero()) {
            matrix.push(row);
        }
    }
    (rank(matrix), index.len())
}

/// True when the tight inequalities at `x` pin down every free entry.
pub fn is_vertex(x: &StripConcaveArray, sides: FixedSides) -> bool {
    let (r, free) = tight_rank(x, sides);
    r == free
}

/// Minimum over `J` of the horn left side for a fixed `I`.
pub fn min_over_j(spec: &BoundarySpec, i: &[usize]) -> Rat {
    let k = i.len();
    let base = sum(&spec.lambda[..k]) + i.iter().map(|&t| &spec.mu[t - 1] - &spec.nu[t - 1]).sum::<Rat>();
    let extra = (1..=spec.m())
        .map(|j| &spec.lambda[j + k - 1] - &spec.lambda_bar[j - 1])
        .filter(|v| v < &zero())
        .sum::<Rat>();
    base + extra
}
