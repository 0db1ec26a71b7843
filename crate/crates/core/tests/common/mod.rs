//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles work on plain integer patterns: `rows[i]` is the derivative row `i`
//! of a trapezoid, with `m + i` entries, top row `λ̄` and bottom row `λ`.

#![allow(dead_code)]

use std::collections::HashSet;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stripconcave::config::ConvexConfig;
use stripconcave::rat::{rat, Rat};
use stripconcave::{BoundarySpec, GTPattern};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| rat(x)).collect()
}

pub fn rows_to_rats(rows: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| rats(r)).collect()
}

pub fn pattern(n: usize, m: usize, rows: &[Vec<i64>]) -> GTPattern {
    GTPattern::new(ConvexConfig::trapezoid(n, m), rows_to_rats(rows)).unwrap()
}

pub fn random_decreasing(r: &mut impl Rng, len: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..len).map(|_| r.gen_range(lo..=hi)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Random integer trapezoid pattern with bottom row drawn from `lo..=hi`.
pub fn random_pattern(r: &mut impl Rng, n: usize, m: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut rows = vec![random_decreasing(r, n + m, lo, hi)];
    for _ in 0..n {
        let below = rows.last().unwrap().clone();
        let row: Vec<i64> = (0..below.len() - 1).map(|k| r.gen_range(below[k + 1]..=below[k])).collect();
        rows.push(row);
    }
    rows.reverse();
    rows
}

pub fn sum(v: &[i64]) -> i64 {
    v.iter().sum()
}

/// `ν_i = |row i| − |row i−1|`.
pub fn nu_of(rows: &[Vec<i64>]) -> Vec<i64> {
    rows.windows(2).map(|w| sum(&w[1]) - sum(&w[0])).collect()
}

/// `above` interlaces `below`: `below[k] >= above[k] >= below[k+1]`.
pub fn interlaces(above: &[i64], below: &[i64]) -> bool {
    above.len() + 1 == below.len() && above.iter().enumerate().all(|(k, &a)| below[k] >= a && a >= below[k + 1])
}

/// Every row of length `len` with entries in `lo..=hi` that `above` interlaces.
fn rows_below(above: &[i64], len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(above: &[i64], len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let k = cur.len();
        if k == len {
            out.push(cur.clone());
            return;
        }
        let mut a = lo;
        let mut b = hi;
        if k < above.len() {
            a = a.max(above[k]);
        }
        if k > 0 {
            b = b.min(above[k - 1]);
            b = b.min(cur[k - 1]);
        }
        for v in a..=b {
            cur.push(v);
            go(above, len, lo, hi, cur, out);
            cur.pop();
        }
    }
    go(above, len, lo, hi, &mut cur, &mut out);
    out
}

/// All integer patterns with top `λ̄` and bottom `λ`; `ν` free.
pub fn lattice_points(lambda: &[i64], lambda_bar: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let m = lambda_bar.len();
    let n = lambda.len() - m;
    let lo = lambda.iter().copied().min().unwrap_or(0);
    let hi = lambda.iter().copied().max().unwrap_or(0);
    let mut out = Vec::new();
    let mut stack = vec![vec![lambda_bar.to_vec()]];
    while let Some(rows) = stack.pop() {
        let i = rows.len() - 1;
        if i + 1 == n {
            if interlaces(&rows[i], lambda) {
                let mut full = rows.clone();
                full.push(lambda.to_vec());
                out.push(full);
            }
            continue;
        }
        for next in rows_below(&rows[i], m + i + 1, lo, hi) {
            let mut r = rows.clone();
            r.push(next);
            stack.push(r);
        }
    }
    out
}

/// Integer patterns with the given boundary and `μ = 0`, by plain search.
pub fn integer_points(lambda: &[i64], lambda_bar: &[i64], nu: &[i64]) -> Vec<Vec<Vec<i64>>> {
    lattice_points(lambda, lambda_bar).into_iter().filter(|p| nu_of(p) == nu).collect()
}

pub fn brute_feasible(lambda: &[i64], lambda_bar: &[i64], nu: &[i64]) -> bool {
    if lambda.windows(2).any(|w| w[0] < w[1]) || lambda_bar.windows(2).any(|w| w[0] < w[1]) {
        return false;
    }
    if sum(lambda) - sum(lambda_bar) != sum(nu) {
        return false;
    }
    !integer_points(lambda, lambda_bar, nu).is_empty()
}

/// Rank of an integer matrix by fraction-free elimination.
pub fn rank_i128(mut a: Vec<Vec<i128>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let x = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                debug_assert_eq!(x % prev, 0);
                a[i][j] = x / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank of the tight interlacing equalities of `rows`, plus row-sum equalities when
/// `fixed_nu`, over the free entries of rows `1..n`; returns `(rank, free count)`.
pub fn tight_rank_oracle(rows: &[Vec<i64>], fixed_nu: bool) -> (usize, usize) {
    let n = rows.len() - 1;
    let mut index = std::collections::HashMap::new();
    for (i, row) in rows.iter().enumerate().take(n).skip(1) {
        for k in 0..row.len() {
            let next = index.len();
            index.insert((i, k), next);
        }
    }
    let vars = index.len();
    let mut matrix = Vec::new();
    let mut push = |terms: &[((usize, usize), i128)]| {
        let mut row = vec![0i128; vars];
        for (pos, c) in terms {
            if let Some(&v) = index.get(pos) {
                row[v] += c;
            }
        }
        if row.iter().any(|&x| x != 0) {
            matrix.push(row);
        }
    };
    for i in 0..n {
        for k in 0..rows[i].len() {
            if rows[i + 1][k] == rows[i][k] {
                push(&[((i + 1, k), 1), ((i, k), -1)]);
            }
            if rows[i][k] == rows[i + 1][k + 1] {
                push(&[((i, k), 1), ((i + 1, k + 1), -1)]);
            }
        }
    }
    if fixed_nu {
        for (i, row) in rows.iter().enumerate().take(n).skip(1) {
            let terms: Vec<_> = (0..row.len()).map(|k| ((i, k), 1)).collect();
            push(&terms);
        }
    }
    (rank_i128(matrix), vars)
}

fn flatten(p: &[Vec<i64>]) -> Vec<i64> {
    p.iter().flatten().copied().collect()
}

/// Points of `points` that are not the midpoint of two other points of the set.
pub fn midpoint_survivors(points: &[Vec<Vec<i64>>]) -> Vec<usize> {
    let flat: Vec<Vec<i64>> = points.iter().map(|p| flatten(p)).collect();
    let set: HashSet<&Vec<i64>> = flat.iter().collect();
    let mut out = Vec::new();
    let mut other = Vec::new();
    for (idx, p) in flat.iter().enumerate() {
        let eliminated = flat.iter().any(|a| {
            if a == p {
                return false;
            }
            other.clear();
            other.extend(p.iter().zip(a).map(|(x, y)| 2 * x - y));
            set.contains(&other)
        });
        if !eliminated {
            out.push(idx);
        }
    }
    out
}

/// Extreme points of the integer hull: midpoint survivors whose tight system has full rank.
pub fn vertex_oracle(lambda: &[i64], lambda_bar: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let points = lattice_points(lambda, lambda_bar);
    let survivors: HashSet<usize> = midpoint_survivors(&points).into_iter().collect();
    let mut out = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let (r, v) = tight_rank_oracle(p, false);
        if r == v {
            assert!(survivors.contains(&i), "a full-rank point is a midpoint: {p:?}");
            out.push(p.clone());
        }
    }
    out
}

/// Semi-standard fillings of `outer ∖ inner` with the given content.
pub fn count_tableaux(outer: &[i64], inner: &[i64], content: &[i64]) -> u64 {
    if content.iter().any(|&c| c < 0) {
        return 0;
    }
    let cells: Vec<(usize, i64)> = outer
        .iter()
        .enumerate()
        .flat_map(|(r, &o)| (inner.get(r).copied().unwrap_or(0) + 1..=o).map(move |c| (r, c)))
        .collect();
    if cells.len() as i64 != sum(content) {
        return 0;
    }
    let mut filled = std::collections::HashMap::new();
    let mut left = content.to_vec();
    fn go(
        k: usize,
        cells: &[(usize, i64)],
        filled: &mut std::collections::HashMap<(usize, i64), usize>,
        left: &mut [i64],
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let min_row = filled.get(&(r, c - 1)).copied().unwrap_or(1);
        let min_col = r.checked_sub(1).and_then(|up| filled.get(&(up, c))).map_or(1, |&v| v + 1);
        let mut total = 0;
        for v in min_row.max(min_col)..=left.len() {
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            filled.insert((r, c), v);
            total += go(k + 1, cells, filled, left);
            filled.remove(&(r, c));
            left[v - 1] += 1;
        }
        total
    }
    go(0, &cells, &mut filled, &mut left)
}

/// Partial sums of `ν` sorted decreasingly are bounded by those of `λ′`, with equal totals.
pub fn majorized(nu: &[i64], lambda_prime: &[i64]) -> bool {
    let mut v = nu.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    if sum(&v) != sum(lambda_prime) || v.len() != lambda_prime.len() {
        return false;
    }
    let (mut a, mut b) = (0, 0);
    v.iter().zip(lambda_prime).all(|(x, y)| {
        a += x;
        b += y;
        a <= b
    })
}

/// `Δ_k = Σ_j max(0, λ̄_j − λ_{j+k})` over `j = 1..=m`.
pub fn deficit_oracle(lambda: &[Rat], lambda_bar: &[Rat], k: usize) -> Rat {
    let z = rat(0);
    lambda_bar
        .iter()
        .enumerate()
        .map(|(j, b)| b - &lambda[j + k])
        .filter(|d| d > &z)
        .fold(z.clone(), |a, d| a + d)
}

/// Left side of the piecewise-linear inequality for `I`.
pub fn pl_value(spec: &BoundarySpec, subset: &[usize]) -> Rat {
    let k = subset.len();
    let mut v: Rat = spec.lambda[..k].iter().sum();
    for &i in subset {
        v += &spec.mu[i - 1];
        v -= &spec.nu[i - 1];
    }
    v - deficit_oracle(&spec.lambda, &spec.lambda_bar, k)
}

/// Left side of the linear inequality for `(I, J)`.
pub fn horn_value(spec: &BoundarySpec, subset: &[usize], j_set: &[usize]) -> Rat {
    let k = subset.len();
    let mut v: Rat = spec.lambda[..k].iter().sum();
    for &j in j_set {
        v += &spec.lambda[j + k - 1];
        v -= &spec.lambda_bar[j - 1];
    }
    for &i in subset {
        v += &spec.mu[i - 1];
        v -= &spec.nu[i - 1];
    }
    v
}

pub fn all_subsets(size: usize) -> Vec<Vec<usize>> {
    (0u32..1 << size).map(|mask| (1..=size).filter(|b| mask >> (b - 1) & 1 == 1).collect()).collect()
}

/// All permutations of `v`, duplicates included.
pub fn permutations(v: &[i64]) -> Vec<Vec<i64>> {
    if v.len() <= 1 {
        return vec![v.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..v.len() {
        let mut rest = v.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All weakly decreasing sequences of length `len` over `lo..=hi`.
pub fn decreasing_sequences(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in lo..=hi {
        for mut rest in decreasing_sequences(len - 1, lo, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
