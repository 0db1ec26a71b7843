//! Zigzag swaps: flow surgery between layers `i − 1`, `i`, `i + 1` that exchanges
//! `ν_i` and `ν_{i+1}`. On integer patterns this is the Bender–Knuth involution.

use num_traits::{Signed, Zero};

use super::{gamma_inv_pattern, gamma_pattern, Edge, Flow};
use crate::array::StripConcaveArray;
use crate::error::{Error, Result};
use crate::rat::{zero, Rat};

fn min<'a>(a: &'a Rat, b: &'a Rat) -> &'a Rat {
    if a < b {
        a
    } else {
        b
    }
}

/// `σ_i` on a nonnegative flow, `1 <= i <= n − 1`.
///
/// For each `j` the zigzag `Z_j = {e0_{i−1,j}, e1_{i,j}}` and its partner
/// `Z′_j = {e1_{i−1,j}, e0_{i,j+1}}` trade their capacities.
pub fn zigzag_swap_flow(g: &Flow, i: usize) -> Result<Flow> {
    let n = g.graph.n;
    if i == 0 || i >= n {
        return Err(Error::Precondition(format!("layer {i} is outside 1..={}", n.saturating_sub(1))));
    }
    if !g.is_nonnegative() {
        return Err(Error::Precondition("zigzag swaps need a nonnegative flow".into()));
    }
    let mut out = g.clone();
    for j in 0..g.graph.diagonal_count(i - 1) {
        let z = [Edge { layer: i - 1, col: j, diagonal: false }, Edge { layer: i, col: j, diagonal: true }];
        let zp = [Edge { layer: i - 1, col: j, diagonal: true }, Edge { layer: i, col: j + 1, diagonal: false }];
        let cz = min(g.get(z[0]), g.get(z[1])).clone();
        let czp = min(g.get(zp[0]), g.get(zp[1])).clone();
        let delta = &czp - &cz;
        if delta.is_zero() {
            continue;
        }
        for e in z {
            *out.get_mut(e) += &delta;
        }
        for e in zp {
            *out.get_mut(e) -= &delta;
        }
    }
    Ok(out)
}

/// Shift that makes the smallest entry of `λ` nonnegative.
fn lift_amount(x: &StripConcaveArray) -> Rat {
    let d = x.derivative();
    match d.lambda().last() {
        Some(v) if v.is_negative() => -v.clone(),
        _ => zero(),
    }
}

/// `σ_i` on an array with `μ = 0`; `ν_i` and `ν_{i+1}` trade places.
pub fn zigzag_swap(x: &StripConcaveArray, i: usize) -> Result<StripConcaveArray> {
    if x.boundary().mu.iter().any(|u| !u.is_zero()) {
        return Err(Error::Precondition("zigzag swaps need mu = 0; apply shift_mu first".into()));
    }
    let t = lift_amount(x);
    let p = x.derivative().shift(&t);
    let g = gamma_pattern(&p)?;
    let swapped = zigzag_swap_flow(&g, i)?;
    Ok(gamma_inv_pattern(&swapped)?.shift(&-t).integrate())
}

/// Applies adjacent swaps so that `ν′_{π(i)} = ν_i`; `pi` is a 0-based permutation.
pub fn permute_nu(x: &StripConcaveArray, pi: &[usize]) -> Result<StripConcaveArray> {
    let n = x.config.n;
    let mut seen = vec![false; n];
    if pi.len() != n || pi.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Precondition(format!("not a permutation of 0..{n}: {pi:?}")));
    }
    // slot[k] holds the original row index currently carrying position k
    let mut slot: Vec<usize> = (0..n).collect();
    let mut cur = x.clone();
    while let Some(k) = (0..n.saturating_sub(1)).find(|&k| pi[slot[k]] > pi[slot[k + 1]]) {
        cur = zigzag_swap(&cur, k + 1)?;
        slot.swap(k, k + 1);
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::flow::gamma;
    use crate::rat::rats;

    #[test]
    fn example_swap() {
        let g = fixtures::trapezoid_flow();
        let s = zigzag_swap_flow(&g, 2).unwrap();
        assert_eq!(s, fixtures::swapped_flow());
        assert_eq!(s.nu(), rats(&[3, 3, 2]));
        assert_eq!(zigzag_swap_flow(&s, 2).unwrap(), g);
    }

    #[test]
    fn array_swap_matches_flow_swap() {
        let x = fixtures::trapezoid_pattern().integrate();
        let y = zigzag_swap(&x, 2).unwrap();
        assert_eq!(gamma(&y).unwrap(), fixtures::swapped_flow());
        assert_eq!(zigzag_swap(&y, 2).unwrap(), x);
    }

    #[test]
    fn out_of_range_layer() {
        let g = fixtures::trapezoid_flow();
        assert!(zigzag_swap_flow(&g, 0).is_err());
        assert!(zigzag_swap_flow(&g, 3).is_err());
    }

    #[test]
    fn nonzero_mu_rejected() {
        assert!(zigzag_swap(&fixtures::trapezoid_array(), 1).is_err());
    }

    #[test]
    fn permutations() {
        let x = fixtures::trapezoid_pattern().integrate();
        assert_eq!(permute_nu(&x, &[0, 1, 2]).unwrap(), x);
        assert_eq!(permute_nu(&x, &[0, 2, 1]).unwrap(), zigzag_swap(&x, 2).unwrap());
        let y = permute_nu(&x, &[2, 0, 1]).unwrap();
        assert!(y.is_valid());
        // ν′_{π(i)} = ν_i with ν = (3,2,3)
        assert_eq!(y.boundary().nu, rats(&[2, 3, 3]));
        assert!(permute_nu(&x, &[0, 0, 1]).is_err());
    }
}
