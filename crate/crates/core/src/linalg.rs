//! Exact Gaussian elimination.

use num_traits::Zero;

use crate::rat::Rat;

/// Rank of a dense rational matrix.
pub fn rank(mut rows: Vec<Vec<Rat>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        let (head, tail) = rows.split_at_mut(r + 1);
        let top = &head[r];
        for row in tail.iter_mut().filter(|row| !row[c].is_zero()) {
            let f = &row[c] / &pivot;
            for (x, t) in row[c..cols].iter_mut().zip(&top[c..cols]) {
                *x -= &f * t;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
