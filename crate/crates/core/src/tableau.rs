//! Semi-standard skew tableaux and their integer patterns.

use crate::array::GTPattern;
use crate::config::ConvexConfig;
use crate::error::{Error, Result};
use crate::rat::{rat, to_i64_vec};

/// A filling of the skew shape `outer ∖ inner`.
///
/// `rows[r]` lists the entries of row `r + 1` from column `inner[r] + 1` to `outer[r]`;
/// `inner` is not padded, so `n = outer.len() − inner.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub outer: Vec<i64>,
    pub inner: Vec<i64>,
    pub rows: Vec<Vec<usize>>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

impl SkewTableau {
    pub fn n(&self) -> usize {
        self.outer.len().saturating_sub(self.inner.len())
    }

    pub fn inner_at(&self, r: usize) -> i64 {
        self.inner.get(r).copied().unwrap_or(0)
    }

    /// Entry in row `r` and column `c`, both 1-based.
    pub fn entry(&self, r: usize, c: i64) -> Option<usize> {
        let row = self.rows.get(r - 1)?;
        let start = self.inner_at(r - 1);
        if c <= start {
            return None;
        }
        row.get(usize::try_from(c - start - 1).ok()?).copied()
    }

    /// Shape, row and column conditions.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if self.inner.len() >= self.outer.len() {
            return Err(invalid("the outer shape needs more rows than the inner shape"));
        }
        for (what, shape) in [("outer", &self.outer), ("inner", &self.inner)] {
            if shape.windows(2).any(|w| w[0] < w[1]) || shape.iter().any(|&v| v < 0) {
                return Err(invalid(format!("{what} shape is not a partition")));
            }
        }
        if self.rows.len() != self.outer.len() {
            return Err(Error::length("tableau rows", self.outer.len(), self.rows.len()));
        }
        for (r, row) in self.rows.iter().enumerate() {
            let width = self.outer[r] - self.inner_at(r);
            if width < 0 {
                return Err(invalid(format!("row {} has inner part past the outer part", r + 1)));
            }
            if row.len() as i64 != width {
                return Err(Error::length("tableau row", width as usize, row.len()));
            }
            if let Some(&v) = row.iter().find(|&&v| v == 0 || v > n) {
                return Err(invalid(format!("entry {v} in row {} is outside 1..={n}", r + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(invalid(format!("row {} is not weakly increasing", r + 1)));
            }
        }
        for r in 1..self.rows.len() {
            for c in self.inner_at(r) + 1..=self.outer[r] {
                if let (Some(above), Some(below)) = (self.entry(r, c), self.entry(r + 1, c)) {
                    if above >= below {
                        return Err(invalid(format!("column {c} is not strictly increasing at row {}", r + 1)));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Multiplicity of each entry `1..=n`.
pub fn content(t: &SkewTableau) -> Vec<usize> {
    let mut out = vec![0; t.n()];
    for &v in t.rows.iter().flatten() {
        if (1..=out.len()).contains(&v) {
            out[v - 1] += 1;
        }
    }
    out
}

/// Cells added between consecutive rows of `p` get the index of the later row.
pub fn pattern_to_tableau(p: &GTPattern) -> Result<SkewTableau> {
    if !p.config.is_trapezoid() {
        return Err(invalid("tableaux need a trapezoid pattern"));
    }
    let rows: Vec<Vec<i64>> =
        p.rows.iter().enumerate().map(|(i, r)| to_i64_vec(r, &format!("pattern row {i}"))).collect::<Result<_>>()?;
    if rows.iter().flatten().any(|&v| v < 0) {
        return Err(invalid("pattern rows must be nonnegative; shift the pattern first"));
    }
    if let Some(v) = p.first_violation() {
        return Err(invalid(format!("rows do not interlace at {:?} and {:?}", v.greater, v.lesser)));
    }
    let n = p.config.n;
    let part = |i: usize, r: usize| rows[i].get(r).copied().unwrap_or(0);
    let outer = rows[n].clone();
    let inner = rows[0].clone();
    let cells = (0..outer.len())
        .map(|r| {
            (part(0, r) + 1..=outer[r])
                .map(|c| (1..=n).find(|&i| part(i, r) >= c).expect("the last row covers the shape"))
                .collect()
        })
        .collect();
    Ok(SkewTableau { outer, inner, rows: cells })
}

/// Row `i` of the pattern is the inner shape plus the cells holding entries `<= i`.
pub fn tableau_to_pattern(t: &SkewTableau) -> Result<GTPattern> {
    t.validate()?;
    let n = t.n();
    let m = t.inner.len();
    let mut rows = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut row = Vec::with_capacity(m + i);
        for (r, cells) in t.rows.iter().enumerate() {
            let v = t.inner_at(r) + cells.iter().filter(|&&e| e <= i).count() as i64;
            if r < m + i {
                row.push(rat(v));
            } else if v != 0 {
                return Err(invalid(format!("row {} holds an entry <= {i} below the shape of row {i}", r + 1)));
            }
        }
        rows.push(row);
    }
    GTPattern::new(ConvexConfig::trapezoid(n, m), rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::rat::rats;

    #[test]
    fn example_pattern_to_tableau() {
        let t = pattern_to_tableau(&fixtures::trapezoid_pattern()).unwrap();
        assert_eq!(t, fixtures::trapezoid_tableau());
        assert_eq!(content(&t), vec![3, 2, 3]);
        assert_eq!(tableau_to_pattern(&t).unwrap(), fixtures::trapezoid_pattern());
    }

    #[test]
    fn single_cell() {
        let p = GTPattern::new(ConvexConfig::trapezoid(1, 1), vec![rats(&[1]), rats(&[2, 0])]).unwrap();
        let t = pattern_to_tableau(&p).unwrap();
        assert_eq!(t.rows, vec![vec![1], vec![]]);
        assert_eq!(content(&t), vec![1]);
    }

    #[test]
    fn empty_skew_shape() {
        let t = SkewTableau { outer: vec![2, 1, 0], inner: vec![2, 1], rows: vec![vec![], vec![], vec![]] };
        let p = tableau_to_pattern(&t).unwrap();
        assert_eq!(p.rows, vec![rats(&[2, 1]), rats(&[2, 1, 0])]);
        assert_eq!(content(&t), vec![0]);
    }

    #[test]
    fn broken_tableaux_rejected() {
        let mut t = fixtures::trapezoid_tableau();
        t.rows[2] = vec![3, 1, 1];
        assert!(tableau_to_pattern(&t).is_err());
        let mut t = fixtures::trapezoid_tableau();
        t.rows[3] = vec![1];
        assert!(t.validate().is_err());
        let mut t = fixtures::trapezoid_tableau();
        t.rows[0] = vec![4];
        assert!(t.validate().is_err());
    }

    #[test]
    fn negative_pattern_rejected() {
        let p = fixtures::trapezoid_pattern().shift(&rat(-2));
        assert!(pattern_to_tableau(&p).is_err());
    }
}
