use num_traits::{One, Zero};

use super::GkpParams;
use crate::algebra::{PolyT, Rat};
use crate::error::{Error, Result};

/// Rows `0..=N` of a lower-triangular array; row `n` has `n + 1` entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Triangle {
    rows: Vec<Vec<Rat>>,
    /// The recurrence the rows satisfy, when known.
    pub params: Option<GkpParams>,
}

impl Triangle {
    /// Panics unless row `n` has length `n + 1`.
    pub fn from_rows(rows: Vec<Vec<Rat>>, params: Option<GkpParams>) -> Self {
        for (n, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n + 1, "row {n} has {} entries", r.len());
        }
        Triangle { rows, params }
    }

    /// Builds rows `0..=n_max` from `f(n, k)`.
    pub fn from_fn(n_max: usize, params: Option<GkpParams>, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let rows = (0..=n_max).map(|n| (0..=n).map(|k| f(n, k)).collect()).collect();
        Triangle { rows, params }
    }

    pub fn try_from_fn(
        n_max: usize,
        params: Option<GkpParams>,
        mut f: impl FnMut(usize, usize) -> Result<Rat>,
    ) -> Result<Self> {
        let mut rows = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            rows.push((0..=n).map(|k| f(n, k)).collect::<Result<Vec<_>>>()?);
        }
        Ok(Triangle { rows, params })
    }

    /// Index of the last row.
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[Rat] {
        &self.rows[n]
    }

    /// Entry `<n, k>`, zero outside `0 ≤ k ≤ n`. Panics past the last row.
    pub fn get(&self, n: usize, k: i64) -> Rat {
        if k < 0 || k as usize > n {
            Rat::zero()
        } else {
            self.rows[n][k as usize].clone()
        }
    }

    pub fn map(&self, params: Option<GkpParams>, f: impl Fn(usize, usize, &Rat) -> Rat) -> Triangle {
        Triangle::from_fn(self.n_max(), params, |n, k| f(n, k, &self.rows[n][k]))
    }

    /// Keeps rows `0..=n_max`.
    pub fn truncate(&self, n_max: usize) -> Triangle {
        Triangle {
            rows: self.rows[..=n_max.min(self.n_max())].to_vec(),
            params: self.params.clone(),
        }
    }

    /// Whether the entries agree (parameter provenance is ignored).
    pub fn same_entries(&self, other: &Triangle) -> bool {
        self.rows == other.rows
    }

    /// First `(n, k)` at which the apex or the recurrence fails.
    pub fn first_recurrence_violation(&self, p: &GkpParams) -> Option<(usize, usize)> {
        if !self.rows[0][0].is_one() {
            return Some((0, 0));
        }
        for n in 0..self.n_max() {
            for k in 0..=n + 1 {
                let ki = k as i64;
                let want = p.left_weight(n, ki) * self.get(n, ki) + p.right_weight(n, ki) * self.get(n, ki - 1);
                if want != self.rows[n + 1][k] {
                    return Some((n + 1, k));
                }
            }
        }
        None
    }
}

/// Rows `0..=n_max` of the triangle with apex 1.
pub fn triangle_from_recurrence(p: &GkpParams, n_max: usize) -> Triangle {
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(n_max + 1);
    rows.push(vec![Rat::one()]);
    for n in 0..n_max {
        let prev = &rows[n];
        let next = (0..=n + 1)
            .map(|k| {
                let ki = k as i64;
                let mut v = Rat::zero();
                if k <= n && !prev[k].is_zero() {
                    v += p.left_weight(n, ki) * &prev[k];
                }
                if k >= 1 && !prev[k - 1].is_zero() {
                    v += p.right_weight(n, ki) * &prev[k - 1];
                }
                v
            })
            .collect();
        rows.push(next);
    }
    Triangle {
        rows,
        params: Some(p.clone()),
    }
}

/// `Σ_k <n, k> t^k`.
pub fn row_polynomial(tri: &Triangle, n: usize) -> Result<PolyT> {
    if n > tri.n_max() {
        return Err(Error::RowOutOfRange {
            row: n,
            max: tri.n_max(),
        });
    }
    Ok(PolyT::new(tri.row(n).to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn pascal_entry() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 0, 1, 0, 0, 1]), 5);
        assert_eq!(t.get(5, 2), rat(10));
        assert_eq!(row_polynomial(&t, 2).unwrap(), PolyT::from_ints(&[1, 2, 1]));
        assert_eq!(row_polynomial(&t, 0).unwrap(), PolyT::one());
    }

    #[test]
    fn eulerian_row_three_is_descent_counts() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 1, 1, 1, -1, 0]), 4);
        // Full row; the trailing entry is zero.
        assert_eq!(t.row(3), ints(&[1, 4, 1, 0]).as_slice());
        assert_eq!(row_polynomial(&t, 3).unwrap(), PolyT::from_ints(&[1, 4, 1]));
        assert_eq!(t.row(4), ints(&[1, 11, 11, 1, 0]).as_slice());
    }

    #[test]
    fn set_partitions() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 1, 0, 0, 0, 1]), 4);
        assert_eq!(t.get(4, 2), rat(7));
    }

    #[test]
    fn row_out_of_range() {
        let t = triangle_from_recurrence(&GkpParams::from_ints([0, 0, 1, 0, 0, 1]), 2);
        assert_eq!(row_polynomial(&t, 3), Err(Error::RowOutOfRange { row: 3, max: 2 }));
    }

    #[test]
    fn recurrence_violation_located() {
        let p = GkpParams::from_ints([0, 1, 1, 1, -1, 0]);
        let t = triangle_from_recurrence(&p, 5);
        assert_eq!(t.first_recurrence_violation(&p), None);
        let bad = t.map(None, |n, k, v| if (n, k) == (3, 1) { v + rat(1) } else { v.clone() });
        assert_eq!(bad.first_recurrence_violation(&p), Some((3, 1)));
    }
}
