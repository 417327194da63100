//! The (non-triangular) matrices `A^{(n,b)}` connecting the factorial
//! bases `(bx+k)^{n̲}` and `(x+j)^{n̲}`, `0 ≤ j,k ≤ n`, whose entries are
//! single-progression Eulerian numbers divided by `n!`.

use std::fmt;

use num_traits::{One, Zero};

use super::connection::{lin, poly_factorial};
use super::{eulerian_rank1, EulerianParams};
use crate::algebra::{factorial, powi, rat, FactorialDir, PolyT, Rat};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectionMatrix {
    pub n: usize,
    pub b: Rat,
    /// `entries[k][j] = A^{(n,b)}_{k,j}`.
    pub entries: Vec<Vec<Rat>>,
}

impl ConnectionMatrix {
    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn mul(&self, other: &ConnectionMatrix) -> Vec<Vec<Rat>> {
        mat_mul(&self.entries, &other.entries)
    }

    pub fn is_identity(&self) -> bool {
        is_identity(&self.entries)
    }
}

impl fmt::Display for ConnectionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn mat_mul(x: &[Vec<Rat>], y: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = x.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|l| &x[i][l] * &y[l][j]).sum()).collect())
        .collect()
}

fn is_identity(m: &[Vec<Rat>]) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().enumerate().all(|(j, x)| *x == if i == j { Rat::one() } else { Rat::zero() }))
}

/// `A^{(n,b)}_{k,j} = E_{n,j}(-1,b;b-k,k)/n!`, from the alternating-sum
/// formula when `b ≠ 0` and from the recurrence otherwise.
pub fn connection_matrix(n: usize, b: &Rat) -> ConnectionMatrix {
    let nf = factorial(n);
    let entries = (0..=n)
        .map(|k| {
            let e = EulerianParams::new(rat(-1), b.clone(), b - rat(k as i64), rat(k as i64));
            if b.is_zero() {
                let t = e.triangle(n);
                (0..=n).map(|j| t.get(n, j as i64) / &nf).collect()
            } else {
                (0..=n)
                    .map(|j| eulerian_rank1(&e, n, j).expect("b ≠ 0") / &nf)
                    .collect()
            }
        })
        .collect();
    ConnectionMatrix { n, b: b.clone(), entries }
}

/// `(bx+k)^{n̲} = Σ_j A_{k,j} (x+j)^{n̲}` as polynomials, for each `k`.
pub fn connection_matrix_identity_check(n: usize, b: &Rat) -> Report {
    connection_matrix_extends_check(n, b, 0)
}

/// `Δ^r (bx+k)^{n̲} = Σ_j A_{k,j} n^{r̲} (x+j)^{(n-r)̲}`, `Δ` the forward
/// difference in `x`.
pub fn connection_matrix_extends_check(n: usize, b: &Rat, r: usize) -> Report {
    let a = connection_matrix(n, b);
    let one = rat(1);
    let mut rep = Report::new(format!("connection matrix n = {n}, b = {b}, Δ^{r}"));
    let nr = crate::algebra::falling(&rat(n as i64), r, &one);
    for k in 0..=n {
        let mut lhs = poly_factorial(&lin(b.clone(), rat(k as i64)), n, &one, FactorialDir::Falling);
        for _ in 0..r {
            lhs = &lhs.compose(&lin(one.clone(), one.clone())) - &lhs;
        }
        let rhs = (0..=n).fold(PolyT::zero(), |acc, j| {
            let basis = poly_factorial(&lin(one.clone(), rat(j as i64)), n.saturating_sub(r), &one, FactorialDir::Falling);
            let basis = if r > n { PolyT::zero() } else { basis };
            &acc + &basis.scale(&(&a.entries[k][j] * &nr))
        });
        rep.check(lhs == rhs, || format!("k = {k}: {lhs} vs {rhs}"));
    }
    rep
}

/// Characteristic polynomial `det(xI - M)` by the Faddeev–LeVerrier
/// recursion, which stays exact over the rationals.
pub fn char_poly(m: &[Vec<Rat>]) -> PolyT {
    let n = m.len();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut mk: Vec<Vec<Rat>> = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        mk = next;
        let am = mat_mul(m, &mk);
        let tr: Rat = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -tr / rat(k as i64);
    }
    PolyT::new(c)
}

/// `det(xI - A^{(n,b)}) = Π_{j=0..n} (x - b^j)`. The eigenvalue claim is
/// empirical, so a failure here is evidence against it rather than a bug.
pub fn connection_matrix_eigencheck(n: usize, b: &Rat) -> Report {
    let a = connection_matrix(n, b);
    let got = char_poly(&a.entries);
    let want = (0..=n).fold(PolyT::one(), |acc, j| &acc * &lin(rat(1), -powi(b, j as i64)));
    let mut rep = Report::new(format!("connection matrix eigenvalues n = {n}, b = {b}"));
    rep.check(got == want, || format!("det(xI - A) = {got}, expected {want}"));
    rep
}

/// `A^{(n,b)} A^{(n,1/b)} = I`.
pub fn connection_matrix_inverse_check(n: usize, b: &Rat) -> Report {
    let mut rep = Report::new(format!("connection matrix inverse n = {n}, b = {b}"));
    let prod = connection_matrix(n, b).mul(&connection_matrix(n, &b.recip()));
    rep.check(is_identity(&prod), || format!("A(b) A(1/b) = {prod:?}"));
    rep
}

/// `A^{(n,2)}_{k,j} = C(n+1, 2j-k+1)`.
pub fn connection_matrix_b2_check(n: usize) -> Report {
    let a = connection_matrix(n, &rat(2));
    let mut rep = Report::new(format!("connection matrix b = 2 binomials, n = {n}"));
    for k in 0..=n {
        for j in 0..=n {
            let want = crate::algebra::binom(n as i64 + 1, 2 * j as i64 - k as i64 + 1);
            rep.check(a.entries[k][j] == want, || format!("({k},{j}): {} vs {want}", a.entries[k][j]));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    #[test]
    fn small_matrices() {
        let a = connection_matrix(1, &rat(2));
        assert_eq!(a.entries, vec![vec![rat(2), rat(0)], vec![rat(1), rat(1)]]);
        assert_eq!(char_poly(&a.entries), PolyT::from_ints(&[2, -3, 1]));
        for n in 0..=6 {
            assert!(connection_matrix(n, &rat(1)).is_identity());
        }
    }

    #[test]
    fn identities() {
        for b in [rat(2), rat(3), ratio(5, 2)] {
            for n in 0..=5 {
                assert!(connection_matrix_identity_check(n, &b).passed());
                assert!(connection_matrix_inverse_check(n, &b).passed());
                assert!(connection_matrix_eigencheck(n, &b).passed());
                for r in 0..=2 {
                    assert!(connection_matrix_extends_check(n, &b, r).passed());
                }
            }
        }
        for n in 0..=6 {
            assert!(connection_matrix_b2_check(n).passed());
        }
    }

    #[test]
    fn degenerate_step_uses_recurrence() {
        let a = connection_matrix(2, &rat(0));
        assert!(connection_matrix_identity_check(2, &rat(0)).passed());
        assert_eq!(a.size(), 3);
    }
}
