use num_traits::Zero;

use crate::algebra::{binom, falling, rising, sign, Rat};

/// `v_k = Σ_{j≥k} (-1)^(j-k) C(j,k) u_j`, or its inverse (no signs).
pub fn upper_binomial_transform(u: &[Rat], inverse: bool) -> Vec<Rat> {
    let n = u.len();
    (0..n)
        .map(|k| {
            (k..n).fold(Rat::zero(), |acc, j| {
                let s = if inverse { sign(0) } else { sign((j - k) as i64) };
                acc + s * binom(j as i64, k as i64) * &u[j]
            })
        })
        .collect()
}

/// `v_k = Σ_{j≤k} (-1)^(k-j) C(k,j) u_j`, or its inverse (no signs).
pub fn lower_binomial_transform(u: &[Rat], inverse: bool) -> Vec<Rat> {
    generalized_lbt(
        u,
        &Rat::from_integer(1.into()),
        &Rat::zero(),
        if inverse { LbtDir::Inverse } else { LbtDir::Forward },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LbtDir {
    Forward,
    Inverse,
}

/// Forward: `v_k = Σ_j (-1)^(k-j) C(k,j) A^(k-j falling, b) u_j`.
/// Inverse: `u_k = Σ_j C(k,j) A^(k-j rising, b) v_j`.
pub fn generalized_lbt(u: &[Rat], a: &Rat, b: &Rat, dir: LbtDir) -> Vec<Rat> {
    (0..u.len())
        .map(|k| {
            (0..=k).fold(Rat::zero(), |acc, j| {
                let w = match dir {
                    LbtDir::Forward => sign((k - j) as i64) * falling(a, k - j, b),
                    LbtDir::Inverse => rising(a, k - j, b),
                };
                acc + w * binom(k as i64, j as i64) * &u[j]
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn constant_sequence_goes_to_delta() {
        let u = vec![rat(1); 6];
        let v = generalized_lbt(&u, &rat(1), &rat(0), LbtDir::Forward);
        assert_eq!(v, [1, 0, 0, 0, 0, 0].map(rat).to_vec());
        assert_eq!(lower_binomial_transform(&u, false), v);
    }

    #[test]
    fn pairs_invert() {
        let u: Vec<Rat> = (0..12).map(|i| ratio(i * i - 7, i + 2)).collect();
        for (a, b) in [(rat(1), rat(0)), (ratio(3, 2), ratio(-2, 5)), (rat(-4), rat(3))] {
            let v = generalized_lbt(&u, &a, &b, LbtDir::Forward);
            assert_eq!(generalized_lbt(&v, &a, &b, LbtDir::Inverse), u);
        }
        assert_eq!(upper_binomial_transform(&upper_binomial_transform(&u, false), true), u);
        assert_eq!(lower_binomial_transform(&lower_binomial_transform(&u, true), false), u);
    }
}
