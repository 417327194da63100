use num_traits::Zero;

use super::{binom, sign, Rat};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// `Δ^order` at the first tabulated point, or `∇^order` at the last one.
pub fn finite_difference(values: &[Rat], order: usize, dir: Direction) -> Result<Rat> {
    if values.len() < order + 1 {
        return Err(Error::ShortTable {
            len: values.len(),
            order,
        });
    }
    let k = order as i64;
    let mut acc = Rat::zero();
    for j in 0..=order {
        let (v, s) = match dir {
            Direction::Forward => (&values[j], sign(k - j as i64)),
            Direction::Backward => (&values[values.len() - 1 - j], sign(j as i64)),
        };
        acc += binom(k, j as i64) * s * v;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn table(f: impl Fn(i64) -> i64, n: i64) -> Vec<Rat> {
        (0..n).map(|x| rat(f(x))).collect()
    }

    #[test]
    fn spec_values() {
        let sq = table(|x| x * x, 3);
        assert_eq!(finite_difference(&sq, 2, Direction::Forward).unwrap(), rat(2));
        assert_eq!(finite_difference(&sq, 0, Direction::Forward).unwrap(), rat(0));
        assert_eq!(finite_difference(&sq, 0, Direction::Backward).unwrap(), rat(4));
        let cube = table(|x| (x + 1).pow(3), 4);
        assert_eq!(finite_difference(&cube, 3, Direction::Forward).unwrap(), rat(6));
        assert_eq!(finite_difference(&cube, 3, Direction::Backward).unwrap(), rat(6));
    }

    #[test]
    fn short_table() {
        assert_eq!(
            finite_difference(&[rat(1)], 1, Direction::Forward),
            Err(Error::ShortTable { len: 1, order: 1 })
        );
    }
}
