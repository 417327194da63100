//! Seeded random witnesses for property checks. Every suite draws from a
//! ChaCha stream so reruns with the same seed are bit-identical.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{ratio, Rat};
use crate::gkp::GkpParams;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 4`.
pub fn small_rat(rng: &mut SampleRng) -> Rat {
    ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rat(rng: &mut SampleRng) -> Rat {
    loop {
        let x = small_rat(rng);
        if x != Rat::from_integer(0.into()) {
            return x;
        }
    }
}

/// A rational avoiding the given values.
pub fn rat_avoiding(rng: &mut SampleRng, bad: impl Fn(&Rat) -> bool) -> Rat {
    loop {
        let x = small_rat(rng);
        if !bad(&x) {
            return x;
        }
    }
}

pub fn params(rng: &mut SampleRng) -> GkpParams {
    GkpParams::new(
        small_rat(rng),
        small_rat(rng),
        small_rat(rng),
        small_rat(rng),
        small_rat(rng),
        small_rat(rng),
    )
}

/// Parameters with `β β' ≠ 0`.
pub fn params_nonzero_betas(rng: &mut SampleRng) -> GkpParams {
    let mut p = params(rng);
    p.beta = nonzero_rat(rng);
    p.beta_p = nonzero_rat(rng);
    p
}

/// Parameters with `β' = -β ≠ 0`.
pub fn params_unit_normalized(rng: &mut SampleRng) -> GkpParams {
    let mut p = params(rng);
    p.beta = nonzero_rat(rng);
    p.beta_p = -&p.beta;
    p
}

/// Parameters with `β' = β ≠ 0`.
pub fn params_equal_betas(rng: &mut SampleRng) -> GkpParams {
    let mut p = params(rng);
    p.beta = nonzero_rat(rng);
    p.beta_p = p.beta.clone();
    p
}
