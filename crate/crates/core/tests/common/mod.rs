#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;
use superwpt::bimodule::{Cocycle, SuperBimodule};
use superwpt::exactla::{Rat, RatVec};

pub fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

/// Rational of height at most `h`.
pub fn rand_rat(rng: &mut StdRng, h: i64) -> Rat {
    Rat::new(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

/// Parity-preserving map `J -> M` with random entries, as images of the basis.
pub fn rand_graded_map(rng: &mut StdRng, m: &SuperBimodule, h: i64) -> Vec<RatVec> {
    let j = m.base();
    (0..j.dim())
        .map(|a| {
            (0..m.dim())
                .map(|t| if m.parity(t) == j.parity(a) && rng.gen_bool(0.6) { rand_rat(rng, h) } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn combination(rng: &mut StdRng, m: &SuperBimodule, basis: &[Cocycle], h: i64) -> Cocycle {
    let mut mu = Cocycle::zero(m);
    for c in basis {
        mu = mu.add_scaled(c, &rand_rat(rng, h));
    }
    mu
}
