#![allow(dead_code)]

use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Rationals `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 5`.
pub fn random_potential<R: Rng>(rng: &mut R, len: usize) -> Vec<BigRational> {
    (0..len)
        .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=5)))
        .collect()
}
