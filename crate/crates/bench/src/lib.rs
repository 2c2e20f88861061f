//! Shared inputs for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use trace_horizon::{IntMatrix, IntPolynomial};

/// A reproducible random element of SL(m, Z) built from `3m` transvections.
pub fn random_sl(m: usize, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    IntMatrix::random_transvection_product(m, 3 * m, &mut rng)
}

/// Lehmer's degree-10 polynomial.
pub fn lehmer() -> IntPolynomial {
    IntPolynomial::from_i64(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}
