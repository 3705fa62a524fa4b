//! Seeded pseudo-random generator for reproducible test signals.
//!
//! The generator is pinned to a fixed algorithm so that any implementation,
//! in any language, can regenerate byte-identical inputs from the same seed:
//!
//! * State expansion: SplitMix64 over the seed. Each step adds
//!   `0x9E3779B97F4A7C15`, then mixes with
//!   `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
//!   z *= 0x94D049BB133111EB; z ^= z >> 31`. Four steps fill the state.
//! * Stream: xoshiro256++. Output `rotl(s0 + s3, 23) + s0`; update
//!   `t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3; s2 ^= t;
//!   s3 = rotl(s3, 45)`. All arithmetic is wrapping, 64-bit.
//! * Unit doubles: take the top 53 bits, `(x >> 11) * 2^-53`, giving a
//!   uniform value in `[0, 1)`.

use crate::signal::Signal;

/// xoshiro256++ stream seeded via SplitMix64.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: [u64; 4],
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        let mut sm = seed;
        let mut state = [0u64; 4];
        for slot in &mut state {
            sm = sm.wrapping_add(0x9E3779B97F4A7C15);
            let mut z = sm;
            z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
            *slot = z ^ (z >> 31);
        }
        Self { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        let [s0, s1, s2, s3] = self.state;
        let result = (s0.wrapping_add(s3)).rotate_left(23).wrapping_add(s0);
        let t = s1 << 17;
        let s2 = s2 ^ s0;
        let s3 = s3 ^ s1;
        let s1 = s1 ^ s2;
        let s0 = s0 ^ s3;
        self.state = [s0, s1, s2 ^ t, s3.rotate_left(45)];
        result
    }

    /// Uniform in `[0, 1)`.
    pub fn next_unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[-1, 1)`.
    pub fn next_symmetric_f64(&mut self) -> f64 {
        2.0 * self.next_unit_f64() - 1.0
    }
}

/// Deterministic test signal of `len` samples, uniform in `[-1, 1)`.
pub fn random_signal(len: usize, seed: u64) -> Signal {
    let mut rng = SeededRng::new(seed);
    Signal::from_fn(len, |_| rng.next_symmetric_f64())
        .expect("generated samples are always finite")
}
