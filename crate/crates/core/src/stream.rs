//! Deterministic counter-based random stream.
//!
//! All randomness in the crate flows through this module so that seeded runs
//! are reproducible bit-for-bit across platforms and dependency upgrades. The
//! algorithm is part of the report file contract:
//!
//! * `mix` is the SplitMix64 finalizer.
//! * Lane `i` of seed `s` starts from state `mix(s + mix((i + 1) * GOLDEN))`
//!   (wrapping arithmetic).
//! * Each draw advances the state by `GOLDEN` and returns `mix(state)`.
//! * A value below `bound` is drawn by rejection: draws at or above
//!   `2^64 - (2^64 mod bound)` are discarded, the rest are reduced mod `bound`.

pub const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

#[inline]
pub fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A 64-bit seed that hands out independent lanes by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedStream {
    seed: u64,
}

impl SeedStream {
    pub fn new(seed: u64) -> Self {
        SeedStream { seed }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent lane number `index`.
    pub fn lane(&self, index: u64) -> Lane {
        let offset = mix(index.wrapping_add(1).wrapping_mul(GOLDEN));
        Lane {
            state: mix(self.seed.wrapping_add(offset)),
        }
    }
}

/// Sequential draws within one lane.
#[derive(Clone, Debug)]
pub struct Lane {
    state: u64,
}

impl Lane {
    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform value in `0..bound`. `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let accept_max = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            if x <= accept_max {
                return x % bound;
            }
        }
    }
}
