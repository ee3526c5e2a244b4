//! Deterministic RNG streams for seeded ensembles.
//!
//! Stream derivation rule: stream `i` of master seed `s` is a ChaCha8
//! generator seeded with `splitmix64(s ^ splitmix64(i + phi))` where `phi`
//! is the 64-bit golden-ratio constant. Every sample of an ensemble owns its
//! own stream keyed by sample index, so results are independent of evaluation
//! order and reproducible bit-for-bit.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives the RNG for stream `stream` of master seed `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(stream)))
}

/// Derives an independent sub-seed, for experiments that run several
/// ensembles from one master seed.
pub fn derive_seed(seed: u64, tag: u64) -> u64 {
    splitmix64(seed.wrapping_add(splitmix64(tag ^ GOLDEN)))
}
