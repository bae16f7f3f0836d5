//! Seeded randomness. Every randomized routine in the crate takes a `u64`
//! seed and derives a ChaCha8 stream from it, so results are reproducible.

use rand::SeedableRng;
pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn seeded(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}

/// Independent sub-stream for trial `index` of a batch seeded with `seed`.
pub fn substream(seed: u64, index: u64) -> SeededRng {
    let mut rng = SeededRng::seed_from_u64(seed);
    rng.set_stream(index.wrapping_add(1));
    rng
}
