//! Shared fixtures for the benchmarks.

use subshift::{Alphabet, SequenceWindow};

/// A pseudo-random window over `k` letters (xorshift, fixed seed).
pub fn random_window(len: usize, k: u32, seed: u64) -> SequenceWindow {
    let mut x = seed | 1;
    let syms = (0..len)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            (x % k as u64) as u32
        })
        .collect();
    let alphabet = Alphabet::new((0..k).map(|i| i.to_string())).unwrap();
    SequenceWindow::new(alphabet, 0, syms, None).unwrap()
}
