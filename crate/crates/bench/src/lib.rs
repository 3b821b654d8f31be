//! Shared fixtures for the criterion benches.

use gamma2_core::sample::{random_word, Rng};
use gamma2_core::{Genus, Word};

/// A deterministic batch of words for a genus.
pub fn word_batch(genus: usize, count: usize, max_len: usize) -> (Genus, Vec<Word>) {
    let g = Genus::new(genus).unwrap();
    let mut rng = Rng::new(0xbe9c4);
    let words = (0..count).map(|_| random_word(&mut rng, g, max_len)).collect();
    (g, words)
}
