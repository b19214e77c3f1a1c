#![allow(dead_code)]

pub mod oracle;
pub mod properties;

use adolg::BraidWord;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn br(s: &str) -> BraidWord {
    s.parse().unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random word on `2..=max_strands` strands with `0..=max_len` letters.
pub fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2..=max_strands);
    random_braid_on(rng, strands, max_len)
}

pub fn random_braid_on(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let word = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::new(strands, word).unwrap()
}
