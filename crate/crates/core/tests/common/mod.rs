#![allow(dead_code)]

use braidforce_core::{BraidWord, FreeWord, Letter};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter(rng: &mut ChaCha8Rng, rank: usize) -> Letter {
    Letter::new(rng.gen_range(1..=rank as u32), rng.gen_bool(0.5))
}

pub fn random_letters(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> Vec<Letter> {
    (0..len).map(|_| random_letter(rng, rank)).collect()
}

/// Reduced word of exactly `len` letters.
pub fn reduced_word(rng: &mut ChaCha8Rng, rank: usize, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = random_letter(rng, rank);
        if letters.last().is_some_and(|last| last.cancels(l)) {
            continue;
        }
        letters.push(l);
    }
    FreeWord::reduce(rank, letters).unwrap()
}

/// Reduced word of random length up to `max_len`.
pub fn word(rng: &mut ChaCha8Rng, rank: usize, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    reduced_word(rng, rank, len)
}

pub fn braid(rng: &mut ChaCha8Rng, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands);
    }
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len).map(|_| Letter::new(rng.gen_range(1..strands as u32), rng.gen_bool(0.5))).collect();
    BraidWord::new(strands, letters).unwrap()
}

/// Repeatedly deletes the first adjacent cancelling pair until none remain.
pub fn naive_reduce(mut letters: Vec<Letter>) -> Vec<Letter> {
    while let Some(k) = (1..letters.len()).find(|&k| letters[k - 1].cancels(letters[k])) {
        letters.drain(k - 1..=k);
    }
    letters
}

pub fn w(rank: usize, s: &[i64]) -> FreeWord {
    FreeWord::from_signed(rank, s).unwrap()
}

pub fn b(strands: usize, s: &[i64]) -> BraidWord {
    BraidWord::from_signed(strands, s).unwrap()
}
