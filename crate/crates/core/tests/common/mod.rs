#![allow(dead_code)]

use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use vwp::cantor::{BinaryWord, Bit};
use vwp::modular::{GenSymbol, GeneratorMap, GroupWord};
use vwp::pda::{all_words, Pda, StackString, State};
use vwp::Prm;

pub fn bw(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

pub fn gw(s: &str) -> GroupWord {
    s.parse().unwrap()
}

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Every binary word of exactly `len` symbols.
pub fn words_of_len(len: usize) -> Vec<BinaryWord> {
    (0..1u64 << len)
        .map(|n| {
            BinaryWord::from_bits((0..len).rev().map(|i| if n >> i & 1 == 1 { Bit::One } else { Bit::Zero }).collect())
        })
        .collect()
}

/// Barrier test by brute force: each word of length `max|w|` must have
/// exactly one element of the set as a prefix, and no element may be a
/// proper prefix of another.
pub fn barrier_by_coverage(words: &[BinaryWord]) -> bool {
    if words.is_empty() {
        return false;
    }
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if i != j && u.is_prefix_of(v) {
                return false;
            }
        }
    }
    let depth = words.iter().map(BinaryWord::len).max().unwrap();
    words_of_len(depth).iter().all(|x| words.iter().filter(|w| w.is_prefix_of(x)).count() == 1)
}

/// A barrier with `leaves` elements, grown by splitting random leaves.
pub fn random_barrier<R: Rng>(rng: &mut R, leaves: usize) -> Vec<BinaryWord> {
    let mut words = vec![BinaryWord::empty()];
    while words.len() < leaves {
        let i = rng.gen_range(0..words.len());
        let leaf = words.swap_remove(i);
        words.push(leaf.child(Bit::Zero));
        words.push(leaf.child(Bit::One));
    }
    words
}

pub fn random_prm<R: Rng>(rng: &mut R, max_leaves: usize) -> Prm {
    let n = rng.gen_range(1..=max_leaves);
    let domain = random_barrier(rng, n);
    let mut range = random_barrier(rng, n);
    range.shuffle(rng);
    Prm::new(domain.into_iter().zip(range).collect()).unwrap()
}

/// Point-wise image of a long word, composing one letter at a time.
pub fn apply_letters(elements: &[&Prm], w: &BinaryWord) -> Option<BinaryWord> {
    elements.iter().try_fold(w.clone(), |acc, p| p.apply_to_word(&acc).ok())
}

/// Leftmost-redex rewriting with the modular relations, one rule at a time.
pub fn naive_normalize(word: &GroupWord) -> GroupWord {
    let a = GenSymbol::generator("a").unwrap();
    let b = GenSymbol::generator("b").unwrap();
    let (a_inv, b_inv) = (a.inverse(), b.inverse());
    let mut letters: Vec<GenSymbol> = word.letters().to_vec();
    loop {
        if let Some(i) = letters.iter().position(|l| *l == a_inv) {
            letters[i] = a.clone();
            continue;
        }
        let redex = (0..letters.len().saturating_sub(1)).find_map(|i| {
            let pair = (&letters[i], &letters[i + 1]);
            let cancels = (*pair.0 == a && *pair.1 == a)
                || (*pair.0 == b && *pair.1 == b_inv)
                || (*pair.0 == b_inv && *pair.1 == b);
            let out: Option<Vec<GenSymbol>> = if cancels {
                Some(vec![])
            } else if *pair.0 == b && *pair.1 == b {
                Some(vec![b_inv.clone()])
            } else if *pair.0 == b_inv && *pair.1 == b_inv {
                Some(vec![b.clone()])
            } else {
                None
            };
            out.map(|o| (i, o))
        });
        match redex {
            Some((i, out)) => {
                letters.splice(i..i + 2, out);
            }
            None => return GroupWord::new(letters),
        }
    }
}

/// Reference transition table of the Z automaton in its original row
/// order, with `g-` for the inverse.
pub const Z_REFERENCE_ROWS: [&str; 15] = [
    "q0\teps\t-\t0#\tqa",
    "qa\tg\t0\t110\tqr",
    "qa\tg-\t0\t101\tqr",
    "qr\tg\t0\t110\tqr",
    "qr\tg\t100\t10\tqr",
    "qr\tg\t11\t111\tqr",
    "qr\tg\t1010\t00\tqr",
    "qr\tg\t1011\t01\tqr",
    "qr\tg-\t0\t101\tqr",
    "qr\tg-\t10\t100\tqr",
    "qr\tg-\t111\t11\tqr",
    "qr\tg-\t1100\t00\tqr",
    "qr\tg-\t1101\t01\tqr",
    "qr\tg\t101#\t0#\tqa",
    "qr\tg-\t110#\t0#\tqa",
];

/// Exponent sum of a word over `{g, g-}`.
pub fn exponent_sum(word: &[GenSymbol]) -> i64 {
    word.iter().map(|s| if s.is_inverted() { -1 } else { 1 }).sum()
}

pub fn words_of_exact_len(alphabet: &[GenSymbol], len: usize) -> Vec<Vec<GenSymbol>> {
    all_words(alphabet, len).into_iter().filter(|w| w.len() == len).collect()
}

/// The label of `[node]·g`, which must be a single cone.
pub fn tracked_label(element: &Prm, node: &BinaryWord) -> BinaryWord {
    let labels = element.image_of_cone(node);
    assert_eq!(labels.len(), 1, "image of the node is not a single cone");
    labels[0].clone()
}

/// Along some path, the stack after each prefix `w` of every word of
/// length `max_len` is the label of `[node]·w` over `#`.
pub fn check_stack_tracking(pda: &Pda, gm: &GeneratorMap, max_len: usize) -> Result<(), String> {
    let node = pda.node().clone();
    words_of_exact_len(pda.input_alphabet(), max_len).par_iter().try_for_each(|word| {
        let layers = pda.reachable_configurations(word).unwrap();
        let mut element = Prm::identity();
        for (i, layer) in layers.iter().enumerate() {
            if i > 0 {
                element = element.compose(gm.element(&word[i - 1]).unwrap());
            }
            let expected = StackString::bottomed(&tracked_label(&element, &node));
            if !layer.iter().any(|c| c.state != State::Start && c.stack == expected) {
                let prefix = GroupWord::new(word[..i].to_vec());
                return Err(format!("after `{prefix}` no configuration has stack {expected}"));
            }
        }
        Ok(())
    })
}
