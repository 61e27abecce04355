//! Finite binary words, cones of Cantor space and barriers.
//!
//! A word `w` over `{0,1}` addresses a node of the infinite rooted binary
//! tree and labels the cone `[w]` of infinite sequences extending it. A
//! barrier is a finite complete antichain: every infinite sequence has
//! exactly one of its words as a prefix.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CantorError {
    #[error("invalid symbol {0:?} in binary word (expected 0, 1 or the token `e`)")]
    InvalidSymbol(char),
    #[error("the empty set is not a barrier")]
    EmptyBarrier,
    #[error("{0} is a prefix of {1}")]
    NotAntichain(BinaryWord, BinaryWord),
    #[error("word {0} appears twice")]
    Duplicate(BinaryWord),
    #[error("cones do not cover Cantor space (measure {0})")]
    Incomplete(Dyadic),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bit {
    Zero,
    One,
}

impl Bit {
    pub fn flip(self) -> Bit {
        match self {
            Bit::Zero => Bit::One,
            Bit::One => Bit::Zero,
        }
    }

    fn as_char(self) -> char {
        match self {
            Bit::Zero => '0',
            Bit::One => '1',
        }
    }
}

/// Position of two words in the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixRelation {
    Equal,
    UIsProperPrefix,
    VIsProperPrefix,
    Incomparable,
}

/// A finite word over `{0,1}`. The empty word is the root `ε`.
///
/// The derived ordering is lexicographic with `0 < 1` and a proper
/// prefix sorting before its extensions, which is the canonical order used
/// everywhere a set of words is serialized.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryWord(Vec<Bit>);

impl BinaryWord {
    pub fn empty() -> Self {
        BinaryWord(Vec::new())
    }

    pub fn from_bits(bits: Vec<Bit>) -> Self {
        BinaryWord(bits)
    }

    pub fn bits(&self) -> &[Bit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: Bit) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.0.len() + 1);
        bits.extend_from_slice(&self.0);
        bits.push(bit);
        BinaryWord(bits)
    }

    pub fn concat(&self, suffix: &BinaryWord) -> BinaryWord {
        let mut bits = Vec::with_capacity(self.0.len() + suffix.0.len());
        bits.extend_from_slice(&self.0);
        bits.extend_from_slice(&suffix.0);
        BinaryWord(bits)
    }

    /// The parent node, or `None` at the root.
    pub fn parent(&self) -> Option<BinaryWord> {
        self.0.split_last().map(|(_, rest)| BinaryWord(rest.to_vec()))
    }

    pub fn last(&self) -> Option<Bit> {
        self.0.last().copied()
    }

    /// True when `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &BinaryWord) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The residue `s` with `self = prefix · s`.
    pub fn strip_prefix(&self, prefix: &BinaryWord) -> Option<BinaryWord> {
        self.0.strip_prefix(prefix.0.as_slice()).map(|s| BinaryWord(s.to_vec()))
    }

    pub fn relation(&self, other: &BinaryWord) -> PrefixRelation {
        prefix_relation(self, other)
    }

    pub fn is_comparable(&self, other: &BinaryWord) -> bool {
        self.relation(other) != PrefixRelation::Incomparable
    }
}

pub fn prefix_relation(u: &BinaryWord, v: &BinaryWord) -> PrefixRelation {
    match u.len().cmp(&v.len()) {
        Ordering::Equal if u == v => PrefixRelation::Equal,
        Ordering::Less if u.is_prefix_of(v) => PrefixRelation::UIsProperPrefix,
        Ordering::Greater if v.is_prefix_of(u) => PrefixRelation::VIsProperPrefix,
        _ => PrefixRelation::Incomparable,
    }
}

/// `[u] ∩ [v] = ∅`.
pub fn cones_disjoint(u: &BinaryWord, v: &BinaryWord) -> bool {
    prefix_relation(u, v) == PrefixRelation::Incomparable
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for bit in &self.0 {
            write!(f, "{}", bit.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = CantorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "e" || s == "ε" {
            return Ok(BinaryWord::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(Bit::Zero),
                '1' => Ok(Bit::One),
                other => Err(CantorError::InvalidSymbol(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BinaryWord)
    }
}

/// An exact non-negative dyadic rational `numerator / 2^exponent`, kept in
/// lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: usize,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { numerator: BigUint::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic { numerator: BigUint::one(), exponent: 0 }
    }

    /// `2^(-depth)`, the measure of a cone at the given depth.
    pub fn cone(depth: usize) -> Self {
        Dyadic { numerator: BigUint::one(), exponent: depth }
    }

    pub fn is_one(&self) -> bool {
        self.exponent == 0 && self.numerator.is_one()
    }

    fn normalized(mut numerator: BigUint, mut exponent: usize) -> Self {
        if numerator.is_zero() {
            return Dyadic::zero();
        }
        let twos = numerator.trailing_zeros().unwrap_or(0) as usize;
        let shift = twos.min(exponent);
        numerator >>= shift;
        exponent -= shift;
        Dyadic { numerator, exponent }
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let exponent = self.exponent.max(rhs.exponent);
        let lhs = &self.numerator << (exponent - self.exponent);
        let rhs = &rhs.numerator << (exponent - rhs.exponent);
        Dyadic::normalized(lhs + rhs, exponent)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

/// Sum of `2^(-|w|)` over the words.
pub fn kraft_measure<'a, I>(words: I) -> Dyadic
where
    I: IntoIterator<Item = &'a BinaryWord>,
{
    let words: Vec<&BinaryWord> = words.into_iter().collect();
    let depth = words.iter().map(|w| w.len()).max().unwrap_or(0);
    let total = words.iter().fold(BigUint::zero(), |acc, w| acc + (BigUint::one() << (depth - w.len())));
    Dyadic::normalized(total, depth)
}

/// Checks that no word of a sorted, duplicate-free slice is a proper prefix
/// of another. In lexicographic order the extensions of `w` immediately
/// follow `w`, so comparing neighbours suffices.
fn first_prefix_violation(sorted: &[BinaryWord]) -> Option<(&BinaryWord, &BinaryWord)> {
    sorted.windows(2).find(|pair| pair[0].is_prefix_of(&pair[1])).map(|pair| (&pair[0], &pair[1]))
}

pub fn is_antichain(words: &[BinaryWord]) -> bool {
    let mut sorted = words.to_vec();
    sorted.sort();
    sorted.dedup();
    sorted.len() == words.len() && first_prefix_violation(&sorted).is_none()
}

/// True iff the words form a complete finite antichain.
pub fn is_barrier(words: &[BinaryWord]) -> bool {
    Barrier::new(words.to_vec()).is_ok()
}

/// A complete finite antichain of binary words, stored in canonical
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Barrier {
    words: Vec<BinaryWord>,
}

impl Barrier {
    pub fn new(mut words: Vec<BinaryWord>) -> Result<Self, CantorError> {
        if words.is_empty() {
            return Err(CantorError::EmptyBarrier);
        }
        words.sort();
        if let Some(pair) = words.windows(2).find(|pair| pair[0] == pair[1]) {
            return Err(CantorError::Duplicate(pair[0].clone()));
        }
        if let Some((u, v)) = first_prefix_violation(&words) {
            return Err(CantorError::NotAntichain(u.clone(), v.clone()));
        }
        let measure = kraft_measure(&words);
        if !measure.is_one() {
            return Err(CantorError::Incomplete(measure));
        }
        Ok(Barrier { words })
    }

    /// `{ε}`, the coarsest barrier.
    pub fn root() -> Self {
        Barrier { words: vec![BinaryWord::empty()] }
    }

    /// Caller guarantees the words are a sorted complete antichain.
    pub(crate) fn from_sorted_unchecked(words: Vec<BinaryWord>) -> Self {
        debug_assert!(Barrier::new(words.clone()).map(|b| b.words == words).unwrap_or(false));
        Barrier { words }
    }

    pub fn words(&self) -> &[BinaryWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BinaryWord> {
        self.words.iter()
    }

    pub fn contains(&self, w: &BinaryWord) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// The unique element that is a prefix of `w`, if any.
    pub fn prefix_of(&self, w: &BinaryWord) -> Option<&BinaryWord> {
        prefix_in_sorted(&self.words, w)
    }

    /// Elements that properly extend `w`, in canonical order.
    pub fn extensions_of(&self, w: &BinaryWord) -> &[BinaryWord] {
        extensions_in_sorted(&self.words, w)
    }

    /// Splits leaves along `w` until no element is a proper prefix of `w`.
    pub fn refine_to_contain(&self, w: &BinaryWord) -> Barrier {
        let mut words = self.words.clone();
        let Some(start) = prefix_in_sorted(&words, w).cloned() else {
            return self.clone();
        };
        let residue = w.strip_prefix(&start).expect("prefix");
        words.retain(|x| *x != start);
        let mut node = start;
        for &bit in residue.bits() {
            words.push(node.child(bit.flip()));
            node = node.child(bit);
        }
        words.push(node);
        words.sort();
        Barrier::from_sorted_unchecked(words)
    }

    /// The coarsest barrier refining both `self` and `other`: for every
    /// comparable pair, the longer word.
    pub fn common_refinement(&self, other: &Barrier) -> Barrier {
        let mut words = Vec::new();
        for u in &self.words {
            if prefix_in_sorted(&other.words, u).is_some() {
                words.push(u.clone());
            } else {
                words.extend_from_slice(extensions_in_sorted(&other.words, u));
            }
        }
        words.sort();
        Barrier::from_sorted_unchecked(words)
    }
}

pub(crate) fn prefix_in_sorted<'a>(sorted: &'a [BinaryWord], w: &BinaryWord) -> Option<&'a BinaryWord> {
    // In an antichain, a prefix of `w` is the greatest element not exceeding `w`.
    let idx = sorted.partition_point(|x| x <= w);
    idx.checked_sub(1).map(|i| &sorted[i]).filter(|x| x.is_prefix_of(w))
}

pub(crate) fn extensions_in_sorted<'a>(sorted: &'a [BinaryWord], w: &BinaryWord) -> &'a [BinaryWord] {
    let start = sorted.partition_point(|x| x <= w);
    let len = sorted[start..].iter().take_while(|x| w.is_prefix_of(x)).count();
    &sorted[start..start + len]
}

impl fmt::Display for Barrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.words.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for Barrier {
    type Err = CantorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CantorError::EmptyBarrier);
        }
        let words = s.split(',').map(|w| w.trim().parse()).collect::<Result<Vec<BinaryWord>, _>>()?;
        Barrier::new(words)
    }
}

/// Merges sibling cones `u0, u1` into `u` until no pair remains. The
/// result is the unique minimal set of cone labels covering the same set.
pub fn merge_siblings(mut words: Vec<BinaryWord>) -> Vec<BinaryWord> {
    words.sort();
    words.dedup();
    loop {
        let mut merged = Vec::with_capacity(words.len());
        let mut changed = false;
        let mut i = 0;
        while i < words.len() {
            let w = &words[i];
            if i + 1 < words.len() && w.last() == Some(Bit::Zero) {
                let parent = w.parent().expect("non-empty");
                if words[i + 1] == parent.child(Bit::One) {
                    merged.push(parent);
                    changed = true;
                    i += 2;
                    continue;
                }
            }
            merged.push(w.clone());
            i += 1;
        }
        merged.sort();
        words = merged;
        if !changed {
            return words;
        }
    }
}
