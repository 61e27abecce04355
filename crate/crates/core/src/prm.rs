//! Prefix replacement maps: elements of Thompson's group V.
//!
//! A [`Prm`] is a bijection between the words of two barriers. It acts on
//! an infinite sequence `d·s` (with `d` in the domain barrier) by sending it
//! to `σ(d)·s`. Many tables induce the same map; [`Prm::reduce`] picks the
//! minimal one, and equality is always decided on reduced tables.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cantor::{self, Barrier, BinaryWord, Bit, CantorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PrmError {
    #[error("no domain word of the map is a prefix of {0}; use image_of_cone")]
    InsufficientDepth(BinaryWord),
    #[error("invalid domain: {0}")]
    Domain(CantorError),
    #[error("invalid range: {0}")]
    Range(CantorError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Result of [`Prm::element_order`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(usize),
    Unbounded,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// A prefix replacement `(D, R, σ)`, stored as `(d, σ(d))` pairs sorted by
/// domain word.
///
/// `PartialEq` compares the induced maps, not the tables.
#[derive(Debug, Clone)]
pub struct Prm {
    pairs: Vec<(BinaryWord, BinaryWord)>,
}

impl Prm {
    pub fn new(mut pairs: Vec<(BinaryWord, BinaryWord)>) -> Result<Self, PrmError> {
        pairs.sort();
        Barrier::new(pairs.iter().map(|(d, _)| d.clone()).collect()).map_err(PrmError::Domain)?;
        Barrier::new(pairs.iter().map(|(_, r)| r.clone()).collect()).map_err(PrmError::Range)?;
        Ok(Prm { pairs })
    }

    fn from_sorted_unchecked(pairs: Vec<(BinaryWord, BinaryWord)>) -> Self {
        debug_assert!(pairs.windows(2).all(|p| p[0].0 < p[1].0));
        Prm { pairs }
    }

    pub fn identity() -> Self {
        Prm { pairs: vec![(BinaryWord::empty(), BinaryWord::empty())] }
    }

    pub fn pairs(&self) -> &[(BinaryWord, BinaryWord)] {
        &self.pairs
    }

    pub fn domain(&self) -> Barrier {
        Barrier::from_sorted_unchecked(self.pairs.iter().map(|(d, _)| d.clone()).collect())
    }

    pub fn range(&self) -> Barrier {
        let mut words: Vec<_> = self.pairs.iter().map(|(_, r)| r.clone()).collect();
        words.sort();
        Barrier::from_sorted_unchecked(words)
    }

    fn domain_pair_for(&self, w: &BinaryWord) -> Option<&(BinaryWord, BinaryWord)> {
        let idx = self.pairs.partition_point(|(d, _)| d <= w);
        idx.checked_sub(1).map(|i| &self.pairs[i]).filter(|(d, _)| d.is_prefix_of(w))
    }

    /// Image of a word deep enough to lie under a single domain leaf.
    pub fn apply_to_word(&self, w: &BinaryWord) -> Result<BinaryWord, PrmError> {
        let (d, r) = self.domain_pair_for(w).ok_or_else(|| PrmError::InsufficientDepth(w.clone()))?;
        Ok(r.concat(&w.strip_prefix(d).expect("prefix")))
    }

    /// Minimal set of cone labels whose union is `[w]` under the map.
    pub fn image_of_cone(&self, w: &BinaryWord) -> Vec<BinaryWord> {
        if let Ok(image) = self.apply_to_word(w) {
            return vec![image];
        }
        let start = self.pairs.partition_point(|(d, _)| d <= w);
        let images =
            self.pairs[start..].iter().take_while(|(d, _)| w.is_prefix_of(d)).map(|(_, r)| r.clone()).collect();
        cantor::merge_siblings(images)
    }

    /// `self` first, then `other`: `w · (p∘q) = (w · p) · q`. The result is
    /// reduced.
    pub fn compose(&self, other: &Prm) -> Prm {
        let mut by_range: Vec<(BinaryWord, BinaryWord)> =
            self.pairs.iter().map(|(d, r)| (r.clone(), d.clone())).collect();
        by_range.sort();
        let range = Barrier::from_sorted_unchecked(by_range.iter().map(|(r, _)| r.clone()).collect());
        let middle = range.common_refinement(&other.domain());

        let mut pairs: Vec<(BinaryWord, BinaryWord)> = middle
            .iter()
            .map(|c| {
                let idx = by_range.partition_point(|(r, _)| r <= c) - 1;
                let (r, d) = &by_range[idx];
                let source = d.concat(&c.strip_prefix(r).expect("refinement extends range"));
                let target = other.apply_to_word(c).expect("refinement extends domain");
                (source, target)
            })
            .collect();
        pairs.sort();
        Prm::from_sorted_unchecked(pairs).reduce()
    }

    pub fn invert(&self) -> Prm {
        let mut pairs: Vec<_> = self.pairs.iter().map(|(d, r)| (r.clone(), d.clone())).collect();
        pairs.sort();
        Prm::from_sorted_unchecked(pairs)
    }

    /// Merges sibling leaves `d0 ↦ e0`, `d1 ↦ e1` into `d ↦ e` until none
    /// remain.
    pub fn reduce(&self) -> Prm {
        let mut pairs = self.pairs.clone();
        loop {
            let mut merged = Vec::with_capacity(pairs.len());
            let mut i = 0;
            while i < pairs.len() {
                if i + 1 < pairs.len() {
                    if let Some(parent) = sibling_merge(&pairs[i], &pairs[i + 1]) {
                        merged.push(parent);
                        i += 2;
                        continue;
                    }
                }
                merged.push(pairs[i].clone());
                i += 1;
            }
            if merged.len() == pairs.len() {
                return Prm::from_sorted_unchecked(pairs);
            }
            pairs = merged;
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.reduce().pairs.len() == self.pairs.len()
    }

    pub fn equals(&self, other: &Prm) -> bool {
        self.reduce().pairs == other.reduce().pairs
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.iter().all(|(d, r)| d == r)
    }

    /// Smallest `k ≤ max_order` with `self^k` the identity.
    pub fn element_order(&self, max_order: usize) -> Order {
        let mut power = self.reduce();
        for k in 1..=max_order {
            if power.is_identity() {
                return Order::Finite(k);
            }
            power = power.compose(self);
        }
        Order::Unbounded
    }

    pub fn pow(&self, exponent: i64) -> Prm {
        let base = if exponent < 0 { self.invert() } else { self.clone() };
        (0..exponent.unsigned_abs()).fold(Prm::identity(), |acc, _| acc.compose(&base))
    }
}

fn sibling_merge(
    left: &(BinaryWord, BinaryWord),
    right: &(BinaryWord, BinaryWord),
) -> Option<(BinaryWord, BinaryWord)> {
    let (d0, e0) = left;
    let (d1, e1) = right;
    if d0.last() != Some(Bit::Zero) || e0.last() != Some(Bit::Zero) {
        return None;
    }
    let d = d0.parent()?;
    let e = e0.parent()?;
    (*d1 == d.child(Bit::One) && *e1 == e.child(Bit::One)).then_some((d, e))
}

impl PartialEq for Prm {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for Prm {}

impl fmt::Display for Prm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, r) in &self.pairs {
            writeln!(f, "{d} -> {r}")?;
        }
        Ok(())
    }
}

impl FromStr for Prm {
    type Err = PrmError;

    /// One `<domain> -> <range>` mapping per line. Blank lines and lines
    /// starting with `#` are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut pairs = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |message: String| PrmError::Parse { line: idx + 1, message };
            let (d, r) =
                line.split_once("->").ok_or_else(|| parse_err(format!("expected `<word> -> <word>`, got {line:?}")))?;
            let d = d.trim().parse().map_err(|e: CantorError| parse_err(e.to_string()))?;
            let r = r.trim().parse().map_err(|e: CantorError| parse_err(e.to_string()))?;
            pairs.push((d, r));
        }
        if pairs.is_empty() {
            return Err(PrmError::Parse { line: 0, message: "no mappings".into() });
        }
        Prm::new(pairs)
    }
}

/// Builds a map from `(domain, range)` string pairs. Panics on bad input;
/// meant for built-in tables and tests.
pub fn table(entries: &[(&str, &str)]) -> Prm {
    let pairs =
        entries.iter().map(|(d, r)| (d.parse().expect("domain word"), r.parse().expect("range word"))).collect();
    Prm::new(pairs).expect("valid prefix replacement")
}

/// The generator of a demonstrative copy of `Z` with demonstration node `0`.
pub fn z_generator() -> Prm {
    table(&[("0", "110"), ("100", "10"), ("101", "0"), ("11", "111")])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn identity_basics() {
        let id = Prm::identity();
        assert!(id.is_identity());
        assert_eq!(id.to_string(), "e -> e\n");
        assert_eq!(id.invert().to_string(), "e -> e\n");
        let g = z_generator();
        assert_eq!(Prm::identity().compose(&g).to_string(), g.to_string());
    }

    #[test]
    fn apply_examples() {
        let g = z_generator();
        assert_eq!(g.apply_to_word(&w("101")).unwrap(), w("0"));
        assert_eq!(g.apply_to_word(&w("1111")).unwrap(), w("11111"));
        assert_eq!(g.apply_to_word(&w("10")), Err(PrmError::InsufficientDepth(w("10"))));
        assert_eq!(g.invert().apply_to_word(&w("110")).unwrap(), w("0"));
    }

    #[test]
    fn image_of_shallow_cone() {
        let g = z_generator();
        assert_eq!(g.image_of_cone(&w("10")), vec![w("0"), w("10")]);
        assert_eq!(g.image_of_cone(&w("e")), vec![w("e")]);
        assert_eq!(Prm::identity().image_of_cone(&w("0110")), vec![w("0110")]);
    }

    #[test]
    fn reduce_merges_siblings() {
        let split = table(&[("0", "0"), ("1", "1")]);
        assert!(split.reduce().is_identity());
        assert_eq!(split.reduce().pairs().len(), 1);

        let expanded = table(&[("00", "1100"), ("01", "1101"), ("100", "10"), ("101", "0"), ("11", "111")]);
        assert_eq!(expanded.reduce().to_string(), z_generator().to_string());
        assert!(!expanded.is_reduced());
        assert!(expanded.equals(&z_generator()));
    }

    #[test]
    fn reduce_leaves_crossed_siblings() {
        let swap = table(&[("0", "1"), ("1", "0")]);
        assert_eq!(swap.reduce().pairs().len(), 2);
        assert_eq!(swap.element_order(5), Order::Finite(2));
    }

    #[test]
    fn z_generator_has_infinite_order() {
        let g = z_generator();
        assert_eq!(g.element_order(10), Order::Unbounded);
        for k in 1..=10 {
            assert!(!g.pow(k).is_identity(), "g^{k}");
            assert!(!g.pow(-k).is_identity(), "g^-{k}");
        }
        assert!(g.pow(3).compose(&g.pow(-3)).is_identity());
    }

    #[test]
    fn text_round_trip() {
        let text = "0 -> 110\n100 -> 10\n101 -> 0\n11 -> 111\n";
        let g: Prm = text.parse().unwrap();
        assert_eq!(g.to_string(), text);
        let shuffled: Prm = "# gz\n11 -> 111\n\n0 -> 110\n101 -> 0\n100 -> 10\n".parse().unwrap();
        assert_eq!(shuffled.to_string(), text);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("0 110".parse::<Prm>(), Err(PrmError::Parse { line: 1, .. })));
        assert!(matches!("0 -> 1\n1 -> 1".parse::<Prm>(), Err(PrmError::Range(_))));
        assert!(matches!("0 -> 0\n10 -> 1".parse::<Prm>(), Err(PrmError::Domain(_))));
        assert!(matches!("".parse::<Prm>(), Err(PrmError::Parse { .. })));
        assert!(matches!("0 -> 2".parse::<Prm>(), Err(PrmError::Parse { .. })));
    }
}
