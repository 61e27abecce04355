//! Group words, the normal form of the modular group `C2 * C3 = ⟨a, b | a², b³⟩`,
//! and its demonstrative embedding into V.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::prm::{self, Prm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("invalid generator token {0:?}")]
    InvalidToken(String),
    #[error("invalid generator name {0:?} (expected a lowercase letter followed by [a-z0-9_])")]
    InvalidName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("letter {0} is not in the modular presentation")]
    NotInPresentation(GenSymbol),
}

pub fn is_valid_generator_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

/// A generator or its formal inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSymbol {
    name: String,
    inverted: bool,
}

impl GenSymbol {
    pub fn new(name: impl Into<String>, inverted: bool) -> Result<Self, WordError> {
        let name = name.into();
        if !is_valid_generator_name(&name) {
            return Err(WordError::InvalidName(name));
        }
        Ok(GenSymbol { name, inverted })
    }

    pub fn generator(name: impl Into<String>) -> Result<Self, WordError> {
        Self::new(name, false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_inverted(&self) -> bool {
        self.inverted
    }

    pub fn inverse(&self) -> GenSymbol {
        GenSymbol { name: self.name.clone(), inverted: !self.inverted }
    }

    /// The `name` / `name-` spelling used on the command line and in
    /// transition tables.
    pub fn token(&self) -> String {
        if self.inverted {
            format!("{}-", self.name)
        } else {
            self.name.clone()
        }
    }
}

/// Single-letter inverses print capitalized (`B`); longer names use a
/// trailing `-`.
impl fmt::Display for GenSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverted && self.name.len() == 1 {
            f.write_str(&self.name.to_ascii_uppercase())
        } else {
            f.write_str(&self.token())
        }
    }
}

/// Accepts `g`, `g-` and, for single-letter names, `G`.
impl FromStr for GenSymbol {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(base) = s.strip_suffix('-') {
            return GenSymbol::new(base, true).map_err(|_| WordError::InvalidToken(s.into()));
        }
        let mut chars = s.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if c.is_ascii_uppercase() {
                return GenSymbol::new(c.to_ascii_lowercase().to_string(), true);
            }
        }
        GenSymbol::new(s, false).map_err(|_| WordError::InvalidToken(s.into()))
    }
}

/// A finite word over generator symbols. Not necessarily reduced.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord(Vec<GenSymbol>);

impl GroupWord {
    pub fn empty() -> Self {
        GroupWord(Vec::new())
    }

    pub fn new(letters: Vec<GenSymbol>) -> Self {
        GroupWord(letters)
    }

    pub fn letters(&self) -> &[GenSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<&GenSymbol> {
        self.0.last()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(GenSymbol::inverse).collect())
    }

    /// Words spelled with `name` / `name-` tokens, space separated.
    pub fn to_tokens(&self) -> String {
        self.0.iter().map(GenSymbol::token).collect::<Vec<_>>().join(" ")
    }
}

impl FromIterator<GenSymbol> for GroupWord {
    fn from_iter<T: IntoIterator<Item = GenSymbol>>(iter: T) -> Self {
        GroupWord(iter.into_iter().collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, letter) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(GroupWord::empty());
        }
        s.split_whitespace().map(str::parse).collect()
    }
}

/// Assignment of generator names to elements of V.
#[derive(Debug, Clone, Default)]
pub struct GeneratorMap {
    assignments: BTreeMap<String, Prm>,
    inverses: BTreeMap<String, Prm>,
}

impl GeneratorMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: &str, element: Prm) -> Result<(), WordError> {
        if !is_valid_generator_name(name) {
            return Err(WordError::InvalidName(name.into()));
        }
        let element = element.reduce();
        self.inverses.insert(name.into(), element.invert());
        self.assignments.insert(name.into(), element);
        Ok(())
    }

    pub fn with(mut self, name: &str, element: Prm) -> Result<Self, WordError> {
        self.insert(name, element)?;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.assignments.keys().map(String::as_str)
    }

    pub fn get(&self, name: &str) -> Option<&Prm> {
        self.assignments.get(name)
    }

    /// The reduced element a symbol stands for.
    pub fn element(&self, symbol: &GenSymbol) -> Result<&Prm, WordError> {
        let table = if symbol.inverted { &self.inverses } else { &self.assignments };
        table.get(symbol.name()).ok_or_else(|| WordError::UnknownGenerator(symbol.name().into()))
    }

    /// Input alphabet for word-problem automata: generators in name order,
    /// then inverses in name order. Involutions contribute no inverse token
    /// since the symbol already denotes its own inverse.
    pub fn input_alphabet(&self) -> Vec<GenSymbol> {
        let generators = self.assignments.keys().map(|n| GenSymbol { name: n.clone(), inverted: false });
        let inverses = self
            .assignments
            .iter()
            .filter(|(_, p)| !p.compose(p).is_identity())
            .map(|(n, _)| GenSymbol { name: n.clone(), inverted: true });
        generators.chain(inverses).collect()
    }

    /// Left-to-right product of the letters' elements, reduced.
    pub fn evaluate(&self, word: &GroupWord) -> Result<Prm, WordError> {
        word.letters().iter().try_fold(Prm::identity(), |acc, letter| Ok(acc.compose(self.element(letter)?)))
    }
}

/// Which generator names play the roles of the order-two and order-three
/// generators of `C2 * C3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularPresentation {
    involution: String,
    order_three: String,
}

impl Default for ModularPresentation {
    fn default() -> Self {
        ModularPresentation { involution: "a".into(), order_three: "b".into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Syllable {
    A,
    B,
    BInv,
}

impl ModularPresentation {
    pub fn new(involution: &str, order_three: &str) -> Result<Self, WordError> {
        for name in [involution, order_three] {
            if !is_valid_generator_name(name) {
                return Err(WordError::InvalidName(name.into()));
            }
        }
        Ok(ModularPresentation { involution: involution.into(), order_three: order_three.into() })
    }

    fn classify(&self, letter: &GenSymbol) -> Result<Syllable, WordError> {
        match (letter.name(), letter.is_inverted()) {
            (n, _) if n == self.involution => Ok(Syllable::A),
            (n, false) if n == self.order_three => Ok(Syllable::B),
            (n, true) if n == self.order_three => Ok(Syllable::BInv),
            _ => Err(WordError::NotInPresentation(letter.clone())),
        }
    }

    fn symbol(&self, s: Syllable) -> GenSymbol {
        match s {
            Syllable::A => GenSymbol { name: self.involution.clone(), inverted: false },
            Syllable::B => GenSymbol { name: self.order_three.clone(), inverted: false },
            Syllable::BInv => GenSymbol { name: self.order_three.clone(), inverted: true },
        }
    }

    /// Rewrites with `a⁻¹ → a`, `aa → ε`, `bb⁻¹ → ε`, `b⁻¹b → ε`,
    /// `bb → b⁻¹`, `b⁻¹b⁻¹ → b` to the unique alternating normal form.
    ///
    /// Letters are pushed onto a stack that is always in normal form, so
    /// each rewrite happens at the leftmost redex.
    pub fn normalize(&self, word: &GroupWord) -> Result<GroupWord, WordError> {
        let mut stack: Vec<Syllable> = Vec::with_capacity(word.len());
        for letter in word.letters() {
            let mut incoming = Some(self.classify(letter)?);
            while let Some(next) = incoming.take() {
                match stack.last().copied() {
                    Some(top) => match rewrite(top, next) {
                        Rewrite::Keep => stack.push(next),
                        Rewrite::Cancel => {
                            stack.pop();
                        }
                        Rewrite::Replace(s) => {
                            stack.pop();
                            incoming = Some(s);
                        }
                    },
                    None => stack.push(next),
                }
            }
        }
        Ok(stack.into_iter().map(|s| self.symbol(s)).collect())
    }

    /// Geodesic length: number of letters in the normal form.
    pub fn len(&self, word: &GroupWord) -> Result<usize, WordError> {
        Ok(self.normalize(word)?.len())
    }

    pub fn is_normal(&self, word: &GroupWord) -> Result<bool, WordError> {
        Ok(self.normalize(word)? == *word)
    }

    /// Every normal form of length `1..=max_len`, by length, then with
    /// `a < b < b⁻¹` letter by letter.
    pub fn enumerate_normal_forms(&self, max_len: usize) -> Vec<GroupWord> {
        let mut out = Vec::new();
        let mut layer: Vec<Vec<Syllable>> =
            if max_len == 0 { Vec::new() } else { vec![vec![Syllable::A], vec![Syllable::B], vec![Syllable::BInv]] };
        for _ in 1..=max_len {
            out.extend(layer.iter().map(|w| w.iter().map(|&s| self.symbol(s)).collect()));
            layer = layer
                .iter()
                .flat_map(|w| {
                    let next: &[Syllable] = match w.last() {
                        Some(Syllable::A) => &[Syllable::B, Syllable::BInv],
                        _ => &[Syllable::A],
                    };
                    next.iter().map(move |&s| {
                        let mut ext = w.clone();
                        ext.push(s);
                        ext
                    })
                })
                .collect();
        }
        out
    }

    /// `[x, y] = x⁻¹ y⁻¹ x y`, normalized.
    pub fn commutator(&self, x: &GroupWord, y: &GroupWord) -> Result<GroupWord, WordError> {
        self.normalize(&x.inverse().concat(&y.inverse()).concat(x).concat(y))
    }

    /// The free basis `[a, b]`, `[a, b⁻¹]` of a rank-two free subgroup.
    pub fn f2_generators(&self) -> (GroupWord, GroupWord) {
        let a = GroupWord(vec![self.symbol(Syllable::A)]);
        let b = GroupWord(vec![self.symbol(Syllable::B)]);
        let b_inv = GroupWord(vec![self.symbol(Syllable::BInv)]);
        (
            self.commutator(&a, &b).expect("letters of the presentation"),
            self.commutator(&a, &b_inv).expect("letters of the presentation"),
        )
    }
}

enum Rewrite {
    Keep,
    Cancel,
    Replace(Syllable),
}

fn rewrite(top: Syllable, next: Syllable) -> Rewrite {
    use Syllable::*;
    match (top, next) {
        (A, A) | (B, BInv) | (BInv, B) => Rewrite::Cancel,
        (B, B) => Rewrite::Replace(BInv),
        (BInv, BInv) => Rewrite::Replace(B),
        _ => Rewrite::Keep,
    }
}

/// Number of normal forms of length `k ≥ 1`: `2^⌊k/2⌋ + 2^⌈k/2⌉`.
pub fn normal_form_count(k: u32) -> u64 {
    (1u64 << (k / 2)) + (1u64 << k.div_ceil(2))
}

/// The involution `a`: `0 ↔ 11111`, `10 ↔ 11110`, `110 ↔ 1110`.
pub fn element_a() -> Prm {
    prm::table(&[("0", "11111"), ("10", "11110"), ("110", "1110"), ("1110", "110"), ("11110", "10"), ("11111", "0")])
}

/// The order-three element `b`, cycling `0 → 1010 → 110 → 0` and
/// `100 → 1011 → 111 → 100`.
///
/// This is the symmetric six-leaf tree pair; its reduced table merges
/// `1010 ↦ 110`, `1011 ↦ 111` into `101 ↦ 11`.
pub fn element_b() -> Prm {
    prm::table(&[("0", "1010"), ("100", "1011"), ("1010", "110"), ("1011", "111"), ("110", "0"), ("111", "100")])
}

/// `a ↦ element_a()`, `b ↦ element_b()`.
pub fn psi_map() -> GeneratorMap {
    GeneratorMap::new().with("a", element_a()).and_then(|m| m.with("b", element_b())).expect("valid names")
}

/// `g ↦ z_generator()`.
pub fn z_map() -> GeneratorMap {
    GeneratorMap::new().with("g", prm::z_generator()).expect("valid name")
}
