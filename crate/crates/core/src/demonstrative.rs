//! Bounded checks of the demonstrative property and of the ping-pong
//! conditions.
//!
//! A node `n` demonstrates a subgroup `G ≤ V` when `[n] ∩ [n]g = ∅` for every
//! non-trivial `g`. That is a statement about infinitely many elements; the
//! checks here cover exactly the words they are given and say so in the
//! report.

use std::fmt;

use rayon::prelude::*;

use crate::cantor::{BinaryWord, PrefixRelation};
use crate::modular::{GenSymbol, GeneratorMap, GroupWord, WordError};
use crate::prm::Prm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub word: GroupWord,
    /// An image label comparable to the node.
    pub witness: BinaryWord,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemonstrationReport {
    pub node: BinaryWord,
    pub max_len: usize,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl DemonstrationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for DemonstrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "node={} max_len={} checked={}", self.node, self.max_len, self.checked)?;
        for v in &self.violations {
            writeln!(f, "{}\t{}", v.word, v.witness)?;
        }
        Ok(())
    }
}

/// Checks `[node] ∩ [node]g = ∅` for each word, which the caller asserts is
/// non-trivial. Violations are sorted by word length, then word.
pub fn check_demonstration_node(
    generators: &GeneratorMap,
    node: &BinaryWord,
    words: &[GroupWord],
) -> Result<DemonstrationReport, WordError> {
    let outcomes: Vec<Option<Violation>> = words
        .par_iter()
        .map(|word| {
            let element = generators.evaluate(word)?;
            let witness = element
                .image_of_cone(node)
                .into_iter()
                .find(|label| label.relation(node) != PrefixRelation::Incomparable);
            Ok(witness.map(|witness| Violation { word: word.clone(), witness }))
        })
        .collect::<Result<_, WordError>>()?;

    let mut violations: Vec<Violation> = outcomes.into_iter().flatten().collect();
    violations.sort_by(|x, y| (x.word.len(), &x.word).cmp(&(y.word.len(), &y.word)));
    Ok(DemonstrationReport {
        node: node.clone(),
        max_len: words.iter().map(GroupWord::len).max().unwrap_or(0),
        checked: words.len(),
        violations,
    })
}

/// All freely reduced words of length `1..=max_len` over the generators
/// and their inverses, by length and then symbol order.
pub fn freely_reduced_words(generators: &GeneratorMap, max_len: usize) -> Vec<GroupWord> {
    let symbols: Vec<GenSymbol> = generators
        .names()
        .flat_map(|n| {
            let g = GenSymbol::generator(n).expect("names in a map are valid");
            [g.clone(), g.inverse()]
        })
        .collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<GenSymbol>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                symbols.iter().filter(move |s| w.last() != Some(&s.inverse())).map(move |s| {
                    let mut ext = w.clone();
                    ext.push(s.clone());
                    ext
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(GroupWord::new));
    }
    out
}

/// Which ping-pong conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PingPongOutcome {
    /// `[x2] ⊄ [x1]`.
    pub x2_not_in_x1: bool,
    /// Every listed element of `H1` maps `[x2]` into `[x1]`.
    pub h1_maps_x2_into_x1: bool,
    /// Every listed element of `H2` maps `[x1]` into `[x2]`.
    pub h2_maps_x1_into_x2: bool,
}

impl PingPongOutcome {
    pub fn passed(&self) -> bool {
        self.x2_not_in_x1 && self.h1_maps_x2_into_x1 && self.h2_maps_x1_into_x2
    }

    /// Index (1, 2 or 3) of the first failing condition.
    pub fn first_failure(&self) -> Option<u8> {
        [self.x2_not_in_x1, self.h1_maps_x2_into_x1, self.h2_maps_x1_into_x2]
            .iter()
            .position(|ok| !ok)
            .map(|i| i as u8 + 1)
    }
}

fn maps_into(elements: &[Prm], source: &BinaryWord, target: &BinaryWord) -> bool {
    elements.iter().all(|p| p.image_of_cone(source).iter().all(|label| target.is_prefix_of(label)))
}

/// Ping-pong conditions for the cones `[x1]`, `[x2]`. `h1` and `h2` list
/// the non-trivial elements of the two finite subgroups.
pub fn ping_pong_check(h1: &[Prm], h2: &[Prm], x1: &BinaryWord, x2: &BinaryWord) -> PingPongOutcome {
    PingPongOutcome {
        x2_not_in_x1: !x1.is_prefix_of(x2),
        h1_maps_x2_into_x1: maps_into(h1, x2, x1),
        h2_maps_x1_into_x2: maps_into(h2, x1, x2),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::{element_a, element_b, psi_map, z_map, ModularPresentation};
    use crate::prm::Prm;

    fn bw(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn psi_demonstrated_by_zero() {
        let words = ModularPresentation::default().enumerate_normal_forms(5);
        let report = check_demonstration_node(&psi_map(), &bw("0"), &words).unwrap();
        assert!(report.holds());
        assert_eq!(report.checked, words.len());
        assert_eq!(report.max_len, 5);
    }

    #[test]
    fn z_demonstrated_by_zero() {
        let words: Vec<GroupWord> = (1..=8).map(|k| vec!["g"; k].join(" ").parse().unwrap()).collect();
        let report = check_demonstration_node(&z_map(), &bw("0"), &words).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn identity_generator_is_caught() {
        let gm = GeneratorMap::new().with("g", Prm::identity()).unwrap();
        let report = check_demonstration_node(&gm, &bw("0"), &["g".parse().unwrap()]).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].witness, bw("0"));
        assert_eq!(report.to_string(), "node=0 max_len=1 checked=1\ng\t0\n");
    }

    #[test]
    fn violations_are_sorted() {
        let gm = GeneratorMap::new().with("g", Prm::identity()).unwrap();
        let words: Vec<GroupWord> = ["g g g", "g", "G g", "g g"].iter().map(|s| s.parse().unwrap()).collect();
        let report = check_demonstration_node(&gm, &bw("0"), &words).unwrap();
        let order: Vec<String> = report.violations.iter().map(|v| v.word.to_string()).collect();
        assert_eq!(order, ["g", "g g", "G g", "g g g"]);
    }

    #[test]
    fn unknown_generator_propagates() {
        let err = check_demonstration_node(&z_map(), &bw("0"), &["h".parse().unwrap()]).unwrap_err();
        assert_eq!(err, WordError::UnknownGenerator("h".into()));
    }

    #[test]
    fn free_words_over_z() {
        let words: Vec<String> = freely_reduced_words(&z_map(), 2).iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["g", "G", "g g", "G G"]);
        assert_eq!(freely_reduced_words(&psi_map(), 3).len(), 4 + 12 + 36);
    }

    #[test]
    fn ping_pong_examples() {
        let (a, b) = (element_a(), element_b());
        let h1 = [b.clone(), b.invert()];
        let h2 = [a.clone()];
        let ok = ping_pong_check(&h1, &h2, &bw("10"), &bw("111"));
        assert!(ok.passed());

        let same = ping_pong_check(&h1, &h2, &bw("10"), &bw("10"));
        assert!(!same.passed());
        assert_eq!(same.first_failure(), Some(1));

        let swapped = ping_pong_check(&h2, &h1, &bw("10"), &bw("111"));
        assert!(!swapped.passed());
        assert!(!swapped.h1_maps_x2_into_x1);
        assert_eq!(swapped.first_failure(), Some(2));
    }
}
