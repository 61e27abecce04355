mod common;

use common::{apply_letters, bw, random_prm, words_of_len};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use vwp::cantor::{self, BinaryWord};
use vwp::prm::{self, table};
use vwp::Prm;

fn triple(seed: u64) -> (Prm, Prm, Prm) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (random_prm(&mut rng, 6), random_prm(&mut rng, 6), random_prm(&mut rng, 6))
}

/// Depth at which every word lies under a single domain leaf of each map in
/// turn, for the given chain.
fn deep_enough(chain: &[&Prm]) -> usize {
    chain.iter().map(|p| p.pairs().iter().map(|(d, r)| d.len().max(r.len())).max().unwrap()).sum::<usize>() + 1
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_agrees_with_pointwise_application(seed in any::<u64>()) {
        let (p, q, _) = triple(seed);
        let pq = p.compose(&q);
        for w in words_of_len(deep_enough(&[&p, &q]).min(10)) {
            if let Some(expected) = apply_letters(&[&p, &q], &w) {
                prop_assert_eq!(pq.apply_to_word(&w).unwrap(), expected);
            }
        }
    }

    #[test]
    fn compose_is_associative(seed in any::<u64>()) {
        let (p, q, r) = triple(seed);
        prop_assert!(p.compose(&q).compose(&r).equals(&p.compose(&q.compose(&r))));
    }

    #[test]
    fn inverse_laws(seed in any::<u64>()) {
        let (p, _, _) = triple(seed);
        prop_assert!(p.invert().invert().equals(&p));
        prop_assert!(p.compose(&p.invert()).is_identity());
        prop_assert!(p.invert().compose(&p).is_identity());
    }

    #[test]
    fn reduce_is_idempotent_and_preserves_the_map(seed in any::<u64>()) {
        let (p, _, _) = triple(seed);
        let r = p.reduce();
        let again = r.reduce();
        prop_assert_eq!(again.pairs(), r.pairs());
        prop_assert!(r.equals(&p));
        prop_assert!(r.pairs().len() <= p.pairs().len());
        for w in words_of_len(deep_enough(&[&p]).min(10)) {
            if let Ok(image) = p.apply_to_word(&w) {
                prop_assert_eq!(r.apply_to_word(&w).unwrap(), image);
            }
        }
    }

    #[test]
    fn cone_images_partition_cantor_space(seed in any::<u64>(), depth in 0usize..5) {
        let (p, _, _) = triple(seed);
        let mut all = Vec::new();
        for w in words_of_len(depth) {
            let labels = p.image_of_cone(&w);
            for (i, u) in labels.iter().enumerate() {
                for v in &labels[i + 1..] {
                    prop_assert!(cantor::cones_disjoint(u, v));
                }
            }
            all.extend(labels);
        }
        prop_assert!(cantor::is_barrier(&all));
    }

    #[test]
    fn text_round_trip(seed in any::<u64>()) {
        let (p, _, _) = triple(seed);
        let parsed: Prm = p.to_string().parse().unwrap();
        prop_assert_eq!(parsed.pairs(), p.pairs());
    }
}

#[test]
fn hundred_random_triples_associate() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let (p, q, r) = (random_prm(&mut rng, 5), random_prm(&mut rng, 5), random_prm(&mut rng, 5));
        assert!(p.compose(&q).compose(&r).equals(&p.compose(&q.compose(&r))));
    }
}

#[test]
fn image_of_shallow_cone_under_a() {
    let a = vwp::modular::element_a();
    let image = a.image_of_cone(&bw("1"));
    assert_eq!(image, ["0", "10", "110", "1110", "11110"].map(bw));
    // [1] is the complement of [0], so its image is the complement of [11111]
    let complement = a.image_of_cone(&bw("0"));
    assert_eq!(complement, vec![bw("11111")]);
    let measure = &cantor::kraft_measure(&image) + &cantor::kraft_measure(&complement);
    assert!(measure.is_one());
    let mut both = image.clone();
    both.extend(complement);
    assert!(cantor::is_barrier(&both));
}

#[test]
fn expanding_a_leaf_then_reducing_recovers_gz() {
    let gz = prm::z_generator();
    // 0 ↦ 110 split into 00 ↦ 1100 and 01 ↦ 1101
    let mut pairs: Vec<(BinaryWord, BinaryWord)> = gz.pairs().iter().filter(|(d, _)| *d != bw("0")).cloned().collect();
    pairs.push((bw("00"), bw("1100")));
    pairs.push((bw("01"), bw("1101")));
    let expanded = Prm::new(pairs).unwrap();
    assert_eq!(expanded.reduce().to_string(), gz.to_string());
}

#[test]
fn z_generator_orders_by_direct_powers() {
    let gz = prm::z_generator();
    let mut power = Prm::identity();
    for k in 1..=10 {
        power = power.compose(&gz);
        assert!(!power.is_identity(), "g^{k}");
    }
    assert_eq!(gz.element_order(10), prm::Order::Unbounded);
}

#[test]
fn equality_is_by_map_not_table() {
    let split = table(&[("00", "00"), ("01", "01"), ("1", "1")]);
    assert_eq!(split, Prm::identity());
    let a = vwp::modular::element_a();
    let b = vwp::modular::element_b();
    assert!(a.equals(&a.invert()));
    assert!(!b.equals(&b.invert()));
}
