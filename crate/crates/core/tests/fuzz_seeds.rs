//! Replays the checked-in fuzz corpus through the parsers with the same
//! assertions as the fuzz targets.

use std::fs;
use std::path::PathBuf;

use vwp::modular::ModularPresentation;
use vwp::pda::{parse_table, serialize_table};
use vwp::{Barrier, BinaryWord, GroupWord, Prm};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<(String, String)> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|entry| {
            let path = entry.unwrap().path();
            (path.display().to_string(), fs::read_to_string(&path).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn barrier_seeds() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_barrier") {
        if let Ok(word) = text.parse::<BinaryWord>() {
            assert_eq!(word.to_string().parse::<BinaryWord>().unwrap(), word, "{name}");
        }
        if let Ok(barrier) = text.parse::<Barrier>() {
            assert_eq!(barrier.to_string().parse::<Barrier>().unwrap(), barrier, "{name}");
            assert!(vwp::cantor::kraft_measure(barrier.words()).is_one(), "{name}");
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn prm_seeds() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_prm") {
        let Ok(p) = text.parse::<Prm>() else { continue };
        assert_eq!(p.to_string().parse::<Prm>().unwrap().to_string(), p.to_string(), "{name}");
        assert!(p.compose(&p.invert()).is_identity(), "{name}");
        assert!(p.reduce().is_reduced(), "{name}");
        parsed += 1;
    }
    assert!(parsed >= 4);
}

#[test]
fn group_word_seeds() {
    let presentation = ModularPresentation::default();
    for (name, text) in seeds("parse_group_word") {
        let word: GroupWord = text.parse().unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(word.to_string().parse::<GroupWord>().unwrap(), word, "{name}");
        assert_eq!(word.to_tokens().parse::<GroupWord>().unwrap(), word, "{name}");
        if let Ok(normal) = presentation.normalize(&word) {
            assert_eq!(presentation.normalize(&normal).unwrap(), normal, "{name}");
        }
    }
}

#[test]
fn pda_table_seeds() {
    let mut parsed = 0;
    for (name, text) in seeds("parse_pda_table") {
        let Ok(pda) = parse_table(&text) else { continue };
        let again = serialize_table(&pda);
        assert_eq!(serialize_table(&parse_table(&again).unwrap()), again, "{name}");
        assert!(pda.run(&[]).unwrap().accepted, "{name}");
        parsed += 1;
    }
    assert!(parsed >= 2);
}
