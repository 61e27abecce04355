#![no_main]

use libfuzzer_sys::fuzz_target;
use vwp::{Barrier, BinaryWord};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(word) = text.parse::<BinaryWord>() {
        assert_eq!(word.to_string().parse::<BinaryWord>().unwrap(), word);
    }
    if let Ok(barrier) = text.parse::<Barrier>() {
        assert_eq!(barrier.to_string().parse::<Barrier>().unwrap(), barrier);
        assert!(vwp::cantor::kraft_measure(barrier.words()).is_one());
    }
});
