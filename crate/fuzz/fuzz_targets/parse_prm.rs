#![no_main]

use libfuzzer_sys::fuzz_target;
use vwp::Prm;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = text.parse::<Prm>() else { return };
    assert_eq!(p.to_string().parse::<Prm>().unwrap().to_string(), p.to_string());
    if p.pairs().len() <= 64 {
        assert!(p.compose(&p.invert()).is_identity());
        assert!(p.reduce().is_reduced());
    }
});
