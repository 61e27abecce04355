#![no_main]

use libfuzzer_sys::fuzz_target;
use vwp::modular::ModularPresentation;
use vwp::GroupWord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(word) = text.parse::<GroupWord>() else { return };
    assert_eq!(word.to_string().parse::<GroupWord>().unwrap(), word);
    assert_eq!(word.to_tokens().parse::<GroupWord>().unwrap(), word);
    let presentation = ModularPresentation::default();
    if let Ok(normal) = presentation.normalize(&word) {
        assert_eq!(presentation.normalize(&normal).unwrap(), normal);
        assert!(normal.len() <= word.len());
    }
});
