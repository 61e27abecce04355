#![no_main]

use libfuzzer_sys::fuzz_target;
use vwp::pda::{parse_table, serialize_table};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(pda) = parse_table(text) else { return };
    let text = serialize_table(&pda);
    assert_eq!(serialize_table(&parse_table(&text).unwrap()), text);
    if pda.transitions().len() <= 64 {
        for token in pda.input_alphabet().iter().take(4) {
            let _ = pda.run(&[token.clone(), token.clone(), token.inverse()]);
        }
        let _ = pda.run(&[]);
    }
});
