#![no_main]

use dnaes::bits::BitSequence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(seq) = text.parse::<BitSequence>() {
            assert_eq!(seq.to_string().parse::<BitSequence>().unwrap(), seq);
            assert_eq!(seq.complemented().complemented(), seq);
            assert_eq!(seq.ones() + seq.complemented().ones(), seq.len());
        }
    }
});
