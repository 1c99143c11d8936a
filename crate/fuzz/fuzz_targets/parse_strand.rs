#![no_main]

use dnaes::dna::Strand;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(strand) = text.parse::<Strand>() {
            // display normalizes case but preserves the bases
            assert_eq!(strand.to_string().parse::<Strand>().unwrap(), strand);
            assert_eq!(
                strand.reverse_complemented().reverse_complemented(),
                strand
            );
            assert_eq!(
                strand.reversed().complemented(),
                strand.complemented().reversed()
            );
        }
    }
});
