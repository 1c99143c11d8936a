#![no_main]

use dnaes::cipher::CipherKey;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(text) = std::str::from_utf8(data) {
        if let Ok(key) = CipherKey::from_hex(text) {
            assert!(matches!(key.bytes().len(), 16 | 24 | 32));
            // canonical hex reparses to the same key
            assert_eq!(CipherKey::from_hex(&key.to_hex()).unwrap(), key);
        }
    }
});
