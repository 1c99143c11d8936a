#![no_main]

use dnaes::cipher::{ecb_process, CipherConfig, CipherKey, Direction, Strategy};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() < 17 {
        return;
    }
    let (key_bytes, payload) = data.split_at(16);
    let key = CipherKey::new(key_bytes).expect("16-byte key");
    let config = CipherConfig::new(Strategy::KeyDependentDna);

    match ecb_process(payload, &key, &config, Direction::Encrypt) {
        Ok(ciphertext) => {
            // only exact positive multiples of the block size encrypt
            assert!(!payload.is_empty() && payload.len() % 16 == 0);
            assert_eq!(ciphertext.len(), payload.len());
            let recovered =
                ecb_process(&ciphertext, &key, &config, Direction::Decrypt).unwrap();
            assert_eq!(recovered, payload);
        }
        Err(_) => assert!(payload.is_empty() || payload.len() % 16 != 0),
    }
});
