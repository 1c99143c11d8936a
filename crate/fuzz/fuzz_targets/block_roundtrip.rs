#![no_main]

use dnaes::cipher::{Cipher, CipherConfig, CipherKey, Strategy};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() < 35 {
        return;
    }
    let (key_bytes, rest) = data.split_at(16);
    let (block_bytes, controls) = rest.split_at(16);
    let key = CipherKey::new(key_bytes).expect("16-byte key");
    let block: [u8; 16] = block_bytes.try_into().expect("16-byte block");

    let strategy = if controls[0] & 1 == 0 {
        Strategy::Original
    } else {
        Strategy::KeyDependentDna
    };
    let config = CipherConfig {
        strategy,
        rounds: Some((controls[1] % 10) as usize + 1),
        case1_identity: controls[2] & 1 == 1,
    };

    let cipher = Cipher::new(&key, &config).expect("rounds in range by construction");
    assert_eq!(cipher.decrypt_block(cipher.encrypt_block(block)), block);
});
