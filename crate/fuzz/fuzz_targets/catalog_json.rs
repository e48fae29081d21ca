//! Fuzzes the catalog JSON reader: parsing and validation of untrusted
//! documents must never panic, and every document that validates must
//! survive a byte-stable serialization round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use ppo_core::catalog::CatalogFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = CatalogFile::from_json(text) else {
        return;
    };
    if file.validate().is_ok() {
        let json = file.to_json();
        let back = CatalogFile::from_json(&json).expect("round trip parses");
        assert_eq!(back, file);
        assert_eq!(back.to_json(), json);
    }
});
