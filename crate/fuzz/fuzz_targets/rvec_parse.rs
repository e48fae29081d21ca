//! Fuzzes the net-label text parser used by the `wigner` subcommand. The
//! first input byte selects the dimension; the rest is the candidate text.

#![no_main]

use libfuzzer_sys::fuzz_target;
use ppo_core::coords::RVector;
use ppo_core::field::Field;

const PRIMES: [u64; 7] = [3, 5, 7, 11, 13, 17, 19];

fuzz_target!(|input: (u8, &str)| {
    let (selector, text) = input;
    let field = Field::new(PRIMES[selector as usize % PRIMES.len()]).unwrap();
    if let Ok(rvec) = RVector::parse(field, text) {
        assert_eq!(rvec.len() as u64, field.modulus() + 1);
        assert!(rvec.values().iter().all(|&v| v < field.modulus()));
        // display form parses back to the same label
        let shown = rvec.to_string();
        let inner = &shown[1..shown.len() - 1];
        assert_eq!(RVector::parse(field, inner).unwrap(), rvec);
    }
});
