#![no_main]

use goodpairs::poly::{SparsePolynomial, TermRecord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(terms) = serde_json::from_slice::<Vec<TermRecord>>(data) else { return };
    if let Ok(p) = SparsePolynomial::from_term_list(&terms) {
        assert_eq!(SparsePolynomial::from_term_list(&p.to_term_list()).unwrap(), p);
    }
});
