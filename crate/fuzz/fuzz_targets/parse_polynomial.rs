#![no_main]

use goodpairs::poly::parse_polynomial;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(p) = parse_polynomial(data) {
        assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }
});
