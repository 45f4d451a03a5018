#![no_main]

use goodpairs::poly::VariableId;
use goodpairs::root_core::rational::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(q) = parse_rational(data) {
        assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }
    if let Ok(v) = data.parse::<VariableId>() {
        assert_eq!(v.to_string().parse::<VariableId>().unwrap(), v);
    }
});
