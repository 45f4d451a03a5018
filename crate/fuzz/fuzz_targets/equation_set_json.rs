#![no_main]

use goodpairs::varieties::EquationSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(eqs) = serde_json::from_slice::<EquationSet>(data) {
        let text = serde_json::to_string(&eqs).unwrap();
        assert_eq!(serde_json::from_str::<EquationSet>(&text).unwrap(), eqs);
    }
});
