#![no_main]

use goodpairs::weyl::Perm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<Perm>() {
        assert_eq!(w.to_string().parse::<Perm>().unwrap(), w);
        assert_eq!(w.compose(&w.inverse()), Perm::identity(w.n()));
    }
});
