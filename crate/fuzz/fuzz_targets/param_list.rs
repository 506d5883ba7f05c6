#![no_main]

use libfuzzer_sys::fuzz_target;
use qcoord::config::parse_param_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let _ = parse_param_list(text);
});
