#![no_main]

use libfuzzer_sys::fuzz_target;
use qcoord::pbw::Presentation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(alg) = Presentation::from_json_str(text) {
        let back = Presentation::from_json_str(&alg.to_json().to_string()).expect("export re-imports");
        assert_eq!(alg.generators(), back.generators());
    }
});
