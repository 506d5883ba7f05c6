#![no_main]

use libfuzzer_sys::fuzz_target;
use qcoord::strata::{center_lattice, CommutationSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = CommutationSpec::from_json_str(text) {
        if spec.n() <= 8 {
            // overflow must surface as an error, never a panic
            let _ = center_lattice(&spec);
        }
    }
});
