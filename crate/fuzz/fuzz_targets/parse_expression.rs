#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use qcoord::expr::{parse_expression, EvalContext};
use qcoord::pbw::quantum_matrices;
use qcoord::scalar::ParamSpace;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(ast) = parse_expression(text) else { return };
    // the printer's output must parse back to the same tree
    let printed = ast.to_string();
    let again = parse_expression(&printed).expect("printed expression parses");
    assert_eq!(ast, again, "{printed}");
    if text.len() < 64 {
        let space = Arc::new(ParamSpace::single_q());
        let alg = quantum_matrices(&space, 2, &space.param("q").unwrap()).unwrap();
        let _ = EvalContext::matrices(&alg, 2).eval(&ast);
    }
});
