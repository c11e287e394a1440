use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn echo_upper(input: &str) -> String {
    input.to_uppercase()
}
