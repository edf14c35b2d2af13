//! wasm-bindgen exports for the static demo page in `www/`.

use wasm_bindgen::prelude::*;

pub mod demo;

fn js<T>(result: demo::DemoResult<T>) -> Result<T, JsError> {
    result.map_err(|e| JsError::new(&e.to_string()))
}

#[wasm_bindgen(js_name = sampleCover)]
pub fn sample_cover(width: usize, height: usize, seed: u32) -> Vec<u8> {
    demo::sample_cover(width, height, u64::from(seed))
}

#[wasm_bindgen(js_name = planeView)]
pub fn plane_view(pgm: &[u8], low: f64, high: f64, plane: u8) -> Result<Vec<u8>, JsError> {
    js(demo::plane_view(pgm, low, high, plane))
}

#[wasm_bindgen(js_name = partitionSummary)]
pub fn partition_summary(pgm: &[u8], low: f64, high: f64) -> Result<String, JsError> {
    js(demo::partition_summary(pgm, low, high))
}

#[wasm_bindgen]
pub struct EmbedView(demo::EmbedOutcome);

#[wasm_bindgen]
impl EmbedView {
    #[wasm_bindgen(getter, js_name = stegoPgm)]
    pub fn stego_pgm(&self) -> Vec<u8> {
        self.0.stego_pgm.clone()
    }

    #[wasm_bindgen(getter, js_name = lscBefore)]
    pub fn lsc_before(&self) -> Vec<u8> {
        self.0.lsc_before.clone()
    }

    #[wasm_bindgen(getter, js_name = lscAfter)]
    pub fn lsc_after(&self) -> Vec<u8> {
        self.0.lsc_after.clone()
    }

    #[wasm_bindgen(getter, js_name = likelihoodBefore)]
    pub fn likelihood_before(&self) -> f64 {
        self.0.likelihood_before
    }

    #[wasm_bindgen(getter, js_name = likelihoodAfter)]
    pub fn likelihood_after(&self) -> f64 {
        self.0.likelihood_after
    }

    #[wasm_bindgen(getter, js_name = capacityBits)]
    pub fn capacity_bits(&self) -> usize {
        self.0.capacity_bits
    }
}

#[wasm_bindgen(js_name = embedText)]
pub fn embed_text(
    pgm: &[u8],
    message: &str,
    key_hex: &str,
    low: f64,
    high: f64,
    prerandomize: bool,
) -> Result<EmbedView, JsError> {
    js(demo::embed_text(
        pgm,
        message,
        key_hex,
        low,
        high,
        prerandomize,
    ))
    .map(EmbedView)
}

#[wasm_bindgen(js_name = securityTable)]
pub fn security_table(
    embedder: &str,
    n: usize,
    p: usize,
    strategies: usize,
) -> Result<String, JsError> {
    js(demo::security_table_json(embedder, n, p, strategies))
}
