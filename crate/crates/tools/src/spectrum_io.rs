//! Spectrum export and import.
//!
//! JSON: `{"n": <n>, "p": <p>, "coeffs": [...]}`, coefficients in mask order.
//!
//! Binary (little-endian): the 8-byte magic [`MAGIC`], `n` as `u32`, `p` as
//! an IEEE double, then `2^n` IEEE doubles.

use serde::{Deserialize, Serialize};

use boolfourier::{Bias, Spectrum};

use crate::ToolError;

pub const MAGIC: [u8; 8] = *b"BFWSPEC1";
const HEADER_LEN: usize = 8 + 4 + 8;

#[derive(Debug, Serialize, Deserialize)]
struct SpectrumJson {
    n: usize,
    p: f64,
    coeffs: Vec<f64>,
}

fn bad(msg: impl Into<String>) -> ToolError {
    ToolError::Spectrum(msg.into())
}

fn check_n(n: usize) -> Result<(), ToolError> {
    let max = boolfourier::boolfn::max_vars();
    if n > max {
        return Err(boolfourier::Error::TooLarge { n, max }.into());
    }
    Ok(())
}

fn build(n: usize, p: f64, coeffs: Vec<f64>) -> Result<Spectrum, ToolError> {
    let bias = Bias::general(p).map_err(|e| bad(e.to_string()))?;
    if coeffs.len() != 1 << n {
        return Err(bad(format!(
            "expected 2^{n} = {} coefficients, got {}",
            1usize << n,
            coeffs.len()
        )));
    }
    Spectrum::new(n, bias, coeffs).map_err(|e| bad(e.to_string()))
}

pub fn to_json(spec: &Spectrum) -> Result<String, ToolError> {
    Ok(serde_json::to_string(&SpectrumJson {
        n: spec.n(),
        p: spec.p(),
        coeffs: spec.coeffs().to_vec(),
    })?)
}

pub fn from_json(text: &str) -> Result<Spectrum, ToolError> {
    let raw: SpectrumJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    check_n(raw.n)?;
    build(raw.n, raw.p, raw.coeffs)
}

pub fn to_binary(spec: &Spectrum) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + 8 * spec.coeffs().len());
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&(spec.n() as u32).to_le_bytes());
    out.extend_from_slice(&spec.p().to_le_bytes());
    for c in spec.coeffs() {
        out.extend_from_slice(&c.to_le_bytes());
    }
    out
}

pub fn from_binary(bytes: &[u8]) -> Result<Spectrum, ToolError> {
    if bytes.len() < HEADER_LEN {
        return Err(bad(format!("file shorter than the {HEADER_LEN}-byte header")));
    }
    if bytes[..8] != MAGIC {
        return Err(bad("bad magic; not a binary spectrum file"));
    }
    let n = u32::from_le_bytes(bytes[8..12].try_into().expect("4 bytes")) as usize;
    check_n(n)?;
    let p = f64::from_le_bytes(bytes[12..20].try_into().expect("8 bytes"));
    let body = &bytes[HEADER_LEN..];
    let expected = 8usize << n;
    if body.len() != expected {
        return Err(bad(format!(
            "expected 2^{n} = {} coefficients ({expected} bytes), got {} bytes",
            1usize << n,
            body.len()
        )));
    }
    let coeffs = body
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8 bytes")))
        .collect();
    build(n, p, coeffs)
}

/// Reads either format, choosing binary when the file starts with [`MAGIC`].
pub fn read_any(bytes: &[u8]) -> Result<Spectrum, ToolError> {
    if bytes.starts_with(&MAGIC) {
        from_binary(bytes)
    } else {
        let text = std::str::from_utf8(bytes).map_err(|_| bad("neither binary nor UTF-8 JSON"))?;
        from_json(text)
    }
}
