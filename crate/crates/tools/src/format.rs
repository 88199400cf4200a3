//! Truth-table text format.
//!
//! ```text
//! n=3
//! 00010111
//! ```
//!
//! The second line holds `2^n` characters `0`/`1` in mask order. It may
//! instead be `hex:` followed by the packed form: the hexadecimal digits
//! (most significant first) of the integer whose bit `x` is the output at
//! mask `x`, zero-padded to `max(1, 2^n / 4)` digits. Writers always emit
//! the character form.

use std::fmt::Write as _;

use boolfourier::TruthTable;

use crate::ToolError;

fn bad(msg: impl Into<String>) -> ToolError {
    ToolError::TruthTable(msg.into())
}

/// Number of hex digits in the packed form.
pub fn hex_digits(n: usize) -> usize {
    ((1usize << n) / 4).max(1)
}

pub fn to_hex(t: &TruthTable) -> String {
    let digits = hex_digits(t.n());
    let mut out = String::with_capacity(digits);
    for d in (0..digits).rev() {
        let nibble = (0..4)
            .filter(|b| {
                let x = d * 4 + b;
                x < t.len() && t.bit(x)
            })
            .fold(0u32, |acc, b| acc | 1 << b);
        out.push(char::from_digit(nibble, 16).expect("nibble"));
    }
    out
}

pub fn from_hex(n: usize, hex: &str) -> Result<TruthTable, ToolError> {
    let hex = hex.trim();
    let digits = hex_digits(n);
    if hex.len() != digits {
        return Err(bad(format!(
            "hex form for n={n} needs {digits} digits (2^{n} = {} entries), got {}",
            1usize << n,
            hex.len()
        )));
    }
    let nibbles: Vec<u32> = hex
        .chars()
        .rev()
        .map(|c| c.to_digit(16).ok_or_else(|| bad(format!("invalid hex digit {c:?}"))))
        .collect::<Result<_, _>>()?;
    let len = 1usize << n;
    if len < 4 && nibbles[0] >> len != 0 {
        return Err(bad(format!("hex value {hex} has bits beyond 2^{n} = {len} entries")));
    }
    Ok(TruthTable::from_fn(n, |x| nibbles[x / 4] >> (x % 4) & 1 == 1)?)
}

pub fn parse_bits(n: usize, line: &str) -> Result<TruthTable, ToolError> {
    let line = line.trim();
    let expected = 1usize.checked_shl(n as u32).unwrap_or(usize::MAX);
    if line.len() != expected {
        return Err(bad(format!(
            "expected 2^{n} = {expected} entries, got {}",
            line.len()
        )));
    }
    let bits = line
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(bad(format!("unexpected character {other:?}; use 0/1"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TruthTable::from_bits(n, &bits)?)
}

pub fn parse_truth_table(text: &str) -> Result<TruthTable, ToolError> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| bad("empty input"))?;
    let n: usize = header
        .strip_prefix("n=")
        .ok_or_else(|| bad(format!("first line must be n=<count>, got {header:?}")))?
        .trim()
        .parse()
        .map_err(|_| bad(format!("invalid variable count in {header:?}")))?;
    if n == 0 {
        return Err(bad("n must be at least 1"));
    }
    boolfourier::boolfn::max_vars()
        .checked_sub(n)
        .ok_or(boolfourier::Error::TooLarge {
            n,
            max: boolfourier::boolfn::max_vars(),
        })?;
    let body = lines.next().ok_or_else(|| {
        bad(format!("missing table line; expected 2^{n} = {} entries", 1usize << n))
    })?;
    if lines.next().is_some() {
        return Err(bad("unexpected content after the table line"));
    }
    match body.strip_prefix("hex:") {
        Some(hex) => from_hex(n, hex),
        None => parse_bits(n, body),
    }
}

pub fn write_truth_table(t: &TruthTable) -> String {
    let mut out = String::with_capacity(t.len() + 16);
    writeln!(out, "n={}", t.n()).expect("write to string");
    out.extend(t.bits().map(|b| if b { '1' } else { '0' }));
    out.push('\n');
    out
}
