use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("expected 2^{n} = {expected} entries, got {found}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("{n} variables exceeds the memory cap of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("variable count must be at least 1")]
    NoVariables,
    #[error("coordinate {i} out of range 1..={n}")]
    CoordinateOutOfRange { i: usize, n: usize },
    #[error("mask {mask:#x} out of range for {n} variables")]
    MaskOutOfRange { mask: usize, n: usize },
    #[error("bias {0} outside the open interval (0, 1)")]
    InvalidBias(f64),
    #[error("exact bias needs 1 <= t < 2^m, got t={t}, m={m}")]
    InvalidExactBias { t: u64, m: u32 },
    #[error("bias {0} is not dyadic; approximate it as t/2^m and pass the exact form")]
    NonDyadicBias(f64),
    #[error("reduction requires p <= 1/2, got {0}")]
    BiasAboveHalf(f64),
    #[error("table entry at mask {mask:#x} is not finite")]
    NonFinite { mask: usize },
    #[error("table entry at mask {mask:#x} is not an integer")]
    NotInteger { mask: usize },
    #[error("level {level} out of range 0..={max}")]
    LevelOutOfRange { level: usize, max: usize },
    #[error("total influence is zero; ratio is undefined")]
    ZeroInfluence,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
