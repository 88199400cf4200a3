use crate::{Error, Result};

/// The parameter `p` of the product measure `mu_p`, where each coordinate is
/// 1 with probability `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Bias {
    /// `p = t / 2^m` with `1 <= t < 2^m`.
    Exact { t: u64, m: u32 },
    /// Any `p` in the open interval `(0, 1)`.
    General(f64),
}

impl Bias {
    pub const MAX_EXACT_BITS: u32 = 52;

    pub fn exact(t: u64, m: u32) -> Result<Self> {
        if m == 0 || m > Self::MAX_EXACT_BITS || t == 0 || t >= 1u64 << m {
            return Err(Error::InvalidExactBias { t, m });
        }
        Ok(Bias::Exact { t, m })
    }

    pub fn general(p: f64) -> Result<Self> {
        if p.is_finite() && p > 0.0 && p < 1.0 {
            Ok(Bias::General(p))
        } else {
            Err(Error::InvalidBias(p))
        }
    }

    pub fn half() -> Self {
        Bias::Exact { t: 1, m: 1 }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Bias::Exact { t, m } => t as f64 / (1u64 << m) as f64,
            Bias::General(p) => p,
        }
    }

    /// Re-checks the invariants of a value built without the constructors.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Bias::Exact { t, m } => Self::exact(t, m).map(|_| ()),
            Bias::General(p) => Self::general(p).map(|_| ()),
        }
    }

    pub fn is_half(&self) -> bool {
        self.value() == 0.5
    }

    /// Dyadic form `(t, m)` with `t` odd, if `p` has one with `m` at most
    /// [`Self::MAX_EXACT_BITS`].
    pub fn as_dyadic(&self) -> Option<(u64, u32)> {
        let (mut t, mut m) = match *self {
            Bias::Exact { t, m } => (t, m),
            Bias::General(p) => {
                let scale = (1u64 << Self::MAX_EXACT_BITS) as f64;
                let scaled = p * scale;
                if libm::trunc(scaled) != scaled {
                    return None;
                }
                (scaled as u64, Self::MAX_EXACT_BITS)
            }
        };
        while t % 2 == 0 && m > 1 {
            t /= 2;
            m -= 1;
        }
        Some((t, m))
    }
}
