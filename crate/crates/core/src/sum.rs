//! Deterministic pairwise (tree) reductions.
//!
//! The split points depend only on the range length, never on the number of
//! worker threads, so the sequential and the parallel reduction produce the
//! same bits.

use core::ops::Range;

/// Ranges at or below this length are folded sequentially by the leaf closure.
pub const LEAF: usize = 32;

#[cfg(feature = "parallel")]
const PAR_THRESHOLD: usize = 1 << 14;

/// Reduces `range` by splitting it in half recursively, folding leaves of at
/// most [`LEAF`] indices with `leaf` and combining halves with `merge`.
pub fn pairwise_reduce<T, L, M>(range: Range<usize>, leaf: &L, merge: &M) -> T
where
    T: Send,
    L: Fn(Range<usize>) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    let len = range.end - range.start;
    if len <= LEAF {
        return leaf(range);
    }
    let mid = range.start + len / 2;
    #[cfg(feature = "parallel")]
    if len >= PAR_THRESHOLD {
        let (a, b) = rayon::join(
            || pairwise_reduce(range.start..mid, leaf, merge),
            || pairwise_reduce(mid..range.end, leaf, merge),
        );
        return merge(a, b);
    }
    let a = pairwise_reduce(range.start..mid, leaf, merge);
    let b = pairwise_reduce(mid..range.end, leaf, merge);
    merge(a, b)
}

/// Pairwise sum of `term(i)` over `0..len`.
pub fn pairwise_sum_by<F>(len: usize, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    pairwise_reduce(
        0..len,
        &|r: Range<usize>| r.map(&term).fold(0.0, |acc, v| acc + v),
        &|a, b| a + b,
    )
}

/// Pairwise sum of a slice.
pub fn pairwise_sum(values: &[f64]) -> f64 {
    pairwise_sum_by(values.len(), |i| values[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn empty_and_small() {
        assert_eq!(pairwise_sum(&[]), 0.0);
        assert_eq!(pairwise_sum(&[1.5, 2.5]), 4.0);
    }

    #[test]
    fn beats_naive_on_many_small_terms() {
        let v: Vec<f64> = (0..1 << 20).map(|_| 0.1).collect();
        let exact = 0.1 * (1u64 << 20) as f64;
        let naive: f64 = v.iter().sum();
        let pw = pairwise_sum(&v);
        assert!((pw - exact).abs() <= (naive - exact).abs());
        assert!((pw - exact).abs() < 1e-8);
    }

    #[test]
    fn vector_reduce_matches_scalar() {
        let v: Vec<f64> = (0..1000).map(|i| i as f64).collect();
        let total = pairwise_reduce(
            0..v.len(),
            &|r: Range<usize>| [r.clone().map(|i| v[i]).sum::<f64>(), r.len() as f64],
            &|a: [f64; 2], b: [f64; 2]| [a[0] + b[0], a[1] + b[1]],
        );
        assert_eq!(total, [499500.0, 1000.0]);
    }
}
