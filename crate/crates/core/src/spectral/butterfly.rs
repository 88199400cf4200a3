//! In-place tensor butterfly driver shared by the float and integer kernels.
//!
//! Stage `j` combines every pair of entries whose masks differ only in bit
//! `j`. Each output entry sees exactly the same sequence of operations no
//! matter how the work is partitioned, so results are independent of the
//! thread count.

/// Stages with blocks up to this size run chunk-local, while the chunk is
/// still in cache.
const LOCAL_BLOCK: usize = 1 << 12;

#[cfg(feature = "parallel")]
const PAR_MIN_LEN: usize = 1 << 14;

fn pairs<T: Copy, F: Fn(T, T) -> (T, T)>(lo: &mut [T], hi: &mut [T], op: &F) {
    for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
        let (x, y) = op(*a, *b);
        *a = x;
        *b = y;
    }
}

fn local_stages<T: Copy, F: Fn(T, T) -> (T, T)>(chunk: &mut [T], op: &F) {
    let mut h = 1;
    while h < chunk.len() {
        for block in chunk.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            pairs(lo, hi, op);
        }
        h *= 2;
    }
}

/// Applies `op(value at bit j = 0, value at bit j = 1)` for every stage
/// `j = 0..log2(len)`. `data.len()` must be a power of two.
pub(crate) fn run<T, F>(data: &mut [T], op: F)
where
    T: Copy + Send + Sync,
    F: Fn(T, T) -> (T, T) + Sync,
{
    let len = data.len();
    debug_assert!(len.is_power_of_two());
    let local = LOCAL_BLOCK.min(len);

    #[cfg(feature = "parallel")]
    if len >= PAR_MIN_LEN {
        use rayon::prelude::*;
        data.par_chunks_mut(local).for_each(|c| local_stages(c, &op));
        let mut h = local;
        while h < len {
            for block in data.chunks_mut(2 * h) {
                let (lo, hi) = block.split_at_mut(h);
                lo.par_chunks_mut(LOCAL_BLOCK)
                    .zip(hi.par_chunks_mut(LOCAL_BLOCK))
                    .for_each(|(l, r)| pairs(l, r, &op));
            }
            h *= 2;
        }
        return;
    }

    data.chunks_mut(local).for_each(|c| local_stages(c, &op));
    let mut h = local;
    while h < len {
        for block in data.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            pairs(lo, hi, &op);
        }
        h *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn integer_walsh_of_delta() {
        let mut v = alloc::vec![0i64; 8];
        v[0] = 1;
        run(&mut v, |a, b| (a + b, a - b));
        assert_eq!(v, alloc::vec![1; 8]);
    }

    #[test]
    fn large_matches_reference_loop() {
        let n = 16;
        let orig: Vec<i64> = (0..1i64 << n).map(|x| (x * 7919) % 13 - 6).collect();
        let mut fast = orig.clone();
        run(&mut fast, |a, b| (a + b, a - b));
        let mut slow = orig;
        let mut h = 1;
        while h < slow.len() {
            for i in 0..slow.len() {
                if i & h == 0 {
                    let (a, b) = (slow[i], slow[i | h]);
                    slow[i] = a + b;
                    slow[i | h] = a - b;
                }
            }
            h *= 2;
        }
        assert_eq!(fast, slow);
    }
}
