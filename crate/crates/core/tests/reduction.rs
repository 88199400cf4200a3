mod common;

use boolfourier::boolfn::{and_fn, dictator, majority, random_function, tribes};
use boolfourier::reduction::{
    block_projection, floor_log2_inverse, pushforward_counts, reduce, verify_all,
    verify_entropy_monotone, verify_red0, verify_red_fk, ReductionLayout,
};
use boolfourier::spectral::transform;
use boolfourier::{Bias, Error, TruthTable};
use common::{entropy_of, naive_transform};
use proptest::prelude::*;

/// `mu_p(x)` for `p = t / 2^m`, times `2^{mn}`.
fn scaled_measure(x: usize, n: usize, t: u64, m: u32) -> u64 {
    let ones = x.count_ones();
    t.pow(ones) * ((1u64 << m) - t).pow(n as u32 - ones)
}

#[test]
fn pushforward_is_the_biased_measure() {
    for (n, t, m) in [(1, 1, 1), (2, 1, 2), (3, 3, 2), (2, 5, 3), (4, 1, 3), (3, 7, 4)] {
        let layout = ReductionLayout::new(n, t, m).unwrap();
        let counts = pushforward_counts(&layout);
        for (x, &c) in counts.iter().enumerate() {
            assert_eq!(c, scaled_measure(x, n, t, m), "n={n} t={t} m={m} x={x}");
        }
    }
}

#[test]
fn block_threshold_layout() {
    let layout = ReductionLayout::new(2, 1, 2).unwrap();
    // Block 1 is bits 0..2, block 2 is bits 2..4; the threshold is Bin >= 3.
    for y in 0..16usize {
        let x = layout.project_point(y);
        assert_eq!(x & 1 == 1, y & 0b11 == 0b11);
        assert_eq!(x >> 1 == 1, y >> 2 == 0b11);
    }
    assert_eq!(block_projection(0b0100, &layout), 0b10);
    assert_eq!(block_projection(0b0101, &layout), 0b11);
    assert_eq!(block_projection(0, &layout), 0);
}

#[test]
fn mean_and_norms_are_preserved() {
    for seed in 0..30u64 {
        let n = 1 + seed as usize % 4;
        let m = 1 + (seed / 4) as u32 % 3;
        let t = 1 + seed % ((1 << m) - 1);
        let f = random_function(n, seed, 0.5).unwrap();
        let layout = ReductionLayout::new(n, t, m).unwrap();
        let g = reduce(&f, &layout).unwrap();
        let ones_f: u64 = (0..f.len())
            .filter(|&x| f.bit(x))
            .map(|x| scaled_measure(x, n, t, m))
            .sum();
        assert_eq!(ones_f, g.count_ones() as u64);
        let mean_g = transform(&g, Bias::half()).unwrap().mean();
        let mean_f = transform(&f, layout.bias()).unwrap().mean();
        assert!((mean_g - mean_f).abs() < 1e-12);
    }
}

#[test]
fn coefficient_blocks_against_definition() {
    // Fiber sums from the naive transform of Red f against naive f^ at mu_p.
    for seed in 0..10u64 {
        let (n, t, m) = (2 + seed as usize % 2, 1 + seed % 3, 2);
        let f = random_function(n, seed, 0.5).unwrap();
        let layout = ReductionLayout::new(n, t, m).unwrap();
        let g = reduce(&f, &layout).unwrap();
        let g_hat = naive_transform(&g.to_signs(), 0.5);
        let f_hat = naive_transform(&f.to_signs(), layout.p());
        let mut fibers = vec![0.0; 1 << n];
        for (s, c) in g_hat.iter().enumerate() {
            fibers[block_projection(s, &layout)] += c * c;
        }
        for (a, c) in fibers.iter().zip(&f_hat) {
            assert!((a - c * c).abs() < 1e-10);
        }
        let red0 = verify_red0(&f, &layout).unwrap();
        assert!(red0.max_gap < 1e-12);
        let e = verify_entropy_monotone(&f, &layout).unwrap();
        assert!((e.original - entropy_of(&f_hat)).abs() < 1e-9);
        assert!((e.reduced - entropy_of(&g_hat)).abs() < 1e-9);
    }
}

#[test]
fn floor_log2_by_integers() {
    assert_eq!(floor_log2_inverse(1, 1), 1);
    assert_eq!(floor_log2_inverse(1, 2), 2);
    assert_eq!(floor_log2_inverse(3, 3), 1);
    assert_eq!(floor_log2_inverse(3, 2), 0);
    assert_eq!(floor_log2_inverse(1, 20), 20);
    assert_eq!(floor_log2_inverse((1 << 20) - 1, 21), 1);
}

#[test]
fn red_fk_on_named_functions() {
    let fs: Vec<TruthTable> = vec![
        dictator(3, 2).unwrap(),
        majority(3).unwrap(),
        and_fn(3).unwrap(),
        tribes(2, 2).unwrap(),
    ];
    for f in &fs {
        for (t, m) in [(1, 1), (1, 2), (3, 3), (1, 3)] {
            let layout = ReductionLayout::new(f.n(), t, m).unwrap();
            assert!(verify_red_fk(f, &layout).unwrap().holds);
            assert!(verify_all(f, &layout).unwrap().all_hold(1e-9));
        }
    }
}

#[test]
fn red_fk_rejects_large_bias() {
    let layout = ReductionLayout::new(2, 3, 2).unwrap();
    let f = and_fn(2).unwrap();
    assert!(matches!(verify_red_fk(&f, &layout), Err(Error::BiasAboveHalf(_))));
    let all = verify_all(&f, &layout).unwrap();
    assert!(all.red_fk.is_none());
    assert!(all.red0.max_gap < 1e-12);
}

#[test]
fn layout_from_bias() {
    let l = ReductionLayout::for_bias(3, Bias::general(0.375).unwrap()).unwrap();
    assert_eq!((l.t(), l.m()), (3, 3));
    let l = ReductionLayout::for_bias(3, Bias::exact(2, 3).unwrap()).unwrap();
    assert_eq!((l.t(), l.m()), (2, 3));
    assert!(ReductionLayout::for_bias(3, Bias::general(0.3).unwrap()).is_err());
    assert!(ReductionLayout::new(3, 0, 2).is_err());
    assert!(ReductionLayout::new(3, 4, 2).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reduction_relations(n in 1usize..=4, m in 1u32..=3, t_seed in any::<u64>(), seed in any::<u64>()) {
        prop_assume!(n * m as usize <= 12);
        let t = 1 + t_seed % ((1 << m) - 1);
        let f = random_function(n, seed, 0.5).unwrap();
        let layout = ReductionLayout::new(n, t, m).unwrap();
        let r = verify_all(&f, &layout).unwrap();
        prop_assert!(r.red0.max_gap < 1e-9);
        prop_assert!(r.entropy.holds);
        if let Some(fk) = r.red_fk {
            prop_assert!(fk.holds);
        }
    }
}
