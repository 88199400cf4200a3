mod common;

use boolfourier::boolfn::{
    and_fn, dictator, majority, mux3, or_fn, parity, random_function, tribes, DecisionTree, Rng,
};
use boolfourier::spectral::{
    dyadic_check, exact_transform, exact_transform_integer, influence_combinatorial,
    inverse_transform, spectral_entropy, total_influence_combinatorial, total_influence_spectral,
    transform,
};
use boolfourier::{Bias, RealTable, TruthTable};
use common::{entropy_of, max_abs_diff, naive_influence, naive_transform};
use proptest::prelude::*;
use rand_core::SeedableRng;

fn biases() -> Vec<Bias> {
    vec![
        Bias::half(),
        Bias::exact(1, 2).unwrap(),
        Bias::exact(1, 3).unwrap(),
        Bias::exact(5, 3).unwrap(),
        Bias::general(0.3).unwrap(),
        Bias::general(0.71).unwrap(),
        Bias::general(0.02).unwrap(),
    ]
}

fn corpus() -> Vec<TruthTable> {
    let mut fs = vec![
        dictator(1, 1).unwrap(),
        dictator(4, 3).unwrap(),
        parity(5, 0b10110).unwrap(),
        majority(3).unwrap(),
        majority(5).unwrap(),
        majority(7).unwrap(),
        and_fn(4).unwrap(),
        or_fn(6).unwrap(),
        tribes(2, 3).unwrap(),
        tribes(3, 2).unwrap(),
        mux3().unwrap(),
    ];
    for n in 1..=8 {
        fs.push(random_function(n, 100 + n as u64, 0.5).unwrap());
        fs.push(random_function(n, 200 + n as u64, 0.2).unwrap());
    }
    fs
}

#[test]
fn fast_transform_matches_definition() {
    for f in corpus() {
        for bias in biases() {
            let fast = transform(&f, bias).unwrap();
            let naive = naive_transform(&f.to_signs(), bias.value());
            let err = max_abs_diff(fast.coeffs(), &naive);
            assert!(err < 1e-10, "n={} p={} err={err}", f.n(), bias.value());
        }
    }
}

#[test]
fn real_valued_inputs_match_definition() {
    let values: Vec<f64> = (0..64).map(|x| ((x * 37 % 11) as f64 - 5.0) / 3.0).collect();
    let f = RealTable::new(6, values.clone()).unwrap();
    for bias in biases() {
        let fast = transform(&f, bias).unwrap();
        let naive = naive_transform(&values, bias.value());
        assert!(max_abs_diff(fast.coeffs(), &naive) < 1e-10);
        let back = inverse_transform(&fast);
        assert!(max_abs_diff(back.values(), &values) < 1e-10);
    }
}

#[test]
fn dictator_worked_values() {
    for bias in biases() {
        let p = bias.value();
        let s = transform(&dictator(1, 1).unwrap(), bias).unwrap();
        assert!((s.coeff(0) - (1.0 - 2.0 * p)).abs() < 1e-12);
        assert!((s.coeff(1) - 2.0 * (p * (1.0 - p)).sqrt()).abs() < 1e-12);
        assert!((total_influence_spectral(&s) - 1.0).abs() < 1e-12);
        let w = 4.0 * p * (1.0 - p);
        let h = entropy_of(&[1.0 - 2.0 * p, w.sqrt()]);
        assert!((spectral_entropy(&s) - h).abs() < 1e-12);
    }
}

#[test]
fn influences_match_enumeration() {
    for f in corpus() {
        for bias in biases() {
            let p = bias.value();
            for i in 1..=f.n() {
                let fast = influence_combinatorial(&f, bias, i).unwrap();
                assert!((fast - naive_influence(&f, p, i)).abs() < 1e-12);
            }
            let comb = total_influence_combinatorial(&f, bias).unwrap();
            let spec = total_influence_spectral(&transform(&f, bias).unwrap());
            assert!((comb - spec).abs() < 1e-9, "n={} p={p}", f.n());
        }
    }
}

#[test]
fn derivative_shifts_the_spectrum() {
    for seed in 0..20u64 {
        let n = 2 + (seed as usize % 7);
        let f = random_function(n, seed, 0.5).unwrap();
        let exact = exact_transform(&f).unwrap();
        let float = transform(&f, Bias::half()).unwrap();
        for i in 1..=n {
            let g = f.derivative(i).unwrap();
            let g_exact = exact_transform_integer(&g).unwrap();
            let g_float = transform(&g, Bias::half()).unwrap();
            let bit = 1usize << (i - 1);
            for s in 0..1usize << (n - 1) {
                let low = s & (bit - 1);
                let full = low | (s - low) << 1 | bit;
                assert_eq!(g_float.coeff(s), float.coeff(full));
                assert_eq!(exact.numerator(full), 2 * g_exact.numerator(s));
            }
        }
    }
}

#[test]
fn exact_path_agrees_with_float_path() {
    for f in corpus() {
        let d = exact_transform(&f).unwrap();
        assert_eq!(d.parseval_numerator_sum(), 1u128 << (2 * f.n()));
        assert_eq!(d.reconstruct(), f.to_signs().iter().map(|&v| v as i64).collect::<Vec<_>>());
        let float = transform(&f, Bias::half()).unwrap();
        assert_eq!(d.to_spectrum().coeffs(), float.coeffs());
        assert!(d.level_profile_exact().sums_to_one());
    }
}

#[test]
fn decision_trees_are_dyadic_with_bounded_entropy() {
    let mut rng = Rng::seed_from_u64(7);
    for _ in 0..50 {
        let depth = 1 + (rand_core::RngCore::next_u32(&mut rng) as usize % 4);
        let tree = DecisionTree::random(8, depth, &mut rng).unwrap();
        let k = tree.depth();
        let d = exact_transform(&tree.to_table(8).unwrap()).unwrap();
        assert!(dyadic_check(&d, k).unwrap());
        assert!(spectral_entropy(&d.to_spectrum()) <= 2.0 * k as f64 + 1e-12);
    }
}

#[test]
fn parallel_transform_is_bitwise_stable() {
    let f = random_function(16, 5, 0.5).unwrap();
    let bias = Bias::general(0.3).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| transform(&f, bias).unwrap())
    };
    let one = run(1);
    for threads in [2, 3, 8] {
        let other = run(threads);
        assert!(one.coeffs().iter().zip(other.coeffs()).all(|(a, b)| a.to_bits() == b.to_bits()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parseval_and_roundtrip(n in 1usize..=10, seed in any::<u64>(), p in 0.01f64..0.99) {
        let f = random_function(n, seed, 0.5).unwrap();
        let s = transform(&f, Bias::general(p).unwrap()).unwrap();
        prop_assert!((s.parseval_sum() - 1.0).abs() < 1e-9);
        let back = inverse_transform(&s);
        prop_assert!(max_abs_diff(back.values(), &f.to_signs()) < 1e-10);
    }

    #[test]
    fn influence_identity(n in 1usize..=9, seed in any::<u64>(), p in 0.01f64..0.99) {
        let f = random_function(n, seed, 0.5).unwrap();
        let bias = Bias::general(p).unwrap();
        let spec = total_influence_spectral(&transform(&f, bias).unwrap());
        let comb = total_influence_combinatorial(&f, bias).unwrap();
        prop_assert!((spec - comb).abs() < 1e-9);
    }

    #[test]
    fn complement_flips_signs(n in 1usize..=8, seed in any::<u64>()) {
        let f = random_function(n, seed, 0.5).unwrap();
        let a = exact_transform(&f).unwrap();
        let b = exact_transform(&f.negate()).unwrap();
        prop_assert!(a.numerators().iter().zip(b.numerators()).all(|(x, y)| *x == -*y));
    }
}
