#![allow(dead_code)]

use boolfourier::TruthTable;

/// Coefficients straight from the definition: for each `S`, sum over all
/// points `T` of `mu_p(T) f(T) u_S(T)`, with
/// `u_S(T) = (-sqrt(q/p))^{|S & T|} (sqrt(p/q))^{|S \ T|}`.
pub fn naive_transform(values: &[f64], p: f64) -> Vec<f64> {
    let len = values.len();
    let n = len.trailing_zeros();
    let q = 1.0 - p;
    let a = -(q / p).sqrt();
    let b = (p / q).sqrt();
    let pow_a: Vec<f64> = (0..=n).map(|k| a.powi(k as i32)).collect();
    let pow_b: Vec<f64> = (0..=n).map(|k| b.powi(k as i32)).collect();
    let weighted: Vec<f64> = (0..len)
        .map(|t| {
            let ones = (t as u32).count_ones() as i32;
            p.powi(ones) * q.powi(n as i32 - ones) * values[t]
        })
        .collect();
    (0..len)
        .map(|s| {
            let mut acc = 0.0;
            for (t, w) in weighted.iter().enumerate() {
                let inter = (s & t).count_ones() as usize;
                let diff = (s & !t).count_ones() as usize;
                acc += w * pow_a[inter] * pow_b[diff];
            }
            acc
        })
        .collect()
}

/// `Pr_p[f(x) != f(x ^ e_i)]` by enumeration, coordinate `i` at bit `i - 1`.
pub fn naive_influence(f: &TruthTable, p: f64, i: usize) -> f64 {
    let bit = 1usize << (i - 1);
    (0..f.len())
        .filter(|&x| f.bit(x) != f.bit(x ^ bit))
        .map(|x| {
            let ones = x.count_ones() as i32;
            p.powi(ones) * (1.0 - p).powi(f.n() as i32 - ones)
        })
        .sum()
}

pub fn entropy_of(coeffs: &[f64]) -> f64 {
    coeffs
        .iter()
        .map(|c| c * c)
        .filter(|&w| w > 0.0)
        .map(|w| -w * w.log2())
        .sum()
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
