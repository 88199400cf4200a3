//! Graph properties as Boolean functions of the edge indicators.

use alloc::vec::Vec;

use super::Bias;
use crate::{Error, Result, TruthTable};

/// `C(n, k)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
        if acc > u128::from(u64::MAX) {
            return u64::MAX;
        }
    }
    acc as u64
}

/// The property "contains `K_r`" on graphs with `n_vertices` vertices. Edge
/// variable `k` (0-based mask bit) is the `k`-th vertex pair `(u, v)`, `u < v`,
/// in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GraphPropertySpec {
    n_vertices: usize,
    r: usize,
}

impl GraphPropertySpec {
    pub fn new(n_vertices: usize, r: usize) -> Result<Self> {
        if r < 2 || r > n_vertices {
            return Err(Error::InvalidArgument(alloc::format!(
                "clique size must satisfy 2 <= r <= n_vertices, got r={r}, n_vertices={n_vertices}"
            )));
        }
        Ok(GraphPropertySpec { n_vertices, r })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of edge variables, `C(n_vertices, 2)`.
    pub fn edge_count(&self) -> usize {
        self.n_vertices * (self.n_vertices - 1) / 2
    }

    /// 0-based variable index of the pair `(u, v)`, `u < v`.
    pub fn edge_index(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < self.n_vertices);
        // pairs (a, *) for a < u come first: (n-1) + (n-2) + ... + (n-u)
        u * (2 * self.n_vertices - u - 1) / 2 + (v - u - 1)
    }

    pub fn edge_pair(&self, k: usize) -> (usize, usize) {
        let mut k = k;
        for u in 0..self.n_vertices {
            let row = self.n_vertices - u - 1;
            if k < row {
                return (u, u + 1 + k);
            }
            k -= row;
        }
        panic!("edge index out of range");
    }

    /// Edge masks of every copy of `K_r`, with vertex sets in lexicographic
    /// order.
    pub fn clique_masks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut verts: Vec<usize> = (0..self.r).collect();
        loop {
            let mut mask = 0usize;
            for a in 0..self.r {
                for b in a + 1..self.r {
                    mask |= 1 << self.edge_index(verts[a], verts[b]);
                }
            }
            out.push(mask);
            // advance to the next combination
            let mut j = self.r;
            while j > 0 && verts[j - 1] == self.n_vertices - self.r + j - 1 {
                j -= 1;
            }
            if j == 0 {
                return out;
            }
            j -= 1;
            verts[j] += 1;
            for l in j + 1..self.r {
                verts[l] = verts[l - 1] + 1;
            }
        }
    }
}

/// Output bit 1 iff the edge set contains a copy of `K_r`.
pub fn clique_indicator(spec: &GraphPropertySpec) -> Result<TruthTable> {
    let cliques = spec.clique_masks();
    TruthTable::from_fn(spec.edge_count(), |t| {
        cliques.iter().any(|&c| c & !t == 0)
    })
}

/// The bias `p0` with `C(n, r) * p0^C(r, 2) = 1/2`.
pub fn critical_p0(spec: &GraphPropertySpec) -> Bias {
    let copies = binomial(spec.n_vertices as u64, spec.r as u64) as f64;
    let edges = binomial(spec.r as u64, 2) as f64;
    Bias::General(libm::pow(1.0 / (2.0 * copies), 1.0 / edges))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(7, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(52, 26), 495918532948104);
    }

    #[test]
    fn edge_order_is_lexicographic() {
        let g = GraphPropertySpec::new(5, 3).unwrap();
        let mut k = 0;
        for u in 0..5 {
            for v in u + 1..5 {
                assert_eq!(g.edge_index(u, v), k);
                assert_eq!(g.edge_pair(k), (u, v));
                k += 1;
            }
        }
        assert_eq!(k, g.edge_count());
    }

    #[test]
    fn clique_mask_counts() {
        let g = GraphPropertySpec::new(6, 3).unwrap();
        let masks = g.clique_masks();
        assert_eq!(masks.len(), 20);
        assert!(masks.iter().all(|m| m.count_ones() == 3));
        let g = GraphPropertySpec::new(4, 4).unwrap();
        assert_eq!(g.clique_masks(), alloc::vec![0b111111]);
    }

    #[test]
    fn triangle_on_three_vertices_is_and() {
        let g = GraphPropertySpec::new(3, 3).unwrap();
        let f = clique_indicator(&g).unwrap();
        assert_eq!(f.index(), Some(0b1000_0000));
    }

    #[test]
    fn triangles_on_four_vertices_brute_force() {
        let g = GraphPropertySpec::new(4, 3).unwrap();
        let f = clique_indicator(&g).unwrap();
        for t in 0..64usize {
            let has = |a: usize, b: usize| t >> g.edge_index(a, b) & 1 == 1;
            let mut tri = false;
            for a in 0..4 {
                for b in a + 1..4 {
                    for c in b + 1..4 {
                        tri |= has(a, b) && has(a, c) && has(b, c);
                    }
                }
            }
            assert_eq!(f.bit(t), tri, "mask {t:#b}");
        }
    }

    #[test]
    fn indicator_is_monotone() {
        for nv in 2..=5 {
            for r in 2..=nv {
                let g = GraphPropertySpec::new(nv, r).unwrap();
                let f = clique_indicator(&g).unwrap();
                for t in 0..f.len() {
                    if f.bit(t) {
                        for e in 0..g.edge_count() {
                            assert!(f.bit(t | 1 << e));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn critical_p0_closed_forms() {
        let p = critical_p0(&GraphPropertySpec::new(6, 3).unwrap()).value();
        assert!((p - 0.292402).abs() < 1e-6);
        assert!((p - libm::cbrt(1.0 / 40.0)).abs() < 1e-15);
        let p = critical_p0(&GraphPropertySpec::new(3, 3).unwrap()).value();
        assert!((p - 0.793701).abs() < 1e-6);
        for nv in 2..=7u64 {
            for r in 2..=nv {
                let g = GraphPropertySpec::new(nv as usize, r as usize).unwrap();
                let p = critical_p0(&g).value();
                let lhs = binomial(nv, r) as f64 * libm::pow(p, binomial(r, 2) as f64);
                assert!((lhs - 0.5).abs() < 1e-12, "nv={nv} r={r}");
            }
        }
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(GraphPropertySpec::new(3, 1).is_err());
        assert!(GraphPropertySpec::new(3, 4).is_err());
    }
}
