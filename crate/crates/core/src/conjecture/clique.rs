use alloc::vec::Vec;

use super::bounds::normalized_ratio;
use crate::boolfn::{binomial, clique_indicator, critical_p0};
use crate::reduction::INEQUALITY_SLACK;
use crate::spectral::{
    influences_combinatorial, spectral_entropy, total_influence_spectral, transform,
};
use crate::sum::pairwise_sum;
use crate::{Error, GraphPropertySpec, Result};

pub const CLIQUE_MAX_VERTICES: usize = 7;

/// The `K_r` containment property at its critical bias `p0`.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CliqueReport {
    pub n_vertices: usize,
    pub r: usize,
    pub edge_count: usize,
    pub p0: f64,
    /// `C(n, r) p0^C(r, 2) - 1/2`.
    pub defining_residual: f64,
    /// `mu_{p0}` probability of containing `K_r`.
    pub probability: f64,
    /// Total influence, summed over per-edge pivotal probabilities.
    pub influence: f64,
    /// Total influence from the spectrum.
    pub influence_spectral: f64,
    /// `r(r-1) / (4 p0)`.
    pub union_bound: f64,
    pub union_bound_holds: bool,
    pub max_edge_influence: f64,
    /// `r(r-1) / (2 n (n-1) p0)`.
    pub edge_bound: f64,
    pub edge_bound_holds: bool,
    /// `f^(S)^2` for each copy `S` of `K_r`, copies in lexicographic order.
    pub clique_weights: Vec<f64>,
    pub clique_weight_min: f64,
    pub clique_weight_mean: f64,
    pub clique_weight_max: f64,
    /// `1 / C(n, r)`, the scale of the per-copy lower bound.
    pub inverse_copies: f64,
    /// Total weight on clique coefficients.
    pub clique_mass: f64,
    pub entropy: f64,
    /// `Ent / (p0 log2(1/p0) I)` (or the uniform ratio if `p0 = 1/2`).
    pub ei_ratio: Option<f64>,
}

pub fn clique_experiment(spec: &GraphPropertySpec) -> Result<CliqueReport> {
    if spec.n_vertices() > CLIQUE_MAX_VERTICES {
        return Err(Error::TooLarge {
            n: spec.edge_count(),
            max: CLIQUE_MAX_VERTICES * (CLIQUE_MAX_VERTICES - 1) / 2,
        });
    }
    let (nv, r) = (spec.n_vertices(), spec.r());
    let bias = critical_p0(spec);
    let p0 = bias.value();
    let copies = binomial(nv as u64, r as u64) as f64;
    let clique_edges = binomial(r as u64, 2) as f64;
    let f = clique_indicator(spec)?;
    let spectrum = transform(&f, bias)?;

    let edge_influences = influences_combinatorial(&f, bias)?;
    let influence = pairwise_sum(&edge_influences);
    let max_edge_influence = edge_influences.iter().copied().fold(0.0, f64::max);
    let rr = (r * (r - 1)) as f64;
    let union_bound = rr / (4.0 * p0);
    let edge_bound = rr / (2.0 * (nv * (nv - 1)) as f64 * p0);

    let clique_weights: Vec<f64> = spec
        .clique_masks()
        .into_iter()
        .map(|s| spectrum.coeff(s) * spectrum.coeff(s))
        .collect();
    let clique_mass = pairwise_sum(&clique_weights);
    let entropy = spectral_entropy(&spectrum);
    let influence_spectral = total_influence_spectral(&spectrum);

    Ok(CliqueReport {
        n_vertices: nv,
        r,
        edge_count: spec.edge_count(),
        p0,
        defining_residual: copies * libm::pow(p0, clique_edges) - 0.5,
        probability: (1.0 - spectrum.mean()) / 2.0,
        influence,
        influence_spectral,
        union_bound,
        union_bound_holds: influence <= union_bound + INEQUALITY_SLACK,
        max_edge_influence,
        edge_bound,
        edge_bound_holds: max_edge_influence <= edge_bound + INEQUALITY_SLACK,
        clique_weight_min: clique_weights.iter().copied().fold(f64::INFINITY, f64::min),
        clique_weight_max: clique_weights.iter().copied().fold(0.0, f64::max),
        clique_weight_mean: clique_mass / clique_weights.len() as f64,
        clique_weights,
        inverse_copies: 1.0 / copies,
        clique_mass,
        entropy,
        ei_ratio: normalized_ratio(entropy, influence_spectral, p0),
    })
}
