//! Named function families, `name:param,param,...`.

use boolfourier::boolfn::{
    and_fn, clique_indicator, dictator, majority, mux3, or_fn, parity, random_function, tribes,
};
use boolfourier::{GraphPropertySpec, TruthTable};

use crate::ToolError;

pub const REGISTRY: &str = "dictator:n,i | parity:n,maskhex | majority:n | tribes:w,s | and:n | \
                            or:n | mux3 | clique:nv,r | random:n,seed,density";

fn bad(spec: &str, why: impl std::fmt::Display) -> ToolError {
    ToolError::Input(format!("--family {spec:?}: {why}"))
}

fn ints(spec: &str, params: &[&str], count: usize) -> Result<Vec<usize>, ToolError> {
    if params.len() != count {
        return Err(bad(spec, format!("expected {count} parameter(s), got {}", params.len())));
    }
    params
        .iter()
        .map(|p| p.trim().parse().map_err(|_| bad(spec, format!("{p:?} is not a count"))))
        .collect()
}

pub fn parse_family(spec: &str) -> Result<TruthTable, ToolError> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let params: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').collect()
    };
    let table = match name.trim() {
        "dictator" => {
            let v = ints(spec, &params, 2)?;
            dictator(v[0], v[1])
        }
        "parity" => {
            if params.len() != 2 {
                return Err(bad(spec, "expected n,maskhex"));
            }
            let n = ints(spec, &params[..1], 1)?[0];
            let hex = params[1].trim();
            let hex = hex.strip_prefix("0x").unwrap_or(hex);
            let mask = usize::from_str_radix(hex, 16)
                .map_err(|_| bad(spec, format!("{hex:?} is not a hex mask")))?;
            parity(n, mask)
        }
        "majority" => majority(ints(spec, &params, 1)?[0]),
        "tribes" => {
            let v = ints(spec, &params, 2)?;
            tribes(v[0], v[1])
        }
        "and" => and_fn(ints(spec, &params, 1)?[0]),
        "or" => or_fn(ints(spec, &params, 1)?[0]),
        "mux3" => {
            ints(spec, &params, 0)?;
            mux3()
        }
        "clique" => {
            let v = ints(spec, &params, 2)?;
            let g = GraphPropertySpec::new(v[0], v[1]).map_err(|e| bad(spec, e))?;
            clique_indicator(&g)
        }
        "random" => {
            if params.len() != 3 {
                return Err(bad(spec, "expected n,seed,density"));
            }
            let n = ints(spec, &params[..1], 1)?[0];
            let seed: u64 = params[1]
                .trim()
                .parse()
                .map_err(|_| bad(spec, "seed must be an unsigned integer"))?;
            let density: f64 = params[2]
                .trim()
                .parse()
                .map_err(|_| bad(spec, "density must be a number"))?;
            random_function(n, seed, density)
        }
        other => return Err(bad(spec, format!("unknown family {other:?}; known: {REGISTRY}"))),
    };
    table.map_err(|e| match e {
        boolfourier::Error::TooLarge { .. } => ToolError::Core(e),
        other => bad(spec, other),
    })
}
