use std::collections::BTreeSet;
use std::path::Path;

use himul_core::constructors::{nc_ideal, qdivisor_ideal};
use himul_core::invariants::{
    containment_threshold, gdim_ordinary, hodge_cyclic_eigenspace, hodge_prim_hypersurface,
    independent_conditions, nontriviality_data, symbolic_power_exponent, StrataData,
};
use himul_core::registry::{self, default_cutoff, lookup, parse_naturals, SpectrumClass};
use himul_core::resolution::{
    builtin_family, integral_components, lct as lct_of, max_weight_level, min_exponent_bounds,
    minimal_lc_center, ResolutionData, ResolutionInput,
};
use himul_core::{Error, HmIdeal, Rat};
use serde_json::json;

use crate::render::{joined, natural, table, Report};
use crate::Failure;

type Outcome = Result<Report, Failure>;

fn input(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn class(name: &str) -> Result<&'static dyn SpectrumClass, Failure> {
    lookup(name).map_err(|e| {
        let known = joined(registry::CLASSES.iter().map(|c| c.name()));
        input(format!("{e}; known classes: {known}"))
    })
}

fn cutoff_for(class: &dyn SpectrumClass, params: &str, cutoff: Option<&Rat>) -> Result<Rat, Error> {
    match cutoff {
        Some(c) => Ok(c.clone()),
        None => default_cutoff(class, params),
    }
}

pub fn spectrum(name: &str, params: &str, cutoff: Option<&Rat>) -> Outcome {
    let class = class(name)?;
    let cutoff = cutoff_for(class, params, cutoff)?;
    let v = class.build(params, &cutoff)?.spectrum;
    let first = v
        .minimal_exponent()
        .map_or("none below the cutoff".to_string(), |b| b.to_string());
    let text = format!(
        "{name} {params}: n = {}, cutoff = {cutoff}, minimal exponent {first}\n{}",
        v.n(),
        table(("β", "Ṽ^β"), &v.table_rows())
    );
    Ok(Report::new(text, &v))
}

pub fn ideal(name: &str, params: &str, cutoff: Option<&Rat>, k: u32, alpha: &Rat) -> Outcome {
    let h = match name {
        "nc" | "qdivisor" if cutoff.is_some() => {
            return Err(input(format!(
                "--cutoff does not apply to the {name} class"
            )))
        }
        "nc" => nc_ideal(&parse_naturals(params)?, k, alpha)?,
        "qdivisor" => {
            let coeffs = params
                .split(',')
                .map(|s| s.parse::<Rat>())
                .collect::<Result<Vec<_>, _>>()?;
            HmIdeal::plain(qdivisor_ideal(&coeffs, k, alpha)?)
        }
        _ => {
            let class = class(name)?;
            let cutoff = match cutoff {
                Some(c) => c.clone(),
                None => {
                    // the untwisted index k - (α + t) must fit below the cutoff
                    let t = (-Rat::one() - alpha).ceil_i64()?.max(0);
                    let beta = Rat::int(k as i64) - alpha - Rat::int(t);
                    let c = default_cutoff(class, params)?;
                    if beta > c {
                        beta
                    } else {
                        c
                    }
                }
            };
            let germ = class.build(params, &cutoff)?;
            germ.spectrum
                .hmi_twisted(germ.equation.as_ref(), k, alpha)?
        }
    };
    Ok(Report::new(h.to_string(), &h))
}

pub fn gdim(n: usize, m: u32, k: u32, alpha: &Rat) -> Outcome {
    let g = gdim_ordinary(n, m, k, alpha)?;
    let text = g.to_string();
    Ok(Report::new(
        text,
        json!({ "n": n, "m": m, "k": k, "alpha": alpha, "gdim": natural(g) }),
    ))
}

fn parse_eigen(eigen: &str, degree: u32) -> Result<u32, Failure> {
    let bad = || input(format!("--eigen expects p/{degree}, got `{eigen}`"));
    let (p, m) = eigen.split_once('/').ok_or_else(bad)?;
    let p: u32 = p.trim().parse().map_err(|_| bad())?;
    let m: u32 = m.trim().parse().map_err(|_| bad())?;
    if m != degree {
        return Err(bad());
    }
    Ok(p)
}

pub fn hodge(ambient_dim: usize, degree: u32, eigen: Option<&str>) -> Outcome {
    if ambient_dim == 0 {
        return Err(input("--ambient-dim must be at least 1"));
    }
    let n = ambient_dim + 1;
    let mut rows = Vec::new();
    match eigen {
        None => {
            for k in 1..n as u32 {
                let h = hodge_prim_hypersurface(n, degree, k)?;
                rows.push((n as u32 - 1 - k, k - 1, h));
            }
        }
        Some(e) => {
            let p = parse_eigen(e, degree)?;
            for k in 0..n as u32 {
                let h = hodge_cyclic_eigenspace(n, degree, k, p)?;
                rows.push((n as u32 - 1 - k, k, h));
            }
        }
    }
    let text_rows: Vec<(String, String)> = rows
        .iter()
        .map(|(p, q, h)| (format!("({p}, {q})"), h.to_string()))
        .collect();
    let json_rows: Vec<_> = rows
        .iter()
        .map(|(p, q, h)| json!({ "p": p, "q": q, "value": natural(h) }))
        .collect();
    Ok(Report::new(
        table(("(p, q)", "h_prim"), &text_rows),
        json!({ "ambient_dim": ambient_dim, "degree": degree, "eigen": eigen, "rows": json_rows }),
    ))
}

pub fn nontriviality(n: u64, d: u64, m: u64) -> Outcome {
    let c = nontriviality_data(n, d, m)?;
    Ok(Report::record(
        &[
            ("k", c.k.to_string()),
            ("r", c.r.to_string()),
            ("alpha", c.alpha.to_string()),
        ],
        &c,
    ))
}

pub fn symbolic_power(codim: u64, m: u64, level: u64, alpha: &Rat) -> Outcome {
    let p = symbolic_power_exponent(codim, m, level, alpha)?;
    Ok(Report::record(
        &[("p", p.to_string())],
        json!({ "codim": codim, "m": m, "level": level, "alpha": alpha, "p": p }),
    ))
}

pub fn threshold(r: u64, m: u64) -> Outcome {
    let t = containment_threshold(r, m)?;
    Ok(Report::record(
        &[("threshold", t.to_string())],
        json!({ "r": r, "m": m, "threshold": t }),
    ))
}

pub fn indep_conditions(n: u64, m: u64, d: Option<i64>) -> Outcome {
    let bound = independent_conditions(n, m)?;
    let mut fields = vec![("bound", bound.to_string())];
    let mut out = json!({ "n": n, "m": m, "slope": bound.slope, "offset": bound.offset });
    if let Some(d) = d {
        fields.push(("value", bound.eval(d).to_string()));
        out["d"] = json!(d);
        out["value"] = json!(bound.eval(d));
    }
    Ok(Report::record(&fields, out))
}

pub enum Source<'a> {
    File(&'a Path),
    Builtin(&'a str),
}

pub fn load_resolution(source: Source) -> Result<(ResolutionData, Option<StrataData>), Failure> {
    match source {
        Source::File(path) => {
            let raw = std::fs::read_to_string(path)
                .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
            let data: ResolutionInput = serde_json::from_str(&raw)
                .map_err(|e| input(format!("{}: {e}", path.display())))?;
            Ok((data.resolution, data.strata))
        }
        Source::Builtin(call) => {
            let family = builtin_family(call)?;
            let res = family
                .resolution
                .ok_or_else(|| input(format!("{call} has no resolution data")))?;
            Ok((res, Some(family.strata)))
        }
    }
}

fn labels(r: &ResolutionData, set: &BTreeSet<usize>) -> String {
    joined(set.iter().map(|&i| &r.components()[i].label))
}

pub fn lct(r: &ResolutionData) -> Outcome {
    let c = lct_of(r)?;
    Ok(Report::record(
        &[("lct", c.to_string())],
        json!({ "lct": c }),
    ))
}

pub fn bounds(r: &ResolutionData, strata: Option<&StrataData>) -> Outcome {
    let strata = strata.ok_or_else(|| input("bounds need `strata` in the resolution file"))?;
    let b = min_exponent_bounds(r, strata)?;
    Ok(Report::record(
        &[
            ("lower", b.lower.to_string()),
            ("upper", b.upper.to_string()),
        ],
        &b,
    ))
}

pub fn weight_level(r: &ResolutionData, alpha: &Rat) -> Outcome {
    let level = max_weight_level(r, alpha);
    let comps = integral_components(r, alpha);
    Ok(Report::record(
        &[
            ("level", level.to_string()),
            ("integral", labels(r, &comps)),
        ],
        json!({ "alpha": alpha, "level": level, "integral_components": comps }),
    ))
}

pub fn lc_center(r: &ResolutionData) -> Outcome {
    let centers = minimal_lc_center(r)?;
    let rows: Vec<(String, String)> = centers
        .iter()
        .map(|s| (format!("{{{}}}", joined(s)), labels(r, s)))
        .collect();
    Ok(Report::new(
        table(("indices", "components"), &rows),
        json!({ "centers": centers }),
    ))
}

pub fn bs_classes(name: &str, params: &str, cutoff: Option<&Rat>) -> Outcome {
    let class = class(name)?;
    let cutoff = cutoff_for(class, params, cutoff)?;
    let classes = class.build(params, &cutoff)?.spectrum.bs_root_classes();
    Ok(Report::new(joined(&classes), &classes))
}
