use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{StrataData, Stratum};
use crate::rat::Rat;

use super::{Component, ResolutionData};

#[derive(Clone, Debug, Serialize)]
pub struct FamilyData {
    pub strata: StrataData,
    pub resolution: Option<ResolutionData>,
    pub expected_min_exponent: Rat,
}

/// A named family of divisors whose log resolution blows up the multiplicity
/// strata in turn.
pub trait Family: Sync {
    fn name(&self) -> &'static str;

    /// Parameter names, in order.
    fn params(&self) -> &'static [&'static str];

    /// `(m, codim Sing_m)` for every nonempty stratum.
    fn strata(&self, params: &[u64]) -> Result<Vec<(u64, u64)>>;

    fn expected_min_exponent(&self) -> Rat;

    /// Blowing up a smooth center of codimension `c` along which the divisor
    /// has multiplicity `m` gives an exceptional divisor with `e = m` and
    /// `k = c - 1`; all of them meet the proper transform over the deepest
    /// stratum.
    fn build(&self, params: &[u64]) -> Result<FamilyData> {
        if params.len() != self.params().len() {
            return Err(Error::invalid(format!(
                "{} takes {} parameter(s), got {}",
                self.name(),
                self.params().len(),
                params.len()
            )));
        }
        let pairs = self.strata(params)?;
        let mut comps = vec![Component::new("proper transform", 1, 0, false)];
        comps.extend(
            pairs
                .iter()
                .map(|&(m, codim)| Component::new(format!("E_{m}"), m, codim - 1, true)),
        );
        let strata = StrataData::new(
            pairs
                .iter()
                .map(|&(m, codim)| Stratum { m, codim })
                .collect(),
        )?;
        Ok(FamilyData {
            strata,
            resolution: Some(ResolutionData::full_intersection(comps)?),
            expected_min_exponent: self.expected_min_exponent(),
        })
    }
}

fn at_least(name: &str, what: &str, value: u64, min: u64) -> Result<()> {
    if value < min {
        return Err(Error::invalid(format!(
            "{name} needs {what} ≥ {min}, got {value}"
        )));
    }
    Ok(())
}

/// Theta divisor of a hyperelliptic Jacobian of genus `g`.
struct HyperellipticTheta;

impl Family for HyperellipticTheta {
    fn name(&self) -> &'static str {
        "hyperelliptic_theta"
    }

    fn params(&self) -> &'static [&'static str] {
        &["g"]
    }

    fn strata(&self, p: &[u64]) -> Result<Vec<(u64, u64)>> {
        at_least(self.name(), "g", p[0], 3)?;
        Ok((2..=p[0].div_ceil(2)).map(|m| (m, 2 * m - 1)).collect())
    }

    fn expected_min_exponent(&self) -> Rat {
        Rat::new(3, 2)
    }
}

/// Theta divisor of a Brill–Noether general curve of genus `g`.
struct BnGeneralTheta;

impl Family for BnGeneralTheta {
    fn name(&self) -> &'static str {
        "bn_general_theta"
    }

    fn params(&self) -> &'static [&'static str] {
        &["g"]
    }

    fn strata(&self, p: &[u64]) -> Result<Vec<(u64, u64)>> {
        at_least(self.name(), "g", p[0], 4)?;
        Ok((2..)
            .take_while(|m| m * m <= p[0])
            .map(|m| (m, m * m))
            .collect())
    }

    fn expected_min_exponent(&self) -> Rat {
        Rat::int(2)
    }
}

/// Generic determinantal hypersurface of `n × n` matrices.
struct Determinantal;

impl Family for Determinantal {
    fn name(&self) -> &'static str {
        "determinantal"
    }

    fn params(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn strata(&self, p: &[u64]) -> Result<Vec<(u64, u64)>> {
        at_least(self.name(), "n", p[0], 2)?;
        Ok((2..=p[0]).map(|m| (m, m * m)).collect())
    }

    fn expected_min_exponent(&self) -> Rat {
        Rat::int(2)
    }
}

/// `n`-th secant variety of a rational normal curve of degree `2n+2`.
struct Secant;

impl Family for Secant {
    fn name(&self) -> &'static str {
        "secant"
    }

    fn params(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn strata(&self, p: &[u64]) -> Result<Vec<(u64, u64)>> {
        at_least(self.name(), "n", p[0], 1)?;
        Ok((2..=p[0] + 1).map(|m| (m, 2 * m - 1)).collect())
    }

    fn expected_min_exponent(&self) -> Rat {
        Rat::new(3, 2)
    }
}

/// Theta divisor of the intermediate Jacobian of a smooth cubic threefold.
struct CubicThreefold;

impl Family for CubicThreefold {
    fn name(&self) -> &'static str {
        "cubic_threefold"
    }

    fn params(&self) -> &'static [&'static str] {
        &[]
    }

    fn strata(&self, _: &[u64]) -> Result<Vec<(u64, u64)>> {
        Ok(vec![(3, 5)])
    }

    fn expected_min_exponent(&self) -> Rat {
        Rat::new(5, 3)
    }
}

pub static FAMILIES: &[&dyn Family] = &[
    &HyperellipticTheta,
    &BnGeneralTheta,
    &Determinantal,
    &Secant,
    &CubicThreefold,
];

pub fn family_names() -> Vec<&'static str> {
    FAMILIES.iter().map(|f| f.name()).collect()
}

/// Look up and build a family from `name`, `name()` or `name(p1, p2, …)`.
pub fn builtin_family(call: &str) -> Result<FamilyData> {
    let call = call.trim();
    let (name, args) = match call.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| Error::invalid(format!("unbalanced parentheses in `{call}`")))?;
            (name.trim(), inner)
        }
        None => (call, ""),
    };
    let params = args
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| Error::invalid(format!("parameter `{s}` is not a natural number")))
        })
        .collect::<Result<Vec<_>>>()?;
    FAMILIES
        .iter()
        .find(|f| f.name() == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?
        .build(&params)
}
