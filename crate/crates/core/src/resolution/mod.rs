//! Combinatorics of log-resolution data `π^*D = Σ e_i E_i`, `K = Σ k_i E_i`.
//!
//! Component indices are 0-based. The intersection lattice is given by its
//! maximal members; every subset of a listed set, and every singleton, is a
//! nonempty intersection.

mod families;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::constructors::nc_ideal;
use crate::error::{Error, Result};
use crate::invariants::{min_exponent_upper, StrataData};
use crate::monomial::{ExpVec, MonIdeal};
use crate::rat::Rat;

pub use families::{builtin_family, family_names, Family, FamilyData, FAMILIES};

fn default_true() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub label: String,
    pub e: u64,
    pub k: u64,
    #[serde(default = "default_true")]
    pub exceptional: bool,
}

impl Component {
    pub fn new(label: impl Into<String>, e: u64, k: u64, exceptional: bool) -> Self {
        Component {
            label: label.into(),
            e,
            k,
            exceptional,
        }
    }

    /// `(k + 1)/e`.
    pub fn log_discrepancy_ratio(&self) -> Rat {
        Rat::new(self.k as i64 + 1, self.e as i64)
    }
}

#[derive(Deserialize)]
struct RawResolution {
    components: Vec<Component>,
    #[serde(default)]
    maximal_intersections: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawResolution")]
pub struct ResolutionData {
    components: Vec<Component>,
    maximal_intersections: Vec<BTreeSet<usize>>,
}

impl TryFrom<RawResolution> for ResolutionData {
    type Error = Error;

    fn try_from(raw: RawResolution) -> Result<Self> {
        ResolutionData::new(raw.components, raw.maximal_intersections)
    }
}

/// Input file: resolution data plus optional multiplicity strata.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResolutionInput {
    #[serde(flatten)]
    pub resolution: ResolutionData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strata: Option<StrataData>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub lower: Rat,
    pub upper: Rat,
}

impl ResolutionData {
    pub fn new(components: Vec<Component>, maximal: Vec<Vec<usize>>) -> Result<ResolutionData> {
        if components.is_empty() {
            return Err(Error::invalid("resolution data has no components"));
        }
        for c in &components {
            if c.e == 0 {
                return Err(Error::invalid(format!(
                    "component {} has multiplicity 0",
                    c.label
                )));
            }
        }
        let mut sets: Vec<BTreeSet<usize>> = Vec::new();
        for m in maximal {
            if let Some(&i) = m.iter().find(|&&i| i >= components.len()) {
                return Err(Error::invalid(format!(
                    "intersection names unknown component {i}"
                )));
            }
            sets.push(m.into_iter().collect());
        }
        // keep only maximal members
        let mut kept: Vec<BTreeSet<usize>> = Vec::new();
        sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        for s in sets {
            if !s.is_empty() && !kept.iter().any(|k| s.is_subset(k)) {
                kept.push(s);
            }
        }
        kept.sort();
        Ok(ResolutionData {
            components,
            maximal_intersections: kept,
        })
    }

    /// All components meet in one point.
    pub fn full_intersection(components: Vec<Component>) -> Result<ResolutionData> {
        let all = (0..components.len()).collect();
        ResolutionData::new(components, vec![all])
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn maximal_intersections(&self) -> &[BTreeSet<usize>] {
        &self.maximal_intersections
    }

    /// Whether `E_J ≠ ∅`.
    pub fn in_lattice(&self, j: &BTreeSet<usize>) -> bool {
        j.len() <= 1 && j.iter().all(|&i| i < self.components.len())
            || self.maximal_intersections.iter().any(|m| j.is_subset(m))
    }

    /// Largest sets `M ∩ S` over lattice members `M`, for `S` a set of indices.
    fn deepest_within(&self, s: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut cands: BTreeSet<BTreeSet<usize>> = self
            .maximal_intersections
            .iter()
            .map(|m| m.intersection(s).cloned().collect())
            .collect();
        cands.extend(s.iter().map(|&i| BTreeSet::from([i])));
        let top = cands.iter().map(BTreeSet::len).max().unwrap_or(0);
        cands
            .into_iter()
            .filter(|c| c.len() == top && top > 0)
            .collect()
    }
}

/// `min (k_i + 1)/e_i` over all components.
pub fn lct(r: &ResolutionData) -> Result<Rat> {
    r.components
        .iter()
        .map(Component::log_discrepancy_ratio)
        .min()
        .ok_or_else(|| Error::invalid("resolution data has no components"))
}

/// Lower bound `min (k_i + 1)/e_i` over exceptional components and upper bound
/// `min codim/m` over the strata.
pub fn min_exponent_bounds(r: &ResolutionData, strata: &StrataData) -> Result<Bounds> {
    let lower = r
        .components
        .iter()
        .filter(|c| c.exceptional)
        .map(Component::log_discrepancy_ratio)
        .min()
        .ok_or_else(|| Error::invalid("resolution data has no exceptional components"))?;
    Ok(Bounds {
        lower,
        upper: min_exponent_upper(strata)?,
    })
}

/// Minimal exponent when the resolution is obtained by blowing up the
/// multiplicity strata one after another. The caller vouches for that.
pub fn min_exponent_stratified(strata: &StrataData) -> Result<Rat> {
    min_exponent_upper(strata)
}

/// `I_α = {i : e_i·α ∈ ℤ}`.
pub fn integral_components(r: &ResolutionData, alpha: &Rat) -> BTreeSet<usize> {
    (0..r.components.len())
        .filter(|&i| (alpha * Rat::int(r.components[i].e as i64)).is_integer())
        .collect()
}

/// `max{ℓ : E^{ℓ+1} ≠ ∅}` for the components in `I_α`, or `-1` if `I_α = ∅`.
pub fn max_weight_level(r: &ResolutionData, alpha: &Rat) -> i64 {
    let s = integral_components(r, alpha);
    r.deepest_within(&s).first().map_or(0, BTreeSet::len) as i64 - 1
}

/// Deepest intersections of the components computing the log canonical
/// threshold. Requires every component with `e_i·lct ∈ ℤ` to compute it.
pub fn minimal_lc_center(r: &ResolutionData) -> Result<Vec<BTreeSet<usize>>> {
    let c = lct(r)?;
    let s = integral_components(r, &-c.clone());
    for &i in &s {
        let comp = &r.components[i];
        if comp.log_discrepancy_ratio() != c {
            return Err(Error::Hypothesis {
                index: i,
                label: comp.label.clone(),
                reason: format!(
                    "e·lct = {} is integral but (k+1)/e = {} differs from lct = {}",
                    Rat::int(comp.e as i64) * &c,
                    comp.log_discrepancy_ratio(),
                    c
                ),
            });
        }
    }
    Ok(r.deepest_within(&s))
}

/// `W_ℓ I_{0,α}` on the local model `div(x^{m_vec})`:
/// `I_{0,α} · I_{E^{ℓ+2}}`, where `E^q` is the union of the `q`-fold
/// intersections of the components with `α·m_i ∈ ℤ`.
pub fn weighted_nc_local(m_vec: &[u32], alpha: &Rat, level: i64) -> Result<MonIdeal> {
    if alpha < &Rat::int(-1) || !alpha.is_negative() {
        return Err(Error::Range {
            value: Box::new(alpha.clone()),
            range: "[-1, 0)".into(),
        });
    }
    if level < -1 {
        return Err(Error::invalid(format!("weight level {level} below -1")));
    }
    let n = m_vec.len();
    let base = nc_ideal(m_vec, 0, alpha)?.ideal;
    let integral: Vec<usize> = (0..n)
        .filter(|&i| m_vec[i] > 0 && (alpha * Rat::int(m_vec[i] as i64)).is_integer())
        .collect();
    let q = (level + 2) as usize;
    if q > integral.len() {
        return Ok(base);
    }
    // a monomial vanishes on every q-fold intersection iff it involves all but
    // at most q-1 of the integral components
    let size = integral.len() - q + 1;
    let mut gens = Vec::new();
    subsets(&integral, size, &mut Vec::new(), 0, &mut |s| {
        let mut e = vec![0u32; n];
        for &i in s {
            e[i] = 1;
        }
        gens.push(ExpVec::new(e));
    });
    base.product(&MonIdeal::normalize(gens, n)?)
}

fn subsets(
    items: &[usize],
    size: usize,
    cur: &mut Vec<usize>,
    from: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if cur.len() == size {
        f(cur);
        return;
    }
    for i in from..items.len() {
        cur.push(items[i]);
        subsets(items, size, cur, i + 1, f);
        cur.pop();
    }
}
