//! Microlocal V-filtration spectra and the higher multiplier ideals they encode.
//!
//! A [`VSpectrum`] stores the step function `β ↦ Ṽ^β𝒪` on `(0, cutoff]` as a
//! list of jumps. Ṽ is constant on left-open, right-closed intervals: it is the
//! unit ideal on `(0, β_1]` and equals the ideal recorded with `β_i` on
//! `(β_i, β_{i+1}]`. For `α ≥ -1`, `I_{k,α} = Ṽ^{k-α}`; smaller `α` are reached
//! through periodicity with a power of the defining equation
//! (see [`VSpectrum::hmi_twisted`]).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Count, ExpVec, MonIdeal};
use crate::rat::Rat;

/// A jump of Ṽ at `beta`; `ideal` is the value just above `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Jump {
    pub beta: Rat,
    pub ideal: MonIdeal,
}

#[derive(Deserialize)]
struct RawSpectrum {
    n: usize,
    cutoff: Rat,
    jumps: Vec<Jump>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpectrum")]
pub struct VSpectrum {
    n: usize,
    cutoff: Rat,
    jumps: Vec<Jump>,
}

impl TryFrom<RawSpectrum> for VSpectrum {
    type Error = Error;

    fn try_from(raw: RawSpectrum) -> Result<Self> {
        VSpectrum::new(raw.n, raw.cutoff, raw.jumps)
    }
}

/// `f^t · ideal`, with `f` the defining equation of the germ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HmIdeal {
    pub f_power: u32,
    pub ideal: MonIdeal,
}

impl HmIdeal {
    pub fn plain(ideal: MonIdeal) -> Self {
        HmIdeal { f_power: 0, ideal }
    }
}

impl fmt::Display for HmIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.f_power {
            0 => f.write_str(&self.ideal.render()),
            t => write!(f, "f^{} * ({})", t, self.ideal.render()),
        }
    }
}

impl VSpectrum {
    /// Validates the step-function invariants: `0 < β_1 < β_2 < … ≤ cutoff` and
    /// strict descent `𝒪 ⊋ I_1 ⊋ I_2 ⊋ …`.
    pub fn new(n: usize, cutoff: Rat, jumps: Vec<Jump>) -> Result<VSpectrum> {
        if !cutoff.is_positive() {
            return Err(Error::invalid(format!("cutoff {cutoff} must be positive")));
        }
        let mut prev_beta = Rat::zero();
        let mut prev_ideal = MonIdeal::unit(n);
        for j in &jumps {
            if j.ideal.n() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: j.ideal.n(),
                });
            }
            if j.beta <= prev_beta {
                return Err(Error::invalid(format!(
                    "jump {} is not strictly above the previous index {}",
                    j.beta, prev_beta
                )));
            }
            if j.beta > cutoff {
                return Err(Error::invalid(format!(
                    "jump {} lies beyond the cutoff {}",
                    j.beta, cutoff
                )));
            }
            if !j.ideal.is_subset(&prev_ideal)? || j.ideal == prev_ideal {
                return Err(Error::invalid(format!(
                    "ideal after {} does not strictly descend",
                    j.beta
                )));
            }
            prev_beta = j.beta.clone();
            prev_ideal = j.ideal.clone();
        }
        Ok(VSpectrum { n, cutoff, jumps })
    }

    /// Build from sorted candidate breakpoints, each with the ideal just above
    /// it; candidates where the ideal does not change are dropped.
    pub fn from_breakpoints(
        n: usize,
        cutoff: Rat,
        breakpoints: impl IntoIterator<Item = (Rat, MonIdeal)>,
    ) -> Result<VSpectrum> {
        let mut jumps: Vec<Jump> = Vec::new();
        let mut current = MonIdeal::unit(n);
        for (beta, ideal) in breakpoints {
            if ideal != current {
                current = ideal.clone();
                jumps.push(Jump { beta, ideal });
            }
        }
        VSpectrum::new(n, cutoff, jumps)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cutoff(&self) -> &Rat {
        &self.cutoff
    }

    pub fn jumps(&self) -> &[Jump] {
        &self.jumps
    }

    /// `Ṽ^β` for `0 < β ≤ cutoff`.
    pub fn v_at(&self, beta: &Rat) -> Result<MonIdeal> {
        if !beta.is_positive() || beta > &self.cutoff {
            return Err(Error::Range {
                value: Box::new(beta.clone()),
                range: format!("(0, {}]", self.cutoff),
            });
        }
        Ok(self
            .jumps
            .iter()
            .take_while(|j| &j.beta < beta)
            .last()
            .map_or_else(|| MonIdeal::unit(self.n), |j| j.ideal.clone()))
    }

    /// Value of Ṽ just above `β`, for `0 < β < cutoff`.
    pub fn v_after(&self, beta: &Rat) -> Result<MonIdeal> {
        if !beta.is_positive() || beta >= &self.cutoff {
            return Err(Error::Range {
                value: Box::new(beta.clone()),
                range: format!("(0, {})", self.cutoff),
            });
        }
        Ok(self
            .jumps
            .iter()
            .take_while(|j| &j.beta <= beta)
            .last()
            .map_or_else(|| MonIdeal::unit(self.n), |j| j.ideal.clone()))
    }

    fn index(&self, k: u32, alpha: &Rat) -> Result<Rat> {
        if alpha < &Rat::int(-1) {
            return Err(Error::Range {
                value: Box::new(alpha.clone()),
                range: "[-1, ∞) (use the twisted form below -1)".into(),
            });
        }
        Ok(Rat::from(k as i64) - alpha)
    }

    /// `I_{k,α}` for `α ≥ -1`.
    pub fn hmi(&self, k: u32, alpha: &Rat) -> Result<MonIdeal> {
        let beta = self.index(k, alpha)?;
        if !beta.is_positive() {
            return Ok(MonIdeal::unit(self.n));
        }
        if beta > self.cutoff {
            return Err(Error::CutoffExceeded {
                requested: Box::new(beta),
                cutoff: Box::new(self.cutoff.clone()),
            });
        }
        self.v_at(&beta)
    }

    /// `I_{k,<α}` for `α ≥ -1`.
    pub fn hmi_lt(&self, k: u32, alpha: &Rat) -> Result<MonIdeal> {
        let beta = self.index(k, alpha)?;
        if !beta.is_positive() {
            return Ok(MonIdeal::unit(self.n));
        }
        if beta >= self.cutoff {
            return Err(Error::CutoffExceeded {
                requested: Box::new(beta),
                cutoff: Box::new(self.cutoff.clone()),
            });
        }
        self.v_after(&beta)
    }

    /// `I_{k,α}` for arbitrary `α`, written as `f^t · I_{k,α+t}` with
    /// `-1 ≤ α+t < 0` when `α < -1` (and `t = 0` otherwise). When the defining
    /// equation is the monomial `z^f_exps`, the twist is folded into the ideal.
    pub fn hmi_twisted(&self, f_exps: Option<&ExpVec>, k: u32, alpha: &Rat) -> Result<HmIdeal> {
        let t = (-Rat::one() - alpha).ceil_i64()?.max(0);
        let t = u32::try_from(t).map_err(|_| Error::Overflow)?;
        let ideal = self.hmi(k, &(alpha + Rat::from(t as i64)))?;
        match f_exps {
            Some(f) if t > 0 => Ok(HmIdeal::plain(ideal.times_monomial(&f.checked_scale(t)?)?)),
            _ => Ok(HmIdeal { f_power: t, ideal }),
        }
    }

    pub fn jumping_numbers(&self) -> Vec<Rat> {
        self.jumps.iter().map(|j| j.beta.clone()).collect()
    }

    /// The first jump, i.e. the minimal exponent. `None` when Ṽ is the unit
    /// ideal all the way to the cutoff (for instance a smooth germ).
    pub fn minimal_exponent(&self) -> Option<Rat> {
        self.jumps.first().map(|j| j.beta.clone())
    }

    /// `dim 𝒢_{k,α} = dim I_{k,α} / I_{k,<α}` for `α ≥ -1`.
    pub fn graded_dim(&self, k: u32, alpha: &Rat) -> Result<Count> {
        let upper = self.hmi(k, alpha)?;
        let lower = self.hmi_lt(k, alpha)?;
        upper.difference_count(&lower)
    }

    /// Bernstein–Sato root classes in `[-1, 0)`: `-β` reduced mod ℤ for each
    /// jump, together with the class of `-1`.
    pub fn bs_root_classes(&self) -> Vec<Rat> {
        let mut classes: BTreeSet<Rat> = self
            .jumps
            .iter()
            .map(|j| Rat::from_bigint(j.beta.ceil()) - Rat::one() - &j.beta)
            .collect();
        classes.insert(Rat::int(-1));
        classes.into_iter().collect()
    }

    /// The same filtration with a smaller cutoff.
    pub fn truncated(&self, cutoff: &Rat) -> Result<VSpectrum> {
        if cutoff > &self.cutoff {
            return Err(Error::CutoffExceeded {
                requested: Box::new(cutoff.clone()),
                cutoff: Box::new(self.cutoff.clone()),
            });
        }
        let jumps = self
            .jumps
            .iter()
            .filter(|j| &j.beta <= cutoff)
            .cloned()
            .collect();
        VSpectrum::new(self.n, cutoff.clone(), jumps)
    }

    /// Relabel variables (new variable `i` is old variable `perm[i]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<VSpectrum> {
        let jumps = self
            .jumps
            .iter()
            .map(|j| {
                Ok(Jump {
                    beta: j.beta.clone(),
                    ideal: j.ideal.permuted(perm)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        VSpectrum::new(self.n, self.cutoff.clone(), jumps)
    }

    /// Rows `(interval, generators)` covering `(0, cutoff]`.
    pub fn table_rows(&self) -> Vec<(String, String)> {
        let mut rows = Vec::new();
        let mut lo = Rat::zero();
        let mut current = MonIdeal::unit(self.n);
        for j in &self.jumps {
            rows.push((format!("({}, {}]", lo, j.beta), current.render()));
            lo = j.beta.clone();
            current = j.ideal.clone();
        }
        if lo < self.cutoff {
            rows.push((format!("({}, {}]", lo, self.cutoff), current.render()));
        }
        rows
    }
}
