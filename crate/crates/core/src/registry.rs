//! Named divisor classes that can be turned into spectra from a parameter string.

use crate::constructors::{
    spectrum_diagonal, spectrum_one_var, spectrum_ordinary_fermat, spectrum_thom_sebastiani,
};
use crate::error::{Error, Result};
use crate::monomial::ExpVec;
use crate::rat::Rat;
use crate::spectrum::VSpectrum;

/// A spectrum together with the defining equation when it is a monomial.
#[derive(Clone, Debug)]
pub struct Germ {
    pub spectrum: VSpectrum,
    pub equation: Option<ExpVec>,
}

pub trait SpectrumClass: Sync {
    fn name(&self) -> &'static str;

    /// Shape of the parameter string.
    fn usage(&self) -> &'static str;

    /// Minimal exponent read off the parameters; `None` for a smooth germ.
    fn minimal_exponent(&self, params: &str) -> Result<Option<Rat>>;

    fn build(&self, params: &str, cutoff: &Rat) -> Result<Germ>;
}

pub fn parse_naturals(params: &str) -> Result<Vec<u32>> {
    params
        .split(',')
        .map(str::trim)
        .map(|s| {
            s.parse::<u32>()
                .map_err(|_| Error::invalid(format!("`{s}` is not a natural number")))
        })
        .collect()
}

fn exactly<const N: usize>(class: &str, params: &str) -> Result<[u32; N]> {
    let v = parse_naturals(params)?;
    v.try_into().map_err(|v: Vec<u32>| {
        Error::invalid(format!("{class} takes {N} parameter(s), got {}", v.len()))
    })
}

fn diagonal_min_exp(m_vec: &[u32]) -> Option<Rat> {
    if m_vec.contains(&1) {
        return None;
    }
    Some(m_vec.iter().map(|&m| Rat::new(1, m as i64)).sum())
}

struct Diagonal;

impl SpectrumClass for Diagonal {
    fn name(&self) -> &'static str {
        "diagonal"
    }

    fn usage(&self) -> &'static str {
        "m1,m2,... for z1^m1 + z2^m2 + ..."
    }

    fn minimal_exponent(&self, params: &str) -> Result<Option<Rat>> {
        let m = parse_naturals(params)?;
        if m.contains(&0) {
            return Err(Error::invalid("diagonal exponents must be positive"));
        }
        Ok(diagonal_min_exp(&m))
    }

    fn build(&self, params: &str, cutoff: &Rat) -> Result<Germ> {
        let m = parse_naturals(params)?;
        let equation = match m.as_slice() {
            [m] => Some(ExpVec::new(vec![*m])),
            _ => None,
        };
        Ok(Germ {
            spectrum: spectrum_diagonal(&m, cutoff)?,
            equation,
        })
    }
}

struct Power;

impl SpectrumClass for Power {
    fn name(&self) -> &'static str {
        "power"
    }

    fn usage(&self) -> &'static str {
        "m for x^m"
    }

    fn minimal_exponent(&self, params: &str) -> Result<Option<Rat>> {
        let [m] = exactly::<1>(self.name(), params)?;
        if m == 0 {
            return Err(Error::invalid("power must be positive"));
        }
        Ok(diagonal_min_exp(&[m]))
    }

    fn build(&self, params: &str, cutoff: &Rat) -> Result<Germ> {
        let [m] = exactly::<1>(self.name(), params)?;
        Ok(Germ {
            spectrum: spectrum_one_var(m, cutoff)?,
            equation: Some(ExpVec::new(vec![m])),
        })
    }
}

struct FermatCone;

impl SpectrumClass for FermatCone {
    fn name(&self) -> &'static str {
        "fermat-cone"
    }

    fn usage(&self) -> &'static str {
        "n,m for z1^m + ... + zn^m"
    }

    fn minimal_exponent(&self, params: &str) -> Result<Option<Rat>> {
        let [n, m] = exactly::<2>(self.name(), params)?;
        if n == 0 || m < 2 {
            return Err(Error::invalid("Fermat cone needs n ≥ 1 and m ≥ 2"));
        }
        Ok(Some(Rat::new(n as i64, m as i64)))
    }

    fn build(&self, params: &str, cutoff: &Rat) -> Result<Germ> {
        let [n, m] = exactly::<2>(self.name(), params)?;
        Ok(Germ {
            spectrum: spectrum_ordinary_fermat(n as usize, m, cutoff)?,
            equation: None,
        })
    }
}

/// Sum of germs in separate variables, written `class:params+class:params+…`.
struct ThomSebastiani;

impl ThomSebastiani {
    fn factors(params: &str) -> Result<Vec<(&'static dyn SpectrumClass, &str)>> {
        let parts: Vec<&str> = params.split('+').map(str::trim).collect();
        if parts.len() < 2 {
            return Err(Error::invalid(
                "ts needs at least two factors joined by `+`",
            ));
        }
        parts
            .into_iter()
            .map(|p| {
                let (name, args) = p
                    .split_once(':')
                    .ok_or_else(|| Error::invalid(format!("factor `{p}` is not class:params")))?;
                let class = lookup(name.trim())?;
                if class.name() == "ts" {
                    return Err(Error::invalid("ts factors cannot themselves be ts"));
                }
                Ok((class, args))
            })
            .collect()
    }
}

impl SpectrumClass for ThomSebastiani {
    fn name(&self) -> &'static str {
        "ts"
    }

    fn usage(&self) -> &'static str {
        "class:params+class:params, e.g. diagonal:2,3+power:2"
    }

    fn minimal_exponent(&self, params: &str) -> Result<Option<Rat>> {
        let mut total = Some(Rat::zero());
        for (class, args) in Self::factors(params)? {
            total = match (total, class.minimal_exponent(args)?) {
                (Some(a), Some(b)) => Some(a + b),
                _ => None,
            };
        }
        Ok(total)
    }

    fn build(&self, params: &str, cutoff: &Rat) -> Result<Germ> {
        let mut acc: Option<VSpectrum> = None;
        for (class, args) in Self::factors(params)? {
            let next = class.build(args, cutoff)?.spectrum;
            acc = Some(match acc {
                None => next,
                Some(prev) => spectrum_thom_sebastiani(&prev, &next, cutoff)?,
            });
        }
        Ok(Germ {
            spectrum: acc.expect("at least two factors"),
            equation: None,
        })
    }
}

pub static CLASSES: &[&dyn SpectrumClass] = &[&Diagonal, &FermatCone, &ThomSebastiani, &Power];

pub fn lookup(name: &str) -> Result<&'static dyn SpectrumClass> {
    CLASSES
        .iter()
        .copied()
        .find(|c| c.name() == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Minimal exponent plus 3, or 3 for a smooth germ.
pub fn default_cutoff(class: &dyn SpectrumClass, params: &str) -> Result<Rat> {
    Ok(class.minimal_exponent(params)?.unwrap_or_else(Rat::zero) + Rat::int(3))
}

pub fn build_germ(name: &str, params: &str, cutoff: Option<&Rat>) -> Result<Germ> {
    let class = lookup(name)?;
    let cutoff = match cutoff {
        Some(c) => c.clone(),
        None => default_cutoff(class, params)?,
    };
    class.build(params, &cutoff)
}
