//! Dimension-level invariants: Milnor algebra Hilbert functions, graded pieces
//! of ordinary singularities, primitive Hodge numbers of smooth hypersurfaces
//! and the integer arithmetic behind the numerical criteria.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Coefficients of a polynomial in `t`, index = degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPoly {
    coeffs: Vec<BigUint>,
}

impl HilbertPoly {
    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn top_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^d`; zero outside the support.
    pub fn coeff(&self, d: i64) -> BigUint {
        usize::try_from(d)
            .ok()
            .and_then(|d| self.coeffs.get(d).cloned())
            .unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }
}

/// Hilbert function of `S/J_F` for a smooth degree-`m` form in `n` variables:
/// `J_F` is a complete intersection of `n` forms of degree `m-1`, so the series
/// is `(1 + t + … + t^{m-2})^n` whatever `F` is.
pub fn milnor_hilbert(n: usize, m: u32) -> Result<HilbertPoly> {
    if n == 0 {
        return Err(Error::invalid("Milnor algebra needs at least one variable"));
    }
    if m < 2 {
        return Err(Error::invalid("Milnor algebra needs degree at least 2"));
    }
    let width = (m - 1) as usize;
    let mut coeffs = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); coeffs.len() + width - 1];
        for (d, c) in coeffs.iter().enumerate() {
            for slot in &mut next[d..d + width] {
                *slot += c;
            }
        }
        coeffs = next;
    }
    Ok(HilbertPoly { coeffs })
}

fn binomial(top: u64, k: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(top - i) / BigUint::from(i + 1);
    }
    acc
}

/// `dim 𝒢_{k,α}` at an ordinary singularity of multiplicity `m` in dimension
/// `n`, for `α ≥ -1`. Equivalence with `k - α ≥ n/m, mα ∈ ℤ` for nonvanishing
/// only holds when `n ≥ 3`; for `n = 2` this returns the value of the sum.
pub fn gdim_ordinary(n: usize, m: u32, k: u32, alpha: &Rat) -> Result<BigUint> {
    if n < 2 {
        return Err(Error::invalid(
            "ordinary singularities need dimension at least 2",
        ));
    }
    if alpha < &Rat::int(-1) {
        return Err(Error::Range {
            value: Box::new(alpha.clone()),
            range: "[-1, ∞)".into(),
        });
    }
    let h = milnor_hilbert(n, m)?;
    let m_i = m as i64;
    let scaled = alpha * Rat::int(m_i);
    if !scaled.is_integer() {
        return Ok(BigUint::zero());
    }
    let (mut k, mut ma) = (k as i64, scaled.to_i64().ok_or(Error::Overflow)?);
    if ma > 0 {
        // move α into (-1, 0] without changing k - α
        let t = ma.div_euclid(m_i) + 1;
        if t > k {
            return Ok(BigUint::zero());
        }
        k -= t;
        ma -= t * m_i;
    }
    let n_i = n as i64;
    // m(k - α) - n
    let excess = m_i * k - ma - n_i;
    if excess < 0 {
        return Ok(BigUint::zero());
    }
    let lo = (k - n_i - 1).max(0);
    let hi = (excess / m_i).min(k);
    let mut sum = BigUint::zero();
    for l in lo..=hi {
        let term = h.coeff(excess - m_i * l);
        if !term.is_zero() {
            sum += binomial((n_i + l - 1) as u64, l as u64) * term;
        }
    }
    Ok(sum)
}

/// `h^{n-1-k,k-1}_prim` of a smooth degree-`m` hypersurface in `P^{n-1}`
/// (`n` homogeneous variables), `1 ≤ k ≤ n-1`.
pub fn hodge_prim_hypersurface(n: usize, m: u32, k: u32) -> Result<BigUint> {
    if k < 1 || k as usize > n.saturating_sub(1) {
        return Err(Error::invalid(format!(
            "level {k} outside 1..={}",
            n.saturating_sub(1)
        )));
    }
    let h = milnor_hilbert(n, m)?;
    Ok(h.coeff(m as i64 * k as i64 - n as i64))
}

/// Dimension of the `p`-th eigenspace on the primitive cohomology piece of
/// level `k` of the `m`-fold cyclic cover branched along the hypersurface.
pub fn hodge_cyclic_eigenspace(n: usize, m: u32, k: u32, p: u32) -> Result<BigUint> {
    if p < 1 || p > m {
        return Err(Error::invalid(format!(
            "eigenvalue index {p} outside 1..={m}"
        )));
    }
    let h = milnor_hilbert(n, m)?;
    if p == m {
        return Ok(BigUint::zero());
    }
    Ok(h.coeff(m as i64 * (k as i64 + 1) - p as i64 - n as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Nontriviality {
    pub k: u64,
    pub r: u64,
    pub alpha: Rat,
}

/// `n - d = k·m + r` with `0 ≤ r < m`, and `α = -r/m`.
pub fn nontriviality_data(n: u64, d: u64, m: u64) -> Result<Nontriviality> {
    if d >= n {
        return Err(Error::invalid(format!(
            "stratum dimension {d} must be below {n}"
        )));
    }
    if m < 2 {
        return Err(Error::invalid("multiplicity must be at least 2"));
    }
    let diff = n - d;
    let r = diff % m;
    Ok(Nontriviality {
        k: diff / m,
        r,
        alpha: -Rat::new(r as i64, m as i64),
    })
}

/// Order `p` such that `I_{ℓ,α}` lies in the `p`-th symbolic power of the
/// ideal of a stratum of multiplicity `m` and codimension `codim`:
/// with `x = ⌈m(ℓ-α)⌉ - codim`, `p = x - ⌊x/m⌋`, and `0` when `x < 0`.
pub fn symbolic_power_exponent(codim: u64, m: u64, level: u64, alpha: &Rat) -> Result<u64> {
    if m < 2 {
        return Err(Error::invalid("multiplicity must be at least 2"));
    }
    if alpha < &Rat::int(-1) {
        return Err(Error::Range {
            value: Box::new(alpha.clone()),
            range: "[-1, ∞)".into(),
        });
    }
    let weight = (Rat::int(m as i64) * (Rat::int(level as i64) - alpha)).ceil_i64()?;
    let x = weight - codim as i64;
    if x < 0 {
        return Ok(0);
    }
    Ok((x - x / m as i64) as u64)
}

/// Lower bound on `k` in the containment criterion: `(r + 1 - ⌈r/m⌉)/(m-1) - 1`.
pub fn containment_threshold(r: u64, m: u64) -> Result<Rat> {
    if m < 2 {
        return Err(Error::invalid("multiplicity must be at least 2"));
    }
    let num = (r + 1 - r.div_ceil(m)) as i64;
    Ok(Rat::new(num, m as i64 - 1) - Rat::one())
}

/// `slope·d + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearInD {
    pub slope: i64,
    pub offset: i64,
}

impl LinearInD {
    pub fn eval(&self, d: i64) -> i64 {
        self.slope * d + self.offset
    }
}

impl fmt::Display for LinearInD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*d", self.slope)?;
        match self.offset {
            0 => Ok(()),
            o if o < 0 => write!(f, " - {}", -o),
            o => write!(f, " + {o}"),
        }
    }
}

/// Degree bound `⌈(n+1-⌈n/m⌉)/(m-1)⌉·d - n - 1` as a function of `d`.
pub fn independent_conditions(n: u64, m: u64) -> Result<LinearInD> {
    if n < 3 {
        return Err(Error::invalid("dimension must be at least 3"));
    }
    if m < 2 {
        return Err(Error::invalid("multiplicity must be at least 2"));
    }
    let slope = (n + 1 - n.div_ceil(m)).div_ceil(m - 1);
    Ok(LinearInD {
        slope: slope as i64,
        offset: -(n as i64) - 1,
    })
}

pub fn independent_conditions_degree(n: u64, m: u64, d: i64) -> Result<i64> {
    Ok(independent_conditions(n, m)?.eval(d))
}

/// Codimension of the locus of points of multiplicity `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Stratum {
    pub m: u64,
    pub codim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Stratum>", into = "Vec<Stratum>")]
pub struct StrataData(Vec<Stratum>);

impl TryFrom<Vec<Stratum>> for StrataData {
    type Error = Error;

    fn try_from(v: Vec<Stratum>) -> Result<Self> {
        StrataData::new(v)
    }
}

impl From<StrataData> for Vec<Stratum> {
    fn from(s: StrataData) -> Self {
        s.0
    }
}

impl StrataData {
    pub fn new(strata: Vec<Stratum>) -> Result<StrataData> {
        let mut seen = BTreeSet::new();
        for s in &strata {
            if s.m < 2 {
                return Err(Error::invalid(format!(
                    "stratum multiplicity {} below 2",
                    s.m
                )));
            }
            if s.codim < 1 {
                return Err(Error::invalid("stratum codimension must be positive"));
            }
            if !seen.insert(s.m) {
                return Err(Error::invalid(format!("multiplicity {} listed twice", s.m)));
            }
        }
        Ok(StrataData(strata))
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Result<StrataData> {
        StrataData::new(
            pairs
                .iter()
                .map(|&(m, codim)| Stratum { m, codim })
                .collect(),
        )
    }

    pub fn strata(&self) -> &[Stratum] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `min codim/m` over the strata.
pub fn min_exponent_upper(strata: &StrataData) -> Result<Rat> {
    strata
        .strata()
        .iter()
        .map(|s| Rat::new(s.codim as i64, s.m as i64))
        .min()
        .ok_or_else(|| Error::invalid("no strata given"))
}
