use num_integer::Integer;

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonIdeal};
use crate::rat::Rat;
use crate::spectrum::VSpectrum;

/// Spectrum of `div(z_1^{m_1} + … + z_n^{m_n})` up to `cutoff`.
///
/// Ṽ^β is spanned by the monomials `z^μ` with
/// `ρ(μ) = Σ_j (μ_j + 1 + ⌊μ_j/(m_j-1)⌋)/m_j ≥ β`. If some `m_j = 1` the germ
/// is smooth and the filtration is trivial.
pub fn spectrum_diagonal(m_vec: &[u32], cutoff: &Rat) -> Result<VSpectrum> {
    if m_vec.is_empty() {
        return Err(Error::invalid("diagonal class needs at least one exponent"));
    }
    if m_vec.contains(&0) {
        return Err(Error::invalid("diagonal exponents must be positive"));
    }
    let n = m_vec.len();
    if m_vec.contains(&1) {
        return VSpectrum::new(n, cutoff.clone(), vec![]);
    }
    if !cutoff.is_positive() {
        return Err(Error::invalid(format!("cutoff {cutoff} must be positive")));
    }
    let rho = Rho::new(m_vec)?;
    let bound = (cutoff * Rat::int(rho.l)).floor_i64()?;
    let cands = rho.candidates(bound)?;

    let mut values: Vec<i64> = cands.iter().map(|c| c.hi).filter(|&h| h <= bound).collect();
    values.sort_unstable();
    values.dedup();

    let breakpoints = values.into_iter().map(|c| {
        let gens = cands
            .iter()
            .filter(|g| g.lo <= c && c < g.hi)
            .map(|g| g.mu.clone())
            .collect();
        let ideal = MonIdeal::normalize(gens, n).expect("candidates have length n");
        (Rat::new(c, rho.l), ideal)
    });
    VSpectrum::from_breakpoints(n, cutoff.clone(), breakpoints)
}

/// Spectrum of `div(x^m)`.
pub fn spectrum_one_var(m: u32, cutoff: &Rat) -> Result<VSpectrum> {
    spectrum_diagonal(&[m], cutoff)
}

/// `ρ` scaled by `l = lcm(m_j)` so all values are integers.
struct Rho {
    m: Vec<i64>,
    l: i64,
}

/// A monomial that minimally generates `{ρ > c}` exactly for `lo ≤ c < hi`.
struct Candidate {
    mu: ExpVec,
    lo: i64,
    hi: i64,
}

impl Rho {
    fn new(m_vec: &[u32]) -> Result<Rho> {
        let m: Vec<i64> = m_vec.iter().map(|&m| m as i64).collect();
        let l = m
            .iter()
            .try_fold(1i64, |acc, &m| {
                let l = acc.lcm(&m);
                (l <= 1 << 40).then_some(l)
            })
            .ok_or(Error::Overflow)?;
        Ok(Rho { m, l })
    }

    fn coord(&self, j: usize, t: i64) -> i64 {
        let m = self.m[j];
        (self.l / m) * (t + 1 + t / (m - 1))
    }

    fn candidates(&self, bound: i64) -> Result<Vec<Candidate>> {
        let n = self.m.len();
        let base: Vec<i64> = (0..n).map(|j| self.coord(j, 0)).collect();
        let base_total: i64 = base.iter().sum();
        let mut out = Vec::new();
        let mut mu = vec![0i64; n];
        self.walk(0, base_total, bound, &mut mu, &mut out);
        if out.len() > 20_000_000 {
            return Err(Error::invalid("cutoff too large for enumeration"));
        }
        Ok(out)
    }

    /// Depth-first walk over exponent vectors. `total` is ρ of the current
    /// prefix with all later coordinates at zero. One step lowers ρ by at most
    /// `l`, so a prefix with `total > bound + l` has no admissible extension.
    fn walk(&self, j: usize, total: i64, bound: i64, mu: &mut Vec<i64>, out: &mut Vec<Candidate>) {
        if j == mu.len() {
            let lo = (0..mu.len())
                .filter(|&i| mu[i] > 0)
                .map(|i| total - self.coord(i, mu[i]) + self.coord(i, mu[i] - 1))
                .max()
                .unwrap_or(i64::MIN);
            if lo <= bound {
                out.push(Candidate {
                    mu: ExpVec::new(mu.iter().map(|&t| t as u32).collect()),
                    lo,
                    hi: total,
                });
            }
            return;
        }
        let zero = self.coord(j, 0);
        let mut t = 0;
        loop {
            let total_t = total - zero + self.coord(j, t);
            if total_t > bound + self.l {
                break;
            }
            mu[j] = t;
            self.walk(j + 1, total_t, bound, mu, out);
            t += 1;
        }
        mu[j] = 0;
    }
}
