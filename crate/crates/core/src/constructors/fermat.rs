use crate::error::{Error, Result};
use crate::monomial::{max_ideal_power, ExpVec, MonIdeal};
use crate::rat::Rat;
use crate::spectrum::VSpectrum;

/// Spectrum of the Fermat cone `div(z_1^m + … + z_n^m)` up to `cutoff`.
///
/// Ṽ^β is generated by `J_F^a · z^γ` over `a ≥ 0` and `γ` with every
/// `γ_j ≤ m-2` (a monomial basis of the Milnor algebra), subject to
/// `m·a + |γ| ≥ m·β - n`. Jumps can only sit at `β = j/m` with `j ≥ n`.
pub fn spectrum_ordinary_fermat(n: usize, m: u32, cutoff: &Rat) -> Result<VSpectrum> {
    if n == 0 {
        return Err(Error::invalid("Fermat cone needs at least one variable"));
    }
    if m < 2 {
        return Err(Error::invalid("Fermat cone needs degree at least 2"));
    }
    if !cutoff.is_positive() {
        return Err(Error::invalid(format!("cutoff {cutoff} must be positive")));
    }
    let top = (cutoff * Rat::int(m as i64)).floor_i64()?;
    let first = n as i64;
    let breakpoints = (first..=top)
        .map(|j| {
            let t = u32::try_from(j - first + 1).map_err(|_| Error::Overflow)?;
            Ok((Rat::new(j, m as i64), leading_ideal(n, m, t)?))
        })
        .collect::<Result<Vec<_>>>()?;
    VSpectrum::from_breakpoints(n, cutoff.clone(), breakpoints)
}

/// The ideal `Σ_a J_F^a · (z^γ : γ_j ≤ m-2, m·a + |γ| ≥ t)`.
fn leading_ideal(n: usize, m: u32, t: u32) -> Result<MonIdeal> {
    let mut acc = MonIdeal::zero(n);
    for a in 0..=t.div_ceil(m) {
        let rest = t.saturating_sub(m * a);
        let term = jacobian_power(n, m, a)?.product(&basis_degree(n, m, rest)?)?;
        acc = acc.sum(&term)?;
    }
    Ok(acc)
}

/// `J_F^a = (z_1^{m-1}, …, z_n^{m-1})^a`.
fn jacobian_power(n: usize, m: u32, a: u32) -> Result<MonIdeal> {
    let gens = max_ideal_power(n, a)
        .gens()
        .iter()
        .map(|g| g.checked_scale(m - 1))
        .collect::<Result<Vec<_>>>()?;
    MonIdeal::normalize(gens, n)
}

/// Monomials of degree `s` with every exponent at most `m-2`.
fn basis_degree(n: usize, m: u32, s: u32) -> Result<MonIdeal> {
    let mut gens = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut cur, 0, s, m - 2, &mut gens);
    MonIdeal::normalize(gens, n)
}

fn fill(cur: &mut Vec<u32>, j: usize, left: u32, cap: u32, out: &mut Vec<ExpVec>) {
    if j + 1 == cur.len() {
        if left <= cap {
            cur[j] = left;
            out.push(ExpVec::new(cur.clone()));
        }
        return;
    }
    for e in 0..=left.min(cap) {
        cur[j] = e;
        fill(cur, j + 1, left - e, cap, out);
    }
    cur[j] = 0;
}
