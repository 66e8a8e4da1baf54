use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::monomial::{ExpVec, MonIdeal};
use crate::rat::Rat;
use crate::spectrum::HmIdeal;

/// `I_{k,α}` of the normal crossing divisor `div(x^{m_vec})`, `α ≤ 0`.
///
/// For `α < 0` this is `x^a · I_sing^k` with
/// `a_i = k·m_i - k - ⌈(α+ε)·m_i⌉ = k·m_i - k - ⌊α·m_i⌋ - 1` on the components
/// with `m_i > 0`, and `I_sing` generated by `∏_{j≠i} x_j` for each such `i`.
/// `α = 0` is reduced to `α = -1` through `I_{k,0} = I_{k-1,-1}`.
pub fn nc_ideal(m_vec: &[u32], k: u32, alpha: &Rat) -> Result<HmIdeal> {
    let n = m_vec.len();
    if m_vec.iter().all(|&m| m == 0) {
        return Err(Error::invalid(
            "normal crossing divisor needs a positive multiplicity",
        ));
    }
    if alpha.is_positive() {
        return Err(Error::Range {
            value: Box::new(alpha.clone()),
            range: "(-∞, 0]".into(),
        });
    }
    if alpha.is_zero() {
        return match k {
            0 => Ok(HmIdeal::plain(MonIdeal::unit(n))),
            _ => nc_ideal(m_vec, k - 1, &Rat::int(-1)),
        };
    }
    let mut exps = Vec::with_capacity(n);
    for &m in m_vec {
        if m == 0 {
            exps.push(0);
            continue;
        }
        let m = m as i64;
        let k = k as i64;
        let a = k * m - k - (alpha * Rat::int(m)).floor_i64()? - 1;
        exps.push(u32::try_from(a).map_err(|_| Error::Overflow)?);
    }
    let divisorial = MonIdeal::principal(ExpVec::new(exps));
    let ideal = divisorial.product(&singular_locus(m_vec).power(k)?)?;
    Ok(HmIdeal::plain(ideal))
}

/// Ideal of the singular locus of the reduced divisor: `(∏_{j≠i} x_j)` over
/// the components `i` that are present.
fn singular_locus(m_vec: &[u32]) -> MonIdeal {
    let n = m_vec.len();
    let support: Vec<usize> = (0..n).filter(|&i| m_vec[i] > 0).collect();
    let gens = support
        .iter()
        .map(|&i| {
            let mut e = vec![0u32; n];
            for &j in &support {
                if j != i {
                    e[j] = 1;
                }
            }
            ExpVec::new(e)
        })
        .collect();
    MonIdeal::normalize(gens, n).expect("generators built with length n")
}

/// Both sides of `I_{k,α}(pD) = I_{k,pα}(D) · 𝒪(-(p-1)kD)` for `D = div(x^m_base)`:
/// the left computed directly, the right through the twist.
pub fn power_scale_check(
    m_base: &ExpVec,
    p: u32,
    k: u32,
    alpha: &Rat,
) -> Result<(MonIdeal, MonIdeal)> {
    if p == 0 {
        return Err(Error::invalid("power must be positive"));
    }
    let scaled = m_base.checked_scale(p)?;
    let left = nc_ideal(scaled.as_slice(), k, alpha)?.ideal;
    let twist = m_base.checked_scale((p - 1).checked_mul(k).ok_or(Error::Overflow)?)?;
    let right = nc_ideal(m_base.as_slice(), k, &(alpha * Rat::from(p as i64)))?
        .ideal
        .times_monomial(&twist)?;
    Ok((left, right))
}

/// Reflexive-hull part of `I_{k,α}` for the ℚ-divisor `Σ c_i·div(x_i)`:
/// clear denominators with the least `N`, take `I_{k,α/N}(Σ N·c_i·div(x_i))`
/// and remove the divisorial part, leaving an ideal with generator gcd 1.
pub fn qdivisor_ideal(coeffs: &[Rat], k: u32, alpha: &Rat) -> Result<MonIdeal> {
    if let Some(c) = coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::Range {
            value: Box::new(c.clone()),
            range: "[0, ∞)".into(),
        });
    }
    if coeffs.iter().all(Rat::is_zero) {
        return Err(Error::invalid("ℚ-divisor needs a positive coefficient"));
    }
    let big_n = Rat::common_denominator(coeffs);
    let scale = Rat::from_bigint(big_n);
    let m_vec = coeffs
        .iter()
        .map(|c| {
            let v: BigInt = (c * &scale).floor();
            v.to_u32().ok_or(Error::Overflow)
        })
        .collect::<Result<Vec<_>>>()?;
    let h = nc_ideal(&m_vec, k, &(alpha / &scale))?;
    h.ideal.strip_divisorial()
}
