use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::monomial::MonIdeal;
use crate::rat::Rat;
use crate::spectrum::VSpectrum;

/// Spectrum of `f(x) + g(y)` from the spectra of `f` and `g`, with the
/// variables of `v1` first.
///
/// `Ṽ^c = Σ_{c1+c2=c} Ṽ^{c1}(f) ⊠ Ṽ^{c2}(g)`. Both factors are constant on
/// left-open intervals between their jumps, so the sum only needs `c1` equal
/// to `c` or to a jump of `f` below `c`. The result can only jump at jumps of
/// either factor or at sums of one jump from each.
pub fn spectrum_thom_sebastiani(v1: &VSpectrum, v2: &VSpectrum, cutoff: &Rat) -> Result<VSpectrum> {
    for v in [v1, v2] {
        if cutoff > v.cutoff() {
            return Err(Error::CutoffExceeded {
                requested: Box::new(cutoff.clone()),
                cutoff: Box::new(v.cutoff().clone()),
            });
        }
    }
    if !cutoff.is_positive() {
        return Err(Error::invalid(format!("cutoff {cutoff} must be positive")));
    }
    let j1 = v1.jumping_numbers();
    let j2 = v2.jumping_numbers();
    let mut cands: BTreeSet<Rat> = j1.iter().chain(&j2).cloned().collect();
    for a in &j1 {
        for b in &j2 {
            cands.insert(a + b);
        }
    }
    let n = v1.n() + v2.n();
    let unit2 = MonIdeal::unit(v2.n());
    let breakpoints = cands
        .into_iter()
        .filter(|c| c <= cutoff)
        .map(|c| {
            let mut acc = v1.v_at(&c)?.box_product(&unit2);
            for s1 in j1.iter().filter(|&s1| s1 < &c) {
                let right = v2.v_after(&(&c - s1))?;
                acc = acc.sum(&v1.v_at(s1)?.box_product(&right))?;
            }
            Ok((c, acc))
        })
        .collect::<Result<Vec<_>>>()?;
    VSpectrum::from_breakpoints(n, cutoff.clone(), breakpoints)
}
