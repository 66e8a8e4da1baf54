//! Independent reference computations. Nothing here calls the constructors.
#![allow(dead_code)]

use himul_core::{ExpVec, MonIdeal, Rat};

/// Calls `f` on every vector `v` with `0 ≤ v_i ≤ bounds[i]`.
pub fn for_each_in_box(bounds: &[u32], mut f: impl FnMut(&[u32])) {
    let n = bounds.len();
    let mut v = vec![0u32; n];
    loop {
        f(&v);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if v[i] < bounds[i] {
                v[i] += 1;
                break;
            }
            v[i] = 0;
            i += 1;
        }
    }
}

pub fn ideal_from(n: usize, gens: Vec<Vec<u32>>) -> MonIdeal {
    MonIdeal::normalize(gens.into_iter().map(ExpVec::new).collect(), n).unwrap()
}

/// `ρ(μ) = Σ (μ_j + 1 + ⌊μ_j/(m_j-1)⌋)/m_j`, all `m_j ≥ 2`.
pub fn rho(m_vec: &[u32], mu: &[u32]) -> Rat {
    m_vec
        .iter()
        .zip(mu)
        .map(|(&m, &t)| Rat::new((t + 1 + t / (m - 1)) as i64, m as i64))
        .sum()
}

fn rho_box(m_vec: &[u32], beta: &Rat) -> Vec<u32> {
    m_vec
        .iter()
        .map(|&m| {
            (beta.clone() * Rat::int(m as i64))
                .ceil_i64()
                .unwrap()
                .max(0) as u32
                + 1
        })
        .collect()
}

/// `{z^μ : ρ(μ) ≥ β}` by exhaustive search.
pub fn diagonal_v_at(m_vec: &[u32], beta: &Rat) -> MonIdeal {
    let mut gens = Vec::new();
    for_each_in_box(&rho_box(m_vec, beta), |mu| {
        if &rho(m_vec, mu) >= beta {
            gens.push(mu.to_vec());
        }
    });
    ideal_from(m_vec.len(), gens)
}

/// `(μ, ρ(μ))` over the box that holds every generator of `{ρ ≥ β}`, `β ≤ bound`.
pub fn diagonal_rho_table(m_vec: &[u32], bound: &Rat) -> Vec<(Vec<u32>, Rat)> {
    let mut table = Vec::new();
    for_each_in_box(&rho_box(m_vec, bound), |mu| {
        table.push((mu.to_vec(), rho(m_vec, mu)))
    });
    table
}

/// `{z^μ : ρ(μ) ≥ β}` from a precomputed table.
pub fn v_at_from_table(n: usize, table: &[(Vec<u32>, Rat)], beta: &Rat) -> MonIdeal {
    let gens = table
        .iter()
        .filter(|(_, r)| r >= beta)
        .map(|(mu, _)| mu.clone())
        .collect();
    ideal_from(n, gens)
}

/// Distinct values of `ρ` that are at most `bound`.
pub fn diagonal_rho_values(m_vec: &[u32], bound: &Rat) -> Vec<Rat> {
    let mut vals = Vec::new();
    for_each_in_box(&rho_box(m_vec, bound), |mu| {
        let r = rho(m_vec, mu);
        if &r <= bound {
            vals.push(r);
        }
    });
    vals.sort();
    vals.dedup();
    vals
}

/// Howald: `z^v ∈ J((c-ε)·div(x^m))` iff `v_i + 1 > (c-ε)·m_i` for all `i`,
/// i.e. `v_i + 1 ≥ c·m_i`. With `strict`, the multiplier ideal of `(c+ε)`,
/// i.e. `v_i + 1 > c·m_i`. Here `c = -α`.
pub fn howald(m_vec: &[u32], alpha: &Rat, strict: bool) -> MonIdeal {
    let c = -alpha.clone();
    let reach = c.ceil_i64().unwrap().max(0) as u32 + 1;
    let bounds: Vec<u32> = m_vec.iter().map(|&m| reach * m + 1).collect();
    let mut gens = Vec::new();
    for_each_in_box(&bounds, |v| {
        let ok = v.iter().zip(m_vec).all(|(&vi, &mi)| {
            let lhs = Rat::int(vi as i64 + 1);
            let rhs = c.clone() * Rat::int(mi as i64);
            if strict {
                lhs > rhs
            } else {
                lhs >= rhs
            }
        });
        if ok {
            gens.push(v.to_vec());
        }
    });
    ideal_from(m_vec.len(), gens)
}

/// `I_{k,α}(div(x^m)) = (x^{k(m-1) - ⌈(α+ε)m⌉})` for `m ≥ 2`, `α < 0`.
pub fn power_of_x(m: u32, k: u32, alpha: &Rat) -> MonIdeal {
    let am = alpha.clone() * Rat::int(m as i64);
    // ⌈(α+ε)m⌉ = ⌊αm⌋ + 1
    let up = am.floor_i64().unwrap() + 1;
    let e = k as i64 * (m as i64 - 1) - up;
    MonIdeal::principal(ExpVec::new(vec![e as u32]))
}

/// Number of monomials of degree `d` in `n` variables with exponents `≤ m-2`.
pub fn milnor_count(n: usize, m: u32, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let mut count = 0;
    for_each_in_box(&vec![m - 2; n], |v| {
        if v.iter().map(|&x| x as i64).sum::<i64>() == d {
            count += 1;
        }
    });
    count
}

/// `(z_1^m, …, z_n^m, z_1^{m-1}, …)`-style ideal `(𝔪^m, J_F)` for the Fermat form.
pub fn max_power_plus_jacobian(n: usize, m: u32) -> MonIdeal {
    let mut gens = Vec::new();
    for_each_in_box(&vec![m; n], |v| {
        if v.iter().sum::<u32>() == m {
            gens.push(v.to_vec());
        }
    });
    for i in 0..n {
        let mut g = vec![0; n];
        g[i] = m - 1;
        gens.push(g);
    }
    ideal_from(n, gens)
}

/// `𝔪^q` built from all monomials of degree `q`.
pub fn max_power(n: usize, q: u32) -> MonIdeal {
    let mut gens = Vec::new();
    for_each_in_box(&vec![q; n], |v| {
        if v.iter().sum::<u32>() == q {
            gens.push(v.to_vec());
        }
    });
    ideal_from(n, gens)
}

/// Relabel the variables of an `n1 + n2` ideal from `(second, first)` to
/// `(first, second)` order.
pub fn swap_blocks(n1: usize, n2: usize) -> Vec<usize> {
    (0..n1).map(|i| n2 + i).chain(0..n2).collect()
}

/// `∏_{j=1}^{m} (s + j/m)`: roots `-j/m`, reduced into `[-1, 0)`.
pub fn one_var_bs_classes(m: u32) -> Vec<Rat> {
    let mut v: Vec<Rat> = (1..=m)
        .map(|j| (-Rat::new(j as i64, m as i64)).fract() - Rat::one())
        .collect();
    v.sort();
    v.dedup();
    v
}
