//! Monomials, monomial ideals and staircase counting.
//!
//! A [`MonIdeal`] is stored as its minimal generating antichain, sorted
//! lexicographically. The unit ideal is `{0}` and the zero ideal has no
//! generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `z^ν`. The componentwise order is divisibility.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExpVec(Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// `z_i^e` in `n` variables.
    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// `self | other` as monomials.
    pub fn divides(&self, other: &ExpVec) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExpVec) -> Result<ExpVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExpVec)
    }

    pub fn checked_scale(&self, t: u32) -> Result<ExpVec> {
        self.0
            .iter()
            .map(|a| a.checked_mul(t).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(ExpVec)
    }

    /// Componentwise minimum (gcd of monomials).
    pub fn meet(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// Componentwise saturating difference (quotient by a divisor).
    pub fn saturating_sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn concat(&self, other: &ExpVec) -> ExpVec {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ExpVec(v)
    }

    /// Exponent vector whose `i`-th entry is `self[perm[i]]`.
    pub fn permuted(&self, perm: &[usize]) -> ExpVec {
        ExpVec(perm.iter().map(|&j| self.0[j]).collect())
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.len() == n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: n,
                got: self.len(),
            })
        }
    }

    /// Render as `x^2*y`, `1` for the empty monomial.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    names[i].clone()
                } else {
                    format!("{}^{}", names[i], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl From<Vec<u32>> for ExpVec {
    fn from(v: Vec<u32>) -> Self {
        ExpVec(v)
    }
}

/// Variable names used for display: `x, y, z` up to three variables, `z1..zn` beyond.
pub fn variable_names(n: usize) -> Vec<String> {
    if n <= 3 {
        ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("z{i}")).collect()
    }
}

/// Number of monomials in a (possibly unbounded) staircase region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(c) => Some(c),
            Count::Infinite => None,
        }
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(c) => write!(f, "{c}"),
            Count::Infinite => f.write_str("INFINITE"),
        }
    }
}

#[derive(Deserialize)]
struct RawIdeal {
    n: usize,
    gens: Vec<ExpVec>,
}

/// Monomial ideal in `n` variables, kept as a sorted minimal generating antichain.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawIdeal")]
pub struct MonIdeal {
    n: usize,
    gens: Vec<ExpVec>,
}

impl TryFrom<RawIdeal> for MonIdeal {
    type Error = Error;

    fn try_from(raw: RawIdeal) -> Result<Self> {
        MonIdeal::normalize(raw.gens, raw.n)
    }
}

impl MonIdeal {
    /// Minimal antichain generating the same ideal as `gens`.
    pub fn normalize(gens: Vec<ExpVec>, n: usize) -> Result<MonIdeal> {
        for g in &gens {
            g.check_len(n)?;
        }
        Ok(Self::normalize_unchecked(gens, n))
    }

    fn normalize_unchecked(mut gens: Vec<ExpVec>, n: usize) -> MonIdeal {
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<ExpVec> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        kept.sort();
        MonIdeal { n, gens: kept }
    }

    pub fn unit(n: usize) -> MonIdeal {
        MonIdeal {
            n,
            gens: vec![ExpVec::zero(n)],
        }
    }

    pub fn zero(n: usize) -> MonIdeal {
        MonIdeal { n, gens: vec![] }
    }

    pub fn principal(g: ExpVec) -> MonIdeal {
        MonIdeal {
            n: g.len(),
            gens: vec![g],
        }
    }

    /// The maximal ideal `(z_1, ..., z_n)`.
    pub fn maximal(n: usize) -> MonIdeal {
        max_ideal_power(n, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[ExpVec] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_same(&self, other: &MonIdeal) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            })
        }
    }

    pub fn contains(&self, nu: &ExpVec) -> Result<bool> {
        nu.check_len(self.n)?;
        Ok(self.gens.iter().any(|g| g.divides(nu)))
    }

    pub fn sum(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_same(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::normalize_unchecked(gens, self.n))
    }

    pub fn product(&self, other: &MonIdeal) -> Result<MonIdeal> {
        self.check_same(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.checked_add(b)?);
            }
        }
        Ok(Self::normalize_unchecked(gens, self.n))
    }

    pub fn power(&self, e: u32) -> Result<MonIdeal> {
        let mut acc = MonIdeal::unit(self.n);
        for _ in 0..e {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ⊆ J`: every generator of `self` lies in `other`.
    pub fn is_subset(&self, other: &MonIdeal) -> Result<bool> {
        self.check_same(other)?;
        Ok(self
            .gens
            .iter()
            .all(|g| other.gens.iter().any(|h| h.divides(g))))
    }

    /// Multiply by the monomial `z^m`.
    pub fn times_monomial(&self, m: &ExpVec) -> Result<MonIdeal> {
        m.check_len(self.n)?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.checked_add(m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normalize_unchecked(gens, self.n))
    }

    /// gcd of the generators: the monomial (principal) part of the ideal.
    pub fn divisorial_part(&self) -> Result<ExpVec> {
        let mut it = self.gens.iter();
        let first = it.next().ok_or(Error::ZeroIdeal)?.clone();
        Ok(it.fold(first, |acc, g| acc.meet(g)))
    }

    /// Divide out [`divisorial_part`](Self::divisorial_part); the result has gcd 1.
    pub fn strip_divisorial(&self) -> Result<MonIdeal> {
        let d = self.divisorial_part()?;
        let gens = self.gens.iter().map(|g| g.saturating_sub(&d)).collect();
        Ok(Self::normalize_unchecked(gens, self.n))
    }

    /// External product `I(x) ⊠ J(y)` in `n1 + n2` variables.
    pub fn box_product(&self, other: &MonIdeal) -> MonIdeal {
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.concat(b));
            }
        }
        Self::normalize_unchecked(gens, self.n + other.n)
    }

    /// Relabel variables: new variable `i` is old variable `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<MonIdeal> {
        if perm.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        let gens = self.gens.iter().map(|g| g.permuted(perm)).collect();
        Ok(Self::normalize_unchecked(gens, self.n))
    }

    /// Number of monomials outside the ideal.
    pub fn colength(&self) -> Count {
        count_difference(&MonIdeal::unit(self.n), self)
    }

    /// Number of monomials in `self` that are not in `smaller`.
    pub fn difference_count(&self, smaller: &MonIdeal) -> Result<Count> {
        self.check_same(smaller)?;
        Ok(count_difference(self, smaller))
    }

    /// Generators rendered as `x^2, x*y, y^3`; `1` for the unit ideal and `0` for zero.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let names = variable_names(self.n);
        // descending lex reads as the usual x > y > z monomial order
        self.gens
            .iter()
            .rev()
            .map(|g| g.render(&names))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Debug for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

impl fmt::Display for MonIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render())
    }
}

/// `𝔪^q`: all exponent vectors of degree `q` in `n` variables.
pub fn max_ideal_power(n: usize, q: u32) -> MonIdeal {
    if n == 0 {
        // only the empty monomial exists; it has degree 0
        return if q == 0 {
            MonIdeal::unit(0)
        } else {
            MonIdeal::zero(0)
        };
    }
    let mut gens = Vec::new();
    let mut cur = vec![0u32; n];
    fill_degree(&mut cur, 0, q, &mut gens);
    MonIdeal::normalize_unchecked(gens, n)
}

fn fill_degree(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<ExpVec>) {
    let n = cur.len();
    if i == n - 1 {
        cur[i] = left;
        out.push(ExpVec(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill_degree(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Slice of an ideal at `z_last = v`: the ideal in the first `n-1` variables
/// generated by projections of generators with last exponent `<= v`.
fn slice(ideal: &[ExpVec], n: usize, v: u32) -> Vec<ExpVec> {
    let gens = ideal
        .iter()
        .filter(|g| g.0[n - 1] <= v)
        .map(|g| ExpVec(g.0[..n - 1].to_vec()))
        .collect();
    MonIdeal::normalize_unchecked(gens, n - 1).gens
}

fn is_unit_gens(g: &[ExpVec]) -> bool {
    g.iter().any(|e| e.is_zero())
}

/// Count monomials lying in `upper` but not in `lower`, by slicing along the
/// last variable. Past the largest last-variable exponent among all generators
/// every slice is identical, so a nonempty slice difference there is unbounded.
fn count_difference(upper: &MonIdeal, lower: &MonIdeal) -> Count {
    count_rec(&upper.gens, &lower.gens, upper.n)
}

fn count_rec(upper: &[ExpVec], lower: &[ExpVec], n: usize) -> Count {
    if upper.is_empty() || is_unit_gens(lower) {
        return Count::Finite(0);
    }
    if n == 0 {
        // upper is the unit ideal of the zero-variable ring, lower is zero
        return Count::Finite(1);
    }
    let top = upper
        .iter()
        .chain(lower)
        .map(|g| g.0[n - 1])
        .max()
        .unwrap_or(0);
    let mut total: u64 = 0;
    for v in 0..=top {
        let u = slice(upper, n, v);
        let l = slice(lower, n, v);
        match count_rec(&u, &l, n - 1) {
            Count::Infinite => return Count::Infinite,
            Count::Finite(c) => {
                if v == top && c > 0 {
                    return Count::Infinite;
                }
                total = match total.checked_add(c) {
                    Some(t) => t,
                    None => return Count::Infinite,
                };
            }
        }
    }
    Count::Finite(total)
}
