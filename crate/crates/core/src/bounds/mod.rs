//! Exact evaluators for singly exponential Betti-number bounds of semi-algebraic sets.
//!
//! `s` is the number of polynomials, `d` their maximal degree, `k` the ambient dimension.
//! All values are arbitrary-precision integers.

mod poly;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub use poly::{real_root_count, univariate_sign_components, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundName {
    /// Total Betti number of a `P`-closed set.
    Closed,
    /// Total Betti number of a `P`-semi-algebraic set.
    General,
    /// Number of connected components over all realizable sign conditions.
    SignComponents,
    /// Total Betti number of the Reeb space of a polynomial map, `(sd)^((n+m)^c)`.
    Reeb,
}

impl BoundName {
    pub const ALL: [BoundName; 4] =
        [BoundName::Closed, BoundName::General, BoundName::SignComponents, BoundName::Reeb];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Closed => "closed",
            BoundName::General => "general",
            BoundName::SignComponents => "sign-components",
            BoundName::Reeb => "reeb",
        }
    }

    /// Parameters the bound depends on, in report order.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            BoundName::Reeb => &["s", "d", "n", "m", "c"],
            _ => &["s", "d", "k"],
        }
    }

    pub fn evaluate(self, p: &BoundParams) -> Result<BigUint> {
        match self {
            BoundName::Closed => bound_closed(p.s, p.d, p.k),
            BoundName::General => bound_general(p.s, p.d, p.k),
            BoundName::SignComponents => bound_sign_components(p.s, p.d, p.k),
            BoundName::Reeb => bound_reeb(p.s, p.d, p.n, p.m, p.c),
        }
    }
}

impl std::str::FromStr for BoundName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidParams(format!("unknown bound `{s}`")))
    }
}

/// Bound parameters. `c` stands in for an unspecified constant exponent and is always
/// supplied by the caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundParams {
    pub s: u64,
    pub d: u64,
    pub k: u64,
    pub n: u64,
    pub m: u64,
    pub c: u64,
}

impl Default for BoundParams {
    fn default() -> Self {
        BoundParams { s: 1, d: 1, k: 1, n: 1, m: 1, c: 1 }
    }
}

impl BoundParams {
    fn get(&self, name: &str) -> u64 {
        match name {
            "s" => self.s,
            "d" => self.d,
            "k" => self.k,
            "n" => self.n,
            "m" => self.m,
            "c" => self.c,
            _ => unreachable!("unknown parameter {name}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub bound_name: BoundName,
    pub params: BTreeMap<&'static str, u64>,
    /// Decimal string; values routinely exceed machine integers.
    pub value: String,
}

impl BoundReport {
    pub fn new(name: BoundName, params: &BoundParams) -> Result<Self> {
        let value = name.evaluate(params)?.to_string();
        let params = name.parameters().iter().map(|&p| (p, params.get(p))).collect();
        Ok(BoundReport { bound_name: name, params, value })
    }
}

fn check_positive(params: &[(&str, u64)]) -> Result<()> {
    match params.iter().find(|(_, v)| *v == 0) {
        Some((name, _)) => Err(Error::InvalidParams(format!("{name} must be positive"))),
        None => Ok(()),
    }
}

/// `C(a, b)`, zero when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

// Σ_{i=0}^{k} Σ_{j=0}^{k-i} C(top, j) 6^j d (2d-1)^{k-1}
fn double_sum(top: u64, d: u64, k: u64) -> BigUint {
    let tail = BigUint::from(d) * Pow::pow(BigUint::from(2 * d - 1), k - 1);
    let six = BigUint::from(6u32);
    // inner sums are prefixes of one series
    let terms: Vec<BigUint> = (0..=k).map(|j| binomial(top, j) * Pow::pow(&six, j)).collect();
    let mut total = BigUint::zero();
    let mut prefix = BigUint::zero();
    let mut prefixes = Vec::with_capacity(terms.len());
    for t in &terms {
        prefix += t;
        prefixes.push(prefix.clone());
    }
    for i in 0..=k {
        total += &prefixes[(k - i) as usize];
    }
    total * tail
}

/// Bound on the total Betti number of a `P`-closed semi-algebraic set in `R^k`.
pub fn bound_closed(s: u64, d: u64, k: u64) -> Result<BigUint> {
    check_positive(&[("s", s), ("d", d), ("k", k)])?;
    Ok(double_sum(s + 1, d, k))
}

/// Bound on the total Betti number of an arbitrary `P`-semi-algebraic set in `R^k`.
pub fn bound_general(s: u64, d: u64, k: u64) -> Result<BigUint> {
    check_positive(&[("s", s), ("d", d), ("k", k)])?;
    let top = 2u64
        .checked_mul(k)
        .and_then(|x| x.checked_mul(s))
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::InvalidParams("2ks+1 overflows".into()))?;
    Ok(double_sum(top, d, k))
}

/// Bound on the number of connected components of all realizable sign conditions:
/// `Σ_{1<=j<=k} C(s, j) 4^j d (2d-1)^{k-1}`.
pub fn bound_sign_components(s: u64, d: u64, k: u64) -> Result<BigUint> {
    check_positive(&[("s", s), ("d", d), ("k", k)])?;
    let tail = BigUint::from(d) * Pow::pow(BigUint::from(2 * d - 1), k - 1);
    let four = BigUint::from(4u32);
    let sum: BigUint = (1..=k).map(|j| binomial(s, j) * Pow::pow(&four, j)).sum();
    Ok(sum * tail)
}

/// `(s d)^((n + m)^c)`, with the exponent constant `c` chosen by the caller.
pub fn bound_reeb(s: u64, d: u64, n: u64, m: u64, c: u64) -> Result<BigUint> {
    check_positive(&[("s", s), ("d", d), ("n", n), ("m", m), ("c", c)])?;
    let base = BigUint::from(s) * BigUint::from(d);
    if base.is_one() {
        return Ok(base);
    }
    let exponent = u32::try_from(c)
        .ok()
        .and_then(|c| (n + m).checked_pow(c))
        .ok_or_else(|| Error::InvalidParams("exponent (n+m)^c too large".into()))?;
    // keep the result to a size that can actually be printed
    if exponent > 1 << 24 {
        return Err(Error::InvalidParams("exponent (n+m)^c too large".into()));
    }
    Ok(Pow::pow(base, exponent))
}
