//! Exact scalar types used by the sparse elimination kernel.
//!
//! Elimination is fraction-free: a column `x` is reduced against a pivot column `y` by
//! `x <- a*x - b*y`, where `a` is the pivot entry of `y` and `b` the entry of `x` in the pivot
//! row. After each step the column is normalized so entries stay small. `i64` reports overflow
//! by returning `None`, which lets callers fall back to `BigInt`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

pub trait ExactScalar:
    Clone + PartialEq + Debug + Zero + One + std::ops::Sub<Output = Self> + Send + Sync
{
    fn from_sign(negative: bool) -> Self {
        if negative {
            Self::zero() - Self::one()
        } else {
            Self::one()
        }
    }

    /// `a*x - b*y`, or `None` if the result is not representable.
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;

    /// Rescale a nonzero column in place (divide out content, or make the leading entry one).
    fn normalize(entries: &mut [Self]);
}

fn divide_content<T>(entries: &mut [T])
where
    T: Integer + Signed + Clone,
{
    let mut g = T::zero();
    for e in entries.iter() {
        g = g.gcd(e);
        if g.is_one() {
            break;
        }
    }
    if g.is_zero() {
        return;
    }
    // keep the leading entry positive
    if entries.first().is_some_and(|e| e.is_negative()) {
        g = -g;
    }
    if !g.is_one() {
        for e in entries.iter_mut() {
            *e = e.clone() / g.clone();
        }
    }
}

impl ExactScalar for i64 {
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        i64::checked_sub(i64::checked_mul(*a, *x)?, i64::checked_mul(*b, *y)?)
    }

    fn normalize(entries: &mut [Self]) {
        // i64::MIN has no positive counterpart; leave such columns alone.
        if entries.iter().any(|&e| e == i64::MIN) {
            return;
        }
        divide_content(entries)
    }
}

impl ExactScalar for BigInt {
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }

    fn normalize(entries: &mut [Self]) {
        divide_content(entries)
    }
}

impl<T> ExactScalar for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + CheckedMul + CheckedSub + Send + Sync,
{
    fn mul_sub(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a.clone() * x.clone() - b.clone() * y.clone())
    }

    fn normalize(entries: &mut [Self]) {
        let Some(lead) = entries.first().cloned() else {
            return;
        };
        if lead.is_zero() || lead.is_one() {
            return;
        }
        for e in entries.iter_mut() {
            *e = e.clone() / lead.clone();
        }
    }
}

/// Parse an exact rational written as an integer or as `p/q`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

/// Render a rational as `p` or `p/q` in lowest terms.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i64_overflow_is_reported() {
        assert_eq!(i64::mul_sub(&i64::MAX, &2, &0, &0), None);
        assert_eq!(i64::mul_sub(&3, &4, &2, &5), Some(2));
    }

    #[test]
    fn integer_normalization_divides_content_and_fixes_sign() {
        let mut v = vec![-4i64, 6, 8];
        i64::normalize(&mut v);
        assert_eq!(v, vec![2, -3, -4]);
    }

    #[test]
    fn rational_normalization_makes_lead_one() {
        let half = BigRational::new(1.into(), 2.into());
        let mut v = vec![half.clone(), BigRational::one()];
        BigRational::normalize(&mut v);
        assert_eq!(v[0], BigRational::one());
        assert_eq!(v[1], BigRational::from_integer(2.into()));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/6"), Some(BigRational::new(1.into(), 2.into())));
        assert_eq!(parse_rational("-7"), Some(BigRational::from_integer((-7).into())));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&BigRational::new(2.into(), (-4).into())), "-1/2");
    }
}
