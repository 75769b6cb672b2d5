//! Univariate integer polynomials and exact real-root counting.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial in one variable, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero for constants including the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::new(Vec::new());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let coeff = if a.is_one() && i > 0 { String::new() } else { a.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            write!(f, "{sign}{coeff}{var}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    /// Parses sums of terms like `3X^2`, `-x`, `2*X`, `+5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid polynomial `{s}`"));
        let words: Vec<&str> = s.split_whitespace().collect();
        let glued = words.windows(2).any(|w| {
            let (a, b) = (w[0].chars().last().unwrap(), w[1].chars().next().unwrap());
            (a.is_ascii_alphanumeric() || a == '^') && (b.is_ascii_alphanumeric())
        });
        if glued {
            return Err(bad());
        }
        let text: String = words.concat();
        if text.is_empty() {
            return Err(bad());
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut negative = false;
            if bytes[i] == b'+' || bytes[i] == b'-' {
                negative = bytes[i] == b'-';
                i += 1;
            } else if i > 0 {
                return Err(bad());
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let mut coeff = if i > start { text[start..i].parse::<BigInt>().map_err(|_| bad())? } else { BigInt::one() };
            let has_digits = i > start;
            if i < bytes.len() && bytes[i] == b'*' {
                if !has_digits {
                    return Err(bad());
                }
                i += 1;
            }
            let mut power = 0usize;
            if i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X') {
                i += 1;
                power = 1;
                if i < bytes.len() && bytes[i] == b'^' {
                    i += 1;
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    power = text[start..i].parse().map_err(|_| bad())?;
                }
            } else if !has_digits {
                return Err(bad());
            }
            if negative {
                coeff = -coeff;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += coeff;
        }
        Ok(Polynomial::new(coeffs))
    }
}

type QPoly = Vec<BigRational>;

fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn derivative(p: &QPoly) -> QPoly {
    let mut d: QPoly =
        p.iter().enumerate().skip(1).map(|(i, c)| c * BigRational::from_integer(BigInt::from(i))).collect();
    trim(&mut d);
    d
}

fn remainder(a: &QPoly, b: &QPoly) -> QPoly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let q = r.last().unwrap() / lead;
        let shift = r.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
        trim(&mut r);
    }
    r
}

// number of sign changes of the Sturm sequence at ±infinity
fn sign_changes(signs: impl Iterator<Item = bool>) -> usize {
    let mut changes = 0;
    let mut prev = None;
    for s in signs {
        if prev.is_some_and(|p| p != s) {
            changes += 1;
        }
        prev = Some(s);
    }
    changes
}

/// Number of distinct real roots, by Sturm's theorem.
pub fn real_root_count(p: &Polynomial) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial(0));
    }
    let p0: QPoly = p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect();
    let mut seq = vec![p0.clone()];
    let mut prev = p0;
    let mut cur = derivative(&prev);
    while !cur.is_empty() {
        let r: QPoly = remainder(&prev, &cur).into_iter().map(|c| -c).collect();
        seq.push(cur.clone());
        prev = cur;
        cur = r;
    }
    let positive = |q: &QPoly| q.last().unwrap().is_positive();
    let at_plus = sign_changes(seq.iter().map(positive));
    let at_minus = sign_changes(seq.iter().map(|q| positive(q) == ((q.len() - 1) % 2 == 0)));
    Ok(at_minus - at_plus)
}

/// Connected components over all realizable sign conditions of a family of nonzero
/// polynomials on the real line. The distinct roots of the family cut the line into
/// `2r + 1` points and open intervals, each carrying its own sign condition.
pub fn univariate_sign_components(polys: &[Polynomial]) -> Result<usize> {
    if let Some(i) = polys.iter().position(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial(i));
    }
    let product = polys.iter().fold(Polynomial::from_i64(&[1]), |acc, p| acc.mul(p));
    Ok(2 * real_root_count(&product)? + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("X^2-1"), Polynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(p("3*x^2 - 2x + 5"), Polynomial::from_i64(&[5, -2, 3]));
        assert_eq!(p("-X"), Polynomial::from_i64(&[0, -1]));
        assert_eq!(p("X - X"), Polynomial::from_i64(&[]));
        assert_eq!(p("2X^3-X+7").to_string(), "2X^3-X+7");
        assert!("".parse::<Polynomial>().is_err());
        assert!("X^".parse::<Polynomial>().is_err());
        assert!("2 3".parse::<Polynomial>().is_err());
        assert!("*X".parse::<Polynomial>().is_err());
    }

    #[test]
    fn root_counts() {
        assert_eq!(real_root_count(&p("X^2-1")).unwrap(), 2);
        assert_eq!(real_root_count(&p("X^2+1")).unwrap(), 0);
        assert_eq!(real_root_count(&p("X")).unwrap(), 1);
        assert_eq!(real_root_count(&p("X^2-2X+1")).unwrap(), 1);
        assert_eq!(real_root_count(&p("X^3-X")).unwrap(), 3);
        assert_eq!(real_root_count(&p("7")).unwrap(), 0);
        // (X-1)^2 (X+2)^3 (X^2+1)
        let q = p("X-1").mul(&p("X-1")).mul(&p("X+2")).mul(&p("X+2")).mul(&p("X+2")).mul(&p("X^2+1"));
        assert_eq!(real_root_count(&q).unwrap(), 2);
    }

    #[test]
    fn sign_component_counts() {
        assert_eq!(univariate_sign_components(&[p("X")]).unwrap(), 3);
        assert_eq!(univariate_sign_components(&[p("X"), p("X-1")]).unwrap(), 5);
        assert_eq!(univariate_sign_components(&[p("X^2-1")]).unwrap(), 5);
        assert_eq!(univariate_sign_components(&[p("X"), p("X")]).unwrap(), 3);
        assert_eq!(univariate_sign_components(&[p("X^2+1")]).unwrap(), 1);
        assert_eq!(univariate_sign_components(&[p("X"), p("0")]), Err(Error::ZeroPolynomial(1)));
    }

    #[test]
    fn evaluation() {
        let q = p("X^2-1");
        assert!(q.eval(&BigRational::from_integer(1.into())).is_zero());
        assert_eq!(q.eval(&BigRational::new(1.into(), 2.into())), BigRational::new((-3).into(), 4.into()));
    }
}
