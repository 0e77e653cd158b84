//! Small Seifert fibered manifolds `M(r1, r2, r3)`: Rolfsen twists, the
//! invariant `e0`, and the canonical representative with `e0 >= 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::contfrac::{neg_cf_expand, NegCf};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Three non-integral surgery coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertTriple {
    coeffs: [Rational; 3],
}

impl SeifertTriple {
    pub fn new(r1: Rational, r2: Rational, r3: Rational) -> Result<Self> {
        let coeffs = [r1, r2, r3];
        if let Some(r) = coeffs.iter().find(|r| r.is_integer()) {
            return Err(Error::IntegralCoefficient(r.to_string()));
        }
        Ok(SeifertTriple { coeffs })
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.coeffs
    }

    /// `floor(r1) + floor(r2) + floor(r3)`.
    pub fn e0(&self) -> BigInt {
        self.coeffs.iter().map(Rational::floor).sum()
    }

    /// `(r1 + h, r2 + k, r3 - h - k)`, which presents the same manifold.
    pub fn rolfsen_twist(&self, h: impl Into<BigInt>, k: impl Into<BigInt>) -> SeifertTriple {
        let h = h.into();
        let k = k.into();
        let [r1, r2, r3] = &self.coeffs;
        let shift = |r: &Rational, by: BigInt| r + &Rational::from_integer(by);
        SeifertTriple {
            coeffs: [shift(r1, h.clone()), shift(r2, k.clone()), shift(r3, -(h + k))],
        }
    }

    /// Reorders the slots; `order[i]` names the source slot of slot `i`.
    pub fn permuted(&self, order: [usize; 3]) -> SeifertTriple {
        SeifertTriple { coeffs: order.map(|i| self.coeffs[i].clone()) }
    }

    pub fn normalize(&self) -> Result<NormalForm> {
        NormalForm::from_triple(self)
    }
}

impl fmt::Display for SeifertTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [r1, r2, r3] = &self.coeffs;
        write!(f, "M({r1}, {r2}, {r3})")
    }
}

/// Parses three rationals separated by whitespace and/or commas, optionally
/// wrapped as `M(...)`.
impl FromStr for SeifertTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let body = trimmed
            .strip_prefix("M(")
            .and_then(|rest| rest.strip_suffix(')'))
            .unwrap_or(trimmed);
        let parts: Vec<&str> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.len() != 3 {
            return Err(Error::Parse { input: s.to_string() });
        }
        let r: Vec<Rational> = parts.iter().map(|p| p.parse()).collect::<Result<_>>()?;
        let [r1, r2, r3]: [Rational; 3] = r.try_into().expect("three parts");
        SeifertTriple::new(r1, r2, r3)
    }
}

/// Canonical representative: `r1 = e0 + f1`, `r2 = f2`, `r3 = f3` where
/// `f1 >= f2 >= f3` are the fractional parts of the input coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NormalForm {
    triple: SeifertTriple,
    e0: BigInt,
}

impl NormalForm {
    pub fn from_triple(t: &SeifertTriple) -> Result<Self> {
        let e0 = t.e0();
        if e0.is_negative() {
            return Err(Error::OutOfScope { e0: e0.to_string() });
        }
        let mut fracs: Vec<Rational> = t.coeffs.iter().map(Rational::fract).collect();
        fracs.sort_by(|a, b| b.cmp(a));
        let [f1, f2, f3]: [Rational; 3] = fracs.try_into().expect("three slots");
        let r1 = f1 + Rational::from_integer(e0.clone());
        Ok(NormalForm { triple: SeifertTriple { coeffs: [r1, f2, f3] }, e0 })
    }

    /// Builds a normal form directly from coefficients already satisfying
    /// `r1 > 0`, `0 < r3 <= r2 < 1`.
    pub fn from_coeffs(r1: Rational, r2: Rational, r3: Rational) -> Result<Self> {
        let t = SeifertTriple::new(r1, r2, r3)?;
        let [r1, r2, r3] = &t.coeffs;
        let zero = Rational::zero();
        let one = Rational::from_integer(1);
        if !(r1 > &zero && r3 > &zero && r2 < &one && r3 <= r2) {
            return Err(Error::Domain(format!("{t} is not in normal form")));
        }
        let e0 = r1.floor();
        Ok(NormalForm { triple: t, e0 })
    }

    pub fn triple(&self) -> &SeifertTriple {
        &self.triple
    }

    pub fn coeffs(&self) -> &[Rational; 3] {
        &self.triple.coeffs
    }

    pub fn e0(&self) -> &BigInt {
        &self.e0
    }

    /// Expansions of `-1/r_i`. The first has `a_0 <= -1`, the others `a_0 <= -2`.
    pub fn expansions(&self) -> [NegCf; 3] {
        self.triple.coeffs.clone().map(|r| {
            let x = -r.recip().expect("normal form coefficients are positive");
            neg_cf_expand(&x).expect("-1/r is negative for r > 0")
        })
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.triple.fmt(f)
    }
}
