//! Negative continued fractions `[a_0, ..., a_n] = a_0 - 1/(a_1 - 1/(... - 1/a_n))`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A validated expansion: `a_0 <= -1` and `a_k <= -2` for `k >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NegCf {
    coeffs: Vec<BigInt>,
}

impl NegCf {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        let (first, rest) = coeffs
            .split_first()
            .ok_or_else(|| Error::Domain("continued fraction needs at least one coefficient".into()))?;
        if *first > BigInt::from(-1) {
            return Err(Error::Domain(format!("leading coefficient {first} must be <= -1")));
        }
        if let Some(bad) = rest.iter().find(|a| **a > BigInt::from(-2)) {
            return Err(Error::Domain(format!("inner coefficient {bad} must be <= -2")));
        }
        Ok(NegCf { coeffs })
    }

    /// Convenience for small literal coefficient lists.
    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        NegCf::new(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `a_0`.
    pub fn leading(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// `a_1, ..., a_n`.
    pub fn inner(&self) -> &[BigInt] {
        &self.coeffs[1..]
    }

    /// The index `n` of the last coefficient.
    pub fn last_index(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn evaluate(&self) -> Rational {
        cf_evaluate(&self.coeffs).expect("valid negative continued fractions have no poles")
    }
}

impl TryFrom<Vec<BigInt>> for NegCf {
    type Error = Error;
    fn try_from(coeffs: Vec<BigInt>) -> Result<Self> {
        NegCf::new(coeffs)
    }
}

impl From<NegCf> for Vec<BigInt> {
    fn from(cf: NegCf) -> Self {
        cf.coeffs
    }
}

impl fmt::Display for NegCf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Expands `x < 0` as the unique negative continued fraction.
///
/// `a_k = floor(x_k)`, `x_{k+1} = -1/(x_k - a_k)`, stopping at the first
/// integral `x_k`. Each step strictly shrinks the denominator.
pub fn neg_cf_expand(x: &Rational) -> Result<NegCf> {
    if !x.is_negative() {
        return Err(Error::Domain(format!("negative continued fraction of {x} >= 0")));
    }
    let mut coeffs = Vec::new();
    let mut current = x.clone();
    loop {
        let a = current.floor();
        let rest = &current - &Rational::from_integer(a.clone());
        coeffs.push(a);
        if rest.is_zero() {
            break;
        }
        current = -rest.recip()?;
    }
    Ok(NegCf { coeffs })
}

/// Evaluates `[c_0, ..., c_m]` innermost-first for an arbitrary integer list.
///
/// Used both for validated expansions and for the reversed or truncated
/// sequences that describe boundary slopes, which need not satisfy the
/// [`NegCf`] bounds.
pub fn cf_evaluate(coeffs: &[BigInt]) -> Result<Rational> {
    let malformed = || Error::MalformedCf { coeffs: coeffs.iter().map(|a| a.to_string()).collect() };
    let (last, outer) = coeffs.split_last().ok_or_else(malformed)?;
    let mut value = Rational::from_integer(last.clone());
    for a in outer.iter().rev() {
        let step = value.recip().map_err(|_| malformed())?;
        value = Rational::from_integer(a.clone()) - step;
    }
    Ok(value)
}

/// `|a|` for a coefficient known to be negative, as a natural number.
pub(crate) fn magnitude(a: &BigInt) -> num_bigint::BigUint {
    a.abs().to_biguint().unwrap_or_default()
}

pub(crate) fn plus_one(a: &BigInt) -> BigInt {
    a + BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(neg_cf_expand(&q("-2")).unwrap().coeffs(), ints(&[-2]).as_slice());
        assert_eq!(neg_cf_expand(&q("-7/5")).unwrap().coeffs(), ints(&[-2, -2, -3]).as_slice());
        assert_eq!(neg_cf_expand(&q("-2/3")).unwrap().coeffs(), ints(&[-1, -3]).as_slice());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(cf_evaluate(&ints(&[-2])).unwrap(), q("-2"));
        assert_eq!(cf_evaluate(&ints(&[-2, -2, -3])).unwrap(), q("-7/5"));
        assert_eq!(cf_evaluate(&ints(&[-1, -3])).unwrap(), q("-2/3"));
    }

    #[test]
    fn nonnegative_input_rejected() {
        assert!(matches!(neg_cf_expand(&q("0")), Err(Error::Domain(_))));
        assert!(matches!(neg_cf_expand(&q("3/4")), Err(Error::Domain(_))));
    }

    #[test]
    fn poles_are_reported() {
        // -1 - 1/(-1) = 0, so one more level divides by zero.
        assert!(matches!(cf_evaluate(&ints(&[-2, -1, -1])), Err(Error::MalformedCf { .. })));
        assert!(matches!(cf_evaluate(&[]), Err(Error::MalformedCf { .. })));
        assert!(matches!(cf_evaluate(&ints(&[3, 0])), Err(Error::MalformedCf { .. })));
    }

    #[test]
    fn constructor_enforces_bounds() {
        assert!(NegCf::from_i64s(&[-1, -2, -7]).is_ok());
        assert!(NegCf::from_i64s(&[0]).is_err());
        assert!(NegCf::from_i64s(&[-2, -1]).is_err());
        assert!(NegCf::from_i64s(&[]).is_err());
        assert_eq!(NegCf::from_i64s(&[-2, -2, -3]).unwrap().to_string(), "[-2, -2, -3]");
    }

    #[test]
    fn try_from_checks_bounds() {
        assert_eq!(NegCf::try_from(ints(&[-1, -3])).unwrap().evaluate(), q("-2/3"));
        assert!(NegCf::try_from(ints(&[-1, -1])).is_err());
    }

    #[test]
    fn length_bounded_by_denominator() {
        for den in 1..=40i64 {
            for num in 1..=3 * den {
                let x = Rational::new(-num, den).unwrap();
                let cf = neg_cf_expand(&x).unwrap();
                assert!(BigInt::from(cf.coeffs().len() as u64) <= *x.denom());
            }
        }
    }

    // Independent oracle for the inverse direction: every short valid list
    // must be recovered from its value.
    #[test]
    fn expansion_is_unique_for_short_lists() {
        fn walk(prefix: &mut Vec<i64>, depth: usize) {
            if !prefix.is_empty() {
                let cf = NegCf::from_i64s(prefix).unwrap();
                assert_eq!(neg_cf_expand(&cf.evaluate()).unwrap(), cf, "{prefix:?}");
            }
            if depth == 6 {
                return;
            }
            let range = if prefix.is_empty() { -5..=-1 } else { -5..=-2 };
            for a in range {
                prefix.push(a);
                walk(prefix, depth + 1);
                prefix.pop();
            }
        }
        walk(&mut Vec::new(), 0);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn round_trip_and_bounds(num in 1i64..5000, den in 1i64..500) {
                let x = Rational::new(-num, den).unwrap();
                let cf = neg_cf_expand(&x).unwrap();
                prop_assert!(NegCf::new(cf.coeffs().to_vec()).is_ok());
                prop_assert_eq!(cf.evaluate(), x);
            }
        }
    }
}
