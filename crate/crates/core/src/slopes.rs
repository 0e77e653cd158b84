//! Slopes on the boundary tori and the gluing matrices `A_i`.
//!
//! A slope is a primitive integer vector `(x, y)` read as `y/x`; `(0, 1)` is
//! the slope at infinity. Matrices act on column vectors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::{cf_evaluate, neg_cf_expand, NegCf};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedSlope {
    x: BigInt,
    y: BigInt,
}

impl ExtendedSlope {
    /// Reduces `(x, y)` to the primitive representative with `x > 0`, or
    /// `(0, 1)` when `x = 0`.
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Result<Self> {
        let (mut x, mut y) = (x.into(), y.into());
        if x.is_zero() && y.is_zero() {
            return Err(Error::Domain("(0, 0) is not a slope".into()));
        }
        let g = x.gcd(&y);
        x /= &g;
        y /= &g;
        if x.is_negative() || (x.is_zero() && y.is_negative()) {
            x = -x;
            y = -y;
        }
        Ok(ExtendedSlope { x, y })
    }

    pub fn infinity() -> Self {
        ExtendedSlope { x: BigInt::zero(), y: BigInt::one() }
    }

    pub fn from_rational(q: &Rational) -> Self {
        ExtendedSlope { x: q.denom().clone(), y: q.numer().clone() }
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn is_infinite(&self) -> bool {
        self.x.is_zero()
    }

    /// `y/x`, or `None` at infinity.
    pub fn value(&self) -> Option<Rational> {
        (!self.is_infinite()).then(|| Rational::new(self.y.clone(), self.x.clone()).expect("x != 0"))
    }

    /// `|x1 y2 - x2 y1|`; two slopes are Farey neighbours when this is 1.
    pub fn farey_distance(&self, other: &ExtendedSlope) -> BigInt {
        (&self.x * &other.y - &other.x * &self.y).abs()
    }
}

impl fmt::Display for ExtendedSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("∞")
        } else {
            write!(f, "{}/{}", self.y, self.x)
        }
    }
}

/// `A = [[alpha, alpha_p], [-beta, -beta_p]]` with `alpha_p * beta - alpha * beta_p = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    pub alpha: BigInt,
    pub alpha_p: BigInt,
    pub beta: BigInt,
    pub beta_p: BigInt,
}

impl GluingMatrix {
    /// Matrix for `r = beta/alpha > 0` non-integral.
    pub fn for_coefficient(r: &Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::Domain(format!("gluing matrix needs r > 0, got {r}")));
        }
        if r.is_integer() {
            return Err(Error::Domain(format!("gluing matrix needs non-integral r, got {r}")));
        }
        let alpha = r.denom().clone();
        let beta = r.numer().clone();
        // beta * x + alpha * y = 1, so x is the inverse of beta mod alpha.
        let inverse = beta.extended_gcd(&alpha).x;
        let alpha_p = inverse.mod_floor(&alpha);
        let beta_p = (&alpha_p * &beta - BigInt::one()) / &alpha;
        let m = GluingMatrix { alpha, alpha_p, beta, beta_p };
        debug_assert!(m.determinant().is_one());
        Ok(m)
    }

    /// `alpha_p * beta - alpha * beta_p`.
    pub fn determinant(&self) -> BigInt {
        &self.alpha_p * &self.beta - &self.alpha * &self.beta_p
    }

    /// `A (x, y)^T = (alpha x + alpha_p y, -beta x - beta_p y)`.
    pub fn act(&self, s: &ExtendedSlope) -> ExtendedSlope {
        let x = &self.alpha * &s.x + &self.alpha_p * &s.y;
        let y = -(&self.beta * &s.x) - &self.beta_p * &s.y;
        ExtendedSlope::new(x, y).expect("unimodular matrices map nonzero vectors to nonzero vectors")
    }

    /// `A^{-1} = [[-beta_p, -alpha_p], [beta, alpha]]`.
    pub fn act_inverse(&self, s: &ExtendedSlope) -> ExtendedSlope {
        let x = -(&self.beta_p * &s.x) - &self.alpha_p * &s.y;
        let y = &self.beta * &s.x + &self.alpha * &s.y;
        ExtendedSlope::new(x, y).expect("unimodular matrices map nonzero vectors to nonzero vectors")
    }
}

pub fn gluing_matrix(r: &Rational) -> Result<GluingMatrix> {
    GluingMatrix::for_coefficient(r)
}

/// Boundary slope `-alpha/alpha_p` of the solid torus glued in for `r`.
pub fn boundary_slope(r: &Rational) -> Result<ExtendedSlope> {
    let m = GluingMatrix::for_coefficient(r)?;
    ExtendedSlope::new(m.alpha_p, -m.alpha)
}

/// Border slope `s_k = [a_n, ..., a_{k+1}, a_k + 1]` between the blocks
/// `k - 1` and `k`, for `1 <= k <= n`.
pub fn block_border_slope(cf: &NegCf, k: usize) -> Result<ExtendedSlope> {
    let n = cf.last_index();
    if n == 0 {
        return Err(Error::Index { index: k, reason: "a single-coefficient expansion has no block borders" });
    }
    if k == 0 || k > n {
        return Err(Error::Index { index: k, reason: "border index must lie in 1..=n" });
    }
    let mut tail: Vec<BigInt> = cf.coeffs()[k..].iter().rev().cloned().collect();
    *tail.last_mut().expect("k <= n") += 1;
    Ok(ExtendedSlope::from_rational(&cf_evaluate(&tail)?))
}

/// The vector `(alpha_p + (a_0+1) beta_p, -(alpha + (a_0+1) beta))`, i.e. the
/// border between the two outermost blocks in the solid-torus basis.
pub fn outer_border_slope(m: &GluingMatrix, a0: &BigInt) -> Result<ExtendedSlope> {
    let shift = a0 + BigInt::one();
    ExtendedSlope::new(&m.alpha_p + &shift * &m.beta_p, -(&m.alpha + &shift * &m.beta))
}

/// Border between the outermost and second block of the solid torus for `r`,
/// expressed in the basis of the complement. Equals `1/(a_0 + 1)`.
pub fn outer_border_slope_in_base(r: &Rational) -> Result<ExtendedSlope> {
    let m = GluingMatrix::for_coefficient(r)?;
    let cf = neg_cf_expand(&-r.recip()?)?;
    let a0 = cf.leading();
    if *a0 == BigInt::from(-1) {
        return Err(Error::Domain("outer border slope needs a_0 <= -2".into()));
    }
    if cf.last_index() == 0 {
        return Err(Error::Domain(format!("-1/{r} has a single block, no outer border")));
    }
    Ok(m.act(&outer_border_slope(&m, a0)?))
}
