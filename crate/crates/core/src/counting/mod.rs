//! Three independent counts of tight contact structures on a normal form:
//!
//! * [`t_formula`]: the closed formula in the outer and inner coefficients.
//! * [`upper_count`]: sign configurations of basic slices, with the outer
//!   configurations taken modulo the simultaneous shift.
//! * [`chern_count`]: distinct first Chern classes of Stein fillings.

mod chern;
mod p0;

pub use chern::{chern_count, chern_vectors, rotation_set, ChernVector};
pub use p0::{enumerate_p0, p0_class_count, p0_closed_form, P0Triple};

use num_bigint::{BigInt, BigUint};

use crate::contfrac::{magnitude, plus_one, NegCf};
use crate::error::{Error, Result};
use crate::seifert::{NormalForm, SeifertTriple};

pub const DEFAULT_MAX_ENUM: u64 = 10_000_000;

/// Coefficient as a machine integer. Anything that does not fit is far past
/// any enumeration limit.
pub(crate) fn small_coeff(a: &BigInt) -> Result<i64> {
    i64::try_from(a).map_err(|_| Error::EnumerationCap { needed: format!("|{a}|"), limit: u64::MAX })
}

fn outer_coeffs(cfs: &[NegCf; 3]) -> Result<[i64; 3]> {
    let [a, b, c] = cfs;
    Ok([small_coeff(a.leading())?, small_coeff(b.leading())?, small_coeff(c.leading())?])
}

/// `prod_{i, k >= 1} |a_k^i + 1|`, the number of sign choices in the inner blocks.
pub fn inner_factor(cfs: &[NegCf; 3]) -> BigUint {
    cfs.iter()
        .flat_map(NegCf::inner)
        .map(|a| magnitude(&plus_one(a)))
        .product()
}

/// `|prod(a_0^i + 1) - prod(a_0^i)| * prod_{i, k >= 1} |a_k^i + 1|`.
pub fn t_formula(cfs: &[NegCf; 3]) -> BigUint {
    let shifted: BigInt = cfs.iter().map(|cf| plus_one(cf.leading())).product();
    let plain: BigInt = cfs.iter().map(|cf| cf.leading().clone()).product();
    magnitude(&(shifted - plain)) * inner_factor(cfs)
}

pub fn upper_count(cfs: &[NegCf; 3], max_enum: u64) -> Result<BigUint> {
    let classes = p0_class_count(outer_coeffs(cfs)?, max_enum)?;
    Ok(BigUint::from(classes) * inner_factor(cfs))
}

/// Number of positive basic slices in every continued fraction block:
/// `0 <= p0[i] <= |a_0^i + 1|` and `0 <= blocks[i][k-1] <= |a_k^i + 2|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignConfiguration {
    pub p0: P0Triple,
    pub blocks: [Vec<u64>; 3],
}

impl SignConfiguration {
    pub fn new(cfs: &[NegCf; 3], p0: P0Triple, blocks: [Vec<u64>; 3]) -> Result<Self> {
        for (i, cf) in cfs.iter().enumerate() {
            if BigUint::from(p0[i]) > magnitude(&plus_one(cf.leading())) {
                return Err(Error::Domain(format!("p_0^{} = {} out of range", i + 1, p0[i])));
            }
            if blocks[i].len() != cf.inner().len() {
                return Err(Error::Domain(format!("fiber {} needs {} inner blocks", i + 1, cf.inner().len())));
            }
            for (k, (p, a)) in blocks[i].iter().zip(cf.inner()).enumerate() {
                if BigUint::from(*p) > magnitude(&(a + BigInt::from(2))) {
                    return Err(Error::Domain(format!("p_{}^{} = {p} out of range", k + 1, i + 1)));
                }
            }
        }
        Ok(SignConfiguration { p0, blocks })
    }

    /// The configuration reached by the simultaneous shift, if all three
    /// outer entries stay in range.
    pub fn shifted(&self, cfs: &[NegCf; 3], up: bool) -> Option<SignConfiguration> {
        let mut p0 = self.p0;
        for v in &mut p0 {
            *v = if up { v.checked_add(1)? } else { v.checked_sub(1)? };
        }
        SignConfiguration::new(cfs, p0, self.blocks.clone()).ok()
    }
}

/// Outcome of a classification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub input: SeifertTriple,
    pub normal: NormalForm,
    pub expansions: [NegCf; 3],
    pub t_formula: BigUint,
    pub upper_count: Option<BigUint>,
    pub lower_count: Option<BigUint>,
    /// Set whenever both enumerations ran; true iff all three counts agree.
    pub agree: Option<bool>,
    pub chern_vectors: Option<Vec<ChernVector>>,
}

impl CountReport {
    pub fn e0(&self) -> &BigInt {
        self.normal.e0()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Run both enumerations, not just the formula.
    pub verify: bool,
    /// Keep the distinct Chern vectors in the report.
    pub list_chern: bool,
    pub max_enum: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { verify: false, list_chern: false, max_enum: DEFAULT_MAX_ENUM }
    }
}

pub fn analyze(t: &SeifertTriple, opts: &Options) -> Result<CountReport> {
    let normal = t.normalize()?;
    let expansions = normal.expansions();
    let t_formula = t_formula(&expansions);
    let mut report = CountReport {
        input: t.clone(),
        normal,
        expansions,
        t_formula,
        upper_count: None,
        lower_count: None,
        agree: None,
        chern_vectors: None,
    };
    if opts.verify {
        let upper = upper_count(&report.expansions, opts.max_enum)?;
        let lower = BigUint::from(chern_count(&report.expansions, opts.max_enum)?);
        report.agree = Some(upper == report.t_formula && lower == report.t_formula);
        report.upper_count = Some(upper);
        report.lower_count = Some(lower);
    }
    if opts.list_chern {
        report.chern_vectors = Some(chern_vectors(&report.expansions, opts.max_enum)?);
    }
    Ok(report)
}

/// Normalizes, expands and computes all three counts.
pub fn verify(t: &SeifertTriple, max_enum: u64) -> Result<CountReport> {
    analyze(t, &Options { verify: true, list_chern: false, max_enum })
}
