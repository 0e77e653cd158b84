//! Counting positive tight contact structures on small Seifert fibered
//! 3-manifolds `M(r1, r2, r3)` with `e0 >= 0`.
//!
//! The count is computed three ways that must agree: a closed formula in the
//! negative continued fraction coefficients of `-1/r_i`, an enumeration of
//! basic-slice sign configurations up to the simultaneous flip, and an
//! enumeration of distinct first Chern classes of Stein fillings.
//!
//! ```
//! use tightcount::{verify, SeifertTriple, DEFAULT_MAX_ENUM};
//!
//! let m: SeifertTriple = "1/2 1/2 1/2".parse().unwrap();
//! let report = verify(&m, DEFAULT_MAX_ENUM).unwrap();
//! assert_eq!(report.t_formula, 7u32.into());
//! assert_eq!(report.agree, Some(true));
//! ```

pub mod cli;
pub mod contfrac;
pub mod counting;
pub mod error;
pub mod rational;
pub mod report;
pub mod seifert;
pub mod slopes;

pub use contfrac::{cf_evaluate, neg_cf_expand, NegCf};
pub use counting::{
    analyze, chern_count, chern_vectors, enumerate_p0, p0_class_count, p0_closed_form, rotation_set, t_formula,
    upper_count, verify, ChernVector, CountReport, Options, SignConfiguration, DEFAULT_MAX_ENUM,
};
pub use error::{Error, Result};
pub use rational::Rational;
pub use seifert::{NormalForm, SeifertTriple};
pub use slopes::{
    block_border_slope, boundary_slope, gluing_matrix, outer_border_slope_in_base, ExtendedSlope, GluingMatrix,
};
