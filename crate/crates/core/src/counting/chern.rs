//! First Chern classes of the Stein structures on the filling.
//!
//! Each Legendrian realization of the surgery diagram is determined by the
//! rotation numbers of its knots. `c1` is recorded by its values on the
//! basis `K1 - K2`, `K1 - K3` and the chain unknots; distinct vectors give
//! non-isotopic contact structures.

use std::fmt;

use crate::contfrac::NegCf;
use crate::error::{Error, Result};

use super::small_coeff;

/// Rotation numbers available after stabilizing to contact framing `-1`:
/// `{-(m-1), -(m-3), ..., m-1}` with `m = |a|` for the knots running over
/// the 1-handle and `m = |a + 1|` for chain unknots.
pub fn rotation_set(a: i64, over_handle: bool) -> Result<Vec<i64>> {
    let m = match (over_handle, a) {
        (true, a) if a <= -1 => a.unsigned_abs(),
        (false, a) if a <= -2 => (a + 1).unsigned_abs(),
        _ => {
            return Err(Error::Domain(format!(
                "rotation set for coefficient {a} (over_handle = {over_handle})"
            )))
        }
    };
    let m = i64::try_from(m).map_err(|_| Error::Domain(format!("coefficient {a} too large")))?;
    Ok((0..m).map(|j| 2 * j - (m - 1)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChernVector {
    /// `rot(K1) - rot(K2)`
    pub d12: i64,
    /// `rot(K1) - rot(K3)`
    pub d13: i64,
    /// Chain unknots: fiber 1, 2, 3 in turn, each from the outermost block inward.
    pub chain_rots: Vec<i64>,
}

impl fmt::Display for ChernVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}", self.d12, self.d13)?;
        if !self.chain_rots.is_empty() {
            f.write_str(";")?;
            for r in &self.chain_rots {
                write!(f, " {r}")?;
            }
        }
        f.write_str(")")
    }
}

/// Rotation sets in enumeration order: `K1, K2, K3`, then the chain knots.
fn knot_sets(cfs: &[NegCf; 3]) -> Result<Vec<Vec<i64>>> {
    let mut sets = Vec::new();
    for cf in cfs {
        sets.push(rotation_set(small_coeff(cf.leading())?, true)?);
    }
    for cf in cfs {
        for a in cf.inner() {
            sets.push(rotation_set(small_coeff(a)?, false)?);
        }
    }
    Ok(sets)
}

/// Total assignment count, or a cap error once it passes `max_enum`.
fn assignment_count(sets: &[Vec<i64>], max_enum: u64) -> Result<u64> {
    let mut total: u128 = 1;
    for s in sets {
        total = total.saturating_mul(s.len() as u128);
        if total > u128::from(max_enum) {
            return Err(Error::EnumerationCap { needed: format!(">{max_enum}"), limit: max_enum });
        }
    }
    Ok(total as u64)
}

/// All distinct Chern vectors, sorted lexicographically.
pub fn chern_vectors(cfs: &[NegCf; 3], max_enum: u64) -> Result<Vec<ChernVector>> {
    let sets = knot_sets(cfs)?;
    let total = assignment_count(&sets, max_enum)?;

    let mut seen = Vec::with_capacity(total as usize);
    let mut digits = vec![0usize; sets.len()];
    loop {
        let rot = |knot: usize| sets[knot][digits[knot]];
        seen.push(ChernVector {
            d12: rot(0) - rot(1),
            d13: rot(0) - rot(2),
            chain_rots: (3..sets.len()).map(rot).collect(),
        });

        // Odometer increment, last knot fastest.
        let mut pos = sets.len();
        loop {
            if pos == 0 {
                seen.sort_unstable();
                seen.dedup();
                return Ok(seen);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < sets[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

pub fn chern_count(cfs: &[NegCf; 3], max_enum: u64) -> Result<u64> {
    Ok(chern_vectors(cfs, max_enum)?.len() as u64)
}
