//! Sign configurations of the outermost continued fraction blocks.
//!
//! `p0[i]` counts positive basic slices in the outermost block of fiber `i`
//! and ranges over `0..=|a0[i] + 1|`, i.e. `|a0[i]|` values. Shifting all
//! three entries by the same `±1` gives an isotopic structure.

use crate::error::{Error, Result};

pub type P0Triple = [u64; 3];

fn check_a0(a0: [i64; 3]) -> Result<()> {
    if a0[0] > -1 || a0[1] > -2 || a0[2] > -2 {
        return Err(Error::Domain(format!(
            "outer coefficients {a0:?} need a0[0] <= -1 and a0[1], a0[2] <= -2"
        )));
    }
    Ok(())
}

fn sizes(a0: [i64; 3]) -> [u64; 3] {
    a0.map(i64::unsigned_abs)
}

/// Number of raw configurations, `|a0[0] a0[1] a0[2]|`, checked against the cap.
fn raw_count(a0: [i64; 3], max_enum: u64) -> Result<u64> {
    let [x, y, z] = sizes(a0).map(u128::from);
    let total = x * y * z;
    if total > u128::from(max_enum) {
        return Err(Error::EnumerationCap { needed: total.to_string(), limit: max_enum });
    }
    Ok(total as u64)
}

/// Every configuration, in lexicographic order.
pub fn enumerate_p0(a0: [i64; 3], max_enum: u64) -> Result<Vec<P0Triple>> {
    check_a0(a0)?;
    let total = raw_count(a0, max_enum)?;
    let [s1, s2, s3] = sizes(a0);
    let mut out = Vec::with_capacity(total as usize);
    for p1 in 0..s1 {
        for p2 in 0..s2 {
            for p3 in 0..s3 {
                out.push([p1, p2, p3]);
            }
        }
    }
    Ok(out)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri] = rj;
        }
    }
}

/// Equivalence classes of configurations under the simultaneous shift,
/// computed by union-find over the full enumeration.
pub fn p0_class_count(a0: [i64; 3], max_enum: u64) -> Result<u128> {
    let configs = enumerate_p0(a0, max_enum)?;
    let [_, s2, s3] = sizes(a0);
    let index = |p: P0Triple| ((p[0] * s2 + p[1]) * s3 + p[2]) as usize;
    let limits = sizes(a0);
    let mut dsu = Dsu::new(configs.len());
    for &p in &configs {
        // The -1 direction is the same edge seen from the other end.
        let up = [p[0] + 1, p[1] + 1, p[2] + 1];
        if up.iter().zip(limits).all(|(v, s)| *v < s) {
            dsu.union(index(p), index(up));
        }
    }
    let classes = (0..configs.len()).filter(|&i| dsu.find(i) == i).count();
    Ok(classes as u128)
}

/// Closed-form class count: `|a||b| + |b||c| + |c||a| - |a| - |b| - |c| + 1`
/// when every `a0[i] <= -2`, and `|a0[1] a0[2]|` when `a0[0] = -1`.
pub fn p0_closed_form(a0: [i64; 3]) -> Result<u128> {
    check_a0(a0)?;
    let [a, b, c] = sizes(a0).map(u128::from);
    if a0[0] == -1 {
        Ok(b * c)
    } else {
        Ok(a * b + b * c + c * a + 1 - a - b - c)
    }
}
