//! Text and JSON renderings of a [`CountReport`].
//!
//! JSON keys, in order: `input`, `normalized`, `e0`, `expansions`,
//! `t_formula`, `upper_count`, `lower_count`, `agree`, and `chern_vectors`
//! when the vectors were requested. Counts are plain JSON integers of
//! arbitrary size; the enumeration fields are `null` when not computed.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::contfrac::NegCf;
use crate::counting::{ChernVector, CountReport};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::seifert::{NormalForm, SeifertTriple};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonReport {
    input: [Rational; 3],
    normalized: [Rational; 3],
    e0: Number,
    expansions: [Vec<Number>; 3],
    t_formula: Number,
    upper_count: Option<Number>,
    lower_count: Option<Number>,
    agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    chern_vectors: Option<Vec<Vec<i64>>>,
}

fn number(n: &impl ToString) -> Number {
    n.to_string().parse().expect("integers are valid JSON numbers")
}

fn big_int(n: &Number) -> Result<BigInt> {
    n.to_string().parse().map_err(|_| Error::Report(format!("{n} is not an integer")))
}

fn big_uint(n: &Number) -> Result<BigUint> {
    n.to_string().parse().map_err(|_| Error::Report(format!("{n} is not a natural number")))
}

impl From<&CountReport> for JsonReport {
    fn from(r: &CountReport) -> Self {
        JsonReport {
            input: r.input.coeffs().clone(),
            normalized: r.normal.coeffs().clone(),
            e0: number(r.e0()),
            expansions: r.expansions.clone().map(|cf| cf.coeffs().iter().map(number).collect()),
            t_formula: number(&r.t_formula),
            upper_count: r.upper_count.as_ref().map(number),
            lower_count: r.lower_count.as_ref().map(number),
            agree: r.agree,
            chern_vectors: r.chern_vectors.as_ref().map(|vs| {
                vs.iter()
                    .map(|v| [v.d12, v.d13].into_iter().chain(v.chain_rots.iter().copied()).collect())
                    .collect()
            }),
        }
    }
}

impl TryFrom<JsonReport> for CountReport {
    type Error = Error;

    fn try_from(j: JsonReport) -> Result<Self> {
        let [i1, i2, i3] = j.input;
        let input = SeifertTriple::new(i1, i2, i3)?;
        let [n1, n2, n3] = j.normalized;
        let normal = NormalForm::from_coeffs(n1, n2, n3)?;
        if &big_int(&j.e0)? != normal.e0() {
            return Err(Error::Report(format!("e0 {} does not match {normal}", j.e0)));
        }
        let mut expansions = Vec::with_capacity(3);
        for list in &j.expansions {
            let coeffs = list.iter().map(big_int).collect::<Result<Vec<_>>>()?;
            expansions.push(NegCf::new(coeffs)?);
        }
        let expansions: [NegCf; 3] = expansions.try_into().expect("three expansions");
        let chern_vectors = match j.chern_vectors {
            None => None,
            Some(rows) => Some(
                rows.into_iter()
                    .map(|row| match row.as_slice() {
                        [d12, d13, chain @ ..] => Ok(ChernVector { d12: *d12, d13: *d13, chain_rots: chain.to_vec() }),
                        _ => Err(Error::Report("a Chern vector needs at least two entries".into())),
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
        };
        Ok(CountReport {
            input,
            normal,
            expansions,
            t_formula: big_uint(&j.t_formula)?,
            upper_count: j.upper_count.as_ref().map(big_uint).transpose()?,
            lower_count: j.lower_count.as_ref().map(big_uint).transpose()?,
            agree: j.agree,
            chern_vectors,
        })
    }
}

/// Compact single-line JSON.
pub fn to_json(report: &CountReport) -> String {
    serde_json::to_string(&JsonReport::from(report)).expect("report serialization cannot fail")
}

pub fn from_json(s: &str) -> Result<CountReport> {
    let j: JsonReport = serde_json::from_str(s).map_err(|e| Error::Report(e.to_string()))?;
    j.try_into()
}

pub fn to_text(report: &CountReport) -> String {
    let mut out = String::new();
    let mut row = |label: &str, value: &dyn std::fmt::Display| {
        writeln!(out, "{label:<12} {value}").expect("writing to a String");
    };
    row("input", &report.input);
    row("normalized", &report.normal);
    row("e0", report.e0());
    let expansions: Vec<String> = report.expansions.iter().map(ToString::to_string).collect();
    row("expansions", &expansions.join(" "));
    row("T", &report.t_formula);
    if let Some(u) = &report.upper_count {
        row("upper_count", u);
    }
    if let Some(l) = &report.lower_count {
        row("lower_count", l);
    }
    if let Some(a) = report.agree {
        row("agree", &a);
    }
    if let Some(vs) = &report.chern_vectors {
        row("chern", &format!("{} distinct", vs.len()));
        for v in vs {
            row("", v);
        }
    }
    out
}

pub fn render(report: &CountReport, json: bool) -> String {
    if json {
        let mut s = to_json(report);
        s.push('\n');
        s
    } else {
        to_text(report)
    }
}
