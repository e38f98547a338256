//! JSON documents emitted by the command line. Partitions are integer
//! arrays; n-partitions are arrays of those.

use packsyz_core::stability::{Axis, StabilityReport, SyzygyStabilityReport, Unpadded};
use packsyz_core::syzygy::BettiTable;
use packsyz_core::{Decomposition, NPartition, Partition};
use serde::{Deserialize, Serialize};

use crate::error::CliResult;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub lambda: Vec<Vec<u32>>,
    pub mult: u64,
}

pub fn terms(dec: &Decomposition) -> Vec<Term> {
    dec.terms().map(|(l, m)| term(l, m)).collect()
}

fn term(l: &NPartition, mult: u64) -> Term {
    Term {
        lambda: l.components().iter().map(|p| p.parts().to_vec()).collect(),
        mult,
    }
}

pub fn unpadded_terms(u: &Unpadded) -> Vec<Term> {
    u.iter().map(|(l, &m)| term(l, m)).collect()
}

/// Inverse of [`terms`].
pub fn decomposition(sizes: &[u32], terms: &[Term]) -> CliResult<Decomposition> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let parts = t
            .lambda
            .iter()
            .map(|p| Partition::new(p.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        out.push((NPartition::new(parts), t.mult));
    }
    Ok(Decomposition::from_terms(sizes.to_vec(), out)?)
}

/// One entry `K_{p,q}^d(b)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BettiEntry {
    pub p: u32,
    pub q: u32,
    pub d: Vec<u32>,
    pub b: Vec<i64>,
    pub entries: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table {
    pub pmax: u32,
    pub qmax: u32,
    pub d: Vec<u32>,
    pub b: Vec<i64>,
    pub cells: Vec<BettiEntry>,
}

impl Table {
    pub fn of(t: &BettiTable) -> Self {
        Table {
            pmax: t.pmax,
            qmax: t.qmax,
            d: t.d.clone(),
            b: t.b.clone(),
            cells: t
                .entries()
                .map(|((p, q), dec)| BettiEntry {
                    p,
                    q,
                    d: t.d.clone(),
                    b: t.b.clone(),
                    entries: terms(dec),
                })
                .collect(),
        }
    }
}

/// `H̃_k(C_N^d)` in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Degree {
    pub k: i32,
    pub dimension: u128,
    pub entries: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Homology {
    #[serde(rename = "N")]
    pub sizes: Vec<u32>,
    pub d: Vec<u32>,
    pub degrees: Vec<Degree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum AxisJson {
    Fixed(u32),
    Range([u32; 2]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Point {
    #[serde(rename = "N")]
    pub sizes: Vec<u32>,
    pub entries: Vec<Term>,
    pub unpadded: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scan {
    pub d: Vec<u32>,
    pub k: i32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub p: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub q: Option<u32>,
    pub axes: Vec<AxisJson>,
    pub m: u32,
    pub bound: Vec<Option<u32>>,
    pub points: Vec<Point>,
    pub stable_from: Vec<Vec<u32>>,
    pub within_bound: bool,
    pub margin_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sharp: Option<bool>,
    pub passed: bool,
}

impl Scan {
    pub fn of(r: &StabilityReport) -> Self {
        Scan {
            d: r.subset_sizes.clone(),
            k: r.k,
            p: None,
            q: None,
            axes: r
                .axes
                .iter()
                .map(|a| match *a {
                    Axis::Fixed(v) => AxisJson::Fixed(v),
                    Axis::Range(lo, hi) => AxisJson::Range([lo, hi]),
                })
                .collect(),
            m: r.m,
            bound: r.bound.clone(),
            points: r
                .points
                .iter()
                .map(|pt| Point {
                    sizes: pt.sizes.clone(),
                    entries: terms(&pt.decomposition),
                    unpadded: unpadded_terms(&pt.unpadded),
                })
                .collect(),
            stable_from: r.stable_from.clone(),
            within_bound: r.within_bound,
            margin_ok: r.margin_ok,
            sharp: None,
            passed: r.passed(),
        }
    }

    pub fn of_syzygy(r: &SyzygyStabilityReport) -> Self {
        Scan {
            p: Some(r.p),
            q: Some(r.q),
            sharp: r.sharp,
            passed: r.passed(),
            ..Scan::of(&r.scan)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use packsyz_core::syzygy::betti_table;

    #[test]
    fn terms_round_trip() {
        let dec = packsyz_core::equivariant::homology_decomposition(&[3, 3], &[1, 1], 1).unwrap();
        let t = terms(&dec);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"[{"lambda":[[1,1,1],[2,1]],"mult":1},{"lambda":[[2,1],[1,1,1]],"mult":1}]"#);
        let back: Vec<Term> = serde_json::from_str(&text).unwrap();
        assert_eq!(decomposition(&[3, 3], &back).unwrap(), dec);
    }

    #[test]
    fn table_schema() {
        let t = Table::of(&betti_table(1, 1, &[1, 1], &[0, 0]).unwrap());
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["cells"][1]["p"], 0);
        assert_eq!(v["cells"][1]["q"], 1);
        assert_eq!(v["cells"][3]["entries"][0]["lambda"], serde_json::json!([[1, 1], [1, 1]]));
        let back: Table = serde_json::from_value(v).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Term>(r#"{"lambda":[],"mult":1,"extra":0}"#).is_err());
    }
}
