//! Serializable coefficient tables.
//!
//! Rationals are written as decimal strings in lowest terms. Coefficients are sorted by
//! `(row, col, key)`, so exact output is byte-identical across runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::multiplicity::Multiplicity;
use crate::polyx::{PolyMat2, PolyVec2, PolyX};
use crate::rational::{fmt_rational, Rational};
use crate::transport::VecLaurent2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    E,
    P,
    M,
    N,
    #[serde(rename = "monic")]
    Monic,
    #[serde(rename = "spherical")]
    Spherical,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::E => "E",
            Family::P => "P",
            Family::M => "M",
            Family::N => "N",
            Family::Monic => "monic",
            Family::Spherical => "spherical",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CoeffEntry {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub row: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub col: Option<u8>,
    /// Exponent of `z` or degree in `x`.
    pub key: i64,
    pub num: String,
    pub den: String,
}

impl CoeffEntry {
    fn new(row: Option<u8>, col: Option<u8>, key: i64, c: &Rational) -> Self {
        Self { row, col, key, num: c.numer().to_string(), den: c.denom().to_string() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub family: Family,
    pub k: Option<[String; 2]>,
    pub scale: Option<i64>,
    pub params: BTreeMap<String, String>,
    pub coeffs: Vec<CoeffEntry>,
}

impl PolyRecord {
    pub fn new(family: Family, k: Option<&Multiplicity>) -> Self {
        Self {
            family,
            k: k.map(|k| [fmt_rational(k.k1()), fmt_rational(k.k2())]),
            scale: k.map(|k| k.scale()),
            params: BTreeMap::new(),
            coeffs: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: impl ToString) -> Self {
        self.params.insert(name.to_string(), value.to_string());
        self
    }

    fn push_laurent(&mut self, row: Option<u8>, col: Option<u8>, p: &LaurentPoly) {
        self.coeffs.extend(p.terms().map(|(e, c)| CoeffEntry::new(row, col, e, c)));
    }

    fn push_polyx(&mut self, row: Option<u8>, col: Option<u8>, p: &PolyX) {
        self.coeffs.extend(p.terms().map(|(d, c)| CoeffEntry::new(row, col, d as i64, c)));
    }

    pub fn with_laurent(mut self, p: &LaurentPoly) -> Self {
        self.push_laurent(None, None, p);
        self.finish()
    }

    pub fn with_vec_laurent(mut self, v: &VecLaurent2) -> Self {
        for i in 0..2 {
            self.push_laurent(Some(i as u8), None, v.comp(i));
        }
        self.finish()
    }

    pub fn with_polyvec(mut self, v: &PolyVec2) -> Self {
        for i in 0..2 {
            self.push_polyx(Some(i as u8), None, v.get(i));
        }
        self.finish()
    }

    pub fn with_polymat(mut self, m: &PolyMat2) -> Self {
        for i in 0..2 {
            for j in 0..2 {
                self.push_polyx(Some(i as u8), Some(j as u8), m.entry(i, j));
            }
        }
        self.finish()
    }

    fn finish(mut self) -> Self {
        self.coeffs.sort();
        self
    }

    /// Coefficients keyed by `(row, col, key)`, parsed back to rationals.
    pub fn coefficient_map(&self) -> BTreeMap<(Option<u8>, Option<u8>, i64), Rational> {
        self.coeffs
            .iter()
            .map(|c| {
                let r = Rational::new(c.num.parse().expect("integer"), c.den.parse().expect("integer"));
                ((c.row, c.col, c.key), r)
            })
            .collect()
    }

    /// Compact JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        serde_json::to_value(self).expect("serializable").to_string()
    }

    const CSV_HEADER: &'static str = "family,k1,k2,scale,params,row,col,key,num,den";

    fn csv_rows(&self, out: &mut String) {
        let (k1, k2) = self.k.as_ref().map_or(("", ""), |[a, b]| (a.as_str(), b.as_str()));
        let scale = self.scale.map(|s| s.to_string()).unwrap_or_default();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let opt = |v: Option<u8>| v.map(|v| v.to_string()).unwrap_or_default();
        for c in &self.coeffs {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{}",
                self.family.tag(),
                k1,
                k2,
                scale,
                params.join(";"),
                opt(c.row),
                opt(c.col),
                c.key,
                c.num,
                c.den
            );
        }
    }
}

/// A JSON array of records, keys sorted.
pub fn records_to_json(records: &[PolyRecord]) -> String {
    let value = serde_json::to_value(records).expect("serializable");
    serde_json::to_string_pretty(&value).expect("serializable")
}

/// One coefficient per row, all records in one table.
pub fn records_to_csv(records: &[PolyRecord]) -> String {
    let mut out = String::new();
    out.push_str(PolyRecord::CSV_HEADER);
    out.push('\n');
    for r in records {
        r.csv_rows(&mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn laurent_record_json() {
        let k = Multiplicity::exact(1, 1).unwrap();
        let p = LaurentPoly::from_terms([(-1, int(1)), (1, rat(3, 5)), (0, rat(2, 5))]);
        let r = PolyRecord::new(Family::E, Some(&k)).param("n", -1).with_laurent(&p);
        assert_eq!(
            r.to_json(),
            r#"{"coeffs":[{"den":"1","key":-1,"num":"1"},{"den":"5","key":0,"num":"2"},{"den":"5","key":1,"num":"3"}],"family":"E","k":["1","1"],"params":{"n":"-1"},"scale":1}"#
        );
        let back: PolyRecord = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.coefficient_map()[&(None, None, 1)], rat(3, 5));
    }

    #[test]
    fn matrix_record_csv() {
        let m = PolyMat2::constant(&crate::polyx::Mat2::new(int(1), rat(1, 4), int(0), int(1)));
        let r = PolyRecord::new(Family::M, Some(&Multiplicity::exact(1, 1).unwrap()))
            .param("N", 0)
            .with_polymat(&m);
        let csv = records_to_csv(&[r]);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "family,k1,k2,scale,params,row,col,key,num,den");
        assert_eq!(lines[1], "M,1,1,1,N=0,0,0,0,1,1");
        assert_eq!(lines[2], "M,1,1,1,N=0,0,1,0,1,4");
        assert_eq!(lines[3], "M,1,1,1,N=0,1,1,0,1,1");
        assert_eq!(lines.len(), 4);
    }
}
