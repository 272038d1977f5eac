//! Output records: the JSON verification report and the batch CSV row.

use std::fmt::Write as _;

use monideal::{minimal_primes, SquareFreeIdeal, VerificationReport};
use serde::{Deserialize, Serialize};

/// Flat JSON record for one ideal. Names refer to the ideal the numbers were
/// computed on (the polarization when the input was not square-free).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub big_height: usize,
    pub field: u32,
    pub polarized: bool,
    pub variables: Vec<String>,
    pub generators: Vec<Vec<String>>,
    pub minimal_primes: Vec<Vec<String>>,
}

impl JsonReport {
    pub fn new(ideal: &SquareFreeIdeal, report: VerificationReport, polarized: bool) -> Self {
        let vars = ideal.vars();
        let names = |s: &monideal::Subset| vars.names(s);
        Self {
            big_height: report.d_max,
            field: report.field_p,
            polarized,
            variables: vars.labels().to_vec(),
            generators: ideal.generators().iter().map(&names).collect(),
            minimal_primes: minimal_primes(ideal).primes.iter().map(&names).collect(),
            report,
        }
    }

    /// Human-readable `key: value` rendering.
    pub fn to_text(&self) -> String {
        let r = &self.report;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".to_string());
        let mut s = String::new();
        let gens: Vec<String> = self.generators.iter().map(|g| g.join("*")).collect();
        let primes: Vec<String> = self
            .minimal_primes
            .iter()
            .map(|p| format!("({})", p.join(",")))
            .collect();
        let _ = writeln!(s, "ideal: {}", gens.join(", "));
        if self.polarized {
            let _ = writeln!(s, "polarized: yes");
        }
        let _ = writeln!(s, "field: GF({})", self.field);
        let _ = writeln!(s, "n: {}", r.n);
        let _ = writeln!(s, "minimal primes: {}", primes.join(" "));
        let _ = writeln!(s, "d_min: {}", r.d_min);
        let _ = writeln!(s, "big height: {}", r.d_max);
        let _ = writeln!(s, "dim: {}", r.dim);
        let _ = writeln!(s, "depth: {}", r.depth);
        let _ = writeln!(s, "pd: {}", r.pd);
        let _ = writeln!(
            s,
            "pd (oracle): {}",
            opt(r.pd_oracle.map(|v| v.to_string()))
        );
        let _ = writeln!(s, "cohen-macaulay: {}", r.is_cm);
        let _ = writeln!(s, "sequentially cohen-macaulay: {}", r.is_scm);
        let _ = writeln!(s, "depth <= n - d: {}", r.inequality_depth_ok);
        let _ = writeln!(s, "pd >= d: {}", r.inequality_pd_ok);
        let _ = writeln!(s, "scm implies pd = d: {}", r.theorem_equality_ok);
        let _ = writeln!(
            s,
            "oracle agrees: {}",
            opt(r.oracle_agrees.map(|v| v.to_string()))
        );
        s
    }
}

/// One line of batch CSV output. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchRow {
    pub kind: String,
    pub seed: u64,
    pub n: usize,
    pub gens: usize,
    pub field: u32,
    pub d_min: usize,
    pub d_max: usize,
    pub dim: usize,
    pub depth: usize,
    pub pd: usize,
    pub pd_oracle: Option<usize>,
    pub is_cm: bool,
    pub is_scm: bool,
    pub ineq_depth: bool,
    pub ineq_pd: bool,
    pub scm_equality: bool,
    pub oracle_agrees: Option<bool>,
}

pub const BATCH_HEADER: &str =
    "kind,seed,n,gens,field,d_min,d_max,dim,depth,pd,pd_oracle,is_cm,is_scm,ineq_depth,ineq_pd,scm_equality,oracle_agrees";

impl BatchRow {
    pub fn new(kind: &str, seed: u64, gens: usize, r: &VerificationReport) -> Self {
        Self {
            kind: kind.to_string(),
            seed,
            n: r.n,
            gens,
            field: r.field_p,
            d_min: r.d_min,
            d_max: r.d_max,
            dim: r.dim,
            depth: r.depth,
            pd: r.pd,
            pd_oracle: r.pd_oracle,
            is_cm: r.is_cm,
            is_scm: r.is_scm,
            ineq_depth: r.inequality_depth_ok,
            ineq_pd: r.inequality_pd_ok,
            scm_equality: r.theorem_equality_ok,
            oracle_agrees: r.oracle_agrees,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use monideal::{verify_main_theorem, PrimeField};

    fn p4_report() -> (SquareFreeIdeal, VerificationReport) {
        let i = SquareFreeIdeal::numbered(4, &[&[0, 1], &[1, 2], &[2, 3]]).unwrap();
        let r = verify_main_theorem(&i, PrimeField::GF2, Some(20)).unwrap();
        (i, r)
    }

    #[test]
    fn json_is_flat() {
        let (i, r) = p4_report();
        let j = JsonReport::new(&i, r, false);
        let v: serde_json::Value = serde_json::to_value(&j).unwrap();
        assert_eq!(v["pd"], 2);
        assert_eq!(v["big_height"], 2);
        assert_eq!(v["field"], 2);
        assert_eq!(v["generators"][0], serde_json::json!(["x1", "x2"]));
        assert_eq!(v["minimal_primes"].as_array().unwrap().len(), 3);
        let back: JsonReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, j);
    }

    #[test]
    fn csv_header_matches_row_fields() {
        let (_, r) = p4_report();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.serialize(BatchRow::new("tree", 7, 3, &r)).unwrap();
        let text = String::from_utf8(w.into_inner().unwrap()).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(BATCH_HEADER));
        assert_eq!(
            lines.next(),
            Some("tree,7,4,3,2,2,2,2,2,2,2,true,true,true,true,true,true")
        );
    }

    #[test]
    fn text_mentions_every_check() {
        let (i, r) = p4_report();
        let t = JsonReport::new(&i, r, false).to_text();
        assert!(t.contains("pd: 2"));
        assert!(t.contains("big height: 2"));
        assert!(t.contains("oracle agrees: true"));
    }
}
