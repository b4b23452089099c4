//! The finite exceptional sets: for each `p1`, the prime pairs `(p2, p3)`
//! with `p2 < 4(p1-1)` and `p3 < p1^2`, classified by which closed form the
//! brute-force gap matches.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{odd_primes_between, primes_up_to, Sieve};
use crate::error::{Error, Result};
use crate::theorems::{verify_triple, VerificationRecord};

/// Largest `p1` surveyed by default.
pub const DEFAULT_BUDGET_P1: u64 = 23;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Classification {
    /// `g = λ`.
    V1,
    /// `g = p1 - 1` and `g != λ`.
    V2,
    /// Neither.
    V3,
}

impl Classification {
    pub fn of(g: u64, lambda: i64, p1: u64) -> Self {
        if g as i64 == lambda {
            Classification::V1
        } else if g == p1 - 1 {
            Classification::V2
        } else {
            Classification::V3
        }
    }
}

/// One surveyed triple. Field order is the CSV column order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub n: u64,
    pub g: u64,
    pub lambda: i64,
    pub lower: i64,
    pub upper_exclusive: i64,
    pub classification: Classification,
    pub eq2: bool,
    #[serde(rename = "C1")]
    pub c1: bool,
    #[serde(rename = "C2")]
    pub c2: bool,
    #[serde(rename = "D1")]
    pub d1: bool,
    #[serde(rename = "D2")]
    pub d2: bool,
}

impl From<&VerificationRecord> for SurveyRecord {
    fn from(v: &VerificationRecord) -> Self {
        SurveyRecord {
            p1: v.p1,
            p2: v.p2,
            p3: v.p3,
            n: v.n,
            g: v.g,
            lambda: v.lambda,
            lower: v.lower,
            upper_exclusive: v.upper_exclusive,
            classification: Classification::of(v.g, v.lambda, v.p1),
            eq2: v.eq2,
            c1: v.c1,
            c2: v.c2,
            d1: v.d1,
            d2: v.d2,
        }
    }
}

impl SurveyRecord {
    pub fn bounds_hold(&self) -> bool {
        let g = self.g as i64;
        self.lower <= g && g < self.upper_exclusive
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrequencyRow {
    pub p1: u64,
    pub total: usize,
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub records: Vec<SurveyRecord>,
}

impl FrequencyRow {
    pub fn counts(&self) -> (usize, usize, usize, usize) {
        (self.total, self.v1, self.v2, self.v3)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurveyConfig {
    pub budget_p1: u64,
    pub threads: usize,
}

impl Default for SurveyConfig {
    fn default() -> Self {
        SurveyConfig {
            budget_p1: DEFAULT_BUDGET_P1,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// All `(p2, p3)` with `p1 < p2 < p3` prime, `p2 < 4(p1-1)`, `p3 < p1^2`,
/// in lexicographic order.
pub fn enumerate_violations(p1: u64) -> Result<Vec<(u64, u64)>> {
    Sieve::shared().require_odd_prime(p1)?;
    let p2_end = 4 * (p1 - 1);
    let p3_end = p1 * p1;
    let primes = primes_up_to(p3_end);
    let mut out = Vec::new();
    for p2 in odd_primes_between(&primes, p1, p2_end) {
        out.extend(odd_primes_between(&primes, p2, p3_end).map(|p3| (p2, p3)));
    }
    Ok(out)
}

/// Verifies every violating pair for `p1` and tallies the classes.
pub fn classify(p1: u64, config: &SurveyConfig) -> Result<FrequencyRow> {
    Sieve::shared().require_odd_prime(p1)?;
    if p1 > config.budget_p1 {
        return Err(Error::BudgetExceeded {
            p1,
            budget: config.budget_p1,
        });
    }
    let pairs = enumerate_violations(p1)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.max(1))
        .build()
        .map_err(|e| Error::InvariantViolation(e.to_string()))?;
    let records: Vec<SurveyRecord> = pool.install(|| {
        pairs
            .par_iter()
            .map(|&(p2, p3)| verify_triple(p1, p2, p3).map(|v| SurveyRecord::from(&v)))
            .collect::<Result<_>>()
    })?;

    let count = |c| records.iter().filter(|r| r.classification == c).count();
    Ok(FrequencyRow {
        p1,
        total: records.len(),
        v1: count(Classification::V1),
        v2: count(Classification::V2),
        v3: count(Classification::V3),
        records,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Json,
}

pub const CSV_HEADER: [&str; 14] = [
    "p1",
    "p2",
    "p3",
    "n",
    "g",
    "lambda",
    "lower",
    "upper_exclusive",
    "classification",
    "eq2",
    "C1",
    "C2",
    "D1",
    "D2",
];

/// Writes records sorted by `(p1, p2, p3)`.
pub fn write_records<W: Write>(records: &[SurveyRecord], format: ExportFormat, out: W) -> Result<()> {
    let mut sorted = records.to_vec();
    sorted.sort_by_key(|r| (r.p1, r.p2, r.p3));
    match format {
        ExportFormat::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
            w.write_record(CSV_HEADER)?;
            for r in &sorted {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        ExportFormat::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, &sorted)?;
            out.write_all(b"\n")?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn export(records: &[SurveyRecord], format: ExportFormat, path: &Path) -> Result<()> {
    write_records(records, format, BufWriter::new(File::create(path)?))
}

pub fn read_json(path: &Path) -> Result<Vec<SurveyRecord>> {
    let file = File::open(path)?;
    serde_json::from_reader(std::io::BufReader::new(file)).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serial() -> SurveyConfig {
        SurveyConfig {
            threads: 1,
            ..SurveyConfig::default()
        }
    }

    #[test]
    fn violation_counts() {
        assert_eq!(enumerate_violations(3).unwrap(), vec![(5, 7)]);
        let v5 = enumerate_violations(5).unwrap();
        assert_eq!(v5.len(), 12);
        assert!(v5.iter().all(|&(p2, p3)| [7, 11, 13].contains(&p2) && p3 < 25));
        assert_eq!(enumerate_violations(7).unwrap().len(), 40);
        assert_eq!(enumerate_violations(9), Err(Error::NotOddPrime(9)));
    }

    #[test]
    fn classify_small_rows() {
        assert_eq!(classify(3, &serial()).unwrap().counts(), (1, 1, 0, 0));
        assert_eq!(classify(5, &serial()).unwrap().counts(), (12, 12, 0, 0));
        assert_eq!(classify(7, &serial()).unwrap().counts(), (40, 39, 0, 1));
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SurveyConfig {
            budget_p1: 7,
            threads: 1,
        };
        assert_eq!(
            classify(11, &cfg),
            Err(Error::BudgetExceeded { p1: 11, budget: 7 })
        );
    }

    #[test]
    fn thread_count_does_not_change_results() {
        let a = classify(7, &serial()).unwrap();
        let b = classify(7, &SurveyConfig { threads: 3, ..serial() }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn classification_precedence() {
        assert_eq!(Classification::of(2, 2, 3), Classification::V1);
        assert_eq!(Classification::of(2, 1, 3), Classification::V2);
        assert_eq!(Classification::of(5, 1, 3), Classification::V3);
    }

    #[test]
    fn csv_output() {
        let mut buf = Vec::new();
        write_records(&[], ExportFormat::Csv, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "p1,p2,p3,n,g,lambda,lower,upper_exclusive,classification,eq2,C1,C2,D1,D2\n"
        );

        let row = classify(3, &serial()).unwrap();
        let mut buf = Vec::new();
        write_records(&row.records, ExportFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "3,5,7,105,13,13,13,85,V1,false,false,false,false,true");
    }

    #[test]
    fn json_round_trip() {
        let row = classify(5, &serial()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v5.json");
        export(&row.records, ExportFormat::Json, &path).unwrap();
        assert_eq!(read_json(&path).unwrap(), row.records);
    }
}
