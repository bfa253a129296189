//! Side-by-side runs of every solver and their tabular rendering.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dequant::{self, FamilySign};
use crate::error::{Error, Result};
use crate::exactnum::{GaussRat, Rat, Surd2};
use crate::oracle::{self, BitFn, Classification, OracleHandle};
use crate::quantum::{self, Distribution4};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Method {
    Baseline,
    Quantum,
    Gauss,
    Family,
    Surd,
}

impl Method {
    /// Declaration order, which is also report order.
    pub const ALL: [Method; 5] = [
        Method::Baseline,
        Method::Quantum,
        Method::Gauss,
        Method::Family,
        Method::Surd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Baseline => "baseline",
            Method::Quantum => "quantum",
            Method::Gauss => "gauss",
            Method::Family => "family",
            Method::Surd => "surd",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "gauss-family" => Ok(Method::Family),
            _ => Method::ALL
                .into_iter()
                .find(|m| m.name() == s)
                .ok_or_else(|| Error::parse("method", s)),
        }
    }
}

/// Parameter of the scaled ℚ[i] family. Defaults to `a = 1`, plus variant.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FamilyParams {
    a: Rat,
    sign: FamilySign,
}

impl FamilyParams {
    pub fn new(a: Rat, sign: FamilySign) -> Result<FamilyParams> {
        if a.is_zero() {
            return Err(Error::ZeroParameter);
        }
        Ok(FamilyParams { a, sign })
    }

    pub fn a(&self) -> Rat {
        self.a
    }

    pub fn sign(&self) -> FamilySign {
        self.sign
    }
}

impl Default for FamilyParams {
    fn default() -> Self {
        FamilyParams {
            a: Rat::ONE,
            sign: FamilySign::Plus,
        }
    }
}

/// Exact value that justifies a classification.
///
/// The baseline's witness is the pair of observed bits, rendered `(f0,f1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Witness {
    Bits(BitFn),
    Distribution(Distribution4),
    Gauss(GaussRat),
    Surd(Surd2),
}

impl Witness {
    /// Parses the text form produced for `method`.
    pub fn parse(method: Method, s: &str) -> Result<Witness> {
        match method {
            Method::Baseline => {
                let inner = s
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .and_then(|t| t.split_once(','))
                    .ok_or_else(|| Error::parse("bit pair", s))?;
                let bit = |t: &str| t.parse::<u8>().map_err(|_| Error::parse("bit pair", s));
                Ok(Witness::Bits(BitFn::from_bits(
                    bit(inner.0)?,
                    bit(inner.1)?,
                )?))
            }
            Method::Quantum => Ok(Witness::Distribution(s.parse()?)),
            Method::Gauss | Method::Family => Ok(Witness::Gauss(s.parse()?)),
            Method::Surd => Ok(Witness::Surd(s.parse()?)),
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Bits(b) => write!(f, "({},{})", b.f0(), b.f1()),
            Witness::Distribution(d) => write!(f, "{d}"),
            Witness::Gauss(z) => write!(f, "{z}"),
            Witness::Surd(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RunReport {
    pub oracle: BitFn,
    pub method: Method,
    pub classification: Classification,
    /// Oracle counter delta over the run.
    pub queries: u64,
    pub witness: Witness,
}

/// Flat, string-typed form of a [`RunReport`], the CSV/JSON schema.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportRow {
    pub oracle: String,
    pub method: String,
    pub classification: Classification,
    pub queries: u64,
    pub witness: String,
}

impl RunReport {
    pub fn to_row(&self) -> ReportRow {
        ReportRow {
            oracle: self.oracle.to_string(),
            method: self.method.to_string(),
            classification: self.classification,
            queries: self.queries,
            witness: self.witness.to_string(),
        }
    }

    pub fn from_row(row: &ReportRow) -> Result<RunReport> {
        let method = row.method.parse()?;
        Ok(RunReport {
            oracle: row.oracle.parse()?,
            method,
            classification: row.classification,
            queries: row.queries,
            witness: Witness::parse(method, &row.witness)?,
        })
    }
}

/// Runs one solver on a fresh handle for `f`.
pub fn run(f: BitFn, method: Method, family: FamilyParams) -> Result<RunReport> {
    let mut h = OracleHandle::new(f);
    let before = h.query_count();
    let (classification, witness) = match method {
        Method::Baseline => {
            let (c, seen) = oracle::baseline_with_witness(&mut h);
            (c, Witness::Bits(seen))
        }
        Method::Quantum => {
            let (d, c) = quantum::run_deutsch(&mut h)?;
            (c, Witness::Distribution(d))
        }
        Method::Gauss => {
            let v = dequant::solve_gauss(&mut h);
            (v.classification, Witness::Gauss(v.product))
        }
        Method::Family => {
            let v = dequant::solve_gauss_family(&mut h, family.a, family.sign)?;
            (v.classification, Witness::Gauss(v.product))
        }
        Method::Surd => {
            let v = dequant::solve_surd(&mut h);
            (v.classification, Witness::Surd(v.product))
        }
    };
    Ok(RunReport {
        oracle: f,
        method,
        classification,
        queries: h.query_count() - before,
        witness,
    })
}

/// Every `(oracle, method)` pair, oracles outer and ascending.
pub fn run_grid(
    oracles: &[BitFn],
    methods: &[Method],
    family: FamilyParams,
) -> Result<Vec<RunReport>> {
    let mut out = Vec::with_capacity(oracles.len() * methods.len());
    for &f in oracles {
        for &m in methods {
            out.push(run(f, m, family)?);
        }
    }
    Ok(out)
}

/// The full 4 × 5 comparison with default family parameters.
pub fn full_table() -> Result<Vec<RunReport>> {
    run_grid(&BitFn::ALL, &Method::ALL, FamilyParams::default())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Text,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::parse("format", s)),
        }
    }
}

pub const CSV_HEADER: &str = "oracle,method,classification,queries,witness";

pub fn render(reports: &[RunReport], format: Format) -> String {
    let rows: Vec<ReportRow> = reports.iter().map(RunReport::to_row).collect();
    match format {
        Format::Text => render_text(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if rows.is_empty() {
                w.write_record(CSV_HEADER.split(','))
                    .expect("in-memory write");
            }
            for row in &rows {
                w.serialize(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

fn render_text(rows: &[ReportRow]) -> String {
    let header = ["oracle", "method", "classification", "queries", "witness"];
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.oracle.clone(),
                r.method.clone(),
                r.classification.to_string(),
                r.queries.to_string(),
                r.witness.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |items: &[&str]| {
        let parts: Vec<String> = items
            .iter()
            .zip(widths)
            .map(|(s, w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header);
    for row in &cells {
        line(&row.each_ref().map(String::as_str));
    }
    out
}

/// Parses CSV produced by [`render`] back into reports.
pub fn parse_csv(text: &str) -> Result<Vec<RunReport>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.deserialize::<ReportRow>()
        .map(|row| {
            let row = row.map_err(|e| Error::parse("csv row", &e.to_string()))?;
            RunReport::from_row(&row)
        })
        .collect()
}

/// Parses JSON produced by [`render`] back into reports.
pub fn parse_json(text: &str) -> Result<Vec<RunReport>> {
    let rows: Vec<ReportRow> =
        serde_json::from_str(text).map_err(|e| Error::parse("json report", &e.to_string()))?;
    rows.iter().map(RunReport::from_row).collect()
}
