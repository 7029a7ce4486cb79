use feq_core::frobenius_euler::{FeNumberTable, FePolyTable};
use feq_core::qsums::alt_power_sum;
use feq_core::{IntPolynomial, XPolynomial};
use serde::Serialize;

use crate::args::{Format, TableKind};
use crate::{output, CliError};

#[derive(Debug, Serialize)]
struct NumberEntry<'a> {
    n: usize,
    /// `(q - 1)^n H_n(q)`, ascending in `q`.
    numerator: &'a IntPolynomial,
    den_power: usize,
}

#[derive(Debug, Serialize)]
struct PolyEntry<'a> {
    n: usize,
    /// Coefficients of `x^0, x^1, ...` as rational functions of `q`.
    coefficients: &'a XPolynomial,
}

#[derive(Debug, Serialize)]
struct SumEntry {
    k: usize,
    m: usize,
    coefficients: IntPolynomial,
}

#[derive(Debug, Serialize)]
struct TableReport<'a> {
    command: &'static str,
    kind: &'static str,
    n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    numbers: Option<Vec<NumberEntry<'a>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    polynomials: Option<Vec<PolyEntry<'a>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sums: Option<Vec<SumEntry>>,
}

#[derive(Debug, Serialize)]
struct CsvRow {
    table: &'static str,
    n: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    value: String,
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Numbers => "numbers",
        TableKind::Polynomials => "polynomials",
        TableKind::Sums => "sums",
        TableKind::All => "all",
    }
}

pub fn run(kind: TableKind, n_max: usize, format: Format) -> Result<Vec<u8>, CliError> {
    let numbers = FeNumberTable::new(n_max);
    let polys = FePolyTable::from_numbers(&numbers);
    let want = |k: TableKind| kind == k || kind == TableKind::All;

    let number_entries = want(TableKind::Numbers).then(|| {
        (0..=n_max).map(|n| NumberEntry { n, numerator: numbers.numerator(n), den_power: n }).collect::<Vec<_>>()
    });
    let poly_entries = want(TableKind::Polynomials)
        .then(|| (0..=n_max).map(|n| PolyEntry { n, coefficients: polys.get(n) }).collect::<Vec<_>>());
    // S_{k,q}(m) = sum_{l <= m} (-1)^l l^k q^l
    let sum_entries = want(TableKind::Sums).then(|| {
        let mut out = Vec::new();
        for k in 0..=n_max {
            for m in 0..=n_max {
                out.push(SumEntry { k, m, coefficients: alt_power_sum(k as u32, m, 1) });
            }
        }
        out
    });

    match format {
        Format::Json => output::json(&TableReport {
            command: "table",
            kind: kind_name(kind),
            n_max,
            numbers: number_entries,
            polynomials: poly_entries,
            sums: sum_entries,
        }),
        Format::Csv => {
            let mut rows = Vec::new();
            for e in number_entries.iter().flatten() {
                rows.push(CsvRow {
                    table: "numbers",
                    n: Some(e.n),
                    k: None,
                    m: None,
                    value: numbers.get(e.n).to_string(),
                });
            }
            for e in poly_entries.iter().flatten() {
                rows.push(CsvRow {
                    table: "polynomials",
                    n: Some(e.n),
                    k: None,
                    m: None,
                    value: e.coefficients.to_string(),
                });
            }
            for e in sum_entries.iter().flatten() {
                rows.push(CsvRow {
                    table: "sums",
                    n: None,
                    k: Some(e.k),
                    m: Some(e.m),
                    value: e.coefficients.to_string(),
                });
            }
            output::csv(&rows)
        }
    }
}
