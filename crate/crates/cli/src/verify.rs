use std::collections::BTreeMap;

use feq_core::identities::{cases, Case, Grid};
use feq_core::{format_rational, BigRational, IdentityId, Mode, Status, VerificationReport};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Format, Suite};
use crate::manifest::Manifest;
use crate::{output, CliError};

pub fn suite_ids(suite: Suite) -> Vec<IdentityId> {
    let paper = IdentityId::ALL_Q.into_iter().chain(IdentityId::PRINTED);
    match suite {
        Suite::Paper => paper.collect(),
        Suite::Corrected => IdentityId::CORRECTED.to_vec(),
        Suite::All => paper.chain(IdentityId::CORRECTED).collect(),
    }
}

fn suite_name(suite: Suite) -> &'static str {
    match suite {
        Suite::Paper => "paper",
        Suite::Corrected => "corrected",
        Suite::All => "all",
    }
}

#[derive(Debug, Serialize)]
struct Record<'a> {
    #[serde(flatten)]
    report: &'a VerificationReport,
    expected: Option<Status>,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Debug, Serialize)]
struct GridSpec {
    n_max: usize,
    w_max: usize,
    #[serde(rename = "T")]
    order: usize,
}

#[derive(Debug, Serialize)]
struct Summary {
    cases: usize,
    records: usize,
    mismatches: usize,
}

#[derive(Debug, Serialize)]
struct VerifyReport<'a> {
    command: &'static str,
    suite: &'static str,
    grid: GridSpec,
    q_samples: Vec<String>,
    records: Vec<Record<'a>>,
    summary: Summary,
}

#[derive(Debug, Serialize)]
struct CsvRow {
    id: IdentityId,
    params: String,
    mode: &'static str,
    q0: Option<String>,
    status: Status,
    expected: Option<Status>,
    #[serde(rename = "match")]
    matches: bool,
    witness: String,
    notes: String,
}

fn params_text(params: &BTreeMap<String, i64>) -> String {
    params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(";")
}

/// Output bytes and whether every record met its expectation.
pub fn run(
    suite: Suite,
    n_max: usize,
    w_max: usize,
    order: usize,
    q_samples: &[BigRational],
    format: Format,
) -> Result<(Vec<u8>, bool), CliError> {
    let grid = Grid::new(n_max, w_max, order);
    let all_cases: Vec<Case> = suite_ids(suite).into_iter().flat_map(|id| cases(id, &grid)).collect();
    let mut modes = vec![Mode::SymbolicQ, Mode::AtQ1];
    modes.extend(q_samples.iter().cloned().map(Mode::AtRationalQ));

    let reports: Vec<VerificationReport> = all_cases
        .par_iter()
        .map(|case| case.run(&modes))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Config(e.to_string()))?
        .into_iter()
        .flatten()
        .collect();

    let manifest = Manifest::shipped();
    let records: Vec<Record> = reports
        .iter()
        .map(|report| {
            let expected = manifest.expected(report.id, &report.params, &report.mode);
            Record { report, expected, matches: expected.is_none_or(|e| e == report.status) }
        })
        .collect();
    let mismatches = records.iter().filter(|r| !r.matches).count();

    let bytes = match format {
        Format::Json => output::json(&VerifyReport {
            command: "verify",
            suite: suite_name(suite),
            grid: GridSpec { n_max, w_max, order },
            q_samples: q_samples.iter().map(format_rational).collect(),
            summary: Summary { cases: all_cases.len(), records: records.len(), mismatches },
            records,
        })?,
        Format::Csv => {
            let rows: Vec<CsvRow> = records
                .iter()
                .map(|r| CsvRow {
                    id: r.report.id,
                    params: params_text(&r.report.params),
                    mode: r.report.mode.name(),
                    q0: match &r.report.mode {
                        Mode::AtRationalQ(q0) => Some(format_rational(q0)),
                        _ => None,
                    },
                    status: r.report.status,
                    expected: r.expected,
                    matches: r.matches,
                    witness: r.report.witness.to_string(),
                    notes: r.report.notes.join("; "),
                })
                .collect();
            output::csv(&rows)?
        }
    };
    Ok((bytes, mismatches == 0))
}
