use feq_core::padic::{closed_form_moment, fermionic_moment_scan, PAdicContext};
use feq_core::{format_rational, BigRational};
use serde::Serialize;

use crate::args::Format;
use crate::{output, CliError};

#[derive(Debug, Serialize)]
struct LevelSum {
    #[serde(rename = "N")]
    level: u32,
    residue: u64,
}

#[derive(Debug, Serialize)]
struct MomentRecord {
    n: usize,
    sums: Vec<LevelSum>,
    stabilized_level: Option<u32>,
    first_agreement: Option<u32>,
    value: Option<u64>,
    closed_form: u64,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Debug, Serialize)]
struct PadicReport {
    command: &'static str,
    p: u64,
    q: String,
    precision: u32,
    modulus: u64,
    level_max: u32,
    records: Vec<MomentRecord>,
    mismatches: usize,
}

#[derive(Debug, Serialize)]
struct CsvRow {
    n: usize,
    #[serde(rename = "N")]
    level: u32,
    residue: u64,
    stabilized_level: Option<u32>,
    closed_form: u64,
    #[serde(rename = "match")]
    matches: bool,
}

pub fn run(
    ctx: &PAdicContext,
    q: &BigRational,
    n_max: usize,
    level_max: u32,
    format: Format,
) -> Result<(Vec<u8>, bool), CliError> {
    let scans = fermionic_moment_scan(n_max, q, ctx, level_max).map_err(|e| CliError::Config(e.to_string()))?;
    let mut records = Vec::new();
    for (n, scan) in scans.into_iter().enumerate() {
        let closed = closed_form_moment(n, q, ctx).map_err(|e| CliError::Config(e.to_string()))?;
        let value = scan.limit().ok().map(|l| l.value);
        records.push(MomentRecord {
            n,
            sums: scan.sums.iter().zip(1..).map(|(s, level)| LevelSum { level, residue: s.residue() }).collect(),
            stabilized_level: scan.stabilized_level(),
            first_agreement: scan.first_agreement(),
            value: value.map(|v| v.residue()),
            closed_form: closed.residue(),
            matches: value == Some(closed),
        });
    }
    let mismatches = records.iter().filter(|r| !r.matches).count();

    let bytes = match format {
        Format::Json => output::json(&PadicReport {
            command: "padic",
            p: ctx.p(),
            q: format_rational(q),
            precision: ctx.precision(),
            modulus: ctx.modulus(),
            level_max,
            records,
            mismatches,
        })?,
        Format::Csv => {
            let rows: Vec<CsvRow> = records
                .iter()
                .flat_map(|r| {
                    r.sums.iter().map(|s| CsvRow {
                        n: r.n,
                        level: s.level,
                        residue: s.residue,
                        stabilized_level: r.stabilized_level,
                        closed_form: r.closed_form,
                        matches: r.matches,
                    })
                })
                .collect();
            output::csv(&rows)?
        }
    };
    Ok((bytes, mismatches == 0))
}
