//! Validated run configurations. Every check happens before any computation.

use std::path::PathBuf;

use feq_core::padic::{validate_q, PAdicContext, MAX_TERMS};
use feq_core::{parse_rational, BigRational};
use num_traits::One;

use crate::args::{Command, Format, PadicArgs, Suite, TableArgs, TableKind, VerifyArgs};
use crate::CliError;

pub const TABLE_N_MAX: i64 = 64;
pub const VERIFY_N_MAX: i64 = 16;
pub const VERIFY_W_MAX: i64 = 15;
pub const ORDER_MAX: i64 = 24;
pub const PADIC_N_MAX: i64 = 32;

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandConfig,
    pub format: Format,
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone)]
pub enum CommandConfig {
    Table { kind: TableKind, n_max: usize },
    Verify { suite: Suite, n_max: usize, w_max: usize, order: usize, q_samples: Vec<BigRational> },
    Padic { ctx: PAdicContext, q: BigRational, n_max: usize, level_max: u32 },
}

fn bounded(name: &str, v: i64, lo: i64, hi: i64) -> Result<i64, CliError> {
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else {
        Err(CliError::Config(format!("{name} = {v} is outside {lo}..={hi}")))
    }
}

impl RunConfig {
    pub fn from_command(command: Command) -> Result<Self, CliError> {
        match command {
            Command::Table(a) => Self::table(a),
            Command::Verify(a) => Self::verify(a),
            Command::Padic(a) => Self::padic(a),
        }
    }

    fn table(a: TableArgs) -> Result<Self, CliError> {
        let n_max = bounded("n-max", a.n_max, 0, TABLE_N_MAX)? as usize;
        Ok(Self {
            command: CommandConfig::Table { kind: a.kind, n_max },
            format: a.output.format,
            output: a.output.output,
        })
    }

    fn verify(a: VerifyArgs) -> Result<Self, CliError> {
        let n_max = bounded("n-max", a.n_max, 0, VERIFY_N_MAX)? as usize;
        let w_max = bounded("w-max", a.w_max, 1, VERIFY_W_MAX)? as usize;
        let order = bounded("order", a.order, 1, ORDER_MAX)? as usize;
        let mut q_samples = Vec::new();
        for text in a.q_samples.iter().map(|s| s.trim()).filter(|s| !s.is_empty()) {
            let q0 = parse_rational(text).map_err(|e| CliError::Config(format!("q sample {text:?}: {e}")))?;
            // -1 is the only rational root of any 1 + q^w
            if q0 == -BigRational::one() {
                return Err(CliError::Config("q sample -1 is a pole of the dual numbers".into()));
            }
            if !q_samples.contains(&q0) {
                q_samples.push(q0);
            }
        }
        Ok(Self {
            command: CommandConfig::Verify { suite: a.suite, n_max, w_max, order, q_samples },
            format: a.output.format,
            output: a.output.output,
        })
    }

    fn padic(a: PadicArgs) -> Result<Self, CliError> {
        let p = u64::try_from(a.p).map_err(|_| CliError::Config(format!("p = {} must be an odd prime", a.p)))?;
        let precision = u32::try_from(a.precision)
            .map_err(|_| CliError::Config(format!("precision = {} must be positive", a.precision)))?;
        let ctx = PAdicContext::new(p, precision).map_err(|e| CliError::Config(e.to_string()))?;
        let q = match &a.q {
            Some(text) => parse_rational(text).map_err(|e| CliError::Config(format!("q {text:?}: {e}")))?,
            None => BigRational::from_integer((p + 1).into()),
        };
        validate_q(&q, &ctx).map_err(|e| CliError::Config(e.to_string()))?;
        let n_max = bounded("n-max", a.n_max, 0, PADIC_N_MAX)? as usize;
        let level_max = bounded("level-max", a.level_max, 1, 64)? as u32;
        if p.checked_pow(level_max).is_none_or(|c| c > MAX_TERMS) {
            return Err(CliError::Config(format!("{p}^{level_max} exceeds the {MAX_TERMS}-term limit")));
        }
        Ok(Self {
            command: CommandConfig::Padic { ctx, q, n_max, level_max },
            format: a.output.format,
            output: a.output.output,
        })
    }
}
