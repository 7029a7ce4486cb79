//! Grid sweeps and per-identity status aggregation.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{
    build_double_integral_ratio, build_power_sum_ratio, build_printed, build_reflection_moment, build_shift_moment,
    BuiltCase, IdentityId, Mode, Status, VerificationReport,
};
use crate::corrected::{build_corrected_multiplication, build_corrected_shift_symmetry, build_corrected_symmetry};
use crate::error::Result;

/// Parameter ranges swept by [`classify`]. `n_values` index polynomials (and
/// shifts for the shifted moments), `m_values` the moment order, `w1_values`
/// and `w2_values` the scales, `order` the series truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    pub n_values: Vec<usize>,
    pub m_values: Vec<usize>,
    pub w1_values: Vec<usize>,
    pub w2_values: Vec<usize>,
    pub order: usize,
    /// Skip `w1 = w2` (and `w1 = 1` for single-scale statements), where both
    /// sides coincide syntactically.
    pub exclude_degenerate: bool,
}

impl Grid {
    /// `0 <= n, m <= n_max`, odd scales up to `w_max`.
    pub fn new(n_max: usize, w_max: usize, order: usize) -> Self {
        let odd: Vec<usize> = (1..=w_max).filter(|w| w % 2 == 1).collect();
        Self {
            n_values: (0..=n_max).collect(),
            m_values: (0..=n_max).collect(),
            w1_values: odd.clone(),
            w2_values: odd,
            order,
            exclude_degenerate: false,
        }
    }

    pub fn excluding_degenerate(mut self) -> Self {
        self.exclude_degenerate = true;
        self
    }
}

/// One point of a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Case {
    pub id: IdentityId,
    pub n: usize,
    pub m: usize,
    pub w1: usize,
    pub w2: usize,
    pub order: usize,
}

impl Case {
    fn new(id: IdentityId) -> Self {
        Self { id, n: 0, m: 0, w1: 1, w2: 1, order: 0 }
    }

    pub fn build(&self) -> Result<BuiltCase> {
        use IdentityId::*;
        let Case { id, n, m, w1, w2, order } = *self;
        match id {
            ReflectionMoment => Ok(build_reflection_moment(n)),
            OddShiftMoment | EvenShiftMoment => build_shift_moment(m, n),
            DoubleIntegralRatio => build_double_integral_ratio(w1, w2, order),
            PowerSumRatio => build_power_sum_ratio(w1, order),
            PrintedSymmetry
            | PrintedNumberSymmetry
            | PrintedScaling
            | PrintedNumberRecurrence
            | PrintedShiftSymmetry
            | PrintedMultiplication => build_printed(id, n, w1, w2),
            CorrectedSymmetry => build_corrected_symmetry(n, w1, w2),
            CorrectedShift => build_corrected_shift_symmetry(n, w1, w2),
            CorrectedMult => build_corrected_multiplication(n, w1),
        }
    }

    /// Builds once and reports in every requested mode.
    pub fn run(&self, modes: &[Mode]) -> Result<Vec<VerificationReport>> {
        let built = self.build()?;
        modes.iter().map(|mode| built.report(mode.clone())).collect()
    }
}

/// Cases of `id` on `grid`, in a fixed order, skipping points that violate
/// the statement's preconditions.
pub fn cases(id: IdentityId, grid: &Grid) -> Vec<Case> {
    use IdentityId::*;
    let base = Case { order: grid.order, ..Case::new(id) };
    let mut out = Vec::new();
    match id {
        ReflectionMoment => {
            out.extend(grid.n_values.iter().map(|&n| Case { n, ..base }));
        }
        OddShiftMoment | EvenShiftMoment => {
            let parity = usize::from(id == OddShiftMoment);
            for &m in &grid.m_values {
                for &n in grid.n_values.iter().filter(|&&n| n >= 1 && n % 2 == parity) {
                    out.push(Case { m, n, ..base });
                }
            }
        }
        DoubleIntegralRatio => {
            for &w1 in &grid.w1_values {
                for &w2 in &grid.w2_values {
                    out.push(Case { w1, w2, ..base });
                }
            }
        }
        PowerSumRatio => {
            out.extend(grid.w1_values.iter().map(|&w1| Case { w1, ..base }));
        }
        _ if id.single_scale() => {
            for &n in &grid.n_values {
                for &w1 in &grid.w1_values {
                    if id == PrintedNumberRecurrence && (n == 0 || w1 <= 1) {
                        continue;
                    }
                    if grid.exclude_degenerate && w1 == 1 {
                        continue;
                    }
                    out.push(Case { n, w1, ..base });
                }
            }
        }
        _ => {
            for &n in &grid.n_values {
                for &w1 in &grid.w1_values {
                    for &w2 in &grid.w2_values {
                        if grid.exclude_degenerate && w1 == w2 {
                            continue;
                        }
                        out.push(Case { n, w1, w2, ..base });
                    }
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Aggregate {
    /// Every symbolic case holds.
    HoldsAllQ,
    /// Every case holds at `q = 1` and every symbolic case fails.
    HoldsAtQ1Only,
    Mixed,
}

impl Aggregate {
    pub fn name(self) -> &'static str {
        match self {
            Aggregate::HoldsAllQ => "HOLDS_ALL_Q",
            Aggregate::HoldsAtQ1Only => "HOLDS_AT_Q1_ONLY",
            Aggregate::Mixed => "MIXED",
        }
    }

    pub fn of(rows: &[ClassifyRow]) -> Self {
        if rows.iter().all(|r| r.status_symbolic == Status::Holds) {
            Aggregate::HoldsAllQ
        } else if rows.iter().all(|r| r.status_at_q1 == Status::Holds && r.status_symbolic == Status::Fails) {
            Aggregate::HoldsAtQ1Only
        } else {
            Aggregate::Mixed
        }
    }
}

impl fmt::Display for Aggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyRow {
    pub params: BTreeMap<String, i64>,
    pub status_symbolic: Status,
    pub status_at_q1: Status,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub id: IdentityId,
    pub rows: Vec<ClassifyRow>,
    pub aggregate: Aggregate,
}

/// Sweeps `id` over `grid` in both the symbolic and the `q = 1` mode.
pub fn classify(id: IdentityId, grid: &Grid) -> Result<Classification> {
    let mut rows = Vec::new();
    for case in cases(id, grid) {
        let reports = case.run(&[Mode::SymbolicQ, Mode::AtQ1])?;
        rows.push(ClassifyRow {
            params: reports[0].params.clone(),
            status_symbolic: reports[0].status,
            status_at_q1: reports[1].status,
        });
    }
    let aggregate = Aggregate::of(&rows);
    Ok(Classification { id, rows, aggregate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_holds_for_all_q() {
        let c = classify(IdentityId::ReflectionMoment, &Grid::new(8, 1, 0)).unwrap();
        assert_eq!(c.rows.len(), 9);
        assert_eq!(c.aggregate, Aggregate::HoldsAllQ);
    }

    #[test]
    fn printed_multiplication_holds_only_at_one() {
        let grid = Grid { w1_values: vec![3, 5], ..Grid::new(4, 5, 0) };
        let c = classify(IdentityId::PrintedMultiplication, &grid).unwrap();
        assert_eq!(c.rows.len(), 10);
        assert_eq!(c.aggregate, Aggregate::HoldsAtQ1Only);
    }

    #[test]
    fn degenerate_slice_holds() {
        let grid = Grid { w1_values: vec![3], w2_values: vec![3], ..Grid::new(4, 3, 0) };
        let c = classify(IdentityId::PrintedSymmetry, &grid).unwrap();
        assert_eq!(c.aggregate, Aggregate::HoldsAllQ);
        assert!(cases(IdentityId::PrintedSymmetry, &grid.excluding_degenerate()).is_empty());
    }

    #[test]
    fn case_order_is_fixed() {
        let grid = Grid::new(3, 5, 4);
        let a = cases(IdentityId::EvenShiftMoment, &grid);
        assert!(a.iter().all(|c| c.n % 2 == 0 && c.n >= 1));
        assert_eq!(a, cases(IdentityId::EvenShiftMoment, &grid));
        let r = cases(IdentityId::PrintedNumberRecurrence, &grid);
        assert!(r.iter().all(|c| c.n >= 1 && c.w1 > 1));
        assert_eq!(cases(IdentityId::PrintedSymmetry, &grid).len(), 4 * 9);
    }
}
