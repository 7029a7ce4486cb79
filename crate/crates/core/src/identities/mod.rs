//! Exact verification of the Frobenius-Euler identity catalog.
//!
//! Every verifier builds both sides of a statement in `Q(q)[x]` (or as
//! truncated series in `t` over it) and reports the exact difference. Printed
//! statements are checked verbatim; nothing here repairs them. Corrected
//! variants live in [`crate::corrected`].

mod classify;
mod moments;
mod printed;
mod ratios;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{format_rational, BigRational, TruncatedSeries, XPolynomial};
use crate::error::Result;

pub use classify::{cases, classify, Aggregate, Case, Classification, ClassifyRow, Grid};
pub use moments::{build_reflection_moment, build_shift_moment, verify_reflection_moment, verify_shift_moment};
pub use printed::{build_printed, printed_sides, verify_printed, PrintedSides};
pub use ratios::{
    build_double_integral_ratio, build_power_sum_ratio, verify_double_integral_ratio, verify_power_sum_ratio,
};

pub(crate) use printed::{shift_sum, symmetry_sum};

/// Closed catalog of verified statements. Wire names are fixed by the report
/// format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    /// `q I(f(x+1)) + I(f) = [2]_q f(0)` at `f = x^n`.
    #[serde(rename = "EQ3_MOMENT")]
    ReflectionMoment,
    /// Shifted moments for odd shifts `n`.
    #[serde(rename = "EQ4_ODD_MOMENT")]
    OddShiftMoment,
    /// Shifted moments for even shifts `n`.
    #[serde(rename = "EQ5_EVEN_MOMENT")]
    EvenShiftMoment,
    /// Double-integral ratio against its closed form.
    #[serde(rename = "EQ9_RATIO")]
    DoubleIntegralRatio,
    /// Single-integral ratio against the alternating power-sum expansion.
    #[serde(rename = "EQ10_RATIO")]
    PowerSumRatio,
    /// Printed `w1 <-> w2` symmetry of sums `H_i(-1/q, w2 x) S_{n-i,q^w2}(w1-1)`.
    #[serde(rename = "THEOREM1")]
    PrintedSymmetry,
    /// The printed symmetry at `x = 0`.
    #[serde(rename = "COROLLARY2")]
    PrintedNumberSymmetry,
    /// The printed symmetry at `w2 = 1`: an expansion of `H_n(-1/q, w1 x)`.
    #[serde(rename = "EQ14")]
    PrintedScaling,
    /// The printed recurrence for `H_n(-1/q)` obtained at `x = 0`, `w2 = 1`.
    #[serde(rename = "COROLLARY3")]
    PrintedNumberRecurrence,
    /// Printed symmetry of shifted sums `sum_l (-1)^l q^(w2 l) H_n(-1/q, w2 x + w2 l / w1)`.
    #[serde(rename = "THEOREM4")]
    PrintedShiftSymmetry,
    /// Printed multiplication formula (shift symmetry at `w2 = 1`).
    #[serde(rename = "MULTIPLICATION")]
    PrintedMultiplication,
    #[serde(rename = "CORRECTED_SYMMETRY")]
    CorrectedSymmetry,
    #[serde(rename = "CORRECTED_SHIFT")]
    CorrectedShift,
    #[serde(rename = "CORRECTED_MULT")]
    CorrectedMult,
}

impl IdentityId {
    pub const ALL: [IdentityId; 14] = [
        IdentityId::ReflectionMoment,
        IdentityId::OddShiftMoment,
        IdentityId::EvenShiftMoment,
        IdentityId::DoubleIntegralRatio,
        IdentityId::PowerSumRatio,
        IdentityId::PrintedSymmetry,
        IdentityId::PrintedNumberSymmetry,
        IdentityId::PrintedScaling,
        IdentityId::PrintedNumberRecurrence,
        IdentityId::PrintedShiftSymmetry,
        IdentityId::PrintedMultiplication,
        IdentityId::CorrectedSymmetry,
        IdentityId::CorrectedShift,
        IdentityId::CorrectedMult,
    ];

    /// Statements that hold identically in `q`.
    pub const ALL_Q: [IdentityId; 5] = [
        IdentityId::ReflectionMoment,
        IdentityId::OddShiftMoment,
        IdentityId::EvenShiftMoment,
        IdentityId::DoubleIntegralRatio,
        IdentityId::PowerSumRatio,
    ];

    /// Statements checked verbatim as printed.
    pub const PRINTED: [IdentityId; 6] = [
        IdentityId::PrintedSymmetry,
        IdentityId::PrintedNumberSymmetry,
        IdentityId::PrintedScaling,
        IdentityId::PrintedNumberRecurrence,
        IdentityId::PrintedShiftSymmetry,
        IdentityId::PrintedMultiplication,
    ];

    pub const CORRECTED: [IdentityId; 3] =
        [IdentityId::CorrectedSymmetry, IdentityId::CorrectedShift, IdentityId::CorrectedMult];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::ReflectionMoment => "EQ3_MOMENT",
            IdentityId::OddShiftMoment => "EQ4_ODD_MOMENT",
            IdentityId::EvenShiftMoment => "EQ5_EVEN_MOMENT",
            IdentityId::DoubleIntegralRatio => "EQ9_RATIO",
            IdentityId::PowerSumRatio => "EQ10_RATIO",
            IdentityId::PrintedSymmetry => "THEOREM1",
            IdentityId::PrintedNumberSymmetry => "COROLLARY2",
            IdentityId::PrintedScaling => "EQ14",
            IdentityId::PrintedNumberRecurrence => "COROLLARY3",
            IdentityId::PrintedShiftSymmetry => "THEOREM4",
            IdentityId::PrintedMultiplication => "MULTIPLICATION",
            IdentityId::CorrectedSymmetry => "CORRECTED_SYMMETRY",
            IdentityId::CorrectedShift => "CORRECTED_SHIFT",
            IdentityId::CorrectedMult => "CORRECTED_MULT",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.name() == name)
    }

    /// Identities whose second scale is pinned to `w2 = 1`.
    pub fn single_scale(self) -> bool {
        matches!(
            self,
            IdentityId::PrintedScaling
                | IdentityId::PrintedNumberRecurrence
                | IdentityId::PrintedMultiplication
                | IdentityId::CorrectedMult
                | IdentityId::PowerSumRatio
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How the two sides are compared.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Mode {
    /// In `Q(q)[x]`, with `q` an indeterminate.
    SymbolicQ,
    /// After specializing `q = 1`.
    AtQ1,
    /// After specializing `q = q0`.
    AtRationalQ(BigRational),
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::SymbolicQ => "SYMBOLIC_Q",
            Mode::AtQ1 => "AT_Q1",
            Mode::AtRationalQ(_) => "AT_RATIONAL_Q",
        }
    }

    /// The specialization point, if any.
    pub fn point(&self) -> Option<BigRational> {
        match self {
            Mode::SymbolicQ => None,
            Mode::AtQ1 => Some(BigRational::one()),
            Mode::AtRationalQ(q0) => Some(q0.clone()),
        }
    }

    /// `"num/den"` text of the specialization point, `None` for symbolic mode.
    pub fn point_text(&self) -> Option<String> {
        self.point().map(|p| format_rational(&p))
    }

    fn specialize(&self, p: &XPolynomial) -> Result<XPolynomial> {
        match self.point() {
            None => Ok(p.clone()),
            Some(q0) => p.eval_q(&q0),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::AtRationalQ(q0) => write!(f, "AT_RATIONAL_Q({})", format_rational(q0)),
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Holds,
    Fails,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Holds => "HOLDS",
            Status::Fails => "FAILS",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one verification case. `status` is `Holds` exactly when
/// `witness` (LHS - RHS) is the zero polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub id: IdentityId,
    pub params: BTreeMap<String, i64>,
    pub mode: Mode,
    pub status: Status,
    pub witness: XPolynomial,
    pub notes: Vec<String>,
}

impl VerificationReport {
    fn new(
        id: IdentityId,
        params: BTreeMap<String, i64>,
        mode: Mode,
        witness: XPolynomial,
        notes: Vec<String>,
    ) -> Self {
        let status = if witness.is_zero() { Status::Holds } else { Status::Fails };
        Self { id, params, mode, status, witness, notes }
    }

    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }

    pub fn param(&self, key: &str) -> Option<i64> {
        self.params.get(key).copied()
    }
}

/// What a verifier compares.
#[derive(Debug, Clone)]
pub(crate) enum Comparison {
    /// Two sides in `Q(q)[x]`.
    Sides { lhs: XPolynomial, rhs: XPolynomial },
    /// Differences of truncated series that must all vanish.
    Series(Vec<TruncatedSeries<XPolynomial>>),
}

/// A case with its sides built symbolically, ready to be compared in any
/// mode.
#[derive(Debug, Clone)]
pub struct BuiltCase {
    id: IdentityId,
    params: Params,
    comparison: Comparison,
    notes: Vec<String>,
}

impl BuiltCase {
    pub(crate) fn new(id: IdentityId, params: Params, comparison: Comparison) -> Self {
        Self { id, params, comparison, notes: Vec::new() }
    }

    pub(crate) fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn id(&self) -> IdentityId {
        self.id
    }

    #[cfg(test)]
    pub(crate) fn comparison(&self) -> &Comparison {
        &self.comparison
    }

    /// Compares the sides after specializing per `mode`. For series the
    /// witness is the lowest-order nonzero entry of the first nonvanishing
    /// difference, and its order is noted.
    pub fn report(&self, mode: Mode) -> Result<VerificationReport> {
        let params = self.params.0.clone();
        let mut notes = self.notes.clone();
        match &self.comparison {
            Comparison::Sides { lhs, rhs } => {
                let witness = mode.specialize(lhs)? - mode.specialize(rhs)?;
                Ok(VerificationReport::new(self.id, params, mode, witness, notes))
            }
            Comparison::Series(differences) => {
                for diff in differences {
                    let specialized = diff.try_map(|c| mode.specialize(c))?;
                    if let Some((k, w)) = specialized.first_nonzero() {
                        notes.push(format!("first difference at t^{k}/{k}!"));
                        return Ok(VerificationReport::new(self.id, params, mode, w.clone(), notes));
                    }
                }
                Ok(VerificationReport::new(self.id, params, mode, XPolynomial::zero(), notes))
            }
        }
    }
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            id: IdentityId,
            params: &'a BTreeMap<String, i64>,
            mode: &'static str,
            q0: Option<String>,
            status: Status,
            witness: &'a XPolynomial,
            notes: &'a [String],
        }
        Wire {
            id: self.id,
            params: &self.params,
            mode: self.mode.name(),
            q0: self.mode.point_text().filter(|_| matches!(self.mode, Mode::AtRationalQ(_))),
            status: self.status,
            witness: &self.witness,
            notes: &self.notes,
        }
        .serialize(s)
    }
}

/// Ordered named integer parameters of a case.
#[derive(Debug, Clone, Default)]
pub(crate) struct Params(BTreeMap<String, i64>);

impl Params {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn with(mut self, key: &str, value: usize) -> Self {
        self.0.insert(key.to_string(), value as i64);
        self
    }
}

pub(crate) fn require_odd(name: &str, w: usize) -> Result<()> {
    if w % 2 == 1 {
        Ok(())
    } else {
        Err(crate::Error::Precondition(format!("{name} = {w} must be an odd positive integer")))
    }
}
