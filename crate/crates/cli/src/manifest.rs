//! Expected statuses, shipped as data so that an erratum changes one file.

use std::collections::BTreeMap;

use feq_core::{IdentityId, Mode, Status};
use serde::Deserialize;

const MANIFEST: &str = include_str!("../manifest/expected_status.json");

type ModeTable = BTreeMap<String, Status>;

#[derive(Debug, Deserialize)]
struct Override {
    ids: Vec<IdentityId>,
    #[serde(default)]
    params: BTreeMap<String, i64>,
    #[serde(default)]
    equal_params: Vec<String>,
    expect: ModeTable,
}

impl Override {
    fn applies(&self, id: IdentityId, params: &BTreeMap<String, i64>) -> bool {
        if !self.ids.contains(&id) {
            return false;
        }
        let fixed = self.params.iter().all(|(k, v)| params.get(k) == Some(v));
        let mut equal = self.equal_params.iter().map(|k| params.get(k));
        let first = equal.next();
        fixed && first.is_none_or(|f| f.is_some() && equal.all(|v| v == f))
    }
}

#[derive(Debug, Deserialize)]
pub struct Manifest {
    identities: BTreeMap<IdentityId, ModeTable>,
    #[serde(default)]
    overrides: Vec<Override>,
}

impl Manifest {
    pub fn shipped() -> Self {
        serde_json::from_str(MANIFEST).expect("shipped manifest parses")
    }

    /// `None` when the manifest leaves this mode unconstrained.
    pub fn expected(&self, id: IdentityId, params: &BTreeMap<String, i64>, mode: &Mode) -> Option<Status> {
        let key = mode.name();
        self.overrides
            .iter()
            .filter(|o| o.applies(id, params))
            .find_map(|o| o.expect.get(key))
            .or_else(|| self.identities.get(&id)?.get(key))
            .copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn every_identity_is_listed() {
        let m = Manifest::shipped();
        for id in IdentityId::ALL {
            assert!(m.identities.contains_key(&id), "{id}");
        }
    }

    #[test]
    fn degenerate_slices_hold() {
        let m = Manifest::shipped();
        let sym = Mode::SymbolicQ;
        let id = IdentityId::PrintedSymmetry;
        assert_eq!(m.expected(id, &params(&[("n", 2), ("w1", 3), ("w2", 3)]), &sym), Some(Status::Holds));
        assert_eq!(m.expected(id, &params(&[("n", 2), ("w1", 3), ("w2", 5)]), &sym), Some(Status::Fails));
        assert_eq!(m.expected(id, &params(&[("n", 2), ("w1", 3), ("w2", 5)]), &Mode::AtQ1), Some(Status::Holds));
        let mult = IdentityId::PrintedMultiplication;
        assert_eq!(m.expected(mult, &params(&[("n", 2), ("w1", 1)]), &sym), Some(Status::Holds));
        let q2 = Mode::AtRationalQ(feq_core::BigRational::from_integer(2.into()));
        assert_eq!(m.expected(mult, &params(&[("n", 2), ("w1", 3)]), &q2), None);
    }
}
