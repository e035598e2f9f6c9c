//! End-to-end verification of the decomposition theorem for one map.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::Vector;
use crate::report::CheckReport;
use crate::ring::Element;
use crate::scan::ScanConfig;
use crate::structure::{check_main_hypotheses, check_spade_club};

use super::decompose::{decompose, DecompositionResult};
use super::image::{check_peirce_image, detect_branch, Branch};
use super::map::MapTable;
use super::verify::{self, Tabulated};

#[derive(Clone, Debug, Serialize)]
pub struct Stage {
    pub stage: &'static str,
    pub pass: bool,
    pub reports: Vec<CheckReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub stage: &'static str,
    pub error: String,
    /// Certificate or condition name, when the failure has one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremBundle {
    pub source: String,
    pub target: String,
    pub idempotent: Vector,
    pub budget: u64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub requested_branch: Option<Branch>,
    pub stages: Vec<Stage>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<Failure>,
    pub pass: bool,
}

impl TheoremBundle {
    fn push(&mut self, stage: &'static str, reports: Vec<CheckReport>) -> bool {
        let pass = reports.iter().all(|r| r.pass);
        if !pass {
            let bad = reports.iter().find(|r| !r.pass).expect("a failing report");
            self.failure = Some(Failure {
                stage,
                error: format!("{} failed", bad.condition),
                certificate: Some(bad.condition.clone()),
                witness: bad.witness.as_ref().map(|w| strings(w)),
            });
        }
        self.stages.push(Stage { stage, pass, reports });
        pass
    }

    fn fail(&mut self, stage: &'static str, err: AlgebraError) {
        let (certificate, witness) = match &err {
            AlgebraError::CertificationFailed { certificate, witness } => (Some(certificate.clone()), witness.clone()),
            AlgebraError::HypothesisFailed { condition, witness } => {
                (Some(condition.clone()), witness.clone().map(|w| vec![w]))
            }
            _ => (None, None),
        };
        self.failure = Some(Failure { stage, error: err.to_string(), certificate, witness });
    }
}

fn strings(w: &[Vector]) -> Vec<Vec<String>> {
    w.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
}

/// Runs every stage in order and stops at the first failure: entry checks
/// (Lie multiplicativity, bijectivity, idempotent preservation), their
/// consequences, almost additivity, Peirce images, the frame hypotheses,
/// branch detection, and the decomposition with its certificates.
///
/// Errors are returned only for problems with the inputs themselves; every
/// mathematical failure is recorded in the bundle.
pub fn verify_theorem(map: &MapTable, e1: &Element, branch: Option<Branch>, config: &ScanConfig) -> Result<TheoremBundle> {
    let (s, t) = (map.source(), map.target());
    if e1.ring() != s.id() {
        return Err(AlgebraError::RingMismatch);
    }
    let mut bundle = TheoremBundle {
        source: s.name().into(),
        target: t.name().into(),
        idempotent: e1.coords().to_vec(),
        budget: config.budget,
        seed: config.seed,
        requested_branch: branch,
        stages: Vec::new(),
        decomposition: None,
        failure: None,
        pass: false,
    };
    let tab = Tabulated::new(map, config)?;

    let mut entry = vec![verify::lie_multiplicative(&tab, config)];
    entry.extend(verify::bijective(&tab, config)?);
    if !bundle.push("entry", entry.clone()) {
        return Ok(bundle);
    }
    match verify::preserves_idempotents(&tab, config) {
        Ok(r) => entry.push(r),
        Err(e) => {
            bundle.fail("entry", e);
            return Ok(bundle);
        }
    }
    bundle.stages.pop();
    if !bundle.push("entry", entry) {
        return Ok(bundle);
    }
    if !bundle.push("consequences", verify::injective_and_homogeneous(&tab, config)?) {
        return Ok(bundle);
    }
    if !bundle.push("almost_additivity", vec![verify::almost_additivity(&tab, config)]) {
        return Ok(bundle);
    }
    match check_peirce_image(map, e1, config.budget) {
        Ok(r) => {
            if !bundle.push("peirce_image", r.reports) {
                return Ok(bundle);
            }
        }
        Err(e) => {
            bundle.fail("peirce_image", e);
            return Ok(bundle);
        }
    }
    let frame = crate::structure::peirce_frame(s, e1)?;
    let mut hyp = check_main_hypotheses(s, &frame, config.budget)?;
    hyp.extend(check_spade_club(s, &frame)?);
    if !bundle.push("hypotheses", hyp) {
        return Ok(bundle);
    }
    let br = detect_branch(map, e1, config.budget)?;
    bundle.stages.push(Stage { stage: "branch", pass: br.dagger || br.double_dagger, reports: br.reports });
    match decompose(map, e1, branch, config) {
        Ok(d) => {
            bundle.pass = bundle.push("decomposition", d.certificates.clone());
            bundle.decomposition = Some(d);
        }
        Err(e) => bundle.fail("decomposition", e),
    }
    Ok(bundle)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::generators;
    use crate::lie::map::{neg_transpose_plus_trace, CentralTerm};
    use crate::linalg::Matrix;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn neg_transpose_pipeline_passes() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let phi = neg_transpose_plus_trace(r.clone()).unwrap();
        let b = verify_theorem(&phi, &r.basis_element(0), Some(Branch::DoubleDagger), &ScanConfig::default()).unwrap();
        assert!(b.pass, "{:?}", b.failure);
        assert_eq!(b.decomposition.as_ref().unwrap().branch, Branch::DoubleDagger);
        let names: Vec<_> = b.stages.iter().map(|s| s.stage).collect();
        assert_eq!(names, ["entry", "consequences", "almost_additivity", "peirce_image", "hypotheses", "branch", "decomposition"]);
    }

    #[test]
    fn trace_shift_stops_at_entry() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let tr = r.element_from_ints(&[1, 0, 0, 1]).unwrap().into_coords();
        let term = CentralTerm { functional: tr.clone(), central: tr };
        let phi = MapTable::structured(r.clone(), r.clone(), Matrix::identity(F5, 4), vec![term]).unwrap();
        let b = verify_theorem(&phi, &r.basis_element(0), None, &ScanConfig::default()).unwrap();
        assert!(!b.pass);
        let f = b.failure.unwrap();
        assert_eq!((f.stage, f.certificate.as_deref()), ("entry", Some(verify::PRESERVES_IDEMPOTENTS)));
        assert!(f.witness.is_some());
    }

    #[test]
    fn bundles_are_deterministic() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let phi = neg_transpose_plus_trace(r.clone()).unwrap();
        let cfg = ScanConfig { budget: 100_000, seed: 3 };
        let a = serde_json::to_string(&verify_theorem(&phi, &r.basis_element(0), Some(Branch::DoubleDagger), &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_theorem(&phi, &r.basis_element(0), Some(Branch::DoubleDagger), &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"seed\":3"));
    }
}
