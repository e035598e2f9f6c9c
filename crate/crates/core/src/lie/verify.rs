//! Entry checks on a map: Lie multiplicativity, bijectivity, idempotent
//! preservation, and the consequences that follow from them.

use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::scan::{self, ScanConfig};
use crate::structure::center;

use super::map::MapTable;

pub const LIE_MULTIPLICATIVE: &str = "lie_multiplicative";
pub const SURJECTIVE: &str = "surjective";
pub const INJECTIVE: &str = "injective";
pub const PRESERVES_IDEMPOTENTS: &str = "preserves_idempotents";
pub const ZERO_FIXED: &str = "zero_fixed";
pub const HOMOGENEOUS: &str = "homogeneous";
pub const ALMOST_ADDITIVE: &str = "almost_additive";

/// A map with all images precomputed as target indices.
pub(crate) struct Tabulated<'a> {
    pub map: &'a MapTable,
    pub images: Vec<u64>,
}

impl<'a> Tabulated<'a> {
    pub fn new(map: &'a MapTable, config: &ScanConfig) -> Result<Self> {
        if !map.source().domain().is_finite() {
            return Err(AlgebraError::UnsupportedDomain("maps over Q cannot be tabulated".into()));
        }
        Ok(Tabulated { map, images: map.tabulate(config.budget)? })
    }

    pub fn source(&self) -> &Ring {
        self.map.source()
    }

    pub fn target(&self) -> &Ring {
        self.map.target()
    }

    pub fn count(&self) -> u64 {
        self.images.len() as u64
    }

    pub fn phi(&self, x: &[Scalar]) -> Vector {
        self.target().coords_at(self.images[self.source().index_of(x) as usize])
    }

    pub fn phi_at(&self, k: u64) -> Vector {
        self.target().coords_at(self.images[k as usize])
    }
}

fn scalar_witness(s: &Scalar) -> Vector {
    vec![s.clone()]
}

/// `φ([x, y]) = [φ(x), φ(y)]` for all pairs (sampled above the budget).
pub fn verify_lie_multiplicative(map: &MapTable, config: &ScanConfig) -> Result<CheckReport> {
    let t = Tabulated::new(map, config)?;
    Ok(lie_multiplicative(&t, config))
}

pub(crate) fn lie_multiplicative(t: &Tabulated, config: &ScanConfig) -> CheckReport {
    let (s, r) = (t.source(), t.target());
    let scan = scan::scan_pairs(t.count(), config, |a, b| {
        let (x, y) = (s.coords_at(a), s.coords_at(b));
        t.phi(&s.commutator_coords(&x, &y)) == r.commutator_coords(&t.phi_at(a), &t.phi_at(b))
    });
    CheckReport::new(LIE_MULTIPLICATIVE, scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]), scan.space)
}

/// Surjectivity and injectivity of the table. Witnesses: a target element
/// outside the image; two source elements with the same image.
pub fn check_bijective(map: &MapTable, config: &ScanConfig) -> Result<[CheckReport; 2]> {
    let t = Tabulated::new(map, config)?;
    bijective(&t, config)
}

pub(crate) fn bijective(t: &Tabulated, config: &ScanConfig) -> Result<[CheckReport; 2]> {
    let tcount = t.target().enumerable(config.budget)?;
    let mut first_preimage = vec![u64::MAX; tcount as usize];
    let mut collision = None;
    for (k, &img) in t.images.iter().enumerate() {
        let slot = &mut first_preimage[img as usize];
        if *slot == u64::MAX {
            *slot = k as u64;
        } else if collision.is_none() {
            collision = Some((*slot, k as u64));
        }
    }
    let missing = first_preimage.iter().position(|&k| k == u64::MAX);
    let surj = CheckReport::new(
        SURJECTIVE,
        missing.map(|m| vec![t.target().coords_at(m as u64)]),
        QuantifierSpace::exhaustive(tcount),
    );
    let inj = CheckReport::new(
        INJECTIVE,
        collision.map(|(a, b)| vec![t.source().coords_at(a), t.source().coords_at(b)]),
        QuantifierSpace::exhaustive(t.count()),
    );
    Ok([surj, inj])
}

fn idempotent_flags(ring: &Ring, budget: u64) -> Result<Vec<bool>> {
    let count = ring.enumerable(budget)?;
    Ok((0..count).into_par_iter().map(|k| ring.is_idempotent_coords(&ring.coords_at(k))).collect())
}

/// `e - λf` is idempotent iff `φ(e) - λφ(f)` is, for all pairs `(e, f)` and
/// all `λ` in the prime field. The budget counts pairs; every `λ` is checked
/// for each pair. Witness: `e`, `f`, `[λ]`.
pub fn verify_preserves_idempotents(map: &MapTable, config: &ScanConfig) -> Result<CheckReport> {
    let t = Tabulated::new(map, config)?;
    preserves_idempotents(&t, config)
}

pub(crate) fn preserves_idempotents(t: &Tabulated, config: &ScanConfig) -> Result<CheckReport> {
    let [surj, inj] = bijective(t, config)?;
    if !(surj.pass && inj.pass) {
        let which = if surj.pass { "not injective" } else { "not surjective" };
        return Err(AlgebraError::NotBijective(which.into()));
    }
    let (s, r) = (t.source(), t.target());
    let src_idem = idempotent_flags(s, config.budget)?;
    let tgt_idem = idempotent_flags(r, config.budget)?;
    let lambdas: Vec<Scalar> = s.domain().elements().expect("finite").collect();
    let combo = |ring: &Ring, e: &[Scalar], f: &[Scalar], l: &Scalar| -> u64 {
        let v: Vector = e.iter().zip(f).map(|(a, b)| a - &(l * b)).collect();
        ring.index_of(&v)
    };
    let failing_lambda = |a: u64, b: u64| -> Option<Scalar> {
        let (e, f) = (s.coords_at(a), s.coords_at(b));
        let (pe, pf) = (t.phi_at(a), t.phi_at(b));
        lambdas
            .iter()
            .find(|l| src_idem[combo(s, &e, &f, l) as usize] != tgt_idem[combo(r, &pe, &pf, l) as usize])
            .cloned()
    };
    let scan = scan::scan_pairs(t.count(), config, |a, b| failing_lambda(a, b).is_none());
    let witness = scan.failure.map(|(a, b)| {
        let l = failing_lambda(a, b).expect("failing pair");
        vec![s.coords_at(a), s.coords_at(b), scalar_witness(&l)]
    });
    Ok(CheckReport::new(PRESERVES_IDEMPOTENTS, witness, scan.space)
        .with_detail(format!("each pair checked for all {} values of lambda", lambdas.len())))
}

/// Injectivity, `φ(0) = 0` and `φ(λx) = λφ(x)` for every `x` and every `λ` in
/// the prime field. These follow from the entry properties, so a failure
/// signals an upstream inconsistency.
pub fn check_injective_and_homogeneous(map: &MapTable, config: &ScanConfig) -> Result<Vec<CheckReport>> {
    let t = Tabulated::new(map, config)?;
    injective_and_homogeneous(&t, config)
}

pub(crate) fn injective_and_homogeneous(t: &Tabulated, config: &ScanConfig) -> Result<Vec<CheckReport>> {
    let [_, inj] = bijective(t, config)?;
    let s = t.source();
    let zero = t.phi_at(0);
    let zero_report = CheckReport::new(
        ZERO_FIXED,
        (!linalg::is_zero_vector(&zero)).then(|| vec![s.zero_coords()]),
        QuantifierSpace::exhaustive(1),
    );
    let lambdas: Vec<Scalar> = s.domain().elements().expect("finite").collect();
    let failing = |k: u64| -> Option<Scalar> {
        let x = s.coords_at(k);
        let px = t.phi_at(k);
        lambdas
            .iter()
            .find(|l| t.phi(&linalg::scale_vector(l, &x)) != linalg::scale_vector(l, &px))
            .cloned()
    };
    let scan = scan::scan_elements(t.count(), |k| failing(k).is_none());
    let witness = scan.failure.map(|k| vec![s.coords_at(k), scalar_witness(&failing(k).expect("failing"))]);
    let total = t.count() * lambdas.len() as u64;
    let homogeneous = CheckReport::new(HOMOGENEOUS, witness, QuantifierSpace::exhaustive(total));
    Ok(vec![inj, zero_report, homogeneous])
}

/// `φ(a + b) - φ(a) - φ(b)` is central in the target for all pairs.
pub fn check_almost_additivity(map: &MapTable, config: &ScanConfig) -> Result<CheckReport> {
    let t = Tabulated::new(map, config)?;
    Ok(almost_additivity(&t, config))
}

pub(crate) fn almost_additivity(t: &Tabulated, config: &ScanConfig) -> CheckReport {
    let (s, r) = (t.source(), t.target());
    let centre = center(r);
    let defect = |a: u64, b: u64| -> Vector {
        let sum = linalg::add_vectors(&s.coords_at(a), &s.coords_at(b));
        linalg::sub_vectors(&linalg::sub_vectors(&t.phi(&sum), &t.phi_at(a)), &t.phi_at(b))
    };
    let scan = scan::scan_pairs(t.count(), config, |a, b| centre.contains(&defect(a, b)));
    let additive = scan::scan_pairs(t.count(), config, |a, b| linalg::is_zero_vector(&defect(a, b)));
    CheckReport::new(ALMOST_ADDITIVE, scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]), scan.space)
        .with_detail(format!("additive on every checked pair: {}", additive.failure.is_none()))
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

    fn m2() -> Arc<Ring> {
        Arc::new(generators::m2(F5).unwrap())
    }

    fn id_plus_trace(r: &Arc<Ring>) -> MapTable {
        let trace = r.element_from_ints(&[1, 0, 0, 1]).unwrap().into_coords();
        let term = CentralTerm { functional: trace.clone(), central: trace };
        MapTable::structured(r.clone(), r.clone(), Matrix::identity(F5, 4), vec![term]).unwrap()
    }

    #[test]
    fn identity_passes_everything() {
        let r = m2();
        let id = MapTable::identity(r);
        let cfg = ScanConfig::default();
        assert!(verify_lie_multiplicative(&id, &cfg).unwrap().pass);
        assert!(check_bijective(&id, &cfg).unwrap().iter().all(|c| c.pass));
        assert!(verify_preserves_idempotents(&id, &cfg).unwrap().pass);
        assert!(check_injective_and_homogeneous(&id, &cfg).unwrap().iter().all(|c| c.pass));
        let aa = check_almost_additivity(&id, &cfg).unwrap();
        assert!(aa.pass && aa.quantifier_space.exhaustive);
    }

    #[test]
    fn neg_transpose_plus_trace_passes() {
        let phi = neg_transpose_plus_trace(m2()).unwrap();
        let cfg = ScanConfig::default();
        let lm = verify_lie_multiplicative(&phi, &cfg).unwrap();
        assert!(lm.pass && lm.quantifier_space.checked == 625 * 625);
        assert!(verify_preserves_idempotents(&phi, &cfg).unwrap().pass);
        assert!(check_injective_and_homogeneous(&phi, &cfg).unwrap().iter().all(|c| c.pass));
        let aa = check_almost_additivity(&phi, &cfg).unwrap();
        assert!(aa.pass);
        assert_eq!(aa.detail.as_deref(), Some("additive on every checked pair: true"));
    }

    #[test]
    fn squaring_is_not_lie_multiplicative() {
        let r = m2();
        let table = (0..625).map(|k| r.index_of(&r.mul_coords(&r.coords_at(k), &r.coords_at(k)))).collect();
        let sq = MapTable::dense(r.clone(), r.clone(), table).unwrap();
        let rep = verify_lie_multiplicative(&sq, &ScanConfig::default()).unwrap();
        assert!(!rep.pass);
        let w = rep.witness.unwrap();
        let lhs = sq.eval(&r.commutator_coords(&w[0], &w[1]));
        let rhs = r.commutator_coords(&sq.eval(&w[0]), &sq.eval(&w[1]));
        assert_ne!(lhs, rhs);
        assert!(matches!(
            verify_preserves_idempotents(&sq, &ScanConfig::default()),
            Err(AlgebraError::NotBijective(_))
        ));
    }

    #[test]
    fn trace_shift_breaks_idempotents() {
        let r = m2();
        let phi = id_plus_trace(&r);
        let rep = verify_preserves_idempotents(&phi, &ScanConfig::default()).unwrap();
        assert!(!rep.pass);
        let w = rep.witness.unwrap();
        let l = &w[2][0];
        let s: Vector = w[0].iter().zip(&w[1]).map(|(a, b)| a - &(l * b)).collect();
        let t: Vector = phi.eval(&w[0]).iter().zip(&phi.eval(&w[1])).map(|(a, b)| a - &(l * b)).collect();
        assert_ne!(r.is_idempotent_coords(&s), r.is_idempotent_coords(&t));
        // still Lie multiplicative and almost additive
        assert!(verify_lie_multiplicative(&phi, &ScanConfig::default()).unwrap().pass);
        assert!(check_almost_additivity(&phi, &ScanConfig::default()).unwrap().pass);
    }

    #[test]
    fn noncentral_defect_is_caught() {
        let r = m2();
        let e12 = r.basis_coords(1);
        let corrupt = MapTable::identity(r.clone()).with_entry(&e12, &r.basis_coords(0), 1_000_000).unwrap();
        let rep = check_almost_additivity(&corrupt, &ScanConfig::default()).unwrap();
        assert!(!rep.pass);
        let cons = check_injective_and_homogeneous(&corrupt, &ScanConfig::default()).unwrap();
        assert!(!cons[0].pass && !cons[2].pass);
    }

    #[test]
    fn sampling_above_budget_records_seed() {
        let phi = MapTable::identity(m2());
        let cfg = ScanConfig { budget: 100, seed: 7 };
        let rep = verify_lie_multiplicative(&phi, &cfg).unwrap_err();
        assert!(matches!(rep, AlgebraError::BudgetExceeded { .. }));
        let cfg = ScanConfig { budget: 10_000, seed: 7 };
        let rep = verify_lie_multiplicative(&phi, &cfg).unwrap();
        assert!(rep.pass && !rep.quantifier_space.exhaustive);
        assert_eq!(rep.quantifier_space.seed, Some(7));
        assert_eq!(rep.quantifier_space.checked, 10_000);
    }
}
