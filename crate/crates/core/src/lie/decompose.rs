//! Splitting `φ = ψ + τ` with ψ an isomorphism (branch †) or the negative of
//! an anti-isomorphism (branch ††) and τ central, vanishing on commutators.
//!
//! ψ is built cell by cell on the Peirce components of the source. On an
//! off-diagonal cell it agrees with φ. On a diagonal cell the image `y =
//! φ(x_ii)` lies in a corner plus the centre, and the central part `z` is
//! recovered from the corner that ψ must not touch:
//!
//! - †:  `z f_j = y_jj`, `ψ(x_ii) = y_ii - z f_i`
//! - ††: `z f_i = y_ii`, `ψ(x_ii) = y_jj - z f_j`
//!
//! ψ is only turned into a matrix after its additivity on every cell has been
//! checked.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::Element;
use crate::scalar::Scalar;
use crate::scan::{self, ScanConfig};
use crate::structure::{center, check_main_hypotheses, Cell, PeirceFrame};

use super::image::{centre_times_injective, detect_branch, frames, Branch};
use super::map::MapTable;

pub const PSI_ADDITIVE: &str = "psi_additive";
pub const PSI_BIJECTIVE: &str = "psi_bijective";
pub const PSI_HOMOMORPHISM: &str = "psi_homomorphism";
pub const PSI_NEG_ANTIHOMOMORPHISM: &str = "psi_neg_antihomomorphism";
pub const TRIPLE: &str = "triple_ij_ji_ij";
pub const TAU_CENTRAL: &str = "tau_central";
pub const TAU_KILLS_COMMUTATORS: &str = "tau_kills_commutators";
pub const TAU_ADDITIVE: &str = "tau_additive";

/// Products between Peirce cells checked separately, as
/// `(certificate suffix, left cell, right cell)` with `i ≠ j`.
const CASES: [(&str, (usize, usize), (usize, usize)); 5] = [
    ("ii_ij", (1, 1), (1, 2)),
    ("ij_jj", (1, 2), (2, 2)),
    ("ii_ii", (1, 1), (1, 1)),
    ("ij_ij", (1, 2), (1, 2)),
    ("ij_ji", (1, 2), (2, 1)),
];

/// Cells of a case for the index assignment `(i, j)`.
fn case_cells(a: (usize, usize), b: (usize, usize), i: usize, j: usize) -> (Cell, Cell) {
    let pick = |k: usize| if k == 1 { i } else { j };
    (Cell::from_indices(pick(a.0), pick(a.1)), Cell::from_indices(pick(b.0), pick(b.1)))
}

pub fn case_name(branch: Branch, suffix: &str) -> String {
    match branch {
        Branch::Dagger => format!("mult_{suffix}"),
        Branch::DoubleDagger => format!("antimult_{suffix}"),
    }
}

#[derive(Clone, Debug)]
pub struct DecompositionResult {
    map: MapTable,
    pub branch: Branch,
    /// `target-dim × source-dim`
    pub psi: Matrix,
    /// Target index of `τ(x)` for every source index.
    pub tau: Vec<u64>,
    pub source_frame: PeirceFrame,
    pub target_frame: PeirceFrame,
    pub certificates: Vec<CheckReport>,
    /// Reported but not required.
    pub informational: Vec<CheckReport>,
}

impl DecompositionResult {
    pub fn map(&self) -> &MapTable {
        &self.map
    }

    pub fn psi_eval(&self, x: &[Scalar]) -> Vector {
        self.psi.mul_vec(x)
    }

    pub fn tau_eval(&self, x: &[Scalar]) -> Vector {
        self.map.target().coords_at(self.tau[self.map.source().index_of(x) as usize])
    }

    /// Replaces `τ(x)`, leaving everything else as is.
    pub fn with_tau_entry(mut self, x: &[Scalar], value: &[Scalar]) -> Self {
        let k = self.map.source().index_of(x) as usize;
        self.tau[k] = self.map.target().index_of(value);
        self
    }

    pub fn with_psi(mut self, psi: Matrix) -> Self {
        self.psi = psi;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.certificates.iter().all(|c| c.pass)
    }
}

impl Serialize for DecompositionResult {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let t = self.map.target();
        let tau: BTreeMap<u64, Vector> = self
            .tau
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0)
            .map(|(k, &v)| (k as u64, t.coords_at(v)))
            .collect();
        let mut st = s.serialize_struct("DecompositionResult", 7)?;
        st.serialize_field("branch", &self.branch)?;
        st.serialize_field("psi", &self.psi.to_rows())?;
        st.serialize_field("tau", &tau)?;
        st.serialize_field("source_frame", &self.source_frame)?;
        st.serialize_field("target_frame", &self.target_frame)?;
        st.serialize_field("certificates", &self.certificates)?;
        st.serialize_field("informational", &self.informational)?;
        st.end()
    }
}

fn strings(vs: &[Vector]) -> Vec<Vec<String>> {
    vs.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
}

fn certification_failed(name: &str, witness: Option<Vec<Vector>>) -> AlgebraError {
    AlgebraError::CertificationFailed { certificate: name.into(), witness: witness.map(|w| strings(&w)) }
}

/// `1,0,0,1`
pub fn coords_string(v: &[Scalar]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Cellwise construction of ψ on the target side.
struct Splitter<'a> {
    map: &'a MapTable,
    branch: Branch,
    target_frame: &'a PeirceFrame,
    centre: Subspace,
}

impl Splitter<'_> {
    /// `z ∈ Z'` with `z f_k = rhs`, unique by the pre-flight check.
    fn central_part(&self, k: usize, rhs: &[Scalar], x: &[Scalar]) -> Result<Vector> {
        let t = self.map.target();
        let f = self.target_frame.idempotent(k);
        if self.centre.is_zero() {
            return if linalg::is_zero_vector(rhs) {
                Ok(t.zero_coords())
            } else {
                Err(AlgebraError::AmbiguousCentralSplit(format!(
                    "no central z with z·f{k} = {} (x = {})",
                    t.format_coords(rhs),
                    self.map.source().format_coords(x)
                )))
            };
        }
        let cols: Vec<Vector> = self.centre.basis().iter().map(|z| t.mul_coords(z, f)).collect();
        let m = Matrix::from_columns(t.domain(), t.dim(), &cols)?;
        let (coeffs, kernel) = m.solve(rhs).ok_or_else(|| {
            AlgebraError::AmbiguousCentralSplit(format!(
                "no central z with z·f{k} = {} (x = {})",
                t.format_coords(rhs),
                self.map.source().format_coords(x)
            ))
        })?;
        if !kernel.is_zero() {
            return Err(AlgebraError::AmbiguousCentralSplit(format!("z·f{k} does not determine z")));
        }
        Ok(self.centre.combine(&coeffs))
    }

    /// ψ on an element of `cell`.
    fn psi(&self, cell: Cell, x: &[Scalar]) -> Result<Vector> {
        let t = self.map.target();
        let y = self.map.eval(x);
        if !cell.is_diagonal() {
            return Ok(y);
        }
        let tf = self.target_frame;
        for off in Cell::OFF_DIAGONAL {
            if !linalg::is_zero_vector(&tf.project_coords(off, &y)) {
                return Err(certification_failed(
                    "diagonal_image_has_no_offdiagonal_part",
                    Some(vec![x.to_vec()]),
                ));
            }
        }
        let (i, _) = cell.indices();
        let j = 3 - i;
        let part = |k: usize| tf.project_coords(Cell::from_indices(k, k), &y);
        let (solve_at, keep) = match self.branch {
            Branch::Dagger => (j, i),
            Branch::DoubleDagger => (i, j),
        };
        let z = self.central_part(solve_at, &part(solve_at), x)?;
        let zf = t.mul_coords(&z, tf.idempotent(keep));
        Ok(linalg::sub_vectors(&part(keep), &zf))
    }
}

fn enumerate_cell(frame: &PeirceFrame, cell: Cell) -> Vec<Vector> {
    frame.component(cell).elements().expect("finite domain").collect()
}

/// Runs the full construction. `choice` selects the branch; when given, it
/// must hold. Without a choice, dagger is taken whenever it holds.
pub fn decompose(map: &MapTable, e1: &Element, choice: Option<Branch>, config: &ScanConfig) -> Result<DecompositionResult> {
    let (s, t) = (map.source(), map.target());
    if !s.domain().is_finite() {
        return Err(AlgebraError::UnsupportedDomain("decomposition needs a finite domain".into()));
    }
    let count = s.enumerable(config.budget)?;
    let (source_frame, target_frame) = frames(map, e1)?;

    for rep in check_main_hypotheses(s, &source_frame, config.budget)? {
        if !rep.pass {
            return Err(AlgebraError::HypothesisFailed {
                condition: rep.condition,
                witness: rep.witness.map(|w| w.iter().map(|v| coords_string(v)).collect()),
            });
        }
    }

    let detected = detect_branch(map, e1, config.budget)?;
    let branch = match choice {
        Some(b) if detected.holds(b) => b,
        Some(b) => return Err(AlgebraError::BranchUndetermined(format!("requested {} does not hold", b.name()))),
        None => match (detected.dagger, detected.double_dagger) {
            (true, false) => Branch::Dagger,
            (false, true) => Branch::DoubleDagger,
            // both splittings are valid; default to the homomorphic one
            (true, true) => Branch::Dagger,
            (false, false) => return Err(AlgebraError::BranchUndetermined("neither dagger nor double_dagger holds".into())),
        },
    };

    // unique central split
    let centre = center(t);
    for k in [1, 2] {
        let corner = target_frame.component(Cell::from_indices(k, k));
        let meet = centre.intersection(corner);
        if !meet.is_zero() {
            return Err(AlgebraError::AmbiguousCentralSplit(format!(
                "centre meets R'{k}{k} in {}",
                t.format_coords(&meet.basis()[0])
            )));
        }
        if !centre_times_injective(t, &centre, target_frame.idempotent(k)) {
            return Err(AlgebraError::AmbiguousCentralSplit(format!("z ↦ z·f{k} is not injective on the centre")));
        }
    }

    let splitter = Splitter { map, branch, target_frame: &target_frame, centre };

    // additivity of the cellwise ψ
    for cell in Cell::ALL {
        let xs = enumerate_cell(&source_frame, cell);
        let images: Vec<Vector> = xs.par_iter().map(|x| splitter.psi(cell, x)).collect::<Result<_>>()?;
        let index = |v: &[Scalar]| -> usize {
            let c = source_frame.component(cell).coordinates(v).expect("in cell");
            let p = u64::from(s.domain().characteristic());
            c.iter().rev().fold(0u64, |a, d| a * p + u64::from(d.residue().expect("finite"))) as usize
        };
        let n = xs.len() as u64;
        let scan = scan::scan_pairs(n, config, |a, b| {
            let sum = linalg::add_vectors(&xs[a as usize], &xs[b as usize]);
            images[index(&sum)] == linalg::add_vectors(&images[a as usize], &images[b as usize])
        });
        if let Some((a, b)) = scan.failure {
            return Err(certification_failed(PSI_ADDITIVE, Some(vec![xs[a as usize].clone(), xs[b as usize].clone()])));
        }
    }

    // matrix from the basis; agreement on every cell element follows from
    // additivity over the prime field but is checked anyway
    let cols: Vec<Vector> = (0..s.dim())
        .map(|k| {
            let b = s.basis_coords(k);
            let mut acc = t.zero_coords();
            for cell in Cell::ALL {
                let part = source_frame.project_coords(cell, &b);
                acc = linalg::add_vectors(&acc, &splitter.psi(cell, &part)?);
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    let psi = Matrix::from_columns(t.domain(), t.dim(), &cols)?;
    for cell in Cell::ALL {
        for x in enumerate_cell(&source_frame, cell) {
            if psi.mul_vec(&x) != splitter.psi(cell, &x)? {
                return Err(certification_failed("psi_matrix_agrees_with_construction", Some(vec![x])));
            }
        }
    }

    let tau: Vec<u64> = (0..count)
        .into_par_iter()
        .map(|k| {
            let x = s.coords_at(k);
            t.index_of(&linalg::sub_vectors(&map.eval(&x), &psi.mul_vec(&x)))
        })
        .collect();
    // recomposition, over every element
    let broken = (0..count).into_par_iter().find_first(|&k| {
        let x = s.coords_at(k);
        linalg::add_vectors(&psi.mul_vec(&x), &t.coords_at(tau[k as usize])) != map.eval(&x)
    });
    if let Some(k) = broken {
        return Err(certification_failed("recomposition", Some(vec![s.coords_at(k)])));
    }

    let mut result = DecompositionResult {
        map: map.clone(),
        branch,
        psi,
        tau,
        source_frame,
        target_frame,
        certificates: Vec::new(),
        informational: Vec::new(),
    };
    let (certificates, informational) = verify_decomposition(&result, config);
    if let Some(bad) = certificates.iter().find(|c| !c.pass) {
        return Err(certification_failed(&bad.condition, bad.witness.clone()));
    }
    result.certificates = certificates;
    result.informational = informational;
    Ok(result)
}

/// Pair scan over `xs × ys`, exhaustive within budget.
fn scan_product<F>(xs: &[Vector], ys: &[Vector], config: &ScanConfig, ok: F) -> (Option<Vec<Vector>>, QuantifierSpace)
where
    F: Fn(&[Scalar], &[Scalar]) -> bool + Sync,
{
    let (nx, ny) = (xs.len() as u64, ys.len() as u64);
    let total = nx * ny;
    let side = nx.max(ny);
    // reuse the square scan on max(nx, ny) and skip out-of-range pairs
    if total <= config.budget {
        let failure = (0..total)
            .into_par_iter()
            .find_first(|&k| !ok(&xs[(k / ny) as usize], &ys[(k % ny) as usize]));
        let w = failure.map(|k| vec![xs[(k / ny) as usize].clone(), ys[(k % ny) as usize].clone()]);
        return (w, QuantifierSpace::exhaustive(total));
    }
    let s = scan::scan_pairs(side, config, |a, b| {
        a >= nx || b >= ny || ok(&xs[a as usize], &ys[b as usize])
    });
    let w = s.failure.map(|(a, b)| vec![xs[a as usize].clone(), ys[b as usize].clone()]);
    (w, s.space)
}

/// Certificates for a decomposition. The first list is required to pass; the
/// second is informational.
pub fn verify_decomposition(d: &DecompositionResult, config: &ScanConfig) -> (Vec<CheckReport>, Vec<CheckReport>) {
    let (s, t) = (d.map.source(), d.map.target());
    let count = d.tau.len() as u64;
    let psi = |x: &[Scalar]| d.psi.mul_vec(x);
    let tau_at = |k: u64| t.coords_at(d.tau[k as usize]);
    let mut out = Vec::new();

    let scan = scan::scan_pairs(count, config, |a, b| {
        let (x, y) = (s.coords_at(a), s.coords_at(b));
        psi(&linalg::add_vectors(&x, &y)) == linalg::add_vectors(&psi(&x), &psi(&y))
    });
    out.push(CheckReport::new(PSI_ADDITIVE, scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]), scan.space));

    let bijective = d.psi.rows() == d.psi.cols() && d.psi.rank() == d.psi.cols();
    let witness = (!bijective).then(|| d.psi.kernel().first_nonzero().map(|v| vec![v]).unwrap_or_default());
    out.push(CheckReport::new(PSI_BIJECTIVE, witness, QuantifierSpace::exhaustive(1)).with_detail("rank of the psi matrix"));

    // ψ(ab) against ψ(a)ψ(b) or -ψ(b)ψ(a)
    let expected = |a: &[Scalar], b: &[Scalar]| -> Vector {
        match d.branch {
            Branch::Dagger => t.mul_coords(&psi(a), &psi(b)),
            Branch::DoubleDagger => linalg::neg_vector(&t.mul_coords(&psi(b), &psi(a))),
        }
    };
    let multiplicative = |a: &[Scalar], b: &[Scalar]| psi(&s.mul_coords(a, b)) == expected(a, b);

    let cells: Vec<Vec<Vector>> = Cell::ALL.iter().map(|&c| enumerate_cell(&d.source_frame, c)).collect();
    let elements = |c: Cell| &cells[c.position()];
    for (suffix, a, b) in CASES {
        let mut witness = None;
        let mut total = 0;
        let mut checked = 0;
        let mut exhaustive = true;
        for (i, j) in [(1, 2), (2, 1)] {
            let (ca, cb) = case_cells(a, b, i, j);
            let (w, space) = scan_product(elements(ca), elements(cb), config, multiplicative);
            total += space.total;
            checked += space.checked;
            exhaustive &= space.exhaustive;
            witness = witness.or(w);
        }
        let space = QuantifierSpace { total, checked, exhaustive, seed: (!exhaustive).then_some(config.seed) };
        out.push(CheckReport::new(case_name(d.branch, suffix), witness, space));
    }

    // ψ((ab)a) = (ψ(a)ψ(b))ψ(a) for a ∈ R_ij, b ∈ R_ji
    let mut witness = None;
    let mut total = 0;
    for (i, j) in [(1, 2), (2, 1)] {
        let (ca, cb) = (Cell::from_indices(i, j), Cell::from_indices(j, i));
        let (w, space) = scan_product(elements(ca), elements(cb), config, |a, b| {
            let lhs = psi(&s.mul_coords(&s.mul_coords(a, b), a));
            let rhs = t.mul_coords(&t.mul_coords(&psi(a), &psi(b)), &psi(a));
            lhs == rhs
        });
        total += space.total;
        witness = witness.or(w);
    }
    out.push(CheckReport::new(TRIPLE, witness, QuantifierSpace::exhaustive(total)));

    let name = match d.branch {
        Branch::Dagger => PSI_HOMOMORPHISM,
        Branch::DoubleDagger => PSI_NEG_ANTIHOMOMORPHISM,
    };
    let scan = scan::scan_pairs(count, config, |a, b| multiplicative(&s.coords_at(a), &s.coords_at(b)));
    out.push(CheckReport::new(name, scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]), scan.space));

    let centre = center(t);
    let scan = scan::scan_elements(count, |k| centre.contains(&tau_at(k)));
    out.push(CheckReport::new(TAU_CENTRAL, scan.failure.map(|k| vec![s.coords_at(k)]), scan.space));

    let scan = scan::scan_pairs(count, config, |a, b| {
        let c = s.commutator_coords(&s.coords_at(a), &s.coords_at(b));
        d.tau[s.index_of(&c) as usize] == 0
    });
    out.push(CheckReport::new(
        TAU_KILLS_COMMUTATORS,
        scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]),
        scan.space,
    ));

    let scan = scan::scan_pairs(count, config, |a, b| {
        let sum = s.index_of(&linalg::add_vectors(&s.coords_at(a), &s.coords_at(b)));
        tau_at(sum) == linalg::add_vectors(&tau_at(a), &tau_at(b))
    });
    let informational = vec![CheckReport::new(
        TAU_ADDITIVE,
        scan.failure.map(|(a, b)| vec![s.coords_at(a), s.coords_at(b)]),
        scan.space,
    )
    .with_detail("not required")];
    (out, informational)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::generators;
    use crate::ring::Ring;
    use crate::lie::map::{conjugation, neg_transpose_plus_trace};
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    fn m2() -> Arc<Ring> {
        Arc::new(generators::m2(F5).unwrap())
    }

    fn cfg() -> ScanConfig {
        ScanConfig::default()
    }

    #[test]
    fn identity_dagger() {
        let r = m2();
        let id = MapTable::identity(r.clone());
        let d = decompose(&id, &r.basis_element(0), Some(Branch::Dagger), &cfg()).unwrap();
        assert_eq!(d.psi, Matrix::identity(F5, 4));
        assert!(d.tau.iter().all(|&k| k == 0));
        assert!(d.all_pass());
        let names: Vec<&str> = d.certificates.iter().map(|c| c.condition.as_str()).collect();
        assert!(names.contains(&"mult_ij_ji") && names.contains(&PSI_HOMOMORPHISM));
    }

    #[test]
    fn both_branches_hold_on_matrix_corners() {
        let r = m2();
        let id = MapTable::identity(r.clone());
        let d = decompose(&id, &r.basis_element(0), None, &cfg()).unwrap();
        assert_eq!(d.branch, Branch::Dagger);
        // x = (x - tr(x)·1) + tr(x)·1, and x ↦ x - tr(x)·1 = -adj(x) is a
        // negative anti-automorphism
        let d = decompose(&id, &r.basis_element(0), Some(Branch::DoubleDagger), &cfg()).unwrap();
        assert!(d.all_pass());
        let x = r.element_from_ints(&[1, 2, 3, 4]).unwrap().into_coords();
        assert_eq!(d.psi_eval(&x), r.element_from_ints(&[-4, 2, 3, -1]).unwrap().into_coords());
        assert_eq!(d.tau_eval(&x), r.element_from_ints(&[5, 0, 0, 5]).unwrap().into_coords());
    }

    #[test]
    fn neg_transpose_plus_trace_double_dagger() {
        let r = m2();
        let phi = neg_transpose_plus_trace(r.clone()).unwrap();
        let d = decompose(&phi, &r.basis_element(0), Some(Branch::DoubleDagger), &cfg()).unwrap();
        for k in 0..625 {
            let x = r.coords_at(k);
            let (a, b, c, dd) = (&x[0], &x[1], &x[2], &x[3]);
            let neg_t = vec![-a, -c, -b, -dd];
            let tr = a + dd;
            assert_eq!(d.psi_eval(&x), neg_t);
            assert_eq!(d.tau_eval(&x), vec![tr.clone(), F5.zero(), F5.zero(), tr]);
        }
        assert!(d.certificates.iter().any(|c| c.condition == "antimult_ij_ji"));
    }

    #[test]
    fn conjugation_round_trip() {
        let r = m2();
        let u = r.element_from_ints(&[2, 1, 1, 1]).unwrap();
        let phi = conjugation(r.clone(), u.coords()).unwrap();
        let d = decompose(&phi, &r.basis_element(0), Some(Branch::Dagger), &cfg()).unwrap();
        let super::super::map::MapRepr::Structured { linear, .. } = phi.repr() else { panic!() };
        assert_eq!(&d.psi, linear);
        assert!(d.tau.iter().all(|&k| k == 0));
    }

    #[test]
    fn corrupted_tau_breaks_commutator_certificate_only() {
        let r = m2();
        let id = MapTable::identity(r.clone());
        let d = decompose(&id, &r.basis_element(0), Some(Branch::Dagger), &cfg()).unwrap();
        let bad = d.with_tau_entry(&r.basis_coords(1), r.unit_coords());
        let (certs, _) = verify_decomposition(&bad, &cfg());
        let failed: Vec<_> = certs.iter().filter(|c| !c.pass).collect();
        assert_eq!(failed.len(), 1, "{failed:?}");
        assert_eq!(failed[0].condition, TAU_KILLS_COMMUTATORS);
        let w = failed[0].witness.as_ref().unwrap();
        assert_eq!(r.commutator_coords(&w[0], &w[1]), r.basis_coords(1));
    }

    #[test]
    fn corrupted_psi_breaks_a_named_case() {
        let r = m2();
        let id = MapTable::identity(r.clone());
        let d = decompose(&id, &r.basis_element(0), Some(Branch::Dagger), &cfg()).unwrap();
        let mut psi = d.psi.clone();
        psi.set(1, 1, F5.from_i64(2));
        let bad = d.with_psi(psi);
        let (certs, _) = verify_decomposition(&bad, &cfg());
        let case = certs.iter().find(|c| c.condition == "mult_ij_ji").unwrap();
        assert!(!case.pass && case.witness.is_some());
    }

    #[test]
    fn hypothesis_failure_on_direct_sum() {
        let m = generators::m2(F5).unwrap();
        let s = Arc::new(generators::direct_sum(&m, &m).unwrap());
        let id = MapTable::identity(s.clone());
        let e1 = s.element_from_ints(&[1, 0, 0, 0, 1, 0, 0, 0]).unwrap();
        let err = decompose(&id, &e1, Some(Branch::Dagger), &cfg()).unwrap_err();
        match err {
            AlgebraError::HypothesisFailed { condition, witness } => {
                assert_eq!(condition, "central_surjective");
                assert_eq!(witness.unwrap(), vec!["1,0,0,1,0,0,0,0".to_string()]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zorn_identity_and_conjugate_split() {
        let z = Arc::new(generators::zorn(F5).unwrap());
        let id = MapTable::identity(z.clone());
        let small = ScanConfig::with_budget(1_000_000);
        let d = decompose(&id, &z.basis_element(0), Some(Branch::Dagger), &small).unwrap();
        assert_eq!(d.psi, Matrix::identity(F5, 8));
        assert!(d.tau.iter().all(|&k| k == 0));
    }
}
