use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::{Element, Ring, RingId};
use crate::scalar::Scalar;

/// One of the four Peirce components `R_ij = e_i R e_j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Cell {
    R11,
    R12,
    R21,
    R22,
}

impl Cell {
    pub const ALL: [Cell; 4] = [Cell::R11, Cell::R12, Cell::R21, Cell::R22];
    pub const DIAGONAL: [Cell; 2] = [Cell::R11, Cell::R22];
    pub const OFF_DIAGONAL: [Cell; 2] = [Cell::R12, Cell::R21];

    /// Indices `(i, j)` in `{1, 2}`.
    pub fn indices(self) -> (usize, usize) {
        match self {
            Cell::R11 => (1, 1),
            Cell::R12 => (1, 2),
            Cell::R21 => (2, 1),
            Cell::R22 => (2, 2),
        }
    }

    pub fn from_indices(i: usize, j: usize) -> Cell {
        match (i, j) {
            (1, 1) => Cell::R11,
            (1, 2) => Cell::R12,
            (2, 1) => Cell::R21,
            (2, 2) => Cell::R22,
            _ => panic!("Peirce indices must be 1 or 2, got ({i}, {j})"),
        }
    }

    pub fn position(self) -> usize {
        self as usize
    }

    pub fn transpose(self) -> Cell {
        let (i, j) = self.indices();
        Cell::from_indices(j, i)
    }

    pub fn is_diagonal(self) -> bool {
        let (i, j) = self.indices();
        i == j
    }

    pub fn name(self) -> &'static str {
        match self {
            Cell::R11 => "R11",
            Cell::R12 => "R12",
            Cell::R21 => "R21",
            Cell::R22 => "R22",
        }
    }
}

/// Peirce decomposition of a ring relative to `e1` and `e2 = 1 - e1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeirceFrame {
    ring: RingId,
    e1: Vector,
    e2: Vector,
    projectors: [Matrix; 4],
    components: [Subspace; 4],
}

impl PeirceFrame {
    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn e1(&self) -> &[Scalar] {
        &self.e1
    }

    pub fn e2(&self) -> &[Scalar] {
        &self.e2
    }

    /// `e_i` for `i ∈ {1, 2}`.
    pub fn idempotent(&self, i: usize) -> &[Scalar] {
        if i == 1 {
            &self.e1
        } else {
            &self.e2
        }
    }

    pub fn projector(&self, cell: Cell) -> &Matrix {
        &self.projectors[cell.position()]
    }

    pub fn component(&self, cell: Cell) -> &Subspace {
        &self.components[cell.position()]
    }

    pub fn dims(&self) -> [usize; 4] {
        Cell::ALL.map(|c| self.component(c).dim())
    }

    /// The `cell` part of `a`.
    pub fn project_coords(&self, cell: Cell, a: &[Scalar]) -> Vector {
        self.projector(cell).mul_vec(a)
    }

    /// `R11 ⊕ R22`.
    pub fn diagonal(&self) -> Subspace {
        self.component(Cell::R11).sum(self.component(Cell::R22))
    }

    pub fn check(&self, ring: &Ring) -> Result<()> {
        if ring.id() == self.ring {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }
}

impl Serialize for PeirceFrame {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PeirceFrame", 4)?;
        st.serialize_field("e1", &self.e1)?;
        st.serialize_field("e2", &self.e2)?;
        st.serialize_field("dims", &self.dims())?;
        let comps: std::collections::BTreeMap<&str, &Subspace> =
            Cell::ALL.iter().map(|&c| (c.name(), self.component(c))).collect();
        st.serialize_field("components", &comps)?;
        st.end()
    }
}

/// Builds the frame for a nontrivial idempotent `e1`, verifying that the maps
/// `a ↦ e_i(a e_j)` are complementary projectors and that `(e_i a)e_j =
/// e_i(a e_j)` on the basis.
pub fn peirce_frame(ring: &Ring, e1: &Element) -> Result<PeirceFrame> {
    ring.check(e1)?;
    let e1v = e1.coords().to_vec();
    if !ring.is_idempotent_coords(&e1v) {
        return Err(AlgebraError::NotIdempotent(ring.format_coords(&e1v)));
    }
    if e1.is_zero() || e1v == ring.unit_coords() {
        return Err(AlgebraError::TrivialIdempotent);
    }
    let domain = ring.domain();
    let n = ring.dim();
    let e2v = linalg::sub_vectors(ring.unit_coords(), &e1v);
    let es = [&e1v, &e2v];
    let basis: Vec<Vector> = (0..n).map(|k| ring.basis_coords(k)).collect();

    let projectors = Cell::ALL.map(|cell| {
        let (i, j) = cell.indices();
        let cols: Vec<Vector> = basis
            .iter()
            .map(|b| ring.mul_coords(es[i - 1], &ring.mul_coords(b, es[j - 1])))
            .collect();
        Matrix::from_columns(domain, n, &cols).expect("square")
    });

    for cell in Cell::ALL {
        let (i, j) = cell.indices();
        for b in &basis {
            let left = ring.mul_coords(&ring.mul_coords(es[i - 1], b), es[j - 1]);
            let right = ring.mul_coords(es[i - 1], &ring.mul_coords(b, es[j - 1]));
            if left != right {
                return Err(AlgebraError::InconsistentFrame(format!(
                    "(e{i}·a)·e{j} != e{i}·(a·e{j}) for a = {}",
                    ring.format_coords(b)
                )));
            }
        }
    }
    let mut total = Matrix::zeros(domain, n, n);
    for (a, pa) in Cell::ALL.iter().zip(&projectors) {
        total = total.add(pa);
        for (b, pb) in Cell::ALL.iter().zip(&projectors) {
            let prod = pa.mul(pb);
            let ok = if a == b { prod == *pa } else { prod.is_zero() };
            if !ok {
                return Err(AlgebraError::InconsistentFrame(format!(
                    "projector {}∘{} is not {}",
                    a.name(),
                    b.name(),
                    if a == b { "idempotent" } else { "zero" }
                )));
            }
        }
    }
    if total != Matrix::identity(domain, n) {
        return Err(AlgebraError::InconsistentFrame("projectors do not sum to the identity".into()));
    }
    let components = projectors.clone().map(|p| p.image());
    Ok(PeirceFrame { ring: ring.id(), e1: e1v, e2: e2v, projectors, components })
}

/// `(a11, a12, a21, a22)` with `a = Σ a_ij`.
pub fn peirce_project(frame: &PeirceFrame, a: &Element) -> Result<[Element; 4]> {
    if a.ring() != frame.ring {
        return Err(AlgebraError::RingMismatch);
    }
    Ok(Cell::ALL.map(|c| Element::from_parts(frame.ring, frame.project_coords(c, a.coords()))))
}

pub const RELATIONS: [&str; 5] = [
    "Rij*Rjl in Ril",
    "Rij*Rij in Rji (i!=j)",
    "Rij*Rkl = 0 (j!=k, (i,j)!=(k,l))",
    "x*x = 0 on Rij (i!=j)",
    "x*y = -y*x on Rij (i!=j)",
];

/// Checks the multiplication rules between Peirce components that hold in
/// alternative rings. One report per rule, in the order of [`RELATIONS`].
pub fn verify_peirce_relations(ring: &Ring, frame: &PeirceFrame, budget: u64) -> Result<Vec<CheckReport>> {
    frame.check(ring)?;
    let comp = |c: Cell| frame.component(c);
    let basis_pairs = |a: Cell, b: Cell| (comp(a).dim() * comp(b).dim()) as u64;

    // Rij * Rkl ⊆ target (or = 0 when target is None), on basis pairs
    let product_rule = |pairs: &[(Cell, Cell, Option<Cell>)]| -> (Option<Vec<Vector>>, u64) {
        let mut checked = 0;
        for &(a, b, target) in pairs {
            for x in comp(a).basis() {
                for y in comp(b).basis() {
                    checked += 1;
                    let p = ring.mul_coords(x, y);
                    let ok = match target {
                        Some(t) => comp(t).contains(&p),
                        None => linalg::is_zero_vector(&p),
                    };
                    if !ok {
                        return (Some(vec![x.clone(), y.clone()]), checked);
                    }
                }
            }
        }
        (None, checked)
    };

    let mut rule_i = Vec::new();
    let mut rule_iii = Vec::new();
    for a in Cell::ALL {
        for b in Cell::ALL {
            let (i, j) = a.indices();
            let (k, l) = b.indices();
            if j == k {
                rule_i.push((a, b, Some(Cell::from_indices(i, l))));
            } else if a != b {
                rule_iii.push((a, b, None));
            }
        }
    }
    let rule_ii: Vec<_> = Cell::OFF_DIAGONAL.iter().map(|&c| (c, c, Some(c.transpose()))).collect();

    let mut reports = Vec::new();
    for (name, rules) in [(RELATIONS[0], &rule_i), (RELATIONS[1], &rule_ii), (RELATIONS[2], &rule_iii)] {
        let total: u64 = rules.iter().map(|&(a, b, _)| basis_pairs(a, b)).sum();
        let (witness, checked) = product_rule(rules);
        let space = QuantifierSpace { total, checked, exhaustive: true, seed: None };
        reports.push(CheckReport::new(name, witness, space));
    }

    // squares vanish on off-diagonal cells: enumerate when small enough,
    // otherwise use basis squares plus anticommutation (exact by polarization)
    let mut witness = None;
    let mut total = 0u64;
    let mut detail = "enumerated all cell elements";
    for c in Cell::OFF_DIAGONAL {
        let cell = comp(c);
        match cell.cardinality().filter(|&k| k <= budget) {
            Some(k) => {
                total += k;
                if witness.is_none() {
                    witness = cell
                        .elements()
                        .expect("finite")
                        .find(|x| !linalg::is_zero_vector(&ring.mul_coords(x, x)))
                        .map(|x| vec![x]);
                }
            }
            None => {
                detail = "basis squares plus anticommutation of basis pairs";
                total += (cell.dim() * cell.dim()) as u64;
                if witness.is_none() {
                    witness = polarized_square_witness(ring, cell);
                }
            }
        }
    }
    reports.push(CheckReport::new(RELATIONS[3], witness, QuantifierSpace::exhaustive(total)).with_detail(detail));

    let mut witness = None;
    let mut total = 0u64;
    for c in Cell::OFF_DIAGONAL {
        total += basis_pairs(c, c);
        if witness.is_none() {
            witness = anticommutation_witness(ring, comp(c));
        }
    }
    reports.push(CheckReport::new(RELATIONS[4], witness, QuantifierSpace::exhaustive(total)));
    Ok(reports)
}

fn anticommutation_witness(ring: &Ring, cell: &Subspace) -> Option<Vec<Vector>> {
    for x in cell.basis() {
        for y in cell.basis() {
            let s = linalg::add_vectors(&ring.mul_coords(x, y), &ring.mul_coords(y, x));
            if !linalg::is_zero_vector(&s) {
                return Some(vec![x.clone(), y.clone()]);
            }
        }
    }
    None
}

/// A nonzero square in `cell`, derived from basis data:
/// `(Σ c_k x_k)² = Σ c_k² x_k² + Σ_{k<l} c_k c_l (x_k x_l + x_l x_k)`.
fn polarized_square_witness(ring: &Ring, cell: &Subspace) -> Option<Vec<Vector>> {
    let b = cell.basis();
    for x in b {
        if !linalg::is_zero_vector(&ring.mul_coords(x, x)) {
            return Some(vec![x.clone()]);
        }
    }
    for (k, x) in b.iter().enumerate() {
        for y in &b[k + 1..] {
            let s = linalg::add_vectors(x, y);
            if !linalg::is_zero_vector(&ring.mul_coords(&s, &s)) {
                return Some(vec![s]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::report;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn matrix_units_frame() {
        let m2 = generators::m2(F5).unwrap();
        let f = peirce_frame(&m2, &m2.basis_element(0)).unwrap();
        assert_eq!(f.dims(), [1, 1, 1, 1]);
        for (k, c) in Cell::ALL.iter().enumerate() {
            assert!(f.component(*c).contains(&m2.basis_coords(k)));
        }
        let reps = verify_peirce_relations(&m2, &f, 1_000_000).unwrap();
        assert!(report::all_pass(&reps), "{reps:?}");
    }

    #[test]
    fn projection_examples() {
        let m2 = generators::m2(F5).unwrap();
        let e1 = m2.basis_element(0);
        let f = peirce_frame(&m2, &e1).unwrap();
        let parts = peirce_project(&f, &e1).unwrap();
        assert_eq!(parts[0], e1);
        assert!(parts[1..].iter().all(Element::is_zero));
        let parts = peirce_project(&f, &m2.one()).unwrap();
        assert_eq!(parts[0], e1);
        assert_eq!(parts[3], m2.basis_element(3));
        let a = m2.element_from_ints(&[1, 2, 3, 4]).unwrap();
        let parts = peirce_project(&f, &a).unwrap();
        for (k, p) in parts.iter().enumerate() {
            assert_eq!(p.coords()[k], a.coords()[k]);
            assert_eq!(p.coords().iter().filter(|c| !c.is_zero()).count(), 1);
        }
    }

    #[test]
    fn zorn_frame_dims_and_relations() {
        let z = generators::zorn(F5).unwrap();
        let f = peirce_frame(&z, &z.basis_element(0)).unwrap();
        assert_eq!(f.dims(), [1, 3, 3, 1]);
        let reps = verify_peirce_relations(&z, &f, 1_000_000).unwrap();
        assert!(report::all_pass(&reps), "{reps:?}");
        assert!(reps[3].quantifier_space.total == 250);
        // R12·R12 has nonzero products
        let r12 = f.component(Cell::R12);
        let nonzero = r12
            .basis()
            .iter()
            .any(|x| r12.basis().iter().any(|y| !linalg::is_zero_vector(&z.mul_coords(x, y))));
        assert!(nonzero);
    }

    #[test]
    fn frame_errors() {
        let m2 = generators::m2(F5).unwrap();
        assert_eq!(peirce_frame(&m2, &m2.one()), Err(AlgebraError::TrivialIdempotent));
        assert_eq!(peirce_frame(&m2, &m2.zero()), Err(AlgebraError::TrivialIdempotent));
        assert!(matches!(peirce_frame(&m2, &m2.basis_element(1)), Err(AlgebraError::NotIdempotent(_))));
        let other = generators::m2(ScalarDomain::PrimeField(7)).unwrap();
        assert_eq!(peirce_frame(&m2, &other.basis_element(0)), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn perturbed_ring_breaks_a_relation() {
        let r = generators::perturbed_m2(F5).unwrap();
        let f = peirce_frame(&r, &r.basis_element(0)).unwrap();
        let reps = verify_peirce_relations(&r, &f, 1_000_000).unwrap();
        assert!(!report::all_pass(&reps));
        let failed = reps.iter().find(|r| !r.pass).unwrap();
        assert!(failed.witness.is_some());
    }

    #[test]
    fn polarized_square_check_agrees_with_enumeration() {
        let z = generators::zorn(F5).unwrap();
        let f = peirce_frame(&z, &z.basis_element(0)).unwrap();
        let enumerated = verify_peirce_relations(&z, &f, 1_000_000).unwrap();
        let polarized = verify_peirce_relations(&z, &f, 1).unwrap();
        assert_eq!(enumerated[3].pass, polarized[3].pass);
        let r = generators::perturbed_m2(F5).unwrap();
        let f = peirce_frame(&r, &r.basis_element(0)).unwrap();
        let a = verify_peirce_relations(&r, &f, 1_000_000).unwrap();
        let b = verify_peirce_relations(&r, &f, 1).unwrap();
        assert_eq!(a[3].pass, b[3].pass);
    }
}
