//! Where a map sends the Peirce components, and which of the two corner
//! conditions ((†) or (††)) it satisfies.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Matrix, Subspace, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::{Element, Ring};
use crate::structure::{center, corner_faithful, peirce_frame, Cell, PeirceFrame};

use super::map::MapTable;

/// `(f_i y) f_i`
pub(crate) fn corner(ring: &Ring, f: &[crate::Scalar], y: &[crate::Scalar]) -> Vector {
    ring.mul_coords(&ring.mul_coords(f, y), f)
}

/// `{z f : z ∈ Z}`
pub(crate) fn centre_times(ring: &Ring, centre: &Subspace, f: &[crate::Scalar]) -> Subspace {
    let vs: Vec<Vector> = centre.basis().iter().map(|z| ring.mul_coords(z, f)).collect();
    Subspace::span(ring.domain(), ring.dim(), &vs)
}

/// Frames on both sides: `e1` in the source and `f1 = φ(e1)` in the target.
pub fn frames(map: &MapTable, e1: &Element) -> Result<(PeirceFrame, PeirceFrame)> {
    let (s, t) = (map.source(), map.target());
    let source_frame = peirce_frame(s, e1)?;
    let f1 = map.eval(e1.coords());
    if !t.is_idempotent_coords(&f1) || linalg::is_zero_vector(&f1) || f1 == t.unit_coords() {
        return Err(AlgebraError::NotIdempotentImage);
    }
    let target_frame = peirce_frame(t, &t.element(f1)?).map_err(|e| match e {
        AlgebraError::InconsistentFrame(m) => AlgebraError::InconsistentFrame(format!("target: {m}")),
        other => other,
    })?;
    Ok((source_frame, target_frame))
}

fn cell_elements(frame: &PeirceFrame, cell: Cell, budget: u64) -> Result<Vec<Vector>> {
    let space = frame.component(cell);
    let count = space
        .cardinality()
        .ok_or_else(|| AlgebraError::UnsupportedDomain("Peirce components over Q cannot be enumerated".into()))?;
    if count > budget {
        return Err(AlgebraError::BudgetExceeded { needed: count, budget });
    }
    Ok(space.elements().expect("finite").collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeirceImageReport {
    pub target_frame: PeirceFrame,
    /// Off-diagonal images, the corner shape of diagonal images, and
    /// faithfulness of the target corners.
    pub reports: Vec<CheckReport>,
    /// The four diagonal containments individually.
    pub shapes: Vec<CheckReport>,
}

pub const DIAGONAL_SHAPE: &str = "diagonal images corner-shaped";

fn image_name(c: Cell) -> String {
    format!("phi({0}) = {0}'", c.name())
}

fn shape_name(c: Cell, d: Cell) -> String {
    format!("phi({}) in {}' + Z'", c.name(), d.name())
}

/// Checks `φ(R_ij) = R'_ij` for `i ≠ j`, that diagonal images lie either
/// all in the same corners (`R'_ii + Z'`) or all in the opposite corners
/// (`R'_jj + Z'`), and corner faithfulness on the target frame.
pub fn check_peirce_image(map: &MapTable, e1: &Element, budget: u64) -> Result<PeirceImageReport> {
    let (src, tgt) = frames(map, e1)?;
    let t = map.target();
    let centre = center(t);
    let mut reports = Vec::new();

    for c in Cell::OFF_DIAGONAL {
        let xs = cell_elements(&src, c, budget)?;
        let target_cell = tgt.component(c);
        let mut witness = None;
        let mut hit = HashSet::new();
        for x in &xs {
            let y = map.eval(x);
            if !target_cell.contains(&y) {
                witness = Some(vec![x.clone()]);
                break;
            }
            hit.insert(t.index_of(&y));
        }
        if witness.is_none() {
            witness = cell_elements(&tgt, c, budget)?
                .into_iter()
                .find(|y| !hit.contains(&t.index_of(y)))
                .map(|y| vec![y]);
        }
        let detail = if witness.as_ref().is_some_and(|w| src.component(c).contains(&w[0])) {
            "witness: source element whose image leaves the cell"
        } else {
            "witness: target cell element outside the image, if any"
        };
        reports.push(CheckReport::new(image_name(c), witness, QuantifierSpace::exhaustive(xs.len() as u64)).with_detail(detail));
    }

    let mut shapes = Vec::new();
    let mut shape_pass = |c: Cell, d: Cell| -> Result<bool> {
        let xs = cell_elements(&src, c, budget)?;
        let space = tgt.component(d).sum(&centre);
        let witness = xs.iter().find(|x| !space.contains(&map.eval(x))).map(|x| vec![x.clone()]);
        let rep = CheckReport::new(shape_name(c, d), witness, QuantifierSpace::exhaustive(xs.len() as u64));
        let pass = rep.pass;
        shapes.push(rep);
        Ok(pass)
    };
    let same = shape_pass(Cell::R11, Cell::R11)? & shape_pass(Cell::R22, Cell::R22)?;
    let opposite = shape_pass(Cell::R11, Cell::R22)? & shape_pass(Cell::R22, Cell::R11)?;
    let first_failure = shapes.iter().find(|r| !r.pass).and_then(|r| r.witness.clone());
    let total = shapes.iter().map(|r| r.quantifier_space.total).sum();
    reports.push(
        CheckReport::new(DIAGONAL_SHAPE, if same || opposite { None } else { first_failure }, QuantifierSpace::exhaustive(total))
            .with_detail(format!("same corners: {same}; opposite corners: {opposite}")),
    );

    for corner in [1, 2] {
        let mut rep = corner_faithful(t, &tgt, corner);
        rep.condition = format!("target {}", rep.condition);
        reports.push(rep);
    }
    Ok(PeirceImageReport { target_frame: tgt, reports, shapes })
}

/// Which corner condition a map satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `f_i φ(R_jj) f_i ⊆ Z' f_i`: ψ is an isomorphism.
    Dagger,
    /// `f_i φ(R_ii) f_i ⊆ Z' f_i`: ψ is the negative of an anti-isomorphism.
    DoubleDagger,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Dagger => "dagger",
            Branch::DoubleDagger => "double_dagger",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchReport {
    pub dagger: bool,
    pub double_dagger: bool,
    /// One report per condition and index `i ∈ {1, 2}`.
    pub reports: Vec<CheckReport>,
}

impl BranchReport {
    pub fn holds(&self, b: Branch) -> bool {
        match b {
            Branch::Dagger => self.dagger,
            Branch::DoubleDagger => self.double_dagger,
        }
    }
}

/// Evaluates both corner conditions for both index assignments. A branch
/// holds only when it holds for `i = 1` and `i = 2`.
pub fn detect_branch(map: &MapTable, e1: &Element, budget: u64) -> Result<BranchReport> {
    let (src, tgt) = frames(map, e1)?;
    let t = map.target();
    let centre = center(t);
    let mut reports = Vec::new();
    let mut verdict = [true, true];
    for (b, branch) in [Branch::Dagger, Branch::DoubleDagger].into_iter().enumerate() {
        for i in [1usize, 2] {
            let j = 3 - i;
            let f = tgt.idempotent(i);
            let zf = centre_times(t, &centre, f);
            let cell = match branch {
                Branch::Dagger => Cell::from_indices(j, j),
                Branch::DoubleDagger => Cell::from_indices(i, i),
            };
            let xs = cell_elements(&src, cell, budget)?;
            let witness = xs.iter().find(|x| !zf.contains(&corner(t, f, &map.eval(x)))).map(|x| vec![x.clone()]);
            let name = format!("{} (i={i}): f{i} phi({}) f{i} in Z' f{i}", branch.name(), cell.name());
            let rep = CheckReport::new(name, witness, QuantifierSpace::exhaustive(xs.len() as u64));
            verdict[b] &= rep.pass;
            reports.push(rep);
        }
    }
    Ok(BranchReport { dagger: verdict[0], double_dagger: verdict[1], reports })
}

/// `z ↦ z f` on the centre has trivial kernel.
pub(crate) fn centre_times_injective(ring: &Ring, centre: &Subspace, f: &[crate::Scalar]) -> bool {
    if centre.is_zero() {
        return true;
    }
    let cols: Vec<Vector> = centre.basis().iter().map(|z| ring.mul_coords(z, f)).collect();
    Matrix::from_columns(ring.domain(), ring.dim(), &cols).expect("consistent").kernel().is_zero()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::generators;
    use crate::lie::map::{conjugation, neg_transpose_plus_trace};
    use crate::report;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn identity_image_shapes() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let id = MapTable::identity(r.clone());
        let rep = check_peirce_image(&id, &r.basis_element(0), 1_000_000).unwrap();
        assert!(report::all_pass(&rep.reports), "{:?}", rep.reports);
        // corners of M2 are one-dimensional, so both shapes hold
        assert!(report::all_pass(&rep.shapes));
        let br = detect_branch(&id, &r.basis_element(0), 1_000_000).unwrap();
        assert!(br.dagger);
        assert_eq!(br.reports.len(), 4);
    }

    #[test]
    fn neg_transpose_swaps_corners() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let phi = neg_transpose_plus_trace(r.clone()).unwrap();
        let (_, tgt) = frames(&phi, &r.basis_element(0)).unwrap();
        assert_eq!(tgt.e1(), r.basis_coords(3).as_slice());
        let rep = check_peirce_image(&phi, &r.basis_element(0), 1_000_000).unwrap();
        assert!(report::all_pass(&rep.reports), "{:?}", rep.reports);
        assert!(detect_branch(&phi, &r.basis_element(0), 1_000_000).unwrap().double_dagger);
    }

    #[test]
    fn zorn_identity_frames() {
        let z = Arc::new(generators::zorn(F5).unwrap());
        let id = MapTable::identity(z.clone());
        let rep = check_peirce_image(&id, &z.basis_element(0), 1_000_000).unwrap();
        assert!(report::all_pass(&rep.reports));
        let br = detect_branch(&id, &z.basis_element(0), 1_000_000).unwrap();
        assert!(br.dagger);
    }

    #[test]
    fn image_must_be_a_nontrivial_idempotent() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let e11 = r.basis_coords(0);
        let bad = MapTable::identity(r.clone()).with_entry(&e11, &r.basis_coords(1), 1_000_000).unwrap();
        assert_eq!(check_peirce_image(&bad, &r.basis_element(0), 1_000_000).unwrap_err(), AlgebraError::NotIdempotentImage);
    }

    #[test]
    fn corrupted_offdiagonal_image_is_reported() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let e12 = r.basis_coords(1);
        let bad = MapTable::identity(r.clone()).with_entry(&e12, &r.basis_coords(2), 1_000_000).unwrap();
        let rep = check_peirce_image(&bad, &r.basis_element(0), 1_000_000).unwrap();
        let off = &rep.reports[0];
        assert!(!off.pass);
        assert_eq!(off.witness.as_ref().unwrap()[0], e12);
    }

    #[test]
    fn conjugation_moves_the_frame() {
        let r = Arc::new(generators::m2(F5).unwrap());
        let u = r.element_from_ints(&[1, 1, 0, 1]).unwrap();
        let phi = conjugation(r.clone(), u.coords()).unwrap();
        let rep = check_peirce_image(&phi, &r.basis_element(0), 1_000_000).unwrap();
        assert!(report::all_pass(&rep.reports), "{:?}", rep.reports);
    }
}
