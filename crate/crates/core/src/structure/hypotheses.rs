use rayon::prelude::*;
use serde::Serialize;

use super::peirce::{Cell, PeirceFrame};
use super::{center, kernel_of};
use crate::error::{AlgebraError, Result};
use crate::linalg::{Subspace, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::Ring;

/// The four hypotheses on a Peirce frame under which Lie multiplicative maps
/// split as ψ + τ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Hypothesis {
    /// `x_ij R_ji = 0` forces `x_ij = 0` for `i ≠ j`.
    OffDiagonalFaithful,
    /// `x11 R12 = 0` or `R21 x11 = 0` forces `x11 = 0`.
    CornerOneFaithful,
    /// `R12 x22 = 0` or `x22 R21 = 0` forces `x22 = 0`.
    CornerTwoFaithful,
    /// Every nonzero central `z` has `zR = R`.
    CentralSurjective,
}

impl Hypothesis {
    pub const ALL: [Hypothesis; 4] = [
        Hypothesis::OffDiagonalFaithful,
        Hypothesis::CornerOneFaithful,
        Hypothesis::CornerTwoFaithful,
        Hypothesis::CentralSurjective,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Hypothesis::OffDiagonalFaithful => "offdiag_faithful",
            Hypothesis::CornerOneFaithful => "corner11_faithful",
            Hypothesis::CornerTwoFaithful => "corner22_faithful",
            Hypothesis::CentralSurjective => "central_surjective",
        }
    }
}

pub const DIAG_CENTRALIZER_OF_R12: &str = "diag_centralizer_of_R12_central";
pub const DIAG_CENTRALIZER_OF_R21: &str = "diag_centralizer_of_R21_central";
pub const HYPOTHESES_IMPLY_DIAG_CENTRAL: &str = "faithful_frame_implies_diag_centralizers_central";

fn linear_space(cells: &[&Subspace]) -> QuantifierSpace {
    let total = cells
        .iter()
        .map(|c| c.cardinality().unwrap_or(u64::MAX))
        .fold(0u64, u64::saturating_add);
    QuantifierSpace::exhaustive(total)
}

fn products_with(ring: &Ring, others: &Subspace, x: &[crate::Scalar], left: bool) -> Vector {
    others
        .basis()
        .iter()
        .flat_map(|r| if left { ring.mul_coords(x, r) } else { ring.mul_coords(r, x) })
        .collect()
}

/// First nonzero element of the first nonzero kernel.
fn first_witness(kernels: &[Subspace]) -> Option<Vec<Vector>> {
    kernels.iter().find_map(Subspace::first_nonzero).map(|w| vec![w])
}

/// Off-diagonal faithfulness: `x_ij ↦ (x_ij r)_{r ∈ R_ji}` is injective.
fn offdiag_faithful(ring: &Ring, frame: &PeirceFrame) -> CheckReport {
    let kernels: Vec<Subspace> = Cell::OFF_DIAGONAL
        .iter()
        .map(|&c| kernel_of(frame.component(c), |x| products_with(ring, frame.component(c.transpose()), x, true)))
        .collect();
    let space = linear_space(&[frame.component(Cell::R12), frame.component(Cell::R21)]);
    CheckReport::new(Hypothesis::OffDiagonalFaithful.name(), first_witness(&kernels), space)
        .with_detail("decided by kernel computation")
}

/// Corner faithfulness for corner `i ∈ {1, 2}`. Also used on the target frame
/// of a map.
pub fn corner_faithful(ring: &Ring, frame: &PeirceFrame, corner: usize) -> CheckReport {
    let (cell, name) = match corner {
        1 => (Cell::R11, Hypothesis::CornerOneFaithful.name()),
        2 => (Cell::R22, Hypothesis::CornerTwoFaithful.name()),
        _ => panic!("corner must be 1 or 2"),
    };
    let r12 = frame.component(Cell::R12);
    let r21 = frame.component(Cell::R21);
    let space = frame.component(cell);
    let kernels = if corner == 1 {
        // x11 R12 = 0, R21 x11 = 0
        [
            kernel_of(space, |x| products_with(ring, r12, x, true)),
            kernel_of(space, |x| products_with(ring, r21, x, false)),
        ]
    } else {
        // R12 x22 = 0, x22 R21 = 0
        [
            kernel_of(space, |x| products_with(ring, r12, x, false)),
            kernel_of(space, |x| products_with(ring, r21, x, true)),
        ]
    };
    CheckReport::new(name, first_witness(&kernels), linear_space(&[space])).with_detail("decided by kernel computation")
}

/// Every nonzero central `z` has left multiplication of full rank. Over the
/// rationals only decidable here when the centre is spanned by the unit.
fn central_surjective(ring: &Ring, centre: &Subspace, budget: u64) -> Result<CheckReport> {
    let name = Hypothesis::CentralSurjective.name();
    let n = ring.dim();
    if centre.dim() <= 1 {
        // centre = span{1}, and c·1 is invertible for c ≠ 0
        let total = centre.cardinality().map_or(u64::MAX, |k| k.saturating_sub(1));
        return Ok(CheckReport::new(name, None, QuantifierSpace::exhaustive(total)).with_detail("centre is spanned by the unit"));
    }
    let count = centre.cardinality().ok_or_else(|| {
        AlgebraError::UnsupportedDomain(format!(
            "centre has dimension {} over Q; nonzero central elements cannot be enumerated",
            centre.dim()
        ))
    })?;
    if count > budget {
        return Err(AlgebraError::BudgetExceeded { needed: count, budget });
    }
    let elements: Vec<Vector> = centre.elements().expect("finite").skip(1).collect();
    let witness = elements
        .par_iter()
        .filter(|z| ring.left_mul_matrix(z).rank() < n)
        .min_by_key(|z| ring.index_of(z))
        .cloned();
    Ok(CheckReport::new(name, witness.map(|z| vec![z]), QuantifierSpace::exhaustive(count - 1)))
}

/// Reports for all four hypotheses, in the order of [`Hypothesis::ALL`].
pub fn check_main_hypotheses(ring: &Ring, frame: &PeirceFrame, budget: u64) -> Result<Vec<CheckReport>> {
    frame.check(ring)?;
    let centre = center(ring);
    Ok(vec![
        offdiag_faithful(ring, frame),
        corner_faithful(ring, frame, 1),
        corner_faithful(ring, frame, 2),
        central_surjective(ring, &centre, budget)?,
    ])
}

/// Diagonal elements commuting with all of `R12` (resp. `R21`) are central.
/// The third report is the conditional "faithfulness on the frame implies
/// both", which must never fail.
pub fn check_spade_club(ring: &Ring, frame: &PeirceFrame) -> Result<Vec<CheckReport>> {
    frame.check(ring)?;
    let centre = center(ring);
    let diag = frame.diagonal();
    let mut reports = Vec::new();
    for (cell, name) in [(Cell::R12, DIAG_CENTRALIZER_OF_R12), (Cell::R21, DIAG_CENTRALIZER_OF_R21)] {
        let off = frame.component(cell);
        let centralizer = kernel_of(&diag, |d| {
            off.basis().iter().flat_map(|r| ring.commutator_coords(d, r)).collect()
        });
        let witness = centralizer.basis().iter().find(|d| !centre.contains(d)).map(|d| vec![d.clone()]);
        let detail = format!("centralizer of {} in R11+R22 has dimension {}", cell.name(), centralizer.dim());
        reports.push(CheckReport::new(name, witness, linear_space(&[&diag])).with_detail(detail));
    }
    let faithful = offdiag_faithful(ring, frame).pass && corner_faithful(ring, frame, 1).pass && corner_faithful(ring, frame, 2).pass;
    let both = reports.iter().all(|r| r.pass);
    let implication = CheckReport::new(HYPOTHESES_IMPLY_DIAG_CENTRAL, None, QuantifierSpace::exhaustive(1))
        .with_pass(!faithful || both)
        .with_detail(format!("faithful frame: {faithful}; both centralizers central: {both}"));
    reports.push(implication);
    Ok(reports)
}

/// Centre of an off-diagonal cell, `{a ∈ R_ij : [a, R_ij] = 0}`, and how it
/// sits relative to the ring's centre.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellCentreReport {
    pub cell: Cell,
    pub cell_dim: usize,
    pub centre: Subspace,
    pub centre_dim: usize,
    /// `Z(R_ij) ⊆ R_ij + Z(R)`; holds whenever the computation is sound.
    pub contained_in_cell_plus_centre: bool,
    /// `dim (Z(R_ij) ∩ Z(R))`
    pub meets_ring_centre_dim: usize,
}

pub fn check_cell_centres(ring: &Ring, frame: &PeirceFrame) -> Result<Vec<CellCentreReport>> {
    frame.check(ring)?;
    let centre = center(ring);
    Ok(Cell::OFF_DIAGONAL
        .iter()
        .map(|&cell| {
            let space = frame.component(cell);
            let cell_centre = kernel_of(space, |a| {
                space.basis().iter().flat_map(|b| ring.commutator_coords(a, b)).collect()
            });
            CellCentreReport {
                cell,
                cell_dim: space.dim(),
                centre_dim: cell_centre.dim(),
                contained_in_cell_plus_centre: space.sum(&centre).contains_subspace(&cell_centre),
                meets_ring_centre_dim: cell_centre.intersection(&centre).dim(),
                centre: cell_centre,
            }
        })
        .collect())
}
