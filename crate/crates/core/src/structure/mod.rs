//! Structural analysis: centre, nucleus, idempotents, Peirce frames,
//! primeness and the hypothesis checks used by the decomposition theorem.
//!
//! Universally quantified conditions that are linear in the quantified
//! element are decided by kernel computations rather than element scans;
//! witnesses are then the first offending element in enumeration order.

mod hypotheses;
mod idempotents;
mod peirce;
mod primeness;

pub use hypotheses::{
    check_cell_centres, check_main_hypotheses, check_spade_club, corner_faithful, CellCentreReport, Hypothesis,
    DIAG_CENTRALIZER_OF_R12, DIAG_CENTRALIZER_OF_R21, HYPOTHESES_IMPLY_DIAG_CENTRAL,
};
pub use idempotents::{idempotents, idempotents_among, Idempotent, IdempotentKind};
pub use peirce::{peirce_frame, peirce_project, verify_peirce_relations, Cell, PeirceFrame, RELATIONS};
pub use primeness::{check_primeness, multiplication_algebra, PrimenessReport};

use crate::linalg::{Matrix, Subspace, Vector};
use crate::ring::Ring;

/// Kernel of a linear map restricted to `space`, given the images of the
/// echelon basis of `space`. Returned in ambient coordinates.
pub(crate) fn restricted_kernel(space: &Subspace, images: &[Vector]) -> Subspace {
    let domain = space.domain();
    if space.is_zero() {
        return Subspace::zero(domain, space.ambient());
    }
    let rows = images.first().map_or(0, Vec::len);
    if rows == 0 {
        return space.clone();
    }
    let m = Matrix::from_columns(domain, rows, images).expect("images of equal length");
    let vectors: Vec<Vector> = m.kernel().basis().iter().map(|c| space.combine(c)).collect();
    Subspace::span(domain, space.ambient(), &vectors)
}

/// `{x ∈ space : f(x) = 0}` for linear `f`.
pub(crate) fn kernel_of<F>(space: &Subspace, f: F) -> Subspace
where
    F: Fn(&[crate::Scalar]) -> Vector,
{
    let images: Vec<Vector> = space.basis().iter().map(|b| f(b)).collect();
    restricted_kernel(space, &images)
}

/// The commutative centre `{z : [z, x] = 0 for all x}`.
pub fn center(ring: &Ring) -> Subspace {
    let n = ring.dim();
    let whole = Subspace::whole(ring.domain(), n);
    kernel_of(&whole, |z| {
        (0..n).flat_map(|i| ring.commutator_coords(z, &ring.basis_coords(i))).collect()
    })
}

/// The nucleus: elements with vanishing associators in all three slots.
pub fn nucleus(ring: &Ring) -> Subspace {
    let n = ring.dim();
    let whole = Subspace::whole(ring.domain(), n);
    let basis: Vec<Vector> = (0..n).map(|i| ring.basis_coords(i)).collect();
    kernel_of(&whole, |r| {
        let mut out = Vec::with_capacity(3 * n * n * n);
        for x in &basis {
            for y in &basis {
                out.extend(ring.associator_coords(x, y, r));
                out.extend(ring.associator_coords(x, r, y));
                out.extend(ring.associator_coords(r, x, y));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn centres() {
        let m2 = generators::m2(F5).unwrap();
        let z = center(&m2);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(m2.unit_coords()));
        let zorn = generators::zorn(F5).unwrap();
        let z = center(&zorn);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(zorn.unit_coords()));
        let sum = generators::direct_sum(&m2, &m2).unwrap();
        assert_eq!(center(&sum).dim(), 2);
        let q = generators::m2(ScalarDomain::Rationals).unwrap();
        assert_eq!(center(&q).dim(), 1);
    }

    #[test]
    fn nuclei() {
        let m2 = generators::m2(F5).unwrap();
        assert!(nucleus(&m2).is_whole());
        let zorn = generators::zorn(F5).unwrap();
        let nz = nucleus(&zorn);
        assert_eq!(nz.dim(), 1);
        assert!(nz.contains(zorn.unit_coords()));
        let broken = generators::perturbed_m2(F5).unwrap();
        let nb = nucleus(&broken);
        assert!(nb.contains(broken.unit_coords()));
        assert!(!nb.is_whole());
    }

    #[test]
    fn centre_matches_brute_force() {
        let t = generators::triangular2(F5).unwrap();
        let z = center(&t);
        let count = t.element_count().unwrap();
        let brute = (0..count)
            .filter(|&k| {
                let x = t.coords_at(k);
                (0..t.dim()).all(|i| crate::linalg::is_zero_vector(&t.commutator_coords(&x, &t.basis_coords(i))))
            })
            .count() as u64;
        assert_eq!(z.cardinality(), Some(brute));
    }
}
