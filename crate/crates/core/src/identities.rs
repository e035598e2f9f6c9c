//! Polynomial identity checks (alternative, flexible, associative) by
//! linearization over basis triples.
//!
//! The linearized forms only determine the identity up to factors of two, so
//! the diagonal cases are checked directly as well: on basis elements and on
//! all sums `b_i + b_j`. This keeps the checks exact in every characteristic.

use crate::linalg::{self, Vector};
use crate::report::{CheckReport, QuantifierSpace};
use crate::ring::Ring;

/// Verdict of an identity check; the witness lists the elements plugged into
/// the identity when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub witness: Option<Vec<Vector>>,
}

impl IdentityCheck {
    fn from_witness(witness: Option<Vec<Vector>>) -> Self {
        IdentityCheck { holds: witness.is_none(), witness }
    }

    pub fn into_report(self, condition: &str, ring: &Ring) -> CheckReport {
        let n = ring.dim() as u64;
        CheckReport::new(condition, self.witness, QuantifierSpace::exhaustive(n * n * n))
    }
}

/// Table of basis associators `(b_i, b_j, b_k)`.
struct Associators {
    n: usize,
    table: Vec<Vector>,
}

impl Associators {
    fn new(ring: &Ring) -> Self {
        let n = ring.dim();
        let basis: Vec<Vector> = (0..n).map(|i| ring.basis_coords(i)).collect();
        let products: Vec<Vector> = (0..n * n)
            .map(|ij| ring.mul_coords(&basis[ij / n], &basis[ij % n]))
            .collect();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let left = ring.mul_coords(&products[i * n + j], &basis[k]);
                    let right = ring.mul_coords(&basis[i], &products[j * n + k]);
                    table.push(linalg::sub_vectors(&left, &right));
                }
            }
        }
        Associators { n, table }
    }

    fn get(&self, i: usize, j: usize, k: usize) -> &[crate::scalar::Scalar] {
        &self.table[(i * self.n + j) * self.n + k]
    }

    fn sum_vanishes(&self, a: (usize, usize, usize), b: (usize, usize, usize)) -> bool {
        let x = self.get(a.0, a.1, a.2);
        let y = self.get(b.0, b.1, b.2);
        x.iter().zip(y).all(|(s, t)| (s + t).is_zero())
    }
}

fn triple(ring: &Ring, i: usize, j: usize, k: usize) -> Vec<Vector> {
    vec![ring.basis_coords(i), ring.basis_coords(j), ring.basis_coords(k)]
}

/// Basis elements followed by all sums `b_i + b_j` (i < j). A quadratic form
/// vanishing on these vanishes everywhere.
fn diagonal_points(ring: &Ring) -> Vec<Vector> {
    let n = ring.dim();
    let mut points: Vec<Vector> = (0..n).map(|i| ring.basis_coords(i)).collect();
    for i in 0..n {
        for j in i + 1..n {
            points.push(linalg::add_vectors(&ring.basis_coords(i), &ring.basis_coords(j)));
        }
    }
    points
}

/// `(x,x,y) = 0` and `(y,x,x) = 0` for all `x, y`.
pub fn is_alternative(ring: &Ring) -> IdentityCheck {
    let n = ring.dim();
    let assoc = Associators::new(ring);
    let mut linearized = true;
    'scan: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !assoc.sum_vanishes((i, j, k), (j, i, k)) || !assoc.sum_vanishes((k, i, j), (k, j, i)) {
                    linearized = false;
                    break 'scan;
                }
            }
        }
    }
    for x in diagonal_points(ring) {
        for k in 0..n {
            let y = ring.basis_coords(k);
            if !linalg::is_zero_vector(&ring.associator_coords(&x, &x, &y)) {
                return IdentityCheck::from_witness(Some(vec![x.clone(), x, y]));
            }
            if !linalg::is_zero_vector(&ring.associator_coords(&y, &x, &x)) {
                return IdentityCheck::from_witness(Some(vec![y, x.clone(), x]));
            }
        }
    }
    debug_assert!(linearized, "linearized law fails but no diagonal witness");
    IdentityCheck::from_witness(None)
}

/// `(x,y,x) = 0` for all `x, y`, i.e. `xy·x = x·yx`.
pub fn is_flexible(ring: &Ring) -> IdentityCheck {
    let n = ring.dim();
    let assoc = Associators::new(ring);
    let mut linearized = true;
    'scan: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !assoc.sum_vanishes((i, j, k), (k, j, i)) {
                    linearized = false;
                    break 'scan;
                }
            }
        }
    }
    for x in diagonal_points(ring) {
        for k in 0..n {
            let y = ring.basis_coords(k);
            if !linalg::is_zero_vector(&ring.associator_coords(&x, &y, &x)) {
                return IdentityCheck::from_witness(Some(vec![x.clone(), y, x]));
            }
        }
    }
    debug_assert!(linearized, "linearized law fails but no diagonal witness");
    IdentityCheck::from_witness(None)
}

/// All basis associators vanish.
pub fn is_associative(ring: &Ring) -> IdentityCheck {
    let n = ring.dim();
    let assoc = Associators::new(ring);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !linalg::is_zero_vector(assoc.get(i, j, k)) {
                    return IdentityCheck::from_witness(Some(triple(ring, i, j, k)));
                }
            }
        }
    }
    IdentityCheck::from_witness(None)
}

/// `k·x = 0` implies `x = 0`.
pub fn is_k_torsion_free(ring: &Ring, k: u64) -> bool {
    ring.domain().is_k_torsion_free(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn matrix_ring_identities() {
        let m2 = generators::m2(F5).unwrap();
        assert!(is_alternative(&m2).holds);
        assert!(is_flexible(&m2).holds);
        assert!(is_associative(&m2).holds);
    }

    #[test]
    fn zorn_is_alternative_not_associative() {
        let z = generators::zorn(F5).unwrap();
        assert!(is_alternative(&z).holds);
        assert!(is_flexible(&z).holds);
        let assoc = is_associative(&z);
        assert!(!assoc.holds);
        let w = assoc.witness.unwrap();
        assert!(!linalg::is_zero_vector(&z.associator_coords(&w[0], &w[1], &w[2])));
    }

    #[test]
    fn direct_sum_is_associative() {
        let m2 = generators::m2(F5).unwrap();
        let s = generators::direct_sum(&m2, &m2).unwrap();
        assert!(is_associative(&s).holds);
    }

    #[test]
    fn perturbed_matrix_ring_fails_both_laws() {
        let r = generators::perturbed_m2(F5).unwrap();
        let alt = is_alternative(&r);
        assert!(!alt.holds);
        let w = alt.witness.unwrap();
        assert!(w[0] == w[1] || w[1] == w[2]);
        assert!(!linalg::is_zero_vector(&r.associator_coords(&w[0], &w[1], &w[2])));
        let flex = is_flexible(&r);
        assert!(!flex.holds);
        let w = flex.witness.unwrap();
        assert_eq!(w[0], w[2]);
        assert!(!linalg::is_zero_vector(&r.associator_coords(&w[0], &w[1], &w[2])));
    }

    #[test]
    fn torsion() {
        let m2 = generators::m2(F5).unwrap();
        assert!(is_k_torsion_free(&m2, 2));
        assert!(is_k_torsion_free(&m2, 3));
        assert!(!is_k_torsion_free(&m2, 5));
        let q = generators::m2(ScalarDomain::Rationals).unwrap();
        assert!((1..10).all(|k| is_k_torsion_free(&q, k)));
    }
}
