use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, EchelonBuilder, Matrix, Subspace, Vector};
use crate::report::QuantifierSpace;
use crate::ring::Ring;

/// Outcome of both primeness tests.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimenessReport {
    /// Every two nonzero ideals have nonzero product.
    pub prime: bool,
    /// `(a R) b = 0` forces `a = 0` or `b = 0`.
    pub element_criterion: bool,
    pub criterion_equiv: bool,
    /// `(a, b)` with `a, b ≠ 0` and `(a r) b = 0` for every basis `r`.
    pub witness: Option<Vec<Vector>>,
    /// Generators of two nonzero principal ideals with zero product.
    pub ideal_witness: Option<Vec<Vector>>,
    pub principal_ideals: usize,
    pub quantifier_space: QuantifierSpace,
}

/// Basis of the associative algebra of linear maps generated by the identity
/// and all left and right multiplications, as `n×n` matrices.
pub fn multiplication_algebra(ring: &Ring) -> Vec<Matrix> {
    let n = ring.dim();
    let domain = ring.domain();
    let mut gens = Vec::with_capacity(2 * n);
    for k in 0..n {
        let b = ring.basis_coords(k);
        gens.push(ring.left_mul_matrix(&b));
        gens.push(ring.right_mul_matrix(&b));
    }
    let mut span = EchelonBuilder::new(domain, n * n);
    let mut basis = Vec::new();
    let push = |m: Matrix, span: &mut EchelonBuilder, basis: &mut Vec<Matrix>| {
        if span.insert(m.as_slice()) {
            basis.push(m);
        }
    };
    push(Matrix::identity(domain, n), &mut span, &mut basis);
    let mut frontier = 0;
    while frontier < basis.len() {
        let t = basis[frontier].clone();
        frontier += 1;
        for g in &gens {
            if span.is_full() {
                return basis;
            }
            push(g.mul(&t), &mut span, &mut basis);
        }
    }
    basis
}

/// Indices of the projective representatives: nonzero vectors whose highest
/// nonzero coordinate is 1. These contain the first element of every line.
fn is_normalized(ring: &Ring, index: u64) -> bool {
    let p = u64::from(ring.domain().characteristic());
    let mut k = index;
    let mut top = 0;
    while k > 0 {
        top = k % p;
        k /= p;
    }
    top == 1
}

/// Decides primeness twice: through principal ideals (the definition, since
/// every nonzero ideal contains a nonzero principal one) and through the
/// element criterion. Both scan the projective representatives of the ring
/// in enumeration order.
pub fn check_primeness(ring: &Ring, budget: u64) -> Result<PrimenessReport> {
    if !ring.domain().is_finite() {
        return Err(AlgebraError::UnsupportedDomain("primeness scans need a finite domain".into()));
    }
    let count = ring.enumerable(budget)?;
    let n = ring.dim();
    let domain = ring.domain();
    let basis: Vec<Vector> = (0..n).map(|k| ring.basis_coords(k)).collect();

    // element criterion: b ↦ ((a b_k) b)_k injective
    let criterion_kernel = |a: &Vector| -> Option<Subspace> {
        let mut rows = EchelonBuilder::new(domain, n);
        let mut all_rows = Vec::with_capacity(n * n);
        for bk in &basis {
            let v = ring.mul_coords(a, bk);
            let cols: Vec<Vector> = basis.iter().map(|bl| ring.mul_coords(&v, bl)).collect();
            for m in 0..n {
                let row: Vector = cols.iter().map(|c| c[m].clone()).collect();
                rows.insert(&row);
                all_rows.push(row);
            }
            if rows.is_full() {
                return None;
            }
        }
        Some(Matrix::from_rows(domain, n, &all_rows).expect("rows of length n").kernel())
    };
    let failing = (1..count)
        .into_par_iter()
        .filter(|&k| is_normalized(ring, k))
        .find_first(|&k| criterion_kernel(&ring.coords_at(k)).is_some());
    let witness = failing.map(|k| {
        let a = ring.coords_at(k);
        let b = criterion_kernel(&a).and_then(|s| s.first_nonzero()).expect("nontrivial kernel");
        vec![a, b]
    });

    // principal ideals
    let mult = multiplication_algebra(ring);
    let ideal = |a: &Vector| -> Subspace {
        let mut span = EchelonBuilder::new(domain, n);
        for t in &mult {
            span.insert(&t.mul_vec(a));
            if span.is_full() {
                break;
            }
        }
        span.into_subspace()
    };
    let reps: Vec<u64> = (1..count).filter(|&k| is_normalized(ring, k)).collect();
    let mut seen = HashSet::new();
    let mut ideals: Vec<(Subspace, Vector)> = Vec::new();
    for chunk in reps.chunks(4096) {
        let found: Vec<(u64, Subspace)> = chunk.par_iter().map(|&k| (k, ideal(&ring.coords_at(k)))).collect();
        for (k, s) in found {
            if seen.insert(s.clone()) {
                ideals.push((s, ring.coords_at(k)));
            }
        }
    }
    let annihilate = |a: &Subspace, b: &Subspace| {
        a.basis()
            .iter()
            .all(|x| b.basis().iter().all(|y| linalg::is_zero_vector(&ring.mul_coords(x, y))))
    };
    let mut ideal_witness = None;
    'pairs: for (a, ga) in &ideals {
        for (b, gb) in &ideals {
            if annihilate(a, b) {
                ideal_witness = Some(vec![ga.clone(), gb.clone()]);
                break 'pairs;
            }
        }
    }

    let prime = ideal_witness.is_none();
    let element_criterion = witness.is_none();
    Ok(PrimenessReport {
        prime,
        element_criterion,
        criterion_equiv: prime == element_criterion,
        witness,
        ideal_witness,
        principal_ideals: ideals.len(),
        quantifier_space: QuantifierSpace {
            total: count,
            checked: reps.len() as u64,
            exhaustive: true,
            seed: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    #[test]
    fn matrix_ring_is_prime() {
        let m2 = generators::m2(F5).unwrap();
        let r = check_primeness(&m2, 1_000_000).unwrap();
        assert!(r.prime && r.element_criterion && r.criterion_equiv);
        assert_eq!(r.principal_ideals, 1);
        assert_eq!(r.quantifier_space.checked, (625 - 1) / 4);
    }

    #[test]
    fn direct_sum_is_not_prime() {
        let m2 = generators::m2(F5).unwrap();
        let s = generators::direct_sum(&m2, &m2).unwrap();
        let r = check_primeness(&s, 1_000_000).unwrap();
        assert!(!r.prime && !r.element_criterion && r.criterion_equiv);
        assert_eq!(r.principal_ideals, 3);
        let w = r.witness.unwrap();
        for k in 0..s.dim() {
            let ar = s.mul_coords(&w[0], &s.basis_coords(k));
            assert!(linalg::is_zero_vector(&s.mul_coords(&ar, &w[1])));
        }
        // one witness in each block
        assert!(w[0][4..].iter().all(|c| c.is_zero()));
        assert!(w[1][..4].iter().all(|c| c.is_zero()));
    }

    #[test]
    fn zorn_is_prime() {
        let z = generators::zorn(F5).unwrap();
        let r = check_primeness(&z, 1_000_000).unwrap();
        assert!(r.prime && r.element_criterion && r.criterion_equiv);
        assert_eq!(r.principal_ideals, 1);
    }

    #[test]
    fn triangular_ring_is_not_prime() {
        // E12 R E12 = 0
        let t = generators::triangular2(F5).unwrap();
        let r = check_primeness(&t, 1_000_000).unwrap();
        assert!(!r.prime && !r.element_criterion);
    }

    #[test]
    fn multiplication_algebra_of_matrix_ring_is_full() {
        let m2 = generators::m2(F5).unwrap();
        assert_eq!(multiplication_algebra(&m2).len(), 16);
        let s = generators::direct_sum(&m2, &m2).unwrap();
        assert_eq!(multiplication_algebra(&s).len(), 32);
    }

    #[test]
    fn budget_is_enforced() {
        let m2 = generators::m2(F5).unwrap();
        assert!(matches!(check_primeness(&m2, 10), Err(AlgebraError::BudgetExceeded { .. })));
    }
}
