use rayon::prelude::*;
use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Vector};
use crate::ring::{Element, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdempotentKind {
    Zero,
    /// The unit.
    Trivial,
    Nontrivial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Idempotent {
    pub element: Element,
    pub kind: IdempotentKind,
}

fn classify(ring: &Ring, coords: &[crate::Scalar]) -> IdempotentKind {
    if linalg::is_zero_vector(coords) {
        IdempotentKind::Zero
    } else if coords == ring.unit_coords() {
        IdempotentKind::Trivial
    } else {
        IdempotentKind::Nontrivial
    }
}

/// Every `e` with `e² = e`, in enumeration order. Needs a finite domain with
/// at most `budget` elements.
pub fn idempotents(ring: &Ring, budget: u64) -> Result<Vec<Idempotent>> {
    if !ring.domain().is_finite() {
        return Err(AlgebraError::UnsupportedDomain(
            "idempotent search over Q needs candidate elements".into(),
        ));
    }
    let count = ring.enumerable(budget)?;
    let found: Vec<Vector> = (0..count)
        .into_par_iter()
        .map(|k| ring.coords_at(k))
        .filter(|x| ring.is_idempotent_coords(x))
        .collect();
    Ok(found
        .into_iter()
        .map(|x| Idempotent { kind: classify(ring, &x), element: ring.wrap(x) })
        .collect())
}

/// The idempotents among `candidates`, in the given order. Works over any
/// domain.
pub fn idempotents_among(ring: &Ring, candidates: &[Element]) -> Result<Vec<Idempotent>> {
    let mut out = Vec::new();
    for c in candidates {
        if ring.is_idempotent(c)? {
            out.push(Idempotent { kind: classify(ring, c.coords()), element: c.clone() });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use crate::scalar::ScalarDomain;

    const F5: ScalarDomain = ScalarDomain::PrimeField(5);

    /// Rank-one idempotents of M₂(F_q) correspond to ordered pairs of
    /// complementary lines (image, kernel): (q+1) choices of image and q of
    /// kernel, plus 0 and 1.
    fn line_pair_count(q: u64) -> u64 {
        2 + q * (q + 1)
    }

    #[test]
    fn matrix_ring_census() {
        let m2 = generators::m2(F5).unwrap();
        let all = idempotents(&m2, 1_000_000).unwrap();
        assert_eq!(all.len() as u64, line_pair_count(5));
        assert_eq!(all.len(), 32);
        assert_eq!(all[0].kind, IdempotentKind::Zero);
        assert_eq!(all.iter().filter(|e| e.kind == IdempotentKind::Trivial).count(), 1);
        assert_eq!(all.iter().filter(|e| e.kind == IdempotentKind::Nontrivial).count(), 30);
    }

    #[test]
    fn small_field_census() {
        let m2 = generators::m2(ScalarDomain::PrimeField(3)).unwrap();
        assert_eq!(idempotents(&m2, 1_000).unwrap().len() as u64, line_pair_count(3));
    }

    #[test]
    fn budget_and_domain_errors() {
        let m2 = generators::m2(F5).unwrap();
        assert!(matches!(idempotents(&m2, 100), Err(AlgebraError::BudgetExceeded { needed: 625, budget: 100 })));
        let q = generators::m2(ScalarDomain::Rationals).unwrap();
        assert!(matches!(idempotents(&q, 100), Err(AlgebraError::UnsupportedDomain(_))));
    }

    #[test]
    fn candidates_over_rationals() {
        let q = generators::m2(ScalarDomain::Rationals).unwrap();
        let cands = vec![q.zero(), q.one(), q.basis_element(0), q.basis_element(1)];
        let found = idempotents_among(&q, &cands).unwrap();
        let kinds: Vec<_> = found.iter().map(|e| e.kind).collect();
        assert_eq!(kinds, vec![IdempotentKind::Zero, IdempotentKind::Trivial, IdempotentKind::Nontrivial]);
    }

    #[test]
    fn zorn_corner_is_idempotent() {
        let z = generators::zorn(F5).unwrap();
        let e1 = z.basis_element(0);
        assert!(z.is_idempotent(&e1).unwrap());
        let e2 = z.basis_element(7);
        assert!(z.is_idempotent(&e2).unwrap());
    }
}
