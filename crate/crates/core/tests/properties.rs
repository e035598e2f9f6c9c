use std::sync::Arc;

use altring_core::generators;
use altring_core::identities;
use altring_core::lie::{
    check_injective_and_homogeneous, conjugation, decompose, verify_decomposition, Branch, CentralTerm, MapTable,
};
use altring_core::linalg::{add_vectors, scale_vector, sub_vectors, zero_vector};
use altring_core::scalar::is_prime;
use altring_core::structure::{idempotents, peirce_frame, verify_peirce_relations, Cell, IdempotentKind};
use altring_core::{Matrix, Ring, ScalarDomain, ScanConfig, Vector};
use proptest::prelude::*;

const F5: ScalarDomain = ScalarDomain::PrimeField(5);

fn coords(domain: ScalarDomain, ints: &[i64]) -> Vector {
    ints.iter().map(|&k| domain.from_i64(k)).collect()
}

fn small(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..7, n)
}

fn zorn_q() -> Ring {
    generators::zorn(ScalarDomain::Rationals).unwrap()
}

fn det(u: &[i64]) -> i64 {
    u[0] * u[3] - u[1] * u[2]
}

/// x ↦ -(u x u⁻¹)ᵀ on M₂ as a matrix in the basis E11, E12, E21, E22.
fn neg_transposed_conjugation(r: &Arc<Ring>, u: &[i64]) -> Matrix {
    let c = conjugation(r.clone(), &coords(F5, u)).unwrap();
    let cols: Vec<Vector> = (0..4)
        .map(|k| {
            let y = c.eval(&r.basis_coords(k));
            vec![-y[0].clone(), -y[2].clone(), -y[1].clone(), -y[3].clone()]
        })
        .collect();
    Matrix::from_columns(F5, 4, &cols).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_bilinear_on_zorn_over_q(a in small(8), b in small(8), c in small(8), k in -9i64..10) {
        let r = zorn_q();
        let d = r.domain();
        let (a, b, c) = (coords(d, &a), coords(d, &b), coords(d, &c));
        let s = d.from_i64(k);
        prop_assert_eq!(r.mul_coords(&add_vectors(&a, &b), &c), add_vectors(&r.mul_coords(&a, &c), &r.mul_coords(&b, &c)));
        prop_assert_eq!(r.mul_coords(&c, &add_vectors(&a, &b)), add_vectors(&r.mul_coords(&c, &a), &r.mul_coords(&c, &b)));
        prop_assert_eq!(r.mul_coords(&scale_vector(&s, &a), &c), scale_vector(&s, &r.mul_coords(&a, &c)));
    }

    #[test]
    fn associator_and_commutator_definitions(x in small(8), y in small(8), z in small(8)) {
        let r = zorn_q();
        let d = r.domain();
        let (x, y, z) = (coords(d, &x), coords(d, &y), coords(d, &z));
        let expected = sub_vectors(&r.mul_coords(&r.mul_coords(&x, &y), &z), &r.mul_coords(&x, &r.mul_coords(&y, &z)));
        prop_assert_eq!(r.associator_coords(&x, &y, &z), expected);
        let sum = add_vectors(&r.commutator_coords(&x, &y), &r.commutator_coords(&y, &x));
        prop_assert_eq!(sum, zero_vector(d, 8));
        // alternative laws and flexibility hold elementwise
        prop_assert_eq!(r.associator_coords(&x, &x, &y), zero_vector(d, 8));
        prop_assert_eq!(r.associator_coords(&y, &x, &x), zero_vector(d, 8));
        prop_assert_eq!(r.associator_coords(&x, &y, &x), zero_vector(d, 8));
    }

    #[test]
    fn fermat_holds_in_prime_fields(p in 2u32..200, a in 0u64..1000) {
        prop_assume!(is_prime(p));
        let d = ScalarDomain::prime_field(p).unwrap();
        let s = d.from_u64(a);
        prop_assert_eq!(s.pow(p as u64), s);
    }

    #[test]
    fn peirce_projectors_split_every_element(which in 0usize..30, x in prop::collection::vec(0i64..5, 4)) {
        let r = generators::m2(F5).unwrap();
        let nontrivial: Vec<_> = idempotents(&r, 1_000).unwrap().into_iter().filter(|e| e.kind == IdempotentKind::Nontrivial).collect();
        prop_assert_eq!(nontrivial.len(), 30);
        let frame = peirce_frame(&r, &nontrivial[which].element).unwrap();
        let x = coords(F5, &x);
        let mut total = zero_vector(F5, 4);
        for cell in Cell::ALL {
            let part = frame.project_coords(cell, &x);
            prop_assert_eq!(frame.project_coords(cell, &part), part.clone());
            prop_assert!(frame.component(cell).contains(&part));
            total = add_vectors(&total, &part);
        }
        prop_assert_eq!(total, x);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn peirce_relations_hold_for_every_matrix_idempotent(which in 0usize..30) {
        let r = generators::m2(F5).unwrap();
        let nontrivial: Vec<_> = idempotents(&r, 1_000).unwrap().into_iter().filter(|e| e.kind == IdempotentKind::Nontrivial).collect();
        let frame = peirce_frame(&r, &nontrivial[which].element).unwrap();
        prop_assert_eq!(frame.dims(), [1, 1, 1, 1]);
        for rep in verify_peirce_relations(&r, &frame, 1_000).unwrap() {
            prop_assert!(rep.pass, "{}", rep.condition);
        }
    }

    #[test]
    fn conjugations_are_injective_and_homogeneous(u in prop::collection::vec(0i64..5, 4)) {
        prop_assume!(det(&u).rem_euclid(5) != 0);
        let r = Arc::new(generators::m2(F5).unwrap());
        let phi = conjugation(r.clone(), &coords(F5, &u)).unwrap();
        for rep in check_injective_and_homogeneous(&phi, &ScanConfig::default()).unwrap() {
            prop_assert!(rep.pass && rep.quantifier_space.exhaustive, "{}", rep.condition);
        }
    }

    /// Builds φ = ψ₀ + τ₀ with ψ₀ a negative anti-automorphism and τ₀ = tr·1,
    /// then checks that the double-dagger split recovers ψ₀ and τ₀ exactly.
    #[test]
    fn decomposition_recovers_a_planted_split(u in prop::collection::vec(0i64..5, 4)) {
        prop_assume!(det(&u).rem_euclid(5) != 0);
        let r = Arc::new(generators::m2(F5).unwrap());
        let psi0 = neg_transposed_conjugation(&r, &u);
        let trace = coords(F5, &[1, 0, 0, 1]);
        let term = CentralTerm { functional: trace.clone(), central: r.unit_coords().to_vec() };
        let phi = MapTable::structured(r.clone(), r.clone(), psi0.clone(), vec![term]).unwrap();
        let cfg = ScanConfig { budget: 20_000, seed: 11 };
        let d = decompose(&phi, &r.basis_element(0), Some(Branch::DoubleDagger), &cfg).unwrap();
        prop_assert!(d.all_pass());
        prop_assert_eq!(&d.psi, &psi0);
        for k in 0..625 {
            let x = r.coords_at(k);
            let tr = x[0].clone() + x[3].clone();
            prop_assert_eq!(d.tau_eval(&x), scale_vector(&tr, r.unit_coords()));
        }
        let (required, _) = verify_decomposition(&d, &cfg);
        prop_assert!(required.iter().all(|c| c.pass));
        // φ is itself an automorphism, so the dagger split is ψ = φ, τ = 0
        let d = decompose(&phi, &r.basis_element(0), Some(Branch::Dagger), &cfg).unwrap();
        prop_assert!(d.all_pass());
        for k in (0..625).step_by(7) {
            let x = r.coords_at(k);
            prop_assert_eq!(d.psi_eval(&x), phi.eval(&x));
            prop_assert_eq!(d.tau_eval(&x), zero_vector(F5, 4));
        }
    }
}

#[test]
fn generated_rings_pass_their_advertised_identities() {
    for d in [F5, ScalarDomain::Rationals] {
        let m2 = generators::m2(d).unwrap();
        assert!(identities::is_associative(&m2).holds);
        let z = generators::zorn(d).unwrap();
        assert!(identities::is_alternative(&z).holds);
        assert!(identities::is_flexible(&z).holds);
        assert!(!identities::is_associative(&z).holds);
        let t = generators::triangular2(d).unwrap();
        assert!(identities::is_associative(&t).holds);
    }
}
