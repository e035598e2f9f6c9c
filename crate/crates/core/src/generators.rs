//! Structure-constant generators for the bundled example rings.

use crate::error::{AlgebraError, Result};
use crate::identities;
use crate::linalg::{self, Vector};
use crate::ring::Ring;
use crate::scalar::{Scalar, ScalarDomain};

fn domain_tag(domain: ScalarDomain) -> String {
    match domain {
        ScalarDomain::Rationals => "q".into(),
        ScalarDomain::PrimeField(p) => format!("f{p}"),
    }
}

/// Structure constants of the bilinear extension of `product` on basis vectors.
fn constants_from(n: usize, domain: ScalarDomain, product: impl Fn(&[Scalar], &[Scalar]) -> Vector) -> Vec<Vec<Vector>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    product(
                        &linalg::unit_vector(domain, n, i),
                        &linalg::unit_vector(domain, n, j),
                    )
                })
                .collect()
        })
        .collect()
}

fn ints(domain: ScalarDomain, xs: &[i64]) -> Vector {
    xs.iter().map(|&x| domain.from_i64(x)).collect()
}

/// Full 2×2 matrix ring with matrix-unit basis `E11, E12, E21, E22`.
pub fn m2(domain: ScalarDomain) -> Result<Ring> {
    let names = ["E11", "E12", "E21", "E22"].map(String::from).to_vec();
    // E_ab · E_cd = δ_bc E_ad; index of E_ab is 2a + b (0-based)
    let constants = constants_from(4, domain, |x, y| {
        let mut out = linalg::zero_vector(domain, 4);
        for i in 0..4 {
            for j in 0..4 {
                let s = &x[i] * &y[j];
                if s.is_zero() {
                    continue;
                }
                let (a, b) = (i / 2, i % 2);
                let (c, d) = (j / 2, j % 2);
                if b == c {
                    out[2 * a + d] += &s;
                }
            }
        }
        out
    });
    Ring::new(format!("m2_{}", domain_tag(domain)), domain, names, constants, ints(domain, &[1, 0, 0, 1]))
}

/// Upper triangular 2×2 matrices, basis `E11, E12, E22`.
pub fn triangular2(domain: ScalarDomain) -> Result<Ring> {
    let names = ["E11", "E12", "E22"].map(String::from).to_vec();
    let pos = [(0usize, 0usize), (0, 1), (1, 1)];
    let constants = constants_from(3, domain, |x, y| {
        let mut out = linalg::zero_vector(domain, 3);
        for i in 0..3 {
            for j in 0..3 {
                let s = &x[i] * &y[j];
                if s.is_zero() {
                    continue;
                }
                let (a, b) = pos[i];
                let (c, d) = pos[j];
                if b == c {
                    let k = pos.iter().position(|&q| q == (a, d)).expect("upper triangular");
                    out[k] += &s;
                }
            }
        }
        out
    });
    Ring::new(format!("triangular2_{}", domain_tag(domain)), domain, names, constants, ints(domain, &[1, 0, 1]))
}

fn cross(u: &[Scalar], w: &[Scalar]) -> Vector {
    vec![
        &(&u[1] * &w[2]) - &(&u[2] * &w[1]),
        &(&u[2] * &w[0]) - &(&u[0] * &w[2]),
        &(&u[0] * &w[1]) - &(&u[1] * &w[0]),
    ]
}

fn dot(u: &[Scalar], w: &[Scalar]) -> Scalar {
    let mut acc = &u[0] * &w[0];
    acc += &(&u[1] * &w[1]);
    acc += &(&u[2] * &w[2]);
    acc
}

/// Vector-matrix product of `[[a, u], [v, b]]` elements stored as
/// `(a, u1, u2, u3, v1, v2, v3, b)`:
///
/// ```text
/// (a,u,v,b)(a',u',v',b') = (aa' + u·v',  a u' + b' u + s_v v×v',
///                            a' v + b v' + s_u u×u',  bb' + v·u')
/// ```
fn zorn_product(x: &[Scalar], y: &[Scalar], s_v: &Scalar, s_u: &Scalar) -> Vector {
    let (a, u, v, b) = (&x[0], &x[1..4], &x[4..7], &x[7]);
    let (a2, u2, v2, b2) = (&y[0], &y[1..4], &y[4..7], &y[7]);
    let mut out = Vec::with_capacity(8);
    out.push(&(a * a2) + &dot(u, v2));
    let vv = cross(v, v2);
    for k in 0..3 {
        let mut t = a * &u2[k];
        t += &(b2 * &u[k]);
        t += &(s_v * &vv[k]);
        out.push(t);
    }
    let uu = cross(u, u2);
    for k in 0..3 {
        let mut t = a2 * &v[k];
        t += &(b * &v2[k]);
        t += &(s_u * &uu[k]);
        out.push(t);
    }
    out.push(&(b * b2) + &dot(v, u2));
    out
}

/// Zorn's vector-matrix algebra (split octonions), basis
/// `e1, u1, u2, u3, v1, v2, v3, e2` with distinguished idempotent `e1`.
///
/// The signs on the two cross-product terms are taken from the first
/// candidate that passes the alternativity check.
pub fn zorn(domain: ScalarDomain) -> Result<Ring> {
    let names = ["e1", "u1", "u2", "u3", "v1", "v2", "v3", "e2"].map(String::from).to_vec();
    let unit = ints(domain, &[1, 0, 0, 0, 0, 0, 0, 1]);
    for (sv, su) in [(-1i64, 1i64), (1, -1), (1, 1), (-1, -1)] {
        let (s_v, s_u) = (domain.from_i64(sv), domain.from_i64(su));
        let constants = constants_from(8, domain, |x, y| zorn_product(x, y, &s_v, &s_u));
        let ring = Ring::new(format!("zorn_{}", domain_tag(domain)), domain, names.clone(), constants, unit.clone())?;
        if identities::is_alternative(&ring).holds {
            let sign = |s: i64| if s < 0 { "-" } else { "+" };
            let note = format!(
                "Zorn vector-matrix algebra: (a,u,v,b)(a',u',v',b') = (aa'+u·v', au'+b'u {} v×v', a'v+bv' {} u×u', bb'+v·u'); sign convention validated by the alternativity check",
                sign(sv),
                sign(su)
            );
            return Ok(ring.with_note(note));
        }
    }
    Err(AlgebraError::Other(format!("no Zorn sign convention is alternative over {domain}")))
}

/// Direct sum `a ⊕ b`; basis names are prefixed with `1.` and `2.`.
pub fn direct_sum(a: &Ring, b: &Ring) -> Result<Ring> {
    if a.domain() != b.domain() {
        return Err(AlgebraError::Other("direct sum needs a common scalar domain".into()));
    }
    let domain = a.domain();
    let (na, nb) = (a.dim(), b.dim());
    let n = na + nb;
    let mut names: Vec<String> = a.basis_names().iter().map(|s| format!("1.{s}")).collect();
    names.extend(b.basis_names().iter().map(|s| format!("2.{s}")));
    let mut constants = vec![vec![linalg::zero_vector(domain, n); n]; n];
    for i in 0..na {
        for j in 0..na {
            constants[i][j][..na].clone_from_slice(a.structure_constant(i, j));
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            constants[na + i][na + j][na..].clone_from_slice(b.structure_constant(i, j));
        }
    }
    let mut unit = a.unit_coords().to_vec();
    unit.extend_from_slice(b.unit_coords());
    Ring::new(format!("{}+{}", a.name(), b.name()), domain, names, constants, unit)
}

/// `M2` with the single structure constant `E12·E12` changed from `0` to
/// `E12`. The unit survives, alternativity and flexibility do not.
pub fn perturbed_m2(domain: ScalarDomain) -> Result<Ring> {
    let base = m2(domain)?;
    let mut constants: Vec<Vec<Vector>> = (0..4)
        .map(|i| (0..4).map(|j| base.structure_constant(i, j).to_vec()).collect())
        .collect();
    constants[1][1] = linalg::unit_vector(domain, 4, 1);
    Ring::new(
        format!("perturbed_m2_{}", domain_tag(domain)),
        domain,
        base.basis_names().to_vec(),
        constants,
        base.unit_coords().to_vec(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        let f5 = ScalarDomain::PrimeField(5);
        assert_eq!(m2(f5).unwrap().dim(), 4);
        assert_eq!(zorn(f5).unwrap().dim(), 8);
        assert_eq!(triangular2(f5).unwrap().dim(), 3);
        let m = m2(f5).unwrap();
        assert_eq!(direct_sum(&m, &m).unwrap().dim(), 8);
    }

    #[test]
    fn zorn_over_rationals_and_f7() {
        for d in [ScalarDomain::Rationals, ScalarDomain::PrimeField(7)] {
            let z = zorn(d).unwrap();
            assert!(identities::is_alternative(&z).holds);
            assert!(!identities::is_associative(&z).holds);
            assert!(z.note().unwrap().contains("validated"));
        }
    }

    #[test]
    fn zorn_distinguished_idempotent() {
        let z = zorn(ScalarDomain::PrimeField(5)).unwrap();
        let e1 = z.basis_element(0);
        assert!(z.is_idempotent(&e1).unwrap());
        assert_ne!(e1, z.one());
    }

    #[test]
    fn direct_sum_domain_mismatch() {
        let a = m2(ScalarDomain::PrimeField(5)).unwrap();
        let b = m2(ScalarDomain::PrimeField(7)).unwrap();
        assert!(direct_sum(&a, &b).is_err());
    }
}
