//! Finite-dimensional unital rings given by structure constants.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::linalg::{self, Matrix, Vector};
use crate::scalar::{Scalar, ScalarDomain};

/// Opaque ring identifier derived from the ring's content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingId(u64);

/// A coordinate vector tied to a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    ring: RingId,
    coords: Vector,
}

impl Element {
    pub(crate) fn from_parts(ring: RingId, coords: Vector) -> Self {
        Element { ring, coords }
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vector {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vector(&self.coords)
    }
}

/// A unital ring: `basis_i · basis_j = sum_k c[i][j][k] basis_k`.
#[derive(Clone, Debug)]
pub struct Ring {
    id: RingId,
    name: String,
    domain: ScalarDomain,
    basis_names: Vec<String>,
    constants: Vec<Vec<Vector>>,
    // nonzero (k, c[i][j][k]) per (i, j)
    sparse: Vec<Vec<Vec<(usize, Scalar)>>>,
    unit: Vector,
    note: Option<String>,
}

impl Ring {
    /// Builds a ring and verifies the unit axiom on every basis element.
    pub fn new(
        name: impl Into<String>,
        domain: ScalarDomain,
        basis_names: Vec<String>,
        constants: Vec<Vec<Vector>>,
        unit: Vector,
    ) -> Result<Self> {
        let name = name.into();
        let n = basis_names.len();
        if n == 0 {
            return Err(AlgebraError::Parse("ring dimension must be positive".into()));
        }
        if constants.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: constants.len() });
        }
        for row in &constants {
            if row.len() != n {
                return Err(AlgebraError::DimensionMismatch { expected: n, got: row.len() });
            }
            for v in row {
                if v.len() != n {
                    return Err(AlgebraError::DimensionMismatch { expected: n, got: v.len() });
                }
                if v.iter().any(|s| s.domain() != domain) {
                    return Err(AlgebraError::Parse("structure constant outside the ring's domain".into()));
                }
            }
        }
        if unit.len() != n {
            return Err(AlgebraError::DimensionMismatch { expected: n, got: unit.len() });
        }
        if unit.iter().any(|s| s.domain() != domain) {
            return Err(AlgebraError::Parse("unit coordinate outside the ring's domain".into()));
        }
        let sparse = constants
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .enumerate()
                            .filter(|(_, c)| !c.is_zero())
                            .map(|(k, c)| (k, c.clone()))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let mut hasher = DefaultHasher::new();
        name.hash(&mut hasher);
        domain.hash(&mut hasher);
        constants.hash(&mut hasher);
        unit.hash(&mut hasher);
        let ring = Ring {
            id: RingId(hasher.finish()),
            name,
            domain,
            basis_names,
            constants,
            sparse,
            unit,
            note: None,
        };
        ring.check_unit()?;
        Ok(ring)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn check_unit(&self) -> Result<()> {
        for i in 0..self.dim() {
            let b = linalg::unit_vector(self.domain, self.dim(), i);
            if self.mul_coords(&self.unit, &b) != b {
                return Err(AlgebraError::UnitAxiom(format!(
                    "unit·{0} != {0}",
                    self.basis_names[i]
                )));
            }
            if self.mul_coords(&b, &self.unit) != b {
                return Err(AlgebraError::UnitAxiom(format!(
                    "{0}·unit != {0}",
                    self.basis_names[i]
                )));
            }
        }
        Ok(())
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// `c[i][j]` as a coordinate vector.
    pub fn structure_constant(&self, i: usize, j: usize) -> &[Scalar] {
        &self.constants[i][j]
    }

    pub fn unit_coords(&self) -> &[Scalar] {
        &self.unit
    }

    // ---- raw coordinate arithmetic -------------------------------------

    pub fn mul_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        let mut out = linalg::zero_vector(self.domain, self.dim());
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let s = x * y;
                for (k, c) in &self.sparse[i][j] {
                    out[*k] += &(&s * c);
                }
            }
        }
        out
    }

    pub fn commutator_coords(&self, a: &[Scalar], b: &[Scalar]) -> Vector {
        linalg::sub_vectors(&self.mul_coords(a, b), &self.mul_coords(b, a))
    }

    pub fn associator_coords(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let left = self.mul_coords(&self.mul_coords(x, y), z);
        let right = self.mul_coords(x, &self.mul_coords(y, z));
        linalg::sub_vectors(&left, &right)
    }

    pub fn basis_coords(&self, i: usize) -> Vector {
        linalg::unit_vector(self.domain, self.dim(), i)
    }

    pub fn zero_coords(&self) -> Vector {
        linalg::zero_vector(self.domain, self.dim())
    }

    pub fn is_idempotent_coords(&self, a: &[Scalar]) -> bool {
        self.mul_coords(a, a) == a
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|k| self.mul_coords(a, &self.basis_coords(k))).collect();
        Matrix::from_columns(self.domain, self.dim(), &cols).expect("square")
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_mul_matrix(&self, a: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim()).map(|k| self.mul_coords(&self.basis_coords(k), a)).collect();
        Matrix::from_columns(self.domain, self.dim(), &cols).expect("square")
    }

    // ---- typed elements --------------------------------------------------

    pub fn element(&self, coords: Vector) -> Result<Element> {
        if coords.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch { expected: self.dim(), got: coords.len() });
        }
        if coords.iter().any(|s| s.domain() != self.domain) {
            return Err(AlgebraError::Parse("coordinate outside the ring's domain".into()));
        }
        Ok(Element { ring: self.id, coords })
    }

    /// Element from small integer coordinates (reduced into the domain).
    pub fn element_from_ints(&self, coords: &[i64]) -> Result<Element> {
        self.element(coords.iter().map(|&c| self.domain.from_i64(c)).collect())
    }

    pub fn zero(&self) -> Element {
        Element { ring: self.id, coords: self.zero_coords() }
    }

    pub fn one(&self) -> Element {
        Element { ring: self.id, coords: self.unit.clone() }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element { ring: self.id, coords: self.basis_coords(i) }
    }

    pub(crate) fn check(&self, a: &Element) -> Result<()> {
        if a.ring == self.id {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    pub(crate) fn wrap(&self, coords: Vector) -> Element {
        Element { ring: self.id, coords }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(linalg::add_vectors(&a.coords, &b.coords)))
    }

    pub fn sub(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(linalg::sub_vectors(&a.coords, &b.coords)))
    }

    pub fn neg(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        Ok(self.wrap(linalg::neg_vector(&a.coords)))
    }

    pub fn scale(&self, s: &Scalar, a: &Element) -> Result<Element> {
        self.check(a)?;
        if s.domain() != self.domain {
            return Err(AlgebraError::Parse("scalar outside the ring's domain".into()));
        }
        Ok(self.wrap(linalg::scale_vector(s, &a.coords)))
    }

    /// Bilinear product; associativity is not assumed.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.mul_coords(&a.coords, &b.coords)))
    }

    /// `[a, b] = ab - ba`
    pub fn commutator(&self, a: &Element, b: &Element) -> Result<Element> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.wrap(self.commutator_coords(&a.coords, &b.coords)))
    }

    /// `(x, y, z) = (xy)z - x(yz)`
    pub fn associator(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        Ok(self.wrap(self.associator_coords(&x.coords, &y.coords, &z.coords)))
    }

    pub fn is_idempotent(&self, a: &Element) -> Result<bool> {
        self.check(a)?;
        Ok(self.is_idempotent_coords(&a.coords))
    }

    // ---- enumeration over finite domains ---------------------------------

    /// `p^dim`, or `None` over the rationals (or on overflow).
    pub fn element_count(&self) -> Option<u64> {
        self.domain.order()?.checked_pow(self.dim() as u32)
    }

    /// Canonical index of a coordinate vector: the base-`p` number whose
    /// digit `k` is coordinate `k` (coordinate 0 least significant).
    pub fn index_of(&self, coords: &[Scalar]) -> u64 {
        let p = u64::from(self.domain.characteristic());
        coords
            .iter()
            .rev()
            .fold(0u64, |acc, s| acc * p + u64::from(s.residue().expect("finite domain")))
    }

    /// Inverse of [`Ring::index_of`].
    pub fn coords_at(&self, mut index: u64) -> Vector {
        let p = u64::from(self.domain.characteristic());
        (0..self.dim())
            .map(|_| {
                let d = index % p;
                index /= p;
                self.domain.from_u64(d)
            })
            .collect()
    }

    pub fn element_at(&self, index: u64) -> Element {
        self.wrap(self.coords_at(index))
    }

    /// Element count, or an error when the domain is infinite or the count
    /// exceeds `budget`.
    pub fn enumerable(&self, budget: u64) -> Result<u64> {
        let count = self.element_count().ok_or_else(|| {
            AlgebraError::UnsupportedDomain(format!("{} has infinitely many elements", self.name))
        })?;
        if count > budget {
            return Err(AlgebraError::BudgetExceeded { needed: count, budget });
        }
        Ok(count)
    }

    pub fn format_coords(&self, coords: &[Scalar]) -> String {
        let terms: Vec<String> = coords
            .iter()
            .zip(&self.basis_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, name)| if c.is_one() { name.clone() } else { format!("{c}·{name}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (dim {} over {})", self.name, self.dim(), self.domain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn m2() -> Ring {
        generators::m2(ScalarDomain::PrimeField(5)).unwrap()
    }

    #[test]
    fn add_examples() {
        let r = m2();
        let a = r.element_from_ints(&[1, 2, 3, 4]).unwrap();
        assert_eq!(r.add(&a, &r.zero()).unwrap(), a);
        let e1 = r.basis_element(0);
        let e2 = r.basis_element(3);
        assert_eq!(r.add(&e1, &e2).unwrap(), r.one());
        let b = r.basis_element(2);
        assert_eq!(r.add(&b, &b).unwrap(), r.element_from_ints(&[0, 0, 2, 0]).unwrap());
    }

    #[test]
    fn mul_examples() {
        let r = m2();
        let x = r.element_from_ints(&[3, 1, 4, 1]).unwrap();
        assert_eq!(r.mul(&r.one(), &x).unwrap(), x);
        let e12 = r.basis_element(1);
        let e21 = r.basis_element(2);
        assert!(r.mul(&e12, &e12).unwrap().is_zero());
        assert_eq!(r.mul(&e12, &e21).unwrap(), r.basis_element(0));
    }

    #[test]
    fn commutator_examples() {
        let r = m2();
        let x = r.element_from_ints(&[3, 1, 4, 1]).unwrap();
        assert!(r.commutator(&x, &x).unwrap().is_zero());
        assert_eq!(r.commutator(&r.basis_element(0), &r.basis_element(1)).unwrap(), r.basis_element(1));
        assert!(r.commutator(&x, &r.one()).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = m2();
        let b = generators::triangular2(ScalarDomain::PrimeField(5)).unwrap();
        assert_eq!(a.add(&a.one(), &b.one()), Err(AlgebraError::RingMismatch));
        assert_eq!(a.mul(&b.one(), &a.one()), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn index_round_trip() {
        let r = m2();
        for idx in [0u64, 1, 4, 5, 124, 624] {
            assert_eq!(r.index_of(&r.coords_at(idx)), idx);
        }
        // coordinate 0 is the least significant digit
        assert_eq!(r.coords_at(1), r.basis_coords(0));
        assert_eq!(r.coords_at(5), r.basis_coords(1));
    }

    #[test]
    fn bad_unit_rejected() {
        let r = m2();
        let constants = (0..4)
            .map(|i| (0..4).map(|j| r.structure_constant(i, j).to_vec()).collect())
            .collect();
        let bad_unit = r.basis_coords(0);
        let err = Ring::new("bad", r.domain(), r.basis_names().to_vec(), constants, bad_unit).unwrap_err();
        assert!(matches!(err, AlgebraError::UnitAxiom(_)));
    }
}
