//! Dense exact linear algebra over a [`ScalarDomain`].
//!
//! Vectors are plain coordinate slices. Subspaces are kept in reduced row
//! echelon form with pivots in increasing column order, so two subspaces are
//! equal exactly when their bases are equal.

use crate::error::{AlgebraError, Result};
use crate::scalar::{Scalar, ScalarDomain};

pub type Vector = Vec<Scalar>;

pub fn zero_vector(domain: ScalarDomain, n: usize) -> Vector {
    vec![domain.zero(); n]
}

pub fn unit_vector(domain: ScalarDomain, n: usize, i: usize) -> Vector {
    let mut v = zero_vector(domain, n);
    v[i] = domain.one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(s: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| s * x).collect()
}

pub fn neg_vector(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// `acc += s * v`
pub fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += &(s * x);
        }
    }
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    domain: ScalarDomain,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(domain: ScalarDomain, rows: usize, cols: usize) -> Self {
        Matrix { domain, rows, cols, data: vec![domain.zero(); rows * cols] }
    }

    pub fn identity(domain: ScalarDomain, n: usize) -> Self {
        let mut m = Self::zeros(domain, n, n);
        for i in 0..n {
            m.set(i, i, domain.one());
        }
        m
    }

    pub fn from_rows(domain: ScalarDomain, cols: usize, rows: &[Vector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(AlgebraError::DimensionMismatch { expected: cols, got: r.len() });
            }
            data.extend(r.iter().cloned());
        }
        Ok(Matrix { domain, rows: rows.len(), cols, data })
    }

    /// Matrix whose `k`-th column is `columns[k]`.
    pub fn from_columns(domain: ScalarDomain, rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(domain, rows, columns.len());
        for (k, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(AlgebraError::DimensionMismatch { expected: rows, got: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, k, x.clone());
            }
        }
        Ok(m)
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        let mut out = zero_vector(self.domain, self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let a = self.get(r, c);
                if !a.is_zero() {
                    *o += &(a * x);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zeros(self.domain, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let idx = r * out.cols + c;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix { domain: self.domain, rows: self.rows, cols: self.cols, data }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Matrix { domain: self.domain, rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    /// Entries flattened row-major.
    pub fn as_slice(&self) -> &[Scalar] {
        &self.data
    }

    /// Reduced row echelon form, returning the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(sel) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, sel);
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let pv = self.get(row, c);
                    if pv.is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &(&factor * pv);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : self·x = 0}`, in the canonical echelon form of [`Subspace`].
    pub fn kernel(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let vectors: Vec<Vector> = free
            .iter()
            .map(|&f| {
                let mut v = zero_vector(self.domain, self.cols);
                v[f] = self.domain.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -m.get(r, f);
                }
                v
            })
            .collect();
        Subspace::span(self.domain, self.cols, &vectors)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        let cols: Vec<Vector> = (0..self.cols).map(|c| self.column(c)).collect();
        Subspace::span(self.domain, self.rows, &cols)
    }

    /// Solves `self·x = b`. Returns one solution together with the kernel, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<(Vector, Subspace)> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.domain, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = zero_vector(self.domain, self.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some((x, self.kernel()))
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.domain, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, self.domain.one());
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(self.domain, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

/// A subspace of `domain^ambient` stored as a reduced echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    domain: ScalarDomain,
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(domain: ScalarDomain, ambient: usize) -> Self {
        Subspace { domain, ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(domain: ScalarDomain, ambient: usize) -> Self {
        let basis = (0..ambient).map(|i| unit_vector(domain, ambient, i)).collect();
        Subspace { domain, ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(domain: ScalarDomain, ambient: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(domain, ambient);
        }
        let mut m = Matrix::from_rows(domain, ambient, vectors).expect("vectors of ambient length");
        let pivots = m.rref();
        let basis = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        Subspace { domain, ambient, basis, pivots }
    }

    pub fn domain(&self) -> ScalarDomain {
        self.domain
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_whole(&self) -> bool {
        self.basis.len() == self.ambient
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient);
        let coeffs: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                for (r, x) in rest.iter_mut().zip(b) {
                    if !x.is_zero() {
                        *r -= &(c * x);
                    }
                }
            }
        }
        is_zero_vector(&rest).then_some(coeffs)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let all: Vec<Vector> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::span(self.domain, self.ambient, &all)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.domain, self.ambient);
        }
        // Solve sum a_i u_i - sum b_j w_j = 0, read off sum a_i u_i.
        let mut cols: Vec<Vector> = self.basis.clone();
        cols.extend(other.basis.iter().map(|w| neg_vector(w)));
        let m = Matrix::from_columns(self.domain, self.ambient, &cols).expect("consistent lengths");
        let ker = m.kernel();
        let vectors: Vec<Vector> = ker
            .basis()
            .iter()
            .map(|k| self.combine(&k[..self.dim()]))
            .collect();
        Subspace::span(self.domain, self.ambient, &vectors)
    }

    /// `sum c_i basis_i`
    pub fn combine(&self, coeffs: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.domain, self.ambient);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            axpy(&mut out, c, b);
        }
        out
    }

    /// Number of vectors in the subspace over a finite field.
    pub fn cardinality(&self) -> Option<u64> {
        let p = self.domain.order()?;
        p.checked_pow(self.dim() as u32)
    }

    /// Iterates the subspace's vectors over a finite field, ordered by the
    /// basis coefficients read as a base-`p` number with the first coefficient
    /// least significant.
    pub fn elements(&self) -> Option<impl Iterator<Item = Vector> + '_> {
        let p = self.domain.order()?;
        let count = self.cardinality()?;
        Some((0..count).map(move |mut idx| {
            let coeffs: Vector = (0..self.dim())
                .map(|_| {
                    let d = idx % p;
                    idx /= p;
                    self.domain.from_u64(d)
                })
                .collect();
            self.combine(&coeffs)
        }))
    }
}

impl serde::Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

impl Subspace {
    /// The nonzero vector with the smallest enumeration index (coordinate 0
    /// least significant), i.e. the one whose highest nonzero coordinate is
    /// as low as possible, scaled to a leading one there. Over the rationals
    /// this is still a canonical choice.
    pub fn first_nonzero(&self) -> Option<Vector> {
        if self.is_zero() {
            return None;
        }
        let reversed: Vec<Vector> = self.basis.iter().map(|b| b.iter().rev().cloned().collect()).collect();
        let echelon = Subspace::span(self.domain, self.ambient, &reversed);
        let last = echelon.basis.last()?;
        Some(last.iter().rev().cloned().collect())
    }
}

/// Incremental row echelon basis, for rank tests that can stop early.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    domain: ScalarDomain,
    ambient: usize,
    // rows normalized to a leading one at `pivots[r]`
    rows: Vec<Vector>,
    pivots: Vec<usize>,
}

impl EchelonBuilder {
    pub fn new(domain: ScalarDomain, ambient: usize) -> Self {
        EchelonBuilder { domain, ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    /// Adds `v`; returns `true` if it was independent of the rows so far.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let f = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &(&f * r);
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        let v: Vector = v.iter().map(|x| x * &inv).collect();
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace::span(self.domain, self.ambient, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> ScalarDomain {
        ScalarDomain::PrimeField(5)
    }

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| f5().from_i64(x)).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = Matrix::from_rows(f5(), 3, &[v(&[1, 2, 3]), v(&[2, 4, 6]), v(&[0, 1, 1])]).unwrap();
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(is_zero_vector(&m.mul_vec(&k.basis()[0])));
    }

    #[test]
    fn canonical_form_is_unique() {
        let a = Subspace::span(f5(), 3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(f5(), 3, &[v(&[1, 2, 1]), v(&[1, 0, 4])]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(f5(), 3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(f5(), 3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        let i = a.intersection(&b);
        assert_eq!(i, Subspace::span(f5(), 3, &[v(&[0, 1, 0])]));
        assert_eq!(a.sum(&b).dim(), 3);
    }

    #[test]
    fn solve_and_inverse() {
        let m = Matrix::from_rows(f5(), 2, &[v(&[2, 1]), v(&[1, 1])]).unwrap();
        let (x, ker) = m.solve(&v(&[1, 0])).unwrap();
        assert!(ker.is_zero());
        assert_eq!(m.mul_vec(&x), v(&[1, 0]));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f5(), 2));
        let singular = Matrix::from_rows(f5(), 2, &[v(&[1, 2]), v(&[2, 4])]).unwrap();
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&v(&[1, 0])).is_none());
    }

    #[test]
    fn subspace_enumeration_counts() {
        let s = Subspace::span(f5(), 3, &[v(&[1, 0, 2]), v(&[0, 1, 1])]);
        let all: Vec<Vector> = s.elements().unwrap().collect();
        assert_eq!(all.len(), 25);
        assert!(all.iter().all(|x| s.contains(x)));
        assert!(is_zero_vector(&all[0]));
        assert_eq!(all[1], s.basis()[0]);
    }

    #[test]
    fn first_nonzero_is_minimal_in_enumeration_order() {
        let s = Subspace::span(f5(), 3, &[v(&[1, 2, 3]), v(&[0, 1, 1])]);
        let index = |x: &Vector| x.iter().rev().fold(0u64, |a, c| a * 5 + u64::from(c.residue().unwrap()));
        let min = s.elements().unwrap().filter(|x| !is_zero_vector(x)).min_by_key(index).unwrap();
        assert_eq!(s.first_nonzero().unwrap(), min);
        assert_eq!(Subspace::zero(f5(), 3).first_nonzero(), None);
    }

    #[test]
    fn echelon_builder_tracks_rank() {
        let mut b = EchelonBuilder::new(f5(), 3);
        assert!(b.insert(&v(&[1, 2, 0])));
        assert!(!b.insert(&v(&[2, 4, 0])));
        assert!(b.insert(&v(&[0, 1, 1])));
        assert!(!b.is_full());
        assert!(b.insert(&v(&[1, 0, 0])));
        assert!(b.is_full());
        assert_eq!(b.into_subspace(), Subspace::whole(f5(), 3));
    }

    #[test]
    fn rational_solve() {
        let q = ScalarDomain::Rationals;
        let r = |x: i64| q.from_i64(x);
        let m = Matrix::from_rows(q, 2, &[vec![r(2), r(1)], vec![r(1), r(3)]]).unwrap();
        let (x, _) = m.solve(&[r(1), r(0)]).unwrap();
        assert_eq!(x[0].to_string(), "3/5");
        assert_eq!(x[1].to_string(), "-1/5");
    }
}
