//! Dense exact linear algebra over a [`Field`].
//!
//! Vectors are plain `Vec<Elem>`; matrices act on column vectors. Subspaces
//! are stored by their reduced row-echelon basis, so two subspaces are equal
//! exactly when their representations are.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{Elem, Field};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<u32> = self.row(r).iter().map(|e| e.0).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field: field.clone(), rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = Elem::ONE;
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Matrix {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Builds a matrix from row-major entries; `data.len()` must be `rows * cols`.
    pub fn from_data(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        if let Some(bad) = data.iter().find(|&&e| !field.contains(e)) {
            return Err(Error::invalid(alloc::format!("entry {} outside {field}", bad.0)));
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Stacks equal-length row vectors. With no rows the column count is `cols`.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Elem>]) -> Result<Matrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Matrix::from_data(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn row_vectors(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            Err(Error::FieldMismatch)
        } else {
            Ok(())
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = f.mul_add(a, b, *d);
                }
            }
        }
        Ok(out)
    }

    /// `self * v` for a column vector `v`.
    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Elem::ZERO, |acc, (&a, &b)| f.mul_add(a, b, acc)))
            .collect())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |f, a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |f, a, b| f.sub(a, b))
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Field, Elem, Elem) -> Elem) -> Result<Matrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch { expected: self.rows * self.cols, found: other.rows * other.cols });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| op(&self.field, a, b)).collect();
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: Elem) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul(c, a)).collect();
        Matrix { field: self.field.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// Reduced row-echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            for k in c..cols {
                let v = self.get(r, k);
                self.set(r, k, f.mul(inv, v));
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                let neg = f.neg(factor);
                for k in c..cols {
                    let v = f.mul_add(neg, self.data[r * cols + k], self.data[i * cols + k]);
                    self.data[i * cols + k] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Reduced row-echelon form and rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place().len();
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Right null space `{v : self * v = 0}`.
    pub fn kernel_basis(&self) -> Subspace {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let f = &self.field;
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Elem::ZERO; self.cols];
            v[free] = Elem::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(m.get(i, free));
            }
            vecs.push(v);
        }
        let ker = Subspace::from_vectors(f, self.cols, &vecs).expect("kernel vectors have ambient length");
        debug_assert_eq!(pivots.len() + ker.dim(), self.cols, "rank-nullity");
        ker
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(&self.field, self.cols, &self.row_vectors()).expect("rows have ambient length")
    }

    pub fn column_space(&self) -> Subspace {
        self.transpose().row_space()
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::from_fn(f, n, 2 * n, |r, c| {
            if c < n {
                self.get(r, c)
            } else if c - n == r {
                Elem::ONE
            } else {
                Elem::ZERO
            }
        });
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(f, n, n, |r, c| aug.get(r, n + c)))
    }

    pub fn determinant(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Elem::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(Elem::ZERO);
            };
            if pr != c {
                for k in 0..n {
                    m.data.swap(pr * n + k, c * n + k);
                }
                det = f.neg(det);
            }
            let piv = m.get(c, c);
            det = f.mul(det, piv);
            let inv = f.inv(piv).expect("nonzero pivot");
            for i in c + 1..n {
                let factor = f.mul(m.get(i, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = f.sub(m.get(i, k), f.mul(factor, m.get(c, k)));
                    m.set(i, k, v);
                }
            }
        }
        Ok(det)
    }

    /// Restriction of a linear map to `sub`, written in the coordinates of
    /// `sub`'s basis. Fails if `sub` is not invariant.
    pub fn restrict(&self, sub: &Subspace) -> Result<Matrix> {
        let d = sub.dim();
        let mut out = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            let img = self.apply(sub.basis().row(j))?;
            let coords = sub.coordinates(&img)?.ok_or_else(|| Error::invalid("subspace is not invariant"))?;
            for (i, c) in coords.into_iter().enumerate() {
                out.set(i, j, c);
            }
        }
        Ok(out)
    }
}

/// A subspace of `F^ambient`, stored as an RREF basis without zero rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        Subspace { ambient, basis: Matrix::identity(field, ambient), pivots: (0..ambient).collect() }
    }

    pub fn from_vectors(field: &Field, ambient: usize, vecs: &[Vec<Elem>]) -> Result<Subspace> {
        let mut m = Matrix::from_rows(field, ambient, vecs)?;
        let pivots = m.rref_in_place();
        let r = pivots.len();
        m.data.truncate(r * ambient);
        m.rows = r;
        Ok(Subspace { ambient, basis: m, pivots })
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> Vec<Vec<Elem>> {
        self.basis.row_vectors()
    }

    /// Canonical hashable encoding (dimension followed by RREF entries).
    pub fn key(&self) -> Vec<u32> {
        let mut k = Vec::with_capacity(1 + self.basis.data.len());
        k.push(self.dim() as u32);
        k.extend(self.basis.data.iter().map(|e| e.0));
        k
    }

    fn reduce(&self, v: &mut [Elem]) {
        let f = self.field();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = v[p];
            if c.is_zero() {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                *x = f.mul_add(neg, b, *x);
            }
        }
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Elem]) -> Result<Option<Vec<Elem>>> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        let mut r = v.to_vec();
        self.reduce(&mut r);
        if r.iter().any(|e| !e.is_zero()) {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p]).collect()))
    }

    pub fn contains(&self, v: &[Elem]) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for i in 0..other.dim() {
            if !self.contains(other.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let mut vecs = self.vectors();
        vecs.extend(other.vectors());
        Subspace::from_vectors(self.field(), self.ambient, &vecs)
    }

    /// Linear combination `sum coords[i] * basis[i]`.
    pub fn combine(&self, coords: &[Elem]) -> Vec<Elem> {
        let f = self.field();
        let mut v = vec![Elem::ZERO; self.ambient];
        for (i, &c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                *x = f.mul_add(c, b, *x);
            }
        }
        v
    }

    /// Image under a linear map `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let vecs = (0..self.dim()).map(|i| m.apply(self.basis.row(i))).collect::<Result<Vec<_>>>()?;
        Subspace::from_vectors(self.field(), m.rows(), &vecs)
    }

    pub fn is_invariant(&self, m: &Matrix) -> Result<bool> {
        for i in 0..self.dim() {
            if !self.contains(&m.apply(self.basis.row(i))?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Annihilator `{w : <w, v> = 0 for all v in self}`.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        self.basis.kernel_basis()
    }

    pub fn quotient_map(&self) -> QuotientMap {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let free = (0..self.ambient).filter(|&c| !is_pivot[c]).collect();
        QuotientMap { sub: self.clone(), free }
    }
}

/// Surjection `F^ambient -> F^(ambient - dim s)` with kernel exactly `s`:
/// reduce by the RREF basis, then read off the non-pivot coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    sub: Subspace,
    free: Vec<usize>,
}

impl QuotientMap {
    pub fn source_dim(&self) -> usize {
        self.sub.ambient
    }

    pub fn target_dim(&self) -> usize {
        self.free.len()
    }

    pub fn kernel(&self) -> &Subspace {
        &self.sub
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.sub.ambient {
            return Err(Error::DimensionMismatch { expected: self.sub.ambient, found: v.len() });
        }
        let mut r = v.to_vec();
        self.sub.reduce(&mut r);
        Ok(self.free.iter().map(|&c| r[c]).collect())
    }

    pub fn matrix(&self) -> Matrix {
        let f = self.sub.field().clone();
        let n = self.sub.ambient;
        let cols: Vec<Vec<Elem>> = (0..n)
            .map(|j| {
                let mut e = vec![Elem::ZERO; n];
                e[j] = Elem::ONE;
                self.apply(&e).expect("unit vector has ambient length")
            })
            .collect();
        Matrix::from_fn(&f, self.free.len(), n, |r, c| cols[c][r])
    }
}

/// Quotient by a spanned subspace of `F^ambient`.
pub fn quotient_coords(ambient: usize, s: &Subspace) -> Result<QuotientMap> {
    if s.ambient != ambient {
        return Err(Error::DimensionMismatch { expected: ambient, found: s.ambient });
    }
    Ok(s.quotient_map())
}

/// Incrementally maintained echelon basis, used for spinning.
#[derive(Clone, Debug)]
pub struct EchelonBuilder {
    field: Field,
    ambient: usize,
    rows: Vec<(usize, Vec<Elem>)>,
}

impl EchelonBuilder {
    pub fn new(field: &Field, ambient: usize) -> EchelonBuilder {
        EchelonBuilder { field: field.clone(), ambient, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    fn reduce(&self, v: &mut [Elem]) {
        let f = &self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if c.is_zero() {
                continue;
            }
            let neg = f.neg(c);
            for (x, &b) in v.iter_mut().zip(row) {
                *x = f.mul_add(neg, b, *x);
            }
        }
    }

    pub fn contains(&self, v: &[Elem]) -> bool {
        let mut r = v.to_vec();
        self.reduce(&mut r);
        r.iter().all(|e| e.is_zero())
    }

    /// Adds `v`; returns `true` when it enlarged the span.
    pub fn insert(&mut self, v: &[Elem]) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        self.reduce(&mut r);
        let Some(p) = r.iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = self.field.inv(r[p]).expect("nonzero");
        for x in r.iter_mut() {
            *x = self.field.mul(inv, *x);
        }
        self.rows.push((p, r));
        true
    }

    pub fn into_subspace(self) -> Subspace {
        let vecs: Vec<Vec<Elem>> = self.rows.into_iter().map(|(_, r)| r).collect();
        Subspace::from_vectors(&self.field, self.ambient, &vecs).expect("rows have ambient length")
    }
}

/// Smallest subspace containing `seeds` and closed under every matrix in `gens`.
pub fn spin(field: &Field, ambient: usize, seeds: &[Vec<Elem>], gens: &[Matrix]) -> Result<Subspace> {
    let mut eb = EchelonBuilder::new(field, ambient);
    let mut queue: Vec<Vec<Elem>> = Vec::new();
    for s in seeds {
        if s.len() != ambient {
            return Err(Error::DimensionMismatch { expected: ambient, found: s.len() });
        }
        if eb.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        if eb.is_full() {
            break;
        }
        for g in gens {
            let w = g.apply(&v)?;
            if eb.insert(&w) {
                queue.push(w);
            }
        }
    }
    Ok(eb.into_subspace())
}

/// Iterates all vectors of `F^dim` in counter order (coordinate 0 fastest).
pub fn all_vectors(field: &Field, dim: usize) -> impl Iterator<Item = Vec<Elem>> {
    let q = field.order() as u64;
    let total = (q as u128).pow(dim as u32);
    (0..total).map(move |mut idx| {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push(Elem((idx % q as u128) as u32));
            idx /= q as u128;
        }
        v
    })
}

/// Nonzero vectors whose first nonzero coordinate is `1` (one per line).
pub fn projective_points(field: &Field, dim: usize) -> impl Iterator<Item = Vec<Elem>> {
    all_vectors(field, dim).filter(|v| v.iter().find(|e| !e.is_zero()) == Some(&Elem::ONE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let rs: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&x| Elem(x)).collect()).collect();
        Matrix::from_rows(f, rs[0].len(), &rs).unwrap()
    }

    fn ev(xs: &[u32]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem(x)).collect()
    }

    #[test]
    fn rref_examples() {
        let f3 = Field::prime(3).unwrap();
        let id = Matrix::identity(&f3, 3);
        assert_eq!(id.rref(), (id.clone(), 3));
        let f2 = Field::prime(2).unwrap();
        let (r, rank) = m(&f2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r, m(&f2, &[&[1, 1], &[0, 0]]));
        assert_eq!(rank, 1);
        let a = m(&f3, &[&[1, 1, 1]]);
        assert_eq!(a.rref(), (a.clone(), 1));
    }

    #[test]
    fn kernel_examples() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(m(&f3, &[&[1, 1, 1]]).kernel_basis().dim(), 2);
        assert_eq!(Matrix::identity(&f3, 4).kernel_basis().dim(), 0);
    }

    #[test]
    fn membership_examples() {
        let f5 = Field::prime(5).unwrap();
        let s = Subspace::from_vectors(&f5, 3, &[ev(&[1, 0, 0]), ev(&[0, 1, 0])]).unwrap();
        assert_eq!(s.coordinates(&ev(&[0, 0, 0])).unwrap(), Some(ev(&[0, 0])));
        assert_eq!(s.coordinates(&ev(&[0, 1, 0])).unwrap(), Some(ev(&[0, 1])));
        assert_eq!(s.coordinates(&ev(&[0, 0, 1])).unwrap(), None);
        assert!(matches!(s.coordinates(&ev(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn quotient_examples() {
        let f2 = Field::prime(2).unwrap();
        let zero = Subspace::zero(&f2, 2);
        assert_eq!(quotient_coords(2, &zero).unwrap().matrix(), Matrix::identity(&f2, 2));
        let full = Subspace::full(&f2, 2);
        assert_eq!(quotient_coords(2, &full).unwrap().target_dim(), 0);
        let diag = Subspace::from_vectors(&f2, 2, &[ev(&[1, 1])]).unwrap();
        let q = quotient_coords(2, &diag).unwrap();
        assert_eq!(q.target_dim(), 1);
        assert_eq!(q.apply(&ev(&[1, 1])).unwrap(), ev(&[0]));
        assert_eq!(q.apply(&ev(&[1, 0])).unwrap(), ev(&[1]));
        assert_eq!(q.matrix().rank(), 1);
    }

    #[test]
    fn inverse_and_determinant() {
        let f5 = Field::prime(5).unwrap();
        let a = m(&f5, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(&f5, 2));
        assert_eq!(a.determinant().unwrap(), Elem(1));
        let s = m(&f5, &[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(Error::Singular));
        assert_eq!(s.determinant().unwrap(), Elem(0));
    }

    #[test]
    fn spin_closure() {
        let f3 = Field::prime(3).unwrap();
        let swap = m(&f3, &[&[0, 1], &[1, 0]]);
        let s = spin(&f3, 2, &[ev(&[1, 1])], std::slice::from_ref(&swap)).unwrap();
        assert_eq!(s.dim(), 1);
        let s = spin(&f3, 2, &[ev(&[1, 0])], &[swap]).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(spin(&f3, 2, &[ev(&[0, 0])], &[]).unwrap().dim(), 0);
    }
}
