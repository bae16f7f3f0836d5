//! `GL_n(F_q)` and its standard subgroups.
//!
//! `B` is the upper triangular Borel subgroup, `U` its unipotent radical and
//! `T` the diagonal torus. Weyl elements are permutation matrices. Group
//! elements are matrices acting on column vectors, so `g` sends a subspace
//! `V` to `gV`.

mod census;
mod table;
mod torus;

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

pub use census::{evaluate_word, subgroup_census, word_set_discover, Census, CensusClass, Word, WordSet};
pub use table::{Fingerprint, FiniteGroup};
pub use torus::{
    construct_positive_oneparam, monoid_act, one_param_positive, positive_roots, reconstruct, root_factorize,
    root_order, simple_roots, Character, OneParamSubgroup, RootCoordinates,
};

use crate::building::Flag;
use crate::field::{Elem, Field};
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Default cap on enumerated group orders.
pub const DEFAULT_GROUP_CAP: u128 = 1_000_000;

/// Groups larger than this are never turned into a Cayley table.
pub const TABLE_CAP: usize = 4096;

/// An invertible `n x n` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlElement(Matrix);

impl GlElement {
    pub fn new(m: Matrix) -> Result<GlElement> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        if m.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(GlElement(m))
    }

    pub fn identity(field: &Field, n: usize) -> GlElement {
        GlElement(Matrix::identity(field, n))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn field(&self) -> &Field {
        self.0.field()
    }

    pub fn mul(&self, other: &GlElement) -> Result<GlElement> {
        Ok(GlElement(self.0.mul(&other.0)?))
    }

    pub fn inverse(&self) -> GlElement {
        GlElement(self.0.inverse().expect("GL elements are invertible"))
    }

    /// Row-major entry string with canonical element texts separated by spaces.
    pub fn to_text(&self) -> alloc::string::String {
        matrix_text(&self.0)
    }
}

pub fn matrix_text(m: &Matrix) -> alloc::string::String {
    let f = m.field();
    let parts: Vec<_> = m.data().iter().map(|&e| f.to_text(e)).collect();
    parts.join(" ")
}

/// Upper triangular with unit diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnipotentElement(Matrix);

impl UnipotentElement {
    pub fn new(m: Matrix) -> Result<UnipotentElement> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        for r in 0..m.rows() {
            for c in 0..=r {
                let want = if r == c { Elem::ONE } else { Elem::ZERO };
                if m.get(r, c) != want {
                    return Err(Error::invalid("not upper unitriangular"));
                }
            }
        }
        Ok(UnipotentElement(m))
    }

    pub fn identity(field: &Field, n: usize) -> UnipotentElement {
        UnipotentElement(Matrix::identity(field, n))
    }

    /// `E_{ij}(c)` with 0-based `i < j`.
    pub fn elementary(field: &Field, n: usize, i: usize, j: usize, c: Elem) -> Result<UnipotentElement> {
        if i >= j || j >= n {
            return Err(Error::invalid("elementary unipotent needs i < j < n"));
        }
        Ok(UnipotentElement(elementary(field, n, i, j, c)))
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn n(&self) -> usize {
        self.0.rows()
    }

    pub fn field(&self) -> &Field {
        self.0.field()
    }

    pub fn mul(&self, other: &UnipotentElement) -> Result<UnipotentElement> {
        Ok(UnipotentElement(self.0.mul(&other.0)?))
    }
}

/// Diagonal matrix with nonzero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusElement {
    field: Field,
    diag: Vec<Elem>,
}

impl TorusElement {
    pub fn new(field: &Field, diag: Vec<Elem>) -> Result<TorusElement> {
        if diag.iter().any(|e| e.is_zero() || !field.contains(*e)) {
            return Err(Error::invalid("torus entries must be nonzero field elements"));
        }
        Ok(TorusElement { field: field.clone(), diag })
    }

    pub fn diag(&self) -> &[Elem] {
        &self.diag
    }

    pub fn matrix(&self) -> Matrix {
        let n = self.diag.len();
        Matrix::from_fn(&self.field, n, n, |r, c| if r == c { self.diag[r] } else { Elem::ZERO })
    }

    /// `t u t^{-1}`: entry `(i, j)` scales by `t_i / t_j`.
    pub fn conjugate(&self, u: &Matrix) -> Matrix {
        let f = &self.field;
        Matrix::from_fn(f, u.rows(), u.cols(), |i, j| {
            let s = f.div(self.diag[i], self.diag[j]).expect("torus entries are nonzero");
            f.mul(s, u.get(i, j))
        })
    }
}

/// `E_{ij}(c)`: identity plus `c` at `(i, j)` (0-based, `i != j`).
pub fn elementary(field: &Field, n: usize, i: usize, j: usize, c: Elem) -> Matrix {
    let mut m = Matrix::identity(field, n);
    m.set(i, j, c);
    m
}

/// Permutation matrix sending `e_k` to `e_{perm[k]}`.
pub fn permutation_matrix(field: &Field, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut m = Matrix::zeros(field, n, n);
    for (k, &pk) in perm.iter().enumerate() {
        m.set(pk, k, Elem::ONE);
    }
    m
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
    General,
    Unipotent,
    Torus,
    Borel,
}

pub fn group_order(kind: GroupKind, n: usize, q: u64) -> u128 {
    let q = q as u128;
    let n32 = n as u32;
    match kind {
        GroupKind::General => (0..n32).map(|i| q.pow(n32) - q.pow(i)).product(),
        GroupKind::Unipotent => q.pow(n32 * n32.saturating_sub(1) / 2),
        GroupKind::Torus => (q - 1).pow(n32),
        GroupKind::Borel => (q - 1).pow(n32) * q.pow(n32 * n32.saturating_sub(1) / 2),
    }
}

/// Vectors of `F^dim` in lexicographic order (first coordinate slowest).
fn lex_vectors(field: &Field, dim: usize) -> Vec<Vec<Elem>> {
    let mut out: Vec<Vec<Elem>> = crate::linalg::all_vectors(field, dim).collect();
    for v in out.iter_mut() {
        v.reverse();
    }
    out
}

/// All elements of the chosen group, sorted lexicographically by row-major
/// entries.
pub fn enumerate_group(kind: GroupKind, field: &Field, n: usize, cap: u128) -> Result<Vec<Matrix>> {
    let order = group_order(kind, n, field.order() as u64);
    if order > cap {
        return Err(Error::cap("group order", order, cap));
    }
    let out = match kind {
        GroupKind::General => {
            let candidates = lex_vectors(field, n);
            let mut out = Vec::with_capacity(order as usize);
            let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(n);
            gl_rows(field, n, &candidates, &mut rows, &mut out);
            out
        }
        _ => {
            let all: Vec<Elem> = field.elements().collect();
            let nonzero: Vec<Elem> = field.nonzero_elements().collect();
            let one = [Elem::ONE];
            let zero = [Elem::ZERO];
            let choices: Vec<&[Elem]> = (0..n * n)
                .map(|k| {
                    let (r, c) = (k / n, k % n);
                    match (kind, r.cmp(&c)) {
                        (_, core::cmp::Ordering::Greater) => &zero[..],
                        (GroupKind::Unipotent, core::cmp::Ordering::Equal) => &one[..],
                        (GroupKind::Torus, core::cmp::Ordering::Less) => &zero[..],
                        (_, core::cmp::Ordering::Equal) => &nonzero[..],
                        (_, core::cmp::Ordering::Less) => &all[..],
                    }
                })
                .collect();
            let mut out = Vec::with_capacity(order as usize);
            let mut cur = vec![Elem::ZERO; n * n];
            product_fill(field, n, &choices, 0, &mut cur, &mut out);
            out
        }
    };
    debug_assert_eq!(out.len() as u128, order);
    Ok(out)
}

fn product_fill(field: &Field, n: usize, choices: &[&[Elem]], k: usize, cur: &mut Vec<Elem>, out: &mut Vec<Matrix>) {
    if k == choices.len() {
        out.push(Matrix::from_data(field, n, n, cur.clone()).expect("n x n"));
        return;
    }
    for &c in choices[k] {
        cur[k] = c;
        product_fill(field, n, choices, k + 1, cur, out);
    }
}

fn gl_rows(field: &Field, n: usize, candidates: &[Vec<Elem>], rows: &mut Vec<Vec<Elem>>, out: &mut Vec<Matrix>) {
    if rows.len() == n {
        let data = rows.concat();
        out.push(Matrix::from_data(field, n, n, data).expect("n x n"));
        return;
    }
    let span = crate::linalg::Subspace::from_vectors(field, n, rows).expect("rows of length n");
    for v in candidates {
        if !span.contains(v).expect("length n") {
            rows.push(v.clone());
            gl_rows(field, n, candidates, rows, out);
            rows.pop();
        }
    }
}

/// A generating set of `GL_n(F_q)`: elementary matrices `E_{i,i+1}(b)` and
/// `E_{i+1,i}(b)` for `b` in the `F_p`-basis `1, x, ..., x^{e-1}`, the
/// diagonal `diag(w, 1, ..., 1)` with `w` primitive, and the cyclic
/// permutation matrix.
pub fn gl_generators(field: &Field, n: usize) -> Vec<Matrix> {
    let mut gens = Vec::new();
    let basis: Vec<Elem> = (0..field.degree()).map(|i| field.pow(field.generator(), i as u64)).collect();
    for i in 0..n.saturating_sub(1) {
        for &b in &basis {
            gens.push(elementary(field, n, i, i + 1, b));
            gens.push(elementary(field, n, i + 1, i, b));
        }
    }
    if field.order() > 2 {
        let mut d = Matrix::identity(field, n);
        d.set(0, 0, field.primitive());
        gens.push(d);
    }
    if n > 1 {
        let cycle: Vec<usize> = (0..n).map(|k| (k + 1) % n).collect();
        gens.push(permutation_matrix(field, &cycle));
    }
    gens
}

/// Generators of `T(F_q)`: `diag(1, .., w, .., 1)` with `w` primitive in each
/// slot. Empty for `q = 2`, where `T` is trivial.
pub fn torus_generators(field: &Field, n: usize) -> Vec<TorusElement> {
    if field.order() == 2 {
        return Vec::new();
    }
    (0..n)
        .map(|i| {
            let mut d = vec![Elem::ONE; n];
            d[i] = field.primitive();
            TorusElement { field: field.clone(), diag: d }
        })
        .collect()
}

/// A finite matrix group, stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSubgroup {
    field: Field,
    n: usize,
    elements: Vec<Vec<Elem>>,
}

fn mul_raw(field: &Field, n: usize, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x.is_zero() {
                continue;
            }
            for c in 0..n {
                out[r * n + c] = field.mul_add(x, b[k * n + c], out[r * n + c]);
            }
        }
    }
    out
}

impl FiniteSubgroup {
    pub fn trivial(field: &Field, n: usize) -> FiniteSubgroup {
        FiniteSubgroup { field: field.clone(), n, elements: vec![Matrix::identity(field, n).data().to_vec()] }
    }

    /// Wraps a list that is already a group (closure is checked).
    pub fn from_elements(field: &Field, n: usize, elems: &[Matrix]) -> Result<FiniteSubgroup> {
        let set: BTreeSet<Vec<Elem>> = elems.iter().map(|m| m.data().to_vec()).collect();
        let g = FiniteSubgroup { field: field.clone(), n, elements: set.into_iter().collect() };
        let id = Matrix::identity(field, n);
        if g.index_of_raw(id.data()).is_none() {
            return Err(Error::invalid("element list lacks the identity"));
        }
        for a in &g.elements {
            for b in &g.elements {
                if g.index_of_raw(&mul_raw(field, n, a, b)).is_none() {
                    return Err(Error::invalid("element list is not closed under products"));
                }
            }
        }
        Ok(g)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> Matrix {
        Matrix::from_data(&self.field, self.n, self.n, self.elements[i].clone()).expect("n x n")
    }

    pub fn elements(&self) -> Vec<Matrix> {
        (0..self.order()).map(|i| self.element(i)).collect()
    }

    pub fn raw_elements(&self) -> &[Vec<Elem>] {
        &self.elements
    }

    fn index_of_raw(&self, data: &[Elem]) -> Option<usize> {
        self.elements.binary_search_by(|x| x.as_slice().cmp(data)).ok()
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index_of_raw(m.data())
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.index_of(m).is_some()
    }

    pub fn is_subgroup_of(&self, other: &FiniteSubgroup) -> bool {
        self.elements.iter().all(|e| other.index_of_raw(e).is_some())
    }

    /// Permutation `i -> index(g x_i g^{-1})`; fails unless `g` normalizes.
    pub fn conjugation_permutation(&self, g: &Matrix) -> Result<Vec<usize>> {
        let gi = g.inverse()?;
        self.elements
            .iter()
            .map(|e| {
                let x = Matrix::from_data(&self.field, self.n, self.n, e.clone())?;
                let y = g.mul(&x)?.mul(&gi)?;
                self.index_of(&y).ok_or_else(|| Error::invalid("element does not normalize the subgroup"))
            })
            .collect()
    }

    /// Cayley table with elements indexed in sorted order.
    pub fn cayley_table(&self) -> Result<FiniteGroup> {
        let n = self.order();
        if n > TABLE_CAP {
            return Err(Error::cap("Cayley table order", n as u128, TABLE_CAP as u128));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in &self.elements {
            for b in &self.elements {
                let prod = mul_raw(&self.field, self.n, a, b);
                let idx = self.index_of_raw(&prod).ok_or_else(|| Error::Internal("group not closed".into()))?;
                table.push(idx as u32);
            }
        }
        FiniteGroup::from_table(n, table)
    }
}

/// Breadth-first closure of `gens` under multiplication.
pub fn subgroup_closure(field: &Field, n: usize, gens: &[Matrix], cap: u128) -> Result<FiniteSubgroup> {
    for g in gens {
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.rows() != n || g.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.rows() });
        }
        if g.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
    }
    let raw_gens: Vec<Vec<Elem>> = gens.iter().map(|g| g.data().to_vec()).collect();
    let id = Matrix::identity(field, n).data().to_vec();
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in &raw_gens {
            let y = mul_raw(field, n, &x, g);
            if !seen.contains(&y) {
                if seen.len() as u128 >= cap {
                    return Err(Error::cap("subgroup closure", seen.len() as u128 + 1, cap));
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(FiniteSubgroup { field: field.clone(), n, elements: seen.into_iter().collect() })
}

/// The group `U_n(F_q)` as a [`FiniteSubgroup`].
pub fn unipotent_group(field: &Field, n: usize, cap: u128) -> Result<FiniteSubgroup> {
    let elems = enumerate_group(GroupKind::Unipotent, field, n, cap)?;
    Ok(FiniteSubgroup { field: field.clone(), n, elements: elems.into_iter().map(|m| m.data().to_vec()).collect() })
}

/// A `g` with `g * flag = standard flag`.
///
/// Builds a basis `b_1, ..., b_n` adapted to the flag (each `b_i` is the first
/// RREF row of `V_i` outside `V_{i-1}`; `b_n` is the first unit vector outside
/// `V_{n-1}`), takes `h` with columns `b_i` and returns `h^{-1}`.
pub fn flag_to_standard(flag: &Flag, field: &Field, n: usize) -> Result<GlElement> {
    if !flag.is_complete(n) {
        return Err(Error::invalid("flag is not complete"));
    }
    let mut basis: Vec<Vec<Elem>> = Vec::with_capacity(n);
    let mut prev = crate::linalg::Subspace::zero(field, n);
    let mut members: Vec<crate::linalg::Subspace> = flag.members().to_vec();
    members.push(crate::linalg::Subspace::full(field, n));
    for v in &members {
        let b = v
            .vectors()
            .into_iter()
            .find(|row| !prev.contains(row).expect("length n"))
            .ok_or_else(|| Error::Internal("flag member does not grow".into()))?;
        basis.push(b);
        prev = v.clone();
    }
    let h = Matrix::from_fn(field, n, n, |r, c| basis[c][r]);
    Ok(GlElement(h.inverse()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::Flag;

    #[test]
    fn group_sizes() {
        let f2 = Field::prime(2).unwrap();
        let f3 = Field::prime(3).unwrap();
        assert_eq!(enumerate_group(GroupKind::General, &f2, 2, DEFAULT_GROUP_CAP).unwrap().len(), 6);
        assert_eq!(enumerate_group(GroupKind::Unipotent, &f2, 3, DEFAULT_GROUP_CAP).unwrap().len(), 8);
        assert_eq!(enumerate_group(GroupKind::Torus, &f3, 2, DEFAULT_GROUP_CAP).unwrap().len(), 4);
        assert_eq!(enumerate_group(GroupKind::Borel, &f3, 2, DEFAULT_GROUP_CAP).unwrap().len(), 12);
        assert_eq!(enumerate_group(GroupKind::General, &f2, 3, DEFAULT_GROUP_CAP).unwrap().len(), 168);
        let f5 = Field::prime(5).unwrap();
        assert!(matches!(
            enumerate_group(GroupKind::General, &f5, 3, DEFAULT_GROUP_CAP),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted() {
        let f3 = Field::prime(3).unwrap();
        let g = enumerate_group(GroupKind::General, &f3, 2, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.len(), 48);
        assert!(g.windows(2).all(|w| w[0].data() < w[1].data()));
        assert_eq!(g, enumerate_group(GroupKind::General, &f3, 2, DEFAULT_GROUP_CAP).unwrap());
    }

    #[test]
    fn closures() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(subgroup_closure(&f3, 2, &[], 100).unwrap().order(), 1);
        let e = elementary(&f3, 2, 0, 1, Elem::ONE);
        assert_eq!(subgroup_closure(&f3, 2, &[e], 100).unwrap().order(), 3);
        let f2 = Field::prime(2).unwrap();
        let gens = [elementary(&f2, 3, 0, 1, Elem::ONE), elementary(&f2, 3, 1, 2, Elem::ONE)];
        let g = subgroup_closure(&f2, 3, &gens, 100).unwrap();
        assert_eq!(g, unipotent_group(&f2, 3, 100).unwrap());
        assert!(matches!(subgroup_closure(&f2, 3, &gens, 4), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn gl_generators_generate() {
        for (q, n) in [(2, 2), (3, 2), (4, 2), (2, 3), (5, 2)] {
            let f = Field::with_order(q).unwrap();
            let g = subgroup_closure(&f, n, &gl_generators(&f, n), DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(g.order() as u128, group_order(GroupKind::General, n, q), "q={q} n={n}");
        }
    }

    #[test]
    fn flag_to_standard_examples() {
        let f2 = Field::prime(2).unwrap();
        let std = Flag::standard(&f2, 3);
        assert_eq!(flag_to_standard(&std, &f2, 3).unwrap(), GlElement::identity(&f2, 3));
        let e2 = crate::linalg::Subspace::from_vectors(&f2, 2, &[vec![Elem(0), Elem(1)]]).unwrap();
        let fl = Flag::new(vec![e2]).unwrap();
        let g = flag_to_standard(&fl, &f2, 2).unwrap();
        assert_eq!(g.matrix(), &permutation_matrix(&f2, &[1, 0]));
        assert_eq!(fl.act(g.matrix()).unwrap(), Flag::standard(&f2, 2));
        assert!(flag_to_standard(&Flag::new(vec![]).unwrap(), &f2, 2).is_err());
    }

    #[test]
    fn torus_conjugation_scales_entries() {
        let f5 = Field::prime(5).unwrap();
        let t = TorusElement::new(&f5, vec![Elem(2), Elem(1)]).unwrap();
        let u = elementary(&f5, 2, 0, 1, Elem(1));
        let direct = t.matrix().mul(&u).unwrap().mul(&t.matrix().inverse().unwrap()).unwrap();
        assert_eq!(t.conjugate(&u), direct);
        assert!(TorusElement::new(&f5, vec![Elem(0)]).is_err());
    }
}
