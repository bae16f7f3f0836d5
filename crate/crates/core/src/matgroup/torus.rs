//! Characters, one-parameter subgroups and the positive action on `U_n`.
//!
//! A one-parameter subgroup `gamma(t) = diag(t^{a_1}, ..., t^{a_n})` conjugates
//! `u` by scaling entry `(i, j)` by `t^{a_i - a_j}`. When the exponents are
//! strictly decreasing every weight on the strictly upper triangle is
//! positive, so the formula makes sense at `t = 0` and sends everything to
//! the identity.

use alloc::vec;
use alloc::vec::Vec;

use super::UnipotentElement;
use crate::field::Elem;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Integer exponent vector of a character of the diagonal torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character(pub Vec<i64>);

/// Integer exponent vector of a one-parameter subgroup of the torus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneParamSubgroup(pub Vec<i64>);

impl Character {
    /// `e_i - e_j` in dimension `n`.
    pub fn root(n: usize, i: usize, j: usize) -> Character {
        let mut v = vec![0; n];
        v[i] += 1;
        v[j] -= 1;
        Character(v)
    }

    pub fn pairing(&self, gamma: &OneParamSubgroup) -> i64 {
        self.0.iter().zip(&gamma.0).map(|(a, b)| a * b).sum()
    }
}

impl OneParamSubgroup {
    pub fn is_strictly_decreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Weight of the torus action on the `(i, j)` entry.
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        self.0[i] - self.0[j]
    }
}

/// Roots `e_i - e_j`, `i < j`, of `GL_n`.
pub fn positive_roots(n: usize) -> Vec<Character> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(Character::root(n, i, j));
        }
    }
    out
}

/// `e_i - e_{i+1}`.
pub fn simple_roots(n: usize) -> Vec<Character> {
    (0..n.saturating_sub(1)).map(|i| Character::root(n, i, i + 1)).collect()
}

/// `diag(t^n, t^{n-1}, ..., t)`.
pub fn one_param_positive(n: usize) -> OneParamSubgroup {
    OneParamSubgroup((1..=n as i64).rev().collect())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct Rational {
    num: i128,
    den: i128,
}

fn igcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    fn new(num: i128, den: i128) -> Rational {
        let g = igcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Rational { num: s * num / g, den: s * den / g }
    }
    fn int(n: i128) -> Rational {
        Rational { num: n, den: 1 }
    }
    fn is_zero(self) -> bool {
        self.num == 0
    }
    fn sub(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }
    fn mul(self, o: Rational) -> Rational {
        Rational::new(self.num * o.num, self.den * o.den)
    }
    fn div(self, o: Rational) -> Rational {
        Rational::new(self.num * o.den, self.den * o.num)
    }
}

/// Solves `<chi_i, alpha> = d` for all given simple roots with the least
/// common `d >= 1`, then shifts by the central vector `(1, ..., 1)` (when it
/// pairs trivially with every root) so that the smallest exponent is `1`.
pub fn construct_positive_oneparam(simple: &[Character]) -> Result<OneParamSubgroup> {
    let k = simple.len();
    if k == 0 {
        return Err(Error::invalid("no simple roots given"));
    }
    let n = simple[0].0.len();
    if n == 0 || simple.iter().any(|c| c.0.len() != n) {
        return Err(Error::invalid("simple roots must share a positive length"));
    }
    // Augmented rational system [S | 1].
    let mut m: Vec<Vec<Rational>> = simple
        .iter()
        .map(|c| {
            let mut row: Vec<Rational> = c.0.iter().map(|&x| Rational::int(x as i128)).collect();
            row.push(Rational::int(1));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == k {
            break;
        }
        let Some(pr) = (r..k).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(pr, r);
        let piv = m[r][c];
        for x in m[r].iter_mut() {
            *x = x.div(piv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate().take(k) {
            if i != r && !row[c].is_zero() {
                let factor = row[c];
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(p.mul(factor));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() < k {
        return Err(Error::invalid("simple roots are linearly dependent"));
    }
    let mut sol = vec![Rational::int(0); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][n];
    }
    let lcm = sol.iter().fold(1i128, |l, x| l / igcd(l, x.den) * x.den);
    let mut alpha: Vec<i64> = sol.iter().map(|x| (x.num * (lcm / x.den)) as i64).collect();
    let central_is_orthogonal = simple.iter().all(|c| c.0.iter().sum::<i64>() == 0);
    if central_is_orthogonal {
        let shift = 1 - alpha.iter().copied().min().unwrap();
        for a in alpha.iter_mut() {
            *a += shift;
        }
    }
    let gamma = OneParamSubgroup(alpha);
    let d = simple[0].pairing(&gamma);
    if d < 1 || simple.iter().any(|c| c.pairing(&gamma) != d) {
        return Err(Error::Internal("one-parameter solution does not pair uniformly".into()));
    }
    Ok(gamma)
}

/// Extended action of the multiplicative monoid of the field on `U_n`:
/// entry `(i, j)` is multiplied by `a^{gamma_i - gamma_j}`. For `a != 0` this
/// is conjugation by `gamma(a)`; for `a = 0` the result is the identity.
pub fn monoid_act(a: Elem, u: &UnipotentElement, gamma: &OneParamSubgroup) -> Result<UnipotentElement> {
    let n = u.n();
    if gamma.0.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: gamma.0.len() });
    }
    if !gamma.is_strictly_decreasing() {
        return Err(Error::invalid("one-parameter subgroup is not positive on U"));
    }
    let f = u.field();
    if !f.contains(a) {
        return Err(Error::FieldMismatch);
    }
    let m = u.matrix();
    let out = Matrix::from_fn(f, n, n, |i, j| {
        if i < j {
            f.mul(f.pow(a, gamma.weight(i, j) as u64), m.get(i, j))
        } else {
            m.get(i, j)
        }
    });
    Ok(UnipotentElement(out))
}

/// Root positions in factorization order: columns left to right, within a
/// column top to bottom. 0-based `(i, j)` with `i < j`.
pub fn root_order(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// Coordinates `c_{ij}` with `u = prod E_{ij}(c_{ij})` in [`root_order`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootCoordinates {
    pub n: usize,
    /// One value per entry of [`root_order`].
    pub values: Vec<Elem>,
}

impl RootCoordinates {
    pub fn get(&self, i: usize, j: usize) -> Elem {
        let pos = root_order(self.n).iter().position(|&p| p == (i, j)).expect("i < j < n");
        self.values[pos]
    }
}

/// Peels off the column factors `C_j = prod_i E_{ij}(c_{ij})` from the left.
/// After removing `C_2, ..., C_{j-1}`, column `j` of the remainder is exactly
/// column `j` of `C_j`.
pub fn root_factorize(u: &UnipotentElement) -> RootCoordinates {
    let n = u.n();
    let f = u.field().clone();
    let mut m = u.matrix().clone();
    let mut values = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        let col: Vec<Elem> = (0..j).map(|i| m.get(i, j)).collect();
        values.extend_from_slice(&col);
        // m <- C_j^{-1} m, where C_j^{-1} = I - sum_i c_ij e_i e_j^T.
        for (i, &c) in col.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for k in 0..n {
                let v = f.sub(m.get(i, k), f.mul(c, m.get(j, k)));
                m.set(i, k, v);
            }
        }
    }
    debug_assert_eq!(m, Matrix::identity(&f, n));
    RootCoordinates { n, values }
}

/// Inverse of [`root_factorize`]: multiplies out the elementary factors.
pub fn reconstruct(field: &crate::field::Field, coords: &RootCoordinates) -> Result<UnipotentElement> {
    let n = coords.n;
    let order = root_order(n);
    if coords.values.len() != order.len() {
        return Err(Error::DimensionMismatch { expected: order.len(), found: coords.values.len() });
    }
    let mut m = Matrix::identity(field, n);
    for (&(i, j), &c) in order.iter().zip(&coords.values) {
        m = m.mul(&super::elementary(field, n, i, j, c))?;
    }
    UnipotentElement::new(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn standard_positive_subgroup() {
        assert_eq!(one_param_positive(2).0, vec![2, 1]);
        assert_eq!(one_param_positive(3).0, vec![3, 2, 1]);
        assert_eq!(Character::root(2, 0, 1).pairing(&one_param_positive(2)), 1);
    }

    #[test]
    fn constructed_subgroup_matches_standard() {
        assert_eq!(construct_positive_oneparam(&simple_roots(3)).unwrap(), one_param_positive(3));
        assert_eq!(construct_positive_oneparam(&simple_roots(2)).unwrap(), one_param_positive(2));
        assert!(construct_positive_oneparam(&[]).is_err());
        let dup = [Character::root(3, 0, 1), Character::root(3, 0, 1)];
        assert!(construct_positive_oneparam(&dup).is_err());
    }

    #[test]
    fn monoid_examples() {
        let f5 = Field::prime(5).unwrap();
        let gamma = one_param_positive(2);
        let u = UnipotentElement::elementary(&f5, 2, 0, 1, Elem(3)).unwrap();
        let acted = monoid_act(Elem(2), &u, &gamma).unwrap();
        assert_eq!(acted, UnipotentElement::elementary(&f5, 2, 0, 1, Elem(1)).unwrap());
        assert_eq!(monoid_act(Elem(0), &u, &gamma).unwrap(), UnipotentElement::identity(&f5, 2));
        assert_eq!(monoid_act(Elem(1), &u, &gamma).unwrap(), u);
        assert!(monoid_act(Elem(1), &u, &OneParamSubgroup(vec![1, 2])).is_err());
    }

    #[test]
    fn factorization_examples() {
        let f2 = Field::prime(2).unwrap();
        let id = UnipotentElement::identity(&f2, 3);
        assert!(root_factorize(&id).values.iter().all(|c| c.is_zero()));
        let e13 = UnipotentElement::elementary(&f2, 3, 0, 2, Elem(1)).unwrap();
        let c = root_factorize(&e13);
        assert_eq!(c.get(0, 2), Elem(1));
        assert_eq!(c.get(0, 1), Elem(0));
        assert_eq!(c.get(1, 2), Elem(0));
        let u = UnipotentElement::elementary(&f2, 3, 0, 1, Elem(1))
            .unwrap()
            .mul(&UnipotentElement::elementary(&f2, 3, 1, 2, Elem(1)).unwrap())
            .unwrap();
        let c = root_factorize(&u);
        // E12(1) E23(1) = [[1,1,1],[0,1,1],[0,0,1]] = E12(1) E13(0) E23(1).
        assert_eq!(c.values, vec![Elem(1), Elem(0), Elem(1)]);
        assert_eq!(reconstruct(&f2, &c).unwrap(), u);
    }
}
