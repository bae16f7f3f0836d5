//! Integer Laurent polynomials, elementary symmetric polynomials and the
//! power-sum identity
//!
//! ```text
//! sum_{j=1}^{n} (-1)^{j-1} e_{n-j}(z) (sum_i z_i^j m_i) = e_n(z) (m_1 + ... + m_n)
//! ```
//!
//! which follows from `prod_j (z_i - z_j) = 0`, i.e. from each `z_i` being a
//! root of `X^n - e_1 X^{n-1} + ... + (-1)^n e_n`. Module instances over
//! `Z/m` check the resulting membership lemma directly.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::rng::SeededRng;
use crate::{Error, Result};

/// Largest `n` accepted by [`verify_identity_symbolic`].
pub const SYMBOLIC_MAX_N: usize = 8;

/// A Laurent polynomial in `z_1, ..., z_n` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> LaurentPolynomial {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> LaurentPolynomial {
        LaurentPolynomial::monomial(vec![0; nvars], c)
    }

    pub fn monomial(exps: Vec<i32>, c: i64) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero(exps.len());
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    /// `z_i^k` (0-based `i`; `k` may be negative).
    pub fn var_pow(nvars: usize, i: usize, k: i32) -> LaurentPolynomial {
        let mut e = vec![0; nvars];
        e[i] = k;
        LaurentPolynomial::monomial(e, 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, i64> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, e: Vec<i32>, c: i64) {
        let v = self.terms.entry(e.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> LaurentPolynomial {
        if c == 0 {
            return LaurentPolynomial::zero(self.nvars);
        }
        LaurentPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, &v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut acc: BTreeMap<Vec<i32>, i64> = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e: Vec<i32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                *acc.entry(e).or_insert(0) += x * y;
            }
        }
        acc.retain(|_, c| *c != 0);
        LaurentPolynomial { nvars: self.nvars, terms: acc }
    }

    /// Evaluates at integers; `None` if a negative power meets a non-unit.
    pub fn eval(&self, z: &[i128]) -> Option<i128> {
        let mut total = 0i128;
        for (e, &c) in &self.terms {
            let mut t = c as i128;
            for (&zi, &k) in z.iter().zip(e) {
                if k < 0 && zi.abs() != 1 {
                    return None;
                }
                t *= zi.pow(k.unsigned_abs());
            }
            total += t;
        }
        Some(total)
    }
}

/// `e_k(z_1, ..., z_n)`.
pub fn elementary_symmetric(n: usize, k: usize) -> Result<LaurentPolynomial> {
    if k > n {
        return Err(Error::invalid("k must lie in 0..=n"));
    }
    let mut p = LaurentPolynomial::zero(n);
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; n];
        for &i in &subset {
            e[i] = 1;
        }
        p.accumulate(e, 1);
        let Some(pos) = (0..k).rev().find(|&i| subset[i] < n - k + i) else { break };
        subset[pos] += 1;
        for i in pos + 1..k {
            subset[i] = subset[i - 1] + 1;
        }
    }
    Ok(p)
}

/// Both sides of the identity, as coefficient vectors over the formal
/// symbols `m_1, ..., m_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub n: usize,
    pub ok: bool,
    pub lhs: Vec<LaurentPolynomial>,
    pub rhs: Vec<LaurentPolynomial>,
    /// Terms of the left side before cancellation.
    pub lhs_raw_terms: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
}

pub fn verify_identity_symbolic(n: usize) -> Result<IdentityReport> {
    if n == 0 || n > SYMBOLIC_MAX_N {
        return Err(Error::invalid("n must lie in 1..=8"));
    }
    let e: Vec<LaurentPolynomial> = (0..=n).map(|k| elementary_symmetric(n, k)).collect::<Result<_>>()?;
    let mut lhs = vec![LaurentPolynomial::zero(n); n];
    let mut raw = 0;
    for j in 1..=n {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        for (i, slot) in lhs.iter_mut().enumerate() {
            let t = e[n - j].mul(&LaurentPolynomial::var_pow(n, i, j as i32)).scale(sign);
            raw += t.term_count();
            *slot = slot.add(&t);
        }
    }
    let rhs = vec![e[n].clone(); n];
    let ok = lhs == rhs;
    Ok(IdentityReport {
        n,
        ok,
        lhs_raw_terms: raw,
        lhs_terms: lhs.iter().map(LaurentPolynomial::term_count).sum(),
        rhs_terms: rhs.iter().map(LaurentPolynomial::term_count).sum(),
        lhs,
        rhs,
    })
}

/// `e_0..=e_n` of integers, by the product recursion.
pub fn elementary_values(z: &[i128]) -> Vec<i128> {
    let mut e = vec![0i128; z.len() + 1];
    e[0] = 1;
    for (k, &zi) in z.iter().enumerate() {
        for j in (1..=k + 1).rev() {
            e[j] += zi * e[j - 1];
        }
    }
    e
}

/// Evaluates both sides of the identity at integer `z_i` and integer
/// vectors `m_i`.
pub fn identity_numeric(z: &[i128], m: &[Vec<i128>]) -> (Vec<i128>, Vec<i128>) {
    let n = z.len();
    let d = m.first().map_or(0, Vec::len);
    let e = elementary_values(z);
    let mut lhs = vec![0i128; d];
    for j in 1..=n {
        let sign = if j % 2 == 1 { 1 } else { -1 };
        for (zi, mi) in z.iter().zip(m) {
            let w = sign * e[n - j] * zi.pow(j as u32);
            for (l, &x) in lhs.iter_mut().zip(mi) {
                *l += w * x;
            }
        }
    }
    let mut rhs = vec![0i128; d];
    for mi in m {
        for (r, &x) in rhs.iter_mut().zip(mi) {
            *r += e[n] * x;
        }
    }
    (lhs, rhs)
}

/// A square matrix over `Z/m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    modulus: u64,
    dim: usize,
    data: Vec<u64>,
}

impl ModMatrix {
    pub fn new(modulus: u64, dim: usize, data: Vec<u64>) -> Result<ModMatrix> {
        if modulus < 2 {
            return Err(Error::invalid("modulus must be at least 2"));
        }
        if data.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: data.len() });
        }
        Ok(ModMatrix { modulus, dim, data: data.into_iter().map(|x| x % modulus).collect() })
    }

    pub fn identity(modulus: u64, dim: usize) -> ModMatrix {
        let mut data = vec![0; dim * dim];
        for i in 0..dim {
            data[i * dim + i] = 1 % modulus;
        }
        ModMatrix { modulus, dim, data }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.dim + c]
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn mul(&self, other: &ModMatrix) -> ModMatrix {
        let (d, m) = (self.dim, self.modulus as u128);
        let mut data = vec![0u64; d * d];
        for r in 0..d {
            for c in 0..d {
                let mut s = 0u128;
                for k in 0..d {
                    s += self.get(r, k) as u128 * other.get(k, c) as u128;
                }
                data[r * d + c] = (s % m) as u64;
            }
        }
        ModMatrix { modulus: self.modulus, dim: d, data }
    }

    pub fn add(&self, other: &ModMatrix) -> ModMatrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| (a + b) % self.modulus).collect();
        ModMatrix { modulus: self.modulus, dim: self.dim, data }
    }

    pub fn scale(&self, c: u64) -> ModMatrix {
        let m = self.modulus as u128;
        let data = self.data.iter().map(|&a| ((a as u128 * (c % self.modulus) as u128) % m) as u64).collect();
        ModMatrix { modulus: self.modulus, dim: self.dim, data }
    }

    pub fn pow(&self, k: u32) -> ModMatrix {
        (0..k).fold(ModMatrix::identity(self.modulus, self.dim), |acc, _| acc.mul(self))
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        let m = self.modulus as u128;
        (0..self.dim)
            .map(|r| ((0..self.dim).map(|k| self.get(r, k) as u128 * v[k] as u128).sum::<u128>() % m) as u64)
            .collect()
    }

    /// Inverse over `Z/m`, via Gauss-Jordan modulo each prime power of `m`
    /// and the Chinese remainder theorem.
    pub fn inverse(&self) -> Option<ModMatrix> {
        let mut result = ModMatrix { modulus: self.modulus, dim: self.dim, data: vec![0; self.dim * self.dim] };
        let mut acc_mod = 1u64;
        for (p, pk) in factor_prime_powers(self.modulus) {
            let part = inverse_prime_power(self, p, pk)?;
            // Combine result (mod acc_mod) with part (mod pk).
            let inv = mod_inverse((acc_mod % pk) as i128, pk as i128)? as u128;
            for (x, &y) in result.data.iter_mut().zip(&part) {
                let diff = (y as i128 - (*x as i128 % pk as i128)).rem_euclid(pk as i128) as u128;
                let t = (diff * inv) % pk as u128;
                *x = (*x as u128 + acc_mod as u128 * t) as u64;
            }
            acc_mod *= pk;
        }
        Some(result)
    }

    pub fn commutes_with(&self, other: &ModMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }
}

fn factor_prime_powers(mut m: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut pk = 1;
            while m.is_multiple_of(p) {
                m /= p;
                pk *= p;
            }
            out.push((p, pk));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, m));
    }
    out
}

fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1 || m == 1).then(|| s0.rem_euclid(m))
}

/// Gauss-Jordan over the local ring `Z/p^k`: pivots must be units.
fn inverse_prime_power(a: &ModMatrix, p: u64, pk: u64) -> Option<Vec<u64>> {
    let d = a.dim;
    let m = pk as i128;
    let mut w: Vec<Vec<i128>> = (0..d)
        .map(|r| {
            let mut row: Vec<i128> = (0..d).map(|c| (a.get(r, c) % pk) as i128).collect();
            row.extend((0..d).map(|c| i128::from(r == c)));
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| w[r][col] % p as i128 != 0)?;
        w.swap(col, piv);
        let inv = mod_inverse(w[col][col], m)?;
        for x in w[col].iter_mut() {
            *x = (*x * inv).rem_euclid(m);
        }
        for r in 0..d {
            if r != col && w[r][col] != 0 {
                let f = w[r][col];
                let pivot_row = w[col].clone();
                for (x, y) in w[r].iter_mut().zip(&pivot_row) {
                    *x = (*x - f * y).rem_euclid(m);
                }
            }
        }
    }
    Some(w.into_iter().flat_map(|row| row[d..].iter().map(|&x| x as u64).collect::<Vec<_>>()).collect())
}

/// A subgroup of `(Z/m)^d`, held as a triangular `Z`-basis of the full-rank
/// lattice it pulls back to in `Z^d` (which contains `m Z^d`). Row `i` has
/// its leading entry, a divisor of `m`, in column `i`, and entries in
/// `0..m` elsewhere.
#[derive(Clone, Debug)]
pub struct ModLattice {
    modulus: u64,
    basis: Vec<Vec<i128>>,
}

impl ModLattice {
    /// The zero subgroup.
    pub fn new(modulus: u64, dim: usize) -> ModLattice {
        let m = modulus as i128;
        let basis = (0..dim)
            .map(|i| {
                let mut r = vec![0i128; dim];
                r[i] = m;
                r
            })
            .collect();
        ModLattice { modulus, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Order of the subgroup.
    pub fn size(&self) -> u128 {
        self.basis.iter().enumerate().map(|(i, r)| (self.modulus as i128 / r[i]) as u128).product()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v: Vec<i128> = v.iter().map(|&x| (x % self.modulus) as i128).collect();
        for (i, row) in self.basis.iter().enumerate() {
            if v[i] % row[i] != 0 {
                return false;
            }
            let f = v[i] / row[i];
            for (x, &r) in v.iter_mut().zip(row) {
                *x -= f * r;
            }
        }
        true
    }

    /// Adds `v`; returns whether the subgroup grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut rows = self.basis.clone();
        rows.push(v.iter().map(|&x| (x % self.modulus) as i128).collect());
        self.basis = triangular_basis(rows, self.modulus as i128, self.dim());
        true
    }
}

/// Triangular basis of the lattice spanned by `rows` and `m Z^d`.
fn triangular_basis(mut rows: Vec<Vec<i128>>, m: i128, d: usize) -> Vec<Vec<i128>> {
    let unit = |j: usize| {
        let mut r = vec![0i128; d];
        r[j] = m;
        r
    };
    rows.extend((0..d).map(unit));
    let mut basis = Vec::with_capacity(d);
    for col in 0..d {
        // Euclid on column `col` until a single row is nonzero there.
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            let pivot = rows[p].clone();
            for &r in &nz {
                if r != p {
                    let f = rows[r][col] / pivot[col];
                    for (x, &y) in rows[r].iter_mut().zip(&pivot) {
                        *x -= f * y;
                    }
                }
            }
        }
        let p = rows.iter().position(|r| r[col] != 0).expect("m e_col keeps the column nonzero");
        let mut pivot = rows.swap_remove(p);
        if pivot[col] < 0 {
            pivot.iter_mut().for_each(|x| *x = -*x);
        }
        for x in pivot.iter_mut().skip(col + 1) {
            *x = x.rem_euclid(m);
        }
        basis.push(pivot);
        for r in rows.iter_mut() {
            for x in r.iter_mut().skip(col + 1) {
                *x = x.rem_euclid(m);
            }
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
        rows.extend((col + 1..d).map(unit));
    }
    basis
}

/// Commuting invertible matrices `Z_1, ..., Z_n` over `Z/m` acting on
/// `(Z/m)^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleInstance {
    modulus: u64,
    dim: usize,
    zs: Vec<ModMatrix>,
    inverses: Vec<ModMatrix>,
}

impl ModuleInstance {
    pub fn new(zs: Vec<ModMatrix>) -> Result<ModuleInstance> {
        let first = zs.first().ok_or_else(|| Error::invalid("at least one Z_i is required"))?;
        let (modulus, dim) = (first.modulus, first.dim);
        if zs.iter().any(|z| z.modulus != modulus || z.dim != dim) {
            return Err(Error::invalid("all Z_i must share modulus and dimension"));
        }
        for (i, a) in zs.iter().enumerate() {
            for b in &zs[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(Error::invalid("Z_i do not commute"));
                }
            }
        }
        let inverses = zs
            .iter()
            .map(|z| z.inverse().ok_or_else(|| Error::invalid("Z_i is not invertible")))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleInstance { modulus, dim, zs, inverses })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.zs.len()
    }

    pub fn zs(&self) -> &[ModMatrix] {
        &self.zs
    }

    /// `v_d = sum_i Z_i^d m_i`.
    pub fn power_moment(&self, ms: &[Vec<u64>], d: u32) -> Vec<u64> {
        let mut out = vec![0u64; self.dim];
        for (z, m) in self.zs.iter().zip(ms) {
            for (o, x) in out.iter_mut().zip(z.pow(d).apply(m)) {
                *o = (*o + x) % self.modulus;
            }
        }
        out
    }

    /// Smallest subgroup containing `seeds` and stable under every `Z_i^{+-1}`.
    pub fn submodule(&self, seeds: &[Vec<u64>]) -> ModLattice {
        let mut lat = ModLattice::new(self.modulus, self.dim);
        let mut queue: Vec<Vec<u64>> = Vec::new();
        for s in seeds {
            if lat.insert(s) {
                queue.push(s.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for z in self.zs.iter().chain(&self.inverses) {
                let w = z.apply(&v);
                if lat.insert(&w) {
                    queue.push(w);
                }
            }
        }
        lat
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub member: bool,
    /// Order of `N`.
    pub submodule_order: u128,
    pub sum: Vec<u64>,
}

/// Builds `N` from `v_1, ..., v_n` and tests `m_1 + ... + m_n` in `N`.
pub fn lemma_check(instance: &ModuleInstance, ms: &[Vec<u64>]) -> Result<LemmaReport> {
    if ms.len() != instance.n() {
        return Err(Error::DimensionMismatch { expected: instance.n(), found: ms.len() });
    }
    if ms.iter().any(|m| m.len() != instance.dim) {
        return Err(Error::invalid("module elements must have length d"));
    }
    let seeds: Vec<Vec<u64>> = (1..=instance.n() as u32).map(|d| instance.power_moment(ms, d)).collect();
    let lat = instance.submodule(&seeds);
    let mut sum = vec![0u64; instance.dim];
    for m in ms {
        for (s, &x) in sum.iter_mut().zip(m) {
            *s = (*s + x) % instance.modulus;
        }
    }
    Ok(LemmaReport { member: lat.contains(&sum), submodule_order: lat.size(), sum })
}

/// A random instance: `Z_i` are random polynomials in one random matrix
/// (so they commute), redrawn until invertible; `m_i` are uniform.
pub fn random_instance(rng: &mut SeededRng, n: usize, modulus: u64, dim: usize) -> (ModuleInstance, Vec<Vec<u64>>) {
    let a = ModMatrix::new(modulus, dim, (0..dim * dim).map(|_| rng.random_range(0..modulus)).collect())
        .expect("valid shape");
    let a2 = a.mul(&a);
    let zs: Vec<ModMatrix> = (0..n)
        .map(|_| loop {
            let z = ModMatrix::identity(modulus, dim)
                .scale(rng.random_range(0..modulus))
                .add(&a.scale(rng.random_range(0..modulus)))
                .add(&a2.scale(rng.random_range(0..modulus)));
            if z.inverse().is_some() {
                break z;
            }
        })
        .collect();
    let ms = (0..n).map(|_| (0..dim).map(|_| rng.random_range(0..modulus)).collect()).collect();
    (ModuleInstance::new(zs).expect("polynomials in one matrix commute"), ms)
}
