//! Prime and prime-power finite fields with exact arithmetic.
//!
//! An element of `F_{p^e}` is a polynomial `c_0 + c_1 x + ... + c_{e-1} x^{e-1}`
//! over `F_p`, reduced modulo the field's monic irreducible modulus. It is
//! stored as the integer `sum c_i p^i`, which doubles as the canonical
//! enumeration index: `0` comes first and the order is lexicographic on the
//! coefficient vector read from the highest degree down.
//!
//! Multiplication goes through exp/log tables of a primitive element.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

/// Orders up to this size get a precomputed addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element in canonical index form. Only meaningful together with the
/// [`Field`] that produced it.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

struct FieldData {
    p: u32,
    e: u32,
    q: u32,
    /// Little-endian coefficients of the monic modulus, length `e + 1`.
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field `F_{p^e}`. Cloning is cheap (shared tables).
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e`; `None` when `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

/// Remainder of `num` modulo the monic `den` over `F_p` (little-endian).
fn poly_rem(mut num: Vec<u32>, den: &[u32], p: u32) -> Vec<u32> {
    let dd = den.len() - 1;
    while num.len() > dd {
        let lead = *num.last().unwrap();
        let shift = num.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in den.iter().enumerate() {
                let t = (lead as u64 * c as u64 % p as u64) as u32;
                num[shift + i] = (num[shift + i] + p - t) % p;
            }
        }
        num.pop();
    }
    num
}

fn digits(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Monic polynomial of degree `deg` whose lower coefficients have index `low`.
fn monic(low: u32, p: u32, deg: usize) -> Vec<u32> {
    let mut f = digits(low, p, deg);
    f.push(1);
    f
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let g = monic(low, p, d);
            if poly_rem(f.to_vec(), &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds `F_{p^e}` with the least monic irreducible modulus of degree `e`
    /// (least by the index of its lower coefficients).
    pub fn new(p: u64, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = p.checked_pow(e).filter(|&q| q <= MAX_ORDER).ok_or(Error::FieldTooLarge { p, e })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = if e == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| monic(low, p, e as usize))
                .find(|f| is_irreducible(f, p))
                .ok_or_else(|| Error::Internal(alloc::format!("no irreducible of degree {e}")))?
        };
        let mut data = FieldData { p, e, q, modulus, exp: Vec::new(), log: Vec::new(), add: None };
        data.build_tables()?;
        Ok(Field(Arc::new(data)))
    }

    pub fn prime(p: u64) -> Result<Field> {
        Field::new(p, 1)
    }

    /// Field of order `q`, which must be a prime power.
    pub fn with_order(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::new(p, e)
    }

    /// Prime subfield `F_p` as a field of its own.
    pub fn prime_subfield(&self) -> Field {
        if self.0.e == 1 {
            self.clone()
        } else {
            Field::prime(self.0.p as u64).expect("characteristic is prime")
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.e == 1
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.0.q
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.0.q).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (1..self.0.q).map(Elem)
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        digits(a.0, self.0.p, self.0.e as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem> {
        if coeffs.len() != self.0.e as usize {
            return Err(Error::DimensionMismatch { expected: self.0.e as usize, found: coeffs.len() });
        }
        if coeffs.iter().any(|&c| c >= self.0.p) {
            return Err(Error::invalid("coefficient out of range"));
        }
        Ok(Elem(undigits(coeffs, self.0.p)))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// The polynomial generator `x` (equal to `1` for prime fields).
    pub fn generator(&self) -> Elem {
        if self.0.e == 1 {
            Elem::ONE
        } else {
            Elem(self.0.p)
        }
    }

    /// A multiplicative generator of `F_q^*`.
    pub fn primitive(&self) -> Elem {
        Elem(self.0.exp[1 % (self.0.q as usize - 1).max(1)])
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let d = &*self.0;
        if d.e == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= d.p { s - d.p } else { s });
        }
        if let Some(t) = &d.add {
            return Elem(t[(a.0 * d.q + b.0) as usize]);
        }
        d.add_digits(a.0, b.0)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let d = &*self.0;
        if d.e == 1 {
            return Elem(if a.0 == 0 { 0 } else { d.p - a.0 });
        }
        let ds: Vec<u32> = digits(a.0, d.p, d.e as usize).into_iter().map(|c| (d.p - c) % d.p).collect();
        Elem(undigits(&ds, d.p))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.0.e == 1 {
            let p = self.0.p;
            return Elem(if a.0 >= b.0 { a.0 - b.0 } else { a.0 + p - b.0 });
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        if d.e == 1 {
            return Elem((a.0 as u64 * b.0 as u64 % d.p as u64) as u32);
        }
        let n = d.q - 1;
        let s = d.log[a.index()] + d.log[b.index()];
        Elem(d.exp[(if s >= n { s - n } else { s }) as usize])
    }

    /// `a * b + c`, the elimination kernel.
    #[inline]
    pub fn mul_add(&self, a: Elem, b: Elem, c: Elem) -> Elem {
        self.add(self.mul(a, b), c)
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a.0 == 0 {
            return None;
        }
        let d = &*self.0;
        let n = d.q - 1;
        Some(Elem(d.exp[((n - d.log[a.index()]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        let bi = self.inv(b).ok_or(Error::DivisionByZero)?;
        Ok(self.mul(a, bi))
    }

    /// `a^k`; `0^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        let l = d.log[a.index()] as u64 * (k % n) % n;
        Elem(d.exp[l as usize])
    }

    /// `a^k` for a signed exponent; `a` must be nonzero when `k < 0`.
    pub fn pow_signed(&self, a: Elem, k: i64) -> Result<Elem> {
        if k >= 0 {
            Ok(self.pow(a, k as u64))
        } else {
            let ai = self.inv(a).ok_or(Error::DivisionByZero)?;
            Ok(self.pow(ai, k.unsigned_abs()))
        }
    }

    /// Multiplies by an element of the prime subfield given as an integer.
    pub fn scale(&self, c: u32, a: Elem) -> Elem {
        self.mul(Elem(c % self.0.p), a)
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, it: I) -> Elem {
        it.into_iter().fold(Elem::ZERO, |acc, x| self.add(acc, x))
    }

    /// Absolute trace `a + a^p + ... + a^{p^{e-1}}`, an element of `F_p`
    /// returned as its integer value.
    pub fn trace(&self, a: Elem) -> u32 {
        let mut acc = Elem::ZERO;
        let mut t = a;
        for _ in 0..self.0.e {
            acc = self.add(acc, t);
            t = self.pow(t, self.0.p as u64);
        }
        debug_assert!(acc.0 < self.0.p, "trace must land in the prime field");
        acc.0
    }

    /// Canonical text: little-endian coefficient digits, e.g. `"01"` for `x`
    /// in `F_4`. Prime fields print the plain integer. Extension fields with
    /// `p > 10` separate coefficients with `.`.
    pub fn to_text(&self, a: Elem) -> String {
        use core::fmt::Write;
        let d = &*self.0;
        let mut s = String::new();
        if d.e == 1 {
            let _ = write!(s, "{}", a.0);
            return s;
        }
        for (i, c) in digits(a.0, d.p, d.e as usize).into_iter().enumerate() {
            if d.p > 10 && i > 0 {
                s.push('.');
            }
            let _ = write!(s, "{c}");
        }
        s
    }

    pub fn parse(&self, text: &str) -> Result<Elem> {
        let d = &*self.0;
        let bad = || Error::invalid(alloc::format!("cannot parse {text:?} as an element of {self}"));
        if d.e == 1 {
            let v: u32 = text.trim().parse().map_err(|_| bad())?;
            return if v < d.p { Ok(Elem(v)) } else { Err(bad()) };
        }
        let coeffs: Vec<u32> = if d.p > 10 {
            text.split('.').map(|t| t.parse().map_err(|_| bad())).collect::<Result<_>>()?
        } else {
            text.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_>>()?
        };
        self.from_coeffs(&coeffs).map_err(|_| bad())
    }

    pub fn element(&self, a: Elem) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }
}

impl FieldData {
    fn add_digits(&self, a: u32, b: u32) -> Elem {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.e {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        Elem(out)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let e = self.e as usize;
        let (da, db) = (digits(a, self.p, e), digits(b, self.p, e));
        let mut prod = vec![0u32; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % self.p as u64) as u32;
            }
        }
        let r = poly_rem(prod, &self.modulus, self.p);
        let mut r = r;
        r.resize(e, 0);
        undigits(&r, self.p)
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.q;
        let n = q - 1;
        let mul = |a: u32, b: u32| -> u32 {
            if self.e == 1 {
                (a as u64 * b as u64 % self.p as u64) as u32
            } else {
                self.mul_slow(a, b)
            }
        };
        let mut found = None;
        'cand: for g in 1..q {
            let mut x = 1u32;
            let mut exp = Vec::with_capacity(n as usize);
            for k in 0..n {
                if k > 0 && x == 1 {
                    continue 'cand;
                }
                exp.push(x);
                x = mul(x, g);
            }
            found = Some(exp);
            break;
        }
        let exp = found.ok_or_else(|| Error::Internal("no primitive element".into()))?;
        let mut log = vec![0u32; q as usize];
        for (k, &x) in exp.iter().enumerate() {
            log[x as usize] = k as u32;
        }
        let add = (self.e > 1 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = self.add_digits(a, b).0;
                }
            }
            t
        });
        self.exp = exp;
        self.log = log;
        self.add = add;
        Ok(())
    }
}

/// A field element that carries its field; arithmetic checks ownership.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    pub field: Field,
    pub value: Elem,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn arith(&self, other: &FieldElement, op: ArithOp) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.value, other.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(f.element(value))
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.to_text(self.value))
    }
}

/// An additive homomorphism `F_q -> F_p`, given by the images of the
/// canonical basis `1, x, ..., x^{e-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveMap {
    field: Field,
    values: Vec<u32>,
}

impl AdditiveMap {
    pub fn new(field: &Field, values: Vec<u32>) -> Result<AdditiveMap> {
        if values.len() != field.degree() as usize {
            return Err(Error::DimensionMismatch { expected: field.degree() as usize, found: values.len() });
        }
        if values.iter().any(|&v| v >= field.p()) {
            return Err(Error::invalid("additive map value outside F_p"));
        }
        Ok(AdditiveMap { field: field.clone(), values })
    }

    pub fn zero(field: &Field) -> AdditiveMap {
        AdditiveMap { field: field.clone(), values: vec![0; field.degree() as usize] }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn eval(&self, a: Elem) -> u32 {
        let p = self.field.p() as u64;
        let s = self.field.coeffs(a).iter().zip(&self.values).map(|(&c, &v)| c as u64 * v as u64).sum::<u64>();
        (s % p) as u32
    }

    /// Exhaustive additivity check over all pairs.
    pub fn is_additive(&self) -> bool {
        let f = &self.field;
        let p = f.p();
        f.elements().all(|a| f.elements().all(|b| self.eval(f.add(a, b)) == (self.eval(a) + self.eval(b)) % p))
    }
}

/// The absolute trace as an additive map. Additivity is checked exhaustively
/// for fields with at most 256 elements.
pub fn trace_map(field: &Field) -> AdditiveMap {
    let values = (0..field.degree()).map(|i| field.trace(Elem(field.p().pow(i)))).collect();
    let map = AdditiveMap { field: field.clone(), values };
    if field.order() <= 256 {
        assert!(
            map.is_additive() && field.elements().all(|a| map.eval(a) == field.trace(a)),
            "trace map is not additive on {field}"
        );
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_identity_modulus() {
        let f = Field::new(3, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 3);
    }

    #[test]
    fn f4_modulus_is_x2_x_1() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f8_modulus_is_least_cubic() {
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn cap_and_primality_errors() {
        assert_eq!(Field::new(2, 64).unwrap_err(), Error::FieldTooLarge { p: 2, e: 64 });
        assert_eq!(Field::new(2, 17).unwrap_err(), Error::FieldTooLarge { p: 2, e: 17 });
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(Field::new(2, 16).is_ok());
    }

    #[test]
    fn small_arithmetic() {
        let f3 = Field::prime(3).unwrap();
        assert_eq!(f3.add(Elem(2), Elem(2)), Elem(1));
        let f4 = Field::new(2, 2).unwrap();
        let x = f4.generator();
        assert_eq!(f4.to_text(x), "01");
        assert_eq!(f4.mul(x, x), f4.parse("11").unwrap());
        let f5 = Field::prime(5).unwrap();
        assert_eq!(f5.div(Elem(2), Elem(0)), Err(Error::DivisionByZero));
    }

    #[test]
    fn owner_mismatch_rejected() {
        let a = Field::prime(3).unwrap().element(Elem(1));
        let b = Field::prime(5).unwrap().element(Elem(1));
        assert_eq!(a.arith(&b, ArithOp::Add), Err(Error::FieldMismatch));
        let c = Field::prime(3).unwrap().element(Elem(2));
        assert_eq!(a.arith(&c, ArithOp::Add).unwrap().value, Elem(0));
    }

    #[test]
    fn trace_examples() {
        let f2 = Field::prime(2).unwrap();
        let t2 = trace_map(&f2);
        assert_eq!(t2.eval(Elem(1)), 1);
        assert_eq!(t2.eval(Elem(0)), 0);
        let f4 = Field::new(2, 2).unwrap();
        let t = trace_map(&f4);
        assert_eq!(t.eval(f4.generator()), 1);
        assert_eq!(t.eval(Elem::ONE), 0);
    }

    #[test]
    fn enumeration_order() {
        let f4 = Field::new(2, 2).unwrap();
        let texts: Vec<String> = f4.elements().map(|a| f4.to_text(a)).collect();
        assert_eq!(texts, ["00", "10", "01", "11"]);
        assert_eq!(Field::prime(3).unwrap().elements().map(|a| a.0).collect::<Vec<_>>(), [0, 1, 2]);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn text_roundtrip_large_p() {
        let f = Field::new(11, 2).unwrap();
        for a in f.elements() {
            assert_eq!(f.parse(&f.to_text(a)).unwrap(), a);
        }
    }
}
