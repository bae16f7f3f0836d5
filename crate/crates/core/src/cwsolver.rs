//! Polynomials over finite fields, A-polynomials `lambda o phi`, and
//! Chevalley–Warning zero search.
//!
//! An infinite additive subgroup of `k` is replaced throughout by an
//! `F_p`-subspace of `F_q`; each operation states how many independent
//! elements it consumes.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{AdditiveMap, Elem, Field};
use crate::linalg::{all_vectors, Matrix, Subspace};
use crate::matgroup::{
    monoid_act, root_factorize, subgroup_closure, FiniteSubgroup, OneParamSubgroup, UnipotentElement,
};
use crate::{Error, Result};

/// Default cap on `p^m` for exhaustive scans.
pub const DEFAULT_SCAN_CAP: u128 = 10_000_000;

/// Pointwise verification of [`substitute_linear`] runs up to this many points.
pub const SUBSTITUTE_CHECK_LIMIT: u128 = 100_000;

/// A polynomial in `nvars` variables over `field`, in sparse form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyOverF {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Elem>,
}

impl PolyOverF {
    pub fn zero(field: &Field, nvars: usize) -> PolyOverF {
        PolyOverF { field: field.clone(), nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: &Field, nvars: usize, c: Elem) -> PolyOverF {
        PolyOverF::monomial(field, vec![0; nvars], c)
    }

    pub fn monomial(field: &Field, exps: Vec<u32>, c: Elem) -> PolyOverF {
        let mut p = PolyOverF::zero(field, exps.len());
        p.accumulate(exps, c);
        p
    }

    /// `x_i` (0-based).
    pub fn var(field: &Field, nvars: usize, i: usize) -> PolyOverF {
        let mut e = vec![0; nvars];
        e[i] = 1;
        PolyOverF::monomial(field, e, Elem::ONE)
    }

    /// Builds from `(exponents, coefficient)` terms; repeats accumulate.
    pub fn from_terms(field: &Field, nvars: usize, terms: &[(Vec<u32>, Elem)]) -> Result<PolyOverF> {
        let mut p = PolyOverF::zero(field, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: e.len() });
            }
            if !field.contains(*c) {
                return Err(Error::invalid("coefficient outside the field"));
            }
            p.accumulate(e.clone(), *c);
        }
        Ok(p)
    }

    fn accumulate(&mut self, e: Vec<u32>, c: Elem) {
        let f = self.field.clone();
        let v = self.terms.entry(e.clone()).or_insert(Elem::ZERO);
        *v = f.add(*v, c);
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Elem> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &PolyOverF) -> PolyOverF {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: Elem) -> PolyOverF {
        let mut out = PolyOverF::zero(&self.field, self.nvars);
        for (e, &v) in &self.terms {
            out.accumulate(e.clone(), self.field.mul(c, v));
        }
        out
    }

    pub fn mul(&self, other: &PolyOverF) -> PolyOverF {
        let mut out = PolyOverF::zero(&self.field, self.nvars);
        for (a, &x) in &self.terms {
            for (b, &y) in &other.terms {
                let e = a.iter().zip(b).map(|(p, q)| p + q).collect();
                out.accumulate(e, self.field.mul(x, y));
            }
        }
        out
    }

    /// Reduces exponents with `x^p = x`, valid for functions on `F_p^n`.
    pub fn reduce_prime_exponents(&self) -> PolyOverF {
        let p = self.field.p();
        let mut out = PolyOverF::zero(&self.field, self.nvars);
        for (e, &c) in &self.terms {
            let r = e.iter().map(|&k| if k == 0 { 0 } else { (k - 1) % (p - 1) + 1 }).collect();
            out.accumulate(r, c);
        }
        out
    }

    pub fn eval(&self, point: &[Elem]) -> Elem {
        let f = &self.field;
        let mut total = Elem::ZERO;
        for (e, &c) in &self.terms {
            let t = e.iter().zip(point).fold(c, |acc, (&k, &x)| f.mul(acc, f.pow(x, k as u64)));
            total = f.add(total, t);
        }
        total
    }
}

/// `lambda o phi` with `phi` a polynomial over `F_q` and `lambda` additive
/// onto `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct APolynomial {
    phi: PolyOverF,
    lambda: AdditiveMap,
}

impl APolynomial {
    pub fn new(phi: PolyOverF, lambda: AdditiveMap) -> Result<APolynomial> {
        if phi.field() != lambda.field() {
            return Err(Error::FieldMismatch);
        }
        if lambda.field().order() <= 256 && !lambda.is_additive() {
            return Err(Error::invalid("lambda is not additive"));
        }
        Ok(APolynomial { phi, lambda })
    }

    pub fn phi(&self) -> &PolyOverF {
        &self.phi
    }

    pub fn lambda(&self) -> &AdditiveMap {
        &self.lambda
    }

    pub fn field(&self) -> &Field {
        self.phi.field()
    }

    pub fn degree(&self) -> u32 {
        self.phi.degree()
    }

    /// Value in `F_p`, as an integer in `0..p`.
    pub fn eval(&self, point: &[Elem]) -> u32 {
        self.lambda.eval(self.phi.eval(point))
    }

    /// Value at a unipotent matrix, with `phi` read in root coordinates.
    pub fn eval_on_unipotent(&self, u: &UnipotentElement) -> u32 {
        self.eval(&root_factorize(u).values)
    }
}

/// An `F_p`-subspace of `F_q`, held in coefficient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveSubgroup {
    field: Field,
    space: Subspace,
}

impl AdditiveSubgroup {
    pub fn from_elements(field: &Field, elems: &[Elem]) -> Result<AdditiveSubgroup> {
        let fp = field.prime_subfield();
        let vecs: Vec<Vec<Elem>> = elems
            .iter()
            .map(|&a| {
                if !field.contains(a) {
                    return Err(Error::invalid("element outside the field"));
                }
                Ok(field.coeffs(a).into_iter().map(Elem).collect())
            })
            .collect::<Result<_>>()?;
        let space = Subspace::from_vectors(&fp, field.degree() as usize, &vecs)?;
        Ok(AdditiveSubgroup { field: field.clone(), space })
    }

    pub fn zero(field: &Field) -> AdditiveSubgroup {
        AdditiveSubgroup {
            field: field.clone(),
            space: Subspace::zero(&field.prime_subfield(), field.degree() as usize),
        }
    }

    pub fn full(field: &Field) -> AdditiveSubgroup {
        AdditiveSubgroup {
            field: field.clone(),
            space: Subspace::full(&field.prime_subfield(), field.degree() as usize),
        }
    }

    /// `F_p` inside `F_q`.
    pub fn prime_field(field: &Field) -> AdditiveSubgroup {
        AdditiveSubgroup::from_elements(field, &[Elem::ONE]).expect("1 lies in the field")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn order(&self) -> u64 {
        (self.field.p() as u64).pow(self.dim() as u32)
    }

    /// The canonical (RREF) basis as field elements.
    pub fn basis(&self) -> Vec<Elem> {
        self.space
            .vectors()
            .iter()
            .map(|v| self.field.from_coeffs(&v.iter().map(|e| e.0).collect::<Vec<_>>()).expect("coefficients in F_p"))
            .collect()
    }

    /// All elements, sorted by field index.
    pub fn elements(&self) -> Vec<Elem> {
        let basis = self.basis();
        let fp = self.field.prime_subfield();
        let mut out: Vec<Elem> = all_vectors(&fp, basis.len())
            .map(|c| {
                c.iter().zip(&basis).fold(Elem::ZERO, |acc, (&x, &b)| self.field.add(acc, self.field.scale(x.0, b)))
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn contains(&self, a: Elem) -> bool {
        let v: Vec<Elem> = self.field.coeffs(a).into_iter().map(Elem).collect();
        self.space.contains(&v).unwrap_or(false)
    }

    /// `self + F_p d`.
    pub fn extend(&self, d: Elem) -> AdditiveSubgroup {
        let mut b = self.basis();
        b.push(d);
        AdditiveSubgroup::from_elements(&self.field, &b).expect("elements of the field")
    }
}

/// Whether `vs` are linearly independent over `F_p`.
pub fn prime_independent(field: &Field, vs: &[Elem]) -> bool {
    AdditiveSubgroup::from_elements(field, vs).map(|s| s.dim() == vs.len()).unwrap_or(false)
}

/// `h(x_1, ..., x_m) = f(sum_j x_j v_j)` as a polynomial over `F_p`, for a
/// univariate `phi`. Expands `phi(sum x_j v_j)` over `F_q`, reduces exponents
/// with `x^p = x` and applies `lambda` coefficientwise (it is `F_p`-linear).
/// The result is checked against direct evaluation when `p^m <= 10^5`.
pub fn substitute_linear(f: &APolynomial, vs: &[Elem]) -> Result<PolyOverF> {
    let field = f.field();
    if f.phi().nvars() != 1 {
        return Err(Error::invalid("phi must be univariate"));
    }
    if !prime_independent(field, vs) {
        return Err(Error::invalid("v_j must be linearly independent over F_p"));
    }
    let m = vs.len();
    let linear = vs
        .iter()
        .enumerate()
        .fold(PolyOverF::zero(field, m), |acc, (j, &v)| acc.add(&PolyOverF::var(field, m, j).scale(v)));
    let deg = f.phi().degree();
    let mut powers = vec![PolyOverF::constant(field, m, Elem::ONE)];
    for _ in 0..deg {
        let next = powers.last().unwrap().mul(&linear).reduce_prime_exponents();
        powers.push(next);
    }
    let mut hq = PolyOverF::zero(field, m);
    for (e, &c) in f.phi().terms() {
        hq = hq.add(&powers[e[0] as usize].scale(c));
    }
    let fp = field.prime_subfield();
    let mut h = PolyOverF::zero(&fp, m);
    for (e, &c) in hq.terms() {
        h.accumulate(e.clone(), Elem(f.lambda().eval(c)));
    }
    if h.degree() > deg {
        return Err(Error::Internal("substituted polynomial exceeds the degree bound".into()));
    }
    if (fp.order() as u128).pow(m as u32) <= SUBSTITUTE_CHECK_LIMIT {
        for x in all_vectors(&fp, m) {
            let a = x.iter().zip(vs).fold(Elem::ZERO, |acc, (&c, &v)| field.add(acc, field.scale(c.0, v)));
            if h.eval(&x).0 != f.eval(&[a]) {
                return Err(Error::Internal("substituted polynomial disagrees with direct evaluation".into()));
            }
        }
    }
    Ok(h)
}

fn check_system(polys: &[PolyOverF], m: usize, cap: u128) -> Result<Field> {
    let field = match polys.first() {
        Some(p) => p.field().clone(),
        None => return Err(Error::invalid("at least one polynomial is required")),
    };
    if !field.is_prime_field() {
        return Err(Error::invalid("Chevalley-Warning scans need a prime field"));
    }
    for p in polys {
        if p.field() != &field {
            return Err(Error::FieldMismatch);
        }
        if p.nvars() != m {
            return Err(Error::DimensionMismatch { expected: m, found: p.nvars() });
        }
    }
    let size = (field.order() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if size > cap {
        return Err(Error::cap("Chevalley-Warning scan", size, cap));
    }
    Ok(field)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CwSolution {
    pub point: Vec<Elem>,
    /// Points evaluated, counting the returned one.
    pub scanned: u64,
}

/// First nonzero common zero in counter order. Requires `sum deg f_i < m`
/// and `f_i(0) = 0`, under which Chevalley–Warning guarantees one.
pub fn cw_solve(polys: &[PolyOverF], m: usize, cap: u128) -> Result<CwSolution> {
    let field = check_system(polys, m, cap)?;
    let total_deg: u32 = polys.iter().map(PolyOverF::degree).sum();
    if total_deg as usize >= m {
        return Err(Error::invalid("degree sum must be below the variable count"));
    }
    let origin = vec![Elem::ZERO; m];
    if polys.iter().any(|p| !p.eval(&origin).is_zero()) {
        return Err(Error::invalid("every polynomial must vanish at the origin"));
    }
    for (i, x) in all_vectors(&field, m).skip(1).enumerate() {
        if polys.iter().all(|p| p.eval(&x).is_zero()) {
            return Ok(CwSolution { point: x, scanned: i as u64 + 1 });
        }
    }
    Err(Error::Internal("no nonzero common zero despite the degree bound".into()))
}

/// Number of common zeros in `F_p^m`, the origin included.
pub fn count_common_zeros(polys: &[PolyOverF], m: usize, cap: u128) -> Result<u64> {
    let field = check_system(polys, m, cap)?;
    Ok(all_vectors(&field, m).filter(|x| polys.iter().all(|p| p.eval(x).is_zero())).count() as u64)
}

/// A nonzero `a` in `subgroup` with `f_i(a) = 0` for all `i`, from the first
/// `m = 1 + sum deg phi_i` basis elements of `subgroup`.
pub fn find_apoly_zero(fs: &[APolynomial], subgroup: &AdditiveSubgroup, cap: u128) -> Result<Elem> {
    let field = subgroup.field();
    if fs.iter().any(|f| f.field() != field) {
        return Err(Error::FieldMismatch);
    }
    if fs.iter().any(|f| f.eval(&[Elem::ZERO]) != 0) {
        return Err(Error::invalid("every f_i must vanish at 0"));
    }
    let m = 1 + fs.iter().map(|f| f.degree() as usize).sum::<usize>();
    if subgroup.dim() < m {
        return Err(Error::invalid(alloc::format!(
            "additive subgroup has dimension {} over F_p but {m} independent elements are needed",
            subgroup.dim()
        )));
    }
    let vs: Vec<Elem> = subgroup.basis().into_iter().take(m).collect();
    let hs = fs.iter().map(|f| substitute_linear(f, &vs)).collect::<Result<Vec<_>>>()?;
    let x = if hs.is_empty() {
        let mut p = vec![Elem::ZERO; m];
        p[0] = Elem::ONE;
        p
    } else {
        cw_solve(&hs, m, cap)?.point
    };
    let a = x.iter().zip(&vs).fold(Elem::ZERO, |acc, (&c, &v)| field.add(acc, field.scale(c.0, v)));
    if a.is_zero() || !subgroup.contains(a) || fs.iter().any(|f| f.eval(&[a]) != 0) {
        return Err(Error::Internal("A-polynomial zero failed verification".into()));
    }
    Ok(a)
}

/// `U(S, a)`: the subgroup generated by `a . s` for `s` in `S`, `a` in the
/// additive subgroup, under the monoid action of `gamma`.
pub fn usa_group(
    field: &Field,
    n: usize,
    s: &[UnipotentElement],
    subgroup: &AdditiveSubgroup,
    gamma: &OneParamSubgroup,
    cap: u128,
) -> Result<FiniteSubgroup> {
    let mut gens: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for u in s {
        if u.field() != field || u.n() != n {
            return Err(Error::invalid("S must lie in U_n over the given field"));
        }
        for a in subgroup.elements() {
            gens.insert(monoid_act(a, u, gamma)?.matrix().data().to_vec());
        }
    }
    let mats = gens.into_iter().map(|d| Matrix::from_data(field, n, n, d)).collect::<Result<Vec<_>>>()?;
    subgroup_closure(field, n, &mats, cap)
}

fn vanishes_on(f: &APolynomial, g: &FiniteSubgroup) -> Result<bool> {
    for m in g.elements() {
        if f.eval_on_unipotent(&UnipotentElement::new(m)?) != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    pub d: Elem,
    pub subgroup: AdditiveSubgroup,
    /// `|U(S, c + F_p d)|`.
    pub group_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendOutcome {
    /// `|U(S, c)|`.
    pub base_order: usize,
    /// Candidates tested.
    pub tried: usize,
    pub found: Option<Extension>,
}

/// One extension step `c -> c + F_p d`: the first `d` of `pool` (by field
/// index, nonzero, outside `c`) such that `f` vanishes on all of
/// `U(S, c + F_p d)`, checked by evaluating `f` on every element.
pub fn vanishing_extend(
    s: &[UnipotentElement],
    f: &APolynomial,
    c: &AdditiveSubgroup,
    pool: &AdditiveSubgroup,
    gamma: &OneParamSubgroup,
    cap: u128,
) -> Result<ExtendOutcome> {
    let field = c.field().clone();
    let n = gamma.0.len();
    let base = usa_group(&field, n, s, c, gamma, cap)?;
    if !vanishes_on(f, &base)? {
        return Err(Error::invalid("f does not vanish on U(S, c)"));
    }
    let mut tried = 0;
    for d in pool.elements() {
        if d.is_zero() || c.contains(d) {
            continue;
        }
        tried += 1;
        let b = c.extend(d);
        let g = usa_group(&field, n, s, &b, gamma, cap)?;
        if vanishes_on(f, &g)? {
            return Ok(ExtendOutcome {
                base_order: base.order(),
                tried,
                found: Some(Extension { d, subgroup: b, group_order: g.order() }),
            });
        }
    }
    Ok(ExtendOutcome { base_order: base.order(), tried, found: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::trace_map;
    use crate::matgroup::{one_param_positive, DEFAULT_GROUP_CAP};

    fn poly(f: &Field, nvars: usize, terms: &[(&[u32], u32)]) -> PolyOverF {
        let t: Vec<(Vec<u32>, Elem)> = terms.iter().map(|(e, c)| (e.to_vec(), Elem(*c))).collect();
        PolyOverF::from_terms(f, nvars, &t).unwrap()
    }

    #[test]
    fn cw_examples() {
        let f2 = Field::prime(2).unwrap();
        let p = poly(&f2, 4, &[(&[1, 1, 0, 0], 1), (&[0, 0, 1, 1], 1)]);
        assert_eq!(cw_solve(&[p], 4, DEFAULT_SCAN_CAP).unwrap().point, vec![Elem(1), Elem(0), Elem(0), Elem(0)]);
        let f3 = Field::prime(3).unwrap();
        let p = poly(&f3, 3, &[(&[2, 0, 0], 1), (&[0, 1, 1], 1)]);
        let x = cw_solve(std::slice::from_ref(&p), 3, DEFAULT_SCAN_CAP).unwrap().point;
        assert!(p.eval(&x).is_zero() && x.iter().any(|e| !e.is_zero()));
        assert_eq!(count_common_zeros(&[p], 3, DEFAULT_SCAN_CAP).unwrap() % 3, 0);
    }

    #[test]
    fn cw_preconditions() {
        let f2 = Field::prime(2).unwrap();
        let p = poly(&f2, 2, &[(&[1, 1], 1)]);
        assert!(cw_solve(&[p], 2, DEFAULT_SCAN_CAP).is_err());
        let p = poly(&f2, 3, &[(&[0, 0, 0], 1), (&[1, 0, 0], 1)]);
        assert!(cw_solve(&[p], 3, DEFAULT_SCAN_CAP).is_err());
        let p = poly(&f2, 30, &[]);
        assert!(matches!(cw_solve(&[p], 30, DEFAULT_SCAN_CAP), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn substitute_trace_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let x = f4.generator();
        let sq = APolynomial::new(poly(&f4, 1, &[(&[2], 1)]), trace_map(&f4)).unwrap();
        let h = substitute_linear(&sq, &[Elem::ONE, x]).unwrap();
        assert_eq!(h, PolyOverF::var(&f4.prime_subfield(), 2, 1));
        let lin = APolynomial::new(poly(&f4, 1, &[(&[1], 1)]), trace_map(&f4)).unwrap();
        assert_eq!(substitute_linear(&lin, &[Elem::ONE, x]).unwrap(), h);
        let zero = APolynomial::new(PolyOverF::zero(&f4, 1), trace_map(&f4)).unwrap();
        assert!(substitute_linear(&zero, &[Elem::ONE, x]).unwrap().is_zero());
        assert!(substitute_linear(&lin, &[Elem::ONE, Elem::ONE]).is_err());
    }

    #[test]
    fn apoly_zero_examples() {
        let f4 = Field::new(2, 2).unwrap();
        let lin = APolynomial::new(poly(&f4, 1, &[(&[1], 1)]), trace_map(&f4)).unwrap();
        let a = find_apoly_zero(&[lin], &AdditiveSubgroup::full(&f4), DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(f4.trace(a), 0);
        assert!(!a.is_zero());
        let f8 = Field::new(2, 3).unwrap();
        let sq = APolynomial::new(poly(&f8, 1, &[(&[2], 1), (&[1], 2)]), trace_map(&f8)).unwrap();
        let full = AdditiveSubgroup::full(&f8);
        let a = find_apoly_zero(std::slice::from_ref(&sq), &full, DEFAULT_SCAN_CAP).unwrap();
        assert_eq!(sq.eval(&[a]), 0);
        let small = AdditiveSubgroup::prime_field(&f8);
        assert!(find_apoly_zero(&[sq], &small, DEFAULT_SCAN_CAP).is_err());
    }

    #[test]
    fn usa_examples() {
        let gamma = one_param_positive(2);
        let f3 = Field::prime(3).unwrap();
        let s = [UnipotentElement::elementary(&f3, 2, 0, 1, Elem::ONE).unwrap()];
        let zero = AdditiveSubgroup::zero(&f3);
        assert_eq!(usa_group(&f3, 2, &s, &zero, &gamma, DEFAULT_GROUP_CAP).unwrap().order(), 1);
        let all = AdditiveSubgroup::prime_field(&f3);
        assert_eq!(usa_group(&f3, 2, &s, &all, &gamma, DEFAULT_GROUP_CAP).unwrap().order(), 3);
        let f4 = Field::new(2, 2).unwrap();
        let s = [UnipotentElement::elementary(&f4, 2, 0, 1, f4.generator()).unwrap()];
        let g = usa_group(&f4, 2, &s, &AdditiveSubgroup::prime_field(&f4), &gamma, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn extend_examples() {
        let gamma = one_param_positive(2);
        let f8 = Field::new(2, 3).unwrap();
        let s = [UnipotentElement::elementary(&f8, 2, 0, 1, Elem::ONE).unwrap()];
        let tr = APolynomial::new(poly(&f8, 1, &[(&[1], 1)]), trace_map(&f8)).unwrap();
        let zero = AdditiveSubgroup::zero(&f8);
        let full = AdditiveSubgroup::full(&f8);
        let out = vanishing_extend(&s, &tr, &zero, &full, &gamma, DEFAULT_GROUP_CAP).unwrap();
        let d = out.found.unwrap().d;
        let first_kernel = f8.nonzero_elements().find(|&a| f8.trace(a) == 0).unwrap();
        assert_eq!(d, first_kernel);
        let f0 = APolynomial::new(PolyOverF::zero(&f8, 1), trace_map(&f8)).unwrap();
        let out = vanishing_extend(&s, &f0, &zero, &full, &gamma, DEFAULT_GROUP_CAP).unwrap();
        assert_eq!(out.found.unwrap().d, Elem::ONE);
    }
}
