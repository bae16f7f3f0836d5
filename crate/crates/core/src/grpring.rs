//! Group rings `F[G]` of finite groups, left ideals, augmentation powers and
//! coinvariants.
//!
//! Elements are dense coefficient vectors indexed by the group table, so a
//! left ideal is just a [`Subspace`] of `F^{|G|}` closed under the left
//! translation matrices.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::field::{Elem, Field};
use crate::linalg::{all_vectors, spin, Matrix, QuotientMap, Subspace};
use crate::matgroup::{torus_generators, unipotent_group, FiniteGroup};
use crate::rng::SeededRng;
use crate::{Error, Result};

/// Exhaustive scans of `F[G]` run when `|F|^{|G|}` is at most this.
pub const EXHAUSTIVE_BUDGET: u128 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupRingElement {
    coeffs: Vec<Elem>,
}

impl GroupRingElement {
    pub fn from_coeffs(coeffs: Vec<Elem>) -> GroupRingElement {
        GroupRingElement { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn coeff(&self, g: usize) -> Elem {
        self.coeffs[g]
    }

    /// Nonzero `(group index, coefficient)` pairs.
    pub fn support(&self) -> impl Iterator<Item = (usize, Elem)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug)]
pub struct GroupRing {
    group: FiniteGroup,
    field: Field,
    generators: Vec<usize>,
}

impl GroupRing {
    pub fn new(group: FiniteGroup, field: &Field) -> GroupRing {
        let generators = group.small_generating_set();
        GroupRing { group, field: field.clone(), generators }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.group.order()
    }

    /// The generating set used for left-ideal closures.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn zero(&self) -> GroupRingElement {
        GroupRingElement { coeffs: vec![Elem::ZERO; self.dim()] }
    }

    /// `[g]`.
    pub fn basis(&self, g: usize) -> GroupRingElement {
        let mut x = self.zero();
        x.coeffs[g] = Elem::ONE;
        x
    }

    pub fn one(&self) -> GroupRingElement {
        self.basis(self.group.identity())
    }

    pub fn element(&self, coeffs: Vec<Elem>) -> Result<GroupRingElement> {
        if coeffs.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: coeffs.len() });
        }
        if coeffs.iter().any(|c| !self.field.contains(*c)) {
            return Err(Error::invalid("coefficient outside the field"));
        }
        Ok(GroupRingElement { coeffs })
    }

    /// `sum c_i [g_i]` from sparse terms; repeated indices accumulate.
    pub fn from_terms(&self, terms: &[(usize, Elem)]) -> Result<GroupRingElement> {
        let mut x = self.zero();
        for &(g, c) in terms {
            if g >= self.dim() {
                return Err(Error::invalid("group index out of range"));
            }
            x.coeffs[g] = self.field.add(x.coeffs[g], c);
        }
        Ok(x)
    }

    pub fn add(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let f = &self.field;
        GroupRingElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.add(x, y)).collect() }
    }

    pub fn sub(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let f = &self.field;
        GroupRingElement { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(&x, &y)| f.sub(x, y)).collect() }
    }

    pub fn scale(&self, c: Elem, a: &GroupRingElement) -> GroupRingElement {
        GroupRingElement { coeffs: a.coeffs.iter().map(|&x| self.field.mul(c, x)).collect() }
    }

    pub fn mul(&self, a: &GroupRingElement, b: &GroupRingElement) -> GroupRingElement {
        let f = &self.field;
        let mut out = self.zero();
        for (g, x) in a.support() {
            for (h, y) in b.support() {
                let gh = self.group.mul(g, h);
                out.coeffs[gh] = f.mul_add(x, y, out.coeffs[gh]);
            }
        }
        out
    }

    /// The augmentation `epsilon`: sum of coefficients.
    pub fn epsilon(&self, x: &GroupRingElement) -> Elem {
        self.field.sum(x.coeffs.iter().copied())
    }

    /// Matrix of `y -> [g] y`.
    pub fn left_translation(&self, g: usize) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(&self.field, n, n);
        for h in 0..n {
            m.set(self.group.mul(g, h), h, Elem::ONE);
        }
        m
    }

    /// Left-translation matrices of `gens`.
    pub fn regular_action(&self, gens: &[usize]) -> Vec<Matrix> {
        gens.iter().map(|&g| self.left_translation(g)).collect()
    }

    /// Matrix of `y -> y x`.
    pub fn right_multiplication(&self, x: &GroupRingElement) -> Matrix {
        let n = self.dim();
        let f = &self.field;
        let mut m = Matrix::zeros(f, n, n);
        for h in 0..n {
            for (g, c) in x.support() {
                let r = self.group.mul(h, g);
                m.set(r, h, f.add(m.get(r, h), c));
            }
        }
        m
    }

    /// Matrix of the automorphism induced by a permutation of the group.
    pub fn permutation_endomorphism(&self, perm: &[usize]) -> Matrix {
        crate::building::permutation_action(&self.field, perm)
    }

    /// Smallest left ideal containing `gens` and stable under `extra`.
    pub fn ideal_closure(&self, gens: &[GroupRingElement], extra: &[Matrix]) -> Result<LeftIdeal> {
        let mut ops = self.regular_action(&self.generators);
        ops.extend(extra.iter().cloned());
        let seeds: Vec<Vec<Elem>> = gens.iter().map(|g| g.coeffs.clone()).collect();
        let space = spin(&self.field, self.dim(), &seeds, &ops)?;
        Ok(LeftIdeal { space })
    }

    /// `ker epsilon`, spanned by `[g] - [1]`.
    pub fn augmentation_ideal(&self) -> Subspace {
        let one = self.one();
        let vecs: Vec<Vec<Elem>> = self
            .group
            .elements()
            .filter(|&g| g != self.group.identity())
            .map(|g| self.sub(&self.basis(g), &one).coeffs)
            .collect();
        Subspace::from_vectors(&self.field, self.dim(), &vecs).expect("vectors of length |G|")
    }

    /// Powers `I, I^2, ...` of the augmentation ideal until they vanish or
    /// stop shrinking.
    pub fn aug_nilpotency(&self) -> Nilpotency {
        let base = self.augmentation_ideal();
        let base_vecs: Vec<GroupRingElement> = base.vectors().into_iter().map(GroupRingElement::from_coeffs).collect();
        let mut dims = vec![base.dim()];
        let mut current = base;
        while current.dim() > 0 {
            let prods: Vec<Vec<Elem>> = current
                .vectors()
                .into_iter()
                .flat_map(|a| {
                    let a = GroupRingElement::from_coeffs(a);
                    base_vecs.iter().map(move |b| (a.clone(), b)).collect::<Vec<_>>()
                })
                .map(|(a, b)| self.mul(&a, b).coeffs)
                .collect();
            let next = Subspace::from_vectors(&self.field, self.dim(), &prods).expect("products of length |G|");
            if next.dim() == current.dim() {
                return Nilpotency::NotNilpotent { stable_dim: next.dim(), dims };
            }
            dims.push(next.dim());
            current = next;
        }
        Nilpotency::Nilpotent { index: dims.len(), dims }
    }

    /// Dimension of the left ideal `F[G] x`.
    pub fn principal_ideal_dim(&self, x: &GroupRingElement) -> usize {
        self.right_multiplication(x).rank()
    }

    /// Checks that every `x` with `epsilon(x) != 0` generates `F[G]` as a left
    /// ideal: exhaustively when `|F|^{|G|} <= 2^16`, else on `samples` seeded
    /// draws.
    pub fn unique_maximal_check(&self, rng: &mut SeededRng, samples: usize) -> UniqueMaxReport {
        let total = (self.field.order() as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX);
        let exhaustive = total <= EXHAUSTIVE_BUDGET;
        let mut checked = 0u64;
        let mut counterexample = None;
        let mut test = |x: Vec<Elem>| {
            let x = GroupRingElement::from_coeffs(x);
            if self.epsilon(&x).is_zero() {
                return true;
            }
            checked += 1;
            if self.principal_ideal_dim(&x) != self.dim() {
                counterexample = Some(x);
                return false;
            }
            true
        };
        if exhaustive {
            for x in all_vectors(&self.field, self.dim()) {
                if !test(x) {
                    break;
                }
            }
        } else {
            for _ in 0..samples {
                let x = random_vector(&self.field, self.dim(), rng);
                if !test(x) {
                    break;
                }
            }
        }
        UniqueMaxReport { holds: counterexample.is_none(), exhaustive, checked, counterexample }
    }
}

pub(crate) fn random_vector(field: &Field, dim: usize, rng: &mut SeededRng) -> Vec<Elem> {
    (0..dim).map(|_| Elem(rng.random_range(0..field.order()))).collect()
}

/// A left ideal, held as a subspace of `F^{|G|}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftIdeal {
    space: Subspace,
}

impl LeftIdeal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn contains(&self, x: &GroupRingElement) -> bool {
        self.space.contains(&x.coeffs).unwrap_or(false)
    }

    pub fn is_proper(&self) -> bool {
        self.space.dim() < self.space.ambient()
    }

    /// Some element of the ideal has nonzero augmentation.
    pub fn meets_complement_of_augmentation(&self, ring: &GroupRing) -> bool {
        self.space.vectors().into_iter().any(|v| !ring.epsilon(&GroupRingElement::from_coeffs(v)).is_zero())
    }

    /// Closure under left translation by all of `G` and under `extra`.
    pub fn verify(&self, ring: &GroupRing, extra: &[Matrix]) -> Result<bool> {
        for g in ring.group().elements() {
            if !self.space.is_invariant(&ring.left_translation(g))? {
                return Ok(false);
            }
        }
        for m in extra {
            if !self.space.is_invariant(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    /// `I^index = 0` and `I^{index-1} != 0`; `dims[k]` is `dim I^{k+1}`.
    Nilpotent { index: usize, dims: Vec<usize> },
    /// The powers stabilize at a nonzero ideal.
    NotNilpotent { stable_dim: usize, dims: Vec<usize> },
}

impl Nilpotency {
    pub fn index(&self) -> Option<usize> {
        match self {
            Nilpotency::Nilpotent { index, .. } => Some(*index),
            Nilpotency::NotNilpotent { .. } => None,
        }
    }

    pub fn dims(&self) -> &[usize] {
        match self {
            Nilpotency::Nilpotent { dims, .. } | Nilpotency::NotNilpotent { dims, .. } => dims,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniqueMaxReport {
    pub holds: bool,
    pub exhaustive: bool,
    /// Number of `epsilon != 0` elements tested.
    pub checked: u64,
    pub counterexample: Option<GroupRingElement>,
}

/// A proper `T`-stable left ideal of `F_l[U_n(F_q)]` meeting the complement
/// of the augmentation ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub generator: GroupRingElement,
    pub epsilon: Elem,
    pub ideal: LeftIdeal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleSearch {
    pub exhaustive: bool,
    /// Generators with `epsilon != 0` examined.
    pub checked: u64,
    pub found: Option<Counterexample>,
}

/// `F_l[U_n(F_q)]` together with the `T(F_q)`-conjugation automorphisms.
pub fn unipotent_group_ring(field_q: &Field, n: usize, coeff: &Field, cap: u128) -> Result<(GroupRing, Vec<Matrix>)> {
    let u = unipotent_group(field_q, n, cap)?;
    let ring = GroupRing::new(u.cayley_table()?, coeff);
    let extra = torus_generators(field_q, n)
        .iter()
        .map(|t| Ok(ring.permutation_endomorphism(&u.conjugation_permutation(&t.matrix())?)))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring, extra))
}

/// Searches single-generator `T`-stable left ideals of `F_l[U_n(F_q)]` for
/// a proper one containing an element of nonzero augmentation. Generators
/// run in counter order (exhaustive when `l^{|U|} <= 2^16`, else `samples`
/// seeded draws). Any such ideal contains a cyclic one, so the exhaustive
/// search settles existence.
pub fn t_stable_counterexample(
    field_q: &Field,
    n: usize,
    coeff: &Field,
    rng: &mut SeededRng,
    samples: usize,
    cap: u128,
) -> Result<CounterexampleSearch> {
    let (ring, extra) = unipotent_group_ring(field_q, n, coeff, cap)?;
    let total = (coeff.order() as u128).checked_pow(ring.dim() as u32).unwrap_or(u128::MAX);
    let exhaustive = total <= EXHAUSTIVE_BUDGET;
    let mut checked = 0u64;
    let mut try_one = |x: Vec<Elem>| -> Result<Option<Counterexample>> {
        let x = GroupRingElement::from_coeffs(x);
        let eps = ring.epsilon(&x);
        if eps.is_zero() {
            return Ok(None);
        }
        checked += 1;
        let ideal = ring.ideal_closure(core::slice::from_ref(&x), &extra)?;
        if !ideal.is_proper() {
            return Ok(None);
        }
        if !ideal.verify(&ring, &extra)? || !ideal.contains(&x) {
            return Err(Error::Internal("ideal closure failed verification".into()));
        }
        Ok(Some(Counterexample { generator: x, epsilon: eps, ideal }))
    };
    let mut found = None;
    if exhaustive {
        for x in all_vectors(coeff, ring.dim()) {
            if let Some(c) = try_one(x)? {
                found = Some(c);
                break;
            }
        }
    } else {
        for _ in 0..samples {
            let x = random_vector(coeff, ring.dim(), rng);
            if let Some(c) = try_one(x)? {
                found = Some(c);
                break;
            }
        }
    }
    Ok(CounterexampleSearch { exhaustive, checked, found })
}

/// The coinvariant quotient `M_H = M / span{h m - m}` for `H` generated by
/// the given action matrices.
#[derive(Clone, Debug)]
pub struct Coinvariants {
    relations: Subspace,
    map: QuotientMap,
}

impl Coinvariants {
    pub fn relations(&self) -> &Subspace {
        &self.relations
    }

    pub fn dim(&self) -> usize {
        self.map.target_dim()
    }

    pub fn map(&self) -> &QuotientMap {
        &self.map
    }

    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        self.map.apply(v)
    }
}

pub fn coinvariants(field: &Field, dim: usize, action: &[Matrix]) -> Result<Coinvariants> {
    let mut rels = Vec::new();
    for h in action {
        if h.rows() != dim || h.cols() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: h.rows() });
        }
        let d = h.sub(&Matrix::identity(field, dim))?;
        rels.extend(d.transpose().row_vectors());
    }
    let relations = Subspace::from_vectors(field, dim, &rels)?;
    let map = relations.quotient_map();
    Ok(Coinvariants { relations, map })
}

/// Subgroups of index `p` in an elementary abelian `p`-group, sorted.
pub fn index_p_subgroups(group: &FiniteGroup, p: usize) -> Vec<Vec<usize>> {
    let order = group.order();
    if order < p || !order.is_multiple_of(p) {
        return Vec::new();
    }
    let target = order / p;
    let mut k = 0;
    let mut m = 1;
    while m < target {
        m *= p;
        k += 1;
    }
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let total = order.pow(k as u32);
    for mut idx in 0..total {
        let mut gens = Vec::with_capacity(k);
        for _ in 0..k {
            gens.push(idx % order);
            idx /= order;
        }
        let h = group.generated(&gens);
        if h.len() == target {
            found.insert(h);
        }
    }
    found.into_iter().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvWitness {
    /// Sorted element indices of `H`.
    pub subgroup: Vec<usize>,
    /// `[G : H]`, either `1` or `p`.
    pub index: usize,
    /// Image of `m` in `M_H`.
    pub image: Vec<Elem>,
}

/// Finds `H <= G` of index 1 or `p` with `m` nonzero in `M_H`. `rho[g]` is
/// the action of group element `g`.
pub fn abelian_coinv_witness(group: &FiniteGroup, rho: &[Matrix], m: &[Elem]) -> Result<CoinvWitness> {
    if rho.len() != group.order() {
        return Err(Error::DimensionMismatch { expected: group.order(), found: rho.len() });
    }
    if m.iter().all(|e| e.is_zero()) {
        return Err(Error::invalid("m must be nonzero"));
    }
    let exp = group.exponent(&group.all());
    let p = exp;
    let elementary = crate::field::is_prime(p as u64)
        && (0..group.order()).all(|a| (0..group.order()).all(|b| group.mul(a, b) == group.mul(b, a)));
    if !elementary && group.order() > 1 {
        return Err(Error::invalid("group must be elementary abelian"));
    }
    let field = rho.first().map(|r| r.field().clone()).ok_or_else(|| Error::invalid("empty action"))?;
    if group.order() > 1 && field.p() as usize == p {
        return Err(Error::invalid("coefficient characteristic must differ from p"));
    }
    let dim = m.len();
    let mut candidates = vec![group.all()];
    if group.order() > 1 {
        candidates.extend(index_p_subgroups(group, p));
    }
    for h in candidates {
        let action: Vec<Matrix> = h.iter().map(|&g| rho[g].clone()).collect();
        let co = coinvariants(&field, dim, &action)?;
        let image = co.apply(m)?;
        if image.iter().any(|e| !e.is_zero()) {
            let index = group.order() / h.len();
            return Ok(CoinvWitness { subgroup: h, index, image });
        }
    }
    Err(Error::Internal("no coinvariant witness among index 1 and p subgroups".into()))
}

/// The permutation module `F[G/K]`: `rho[g]` for every `g`.
pub fn permutation_module(group: &FiniteGroup, subgroup: &[usize], field: &Field) -> Vec<Matrix> {
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for g in group.elements() {
        let mut c: Vec<usize> = subgroup.iter().map(|&k| group.mul(g, k)).collect();
        c.sort_unstable();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    let idx = |x: usize| cosets.iter().position(|c| c.binary_search(&x).is_ok()).expect("cosets cover G");
    group
        .elements()
        .map(|g| {
            let perm: Vec<usize> = cosets.iter().map(|c| idx(group.mul(g, c[0]))).collect();
            crate::building::permutation_action(field, &perm)
        })
        .collect()
}

/// A random representation of `group` of dimension at most `max_dim`: a sum
/// of permutation modules on cosets of random cyclic subgroups, conjugated by
/// a random invertible matrix.
pub fn random_module(group: &FiniteGroup, field: &Field, max_dim: usize, rng: &mut SeededRng) -> Result<Vec<Matrix>> {
    let order = group.order();
    let mut blocks: Vec<Vec<Matrix>> = Vec::new();
    let mut dim = 0;
    loop {
        let k = group.generated(&[rng.random_range(0..order)]);
        let size = order / k.len();
        if dim + size > max_dim {
            if dim > 0 {
                break;
            }
            continue;
        }
        blocks.push(permutation_module(group, &k, field));
        dim += size;
        if rng.random_bool(0.4) {
            break;
        }
    }
    let p = loop {
        let cand = Matrix::from_fn(field, dim, dim, |_, _| Elem(rng.random_range(0..field.order())));
        if !cand.determinant()?.is_zero() {
            break cand;
        }
    };
    let pi = p.inverse()?;
    (0..order)
        .map(|g| {
            let mut m = Matrix::zeros(field, dim, dim);
            let mut off = 0;
            for b in &blocks {
                let s = b[g].rows();
                for r in 0..s {
                    for c in 0..s {
                        m.set(off + r, off + c, b[g].get(r, c));
                    }
                }
                off += s;
            }
            p.mul(&m)?.mul(&pi)
        })
        .collect()
}
