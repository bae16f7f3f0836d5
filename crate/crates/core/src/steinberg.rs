//! The Steinberg module `St(GL_n(F_q); F)` as the top homology of the
//! building, with its apartment basis.
//!
//! The basis is `{u A_0 : u in U(F_q)}`, indexed by the sorted elements of
//! `U`, so `iota` (coordinates in this basis) lands in the group ring
//! `F[U(F_q)]` and the `B`-coefficient of `x` equals `epsilon(iota(x))`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::building::{permute_vector, Flag, ReducedComplex};
use crate::field::{Elem, Field};
use crate::grpring::{random_vector, GroupRing, GroupRingElement};
use crate::linalg::{all_vectors, projective_points, spin, Matrix, Subspace};
use crate::matgroup::{flag_to_standard, gl_generators, torus_generators, unipotent_group, FiniteSubgroup, GlElement};
use crate::rng::SeededRng;
use crate::{Error, Result};

/// Irreducibility is decided by spinning every vector when `|F|^dim` is at
/// most this.
pub const EXHAUSTIVE_SPIN_BUDGET: u128 = 1 << 20;

/// Largest module dimension accepted by [`SteinbergModule::is_irreducible`].
pub const IRREDUCIBILITY_DIM_CAP: usize = 256;

/// `n` lines spanning `F_q^n`, in canonical order: by pivot column, then by
/// RREF encoding. For the standard frame this is `<e_1>, ..., <e_n>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    lines: Vec<Subspace>,
}

impl Frame {
    pub fn new(mut lines: Vec<Subspace>) -> Result<Frame> {
        let n = lines.first().map(Subspace::ambient).unwrap_or(0);
        if lines.len() != n || n == 0 {
            return Err(Error::invalid("a frame has exactly n lines"));
        }
        if lines.iter().any(|l| l.dim() != 1 || l.ambient() != n) {
            return Err(Error::invalid("frame members must be lines in the same space"));
        }
        let span = lines.iter().skip(1).try_fold(lines[0].clone(), |acc, l| acc.join(l))?;
        if span.dim() != n {
            return Err(Error::invalid("frame lines do not span"));
        }
        lines.sort_by(|a, b| (a.pivots()[0], a.key()).cmp(&(b.pivots()[0], b.key())));
        Ok(Frame { lines })
    }

    pub fn standard(field: &Field, n: usize) -> Frame {
        let lines = (0..n)
            .map(|i| {
                let mut v = vec![Elem::ZERO; n];
                v[i] = Elem::ONE;
                Subspace::from_vectors(field, n, &[v]).expect("unit vector")
            })
            .collect();
        Frame { lines }
    }

    pub fn lines(&self) -> &[Subspace] {
        &self.lines
    }
}

/// Sign of a permutation given as an image list.
pub fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut k = s;
        while !seen[k] {
            seen[k] = true;
            k = perm[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// The apartment class of a frame: `sum_sigma sign(sigma) [flag of partial
/// spans of the lines in order sigma]`.
pub fn apartment_class(complex: &ReducedComplex, frame: &Frame) -> Result<Vec<Elem>> {
    let b = complex.building();
    let n = b.n();
    if frame.lines.len() != n || frame.lines[0].field() != b.field() {
        return Err(Error::invalid("frame does not live in the building's space"));
    }
    let coeff = complex.coeff();
    let mut x = vec![Elem::ZERO; b.chambers().len()];
    for sigma in permutations(n) {
        let mut members = Vec::with_capacity(n.saturating_sub(1));
        let mut acc = Subspace::zero(b.field(), n);
        for &k in sigma.iter().take(n.saturating_sub(1)) {
            acc = acc.join(&frame.lines[k])?;
            members.push(acc.clone());
        }
        let c = b
            .chamber_index(&Flag::new(members)?)
            .ok_or_else(|| Error::Internal("partial spans are not a chamber".into()))?;
        let s = if permutation_sign(&sigma) > 0 { Elem::ONE } else { coeff.neg(Elem::ONE) };
        x[c] = coeff.add(x[c], s);
    }
    Ok(x)
}

/// `St(GL_n(F_q); F)` with its apartment basis.
#[derive(Clone, Debug)]
pub struct SteinbergModule {
    complex: ReducedComplex,
    unipotent: FiniteSubgroup,
    ring: GroupRing,
    /// Columns are `u A_0` in sorted-`U` order.
    apartment: Matrix,
    pivot_rows: Vec<usize>,
    pivot_inverse: Matrix,
    standard_chamber: usize,
    group_generators: Vec<Matrix>,
    action: Vec<Matrix>,
}

impl SteinbergModule {
    pub fn build(field_q: &Field, n: usize, coeff: &Field, cap: u128) -> Result<SteinbergModule> {
        let complex = ReducedComplex::build(field_q, n, coeff, cap)?;
        SteinbergModule::from_complex(complex, cap)
    }

    pub fn from_complex(complex: ReducedComplex, cap: u128) -> Result<SteinbergModule> {
        let b = complex.building();
        let (field_q, n, coeff) = (b.field().clone(), b.n(), complex.coeff().clone());
        let unipotent = unipotent_group(&field_q, n, cap)?;
        let ring = GroupRing::new(unipotent.cayley_table()?, &coeff);
        let a0 = apartment_class(&complex, &Frame::standard(&field_q, n))?;
        let chambers = complex.chamber_count();
        let d = unipotent.order();
        let mut apartment = Matrix::zeros(&coeff, chambers, d);
        for (k, u) in unipotent.elements().iter().enumerate() {
            let perm = b.chamber_permutation(u)?;
            for (r, e) in permute_vector(&perm, &a0).into_iter().enumerate() {
                apartment.set(r, k, e);
            }
        }
        if let Some(top) = complex.top_boundary() {
            if !top.mul(&apartment)?.is_zero() {
                return Err(Error::Internal("apartment class is not a cycle".into()));
            }
        }
        let kernel_dim = complex.steinberg_kernel().dim();
        let mut at = apartment.transpose();
        let pivot_rows = at.rref_in_place();
        if pivot_rows.len() != d || kernel_dim != d {
            return Err(Error::Internal(format!(
                "apartment images have rank {} against |U| = {d} and kernel dimension {kernel_dim}",
                pivot_rows.len()
            )));
        }
        let square = Matrix::from_fn(&coeff, d, d, |r, c| apartment.get(pivot_rows[r], c));
        let pivot_inverse = square.inverse()?;
        let standard_chamber = b.standard_chamber();
        let group_generators = gl_generators(&field_q, n);
        let mut module = SteinbergModule {
            complex,
            unipotent,
            ring,
            apartment,
            pivot_rows,
            pivot_inverse,
            standard_chamber,
            group_generators,
            action: Vec::new(),
        };
        module.action =
            module.group_generators.iter().map(|g| module.representation_matrix(g)).collect::<Result<Vec<_>>>()?;
        Ok(module)
    }

    pub fn complex(&self) -> &ReducedComplex {
        &self.complex
    }

    pub fn field(&self) -> &Field {
        self.complex.coeff()
    }

    pub fn n(&self) -> usize {
        self.complex.building().n()
    }

    pub fn dim(&self) -> usize {
        self.unipotent.order()
    }

    pub fn unipotent(&self) -> &FiniteSubgroup {
        &self.unipotent
    }

    /// `F[U(F_q)]`, indexed like [`Self::unipotent`].
    pub fn group_ring(&self) -> &GroupRing {
        &self.ring
    }

    pub fn apartment_matrix(&self) -> &Matrix {
        &self.apartment
    }

    pub fn standard_chamber(&self) -> usize {
        self.standard_chamber
    }

    /// `A_0`.
    pub fn a0(&self) -> Vec<Elem> {
        self.apartment.column(self.unipotent.index_of(&Matrix::identity(self.unipotent.field(), self.n())).unwrap())
    }

    /// `alpha(u) = u A_0`.
    pub fn alpha(&self, u: &Matrix) -> Result<Vec<Elem>> {
        let k = self.unipotent.index_of(u).ok_or_else(|| Error::invalid("not an element of U(F_q)"))?;
        Ok(self.apartment.column(k))
    }

    /// The coefficient of `x` on the standard chamber.
    pub fn b_coefficient(&self, x: &[Elem]) -> Elem {
        x[self.standard_chamber]
    }

    /// Coordinates of a cycle in the apartment basis. Checks that
    /// `epsilon(iota(x))` equals the `B`-coefficient.
    pub fn iota(&self, x: &[Elem]) -> Result<GroupRingElement> {
        if x.len() != self.complex.chamber_count() {
            return Err(Error::DimensionMismatch { expected: self.complex.chamber_count(), found: x.len() });
        }
        if !self.complex.is_cycle(x)? {
            return Err(Error::NotACycle);
        }
        let restricted: Vec<Elem> = self.pivot_rows.iter().map(|&r| x[r]).collect();
        let c = self.pivot_inverse.apply(&restricted)?;
        if self.apartment.apply(&c)? != x {
            return Err(Error::Internal("cycle outside the apartment span".into()));
        }
        let c = GroupRingElement::from_coeffs(c);
        if self.ring.epsilon(&c) != self.b_coefficient(x) {
            return Err(Error::Internal("augmentation differs from the B-coefficient".into()));
        }
        Ok(c)
    }

    /// `iota^{-1}`: the cycle with coordinates `c`.
    pub fn iota_inverse(&self, c: &GroupRingElement) -> Result<Vec<Elem>> {
        self.apartment.apply(c.coeffs())
    }

    /// `g x` on chamber chains.
    pub fn act(&self, g: &Matrix, x: &[Elem]) -> Result<Vec<Elem>> {
        let perm = self.complex.building().chamber_permutation(g)?;
        Ok(permute_vector(&perm, x))
    }

    /// Matrix of `g` in `iota` coordinates.
    pub fn representation_matrix(&self, g: &Matrix) -> Result<Matrix> {
        let perm = self.complex.building().chamber_permutation(g)?;
        let d = self.dim();
        let mut m = Matrix::zeros(self.field(), d, d);
        for k in 0..d {
            let y = permute_vector(&perm, &self.apartment.column(k));
            let c = self.iota(&y)?;
            for (r, e) in c.coeffs().iter().enumerate() {
                m.set(r, k, *e);
            }
        }
        Ok(m)
    }

    /// Generators of `GL_n(F_q)` behind [`Self::action`].
    pub fn group_generators(&self) -> &[Matrix] {
        &self.group_generators
    }

    /// Action matrices of [`Self::group_generators`] in `iota` coordinates.
    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Permutations of `U`-indices by conjugation with the torus generators.
    pub fn torus_conjugations(&self) -> Result<Vec<Vec<usize>>> {
        torus_generators(self.unipotent.field(), self.n())
            .iter()
            .map(|t| self.unipotent.conjugation_permutation(&t.matrix()))
            .collect()
    }

    /// For `x != 0`, a `g` with `epsilon(iota(g x)) != 0`. Takes the
    /// standard chamber if it is in the support of `x`, else the first chamber
    /// of the support, and moves it to the standard one.
    pub fn gate(&self, x: &[Elem]) -> Result<Gate> {
        let chamber = if x.get(self.standard_chamber).is_some_and(|e| !e.is_zero()) {
            self.standard_chamber
        } else {
            x.iter().position(|e| !e.is_zero()).ok_or_else(|| Error::invalid("x must be nonzero"))?
        };
        let b = self.complex.building();
        let g = flag_to_standard(&b.chamber_flag(chamber), b.field(), b.n())?;
        let gx = self.act(g.matrix(), x)?;
        let value = self.ring.epsilon(&self.iota(&gx)?);
        if value.is_zero() || value != x[chamber] {
            return Err(Error::Internal("gate value differs from the chamber coefficient".into()));
        }
        Ok(Gate { g, chamber, value })
    }

    /// Submodule generated by `seeds`, in `iota` coordinates.
    pub fn spin(&self, seeds: &[Vec<Elem>]) -> Result<Subspace> {
        spin(self.field(), self.dim(), seeds, &self.action)
    }

    pub fn is_invariant(&self, s: &Subspace) -> Result<bool> {
        for m in &self.action {
            if !s.is_invariant(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Decides irreducibility. Exhaustive spinning when `|F|^dim <= 2^20`
    /// (the witness is then a smallest cyclic submodule, first in canonical
    /// order); Norton's criterion with `rng` otherwise.
    pub fn is_irreducible(&self, rng: &mut SeededRng) -> Result<Irreducibility> {
        irreducibility(self.field(), self.dim(), &self.action, rng)
    }
}

/// Result of [`SteinbergModule::gate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gate {
    pub g: GlElement,
    /// The chamber moved to the standard chamber.
    pub chamber: usize,
    /// `epsilon(iota(g x))`.
    pub value: Elem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Every projective point was spun; `vectors` counts them.
    ExhaustiveSpin { vectors: u64 },
    /// Norton's test succeeded for the algebra element built on `attempt`.
    Norton { attempt: u32, nullity: usize, kernel_vectors: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Irreducibility {
    pub dim: usize,
    pub irreducible: bool,
    /// A proper nonzero invariant subspace when reducible.
    pub witness: Option<Subspace>,
    pub certificate: Certificate,
}

const NORTON_ATTEMPTS: u32 = 200;
const NORTON_KERNEL_BUDGET: u128 = 1 << 12;

/// Irreducibility of the module given by `gens` acting on `F^dim`.
pub fn irreducibility(field: &Field, dim: usize, gens: &[Matrix], rng: &mut SeededRng) -> Result<Irreducibility> {
    if dim > IRREDUCIBILITY_DIM_CAP {
        return Err(Error::cap("module dimension", dim as u128, IRREDUCIBILITY_DIM_CAP as u128));
    }
    let total = (field.order() as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if total <= EXHAUSTIVE_SPIN_BUDGET {
        let mut best: Option<Subspace> = None;
        let mut vectors = 0u64;
        for v in projective_points(field, dim) {
            vectors += 1;
            let s = spin(field, dim, &[v], gens)?;
            if s.dim() < dim && best.as_ref().is_none_or(|b| s.dim() < b.dim()) {
                let one = s.dim() == 1;
                best = Some(s);
                if one {
                    break;
                }
            }
        }
        return Ok(Irreducibility {
            dim,
            irreducible: best.is_none(),
            witness: best,
            certificate: Certificate::ExhaustiveSpin { vectors },
        });
    }
    norton(field, dim, gens, rng)
}

fn random_algebra_element(field: &Field, dim: usize, gens: &[Matrix], rng: &mut SeededRng) -> Result<Matrix> {
    let mut words: Vec<Matrix> = gens.to_vec();
    for _ in 0..gens.len().max(2) {
        let a = &words[rng.random_range(0..words.len())];
        let b = &gens[rng.random_range(0..gens.len())];
        let p = a.mul(b)?;
        words.push(p);
    }
    let mut theta = Matrix::zeros(field, dim, dim);
    for w in &words {
        let c = Elem(rng.random_range(0..field.order()));
        theta = theta.add(&w.scale(c))?;
    }
    Ok(theta)
}

fn norton(field: &Field, dim: usize, gens: &[Matrix], rng: &mut SeededRng) -> Result<Irreducibility> {
    if gens.is_empty() {
        let witness = (dim > 1).then(|| {
            let mut v = vec![Elem::ZERO; dim];
            v[0] = Elem::ONE;
            Subspace::from_vectors(field, dim, &[v]).expect("unit vector")
        });
        return Ok(Irreducibility {
            dim,
            irreducible: dim <= 1,
            witness,
            certificate: Certificate::Norton { attempt: 0, nullity: 0, kernel_vectors: 0 },
        });
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    for attempt in 0..NORTON_ATTEMPTS {
        let theta = random_algebra_element(field, dim, gens, rng)?;
        let ker = theta.kernel_basis();
        let nullity = ker.dim();
        let budget = (field.order() as u128).checked_pow(nullity as u32).unwrap_or(u128::MAX);
        if nullity == 0 || budget > NORTON_KERNEL_BUDGET {
            continue;
        }
        let mut kernel_vectors = 0u64;
        for c in projective_points(field, nullity) {
            kernel_vectors += 1;
            let v = ker.combine(&c);
            let s = spin(field, dim, &[v], gens)?;
            if s.dim() < dim {
                return Ok(Irreducibility {
                    dim,
                    irreducible: false,
                    witness: Some(s),
                    certificate: Certificate::Norton { attempt, nullity, kernel_vectors },
                });
            }
        }
        let kt = theta.transpose().kernel_basis();
        let w = kt.vectors().into_iter().next().expect("transpose has equal nullity");
        let s = spin(field, dim, &[w], &transposed)?;
        if s.dim() < dim {
            return Ok(Irreducibility {
                dim,
                irreducible: false,
                witness: Some(s.annihilator()),
                certificate: Certificate::Norton { attempt, nullity, kernel_vectors },
            });
        }
        return Ok(Irreducibility {
            dim,
            irreducible: true,
            witness: None,
            certificate: Certificate::Norton { attempt, nullity, kernel_vectors },
        });
    }
    Err(Error::Internal("Norton test found no algebra element with small kernel".into()))
}

/// Random nonzero kernel vectors, for sampled property checks.
pub fn random_cycle(module: &SteinbergModule, rng: &mut SeededRng) -> Result<Vec<Elem>> {
    loop {
        let c = random_vector(module.field(), module.dim(), rng);
        if c.iter().any(|e| !e.is_zero()) {
            return module.iota_inverse(&GroupRingElement::from_coeffs(c));
        }
    }
}

/// Every nonzero cycle, when `|F|^dim` fits `budget`.
pub fn all_cycles(module: &SteinbergModule, budget: u128) -> Result<Vec<Vec<Elem>>> {
    let total = (module.field().order() as u128).checked_pow(module.dim() as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::cap("Steinberg vectors", total, budget));
    }
    all_vectors(module.field(), module.dim())
        .filter(|c| c.iter().any(|e| !e.is_zero()))
        .map(|c| module.iota_inverse(&GroupRingElement::from_coeffs(c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::DEFAULT_SIMPLEX_CAP;
    use crate::matgroup::{elementary, permutation_matrix};
    use crate::rng::seeded;

    fn module(q: u64, n: usize, l: u64) -> SteinbergModule {
        SteinbergModule::build(&Field::prime(q).unwrap(), n, &Field::prime(l).unwrap(), DEFAULT_SIMPLEX_CAP).unwrap()
    }

    fn line(f: &Field, v: &[u32]) -> Subspace {
        Subspace::from_vectors(f, v.len(), &[v.iter().map(|&x| Elem(x)).collect()]).unwrap()
    }

    fn chamber_of(m: &SteinbergModule, v: &[u32]) -> usize {
        let f = m.complex().building().field().clone();
        m.complex().building().chamber_index(&Flag::new(vec![line(&f, v)]).unwrap()).unwrap()
    }

    #[test]
    fn gl2_standard_apartment() {
        let m = module(3, 2, 3);
        let a0 = m.a0();
        let mut expect = vec![Elem::ZERO; 4];
        expect[chamber_of(&m, &[1, 0])] = Elem(1);
        expect[chamber_of(&m, &[0, 1])] = Elem(2);
        assert_eq!(a0, expect);
        assert_eq!(m.iota(&a0).unwrap(), m.group_ring().one());
    }

    #[test]
    fn alpha_of_elementary_matrix() {
        let m = module(3, 2, 3);
        let f3 = Field::prime(3).unwrap();
        let x = m.alpha(&elementary(&f3, 2, 0, 1, Elem(1))).unwrap();
        assert_eq!(x[chamber_of(&m, &[1, 0])], Elem(1));
        assert_eq!(x[chamber_of(&m, &[1, 1])], Elem(2));
        assert_eq!(m.b_coefficient(&x), Elem(1));
    }

    #[test]
    fn degenerate_frame_rejected() {
        let f2 = Field::prime(2).unwrap();
        assert!(Frame::new(vec![line(&f2, &[1, 0]), line(&f2, &[1, 0])]).is_err());
    }

    #[test]
    fn gl3_apartment_is_a_six_term_cycle() {
        let m = module(2, 3, 2);
        let a0 = m.a0();
        assert_eq!(a0.iter().filter(|e| !e.is_zero()).count(), 6);
        assert!(m.complex().is_cycle(&a0).unwrap());
        assert_eq!(m.dim(), 8);
    }

    #[test]
    fn gate_examples() {
        let m = module(2, 2, 2);
        let g = m.gate(&m.a0()).unwrap();
        assert_eq!(g.value, Elem::ONE);
        assert_eq!(g.g.matrix(), &Matrix::identity(&Field::prime(2).unwrap(), 2));
        let mut x = vec![Elem::ZERO; 3];
        x[chamber_of(&m, &[0, 1])] = Elem(1);
        x[chamber_of(&m, &[1, 1])] = Elem(1);
        let g = m.gate(&x).unwrap();
        assert_eq!(g.g.matrix(), &permutation_matrix(&Field::prime(2).unwrap(), &[1, 0]));
        assert_eq!(g.value, Elem::ONE);
        let m = module(3, 2, 2);
        for x in all_cycles(&m, 1 << 16).unwrap() {
            assert!(!m.gate(&x).unwrap().value.is_zero());
        }
    }

    #[test]
    fn irreducibility_examples() {
        let mut rng = seeded(0);
        let m = module(2, 2, 3);
        let r = m.is_irreducible(&mut rng).unwrap();
        assert!(!r.irreducible);
        let w = r.witness.unwrap();
        assert_eq!(w.dim(), 1);
        assert!(m.is_invariant(&w).unwrap());
        // The witness is the span of the sum of all chambers.
        let v = m.iota_inverse(&GroupRingElement::from_coeffs(w.vectors()[0].clone())).unwrap();
        assert!(v.iter().all(|&e| e == v[0]));
        assert!(module(3, 2, 3).is_irreducible(&mut rng).unwrap().irreducible);
        let r = module(3, 2, 2).is_irreducible(&mut rng).unwrap();
        assert_eq!((r.irreducible, r.witness.map(|w| w.dim())), (false, Some(1)));
    }

    #[test]
    fn spin_examples() {
        let m = module(2, 2, 3);
        assert_eq!(m.spin(&[vec![Elem::ZERO; 2]]).unwrap().dim(), 0);
        let a0 = m.iota(&m.a0()).unwrap();
        assert_eq!(m.spin(&[a0.into_coeffs()]).unwrap().dim(), 2);
        let all = m.iota(&[Elem(1); 3]).unwrap();
        assert_eq!(m.spin(&[all.into_coeffs()]).unwrap().dim(), 1);
    }

    #[test]
    fn norton_agrees_with_exhaustive() {
        let mut rng = seeded(3);
        for (q, l) in [(2, 3), (3, 3), (3, 2), (5, 7)] {
            let m = module(q, 2, l);
            let ex = m.is_irreducible(&mut rng).unwrap();
            let no = norton(m.field(), m.dim(), m.action(), &mut rng).unwrap();
            assert_eq!(ex.irreducible, no.irreducible, "q={q} l={l}");
            if let Some(w) = no.witness {
                assert!(w.dim() > 0 && w.dim() < m.dim() && m.is_invariant(&w).unwrap());
            }
        }
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
