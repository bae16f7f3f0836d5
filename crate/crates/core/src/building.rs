//! The Tits building of `GL_n(F_q)`: the order complex of proper nonzero
//! subspaces of `F_q^n`.
//!
//! A `d`-simplex is a chain `V_0 < ... < V_d` stored in increasing dimension.
//! Subspaces are indexed in the order of their canonical RREF encodings, and
//! simplices of each dimension lexicographically by their subspace indices,
//! so every boundary matrix is reproducible. The empty simplex (dimension
//! `-1`) is kept, which makes the chain complex reduced: for `n = 1` the
//! complex is empty and its top homology is the coefficient field itself.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::field::{Elem, Field};
use crate::linalg::{Matrix, Subspace};
use crate::{Error, Result};

/// Default cap on the total number of simplices.
pub const DEFAULT_SIMPLEX_CAP: u128 = 200_000;

/// A chain `0 < V_0 < ... < V_i < F^n` of proper nonzero subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    members: Vec<Subspace>,
}

impl Flag {
    pub fn new(members: Vec<Subspace>) -> Result<Flag> {
        for (k, v) in members.iter().enumerate() {
            if v.dim() == 0 || v.dim() >= v.ambient() {
                return Err(Error::invalid("flag members must be proper and nonzero"));
            }
            if k > 0 {
                let prev = &members[k - 1];
                if prev.ambient() != v.ambient() || prev.field() != v.field() {
                    return Err(Error::invalid("flag members live in different spaces"));
                }
                if prev.dim() >= v.dim() || !v.contains_subspace(prev)? {
                    return Err(Error::invalid("flag members must be strictly increasing"));
                }
            }
        }
        Ok(Flag { members })
    }

    /// `<e_1> < <e_1, e_2> < ... < <e_1, ..., e_{n-1}>`.
    pub fn standard(field: &Field, n: usize) -> Flag {
        let members = (1..n)
            .map(|k| {
                let vecs: Vec<Vec<Elem>> = (0..k)
                    .map(|i| {
                        let mut v = vec![Elem::ZERO; n];
                        v[i] = Elem::ONE;
                        v
                    })
                    .collect();
                Subspace::from_vectors(field, n, &vecs).expect("unit vectors of length n")
            })
            .collect();
        Flag { members }
    }

    pub fn members(&self) -> &[Subspace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// A complete flag of `F^n` has one member in each dimension `1..n`.
    pub fn is_complete(&self, n: usize) -> bool {
        self.members.len() + 1 == n.max(1)
            && self.members.iter().enumerate().all(|(k, v)| v.dim() == k + 1 && v.ambient() == n)
    }

    /// `g * flag`.
    pub fn act(&self, g: &Matrix) -> Result<Flag> {
        let members = self.members.iter().map(|v| v.image(g)).collect::<Result<Vec<_>>>()?;
        Ok(Flag { members })
    }
}

/// Number of `k`-dimensional subspaces of `F_q^n` (Gaussian binomial).
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// Every `k`-dimensional subspace of `F^n`, via RREF enumeration.
pub fn subspaces_of_dim(field: &Field, n: usize, k: usize) -> Vec<Subspace> {
    let mut out = Vec::new();
    let elems: Vec<Elem> = field.elements().collect();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| {
        // Free slots: (row, col) with col > piv[row] and col not a pivot.
        let slots: Vec<(usize, usize)> =
            (0..k).flat_map(|r| (piv[r] + 1..n).filter(|c| !piv.contains(c)).map(move |c| (r, c))).collect();
        let mut rows = vec![vec![Elem::ZERO; n]; k];
        for (r, &c) in piv.iter().enumerate() {
            rows[r][c] = Elem::ONE;
        }
        fill_slots(field, &elems, &slots, 0, &mut rows, n, &mut out);
    });
    out
}

fn pivot_sets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for c in start..n {
        cur.push(c);
        pivot_sets(n, k, c + 1, cur, f);
        cur.pop();
    }
}

fn fill_slots(
    field: &Field,
    elems: &[Elem],
    slots: &[(usize, usize)],
    s: usize,
    rows: &mut Vec<Vec<Elem>>,
    n: usize,
    out: &mut Vec<Subspace>,
) {
    if s == slots.len() {
        out.push(Subspace::from_vectors(field, n, rows).expect("rows of length n"));
        return;
    }
    let (r, c) = slots[s];
    for &e in elems {
        rows[r][c] = e;
        fill_slots(field, elems, slots, s + 1, rows, n, out);
    }
    rows[r][c] = Elem::ZERO;
}

/// Combinatorial structure of the building; independent of coefficients.
#[derive(Clone, Debug)]
pub struct Building {
    field: Field,
    n: usize,
    subspaces: Vec<Subspace>,
    subspace_index: BTreeMap<Vec<u32>, usize>,
    /// `simplices[d + 1]` lists the `d`-simplices; `simplices[0] = [[]]`.
    simplices: Vec<Vec<Vec<usize>>>,
    simplex_index: Vec<BTreeMap<Vec<usize>, usize>>,
}

impl Building {
    pub fn new(field: &Field, n: usize, cap: u128) -> Result<Building> {
        if n == 0 {
            return Err(Error::invalid("n must be at least 1"));
        }
        let q = field.order() as u64;
        let vertex_count: u128 = (1..n).map(|k| gaussian_binomial(n, k, q)).sum();
        // Chambers dominate: number of complete flags.
        let chamber_count: u128 =
            (1..=n).map(|k| (1..=k).map(|i| (q as u128).pow(i as u32 - 1)).sum::<u128>()).product();
        let estimate = vertex_count + chamber_count * (1u128 << (n.saturating_sub(1)).min(100));
        if estimate > cap {
            return Err(Error::cap("building simplices", estimate, cap));
        }
        let mut subspaces: Vec<Subspace> = (1..n).flat_map(|k| subspaces_of_dim(field, n, k)).collect();
        subspaces.sort_by_key(|s| s.key());
        let subspace_index: BTreeMap<Vec<u32>, usize> =
            subspaces.iter().enumerate().map(|(i, s)| (s.key(), i)).collect();
        let above: Vec<Vec<usize>> = subspaces
            .iter()
            .map(|v| {
                subspaces
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| w.dim() > v.dim() && w.contains_subspace(v).expect("same ambient"))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        let top = n.saturating_sub(1); // number of members in a chamber
        let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new(); top + 1];
        simplices[0].push(Vec::new());
        let mut chain = Vec::new();
        for v in 0..subspaces.len() {
            chain.push(v);
            extend_chains(&above, &mut chain, &mut simplices);
            chain.pop();
        }
        for list in simplices.iter_mut() {
            list.sort();
        }
        let simplex_index =
            simplices.iter().map(|list| list.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
        Ok(Building { field: field.clone(), n, subspaces, subspace_index, simplices, simplex_index })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Semisimple rank `n - 1`.
    pub fn rank(&self) -> usize {
        self.n - 1
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    pub fn subspace_index(&self, s: &Subspace) -> Option<usize> {
        self.subspace_index.get(&s.key()).copied()
    }

    /// Simplices of dimension `d >= -1`.
    pub fn simplices(&self, d: isize) -> &[Vec<usize>] {
        &self.simplices[(d + 1) as usize]
    }

    /// Simplex counts for dimensions `-1 ..= rank - 1`.
    pub fn simplex_counts(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    /// Dimension of chambers, `rank - 1`.
    pub fn chamber_dim(&self) -> isize {
        self.n as isize - 2
    }

    pub fn chambers(&self) -> &[Vec<usize>] {
        self.simplices(self.chamber_dim())
    }

    pub fn simplex_index(&self, d: isize, simplex: &[usize]) -> Option<usize> {
        self.simplex_index[(d + 1) as usize].get(simplex).copied()
    }

    pub fn chamber_flag(&self, idx: usize) -> Flag {
        let members = self.chambers()[idx].iter().map(|&v| self.subspaces[v].clone()).collect();
        Flag { members }
    }

    pub fn chamber_index(&self, flag: &Flag) -> Option<usize> {
        let ids = flag.members.iter().map(|v| self.subspace_index(v)).collect::<Option<Vec<_>>>()?;
        self.simplex_index(self.chamber_dim(), &ids)
    }

    /// Index of the standard chamber, the one stabilized by `B`.
    pub fn standard_chamber(&self) -> usize {
        self.chamber_index(&Flag::standard(&self.field, self.n)).expect("standard flag is a chamber")
    }

    fn check_element(&self, g: &Matrix) -> Result<()> {
        if g.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if g.rows() != self.n || g.cols() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: g.rows() });
        }
        Ok(())
    }

    /// Permutation of subspaces induced by `g`.
    pub fn subspace_permutation(&self, g: &Matrix) -> Result<Vec<usize>> {
        self.check_element(g)?;
        self.subspaces
            .iter()
            .map(|v| {
                let img = v.image(g)?;
                self.subspace_index(&img).ok_or(Error::Singular)
            })
            .collect()
    }

    /// Permutation of `d`-simplices induced by `g`: `sigma -> g sigma`.
    pub fn simplex_permutation(&self, g: &Matrix, d: isize) -> Result<Vec<usize>> {
        let sp = self.subspace_permutation(g)?;
        Ok(self.permute_simplices(&sp, d))
    }

    fn permute_simplices(&self, sp: &[usize], d: isize) -> Vec<usize> {
        self.simplices(d)
            .iter()
            .map(|s| {
                let img: Vec<usize> = s.iter().map(|&v| sp[v]).collect();
                self.simplex_index(d, &img).expect("image of a chain is a chain")
            })
            .collect()
    }

    /// Permutation of chambers induced by `g`.
    pub fn chamber_permutation(&self, g: &Matrix) -> Result<Vec<usize>> {
        self.simplex_permutation(g, self.chamber_dim())
    }
}

fn extend_chains(above: &[Vec<usize>], chain: &mut Vec<usize>, out: &mut Vec<Vec<Vec<usize>>>) {
    out[chain.len()].push(chain.clone());
    if chain.len() + 1 == out.len() {
        return;
    }
    let last = *chain.last().unwrap();
    for &w in &above[last] {
        chain.push(w);
        extend_chains(above, chain, out);
        chain.pop();
    }
}

/// Permutation matrix `P` with `P e_i = e_{perm[i]}` over `coeff`.
pub fn permutation_action(coeff: &Field, perm: &[usize]) -> Matrix {
    let n = perm.len();
    let mut m = Matrix::zeros(coeff, n, n);
    for (i, &pi) in perm.iter().enumerate() {
        m.set(pi, i, Elem::ONE);
    }
    m
}

/// Applies a simplex permutation to a chain vector: `(g x)[perm[i]] = x[i]`.
pub fn permute_vector(perm: &[usize], x: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; x.len()];
    for (i, &pi) in perm.iter().enumerate() {
        out[pi] = x[i];
    }
    out
}

/// A chain of a fixed degree with coefficients in the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVector {
    pub degree: isize,
    pub coeffs: Vec<Elem>,
}

/// The reduced simplicial chain complex with coefficients in `coeff`.
#[derive(Clone, Debug)]
pub struct ReducedComplex {
    building: Building,
    coeff: Field,
    /// `boundaries[d]` is `d_d : C_d -> C_{d-1}` for `d = 0 ..= rank - 1`.
    boundaries: Vec<Matrix>,
}

impl ReducedComplex {
    /// Builds the complex of `GL_n(F_q)` over `coeff`; `field` is `F_q`.
    pub fn build(field: &Field, n: usize, coeff: &Field, cap: u128) -> Result<ReducedComplex> {
        let building = Building::new(field, n, cap)?;
        Ok(ReducedComplex::over(building, coeff))
    }

    pub fn over(building: Building, coeff: &Field) -> ReducedComplex {
        let top = building.chamber_dim();
        let boundaries = (0..=top).map(|d| boundary_matrix(&building, coeff, d)).collect();
        ReducedComplex { building, coeff: coeff.clone(), boundaries }
    }

    pub fn building(&self) -> &Building {
        &self.building
    }

    pub fn coeff(&self) -> &Field {
        &self.coeff
    }

    /// `d_d` for `0 <= d <= rank - 1`.
    pub fn boundary(&self, d: isize) -> Option<&Matrix> {
        usize::try_from(d).ok().and_then(|d| self.boundaries.get(d))
    }

    pub fn top_boundary(&self) -> Option<&Matrix> {
        self.boundary(self.building.chamber_dim())
    }

    pub fn boundary_squares_vanish(&self) -> bool {
        self.boundaries.windows(2).all(|w| w[0].mul(&w[1]).expect("composable").is_zero())
    }

    /// Reduced homology dimensions for degrees `-1 ..= rank - 1`.
    pub fn homology_dims(&self) -> Vec<usize> {
        let counts = self.building.simplex_counts();
        let ranks: Vec<usize> = self.boundaries.iter().map(Matrix::rank).collect();
        (0..counts.len())
            .map(|k| {
                // degree d = k - 1; d_d = boundaries[k - 1] (none for d = -1)
                let rank_out = if k == 0 { 0 } else { ranks[k - 1] };
                let rank_in = ranks.get(k).copied().unwrap_or(0);
                counts[k] - rank_out - rank_in
            })
            .collect()
    }

    /// `ker(d_{r-1}) <= C_{r-1}`; for `n = 1` this is all of `C_{-1} = F`.
    pub fn steinberg_kernel(&self) -> Subspace {
        match self.top_boundary() {
            Some(b) => b.kernel_basis(),
            None => Subspace::full(&self.coeff, 1),
        }
    }

    pub fn chamber_count(&self) -> usize {
        self.building.chambers().len()
    }

    /// Permutation matrix of `g` on chamber chains.
    pub fn chamber_action(&self, g: &Matrix) -> Result<Matrix> {
        let perm = self.building.chamber_permutation(g)?;
        Ok(permutation_action(&self.coeff, &perm))
    }

    pub fn is_cycle(&self, x: &[Elem]) -> Result<bool> {
        match self.top_boundary() {
            Some(b) => Ok(b.apply(x)?.iter().all(|e| e.is_zero())),
            None => {
                if x.len() != 1 {
                    return Err(Error::DimensionMismatch { expected: 1, found: x.len() });
                }
                Ok(true)
            }
        }
    }
}

fn boundary_matrix(b: &Building, coeff: &Field, d: isize) -> Matrix {
    let rows = b.simplices(d - 1).len();
    let cols = b.simplices(d).len();
    let mut m = Matrix::zeros(coeff, rows, cols);
    let minus_one = coeff.neg(Elem::ONE);
    for (c, s) in b.simplices(d).iter().enumerate() {
        for j in 0..s.len() {
            let mut face = s.clone();
            face.remove(j);
            let r = b.simplex_index(d - 1, &face).expect("faces of chains are chains");
            let sign = if j % 2 == 0 { Elem::ONE } else { minus_one };
            let v = coeff.add(m.get(r, c), sign);
            m.set(r, c, v);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl2_f3_vertices_are_projective_line() {
        let f3 = Field::prime(3).unwrap();
        let c = ReducedComplex::build(&f3, 2, &f3, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.building().simplex_counts(), vec![1, 4]);
        assert_eq!(c.homology_dims(), vec![0, 3]);
        assert_eq!(c.steinberg_kernel().dim(), 3);
    }

    #[test]
    fn gl3_f2_counts() {
        let f2 = Field::prime(2).unwrap();
        let c = ReducedComplex::build(&f2, 3, &f2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.building().simplex_counts(), vec![1, 14, 21]);
        assert_eq!(c.homology_dims(), vec![0, 0, 8]);
        assert!(c.boundary_squares_vanish());
    }

    #[test]
    fn rank_zero_convention() {
        let f5 = Field::prime(5).unwrap();
        let f2 = Field::prime(2).unwrap();
        let c = ReducedComplex::build(&f5, 1, &f2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!(c.building().simplex_counts(), vec![1]);
        assert_eq!(c.homology_dims(), vec![1]);
        assert_eq!(c.steinberg_kernel().dim(), 1);
    }

    #[test]
    fn steinberg_kernel_examples() {
        let f2 = Field::prime(2).unwrap();
        let c = ReducedComplex::build(&f2, 2, &f2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!((c.steinberg_kernel().dim(), c.chamber_count()), (2, 3));
        let f5 = Field::prime(5).unwrap();
        let c = ReducedComplex::build(&f5, 2, &f2, DEFAULT_SIMPLEX_CAP).unwrap();
        assert_eq!((c.steinberg_kernel().dim(), c.chamber_count()), (5, 6));
    }

    #[test]
    fn swap_acts_on_lines() {
        let f2 = Field::prime(2).unwrap();
        let b = Building::new(&f2, 2, DEFAULT_SIMPLEX_CAP).unwrap();
        let swap = crate::matgroup::permutation_matrix(&f2, &[1, 0]);
        let perm = b.chamber_permutation(&swap).unwrap();
        let line = |v: [u32; 2]| {
            let s = Subspace::from_vectors(&f2, 2, &[vec![Elem(v[0]), Elem(v[1])]]).unwrap();
            b.chamber_index(&Flag::new(vec![s]).unwrap()).unwrap()
        };
        assert_eq!(perm[line([1, 0])], line([0, 1]));
        assert_eq!(perm[line([0, 1])], line([1, 0]));
        assert_eq!(perm[line([1, 1])], line([1, 1]));
        let id = Matrix::identity(&f2, 2);
        let c = ReducedComplex::over(b, &f2);
        assert_eq!(c.chamber_action(&id).unwrap(), Matrix::identity(&f2, 3));
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(3, 1, 2), 7);
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        let f3 = Field::prime(3).unwrap();
        assert_eq!(subspaces_of_dim(&f3, 3, 2).len(), 13);
    }

    #[test]
    fn flag_validation() {
        let f2 = Field::prime(2).unwrap();
        let full = Subspace::full(&f2, 2);
        assert!(Flag::new(vec![full]).is_err());
        let e1 = Subspace::from_vectors(&f2, 3, &[vec![Elem(1), Elem(0), Elem(0)]]).unwrap();
        let e2 = Subspace::from_vectors(&f2, 3, &[vec![Elem(0), Elem(1), Elem(0)]]).unwrap();
        assert!(Flag::new(vec![e1.clone(), e2]).is_err());
        assert!(Flag::new(vec![e1]).is_ok());
    }
}
