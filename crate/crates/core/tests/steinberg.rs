use proptest::prelude::*;
use rand::Rng;
use steinberg_core::building::{permutation_action, Flag, ReducedComplex, DEFAULT_SIMPLEX_CAP};
use steinberg_core::grpring::GroupRingElement;
use steinberg_core::matgroup::{enumerate_group, GroupKind, DEFAULT_GROUP_CAP};
use steinberg_core::rng::seeded;
use steinberg_core::steinberg::{random_cycle, SteinbergModule};
use steinberg_core::{Elem, Field, Matrix};

const CASES: [(u64, usize); 3] = [(2, 2), (3, 2), (2, 3)];

fn module(q: u64, n: usize, l: u64) -> SteinbergModule {
    SteinbergModule::build(&Field::prime(q).unwrap(), n, &Field::prime(l).unwrap(), DEFAULT_SIMPLEX_CAP).unwrap()
}

fn gl(q: u64, n: usize) -> Vec<Matrix> {
    enumerate_group(GroupKind::General, &Field::prime(q).unwrap(), n, DEFAULT_GROUP_CAP).unwrap()
}

#[test]
fn boundary_squares_and_equivariance() {
    for (q, n) in CASES {
        let c = ReducedComplex::build(&Field::prime(q).unwrap(), n, &Field::prime(3).unwrap(), DEFAULT_SIMPLEX_CAP)
            .unwrap();
        assert!(c.boundary_squares_vanish());
        let b = c.building();
        let group = gl(q, n);
        for g in group.iter().step_by(7) {
            for d in 0..=b.chamber_dim() {
                let top = permutation_action(c.coeff(), &b.simplex_permutation(g, d).unwrap());
                let low = permutation_action(c.coeff(), &b.simplex_permutation(g, d - 1).unwrap());
                let del = c.boundary(d).unwrap();
                assert_eq!(del.mul(&top).unwrap(), low.mul(del).unwrap());
            }
        }
    }
}

#[test]
fn chamber_action_is_functorial() {
    let f = Field::prime(2).unwrap();
    let c = ReducedComplex::build(&f, 3, &f, DEFAULT_SIMPLEX_CAP).unwrap();
    let b = c.building();
    let group = gl(2, 3);
    let mut rng = seeded(11);
    for _ in 0..20 {
        let g = &group[rng.random_range(0..group.len())];
        let h = &group[rng.random_range(0..group.len())];
        let pg = b.chamber_permutation(g).unwrap();
        let ph = b.chamber_permutation(h).unwrap();
        let pgh = b.chamber_permutation(&g.mul(h).unwrap()).unwrap();
        for i in 0..pgh.len() {
            assert_eq!(pgh[i], pg[ph[i]]);
        }
        for (k, &target) in pg.iter().enumerate() {
            let moved = b.chamber_flag(k).act(g).unwrap();
            assert_eq!(b.chamber_index(&moved), Some(target));
        }
    }
}

#[test]
fn kernel_dimension_is_coefficient_independent() {
    for (q, n, expect) in [(2u64, 2usize, 2usize), (3, 2, 3), (5, 2, 5), (2, 3, 8)] {
        for l in [2, 3, 5, 7] {
            let c = ReducedComplex::build(&Field::prime(q).unwrap(), n, &Field::prime(l).unwrap(), DEFAULT_SIMPLEX_CAP)
                .unwrap();
            let h = c.homology_dims();
            assert_eq!(*h.last().unwrap(), expect, "q={q} n={n} l={l}");
            assert!(h[..h.len() - 1].iter().all(|&d| d == 0));
            assert_eq!(c.steinberg_kernel().dim(), expect);
        }
    }
}

/// Coefficient of `x` on the chamber of the standard flag, located by flag lookup.
fn standard_coefficient(m: &SteinbergModule, x: &[Elem]) -> Elem {
    let b = m.complex().building();
    x[b.chamber_index(&Flag::standard(b.field(), b.n())).unwrap()]
}

fn augmentation(f: &Field, c: &GroupRingElement) -> Elem {
    c.coeffs().iter().fold(Elem::ZERO, |acc, &e| f.add(acc, e))
}

#[test]
fn lemma_2_1_and_iota_roundtrip() {
    for (q, n) in CASES {
        for l in [2, 3, 5] {
            let m = module(q, n, l);
            let f = m.field().clone();
            let mut rng = seeded(q * 100 + n as u64 * 10 + l);
            let mut xs: Vec<Vec<Elem>> = m.complex().steinberg_kernel().vectors();
            for _ in 0..100 {
                xs.push(random_cycle(&m, &mut rng).unwrap());
            }
            for x in &xs {
                let c = m.iota(x).unwrap();
                assert_eq!(augmentation(&f, &c), standard_coefficient(&m, x));
                assert_eq!(&m.iota_inverse(&c).unwrap(), x);
            }
            for k in 0..m.dim() {
                let c = m.group_ring().basis(k);
                assert_eq!(m.iota(&m.iota_inverse(&c).unwrap()).unwrap(), c);
            }
        }
    }
}

#[test]
fn iota_intertwines_unipotent_and_torus_actions() {
    for (q, n) in CASES {
        let m = module(q, n, if q == 2 { 3 } else { 2 });
        let ring = m.group_ring();
        let u_elems = m.unipotent().elements();
        let torus = enumerate_group(GroupKind::Torus, m.unipotent().field(), n, DEFAULT_GROUP_CAP).unwrap();
        for k in 0..m.dim() {
            let x = m.iota_inverse(&ring.basis(k)).unwrap();
            let c = m.iota(&x).unwrap();
            for (i, u) in u_elems.iter().enumerate() {
                let lhs = m.iota(&m.act(u, &x).unwrap()).unwrap();
                assert_eq!(lhs, ring.mul(&ring.basis(i), &c));
            }
            for t in &torus {
                let tinv = t.inverse().unwrap();
                let lhs = m.iota(&m.act(t, &x).unwrap()).unwrap();
                for (i, u) in u_elems.iter().enumerate() {
                    let conj = t.mul(u).unwrap().mul(&tinv).unwrap();
                    let j = m.unipotent().index_of(&conj).unwrap();
                    assert_eq!(lhs.coeff(j), c.coeff(i));
                }
            }
        }
    }
}

#[test]
fn witnesses_are_t_stable_left_ideals() {
    for (q, l) in [(2u64, 3u64), (3, 2), (5, 2), (5, 3)] {
        let m = module(q, 2, l);
        let verdict = m.is_irreducible(&mut seeded(0)).unwrap();
        assert!(!verdict.irreducible);
        let w = verdict.witness.unwrap();
        assert!(w.dim() > 0 && w.dim() < m.dim());
        assert!(m.is_invariant(&w).unwrap());
        let ring = m.group_ring();
        let perms = m.torus_conjugations().unwrap();
        for v in w.vectors() {
            let c = GroupRingElement::from_coeffs(v);
            for g in 0..ring.dim() {
                assert!(w.contains(ring.mul(&ring.basis(g), &c).coeffs()).unwrap());
            }
            for p in &perms {
                let mut moved = vec![Elem::ZERO; ring.dim()];
                for (i, &e) in c.coeffs().iter().enumerate() {
                    moved[p[i]] = e;
                }
                assert!(w.contains(&moved).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn gate_moves_support_onto_b(case in 0usize..3, l in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let (q, n) = CASES[case];
        let m = module(q, n, l);
        let x = random_cycle(&m, &mut seeded(seed)).unwrap();
        let gate = m.gate(&x).unwrap();
        let gx = m.act(gate.g.matrix(), &x).unwrap();
        let eps = augmentation(m.field(), &m.iota(&gx).unwrap());
        prop_assert!(!eps.is_zero());
        prop_assert_eq!(eps, gate.value);
    }
}
