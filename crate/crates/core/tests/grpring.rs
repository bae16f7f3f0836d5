use proptest::prelude::*;
use steinberg_core::grpring::{
    abelian_coinv_witness, coinvariants, random_module, unipotent_group_ring, GroupRing, GroupRingElement, Nilpotency,
};
use steinberg_core::linalg::all_vectors;
use steinberg_core::matgroup::{unipotent_group, FiniteGroup, DEFAULT_GROUP_CAP};
use steinberg_core::rng::seeded;
use steinberg_core::{Elem, Field, Matrix, Subspace};

fn u3f2() -> FiniteGroup {
    unipotent_group(&Field::prime(2).unwrap(), 3, DEFAULT_GROUP_CAP).unwrap().cayley_table().unwrap()
}

/// `p`-groups of order at most 8 with their Loewy lengths over `F_p`.
fn p_groups() -> Vec<(&'static str, FiniteGroup, u64, usize)> {
    let c = FiniteGroup::cyclic;
    vec![
        ("C2", c(2), 2, 2),
        ("C4", c(4), 2, 4),
        ("C8", c(8), 2, 8),
        ("C2xC2", FiniteGroup::elementary_abelian(2, 2), 2, 3),
        ("C4xC2", FiniteGroup::direct_product(&c(4), &c(2)), 2, 5),
        ("C2^3", FiniteGroup::elementary_abelian(2, 3), 2, 4),
        ("D8", u3f2(), 2, 5),
        ("C3", c(3), 3, 3),
    ]
}

#[test]
fn augmentation_ideal_is_nilpotent_with_loewy_length() {
    for (name, g, p, loewy) in p_groups() {
        let ring = GroupRing::new(g, &Field::prime(p).unwrap());
        match ring.aug_nilpotency() {
            Nilpotency::Nilpotent { index, dims } => {
                assert_eq!(index, loewy, "{name}");
                assert!(index <= ring.dim());
                assert!(dims.windows(2).all(|w| w[0] > w[1]));
            }
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn cross_characteristic_is_not_nilpotent() {
    let ring = GroupRing::new(FiniteGroup::cyclic(2), &Field::prime(3).unwrap());
    assert!(matches!(ring.aug_nilpotency(), Nilpotency::NotNilpotent { stable_dim: 1, .. }));
    let ring = GroupRing::new(FiniteGroup::cyclic(3), &Field::prime(2).unwrap());
    assert!(ring.aug_nilpotency().index().is_none());
}

/// Left inverse found by exhaustive search.
fn has_left_inverse(ring: &GroupRing, x: &GroupRingElement) -> bool {
    let one = ring.one();
    all_vectors(ring.field(), ring.dim()).any(|y| ring.mul(&GroupRingElement::from_coeffs(y), x) == one)
}

#[test]
fn nonzero_augmentation_generates_unit_ideal() {
    for (name, g, p, _) in p_groups() {
        let ring = GroupRing::new(g, &Field::prime(p).unwrap());
        let report = ring.unique_maximal_check(&mut seeded(0), 0);
        assert!(report.exhaustive && report.holds, "{name}");
        if ring.dim() <= 4 {
            for x in all_vectors(ring.field(), ring.dim()) {
                let x = GroupRingElement::from_coeffs(x);
                assert_eq!(has_left_inverse(&ring, &x), !ring.epsilon(&x).is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn cross_characteristic_has_proper_ideal_off_augmentation() {
    let ring = GroupRing::new(FiniteGroup::cyclic(2), &Field::prime(3).unwrap());
    let report = ring.unique_maximal_check(&mut seeded(0), 0);
    assert!(!report.holds);
    let x = report.counterexample.unwrap();
    assert!(!ring.epsilon(&x).is_zero());
    assert!(!has_left_inverse(&ring, &x));
}

fn random_element(ring: &GroupRing, seed: u64) -> GroupRingElement {
    let mut s = seed;
    let q = ring.field().order() as u64;
    GroupRingElement::from_coeffs(
        (0..ring.dim())
            .map(|_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                Elem(((s >> 33) % q) as u32)
            })
            .collect(),
    )
}

fn block_diag(f: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    let (n, m) = (a.rows(), b.rows());
    Matrix::from_fn(f, n + m, n + m, |r, c| match (r < n, c < n) {
        (true, true) => a.get(r, c),
        (false, false) => b.get(r - n, c - n),
        _ => Elem::ZERO,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_monotone_and_idempotent(l in prop::sample::select(vec![2u64, 3]), s1 in any::<u64>(), s2 in any::<u64>()) {
        let (ring, extra) = unipotent_group_ring(&Field::prime(3).unwrap(), 2, &Field::prime(l).unwrap(), DEFAULT_GROUP_CAP).unwrap();
        let (a, b) = (random_element(&ring, s1), random_element(&ring, s2));
        let ia = ring.ideal_closure(std::slice::from_ref(&a), &extra).unwrap();
        let iab = ring.ideal_closure(&[a.clone(), b], &extra).unwrap();
        prop_assert!(iab.space().contains_subspace(ia.space()).unwrap());
        prop_assert!(ia.verify(&ring, &extra).unwrap());
        prop_assert!(ia.contains(&a));
        let gens: Vec<GroupRingElement> = ia.space().vectors().into_iter().map(GroupRingElement::from_coeffs).collect();
        prop_assert_eq!(ring.ideal_closure(&gens, &extra).unwrap(), ia);
    }

    #[test]
    fn coinvariants_of_direct_sum(which in 0usize..3, l in prop::sample::select(vec![2u64, 3, 5]), seed in any::<u64>()) {
        let g = [FiniteGroup::cyclic(2), FiniteGroup::elementary_abelian(2, 2), FiniteGroup::cyclic(3)][which].clone();
        let f = Field::prime(l).unwrap();
        let mut rng = seeded(seed);
        let a = random_module(&g, &f, 4, &mut rng).unwrap();
        let b = random_module(&g, &f, 4, &mut rng).unwrap();
        let sum: Vec<Matrix> = a.iter().zip(&b).map(|(x, y)| block_diag(&f, x, y)).collect();
        let ca = coinvariants(&f, a[0].rows(), &a).unwrap();
        let cb = coinvariants(&f, b[0].rows(), &b).unwrap();
        let cs = coinvariants(&f, sum[0].rows(), &sum).unwrap();
        prop_assert_eq!(cs.dim(), ca.dim() + cb.dim());
        for h in &sum {
            for v in all_vectors(&f, sum[0].rows()).take(50) {
                let hv = h.apply(&v).unwrap();
                prop_assert_eq!(cs.apply(&hv).unwrap(), cs.apply(&v).unwrap());
            }
        }
    }
}

/// `m` is nonzero in `M_H` iff it lies outside the span of the columns of `h - 1`.
fn nonzero_in_coinvariants(f: &Field, rho: &[Matrix], h: &[usize], m: &[Elem]) -> bool {
    let dim = m.len();
    let mut rels = Vec::new();
    for &g in h {
        let d = rho[g].sub(&Matrix::identity(f, dim)).unwrap();
        for c in 0..dim {
            rels.push(d.column(c));
        }
    }
    !Subspace::from_vectors(f, dim, &rels).unwrap().contains(m).unwrap()
}

#[test]
fn lemma_6_4_witness_exists_for_every_vector() {
    let groups = [
        (FiniteGroup::cyclic(2), 2usize, vec![3u64, 5]),
        (FiniteGroup::elementary_abelian(2, 2), 2, vec![3, 5]),
        (FiniteGroup::elementary_abelian(2, 3), 2, vec![3]),
        (FiniteGroup::cyclic(3), 3, vec![2, 5]),
    ];
    let mut rng = seeded(64);
    for (g, p, ells) in groups {
        for l in ells {
            let f = Field::prime(l).unwrap();
            for _ in 0..6 {
                let rho = random_module(&g, &f, 6, &mut rng).unwrap();
                let dim = rho[0].rows();
                assert!(dim <= 6);
                for m in all_vectors(&f, dim).filter(|v| v.iter().any(|e| !e.is_zero())).step_by(7) {
                    let w = abelian_coinv_witness(&g, &rho, &m).unwrap();
                    assert!(w.index == 1 || w.index == p);
                    assert_eq!(w.index * w.subgroup.len(), g.order());
                    assert!(g.is_subgroup(&w.subgroup));
                    assert!(nonzero_in_coinvariants(&f, &rho, &w.subgroup, &m));
                }
            }
        }
    }
}
