use proptest::prelude::*;
use rand::Rng;
use steinberg_core::cwsolver::{
    count_common_zeros, cw_solve, find_apoly_zero, substitute_linear, usa_group, vanishing_extend, APolynomial,
    AdditiveSubgroup, PolyOverF, DEFAULT_SCAN_CAP,
};
use steinberg_core::field::trace_map;
use steinberg_core::linalg::all_vectors;
use steinberg_core::matgroup::{
    enumerate_group, one_param_positive, root_factorize, GroupKind, UnipotentElement, DEFAULT_GROUP_CAP,
};
use steinberg_core::rng::{seeded, SeededRng};
use steinberg_core::{AdditiveMap, Elem, Field};

/// Evaluation straight from the term list.
fn eval_terms(p: &PolyOverF, x: &[Elem]) -> Elem {
    let f = p.field();
    p.terms().iter().fold(Elem::ZERO, |acc, (e, &c)| {
        let mono = e.iter().zip(x).fold(c, |m, (&k, &xi)| f.mul(m, f.pow(xi, k as u64)));
        f.add(acc, mono)
    })
}

/// Random polynomial without constant term and of total degree at most `deg`.
fn random_poly(rng: &mut SeededRng, f: &Field, m: usize, deg: u32) -> PolyOverF {
    let mut terms = Vec::new();
    for _ in 0..rng.random_range(1..=4) {
        let mut e = vec![0u32; m];
        let d = rng.random_range(1..=deg);
        for _ in 0..d {
            e[rng.random_range(0..m)] += 1;
        }
        terms.push((e, Elem(rng.random_range(1..f.order()))));
    }
    PolyOverF::from_terms(f, m, &terms).unwrap()
}

#[test]
fn chevalley_warning_systems() {
    let mut rng = seeded(12);
    for p in [2u64, 3, 5] {
        let f = Field::prime(p).unwrap();
        for _ in 0..100 {
            let m = rng.random_range(2..=if p == 5 { 5 } else { 6 });
            let k = rng.random_range(1..m);
            let mut budget = m as u32 - 1;
            let mut polys = Vec::new();
            for i in 0..k {
                if budget == 0 {
                    break;
                }
                let d = rng.random_range(1..=budget.saturating_sub((k - 1 - i) as u32).max(1));
                budget -= d;
                polys.push(random_poly(&mut rng, &f, m, d));
            }
            let sol = cw_solve(&polys, m, DEFAULT_SCAN_CAP).unwrap();
            assert!(sol.point.iter().any(|e| !e.is_zero()));
            assert!(polys.iter().all(|q| eval_terms(q, &sol.point).is_zero()));
            let count = all_vectors(&f, m).filter(|x| polys.iter().all(|q| eval_terms(q, x).is_zero())).count() as u64;
            assert_eq!(count, count_common_zeros(&polys, m, DEFAULT_SCAN_CAP).unwrap());
            assert_eq!(count % p, 0);
        }
    }
}

fn random_apoly(rng: &mut SeededRng, f: &Field, deg: u32) -> APolynomial {
    let mut terms = Vec::new();
    for d in 1..=deg {
        if d == deg || rng.random_bool(0.5) {
            terms.push((vec![d], Elem(rng.random_range(1..f.order()))));
        }
    }
    let phi = PolyOverF::from_terms(f, 1, &terms).unwrap();
    let lambda = AdditiveMap::new(f, (0..f.degree()).map(|_| rng.random_range(0..f.p())).collect()).unwrap();
    APolynomial::new(phi, lambda).unwrap()
}

fn independent_elements(rng: &mut SeededRng, f: &Field, m: usize) -> Vec<Elem> {
    loop {
        let vs: Vec<Elem> = (0..m).map(|_| Elem(rng.random_range(1..f.order()))).collect();
        if AdditiveSubgroup::from_elements(f, &vs).unwrap().dim() == m {
            return vs;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn substitution_agrees_pointwise(q in prop::sample::select(vec![4u64, 8, 9, 16, 25, 27]), deg in 1u32..4, seed in any::<u64>()) {
        let f = Field::with_order(q).unwrap();
        let mut rng = seeded(seed);
        let a = random_apoly(&mut rng, &f, deg);
        let m = rng.random_range(1..=f.degree() as usize);
        let vs = independent_elements(&mut rng, &f, m);
        let h = substitute_linear(&a, &vs).unwrap();
        prop_assert!(h.degree() <= a.degree());
        prop_assert!(h.field().is_prime_field());
        for x in all_vectors(h.field(), m) {
            let point = x.iter().zip(&vs).fold(Elem::ZERO, |acc, (&c, &v)| f.add(acc, f.scale(c.0, v)));
            prop_assert_eq!(eval_terms(&h, &x).0, a.eval(&[point]));
        }
    }

    #[test]
    fn apoly_zero_is_verified(q in prop::sample::select(vec![8u64, 16, 27, 32]), seed in any::<u64>()) {
        let f = Field::with_order(q).unwrap();
        let mut rng = seeded(seed);
        let budget = f.degree() - 1;
        let first = rng.random_range(1..=budget);
        let mut fs = vec![random_apoly(&mut rng, &f, first)];
        let used = fs[0].degree();
        if used < budget {
            fs.push(random_apoly(&mut rng, &f, budget - used));
        }
        let a = find_apoly_zero(&fs, &AdditiveSubgroup::full(&f), DEFAULT_SCAN_CAP).unwrap();
        prop_assert!(!a.is_zero());
        for g in &fs {
            let direct = g.lambda().eval(eval_terms(g.phi(), &[a]));
            prop_assert_eq!(direct, 0);
        }
    }
}

#[test]
fn trace_example_over_f4() {
    let f = Field::with_order(4).unwrap();
    let a = APolynomial::new(PolyOverF::var(&f, 1, 0), trace_map(&f)).unwrap();
    let h = substitute_linear(&a, &[Elem(1), Elem(2)]).unwrap();
    let f2 = f.prime_subfield();
    assert_eq!(h, PolyOverF::var(&f2, 2, 1));
}

fn unipotents(f: &Field, n: usize) -> Vec<UnipotentElement> {
    enumerate_group(GroupKind::Unipotent, f, n, DEFAULT_GROUP_CAP)
        .unwrap()
        .into_iter()
        .map(|m| UnipotentElement::new(m).unwrap())
        .collect()
}

#[test]
fn usa_group_is_monotone() {
    let f = Field::with_order(8).unwrap();
    let gamma = one_param_positive(3);
    let us = unipotents(&f, 3);
    let mut rng = seeded(3);
    for _ in 0..20 {
        let s1: Vec<UnipotentElement> = (0..2).map(|_| us[rng.random_range(0..us.len())].clone()).collect();
        let mut s2 = s1.clone();
        s2.push(us[rng.random_range(0..us.len())].clone());
        let d1 = Elem(rng.random_range(1..8));
        let d2 = Elem(rng.random_range(1..8));
        let a = AdditiveSubgroup::zero(&f).extend(d1);
        let b = a.extend(d2);
        let small = usa_group(&f, 3, &s1, &a, &gamma, DEFAULT_GROUP_CAP).unwrap();
        assert!(small.is_subgroup_of(&usa_group(&f, 3, &s1, &b, &gamma, DEFAULT_GROUP_CAP).unwrap()));
        assert!(small.is_subgroup_of(&usa_group(&f, 3, &s2, &a, &gamma, DEFAULT_GROUP_CAP).unwrap()));
    }
}

#[test]
fn vanishing_extension_checked_by_brute_force() {
    let f = Field::with_order(8).unwrap();
    let gamma = one_param_positive(3);
    let us = unipotents(&f, 3);
    let mut rng = seeded(9);
    let mut found = 0;
    for _ in 0..10 {
        let s: Vec<UnipotentElement> = (0..2).map(|_| us[rng.random_range(0..us.len())].clone()).collect();
        // f reads the corner coordinate of U_3, the center.
        let phi = PolyOverF::var(&f, 3, 1);
        let lambda = AdditiveMap::new(&f, (0..3).map(|_| rng.random_range(0..2)).collect()).unwrap();
        let apoly = APolynomial::new(phi, lambda).unwrap();
        let c = AdditiveSubgroup::zero(&f);
        let out = match vanishing_extend(&s, &apoly, &c, &AdditiveSubgroup::full(&f), &gamma, DEFAULT_GROUP_CAP) {
            Ok(o) => o,
            Err(_) => continue,
        };
        if let Some(ext) = out.found {
            found += 1;
            let g = usa_group(&f, 3, &s, &ext.subgroup, &gamma, DEFAULT_GROUP_CAP).unwrap();
            assert_eq!(g.order(), ext.group_order);
            for m in g.elements() {
                let coords = root_factorize(&UnipotentElement::new(m).unwrap()).values;
                assert_eq!(apoly.lambda().eval(coords[1]), 0);
            }
        }
    }
    assert!(found > 0);
}
