use proptest::prelude::*;
use rand::Rng;
use steinberg_core::rng::seeded;
use steinberg_core::symidentity::{
    elementary_values, identity_numeric, lemma_check, random_instance, verify_identity_symbolic, ModMatrix,
    ModuleInstance,
};

/// `e_k` by summing over all `k`-subsets.
fn elementary_by_subsets(z: &[i128]) -> Vec<i128> {
    let n = z.len();
    let mut e = vec![0i128; n + 1];
    for mask in 0u32..(1 << n) {
        let prod: i128 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| z[i]).product();
        e[mask.count_ones() as usize] += prod;
    }
    e
}

#[test]
fn symbolic_identity_holds_up_to_eight() {
    for n in 1..=8 {
        let r = verify_identity_symbolic(n).unwrap();
        assert!(r.ok, "n = {n}");
        assert!(r.lhs_raw_terms >= r.lhs_terms);
    }
    assert!(verify_identity_symbolic(0).is_err());
    assert!(verify_identity_symbolic(9).is_err());
}

#[test]
fn symbolic_sides_specialize_to_numeric_sides() {
    let mut rng = seeded(5);
    for n in 1..=6 {
        let report = verify_identity_symbolic(n).unwrap();
        for _ in 0..20 {
            let z: Vec<i128> = (0..n).map(|_| [-3, -2, -1, 1, 2, 3][rng.random_range(0..6)]).collect();
            for i in 0..n {
                // m_i = 1, every other m_j = 0 isolates the coefficient polynomial of m_i.
                let m: Vec<Vec<i128>> = (0..n).map(|j| vec![(i == j) as i128]).collect();
                let (lhs, rhs) = identity_numeric(&z, &m);
                assert_eq!(report.lhs[i].eval(&z), Some(lhs[0]));
                assert_eq!(report.rhs[i].eval(&z), Some(rhs[0]));
            }
        }
    }
}

#[test]
fn numeric_specializations_agree() {
    let mut rng = seeded(1000);
    for _ in 0..1000 {
        let n = rng.random_range(1..=8);
        let d = rng.random_range(1..=4);
        let z: Vec<i128> = (0..n)
            .map(|_| {
                let v: i128 = rng.random_range(1..=9);
                if rng.random_bool(0.5) {
                    -v
                } else {
                    v
                }
            })
            .collect();
        let m: Vec<Vec<i128>> = (0..n).map(|_| (0..d).map(|_| rng.random_range(-50..=50)).collect()).collect();
        assert_eq!(elementary_values(&z), elementary_by_subsets(&z));
        let (lhs, rhs) = identity_numeric(&z, &m);
        assert_eq!(lhs, rhs);
        let en = elementary_by_subsets(&z)[n];
        let direct: Vec<i128> = (0..d).map(|k| m.iter().map(|mi| en * mi[k]).sum()).collect();
        assert_eq!(rhs, direct);
    }
}

/// Closure of `seeds` under addition and `Z_i^{+-1}`, by flooding `(Z/m)^d`.
fn brute_submodule(inst: &ModuleInstance, seeds: &[Vec<u64>]) -> std::collections::BTreeSet<Vec<u64>> {
    let m = inst.modulus();
    let mut ops: Vec<ModMatrix> = inst.zs().to_vec();
    ops.extend(inst.zs().iter().map(|z| z.inverse().unwrap()));
    let mut set = std::collections::BTreeSet::new();
    set.insert(vec![0u64; inst.dim()]);
    loop {
        let before = set.len();
        let current: Vec<Vec<u64>> = set.iter().cloned().collect();
        for v in &current {
            for s in seeds {
                set.insert(v.iter().zip(s).map(|(a, b)| (a + b) % m).collect());
            }
            for z in &ops {
                set.insert(z.apply(v));
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

#[test]
fn lemma_check_matches_brute_force_closure() {
    let mut rng = seeded(100);
    for trial in 0..100 {
        let modulus = [4u64, 9, 25][trial % 3];
        let n = rng.random_range(1..=4);
        let max_dim = if modulus == 25 { 2 } else { 3 };
        let d = rng.random_range(1..=max_dim);
        let (inst, ms) = random_instance(&mut rng, n, modulus, d);
        let report = lemma_check(&inst, &ms).unwrap();
        assert!(report.member, "trial {trial}");
        let seeds: Vec<Vec<u64>> = (1..=n as u32).map(|k| inst.power_moment(&ms, k)).collect();
        let brute = brute_submodule(&inst, &seeds);
        assert_eq!(report.submodule_order, brute.len() as u128);
        assert!(brute.contains(&report.sum));
    }
}

#[test]
fn lemma_check_holds_for_larger_instances() {
    let mut rng = seeded(101);
    for trial in 0..100 {
        let modulus = [4u64, 9, 25][trial % 3];
        let (n, d) = (rng.random_range(1..=4), rng.random_range(1..=4));
        let (inst, ms) = random_instance(&mut rng, n, modulus, d);
        assert!(lemma_check(&inst, &ms).unwrap().member);
    }
}

proptest! {
    #[test]
    fn mod_inverse_roundtrip(modulus in prop::sample::select(vec![4u64, 6, 9, 12, 25, 30]), dim in 1usize..4, seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let a = ModMatrix::new(modulus, dim, (0..dim * dim).map(|_| rng.random_range(0..modulus)).collect()).unwrap();
        let id = ModMatrix::identity(modulus, dim);
        match a.inverse() {
            Some(inv) => {
                prop_assert_eq!(a.mul(&inv), id.clone());
                prop_assert_eq!(inv.mul(&a), id);
            }
            None => {
                // No inverse exists: brute-force search over all matrices confirms it for tiny cases.
                if modulus.pow((dim * dim) as u32) <= 20_000 {
                    let total = modulus.pow((dim * dim) as u32);
                    let found = (0..total).any(|mut k| {
                        let data: Vec<u64> = (0..dim * dim).map(|_| { let c = k % modulus; k /= modulus; c }).collect();
                        a.mul(&ModMatrix::new(modulus, dim, data).unwrap()) == id
                    });
                    prop_assert!(!found);
                }
            }
        }
    }
}
