//! One function per report row. Each re-derives what it checks from core
//! outputs (augmentations by summation, chamber coefficients by flag lookup,
//! invariance under whole groups, zero counts by brute force) instead of
//! relying on the self-checks inside the core.

use std::collections::BTreeSet;

use rand::Rng;
use serde_json::{json, Map, Value};
use steinberg_core::building::{Flag, ReducedComplex};
use steinberg_core::cwsolver::{
    count_common_zeros, cw_solve, find_apoly_zero, substitute_linear, usa_group, vanishing_extend, APolynomial,
    AdditiveSubgroup, PolyOverF,
};
use steinberg_core::field::trace_map;
use steinberg_core::grpring::{
    abelian_coinv_witness, coinvariants, random_module, t_stable_counterexample, unipotent_group_ring, GroupRing,
    GroupRingElement, Nilpotency,
};
use steinberg_core::linalg::all_vectors;
use steinberg_core::matgroup::{
    construct_positive_oneparam, enumerate_group, evaluate_word, gl_generators, group_order, monoid_act,
    one_param_positive, positive_roots, reconstruct, root_factorize, root_order, simple_roots, subgroup_census,
    unipotent_group, word_set_discover, FiniteGroup, GroupKind, UnipotentElement,
};
use steinberg_core::rng::{substream, SeededRng};
use steinberg_core::steinberg::{Certificate, Irreducibility, SteinbergModule};
use steinberg_core::symidentity::{
    elementary_values, identity_numeric, lemma_check, random_instance, verify_identity_symbolic,
};
use steinberg_core::{AdditiveMap, Elem, Error as CoreError, Field, Matrix, Subspace};

use crate::{Caps, LabError, LabResult, Record};

/// Largest `|F|^dim` enumerated exhaustively by the gate row.
pub const GATE_EXHAUSTIVE_LIMIT: u128 = 1 << 16;

/// Turns a core error inside a row into a recorded failure; caps propagate.
fn guard<T>(rec: &mut Record, r: steinberg_core::Result<T>) -> LabResult<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(e @ CoreError::CapExceeded { .. }) => Err(LabError::Core(e)),
        Err(e) => {
            rec.fail(e.to_string());
            Ok(None)
        }
    }
}

fn nonzero(v: &[Elem]) -> bool {
    v.iter().any(|e| !e.is_zero())
}

fn ints(v: &[Elem]) -> Vec<u32> {
    v.iter().map(|e| e.0).collect()
}

fn random_vector(f: &Field, dim: usize, rng: &mut SeededRng) -> Vec<Elem> {
    (0..dim).map(|_| Elem(rng.random_range(0..f.order()))).collect()
}

/// Random combination of `basis`.
fn random_combination(f: &Field, basis: &[Vec<Elem>], rng: &mut SeededRng) -> Vec<Elem> {
    let mut x = vec![Elem::ZERO; basis.first().map_or(0, Vec::len)];
    for b in basis {
        let c = Elem(rng.random_range(0..f.order()));
        for (xi, &bi) in x.iter_mut().zip(b) {
            *xi = f.mul_add(c, bi, *xi);
        }
    }
    x
}

fn module(caps: &Caps, n: usize, q: &Field, l: &Field) -> steinberg_core::Result<SteinbergModule> {
    SteinbergModule::build(q, n, l, caps.simplex.max(caps.group))
}

fn params(n: usize, q: &Field, l: &Field) -> Value {
    json!({"n": n, "q": q.order(), "ell": l.order()})
}

/// Coefficient of `x` on the chamber of the standard flag, found by lookup.
fn standard_coefficient(m: &SteinbergModule, x: &[Elem]) -> Elem {
    let b = m.complex().building();
    x[b.chamber_index(&Flag::standard(b.field(), b.n())).expect("standard flag is a chamber")]
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::ExhaustiveSpin { vectors } => json!({"kind": "exhaustive-spin", "vectors": vectors}),
        Certificate::Norton { attempt, nullity, kernel_vectors } => {
            json!({"kind": "norton", "attempt": attempt, "nullity": nullity, "kernel_vectors": kernel_vectors})
        }
    }
}

pub fn irreducibility_json(v: &Irreducibility) -> Value {
    json!({
        "dim": v.dim,
        "verdict": if v.irreducible { "irreducible" } else { "reducible" },
        "witness_dim": v.witness.as_ref().map(Subspace::dim),
        "certificate": certificate_json(&v.certificate),
    })
}

pub fn field_row(seed: u64, f: &Field) -> Record {
    let mut rec = Record::new("field", seed, json!({"q": f.order(), "p": f.p(), "e": f.degree()}));
    let q = f.order();
    rec.check(f.modulus().len() == f.degree() as usize + 1 && f.modulus().last() == Some(&1), || {
        format!("modulus {:?} is not monic of degree e", f.modulus())
    });
    let g = f.primitive();
    let mut x = g;
    let mut ord = 1u32;
    while x != Elem::ONE && ord < q {
        x = f.mul(x, g);
        ord += 1;
    }
    rec.check(ord == q - 1, || format!("primitive element has order {ord}"));
    for a in f.nonzero_elements() {
        let ok = f.inv(a).is_some_and(|b| f.mul(a, b) == Elem::ONE);
        rec.check(ok, || format!("{} has no inverse", f.to_text(a)));
    }
    for a in f.elements() {
        rec.check(f.parse(&f.to_text(a)).ok() == Some(a), || format!("text of {} does not parse back", a.0));
        rec.check(f.add(a, f.neg(a)).is_zero(), || format!("{} + (-{}) != 0", a.0, a.0));
    }
    let exhaustive = q <= 64;
    if exhaustive {
        for a in f.elements() {
            for b in f.elements() {
                for c in f.elements() {
                    let ok = f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                        && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    rec.check(ok, || format!("ring axioms fail at ({}, {}, {})", a.0, b.0, c.0));
                }
            }
        }
    }
    let mut result = json!({
        "modulus": f.modulus(),
        "primitive": f.to_text(g),
        "axioms_exhaustive": exhaustive,
    });
    if q <= 16 {
        result["elements"] = json!(f.elements().map(|a| f.to_text(a)).collect::<Vec<_>>());
    }
    rec.with_result(result)
}

pub fn kind_name(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::General => "general",
        GroupKind::Unipotent => "unipotent",
        GroupKind::Torus => "torus",
        GroupKind::Borel => "borel",
    }
}

/// Enumeration size against the order formula, distinctness and closure on
/// seeded products.
pub fn group_row(caps: &Caps, seed: u64, kind: GroupKind, n: usize, f: &Field) -> LabResult<Record> {
    let mut rec = Record::new("group", seed, json!({"kind": kind_name(kind), "n": n, "q": f.order()}));
    let expected = group_order(kind, n, f.order() as u64);
    let elems = enumerate_group(kind, f, n, caps.group)?;
    rec.check(elems.len() as u128 == expected, || format!("{} elements, expected {expected}", elems.len()));
    let set: BTreeSet<Vec<Elem>> = elems.iter().map(|m| m.data().to_vec()).collect();
    rec.check(set.len() == elems.len(), || "repeated elements".into());
    let mut rng = substream(seed, 0);
    for _ in 0..200.min(elems.len() * elems.len()) {
        let a = &elems[rng.random_range(0..elems.len())];
        let b = &elems[rng.random_range(0..elems.len())];
        let ok = a.mul(b).is_ok_and(|ab| set.contains(ab.data()));
        rec.check(ok, || "a product left the group".into());
    }
    Ok(rec.with_result(json!({"order": elems.len(), "expected_order": expected})))
}

/// Boundary squares and reduced homology over each coefficient field.
pub fn solomon_tits_row(caps: &Caps, seed: u64, n: usize, q: &Field, ells: &[Field]) -> LabResult<Record> {
    let expected = (q.order() as usize).pow((n * (n - 1) / 2) as u32);
    let ell: Vec<u32> = ells.iter().map(Field::order).collect();
    let mut rec = Record::new("solomon-tits", seed, json!({"n": n, "q": q.order(), "ell": ell}));
    let mut homology = Map::new();
    let mut counts = Vec::new();
    for l in ells {
        let Some(c) = guard(&mut rec, ReducedComplex::build(q, n, l, caps.simplex))? else { continue };
        let lo = l.order();
        rec.check(c.boundary_squares_vanish(), || format!("boundary squares nonzero over F_{lo}"));
        let h = c.homology_dims();
        rec.check(h.last() == Some(&expected), || {
            format!("top homology {:?} over F_{lo}, expected {expected}", h.last())
        });
        rec.check(h[..h.len() - 1].iter().all(|&d| d == 0), || format!("lower homology {h:?} over F_{lo}"));
        homology.insert(lo.to_string(), json!(h));
        counts = c.building().simplex_counts();
    }
    Ok(rec.with_result(json!({"expected_dim": expected, "homology": homology, "simplex_counts": counts})))
}

pub fn dim_row(caps: &Caps, seed: u64, n: usize, q: &Field, l: &Field) -> LabResult<Record> {
    let mut rec = Record::new("steinberg-dim", seed, params(n, q, l));
    let expected = (q.order() as usize).pow((n * (n - 1) / 2) as u32);
    if let Some(m) = guard(&mut rec, module(caps, n, q, l))? {
        let kernel = m.complex().steinberg_kernel().dim();
        rec.check(kernel == expected && m.dim() == expected, || format!("dim {kernel}, expected {expected}"));
        rec.result = json!({"dim": m.dim(), "kernel_dim": kernel, "chambers": m.complex().chamber_count()});
    }
    Ok(rec)
}

/// Apartment classes span the kernel, `iota` round-trips, and
/// `epsilon(iota(x))` is the standard-chamber coefficient.
pub fn apartment_row(
    caps: &Caps,
    seed: u64,
    n: usize,
    q: &Field,
    l: &Field,
    random: usize,
    stream: u64,
) -> LabResult<Record> {
    let mut rec = Record::new("apartment", seed, params(n, q, l));
    let Some(m) = guard(&mut rec, module(caps, n, q, l))? else { return Ok(rec) };
    let f = m.field().clone();
    let kernel = m.complex().steinberg_kernel();
    let a = m.apartment_matrix();
    rec.check(a.cols() == m.dim() && a.rank() == m.dim(), || "apartment columns are dependent".into());
    rec.check(kernel.dim() == m.dim(), || format!("kernel dim {} != |U| {}", kernel.dim(), m.dim()));
    let inside = (0..a.cols()).all(|k| kernel.contains(&a.column(k)).unwrap_or(false));
    rec.check(inside, || "an apartment class is not a cycle".into());
    let mut rng = substream(seed, stream);
    let basis = kernel.vectors();
    let mut xs = basis.clone();
    xs.extend((0..random).map(|_| random_combination(&f, &basis, &mut rng)));
    let mut checked = 0;
    for x in &xs {
        let Some(c) = guard(&mut rec, m.iota(x))? else { continue };
        rec.check(f.sum(c.coeffs().iter().copied()) == standard_coefficient(&m, x), || {
            "epsilon(iota(x)) differs from the B-coefficient".into()
        });
        rec.check(m.iota_inverse(&c).ok().as_deref() == Some(&x[..]), || "iota^-1 iota x != x".into());
        checked += 1;
    }
    for k in 0..m.dim() {
        let e = m.group_ring().basis(k);
        let back = m.iota_inverse(&e).and_then(|x| m.iota(&x));
        rec.check(back.as_ref() == Ok(&e), || format!("iota iota^-1 differs on basis element {k}"));
    }
    Ok(rec.with_result(json!({
        "dim": m.dim(),
        "kernel_dim": kernel.dim(),
        "apartment_rank": a.rank(),
        "checked_vectors": checked,
    })))
}

/// `iota(u x) = [u] iota(x)` and `iota(t x)` is `iota(x)` with `U` relabelled
/// by `t`-conjugation, on every basis vector and every `u`, `t`.
pub fn equivariance_row(caps: &Caps, seed: u64, n: usize, q: &Field, l: &Field) -> LabResult<Record> {
    let mut rec = Record::new("equivariance", seed, params(n, q, l));
    let Some(m) = guard(&mut rec, module(caps, n, q, l))? else { return Ok(rec) };
    let ring = m.group_ring();
    let us = m.unipotent().elements();
    let torus = enumerate_group(GroupKind::Torus, q, n, caps.group)?;
    let (mut u_checks, mut t_checks) = (0u64, 0u64);
    for k in 0..m.dim() {
        let c = ring.basis(k);
        let Some(x) = guard(&mut rec, m.iota_inverse(&c))? else { continue };
        for (i, u) in us.iter().enumerate() {
            let lhs = m.act(u, &x).and_then(|ux| m.iota(&ux));
            rec.check(lhs.as_ref() == Ok(&ring.mul(&ring.basis(i), &c)), || {
                format!("iota(u x) != [u] iota(x) for u #{i}, basis {k}")
            });
            u_checks += 1;
        }
        for t in &torus {
            let tinv = t.inverse()?;
            let Some(lhs) = guard(&mut rec, m.act(t, &x).and_then(|tx| m.iota(&tx)))? else { continue };
            for (i, u) in us.iter().enumerate() {
                let j = m.unipotent().index_of(&t.mul(u)?.mul(&tinv)?);
                rec.check(j.is_some_and(|j| lhs.coeff(j) == c.coeff(i)), || {
                    format!("torus conjugation mismatch at u #{i}, basis {k}")
                });
            }
            t_checks += 1;
        }
    }
    Ok(rec.with_result(json!({"unipotent_checks": u_checks, "torus_checks": t_checks, "torus_order": torus.len()})))
}

fn check_gate(rec: &mut Record, m: &SteinbergModule, x: &[Elem]) -> LabResult<()> {
    let Some(g) = guard(rec, m.gate(x))? else { return Ok(()) };
    let Some(gx) = guard(rec, m.act(g.g.matrix(), x))? else { return Ok(()) };
    let Some(c) = guard(rec, m.iota(&gx))? else { return Ok(()) };
    let eps = m.field().sum(c.coeffs().iter().copied());
    rec.check(!eps.is_zero() && eps == g.value, || "gate did not move x to nonzero augmentation".into());
    Ok(())
}

/// How many vectors the gate row tries.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GateMode {
    /// Every nonzero vector when `|F|^dim <= 2^16`, else this many seeded ones.
    Auto(usize),
    /// This many seeded vectors regardless of size.
    Seeded(usize),
}

pub fn gate_row(
    caps: &Caps,
    seed: u64,
    n: usize,
    q: &Field,
    l: &Field,
    mode: GateMode,
    stream: u64,
) -> LabResult<Record> {
    let mut rec = Record::new("gate", seed, params(n, q, l));
    let Some(m) = guard(&mut rec, module(caps, n, q, l))? else { return Ok(rec) };
    let f = m.field().clone();
    let total = (f.order() as u128).checked_pow(m.dim() as u32).unwrap_or(u128::MAX);
    let (samples, exhaustive) = match mode {
        GateMode::Auto(k) => (k, total <= GATE_EXHAUSTIVE_LIMIT),
        GateMode::Seeded(k) => (k, false),
    };
    let mut tested = 0u64;
    if exhaustive {
        for c in all_vectors(&f, m.dim()).filter(|c| nonzero(c)) {
            if let Some(x) = guard(&mut rec, m.iota_inverse(&GroupRingElement::from_coeffs(c)))? {
                check_gate(&mut rec, &m, &x)?;
                tested += 1;
            }
        }
    } else {
        let mut rng = substream(seed, stream);
        while tested < samples as u64 {
            let c = random_vector(&f, m.dim(), &mut rng);
            if !nonzero(&c) {
                continue;
            }
            if let Some(x) = guard(&mut rec, m.iota_inverse(&GroupRingElement::from_coeffs(c)))? {
                check_gate(&mut rec, &m, &x)?;
            }
            tested += 1;
        }
    }
    let mode = if exhaustive { "exhaustive" } else { "seeded" };
    Ok(rec.with_result(json!({"dim": m.dim(), "mode": mode, "tested": tested})))
}

/// Expected verdict where one is known: `GL_2` is reducible exactly when
/// `ell | q + 1`, and the defining characteristic is irreducible.
pub fn expected_irreducible(n: usize, q: &Field, l: &Field) -> Option<bool> {
    if l.p() == q.p() {
        Some(true)
    } else if n == 2 {
        Some(!(q.order() + 1).is_multiple_of(l.order()))
    } else {
        None
    }
}

/// The irreducibility verdict, with a reducibility witness checked against
/// the whole group when it fits the cap and against generators otherwise.
pub fn irreducible_row(caps: &Caps, seed: u64, n: usize, q: &Field, l: &Field, stream: u64) -> LabResult<Record> {
    let mut rec = Record::new("irreducible", seed, params(n, q, l));
    let Some(m) = guard(&mut rec, module(caps, n, q, l))? else { return Ok(rec) };
    let Some(v) = guard(&mut rec, m.is_irreducible(&mut substream(seed, stream)))? else { return Ok(rec) };
    let expected = expected_irreducible(n, q, l);
    if let Some(e) = expected {
        rec.check(v.irreducible == e, || format!("verdict irreducible={} against expected {e}", v.irreducible));
    }
    let mut checked_against = Value::Null;
    match (&v.witness, &v.certificate) {
        (Some(w), _) => {
            rec.check(w.dim() > 0 && w.dim() < m.dim(), || "witness is not proper".into());
            let whole = group_order(GroupKind::General, n, q.order() as u64) <= caps.group;
            let gens = if whole { enumerate_group(GroupKind::General, q, n, caps.group)? } else { gl_generators(q, n) };
            let ok = gens.iter().all(|g| m.representation_matrix(g).and_then(|r| w.is_invariant(&r)).unwrap_or(false));
            rec.check(ok, || "witness is not invariant".into());
            checked_against = json!(if whole { "group" } else { "generators" });
        }
        (None, Certificate::ExhaustiveSpin { vectors }) => {
            let lo = l.order() as u128;
            let points = (lo.pow(m.dim() as u32) - 1) / (lo - 1);
            rec.check(*vectors as u128 == points, || format!("spun {vectors} of {points} points"));
        }
        (None, Certificate::Norton { .. }) => {}
    }
    let mut result = irreducibility_json(&v);
    result["expected"] = match expected {
        Some(true) => json!("irreducible"),
        Some(false) => json!("reducible"),
        None => Value::Null,
    };
    result["witness_checked_against"] = checked_against;
    Ok(rec.with_result(result))
}

/// Products of `k` random elements of the augmentation ideal.
fn random_aug_product(ring: &GroupRing, aug: &[Vec<Elem>], k: usize, rng: &mut SeededRng) -> GroupRingElement {
    let mut acc = ring.one();
    for _ in 0..k {
        let x = random_combination(ring.field(), aug, rng);
        acc = ring.mul(&acc, &GroupRingElement::from_coeffs(x));
    }
    acc
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Nilpotency of the augmentation ideal and the unique-maximal-ideal check.
/// Both are expected exactly when `G` is an `ell`-group.
pub fn grpring_row(seed: u64, name: &str, g: FiniteGroup, l: &Field, samples: usize, stream: u64) -> Record {
    let mut rec = Record::new("grpring", seed, json!({"group": name, "ell": l.order()}));
    let p_group = is_power_of(g.order(), l.p() as usize);
    let ring = GroupRing::new(g, l);
    let nil = ring.aug_nilpotency();
    let index = nil.index();
    if p_group {
        rec.check(index.is_some_and(|n| n <= ring.dim()), || format!("nilpotency {nil:?}"));
    } else {
        rec.check(index.is_none(), || format!("augmentation ideal nilpotent in coprime characteristic: {nil:?}"));
    }
    if let Some(n) = index {
        let aug = ring.augmentation_ideal().vectors();
        let mut rng = substream(seed, stream);
        let zero = (0..200).all(|_| random_aug_product(&ring, &aug, n, &mut rng).is_zero());
        rec.check(zero, || format!("a product of {n} augmentation elements is nonzero"));
    }
    let um = ring.unique_maximal_check(&mut substream(seed, stream + 1), samples);
    rec.check(um.holds == p_group, || format!("unique-maximal check gave {} ({:?})", um.holds, um.counterexample));
    let stable = match &nil {
        Nilpotency::NotNilpotent { stable_dim, .. } => Some(*stable_dim),
        Nilpotency::Nilpotent { .. } => None,
    };
    rec.with_result(json!({
        "dim": ring.dim(),
        "nilpotent": index.is_some(),
        "nilpotency_index": index,
        "stable_dim": stable,
        "power_dims": nil.dims(),
        "unique_max_holds": um.holds,
        "unique_max_checked": um.checked,
        "unique_max_exhaustive": um.exhaustive,
    }))
}

/// Search for a proper `T`-stable left ideal with nonzero augmentation; any
/// ideal found is re-closed and re-verified here.
pub fn counterexample_row(
    caps: &Caps,
    seed: u64,
    n: usize,
    q: &Field,
    l: &Field,
    samples: usize,
    stream: u64,
) -> LabResult<Record> {
    let mut rec = Record::new("counterexample", seed, params(n, q, l));
    let search = t_stable_counterexample(q, n, l, &mut substream(seed, stream), samples, caps.group);
    let Some(search) = guard(&mut rec, search)? else { return Ok(rec) };
    let (ring, extra) = unipotent_group_ring(q, n, l, caps.group)?;
    let mut result =
        json!({"exhaustive": search.exhaustive, "checked": search.checked, "found": search.found.is_some()});
    if let Some(c) = &search.found {
        let eps = ring.epsilon(&c.generator);
        rec.check(eps == c.epsilon && !eps.is_zero(), || format!("epsilon {} on a claimed generator", eps.0));
        rec.check(c.ideal.is_proper() && c.ideal.contains(&c.generator), || "ideal is not proper".into());
        rec.check(c.ideal.verify(&ring, &extra).unwrap_or(false), || "ideal is not a T-stable left ideal".into());
        let reclosed = ring.ideal_closure(std::slice::from_ref(&c.generator), &extra)?;
        rec.check(reclosed.dim() == c.ideal.dim(), || "re-closed ideal has another dimension".into());
        result["generator"] = json!(ints(c.generator.coeffs()));
        result["epsilon"] = json!(eps.0);
        result["ideal_dim"] = json!(c.ideal.dim());
    }
    Ok(rec.with_result(result))
}

/// `e_k` by summing over subsets.
fn elementary_by_subsets(z: &[i128]) -> Vec<i128> {
    let n = z.len();
    let mut e = vec![0i128; n + 1];
    for mask in 0u32..(1 << n) {
        let prod: i128 = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| z[i]).product();
        e[mask.count_ones() as usize] += prod;
    }
    e
}

pub fn symbolic_row(seed: u64, n: usize) -> LabResult<Record> {
    let mut rec = Record::new("identity-symbolic", seed, json!({"n": n}));
    if let Some(r) = guard(&mut rec, verify_identity_symbolic(n))? {
        rec.check(r.ok, || "symbolic sides differ".into());
        rec.result =
            json!({"ok": r.ok, "lhs_raw_terms": r.lhs_raw_terms, "lhs_terms": r.lhs_terms, "rhs_terms": r.rhs_terms});
    }
    Ok(rec)
}

/// Numeric specializations with nonzero integer `z_i`, `n <= 8`, against a
/// subset-sum evaluation of `e_n`.
pub fn numeric_row(seed: u64, cases: usize, stream: u64) -> Record {
    let mut rec = Record::new("identity-numeric", seed, json!({"cases": cases}));
    let mut rng = substream(seed, stream);
    for case in 0..cases {
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
        let m: Vec<Vec<i128>> = (0..n).map(|_| (0..d).map(|_| rng.random_range(-100..=100)).collect()).collect();
        let e = elementary_by_subsets(&z);
        rec.check(elementary_values(&z) == e, || format!("case {case}: elementary values"));
        let (lhs, rhs) = identity_numeric(&z, &m);
        let direct: Vec<i128> = (0..d).map(|k| m.iter().map(|mi| e[n] * mi[k]).sum()).collect();
        rec.check(lhs == rhs && rhs == direct, || format!("case {case}: sides differ"));
    }
    let agree = rec.pass;
    rec.with_result(json!({"agree": agree}))
}

pub fn lemma_row(
    seed: u64,
    count: usize,
    moduli: &[u64],
    max_n: usize,
    max_dim: usize,
    stream: u64,
) -> LabResult<Record> {
    let mut rec = Record::new(
        "lemma-check",
        seed,
        json!({"instances": count, "moduli": moduli, "max_n": max_n, "max_dim": max_dim}),
    );
    let mut rng = substream(seed, stream);
    let mut orders = Vec::new();
    for trial in 0..count {
        let modulus = moduli[trial % moduli.len()];
        let (n, d) = (rng.random_range(1..=max_n), rng.random_range(1..=max_dim));
        let (inst, ms) = random_instance(&mut rng, n, modulus, d);
        if let Some(r) = guard(&mut rec, lemma_check(&inst, &ms))? {
            rec.check(r.member, || format!("trial {trial}: m_1 + ... + m_n outside N"));
            let sum: Vec<u64> = (0..d).map(|k| ms.iter().map(|v| v[k]).sum::<u64>() % modulus).collect();
            rec.check(r.sum == sum, || format!("trial {trial}: reported sum differs"));
            orders.push(r.submodule_order);
        }
    }
    Ok(rec.with_result(json!({"passed": orders.len(), "max_submodule_order": orders.iter().max()})))
}

/// Entry scaling by `a^{j-i}`, `a = 0` giving the identity, and root
/// coordinates reconstructing `u`.
fn positivity_checks(rec: &mut Record, f: &Field, a: Elem, u: &UnipotentElement) -> LabResult<()> {
    let n = u.n();
    let Some(img) = guard(rec, monoid_act(a, u, &one_param_positive(n)))? else { return Ok(()) };
    if a.is_zero() {
        rec.check(img == UnipotentElement::identity(f, n), || "a = 0 does not give the identity".into());
    }
    for i in 0..n {
        for j in i + 1..n {
            let expect = f.mul(f.pow(a, (j - i) as u64), u.matrix().get(i, j));
            rec.check(img.matrix().get(i, j) == expect, || format!("entry ({i},{j}) not scaled by a^{}", j - i));
        }
    }
    let back = reconstruct(f, &root_factorize(u));
    rec.check(back.as_ref() == Ok(u), || "root factorization does not reconstruct u".into());
    Ok(())
}

fn unipotents(f: &Field, n: usize, caps: &Caps) -> LabResult<Vec<UnipotentElement>> {
    enumerate_group(GroupKind::Unipotent, f, n, caps.group)?
        .into_iter()
        .map(|m| UnipotentElement::new(m).map_err(LabError::from))
        .collect()
}

pub fn positivity_exhaustive_row(caps: &Caps, seed: u64, n: usize, f: &Field) -> LabResult<Record> {
    let mut rec = Record::new("positivity", seed, json!({"n": n, "q": f.order(), "mode": "exhaustive"}));
    let us = unipotents(f, n, caps)?;
    let mut coords = BTreeSet::new();
    for u in &us {
        for a in f.elements() {
            positivity_checks(&mut rec, f, a, u)?;
        }
        coords.insert(root_factorize(u).values);
    }
    let expected = (f.order() as u128).pow((n * (n - 1) / 2) as u32);
    rec.check(coords.len() == us.len() && us.len() as u128 == expected, || {
        "root factorization is not a bijection".into()
    });
    Ok(rec.with_result(json!({"elements": us.len(), "pairs": us.len() * f.order() as usize})))
}

pub fn positivity_seeded_row(seed: u64, n: usize, f: &Field, cases: usize, stream: u64) -> LabResult<Record> {
    let mut rec = Record::new("positivity", seed, json!({"n": n, "q": f.order(), "mode": "seeded", "cases": cases}));
    let mut rng = substream(seed, stream);
    let mut seen = std::collections::BTreeMap::new();
    for _ in 0..cases {
        let m = Matrix::from_fn(f, n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => Elem(rng.random_range(0..f.order())),
            std::cmp::Ordering::Equal => Elem::ONE,
            std::cmp::Ordering::Greater => Elem::ZERO,
        });
        let u = UnipotentElement::new(m)?;
        let a = Elem(rng.random_range(0..f.order()));
        positivity_checks(&mut rec, f, a, &u)?;
        let c = root_factorize(&u).values;
        if let Some(prev) = seen.insert(c, u.matrix().data().to_vec()) {
            rec.check(prev == u.matrix().data(), || "two elements share root coordinates".into());
        }
    }
    Ok(rec.with_result(json!({"distinct_elements": seen.len()})))
}

/// The constructed one-parameter subgroup equals `(n, ..., 1)` up to a
/// central shift and pairs positively with every positive root.
pub fn oneparam_row(seed: u64, ns: &[usize]) -> LabResult<Record> {
    let mut rec = Record::new("positivity-oneparam", seed, json!({"n": ns}));
    let mut out = Map::new();
    for &n in ns {
        if let Some(g) = guard(&mut rec, construct_positive_oneparam(&simple_roots(n)))? {
            let standard = one_param_positive(n);
            let shift = g.0[0] - standard.0[0];
            rec.check(g.0.iter().zip(&standard.0).all(|(a, b)| a - b == shift), || format!("n={n}: {:?}", g.0));
            rec.check(positive_roots(n).iter().all(|r| r.pairing(&g) >= 1), || format!("n={n}: pairing < 1"));
            out.insert(n.to_string(), json!(g.0));
        }
    }
    Ok(rec.with_result(Value::Object(out)))
}

fn all_tuples(order: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out.into_iter().flat_map(|t| (0..order).map(move |a| [t.clone(), vec![a]].concat())).collect();
    }
    out
}

/// Census of subgroups of `U_n(F_q)` generated by `m`-tuples. Every distinct
/// subgroup is re-derived from the multiplication table and checked against
/// class `<= n` and exponent `<= p^n`.
pub fn census_row(caps: &Caps, seed: u64, n: usize, f: &Field, m: usize) -> LabResult<Record> {
    let mut rec = Record::new("census", seed, json!({"n": n, "q": f.order(), "m": m}));
    let g = unipotent_group(f, n, caps.group)?.cayley_table()?;
    let Some(c) = guard(&mut rec, subgroup_census(f, n, m, caps.group))? else { return Ok(rec) };
    let tuples = all_tuples(g.order(), m);
    let exp_bound = (f.p() as usize).pow(n as u32);
    rec.check(c.tuples == tuples.len(), || "tuple count".into());
    rec.check(c.classes.iter().map(|k| k.tuples).sum::<usize>() == c.tuples, || "class sizes".into());
    for k in &c.classes {
        let h = g.restrict(&g.generated(&k.witness))?;
        rec.check(h.fingerprint() == k.fingerprint, || "class witness has another fingerprint".into());
    }
    let mut subgroups = BTreeSet::new();
    for t in &tuples {
        let h = g.generated(t);
        if subgroups.insert(h.clone()) {
            let all = g.restrict(&h)?.all();
            let sub = g.restrict(&h)?;
            rec.check(sub.nilpotency_class(&all).is_some_and(|c| c <= n), || format!("class above {n}"));
            rec.check(sub.exponent(&all) <= exp_bound, || format!("exponent above {exp_bound}"));
        }
    }
    rec.check(subgroups.len() == c.distinct_subgroups, || "distinct subgroup count".into());
    rec.check(c.max_class <= n && c.max_exponent <= exp_bound, || "census bounds".into());
    let classes: Vec<Value> = c
        .classes
        .iter()
        .map(|k| {
            json!({
                "order": k.fingerprint.order,
                "class": k.fingerprint.class,
                "exponent": k.fingerprint.exponent,
                "abelian_invariants": k.fingerprint.abelian_invariants,
                "tuples": k.tuples,
            })
        })
        .collect();
    Ok(rec.with_result(json!({
        "tuples": c.tuples,
        "distinct_subgroups": c.distinct_subgroups,
        "classes": classes,
        "max_class": c.max_class,
        "max_exponent": c.max_exponent,
    })))
}

/// The discovered words evaluate, on every tuple, to exactly the generated
/// subgroup.
pub fn word_set_row(caps: &Caps, seed: u64, n: usize, f: &Field, m: usize) -> LabResult<Record> {
    let mut rec = Record::new("word-set", seed, json!({"n": n, "q": f.order(), "m": m}));
    let g = unipotent_group(f, n, caps.group)?.cayley_table()?;
    let Some(w) = guard(&mut rec, word_set_discover(f, n, m, caps.group))? else { return Ok(rec) };
    let tuples = all_tuples(g.order(), m);
    for t in &tuples {
        let from_words: BTreeSet<usize> = w.words.iter().map(|word| evaluate_word(&g, word, t)).collect();
        let generated: BTreeSet<usize> = g.generated(t).into_iter().collect();
        rec.check(from_words == generated, || format!("tuple {t:?} not covered"));
    }
    Ok(rec.with_result(json!({
        "words": w.words.len(),
        "max_length": w.words.iter().map(Vec::len).max(),
        "verified_tuples": tuples.len(),
    })))
}

/// Random polynomial without constant term and of total degree at most `deg`.
fn random_poly(rng: &mut SeededRng, f: &Field, m: usize, deg: u32) -> PolyOverF {
    let mut terms = Vec::new();
    for _ in 0..rng.random_range(1..=4) {
        let mut e = vec![0u32; m];
        for _ in 0..rng.random_range(1..=deg) {
            e[rng.random_range(0..m)] += 1;
        }
        terms.push((e, Elem(rng.random_range(1..f.order()))));
    }
    PolyOverF::from_terms(f, m, &terms).expect("exponent vectors of length m")
}

/// A system in `m <= max_vars` variables with `sum deg < m`.
fn random_cw_system(rng: &mut SeededRng, f: &Field, max_vars: usize) -> (Vec<PolyOverF>, usize) {
    let m = rng.random_range(2..=max_vars);
    let k = rng.random_range(1..m);
    let mut budget = m as u32 - 1;
    let mut polys = Vec::new();
    for i in 0..k {
        if budget == 0 {
            break;
        }
        let d = rng.random_range(1..=budget.saturating_sub((k - 1 - i) as u32).max(1));
        budget -= d;
        polys.push(random_poly(rng, f, m, d));
    }
    (polys, m)
}

/// Evaluation straight from the term list.
fn eval_terms(p: &PolyOverF, x: &[Elem]) -> Elem {
    let f = p.field();
    p.terms().iter().fold(Elem::ZERO, |acc, (e, &c)| {
        let mono = e.iter().zip(x).fold(c, |m, (&k, &xi)| f.mul(m, f.pow(xi, k as u64)));
        f.add(acc, mono)
    })
}

fn random_additive_map(rng: &mut SeededRng, f: &Field) -> AdditiveMap {
    AdditiveMap::new(f, (0..f.degree()).map(|_| rng.random_range(0..f.p())).collect()).expect("e values")
}

fn random_apoly(rng: &mut SeededRng, f: &Field, deg: u32) -> APolynomial {
    let mut terms = Vec::new();
    for d in 1..=deg {
        if d == deg || rng.random_bool(0.5) {
            terms.push((vec![d], Elem(rng.random_range(1..f.order()))));
        }
    }
    let phi = PolyOverF::from_terms(f, 1, &terms).expect("univariate");
    let lambda = random_additive_map(rng, f);
    APolynomial::new(phi, lambda).expect("same field")
}

fn independent_elements(rng: &mut SeededRng, f: &Field, m: usize) -> LabResult<Vec<Elem>> {
    loop {
        let vs: Vec<Elem> = (0..m).map(|_| Elem(rng.random_range(1..f.order()))).collect();
        if AdditiveSubgroup::from_elements(f, &vs)?.dim() == m {
            return Ok(vs);
        }
    }
}

/// Seeded systems with `sum deg < m`: the solver's point is a nonzero common
/// zero, and the brute-force zero count matches and is divisible by `p`.
pub fn cw_systems_row(
    caps: &Caps,
    seed: u64,
    f: &Field,
    count: usize,
    max_vars: usize,
    stream: u64,
) -> LabResult<Record> {
    let p = f.p() as u64;
    let mut rec = Record::new("cw-systems", seed, json!({"q": f.order(), "systems": count, "max_vars": max_vars}));
    let mut rng = substream(seed, stream);
    let mut zeros = Vec::new();
    for s in 0..count {
        let (polys, m) = random_cw_system(&mut rng, f, max_vars);
        let Some(sol) = guard(&mut rec, cw_solve(&polys, m, caps.scan))? else { continue };
        rec.check(nonzero(&sol.point), || format!("system {s}: zero solution"));
        rec.check(polys.iter().all(|q| eval_terms(q, &sol.point).is_zero()), || format!("system {s}: not a zero"));
        let count = all_vectors(f, m).filter(|x| polys.iter().all(|q| eval_terms(q, x).is_zero())).count() as u64;
        rec.check(count_common_zeros(&polys, m, caps.scan)? == count, || format!("system {s}: zero count"));
        rec.check(count.is_multiple_of(p), || format!("system {s}: {count} zeros not divisible by {p}"));
        zeros.push(count);
    }
    Ok(rec.with_result(json!({"verified": zeros.len(), "min_zeros": zeros.iter().min()})))
}

fn check_substitution(rec: &mut Record, a: &APolynomial, vs: &[Elem]) -> LabResult<Option<PolyOverF>> {
    let f = a.field();
    let Some(h) = guard(rec, substitute_linear(a, vs))? else { return Ok(None) };
    rec.check(h.degree() <= a.degree(), || format!("degree {} above {}", h.degree(), a.degree()));
    for x in all_vectors(h.field(), vs.len()) {
        let point = x.iter().zip(vs).fold(Elem::ZERO, |acc, (&c, &v)| f.add(acc, f.scale(c.0, v)));
        rec.check(eval_terms(&h, &x).0 == a.eval(&[point]), || "substitution disagrees pointwise".into());
    }
    Ok(Some(h))
}

/// The trace example over `F_4` (`h = x_2`) and seeded substitutions over
/// `fields`, each checked pointwise and against the degree bound.
pub fn substitute_row(seed: u64, fields: &[Field], count: usize, stream: u64) -> LabResult<Record> {
    let qs: Vec<u32> = fields.iter().map(Field::order).collect();
    let mut rec = Record::new("cw-substitute", seed, json!({"q": qs, "instances": count}));
    let f4 = Field::with_order(4)?;
    let trace = APolynomial::new(PolyOverF::var(&f4, 1, 0), trace_map(&f4))?;
    if let Some(h) = check_substitution(&mut rec, &trace, &[Elem(1), Elem(2)])? {
        rec.check(h == PolyOverF::var(&f4.prime_subfield(), 2, 1), || "trace example is not x_2".into());
    }
    let mut rng = substream(seed, stream);
    for k in 0..count {
        let f = &fields[k % fields.len()];
        let deg = rng.random_range(1..=3);
        let a = random_apoly(&mut rng, f, deg);
        let m = rng.random_range(1..=f.degree() as usize);
        let vs = independent_elements(&mut rng, f, m)?;
        check_substitution(&mut rec, &a, &vs)?;
    }
    Ok(rec.with_result(json!({"trace_example": "x_2", "checked": count + 1})))
}

fn check_apoly_zero(
    rec: &mut Record,
    fs: &[APolynomial],
    sub: &AdditiveSubgroup,
    cap: u128,
) -> LabResult<Option<Elem>> {
    let Some(a) = guard(rec, find_apoly_zero(fs, sub, cap))? else { return Ok(None) };
    rec.check(!a.is_zero() && sub.contains(a), || "zero is trivial or outside the subgroup".into());
    for g in fs {
        rec.check(g.lambda().eval(eval_terms(g.phi(), &[a])) == 0, || "A-polynomial does not vanish".into());
    }
    Ok(Some(a))
}

/// `z^2 + x z` with the trace, then seeded systems of total degree below
/// `e`, each zero re-evaluated.
pub fn apoly_zero_row(caps: &Caps, seed: u64, f: &Field, count: usize, stream: u64) -> LabResult<Record> {
    let mut rec = Record::new("cw-apoly-zero", seed, json!({"q": f.order(), "instances": count}));
    let budget = f.degree().saturating_sub(1);
    if budget < 1 {
        rec.fail(format!("F_{} has degree 1 over its prime field; no A-polynomial fits", f.order()));
        return Ok(rec);
    }
    let full = AdditiveSubgroup::full(f);
    let mut example = None;
    if budget >= 2 {
        let phi = PolyOverF::from_terms(f, 1, &[(vec![2], Elem::ONE), (vec![1], f.generator())])?;
        let a = APolynomial::new(phi, trace_map(f))?;
        example = check_apoly_zero(&mut rec, &[a], &full, caps.scan)?;
    }
    let mut rng = substream(seed, stream);
    for _ in 0..count {
        let first = rng.random_range(1..=budget);
        let mut fs = vec![random_apoly(&mut rng, f, first)];
        let used = fs[0].degree();
        if used < budget && rng.random_bool(0.5) {
            fs.push(random_apoly(&mut rng, f, budget - used));
        }
        check_apoly_zero(&mut rec, &fs, &full, caps.scan)?;
    }
    Ok(rec.with_result(json!({"example_zero": example.map(|a| f.to_text(a))})))
}

/// One extension step from `c = 0` for seeded `S` of size 2 and `f` reading
/// the corner root coordinate; any extension found is checked on every
/// element of `U(S, c + F_p d)`.
pub fn extend_row(caps: &Caps, seed: u64, n: usize, f: &Field, count: usize, stream: u64) -> LabResult<Record> {
    let mut rec = Record::new("cw-extend", seed, json!({"n": n, "q": f.order(), "instances": count}));
    if n < 2 {
        rec.fail("n must be at least 2");
        return Ok(rec);
    }
    let gamma = one_param_positive(n);
    let us = unipotents(f, n, caps)?;
    let roots = root_order(n);
    let corner = roots.iter().position(|&r| r == (0, n - 1)).expect("corner root");
    let mut rng = substream(seed, stream);
    let (mut found, mut tried) = (0usize, 0usize);
    for _ in 0..count {
        let s: Vec<UnipotentElement> = (0..2).map(|_| us[rng.random_range(0..us.len())].clone()).collect();
        let lambda = random_additive_map(&mut rng, f);
        let apoly = APolynomial::new(PolyOverF::var(f, roots.len(), corner), lambda)?;
        let c = AdditiveSubgroup::zero(f);
        let Some(out) =
            guard(&mut rec, vanishing_extend(&s, &apoly, &c, &AdditiveSubgroup::full(f), &gamma, caps.group))?
        else {
            continue;
        };
        tried += 1;
        if let Some(ext) = out.found {
            found += 1;
            rec.check(!c.contains(ext.d) && ext.subgroup.contains(ext.d), || "d is not new".into());
            let g = usa_group(f, n, &s, &ext.subgroup, &gamma, caps.group)?;
            rec.check(g.order() == ext.group_order, || "group order differs".into());
            for m in g.elements() {
                let v = apoly.lambda().eval(root_factorize(&UnipotentElement::new(m)?).values[corner]);
                rec.check(v == 0, || "f does not vanish on the extended group".into());
            }
        }
    }
    Ok(rec.with_result(json!({"tried": tried, "extended": found})))
}

/// `m` is nonzero in `M_H` iff it lies outside the span of the columns of
/// `rho(h) - 1`.
fn nonzero_in_coinvariants(f: &Field, rho: &[Matrix], h: &[usize], m: &[Elem]) -> LabResult<bool> {
    let dim = m.len();
    let mut rels = Vec::new();
    for &g in h {
        let d = rho[g].sub(&Matrix::identity(f, dim))?;
        rels.extend((0..dim).map(|c| d.column(c)));
    }
    Ok(!Subspace::from_vectors(f, dim, &rels)?.contains(m)?)
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|d| n.is_multiple_of(*d)).unwrap_or(n)
}

/// Seeded modules of dimension `<= max_dim`; every nonzero `m` gets a
/// subgroup of index 1 or `p` with `m` nonzero in `M_H`, re-checked here.
pub fn coinv_row(
    seed: u64,
    name: &str,
    g: &FiniteGroup,
    l: &Field,
    modules: usize,
    max_dim: usize,
    stream: u64,
) -> LabResult<Record> {
    let p = smallest_prime_factor(g.order());
    let mut rec = Record::new(
        "coinvariants",
        seed,
        json!({"group": name, "ell": l.order(), "modules": modules, "max_dim": max_dim}),
    );
    if g.order().is_multiple_of(l.p() as usize) {
        rec.fail(format!("ell = {} divides |G| = {}", l.order(), g.order()));
        return Ok(rec);
    }
    let mut rng = substream(seed, stream);
    let (mut vectors, mut index_p, mut largest) = (0u64, 0u64, 0usize);
    for _ in 0..modules {
        let Some(rho) = guard(&mut rec, random_module(g, l, max_dim, &mut rng))? else { continue };
        let dim = rho[0].rows();
        largest = largest.max(dim);
        let direct = coinvariants(l, dim, &rho)?;
        for m in all_vectors(l, dim).filter(|v| nonzero(v)) {
            let Some(w) = guard(&mut rec, abelian_coinv_witness(g, &rho, &m))? else { continue };
            vectors += 1;
            rec.check(w.index == 1 || w.index == p, || format!("index {}", w.index));
            rec.check(w.index * w.subgroup.len() == g.order() && g.is_subgroup(&w.subgroup), || "bad subgroup".into());
            rec.check(nonzero_in_coinvariants(l, &rho, &w.subgroup, &m)?, || "image is zero".into());
            if w.index == 1 {
                rec.check(direct.apply(&m).is_ok_and(|v| nonzero(&v)), || "index 1 but zero in M_G".into());
            } else {
                index_p += 1;
            }
        }
    }
    Ok(rec.with_result(json!({"vectors": vectors, "index_p_witnesses": index_p, "max_module_dim": largest})))
}
