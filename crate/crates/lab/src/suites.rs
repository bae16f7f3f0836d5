//! The thirteen acceptance blocks, each a fixed list of rows.

use std::time::{Duration, Instant};

use serde_json::json;
use steinberg_core::matgroup::{unipotent_group, FiniteGroup};
use steinberg_core::steinberg::Certificate;
use steinberg_core::Field;

use crate::rows::*;
use crate::{Caps, LabResult, Record};

pub const DEFAULT_SEED: u64 = 20_240_601;

pub struct Suite {
    pub criterion: u8,
    pub name: &'static str,
    pub limit: Duration,
    pub run: fn(&Caps, u64) -> LabResult<Vec<Record>>,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub const SUITES: [Suite; 13] = [
    Suite { criterion: 1, name: "solomon-tits", limit: secs(60), run: solomon_tits },
    Suite { criterion: 2, name: "apartment", limit: secs(30), run: apartment },
    Suite { criterion: 3, name: "equivariance", limit: secs(30), run: equivariance },
    Suite { criterion: 4, name: "gate", limit: secs(60), run: gate },
    Suite { criterion: 5, name: "gl2-matrix", limit: secs(120), run: gl2_matrix },
    Suite { criterion: 6, name: "equal-char", limit: secs(60), run: equal_char },
    Suite { criterion: 7, name: "grpring", limit: secs(30), run: grpring },
    Suite { criterion: 8, name: "counterexample", limit: secs(30), run: counterexample },
    Suite { criterion: 9, name: "symidentity", limit: secs(30), run: symidentity },
    Suite { criterion: 10, name: "positivity", limit: secs(60), run: positivity },
    Suite { criterion: 11, name: "census", limit: secs(120), run: census },
    Suite { criterion: 12, name: "cw", limit: secs(60), run: cw },
    Suite { criterion: 13, name: "coinvariants", limit: secs(60), run: coinvariants_suite },
];

pub fn find(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

pub fn names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

pub struct SuiteReport {
    pub criterion: u8,
    pub name: &'static str,
    pub limit: Duration,
    pub rows: Vec<Record>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.pass)
    }

    pub fn within_limit(&self) -> bool {
        self.elapsed <= self.limit
    }
}

pub fn run_suite(suite: &Suite, caps: &Caps, seed: u64) -> LabResult<SuiteReport> {
    let start = Instant::now();
    let rows = (suite.run)(caps, seed)?;
    Ok(SuiteReport { criterion: suite.criterion, name: suite.name, limit: suite.limit, rows, elapsed: start.elapsed() })
}

fn f(q: u64) -> Field {
    Field::with_order(q).expect("small prime power")
}

fn fields(qs: &[u64]) -> Vec<Field> {
    qs.iter().map(|&q| f(q)).collect()
}

fn u_table(n: usize, q: u64, caps: &Caps) -> LabResult<FiniteGroup> {
    Ok(unipotent_group(&f(q), n, caps.group)?.cayley_table()?)
}

fn solomon_tits(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let ells = fields(&[2, 3, 5, 7]);
    [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3)]
        .into_iter()
        .map(|(n, q)| solomon_tits_row(caps, seed, n, &f(q), &ells))
        .collect()
}

fn apartment(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for (i, (n, q)) in [(2, 2), (2, 3), (2, 5), (3, 2)].into_iter().enumerate() {
        for l in [2, 3, 5, 7] {
            rows.push(apartment_row(caps, seed, n, &f(q), &f(l), 100, (i * 10) as u64 + l)?);
        }
    }
    Ok(rows)
}

fn equivariance(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for (n, q) in [(2, 3), (3, 2)] {
        for l in [2, 3] {
            rows.push(equivariance_row(caps, seed, n, &f(q), &f(l))?);
        }
    }
    Ok(rows)
}

fn gate(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for (i, (n, q, l)) in [(2, 3, 2), (2, 2, 3), (2, 5, 3), (3, 2, 3), (3, 2, 5)].into_iter().enumerate() {
        rows.push(gate_row(caps, seed, n, &f(q), &f(l), GateMode::Auto(500), i as u64)?);
    }
    // The seeded mode on a case the exhaustive pass already covers.
    rows.push(gate_row(caps, seed, 3, &f(2), &f(3), GateMode::Seeded(500), 5)?);
    Ok(rows)
}

fn gl2_matrix(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for (i, q) in [2, 3, 5].into_iter().enumerate() {
        for (j, l) in [2, 3, 5, 7].into_iter().enumerate() {
            let mut rec = irreducible_row(caps, seed, 2, &f(q), &f(l), (i * 4 + j) as u64)?;
            rec.task = "gl2-matrix".into();
            let reducible = (q + 1) % l == 0;
            let against = if reducible { json!("group") } else { json!(null) };
            let ok = rec.result["witness_checked_against"] == against;
            rec.check(ok, || "reducible cell without a whole-group witness check".into());
            rec.result["source"] = json!(if reducible { "rule: ell | q+1" } else { "computed" });
            rows.push(rec);
        }
    }
    Ok(rows)
}

fn equal_char(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rec = irreducible_row(caps, seed, 3, &f(2), &f(2), 0)?;
    rec.task = "equal-char".into();
    let cert = crate::rows::certificate_json(&Certificate::ExhaustiveSpin { vectors: 255 });
    let r = rec.result.clone();
    rec.check(r["dim"] == json!(8), || format!("dim {}", r["dim"]));
    rec.check(r["verdict"] == json!("irreducible"), || "reported reducible".into());
    rec.check(r["certificate"] == cert, || format!("certificate {}", r["certificate"]));
    Ok(vec![rec])
}

fn grpring(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let cases = [
        ("C2", FiniteGroup::cyclic(2), 2),
        ("C2xC2", FiniteGroup::elementary_abelian(2, 2), 2),
        ("U3(F2)", u_table(3, 2, caps)?, 2),
        ("C3", FiniteGroup::cyclic(3), 3),
        ("U2(F3)", u_table(2, 3, caps)?, 3),
        ("C2", FiniteGroup::cyclic(2), 3),
    ];
    let mut rows = Vec::new();
    for (i, (name, g, l)) in cases.into_iter().enumerate() {
        let mut rec = grpring_row(seed, name, g, &f(l), 0, 2 * i as u64);
        rec.check(rec.result["unique_max_exhaustive"] == json!(true), || "unique-maximal check not exhaustive".into());
        rows.push(rec);
    }
    Ok(rows)
}

fn counterexample(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut found = counterexample_row(caps, seed, 2, &f(2), &f(3), 0, 0)?;
    let r = found.result.clone();
    found.check(r["exhaustive"] == json!(true), || "search was not exhaustive".into());
    found.check(r["found"] == json!(true), || "no counterexample over F_3".into());
    found.check(r["ideal_dim"] == json!(1) && r["epsilon"] == json!(2), || format!("ideal {r}"));
    let mut none = counterexample_row(caps, seed, 2, &f(2), &f(2), 0, 1)?;
    let r = none.result.clone();
    none.check(r["exhaustive"] == json!(true) && r["found"] == json!(false), || format!("search over F_2: {r}"));
    Ok(vec![found, none])
}

fn symidentity(_caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = (1..=8).map(|n| symbolic_row(seed, n)).collect::<LabResult<Vec<_>>>()?;
    rows.push(numeric_row(seed, 1000, 1));
    rows.push(lemma_row(seed, 100, &[4, 9, 25], 4, 4, 2)?);
    Ok(rows)
}

fn positivity(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for q in [2, 3, 4, 5] {
        for n in 1..=3 {
            rows.push(positivity_exhaustive_row(caps, seed, n, &f(q))?);
        }
    }
    for n in [4, 5] {
        rows.push(positivity_seeded_row(seed, n, &f(2), 1000, n as u64)?);
    }
    rows.push(oneparam_row(seed, &[2, 3, 4, 5, 6, 7])?);
    Ok(rows)
}

fn census(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    Ok(vec![census_row(caps, seed, 3, &f(2), 2)?, word_set_row(caps, seed, 3, &f(2), 2)?])
}

fn cw(caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let mut rows = Vec::new();
    for p in [2, 3, 5] {
        rows.push(cw_systems_row(caps, seed, &f(p), 100, if p == 5 { 5 } else { 6 }, p)?);
    }
    rows.push(substitute_row(seed, &fields(&[4, 8, 9, 16, 25, 27]), 100, 7)?);
    rows.push(apoly_zero_row(caps, seed, &f(8), 50, 8)?);
    Ok(rows)
}

fn coinvariants_suite(_caps: &Caps, seed: u64) -> LabResult<Vec<Record>> {
    let cases = [
        ("C2", FiniteGroup::cyclic(2), 3),
        ("C2xC2", FiniteGroup::elementary_abelian(2, 2), 3),
        ("C3", FiniteGroup::cyclic(3), 2),
    ];
    cases.into_iter().enumerate().map(|(i, (name, g, l))| coinv_row(seed, name, &g, &f(l), 100, 6, i as u64)).collect()
}
