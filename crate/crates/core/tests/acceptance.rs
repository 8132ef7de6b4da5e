//! Acceptance suite: one PASS/FAIL line per criterion. All comparisons are exact.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use coincide_core::calculus::MapClassDescriptor as F;
use coincide_core::engine::{evaluate, NielsenValue, PairKind, PairQuery, Quantifier, Statement::*, Verdict};
use coincide_core::manifold::{euler_char_grassmann, Cardinality, GenericFields, ManifoldDescriptor as M};
use coincide_core::tables::HomotopyTables;
use coincide_core::Truth::{self, *};
use common::*;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn eval(q: &PairQuery) -> Result<Verdict, String> {
    evaluate(q, tables()).map_err(|e| format!("{q:?}: {e}"))
}

fn premises(v: &Verdict) -> Vec<&str> {
    v.trace.iter().flat_map(|s| s.premises.iter().map(String::as_str)).collect()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hopf_regression() -> Outcome {
    for h in 0..=4 {
        let v = eval(&PairQuery::selfpair(M::rp(6).unwrap(), 11, F::hopf(h)))?;
        check(v.get(S4) == Yes, || format!("h={h}: S4 = {}", v.get(S4)))?;
        let want = Truth::from(h % 4 == 0);
        check(v.get(S3) == want, || format!("h={h}: S3 = {}, expected {want}", v.get(S3)))?;
        let p = premises(&v);
        for needle in ["pi_11(S^6) = Z ", "pi_10(S^5) = Z/2 ", "pi_10(V(7,2)) = 0 "] {
            check(p.iter().any(|x| x.starts_with(needle)), || format!("h={h}: premise `{needle}` missing from trace"))?;
        }
    }
    Ok("h in 0..=4: S4 = yes, S3 = yes iff h = 0 mod 4, table premises traced".into())
}

fn degree_rule() -> Outcome {
    let mut cases = 0;
    for n in 2..=10 {
        for d in -3..=3 {
            let v = eval(&PairQuery::selfpair(M::sphere(n).unwrap(), n, F::degree(d)))?;
            if n % 2 == 0 {
                check(v.get(S4) == Truth::from(d == 0), || format!("n={n} d={d}: S4 = {}", v.get(S4)))?;
                let value = format!("= {}", 2 * d);
                check(premises(&v).iter().any(|p| p.contains("(1+(-1)^") && p.contains(&value)), || format!("n={n} d={d}: value 2d not reported"))?;
            } else {
                check(v.get(S4) == Yes, || format!("n={n} d={d}: S4 = {}", v.get(S4)))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases, n in [2,10], d in [-3,3]"))
}

/// Gaussian binomial at q = -1: signed count of partitions in a k x (r-k) box.
fn gaussian_at_minus_one(r: u32, k: u32) -> i64 {
    fn count(parts: u32, max: u32, size_parity: u32) -> [i64; 2] {
        if parts == 0 {
            let mut out = [0, 0];
            out[size_parity as usize] = 1;
            return out;
        }
        let mut out = [0, 0];
        for p in 0..=max {
            let sub = count(parts - 1, p, (size_parity + p) % 2);
            out[0] += sub[0];
            out[1] += sub[1];
        }
        out
    }
    let c = count(k, r - k, 0);
    c[0] - c[1]
}

fn grassmann_oracle() -> Outcome {
    let mut cases = 0;
    for r in 2..=12u32 {
        for k in 1..r {
            let got = euler_char_grassmann(r, k);
            let want = gaussian_at_minus_one(r, k);
            check(got == Some(want), || format!("chi(G({r},{k})) = {got:?}, oracle {want}"))?;
            if r % 2 == 0 && k % 2 == 1 {
                check(want == 0, || format!("G({r},{k}) should vanish"))?;
            }
            cases += 1;
        }
    }
    check(cases == 66, || format!("{cases} cases"))?;
    check(euler_char_grassmann(5, 2) == Some(2), || "chi(G(5,2)) != 2".into())?;
    Ok(format!("{cases} cases match, chi(G(5,2)) = 2"))
}

fn existence_rp4() -> Outcome {
    let v = eval(&PairQuery::new(M::rp(4).unwrap(), 8, PairKind::SelfPair, Quantifier::Exists))?;
    check(v.get(S4) == No && v.get(S6) == Yes, || format!("S4 = {}, S6 = {}", v.get(S4), v.get(S6)))?;
    check(v.notes.iter().any(|n| n.contains("exists")), || "no existence note".into())?;
    let p = premises(&v);
    for needle in ["|pi_8(ST(S^4))| = |pi_8(V(5,2))| = 2", "|pi_8(S^4)| = 4", "|pi_7(S^3)| = 2", "EHP orders 2, 4, 2, 12"] {
        check(p.contains(&needle), || format!("premise `{needle}` missing"))?;
    }
    check(v.steps_for(S7).chain(v.steps_for(S6)).any(|s| s.premises.iter().any(|x| x.contains("pi^S_4 = 0"))), || "pi^S_4 = 0 not traced for S6/S7".into())?;
    Ok("exists f with S4 = no, S6 = yes; orders 2, 4, 2 and pi^S_4 = 0 traced".into())
}

fn grassmann_g52() -> Outcome {
    for m in 2..=12 {
        let v = eval(&PairQuery::new(M::grassmann(5, 2).unwrap(), m, PairKind::General, Quantifier::Forall))?;
        check(v.get(S7) == Yes, || format!("m={m}: S7 = {}", v.get(S7)))?;
        if m <= 10 {
            check(v.collapse_trivial == Yes, || format!("m={m}: coll_* not reported trivial"))?;
        }
    }
    Ok("S7 = yes for m in [2,12], coll_* trivial for m <= 10".into())
}

fn double_covers() -> Outcome {
    for n in [2u32, 4, 6, 8, 10] {
        let desc = M::generic(GenericFields {
            dim: n,
            pi1: Some(Cardinality::Finite(2)),
            orientable: Yes,
            closed: Yes,
            ..Default::default()
        })
        .map_err(|e| e.to_string())?;
        let v = eval(&PairQuery::new(desc, n, PairKind::General, Quantifier::Forall))?;
        check(v.get(S3) == Yes, || format!("n={n}: S3 = {}", v.get(S3)))?;
    }
    for r in [4u32, 6, 8, 10, 12] {
        for m in 2..=20 {
            let v = eval(&PairQuery::new(M::grassmann(r, 2).unwrap(), m, PairKind::SelfPair, Quantifier::Forall))?;
            check(v.get(S4) == Yes, || format!("G({r},2), m={m}: S4 = {}", v.get(S4)))?;
        }
    }
    Ok("orientable pi1 = Z/2, m = n even: S3 = yes; G(r,2), r even: S4 = yes for m in [2,20]".into())
}

fn surfaces() -> Outcome {
    let mut catalog = vec![M::sphere(2).unwrap(), M::rp(2).unwrap()];
    for g in 0..=3 {
        catalog.push(M::surface(g, true).unwrap());
    }
    for g in 1..=4 {
        catalog.push(M::surface(g, false).unwrap());
    }
    for desc in &catalog {
        let exceptional = desc.pi1().is_some_and(|k| k != Cardinality::Infinite);
        for m in 2..=6 {
            let v = eval(&PairQuery::new(desc.clone(), m, PairKind::SelfPair, Quantifier::Forall))?;
            if m == 2 && exceptional {
                check(v.get(S2) != Yes, || format!("{desc}, m=2: S2 = yes"))?;
            } else {
                check(v.get(S2) == Yes, || format!("{desc}, m={m}: S2 = {}", v.get(S2)))?;
            }
        }
    }
    let v = eval(&PairQuery::selfpair(M::sphere(2).unwrap(), 2, F::degree(1)))?;
    check(v.get(S2) == No && v.steps_for(S5).any(|s| s.rule_id == "R-1.17-deg"), || "degree rule witness on S^2 missing".into())?;
    Ok(format!("{} surfaces x m in [2,6]; exceptions (2, S^2), (2, RP(2)) witnessed by degree 1 on S^2", catalog.len()))
}

fn nielsen_values() -> Outcome {
    for n in [2u32, 4, 6, 8, 10, 12] {
        let rp = M::rp(n).unwrap();
        let cases = [
            (PairQuery::general(rp.clone(), n, F::zero(), F::zero()), 0),
            (PairQuery::selfpair(rp.clone(), n, F::degree(1)), 1),
            (PairQuery::general(rp.clone(), n, F::degree(1), F::zero()), 2),
        ];
        for (q, want) in cases {
            let v = eval(&q)?;
            check(v.nielsen_sharp == NielsenValue::Exact(want) && v.nielsen_stable == NielsenValue::Exact(want), || {
                format!("RP({n}) ({}, {}): N# = {}, N = {}, expected {want}", q.f1, q.f2, v.nielsen_sharp, v.nielsen_stable)
            })?;
        }
    }
    Ok("RP(n), n in {2,...,12} even: (y0,y0) -> 0, (p,p) -> 1, (p,y0) -> 2; clamp checked in the fuzz".into())
}

fn lattice_fuzz() -> Outcome {
    let target = 10_000;
    let mut runner = TestRunner::deterministic();
    let strategy = query();
    let (mut evaluated, mut skipped, mut draws) = (0, 0, 0);
    let mut nielsen_decided = 0;
    while evaluated < target {
        draws += 1;
        check(draws < 20 * target, || "generator rejects too much".into())?;
        let q = strategy.new_tree(&mut runner).map_err(|e| e.to_string())?.current();
        if !valid(&q) {
            skipped += 1;
            continue;
        }
        let v = evaluate(&q, tables()).map_err(|e| format!("engine error on {q:?}: {e}"))?;
        let bad = all_violations(&q, &v);
        check(bad.is_empty(), || format!("{bad:?} on {q:?}"))?;
        nielsen_decided += usize::from(v.nielsen_sharp.exact().is_some());
        evaluated += 1;
    }
    Ok(format!("{evaluated} queries, 0 violations, 0 inconsistencies, idempotent ({skipped} invalid draws skipped, {nielsen_decided} decided N#)"))
}

fn table_integrity() -> Outcome {
    let t = HomotopyTables::bundled();
    let reparsed = coincide_core::tables::parse_tables(HomotopyTables::bundled_text()).map_err(|e| e.to_string())?;
    check(reparsed.stem_range() == t.stem_range(), || "reparse differs".into())?;
    let ehp = t.ehp_order_check().map_err(|e| e.to_string())?;
    check(ehp.orders == [2, 4, 2, 12], || format!("EHP orders {:?}", ehp.orders))?;
    check(ehp.first_e_injective && ehp.second_e_injective, || "EHP argument does not force injectivity".into())?;
    check(t.suspension_e(8, 4).value == Yes, || "E(8,4) not injective".into())?;
    let einf = t.suspension_einf(8, 4);
    check(einf.value == No, || format!("Einf(8,4) = {}", einf.value))?;
    Ok(format!("stability and EHP checks pass, orders {:?}; Einf(8,4) non-injective: {}", ehp.orders, einf.reason))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("hopf-invariant regression on RP(6), m = 11", hopf_regression),
        ("degree rule on S^n", degree_rule),
        ("Grassmann Euler characteristic oracle", grassmann_oracle),
        ("existence of omega# != 0 with omega~ = 0 on RP(4), m = 8", existence_rp4),
        ("G(5,2) stable invariant and coll_*", grassmann_g52),
        ("orientable double covers and G(r,2)", double_covers),
        ("surface selfpairs", surfaces),
        ("Nielsen numbers on RP(n)", nielsen_values),
        ("lattice coherence fuzz", lattice_fuzz),
        ("table integrity", table_integrity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS  {name} [exact, {ms} ms]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name} [exact, {ms} ms]: {why}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
