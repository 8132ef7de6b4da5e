#![allow(dead_code)]

use coincide_core::abelian::FgAbelianGroup;
use coincide_core::calculus::{validate_class, MapClassDescriptor as F};
use coincide_core::engine::{rule, reevaluate, NielsenValue, PairKind, PairQuery, Quantifier, Statement, Verdict};
use coincide_core::manifold::{Cardinality, GenericFields, ManifoldDescriptor as M};
use coincide_core::tables::HomotopyTables;
use coincide_core::Truth;
use proptest::prelude::*;
use proptest::sample::select;

pub fn tables() -> &'static HomotopyTables {
    HomotopyTables::bundled()
}

fn truth() -> impl Strategy<Value = Truth> {
    select(vec![Truth::Yes, Truth::No, Truth::Unknown])
}

fn generic() -> impl Strategy<Value = Option<M>> {
    let pi1 = select(vec![None, Some(Cardinality::Finite(1)), Some(Cardinality::Finite(2)), Some(Cardinality::Finite(3)), Some(Cardinality::Finite(4)), Some(Cardinality::Infinite)]);
    (2u32..=12, pi1, truth(), truth(), prop::option::of(-4i64..=4), truth()).prop_map(|(dim, pi1, orientable, closed, euler, free)| {
        M::generic(GenericFields { dim, pi1, orientable, closed, euler, free_finite_action: free, ..Default::default() }).ok()
    })
}

/// Named families plus consistent generic manifolds.
pub fn manifold() -> impl Strategy<Value = M> {
    let small = prop_oneof![(2u32..=5).prop_map(M::sphere), (2u32..=5).prop_map(M::rp)];
    prop_oneof![
        3 => (2u32..=12).prop_map(|n| M::sphere(n).ok()),
        3 => (2u32..=12).prop_map(|n| M::rp(n).ok()),
        2 => (3u32..=10, 1u32..=9).prop_map(|(r, k)| M::grassmann(r, k).ok()),
        1 => (3u32..=10, 1u32..=9).prop_map(|(r, k)| M::oriented_grassmann(r, k).ok()),
        1 => (3u32..=9, 1u32..=8).prop_map(|(r, k)| M::stiefel(r, k).ok()),
        1 => (0u32..=4, any::<bool>()).prop_map(|(g, o)| M::surface(g, o).ok()),
        1 => (small.clone(), small).prop_map(|(a, b)| match (a, b) {
            (Ok(a), Ok(b)) => M::product(vec![a, b]).ok(),
            _ => None,
        }),
        2 => generic(),
    ]
    .prop_filter_map("invalid manifold", |m| m)
}

fn coords_in(g: &FgAbelianGroup) -> BoxedStrategy<Vec<i64>> {
    let mut parts: Vec<BoxedStrategy<i64>> = (0..g.rank()).map(|_| (-3i64..=3).boxed()).collect();
    parts.extend(g.torsion().iter().map(|&d| (0..d as i64).boxed()));
    parts.boxed()
}

/// Map classes that pass validation on `(desc, m)` often.
pub fn class(desc: &M, m: u32) -> BoxedStrategy<F> {
    let n = desc.dim();
    let t = tables();
    let mut options: Vec<BoxedStrategy<F>> = vec![Just(F::zero()).boxed()];
    if desc.is_sphere_or_rp() && m == n {
        options.push((-3i64..=3).prop_map(F::degree).boxed());
    }
    if desc.is_sphere_or_rp() && m + 1 == 2 * n && n.is_multiple_of(2) {
        options.push((-4i64..=4).prop_map(F::hopf).boxed());
    }
    if let Some(g) = t.pi_sphere(m - 1, n - 1) {
        if !g.is_trivial() {
            options.push(coords_in(&g).prop_map(F::boundary).boxed());
        }
    }
    if let Some(g) = t.pi_sphere(m, n) {
        if !g.is_trivial() {
            options.push(coords_in(&g).prop_map(F::collapse).boxed());
        }
    }
    proptest::strategy::Union::new(options).boxed()
}

/// A random query; may fail validation (callers skip those).
pub fn query() -> impl Strategy<Value = PairQuery> {
    let kind = select(vec![PairKind::SelfPair, PairKind::Root, PairKind::General]);
    let quant = select(vec![Quantifier::Given, Quantifier::Forall, Quantifier::Exists]);
    (manifold(), 2u32..=20, kind, quant).prop_flat_map(|(desc, m, kind, quant)| {
        let base = PairQuery::new(desc.clone(), m, kind, quant);
        if quant != Quantifier::Given {
            return Just(base).boxed();
        }
        (class(&desc, m), class(&desc, m))
            .prop_map(move |(f1, f2)| {
                let mut q = base.clone();
                q.quantifier = Quantifier::Given;
                match kind {
                    PairKind::SelfPair => {
                        q.f1 = f1.clone();
                        q.f2 = f1;
                    }
                    PairKind::Root => q.f1 = f1,
                    PairKind::General => {
                        q.f1 = f1;
                        q.f2 = f2;
                    }
                }
                q
            })
            .boxed()
    })
}

pub fn valid(q: &PairQuery) -> bool {
    q.validate(tables()).is_ok() && [&q.f1, &q.f2].iter().all(|f| q.quantifier != Quantifier::Given || validate_class(&q.manifold, q.m, f, tables()).is_ok())
}

fn nielsen_values(v: &NielsenValue) -> Vec<u64> {
    match v {
        NielsenValue::Exact(x) => vec![*x],
        NielsenValue::OneOf(s) => s.iter().copied().collect(),
        NielsenValue::Unknown => vec![],
    }
}

/// Lattice closure of the statements.
pub fn lattice_violations(v: &Verdict) -> Vec<String> {
    use Statement::*;
    let g = |s| v.get(s);
    let mut out = Vec::new();
    let mut imp = |a: Statement, b: Statement| {
        if g(a).is_yes() && g(b).is_no() {
            out.push(format!("{a} = yes but {b} = no"));
        }
    };
    imp(S2, S3);
    imp(S3, S4);
    imp(S4, S6);
    imp(S6, S7);
    for (a, b) in [(S1, S2), (S4, S5)] {
        if g(a).is_known() && g(b).is_known() && g(a) != g(b) {
            out.push(format!("{a} != {b}"));
        }
    }
    out
}

/// Nielsen clamp and norm property.
pub fn nielsen_violations(q: &PairQuery, v: &Verdict) -> Vec<String> {
    let d = &q.manifold;
    let mut out = Vec::new();
    for (label, value, stmt) in [("N#", &v.nielsen_sharp, Statement::S4), ("N", &v.nielsen_stable, Statement::S6)] {
        if let Some(x) = value.exact() {
            if (x == 0) != v.get(stmt).is_yes() && v.get(stmt).is_known() {
                out.push(format!("{label} = {x} but {stmt} = {}", v.get(stmt)));
            }
        }
        for x in nielsen_values(value) {
            let k = d.pi1();
            let ok = match k {
                Some(Cardinality::Infinite) => x == 0,
                Some(Cardinality::Finite(k)) => {
                    x == 0
                        || x == k
                        || (x == 1
                            && k == 2
                            && !d.closed().is_no()
                            && !d.orientable().is_yes()
                            && d.dim().is_multiple_of(2)
                            && d.euler() != Some(0))
                }
                None => true,
            };
            if !ok {
                out.push(format!("{label} may be {x} with #pi1 = {k:?}"));
            }
        }
    }
    out
}

pub fn trace_violations(v: &Verdict) -> Vec<String> {
    let mut out = Vec::new();
    for s in Statement::ALL {
        if v.get(s).is_known() && v.steps_for(s).next().is_none() {
            out.push(format!("{s} decided without a trace step"));
        }
    }
    for step in &v.trace {
        match rule(&step.rule_id) {
            Some(r) if !step.quote.is_empty() && r.quote == step.quote => {}
            _ => out.push(format!("bad trace step {}", step.rule_id)),
        }
    }
    out
}

pub fn idempotence_violation(q: &PairQuery, v: &Verdict) -> Option<String> {
    match reevaluate(q, tables(), v) {
        Ok(again) if &again == v => None,
        Ok(_) => Some("re-evaluation changed the verdict".into()),
        Err(e) => Some(format!("re-evaluation failed: {e}")),
    }
}

pub fn all_violations(q: &PairQuery, v: &Verdict) -> Vec<String> {
    let mut out = lattice_violations(v);
    out.extend(nielsen_violations(q, v));
    out.extend(trace_violations(v));
    out.extend(idempotence_violation(q, v));
    out
}
