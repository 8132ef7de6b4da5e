use std::collections::BTreeSet;

use super::{EngineError, Firing, PairKind, PairQuery, Quantifier, State};
use crate::abelian::GroupOrder;
use crate::calculus::{
    boundary_status, collapse_pushforward_trivial, ker_id_plus_inv_trivial, nielsen_number_special, omega_stable_pair,
    omega_stable_self, omega_underline_self, root_degree_status, subtract_classes, CollapseInfo, MapClassDescriptor,
    MapRep, ObstructionValue, Status,
};
use crate::engine::verdict::{Conclusion, Statement};
use crate::manifold::{punctured_inclusion_onto, w1_not_injective, Cardinality, ManifoldDescriptor, ManifoldKind};
use crate::tables::HomotopyTables;
use crate::truth::Truth;

use Statement::*;

pub(crate) type RuleFn = fn(&Context<'_>, &State, &mut Vec<Firing>);

pub(crate) const EXISTENCE_RULES: &[&str] = &["R-4.6", "R-1.26", "R-EX"];

/// Precomputed facts about one query.
pub(crate) struct Context<'a> {
    pub q: &'a PairQuery,
    pub t: &'a HomotopyTables,
    pub n: u32,
    pub m: u32,
    pub k: Option<Cardinality>,
    boundary: Option<ObstructionValue>,
    underline: Option<ObstructionValue>,
    stable_self: Option<ObstructionValue>,
    stable_pair: ObstructionValue,
    root_degree: Option<ObstructionValue>,
    f2_self: Option<ObstructionValue>,
    collapse: CollapseInfo,
    pub notes: Vec<String>,
}

impl<'a> Context<'a> {
    pub fn new(q: &'a PairQuery, t: &'a HomotopyTables) -> Result<Self, EngineError> {
        let desc = &q.manifold;
        let (m, n) = (q.m, desc.dim());
        let given = q.quantifier == Quantifier::Given;
        let opaque = MapClassDescriptor::opaque();
        let f1 = if given { &q.f1 } else { &opaque };
        let f2 = if given || q.kind == PairKind::Root { &q.f2 } else { &opaque };
        let mut notes = Vec::new();
        let (mut boundary, mut underline, mut stable_self) = (None, None, None);
        let (mut root_degree, mut f2_self) = (None, None);
        match q.kind {
            PairKind::SelfPair => {
                boundary = Some(boundary_status(desc, m, f1, t)?);
                underline = Some(omega_underline_self(desc, m, f1, t)?);
                stable_self = Some(omega_stable_self(desc, m, f1, t)?);
            }
            PairKind::Root => root_degree = Some(root_degree_status(desc, m, f1, t)),
            PairKind::General => {
                let diff = if given { subtract_classes(f1, f2) } else { Some(opaque.clone()) };
                match diff {
                    Some(d) => root_degree = Some(root_degree_status(desc, m, &d, t)),
                    None => notes.push(format!("f1 - f2 is not computable from mixed representations ({} and {})", f1.rep.name(), f2.rep.name())),
                }
                f2_self = Some(omega_underline_self(desc, m, f2, t)?);
            }
        }
        if let MapRep::Hopf { h } = f1.rep {
            if (m, n) == (11, 6) && h % 2 != 0 {
                notes.push(format!("H = {h} is odd; Hopf invariants on pi_11(S^6) are even, evaluated by H mod 4"));
            }
        }
        let stable_pair = omega_stable_pair(desc, m, f1, f2, t);
        if let (Status::Unknown, Some(g)) = (stable_pair.status, stable_pair.order_info) {
            if g != 0 {
                notes.push(format!("omega(f1,f2) is annihilated by {g}"));
            }
        }
        let collapse = collapse_pushforward_trivial(desc, m, t);
        Ok(Self {
            q,
            t,
            n,
            m,
            k: desc.pi1(),
            boundary,
            underline,
            stable_self,
            stable_pair,
            root_degree,
            f2_self,
            collapse,
            notes,
        })
    }

    fn desc(&self) -> &ManifoldDescriptor {
        &self.q.manifold
    }

    fn is_self(&self) -> bool {
        self.q.kind == PairKind::SelfPair
    }

    fn given(&self) -> bool {
        self.q.quantifier == Quantifier::Given
    }

    fn exists(&self) -> bool {
        self.q.quantifier == Quantifier::Exists
    }

    fn mn(&self) -> String {
        format!("m = {}, n = {}", self.m, self.n)
    }
}

fn set(out: &mut Vec<Firing>, rule: &'static str, premises: Vec<String>, statement: Statement, value: Truth) {
    if value.is_known() {
        out.push(Firing { rule, premises, conclusion: Conclusion::Statement { statement, value } });
    }
}

fn status_truth(v: &ObstructionValue) -> Truth {
    v.status.vanishes()
}

/// `a => b` and its contrapositive.
fn implies(s: &State, out: &mut Vec<Firing>, rule: &'static str, a: Statement, b: Statement) {
    if s.get(a).is_yes() {
        set(out, rule, vec![format!("{a} = yes")], b, Truth::Yes);
    }
    if s.get(b).is_no() {
        set(out, rule, vec![format!("{b} = no")], a, Truth::No);
    }
}

fn equivalent(s: &State, out: &mut Vec<Firing>, rule: &'static str, group: &[Statement], premise: &str) {
    if let Some(&known) = group.iter().find(|x| s.get(**x).is_known()) {
        let v = s.get(known);
        for &other in group {
            if s.get(other).is_unknown() {
                set(out, rule, vec![format!("{known} = {v}"), premise.to_string()], other, v);
            }
        }
    }
}

fn nielsen(out: &mut Vec<Firing>, rule: &'static str, premises: Vec<String>, sharp: bool, values: BTreeSet<u64>) {
    let conclusion = if sharp { Conclusion::NielsenSharp { values } } else { Conclusion::NielsenStable { values } };
    out.push(Firing { rule, premises, conclusion });
}

fn r_1_3(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    let d = c.desc();
    let mut premises = Vec::new();
    if c.m < c.n {
        premises.push(format!("m = {} < n = {}", c.m, c.n));
    }
    if d.compact().is_no() {
        premises.push("N noncompact".into());
    }
    if d.pi1() == Some(Cardinality::Infinite) {
        premises.push("pi1(N) infinite".into());
    }
    if d.fibration_with_section().is_yes() {
        premises.push("N is a fibration with a section and positive-dimensional fibre and base".into());
    }
    if !premises.is_empty() {
        set(out, "R-1.3", premises, S3, Truth::Yes);
    }
}

fn r_2_1(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if punctured_inclusion_onto(c.desc(), c.m).is_yes() {
        let mut premises = vec![format!("i_* : pi_{m}(N - pt) -> pi_{m}(N) onto", m = c.m)];
        if let ManifoldKind::Grassmann { r, k: 2 } = c.desc().kind() {
            premises.push(format!("V({r},2) -> S^{} has a section (r = {r} even)", r - 1));
        }
        set(out, "R-2.1", premises, S3, Truth::Yes);
    }
}

fn r_1_4(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() {
        return;
    }
    let d = c.desc();
    let mut premises = Vec::new();
    if d.compact().is_no() {
        premises.push("N noncompact".into());
    }
    if d.euler() == Some(0) {
        premises.push("chi(N) = 0".into());
    } else if c.n % 2 == 1 {
        premises.push(format!("n = {} odd", c.n));
    }
    if let Some(g) = c.t.pi_sphere(c.m - 1, c.n - 1) {
        if g.is_trivial() {
            premises.push(format!("pi_{}(S^{}) = 0", c.m - 1, c.n - 1));
        }
    }
    if !premises.is_empty() {
        set(out, "R-1.4", premises, S2, Truth::Yes);
    }
}

/// Whether `N` might be `S^2` or `RP(2)`.
fn maybe_sphere_or_rp2(d: &ManifoldDescriptor) -> bool {
    !(d.compact().is_no() || d.pi1() == Some(Cardinality::Infinite) || d.euler().is_some_and(|e| e <= 0))
}

fn r_1_5(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || c.n != 2 {
        return;
    }
    if c.m == 2 && maybe_sphere_or_rp2(c.desc()) {
        return;
    }
    let why = if c.m == 2 { "N is neither S^2 nor RP(2)".to_string() } else { format!("m = {} != 2", c.m) };
    set(out, "R-1.5", vec!["n = 2".into(), why], S2, Truth::Yes);
}

fn r_1_6(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if !c.is_self() {
        implies(s, out, "R-1.6", S3, S4);
    }
}

fn r_1_7(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if c.m + 2 >= 2 * c.n {
        return;
    }
    let premise = format!("m = {} < 2n - 2 = {}", c.m, 2 * c.n - 2);
    equivalent(s, out, "R-1.7", &[S3, S4, S6], &premise);
    if c.is_self() {
        equivalent(s, out, "R-1.7", &[S2, S4], &premise);
    }
}

fn r_1_11(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if c.q.kind != PairKind::Root {
        return;
    }
    let exact = c.desc().is_sphere_or_rp() || c.m + 3 <= 2 * c.n || c.n <= 2;
    if exact {
        equivalent(s, out, "R-1.11", &[S3, S4], "i_* -> deg# exact");
    }
}

fn r_1_17_deg(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    let MapRep::Degree { d } = c.q.f1.rep else { return };
    if !c.is_self() || !c.given() {
        return;
    }
    let n = c.n;
    let value = if n.is_multiple_of(2) { 2 * d } else { 0 };
    let premises = vec![
        format!("N = {}, m = n = {n}, degree {d}", c.desc()),
        format!("E(boundary[f]) = (1+(-1)^{n}) * {d} = {value} in pi_{n}(S^{n}) = Z"),
    ];
    let vanishes = Truth::from(value == 0);
    set(out, "R-1.17-deg", premises.clone(), S5, vanishes);
    set(out, "R-1.17-deg", premises.clone(), S1, vanishes);
    if n.is_multiple_of(2) {
        set(out, "R-1.17-deg", premises, S3, vanishes);
    }
}

fn r_1_17_hopf(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    let MapRep::Hopf { h } = c.q.f1.rep else { return };
    if !c.is_self() || !c.given() || (c.m, c.n) != (11, 6) || !c.desc().is_sphere_or_rp() {
        return;
    }
    let entry = |m, n| c.t.sphere_entry(m, n).map(|e| format!("pi_{m}(S^{n}) = {} [{}]", e.group, e.source));
    let mut premises: Vec<String> = [entry(11, 6), entry(10, 5)].into_iter().flatten().collect();
    if let Some(v) = c.t.stiefel_entry(10, 7, 2) {
        premises.push(format!("pi_10(V(7,2)) = {} [{}]", v.group, v.source));
    }
    premises.push("H/2 : pi_11(S^6) -> Z iso, boundary onto Z/2, E trivial".into());
    premises.push(format!("H(f~) = {h}, H mod 4 = {}", h.rem_euclid(4)));
    let in_kernel = Truth::from(h % 4 == 0);
    set(out, "R-1.17-hopf", premises.clone(), S1, in_kernel);
    set(out, "R-1.17-hopf", premises.clone(), S5, Truth::Yes);
    if c.desc().is_sphere() {
        set(out, "R-1.17-hopf", premises, S3, Truth::Yes);
    } else {
        set(out, "R-1.17-hopf", premises, S3, in_kernel);
    }
}

fn r_e_trivial(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || c.m < c.n {
        return;
    }
    let fact = c.t.suspension_e_trivial(c.m, c.n);
    if fact.value.is_yes() {
        set(out, "R-E-trivial", vec![format!("E : pi_{}(S^{}) -> pi_{}(S^{}) trivial: {}", c.m - 1, c.n - 1, c.m, c.n, fact.reason)], S5, Truth::Yes);
    }
}

fn r_1_14(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if let Some(b) = &c.boundary {
        set(out, "R-1.14", vec![format!("boundary[f]: {}", b.reason)], S1, status_truth(b));
    }
    if let Some(u) = &c.underline {
        set(out, "R-1.14", vec![format!("E(boundary[f]): {}", u.reason)], S5, status_truth(u));
    }
}

fn r_1_15(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if !c.is_self() {
        return;
    }
    equivalent(s, out, "R-1.15", &[S1, S2], "(i) <=> (ii)");
    implies(s, out, "R-1.15", S2, S3);
    implies(s, out, "R-1.15", S3, S4);
    equivalent(s, out, "R-1.15", &[S4, S5], "(iv) <=> (v)");
    if c.desc().is_rp() {
        equivalent(s, out, "R-1.15", &[S2, S3], "N = RP(n): (ii) <=> (iii)");
    }
    if c.desc().is_sphere() {
        equivalent(s, out, "R-1.15", &[S3, S4], "N = S^n: (iii) <=> (iv)");
    }
}

fn r_1_16(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || c.m < c.n {
        return;
    }
    let e = c.t.suspension_e(c.m, c.n);
    if e.value.is_yes() {
        let premise = format!("E injective at ({}, {}): {}", c.m, c.n, e.reason);
        equivalent(s, out, "R-1.16", &[S1, S2, S3, S4, S5], &premise);
    }
}

fn r_1_16b(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || c.m < c.n {
        return;
    }
    let premise = if c.m <= c.n + 3 {
        format!("m = {} <= n + 3", c.m)
    } else {
        let einf = c.t.suspension_einf(c.m, c.n);
        if !einf.value.is_yes() {
            return;
        }
        format!("Einf injective at ({}, {}): {}", c.m, c.n, einf.reason)
    };
    equivalent(s, out, "R-1.16b", &[S1, S2, S3, S4, S5, S7], &premise);
}

fn r_1_20(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    let Some(deg) = &c.root_degree else { return };
    match c.q.kind {
        PairKind::Root => set(out, "R-1.20", vec![format!("deg#(f): {}", deg.reason)], S4, status_truth(deg)),
        PairKind::General => {
            let Some(selfpart) = &c.f2_self else { return };
            let premises = vec![format!("deg#(f1 - f2): {}", deg.reason), format!("omega#(f2,f2): {}", selfpart.reason)];
            let value = match (deg.status, selfpart.status) {
                (Status::Zero, Status::Zero) => Truth::Yes,
                (Status::Zero, Status::Nonzero) | (Status::Nonzero, Status::Zero) => Truth::No,
                _ => Truth::Unknown,
            };
            set(out, "R-1.20", premises, S4, value);
        }
        PairKind::SelfPair => {}
    }
}

fn r_1_21(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || !w1_not_injective(c.desc()).is_yes() {
        return;
    }
    let k = c.k.map_or("?".into(), |k| k.to_string());
    let premise = format!("#pi1(N) = {k}, orientable = {}", c.desc().orientable());
    set(out, "R-1.21", vec![premise.clone()], S4, Truth::Yes);
    if c.m + 2 < 2 * c.n || c.m <= c.n + 3 {
        set(out, "R-1.21", vec![premise, c.mn()], S2, Truth::Yes);
    }
}

fn r_1_22(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if ker_id_plus_inv_trivial(c.desc(), c.m).is_yes() {
        let premises = vec![format!("m = n = {} even, N orientable, pi1(N) = Z/2", c.n), "ker(id + inv) = 0".into()];
        set(out, "R-1.22", premises, S3, Truth::Yes);
    }
}

fn r_1_23(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() {
        return;
    }
    if let ManifoldKind::OrientedGrassmann { r, k } = c.desc().kind() {
        if r % 2 == 0 {
            let premise = format!("G~({r},{k}) double covers G({r},{k}), orientable with nontrivial pi1");
            set(out, "R-1.23", vec![premise], S4, Truth::Yes);
        }
    }
}

fn r_1_24(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if c.is_self() && c.given() && c.desc().pi1_nontrivial().is_yes() && c.q.f1.j_boundary_zero.is_yes() {
        set(out, "R-1.24", vec!["pi1(N) != 0".into(), "j_* boundary[f] = 0 (given)".into()], S4, Truth::Yes);
    }
}

fn r_1_25(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.is_self() || !c.desc().pi1_nontrivial().is_yes() {
        return;
    }
    let d = c.desc();
    let (m, n) = (c.m, c.n);
    let rp2_exception = n == 2 && m == 2 && c.k.is_none_or(|k| k == Cardinality::Finite(2));
    let mut failed = Vec::new();
    if !rp2_exception {
        if n % 2 == 1 {
            failed.push(format!("n = {n} odd"));
        } else if m < n {
            failed.push(format!("m = {m} < n = {n}"));
        } else if n < 4 {
            failed.push(format!("n = {n} < 4 and (m, N) != (2, RP(2))"));
        }
    }
    if d.closed().is_no() {
        failed.push("N not closed".into());
    }
    if d.orientable().is_yes() {
        failed.push("N orientable".into());
    }
    if let Some(k) = c.k.filter(|k| *k != Cardinality::Finite(2)) {
        failed.push(format!("#pi1(N) = {k} != 2"));
    }
    if d.euler() == Some(0) {
        failed.push("chi(N) = 0".into());
    }
    if punctured_inclusion_onto(d, m).is_yes() {
        failed.push("i_* onto".into());
    }
    if d.free_finite_action().is_yes() {
        failed.push("N admits a free action of a nontrivial finite group".into());
    }
    if !failed.is_empty() {
        set(out, "R-1.25", failed, S4, Truth::Yes);
    }
}

fn r_3_15(_: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    implies(s, out, "R-3.15", S4, S6);
    implies(s, out, "R-3.15", S6, S7);
}

fn r_4_1(c: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    if !c.is_self() {
        return;
    }
    equivalent(s, out, "R-4.1", &[S6, S7], "only the trivial Nielsen class contributes");
    let premises = vec!["selfpair: only A = 0 contributes".to_string()];
    nielsen(out, "R-4.1", premises.clone(), true, [0, 1].into());
    nielsen(out, "R-4.1", premises, false, [0, 1].into());
}

fn r_4_8(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if let Some(v) = &c.stable_self {
        let mut premises = vec![format!("omega(f,f): {}", v.reason)];
        if let Some(w) = &v.witness {
            premises.push(format!("value {} in {}", w.element, w.carrier));
        }
        set(out, "R-4.8", premises, S7, status_truth(v));
    }
}

fn r_4_9(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if c.stable_pair.status == Status::Zero {
        set(out, "R-4.9", vec![c.stable_pair.reason.clone()], S7, Truth::Yes);
    }
}

fn r_1_28(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if c.collapse.coll.is_yes() {
        let premises = vec![c.collapse.reason.clone(), format!("coll_* : pi_{m}(N) -> pi_{m}(S^{n})", m = c.m, n = c.n)];
        out.push(Firing { rule: "R-1.28", premises, conclusion: Conclusion::CollapseTrivial { value: Truth::Yes } });
    }
}

fn finite_order(g: Option<crate::abelian::FgAbelianGroup>) -> Option<u64> {
    match g?.order() {
        GroupOrder::Finite(o) => Some(o),
        GroupOrder::Infinite => None,
    }
}

fn r_4_6(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.exists() || !c.is_self() || !c.desc().is_sphere_or_rp() || c.n % 2 == 1 || c.m <= c.n {
        return;
    }
    let (m, n) = (c.m, c.n);
    let (Some(st), Some(total), Some(fibre)) = (
        finite_order(c.t.pi_stiefel(m, n + 1, 2)),
        finite_order(c.t.pi_sphere(m, n)),
        finite_order(c.t.pi_sphere(m - 1, n - 1)),
    ) else {
        return;
    };
    if st >= total {
        return;
    }
    let mut premises = vec![
        format!("|pi_{m}(ST(S^{n}))| = |pi_{m}(V({},2))| = {st}", n + 1),
        format!("|pi_{m}(S^{n})| = {total}"),
        format!("|pi_{}(S^{})| = {fibre}", m - 1, n - 1),
        "so boundary : pi_m(S^n) -> pi_{m-1}(S^{n-1}) is nonzero on some class".into(),
    ];
    if c.desc().is_rp() {
        premises.push(format!("pi_{m}(RP({n})) = pi_{m}(S^{n}) via the covering"));
    }
    set(out, "R-4.6", premises.clone(), S1, Truth::No);
    let e = c.t.suspension_e(m, n);
    if e.value.is_yes() {
        let mut p = premises.clone();
        p.push(format!("E injective at ({m}, {n}): {}", e.reason));
        if (m, n) == (8, 4) {
            if let Ok(ehp) = c.t.ehp_order_check() {
                let o = ehp.orders;
                p.push(format!("EHP orders {}, {}, {}, {}", o[0], o[1], o[2], o[3]));
            }
        }
        set(out, "R-4.6", p, S5, Truth::No);
    }
    if c.t.pi_stable(m - n).is_some_and(|g| g.is_trivial()) {
        premises.push(format!("pi^S_{} = 0", m - n));
        set(out, "R-4.6", premises, S7, Truth::Yes);
    }
}

fn r_1_26(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.exists() || !c.is_self() || !c.desc().is_rp() {
        return;
    }
    let n = c.n;
    if c.m + 1 != 2 * n || ![4, 8, 12, 14, 16, 20].contains(&n) {
        return;
    }
    let mut premises = vec![format!("N = RP({n}), m = 2n - 1 = {}", c.m), "omega(f,f) = 2 Einf[f~]".into()];
    match c.t.pi_stable(n - 1) {
        Some(stem) if !stem.has_element_of_order_above(2) => return,
        Some(stem) => premises.push(format!("Einf onto pi^S_{} = {stem}, which has elements of order > 2", n - 1)),
        None => premises.push(format!("Einf onto pi^S_{}, which has elements of order > 2", n - 1)),
    }
    set(out, "R-1.26", premises, S7, Truth::No);
}

fn r_ex(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.exists() || c.is_self() || !c.desc().is_sphere_or_rp() || c.m < c.n {
        return;
    }
    if let Some(g) = c.t.pi_sphere(c.m, c.n).filter(|g| !g.is_trivial()) {
        let premises = vec![
            format!("pi_{}(N) = pi_{}(S^{}) = {g} != 0", c.m, c.m, c.n),
            "deg# injective: i_* = 0 from the punctured manifold".into(),
        ];
        set(out, "R-EX", premises, S4, Truth::No);
    }
}

fn r_1_30(_: &Context<'_>, s: &State, out: &mut Vec<Firing>) {
    for (sharp, stmt, cands) in [(true, S4, &s.sharp), (false, S6, &s.stable)] {
        let label = if sharp { "N#" } else { "N" };
        match s.get(stmt) {
            Truth::Yes => nielsen(out, "R-1.30", vec![format!("{stmt} = yes")], sharp, [0].into()),
            Truth::No => {
                if let Some(cands) = cands {
                    let nonzero: BTreeSet<u64> = cands.iter().copied().filter(|&v| v != 0).collect();
                    nielsen(out, "R-1.30", vec![format!("{stmt} = no")], sharp, nonzero);
                }
            }
            Truth::Unknown => {
                if let Some(cands) = cands {
                    if cands.len() == 1 && cands.contains(&0) {
                        set(out, "R-1.30", vec![format!("{label} = 0")], stmt, Truth::Yes);
                    } else if !cands.contains(&0) {
                        set(out, "R-1.30", vec![format!("{label} != 0")], stmt, Truth::No);
                    }
                }
            }
        }
    }
}

fn r_1_31(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    let Some(k) = c.k else { return };
    let d = c.desc();
    let allowed: BTreeSet<u64> = match k {
        Cardinality::Infinite => [0].into(),
        Cardinality::Finite(k) => {
            let exceptional = k == 2 && !d.closed().is_no() && !d.orientable().is_yes() && c.n.is_multiple_of(2) && d.euler() != Some(0);
            let mut set: BTreeSet<u64> = [0, k].into();
            if exceptional {
                set.insert(1);
            }
            set
        }
    };
    let premise = vec![format!("#pi1(N) = {k}")];
    nielsen(out, "R-1.31", premise.clone(), true, allowed.clone());
    nielsen(out, "R-1.31", premise, false, allowed);
}

fn r_3_12(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if c.q.kind != PairKind::Root {
        return;
    }
    let Some(k) = c.k else { return };
    let values: BTreeSet<u64> = match k {
        Cardinality::Infinite => [0].into(),
        Cardinality::Finite(k) => [0, k].into(),
    };
    let premises = vec![format!("root pair, #pi1(N) = {k}")];
    nielsen(out, "R-3.12", premises.clone(), true, values.clone());
    nielsen(out, "R-3.12", premises, false, values);
}

fn r_ns(c: &Context<'_>, _: &State, out: &mut Vec<Firing>) {
    if !c.given() {
        return;
    }
    if let Some(v) = nielsen_number_special(c.desc(), c.m, &c.q.f1, &c.q.f2) {
        let premises = vec![format!("N = {}, m = n even, (f1, f2) = ({}, {})", c.desc(), c.q.f1, c.q.f2)];
        nielsen(out, "R-NS", premises.clone(), true, [v].into());
        nielsen(out, "R-NS", premises, false, [v].into());
    }
}

/// Evaluation order; the fixpoint does not depend on it, the trace does.
pub(crate) const RULE_FNS: &[(&str, RuleFn)] = &[
    ("R-1.3", r_1_3),
    ("R-2.1", r_2_1),
    ("R-1.22", r_1_22),
    ("R-1.4", r_1_4),
    ("R-1.5", r_1_5),
    ("R-1.17-hopf", r_1_17_hopf),
    ("R-1.17-deg", r_1_17_deg),
    ("R-E-trivial", r_e_trivial),
    ("R-1.14", r_1_14),
    ("R-1.21", r_1_21),
    ("R-1.23", r_1_23),
    ("R-1.24", r_1_24),
    ("R-1.25", r_1_25),
    ("R-1.20", r_1_20),
    ("R-4.8", r_4_8),
    ("R-4.9", r_4_9),
    ("R-1.28", r_1_28),
    ("R-4.6", r_4_6),
    ("R-1.26", r_1_26),
    ("R-EX", r_ex),
    ("R-1.31", r_1_31),
    ("R-3.12", r_3_12),
    ("R-NS", r_ns),
    ("R-1.15", r_1_15),
    ("R-1.6", r_1_6),
    ("R-1.7", r_1_7),
    ("R-1.11", r_1_11),
    ("R-1.16", r_1_16),
    ("R-1.16b", r_1_16b),
    ("R-3.15", r_3_15),
    ("R-4.1", r_4_1),
    ("R-1.30", r_1_30),
];
