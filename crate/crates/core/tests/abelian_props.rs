use std::collections::BTreeMap;

use coincide_core::abelian::{apply_hom, gcd, is_injective, FgAbelianGroup, GroupElement, GroupHom, GroupOrder};
use coincide_core::Truth;
use proptest::prelude::*;

const MAX_ORDER: u64 = 48;

fn factors() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=12, 0..=3).prop_filter("order <= 48", |f| f.iter().product::<u64>() <= MAX_ORDER)
}

fn finite_group() -> impl Strategy<Value = FgAbelianGroup> {
    factors().prop_map(|f| FgAbelianGroup::from_cyclic_factors(0, &f))
}

fn all_coords(moduli: &[u64]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &d in moduli {
        out = out.into_iter().flat_map(|c| (0..d as i64).map(move |x| [c.clone(), vec![x]].concat())).collect();
    }
    out
}

fn elements(g: &FgAbelianGroup) -> Vec<GroupElement> {
    all_coords(g.torsion()).into_iter().map(|c| g.element(c).unwrap()).collect()
}

/// Order of `(x_i)` in `sum Z/d_i`, by repeated addition.
fn brute_order(coords: &[i64], moduli: &[u64]) -> u64 {
    let mut k = 1u64;
    loop {
        if coords.iter().zip(moduli).all(|(&x, &d)| (x * k as i64).rem_euclid(d as i64) == 0) {
            return k;
        }
        k += 1;
    }
}

fn order_histogram(orders: impl Iterator<Item = u64>) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for o in orders {
        *h.entry(o).or_default() += 1;
    }
    h
}

/// A well-defined homomorphism between finite groups.
fn hom() -> impl Strategy<Value = GroupHom> {
    (finite_group(), finite_group()).prop_flat_map(|(s, t)| {
        let cells: Vec<BoxedStrategy<i64>> = t
            .torsion()
            .iter()
            .flat_map(|&e| {
                s.torsion().iter().map(move |&d| {
                    let step = (e / gcd(d, e)) as i64;
                    (0..gcd(d, e) as i64).prop_map(move |k| k * step).boxed()
                })
            })
            .collect();
        let cols = s.torsion().len();
        (Just(s), Just(t), cells).prop_map(move |(s, t, flat)| {
            let matrix: Vec<Vec<i64>> = (0..t.torsion().len()).map(|i| flat[i * cols..(i + 1) * cols].to_vec()).collect();
            GroupHom::new(s, t, matrix).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn normalization_is_idempotent(rank in 0usize..3, f in factors()) {
        let g = FgAbelianGroup::from_cyclic_factors(rank, &f);
        prop_assert_eq!(g.normalized(), g.clone());
        prop_assert_eq!(FgAbelianGroup::new(g.rank(), g.torsion().to_vec()).unwrap(), g.clone());
        prop_assert_eq!(g.to_string().parse::<FgAbelianGroup>().unwrap(), g);
    }

    #[test]
    fn normal_form_matches_brute_force_order_statistics(f in factors()) {
        let moduli: Vec<u64> = f.iter().copied().filter(|&d| d > 1).collect();
        let raw = order_histogram(all_coords(&moduli).iter().map(|c| brute_order(c, &moduli)));
        let g = FgAbelianGroup::from_cyclic_factors(0, &f);
        let normal = order_histogram(elements(&g).iter().map(|e| e.order().finite().unwrap()));
        prop_assert_eq!(raw, normal);
        prop_assert_eq!(g.order(), GroupOrder::Finite(f.iter().product()));
    }

    #[test]
    fn element_order_divides_group_order(g in finite_group()) {
        let n = g.order().finite().unwrap();
        for e in elements(&g) {
            let o = e.order().finite().unwrap();
            prop_assert_eq!(n % o, 0);
            prop_assert_eq!(o, brute_order(e.coords(), g.torsion()));
            prop_assert!(e.scale(o as i64).is_zero());
        }
    }

    #[test]
    fn homomorphisms_are_additive(h in hom()) {
        let xs = elements(h.source());
        for a in xs.iter().take(12) {
            for b in xs.iter().rev().take(12) {
                let lhs = apply_hom(&h, &a.add(b).unwrap()).unwrap();
                let rhs = apply_hom(&h, a).unwrap().add(&apply_hom(&h, b).unwrap()).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn injectivity_matches_brute_force_kernel(h in hom()) {
        let kernel = elements(h.source()).iter().filter(|e| apply_hom(&h, e).unwrap().is_zero()).count();
        prop_assert_eq!(is_injective(&h), Truth::from(kernel == 1));
    }

    #[test]
    fn multiplication_injective_iff_coprime_to_exponent(g in finite_group(), k in -6i64..=6) {
        let kernel = elements(&g).iter().filter(|e| e.scale(k).is_zero()).count();
        prop_assert_eq!(g.multiplication_is_injective(k), kernel == 1);
        prop_assert_eq!(g.annihilated_by(k), kernel as u64 == g.order().finite().unwrap());
    }
}
