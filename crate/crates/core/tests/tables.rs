use coincide_core::abelian::{FgAbelianGroup, GroupOrder};
use coincide_core::tables::{parse_tables, HomotopyTables, TableError};
use coincide_core::Truth;

fn t() -> &'static HomotopyTables {
    HomotopyTables::bundled()
}

fn g(s: &str) -> FgAbelianGroup {
    s.parse().unwrap()
}

#[test]
fn bundled_text_reparses_identically() {
    let again = parse_tables(HomotopyTables::bundled_text()).unwrap();
    for n in 2..=12 {
        for m in 2..=n + 18 {
            assert_eq!(again.pi_sphere(m, n), t().pi_sphere(m, n), "pi_{m}(S^{n})");
        }
    }
    assert_eq!(again.stem_range(), t().stem_range());
}

#[test]
fn groups_quoted_in_the_examples() {
    assert_eq!(t().pi_sphere(11, 6), Some(g("Z")));
    assert_eq!(t().pi_sphere(10, 5), Some(g("Z/2")));
    assert_eq!(t().pi_stiefel(10, 7, 2), Some(g("0")));
    assert_eq!(t().pi_sphere(8, 4).map(|x| x.order()), Some(GroupOrder::Finite(4)));
    assert_eq!(t().pi_sphere(7, 3), Some(g("Z/2")));
    assert_eq!(t().pi_stiefel(8, 5, 2).map(|x| x.order()), Some(GroupOrder::Finite(2)));
    assert_eq!(t().pi_stable(4), Some(g("0")));
    assert_eq!(t().pi_stable(3), Some(g("Z/24")));
}

/// Serre: pi_m(S^n), m > n, is finite except pi_{2n-1}(S^n) for even n, which has rank one.
#[test]
fn ranks_follow_serre_finiteness() {
    let mut seen = 0;
    for n in 2..=16 {
        for m in n + 1..=n + 18 {
            if let Some(group) = t().pi_sphere(m, n) {
                let want = usize::from(n % 2 == 0 && m == 2 * n - 1);
                assert_eq!(group.rank(), want, "pi_{m}(S^{n}) = {group}");
                seen += 1;
            }
        }
    }
    assert!(seen > 100);
}

#[test]
fn stable_range_agrees_with_stems() {
    for n in 2..=20 {
        for m in n + 1..=2 * n - 2 {
            if let (Some(a), Some(b)) = (t().pi_sphere(m, n), t().pi_stable(m - n)) {
                assert_eq!(a, b, "pi_{m}(S^{n})");
            }
        }
    }
}

#[test]
fn freudenthal_range_is_injective() {
    for n in 3..=12 {
        for m in n..=2 * n - 3 {
            assert_eq!(t().suspension_e_injective(m, n), Truth::Yes, "E into pi_{m}(S^{n})");
        }
    }
}

/// Exactness of pi_m(S^{n-1}) -> pi_m(V(n+1,2)) -> pi_m(S^n) bounds the middle order.
#[test]
fn stiefel_orders_bounded_by_fibration() {
    for n in 3..=8 {
        for m in 2..=20 {
            let Some(v) = t().pi_stiefel(m, n + 1, 2) else { continue };
            let (Some(fibre), Some(base)) = (t().pi_sphere(m, n - 1), t().pi_sphere(m, n)) else { continue };
            if let (Some(a), Some(b), Some(c)) = (v.order().finite(), fibre.order().finite(), base.order().finite()) {
                assert!(a <= b * c, "|pi_{m}(V({},2))| = {a} > {b} * {c}", n + 1);
            }
            assert!(v.rank() <= fibre.rank() + base.rank());
        }
    }
}

#[test]
fn ehp_argument_and_stable_suspension_at_8_4() {
    let ehp = t().ehp_order_check().unwrap();
    assert_eq!(ehp.orders, [2, 4, 2, 12]);
    assert_eq!(t().suspension_e(8, 4).value, Truth::Yes);
    let einf = t().suspension_einf(8, 4);
    assert_eq!(einf.value, Truth::No);
    assert!(!einf.reason.is_empty());
}

#[test]
fn two_torsion_stems() {
    assert_eq!(t().stem_is_2_torsion(1), Truth::Yes);
    assert_eq!(t().stem_is_2_torsion(3), Truth::No);
    assert_eq!(t().stem_is_2_torsion(4), Truth::Yes);
    assert_eq!(t().stem_is_2_torsion(7), Truth::No);
}

#[test]
fn table_file_override() {
    let dir = std::env::temp_dir().join(format!("coincide-tables-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("small.tbl");
    std::fs::write(&path, "STEM 1 GROUP Z/2 SRC \"x\"\nSTEM 2 GROUP Z/2 SRC \"x\"\n").unwrap();
    let small = HomotopyTables::from_path(&path).unwrap();
    assert_eq!(small.pi_sphere(7, 5), Some(g("Z/2")));
    assert_eq!(small.pi_sphere(8, 5), None);
    assert!(matches!(HomotopyTables::from_path(&dir.join("missing.tbl")), Err(TableError::Io { .. })));
    std::fs::remove_dir_all(&dir).ok();
}
