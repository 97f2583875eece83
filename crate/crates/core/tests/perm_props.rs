use proptest::prelude::*;

use nielsen::perm::{classify_group, group_order, parse_perm, GroupKind, Perm};

fn perm(n: usize) -> impl Strategy<Value = Perm> {
    Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
}

fn triple() -> impl Strategy<Value = (Perm, Perm, Perm)> {
    (1usize..=20).prop_flat_map(|n| (perm(n), perm(n), perm(n)))
}

proptest! {
    #[test]
    fn group_axioms((a, b, c) in triple()) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let id = Perm::identity(a.degree());
        prop_assert_eq!(a.compose(&id).unwrap(), a.clone());
        prop_assert_eq!(id.compose(&a).unwrap(), a.clone());
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
    }

    #[test]
    fn conjugation_is_an_automorphism((a, b, c) in triple()) {
        let lhs = a.compose(&b).unwrap().conjugate(&c).unwrap();
        let rhs = a.conjugate(&c).unwrap().compose(&b.conjugate(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.conjugate(&c).unwrap().cycle_structure(), a.cycle_structure());
    }

    #[test]
    fn cycle_string_round_trip((a, _, _) in triple()) {
        let s = a.to_cycle_string();
        prop_assert_eq!(parse_perm(&s, a.degree()).unwrap(), a);
    }

    #[test]
    fn conjugate_maps_points((a, _, c) in triple()) {
        // by(x) goes to by(a(x))
        let b = a.conjugate(&c).unwrap();
        for x in 1..=a.degree() {
            prop_assert_eq!(b.apply(c.apply(x)), c.apply(a.apply(x)));
        }
    }
}

#[test]
fn all_transpositions_generate_symmetric_group() {
    let mut factorial = 1u128;
    for n in 2..=8usize {
        factorial *= n as u128;
        let gens: Vec<Perm> =
            (1..=n).flat_map(|i| (i + 1..=n).map(move |j| Perm::transposition(i, j, n).unwrap())).collect();
        assert_eq!(group_order(&gens).unwrap(), factorial, "n = {n}");
    }
}

#[test]
fn three_cycles_generate_alternating_group() {
    for n in 5..=9 {
        let gens: Vec<Perm> = (3..=n).map(|k| Perm::from_cycles(&[&[1, 2, k]], n).unwrap()).collect();
        assert_eq!(classify_group(&gens).unwrap().kind, GroupKind::Alternating, "n = {n}");
    }
}
