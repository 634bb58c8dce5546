use std::collections::HashSet;

use heap_hopf::{
    alpha, attach_all, beta, enumerate_perms, enumerate_trees, graft_at_root, heap_product, phi,
    phi_inv, std_perm, tree_antipode, tree_product, verify, Cycle, CyclePerm, CycleString, Law,
    LinComb, StandardTree, Tensor,
};
use proptest::prelude::*;

fn any_tree(max: usize) -> impl Strategy<Value = StandardTree> {
    (0..=max).prop_flat_map(|n| {
        let all = enumerate_trees(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn any_perm(max: usize) -> impl Strategy<Value = CyclePerm> {
    (0..=max).prop_flat_map(|n| {
        let all = enumerate_perms(n).unwrap();
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn relabel_shift_moves_every_label(t in any_tree(6), m in 0u32..20, k in 0u32..20) {
        let tree = t.as_tree();
        let shifted = tree.relabel_shift(m);
        prop_assert_eq!(shifted.node_count(), tree.node_count());
        let expect: Vec<u32> = tree.labels().iter().map(|l| l + m).collect();
        prop_assert_eq!(shifted.labels(), expect);
        prop_assert_eq!(&tree.relabel_shift(0), tree);
        // ranks are what matter, so a second shift overrides the first
        prop_assert_eq!(shifted.relabel_shift(k), tree.relabel_shift(k));
    }

    #[test]
    fn graft_undoes_delete_root(t in any_tree(7)) {
        prop_assert_eq!(&graft_at_root(&t.as_tree().delete_root()), t.as_tree());
    }

    #[test]
    fn attach_all_gives_distinct_standard_trees(a in any_tree(4), b in any_tree(4)) {
        let n = b.degree();
        let forest = a.as_tree().relabel_shift(n as u32).delete_root();
        let attached = attach_all(&forest, b.as_tree()).unwrap();
        prop_assert_eq!(attached.len(), (n + 1).pow(forest.len() as u32));
        let distinct: HashSet<_> = attached.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), attached.len());
        for t in attached {
            let s = StandardTree::try_from(t).unwrap();
            prop_assert_eq!(s.degree(), a.degree() + n);
        }
    }

    #[test]
    fn products_are_homogeneous_with_unit_coefficients(a in any_tree(3), b in any_tree(3)) {
        let p = tree_product(&a, &b);
        let roots = a.root_children().len() as u32;
        prop_assert_eq!(p.len(), (b.degree() + 1).pow(roots));
        for (t, c) in p.iter_unordered() {
            prop_assert_eq!(t.degree(), a.degree() + b.degree());
            prop_assert_eq!(c, &1.into());
        }
    }

    #[test]
    fn heap_product_is_homogeneous(s in any_perm(3), t in any_perm(3)) {
        let p = heap_product(&s, &t);
        prop_assert_eq!(p.len(), (t.degree() + 1).pow(s.cycle_count() as u32));
        for (x, c) in p.iter_unordered() {
            prop_assert_eq!(x.degree(), s.degree() + t.degree());
            prop_assert_eq!(c, &1.into());
        }
    }

    #[test]
    fn std_perm_is_idempotent_and_keeps_cycle_type(p in any_perm(7), m in 0u32..10) {
        prop_assert_eq!(&std_perm(p.cycles()).unwrap(), &p);
        let shifted: Vec<Cycle> = p.shift(m);
        let back = std_perm(&shifted).unwrap();
        prop_assert_eq!(back.cycle_type(), p.cycle_type());
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(std_perm(back.cycles()).unwrap(), back);
    }

    #[test]
    fn standard_order_has_decreasing_minima(p in any_perm(8)) {
        let order = p.standard_order();
        prop_assert_eq!(order.len(), p.cycle_count());
        for w in order.windows(2) {
            prop_assert!(w[0].min() > w[1].min());
        }
    }

    #[test]
    fn phi_matches_root_children_to_cycles(t in any_tree(7)) {
        let p = phi(&t);
        prop_assert_eq!(p.degree(), t.degree());
        prop_assert_eq!(p.cycle_count(), t.root_children().len());
        prop_assert_eq!(phi_inv(&p), t);
    }

    #[test]
    fn alpha_beta_round_trip(p in any_perm(7)) {
        for c in p.cycles() {
            let s = CycleString::from(c);
            prop_assert_eq!(alpha(&beta(&s)).unwrap(), s);
        }
    }

    #[test]
    fn tree_text_round_trip(t in any_tree(7)) {
        prop_assert_eq!(t.to_string().parse::<StandardTree>().unwrap(), t);
    }

    #[test]
    fn perm_text_round_trip(p in any_perm(7)) {
        prop_assert_eq!(p.to_string().parse::<CyclePerm>().unwrap(), p);
    }

    #[test]
    fn antipode_is_homogeneous(t in any_tree(4)) {
        for (x, _) in tree_antipode(&t).iter_unordered() {
            prop_assert_eq!(x.degree(), t.degree());
        }
    }
}

#[test]
fn lincomb_text_round_trips_through_outputs() {
    let a: StandardTree = "*(1,2(3))".parse().unwrap();
    let b: StandardTree = "*(1(2))".parse().unwrap();
    let p = tree_product(&a, &b);
    assert_eq!(p.to_string().parse::<LinComb<StandardTree>>().unwrap(), p);
    let s = tree_antipode(&a);
    assert_eq!(s.to_string().parse::<LinComb<StandardTree>>().unwrap(), s);
    let d = heap_hopf::perm_coproduct(&"(1 3)(2)(4)".parse().unwrap());
    assert_eq!(
        d.to_string().parse::<LinComb<Tensor<CyclePerm>>>().unwrap(),
        d
    );
}

#[test]
fn verifier_is_deterministic() {
    for law in [
        Law::CoassocTree,
        Law::PhiProduct,
        Law::AntipodePerm,
        Law::EnumerationCounts,
    ] {
        let d = law.default_degree().min(4);
        assert_eq!(verify(law, d).unwrap(), verify(law, d).unwrap(), "{law}");
    }
}
