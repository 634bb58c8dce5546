//! The Hopf algebra of standard heap ordered trees.
//!
//! The product `t1 · t2` shifts the labels of `t1` above those of `t2`, cuts
//! off its root and grafts the resulting subtrees onto the nodes of `t2` in
//! every possible way. The coproduct splits the root's children into two
//! groups in every possible way and standardizes each side.

use num_bigint::BigInt;

use crate::bialgebra::{counit_value, Antipode, GradedBialgebra};
use crate::linear::{LinComb, Tensor};
use crate::tree::{attach_all, enumerate_trees, graft_at_root, Forest, Label, StandardTree};

/// Product of two basis trees; `(n+1)^r` terms with coefficient 1, where
/// `n = degree(t2)` and `r` is the number of root children of `t1`.
pub fn tree_product(t1: &StandardTree, t2: &StandardTree) -> LinComb<StandardTree> {
    let shifted = t1.as_tree().relabel_shift(t2.degree() as Label);
    let forest = shifted.delete_root();
    let grafted = attach_all(&forest, t2.as_tree()).expect("shifted labels exceed target labels");
    LinComb::from_terms(
        grafted
            .into_iter()
            .map(|t| (StandardTree::from_tree_unchecked(t), 1)),
    )
}

pub fn tree_coproduct(t: &StandardTree) -> LinComb<Tensor<StandardTree>> {
    let children = t.root_children();
    let r = children.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1 << r) {
        let (chosen, rest): (Vec<_>, Vec<_>) = children
            .iter()
            .enumerate()
            .partition(|(i, _)| mask >> i & 1 == 1);
        let side = |members: Vec<(usize, &crate::tree::LabeledTree)>| {
            let forest = Forest::new(members.into_iter().map(|(_, c)| c.clone()).collect())
                .expect("children of a tree form a forest");
            StandardTree::standardize(&graft_at_root(&forest)).expect("unlabeled root")
        };
        out.add_term(Tensor::new(side(chosen), side(rest)), 1);
    }
    out
}

pub fn tree_counit(t: &StandardTree) -> i64 {
    i64::from(t.degree() == 0)
}

/// Antipode of a single tree, memoized over the recursion.
pub fn tree_antipode(t: &StandardTree) -> LinComb<StandardTree> {
    Antipode::new(TreeAlgebra).apply(t)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TreeAlgebra;

impl GradedBialgebra for TreeAlgebra {
    type Basis = StandardTree;

    fn one(&self) -> StandardTree {
        StandardTree::unit()
    }

    fn basis(&self, degree: usize) -> Vec<StandardTree> {
        enumerate_trees(degree).expect("degree within enumeration cap")
    }

    fn mul(&self, a: &StandardTree, b: &StandardTree) -> LinComb<StandardTree> {
        tree_product(a, b)
    }

    fn comul(&self, a: &StandardTree) -> LinComb<Tensor<StandardTree>> {
        tree_coproduct(a)
    }

    fn counit(&self, a: &StandardTree) -> BigInt {
        counit_value(a.degree())
    }

    fn components(&self, a: &StandardTree) -> usize {
        a.root_children().len()
    }
}
