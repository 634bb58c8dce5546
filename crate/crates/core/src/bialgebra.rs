//! Graded connected bialgebras over a canonical basis, and their antipode.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linear::{bilinear, Basis, LinComb, Tensor};
use crate::perm::CyclePerm;
use crate::tree::StandardTree;

pub trait Graded {
    fn degree(&self) -> usize;
}

impl Graded for StandardTree {
    fn degree(&self) -> usize {
        StandardTree::degree(self)
    }
}

impl Graded for CyclePerm {
    fn degree(&self) -> usize {
        CyclePerm::degree(self)
    }
}

/// A graded connected bialgebra with a distinguished basis.
///
/// Structure maps are given on basis elements; the provided methods are
/// their (bi)linear extensions.
pub trait GradedBialgebra {
    type Basis: Basis + Graded;

    /// The unique basis element of degree 0.
    fn one(&self) -> Self::Basis;

    /// All basis elements of the given degree, in canonical order.
    fn basis(&self, degree: usize) -> Vec<Self::Basis>;

    fn mul(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn comul(&self, a: &Self::Basis) -> LinComb<Tensor<Self::Basis>>;

    fn counit(&self, a: &Self::Basis) -> BigInt;

    /// Number of pieces the first product factor is cut into: root
    /// children of a tree, cycles of a permutation.
    fn components(&self, a: &Self::Basis) -> usize;

    fn mul_lin(&self, x: &LinComb<Self::Basis>, y: &LinComb<Self::Basis>) -> LinComb<Self::Basis> {
        bilinear(x, y, |a, b| self.mul(a, b))
    }

    fn comul_lin(&self, x: &LinComb<Self::Basis>) -> LinComb<Tensor<Self::Basis>> {
        x.map_linear(|a| self.comul(a))
    }

    /// Product in the tensor square: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    fn mul_tensor(
        &self,
        x: &LinComb<Tensor<Self::Basis>>,
        y: &LinComb<Tensor<Self::Basis>>,
    ) -> LinComb<Tensor<Self::Basis>> {
        bilinear(x, y, |s, t| {
            crate::linear::tensor(&self.mul(&s.left, &t.left), &self.mul(&s.right, &t.right))
        })
    }

    /// `u ∘ ε` on a basis element.
    fn unit_counit(&self, a: &Self::Basis) -> LinComb<Self::Basis> {
        LinComb::monomial(self.one(), self.counit(a))
    }
}

/// The antipode of a graded connected bialgebra, by the recursion
/// `S(1) = 1`, `S(x) = -x - Σ S(x') x''` over the reduced coproduct.
///
/// Values are memoized per basis element behind a mutex, so one instance can
/// be shared between threads.
pub struct Antipode<A: GradedBialgebra> {
    algebra: A,
    memo: Mutex<HashMap<A::Basis, LinComb<A::Basis>>>,
}

impl<A: GradedBialgebra> Antipode<A> {
    pub fn new(algebra: A) -> Self {
        Antipode {
            algebra,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &A {
        &self.algebra
    }

    pub fn apply(&self, x: &A::Basis) -> LinComb<A::Basis> {
        if let Some(hit) = self.memo.lock().unwrap().get(x) {
            return hit.clone();
        }
        let value = if x.degree() == 0 {
            LinComb::basis(x.clone())
        } else {
            let mut acc = -LinComb::basis(x.clone());
            for (t, c) in self.algebra.comul(x).iter_unordered() {
                // reduced coproduct: both factors of positive degree
                if t.left.degree() == 0 || t.right.degree() == 0 {
                    continue;
                }
                let term = self
                    .algebra
                    .mul_lin(&self.apply(&t.left), &LinComb::basis(t.right.clone()));
                acc.add_scaled(&term, &-c);
            }
            acc
        };
        self.memo.lock().unwrap().insert(x.clone(), value.clone());
        value
    }

    pub fn apply_lin(&self, x: &LinComb<A::Basis>) -> LinComb<A::Basis> {
        x.map_linear(|b| self.apply(b))
    }

    /// `m ∘ (S ⊗ id) ∘ Δ` on a basis element.
    pub fn left_convolution(&self, x: &A::Basis) -> LinComb<A::Basis> {
        let mut acc = LinComb::zero();
        for (t, c) in self.algebra.comul(x).iter_unordered() {
            let term = self
                .algebra
                .mul_lin(&self.apply(&t.left), &LinComb::basis(t.right.clone()));
            acc.add_scaled(&term, c);
        }
        acc
    }

    /// `m ∘ (id ⊗ S) ∘ Δ` on a basis element.
    pub fn right_convolution(&self, x: &A::Basis) -> LinComb<A::Basis> {
        let mut acc = LinComb::zero();
        for (t, c) in self.algebra.comul(x).iter_unordered() {
            let term = self
                .algebra
                .mul_lin(&LinComb::basis(t.left.clone()), &self.apply(&t.right));
            acc.add_scaled(&term, c);
        }
        acc
    }
}

pub(crate) fn counit_value(degree: usize) -> BigInt {
    if degree == 0 {
        BigInt::from(1)
    } else {
        BigInt::zero()
    }
}
