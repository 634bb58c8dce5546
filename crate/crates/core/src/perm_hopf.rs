//! The bialgebra of permutations under the heap product.
//!
//! `σ # τ` shifts `σ` above the points of `τ` and attaches each cycle string
//! of `σ` either right after a letter of `τ` or, at the extra point `∘`, as a
//! cycle of its own. Strings attached to the same letter are spliced in
//! strictly decreasing order of their first entries.

use std::fmt;

use num_bigint::BigInt;

use crate::bialgebra::{counit_value, Antipode, GradedBialgebra};
use crate::linear::{LinComb, Tensor};
use crate::perm::{enumerate_perms, std_perm, Cycle, CyclePerm};
use crate::tree::Label;

/// Where a cycle of the left factor is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AttachmentPoint {
    /// Directly after this letter of the right factor.
    Letter(Label),
    /// As a separate cycle.
    Circle,
}

impl fmt::Display for AttachmentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AttachmentPoint::Letter(l) => write!(f, "{l}"),
            AttachmentPoint::Circle => f.write_str("o"),
        }
    }
}

/// Letters of `tau` in rendering order, followed by `∘`.
pub fn attachment_points(tau: &CyclePerm) -> Vec<AttachmentPoint> {
    tau.cycles()
        .iter()
        .flat_map(|c| c.entries().iter().map(|&l| AttachmentPoint::Letter(l)))
        .chain(std::iter::once(AttachmentPoint::Circle))
        .collect()
}

/// Terms of `sigma # tau` in enumeration order: the cycle of `sigma` with the
/// smallest minimum varies fastest over [`attachment_points`].
pub fn heap_product_terms(sigma: &CyclePerm, tau: &CyclePerm) -> Vec<CyclePerm> {
    let n = tau.degree();
    let degree = sigma.degree() + n;
    let strings = sigma.shift(n as Label);
    let points = attachment_points(tau);
    let mut point_of_letter = vec![0usize; n + 1];
    for (i, p) in points.iter().enumerate() {
        if let AttachmentPoint::Letter(l) = p {
            point_of_letter[*l as usize] = i;
        }
    }
    let circle = points.len() - 1;
    let r = strings.len();
    let total = points.len().pow(r as u32);

    let mut digits = vec![0usize; r];
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        let mut groups = vec![Vec::new(); points.len()];
        // decreasing first entries within each attachment point
        for s in (0..r).rev() {
            groups[digits[s]].push(s);
        }
        let mut cycles: Vec<Cycle> = tau
            .cycles()
            .iter()
            .map(|c| {
                let mut entries = Vec::with_capacity(degree);
                for &x in c.entries() {
                    entries.push(x);
                    for &s in &groups[point_of_letter[x as usize]] {
                        entries.extend_from_slice(strings[s].entries());
                    }
                }
                Cycle::from_entries_unchecked(entries)
            })
            .collect();
        cycles.extend(groups[circle].iter().map(|&s| strings[s].clone()));
        out.push(CyclePerm::from_parts_unchecked(degree, cycles));

        for d in digits.iter_mut() {
            *d += 1;
            if *d < points.len() {
                break;
            }
            *d = 0;
        }
    }
    out
}

pub fn heap_product(sigma: &CyclePerm, tau: &CyclePerm) -> LinComb<CyclePerm> {
    LinComb::from_terms(heap_product_terms(sigma, tau).into_iter().map(|p| (p, 1)))
}

pub fn perm_coproduct(pi: &CyclePerm) -> LinComb<Tensor<CyclePerm>> {
    let cycles = pi.cycles();
    let k = cycles.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1 << k) {
        let (chosen, rest): (Vec<Cycle>, Vec<Cycle>) = cycles
            .iter()
            .enumerate()
            .map(|(i, c)| (mask >> i & 1 == 1, c.clone()))
            .fold((Vec::new(), Vec::new()), |(mut a, mut b), (take, c)| {
                if take {
                    a.push(c)
                } else {
                    b.push(c)
                }
                (a, b)
            });
        let left = std_perm(&chosen).expect("disjoint cycles");
        let right = std_perm(&rest).expect("disjoint cycles");
        out.add_term(Tensor::new(left, right), 1);
    }
    out
}

pub fn perm_counit(pi: &CyclePerm) -> i64 {
    i64::from(pi.degree() == 0)
}

pub fn perm_antipode(pi: &CyclePerm) -> LinComb<CyclePerm> {
    Antipode::new(PermAlgebra).apply(pi)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PermAlgebra;

impl GradedBialgebra for PermAlgebra {
    type Basis = CyclePerm;

    fn one(&self) -> CyclePerm {
        CyclePerm::identity(0)
    }

    fn basis(&self, degree: usize) -> Vec<CyclePerm> {
        enumerate_perms(degree).expect("degree within enumeration cap")
    }

    fn mul(&self, a: &CyclePerm, b: &CyclePerm) -> LinComb<CyclePerm> {
        heap_product(a, b)
    }

    fn comul(&self, a: &CyclePerm) -> LinComb<Tensor<CyclePerm>> {
        perm_coproduct(a)
    }

    fn counit(&self, a: &CyclePerm) -> BigInt {
        counit_value(a.degree())
    }

    fn components(&self, a: &CyclePerm) -> usize {
        a.cycle_count()
    }
}
