//! Exhaustive verification of the bialgebra laws at small degrees.
//!
//! Every law is checked on all basis elements (or pairs, triples) up to a
//! degree bound, with exact comparison of integer linear combinations. A
//! [`Report`] records how many instances were checked and the first failing
//! instance, rendered canonically.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bialgebra::{Antipode, Graded, GradedBialgebra};
use crate::iso::{phi, phi_inv, phi_linear};
use crate::linear::{tensor, LinComb, Tensor};
use crate::perm::enumerate_perms;
use crate::perm_hopf::{heap_product, perm_coproduct, PermAlgebra};
use crate::tree::enumerate_trees;
use crate::tree_hopf::{tree_coproduct, tree_product, TreeAlgebra};

/// Largest degree bound accepted by [`verify`].
pub const VERIFY_DEGREE_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("degree {requested} exceeds the verification cap of {cap}")]
    DegreeCap { requested: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Law {
    AssocTree,
    AssocPerm,
    CoassocTree,
    CoassocPerm,
    CounitTree,
    CounitPerm,
    CocommTree,
    CocommPerm,
    CompatTree,
    CompatPerm,
    AntipodeTree,
    AntipodePerm,
    PhiBijective,
    PhiProduct,
    PhiCoproduct,
    TermCounts,
    EnumerationCounts,
}

impl Law {
    pub const ALL: [Law; 17] = [
        Law::AssocTree,
        Law::AssocPerm,
        Law::CoassocTree,
        Law::CoassocPerm,
        Law::CounitTree,
        Law::CounitPerm,
        Law::CocommTree,
        Law::CocommPerm,
        Law::CompatTree,
        Law::CompatPerm,
        Law::AntipodeTree,
        Law::AntipodePerm,
        Law::PhiBijective,
        Law::PhiProduct,
        Law::PhiCoproduct,
        Law::TermCounts,
        Law::EnumerationCounts,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Law::AssocTree => "assoc-tree",
            Law::AssocPerm => "assoc-perm",
            Law::CoassocTree => "coassoc-tree",
            Law::CoassocPerm => "coassoc-perm",
            Law::CounitTree => "counit-tree",
            Law::CounitPerm => "counit-perm",
            Law::CocommTree => "cocomm-tree",
            Law::CocommPerm => "cocomm-perm",
            Law::CompatTree => "compat-tree",
            Law::CompatPerm => "compat-perm",
            Law::AntipodeTree => "antipode-tree",
            Law::AntipodePerm => "antipode-perm",
            Law::PhiBijective => "phi-bijective",
            Law::PhiProduct => "phi-product",
            Law::PhiCoproduct => "phi-coproduct",
            Law::TermCounts => "term-counts",
            Law::EnumerationCounts => "enumeration-counts",
        }
    }

    /// Bound used when none is given. For product laws it bounds the total
    /// degree of the factors.
    pub fn default_degree(self) -> usize {
        match self {
            Law::AssocTree | Law::AssocPerm => 5,
            Law::CompatTree | Law::CompatPerm => 5,
            Law::AntipodeTree | Law::AntipodePerm => 5,
            _ => 6,
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Law {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Law::ALL
            .into_iter()
            .find(|l| l.id() == s)
            .ok_or_else(|| VerifyError::UnknownLaw(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub law: String,
    pub max_degree: usize,
    pub instances: u64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// Per-degree basis sizes, for `enumeration-counts`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counts: Option<Vec<u64>>,
}

/// Renders reports as an aligned table, counterexamples indented below.
pub fn render_table(reports: &[Report]) -> String {
    let mut out = format!(
        "{:<20} {:>10} {:>10}  {}\n",
        "law", "max_degree", "instances", "result"
    );
    for r in reports {
        out.push_str(&format!(
            "{:<20} {:>10} {:>10}  {}\n",
            r.law,
            r.max_degree,
            r.instances,
            if r.passed { "pass" } else { "FAIL" }
        ));
        if let Some(counts) = &r.counts {
            let shown: Vec<String> = counts.iter().map(u64::to_string).collect();
            out.push_str(&format!("    counts: [{}]\n", shown.join(", ")));
        }
        if let Some(c) = &r.counterexample {
            out.push_str(&format!("    inputs: {}\n", c.inputs.join(" ; ")));
            out.push_str(&format!("    lhs: {}\n", c.lhs));
            out.push_str(&format!("    rhs: {}\n", c.rhs));
        }
    }
    out
}

/// Runs one law at the given degree bound.
pub fn verify(law: Law, max_degree: usize) -> Result<Report, VerifyError> {
    Verifier::new().run(law, max_degree)
}

/// Runs every law, each at `max_degree` or its default bound.
pub fn verify_all(max_degree: Option<usize>) -> Result<Vec<Report>, VerifyError> {
    let verifier = Verifier::new();
    Law::ALL
        .into_iter()
        .map(|law| verifier.run(law, max_degree.unwrap_or(law.default_degree())))
        .collect()
}

/// Holds antipode memo tables shared between law runs.
pub struct Verifier {
    tree_antipode: Antipode<TreeAlgebra>,
    perm_antipode: Antipode<PermAlgebra>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Default)]
struct Run {
    instances: u64,
    counts: Option<Vec<u64>>,
}

type Outcome = Result<(), Counterexample>;

impl Run {
    fn instance(&mut self) {
        self.instances += 1;
    }
}

fn check<T: PartialEq + fmt::Display>(
    inputs: impl FnOnce() -> Vec<String>,
    lhs: &T,
    rhs: &T,
) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Counterexample {
            inputs: inputs(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn names<T: fmt::Display>(items: &[&T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn bases<A: GradedBialgebra>(alg: &A, max_degree: usize) -> Vec<Vec<A::Basis>> {
    (0..=max_degree).map(|d| alg.basis(d)).collect()
}

impl Verifier {
    pub fn new() -> Self {
        Verifier {
            tree_antipode: Antipode::new(TreeAlgebra),
            perm_antipode: Antipode::new(PermAlgebra),
        }
    }

    pub fn run(&self, law: Law, max_degree: usize) -> Result<Report, VerifyError> {
        if max_degree > VERIFY_DEGREE_CAP {
            return Err(VerifyError::DegreeCap {
                requested: max_degree,
                cap: VERIFY_DEGREE_CAP,
            });
        }
        let d = max_degree;
        let mut run = Run::default();
        let outcome = match law {
            Law::AssocTree => associativity(&TreeAlgebra, d, &mut run),
            Law::AssocPerm => associativity(&PermAlgebra, d, &mut run),
            Law::CoassocTree => coassociativity(&TreeAlgebra, d, &mut run),
            Law::CoassocPerm => coassociativity(&PermAlgebra, d, &mut run),
            Law::CounitTree => counit_laws(&TreeAlgebra, d, &mut run),
            Law::CounitPerm => counit_laws(&PermAlgebra, d, &mut run),
            Law::CocommTree => cocommutativity(&TreeAlgebra, d, &mut run),
            Law::CocommPerm => cocommutativity(&PermAlgebra, d, &mut run),
            Law::CompatTree => compatibility(&TreeAlgebra, d, &mut run),
            Law::CompatPerm => compatibility(&PermAlgebra, d, &mut run),
            Law::AntipodeTree => antipode_laws(&self.tree_antipode, d, &mut run),
            Law::AntipodePerm => antipode_laws(&self.perm_antipode, d, &mut run)
                .and_then(|()| self.antipode_transport(d, &mut run)),
            Law::PhiBijective => phi_bijective(d, &mut run),
            Law::PhiProduct => phi_product(d, &mut run),
            Law::PhiCoproduct => phi_coproduct(d, &mut run),
            Law::TermCounts => term_counts(&TreeAlgebra, d, &mut run)
                .and_then(|()| term_counts(&PermAlgebra, d, &mut run)),
            Law::EnumerationCounts => enumeration_counts(d, &mut run),
        };
        Ok(Report {
            law: law.id().to_string(),
            max_degree,
            instances: run.instances,
            passed: outcome.is_ok(),
            counterexample: outcome.err(),
            counts: run.counts,
        })
    }

    /// The permutation antipode agrees with the tree antipode carried
    /// through the bijection.
    fn antipode_transport(&self, d: usize, run: &mut Run) -> Outcome {
        for n in 0..=d {
            for p in PermAlgebra.basis(n) {
                run.instance();
                let direct = self.perm_antipode.apply(&p);
                let transported = phi_linear(&self.tree_antipode.apply(&phi_inv(&p)));
                check(|| vec![p.to_string()], &direct, &transported)?;
            }
        }
        Ok(())
    }
}

fn associativity<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    let basis = bases(alg, d);
    for da in 0..=d {
        for db in 0..=d - da {
            for dc in 0..=d - da - db {
                for a in &basis[da] {
                    for b in &basis[db] {
                        let ab = alg.mul(a, b);
                        for c in &basis[dc] {
                            run.instance();
                            let lhs = alg.mul_lin(&ab, &LinComb::basis(c.clone()));
                            let rhs = alg.mul_lin(&LinComb::basis(a.clone()), &alg.mul(b, c));
                            check(|| names(&[a, b, c]), &lhs, &rhs)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn coassociativity<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    for n in 0..=d {
        for t in alg.basis(n) {
            run.instance();
            let delta = alg.comul(&t);
            let lhs = delta.map_linear(|x| {
                alg.comul(&x.left).map_linear(|y| {
                    LinComb::basis(Tensor::new(
                        y.left.clone(),
                        Tensor::new(y.right.clone(), x.right.clone()),
                    ))
                })
            });
            let rhs =
                delta.map_linear(|x| tensor(&LinComb::basis(x.left.clone()), &alg.comul(&x.right)));
            check(|| vec![t.to_string()], &lhs, &rhs)?;
        }
    }
    Ok(())
}

fn cocommutativity<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    for n in 0..=d {
        for t in alg.basis(n) {
            run.instance();
            let delta = alg.comul(&t);
            check(|| vec![t.to_string()], &delta.swap_tensor(), &delta)?;
        }
    }
    Ok(())
}

fn counit_laws<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    for n in 0..=d {
        for t in alg.basis(n) {
            run.instance();
            let delta = alg.comul(&t);
            let id = LinComb::basis(t.clone());
            let left =
                delta.map_linear(|x| LinComb::monomial(x.right.clone(), alg.counit(&x.left)));
            check(|| vec![format!("(counit (x) id) {t}")], &left, &id)?;
            let right =
                delta.map_linear(|x| LinComb::monomial(x.left.clone(), alg.counit(&x.right)));
            check(|| vec![format!("(id (x) counit) {t}")], &right, &id)?;
        }
    }
    Ok(())
}

fn compatibility<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    let basis = bases(alg, d);
    for da in 0..=d {
        for db in 0..=d - da {
            for a in &basis[da] {
                let delta_a = alg.comul(a);
                for b in &basis[db] {
                    run.instance();
                    let lhs = alg.comul_lin(&alg.mul(a, b));
                    let rhs = alg.mul_tensor(&delta_a, &alg.comul(b));
                    check(|| names(&[a, b]), &lhs, &rhs)?;
                }
            }
        }
    }
    Ok(())
}

fn antipode_laws<A: GradedBialgebra>(s: &Antipode<A>, d: usize, run: &mut Run) -> Outcome {
    let alg = s.algebra();
    for n in 0..=d {
        for t in alg.basis(n) {
            run.instance();
            let expected = alg.unit_counit(&t);
            check(
                || vec![format!("m(S (x) id)D {t}")],
                &s.left_convolution(&t),
                &expected,
            )?;
            check(
                || vec![format!("m(id (x) S)D {t}")],
                &s.right_convolution(&t),
                &expected,
            )?;
        }
    }
    Ok(())
}

fn term_counts<A: GradedBialgebra>(alg: &A, d: usize, run: &mut Run) -> Outcome {
    let basis = bases(alg, d);
    for da in 0..=d {
        for db in 0..=d - da {
            for a in &basis[da] {
                for b in &basis[db] {
                    run.instance();
                    let product = alg.mul(a, b);
                    let expected = (db + 1).pow(alg.components(a) as u32);
                    let shape = |p: &LinComb<A::Basis>| {
                        let unit = p.iter_unordered().all(|(_, c)| *c == 1.into());
                        let graded = p.iter_unordered().all(|(x, _)| x.degree() == da + db);
                        format!(
                            "{} terms, unit coefficients: {unit}, degree {}: {graded}",
                            p.len(),
                            da + db
                        )
                    };
                    let want = format!(
                        "{expected} terms, unit coefficients: true, degree {}: true",
                        da + db
                    );
                    check(|| names(&[a, b]), &shape(&product), &want)?;
                }
            }
        }
    }
    Ok(())
}

fn phi_bijective(d: usize, run: &mut Run) -> Outcome {
    for n in 0..=d {
        let trees = enumerate_trees(n).expect("degree within cap");
        let mut images = HashSet::new();
        for t in &trees {
            run.instance();
            let p = phi(t);
            check(|| vec![t.to_string()], &p.degree(), &n)?;
            check(|| vec![t.to_string()], &phi_inv(&p), t)?;
            if !images.insert(p.clone()) {
                return Err(Counterexample {
                    inputs: vec![t.to_string()],
                    lhs: p.to_string(),
                    rhs: "an image not already taken".to_string(),
                });
            }
        }
        for p in enumerate_perms(n).expect("degree within cap") {
            check(|| vec![p.to_string()], &phi(&phi_inv(&p)), &p)?;
        }
        let (hit, expected) = (images.len() as u64, factorial(n));
        check(
            || vec![format!("image size in degree {n}")],
            &hit,
            &expected,
        )?;
    }
    Ok(())
}

fn phi_product(d: usize, run: &mut Run) -> Outcome {
    let basis = bases(&TreeAlgebra, d);
    for da in 0..=d {
        for db in 0..=d - da {
            for a in &basis[da] {
                let pa = phi(a);
                for b in &basis[db] {
                    run.instance();
                    let lhs = phi_linear(&tree_product(a, b));
                    let rhs = heap_product(&pa, &phi(b));
                    check(|| names(&[a, b]), &lhs, &rhs)?;
                }
            }
        }
    }
    Ok(())
}

fn phi_coproduct(d: usize, run: &mut Run) -> Outcome {
    let to_perm = |t: &crate::tree::StandardTree| LinComb::basis(phi(t));
    for n in 0..=d {
        for t in enumerate_trees(n).expect("degree within cap") {
            run.instance();
            let lhs = tree_coproduct(&t).map_tensor(to_perm, to_perm);
            let rhs = perm_coproduct(&phi(&t));
            check(|| vec![t.to_string()], &lhs, &rhs)?;
            let (et, ep) = (TreeAlgebra.counit(&t), PermAlgebra.counit(&phi(&t)));
            check(|| vec![format!("counit of {t}")], &ep, &et)?;
        }
    }
    Ok(())
}

fn enumeration_counts(d: usize, run: &mut Run) -> Outcome {
    let mut counts = Vec::new();
    for n in 0..=d {
        run.instance();
        let trees = enumerate_trees(n).expect("degree within cap");
        let perms = enumerate_perms(n).expect("degree within cap");
        let distinct_trees = trees.iter().collect::<HashSet<_>>().len() as u64;
        let distinct_perms = perms.iter().collect::<HashSet<_>>().len() as u64;
        let want = factorial(n);
        counts.push(distinct_trees);
        let got = format!(
            "{} trees ({distinct_trees} distinct), {} perms ({distinct_perms} distinct)",
            trees.len(),
            perms.len()
        );
        let expected = format!("{want} trees ({want} distinct), {want} perms ({want} distinct)");
        let outcome = check(|| vec![format!("degree {n}")], &got, &expected);
        if outcome.is_err() {
            run.counts = Some(counts);
            return outcome;
        }
    }
    run.counts = Some(counts);
    Ok(())
}
