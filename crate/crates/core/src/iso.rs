//! The bijection between standard heap ordered trees and permutations.
//!
//! `alpha` reads a tree with labeled root as a string: the root label
//! followed by the strings of its children in decreasing order of root label.
//! `beta` rebuilds the tree from such a string. `phi` sends a standard tree
//! to the permutation whose cycles are the strings of the root's children.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::linear::LinComb;
use crate::perm::{Cycle, CyclePerm};
use crate::tree::{Label, LabeledTree, StandardTree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("empty cycle string")]
    Empty,
    #[error(
        "cycle string must start with its minimum; {first} is followed by smaller entry {smaller}"
    )]
    NotMinimalFirst { first: Label, smaller: Label },
    #[error("label {0} occurs more than once")]
    DuplicateLabel(Label),
    #[error("label 0 is not positive")]
    NonPositiveLabel,
    #[error("tree has an unlabeled root")]
    UnlabeledRoot,
}

/// Distinct positive labels, the first strictly below all others.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleString(Vec<Label>);

impl CycleString {
    pub fn new(entries: Vec<Label>) -> Result<Self, IsoError> {
        let (&first, rest) = entries.split_first().ok_or(IsoError::Empty)?;
        let mut seen = HashSet::new();
        for &e in &entries {
            if e == 0 {
                return Err(IsoError::NonPositiveLabel);
            }
            if !seen.insert(e) {
                return Err(IsoError::DuplicateLabel(e));
            }
        }
        if let Some(&smaller) = rest.iter().find(|&&e| e < first) {
            return Err(IsoError::NotMinimalFirst { first, smaller });
        }
        Ok(CycleString(entries))
    }

    pub fn entries(&self) -> &[Label] {
        &self.0
    }
}

impl From<&Cycle> for CycleString {
    fn from(c: &Cycle) -> Self {
        CycleString(c.entries().to_vec())
    }
}

impl From<CycleString> for Cycle {
    fn from(s: CycleString) -> Self {
        Cycle::from_entries_unchecked(s.0)
    }
}

impl fmt::Display for CycleString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn alpha(t: &LabeledTree) -> Result<CycleString, IsoError> {
    if t.label().is_none() {
        return Err(IsoError::UnlabeledRoot);
    }
    let mut out = Vec::with_capacity(t.node_count());
    alpha_into(t, &mut out);
    Ok(CycleString(out))
}

fn alpha_into(t: &LabeledTree, out: &mut Vec<Label>) {
    out.extend(t.label());
    for child in t.children().iter().rev() {
        alpha_into(child, out);
    }
}

/// Rebuilds the tree by collapsing valid substrings right to left.
///
/// Scanning from the right keeps a stack of finished subtrees whose root
/// labels increase towards the top. An entry `v` adopts every subtree on top
/// of the stack with a larger root, which is exactly the valid substring
/// starting at `v`.
pub fn beta(s: &CycleString) -> LabeledTree {
    let mut stack: Vec<LabeledTree> = Vec::new();
    for &v in s.0.iter().rev() {
        let mut children = Vec::new();
        while stack.last().is_some_and(|top| top.label() > Some(v)) {
            children.push(stack.pop().unwrap());
        }
        stack.push(LabeledTree::new(Some(v), children).expect("distinct labels above v"));
    }
    debug_assert_eq!(stack.len(), 1);
    stack.pop().expect("nonempty string")
}

pub fn phi(t: &StandardTree) -> CyclePerm {
    let cycles = t
        .root_children()
        .iter()
        .map(|c| Cycle::from(alpha(c).expect("non-root nodes are labeled")))
        .collect();
    CyclePerm::from_parts_unchecked(t.degree(), cycles)
}

pub fn phi_inv(p: &CyclePerm) -> StandardTree {
    let children = p
        .cycles()
        .iter()
        .map(|c| beta(&CycleString::from(c)))
        .collect();
    let tree = LabeledTree::new(None, children).expect("cycles are disjoint");
    StandardTree::from_tree_unchecked(tree)
}

pub fn phi_linear(x: &LinComb<StandardTree>) -> LinComb<CyclePerm> {
    x.map_linear(|t| LinComb::basis(phi(t)))
}

pub fn phi_inv_linear(x: &LinComb<CyclePerm>) -> LinComb<StandardTree> {
    x.map_linear(|p| LinComb::basis(phi_inv(p)))
}
