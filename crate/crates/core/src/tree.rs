//! Heap ordered trees.
//!
//! A [`LabeledTree`] is a rooted tree whose nodes carry distinct positive
//! labels, each label smaller than the labels of its children. Only the
//! outermost root may be unlabeled. A [`StandardTree`] is one with an
//! unlabeled root and labels exactly `1..=n`; these form the basis of the
//! tree Hopf algebra.
//!
//! Children are always stored in increasing order of their root labels, so
//! structural equality is equality of trees.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::collate::sort_canonical;

pub type Label = u32;

/// Largest degree accepted by [`enumerate_trees`]; `9! = 362880` trees.
pub const TREE_DEGREE_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TreeError {
    #[error("syntax error at byte {position}: {message}, found `{found}`")]
    Syntax {
        position: usize,
        found: String,
        message: &'static str,
    },
    #[error("label `{0}` is not a positive 32-bit integer")]
    InvalidLabel(String),
    #[error("label {0} occurs more than once")]
    DuplicateLabel(Label),
    #[error("heap condition violated: child {child} is not greater than its parent {parent}")]
    HeapViolation { parent: Label, child: Label },
    #[error("only the root may be unlabeled")]
    UnlabeledNode,
    #[error("a standard tree has an unlabeled root `*`, found root label {0}")]
    LabeledRoot(Label),
    #[error("labels of a standard tree of degree {degree} must be exactly 1..{degree}; {missing} is missing")]
    NotStandard { degree: usize, missing: Label },
    #[error("forest label {0} collides with a label of the target tree")]
    LabelCollision(Label),
    #[error("forest label {label} does not exceed the largest target label {bound}")]
    ForestLabelTooSmall { label: Label, bound: Label },
    #[error("degree {requested} exceeds the enumeration cap of {cap}")]
    DegreeCap { requested: usize, cap: usize },
}

/// A heap ordered tree with canonically ordered children.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledTree {
    label: Option<Label>,
    children: Vec<LabeledTree>,
}

impl LabeledTree {
    pub fn leaf(label: Label) -> Result<Self, TreeError> {
        Self::new(Some(label), Vec::new())
    }

    /// The tree with only an unlabeled root.
    pub fn unit() -> Self {
        LabeledTree {
            label: None,
            children: Vec::new(),
        }
    }

    /// Builds a node over already valid subtrees, sorting the children.
    pub fn new(label: Option<Label>, mut children: Vec<LabeledTree>) -> Result<Self, TreeError> {
        if label == Some(0) {
            return Err(TreeError::InvalidLabel("0".into()));
        }
        let mut seen: HashSet<Label> = label.into_iter().collect();
        for child in &children {
            let child_label = child.label.ok_or(TreeError::UnlabeledNode)?;
            if let Some(parent) = label {
                if child_label <= parent {
                    return Err(TreeError::HeapViolation {
                        parent,
                        child: child_label,
                    });
                }
            }
            for l in child.labels() {
                if !seen.insert(l) {
                    return Err(TreeError::DuplicateLabel(l));
                }
            }
        }
        children.sort_by_key(|c| c.label);
        Ok(LabeledTree { label, children })
    }

    pub fn label(&self) -> Option<Label> {
        self.label
    }

    pub fn children(&self) -> &[LabeledTree] {
        &self.children
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(LabeledTree::node_count)
            .sum::<usize>()
    }

    /// Labels in canonical preorder.
    pub fn labels(&self) -> Vec<Label> {
        let mut out = Vec::new();
        self.collect_labels(&mut out);
        out
    }

    fn collect_labels(&self, out: &mut Vec<Label>) {
        out.extend(self.label);
        for child in &self.children {
            child.collect_labels(out);
        }
    }

    /// Order-preserving relabelling: the `p`-th smallest label (1-based)
    /// becomes `p + m`.
    pub fn relabel_shift(&self, m: Label) -> LabeledTree {
        let mut sorted = self.labels();
        sorted.sort_unstable();
        self.map_labels(&|l| {
            let rank = sorted.binary_search(&l).expect("label present") as Label;
            rank + 1 + m
        })
    }

    fn map_labels(&self, f: &impl Fn(Label) -> Label) -> LabeledTree {
        LabeledTree {
            label: self.label.map(f),
            children: self.children.iter().map(|c| c.map_labels(f)).collect(),
        }
    }

    /// Removes the root, leaving the forest of its children.
    pub fn delete_root(&self) -> Forest {
        Forest(self.children.clone())
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Some(l) => write!(f, "{l}")?,
            None => f.write_str("*")?,
        }
        if let Some((first, rest)) = self.children.split_first() {
            write!(f, "({first}")?;
            for child in rest {
                write!(f, ",{child}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// Rooted subtrees with labeled roots and pairwise disjoint labels, kept in
/// increasing order of root label.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Forest(Vec<LabeledTree>);

impl Forest {
    pub fn new(mut members: Vec<LabeledTree>) -> Result<Self, TreeError> {
        let mut seen = HashSet::new();
        for member in &members {
            if member.label.is_none() {
                return Err(TreeError::UnlabeledNode);
            }
            for l in member.labels() {
                if !seen.insert(l) {
                    return Err(TreeError::DuplicateLabel(l));
                }
            }
        }
        members.sort_by_key(|m| m.label);
        Ok(Forest(members))
    }

    pub fn members(&self) -> &[LabeledTree] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> Vec<Label> {
        self.0.iter().flat_map(LabeledTree::labels).collect()
    }
}

/// Every way of making each forest member a child of some node of `target`.
///
/// Returns `node_count(target)^|forest|` trees. Assignments are enumerated in
/// mixed radix with the first forest member varying fastest and target nodes
/// taken in canonical preorder (root first).
pub fn attach_all(forest: &Forest, target: &LabeledTree) -> Result<Vec<LabeledTree>, TreeError> {
    let target_labels: HashSet<Label> = target.labels().into_iter().collect();
    let bound = target_labels.iter().copied().max();
    for l in forest.labels() {
        if target_labels.contains(&l) {
            return Err(TreeError::LabelCollision(l));
        }
    }
    if let Some(bound) = bound {
        if let Some(&label) = forest.labels().iter().find(|&&l| l <= bound) {
            return Err(TreeError::ForestLabelTooSmall { label, bound });
        }
    }

    let nodes = target.node_count();
    let r = forest.len();
    let total = nodes.pow(r as u32);
    let mut digits = vec![0usize; r];
    let mut out = Vec::with_capacity(total);
    for _ in 0..total {
        let mut groups = vec![Vec::new(); nodes];
        for (member, &node) in digits.iter().enumerate() {
            groups[node].push(member);
        }
        let mut index = 0;
        out.push(graft(target, &mut index, &groups, forest.members()));
        for d in digits.iter_mut() {
            *d += 1;
            if *d < nodes {
                break;
            }
            *d = 0;
        }
    }
    Ok(out)
}

fn graft(
    node: &LabeledTree,
    index: &mut usize,
    groups: &[Vec<usize>],
    forest: &[LabeledTree],
) -> LabeledTree {
    let here = *index;
    *index += 1;
    let mut children: Vec<LabeledTree> = node
        .children
        .iter()
        .map(|c| graft(c, index, groups, forest))
        .collect();
    // forest labels exceed every target label, so appending keeps the order
    children.extend(groups[here].iter().map(|&m| forest[m].clone()));
    LabeledTree {
        label: node.label,
        children,
    }
}

/// Attaches every member of `forest` to a fresh unlabeled root.
pub fn graft_at_root(forest: &Forest) -> LabeledTree {
    LabeledTree {
        label: None,
        children: forest.0.clone(),
    }
}

/// A heap ordered tree with unlabeled root and labels exactly `1..=degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTree(LabeledTree);

impl StandardTree {
    pub fn unit() -> Self {
        StandardTree(LabeledTree::unit())
    }

    pub fn degree(&self) -> usize {
        self.0.node_count() - 1
    }

    pub fn as_tree(&self) -> &LabeledTree {
        &self.0
    }

    pub fn into_tree(self) -> LabeledTree {
        self.0
    }

    /// Children of the root, i.e. the forest `B₋(t)`.
    pub fn root_children(&self) -> &[LabeledTree] {
        &self.0.children
    }

    /// Standardizes a tree with an unlabeled root (`relabel_shift(t, 0)`).
    pub fn standardize(tree: &LabeledTree) -> Result<Self, TreeError> {
        if let Some(l) = tree.label {
            return Err(TreeError::LabeledRoot(l));
        }
        Ok(StandardTree(tree.relabel_shift(0)))
    }

    pub(crate) fn from_tree_unchecked(tree: LabeledTree) -> Self {
        debug_assert!(tree.label.is_none());
        StandardTree(tree)
    }
}

impl TryFrom<LabeledTree> for StandardTree {
    type Error = TreeError;

    fn try_from(tree: LabeledTree) -> Result<Self, TreeError> {
        if let Some(l) = tree.label {
            return Err(TreeError::LabeledRoot(l));
        }
        let mut labels = tree.labels();
        labels.sort_unstable();
        let degree = labels.len();
        for (i, &l) in labels.iter().enumerate() {
            let expected = i as Label + 1;
            if l != expected {
                return Err(TreeError::NotStandard {
                    degree,
                    missing: expected,
                });
            }
        }
        Ok(StandardTree(tree))
    }
}

impl fmt::Display for StandardTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All standard trees of degree `n`, in canonical order.
pub fn enumerate_trees(n: usize) -> Result<Vec<StandardTree>, TreeError> {
    if n > TREE_DEGREE_CAP {
        return Err(TreeError::DegreeCap {
            requested: n,
            cap: TREE_DEGREE_CAP,
        });
    }
    // parents[k - 1] is the parent of node k: 0 for the root, else 1..k-1
    let mut parents = vec![0usize; n];
    let mut out = Vec::new();
    loop {
        out.push(StandardTree(tree_from_parents(&parents)));
        let mut k = n;
        loop {
            if k == 0 {
                sort_canonical(&mut out);
                return Ok(out);
            }
            // node k may hang below any of root, 1, .., k-1
            if parents[k - 1] + 1 < k {
                parents[k - 1] += 1;
                break;
            }
            parents[k - 1] = 0;
            k -= 1;
        }
    }
}

fn tree_from_parents(parents: &[usize]) -> LabeledTree {
    let mut kids = vec![Vec::new(); parents.len() + 1];
    for (i, &p) in parents.iter().enumerate() {
        kids[p].push(i + 1);
    }
    fn build(node: usize, kids: &[Vec<usize>]) -> LabeledTree {
        LabeledTree {
            label: (node > 0).then_some(node as Label),
            children: kids[node].iter().map(|&c| build(c, kids)).collect(),
        }
    }
    build(0, &kids)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn error(&self, message: &'static str) -> TreeError {
        let found = match self.peek() {
            Some(c) if c.is_ascii_digit() => self.text[self.pos..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect(),
            Some(c) => c.to_string(),
            None => "end of input".to_string(),
        };
        TreeError::Syntax {
            position: self.pos,
            found,
            message,
        }
    }

    fn node(&mut self, outermost: bool) -> Result<LabeledTree, TreeError> {
        self.skip_ws();
        let label = match self.peek() {
            Some('*') if outermost => {
                self.pos += 1;
                None
            }
            Some('*') => return Err(self.error("only the outermost root may be `*`")),
            Some(c) if c.is_ascii_digit() => {
                let digits: String = self.text[self.pos..]
                    .chars()
                    .take_while(char::is_ascii_digit)
                    .collect();
                self.pos += digits.len();
                match digits.parse::<Label>() {
                    Ok(l) if l > 0 => Some(l),
                    _ => return Err(TreeError::InvalidLabel(digits)),
                }
            }
            Some('-') => {
                let token: String = self.text[self.pos..]
                    .chars()
                    .take_while(|c| *c == '-' || c.is_ascii_digit())
                    .collect();
                return Err(TreeError::InvalidLabel(token));
            }
            _ => {
                return Err(self.error(if outermost {
                    "expected `*` or a label"
                } else {
                    "expected a label"
                }))
            }
        };
        self.skip_ws();
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.pos += 1;
            loop {
                children.push(self.node(false)?);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.pos += 1,
                    Some(')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        LabeledTree::new(label, children)
    }

    fn finish(&mut self) -> Result<(), TreeError> {
        self.skip_ws();
        if self.pos < self.text.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }
}

impl FromStr for LabeledTree {
    type Err = TreeError;

    /// Parses either a standard-tree literal (`*(...)`) or a labeled subtree.
    fn from_str(s: &str) -> Result<Self, TreeError> {
        let mut parser = Parser { text: s, pos: 0 };
        let tree = parser.node(true)?;
        parser.finish()?;
        Ok(tree)
    }
}

impl FromStr for StandardTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, TreeError> {
        StandardTree::try_from(s.parse::<LabeledTree>()?)
    }
}
