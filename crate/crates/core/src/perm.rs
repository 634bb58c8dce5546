//! Permutations in disjoint-cycle form.
//!
//! A [`CyclePerm`] of degree `n` lists every point of `1..=n` in exactly one
//! [`Cycle`], fixed points included as 1-cycles. Each cycle starts with its
//! smallest entry and cycles are stored by increasing minimum, which is also
//! the rendering order. The "standard order" used by the heap product is the
//! reverse (decreasing minima) and is exposed as a view.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::collate::sort_canonical;
use crate::tree::Label;

/// Largest degree accepted by [`enumerate_perms`].
pub const PERM_DEGREE_CAP: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("syntax error at byte {position}: {message}, found `{found}`")]
    Syntax {
        position: usize,
        found: String,
        message: &'static str,
    },
    #[error("label `{0}` is not a positive 32-bit integer")]
    NonPositiveLabel(String),
    #[error("label {0} occurs more than once")]
    DuplicateLabel(Label),
    #[error("empty cycle")]
    EmptyCycle,
    #[error("label {label} exceeds the degree {degree}")]
    LabelExceedsDegree { label: Label, degree: usize },
    #[error("degree {requested} exceeds the enumeration cap of {cap}")]
    DegreeCap { requested: usize, cap: usize },
}

/// A cycle written from its smallest entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle(Vec<Label>);

impl Cycle {
    /// Builds a cycle, rotating it to start at its minimum.
    pub fn new(mut entries: Vec<Label>) -> Result<Self, PermError> {
        if entries.is_empty() {
            return Err(PermError::EmptyCycle);
        }
        let mut seen = HashSet::new();
        for &e in &entries {
            if e == 0 {
                return Err(PermError::NonPositiveLabel("0".into()));
            }
            if !seen.insert(e) {
                return Err(PermError::DuplicateLabel(e));
            }
        }
        let start = (0..entries.len()).min_by_key(|&i| entries[i]).unwrap();
        entries.rotate_left(start);
        Ok(Cycle(entries))
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<Label>) -> Self {
        debug_assert!(entries[1..].iter().all(|&e| e > entries[0]));
        Cycle(entries)
    }

    pub fn entries(&self) -> &[Label] {
        &self.0
    }

    pub fn min(&self) -> Label {
        self.0[0]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Adds `m` to every entry.
    pub fn shift(&self, m: Label) -> Cycle {
        Cycle(self.0.iter().map(|&e| e + m).collect())
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A permutation of `1..=degree` stored as all of its cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclePerm {
    degree: usize,
    cycles: Vec<Cycle>,
}

impl CyclePerm {
    pub fn identity(degree: usize) -> Self {
        CyclePerm {
            degree,
            cycles: (1..=degree as Label).map(|i| Cycle(vec![i])).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles. The degree defaults to the
    /// largest label; absent points become fixed points.
    pub fn from_cycles(cycles: Vec<Cycle>, degree: Option<usize>) -> Result<Self, PermError> {
        let mut seen = HashSet::new();
        for c in &cycles {
            for &e in c.entries() {
                if !seen.insert(e) {
                    return Err(PermError::DuplicateLabel(e));
                }
            }
        }
        let max = seen.iter().copied().max().unwrap_or(0) as usize;
        let degree = match degree {
            Some(d) if d < max => {
                return Err(PermError::LabelExceedsDegree {
                    label: max as Label,
                    degree: d,
                })
            }
            Some(d) => d,
            None => max,
        };
        let mut cycles = cycles;
        cycles.extend(
            (1..=degree as Label)
                .filter(|i| !seen.contains(i))
                .map(|i| Cycle(vec![i])),
        );
        Ok(Self::from_parts_unchecked(degree, cycles))
    }

    /// `cycles` must be min-first and cover `1..=degree` exactly once.
    pub(crate) fn from_parts_unchecked(degree: usize, mut cycles: Vec<Cycle>) -> Self {
        cycles.sort_unstable_by_key(Cycle::min);
        CyclePerm { degree, cycles }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Cycles by increasing minimum.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    /// The cycles in standard order: strictly decreasing first entries.
    pub fn standard_order(&self) -> Vec<Cycle> {
        self.cycles.iter().rev().cloned().collect()
    }

    /// Cycles over `m+1..=m+degree`, sending `m+i` to `m+σ(i)`.
    pub fn shift(&self, m: Label) -> Vec<Cycle> {
        self.cycles.iter().map(|c| c.shift(m)).collect()
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles.iter().map(Cycle::len).collect();
        lens.sort_unstable();
        lens
    }

    /// One-line notation: entry `i - 1` is the image of `i`.
    pub fn to_one_line(&self) -> Vec<Label> {
        let mut images = vec![0; self.degree];
        for c in &self.cycles {
            let e = c.entries();
            for (i, &x) in e.iter().enumerate() {
                images[x as usize - 1] = e[(i + 1) % e.len()];
            }
        }
        images
    }

    /// Inverse of [`CyclePerm::to_one_line`]. `images` must be a permutation
    /// of `1..=images.len()`.
    pub fn from_one_line(images: &[Label]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in images {
            if x == 0 || x as usize > n {
                return Err(PermError::LabelExceedsDegree {
                    label: x,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x as usize], true) {
                return Err(PermError::DuplicateLabel(x));
            }
        }
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut entries = Vec::new();
            let mut x = start;
            while !visited[x] {
                visited[x] = true;
                entries.push(x as Label);
                x = images[x - 1] as usize;
            }
            cycles.push(Cycle(entries));
        }
        Ok(CyclePerm { degree: n, cycles })
    }
}

impl fmt::Display for CyclePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("e");
        }
        for c in &self.cycles {
            c.fmt(f)?;
        }
        Ok(())
    }
}

/// Order-preserving relabelling of disjoint cycles onto `1..=k`.
pub fn std_perm(cycles: &[Cycle]) -> Result<CyclePerm, PermError> {
    let mut labels: Vec<Label> = cycles
        .iter()
        .flat_map(|c| c.entries().iter().copied())
        .collect();
    labels.sort_unstable();
    if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
        return Err(PermError::DuplicateLabel(w[0]));
    }
    let relabelled = cycles
        .iter()
        .map(|c| {
            Cycle(
                c.entries()
                    .iter()
                    .map(|e| labels.binary_search(e).unwrap() as Label + 1)
                    .collect(),
            )
        })
        .collect();
    Ok(CyclePerm::from_parts_unchecked(labels.len(), relabelled))
}

/// All permutations of degree `n`, in canonical order.
pub fn enumerate_perms(n: usize) -> Result<Vec<CyclePerm>, PermError> {
    if n > PERM_DEGREE_CAP {
        return Err(PermError::DegreeCap {
            requested: n,
            cap: PERM_DEGREE_CAP,
        });
    }
    let mut out = Vec::new();
    let mut images: Vec<Label> = (1..=n as Label).collect();
    heap_permutations(n, &mut images, &mut out);
    sort_canonical(&mut out);
    Ok(out)
}

// Heap's algorithm over one-line images.
fn heap_permutations(k: usize, images: &mut [Label], out: &mut Vec<CyclePerm>) {
    if k <= 1 {
        out.push(CyclePerm::from_one_line(images).expect("valid images"));
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(k - 1, images, out);
        if k.is_multiple_of(2) {
            images.swap(i, k - 1);
        } else {
            images.swap(0, k - 1);
        }
    }
    heap_permutations(k - 1, images, out);
}

/// Parses a permutation, inferring its degree from the largest label.
pub fn parse_perm(text: &str) -> Result<CyclePerm, PermError> {
    parse_perm_with_degree(text, None)
}

/// Parses a permutation with an optional explicit degree; missing points
/// become fixed points.
pub fn parse_perm_with_degree(text: &str, degree: Option<usize>) -> Result<CyclePerm, PermError> {
    let trimmed = text.trim();
    if trimmed == "e" {
        return CyclePerm::from_cycles(Vec::new(), degree);
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let error = |pos: usize, message: &'static str| {
        let found = match text[pos..].chars().next() {
            Some(c) if c.is_ascii_digit() => text[pos..]
                .chars()
                .take_while(char::is_ascii_digit)
                .collect(),
            Some(c) => c.to_string(),
            None => "end of input".to_string(),
        };
        PermError::Syntax {
            position: pos,
            found,
            message,
        }
    };
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let mut cycles = Vec::new();
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(error(pos, "expected `e` or a cycle"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(error(pos, "expected `(`"));
        }
        pos += 1;
        let mut entries = Vec::new();
        loop {
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b')') if !entries.is_empty() => {
                    pos += 1;
                    break;
                }
                Some(b) if b.is_ascii_digit() || *b == b'-' || *b == b'+' => {
                    let start = pos;
                    pos += 1;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let token = &text[start..pos];
                    match token.parse::<Label>() {
                        Ok(l) if l > 0 && token.as_bytes()[0].is_ascii_digit() => entries.push(l),
                        _ => return Err(PermError::NonPositiveLabel(token.to_string())),
                    }
                }
                _ if entries.is_empty() => return Err(error(pos, "expected a label")),
                _ => return Err(error(pos, "expected a label or `)`")),
            }
        }
        cycles.push(Cycle::new(entries)?);
        skip_ws(&mut pos);
    }
    CyclePerm::from_cycles(cycles, degree)
}

impl FromStr for CyclePerm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        parse_perm(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> CyclePerm {
        s.parse().unwrap()
    }

    fn cyc(entries: &[Label]) -> Cycle {
        Cycle::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn standard_order_examples() {
        let rendered = |v: Vec<Cycle>| v.iter().map(|c| c.to_string()).collect::<String>();
        assert_eq!(
            rendered(CyclePerm::identity(3).standard_order()),
            "(3)(2)(1)"
        );
        assert_eq!(rendered(p("(1 3)(2)").standard_order()), "(2)(1 3)");
        assert_eq!(rendered(p("(1 3 2)").standard_order()), "(1 3 2)");
    }

    #[test]
    fn std_perm_examples() {
        let got = std_perm(&[cyc(&[1, 3]), cyc(&[4]), cyc(&[5, 7])]).unwrap();
        assert_eq!(got.to_string(), "(1 2)(3)(4 5)");
        assert_eq!(got.degree(), 5);
        assert_eq!(std_perm(&[]).unwrap(), CyclePerm::identity(0));
        assert_eq!(std_perm(&[cyc(&[9, 12])]).unwrap().to_string(), "(1 2)");
        assert_eq!(
            std_perm(&[cyc(&[1, 2]), cyc(&[2, 3])]),
            Err(PermError::DuplicateLabel(2))
        );
    }

    #[test]
    fn shift_examples() {
        let shown = |v: Vec<Cycle>| v.iter().map(|c| c.to_string()).collect::<String>();
        assert_eq!(shown(p("(1 2)").shift(0)), "(1 2)");
        assert_eq!(shown(p("(1 2 3)").shift(2)), "(3 4 5)");
        assert_eq!(shown(p("(1)(2)").shift(4)), "(5)(6)");
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(enumerate_perms(0).unwrap(), vec![CyclePerm::identity(0)]);
        assert_eq!(enumerate_perms(2).unwrap(), vec![p("(1)(2)"), p("(1 2)")]);
        assert_eq!(enumerate_perms(3).unwrap().len(), 6);
        assert!(matches!(
            enumerate_perms(10),
            Err(PermError::DegreeCap { .. })
        ));
    }

    #[test]
    fn parse_render_examples() {
        assert_eq!(p("(2 1)(3)").to_string(), "(1 2)(3)");
        let q = p("(1 3)");
        assert_eq!(q.degree(), 3);
        assert_eq!(q.to_string(), "(1 3)(2)");
        assert_eq!(p("e"), CyclePerm::identity(0));
        assert_eq!(p("e").to_string(), "e");
        assert_eq!(p(" (3 1 2) ( 4 ) ").to_string(), "(1 2 3)(4)");
        assert_eq!(
            parse_perm_with_degree("(1 2)", Some(4))
                .unwrap()
                .to_string(),
            "(1 2)(3)(4)"
        );
        assert_eq!(
            parse_perm_with_degree("e", Some(2)).unwrap().to_string(),
            "(1)(2)"
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_perm("(1 2)(2 3)"), Err(PermError::DuplicateLabel(2)));
        assert_eq!(parse_perm("(1 1)"), Err(PermError::DuplicateLabel(1)));
        assert_eq!(
            parse_perm("(0 1)"),
            Err(PermError::NonPositiveLabel("0".into()))
        );
        assert_eq!(
            parse_perm("(-3 1)"),
            Err(PermError::NonPositiveLabel("-3".into()))
        );
        assert!(matches!(parse_perm("()"), Err(PermError::Syntax { .. })));
        assert!(matches!(parse_perm("(1 2"), Err(PermError::Syntax { .. })));
        assert!(matches!(parse_perm("1 2"), Err(PermError::Syntax { .. })));
        assert!(matches!(parse_perm(""), Err(PermError::Syntax { .. })));
        match parse_perm("(1 x)") {
            Err(PermError::Syntax { found, .. }) => assert_eq!(found, "x"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_perm_with_degree("(1 5)", Some(3)),
            Err(PermError::LabelExceedsDegree {
                label: 5,
                degree: 3
            })
        );
    }

    #[test]
    fn one_line_round_trip() {
        let q = p("(1 3 2)(4)");
        assert_eq!(q.to_one_line(), vec![3, 1, 2, 4]);
        assert_eq!(CyclePerm::from_one_line(&q.to_one_line()).unwrap(), q);
    }
}
