//! Formal integer linear combinations over a basis, and tensors of them.
//!
//! [`LinComb`] never stores a zero coefficient, so the empty combination is
//! the only representation of zero and derived equality is equality of
//! elements. Terms are reported in canonical order of their rendering (see
//! [`crate::collate`]).

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::collate::CollationKey;

/// Anything usable as a basis element: canonical values with a canonical
/// rendering.
pub trait Basis: Clone + Eq + Hash + fmt::Display {}

impl<T: Clone + Eq + Hash + fmt::Display> Basis for T {}

/// The basis element `left ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor<L, R = L> {
    pub left: L,
    pub right: R,
}

impl<L, R> Tensor<L, R> {
    pub fn new(left: L, right: R) -> Self {
        Tensor { left, right }
    }

    pub fn swap(self) -> Tensor<R, L> {
        Tensor {
            left: self.right,
            right: self.left,
        }
    }
}

impl<L: fmt::Display, R: fmt::Display> fmt::Display for Tensor<L, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.left, self.right)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorParseError<E> {
    #[error("missing ` (x) ` separator in `{0}`")]
    MissingSeparator(String),
    #[error("{0}")]
    Factor(E),
}

impl<L: FromStr, R: FromStr<Err = L::Err>> FromStr for Tensor<L, R> {
    type Err = TensorParseError<L::Err>;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (left, right) = s
            .split_once(" (x) ")
            .ok_or_else(|| TensorParseError::MissingSeparator(s.to_string()))?;
        Ok(Tensor {
            left: left.parse().map_err(TensorParseError::Factor)?,
            right: right.parse().map_err(TensorParseError::Factor)?,
        })
    }
}

/// A finite sum `Σ c_b · b` with nonzero integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<B: Basis> {
    terms: HashMap<B, BigInt>,
}

impl<B: Basis> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Basis> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: HashMap::new(),
        }
    }

    /// The element `1 · b`.
    pub fn basis(b: B) -> Self {
        Self::monomial(b, BigInt::one())
    }

    pub fn monomial(b: B, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(b, coeff);
        out
    }

    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (B, C)>) -> Self {
        let mut out = Self::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: B, coeff: impl Into<BigInt>) {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of basis elements with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &B) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> Vec<(&B, &BigInt)> {
        let mut out: Vec<_> = self
            .terms
            .iter()
            .map(|(b, c)| (CollationKey::new(&b.to_string()), b, c))
            .collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out.into_iter().map(|(_, b, c)| (b, c)).collect()
    }

    /// Terms in unspecified order.
    pub fn iter_unordered(&self) -> impl Iterator<Item = (&B, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Audit hook: no stored coefficient is zero.
    pub fn is_normalized(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero())
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, x)| (b.clone(), x * &c))
                .collect(),
        }
    }

    /// Linear extension of `f` from basis elements to combinations.
    pub fn map_linear<C: Basis>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Linear extension of an integer-valued function on the basis.
    pub fn functional(&self, mut f: impl FnMut(&B) -> BigInt) -> BigInt {
        self.terms.iter().map(|(b, c)| f(b) * c).sum()
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &BigInt) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), x * c);
        }
    }
}

/// Bilinear extension of `f` from pairs of basis elements.
pub fn bilinear<A: Basis, B: Basis, C: Basis>(
    x: &LinComb<A>,
    y: &LinComb<B>,
    mut f: impl FnMut(&A, &B) -> LinComb<C>,
) -> LinComb<C> {
    let mut out = LinComb::zero();
    for (a, ca) in &x.terms {
        for (b, cb) in &y.terms {
            out.add_scaled(&f(a, b), &(ca * cb));
        }
    }
    out
}

/// The element `x ⊗ y`.
pub fn tensor<A: Basis, B: Basis>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<Tensor<A, B>> {
    bilinear(x, y, |a, b| {
        LinComb::basis(Tensor::new(a.clone(), b.clone()))
    })
}

impl<L: Basis, R: Basis> LinComb<Tensor<L, R>> {
    /// Exchanges the tensor factors of every term.
    pub fn swap_tensor(&self) -> LinComb<Tensor<R, L>> {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.clone().swap(), c.clone()))
                .collect(),
        }
    }

    /// `f ⊗ g` applied termwise.
    pub fn map_tensor<L2: Basis, R2: Basis>(
        &self,
        mut f: impl FnMut(&L) -> LinComb<L2>,
        mut g: impl FnMut(&R) -> LinComb<R2>,
    ) -> LinComb<Tensor<L2, R2>> {
        self.map_linear(|t| tensor(&f(&t.left), &g(&t.right)))
    }
}

impl<B: Basis> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Basis> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Basis> Add for LinComb<B> {
    type Output = LinComb<B>;

    fn add(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self += &rhs;
        self
    }
}

impl<B: Basis> Sub for LinComb<B> {
    type Output = LinComb<B>;

    fn sub(mut self, rhs: LinComb<B>) -> LinComb<B> {
        self -= &rhs;
        self
    }
}

impl<B: Basis> Neg for LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Basis> fmt::Display for LinComb<B> {
    /// `c1*B1 + c2*B2 - c3*B3`, unit coefficients elided, `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in terms.into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}*")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinCombParseError<E> {
    #[error("malformed term `{0}`")]
    MalformedTerm(String),
    #[error("in term `{term}`: {cause}")]
    Basis { term: String, cause: E },
}

impl<B: Basis + FromStr> FromStr for LinComb<B> {
    type Err = LinCombParseError<B::Err>;

    /// Parses the rendering produced by `Display`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let (mut negative, mut rest) = match s.strip_prefix('-') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let mut out = Self::zero();
        loop {
            let plus = rest.find(" + ");
            let minus = rest.find(" - ");
            let next = match (plus, minus) {
                (Some(p), Some(m)) => Some(p.min(m)),
                (p, m) => p.or(m),
            };
            let (term, tail) = match next {
                Some(i) => (
                    &rest[..i],
                    Some((&rest[i + 1..i + 2] == "-", &rest[i + 3..])),
                ),
                None => (rest, None),
            };
            let (coeff, body) = split_coefficient(term)
                .ok_or_else(|| LinCombParseError::MalformedTerm(term.to_string()))?;
            let b = body
                .parse::<B>()
                .map_err(|cause| LinCombParseError::Basis {
                    term: term.to_string(),
                    cause,
                })?;
            out.add_term(b, if negative { -coeff } else { coeff });
            match tail {
                Some((neg, t)) => {
                    negative = neg;
                    rest = t;
                }
                None => return Ok(out),
            }
        }
    }
}

fn split_coefficient(term: &str) -> Option<(BigInt, &str)> {
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return (!term.is_empty()).then(|| (BigInt::one(), term));
    }
    let body = term[digits..].strip_prefix('*')?;
    let coeff: BigInt = term[..digits].parse().ok()?;
    if coeff.is_zero() || body.is_empty() {
        return None;
    }
    Some((coeff, body))
}
