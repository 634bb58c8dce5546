//! Canonical ordering of rendered basis elements.
//!
//! Canonical text is compared token by token. Runs of digits are single
//! integer tokens compared numerically, so `10` sorts after `9`. Punctuation
//! is ranked so that closing a node or a cycle sorts before extending it:
//!
//! ```text
//! ',' < ')' < '(' < ' ' < other characters (by byte) < integers
//! ```
//!
//! Under this order `*(1,2)` precedes `*(1(2))` and `(1)(2)` precedes `(1 2)`,
//! and a proper prefix precedes its extensions.

use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Token {
    Comma,
    Close,
    Open,
    Space,
    Other(u8),
    Int(u64),
}

/// Sort key for a canonical rendering; compares consistently with [`collate`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CollationKey(Vec<Token>);

impl CollationKey {
    pub fn new(text: &str) -> Self {
        let bytes = text.as_bytes();
        let mut tokens = Vec::with_capacity(bytes.len());
        let mut i = 0;
        while i < bytes.len() {
            let b = bytes[i];
            if b.is_ascii_digit() {
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .saturating_mul(10)
                        .saturating_add(u64::from(bytes[i] - b'0'));
                    i += 1;
                }
                tokens.push(Token::Int(value));
                continue;
            }
            tokens.push(match b {
                b',' => Token::Comma,
                b')' => Token::Close,
                b'(' => Token::Open,
                b' ' => Token::Space,
                other => Token::Other(other),
            });
            i += 1;
        }
        CollationKey(tokens)
    }
}

/// Compares two canonical renderings in canonical order.
pub fn collate(a: &str, b: &str) -> Ordering {
    CollationKey::new(a).cmp(&CollationKey::new(b))
}

/// Sorts values by the canonical order of their `Display` rendering.
pub fn sort_canonical<T: std::fmt::Display>(items: &mut [T]) {
    items.sort_by_cached_key(|item| CollationKey::new(&item.to_string()));
}
