//! Freely reduced words in a free group of even rank 2g.
//!
//! Letters are signed 1-based generator indices: `+k` is the k-th generator,
//! `-k` its inverse. Generator `2i-1` is printed `a<i>`, generator `2i` is
//! printed `b<i>`, and an uppercase initial marks the inverse, so the word
//! a₁b₁a₁⁻¹b₁⁻¹ reads `a1 b1 A1 B1`.

use std::fmt;

use crate::{Error, Result};

/// How [`Word::reduce`] normalizes a raw letter sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReduceMode {
    /// Cancel adjacent inverse pairs only.
    Free,
    /// Free reduction, then cancel matching first/last letters until none.
    Cyclic,
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Single-letter word for signed generator index `letter` (nonzero).
    pub fn generator(letter: i32) -> Self {
        debug_assert!(letter != 0);
        Word { letters: vec![letter] }
    }

    /// Reduce a raw letter sequence.
    pub fn reduce(raw: &[i32], mode: ReduceMode) -> Self {
        let mut stack: Vec<i32> = Vec::with_capacity(raw.len());
        for &l in raw {
            debug_assert!(l != 0);
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        if mode == ReduceMode::Cyclic {
            let mut lo = 0usize;
            let mut hi = stack.len();
            while hi - lo >= 2 && stack[lo] == -stack[hi - 1] {
                lo += 1;
                hi -= 1;
            }
            stack = stack[lo..hi].to_vec();
        }
        Word { letters: stack }
    }

    pub fn from_letters(raw: &[i32]) -> Self {
        Self::reduce(raw, ReduceMode::Free)
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// `self · w · self⁻¹`.
    pub fn conjugate(&self, w: &Word) -> Self {
        self.concat(w).concat(&self.inverse())
    }

    pub fn pow(&self, n: i32) -> Self {
        let base = if n >= 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Cyclically reduced form (conjugacy-class representative up to rotation).
    pub fn cyclic_reduced(&self) -> Self {
        Self::reduce(&self.letters, ReduceMode::Cyclic)
    }

    /// Exponent-sum vector over generators 1..=rank.
    pub fn abelianize(&self, rank: usize) -> Vec<i64> {
        let mut v = vec![0i64; rank];
        for &l in &self.letters {
            let idx = (l.unsigned_abs() as usize) - 1;
            debug_assert!(idx < rank);
            v[idx] += if l > 0 { 1 } else { -1 };
        }
        v
    }

    /// Parse whitespace-separated letters like `a1 b2 A1`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for tok in text.split_whitespace() {
            raw.push(parse_letter(tok)?);
        }
        Ok(Self::from_letters(&raw))
    }
}

pub(crate) fn parse_letter(tok: &str) -> Result<i32> {
    let mut chars = tok.chars();
    let head = chars
        .next()
        .ok_or_else(|| Error::Parse(format!("empty word letter in `{tok}`")))?;
    let idx: u32 = chars
        .as_str()
        .parse()
        .map_err(|_| Error::Parse(format!("bad generator index in `{tok}`")))?;
    if idx == 0 {
        return Err(Error::Parse(format!("generator index must be >= 1 in `{tok}`")));
    }
    let base = match head.to_ascii_lowercase() {
        'a' => 2 * idx as i32 - 1,
        'b' => 2 * idx as i32,
        _ => return Err(Error::Parse(format!("unknown generator letter `{tok}`"))),
    };
    Ok(if head.is_ascii_uppercase() { -base } else { base })
}

pub(crate) fn letter_name(l: i32) -> String {
    let k = l.unsigned_abs();
    let (c, i) = if k % 2 == 1 { ('a', (k + 1) / 2) } else { ('b', k / 2) };
    let c = if l < 0 { c.to_ascii_uppercase() } else { c };
    format!("{c}{i}")
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|&l| letter_name(l)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cancellation() {
        // a1 a1^-1 -> identity
        let w = Word::from_letters(&[1, -1]);
        assert!(w.is_empty());
        // b1 a1 a1^-1 b1 -> b1 b1
        let w = Word::from_letters(&[2, 1, -1, 2]);
        assert_eq!(w.letters(), &[2, 2]);
    }

    #[test]
    fn cyclic_cancellation() {
        // a1 b1 a1^-1 -> b1 cyclically
        let w = Word::reduce(&[1, 2, -1], ReduceMode::Cyclic);
        assert_eq!(w.letters(), &[2]);
    }

    #[test]
    fn parse_roundtrip() {
        let w = Word::parse("a1 b1 A1 B1 a2").unwrap();
        assert_eq!(w.letters(), &[1, 2, -1, -2, 3]);
        assert_eq!(format!("{w}"), "a1 b1 A1 B1 a2");
        assert!(Word::parse("c1").is_err());
        assert!(Word::parse("a0").is_err());
    }

    proptest! {
        #[test]
        fn reduce_idempotent(raw in proptest::collection::vec(prop_oneof![1i32..=4, -4i32..=-1], 0..40)) {
            let w = Word::from_letters(&raw);
            let again = Word::from_letters(w.letters());
            prop_assert_eq!(&w, &again);
            let c = Word::reduce(&raw, ReduceMode::Cyclic);
            let c2 = Word::reduce(c.letters(), ReduceMode::Cyclic);
            prop_assert_eq!(&c, &c2);
        }

        #[test]
        fn concat_inverse_is_identity(raw in proptest::collection::vec(prop_oneof![1i32..=4, -4i32..=-1], 0..40)) {
            let w = Word::from_letters(&raw);
            prop_assert!(w.concat(&w.inverse()).is_empty());
        }
    }
}
