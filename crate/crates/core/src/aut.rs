//! Automorphisms of a free group, stored as generator images with cached
//! inverse images. Composition is `(φ∘ψ)(x) = φ(ψ(x))`.

use std::fmt;

use crate::word::Word;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FreeAutomorphism {
    rank: usize,
    images: Vec<Word>,
    inv_images: Vec<Word>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<Word> = (1..=rank as i32).map(Word::generator).collect();
        FreeAutomorphism {
            rank,
            inv_images: images.clone(),
            images,
        }
    }

    /// Build from generator images and inverse images; checks that they
    /// compose to the identity on every generator.
    pub fn new(rank: usize, images: Vec<Word>, inv_images: Vec<Word>) -> Result<Self> {
        if images.len() != rank || inv_images.len() != rank {
            return Err(Error::RankMismatch);
        }
        let aut = FreeAutomorphism { rank, images, inv_images };
        for k in 1..=rank as i32 {
            let x = Word::generator(k);
            if aut.apply(&aut.apply_inverse(&x)) != x || aut.apply_inverse(&aut.apply(&x)) != x {
                return Err(Error::NotAnAutomorphism);
            }
        }
        Ok(aut)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    fn substitute(images: &[Word], w: &Word) -> Word {
        let mut raw: Vec<i32> = Vec::with_capacity(w.len() * 2);
        for &l in w.letters() {
            let img = &images[(l.unsigned_abs() as usize) - 1];
            if l > 0 {
                for &m in img.letters() {
                    push_reduced(&mut raw, m);
                }
            } else {
                for &m in img.letters().iter().rev() {
                    push_reduced(&mut raw, -m);
                }
            }
        }
        Word::from_letters(&raw)
    }

    pub fn apply(&self, w: &Word) -> Word {
        Self::substitute(&self.images, w)
    }

    pub fn apply_inverse(&self, w: &Word) -> Word {
        Self::substitute(&self.inv_images, w)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        debug_assert_eq!(self.rank, other.rank);
        let images = other.images.iter().map(|w| self.apply(w)).collect();
        let inv_images = self.inv_images.iter().map(|w| other.apply_inverse(w)).collect();
        FreeAutomorphism { rank: self.rank, images, inv_images }
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            rank: self.rank,
            images: self.inv_images.clone(),
            inv_images: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [i as i32 + 1])
    }

    /// Conjugation `x ↦ u·x·u⁻¹`.
    pub fn conjugation(rank: usize, u: &Word) -> Self {
        let ui = u.inverse();
        let images = (1..=rank as i32)
            .map(|k| u.concat(&Word::generator(k)).concat(&ui))
            .collect();
        let inv_images = (1..=rank as i32)
            .map(|k| ui.concat(&Word::generator(k)).concat(u))
            .collect();
        FreeAutomorphism { rank, images, inv_images }
    }

    /// Total letter count over all images; a cheap size measure.
    pub fn complexity(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }
}

fn push_reduced(raw: &mut Vec<i32>, l: i32) {
    if raw.last() == Some(&-l) {
        raw.pop();
    } else {
        raw.push(l);
    }
}

impl fmt::Debug for FreeAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "aut[")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} -> {}", Word::generator(i as i32 + 1), w)?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sample_aut() -> FreeAutomorphism {
        // a1 -> a1 b1, b1 -> b1 on rank 2; inverse: a1 -> a1 B1.
        FreeAutomorphism::new(
            2,
            vec![Word::from_letters(&[1, 2]), Word::generator(2)],
            vec![Word::from_letters(&[1, -2]), Word::generator(2)],
        )
        .unwrap()
    }

    #[test]
    fn constructor_rejects_non_inverse() {
        let bad = FreeAutomorphism::new(
            2,
            vec![Word::from_letters(&[1, 2]), Word::generator(2)],
            vec![Word::generator(1), Word::generator(2)],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn compose_with_identity() {
        let t = sample_aut();
        let id = FreeAutomorphism::identity(2);
        assert_eq!(id.compose(&t), t);
        assert_eq!(t.compose(&id), t);
        assert!(t.compose(&t.inverse()).is_identity());
    }

    proptest! {
        #[test]
        fn compose_is_apply_then_apply(raw in proptest::collection::vec(prop_oneof![1i32..=2, -2i32..=-1], 0..20)) {
            let w = Word::from_letters(&raw);
            let t = sample_aut();
            let c = FreeAutomorphism::conjugation(2, &Word::generator(2));
            let both = t.compose(&c);
            prop_assert_eq!(both.apply(&w), t.apply(&c.apply(&w)));
        }
    }
}
