//! Permutations of the colour set `{1, ..., m}` and the groups they generate.
//!
//! # Composition convention
//!
//! Composition is **right to left**: `p.compose(&q)` applies `q` first and then
//! `p`, so `p.compose(&q).apply(c) == p.apply(q.apply(c))`. Switching sequences
//! never depend on this choice because they are applied step by step.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

mod blocks;
mod group;

pub use blocks::{Block, BlockAction, BlockStructure};
pub use group::{GroupKind, PermGroup, PropertyTWitness};

/// Edge colours are 1-based.
pub type Colour = u8;

/// A bijection of `{1, ..., m}`.
///
/// Ordering is lexicographic on the image sequence `(π(1), ..., π(m))`; the
/// identity is the least permutation of each degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[Colour]>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        assert!((1..=usize::from(Colour::MAX)).contains(&m), "degree {m} not supported");
        Permutation { images: (1..=m).map(|c| c as Colour).collect() }
    }

    /// Builds a permutation from `images[c - 1] = π(c)`.
    pub fn from_images(images: Vec<Colour>) -> Result<Self> {
        let m = images.len();
        if m == 0 || m > usize::from(Colour::MAX) {
            return Err(Error::NotAPermutation);
        }
        let mut seen = vec![false; m];
        for &c in &images {
            let idx = usize::from(c).wrapping_sub(1);
            if idx >= m || seen[idx] {
                return Err(Error::NotAPermutation);
            }
            seen[idx] = true;
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    /// Builds a permutation of degree `m` from disjoint cycles.
    pub fn from_cycles<C: AsRef<[Colour]>>(m: usize, cycles: &[C]) -> Result<Self> {
        if m == 0 || m > usize::from(Colour::MAX) {
            return Err(Error::NotAPermutation);
        }
        let mut images: Vec<Colour> = (1..=m).map(|c| c as Colour).collect();
        let mut used = vec![false; m];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (pos, &c) in cycle.iter().enumerate() {
                let idx = usize::from(c).wrapping_sub(1);
                if idx >= m {
                    return Err(Error::ColourOutOfRange { colour: usize::from(c), m });
                }
                if used[idx] {
                    return Err(Error::NotAPermutation);
                }
                used[idx] = true;
                images[idx] = cycle[(pos + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    pub fn transposition(m: usize, a: Colour, b: Colour) -> Result<Self> {
        Self::from_cycles(m, &[[a, b]])
    }

    /// The m-cycle `(1 2 ... m)`.
    pub fn rotation(m: usize) -> Self {
        let mut images: Vec<Colour> = (2..=m).map(|c| c as Colour).collect();
        images.push(1);
        Permutation { images: images.into_boxed_slice() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of colour `c`. Panics if `c` is outside `1..=m`.
    #[inline]
    pub fn apply(&self, c: Colour) -> Colour {
        self.images[usize::from(c) - 1]
    }

    pub fn images(&self) -> &[Colour] {
        &self.images
    }

    /// `self ∘ q`: apply `q` first, then `self`.
    pub fn compose(&self, q: &Permutation) -> Result<Self> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: q.degree() });
        }
        Ok(self.compose_unchecked(q))
    }

    pub(crate) fn compose_unchecked(&self, q: &Permutation) -> Self {
        Permutation { images: q.images.iter().map(|&c| self.apply(c)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (i, &c) in self.images.iter().enumerate() {
            images[usize::from(c) - 1] = (i + 1) as Colour;
        }
        Permutation { images: images.into_boxed_slice() }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &c)| usize::from(c) == i + 1)
    }

    /// Fixed colours in increasing order.
    pub fn fixed_points(&self) -> impl Iterator<Item = Colour> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &c)| usize::from(c) == i + 1)
            .map(|(_, &c)| c)
    }

    /// Non-trivial cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<Colour>> {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut out = Vec::new();
        for start in 1..=m {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start as Colour;
            while !seen[usize::from(c) - 1] {
                seen[usize::from(c) - 1] = true;
                cycle.push(c);
                c = self.apply(c);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// True for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

/// Cycle notation; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, c) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, cycles: &[&[Colour]]) -> Permutation {
        Permutation::from_cycles(m, cycles).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p(3, &[&[1, 2]]);
        assert!(t.compose(&t).unwrap().is_identity());
    }

    #[test]
    fn composition_applies_right_operand_first() {
        let outer = p(3, &[&[1, 2]]);
        let inner = p(3, &[&[2, 3]]);
        // 1 -> 1 -> 2, 2 -> 3 -> 3, 3 -> 2 -> 1
        let expected = Permutation::from_images(vec![2, 3, 1]).unwrap();
        let got = outer.compose(&inner).unwrap();
        assert_eq!(got, expected);
        assert_eq!(got, p(3, &[&[1, 2, 3]]));
        for c in 1..=3 {
            assert_eq!(got.apply(c), outer.apply(inner.apply(c)));
        }
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = Permutation::identity(3).compose(&Permutation::identity(4)).unwrap_err();
        assert_eq!(err, Error::DegreeMismatch { expected: 3, found: 4 });
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(Permutation::from_images(vec![1, 1, 2]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::from_images(vec![0, 1]), Err(Error::NotAPermutation));
        assert_eq!(Permutation::from_images(vec![]), Err(Error::NotAPermutation));
        assert!(Permutation::from_cycles(3, &[&[1, 2][..], &[2, 3][..]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[1, 4]]).is_err());
    }

    #[test]
    fn display_uses_cycle_notation() {
        assert_eq!(alloc::format!("{}", p(4, &[&[3, 4], &[1, 2]])), "(1 2)(3 4)");
        assert_eq!(alloc::format!("{}", Permutation::identity(5)), "()");
        assert_eq!(alloc::format!("{}", Permutation::rotation(4)), "(1 2 3 4)");
    }

    #[test]
    fn fixed_points_and_parity() {
        let t = p(4, &[&[1, 3]]);
        assert_eq!(t.fixed_points().collect::<Vec<_>>(), vec![2, 4]);
        assert!(!t.is_even());
        assert!(p(4, &[&[1, 2, 3]]).is_even());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm_strategy() -> impl Strategy<Value = Permutation> {
            (1usize..=8).prop_flat_map(|m| {
                Just((1..=m as Colour).collect::<Vec<_>>())
                    .prop_shuffle()
                    .prop_map(|v| Permutation::from_images(v).unwrap())
            })
        }

        proptest! {
            #[test]
            fn identity_is_neutral(q in perm_strategy()) {
                let id = Permutation::identity(q.degree());
                prop_assert_eq!(id.compose(&q).unwrap(), q.clone());
                prop_assert_eq!(q.compose(&id).unwrap(), q);
            }

            #[test]
            fn inverse_cancels(q in perm_strategy()) {
                prop_assert!(q.compose(&q.inverse()).unwrap().is_identity());
                prop_assert!(q.inverse().compose(&q).unwrap().is_identity());
            }

            #[test]
            fn cycles_round_trip(q in perm_strategy()) {
                let rebuilt = Permutation::from_cycles(q.degree(), &q.cycles()).unwrap();
                prop_assert_eq!(rebuilt, q);
            }
        }
    }
}
