use alloc::vec::Vec;

use super::{Colour, PermGroup, Permutation};
use crate::{Error, Result};

/// The two blocks of colours preserved or exchanged by an even dihedral group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Block {
    /// `{1, 3, ..., m - 1}`
    Odd,
    /// `{2, 4, ..., m}`
    Even,
}

impl Block {
    pub fn of(c: Colour) -> Block {
        if c % 2 == 1 {
            Block::Odd
        } else {
            Block::Even
        }
    }

    /// Colour of the block in the collapsed 2-edge-coloured graph.
    pub fn collapsed_colour(self) -> Colour {
        match self {
            Block::Odd => 1,
            Block::Even => 2,
        }
    }
}

/// Image of a group element in the quotient by the block stabilizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlockAction {
    Preserve,
    Swap,
}

impl BlockAction {
    pub fn then(self, other: BlockAction) -> BlockAction {
        if self == other {
            BlockAction::Preserve
        } else {
            BlockAction::Swap
        }
    }
}

/// The `{odd, even}` block system of `D_m` for even `m`.
///
/// For `m = 2` the group is `S_2` acting on `{1, 2}`.
#[derive(Debug, Clone)]
pub struct BlockStructure {
    degree: usize,
    odd_block: Vec<Colour>,
    even_block: Vec<Colour>,
    group: PermGroup,
    stabilizer: PermGroup,
}

impl BlockStructure {
    pub fn new(m: usize) -> Result<Self> {
        if m % 2 == 1 {
            return Err(Error::OddDegree { m });
        }
        let group = match m {
            0 => return Err(Error::OddDegree { m }),
            2 => PermGroup::symmetric(2)?,
            _ => PermGroup::dihedral(m)?,
        };
        let stabilizer_elements = group
            .elements()
            .iter()
            .filter(|p| Self::action_of(p) == BlockAction::Preserve)
            .cloned()
            .collect();
        Ok(BlockStructure {
            degree: m,
            odd_block: (1..=m as Colour).step_by(2).collect(),
            even_block: (2..=m as Colour).step_by(2).collect(),
            stabilizer: PermGroup::from_closed_elements(m, stabilizer_elements),
            group,
        })
    }

    fn action_of(p: &Permutation) -> BlockAction {
        if p.apply(1) % 2 == 1 {
            BlockAction::Preserve
        } else {
            BlockAction::Swap
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn odd_block(&self) -> &[Colour] {
        &self.odd_block
    }

    pub fn even_block(&self) -> &[Colour] {
        &self.even_block
    }

    /// `D_m` (or `S_2` when `m = 2`).
    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn stabilizer(&self) -> &PermGroup {
        &self.stabilizer
    }

    /// Quotient map onto the two-element group. Only meaningful for permutations
    /// that respect the block system, which every element of `group()` does.
    pub fn quotient(&self, p: &Permutation) -> BlockAction {
        Self::action_of(p)
    }

    /// The m-cycle `(1 2 ... m)`, a fixed element exchanging the blocks.
    pub fn swapper(&self) -> Permutation {
        Permutation::rotation(self.degree)
    }
}
