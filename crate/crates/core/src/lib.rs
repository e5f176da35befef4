//! Switching of m-edge-coloured graphs with respect to permutation groups.
//!
//! An m-edge-coloured graph is a simple graph whose edges carry colours from
//! `{1, ..., m}`. Switching at a vertex `x` with a permutation `π` of the colours
//! replaces the colour `c` of every edge at `x` by `π(c)`. This crate decides
//!
//! * whether two graphs are switch equivalent under a group `Γ ≤ S_m`,
//! * whether a graph can be switched to admit a homomorphism to a fixed target,
//! * whether a graph can be switched to admit a vertex k-colouring,
//!
//! and returns replayable witnesses for every positive answer. Fast paths for
//! groups with property T_j and for even dihedral groups are dispatched by
//! probing the supplied group; everything else falls back to a breadth-first
//! search over reachable signatures, which also serves as the reference oracle.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod graph;
pub mod hom;
pub mod iso;
pub mod outcome;
pub mod perm;
pub mod reach;
pub mod switching;

pub use error::Error;
pub use graph::{Edge, EdgeColouredGraph, HomWitness};
pub use outcome::{DecisionOutcome, Method, Witness};
pub use perm::{Block, BlockAction, BlockStructure, Colour, GroupKind, PermGroup, Permutation, PropertyTWitness};
pub use reach::{reachable_signatures, Expansion, Limits, SwitchClass};
pub use switching::{Decider, Route, SwitchStep, SwitchingSequence};

pub type Result<T, E = Error> = core::result::Result<T, E>;
