use core::fmt;

use crate::perm::{Colour, GroupKind};

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects that must share a colour count (degree) do not.
    DegreeMismatch { expected: usize, found: usize },
    /// An image sequence or cycle list does not describe a bijection.
    NotAPermutation,
    ColourOutOfRange { colour: usize, m: usize },
    InvalidVertex { vertex: usize, n: usize },
    Loop { vertex: usize },
    DuplicateEdge { u: usize, v: usize },
    NotAnEdge { u: usize, v: usize },
    /// A named group was requested below its minimum degree.
    DegreeTooSmall { kind: GroupKind, m: usize, min: usize },
    /// Even dihedral machinery was asked for an odd degree.
    OddDegree { m: usize },
    InvalidK,
    ClosureCapExceeded { cap: usize },
    StateCapExceeded { cap: usize },
    VertexCapExceeded { n: usize, cap: usize },
    /// The group has no property T_{i,j} witness for the requested recolouring.
    NoWitness { from: Colour, to: Colour },
    /// The group lacks property T_j; `failing` is the first colour `i` without a T_{i,j} witness.
    NoPropertyT { colour: Colour, failing: Colour },
    /// Two graphs were expected to share the same labelled underlying graph.
    UnderlyingMismatch,
}

impl Error {
    /// Budget errors are reported separately from usage errors by the CLI.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::ClosureCapExceeded { .. } | Error::StateCapExceeded { .. } | Error::VertexCapExceeded { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegreeMismatch { expected, found } => {
                write!(f, "degree mismatch: expected {expected} colours, found {found}")
            }
            Error::NotAPermutation => f.write_str("not a permutation of the colour set"),
            Error::ColourOutOfRange { colour, m } => write!(f, "colour {colour} out of range 1..={m}"),
            Error::InvalidVertex { vertex, n } => write!(f, "vertex {vertex} out of range (n = {n})"),
            Error::Loop { vertex } => write!(f, "loop at vertex {vertex}"),
            Error::DuplicateEdge { u, v } => write!(f, "duplicate edge {u} {v}"),
            Error::NotAnEdge { u, v } => write!(f, "{u} {v} is not an edge"),
            Error::DegreeTooSmall { kind, m, min } => {
                write!(f, "{kind:?} group needs m >= {min}, got {m}")
            }
            Error::OddDegree { m } => write!(f, "expected an even number of colours, got {m}"),
            Error::InvalidK => f.write_str("k must be at least 1"),
            Error::ClosureCapExceeded { cap } => write!(f, "group closure exceeds {cap} elements"),
            Error::StateCapExceeded { cap } => write!(f, "state budget of {cap} exceeded"),
            Error::VertexCapExceeded { n, cap } => {
                write!(f, "{n} vertices exceeds the isomorphism search cap of {cap}")
            }
            Error::NoWitness { from, to } => {
                write!(f, "group has no property T witness recolouring {from} to {to}")
            }
            Error::NoPropertyT { colour, failing } => {
                write!(f, "group lacks property T_{colour}: no witness for i = {failing}")
            }
            Error::UnderlyingMismatch => f.write_str("graphs do not share the same labelled underlying graph"),
        }
    }
}

impl core::error::Error for Error {}
