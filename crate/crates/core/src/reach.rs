//! Breadth-first search over the signatures reachable from a labelled graph.
//!
//! This is the reference oracle every fast path is checked against. States are
//! signatures on the fixed labelled underlying graph; a move switches one
//! vertex by one non-identity group element. Moves are tried in order of
//! vertex, then element (lexicographic by image sequence), so the recorded path
//! to each state is the lexicographically least among its shortest paths.

use alloc::boxed::Box;
use alloc::collections::VecDeque;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::graph::EdgeColouredGraph;
use crate::perm::{Colour, PermGroup, Permutation};
use crate::switching::SwitchingSequence;
use crate::{iso, Error, Result};

/// Which permutations the oracle expands by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Expansion {
    /// Every non-identity element; shortest witnesses.
    #[default]
    Elements,
    /// Generators only; same reachable set, longer witnesses.
    Generators,
}

/// Budgets shared by every search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of signatures (or switch assignments) visited.
    pub state_cap: usize,
    /// Maximum vertex count for isomorphism searches.
    pub vertex_cap: usize,
    pub expansion: Expansion,
}

impl Limits {
    pub const DEFAULT_STATE_CAP: usize = 2_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits { state_cap: Self::DEFAULT_STATE_CAP, vertex_cap: iso::DEFAULT_VERTEX_CAP, expansion: Expansion::Elements }
    }
}

#[derive(Debug, Clone, Copy)]
struct Parent {
    state: u32,
    vertex: u32,
    mv: u32,
}

/// The signatures reachable from `base` by switching, with BFS predecessor links.
#[derive(Debug, Clone)]
pub struct SwitchClass {
    base: EdgeColouredGraph,
    moves: Vec<Permutation>,
    signatures: Vec<Box<[Colour]>>,
    index: HashMap<Box<[Colour]>, u32>,
    parent: Vec<Option<Parent>>,
    depth: Vec<u32>,
}

/// Explores `[G]_Γ` restricted to the labelled underlying graph of `g`.
pub fn reachable_signatures(g: &EdgeColouredGraph, group: &PermGroup, limits: &Limits) -> Result<SwitchClass> {
    if g.colour_count() != group.degree() {
        return Err(Error::DegreeMismatch { expected: group.degree(), found: g.colour_count() });
    }
    let source = match limits.expansion {
        Expansion::Elements => group.elements(),
        Expansion::Generators => group.generators(),
    };
    let mut moves: Vec<Permutation> = source.iter().filter(|p| !p.is_identity()).cloned().collect();
    moves.sort_unstable();
    moves.dedup();
    let active: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) > 0).collect();

    let start: Box<[Colour]> = g.colours().into();
    let mut class = SwitchClass {
        base: g.clone(),
        moves,
        signatures: alloc::vec![start.clone()],
        index: HashMap::new(),
        parent: alloc::vec![None],
        depth: alloc::vec![0],
    };
    class.index.insert(start, 0);
    let mut queue = VecDeque::from([0u32]);
    let mut scratch: Vec<Colour> = Vec::with_capacity(g.edge_count());
    while let Some(state) = queue.pop_front() {
        for &x in &active {
            for (mv, p) in class.moves.iter().enumerate() {
                scratch.clear();
                scratch.extend_from_slice(&class.signatures[state as usize]);
                for &e in g.incident(x) {
                    scratch[e] = p.apply(scratch[e]);
                }
                if class.index.contains_key(scratch.as_slice()) {
                    continue;
                }
                if class.signatures.len() >= limits.state_cap {
                    return Err(Error::StateCapExceeded { cap: limits.state_cap });
                }
                let id = class.signatures.len() as u32;
                let sig: Box<[Colour]> = scratch.as_slice().into();
                class.index.insert(sig.clone(), id);
                class.signatures.push(sig);
                class.parent.push(Some(Parent { state, vertex: x as u32, mv: mv as u32 }));
                class.depth.push(class.depth[state as usize] + 1);
                queue.push_back(id);
            }
        }
    }
    Ok(class)
}

impl SwitchClass {
    pub fn base(&self) -> &EdgeColouredGraph {
        &self.base
    }

    /// Number of reachable signatures.
    pub fn len(&self) -> usize {
        self.signatures.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signatures.is_empty()
    }

    /// Signatures in BFS discovery order; index 0 is the base signature.
    pub fn signatures(&self) -> impl ExactSizeIterator<Item = &[Colour]> {
        self.signatures.iter().map(|s| &**s)
    }

    pub fn signature(&self, i: usize) -> &[Colour] {
        &self.signatures[i]
    }

    pub fn index_of(&self, signature: &[Colour]) -> Option<usize> {
        self.index.get(signature).map(|&i| i as usize)
    }

    pub fn contains(&self, signature: &[Colour]) -> bool {
        self.index.contains_key(signature)
    }

    /// Length of the shortest switching sequence reaching state `i`.
    pub fn depth(&self, i: usize) -> usize {
        self.depth[i] as usize
    }

    pub fn max_depth(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0) as usize
    }

    /// The graph with signature number `i`.
    pub fn graph(&self, i: usize) -> EdgeColouredGraph {
        self.base.with_colours_unchecked(self.signatures[i].to_vec())
    }

    /// Shortest switching sequence from the base to state `i`.
    pub fn sequence_to(&self, i: usize) -> SwitchingSequence {
        let mut steps = Vec::with_capacity(self.depth[i] as usize);
        let mut cur = i;
        while let Some(p) = self.parent[cur] {
            steps.push((p.vertex as usize, self.moves[p.mv as usize].clone()));
            cur = p.state as usize;
        }
        steps.reverse();
        steps.into_iter().collect()
    }
}
