//! Verdicts, the method that produced them, and replayable witnesses.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeColouredGraph, HomWitness};
use crate::perm::PermGroup;
use crate::switching::SwitchingSequence;

/// Which decision procedure produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    PropertyTFastPath,
    DihedralEvenReduction,
    CycleParity,
    OracleBfs,
    ExactSearch,
    Propagation,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::PropertyTFastPath => "PropertyT-FastPath",
            Method::DihedralEvenReduction => "DihedralEvenReduction",
            Method::CycleParity => "CycleParity",
            Method::OracleBfs => "OracleBFS",
            Method::ExactSearch => "ExactSearch",
            Method::Propagation => "Propagation",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Certificate for a positive verdict.
///
/// Every variant starts with a switching sequence on the source graph; the
/// claim is checked against the switched graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `G^S` relabelled by `bijection` (`v -> bijection[v]`) equals `H`.
    Equivalence { sequence: SwitchingSequence, bijection: Vec<usize> },
    /// `map` is a homomorphism `G^S -> H`.
    Homomorphism { sequence: SwitchingSequence, map: HomWitness },
    /// `map` is a homomorphism `G^S -> target`, and `target` has at most k vertices.
    Colouring { sequence: SwitchingSequence, map: HomWitness, target: EdgeColouredGraph },
}

impl Witness {
    pub fn sequence(&self) -> &SwitchingSequence {
        match self {
            Witness::Equivalence { sequence, .. }
            | Witness::Homomorphism { sequence, .. }
            | Witness::Colouring { sequence, .. } => sequence,
        }
    }

    fn switched(&self, g: &EdgeColouredGraph, group: Option<&PermGroup>) -> Option<EdgeColouredGraph> {
        let seq = self.sequence();
        if let Some(group) = group {
            if !seq.iter().all(|s| group.contains(&s.perm)) {
                return None;
            }
        }
        g.apply_sequence(seq).ok()
    }

    /// Replays an equivalence witness. With `group`, every switch must use an element of it.
    pub fn verify_equivalence(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, group: Option<&PermGroup>) -> bool {
        let Witness::Equivalence { bijection, .. } = self else {
            return false;
        };
        let n = g.vertex_count();
        if bijection.len() != n || h.vertex_count() != n || g.colour_count() != h.colour_count() {
            return false;
        }
        let mut hit = vec![false; n];
        for &w in bijection {
            if w >= n || core::mem::replace(&mut hit[w], true) {
                return false;
            }
        }
        self.switched(g, group).is_some_and(|gs| gs.relabel(bijection) == *h)
    }

    pub fn verify_homomorphism(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, group: Option<&PermGroup>) -> bool {
        let Witness::Homomorphism { map, .. } = self else {
            return false;
        };
        g.colour_count() == h.colour_count() && self.switched(g, group).is_some_and(|gs| map.is_homomorphism(&gs, h))
    }

    pub fn verify_colouring(&self, g: &EdgeColouredGraph, k: usize, group: Option<&PermGroup>) -> bool {
        let Witness::Colouring { map, target, .. } = self else {
            return false;
        };
        target.vertex_count() <= k
            && target.colour_count() == g.colour_count()
            && self.switched(g, group).is_some_and(|gs| map.is_homomorphism(&gs, target))
    }
}

/// A yes/no answer with provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecisionOutcome {
    pub verdict: bool,
    pub witness: Option<Witness>,
    pub method: Method,
    pub notes: String,
}

impl DecisionOutcome {
    pub fn yes(method: Method, witness: Witness, notes: impl Into<String>) -> Self {
        DecisionOutcome { verdict: true, witness: Some(witness), method, notes: notes.into() }
    }

    pub fn no(method: Method, notes: impl Into<String>) -> Self {
        DecisionOutcome { verdict: false, witness: None, method, notes: notes.into() }
    }
}
