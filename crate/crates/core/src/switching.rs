//! Switching, switching sequences, recolouring gadgets and switch equivalence.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use hashbrown::HashMap;

use crate::graph::EdgeColouredGraph;
use crate::iso::{self, Matching};
use crate::outcome::{DecisionOutcome, Method, Witness};
use crate::perm::{Block, BlockStructure, Colour, PermGroup, Permutation};
use crate::reach::{reachable_signatures, Limits};
use crate::{Error, Result};

/// One switch: permute the colours of the edges at `vertex` by `perm`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchStep {
    pub vertex: usize,
    pub perm: Permutation,
}

/// Switches applied left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SwitchingSequence {
    steps: Vec<SwitchStep>,
}

impl SwitchingSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, vertex: usize, perm: Permutation) {
        self.steps.push(SwitchStep { vertex, perm });
    }

    pub fn append(&mut self, other: SwitchingSequence) {
        self.steps.extend(other.steps);
    }

    pub fn steps(&self) -> &[SwitchStep] {
        &self.steps
    }

    pub fn iter(&self) -> core::slice::Iter<'_, SwitchStep> {
        self.steps.iter()
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Undoes `self`: steps reversed, each permutation inverted.
    pub fn inverse(&self) -> Self {
        self.steps.iter().rev().map(|s| (s.vertex, s.perm.inverse())).collect()
    }

    /// Renames every vertex `v` to `rename[v]`.
    pub fn map_vertices(&self, rename: &[usize]) -> Self {
        self.steps.iter().map(|s| (rename[s.vertex], s.perm.clone())).collect()
    }
}

impl FromIterator<(usize, Permutation)> for SwitchingSequence {
    fn from_iter<I: IntoIterator<Item = (usize, Permutation)>>(iter: I) -> Self {
        SwitchingSequence { steps: iter.into_iter().map(|(vertex, perm)| SwitchStep { vertex, perm }).collect() }
    }
}

impl<'a> IntoIterator for &'a SwitchingSequence {
    type Item = &'a SwitchStep;
    type IntoIter = core::slice::Iter<'a, SwitchStep>;

    fn into_iter(self) -> Self::IntoIter {
        self.steps.iter()
    }
}

impl EdgeColouredGraph {
    /// `G^{(x, π)}`: every edge at `x` of colour `c` gets colour `π(c)`.
    pub fn switch(&self, x: usize, p: &Permutation) -> Result<Self> {
        let mut colours = self.colours().to_vec();
        self.switch_in_place(&mut colours, x, p)?;
        Ok(self.with_colours_unchecked(colours))
    }

    /// `G^S`, the left fold of [`switch`](Self::switch) over the steps.
    pub fn apply_sequence(&self, s: &SwitchingSequence) -> Result<Self> {
        let mut colours = self.colours().to_vec();
        for step in s {
            self.switch_in_place(&mut colours, step.vertex, &step.perm)?;
        }
        Ok(self.with_colours_unchecked(colours))
    }

    fn switch_in_place(&self, colours: &mut [Colour], x: usize, p: &Permutation) -> Result<()> {
        if p.degree() != self.colour_count() {
            return Err(Error::DegreeMismatch { expected: self.colour_count(), found: p.degree() });
        }
        if x >= self.vertex_count() {
            return Err(Error::InvalidVertex { vertex: x, n: self.vertex_count() });
        }
        for &e in self.incident(x) {
            colours[e] = p.apply(colours[e]);
        }
        Ok(())
    }
}

fn check_group(g: &EdgeColouredGraph, group: &PermGroup) -> Result<()> {
    if g.colour_count() != group.degree() {
        return Err(Error::DegreeMismatch { expected: group.degree(), found: g.colour_count() });
    }
    Ok(())
}

/// The four-switch gadget `(x, α), (y, β), (x, α⁻¹), (y, β⁻¹)` that turns the
/// colour of edge `xy` into `j` and leaves every other edge unchanged.
pub fn recolour_edge_sequence(g: &EdgeColouredGraph, x: usize, y: usize, j: Colour, group: &PermGroup) -> Result<SwitchingSequence> {
    check_group(g, group)?;
    if j == 0 || usize::from(j) > g.colour_count() {
        return Err(Error::ColourOutOfRange { colour: usize::from(j), m: g.colour_count() });
    }
    let i = g.colour_between(x, y).ok_or(Error::NotAnEdge { u: x, v: y })?;
    gadget(x, y, i, j, group)
}

fn gadget(x: usize, y: usize, i: Colour, j: Colour, group: &PermGroup) -> Result<SwitchingSequence> {
    if i == j {
        return Ok(SwitchingSequence::new());
    }
    let w = group.t_witness(i, j).ok_or(Error::NoWitness { from: i, to: j })?;
    let (ai, bi) = (w.alpha.inverse(), w.beta.inverse());
    Ok([(x, w.alpha), (y, w.beta), (x, ai), (y, bi)].into_iter().collect())
}

/// Concatenated gadgets, in edge order, that give every edge its colour in `target`.
pub fn recolour_to(g: &EdgeColouredGraph, target: &[Colour], group: &PermGroup) -> Result<SwitchingSequence> {
    check_group(g, group)?;
    if target.len() != g.edge_count() {
        return Err(Error::UnderlyingMismatch);
    }
    let mut seq = SwitchingSequence::new();
    for (&(u, v), (&have, &want)) in g.ends().iter().zip(g.colours().iter().zip(target)) {
        seq.append(gadget(u, v, have, want, group)?);
    }
    Ok(seq)
}

/// A sequence of at most `4|E|` switches making `g` monochromatic of colour `j`.
pub fn monochromatize_sequence(g: &EdgeColouredGraph, j: Colour, group: &PermGroup) -> Result<SwitchingSequence> {
    check_group(g, group)?;
    if j == 0 || usize::from(j) > g.colour_count() {
        return Err(Error::ColourOutOfRange { colour: usize::from(j), m: g.colour_count() });
    }
    if let Some(failing) = group.property_t_failure(j) {
        return Err(Error::NoPropertyT { colour: j, failing });
    }
    recolour_to(g, &vec![j; g.edge_count()], group)
}

/// S_2 switch equivalence of two 2-edge-coloured graphs on the same labelled
/// underlying graph: equal colour-2 parity on every fundamental cycle. The
/// parity functional is linear over the cycle space, so the basis suffices.
pub fn s2_equivalent_labelled(g2: &EdgeColouredGraph, h2: &EdgeColouredGraph) -> Result<DecisionOutcome> {
    for m in [g2.colour_count(), h2.colour_count()] {
        if m != 2 {
            return Err(Error::DegreeMismatch { expected: 2, found: m });
        }
    }
    if !g2.same_underlying(h2) {
        return Err(Error::UnderlyingMismatch);
    }
    let basis = g2.cycle_basis();
    let differs: Vec<bool> = g2.colours().iter().zip(h2.colours()).map(|(a, b)| a != b).collect();
    match s2_switch_set(g2, &basis, &differs) {
        Some(set) => {
            let flip = Permutation::rotation(2);
            let sequence = set.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| (v, flip.clone())).collect();
            let bijection = (0..g2.vertex_count()).collect();
            Ok(DecisionOutcome::yes(
                Method::CycleParity,
                Witness::Equivalence { sequence, bijection },
                format!("all {} basis cycles have matching parity", basis.len()),
            ))
        }
        None => Ok(DecisionOutcome::no(Method::CycleParity, "a basis cycle has different colour-2 parity")),
    }
}

/// Vertices to switch so that exactly the edges flagged in `differs` change,
/// or `None` if some basis cycle contains an odd number of flagged edges.
fn s2_switch_set(g: &EdgeColouredGraph, basis: &[Vec<usize>], differs: &[bool]) -> Option<Vec<bool>> {
    if basis.iter().any(|cycle| cycle.iter().filter(|&&e| differs[e]).count() % 2 == 1) {
        return None;
    }
    let parent = g.spanning_forest();
    let mut set = vec![false; g.vertex_count()];
    let mut done = vec![false; g.vertex_count()];
    for v in 0..g.vertex_count() {
        resolve(v, &parent, differs, &mut set, &mut done);
    }
    Some(set)
}

fn resolve(v: usize, parent: &[Option<(usize, usize)>], differs: &[bool], set: &mut [bool], done: &mut [bool]) -> bool {
    if done[v] {
        return set[v];
    }
    let value = match parent[v] {
        None => false,
        Some((p, e)) => resolve(p, parent, differs, set, done) ^ differs[e],
    };
    set[v] = value;
    done[v] = true;
    value
}

/// How a group is handled by the deciders.
#[derive(Debug, Clone)]
pub enum Route {
    /// The group has property T_j for this colour.
    PropertyT(Colour),
    /// `D_m` with `m` even, or `S_2`.
    EvenDihedral(BlockStructure),
    /// Everything else: reachability search.
    Oracle,
}

/// Decision procedures for one group, with its dispatch route computed once.
#[derive(Debug, Clone)]
pub struct Decider {
    group: PermGroup,
    route: Route,
    limits: Limits,
}

impl Decider {
    /// Probes the group by exhaustive witness search (not by its kind tag).
    pub fn new(group: PermGroup) -> Self {
        Self::with_limits(group, Limits::default())
    }

    pub fn with_limits(group: PermGroup, limits: Limits) -> Self {
        let route = if let Some(j) = group.property_t_colour() {
            Route::PropertyT(j)
        } else if group.is_even_dihedral() {
            Route::EvenDihedral(BlockStructure::new(group.degree()).expect("even dihedral degree is even"))
        } else {
            Route::Oracle
        };
        Decider { group, route, limits }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn route(&self) -> &Route {
        &self.route
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub(crate) fn check_degree(&self, g: &EdgeColouredGraph) -> Result<()> {
        check_group(g, &self.group)
    }

    /// Γ-switch equivalence: some switching sequence turns `g` into a graph isomorphic to `h`.
    pub fn equivalent(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        self.check_degree(h)?;
        match &self.route {
            Route::PropertyT(j) => self.equivalent_property_t(g, h, *j),
            Route::EvenDihedral(blocks) => self.equivalent_even_dihedral(g, h, blocks),
            Route::Oracle => self.equivalent_by_oracle(g, h),
        }
    }

    fn equivalent_property_t(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, j: Colour) -> Result<DecisionOutcome> {
        let Some(phi) = iso::underlying_isomorphism(g, h, self.limits.vertex_cap)? else {
            return Ok(DecisionOutcome::no(Method::PropertyTFastPath, format!("T_{j} group; underlying graphs not isomorphic")));
        };
        let mut sequence = monochromatize_sequence(g, j, &self.group)?;
        let back = monochromatize_sequence(h, j, &self.group)?.inverse();
        sequence.append(back.map_vertices(&invert(&phi)));
        Ok(DecisionOutcome::yes(
            Method::PropertyTFastPath,
            Witness::Equivalence { sequence, bijection: phi },
            format!("T_{j} group; both sides monochromatized to colour {j} (gadget witness, not minimal)"),
        ))
    }

    fn equivalent_even_dihedral(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, blocks: &BlockStructure) -> Result<DecisionOutcome> {
        let g2 = g.collapse_blocks()?;
        let h2 = h.collapse_blocks()?;
        let basis = g.cycle_basis();
        let mut found = None;
        let mut tried = 0usize;
        iso::for_each_isomorphism(g, h, Matching::Underlying, self.limits.vertex_cap, |phi| {
            tried += 1;
            let differs: Vec<bool> = g
                .ends()
                .iter()
                .zip(g2.colours())
                .map(|(&(u, v), &c)| h2.colour_between(phi[u], phi[v]) != Some(c))
                .collect();
            match s2_switch_set(&g2, &basis, &differs) {
                Some(set) => {
                    found = Some((phi.to_vec(), set));
                    ControlFlow::Break(())
                }
                None => ControlFlow::Continue(()),
            }
        })?;
        let Some((phi, set)) = found else {
            return Ok(DecisionOutcome::no(
                Method::DihedralEvenReduction,
                format!("no underlying isomorphism ({tried} tried) matches cycle parities of the block collapse"),
            ));
        };
        let swapper = blocks.swapper();
        let mut sequence: SwitchingSequence =
            set.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| (v, swapper.clone())).collect();
        let swapped = g.apply_sequence(&sequence)?;
        let target = pull_back(g, h, &phi);
        sequence.append(recolour_to(&swapped, &target, blocks.group())?);
        Ok(DecisionOutcome::yes(
            Method::DihedralEvenReduction,
            Witness::Equivalence { sequence, bijection: phi },
            "block collapse is S_2 equivalent; block swaps then in-block gadgets (not minimal)",
        ))
    }

    /// Equivalence decided purely by reachability search. The witness is a
    /// shortest switching sequence to the least reachable member isomorphic to `h`.
    pub fn equivalent_by_oracle(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        self.check_degree(h)?;
        // Every signature on g's labelling that is isomorphic to h, with one isomorphism each.
        let mut candidates: HashMap<Vec<Colour>, Vec<usize>> = HashMap::new();
        iso::for_each_isomorphism(g, h, Matching::Underlying, self.limits.vertex_cap, |phi| {
            candidates.entry(pull_back(g, h, phi)).or_insert_with(|| phi.to_vec());
            ControlFlow::Continue(())
        })?;
        if candidates.is_empty() {
            return Ok(DecisionOutcome::no(Method::OracleBfs, "underlying graphs not isomorphic"));
        }
        let class = reachable_signatures(g, &self.group, &self.limits)?;
        let best = candidates.iter().filter_map(|(sig, phi)| class.index_of(sig).map(|i| (i, phi))).min_by_key(|&(i, _)| i);
        Ok(match best {
            Some((i, phi)) => DecisionOutcome::yes(
                Method::OracleBfs,
                Witness::Equivalence { sequence: class.sequence_to(i), bijection: phi.clone() },
                format!("{} reachable signatures; shortest witness", class.len()),
            ),
            None => DecisionOutcome::no(
                Method::OracleBfs,
                format!("{} reachable signatures, none isomorphic to the target", class.len()),
            ),
        })
    }
}

/// Colours of `h` read back onto the edges of `g` through `phi: V(g) -> V(h)`.
pub(crate) fn pull_back(g: &EdgeColouredGraph, h: &EdgeColouredGraph, phi: &[usize]) -> Vec<Colour> {
    g.ends()
        .iter()
        .map(|&(u, v)| h.colour_between(phi[u], phi[v]).expect("phi is an underlying homomorphism"))
        .collect()
}

pub(crate) fn invert(phi: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; phi.len()];
    for (v, &w) in phi.iter().enumerate() {
        inv[w] = v;
    }
    inv
}

/// Lifts a sequence of `S_2` switches on a block collapse to `D_m`: every
/// non-identity switch becomes the block-exchanging m-cycle.
pub(crate) fn lift_block_swaps(seq: &SwitchingSequence, blocks: &BlockStructure) -> SwitchingSequence {
    let swapper = blocks.swapper();
    seq.iter().filter(|s| !s.perm.is_identity()).map(|s| (s.vertex, swapper.clone())).collect()
}

/// Recolours `g` within blocks so that each edge takes the colour `want[e]`,
/// which must lie in the same block as the current colour.
pub(crate) fn recolour_within_blocks(g: &EdgeColouredGraph, want: &[Colour], blocks: &BlockStructure) -> Result<SwitchingSequence> {
    debug_assert!(g.colours().iter().zip(want).all(|(&a, &b)| Block::of(a) == Block::of(b)));
    recolour_to(g, want, blocks.group())
}

/// [`Decider::equivalent`] for a one-off group.
pub fn switch_equivalent(g: &EdgeColouredGraph, h: &EdgeColouredGraph, group: &PermGroup) -> Result<DecisionOutcome> {
    Decider::new(group.clone()).equivalent(g, h)
}
