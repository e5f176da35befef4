//! Homomorphisms, k-colourings and their switchable versions.
//!
//! Maps are `map[v] = w`. A k-colouring of an edge-coloured graph is a
//! homomorphism to some m-edge-coloured graph on k vertices; it is searched
//! for as a partition of the vertices into at most k independent classes
//! such that all edges between two classes have the same colour.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeColouredGraph, HomWitness};
use crate::outcome::{DecisionOutcome, Method, Witness};
use crate::perm::{BlockStructure, Colour, Permutation};
use crate::reach::{reachable_signatures, Limits};
use crate::switching::{lift_block_swaps, monochromatize_sequence, recolour_within_blocks, Decider, Route, SwitchingSequence};
use crate::{Error, Result};

fn same_degree(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<()> {
    if g.colour_count() != h.colour_count() {
        return Err(Error::DegreeMismatch { expected: g.colour_count(), found: h.colour_count() });
    }
    Ok(())
}

fn require_two(g: &EdgeColouredGraph) -> Result<()> {
    if g.colour_count() != 2 {
        return Err(Error::DegreeMismatch { expected: 2, found: g.colour_count() });
    }
    Ok(())
}

/// Backtracking with forward checking; vertices of `g` in index order, images ascending.
pub fn hom_exists(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<DecisionOutcome> {
    same_degree(g, h)?;
    Ok(match find_hom(g, h) {
        Some(map) => DecisionOutcome::yes(
            Method::ExactSearch,
            Witness::Homomorphism { sequence: SwitchingSequence::new(), map: HomWitness { map } },
            "backtracking",
        ),
        None => DecisionOutcome::no(Method::ExactSearch, "backtracking exhausted"),
    })
}

pub(crate) fn find_hom(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let nh = h.vertex_count();
    if n == 0 {
        return Some(Vec::new());
    }
    if nh == 0 {
        return None;
    }
    let words = nh.div_ceil(64);
    let stride = h.colour_count() + 1;
    let mut adj = vec![0u64; nh * stride * words];
    for e in h.edges() {
        let c = usize::from(e.colour);
        adj[(e.u * stride + c) * words + e.v / 64] |= 1 << (e.v % 64);
        adj[(e.v * stride + c) * words + e.u / 64] |= 1 << (e.u % 64);
    }
    let mut full = vec![0u64; words];
    for w in 0..nh {
        full[w / 64] |= 1 << (w % 64);
    }
    let mut dom = Vec::with_capacity(n * words);
    for _ in 0..n {
        dom.extend_from_slice(&full);
    }
    let search = HomSearch { g, words, stride, adj };
    let mut map = vec![0; n];
    search.assign(0, &dom, &mut map).then_some(map)
}

struct HomSearch<'a> {
    g: &'a EdgeColouredGraph,
    words: usize,
    stride: usize,
    adj: Vec<u64>,
}

impl HomSearch<'_> {
    fn assign(&self, v: usize, dom: &[u64], map: &mut [usize]) -> bool {
        if v == map.len() {
            return true;
        }
        let words = self.words;
        for wi in 0..words {
            let mut bits = dom[v * words + wi];
            while bits != 0 {
                let w = wi * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let mut next = dom.to_vec();
                let mut ok = true;
                for (u, e) in self.g.neighbours(v) {
                    if u <= v {
                        continue;
                    }
                    let row = (w * self.stride + usize::from(self.g.colours()[e])) * words;
                    let mut any = 0;
                    for k in 0..words {
                        next[u * words + k] &= self.adj[row + k];
                        any |= next[u * words + k];
                    }
                    if any == 0 {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    map[v] = w;
                    if self.assign(v + 1, &next, map) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Decides whether `g` has a homomorphism to some m-edge-coloured graph on `k` vertices.
pub fn k_colouring_exists(g: &EdgeColouredGraph, k: usize) -> Result<DecisionOutcome> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    Ok(match colouring_witness(g, k, SwitchingSequence::new()) {
        Some(w) => DecisionOutcome::yes(Method::ExactSearch, w, format!("partition into at most {k} classes")),
        None => DecisionOutcome::no(Method::ExactSearch, format!("no partition into at most {k} classes")),
    })
}

/// Colouring witness for `g` (already switched by `sequence`) if one exists.
fn colouring_witness(g: &EdgeColouredGraph, k: usize, sequence: SwitchingSequence) -> Option<Witness> {
    let (classes, used, pair) = find_partition(g, k)?;
    let mut edges = Vec::new();
    for a in 0..used {
        for b in a + 1..used {
            let c = pair[a * used + b];
            if c != 0 {
                edges.push((a, b, c));
            }
        }
    }
    let target = EdgeColouredGraph::new(g.colour_count(), used, edges).expect("induced target is simple");
    Some(Witness::Colouring { sequence, map: HomWitness { map: classes }, target })
}

/// Class of each vertex, number of classes used, and the colour between each
/// pair of classes (`used × used`, 0 where no edge runs).
fn find_partition(g: &EdgeColouredGraph, k: usize) -> Option<(Vec<usize>, usize, Vec<Colour>)> {
    let n = g.vertex_count();
    let kk = k.min(n).max(1);
    let mut p = Partition { g, kk, class: vec![usize::MAX; n], pair: vec![0; kk * kk] };
    if !p.place(0, 0) {
        return None;
    }
    let used = p.class.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut pair = vec![0; used * used];
    for a in 0..used {
        for b in 0..used {
            pair[a * used + b] = p.pair[a * kk + b];
        }
    }
    Some((p.class, used, pair))
}

struct Partition<'a> {
    g: &'a EdgeColouredGraph,
    kk: usize,
    class: Vec<usize>,
    pair: Vec<Colour>,
}

impl Partition<'_> {
    fn place(&mut self, v: usize, used: usize) -> bool {
        if v == self.class.len() {
            return true;
        }
        let kk = self.kk;
        let mut fresh = Vec::new();
        for c in 0..(used + 1).min(kk) {
            fresh.clear();
            let mut ok = true;
            for (u, e) in self.g.neighbours(v) {
                if u >= v {
                    continue;
                }
                let d = self.class[u];
                let colour = self.g.colours()[e];
                if d == c {
                    ok = false;
                    break;
                }
                match self.pair[c * kk + d] {
                    0 => {
                        self.pair[c * kk + d] = colour;
                        self.pair[d * kk + c] = colour;
                        fresh.push(d);
                    }
                    have if have != colour => {
                        ok = false;
                        break;
                    }
                    _ => {}
                }
            }
            if ok {
                self.class[v] = c;
                if self.place(v + 1, used.max(c + 1)) {
                    return true;
                }
                self.class[v] = usize::MAX;
            }
            for &d in &fresh {
                self.pair[c * kk + d] = 0;
                self.pair[d * kk + c] = 0;
            }
        }
        false
    }
}

/// The 4-cycle 0-1-2-3 with colours 1, 2, 1, 2 on edges 01, 12, 23, 30.
pub fn alternating_c4() -> EdgeColouredGraph {
    EdgeColouredGraph::new(2, 4, [(0, 1, 1), (1, 2, 2), (2, 3, 1), (3, 0, 2)]).expect("fixed graph")
}

/// Homomorphism to [`alternating_c4`] without switching, by propagation.
pub fn hom_to_alternating_c4(f: &EdgeColouredGraph) -> Result<DecisionOutcome> {
    require_two(f)?;
    Ok(match alternating_c4_map(f) {
        Some(map) => DecisionOutcome::yes(
            Method::Propagation,
            Witness::Homomorphism { sequence: SwitchingSequence::new(), map: HomWitness { map } },
            "every image forced by its neighbour",
        ),
        None => DecisionOutcome::no(Method::Propagation, "propagation hit a conflict"),
    })
}

/// Each vertex of the alternating C4 has one neighbour of each colour, so
/// pinning the least vertex of a component to 0 forces the rest.
fn alternating_c4_map(f: &EdgeColouredGraph) -> Option<Vec<usize>> {
    let n = f.vertex_count();
    let mut img = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if img[root] != usize::MAX {
            continue;
        }
        img[root] = 0;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for (w, e) in f.neighbours(v) {
                let forced = if f.colours()[e] == 1 { img[v] ^ 1 } else { 3 - img[v] };
                if img[w] == usize::MAX {
                    img[w] = forced;
                    stack.push(w);
                } else if img[w] != forced {
                    return None;
                }
            }
        }
    }
    Some(img)
}

/// Vertices to switch by (1 2) so that a graph mapping to the alternating C4
/// by `img` becomes monochromatic of colour `c`.
fn mono_switches(img: &[usize], c: Colour) -> Vec<bool> {
    const BITS: [[bool; 4]; 2] = [[false, false, true, true], [false, true, true, false]];
    img.iter().map(|&t| BITS[usize::from(c) - 1][t]).collect()
}

fn flips(set: &[bool]) -> SwitchingSequence {
    let t = Permutation::rotation(2);
    set.iter().enumerate().filter(|(_, &s)| s).map(|(v, _)| (v, t.clone())).collect()
}

/// Every S_2 switching of `g2` up to switching whole components, in order.
/// The least vertex of each component is never switched.
fn for_each_s2_switching<T>(
    g2: &EdgeColouredGraph,
    limits: &Limits,
    mut visit: impl FnMut(&[bool], &EdgeColouredGraph) -> Option<T>,
) -> Result<Option<T>> {
    let (comp, count) = g2.components();
    let mut seen = vec![false; count];
    let mut free = Vec::new();
    for v in 0..g2.vertex_count() {
        if core::mem::replace(&mut seen[comp[v]], true) {
            free.push(v);
        }
    }
    if free.len() >= 63 || (1usize << free.len()) > limits.state_cap {
        return Err(Error::StateCapExceeded { cap: limits.state_cap });
    }
    let mut set = vec![false; g2.vertex_count()];
    for mask in 0usize..1 << free.len() {
        for (i, &v) in free.iter().enumerate() {
            set[v] = (mask >> i) & 1 == 1;
        }
        let colours = g2
            .ends()
            .iter()
            .zip(g2.colours())
            .map(|(&(u, v), &c)| if set[u] != set[v] { 3 - c } else { c })
            .collect();
        if let Some(found) = visit(&set, &g2.with_colours_unchecked(colours)) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

/// S_2-switchable homomorphism `g2 -> h2`.
///
/// When `h2` maps to the alternating C4 the answer is whether `g2` does too;
/// otherwise every switching of `g2` is tried within `limits.state_cap`.
pub fn s2_switchable_hom(g2: &EdgeColouredGraph, h2: &EdgeColouredGraph, limits: &Limits) -> Result<DecisionOutcome> {
    require_two(g2)?;
    require_two(h2)?;
    let constant = |note: &str| {
        DecisionOutcome::yes(
            Method::Propagation,
            Witness::Homomorphism { sequence: SwitchingSequence::new(), map: HomWitness { map: vec![0; g2.vertex_count()] } },
            note,
        )
    };
    if g2.vertex_count() == 0 {
        return Ok(constant("empty source"));
    }
    if g2.edge_count() == 0 {
        return Ok(if h2.vertex_count() > 0 {
            constant("edgeless source maps to one vertex")
        } else {
            DecisionOutcome::no(Method::Propagation, "empty target")
        });
    }
    if h2.edge_count() == 0 {
        return Ok(DecisionOutcome::no(Method::Propagation, "edgeless target, source has edges"));
    }
    if alternating_c4_map(h2).is_none() {
        return s2_switchable_hom_exact(g2, h2, limits);
    }
    let Some(img) = alternating_c4_map(g2) else {
        return Ok(DecisionOutcome::no(Method::Propagation, "target maps to the alternating C4 but source does not"));
    };
    let (a, b) = h2.ends()[0];
    let set = mono_switches(&img, h2.colours()[0]);
    let map = img.iter().map(|&t| if t % 2 == 0 { a } else { b }).collect();
    Ok(DecisionOutcome::yes(
        Method::Propagation,
        Witness::Homomorphism { sequence: flips(&set), map: HomWitness { map } },
        "both map to the alternating C4; source folded onto one target edge",
    ))
}

/// The exhaustive branch of [`s2_switchable_hom`], usable on any instance.
pub fn s2_switchable_hom_exact(g2: &EdgeColouredGraph, h2: &EdgeColouredGraph, limits: &Limits) -> Result<DecisionOutcome> {
    require_two(g2)?;
    require_two(h2)?;
    let mut tried = 0usize;
    let found = for_each_s2_switching(g2, limits, |set, switched| {
        tried += 1;
        find_hom(switched, h2).map(|map| (flips(set), map))
    })?;
    Ok(match found {
        Some((sequence, map)) => DecisionOutcome::yes(
            Method::ExactSearch,
            Witness::Homomorphism { sequence, map: HomWitness { map } },
            format!("hit after {tried} switch assignments"),
        ),
        None => DecisionOutcome::no(Method::ExactSearch, format!("{tried} switch assignments, no homomorphism")),
    })
}

/// `v` is switched by `π` for every step `(f(v), π)` of `seq`.
fn lift_through(seq: &SwitchingSequence, f: &[usize], target_n: usize) -> SwitchingSequence {
    let mut pre = vec![Vec::new(); target_n];
    for (v, &w) in f.iter().enumerate() {
        pre[w].push(v);
    }
    seq.iter().flat_map(|s| pre[s.vertex].iter().map(move |&x| (x, s.perm.clone()))).collect()
}

fn bipartite_fold(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Option<Option<Vec<usize>>> {
    if h.edge_count() == 0 || !h.is_bipartite() {
        return None;
    }
    let (a, b) = h.ends()[0];
    Some(g.bipartition().map(|side| side.into_iter().map(|s| if s { b } else { a }).collect()))
}

impl Decider {
    /// Γ-switchable homomorphism `g -> h`.
    pub fn switchable_hom(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        self.check_degree(h)?;
        match self.route() {
            Route::PropertyT(j) => self.hom_property_t(g, h, *j),
            Route::EvenDihedral(blocks) => self.hom_even_dihedral(g, h, blocks),
            Route::Oracle => self.switchable_hom_by_oracle(g, h),
        }
    }

    fn hom_property_t(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, j: Colour) -> Result<DecisionOutcome> {
        let (gu, hu) = (g.monochromatic(j), h.monochromatic(j));
        let f = match bipartite_fold(&gu, &hu) {
            Some(f) => f,
            None => find_hom(&gu, &hu),
        };
        let Some(f) = f else {
            return Ok(DecisionOutcome::no(Method::PropertyTFastPath, format!("T_{j} group; no homomorphism of underlying graphs")));
        };
        let mut sequence = monochromatize_sequence(g, j, self.group())?;
        let back = monochromatize_sequence(h, j, self.group())?.inverse();
        sequence.append(lift_through(&back, &f, h.vertex_count()));
        Ok(DecisionOutcome::yes(
            Method::PropertyTFastPath,
            Witness::Homomorphism { sequence, map: HomWitness { map: f } },
            format!("T_{j} group; underlying homomorphism lifted through monochromatic forms"),
        ))
    }

    fn hom_even_dihedral(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph, blocks: &BlockStructure) -> Result<DecisionOutcome> {
        let g2 = g.collapse_blocks()?;
        let h2 = h.collapse_blocks()?;
        let inner = s2_switchable_hom(&g2, &h2, self.limits())?;
        let method = if inner.method == Method::ExactSearch { Method::ExactSearch } else { Method::DihedralEvenReduction };
        let Some(Witness::Homomorphism { sequence, map }) = inner.witness else {
            return Ok(DecisionOutcome::no(method, format!("block collapse: {} ({})", inner.notes, inner.method)));
        };
        let mut lifted = lift_block_swaps(&sequence, blocks);
        let swapped = g.apply_sequence(&lifted)?;
        let want: Vec<Colour> = g
            .ends()
            .iter()
            .map(|&(u, v)| h.colour_between(map.map[u], map.map[v]).expect("collapse homomorphism"))
            .collect();
        lifted.append(recolour_within_blocks(&swapped, &want, blocks)?);
        Ok(DecisionOutcome::yes(
            method,
            Witness::Homomorphism { sequence: lifted, map },
            format!("block collapse: {} ({})", inner.notes, inner.method),
        ))
    }

    /// Searches every reachable signature of `g` for a homomorphism to `h`.
    pub fn switchable_hom_by_oracle(&self, g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        self.check_degree(h)?;
        let class = reachable_signatures(g, self.group(), self.limits())?;
        for i in 0..class.len() {
            if let Some(map) = find_hom(&class.graph(i), h) {
                return Ok(DecisionOutcome::yes(
                    Method::OracleBfs,
                    Witness::Homomorphism { sequence: class.sequence_to(i), map: HomWitness { map } },
                    format!("signature {i} of {}", class.len()),
                ));
            }
        }
        Ok(DecisionOutcome::no(Method::OracleBfs, format!("none of {} signatures maps", class.len())))
    }

    /// Γ-switchable k-colouring of `g`.
    pub fn switchable_k_colouring(&self, g: &EdgeColouredGraph, k: usize) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        if k == 0 {
            return Err(Error::InvalidK);
        }
        match self.route() {
            Route::PropertyT(j) => {
                let sequence = monochromatize_sequence(g, *j, self.group())?;
                let mono = g.apply_sequence(&sequence)?;
                Ok(match colouring_witness(&mono, k, sequence) {
                    Some(w) => DecisionOutcome::yes(Method::PropertyTFastPath, w, format!("T_{j} group; underlying graph is {k}-colourable")),
                    None => DecisionOutcome::no(Method::PropertyTFastPath, format!("T_{j} group; underlying graph is not {k}-colourable")),
                })
            }
            Route::EvenDihedral(blocks) if k <= 2 => self.k_colouring_even_dihedral_small(g, k, blocks),
            Route::EvenDihedral(_) => self.switchable_k_colouring_exact(g, k),
            Route::Oracle => self.switchable_k_colouring_by_oracle(g, k),
        }
    }

    fn k_colouring_even_dihedral_small(&self, g: &EdgeColouredGraph, k: usize, blocks: &BlockStructure) -> Result<DecisionOutcome> {
        let method = Method::DihedralEvenReduction;
        if k == 1 || g.edge_count() == 0 {
            return Ok(match colouring_witness(g, k, SwitchingSequence::new()) {
                Some(w) => DecisionOutcome::yes(method, w, "edgeless"),
                None => DecisionOutcome::no(method, "a 1-colouring needs an edgeless graph"),
            });
        }
        if !g.is_bipartite() {
            return Ok(DecisionOutcome::no(method, "not bipartite"));
        }
        let Some(img) = alternating_c4_map(&g.collapse_blocks()?) else {
            return Ok(DecisionOutcome::no(method, "block collapse does not map to the alternating C4"));
        };
        let mut sequence = lift_block_swaps(&flips(&mono_switches(&img, 1)), blocks);
        let swapped = g.apply_sequence(&sequence)?;
        sequence.append(recolour_within_blocks(&swapped, &vec![1; g.edge_count()], blocks)?);
        let mono = g.apply_sequence(&sequence)?;
        let w = colouring_witness(&mono, 2, sequence).expect("bipartite monochromatic graph");
        Ok(DecisionOutcome::yes(method, w, "bipartite, switchable to monochromatic colour 1"))
    }

    /// Exhaustive k-colouring search. For even dihedral groups this tries
    /// every S_2 switching of the block collapse, since within-block colours
    /// can be chosen freely; for any other group it is the oracle.
    pub fn switchable_k_colouring_exact(&self, g: &EdgeColouredGraph, k: usize) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let Route::EvenDihedral(blocks) = self.route() else {
            return self.switchable_k_colouring_by_oracle(g, k);
        };
        let g2 = g.collapse_blocks()?;
        let mut tried = 0usize;
        let found = for_each_s2_switching(&g2, self.limits(), |set, switched| {
            tried += 1;
            find_partition(switched, k).map(|_| (flips(set), switched.colours().to_vec()))
        })?;
        let Some((swaps, want)) = found else {
            return Ok(DecisionOutcome::no(Method::ExactSearch, format!("{tried} block switchings, none {k}-colourable")));
        };
        let mut sequence = lift_block_swaps(&swaps, blocks);
        let swapped = g.apply_sequence(&sequence)?;
        sequence.append(recolour_within_blocks(&swapped, &want, blocks)?);
        let recoloured = g.apply_sequence(&sequence)?;
        let w = colouring_witness(&recoloured, k, sequence).expect("same constraints as the collapse");
        Ok(DecisionOutcome::yes(Method::ExactSearch, w, format!("hit after {tried} block switchings")))
    }

    /// Searches every reachable signature of `g` for a k-colouring.
    pub fn switchable_k_colouring_by_oracle(&self, g: &EdgeColouredGraph, k: usize) -> Result<DecisionOutcome> {
        self.check_degree(g)?;
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let class = reachable_signatures(g, self.group(), self.limits())?;
        for i in 0..class.len() {
            if let Some(w) = colouring_witness(&class.graph(i), k, class.sequence_to(i)) {
                return Ok(DecisionOutcome::yes(Method::OracleBfs, w, format!("signature {i} of {}", class.len())));
            }
        }
        Ok(DecisionOutcome::no(Method::OracleBfs, format!("none of {} signatures is {k}-colourable", class.len())))
    }
}

/// [`Decider::switchable_hom`] for a one-off group.
pub fn switchable_hom_exists(g: &EdgeColouredGraph, h: &EdgeColouredGraph, group: &crate::PermGroup) -> Result<DecisionOutcome> {
    Decider::new(group.clone()).switchable_hom(g, h)
}

/// [`Decider::switchable_k_colouring`] for a one-off group.
pub fn switchable_k_colouring(g: &EdgeColouredGraph, k: usize, group: &crate::PermGroup) -> Result<DecisionOutcome> {
    Decider::new(group.clone()).switchable_k_colouring(g, k)
}

/// The underlying graph of `g` plus a disjoint `K_k`, every edge coloured `j`, with `m` colours.
pub fn build_kcol_reduction(g: &EdgeColouredGraph, k: usize, m: usize, j: Colour) -> Result<EdgeColouredGraph> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    if j == 0 || usize::from(j) > m {
        return Err(Error::ColourOutOfRange { colour: usize::from(j), m });
    }
    let base = EdgeColouredGraph::new(m, g.vertex_count(), g.ends().iter().map(|&(u, v)| (u, v, j)))?;
    let clique = EdgeColouredGraph::new(m, k, (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v, j))))?;
    base.disjoint_union(&clique)
}

/// `f` read as an m-edge-coloured graph; its block collapse is `f` again.
pub fn build_hom_reduction(f: &EdgeColouredGraph, m: usize) -> Result<EdgeColouredGraph> {
    require_two(f)?;
    if m == 0 || m % 2 == 1 {
        return Err(Error::OddDegree { m });
    }
    f.with_colour_count(m)
}
