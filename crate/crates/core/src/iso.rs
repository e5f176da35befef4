//! Isomorphism search by backtracking with degree pruning.
//!
//! A bijection is returned as `map[v] = w`, sending vertex `v` of the first
//! graph to vertex `w` of the second.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::EdgeColouredGraph;
use crate::{Error, Result};

/// Default cap on the number of vertices the search accepts.
pub const DEFAULT_VERTEX_CAP: usize = 32;

/// Whether edge colours must be preserved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Matching {
    Underlying,
    Coloured,
}

/// First isomorphism of the underlying graphs in lexicographic order.
pub fn underlying_isomorphism(g: &EdgeColouredGraph, h: &EdgeColouredGraph, vertex_cap: usize) -> Result<Option<Vec<usize>>> {
    first(g, h, Matching::Underlying, vertex_cap)
}

/// First colour-preserving isomorphism in lexicographic order.
pub fn coloured_isomorphism(g: &EdgeColouredGraph, h: &EdgeColouredGraph, vertex_cap: usize) -> Result<Option<Vec<usize>>> {
    first(g, h, Matching::Coloured, vertex_cap)
}

fn first(g: &EdgeColouredGraph, h: &EdgeColouredGraph, matching: Matching, cap: usize) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    for_each_isomorphism(g, h, matching, cap, |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}

/// Calls `visit` on every isomorphism `g -> h` in lexicographic order of the
/// image sequence until it returns `Break`.
pub fn for_each_isomorphism<F>(g: &EdgeColouredGraph, h: &EdgeColouredGraph, matching: Matching, vertex_cap: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = g.vertex_count();
    for k in [n, h.vertex_count()] {
        if k > vertex_cap {
            return Err(Error::VertexCapExceeded { n: k, cap: vertex_cap });
        }
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(());
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(());
    }
    if matching == Matching::Coloured {
        let mut cg = g.colours().to_vec();
        let mut ch = h.colours().to_vec();
        cg.sort_unstable();
        ch.sort_unstable();
        if cg != ch {
            return Ok(());
        }
    }
    let search = Search { g, h, matching, hmat: adjacency_matrix(h) };
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let _ = search.extend(0, &mut map, &mut used, &mut visit);
    Ok(())
}

/// `mat[a * n + b]` is the colour of edge `ab`, or 0.
pub(crate) fn adjacency_matrix(g: &EdgeColouredGraph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut mat = vec![0u8; n * n];
    for e in g.edges() {
        mat[e.u * n + e.v] = e.colour;
        mat[e.v * n + e.u] = e.colour;
    }
    mat
}

struct Search<'a> {
    g: &'a EdgeColouredGraph,
    h: &'a EdgeColouredGraph,
    matching: Matching,
    hmat: Vec<u8>,
}

impl Search<'_> {
    fn extend<F>(&self, v: usize, map: &mut [usize], used: &mut [bool], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = map.len();
        if v == n {
            return visit(map);
        }
        for w in 0..n {
            if used[w] || self.g.degree(v) != self.h.degree(w) || !self.consistent(v, w, map) {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let flow = self.extend(v + 1, map, used, visit);
            used[w] = false;
            map[v] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// Adjacency (and colour, if required) agrees with every earlier vertex.
    fn consistent(&self, v: usize, w: usize, map: &[usize]) -> bool {
        let n = map.len();
        let mut earlier_neighbours = 0;
        for (x, e) in self.g.neighbours(v) {
            if x >= v {
                continue;
            }
            earlier_neighbours += 1;
            let hc = self.hmat[w * n + map[x]];
            let ok = match self.matching {
                Matching::Underlying => hc != 0,
                Matching::Coloured => hc == self.g.colours()[e],
            };
            if !ok {
                return false;
            }
        }
        // w must not have extra neighbours among already-mapped images
        let mapped_neighbours = (0..v).filter(|&x| self.hmat[w * n + map[x]] != 0).count();
        mapped_neighbours == earlier_neighbours
    }
}
