//! The m-edge-coloured graph model and structural utilities.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::{Block, Colour};
use crate::{Error, Result};

/// A coloured edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: Colour,
}

/// A simple loopless graph on vertices `0..n` whose edges carry colours in `1..=m`.
///
/// Edges are stored sorted by `(u, v)` with `u < v`; an edge's position in that
/// order is its *edge index*, and the colour vector indexed this way is the
/// graph's signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColouredGraph {
    m: usize,
    n: usize,
    ends: Vec<(usize, usize)>,
    colours: Vec<Colour>,
    incidence: Vec<Vec<usize>>,
}

impl EdgeColouredGraph {
    /// Builds a graph from `(u, v, colour)` triples in any order and orientation.
    pub fn new<I>(m: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Colour)>,
    {
        let mut list: Vec<(usize, usize, Colour)> = Vec::new();
        for (u, v, c) in edges {
            if u == v {
                return Err(Error::Loop { vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            check_colour(c, m)?;
            list.push((u.min(v), u.max(v), c));
        }
        list.sort_unstable_by_key(|&(u, v, _)| (u, v));
        if let Some(w) = list.windows(2).find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1)) {
            return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let ends = list.iter().map(|&(u, v, _)| (u, v)).collect();
        let colours = list.iter().map(|&(_, _, c)| c).collect();
        Ok(Self::from_parts(m, n, ends, colours))
    }

    pub fn edgeless(m: usize, n: usize) -> Self {
        Self::from_parts(m, n, Vec::new(), Vec::new())
    }

    fn from_parts(m: usize, n: usize, ends: Vec<(usize, usize)>, colours: Vec<Colour>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (e, &(u, v)) in ends.iter().enumerate() {
            incidence[u].push(e);
            incidence[v].push(e);
        }
        EdgeColouredGraph { m, n, ends, colours, incidence }
    }

    /// Number of colours.
    pub fn colour_count(&self) -> usize {
        self.m
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    /// Endpoints of every edge, in edge-index order.
    pub fn ends(&self) -> &[(usize, usize)] {
        &self.ends
    }

    /// The signature, indexed by edge index.
    pub fn colours(&self) -> &[Colour] {
        &self.colours
    }

    pub fn edge(&self, e: usize) -> Edge {
        let (u, v) = self.ends[e];
        Edge { u, v, colour: self.colours[e] }
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        (0..self.ends.len()).map(move |e| self.edge(e))
    }

    /// Edge indices incident with `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// Neighbours of `v` with the connecting edge index.
    pub fn neighbours(&self, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.incidence[v].iter().map(move |&e| {
            let (a, b) = self.ends[e];
            (if a == v { b } else { a }, e)
        })
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.ends.binary_search(&key).ok()
    }

    pub fn colour_between(&self, u: usize, v: usize) -> Option<Colour> {
        self.edge_index(u, v).map(|e| self.colours[e])
    }

    /// Same underlying labelled graph with a new signature.
    pub fn with_colours(&self, colours: Vec<Colour>) -> Result<Self> {
        if colours.len() != self.ends.len() {
            return Err(Error::UnderlyingMismatch);
        }
        for &c in &colours {
            check_colour(c, self.m)?;
        }
        Ok(self.with_colours_unchecked(colours))
    }

    pub(crate) fn with_colours_unchecked(&self, colours: Vec<Colour>) -> Self {
        debug_assert_eq!(colours.len(), self.ends.len());
        EdgeColouredGraph { colours, ..self.clone() }
    }

    /// Same edges and colours, read as an `m`-edge-coloured graph.
    pub fn with_colour_count(&self, m: usize) -> Result<Self> {
        for &c in &self.colours {
            check_colour(c, m)?;
        }
        Ok(EdgeColouredGraph { m, ..self.clone() })
    }

    /// True when both graphs have the same vertex count and the same edge list.
    pub fn same_underlying(&self, other: &EdgeColouredGraph) -> bool {
        self.n == other.n && self.ends == other.ends
    }

    /// `E_i(G)`: the edges of colour `i`.
    pub fn edges_of_colour(&self, i: Colour) -> Result<Vec<Edge>> {
        check_colour(i, self.m)?;
        Ok(self.edges().filter(|e| e.colour == i).collect())
    }

    /// Every edge has colour `j`. Edgeless graphs are monochromatic of every colour.
    pub fn is_monochromatic(&self, j: Colour) -> bool {
        self.colours.iter().all(|&c| c == j)
    }

    /// The underlying graph with every edge recoloured `j`.
    pub fn monochromatic(&self, j: Colour) -> Self {
        self.with_colours_unchecked(vec![j; self.ends.len()])
    }

    /// Renames vertex `v` to `perm[v]`. `perm` must be a bijection of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let edges = self.edges().map(|e| (perm[e.u], perm[e.v], e.colour));
        Self::new(self.m, self.n, edges).expect("relabelling by a bijection keeps the graph simple")
    }

    /// `G_2`: colours in the odd block become 1, colours in the even block become 2.
    pub fn collapse_blocks(&self) -> Result<Self> {
        if self.m % 2 == 1 || self.m == 0 {
            return Err(Error::OddDegree { m: self.m });
        }
        let colours = self.colours.iter().map(|&c| Block::of(c).collapsed_colour()).collect();
        Ok(EdgeColouredGraph { m: 2, colours, ..self.clone() })
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &EdgeColouredGraph) -> Result<Self> {
        if self.m != other.m {
            return Err(Error::DegreeMismatch { expected: self.m, found: other.m });
        }
        let shift = self.n;
        let edges = self.edges().map(|e| (e.u, e.v, e.colour)).chain(other.edges().map(|e| (e.u + shift, e.v + shift, e.colour)));
        Self::new(self.m, self.n + other.n, edges)
    }

    /// Component id of every vertex (ids are assigned in order of least vertex) and the count.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for (y, _) in self.neighbours(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// BFS 2-colouring of the underlying graph: `side[v]` is `false` for the
    /// side containing the least vertex of each component.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap_or(false);
                for (y, _) in self.neighbours(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// BFS spanning forest: `parent[v] = Some((parent vertex, edge index))`,
    /// `None` for roots (the least vertex of each component).
    pub fn spanning_forest(&self) -> Vec<Option<(usize, usize)>> {
        let mut parent = vec![None; self.n];
        let mut visited = vec![false; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if visited[s] {
                continue;
            }
            visited[s] = true;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for (y, e) in self.neighbours(x) {
                    if !visited[y] {
                        visited[y] = true;
                        parent[y] = Some((x, e));
                        queue.push_back(y);
                    }
                }
            }
        }
        parent
    }

    /// Fundamental cycles of a BFS spanning forest, one per non-tree edge, each
    /// returned as a sorted list of edge indices. The basis has
    /// `|E| - n + components` members.
    pub fn cycle_basis(&self) -> Vec<Vec<usize>> {
        let parent = self.spanning_forest();
        let mut tree_edge = vec![false; self.ends.len()];
        let mut depth = vec![0usize; self.n];
        // BFS order guarantees parents are settled first when walking in that order.
        for v in bfs_order(&parent) {
            if let Some((p, e)) = parent[v] {
                tree_edge[e] = true;
                depth[v] = depth[p] + 1;
            }
        }
        let mut basis = Vec::new();
        for (e, &(u, v)) in self.ends.iter().enumerate() {
            if tree_edge[e] {
                continue;
            }
            let mut cycle = vec![e];
            let (mut a, mut b) = (u, v);
            while a != b {
                if depth[a] >= depth[b] {
                    let (pa, ea) = parent[a].expect("non-root has a parent");
                    cycle.push(ea);
                    a = pa;
                } else {
                    let (pb, eb) = parent[b].expect("non-root has a parent");
                    cycle.push(eb);
                    b = pb;
                }
            }
            cycle.sort_unstable();
            basis.push(cycle);
        }
        basis
    }
}

fn bfs_order(parent: &[Option<(usize, usize)>]) -> Vec<usize> {
    let n = parent.len();
    let mut children = vec![Vec::new(); n];
    for (v, p) in parent.iter().enumerate() {
        if let Some((p, _)) = p {
            children[*p].push(v);
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        queue.extend(children[v].iter().copied());
    }
    order
}

fn check_colour(c: Colour, m: usize) -> Result<()> {
    if c == 0 || usize::from(c) > m {
        return Err(Error::ColourOutOfRange { colour: usize::from(c), m });
    }
    Ok(())
}

/// A vertex map from a source graph to a target graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomWitness {
    pub map: Vec<usize>,
}

impl HomWitness {
    /// Every source edge of colour `c` lands on a target edge of colour `c`.
    pub fn is_homomorphism(&self, source: &EdgeColouredGraph, target: &EdgeColouredGraph) -> bool {
        self.map.len() == source.vertex_count()
            && self.map.iter().all(|&t| t < target.vertex_count())
            && source
                .edges()
                .all(|e| target.colour_between(self.map[e.u], self.map[e.v]) == Some(e.colour))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn cycle(m: usize, colours: &[Colour]) -> EdgeColouredGraph {
        let n = colours.len();
        EdgeColouredGraph::new(m, n, colours.iter().enumerate().map(|(i, &c)| (i, (i + 1) % n, c))).unwrap()
    }

    fn triangle(m: usize, c: [Colour; 3]) -> EdgeColouredGraph {
        EdgeColouredGraph::new(m, 3, [(0, 1, c[0]), (1, 2, c[1]), (0, 2, c[2])]).unwrap()
    }

    #[test]
    fn construction_rejects_invalid_edges() {
        assert_eq!(EdgeColouredGraph::new(2, 3, [(1, 1, 1)]), Err(Error::Loop { vertex: 1 }));
        assert_eq!(EdgeColouredGraph::new(2, 3, [(0, 3, 1)]), Err(Error::InvalidVertex { vertex: 3, n: 3 }));
        assert_eq!(EdgeColouredGraph::new(2, 3, [(0, 1, 3)]), Err(Error::ColourOutOfRange { colour: 3, m: 2 }));
        assert_eq!(
            EdgeColouredGraph::new(2, 3, [(0, 1, 1), (1, 0, 2)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        );
    }

    #[test]
    fn edges_are_sorted_and_normalised() {
        let g = EdgeColouredGraph::new(3, 4, [(3, 2, 1), (1, 0, 2), (0, 3, 3)]).unwrap();
        assert_eq!(g.ends(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.colours(), &[2, 3, 1]);
        assert_eq!(g.colour_between(3, 0), Some(3));
        assert_eq!(g.colour_between(1, 2), None);
    }

    #[test]
    fn colour_classes_partition_edges() {
        let g = triangle(3, [1, 2, 3]);
        assert_eq!(g.edges_of_colour(2).unwrap().len(), 1);
        assert!(g.edges_of_colour(4).is_err());
        let mono = triangle(3, [1, 1, 1]);
        assert!(mono.edges_of_colour(2).unwrap().is_empty());
        let total: usize = (1..=3).map(|i| g.edges_of_colour(i).unwrap().len()).sum();
        assert_eq!(total, g.edge_count());
    }

    #[test]
    fn monochromatic_checks() {
        assert!(triangle(2, [1, 1, 1]).is_monochromatic(1));
        assert!(!triangle(2, [1, 1, 2]).is_monochromatic(1));
        assert!(EdgeColouredGraph::edgeless(3, 3).is_monochromatic(2));
    }

    #[test]
    fn collapse_examples() {
        let c4 = cycle(4, &[1, 2, 3, 4]);
        assert_eq!(c4.collapse_blocks().unwrap().colours(), &[1, 2, 2, 1]);
        // edges sorted: (0,1)=1 (0,3)=4 (1,2)=2 (2,3)=3, so around the cycle 1,2,1,2
        let collapsed = c4.collapse_blocks().unwrap();
        let around: Vec<_> = (0..4).map(|i| collapsed.colour_between(i, (i + 1) % 4).unwrap()).collect();
        assert_eq!(around, vec![1, 2, 1, 2]);
        let two = cycle(2, &[1, 2, 2]);
        assert_eq!(two.collapse_blocks().unwrap(), two);
        let six = EdgeColouredGraph::new(6, 2, [(0, 1, 5)]).unwrap();
        assert_eq!(six.collapse_blocks().unwrap().colours(), &[1]);
        assert_eq!(cycle(3, &[1, 2, 3]).collapse_blocks(), Err(Error::OddDegree { m: 3 }));
    }

    #[test]
    fn bipartite_examples() {
        assert!(cycle(1, &[1; 4]).is_bipartite());
        assert!(!cycle(1, &[1; 5]).is_bipartite());
        assert!(EdgeColouredGraph::edgeless(1, 4).is_bipartite());
        let side = cycle(1, &[1; 6]).bipartition().unwrap();
        assert_eq!(side, vec![false, true, false, true, false, true]);
    }

    #[test]
    fn cycle_basis_sizes() {
        let path = EdgeColouredGraph::new(1, 4, [(0, 1, 1), (1, 2, 1), (1, 3, 1)]).unwrap();
        assert!(path.cycle_basis().is_empty());
        let k3 = triangle(1, [1, 1, 1]);
        assert_eq!(k3.cycle_basis(), vec![vec![0, 1, 2]]);
        let k4 = EdgeColouredGraph::new(1, 4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v, 1)))).unwrap();
        let basis = k4.cycle_basis();
        assert_eq!(basis.len(), 3);
        assert!(basis.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn basis_cycles_are_cycles() {
        let g = EdgeColouredGraph::new(1, 6, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 3, 1), (0, 4, 1)]).unwrap();
        let basis = g.cycle_basis();
        assert_eq!(basis.len(), 8 - 6 + 1);
        for cyc in basis {
            let mut deg = vec![0; 6];
            for &e in &cyc {
                let (u, v) = g.ends()[e];
                deg[u] += 1;
                deg[v] += 1;
            }
            assert!(deg.iter().all(|&d| d == 0 || d == 2));
        }
    }

    #[test]
    fn union_and_relabel() {
        let k3 = triangle(4, [1, 1, 1]);
        let k2 = EdgeColouredGraph::new(4, 2, [(0, 1, 1)]).unwrap();
        let u = k3.disjoint_union(&k2).unwrap();
        assert_eq!(u.vertex_count(), 5);
        assert_eq!(u.colour_between(3, 4), Some(1));
        let r = k2.relabel(&[1, 0]);
        assert_eq!(r, k2);
    }

    #[test]
    fn hom_witness_validation() {
        let c4 = cycle(2, &[2, 2, 2, 2]);
        let k2 = EdgeColouredGraph::new(2, 2, [(0, 1, 2)]).unwrap();
        assert!(HomWitness { map: vec![0, 1, 0, 1] }.is_homomorphism(&c4, &k2));
        assert!(!HomWitness { map: vec![0, 0, 1, 1] }.is_homomorphism(&c4, &k2));
    }
}
