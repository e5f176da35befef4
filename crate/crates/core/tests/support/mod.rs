//! Brute-force oracles written without the library's search code.
//!
//! Signatures on a fixed labelled graph are encoded as integers in base m,
//! edge `i` (in `ends()` order) contributing `(colour - 1) * m^i`.

#![allow(dead_code)]

use ecswitch_core::{Colour, EdgeColouredGraph, PermGroup};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn edge_mask(n: usize, edges: &[(usize, usize)], perm: &[usize]) -> u64 {
    let mut mask = 0;
    for &(u, v) in edges {
        let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
        mask |= 1 << (a * n + b);
    }
    mask
}

/// One representative per isomorphism class of simple graphs on `n` vertices
/// with at most `max_edges` edges, as 1-coloured graphs.
pub fn graphs(n: usize, max_edges: usize, connected_only: bool) -> Vec<EdgeColouredGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for subset in 0u32..1 << pairs.len() {
        if subset.count_ones() as usize > max_edges {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate().filter(|(i, _)| subset >> i & 1 == 1).map(|(_, &p)| p).collect();
        let canon = perms.iter().map(|p| edge_mask(n, &edges, p)).min().unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let g = EdgeColouredGraph::new(1, n, edges.iter().map(|&(u, v)| (u, v, 1))).unwrap();
        if connected_only && !connected(&g) {
            continue;
        }
        out.push(g);
    }
    out
}

pub fn connected(g: &EdgeColouredGraph) -> bool {
    let n = g.vertex_count();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in g.ends() {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

pub fn signature_count(g: &EdgeColouredGraph, m: usize) -> u32 {
    (m as u32).pow(g.edge_count() as u32)
}

pub fn encode(colours: &[Colour], m: usize) -> u32 {
    colours.iter().rev().fold(0, |acc, &c| acc * m as u32 + u32::from(c - 1))
}

pub fn decode(mut code: u32, e: usize, m: usize) -> Vec<Colour> {
    (0..e)
        .map(|_| {
            let c = (code % m as u32) as Colour + 1;
            code /= m as u32;
            c
        })
        .collect()
}

/// `g` with signature `code` and `m` colours.
pub fn with_code(g: &EdgeColouredGraph, m: usize, code: u32) -> EdgeColouredGraph {
    EdgeColouredGraph::new(m, g.vertex_count(), g.ends().iter().zip(decode(code, g.edge_count(), m)).map(|(&(u, v), c)| (u, v, c))).unwrap()
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

/// Switching class of every signature on `g`'s labelled graph, by union-find
/// over single switches by the group's generators. Class ids are the least
/// code in the class.
pub fn class_ids(g: &EdgeColouredGraph, group: &PermGroup) -> Vec<u32> {
    let m = group.degree();
    let e = g.edge_count();
    let total = signature_count(g, m);
    let mut parent: Vec<u32> = (0..total).collect();
    let gens: Vec<&[Colour]> = group.generators().iter().map(|p| p.images()).collect();
    for code in 0..total {
        let sig = decode(code, e, m);
        for x in 0..g.vertex_count() {
            for img in &gens {
                let mut next = sig.clone();
                for (i, &(u, v)) in g.ends().iter().enumerate() {
                    if u == x || v == x {
                        next[i] = img[usize::from(next[i]) - 1];
                    }
                }
                let (a, b) = (find(&mut parent, code), find(&mut parent, encode(&next, m)));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
    }
    (0..total).map(|c| find(&mut parent, c)).collect()
}

/// Every vertex map `g -> h` that sends edges to edges (colours ignored).
pub fn underlying_homs(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Vec<Vec<usize>> {
    let (n, nh) = (g.vertex_count(), h.vertex_count());
    let mut adj = vec![false; nh * nh];
    for &(a, b) in h.ends() {
        adj[a * nh + b] = true;
        adj[b * nh + a] = true;
    }
    if n > 0 && nh == 0 {
        return Vec::new();
    }
    let total = nh.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let map: Vec<usize> = (0..n)
            .map(|_| {
                let w = c % nh;
                c /= nh;
                w
            })
            .collect();
        if g.ends().iter().all(|&(u, v)| adj[map[u] * nh + map[v]]) {
            out.push(map);
        }
    }
    out
}

/// Bijective underlying homomorphisms whose inverse is one too.
pub fn isomorphisms(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> Vec<Vec<usize>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Vec::new();
    }
    permutations(g.vertex_count())
        .into_iter()
        .filter(|p| g.ends().iter().all(|&(u, v)| h.ends().contains(&(p[u].min(p[v]), p[u].max(p[v])))))
        .collect()
}

/// Colours of `h` (signature `hcode`) read back along `f` onto `g`'s edges.
pub fn pullback(g: &EdgeColouredGraph, h: &EdgeColouredGraph, m: usize, hcode: u32, f: &[usize]) -> u32 {
    let hs = decode(hcode, h.edge_count(), m);
    let colours: Vec<Colour> = g
        .ends()
        .iter()
        .map(|&(u, v)| {
            let key = (f[u].min(f[v]), f[u].max(f[v]));
            hs[h.ends().iter().position(|&p| p == key).unwrap()]
        })
        .collect();
    encode(&colours, m)
}

/// Proper k-colouring of the plain underlying graph, by trying all k^n maps.
pub fn plain_k_colourable(g: &EdgeColouredGraph, k: usize) -> bool {
    let n = g.vertex_count();
    (0..k.pow(n as u32)).any(|code| {
        let col: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
        g.ends().iter().all(|&(u, v)| col[u] != col[v])
    })
}

/// Edge-coloured k-colouring: some map to k classes, independent classes,
/// one colour between each pair of classes.
pub fn ec_k_colourable(g: &EdgeColouredGraph, k: usize) -> bool {
    let n = g.vertex_count();
    (0..k.pow(n as u32)).any(|code| {
        let col: Vec<usize> = (0..n).map(|i| code / k.pow(i as u32) % k).collect();
        let mut pair = vec![0; k * k];
        g.ends().iter().zip(g.colours()).all(|(&(u, v), &c)| {
            let (a, b) = (col[u].min(col[v]), col[u].max(col[v]));
            if a == b {
                return false;
            }
            let slot = &mut pair[a * k + b];
            if *slot == 0 {
                *slot = c;
            }
            *slot == c
        })
    })
}

/// S_2 equivalence on the same labelled graph by trying all 2^n vertex subsets.
pub fn s2_brute_equivalent(g: &EdgeColouredGraph, h: &EdgeColouredGraph) -> bool {
    let n = g.vertex_count();
    (0u32..1 << n).any(|mask| {
        g.ends().iter().zip(g.colours().iter().zip(h.colours())).all(|(&(u, v), (&a, &b))| {
            let flip = ((mask >> u) ^ (mask >> v)) & 1 == 1;
            (if flip { 3 - a } else { a }) == b
        })
    })
}

/// All maps `f -> alternating C4` tried exhaustively.
pub fn maps_to_alternating_c4(f: &EdgeColouredGraph) -> bool {
    // C4 0-1-2-3-0 with colours 1,2,1,2
    let colour = |a: usize, b: usize| -> Option<Colour> {
        match (a.min(b), a.max(b)) {
            (0, 1) | (2, 3) => Some(1),
            (1, 2) | (0, 3) => Some(2),
            _ => None,
        }
    };
    let n = f.vertex_count();
    (0..4usize.pow(n as u32)).any(|code| {
        let img: Vec<usize> = (0..n).map(|i| code / 4usize.pow(i as u32) % 4).collect();
        f.ends().iter().zip(f.colours()).all(|(&(u, v), &c)| colour(img[u], img[v]) == Some(c))
    })
}
