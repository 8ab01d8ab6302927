//! Interval graph recognition and interval models.
//!
//! A graph is interval exactly when it is chordal and has no asteroidal
//! triple, and the co-interval and union-co-interval tests reduce to that.
//! Models are produced by ordering the maximal cliques so that the cliques
//! containing any fixed vertex are consecutive; each vertex then spans the
//! positions of its cliques. Everything here is exact and deterministic.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// A perfect elimination ordering if one exists, i.e. iff the graph is
/// chordal. Works by repeatedly deleting a simplicial vertex (one whose
/// remaining neighborhood is a clique); chordal graphs always have one.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut found = None;
        let mut m = alive;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let nb = g.neighbors(v) & alive;
            let mut clique = true;
            let mut p = nb;
            while p != 0 {
                let x = p.trailing_zeros() as usize;
                p &= p - 1;
                if nb & !g.neighbors(x) & !(1 << x) != 0 {
                    clique = false;
                    break;
                }
            }
            if clique {
                found = Some(v);
                break;
            }
        }
        let v = found?;
        order.push(v);
        alive &= !(1 << v);
    }
    Some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

/// Whether some three pairwise non-adjacent vertices are an asteroidal
/// triple: between any two of them there is a path avoiding the closed
/// neighborhood of the third.
pub fn has_asteroidal_triple(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    // comp[w][v] labels the component of v in G - N[w], or usize::MAX for
    // removed vertices; u and v are connected there iff their labels match.
    let mut comp = vec![vec![usize::MAX; n]; n];
    for (w, row) in comp.iter_mut().enumerate() {
        let removed = g.neighbors(w) | 1 << w;
        let mut label = 0;
        for start in 0..n {
            if removed >> start & 1 == 1 || row[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            row[start] = label;
            while let Some(x) = stack.pop() {
                let mut m = g.neighbors(x) & !removed;
                while m != 0 {
                    let y = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if row[y] == usize::MAX {
                        row[y] = label;
                        stack.push(y);
                    }
                }
            }
            label += 1;
        }
    }
    let linked = |a: usize, b: usize, avoid: usize| {
        comp[avoid][a] != usize::MAX && comp[avoid][a] == comp[avoid][b]
    };
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            for w in v + 1..n {
                if g.has_edge(u, w) || g.has_edge(v, w) {
                    continue;
                }
                if linked(u, v, w) && linked(u, w, v) && linked(v, w, u) {
                    return true;
                }
            }
        }
    }
    false
}

pub fn is_interval(g: &Graph) -> bool {
    is_chordal(g) && !has_asteroidal_triple(g)
}

pub fn is_co_interval(g: &Graph) -> bool {
    is_interval(&g.complement())
}

/// Whether every connected component is co-interval. This characterizes the
/// disjoint unions of co-interval graphs: a co-interval graph has at most
/// one component with edges (two would give an induced two-edge matching),
/// so the component-wise test is exact.
pub fn is_union_co_interval(g: &Graph) -> bool {
    g.components()
        .iter()
        .all(|c| is_co_interval(&g.induced_subgraph(c).expect("components are in range")))
}

/// A closed integer interval per vertex; intervals intersect iff the
/// corresponding vertices are adjacent in the represented graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalModel {
    /// `intervals[v] = (l, r)` with `l <= r`.
    pub intervals: Vec<(u32, u32)>,
}

impl IntervalModel {
    pub fn n(&self) -> usize {
        self.intervals.len()
    }
}

pub fn intersection_graph_of_intervals(m: &IntervalModel) -> Graph {
    let n = m.n();
    let mut edges = Vec::new();
    for u in 0..n {
        let (lu, ru) = m.intervals[u];
        for v in u + 1..n {
            let (lv, rv) = m.intervals[v];
            if lu <= rv && lv <= ru {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("model indices are in range")
}

/// Builds an interval model of `g`, or fails with [`Error::NotInterval`].
///
/// Maximal cliques of the non-isolated part are arranged so that every
/// vertex's cliques are consecutive (the search tries cliques in sorted
/// order, so the first arrangement found is deterministic); vertex `v` spans
/// the 1-based positions of its cliques. Isolated vertices get fresh
/// singleton positions past the last clique.
pub fn interval_model(g: &Graph) -> Result<IntervalModel> {
    if !is_interval(g) {
        return Err(Error::NotInterval);
    }
    let n = g.n();
    let isolated: Vec<usize> = (0..n).filter(|&v| g.degree(v) == 0).collect();
    let mut cliques = maximal_cliques(g);
    cliques.retain(|c| c.len() > 1 || !isolated.contains(&c[0]));
    cliques.sort();
    let arrangement = consecutive_arrangement(&cliques, n)
        .expect("interval graphs admit a consecutive clique arrangement");
    let mut intervals = vec![(0u32, 0u32); n];
    for (pos, ci) in arrangement.iter().enumerate() {
        for &v in &cliques[*ci] {
            let p = (pos + 1) as u32;
            let (l, r) = &mut intervals[v];
            if *l == 0 {
                *l = p;
            }
            *r = p;
        }
    }
    for (offset, &v) in isolated.iter().enumerate() {
        let p = (cliques.len() + 1 + offset) as u32;
        intervals[v] = (p, p);
    }
    Ok(IntervalModel { intervals })
}

/// All maximal cliques, each as a sorted vertex list (Bron-Kerbosch with
/// pivoting).
fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    let mut stack = vec![(0u64, full, 0u64)];
    while let Some((r, p, x)) = stack.pop() {
        if p == 0 && x == 0 {
            let clique: Vec<usize> = (0..n).filter(|&v| r >> v & 1 == 1).collect();
            out.push(clique);
            continue;
        }
        // Pivot on a vertex covering the most of P.
        let mut pivot = usize::MAX;
        let mut best = usize::MAX;
        let mut m = p | x;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            let uncovered = (p & !g.neighbors(v)).count_ones() as usize;
            if uncovered < best {
                best = uncovered;
                pivot = v;
            }
        }
        let mut candidates = p & !g.neighbors(pivot);
        let mut p = p;
        let mut x = x;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            stack.push((r | 1 << v, p & g.neighbors(v), x & g.neighbors(v)));
            p &= !(1u64 << v);
            x |= 1 << v;
        }
    }
    out
}

/// Orders clique indices so each vertex's cliques are consecutive, trying
/// cliques in index order so the first (lexicographically least) valid
/// arrangement is returned.
fn consecutive_arrangement(cliques: &[Vec<usize>], n: usize) -> Option<Vec<usize>> {
    let k = cliques.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let membership: Vec<u64> = cliques
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let _ = n;
    let mut order = Vec::with_capacity(k);
    let mut used = vec![false; k];
    // closed: vertices that have appeared and then stopped; they may not
    // reappear in any later clique.
    fn place(
        cliques: &[Vec<usize>],
        membership: &[u64],
        order: &mut Vec<usize>,
        used: &mut [bool],
        open: u64,
        closed: u64,
    ) -> bool {
        if order.len() == cliques.len() {
            return true;
        }
        for i in 0..cliques.len() {
            if used[i] || membership[i] & closed != 0 {
                continue;
            }
            let next_open = membership[i];
            let next_closed = closed | (open & !next_open);
            used[i] = true;
            order.push(i);
            if place(cliques, membership, order, used, next_open, next_closed) {
                return true;
            }
            order.pop();
            used[i] = false;
        }
        false
    }
    if place(cliques, &membership, &mut order, &mut used, 0, 0) {
        Some(order)
    } else {
        None
    }
}
