//! Folded covers: a single class-member split graph mapped onto the host.
//!
//! A folded cover realizes a cover with one global bag by splitting each
//! host vertex into an independent fiber of copies. The fold map must be an
//! edge-surjective homomorphism, so every host edge is witnessed by at
//! least one split edge and no split edge lands outside the host. The
//! locality of such a cover is the largest fiber.
//!
//! [`folded_search_bounded`] is a deliberately tiny brute-force oracle used
//! to cross-check the theory at small scale; it is not a solver.

use crate::cover::{verify_cover, CoCover, CoverClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::interval::{is_co_interval, is_union_co_interval};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::HashSet;

/// Hard cap on split-graph vertices in [`folded_search_bounded`]: the space
/// of splits is doubly exponential, and the search exists only to check the
/// folded parameters at tiny scale.
pub const MAX_FOLDED_TOTAL: usize = 12;

/// A split graph together with the fold map onto the host's vertices.
/// Entry `fold_map[u]` is the host vertex that split vertex `u` copies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldedCover {
    pub split_graph: Graph,
    pub fold_map: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct FoldedCoverWire {
    split_graph6: String,
    fold_map: Vec<usize>,
}

impl Serialize for FoldedCover {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = FoldedCoverWire {
            split_graph6: write_graph6(&self.split_graph).map_err(S::Error::custom)?,
            fold_map: self.fold_map.clone(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FoldedCover {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = FoldedCoverWire::deserialize(deserializer)?;
        Ok(FoldedCover {
            split_graph: parse_graph6(&wire.split_graph6).map_err(D::Error::custom)?,
            fold_map: wire.fold_map,
        })
    }
}

/// Checks every folded-cover invariant against `host` and returns the
/// locality, i.e. the largest fiber size. The first violated invariant is
/// reported: map shape, surjectivity, fiber independence, homomorphism,
/// edge surjectivity, then class membership of the split graph.
pub fn verify_folded_cover(host: &Graph, f: &FoldedCover, class: CoverClass) -> Result<usize> {
    let n = f.split_graph.n();
    if f.fold_map.len() != n {
        return Err(Error::FoldMapLength {
            got: f.fold_map.len(),
            expected: n,
        });
    }
    for (v, &image) in f.fold_map.iter().enumerate() {
        if image >= host.n() {
            return Err(Error::FoldMapRange { v, image });
        }
    }
    let mut fiber_sizes = vec![0usize; host.n()];
    for &image in &f.fold_map {
        fiber_sizes[image] += 1;
    }
    if let Some(v) = fiber_sizes.iter().position(|&c| c == 0) {
        return Err(Error::FoldMapNotSurjective(v));
    }
    let mut images: HashSet<(usize, usize)> = HashSet::new();
    for (u, v) in f.split_graph.edges() {
        let (fu, fv) = (f.fold_map[u], f.fold_map[v]);
        if fu == fv {
            return Err(Error::FiberNotIndependent(u, v));
        }
        if !host.has_edge(fu, fv) {
            return Err(Error::NotHomomorphism { u, v, fu, fv });
        }
        images.insert((fu.min(fv), fu.max(fv)));
    }
    if let Some(&e) = host.edges().iter().find(|e| !images.contains(e)) {
        return Err(Error::EdgeNotSurjective(e));
    }
    let member = match class {
        CoverClass::CoInterval => is_co_interval(&f.split_graph),
        CoverClass::UnionCoInterval => is_union_co_interval(&f.split_graph),
    };
    if !member {
        return Err(Error::SplitClassFailure);
    }
    Ok(fiber_sizes.into_iter().max().unwrap_or(0))
}

/// Builds the folded cover whose split graph is the disjoint union of the
/// bags' spanned subgraphs, each copy folding back to its original vertex.
/// Host vertices outside every bag keep a single isolated copy so the fold
/// stays onto. The result verifies under the union class with locality
/// `max(1, locality of c)` whenever the host has a vertex.
pub fn local_cover_to_folded(c: &CoCover) -> Result<FoldedCover> {
    verify_cover(c)?;
    let mut pieces: Vec<Graph> = Vec::new();
    let mut fold_map: Vec<usize> = Vec::new();
    for i in 0..c.bags.len() {
        let support: Vec<usize> = c.bag_support(i).iter().collect();
        pieces.push(c.spanned_subgraph(i)?);
        fold_map.extend(support);
    }
    let mut seen = vec![false; c.host.n()];
    for &v in &fold_map {
        seen[v] = true;
    }
    for (v, &covered) in seen.iter().enumerate() {
        if !covered {
            pieces.push(Graph::empty(1)?);
            fold_map.push(v);
        }
    }
    let split_graph = Graph::disjoint_union(&pieces)?;
    Ok(FoldedCover {
        split_graph,
        fold_map,
    })
}

/// Exhaustive search for a folded cover of `host` with every fiber of size
/// at most `max_s` and at most `max_total_vertices` split vertices in all.
/// Returns the minimum locality admitting a class-member split graph
/// together with a verified witness, or `None` if nothing fits the bounds.
///
/// Two plain-class situations need no enumeration at all: a split edge over
/// each edge of an induced two-matching stays an induced two-matching in
/// the split graph, and a connected split subgraph folds into a single host
/// component, so hosts with an induced two-matching or several edge-bearing
/// components admit no co-interval split whatsoever.
pub fn folded_search_bounded(
    host: &Graph,
    max_s: usize,
    max_total_vertices: usize,
    class: CoverClass,
) -> Result<Option<(usize, FoldedCover)>> {
    if max_total_vertices > MAX_FOLDED_TOTAL {
        return Err(Error::SizeLimit(
            "folded search is capped at 12 split vertices",
        ));
    }
    let n = host.n();
    if max_s == 0 || n > max_total_vertices {
        return Ok(None);
    }
    if n == 0 {
        let fc = FoldedCover {
            split_graph: Graph::empty(0).expect("zero vertices fit"),
            fold_map: Vec::new(),
        };
        return Ok(Some((0, fc)));
    }
    if class == CoverClass::CoInterval {
        if host.has_induced_two_matching() {
            return Ok(None);
        }
        let bearing = host.components().iter().filter(|c| c.len() >= 2).count();
        if bearing > 1 {
            return Ok(None);
        }
    }
    for s in 1..=max_s {
        let mut sizes = vec![1usize; n];
        if let Some(fc) = vector_search(host, class, s, max_total_vertices, &mut sizes, 0, n) {
            let verified = verify_folded_cover(host, &fc, class)
                .expect("search produced an invalid folded cover");
            assert_eq!(verified, s, "witness does not attain the claimed locality");
            return Ok(Some((s, fc)));
        }
    }
    Ok(None)
}

/// Enumerates fiber-size vectors with maximum exactly `s` (smaller maxima
/// were covered by earlier iterations) and tries each.
fn vector_search(
    host: &Graph,
    class: CoverClass,
    s: usize,
    max_total: usize,
    sizes: &mut Vec<usize>,
    pos: usize,
    total: usize,
) -> Option<FoldedCover> {
    if pos == sizes.len() {
        if sizes.iter().max() != Some(&s) {
            return None;
        }
        return try_vector(host, class, sizes);
    }
    for f in 1..=s {
        let new_total = total + f - 1;
        if new_total > max_total {
            break;
        }
        sizes[pos] = f;
        if let Some(fc) = vector_search(host, class, s, max_total, sizes, pos + 1, new_total) {
            return Some(fc);
        }
    }
    sizes[pos] = 1;
    None
}

struct SplitSearch<'a> {
    host: &'a Graph,
    class: CoverClass,
    host_edges: Vec<(usize, usize)>,
    /// Fiber of each host vertex, as split-vertex ranges.
    offsets: Vec<usize>,
    sizes: Vec<usize>,
    total: usize,
    /// Host vertex of each split vertex.
    fold: Vec<usize>,
    /// Split edges chosen so far.
    edges: Vec<(usize, usize)>,
}

fn try_vector(host: &Graph, class: CoverClass, sizes: &[usize]) -> Option<FoldedCover> {
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut fold = Vec::new();
    let mut total = 0;
    for (v, &f) in sizes.iter().enumerate() {
        offsets.push(total);
        total += f;
        fold.extend(std::iter::repeat_n(v, f));
    }
    let mut search = SplitSearch {
        host,
        class,
        host_edges: host.edges(),
        offsets,
        sizes: sizes.to_vec(),
        total,
        fold,
        edges: Vec::new(),
    };
    search.assign(0)
}

impl SplitSearch<'_> {
    fn fiber(&self, v: usize) -> std::ops::Range<usize> {
        self.offsets[v]..self.offsets[v] + self.sizes[v]
    }

    /// A split-vertex pair can still become an edge if it is already one or
    /// if it lies over a host edge not yet processed.
    fn cross_alive(&self, a: usize, b: usize, next_host_edge: usize) -> bool {
        let (fa, fb) = (self.fold[a], self.fold[b]);
        if fa == fb || !self.host.has_edge(fa, fb) {
            return false;
        }
        let key = (fa.min(fb), fa.max(fb));
        let idx = self
            .host_edges
            .iter()
            .position(|&e| e == key)
            .expect("host edge is listed");
        if idx >= next_host_edge {
            return true;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        self.edges.contains(&(lo, hi))
    }

    /// Whether adding split edge `(a, b)` while processing host edge `p`
    /// creates a pair of split edges certain to stay an induced
    /// two-matching.
    fn forces_two_matching(&self, a: usize, b: usize, p: usize) -> bool {
        let relevant: Vec<(usize, usize)> = match self.class {
            CoverClass::CoInterval => self.edges.clone(),
            CoverClass::UnionCoInterval => self.component_edges(a, b),
        };
        for &(c, d) in &relevant {
            if c == a || c == b || d == a || d == b {
                continue;
            }
            let alive = self.cross_alive(a, c, p + 1)
                || self.cross_alive(a, d, p + 1)
                || self.cross_alive(b, c, p + 1)
                || self.cross_alive(b, d, p + 1);
            if !alive {
                return true;
            }
        }
        false
    }

    /// Current split edges connected to `(a, b)` once that edge is added.
    fn component_edges(&self, a: usize, b: usize) -> Vec<(usize, usize)> {
        let mut verts = vec![false; self.total];
        verts[a] = true;
        verts[b] = true;
        let mut comp = Vec::new();
        let mut used = vec![false; self.edges.len()];
        loop {
            let mut grew = false;
            for (i, &(c, d)) in self.edges.iter().enumerate() {
                if !used[i] && (verts[c] || verts[d]) {
                    used[i] = true;
                    verts[c] = true;
                    verts[d] = true;
                    comp.push((c, d));
                    grew = true;
                }
            }
            if !grew {
                return comp;
            }
        }
    }

    fn assign(&mut self, p: usize) -> Option<FoldedCover> {
        if p == self.host_edges.len() {
            let split = Graph::new(self.total, self.edges.iter().copied())
                .expect("split vertices are in range");
            let member = match self.class {
                CoverClass::CoInterval => is_co_interval(&split),
                CoverClass::UnionCoInterval => is_union_co_interval(&split),
            };
            if member {
                return Some(FoldedCover {
                    split_graph: split,
                    fold_map: self.fold.clone(),
                });
            }
            return None;
        }
        let (x, y) = self.host_edges[p];
        let pairs: Vec<(usize, usize)> = self
            .fiber(x)
            .flat_map(|a| self.fiber(y).map(move |b| (a.min(b), a.max(b))))
            .collect();
        let mut masks: Vec<u32> = (1..1u32 << pairs.len()).collect();
        masks.sort_by_key(|m| m.count_ones());
        'next_mask: for mask in masks {
            let before = self.edges.len();
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 0 {
                    continue;
                }
                if self.forces_two_matching(a, b, p) {
                    self.edges.truncate(before);
                    continue 'next_mask;
                }
                self.edges.push((a, b));
            }
            if let Some(fc) = self.assign(p + 1) {
                return Some(fc);
            }
            self.edges.truncate(before);
        }
        None
    }
}
