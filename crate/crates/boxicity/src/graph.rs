//! Finite simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Vertices are `0..n`. Adjacency is stored as one bitmask per vertex, which
//! keeps the operations the cover searches lean on (complement, induced
//! subgraph, neighborhood tests) branch-free and cheap. Everything in this
//! module is a pure function of the input graph.

use crate::error::{Error, Result};

/// Hard cap on the number of vertices. graph6 single-byte sizes stop at 62
/// and every exact-search guarantee in this crate is far below that, so a
/// single machine word per adjacency row covers the whole supported range.
pub const MAX_VERTICES: usize = 64;

/// An immutable simple graph. Two graphs compare equal exactly when they have
/// the same vertex count and the same edge set under the identity labeling.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// A subset of the vertices of some graph, as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} out of range for a VertexSet");
        self.0 |= 1 << v;
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.0;
        (0..MAX_VERTICES).filter(move |v| bits >> v & 1 == 1)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        let mut s = VertexSet::empty();
        for v in vs {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Edges may appear in either
    /// orientation and repeats are collapsed; self-loops are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut rest = self.adj[u] >> (u + 1).min(63);
            // shifting by u+1 == 64 is UB-adjacent; n <= 64 so u+1 hits 64
            // only for the last vertex, whose upper neighbors are none.
            if u + 1 >= 64 {
                rest = 0;
            }
            let mut m = rest;
            while m != 0 {
                let off = m.trailing_zeros() as usize;
                out.push((u, u + 1 + off));
                m &= m - 1;
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    fn full_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// The complement on the same vertex set: edges and non-edges swap.
    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// The subgraph induced by `s`, relabeled so the kept vertices appear in
    /// increasing order as `0..s.len()`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        let keep: Vec<usize> = s.iter().collect();
        if let Some(&v) = keep.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        let mut g = Graph::empty(keep.len())?;
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union; the k-th summand occupies a contiguous block of ids
    /// starting at the sum of the orders of the earlier summands.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        let n: usize = parts.iter().map(|g| g.n).sum();
        let mut out = Graph::empty(n)?;
        let mut base = 0;
        for g in parts {
            for (u, v) in g.edges() {
                out.adj[base + u] |= 1 << (base + v);
                out.adj[base + v] |= 1 << (base + u);
            }
            base += g.n;
        }
        Ok(out)
    }

    /// Identifies the non-adjacent vertices `u` and `v` into one vertex that
    /// inherits both neighborhoods. The merged vertex keeps the smaller id;
    /// ids above the larger one shift down by one.
    pub fn identify_nonadjacent(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::IdentifyAdjacent(u, v));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let relabel = |w: usize| if w > drop { w - 1 } else { w };
        let mut g = Graph::empty(self.n - 1)?;
        for (a, b) in self.edges() {
            let a = if a == drop { keep } else { a };
            let b = if b == drop { keep } else { b };
            let (a, b) = (relabel(a), relabel(b));
            if a != b {
                g.adj[a] |= 1 << b;
                g.adj[b] |= 1 << a;
            }
        }
        Ok(g)
    }

    /// The line graph: one vertex per edge of `self` (in lexicographic edge
    /// order), adjacent when the underlying edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        if edges.len() > MAX_VERTICES {
            return Err(Error::TooManyVertices(edges.len()));
        }
        let mut g = Graph::empty(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// One BFS per start vertex; a non-tree edge seen at depths `d(x)` and
    /// `d(y)` closes a walk of length `d(x) + d(y) + 1` through the root,
    /// and the minimum of that quantity over all roots is exact.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                let mut m = self.adj[x];
                while m != 0 {
                    let y = m.trailing_zeros() as usize;
                    m &= m - 1;
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push(y);
                    } else if parent[x] != y && parent[y] != x {
                        let len = dist[x] + dist[y] + 1;
                        if best.is_none_or(|b| len < b) {
                            best = Some(len);
                        }
                    }
                }
            }
        }
        best
    }

    /// Whether the graph contains two edges that are vertex-disjoint with no
    /// edge between their endpoints (an induced matching on two edges).
    pub fn has_induced_two_matching(&self) -> bool {
        let edges = self.edges();
        for i in 0..edges.len() {
            let (a, b) = edges[i];
            for &(c, d) in &edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let cross = self.has_edge(a, c)
                    || self.has_edge(a, d)
                    || self.has_edge(b, c)
                    || self.has_edge(b, d);
                if !cross {
                    return true;
                }
            }
        }
        false
    }

    /// Vertex sets of the connected components, each sorted, in order of
    /// their smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let mut grown = comp;
                let mut m = comp;
                while m != 0 {
                    let v = m.trailing_zeros() as usize;
                    m &= m - 1;
                    grown |= self.adj[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
