//! Independent brute-force oracles and enumeration helpers shared by the
//! integration tests. Everything here recomputes answers from first
//! principles so the library's search and recognition code can be checked
//! against implementations with no shared machinery. Not every test
//! target uses every helper.
#![allow(dead_code)]

use boxicity::cover::CoverClass;
use boxicity::graph::Graph;
use boxicity::interval::{is_co_interval, is_union_co_interval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

pub fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges.iter().copied()).unwrap()
}

/// All vertex pairs of an n-vertex graph in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labeled graph on `n` vertices, one per edge-set bitmask.
pub fn all_labeled_graphs(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    (0u64..1 << ps.len())
        .map(|mask| {
            let edges = ps
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..n).collect();
    heap_permute(&mut items, n, &mut out);
    out
}

fn heap_permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k.is_multiple_of(2) {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

fn edge_mask_under(g: &Graph, perm: &[usize], ps: &[(usize, usize)]) -> u64 {
    let mut mask = 0u64;
    for (i, &(u, v)) in ps.iter().enumerate() {
        if g.has_edge(perm[u], perm[v]) {
            mask |= 1 << i;
        }
    }
    mask
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, found by brute-force canonical forms (minimum edge bitmask
/// over all vertex permutations).
pub fn iso_classes(n: usize) -> Vec<Graph> {
    let ps = pairs(n);
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for graph in all_labeled_graphs(n) {
        let canon = perms
            .iter()
            .map(|p| edge_mask_under(&graph, p, &ps))
            .min()
            .unwrap();
        if seen.insert(canon) {
            let edges = ps
                .iter()
                .enumerate()
                .filter(|(i, _)| canon >> i & 1 == 1)
                .map(|(_, &e)| e);
            out.push(Graph::new(n, edges).unwrap());
        }
    }
    out
}

/// Interval recognition from the ordering characterization: a graph is
/// interval iff its vertices admit a linear order where `x < y < z` and
/// `xz` an edge force `xy` an edge (order intervals by left endpoint).
pub fn interval_oracle(graph: &Graph) -> bool {
    let n = graph.n();
    if n <= 1 {
        return true;
    }
    permutations(n).iter().any(|perm| {
        for x in 0..n {
            for y in x + 1..n {
                for z in y + 1..n {
                    if graph.has_edge(perm[x], perm[z]) && !graph.has_edge(perm[x], perm[y]) {
                        return false;
                    }
                }
            }
        }
        true
    })
}

fn class_member(spanned: &Graph, class: CoverClass) -> bool {
    match class {
        CoverClass::CoInterval => is_co_interval(spanned),
        CoverClass::UnionCoInterval => is_union_co_interval(spanned),
    }
}

struct BagPool {
    /// Edge bitmask of each class-member bag.
    masks: Vec<u64>,
    /// Vertex support bitmask of each bag.
    supports: Vec<u64>,
}

/// Every nonempty edge subset whose spanned subgraph lies in the class.
fn member_bags(host: &Graph, class: CoverClass) -> BagPool {
    let edges = host.edges();
    let m = edges.len();
    assert!(m <= 20, "oracle pool enumeration is for small hosts");
    let mut masks = Vec::new();
    let mut supports = Vec::new();
    for mask in 1u64..1 << m {
        let bag: Vec<(usize, usize)> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        let spanned = Graph::new(host.n(), bag.iter().copied()).unwrap();
        if class_member(&spanned, class) {
            let mut support = 0u64;
            for &(u, v) in &bag {
                support |= 1 << u;
                support |= 1 << v;
            }
            masks.push(mask);
            supports.push(support);
        }
    }
    BagPool { masks, supports }
}

fn cover_exists(pool: &BagPool, full: u64, covered: u64, bags_left: usize) -> bool {
    if covered == full {
        return true;
    }
    if bags_left == 0 {
        return false;
    }
    let first = (!covered & full).trailing_zeros();
    pool.masks
        .iter()
        .filter(|mask| *mask >> first & 1 == 1)
        .any(|&mask| cover_exists(pool, full, covered | mask, bags_left - 1))
}

/// Minimum number of class-member bags covering the host's edges, by
/// exhaustive set-cover search over all member edge subsets.
pub fn globality_oracle(host: &Graph, class: CoverClass) -> usize {
    let m = host.edge_count();
    if m == 0 {
        return 0;
    }
    let pool = member_bags(host, class);
    let full = (1u64 << m) - 1;
    (1..=m)
        .find(|&d| cover_exists(&pool, full, 0, d))
        .expect("single-edge bags cover everything")
}

fn local_cover_exists(
    pool: &BagPool,
    full: u64,
    covered: u64,
    loads: &mut [usize],
    s: usize,
) -> bool {
    if covered == full {
        return true;
    }
    let first = (!covered & full).trailing_zeros();
    for (i, &mask) in pool.masks.iter().enumerate() {
        if mask >> first & 1 == 0 {
            continue;
        }
        let support = pool.supports[i];
        let ok = loads
            .iter()
            .enumerate()
            .all(|(v, &load)| support >> v & 1 == 0 || load < s);
        if !ok {
            continue;
        }
        for (v, load) in loads.iter_mut().enumerate() {
            if support >> v & 1 == 1 {
                *load += 1;
            }
        }
        if local_cover_exists(pool, full, covered | mask, loads, s) {
            return true;
        }
        for (v, load) in loads.iter_mut().enumerate() {
            if support >> v & 1 == 1 {
                *load -= 1;
            }
        }
    }
    false
}

/// Minimum over all class-member covers of the maximum per-vertex load,
/// by exhaustive search over the same member-bag pool.
pub fn locality_oracle(host: &Graph, class: CoverClass) -> usize {
    let m = host.edge_count();
    if m == 0 {
        return 0;
    }
    let pool = member_bags(host, class);
    let full = (1u64 << m) - 1;
    (1..=m)
        .find(|&s| {
            let mut loads = vec![0usize; host.n()];
            local_cover_exists(&pool, full, 0, &mut loads, s)
        })
        .expect("single-edge bags bound every load by the degree")
}

/// Acyclic chromatic number by enumerating every coloring with colors
/// `0..k` for growing `k`: proper, and every two color classes induce a
/// forest (checked by union-find).
pub fn chi_a_oracle(graph: &Graph) -> usize {
    let n = graph.n();
    if n == 0 {
        return 0;
    }
    let edges = graph.edges();
    (1..=n)
        .find(|&k| {
            let mut colors = vec![0usize; n];
            loop {
                if coloring_is_acyclic(&edges, &colors, k, n) {
                    return true;
                }
                let mut pos = 0;
                loop {
                    if pos == n {
                        return false;
                    }
                    colors[pos] += 1;
                    if colors[pos] < k {
                        break;
                    }
                    colors[pos] = 0;
                    pos += 1;
                }
            }
        })
        .expect("assigning every vertex its own color is acyclic")
}

fn coloring_is_acyclic(edges: &[(usize, usize)], colors: &[usize], k: usize, n: usize) -> bool {
    for &(u, v) in edges {
        if colors[u] == colors[v] {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let bicolored: Vec<(usize, usize)> = edges
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    (colors[u] == i || colors[u] == j) && (colors[v] == i || colors[v] == j)
                })
                .collect();
            if !is_forest(n, &bicolored) {
                return false;
            }
        }
    }
    true
}

/// Whether the given edges are acyclic, by union-find.
pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(u, v) in edges {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// The fixed-seed test sample: `count` graphs, cycling through the given
/// vertex counts, each edge present with probability one half.
pub fn sample_graphs(seed: u64, count: usize, ns: &[usize]) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = ns[i % ns.len()];
            let edges = pairs(n).into_iter().filter(|_| rng.gen_bool(0.5));
            Graph::new(n, edges).unwrap()
        })
        .collect()
}

/// The seed used by every sampled acceptance and property check.
pub const SAMPLE_SEED: u64 = 0xB0C5;
