//! Generators for the graph families the tests and examples revolve around.
//!
//! All generators are deterministic with fixed labelings, so expected values
//! in tests can name vertices concretely.

use crate::cover::{CoCover, CoverClass};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `k` disjoint edges on `2k` vertices: edge `i` joins `2i` and `2i + 1`.
pub fn matching(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::FamilyParameter("matching requires k >= 1"));
    }
    Graph::new(2 * k, (0..k).map(|i| (2 * i, 2 * i + 1)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::FamilyParameter("complete requires n >= 1"));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::FamilyParameter("cycle requires n >= 3"));
    }
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The octahedron: complement of a three-edge matching, so the non-edges
/// are exactly the antipodal pairs (0,1), (2,3), (4,5).
pub fn octahedron() -> Graph {
    matching(3).expect("3 >= 1").complement()
}

/// The line graph of the complete graph on `n` vertices. Its vertices are
/// the edges of K_n in lexicographic order.
pub fn line_of_complete(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::FamilyParameter("line_of_complete requires n >= 2"));
    }
    complete(n)?.line_graph()
}

/// The Petersen graph, realized as the complement of the line graph of K_5.
pub fn petersen() -> Graph {
    line_of_complete(5).expect("5 is in range").complement()
}

/// Covers the line graph of K_n by the `n` cliques formed by the K_n-edges
/// through each fixed vertex. Every host edge lands in exactly one bag (the
/// shared endpoint of its two K_n-edges) and every host vertex, being a
/// K_n-edge, lies in exactly the two bags of its endpoints, so the cover
/// verifies with globality `n` and locality 2 (for n >= 3; K_2 has a
/// one-vertex line graph and gets the empty cover).
pub fn star_clique_cover(n: usize) -> Result<CoCover> {
    let host = line_of_complete(n)?;
    let kn_edges = complete(n)?.edges();
    let mut bags = Vec::new();
    for i in 0..n {
        let members: Vec<usize> = (0..kn_edges.len())
            .filter(|&e| kn_edges[e].0 == i || kn_edges[e].1 == i)
            .collect();
        let mut bag = Vec::new();
        for (a, &e) in members.iter().enumerate() {
            for &f in &members[a + 1..] {
                bag.push((e.min(f), e.max(f)));
            }
        }
        if !bag.is_empty() {
            bags.push(bag);
        }
    }
    Ok(CoCover {
        host,
        bags,
        class: CoverClass::CoInterval,
    })
}

/// The point-line incidence graph of the projective plane of prime order
/// `q`: vertices `0..q^2+q+1` are the points and the rest are the lines,
/// both enumerated as lexicographically ordered normalized coordinate
/// triples over GF(q) (first nonzero coordinate 1); a point is adjacent to
/// a line when their dot product vanishes mod q. The result is
/// (q+1)-regular with girth 6.
pub fn projective_incidence(q: usize) -> Result<Graph> {
    if q < 2 || !is_prime(q) {
        return Err(Error::FamilyParameter(
            "projective_incidence requires a prime q",
        ));
    }
    let reps = normalized_triples(q);
    let n = reps.len();
    debug_assert_eq!(n, q * q + q + 1);
    if 2 * n > crate::graph::MAX_VERTICES {
        return Err(Error::TooManyVertices(2 * n));
    }
    let mut edges = Vec::new();
    for (p, point) in reps.iter().enumerate() {
        for (l, line) in reps.iter().enumerate() {
            let dot: usize = point.iter().zip(line).map(|(a, b)| a * b).sum();
            if dot.is_multiple_of(q) {
                edges.push((p, n + l));
            }
        }
    }
    Graph::new(2 * n, edges)
}

fn is_prime(q: usize) -> bool {
    q >= 2
        && (2..q)
            .take_while(|d| d * d <= q)
            .all(|d| !q.is_multiple_of(d))
}

/// One representative per nonzero triple up to scalar multiples, in
/// lexicographic order: (0,0,1), (0,1,b), (1,a,b).
fn normalized_triples(q: usize) -> Vec<[usize; 3]> {
    let mut reps = vec![[0, 0, 1]];
    for b in 0..q {
        reps.push([0, 1, b]);
    }
    for a in 0..q {
        for b in 0..q {
            reps.push([1, a, b]);
        }
    }
    reps.sort();
    reps
}
