//! Acyclic colorings and the representation they induce.
//!
//! An acyclic coloring is a proper vertex coloring in which every two
//! color classes induce a forest. The smallest number of colors admitting
//! one bounds local boxicity: each of the induced forests has a
//! 2-dimensional box representation, and concatenating them over all
//! color pairs represents the whole graph with every vertex bounded in at
//! most `2 * (k - 1)` coordinates.

use crate::boxes::{product_of_representations, BoxRepresentation, Extent};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use serde::{Deserialize, Serialize};

/// Exhaustive coloring search is limited to this many vertices.
pub const MAX_COLORING_VERTICES: usize = 10;

/// A proper coloring with colors `0..k` in which every two color classes
/// induce a forest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcyclicColoring {
    pub k: usize,
    pub colors: Vec<usize>,
}

impl AcyclicColoring {
    /// Checks the coloring against `g`: one color per vertex, colors in
    /// range, no monochromatic edge, no bichromatic cycle.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.colors.len() != g.n() {
            return Err(Error::ColoringLength {
                got: self.colors.len(),
                n: g.n(),
            });
        }
        if let Some(v) = (0..g.n()).find(|&v| self.colors[v] >= self.k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {} outside 0..{}",
                self.colors[v], self.k
            )));
        }
        for (u, v) in g.edges() {
            if self.colors[u] == self.colors[v] {
                return Err(Error::InvalidColoring(format!(
                    "edge ({u}, {v}) is monochromatic in color {}",
                    self.colors[u]
                )));
            }
        }
        for i in 0..self.k {
            for j in i + 1..self.k {
                if !pair_class_is_forest(g, &self.colors, i, j) {
                    return Err(Error::InvalidColoring(format!(
                        "color classes {i} and {j} induce a cycle"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Whether the subgraph induced by the vertices colored `i` or `j` (among
/// those already colored, when `colors` is a partial assignment padded
/// with `usize::MAX`) is a forest, by union-find over its edges.
fn pair_class_is_forest(g: &Graph, colors: &[usize], i: usize, j: usize) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (u, v) in g.edges() {
        let (cu, cv) = (colors[u], colors[v]);
        if (cu == i || cu == j) && (cv == i || cv == j) {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            if ru == rv {
                return false;
            }
            parent[ru] = rv;
        }
    }
    true
}

/// Whether extending the partial assignment by `colors[v] = c` keeps every
/// bicolored induced subgraph acyclic. Only pairs containing `c` can gain
/// edges, so only those are rechecked.
fn extension_is_acyclic(g: &Graph, colors: &[usize], v: usize, c: usize, k: usize) -> bool {
    let mut trial = colors.to_vec();
    trial[v] = c;
    (0..k).filter(|&j| j != c).all(|j| {
        let (i, j) = if c < j { (c, j) } else { (j, c) };
        pair_class_is_forest(g, &trial, i, j)
    })
}

fn search(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize, used: usize) -> bool {
    if v == g.n() {
        return true;
    }
    let ceiling = k.min(used + 1);
    for c in 0..ceiling {
        if (0..v).any(|u| g.has_edge(u, v) && colors[u] == c) {
            continue;
        }
        if !extension_is_acyclic(g, colors, v, c, k) {
            continue;
        }
        colors[v] = c;
        if search(g, k, colors, v + 1, used.max(c + 1)) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}

/// The smallest `k` admitting an acyclic coloring, with a witness, found
/// by exhaustive search over canonical colorings (each vertex may open at
/// most one fresh color). Limited to [`MAX_COLORING_VERTICES`] vertices.
pub fn acyclic_chromatic_number(g: &Graph) -> Result<(usize, AcyclicColoring)> {
    if g.n() > MAX_COLORING_VERTICES {
        return Err(Error::SizeLimit(
            "acyclic coloring search handles at most 10 vertices",
        ));
    }
    if g.n() == 0 {
        let witness = AcyclicColoring {
            k: 0,
            colors: vec![],
        };
        return Ok((0, witness));
    }
    for k in 1..=g.n() {
        let mut colors = vec![usize::MAX; g.n()];
        if search(g, k, &mut colors, 0, 0) {
            let witness = AcyclicColoring { k, colors };
            witness
                .validate(g)
                .expect("search result is a valid acyclic coloring");
            return Ok((k, witness));
        }
    }
    unreachable!("assigning every vertex its own color is always acyclic")
}

/// Pads a representation of the subgraph induced on `verts` to exactly two
/// coordinates over all `n` vertices: vertices outside `verts` get two
/// full-line extents, and a representation narrower than two coordinates
/// gains full-line columns.
fn embed_pair_factor(n: usize, verts: &[usize], rep: &BoxRepresentation) -> BoxRepresentation {
    debug_assert!(rep.d <= 2);
    let mut boxes = vec![vec![Extent::Full; 2]; n];
    for (row, &v) in rep.boxes.iter().zip(verts) {
        for (i, e) in row.iter().enumerate() {
            boxes[v][i] = *e;
        }
    }
    BoxRepresentation { d: 2, boxes }
}

/// The constructive bound behind `box_l(h) <= 2 * (chi_a(h) - 1)`: for
/// each pair of color classes, the induced forest gets an exact box
/// representation in at most two dimensions (forests have boxicity at most
/// two), padded to exactly two coordinates and extended by full-line
/// extents elsewhere; the factors are concatenated in lexicographic pair
/// order. The result has dimension `k * (k - 1)` and locality at most
/// `2 * (k - 1)`, and its intersection graph is `g` whenever `g` has an
/// edge or at most one vertex; a single color class on two or more
/// vertices yields no pairs, leaving the zero-dimensional representation
/// of a complete graph.
pub fn acyclic_coloring_to_boxes(g: &Graph, col: &AcyclicColoring) -> Result<BoxRepresentation> {
    col.validate(g)?;
    let n = g.n();
    let mut factors = Vec::new();
    for i in 0..col.k {
        for j in i + 1..col.k {
            let members: Vec<usize> = (0..n)
                .filter(|&v| col.colors[v] == i || col.colors[v] == j)
                .collect();
            let set = VertexSet::from_iter(members.iter().copied());
            let forest = g.induced_subgraph(&set)?;
            let sol = crate::solver::boxicity(&forest);
            debug_assert!(sol.value <= 2, "a forest needs at most two dimensions");
            let small = crate::boxes::local_cover_to_boxes(&sol.witness, &forest)?;
            factors.push(embed_pair_factor(n, &members, &small));
        }
    }
    if factors.is_empty() {
        return Ok(BoxRepresentation {
            d: 0,
            boxes: vec![vec![]; n],
        });
    }
    let rep = product_of_representations(&factors)?;
    debug_assert_eq!(rep.d, col.k * (col.k - 1));
    debug_assert!(rep.locality() <= 2 * (col.k - 1));
    Ok(rep)
}
