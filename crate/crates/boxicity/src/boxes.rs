//! Axis-parallel box representations and their correspondence with covers.
//!
//! A d-dimensional box representation assigns each vertex one extent per
//! coordinate, either a bounded integer interval or the full line. Two
//! boxes intersect when their extents intersect in every coordinate, and a
//! vertex's locality is the number of its bounded extents. Covers of a
//! graph's complement by co-interval bags translate into representations
//! coordinate by coordinate, and projecting a representation back onto its
//! coordinates recovers such a cover; both directions live here.

use crate::cover::{verify_cover, CoCover, CoverClass};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{interval_model, IntervalModel};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

/// One coordinate of a box: the full line or a bounded integer interval
/// with `l <= r`. Constructors in this crate keep the order invariant;
/// reversed endpoints are rejected when parsing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extent {
    Full,
    Bounded(u32, u32),
}

impl Extent {
    pub fn is_full(&self) -> bool {
        matches!(self, Extent::Full)
    }

    pub fn intersects(&self, other: &Extent) -> bool {
        match (self, other) {
            (Extent::Full, _) | (_, Extent::Full) => true,
            (Extent::Bounded(l1, r1), Extent::Bounded(l2, r2)) => l1.max(l2) <= r1.min(r2),
        }
    }
}

impl Serialize for Extent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Extent::Full => serializer.serialize_str("full"),
            Extent::Bounded(l, r) => (l, r).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for Extent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Wire {
            Word(String),
            Pair(u32, u32),
        }
        match Wire::deserialize(deserializer)? {
            Wire::Word(w) if w == "full" => Ok(Extent::Full),
            Wire::Word(w) => Err(D::Error::custom(format!(
                "unknown extent marker {w:?}, expected \"full\" or [l, r]"
            ))),
            Wire::Pair(l, r) if l <= r => Ok(Extent::Bounded(l, r)),
            Wire::Pair(l, r) => Err(D::Error::custom(format!(
                "extent [{l}, {r}] has reversed endpoints"
            ))),
        }
    }
}

/// A `d`-dimensional box per vertex: `boxes[v]` lists the `d` extents of
/// vertex `v`, in coordinate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoxRepresentation {
    pub d: usize,
    pub boxes: Vec<Vec<Extent>>,
}

impl BoxRepresentation {
    pub fn n(&self) -> usize {
        self.boxes.len()
    }

    /// Checks the shape invariants: every vertex carries exactly `d`
    /// extents and every bounded extent has ordered endpoints.
    pub fn validate(&self) -> Result<()> {
        for (v, row) in self.boxes.iter().enumerate() {
            if row.len() != self.d {
                return Err(Error::DimensionMismatch {
                    v,
                    got: row.len(),
                    expected: self.d,
                });
            }
            for (coordinate, e) in row.iter().enumerate() {
                if let Extent::Bounded(l, r) = e {
                    if l > r {
                        return Err(Error::ExtentOrder { v, coordinate });
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of bounded extents of vertex `v`.
    pub fn vertex_locality(&self, v: usize) -> usize {
        self.boxes[v].iter().filter(|e| !e.is_full()).count()
    }

    /// Largest vertex locality, 0 for the empty representation.
    pub fn locality(&self) -> usize {
        (0..self.n())
            .map(|v| self.vertex_locality(v))
            .max()
            .unwrap_or(0)
    }
}

#[derive(Serialize, Deserialize)]
struct BoxWire {
    d: usize,
    boxes: BTreeMap<String, Vec<Extent>>,
}

impl Serialize for BoxRepresentation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let wire = BoxWire {
            d: self.d,
            boxes: self
                .boxes
                .iter()
                .enumerate()
                .map(|(v, row)| (v.to_string(), row.clone()))
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoxRepresentation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let wire = BoxWire::deserialize(deserializer)?;
        let mut rows: Vec<Option<Vec<Extent>>> = vec![None; wire.boxes.len()];
        for (key, row) in wire.boxes {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("box key {key:?} is not a vertex index")))?;
            if v >= rows.len() {
                return Err(D::Error::custom(format!(
                    "box keys must cover 0..{} exactly, found {v}",
                    rows.len()
                )));
            }
            rows[v] = Some(row);
        }
        let boxes: Vec<Vec<Extent>> = rows
            .into_iter()
            .enumerate()
            .map(|(v, row)| {
                row.ok_or_else(|| D::Error::custom(format!("missing box for vertex {v}")))
            })
            .collect::<std::result::Result<_, _>>()?;
        let rep = BoxRepresentation { d: wire.d, boxes };
        rep.validate().map_err(D::Error::custom)?;
        Ok(rep)
    }
}

/// Edge `uv` iff the boxes of `u` and `v` intersect in every coordinate.
pub fn intersection_graph_of_boxes(b: &BoxRepresentation) -> Result<Graph> {
    b.validate()?;
    let n = b.n();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (0..b.d).all(|i| b.boxes[u][i].intersects(&b.boxes[v][i])) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges)
}

/// Builds the coordinate for one edge-bearing co-interval piece of a bag:
/// interval-model positions for the piece's vertices, full line elsewhere.
fn component_coordinate(n: usize, piece_vertices: &[usize], model: &IntervalModel) -> Vec<Extent> {
    let mut column = vec![Extent::Full; n];
    for (j, &v) in piece_vertices.iter().enumerate() {
        let (l, r) = model.intervals[j];
        column[v] = Extent::Bounded(l, r);
    }
    column
}

/// One coordinate per edge-bearing component of each bag, in bag order.
/// Each component spans a co-interval graph, so its complement has an
/// interval model; boxes of its vertices are bounded there and full
/// everywhere else. The intersection graph is exactly the complement of
/// the cover's host, and each vertex's locality equals its bag load.
pub fn cover_to_boxes(c: &CoCover) -> Result<BoxRepresentation> {
    verify_cover(c)?;
    let n = c.host.n();
    let mut columns: Vec<Vec<Extent>> = Vec::new();
    for bag in &c.bags {
        let bag_graph = Graph::new(n, bag.iter().copied())?;
        for comp in bag_graph.components() {
            if comp.len() < 2 {
                continue;
            }
            let vertices: Vec<usize> = comp.iter().collect();
            let sub = bag_graph.induced_subgraph(&comp)?;
            let model = interval_model(&sub.complement())?;
            columns.push(component_coordinate(n, &vertices, &model));
        }
    }
    let d = columns.len();
    let boxes: Vec<Vec<Extent>> = (0..n)
        .map(|v| columns.iter().map(|col| col[v]).collect())
        .collect();
    let rep = BoxRepresentation { d, boxes };
    debug_assert_eq!(
        intersection_graph_of_boxes(&rep).expect("constructed representation is valid"),
        c.host.complement(),
        "representation does not reproduce the covered graph"
    );
    Ok(rep)
}

/// The single-union-bag form: the bag's edge-bearing components become one
/// coordinate each, giving a 1-local representation of the host's
/// complement. Rejects covers that are not a single union-class bag.
pub fn union_cover_to_boxes(c: &CoCover) -> Result<BoxRepresentation> {
    if c.class != CoverClass::UnionCoInterval || c.bags.len() != 1 {
        return Err(Error::NotSingleUnionBag);
    }
    let rep = cover_to_boxes(c)?;
    debug_assert!(rep.locality() <= 1);
    Ok(rep)
}

/// Plain-class cover to boxes, with the locality guarantee explicit: one
/// coordinate per bag (a co-interval bag has exactly one edge-bearing
/// component), so a vertex covered by m bags gets exactly m bounded
/// extents. `host_original` is the graph being represented; the cover must
/// cover its complement.
pub fn local_cover_to_boxes(c: &CoCover, host_original: &Graph) -> Result<BoxRepresentation> {
    if c.class != CoverClass::CoInterval {
        return Err(Error::NotPlainCover);
    }
    if c.host != host_original.complement() {
        return Err(Error::HostMismatch);
    }
    let rep = cover_to_boxes(c)?;
    debug_assert_eq!(rep.d, c.bags.len());
    Ok(rep)
}

/// Projects a representation back onto its coordinates: each coordinate
/// contributes the bag of all vertex pairs whose extents are both bounded
/// and disjoint there; coordinates realizing no pair contribute no bag.
/// The result is a plain-class cover of the complement of
/// [`intersection_graph_of_boxes`], with locality at most the
/// representation's.
pub fn boxes_to_cover(b: &BoxRepresentation) -> Result<CoCover> {
    let host = intersection_graph_of_boxes(b)?.complement();
    let mut bags = Vec::new();
    for i in 0..b.d {
        let mut bag = Vec::new();
        for u in 0..b.n() {
            for v in u + 1..b.n() {
                if !b.boxes[u][i].is_full()
                    && !b.boxes[v][i].is_full()
                    && !b.boxes[u][i].intersects(&b.boxes[v][i])
                {
                    bag.push((u, v));
                }
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

/// Concatenates representations over the same vertex set; the intersection
/// graph of the product is the intersection of the factors' graphs.
pub fn product_of_representations(bs: &[BoxRepresentation]) -> Result<BoxRepresentation> {
    let n = match bs.first() {
        Some(b) => b.n(),
        None => {
            return Ok(BoxRepresentation {
                d: 0,
                boxes: vec![],
            })
        }
    };
    let mut d = 0;
    for b in bs {
        b.validate()?;
        if b.n() != n {
            return Err(Error::OrderMismatch(n, b.n()));
        }
        d += b.d;
    }
    let boxes: Vec<Vec<Extent>> = (0..n)
        .map(|v| bs.iter().flat_map(|b| b.boxes[v].iter().copied()).collect())
        .collect();
    Ok(BoxRepresentation { d, boxes })
}
