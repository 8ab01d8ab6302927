//! Edge covers of a host graph by co-interval subgraphs, and their verifier.
//!
//! A cover assigns every host edge to at least one bag; each bag spans a
//! subgraph (its edges, on the vertices those edges touch) that must lie in
//! the cover's class: co-interval graphs, or disjoint unions of co-interval
//! graphs. Bags may overlap, in edges as well as in vertices; co-interval
//! graphs are not closed under edge deletion, so insisting on partitions
//! would lose covers.
//!
//! The verifier recomputes everything from scratch using only the public
//! recognition routines; it shares no state with the solvers whose output it
//! checks.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::interval::{is_co_interval, is_union_co_interval};
use serde::{Deserialize, Serialize};

/// Which graphs a bag may span.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CoverClass {
    /// Co-interval graphs (written `C` in certificates).
    #[serde(rename = "C")]
    CoInterval,
    /// Vertex-disjoint unions of co-interval graphs (written `Cbar`).
    #[serde(rename = "Cbar")]
    UnionCoInterval,
}

/// A cover of the host's edge set. `bags[i]` lists the edges assigned to bag
/// `i`, each normalized to `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoCover {
    pub host: Graph,
    pub bags: Vec<Vec<(usize, usize)>>,
    pub class: CoverClass,
}

/// What a verified cover costs: `globality` is the number of bags, and
/// `locality` is the largest number of bags any single vertex appears in.
/// `locality <= globality` always, and `globality >= 1` whenever the host
/// has an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverStats {
    #[serde(rename = "t")]
    pub globality: usize,
    #[serde(rename = "s")]
    pub locality: usize,
}

impl CoCover {
    /// The vertices touched by bag `i`'s edges.
    pub fn bag_support(&self, i: usize) -> VertexSet {
        let mut s = VertexSet::empty();
        for &(u, v) in &self.bags[i] {
            s.insert(u);
            s.insert(v);
        }
        s
    }

    /// How many bags have `v` in their support.
    pub fn vertex_load(&self, v: usize) -> usize {
        (0..self.bags.len())
            .filter(|&i| self.bag_support(i).contains(v))
            .count()
    }

    /// The graph spanned by bag `i`: its edges, on the vertices they touch,
    /// relabeled to `0..support`.
    pub fn spanned_subgraph(&self, i: usize) -> Result<Graph> {
        let support: Vec<usize> = self.bag_support(i).iter().collect();
        let index = |v: usize| support.binary_search(&v).expect("endpoint is in support");
        Graph::new(
            support.len(),
            self.bags[i].iter().map(|&(u, v)| (index(u), index(v))),
        )
    }
}

/// Checks every cover invariant and reports the first violation: bags must
/// be nonempty, bag edges must be host edges, every host edge must be
/// covered, and each bag's spanned subgraph must lie in the cover's class.
/// Returns the exact globality and locality on success.
pub fn verify_cover(c: &CoCover) -> Result<CoverStats> {
    for (i, bag) in c.bags.iter().enumerate() {
        if bag.is_empty() {
            return Err(Error::EmptyBag(i));
        }
        for &(u, v) in bag {
            if !c.host.has_edge(u, v) {
                return Err(Error::EdgeNotInHost {
                    bag: i,
                    edge: (u, v),
                });
            }
        }
    }
    let mut covered = std::collections::HashSet::new();
    for bag in &c.bags {
        for &(u, v) in bag {
            covered.insert((u.min(v), u.max(v)));
        }
    }
    for (u, v) in c.host.edges() {
        if !covered.contains(&(u, v)) {
            return Err(Error::UncoveredEdge((u, v)));
        }
    }
    for i in 0..c.bags.len() {
        let spanned = c.spanned_subgraph(i)?;
        match c.class {
            CoverClass::CoInterval => {
                if !is_co_interval(&spanned) {
                    return Err(Error::BagNotCoInterval(i));
                }
            }
            CoverClass::UnionCoInterval => {
                if !is_union_co_interval(&spanned) {
                    return Err(Error::BagNotUnionCoInterval(i));
                }
            }
        }
    }
    let locality = (0..c.host.n()).map(|v| c.vertex_load(v)).max().unwrap_or(0);
    Ok(CoverStats {
        globality: c.bags.len(),
        locality,
    })
}
