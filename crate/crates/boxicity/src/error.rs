use thiserror::Error;

/// Everything that can go wrong when building graphs, parsing formats, or
/// verifying certificates. Verification errors name the first violated
/// invariant so a failing certificate can be diagnosed from the message alone.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },

    #[error("self-loops are not allowed (vertex {0})")]
    SelfLoop(usize),

    #[error("graph too large: {0} vertices exceeds the supported maximum of {max}", max = crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("graphs of different order: {0} and {1} vertices")]
    OrderMismatch(usize, usize),

    #[error("vertices {0} and {1} are adjacent; only non-adjacent vertices can be identified")]
    IdentifyAdjacent(usize, usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("graph6 encoding supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("graph is not an interval graph; no interval model exists")]
    NotInterval,

    #[error("bag {0} is empty")]
    EmptyBag(usize),

    #[error("bag {bag} contains {edge:?}, which is not an edge of the graph being covered")]
    EdgeNotInHost { bag: usize, edge: (usize, usize) },

    #[error("edge {0:?} of the graph being covered is in no bag")]
    UncoveredEdge((usize, usize)),

    #[error("bag {0} does not span a co-interval graph")]
    BagNotCoInterval(usize),

    #[error("bag {0} does not span a disjoint union of co-interval graphs")]
    BagNotUnionCoInterval(usize),

    #[error("fold map has {got} entries for a split graph on {expected} vertices")]
    FoldMapLength { got: usize, expected: usize },

    #[error("fold map sends split vertex {v} to {image}, which is not a host vertex")]
    FoldMapRange { v: usize, image: usize },

    #[error("host vertex {0} has no preimage under the fold map")]
    FoldMapNotSurjective(usize),

    #[error("split edge ({0}, {1}) lies inside a single fiber")]
    FiberNotIndependent(usize, usize),

    #[error("split edge ({u}, {v}) maps to ({fu}, {fv}), which is not a host edge")]
    NotHomomorphism {
        u: usize,
        v: usize,
        fu: usize,
        fv: usize,
    },

    #[error("host edge {0:?} has no preimage among the split edges")]
    EdgeNotSurjective((usize, usize)),

    #[error("split graph is not in the required class")]
    SplitClassFailure,

    #[error("box representation: vertex {v} has {got} extents, expected dimension {expected}")]
    DimensionMismatch {
        v: usize,
        got: usize,
        expected: usize,
    },

    #[error("box representation: extent of vertex {v} in coordinate {coordinate} has reversed endpoints")]
    ExtentOrder { v: usize, coordinate: usize },

    #[error("cover is not a single-bag union-class cover spanning all host edges")]
    NotSingleUnionBag,

    #[error("cover does not use plain co-interval bags")]
    NotPlainCover,

    #[error("cover host is not the complement of the given graph")]
    HostMismatch,

    #[error("coloring uses {got} entries for a graph on {n} vertices")]
    ColoringLength { got: usize, n: usize },

    #[error("coloring is not a valid acyclic coloring: {0}")]
    InvalidColoring(String),

    #[error("input exceeds the documented size limit for this operation ({0})")]
    SizeLimit(&'static str),

    #[error("family parameter out of range: {0}")]
    FamilyParameter(&'static str),

    #[error("certificate: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
