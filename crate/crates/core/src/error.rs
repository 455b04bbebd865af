use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({i}, {j}) has an endpoint outside 1..={n}")]
    EdgeOutOfRange { i: usize, j: usize, n: usize },
    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} does not exist in a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("order-label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("order-label {0} assigned to more than one vertex")]
    DuplicateLabel(usize),
    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),
    #[error("graph `{graph}` has no vertex named `{vertex}`")]
    UnknownVertex { graph: String, vertex: String },
    #[error("pair ({0}, {1}) is listed as both red and blue")]
    ConflictingColor(usize, usize),
    #[error("coloring is incomplete: {unknown} pair(s) are uncolored")]
    IncompleteColoring { unknown: usize },
    #[error("skeleton has {skeleton} vertices but the search asked for {requested}")]
    DimensionMismatch { skeleton: usize, requested: usize },
    #[error("skeleton already contains a forbidden monochromatic copy")]
    SkeletonContainsCopy,
    #[error("instance too large: {edges} edges exceeds the exact-count limit of {limit}")]
    InstanceTooLarge { edges: usize, limit: usize },
    #[error("search supports at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("{0}")]
    OutOfDomain(String),
    #[error("cannot parse ordering spec `{0}`")]
    BadOrderingSpec(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
