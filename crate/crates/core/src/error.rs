use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// The graph has more vertices than the active limit allows.
    TooManyVertices {
        n: usize,
        limit: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    SelfLoop {
        vertex: usize,
    },
    EdgeOutOfRange {
        id: usize,
        len: usize,
    },
    /// `|E(Ḡ)|` exceeds the enumeration limit.
    InstanceTooLarge {
        complement_edges: usize,
        limit: usize,
    },
    /// A covering row has no column, so no cover exists.
    InfeasibleRow {
        row: usize,
    },
    /// The covering system has no nonempty column.
    NoColumns,
    InvalidParameter {
        name: &'static str,
        value: usize,
    },
    /// A checked mathematical invariant failed. Indicates a bug.
    InvariantViolated(&'static str),
}

impl Error {
    /// True for errors caused by the size guards rather than bad input.
    pub fn is_size_limit(&self) -> bool {
        matches!(
            self,
            Error::TooManyVertices { .. } | Error::InstanceTooLarge { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooManyVertices { n, limit } => {
                write!(f, "graph has {n} vertices, limit is {limit}")
            }
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::EdgeOutOfRange { id, len } => {
                write!(f, "edge index {id} out of range for {len} edges")
            }
            Error::InstanceTooLarge {
                complement_edges,
                limit,
            } => write!(
                f,
                "instance too large: complement has {complement_edges} edges, limit is {limit}"
            ),
            Error::InfeasibleRow { row } => write!(f, "infeasible row {row}: no column covers it"),
            Error::NoColumns => f.write_str("covering system has no nonempty column"),
            Error::InvalidParameter { name, value } => {
                write!(f, "invalid value {value} for {name}")
            }
            Error::InvariantViolated(what) => write!(f, "invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
