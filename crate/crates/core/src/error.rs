use alloc::string::String;
use core::fmt;

/// Errors produced by graph construction and the algorithm preconditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A line of the edge-list input could not be parsed.
    Parse { line: usize, msg: String },
    /// The input contained an edge from a node to itself.
    SelfLoop { label: u64 },
    /// The input graph is disconnected; `a` and `b` are representatives of
    /// two different components (input labels).
    Disconnected { a: u64, b: u64 },
    /// The input contained no edges.
    EmptyInput,
    /// A node id was outside `[0, n)`.
    NodeOutOfRange { node: u32, n: usize },
    /// An expansion ratio was requested for a set outside `1 <= |S| <= n/2`.
    ExpansionDomain { size: usize, n: usize },
    /// Removing every node of the graph is not allowed.
    RemoveAll,
    /// The exact hyperbolicity scan was refused because `n` exceeds the cap.
    DeltaCapExceeded { n: usize, cap: usize },
    /// A parameter violated its stated domain; the message names the
    /// inequality that failed.
    BadParameter(String),
    /// dist(s, t) is below the threshold required by the construction.
    DistanceTooSmall { dist: u32, threshold: String },
    /// A flow of insufficient value was handed to the path decomposition.
    FlowTooSmall { value: u64, kappa: u64 },
    /// The small-set-expansion solver requires a regular graph.
    NotRegular { min_degree: u32, max_degree: u32 },
    /// A brute-force oracle size guard was hit.
    OracleGuard(String),
    /// An internal invariant failed; this indicates a bug, not a user error.
    InternalInvariant(String),
}

impl Error {
    /// True for violations of an algorithm's stated preconditions, as opposed
    /// to malformed input or internal failures.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NodeOutOfRange { .. }
                | Error::ExpansionDomain { .. }
                | Error::RemoveAll
                | Error::DeltaCapExceeded { .. }
                | Error::BadParameter(_)
                | Error::DistanceTooSmall { .. }
                | Error::FlowTooSmall { .. }
                | Error::NotRegular { .. }
                | Error::OracleGuard(_)
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, msg } => write!(f, "parse error on line {line}: {msg}"),
            Error::SelfLoop { label } => write!(f, "self-loop at node {label}"),
            Error::Disconnected { a, b } => {
                write!(f, "graph is disconnected: nodes {a} and {b} are in different components")
            }
            Error::EmptyInput => write!(f, "empty edge list"),
            Error::NodeOutOfRange { node, n } => {
                write!(f, "node {node} out of range for graph with {n} nodes")
            }
            Error::ExpansionDomain { size, n } => {
                write!(f, "expansion requires 1 <= |S| <= n/2, got |S| = {size} with n = {n}")
            }
            Error::RemoveAll => write!(f, "cannot remove every node of the graph"),
            Error::DeltaCapExceeded { n, cap } => write!(
                f,
                "exact hyperbolicity scan refused for n = {n} > cap {cap}; \
                 use the 2-approximation or raise the cap"
            ),
            Error::BadParameter(msg) => write!(f, "parameter out of domain: {msg}"),
            Error::DistanceTooSmall { dist, threshold } => {
                write!(f, "dist(s,t) = {dist} does not exceed the required threshold {threshold}")
            }
            Error::FlowTooSmall { value, kappa } => {
                write!(f, "flow value {value} is below the requested {kappa} paths")
            }
            Error::NotRegular { min_degree, max_degree } => write!(
                f,
                "graph is not regular (degrees range from {min_degree} to {max_degree})"
            ),
            Error::OracleGuard(msg) => write!(f, "oracle size guard: {msg}"),
            Error::InternalInvariant(msg) => write!(f, "internal invariant violated: {msg}"),
        }
    }
}
