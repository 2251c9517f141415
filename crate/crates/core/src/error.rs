use core::fmt;

/// Failures raised by lattice construction and the sublocale machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The lattice has no elements.
    Empty,
    /// An element index is outside `0..n`.
    IndexOutOfRange { index: usize, len: usize },
    /// The relation is not a partial order.
    NotAnOrder(&'static str),
    /// Two elements lack a greatest lower or least upper bound.
    NotALattice { left: usize, right: usize },
    /// Distributivity fails at `x ∧ (y ∨ z)`.
    NotAFrame { x: usize, y: usize, z: usize },
    /// Dual distributivity fails at `x ∨ (y ∧ z)`.
    NotACoframe { x: usize, y: usize, z: usize },
    /// A member set fails the defining closure conditions.
    NotASublocale,
    NotASubcolocale,
    NotAFilter,
    /// A relation fails one of the precongruence conditions.
    NotAPrecongruence(&'static str),
    /// A function between frames does not preserve the frame operations.
    NotAFrameMap(&'static str),
    /// The subcolocale of fitted sublocales is not proper.
    NotProper,
    /// The subcolocale of sublocales is not codense.
    NotCodense,
    /// A subcolocale does not contain every open sublocale.
    MissingOpens,
    /// An index is not a member of the subcolocale it was used with.
    NotAMember(usize),
    /// The requested combination of host and filter is not defined.
    Unsupported(&'static str),
    /// A family of subsets is not a topology on the given points.
    NotATopology,
    /// An enumeration exceeded its configured bound.
    SizeLimit { what: &'static str, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => f.write_str("lattice has no elements"),
            Error::IndexOutOfRange { index, len } => {
                write!(f, "element index {index} out of range for {len} elements")
            }
            Error::NotAnOrder(why) => write!(f, "relation is not a partial order: {why}"),
            Error::NotALattice { left, right } => {
                write!(f, "elements {left} and {right} have no meet or join")
            }
            Error::NotAFrame { x, y, z } => {
                write!(f, "not a frame: {x} ∧ ({y} ∨ {z}) does not distribute")
            }
            Error::NotACoframe { x, y, z } => {
                write!(f, "not a coframe: {x} ∨ ({y} ∧ {z}) does not distribute")
            }
            Error::NotASublocale => f.write_str("set is not a sublocale"),
            Error::NotASubcolocale => f.write_str("set is not a subcolocale"),
            Error::NotAFilter => f.write_str("set is not a filter"),
            Error::NotAPrecongruence(why) => write!(f, "relation is not a precongruence: {why}"),
            Error::NotAFrameMap(why) => write!(f, "function is not a frame map: {why}"),
            Error::NotProper => f.write_str("subcolocale of fitted sublocales is not proper"),
            Error::NotCodense => f.write_str("subcolocale is not codense"),
            Error::MissingOpens => f.write_str("subcolocale does not contain all open sublocales"),
            Error::NotAMember(i) => write!(f, "index {i} is not a member of the subcolocale"),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::NotATopology => f.write_str("family of open sets is not a topology"),
            Error::SizeLimit { what, limit } => write!(f, "{what} exceeds the limit of {limit}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
