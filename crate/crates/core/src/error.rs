use core::fmt;

use crate::graph::{Color, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A graph needs at least one edge color.
    NoColors,
    UnknownVertex(VertexId),
    InvalidColor { color: Color, colors: usize },
    /// The operation is defined for a fixed number of colors only.
    WrongColorCount { expected: usize, found: usize },
    /// `dissolve` was asked to remove a vertex that does not have the required degrees.
    NotDissolvable { vertex: VertexId, reason: &'static str },
    /// The supplied reference set does not hit every monochromatic cycle.
    NotAFeedbackSet,
    RepresentationNotDisjoint(VertexId),
    EmptyRepresentationSet,
    NotDominating,
    OracleCapExceeded { what: &'static str, limit: usize, found: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NoColors => write!(f, "a graph needs at least one edge color"),
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::InvalidColor { color, colors } => {
                write!(f, "color {color} outside 1..={colors}")
            }
            Error::WrongColorCount { expected, found } => {
                write!(f, "expected a graph with {expected} colors, found {found}")
            }
            Error::NotDissolvable { vertex, reason } => {
                write!(f, "vertex {vertex} cannot be dissolved: {reason}")
            }
            Error::NotAFeedbackSet => write!(f, "reference set is not a feedback set"),
            Error::RepresentationNotDisjoint(v) => {
                write!(f, "vertex {v} appears in two sets of a compact representation")
            }
            Error::EmptyRepresentationSet => {
                write!(f, "compact representation contains an empty set")
            }
            Error::NotDominating => write!(f, "vertex set does not dominate the graph"),
            Error::OracleCapExceeded { what, limit, found } => {
                write!(f, "oracle cap exceeded: {what} is {found}, limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
