//! Coset geometries on small groups acting regularly on themselves by right
//! multiplication.

mod coset;
mod group;
pub mod spec;

pub use coset::{
    coset_geometry, double_coset_profile, grid_subquadrangle, line_stabiliser_check, CosetGeometry, DoubleCoset,
    DoubleCosetProfile, GqViolation, Grid, IncidenceGeometry, PlsViolation, StabiliserReport,
};
pub use group::{FiniteGroup, DEFAULT_CAP};
pub use spec::{parse_geometry_file, parse_group, parse_subgroup, GeometryInput};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeometryError {
    #[error("invalid group: {0}")]
    Group(String),
    #[error("group of order {n} exceeds the cap {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("{group} has no element {element:?}")]
    UnknownElement { group: String, element: String },
    #[error("{0}")]
    NotSubgroup(String),
    #[error("subgroups {first} and {second} share the non-identity element {element}")]
    SharedElement { first: usize, second: usize, element: String },
    #[error("points {} and {} lie on lines {} and {}", .0.points.0, .0.points.1, .0.lines.0, .0.lines.1)]
    NotPartialLinear(PlsViolation),
    #[error("product set has {product} elements, expected {expected}")]
    Degenerate { product: usize, expected: usize },
    #[error("no line with index {0}")]
    NoSuchLine(usize),
    #[error("line {{{0}}} does not contain the identity")]
    LineMissesIdentity(String),
    #[error("{0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}
