//! Exact arithmetic for strip-concave arrays on convex triangular grids.
//!
//! An array assigns a number to each node of a convex region of the triangular
//! grid so that the row derivatives interlace like a Gelfand-Tsetlin pattern.
//! The crate decides whether boundary data admits such an array, builds witnesses,
//! and moves between arrays, flows on a layered graph and skew tableaux.

pub mod array;
pub mod boundary;
pub mod cli;
pub mod config;
pub mod construct;
pub mod error;
pub mod feasibility;
pub mod fixtures;
pub mod flow;
pub mod json;
pub mod linalg;
pub mod polytope;
pub mod rat;
pub mod reduce;
pub mod tableau;

pub use array::{validate_array, GTPattern, StripConcaveArray};
pub use boundary::{deficits, shift_mu, BoundarySpec, Structural};
pub use config::{ConfigKind, ConvexConfig};
pub use construct::{build_trapezoid, build_triangular, mu_general_build, reduce_to_triangle, BuildMode};
pub use error::{Error, Result};
pub use feasibility::{check_general, check_parallelogram, check_trapezoid, Certificate, FeasibilityVerdict, Strategy};
pub use flow::{Flow, FlowGraph};
pub use rat::Rat;
pub use reduce::{extend_to_trapezoid, Extension};
pub use tableau::SkewTableau;
