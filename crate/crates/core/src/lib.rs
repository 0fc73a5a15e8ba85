//! Central components of polygon triangulations and k-angulations.
//!
//! Regard a dissection of a regular n-gon as a subset of the plane centered at
//! the origin. Its *central component* is the diameter or the cell that
//! contains the origin. Classifying dissections by central component yields
//! recursions for Catalan and Fuss-Catalan numbers, congruences, and a count of
//! triangulations whose central component avoids a fixed vertex.
//!
//! Modules:
//! - [`numbers`]: exact closed forms and Catalan residues
//! - [`polygon`]: diagonals, cells, central-component classification, placement counts
//! - [`enumeration`]: brute-force generators and the central census
//! - [`recursions`]: recursion right-hand sides and fixed-vertex formulas
//! - [`congruences`]: congruence predictions and verification reports
//! - [`svg`]: SVG drawings of dissections

pub mod congruences;
pub mod enumeration;
pub mod error;
pub mod numbers;
pub mod polygon;
pub mod recursions;
pub mod svg;

pub use congruences::{predict_mod2, predict_mod4, verify_congruence, CongruenceCheck, TheoremId, VerificationReport};
pub use enumeration::{central_census, count_vertex0_outside, enumerate_kangulations, enumerate_triangulations, Census, CensusEntry};
pub use error::{ArgumentError, ModelError};
pub use numbers::{
    ballot_t, binomial, catalan, catalan_mod, fuss_catalan, kangulation_count, quadrangulation_count, BigCount, Index,
};
pub use polygon::{cyclic_length, placement_count, CentralComponent, Diagonal, Dissection, Face, ShapeKey};
pub use recursions::{
    central_recursion_rhs, dyck_formula, dyck_midpoint_uu_bruteforce, fixed_vertex_outside,
    fixed_vertex_outside_double_sum, kang_recursion_rhs, quad_recursion_rhs, RecursionKind,
};
pub use svg::render_svg;
