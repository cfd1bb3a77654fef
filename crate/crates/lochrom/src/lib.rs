//! Locating colorings of complete n-ary trees.
//!
//! A proper vertex coloring is *locating* when every vertex is identified by
//! its vector of distances to the color classes. This crate computes,
//! constructs, verifies and certifies such colorings on the complete k-level
//! n-ary tree `T(n,k)`:
//!
//! * [`tree`] — `T(n,k)` itself, with arithmetic level-order navigation;
//! * [`coloring`] — colorings, color codes, the locating verifier, palm
//!   signatures and the twin lower bound;
//! * [`solver`] — exact locating chromatic numbers by symmetry-pruned
//!   backtracking, with honest budget semantics;
//! * [`construct`] — the recursive shell construction that colors arbitrarily
//!   deep trees with palettes growing far slower than the depth;
//! * [`bounds`] — exact-integer counting: palm type counts, the pigeonhole
//!   tightness certificate, threshold scans and upper-bound minimization.

pub mod bounds;
pub mod coloring;
pub mod construct;
pub mod solver;
pub mod tree;

pub use coloring::{
    color_codes, is_locating, is_proper, palm_census, twin_lower_bound, CodeTable, Coloring,
    ColoringError, ColoringFile, LocatingVerdict, PalmSignature,
};
pub use construct::{
    base_coloring, construct_coloring, has_ct_property, lift, normalize_ct, Construction,
    ConstructionTrace, CtPropertySpec,
};
pub use solver::{
    chi_l_exact, exists_locating_coloring, known_upper_bound, Budget, SearchOutcome, SolveOutcome,
    SolveResult, SolverConfig,
};
pub use tree::{NaryTree, PalmLocation, TreeError, VertexId};
