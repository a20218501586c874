//! Exact-arithmetic tropical coordinates for SL3 webs on triangulated marked
//! surfaces.
//!
//! The library implements the integer-cone model of reduced webs: a dotted
//! ideal triangulation assigns one coordinate per dot (two dots per edge, one
//! per face), webs embed as the lattice points of a positive integer cone cut
//! out by rhombus inequalities and mod-3 congruences, and diagonal flips act
//! by a piecewise-linear (max-plus) coordinate transformation.
//!
//! Modules:
//! - [`triangulation`]: combinatorial marked surfaces, dotted triangulations,
//!   diagonal flips with persistent dot identities.
//! - [`cone`]: cone membership, rhombus numbers, Hilbert-basis enumeration,
//!   exact decomposition against sector generators.
//! - [`mutation`]: the tropical A-coordinate cluster transformation for a
//!   flip, flip-sequence composition, loop verification.
//! - [`webs`]: web schematics, the coordinate map and its inverse on the
//!   triangle and square, family classification.
//! - [`square`]: the square-specific linear maps, tropical X-coordinates,
//!   the 42-sector decomposition, wall graph, and cornerless solver.
//!
//! All arithmetic is exact: `i64` coordinates with overflow checks in the
//! max-plus maps, and exact rationals for every linear solve.

pub mod cone;
pub mod mutation;
pub mod square;
pub mod triangulation;
pub mod webs;

pub use cone::{decompose, hilbert_basis, is_in_ktgs_cone, rhombus_numbers, ConePoint, HilbertBasis, RhombusVector};
pub use mutation::{compose_flips, flip_mutation, verify_flip_loop, LoopReport, MutationStep};
pub use square::{sector_of, solve_cornerless, theta, wall_graph, x_coords, XVector};
pub use triangulation::{DottedTriangulation, MarkedSurface, QuadFrame};
pub use webs::{SquareWebSchematic, TriangleSchematic};

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("coordinate vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("triangulation contains a self-folded triangle")]
    SelfFolded,
    #[error("edge {0} is a boundary edge")]
    BoundaryEdge(usize),
    #[error("flipping edge {0} would create a self-folded triangle")]
    FlipWouldSelfFold(usize),
    #[error("triangulations are topologically distinct")]
    TopologicallyDistinct,
    #[error("topological identification is ambiguous (indistinguishable vertices)")]
    AmbiguousTopology,
    #[error("edge {edge}: coordinate pair ({}, {}) from one side does not match ({}, {}) from the other", .left.0, .left.1, .right.0, .right.1)]
    EdgeMismatch { edge: usize, left: (i64, i64), right: (i64, i64) },
    #[error("rhombus vector violates defining relation {relation} of the X-coordinate subspace")]
    NotInVt { relation: usize },
    #[error("point is not in the KTGS cone")]
    NotInCone,
    #[error("negative coefficient at generator {0}: point is not in this sector")]
    NegativeCoefficient(usize),
    #[error("non-integral coefficient at generator {0}")]
    NonIntegralCoefficient(usize),
    #[error("generators are linearly dependent")]
    SingularGenerators,
    #[error("cone point {0:?} does not decompose over the enumerated irreducibles (oracle is not a monoid within the bound)")]
    DecompositionFailure(Vec<i64>),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("invalid schematic: {0}")]
    InvalidSchematic(String),
    #[error("arithmetic overflow in exact integer computation")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
