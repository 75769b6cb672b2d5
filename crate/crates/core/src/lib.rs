//! Exact Reeb graphs and Reeb spaces of simplicial maps.
//!
//! The crate works purely combinatorially: finite simplicial complexes, simplicial maps
//! between them, rational homology computed by exact fraction-free elimination, and the
//! stratum poset whose order complex realizes the Reeb space of a simplicial map. On top of
//! that sit fiber powers (via the nerve of a closed convex cover), the descent and first-Betti
//! inequality verifiers, and exact evaluators for singly exponential Betti-number bounds of
//! semi-algebraic sets.
//!
//! Scalar-dependent pieces are generic: boundary-matrix ranks run over any [`ExactScalar`]
//! (`i64` with overflow detection, `BigInt`, `BigRational`) and PL functions take any totally
//! ordered value type. The aliases below fix the choices used by the file formats and the CLI.

pub mod bounds;
pub mod complex;
pub mod error;
pub mod fiberprod;
pub mod fixtures;
pub mod function;
pub mod homology;
pub mod io;
pub mod linalg;
pub mod reeb;
pub mod scalar;

pub use complex::{
    barycentric_subdivision, check_simplicial, connected_components, staircase_product,
    Poset, Simplex, SimplicialComplex, SimplicialMap, Subdivision, UnionFind, VertexOrder,
};
pub use error::{Error, Result};
pub use fiberprod::{
    descent_check, fiber_power_betti, fiber_power_cells, fiber_power_nerve, fiber_power_nerve_with,
    CoverMode, DescentReport, DescentTarget, FiberCells, FiberMethod, NerveComplex, NerveOptions,
};
pub use function::PlFunction;
pub use homology::{betti, euler_characteristic, BettiVector, ChainComplex};
pub use reeb::{
    b1_inequality_check, fiber_components_at, reeb_graph, reeb_space, verify_quotient,
    ReebComplex, ReebGraph,
};
pub use scalar::ExactScalar;

/// Arbitrary-precision rationals, used for coordinates and function values in files.
pub type Rational = num_rational::BigRational;

/// A PL function with exact rational vertex values.
pub type RationalFunction = PlFunction<Rational>;

/// A PL function with integer vertex values (convenient for fixtures and tests).
pub type IntFunction = PlFunction<i64>;

/// Chain complex with rational boundary coefficients.
pub type ChainComplexQ = ChainComplex<Rational>;

/// Chain complex with big-integer boundary coefficients.
pub type ChainComplexZ = ChainComplex<num_bigint::BigInt>;

/// Reeb graph of a rational-valued PL function.
pub type RationalReebGraph = ReebGraph<Rational>;

/// Default cap on the number of nerve simplices built by a fiber-power computation.
pub const DEFAULT_CELL_CAP: usize = 200_000;

/// Environment variable overriding [`DEFAULT_CELL_CAP`].
pub const CELL_CAP_ENV: &str = "REEBFORGE_CELL_CAP";
