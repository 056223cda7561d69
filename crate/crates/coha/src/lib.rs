//! Exact-arithmetic calculus for wedge operators on the cohomology of
//! Grassmannians.
//!
//! The library realizes one algebra two ways and lets you check that the two
//! realizations agree:
//!
//! * combinatorially, as an exterior algebra on generators `phi_0, phi_1, ...`
//!   with creation (wedge) and annihilation (partial derivative) operators,
//! * geometrically, as pushforward sums over Grassmannian fixed points,
//!   computed as exact rational-function shuffles.
//!
//! On top of the operator calculus sit two relation suites: the projected
//! creation/annihilation operators generate a type-D Kac-Moody presentation
//! (Chevalley generators, Cartan matrix, Serre relations), and the twisted
//! annihilation operators close a finite Clifford algebra.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! every check is an equality, never an approximation.
//!
//! Start with the runnable examples, one per capability:
//!
//! * `cargo run --example grassmannian_classes` - partitions, wedge indices,
//!   and the Schur dictionary between them
//! * `cargo run --example coinvariant_ring` - normal forms modulo the
//!   symmetric ideal, h/e duality, the transpose identity
//! * `cargo run --example wedge_calculus` - wedge products, left/right
//!   derivatives, index shifts and truncation kernels
//! * `cargo run --example operator_actions` - the diagonal grading operator
//!   and the closed-form actions of the Chevalley generators
//! * `cargo run --example serre_relations` - the full Serre-relation suite
//! * `cargo run --example cartan_matrix` - extracting the Cartan matrix from
//!   commutators and comparing with the type-D matrix
//! * `cargo run --example clifford_relations` - the finite Clifford algebra,
//!   with the untwisted contrast
//! * `cargo run --example localization_pushforward` - fixed-point shuffle
//!   sums agreeing with the combinatorial operators
//!
//! The same functionality is scriptable through the thin `coha` binary; see
//! the README for the command-line surface.

pub mod cli;
pub mod exterior;
pub mod localization;
pub mod operators;
pub mod partitions;
pub mod rational;
pub mod relations;
pub mod symfunc;

pub use exterior::ExteriorElement;
pub use operators::GradedOperator;
pub use partitions::{BoxShape, Partition, WedgeIndex};
pub use rational::Rational;
pub use relations::{CartanMatrix, Status, VerificationReport};
pub use symfunc::{MultiPoly, SchurClass};
