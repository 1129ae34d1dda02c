//! Exact degree bounds for rational invariants of finite abelian groups.
//!
//! A finite abelian group acting diagonally on variables x_1, ..., x_m is
//! described by the character of each variable. An exponent vector a gives
//! an invariant Laurent monomial x^a exactly when the character sum
//! a_1 chi_1 + ... + a_m chi_m vanishes; those vectors form a full-rank
//! lattice L in Z^m, and every question this crate answers is a question
//! about that lattice:
//!
//! * the least degree whose invariants contain a transcendence basis of
//!   the invariant field (gamma) is the largest successive minimum of the
//!   L1 ball with respect to L;
//! * the least degree whose invariants generate the invariant field
//!   (beta) is the least d with the degree-at-most-d points generating L
//!   as a group;
//! * the degree of the invariant field over the subfield generated in
//!   degree d is the index of the span of the degree-at-most-d points;
//! * restricting to ordinary polynomials replaces the L1 ball by the
//!   simplex of non-negative exponents.
//!
//! All arithmetic is checked 64-bit integer arithmetic: results are exact
//! and overflow is an error, never a wrong answer. Every computed value
//! is cross-validated against the closed-form bounds the theory provides
//! (the m-th-root lower bound, involution floors, Minkowski's second
//! theorem, the sharp cyclic family, prime-order caps), and a violation
//! is reported as a hard, structured error.
//!
//! The library is organized bottom-up: [`group`] (characters, weights and
//! supports), [`lattice`] (Hermite/Smith normal forms, spans, indices),
//! [`enumerate`] (degree shells of the lattice in either geometry),
//! [`bounds`] (the headline quantities and the full verified report),
//! [`witness`] (monomial renderings and generation certificates), and
//! [`cli`] (the command-line front end).

#![forbid(unsafe_code)]

mod arith;
pub mod bounds;
pub mod cli;
pub mod enumerate;
mod error;
pub mod group;
pub mod lattice;
mod linalg;
pub mod witness;

pub use bounds::{
    beta_poly, beta_rational, check_extremal, extension_index, family_support, family_sweep,
    family_value, gamma_poly, gamma_rational, hard_floor, minkowski_rhs, root_lower_bound,
    successive_minima, verify_all, BoundsReport, FamilyRow, Rational, TheoreticalChecks,
    WitnessData, REPORT_SCHEMA,
};
pub use enumerate::{
    ball_points, ball_points_budgeted, degree, shell_points, shell_points_budgeted, Geometry,
    PointSet, Shell, DEFAULT_POINT_BUDGET,
};
pub use error::{Error, Result};
pub use group::{weight_of, AbelianGroup, CharSupport, Character, Weight};
pub use lattice::{index_of, Lattice, LatticeIndex};
pub use witness::{
    default_names, generator_witness, monomial_string, ratio_decomposition, GeneratorCertificate,
    RatioDecomposition,
};
