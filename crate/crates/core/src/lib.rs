//! Desk-scale computational ergodic theory.
//!
//! The crate builds concrete measure-preserving systems (irrational
//! rotations in 128-bit fixed point, symbolic shifts on seeded bit
//! streams, Markov chains, products, invertible extensions, disjoint
//! unions), evaluates Birkhoff and weighted ergodic averages along
//! their orbits, estimates Koopman autocorrelations and runs the
//! Wiener continuity criterion, and models the combinatorial core of
//! the return-times argument: bad-interval certificates, good-block
//! censuses, the layered base-interval construction with its density
//! accounting, and the final Cauchy-Schwarz contradiction mechanics.
//!
//! Everything is deterministic: samplers are counter-based functions
//! of a recorded seed, circle arithmetic is exact modulo 2^-128, and
//! set measures are exact rationals wherever a closed form exists.

pub mod averaging;
pub mod bfko;
pub mod error;
pub mod fixed;
pub mod observables;
pub mod points;
pub mod rng;
pub mod sets;
pub mod spectral;
pub mod systems;

pub use error::ErgoError;
pub use fixed::Frac;
pub use observables::{KroneckerSplit, Observable};
pub use points::Point;
pub use sets::MeasurableSet;
pub use systems::{OrbitSeries, System, SystemKind};

/// Complex scalar used for all observable values and averages.
pub type C64 = num_complex::Complex64;

/// Exact rational mass used for measures and weights.
pub type Mass = num_rational::BigRational;

/// Shorthand result type over the crate error.
pub type Result<T> = std::result::Result<T, ErgoError>;
