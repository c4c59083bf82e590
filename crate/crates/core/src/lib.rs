//! Computational toolkit built around exact arithmetic: modular integers,
//! counting, information measures, matrices over rationals, dense polynomials
//! with interpolation codes, toy ciphers, complex phasors, worked geometry
//! and matrix-backed image transforms.
//!
//! Everything numeric that can be exact is exact: integers are arbitrary
//! precision and the default scalar for algebra is [`Rational`]. Floating
//! point appears only where the domain demands it (entropy, trigonometry,
//! least squares, image intensities).

pub mod applied;
pub mod combinatorics;
pub mod complexnum;
pub mod crypto;
pub mod imaging;
pub mod information;
pub mod linalg;
pub mod numtheory;
pub mod polynomials;
pub mod scalar;

pub use num_bigint::BigInt;
pub use scalar::Rational;
