//! Enhanced nilpotent orbits of `GL_n ⋉ V`: combinatorics of enhanced
//! partitions, exact classification of pairs `(X, w)`, the `GL_2` action on
//! binary quadratics, a finiteness criterion for enhanced nilpotent cones and
//! brute-force orbit censuses over small finite fields.

pub mod error;
pub mod exactlinalg;
pub mod ffcensus;
pub mod finiteness;
pub mod gl2sym2;
pub mod orbitcalc;
pub mod partitions;

pub use error::{Error, Result};
