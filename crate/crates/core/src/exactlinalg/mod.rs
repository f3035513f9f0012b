//! Exact linear algebra over `Q` and `F_p`.
//!
//! Nilpotent orbits of `GL_n` and the enhanced orbits built on them are
//! defined over the prime field: Jordan forms and the reductions used for
//! classification need no field extensions. Exact computation over `Q` or
//! `F_p` therefore sees the same orbit types as the algebraically closed
//! field. No floating point is used anywhere.

pub mod field;
pub mod io;
pub mod matrix;
pub mod nilpotent;

pub use field::{Field, PrimeField, Rationals};
pub use io::{parse_matrix_json, parse_vector_json, AnyMatrix, AnyVector};
pub use matrix::{span_dim, Echelon, Matrix, Vector};
pub use nilpotent::{
    block_generators, centralizer_basis, enhanced_centralizer_dim, is_nilpotent, jordan_basis,
    jordan_matrix, jordan_type, verify_jordan_data, JordanData,
};
