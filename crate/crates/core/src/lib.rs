//! Exact dimension computations for bounded complexes of finitely generated
//! free modules over polynomial rings `k[x_1, ..., x_v]`.
//!
//! The dimension of a complex `F` is `sup { dim H_n(F) - n }`. It can be read
//! off the differentials alone: with `s_n` the alternating rank sums,
//! `dim F = sup { dim R/I_{s_n}(∂_{n+1}) - n }`. [`dimform`] evaluates that
//! formula and its dual; [`homoracle`] computes homology directly so the two
//! can be compared.

pub mod cli;
pub mod complexes;
pub mod dimform;
pub mod error;
pub mod groebner;
pub mod homoracle;
pub mod krull;
pub mod matpoly;
pub mod polyring;

pub use error::{Error, ParseError, Result};
