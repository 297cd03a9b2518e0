//! Exact computer algebra for finite-dimensional basic algebras given by
//! quivers with relations: structure-constant tables, right modules as
//! quiver representations, syzygies and the AR translate over symmetric
//! algebras, trivial extensions and endomorphism algebras of generators, and
//! a representation-type classifier for endomorphism algebras of generators
//! over symmetric algebras.

pub mod acceptance;
pub mod algebra;
pub mod classifier;
pub mod constructions;
pub mod error;
pub mod field;
pub mod graphs;
pub mod io;
pub mod linalg;
pub mod modules;

pub use error::{Error, Result};
pub use field::{Field, Fp, F2, F3, F5, Q};
pub use linalg::Matrix;
