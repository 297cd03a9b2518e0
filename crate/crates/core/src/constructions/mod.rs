//! Algebra constructions: family constructors, trivial extensions,
//! endomorphism algebras and Morita context rings.

pub mod coext;
pub mod endo;
pub mod families;
pub mod morita;
pub mod triv;

pub use coext::{coext_vs_gendo_check, CoextReport};
pub use endo::{endomorphism_algebra, gendo_algebra, EndAlgebra, GendoTriple};
pub use families::{modified_brauer_star, nakayama, path_algebra, triv_kq};
pub use triv::{inflate, injective_kq, trivial_extension};
pub use morita::{auslander_context, morita_context_ring, one_point_coextension, triangular_ring, BimoduleData};
