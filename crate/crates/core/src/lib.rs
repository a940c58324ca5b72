//! Kernel, standard library and checker for interval-based dependent type
//! theories: raw De Bruijn terms, theories as data with a bounded rewriting
//! engine, a registry of interval/path/coercion theories, the derived terms
//! and theory morphisms relating them, and a calculus of finitely presented
//! models with homotopy certificates.

pub mod kernel;
pub mod models;
pub mod acceptance;
pub mod constructions;
pub mod stdlib;
pub mod report;
pub mod surface;
pub mod theory;

pub use kernel::{Arg, Endpoint, Kind, Sort, SymbolId, Telescope, Term};
pub use theory::{EqualityVerdict, Theory};
