//! Generalized Schur polynomials attached to a three-term recurrence
//! `z φ_i = φ_{i+1} + a(i) φ_i + b(i) φ_{i-1}`, computed exactly by the
//! bialternant, Jacobi–Trudy and Giambelli routes, with presets for the
//! classical cases and a stable/super layer in a formal dimension `d`.

pub mod cli;
pub mod coeffseq;
pub mod error;
pub mod exactalg;
pub mod gschur;
pub mod partitions;
pub mod presets;
pub mod stable;

pub use coeffseq::{CoeffSeq, NegativeExtension, UniPolySeq};
pub use error::{Error, Result, Which};
pub use exactalg::{MultiPoly, PolyMatrix, Rational};
pub use gschur::GschurContext;
pub use partitions::Partition;
