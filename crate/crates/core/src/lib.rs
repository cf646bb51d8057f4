//! A small logic kernel for graded assertions.
//!
//! Propositions of an object language are asserted in a metalanguage with a
//! complex *assertion degree*; the squared modulus of the degree is the
//! proposition's fuzzy truth value. On top of that the crate provides:
//!
//! - [`syntax`]: the proposition/assertion grammar, printer and quotation.
//! - [`meta_calculus`]: definitional equations for the classical `&` and the
//!   weighted superposition connective, with the normalization side condition.
//! - [`semantics`]: atoms as basis states, superpositions as amplitude vectors.
//! - [`truth_engine`]: Convention T, the T-schema, the "probably" modality,
//!   Convention PT, mechanical derivation traces with an independent checker,
//!   a Lukasiewicz layer over P-atoms and the Goedel-sentence report.
//! - [`decoherence`]: projective measurement with a reproducible counter-based
//!   random stream.
//! - [`cli`]: the script format and the commands behind the `qmeta` binary.

pub mod cli;
pub mod decoherence;
pub mod error;
pub mod meta_calculus;
pub mod semantics;
pub mod syntax;
pub mod truth_engine;

pub use error::{Error, Result};

/// Accepted deviation of `sum |degree|^2` from 1 for user-entered degrees.
pub const INPUT_TOLERANCE: f64 = 1e-6;

/// Required deviation bound for constructed amplitude states.
pub const STATE_TOLERANCE: f64 = 1e-9;
