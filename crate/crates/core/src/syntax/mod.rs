//! Object-language and metalanguage syntax: propositions, names, assertions
//! and their textual grammar.

mod ast;
mod complex;
mod parser;

pub use ast::{is_identifier, quote, Assertion, Name, Proposition, RESERVED_WORDS};
pub use complex::ComplexNumber;
pub use parser::{parse_assertion, parse_complex, parse_proposition};

pub(crate) use parser::Cursor;
