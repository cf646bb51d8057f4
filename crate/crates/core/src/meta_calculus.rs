//! The metalanguage: compound assertions, the normalization side condition
//! on degrees, and the definitional equations read in both directions.
//!
//! Classical `&`:
//!
//! ```text
//! |- A & B  iff  |- A and |- B
//! ```
//!
//! Weighted superposition, for degrees with `sum |l_i|^2 = 1`:
//!
//! ```text
//! |- p0 [l0, l1]& p1  iff  |-[l0] p0 and |-[l1] p1
//! ```
//!
//! `compose_*` reads an equation right to left, `decompose_*` left to right.
//! Degrees are never rescaled: a violated constraint is an error.

use std::fmt;

use crate::error::{Error, Result};
use crate::syntax::{Assertion, ComplexNumber, Proposition};
use crate::INPUT_TOLERANCE;

/// Assertions joined by the metalinguistic "and".
#[derive(Debug, Clone, PartialEq)]
pub struct CompoundAssertion {
    parts: Vec<Assertion>,
}

impl CompoundAssertion {
    pub fn new(parts: Vec<Assertion>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Arity { found: 0 });
        }
        Ok(CompoundAssertion { parts })
    }

    pub fn parts(&self) -> &[Assertion] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Assertion> {
        self.parts
    }
}

impl fmt::Display for CompoundAssertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" and ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// `|sum_i |degree_i|^2 - 1| <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct MetaDataConstraint {
    degrees: Vec<ComplexNumber>,
    tolerance: f64,
}

impl MetaDataConstraint {
    pub fn new(degrees: Vec<ComplexNumber>, tolerance: f64) -> Self {
        MetaDataConstraint { degrees, tolerance }
    }

    /// Constraint over user-supplied degrees, at [`INPUT_TOLERANCE`].
    pub fn for_input(degrees: Vec<ComplexNumber>) -> Self {
        Self::new(degrees, INPUT_TOLERANCE)
    }

    pub fn degrees(&self) -> &[ComplexNumber] {
        &self.degrees
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn total(&self) -> f64 {
        self.degrees.iter().map(|d| d.norm_sqr()).sum()
    }

    pub fn is_satisfied(&self) -> bool {
        !self.degrees.is_empty() && (self.total() - 1.0).abs() <= self.tolerance
    }

    pub fn check(&self) -> Result<()> {
        if self.is_satisfied() {
            Ok(())
        } else {
            Err(Error::NormalizationViolation {
                sum: self.total(),
                tolerance: self.tolerance,
            })
        }
    }
}

/// Whether the degrees' squared moduli sum to 1 within [`INPUT_TOLERANCE`].
/// An empty list never satisfies the constraint.
pub fn check_metadata(degrees: &[ComplexNumber]) -> bool {
    MetaDataConstraint::for_input(degrees.to_vec()).is_satisfied()
}

/// `|- A` and `|- B` yield `|- A & B`.
pub fn compose_classical(a: &Assertion, b: &Assertion) -> Result<Assertion> {
    if !(a.is_classical() && b.is_classical()) {
        return Err(Error::NotClassical);
    }
    Ok(Assertion::classical(Proposition::and(
        a.subject().clone(),
        b.subject().clone(),
    )))
}

/// `|- A & B` yields `|- A` and `|- B`.
pub fn decompose_classical(c: &Assertion) -> Result<(Assertion, Assertion)> {
    if !c.is_classical() {
        return Err(Error::NotClassical);
    }
    match c.subject() {
        Proposition::ClassicalAnd(l, r) => Ok((
            Assertion::classical((**l).clone()),
            Assertion::classical((**r).clone()),
        )),
        _ => Err(Error::NotConjunction),
    }
}

/// Graded parts `|-[l_i] p_i` yield the classical assertion of their
/// superposition, provided there are at least two and their degrees are
/// normalized.
pub fn compose_quantum(parts: &[Assertion]) -> Result<Assertion> {
    if parts.len() < 2 {
        return Err(Error::Arity { found: parts.len() });
    }
    if parts.iter().any(Assertion::is_classical) {
        return Err(Error::NotGraded);
    }
    let degrees: Vec<_> = parts.iter().map(Assertion::degree).collect();
    MetaDataConstraint::for_input(degrees).check()?;
    let superposition = Proposition::superposition(
        parts
            .iter()
            .map(|a| (a.degree(), a.subject().clone()))
            .collect(),
    )?;
    Ok(Assertion::classical(superposition))
}

/// Recovers the graded parts of an asserted superposition, degrees
/// untouched.
pub fn decompose_quantum(c: &Assertion) -> Result<Vec<Assertion>> {
    match c.subject() {
        Proposition::QuantumSuperposition(parts) => parts
            .iter()
            .map(|(degree, p)| Assertion::graded(*degree, p.clone()))
            .collect(),
        _ => Err(Error::NotSuperposition),
    }
}

/// A definitional equation `lhs iff rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct DefinitionalEquation {
    pub lhs: Assertion,
    pub rhs: CompoundAssertion,
}

impl fmt::Display for DefinitionalEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} iff {}", self.lhs, self.rhs)
    }
}

/// The definitional equation of `&` instantiated at two classical
/// assertions.
pub fn classical_definitional_equation(
    a: &Assertion,
    b: &Assertion,
) -> Result<DefinitionalEquation> {
    let lhs = compose_classical(a, b)?;
    Ok(DefinitionalEquation {
        lhs,
        rhs: CompoundAssertion::new(vec![a.clone(), b.clone()])?,
    })
}

/// The definitional equation of the superposition connective instantiated
/// at graded parts.
pub fn quantum_definitional_equation(parts: &[Assertion]) -> Result<DefinitionalEquation> {
    let lhs = compose_quantum(parts)?;
    Ok(DefinitionalEquation {
        lhs,
        rhs: CompoundAssertion::new(parts.to_vec())?,
    })
}
