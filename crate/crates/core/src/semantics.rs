//! Amplitude semantics: atoms are basis states of a finite complex space,
//! an asserted superposition is the vector of its degrees, and the squared
//! modulus of a degree is a fuzzy truth value.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::meta_calculus::MetaDataConstraint;
use crate::syntax::{is_identifier, Assertion, ComplexNumber, Proposition};
use crate::STATE_TOLERANCE;

/// Ordered, duplicate-free list of atom names; index `i` is basis state `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basis {
    atoms: Vec<String>,
}

impl Basis {
    pub fn new<S: Into<String>>(atoms: impl IntoIterator<Item = S>) -> Result<Self> {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::IllFormed("basis declares no atoms".into()));
        }
        for (i, name) in atoms.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::IllFormed(format!(
                    "`{name}` is not a valid atom name"
                )));
            }
            if atoms[..i].contains(name) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
        }
        Ok(Basis { atoms })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }
}

/// A normalized amplitude vector over a basis. Phases are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitState {
    basis: Basis,
    amplitudes: Vec<ComplexNumber>,
}

impl QubitState {
    pub fn new(basis: Basis, amplitudes: Vec<ComplexNumber>) -> Result<Self> {
        if amplitudes.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: amplitudes.len(),
            });
        }
        MetaDataConstraint::new(amplitudes.clone(), STATE_TOLERANCE).check()?;
        Ok(QubitState { basis, amplitudes })
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn amplitudes(&self) -> &[ComplexNumber] {
        &self.amplitudes
    }

    /// Same state with every amplitude multiplied by `e^{i theta}`.
    pub fn with_global_phase(&self, theta: f64) -> Result<Self> {
        let amplitudes = self
            .amplitudes
            .iter()
            .map(|a| a.rotate(theta))
            .collect::<Result<_>>()?;
        QubitState::new(self.basis.clone(), amplitudes)
    }
}

/// A partial truth value in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct TruthValue(f64);

impl TruthValue {
    pub const FALSE: TruthValue = TruthValue(0.0);
    pub const TRUE: TruthValue = TruthValue(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if (0.0..=1.0).contains(&value) {
            Ok(TruthValue(value))
        } else {
            Err(Error::TruthValueOutOfRange(value))
        }
    }

    /// `|degree|^2`, capped at 1 for degrees admitted by the input tolerance.
    pub fn of_degree(degree: ComplexNumber) -> Self {
        TruthValue(degree.norm_sqr().min(1.0))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn interpret_atom(name: &str, basis: &Basis) -> Result<QubitState> {
    let index = basis.require(name)?;
    let mut amplitudes = vec![ComplexNumber::ZERO; basis.len()];
    amplitudes[index] = ComplexNumber::ONE;
    QubitState::new(basis.clone(), amplitudes)
}

/// Places each degree at its operand's basis index.
pub fn interpret_superposition(p: &Proposition, basis: &Basis) -> Result<QubitState> {
    let Proposition::QuantumSuperposition(parts) = p else {
        return Err(Error::NotSuperposition);
    };
    let mut amplitudes = vec![ComplexNumber::ZERO; basis.len()];
    let mut seen = vec![false; basis.len()];
    for (degree, operand) in parts {
        let name = operand
            .as_atom()
            .ok_or_else(|| Error::NonAtomicOperand(operand.to_string()))?;
        let index = basis.require(name)?;
        if std::mem::replace(&mut seen[index], true) {
            return Err(Error::DuplicateOperand(name.to_string()));
        }
        amplitudes[index] = *degree;
    }
    MetaDataConstraint::for_input(parts.iter().map(|(d, _)| *d).collect()).check()?;
    QubitState::new(basis.clone(), amplitudes)
}

/// State denoted by an atom or a superposition of atoms.
pub fn interpret(p: &Proposition, basis: &Basis) -> Result<QubitState> {
    match p {
        Proposition::Atom(name) => interpret_atom(name, basis),
        Proposition::QuantumSuperposition(_) => interpret_superposition(p, basis),
        other => Err(Error::IllFormed(format!(
            "`{other}` has no amplitude interpretation"
        ))),
    }
}

/// `|degree|^2`; exactly 1 for a classical assertion.
pub fn truth_value(a: &Assertion) -> TruthValue {
    if a.is_classical() {
        TruthValue::TRUE
    } else {
        TruthValue::of_degree(a.degree())
    }
}

pub fn truth_profile(s: &QubitState) -> Vec<TruthValue> {
    s.amplitudes
        .iter()
        .map(|a| TruthValue::of_degree(*a))
        .collect()
}

/// One row of a rendered state: amplitude and truth value of a basis atom.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StateRecord {
    pub atom: String,
    pub re: f64,
    pub im: f64,
    pub truth: f64,
}

pub fn state_records(s: &QubitState) -> Vec<StateRecord> {
    s.basis
        .atoms
        .iter()
        .zip(&s.amplitudes)
        .zip(truth_profile(s))
        .map(|((atom, amp), truth)| StateRecord {
            atom: atom.clone(),
            re: amp.re(),
            im: amp.im(),
            truth: truth.value(),
        })
        .collect()
}

/// Fixed 12-significant-digit decimal rendering, e.g. `0.360000000000`.
pub fn sig12(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    let sci = format!("{x:.11e}");
    let exponent: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    let decimals = (11 - exponent).max(0) as usize;
    format!("{x:.decimals$}")
}

/// `x` rounded to 12 significant digits.
pub fn round_sig12(x: f64) -> f64 {
    sig12(x).parse().unwrap_or(x)
}
