use std::fmt;

use super::complex::ComplexNumber;
use crate::error::{Error, Result};
use crate::INPUT_TOLERANCE;

/// Words the judgment grammar uses as links; they can never name an atom.
pub const RESERVED_WORDS: [&str; 3] = ["and", "iff", "true"];

/// An object-language proposition.
///
/// The variants are public so callers can pattern-match; build values with
/// the checked constructors (or [`parse_proposition`](super::parse_proposition))
/// so the well-formedness rules in [`Proposition::validate`] hold.
#[derive(Debug, Clone, PartialEq)]
pub enum Proposition {
    Atom(String),
    ClassicalAnd(Box<Proposition>, Box<Proposition>),
    /// Weighted parts `(degree, operand)`, at least two, in order.
    QuantumSuperposition(Vec<(ComplexNumber, Proposition)>),
    /// The fuzzy modality "probably" over a Boolean base formula.
    Probably(Box<Proposition>),
    LukaNeg(Box<Proposition>),
    LukaStrongAnd(Box<Proposition>, Box<Proposition>),
    LukaImplies(Box<Proposition>, Box<Proposition>),
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED_WORDS.contains(&name)
}

impl Proposition {
    pub fn atom(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_identifier(&name) {
            Ok(Proposition::Atom(name))
        } else {
            Err(Error::IllFormed(format!(
                "`{name}` is not a valid atom name"
            )))
        }
    }

    pub fn and(left: Proposition, right: Proposition) -> Self {
        Proposition::ClassicalAnd(Box::new(left), Box::new(right))
    }

    pub fn superposition(parts: Vec<(ComplexNumber, Proposition)>) -> Result<Self> {
        let p = Proposition::QuantumSuperposition(parts);
        p.check_node()?;
        Ok(p)
    }

    pub fn probably(inner: Proposition) -> Result<Self> {
        let p = Proposition::Probably(Box::new(inner));
        p.check_node()?;
        Ok(p)
    }

    pub fn luka_neg(inner: Proposition) -> Result<Self> {
        let p = Proposition::LukaNeg(Box::new(inner));
        p.check_node()?;
        Ok(p)
    }

    pub fn luka_strong_and(left: Proposition, right: Proposition) -> Result<Self> {
        let p = Proposition::LukaStrongAnd(Box::new(left), Box::new(right));
        p.check_node()?;
        Ok(p)
    }

    pub fn luka_implies(left: Proposition, right: Proposition) -> Result<Self> {
        let p = Proposition::LukaImplies(Box::new(left), Box::new(right));
        p.check_node()?;
        Ok(p)
    }

    pub fn as_atom(&self) -> Option<&str> {
        match self {
            Proposition::Atom(name) => Some(name),
            _ => None,
        }
    }

    /// Atom or classical conjunction of Boolean formulas.
    pub fn is_boolean(&self) -> bool {
        match self {
            Proposition::Atom(_) => true,
            Proposition::ClassicalAnd(l, r) => l.is_boolean() && r.is_boolean(),
            _ => false,
        }
    }

    /// A P-atom or a Lukasiewicz compound.
    pub fn is_lukasiewicz(&self) -> bool {
        matches!(
            self,
            Proposition::Probably(_)
                | Proposition::LukaNeg(_)
                | Proposition::LukaStrongAnd(..)
                | Proposition::LukaImplies(..)
        )
    }

    /// True for a proposition containing neither a superposition nor a
    /// probably-modality anywhere.
    pub fn is_classical(&self) -> bool {
        match self {
            Proposition::Atom(_) => true,
            Proposition::ClassicalAnd(l, r) => l.is_classical() && r.is_classical(),
            _ => false,
        }
    }

    /// Atom names in order of first occurrence.
    pub fn atoms(&self) -> Vec<&str> {
        fn walk<'a>(p: &'a Proposition, out: &mut Vec<&'a str>) {
            match p {
                Proposition::Atom(name) => {
                    if !out.contains(&name.as_str()) {
                        out.push(name);
                    }
                }
                Proposition::ClassicalAnd(l, r)
                | Proposition::LukaStrongAnd(l, r)
                | Proposition::LukaImplies(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                Proposition::QuantumSuperposition(parts) => {
                    for (_, q) in parts {
                        walk(q, out);
                    }
                }
                Proposition::Probably(x) | Proposition::LukaNeg(x) => walk(x, out),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn is_compound(&self) -> bool {
        matches!(
            self,
            Proposition::ClassicalAnd(..)
                | Proposition::QuantumSuperposition(_)
                | Proposition::LukaStrongAnd(..)
                | Proposition::LukaImplies(..)
        )
    }

    fn check_node(&self) -> Result<()> {
        match self {
            Proposition::Atom(name) if !is_identifier(name) => Err(Error::IllFormed(format!(
                "`{name}` is not a valid atom name"
            ))),
            Proposition::QuantumSuperposition(parts) if parts.len() < 2 => {
                Err(Error::Arity { found: parts.len() })
            }
            Proposition::Probably(inner) if !inner.is_boolean() => Err(Error::IllFormed(format!(
                "P(..) applies to Boolean formulas only, got `{inner}`"
            ))),
            Proposition::LukaNeg(x) if !x.is_lukasiewicz() => Err(Error::IllFormed(format!(
                "`~` applies to P-formulas only, got `{x}`"
            ))),
            Proposition::LukaStrongAnd(l, r) | Proposition::LukaImplies(l, r)
                if !(l.is_lukasiewicz() && r.is_lukasiewicz()) =>
            {
                Err(Error::IllFormed(format!(
                    "Lukasiewicz connectives apply to P-formulas only, got `{self}`"
                )))
            }
            _ => Ok(()),
        }
    }

    /// Checks every node of the tree against the structural rules.
    pub fn validate(&self) -> Result<()> {
        self.check_node()?;
        match self {
            Proposition::Atom(_) => Ok(()),
            Proposition::ClassicalAnd(l, r)
            | Proposition::LukaStrongAnd(l, r)
            | Proposition::LukaImplies(l, r) => {
                l.validate()?;
                r.validate()
            }
            Proposition::QuantumSuperposition(parts) => {
                parts.iter().try_for_each(|(_, p)| p.validate())
            }
            Proposition::Probably(x) | Proposition::LukaNeg(x) => x.validate(),
        }
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_compound() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Proposition::Atom(name) => f.write_str(name),
            Proposition::ClassicalAnd(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" & ")?;
                r.fmt_operand(f)
            }
            Proposition::QuantumSuperposition(parts) => {
                let Some(((_, first), rest)) = parts.split_first() else {
                    return Ok(());
                };
                first.fmt_operand(f)?;
                f.write_str(" [")?;
                for (i, (degree, _)) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{degree}")?;
                }
                f.write_str("]& ")?;
                for (i, (_, operand)) in rest.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    operand.fmt_operand(f)?;
                }
                Ok(())
            }
            Proposition::Probably(inner) => write!(f, "P({inner})"),
            Proposition::LukaNeg(inner) => {
                f.write_str("~")?;
                inner.fmt_operand(f)
            }
            Proposition::LukaStrongAnd(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" * ")?;
                r.fmt_operand(f)
            }
            Proposition::LukaImplies(l, r) => {
                l.fmt_operand(f)?;
                f.write_str(" -> ")?;
                r.fmt_operand(f)
            }
        }
    }
}

/// The metalanguage name `'p'` of an object-language proposition.
#[derive(Debug, Clone, PartialEq)]
pub struct Name(Proposition);

impl Name {
    pub fn named(&self) -> &Proposition {
        &self.0
    }

    pub fn into_named(self) -> Proposition {
        self.0
    }
}

/// Quotation: forms the name of `p`. Injective, since names compare by the
/// structure of what they name.
pub fn quote(p: &Proposition) -> Name {
    Name(p.clone())
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("'")?;
        self.0.fmt_operand(f)?;
        f.write_str("'")
    }
}

/// A metalanguage judgment `|- p` (classical) or `|-[degree] p` (graded).
#[derive(Debug, Clone, PartialEq)]
pub struct Assertion {
    degree: ComplexNumber,
    subject: Proposition,
    classical: bool,
}

impl Assertion {
    pub fn classical(subject: Proposition) -> Self {
        Assertion {
            degree: ComplexNumber::ONE,
            subject,
            classical: true,
        }
    }

    /// Graded assertion; the degree may exceed the unit disc only by the
    /// input tolerance.
    pub fn graded(degree: ComplexNumber, subject: Proposition) -> Result<Self> {
        let norm_sqr = degree.norm_sqr();
        if norm_sqr > 1.0 + INPUT_TOLERANCE {
            return Err(Error::DegreeOutOfRange { norm_sqr });
        }
        Ok(Assertion {
            degree,
            subject,
            classical: false,
        })
    }

    pub fn degree(&self) -> ComplexNumber {
        self.degree
    }

    pub fn subject(&self) -> &Proposition {
        &self.subject
    }

    pub fn is_classical(&self) -> bool {
        self.classical
    }

    /// The classical reading of an assertion whose degree is exactly `1`.
    pub fn classical_limit(&self) -> Option<Assertion> {
        (self.classical || self.degree.bit_eq(ComplexNumber::ONE))
            .then(|| Assertion::classical(self.subject.clone()))
    }

    /// Structural equality with degrees compared bit for bit.
    pub fn bit_eq(&self, other: &Assertion) -> bool {
        self.classical == other.classical
            && self.degree.bit_eq(other.degree)
            && self.subject == other.subject
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classical {
            write!(f, "|- {}", self.subject)
        } else {
            write!(f, "|-[{}] {}", self.degree, self.subject)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(n: &str) -> Proposition {
        Proposition::atom(n).unwrap()
    }

    #[test]
    fn atoms_in_first_occurrence_order() {
        let p = crate::syntax::parse_proposition("(B & A) [0.6, 0.48, 0.64]& (C & B), A").unwrap();
        assert_eq!(p.atoms(), ["B", "A", "C"]);
    }

    #[test]
    fn reserved_words_are_not_atoms() {
        for w in RESERVED_WORDS {
            assert!(Proposition::atom(w).is_err());
        }
        assert!(Proposition::atom("9x").is_err());
        assert!(Proposition::atom("G_F").is_ok());
    }

    #[test]
    fn probably_wraps_boolean_only() {
        assert!(Proposition::probably(Proposition::and(atom("a"), atom("b"))).is_ok());
        let pa = Proposition::probably(atom("a")).unwrap();
        assert!(Proposition::probably(pa.clone()).is_err());
        assert!(Proposition::luka_neg(pa.clone()).is_ok());
        assert!(Proposition::luka_neg(atom("a")).is_err());
        assert!(Proposition::luka_implies(pa, atom("b")).is_err());
    }

    #[test]
    fn superposition_needs_two_parts() {
        let err = Proposition::superposition(vec![(ComplexNumber::ONE, atom("p0"))]);
        assert_eq!(err, Err(Error::Arity { found: 1 }));
    }

    #[test]
    fn quote_renders_compounds_in_parens() {
        assert_eq!(quote(&atom("snow_is_white")).to_string(), "'snow_is_white'");
        let ab = Proposition::and(atom("A"), atom("B"));
        assert_eq!(quote(&ab).to_string(), "'(A & B)'");
        assert_eq!(quote(&ab), quote(&ab.clone()));
        assert_ne!(quote(&ab), quote(&Proposition::and(atom("B"), atom("A"))));
    }

    #[test]
    fn graded_degree_range() {
        let two = ComplexNumber::real(2.0).unwrap();
        assert!(matches!(
            Assertion::graded(two, atom("p0")),
            Err(Error::DegreeOutOfRange { .. })
        ));
        let a = Assertion::graded(ComplexNumber::real(0.6).unwrap(), atom("p0")).unwrap();
        assert_eq!(a.to_string(), "|-[0.6] p0");
        assert!(a.classical_limit().is_none());
    }

    #[test]
    fn degree_one_has_classical_limit() {
        let a = Assertion::graded(ComplexNumber::ONE, atom("p0")).unwrap();
        assert_eq!(a.classical_limit(), Some(Assertion::classical(atom("p0"))));
    }
}
