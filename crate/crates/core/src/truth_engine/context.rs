use super::judgment::{Claim, Convention, Judgment};
use super::lukasiewicz::Valuation;
use crate::error::{Error, Result};
use crate::meta_calculus::MetaDataConstraint;
use crate::semantics::TruthValue;
use crate::syntax::{is_identifier, Assertion, ComplexNumber, Proposition};
use crate::STATE_TOLERANCE;

/// Boolean atoms `S`, a subset `S'` of them carrying a probability
/// distribution, and nothing else.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityContext {
    atoms: Vec<String>,
    probabilized: Vec<(String, f64)>,
}

impl ProbabilityContext {
    pub fn new<A, P>(
        atoms: impl IntoIterator<Item = A>,
        probabilities: impl IntoIterator<Item = (P, f64)>,
    ) -> Result<Self>
    where
        A: Into<String>,
        P: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        for (i, a) in atoms.iter().enumerate() {
            if !is_identifier(a) {
                return Err(Error::IllFormed(format!("`{a}` is not a valid atom name")));
            }
            if atoms[..i].contains(a) {
                return Err(Error::DuplicateAtom(a.clone()));
            }
        }
        let probabilized: Vec<(String, f64)> = probabilities
            .into_iter()
            .map(|(a, p)| (a.into(), p))
            .collect();
        if probabilized.is_empty() {
            return Err(Error::InvalidContext("no probabilized atoms".into()));
        }
        for (i, (a, p)) in probabilized.iter().enumerate() {
            if !atoms.contains(a) {
                return Err(Error::UnknownAtom(a.clone()));
            }
            if probabilized[..i].iter().any(|(b, _)| b == a) {
                return Err(Error::DuplicateAtom(a.clone()));
            }
            if !(0.0..=1.0).contains(p) {
                return Err(Error::InvalidContext(format!(
                    "p({a}) = {p} is not a probability"
                )));
            }
        }
        let total: f64 = probabilized.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > STATE_TOLERANCE {
            return Err(Error::NormalizationViolation {
                sum: total,
                tolerance: STATE_TOLERANCE,
            });
        }
        Ok(ProbabilityContext {
            atoms,
            probabilized,
        })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn probabilized(&self) -> impl Iterator<Item = (&str, f64)> {
        self.probabilized.iter().map(|(a, p)| (a.as_str(), *p))
    }

    pub fn probability(&self, atom: &str) -> Result<f64> {
        if let Some((_, p)) = self.probabilized.iter().find(|(a, _)| a == atom) {
            Ok(*p)
        } else if self.atoms.iter().any(|a| a == atom) {
            Err(Error::NotProbabilized(atom.to_string()))
        } else {
            Err(Error::UnknownAtom(atom.to_string()))
        }
    }

    /// `P(p_i) -> p(p_i)` for every probabilized atom.
    pub fn valuation(&self) -> Valuation {
        let mut v = Valuation::new();
        for (a, p) in &self.probabilized {
            let pa = Proposition::Probably(Box::new(Proposition::Atom(a.clone())));
            v.insert(pa, TruthValue::new(*p).unwrap_or(TruthValue::FALSE));
        }
        v
    }
}

/// `P(atom)` together with its truth value, the atom's probability.
pub fn probably(ctx: &ProbabilityContext, atom: &str) -> Result<(Proposition, TruthValue)> {
    let p = ctx.probability(atom)?;
    let formula = Proposition::probably(Proposition::atom(atom)?)?;
    Ok((formula, TruthValue::new(p)?))
}

/// Graded assertion of `atom` whose degree is the principal square root of
/// its probability.
pub fn convention_pt(ctx: &ProbabilityContext, atom: &str) -> Result<Assertion> {
    let p = ctx.probability(atom)?;
    Assertion::graded(ComplexNumber::real(p.sqrt())?, Proposition::atom(atom)?)
}

/// As [`convention_pt`] with the degree `sqrt(p) e^{i theta}`.
pub fn convention_pt_with_phase(
    ctx: &ProbabilityContext,
    atom: &str,
    theta: f64,
) -> Result<Assertion> {
    let p = ctx.probability(atom)?;
    Assertion::graded(
        ComplexNumber::from_polar(p.sqrt(), theta)?,
        Proposition::atom(atom)?,
    )
}

/// `(PT): |-[l] 'p' iff P(p)` for a graded assertion of a Boolean formula.
pub fn pt_judgment(a: &Assertion) -> Result<Judgment> {
    if a.is_classical() {
        return Err(Error::NotGraded);
    }
    let probable = Proposition::probably(a.subject().clone())?;
    Ok(Judgment::iff(
        Some(Convention::PT),
        vec![Claim::asserted_quoted(Some(a.degree()), a.subject())],
        vec![Claim::Formula(probable)],
    ))
}

/// Degrees produced by Convention PT over all probabilized atoms, in order.
pub fn pt_degrees(ctx: &ProbabilityContext) -> Result<Vec<ComplexNumber>> {
    ctx.probabilized()
        .map(|(a, _)| convention_pt(ctx, a).map(|x| x.degree()))
        .collect()
}

/// Whether Convention PT transports the context's normalization to the
/// degree constraint at input tolerance.
pub fn pt_preserves_metadata(ctx: &ProbabilityContext) -> Result<bool> {
    Ok(MetaDataConstraint::for_input(pt_degrees(ctx)?).is_satisfied())
}
