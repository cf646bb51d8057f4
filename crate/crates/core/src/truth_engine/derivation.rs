//! Mechanical derivations of the two definitional equations, recorded as
//! linear traces of judgments.
//!
//! Classical `&`, from Convention T and the T-schema:
//!
//! ```text
//! 1. (T): 'A' true iff A   [convention-t]
//! 2. (T): 'B' true iff B   [convention-t]
//! 3. '(A & B)' true iff 'A' true and 'B' true   [t-schema from 1,2]
//! 4. |- 'A' iff A   [assertion-form from 1]
//! 5. |- 'B' iff B   [assertion-form from 2]
//! 6. (T): |- '(A & B)' iff A & B   [convention-t]
//! 7. |- '(A & B)' iff |- 'A' and |- 'B'   [t-schema from 6,3]
//! 8. |- A & B iff |- A and |- B   [discharge-quotes from 7]
//! ```
//!
//! Weighted superposition, from Convention PT:
//!
//! ```text
//! 1. (PT): |-[0.6] 'p0' iff P(p0)   [convention-pt]
//! 2. (PT): |-[0.8i] 'p1' iff P(p1)   [convention-pt]
//! 3. p0 [0.6, 0.8i]& p1 == P(p0) & P(p1)   [superposition-def from 1,2]
//! 4. (T): |- '(P(p0) & P(p1))' iff P(p0) & P(p1)   [convention-t]
//! 5. |- '(p0 [0.6, 0.8i]& p1)' iff p0 [0.6, 0.8i]& p1   [substitution from 3,4]
//! 6. |- p0 [0.6, 0.8i]& p1 iff |-[0.6] p0 and |-[0.8i] p1   [t-schema from 5,1,2]
//! ```

use std::fmt;
use std::str::FromStr;

use super::context::pt_judgment;
use super::convention::{convention_t, t_schema_claims};
use super::judgment::{Claim, Judgment, Link};
use crate::error::{Error, Result};
use crate::meta_calculus::{classical_definitional_equation, quantum_definitional_equation};
use crate::syntax::{quote, Assertion, ComplexNumber, Proposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    ConventionT,
    TSchema,
    AssertionForm,
    DischargeQuotes,
    ConventionPT,
    SuperpositionDef,
    Substitution,
}

impl Rule {
    pub const ALL: [Rule; 7] = [
        Rule::ConventionT,
        Rule::TSchema,
        Rule::AssertionForm,
        Rule::DischargeQuotes,
        Rule::ConventionPT,
        Rule::SuperpositionDef,
        Rule::Substitution,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Rule::ConventionT => "convention-t",
            Rule::TSchema => "t-schema",
            Rule::AssertionForm => "assertion-form",
            Rule::DischargeQuotes => "discharge-quotes",
            Rule::ConventionPT => "convention-pt",
            Rule::SuperpositionDef => "superposition-def",
            Rule::Substitution => "substitution",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rule> {
        Rule::ALL
            .into_iter()
            .find(|r| r.tag() == s)
            .ok_or_else(|| Error::Usage(format!("unknown rule tag `{s}`")))
    }
}

/// One judgment, the rule that produced it, and its premises (0-based line
/// indices, each strictly earlier than this line).
#[derive(Debug, Clone, PartialEq)]
pub struct TraceLine {
    pub judgment: String,
    pub rule: Rule,
    pub refs: Vec<usize>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct DerivationTrace {
    lines: Vec<TraceLine>,
}

impl DerivationTrace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a line and returns its index.
    ///
    /// # Panics
    ///
    /// If a premise index does not refer to an earlier line.
    pub fn push(&mut self, judgment: &Judgment, rule: Rule, refs: &[usize]) -> usize {
        let index = self.lines.len();
        assert!(
            refs.iter().all(|r| *r < index),
            "premises must precede line {}",
            index + 1
        );
        self.lines.push(TraceLine {
            judgment: judgment.to_string(),
            rule,
            refs: refs.to_vec(),
        });
        index
    }

    pub fn lines(&self) -> &[TraceLine] {
        &self.lines
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn conclusion(&self) -> Option<&str> {
        self.lines.last().map(|l| l.judgment.as_str())
    }
}

/// `n. <judgment>   [<rule> from m,k]`, one line each, 1-based numbering.
impl fmt::Display for DerivationTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, line) in self.lines.iter().enumerate() {
            write!(f, "{}. {}   [{}", i + 1, line.judgment, line.rule)?;
            if !line.refs.is_empty() {
                let refs: Vec<String> = line.refs.iter().map(|r| (r + 1).to_string()).collect();
                write!(f, " from {}", refs.join(","))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl FromStr for DerivationTrace {
    type Err = Error;

    /// Reads the rendering produced by `Display`. Premise numbers are not
    /// checked for order here; that is the verifier's job.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = Vec::new();
        for (i, raw) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let bad = |what: &str| Error::Usage(format!("trace line {}: {what}", i + 1));
            let (number, rest) = raw
                .split_once(". ")
                .ok_or_else(|| bad("missing line number"))?;
            if number.trim().parse::<usize>() != Ok(lines.len() + 1) {
                return Err(bad("line numbers must count up from 1"));
            }
            let (judgment, annotation) = rest
                .rsplit_once("   [")
                .ok_or_else(|| bad("missing rule annotation"))?;
            let annotation = annotation
                .strip_suffix(']')
                .ok_or_else(|| bad("unterminated rule annotation"))?;
            let (tag, refs) = match annotation.split_once(" from ") {
                Some((tag, refs)) => (tag, Some(refs)),
                None => (annotation, None),
            };
            let refs = refs
                .map(|r| {
                    r.split(',')
                        .map(|n| match n.trim().parse::<usize>() {
                            Ok(n) if n >= 1 => Ok(n - 1),
                            _ => Err(bad("bad premise number")),
                        })
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?
                .unwrap_or_default();
            lines.push(TraceLine {
                judgment: judgment.to_string(),
                rule: tag.parse()?,
                refs,
            });
        }
        Ok(DerivationTrace { lines })
    }
}

/// Derives `|- A & B iff |- A and |- B` from Convention T and the T-schema.
pub fn derive_classical_defeq(a: &str, b: &str) -> Result<DerivationTrace> {
    let pa = Proposition::atom(a)?;
    let pb = Proposition::atom(b)?;
    let conj = Proposition::and(pa.clone(), pb.clone());
    let mut trace = DerivationTrace::new();

    let t_a = trace.push(&convention_t(&pa).truth_form(), Rule::ConventionT, &[]);
    let t_b = trace.push(&convention_t(&pb).truth_form(), Rule::ConventionT, &[]);

    let schema = Judgment::iff(
        None,
        vec![Claim::True(quote(&conj))],
        t_schema_claims(&quote(&conj))?,
    );
    let schema = trace.push(&schema, Rule::TSchema, &[t_a, t_b]);

    for (p, premise) in [(&pa, t_a), (&pb, t_b)] {
        let form = Judgment::iff(
            None,
            vec![Claim::asserted_quoted(None, p)],
            vec![Claim::Formula(p.clone())],
        );
        trace.push(&form, Rule::AssertionForm, &[premise]);
    }

    let t_conj = trace.push(
        &convention_t(&conj).assertion_form(),
        Rule::ConventionT,
        &[],
    );

    let lhs_schema = Judgment::iff(
        None,
        vec![Claim::asserted_quoted(None, &conj)],
        vec![
            Claim::asserted_quoted(None, &pa),
            Claim::asserted_quoted(None, &pb),
        ],
    );
    let lhs_schema = trace.push(&lhs_schema, Rule::TSchema, &[t_conj, schema]);

    let equation = classical_definitional_equation(
        &Assertion::classical(pa.clone()),
        &Assertion::classical(pb.clone()),
    )?;
    trace.push(
        &defeq_judgment(&equation.lhs, equation.rhs.parts()),
        Rule::DischargeQuotes,
        &[lhs_schema],
    );
    Ok(trace)
}

/// Derives `|- p0 [l0, l1]& p1 iff |-[l0] p0 and |-[l1] p1` from
/// Convention PT.
pub fn derive_quantum_defeq(l0: ComplexNumber, l1: ComplexNumber) -> Result<DerivationTrace> {
    derive_superposition_defeq(&[(l0, "p0"), (l1, "p1")])
}

/// The n-ary generalisation of [`derive_quantum_defeq`] over named atoms.
pub fn derive_superposition_defeq(parts: &[(ComplexNumber, &str)]) -> Result<DerivationTrace> {
    let graded: Vec<Assertion> = parts
        .iter()
        .map(|(d, name)| Assertion::graded(*d, Proposition::atom(*name)?))
        .collect::<Result<_>>()?;
    // fails on arity or normalization before any line is written
    let equation = quantum_definitional_equation(&graded)?;
    let superposition = equation.lhs.subject().clone();

    let mut trace = DerivationTrace::new();
    let pt_lines: Vec<usize> = graded
        .iter()
        .map(|a| Ok(trace.push(&pt_judgment(a)?, Rule::ConventionPT, &[])))
        .collect::<Result<_>>()?;

    let probable = probable_conjunction(&graded)?;
    let definition = Judgment {
        convention: None,
        lhs: vec![Claim::Formula(superposition.clone())],
        link: Link::Defines,
        rhs: vec![Claim::Formula(probable.clone())],
    };
    let definition = trace.push(&definition, Rule::SuperpositionDef, &pt_lines);

    let t_probable = trace.push(
        &convention_t(&probable).assertion_form(),
        Rule::ConventionT,
        &[],
    );

    let substituted = Judgment::iff(
        None,
        vec![Claim::asserted_quoted(None, &superposition)],
        vec![Claim::Formula(superposition.clone())],
    );
    let substituted = trace.push(&substituted, Rule::Substitution, &[definition, t_probable]);

    let mut premises = vec![substituted];
    premises.extend(&pt_lines);
    trace.push(
        &defeq_judgment(&equation.lhs, equation.rhs.parts()),
        Rule::TSchema,
        &premises,
    );
    Ok(trace)
}

/// `P(p0) & P(p1) & ...`, left-nested.
pub(crate) fn probable_conjunction(parts: &[Assertion]) -> Result<Proposition> {
    let mut probs = parts
        .iter()
        .map(|a| Proposition::probably(a.subject().clone()));
    let first = probs.next().ok_or(Error::Arity { found: 0 })??;
    probs.try_fold(first, |acc, p| Ok(Proposition::and(acc, p?)))
}

/// A definitional equation as a judgment line.
pub(crate) fn defeq_judgment(lhs: &Assertion, rhs: &[Assertion]) -> Judgment {
    let claim = |a: &Assertion| {
        let degree = (!a.is_classical()).then(|| a.degree());
        Claim::asserted_plain(degree, a.subject())
    };
    Judgment::iff(None, vec![claim(lhs)], rhs.iter().map(claim).collect())
}
