//! Independent checker for derivation traces.
//!
//! Every line is re-parsed from its text, and the judgment its rule should
//! produce is rebuilt from the parsed premises alone. A line is accepted
//! only if the rebuilt judgment equals the parsed one. Lines are checked
//! independently of each other, so a bad line never masks a later one.

use super::derivation::{DerivationTrace, Rule};
use super::judgment::{Claim, Convention, Judgment, Link, Term};
use crate::error::{Error, Result};
use crate::meta_calculus::check_metadata;
use crate::syntax::{quote, ComplexNumber, Proposition};
use crate::INPUT_TOLERANCE;

type Check<T> = std::result::Result<T, String>;

/// Verdict for every line, in order.
pub fn check_lines(trace: &DerivationTrace) -> Vec<Result<()>> {
    (0..trace.len())
        .map(|i| {
            check_line(trace, i).map_err(|reason| Error::InvalidStep {
                line: i + 1,
                reason,
            })
        })
        .collect()
}

/// Accepts the trace iff every line checks; reports the first failure.
pub fn verify_trace(trace: &DerivationTrace) -> Result<()> {
    if trace.is_empty() {
        return Err(Error::InvalidStep {
            line: 0,
            reason: "empty trace".into(),
        });
    }
    check_lines(trace).into_iter().collect()
}

fn parse(text: &str) -> Check<Judgment> {
    Judgment::parse(text).map_err(|e| format!("unparseable judgment `{text}`: {e}"))
}

fn check_line(trace: &DerivationTrace, index: usize) -> Check<()> {
    let line = &trace.lines()[index];
    if let Some(r) = line.refs.iter().find(|r| **r >= index) {
        return Err(format!("premise {} does not precede this line", r + 1));
    }
    let judgment = parse(&line.judgment)?;
    let premises = line
        .refs
        .iter()
        .map(|r| parse(&trace.lines()[*r].judgment))
        .collect::<Check<Vec<_>>>()?;

    let expected = match line.rule {
        Rule::ConventionT => {
            no_premises(&premises)?;
            if truth_convention(&judgment).is_some()
                || assertion_convention(&judgment, Some(Convention::T)).is_some()
            {
                return Ok(());
            }
            return Err("not an instance of `(T): 'p' true iff p` or `(T): |- 'p' iff p`".into());
        }
        Rule::ConventionPT => {
            no_premises(&premises)?;
            return pt_line(&judgment)
                .map(|_| ())
                .ok_or_else(|| "not an instance of `(PT): |-[l] 'p' iff P(p)`".into());
        }
        Rule::AssertionForm => {
            let [premise] = premises.as_slice() else {
                return Err("assertion-form takes one premise".into());
            };
            let p = truth_convention(premise).ok_or("premise is not a Convention T truth claim")?;
            Judgment::iff(
                None,
                vec![Claim::asserted_quoted(None, &p)],
                vec![Claim::Formula(p)],
            )
        }
        Rule::TSchema => t_schema(&premises)?,
        Rule::DischargeQuotes => {
            let [premise] = premises.as_slice() else {
                return Err("discharge-quotes takes one premise".into());
            };
            discharge(premise)?
        }
        Rule::SuperpositionDef => {
            let parts = premises
                .iter()
                .map(|p| {
                    pt_line(p).ok_or_else(|| "premise is not a Convention PT line".to_string())
                })
                .collect::<Check<Vec<_>>>()?;
            if parts.len() < 2 {
                return Err("a superposition needs at least two Convention PT premises".into());
            }
            let degrees: Vec<ComplexNumber> = parts.iter().map(|(d, _)| *d).collect();
            if !check_metadata(&degrees) {
                return Err("premise degrees are not normalized".into());
            }
            let mut probable = parts
                .iter()
                .map(|(_, p)| Proposition::Probably(Box::new(p.clone())));
            let first = probable.next().ok_or("no premises")?;
            let conjunction = probable.fold(first, Proposition::and);
            Judgment {
                convention: None,
                lhs: vec![Claim::Formula(Proposition::QuantumSuperposition(parts))],
                link: Link::Defines,
                rhs: vec![Claim::Formula(conjunction)],
            }
        }
        Rule::Substitution => {
            let [definition, instance] = premises.as_slice() else {
                return Err("substitution takes a definition and a Convention T line".into());
            };
            let (defined, definiens) =
                definition_parts(definition).ok_or("first premise is not a definition `S == D`")?;
            let named = assertion_convention(instance, Some(Convention::T))
                .ok_or("second premise is not `(T): |- 'D' iff D`")?;
            if named != definiens {
                return Err("second premise does not name the definiens".into());
            }
            Judgment::iff(
                None,
                vec![Claim::asserted_quoted(None, &defined)],
                vec![Claim::Formula(defined)],
            )
        }
    };

    if expected == judgment {
        Ok(())
    } else {
        Err(format!("does not follow; expected `{expected}`"))
    }
}

fn no_premises(premises: &[Judgment]) -> Check<()> {
    if premises.is_empty() {
        Ok(())
    } else {
        Err("an axiom instance takes no premises".into())
    }
}

/// `(T): 'p' true iff p`, returning `p`.
fn truth_convention(j: &Judgment) -> Option<Proposition> {
    match (j.convention, j.link, j.lhs.as_slice(), j.rhs.as_slice()) {
        (Some(Convention::T), Link::Iff, [Claim::True(n)], [Claim::Formula(p)])
            if n.named() == p =>
        {
            Some(p.clone())
        }
        _ => None,
    }
}

/// `[tag] |- 'p' iff p`, returning `p`.
fn assertion_convention(j: &Judgment, tag: Option<Convention>) -> Option<Proposition> {
    match (j.link, j.lhs.as_slice(), j.rhs.as_slice()) {
        (
            Link::Iff,
            [Claim::Asserted {
                degree: None,
                term: Term::Quoted(n),
            }],
            [Claim::Formula(p)],
        ) if j.convention == tag && n.named() == p => Some(p.clone()),
        _ => None,
    }
}

/// `(PT): |-[l] 'p' iff P(p)`, returning `(l, p)`.
fn pt_line(j: &Judgment) -> Option<(ComplexNumber, Proposition)> {
    match (j.convention, j.link, j.lhs.as_slice(), j.rhs.as_slice()) {
        (
            Some(Convention::PT),
            Link::Iff,
            [Claim::Asserted {
                degree: Some(d),
                term: Term::Quoted(n),
            }],
            [Claim::Formula(Proposition::Probably(inner))],
        ) if n.named() == &**inner && d.norm_sqr() <= 1.0 + INPUT_TOLERANCE => {
            Some((*d, n.named().clone()))
        }
        _ => None,
    }
}

fn definition_parts(j: &Judgment) -> Option<(Proposition, Proposition)> {
    match (j.convention, j.link, j.lhs.as_slice(), j.rhs.as_slice()) {
        (None, Link::Defines, [Claim::Formula(s)], [Claim::Formula(d)]) => {
            Some((s.clone(), d.clone()))
        }
        _ => None,
    }
}

fn t_schema(premises: &[Judgment]) -> Check<Judgment> {
    let Some(first) = premises.first() else {
        return Err("t-schema needs premises".into());
    };

    // 'A' true, 'B' true  =>  '(A & B)' true iff 'A' true and 'B' true
    if let [a, b] = premises {
        if let (Some(x), Some(y)) = (truth_convention(a), truth_convention(b)) {
            let conj = Proposition::and(x.clone(), y.clone());
            return Ok(Judgment::iff(
                None,
                vec![Claim::True(quote(&conj))],
                vec![Claim::True(quote(&x)), Claim::True(quote(&y))],
            ));
        }
    }

    // (T): |- '(A & B)' iff A & B  with the truth schema for A & B
    if let Some(conj) = assertion_convention(first, Some(Convention::T)) {
        let Proposition::ClassicalAnd(x, y) = &conj else {
            return Err("Convention T premise does not name a conjunction".into());
        };
        let (x, y) = ((**x).clone(), (**y).clone());
        let [_, schema] = premises else {
            return Err("expected the Convention T line and the truth schema".into());
        };
        let expected_schema = Judgment::iff(
            None,
            vec![Claim::True(quote(&conj))],
            vec![Claim::True(quote(&x)), Claim::True(quote(&y))],
        );
        if *schema != expected_schema {
            return Err("second premise is not the truth schema of the same conjunction".into());
        }
        return Ok(Judgment::iff(
            None,
            vec![Claim::asserted_quoted(None, &conj)],
            vec![
                Claim::asserted_quoted(None, &x),
                Claim::asserted_quoted(None, &y),
            ],
        ));
    }

    // |- 'S' iff S  with Convention PT for each part of S
    if let Some(s @ Proposition::QuantumSuperposition(_)) = assertion_convention(first, None) {
        let Proposition::QuantumSuperposition(parts) = &s else {
            unreachable!()
        };
        let pts = premises[1..]
            .iter()
            .map(|p| pt_line(p).ok_or_else(|| "premise is not a Convention PT line".to_string()))
            .collect::<Check<Vec<_>>>()?;
        if pts != *parts {
            return Err("Convention PT premises do not match the superposition's parts".into());
        }
        let degrees: Vec<ComplexNumber> = parts.iter().map(|(d, _)| *d).collect();
        if !check_metadata(&degrees) {
            return Err("degrees are not normalized".into());
        }
        let rhs = parts
            .iter()
            .map(|(d, p)| Claim::asserted_plain(Some(*d), p))
            .collect();
        return Ok(Judgment::iff(
            None,
            vec![Claim::asserted_plain(None, &s)],
            rhs,
        ));
    }

    Err("no T-schema instance matches the premises".into())
}

fn discharge(premise: &Judgment) -> Check<Judgment> {
    if !(Judgment::side_has_quote(&premise.lhs) && Judgment::side_has_quote(&premise.rhs)) {
        return Err("quotation marks must appear on both sides to be discharged".into());
    }
    let unquote = |side: &[Claim]| {
        side.iter()
            .map(|c| match c {
                Claim::True(_) => Err("a truth claim cannot be discharged".to_string()),
                Claim::Asserted { degree, term } => Ok(Claim::Asserted {
                    degree: *degree,
                    term: match term {
                        Term::Quoted(n) => Term::Plain(n.named().clone()),
                        plain => plain.clone(),
                    },
                }),
                Claim::Formula(p) => Ok(Claim::Formula(p.clone())),
            })
            .collect::<Check<Vec<_>>>()
    };
    Ok(Judgment {
        convention: None,
        lhs: unquote(&premise.lhs)?,
        link: premise.link,
        rhs: unquote(&premise.rhs)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truth_engine::derivation::{derive_classical_defeq, derive_quantum_defeq};

    fn c(re: f64, im: f64) -> ComplexNumber {
        ComplexNumber::new(re, im).unwrap()
    }

    #[test]
    fn accepts_generated_traces() {
        verify_trace(&derive_classical_defeq("A", "B").unwrap()).unwrap();
        verify_trace(&derive_classical_defeq("A", "A").unwrap()).unwrap();
        verify_trace(&derive_quantum_defeq(c(0.6, 0.0), c(0.0, 0.8)).unwrap()).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        verify_trace(&derive_quantum_defeq(c(h, 0.0), c(h, 0.0)).unwrap()).unwrap();
    }

    fn tamper(trace: &DerivationTrace, line: usize, from: &str, to: &str) -> DerivationTrace {
        let text = trace.to_string();
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        lines[line] = lines[line].replacen(from, to, 1);
        lines.join("\n").parse().unwrap()
    }

    #[test]
    fn rejects_tampered_lines() {
        let t = derive_classical_defeq("A", "B").unwrap();
        let bad = tamper(&t, 7, "|- A and", "|- B and");
        assert!(matches!(
            verify_trace(&bad),
            Err(Error::InvalidStep { line: 8, .. })
        ));

        let bad = tamper(&t, 2, "'B' true", "'A' true");
        let report = check_lines(&bad);
        assert!(report[2].is_err());
        assert!(report
            .iter()
            .enumerate()
            .all(|(i, r)| i == 2 || i == 6 || r.is_ok()));

        let q = derive_quantum_defeq(c(0.6, 0.0), c(0.0, 0.8)).unwrap();
        let bad = tamper(&q, 5, "|-[0.8i] p1", "|-[0.8] p1");
        assert!(matches!(
            verify_trace(&bad),
            Err(Error::InvalidStep { line: 6, .. })
        ));
        let bad = tamper(&q, 2, "[0.6, 0.8i]", "[0.6, 0.9i]");
        assert!(check_lines(&bad)[2].is_err());
    }

    #[test]
    fn rejects_forward_references_and_wrong_rules() {
        let t = derive_classical_defeq("A", "B").unwrap();
        let bad = tamper(&t, 3, "from 1", "from 5");
        assert!(matches!(
            verify_trace(&bad),
            Err(Error::InvalidStep { line: 4, .. })
        ));
        let bad = tamper(&t, 7, "discharge-quotes", "assertion-form");
        assert!(verify_trace(&bad).is_err());
    }

    #[test]
    fn discharge_needs_quotes_on_both_sides() {
        let j = Judgment::parse("|- 'A' iff A").unwrap();
        assert!(discharge(&j).is_err());
    }
}
