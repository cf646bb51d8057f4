use std::fmt;

use super::judgment::{Claim, Convention, Judgment};
use crate::error::{Error, Result};
use crate::meta_calculus::CompoundAssertion;
use crate::syntax::{quote, Assertion, Name, Proposition};

/// `'p' true iff p`: the adequacy condition instantiated at one sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct TarskiBiconditional {
    pub name: Name,
    pub proposition: Proposition,
}

impl TarskiBiconditional {
    /// `(T): 'p' true iff p`
    pub fn truth_form(&self) -> Judgment {
        Judgment::iff(
            Some(Convention::T),
            vec![Claim::True(self.name.clone())],
            vec![Claim::Formula(self.proposition.clone())],
        )
    }

    /// `(T): |- 'p' iff p`
    pub fn assertion_form(&self) -> Judgment {
        Judgment::iff(
            Some(Convention::T),
            vec![Claim::asserted_quoted(None, &self.proposition)],
            vec![Claim::Formula(self.proposition.clone())],
        )
    }
}

impl fmt::Display for TarskiBiconditional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.truth_form())
    }
}

pub fn convention_t(p: &Proposition) -> TarskiBiconditional {
    TarskiBiconditional {
        name: quote(p),
        proposition: p.clone(),
    }
}

/// Distributes truth over a named conjunction: `'(A & B)'` is true iff `A`
/// is true and `B` is true. The conjunct claims come back as classical
/// assertions, the assertion form of "is true".
pub fn t_schema_expand(n: &Name) -> Result<CompoundAssertion> {
    match n.named() {
        Proposition::ClassicalAnd(l, r) => CompoundAssertion::new(vec![
            Assertion::classical((**l).clone()),
            Assertion::classical((**r).clone()),
        ]),
        _ => Err(Error::NotConjunction),
    }
}

/// The same expansion as truth claims about the conjuncts' names.
pub fn t_schema_claims(n: &Name) -> Result<Vec<Claim>> {
    Ok(t_schema_expand(n)?
        .parts()
        .iter()
        .map(|a| Claim::True(quote(a.subject())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_proposition;

    fn p(t: &str) -> Proposition {
        parse_proposition(t).unwrap()
    }

    #[test]
    fn snow_is_white() {
        let t = convention_t(&p("snow_is_white"));
        assert_eq!(t.to_string(), "(T): 'snow_is_white' true iff snow_is_white");
    }

    #[test]
    fn conjunction_is_named_in_parens() {
        let t = convention_t(&p("A & B"));
        assert_eq!(
            t.assertion_form().to_string(),
            "(T): |- '(A & B)' iff A & B"
        );
        assert_ne!(convention_t(&p("A & B")), convention_t(&p("B & A")));
    }

    #[test]
    fn schema_expansion() {
        let parts = t_schema_expand(&quote(&p("A & B"))).unwrap();
        assert_eq!(parts.to_string(), "|- A and |- B");
        let claims = t_schema_claims(&quote(&p("A & A"))).unwrap();
        assert_eq!(
            claims,
            vec![Claim::True(quote(&p("A"))), Claim::True(quote(&p("A")))]
        );
        assert_eq!(t_schema_expand(&quote(&p("A"))), Err(Error::NotConjunction));
    }
}
