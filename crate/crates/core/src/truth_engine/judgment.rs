//! Judgments of the truth calculus, as they appear on derivation lines.
//!
//! ```text
//! judgment := [ "(T):" | "(PT):" ] side ( "iff" | "==" ) side
//! side     := claim ( "and" claim )*
//! claim    := "|-" [ "[" complex "]" ] term   -- assertion
//!           | "'" prop "'" "true"              -- truth claim about a name
//!           | prop                             -- object-language formula
//! term     := "'" prop "'" | prop
//! ```

use std::fmt;

use crate::error::Result;
use crate::syntax::{quote, ComplexNumber, Cursor, Name, Proposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    T,
    PT,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Term {
    Quoted(Name),
    Plain(Proposition),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Claim {
    /// `'p' true`
    True(Name),
    /// `|- t` when `degree` is `None`, `|-[degree] t` otherwise.
    Asserted {
        degree: Option<ComplexNumber>,
        term: Term,
    },
    Formula(Proposition),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    Iff,
    Defines,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Judgment {
    pub convention: Option<Convention>,
    pub lhs: Vec<Claim>,
    pub link: Link,
    pub rhs: Vec<Claim>,
}

impl Claim {
    pub fn asserted_quoted(degree: Option<ComplexNumber>, p: &Proposition) -> Self {
        Claim::Asserted {
            degree,
            term: Term::Quoted(quote(p)),
        }
    }

    pub fn asserted_plain(degree: Option<ComplexNumber>, p: &Proposition) -> Self {
        Claim::Asserted {
            degree,
            term: Term::Plain(p.clone()),
        }
    }

    fn has_quote(&self) -> bool {
        matches!(
            self,
            Claim::True(_)
                | Claim::Asserted {
                    term: Term::Quoted(_),
                    ..
                }
        )
    }
}

impl Judgment {
    pub fn iff(convention: Option<Convention>, lhs: Vec<Claim>, rhs: Vec<Claim>) -> Self {
        Judgment {
            convention,
            lhs,
            link: Link::Iff,
            rhs,
        }
    }

    pub fn parse(text: &str) -> Result<Judgment> {
        let mut cur = Cursor::new(text);
        let convention = if cur.eat("(T):") {
            Some(Convention::T)
        } else if cur.eat("(PT):") {
            Some(Convention::PT)
        } else {
            None
        };
        let lhs = side(&mut cur)?;
        let link = if cur.eat_word("iff") {
            Link::Iff
        } else if cur.eat("==") {
            Link::Defines
        } else {
            return Err(cur.error(&["'iff'", "'=='", "'and'"]));
        };
        let rhs = side(&mut cur)?;
        cur.expect_end()?;
        Ok(Judgment {
            convention,
            lhs,
            link,
            rhs,
        })
    }

    /// Whether some claim on `side` mentions a quoted name.
    pub fn side_has_quote(side: &[Claim]) -> bool {
        side.iter().any(Claim::has_quote)
    }

    pub fn has_quote(&self) -> bool {
        Self::side_has_quote(&self.lhs) || Self::side_has_quote(&self.rhs)
    }
}

fn side(cur: &mut Cursor<'_>) -> Result<Vec<Claim>> {
    let mut claims = vec![claim(cur)?];
    while cur.eat_word("and") {
        claims.push(claim(cur)?);
    }
    Ok(claims)
}

fn claim(cur: &mut Cursor<'_>) -> Result<Claim> {
    if cur.eat("|-") {
        let degree = if cur.eat("[") {
            let d = cur.complex()?;
            cur.expect("]")?;
            Some(d)
        } else {
            None
        };
        let term = if cur.eat("'") {
            let p = cur.proposition()?;
            cur.expect("'")?;
            Term::Quoted(quote(&p))
        } else {
            Term::Plain(cur.proposition()?)
        };
        return Ok(Claim::Asserted { degree, term });
    }
    if cur.eat("'") {
        let p = cur.proposition()?;
        cur.expect("'")?;
        if !cur.eat_word("true") {
            return Err(cur.error(&["'true'"]));
        }
        return Ok(Claim::True(quote(&p)));
    }
    Ok(Claim::Formula(cur.proposition()?))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Quoted(n) => write!(f, "{n}"),
            Term::Plain(p) => write!(f, "{p}"),
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::True(n) => write!(f, "{n} true"),
            Claim::Asserted { degree: None, term } => write!(f, "|- {term}"),
            Claim::Asserted {
                degree: Some(d),
                term,
            } => write!(f, "|-[{d}] {term}"),
            Claim::Formula(p) => write!(f, "{p}"),
        }
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, side: &[Claim]) -> fmt::Result {
    for (i, c) in side.iter().enumerate() {
        if i > 0 {
            f.write_str(" and ")?;
        }
        write!(f, "{c}")?;
    }
    Ok(())
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.convention {
            Some(Convention::T) => f.write_str("(T): ")?,
            Some(Convention::PT) => f.write_str("(PT): ")?,
            None => {}
        }
        write_side(f, &self.lhs)?;
        f.write_str(match self.link {
            Link::Iff => " iff ",
            Link::Defines => " == ",
        })?;
        write_side(f, &self.rhs)
    }
}
