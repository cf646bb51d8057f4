//! Graded assertion of the Goedel sentence `G_F`.
//!
//! `G_F` and `Con_F` are opaque reserved atoms identified with each other,
//! so the probability that `F` is consistent is the truth value of the
//! assertion.

use std::fmt;

use serde::Serialize;

use super::context::pt_judgment;
use super::judgment::{Claim, Judgment, Link};
use crate::error::Result;
use crate::semantics::{round_sig12, sig12, truth_value, TruthValue};
use crate::syntax::{Assertion, ComplexNumber, Proposition};

pub const GOEDEL_ATOM: &str = "G_F";
pub const CONSISTENCY_ATOM: &str = "Con_F";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    ClassicallyCertain,
    ProbabilisticallyIncomplete,
    NotAsserted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ClassicallyCertain => "classically certain",
            Verdict::ProbabilisticallyIncomplete => "probabilistically incomplete",
            Verdict::NotAsserted => "not asserted",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoedelReport {
    /// `|-[l] G_F`
    pub assertion: Assertion,
    /// `(PT): |-[l] 'G_F' iff P(G_F)`
    pub convention_pt: Judgment,
    /// `v(P(G_F)) = |l|^2`
    pub truth_value: TruthValue,
    /// `G_F == Con_F`
    pub identification: Judgment,
    /// `p(Con_F)`, equal to the truth value under the identification.
    pub con_probability: TruthValue,
    pub verdict: Verdict,
}

/// Machine-readable form of a [`GoedelReport`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoedelRecord {
    pub assertion: String,
    pub v: f64,
    pub identification: String,
    pub con_probability: f64,
    pub verdict: Verdict,
}

pub fn goedel_report(degree: ComplexNumber) -> Result<GoedelReport> {
    let g = Proposition::atom(GOEDEL_ATOM)?;
    let con = Proposition::atom(CONSISTENCY_ATOM)?;
    let assertion = Assertion::graded(degree, g.clone())?;
    let convention_pt = pt_judgment(&assertion)?;
    let v = truth_value(&assertion);
    let identification = Judgment {
        convention: None,
        lhs: vec![Claim::Formula(g)],
        link: Link::Defines,
        rhs: vec![Claim::Formula(con)],
    };
    let verdict = if v.value() >= 1.0 {
        Verdict::ClassicallyCertain
    } else if v.value() > 0.0 {
        Verdict::ProbabilisticallyIncomplete
    } else {
        Verdict::NotAsserted
    };
    Ok(GoedelReport {
        assertion,
        convention_pt,
        truth_value: v,
        identification,
        con_probability: v,
        verdict,
    })
}

impl GoedelReport {
    pub fn record(&self) -> GoedelRecord {
        GoedelRecord {
            assertion: self.assertion.to_string(),
            v: round_sig12(self.truth_value.value()),
            identification: self.identification.to_string(),
            con_probability: round_sig12(self.con_probability.value()),
            verdict: self.verdict,
        }
    }
}

impl fmt::Display for GoedelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "assertion: {}", self.assertion)?;
        writeln!(f, "{}", self.convention_pt)?;
        writeln!(
            f,
            "v(P({GOEDEL_ATOM})) = {}",
            sig12(self.truth_value.value())
        )?;
        writeln!(f, "identification: {}", self.identification)?;
        writeln!(
            f,
            "p({CONSISTENCY_ATOM}) = {}",
            sig12(self.con_probability.value())
        )?;
        writeln!(f, "verdict: {}", self.verdict)
    }
}
