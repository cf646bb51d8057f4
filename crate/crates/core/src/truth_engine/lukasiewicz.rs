//! Lukasiewicz connectives over P-atoms:
//! `~x = 1 - x`, `x * y = max(0, x + y - 1)`, `x -> y = min(1, 1 - x + y)`.

use crate::error::{Error, Result};
use crate::semantics::TruthValue;
use crate::syntax::Proposition;

/// Truth values assigned to P-atoms, keyed by structural equality.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Valuation {
    entries: Vec<(Proposition, TruthValue)>,
}

impl Valuation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sets the value of `atom`, replacing any previous one.
    pub fn insert(&mut self, atom: Proposition, value: TruthValue) {
        match self.entries.iter_mut().find(|(p, _)| *p == atom) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((atom, value)),
        }
    }

    pub fn get(&self, atom: &Proposition) -> Option<TruthValue> {
        self.entries
            .iter()
            .find(|(p, _)| p == atom)
            .map(|(_, v)| *v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl FromIterator<(Proposition, TruthValue)> for Valuation {
    fn from_iter<I: IntoIterator<Item = (Proposition, TruthValue)>>(iter: I) -> Self {
        let mut v = Valuation::new();
        for (p, t) in iter {
            v.insert(p, t);
        }
        v
    }
}

pub fn neg(x: f64) -> f64 {
    1.0 - x
}

pub fn strong_and(x: f64, y: f64) -> f64 {
    (x + y - 1.0).max(0.0)
}

pub fn implies(x: f64, y: f64) -> f64 {
    (1.0 - x + y).min(1.0)
}

pub fn luka_eval(p: &Proposition, valuation: &Valuation) -> Result<TruthValue> {
    let value = match p {
        Proposition::Probably(_) => {
            return valuation
                .get(p)
                .ok_or_else(|| Error::UnvaluedAtom(p.to_string()))
        }
        Proposition::LukaNeg(x) => neg(luka_eval(x, valuation)?.value()),
        Proposition::LukaStrongAnd(l, r) => strong_and(
            luka_eval(l, valuation)?.value(),
            luka_eval(r, valuation)?.value(),
        ),
        Proposition::LukaImplies(l, r) => implies(
            luka_eval(l, valuation)?.value(),
            luka_eval(r, valuation)?.value(),
        ),
        other => return Err(Error::NotLukasiewicz(other.to_string())),
    };
    TruthValue::new(value.clamp(0.0, 1.0))
}
