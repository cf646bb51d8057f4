//! Evaluate Lukasiewicz formulas over P-atoms.

use qmeta::semantics::{sig12, TruthValue};
use qmeta::syntax::parse_proposition;
use qmeta::truth_engine::{luka_eval, Valuation};

fn main() -> qmeta::Result<()> {
    let valuation: Valuation = [("P(A)", 0.75), ("P(B)", 0.5), ("P(A & B)", 0.25)]
        .into_iter()
        .map(|(p, v)| Ok((parse_proposition(p)?, TruthValue::new(v)?)))
        .collect::<qmeta::Result<_>>()?;

    for text in [
        "~P(A)",
        "P(A) * P(B)",
        "P(A) -> P(B)",
        "P(A) * ~P(B) -> P(A & B)",
        "~(P(A) -> P(B)) -> ~P(B)",
    ] {
        let v = luka_eval(&parse_proposition(text)?, &valuation)?;
        println!("{text:28} {}", sig12(v.value()));
    }

    if let Err(e) = luka_eval(&parse_proposition("P(C)")?, &valuation) {
        println!("P(C): {e}");
    }
    Ok(())
}
