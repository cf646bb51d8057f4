//! Grade assertions from a probability context and check that the degrees
//! stay normalized.

use qmeta::semantics::{sig12, truth_value};
use qmeta::truth_engine::{
    convention_pt, probably, pt_judgment, pt_preserves_metadata, ProbabilityContext,
};

fn main() -> qmeta::Result<()> {
    let ctx = ProbabilityContext::new(
        ["p0", "p1", "p2", "q"],
        [("p0", 0.2), ("p1", 0.3), ("p2", 0.5)],
    )?;
    for atom in ["p0", "p1", "p2"] {
        let a = convention_pt(&ctx, atom)?;
        let (formula, v) = probably(&ctx, atom)?;
        println!("{}", pt_judgment(&a)?);
        println!(
            "  v({formula}) = {}  v({a}) = {}",
            sig12(v.value()),
            sig12(truth_value(&a).value())
        );
    }
    println!("degrees normalized: {}", pt_preserves_metadata(&ctx)?);
    if let Err(e) = convention_pt(&ctx, "q") {
        println!("q: {e}");
    }
    Ok(())
}
