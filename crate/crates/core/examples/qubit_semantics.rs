//! Interpret atoms and superpositions as amplitude vectors and read off
//! their truth profiles.

use qmeta::semantics::{interpret, sig12, truth_profile, truth_value, Basis};
use qmeta::syntax::{parse_assertion, parse_proposition};

fn main() -> qmeta::Result<()> {
    let basis = Basis::new(["p0", "p1", "p2"])?;
    for text in ["p1", "p0 [0.6, 0.8i]& p1", "p0 [0.6, 0.48, 0.64i]& p1, p2"] {
        let state = interpret(&parse_proposition(text)?, &basis)?;
        let profile: Vec<String> = truth_profile(&state)
            .iter()
            .map(|t| sig12(t.value()))
            .collect();
        println!(
            "{text:30} amplitudes {:?}",
            state
                .amplitudes()
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
        );
        println!("{:30} truth      {profile:?}", "");
    }

    // phase is kept in the state but not in the truth value
    let rotated =
        interpret(&parse_proposition("p0 [0.6, 0.8i]& p1")?, &basis)?.with_global_phase(0.7)?;
    println!(
        "rotated by 0.7: {:?}",
        rotated
            .amplitudes()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );

    for text in ["|- p0", "|-[0.6] p0", "|-[0.8i] p1", "|-[0.9+0.1i] q"] {
        println!(
            "v({text}) = {}",
            sig12(truth_value(&parse_assertion(text)?).value())
        );
    }

    if let Err(e) = interpret(&parse_proposition("p0 [0.707107, 0.707107]& p1")?, &basis) {
        println!("rounded inputs: {e}");
    }
    Ok(())
}
