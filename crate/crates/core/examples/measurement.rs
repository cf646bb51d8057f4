//! Collapse a superposition by projective measurement and compare sampled
//! frequencies with the truth profile.

use qmeta::decoherence::{measure, measure_statistics, RandomStream};
use qmeta::semantics::{interpret, Basis};
use qmeta::syntax::parse_proposition;

fn main() -> qmeta::Result<()> {
    let basis = Basis::new(["p0", "p1"])?;
    let state = interpret(&parse_proposition("p0 [0.6, 0.8i]& p1")?, &basis)?;

    let mut rng = RandomStream::new(42);
    for _ in 0..5 {
        let o = measure(&state, &mut rng);
        println!(
            "draw {}: {} (probability {})",
            rng.counter() - 1,
            o.collapsed,
            o.probability.value()
        );
    }

    print!("{}", measure_statistics(&state, 100_000, 42)?);

    let rotated = state.with_global_phase(2.0)?;
    let same = measure_statistics(&rotated, 100_000, 42)?.counts
        == measure_statistics(&state, 100_000, 42)?.counts;
    println!("global phase changes nothing: {same}");
    Ok(())
}
