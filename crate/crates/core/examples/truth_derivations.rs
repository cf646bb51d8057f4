//! Derive both definitional equations from the truth conventions and replay
//! the traces through the verifier.

use qmeta::syntax::ComplexNumber;
use qmeta::truth_engine::{
    check_lines, derive_classical_defeq, derive_quantum_defeq, verify_trace, DerivationTrace,
};

fn main() -> qmeta::Result<()> {
    let classical = derive_classical_defeq("A", "B")?;
    print!("{classical}");
    verify_trace(&classical)?;
    println!("verified {} lines\n", classical.len());

    let quantum = derive_quantum_defeq(ComplexNumber::real(0.6)?, ComplexNumber::new(0.0, 0.8)?)?;
    print!("{quantum}");
    verify_trace(&quantum)?;
    println!("verified {} lines\n", quantum.len());

    // traces survive a text round trip; a tampered line does not verify
    let tampered: DerivationTrace = quantum
        .to_string()
        .replace("|-[0.8i] p1   [t", "|-[0.6] p1   [t")
        .parse()?;
    for verdict in check_lines(&tampered).iter() {
        if let Err(e) = verdict {
            println!("rejected: {e}");
        }
    }
    Ok(())
}
