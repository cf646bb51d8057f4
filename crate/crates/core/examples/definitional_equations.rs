//! Compose and decompose assertions through the classical and quantum
//! definitional equations.

use qmeta::meta_calculus::{
    check_metadata, classical_definitional_equation, compose_quantum, decompose_quantum,
    quantum_definitional_equation,
};
use qmeta::syntax::{parse_assertion, Assertion, ComplexNumber, Proposition};

fn main() -> qmeta::Result<()> {
    let a = Assertion::classical(Proposition::atom("A")?);
    let b = Assertion::classical(Proposition::atom("B")?);
    println!("{}", classical_definitional_equation(&a, &b)?);

    let parts = vec![
        parse_assertion("|-[0.6] p0")?,
        parse_assertion("|-[0.8i] p1")?,
    ];
    println!("{}", quantum_definitional_equation(&parts)?);

    let composed = compose_quantum(&parts)?;
    let back = decompose_quantum(&composed)?;
    println!(
        "round trip exact: {}",
        back.iter().zip(&parts).all(|(x, y)| x.bit_eq(y))
    );

    let unnormalized = [ComplexNumber::ONE, ComplexNumber::ONE];
    println!(
        "(1, 1) satisfies the constraint: {}",
        check_metadata(&unnormalized)
    );
    let ones = vec![parse_assertion("|-[1] p0")?, parse_assertion("|-[1] p1")?];
    if let Err(e) = compose_quantum(&ones) {
        println!("compose (1, 1): {e}");
    }
    Ok(())
}
