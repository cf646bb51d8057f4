//! Parse propositions and assertions, print them back, and quote them.

use qmeta::syntax::{parse_assertion, parse_proposition, quote};

fn main() -> qmeta::Result<()> {
    for text in [
        "A & B",
        "p0 [0.6, 0.8i]& p1",
        "p0 [0.6, 0.48, 0.64i]& p1, p2",
        "P(A) * ~P(B) -> P(A & B)",
    ] {
        let p = parse_proposition(text)?;
        println!("{text:32} => {p}   quoted {}", quote(&p));
    }

    for text in ["|- A & B", "|-[0.9-0.1i] G", "|-[1] p0"] {
        let a = parse_assertion(text)?;
        let limit = a
            .classical_limit()
            .map_or_else(|| "none".to_string(), |c| c.to_string());
        println!("{a}   classical limit: {limit}");
    }

    match parse_assertion("|-[0.6+x] p0") {
        Err(e) => println!("rejected: {e}"),
        Ok(a) => println!("unexpectedly parsed {a}"),
    }
    Ok(())
}
