//! Graded assertions of the Goedel sentence and the consistency
//! probability they carry.

use qmeta::syntax::parse_complex;
use qmeta::truth_engine::goedel_report;

fn main() -> qmeta::Result<()> {
    for degree in ["1", "0.9+0.1i", "0.5i", "0"] {
        println!("{}", goedel_report(parse_complex(degree)?)?);
    }
    if let Err(e) = goedel_report(parse_complex("2")?) {
        println!("degree 2: {e}");
    }
    Ok(())
}
