//! Read a diagram in the text format, validate it and write it back.
//!
//!     cargo run --example parse_and_validate

use linkpass::codec::{linking_number, parse, serialize, validate};

const HOPF: &str = "\
btt 1
kind link
n 2
crossings 1:+ 2:+
comp 1: O1 U2
comp 2: U1 O2
";

fn main() -> linkpass::Result<()> {
    let d = parse(HOPF)?;
    let report = validate(&d);
    println!("{} components, {} crossings, valid: {}", d.n(), d.crossing_count(), report.ok);
    println!("lk(1,2) = {}", linking_number(&d, 1, 2)?);

    // The parser rejects a crossing that is never passed under.
    let broken = HOPF.replace("comp 2: U1 O2", "comp 2: O1 O2");
    match parse(&broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }

    print!("{}", serialize(&d)?);
    Ok(())
}
