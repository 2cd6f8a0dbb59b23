//! Decide the four equivalence relations for a few pairs of links.
//!
//!     cargo run --example decide

use linkpass::catalog;
use linkpass::classify::{decide_link, decide_link_z2split, Relation};

fn main() -> linkpass::Result<()> {
    let pairs = [
        ("trefoil+.tangle", "figure8.tangle"),
        ("trefoil+.tangle", "unknot.tangle"),
        ("borromean+.tangle", "borromean-.tangle"),
        ("whitehead.tangle", "trivial_tangle(2)"),
    ];
    for (a, b) in pairs {
        let da = catalog::get(a)?.diagram().cloned().expect("a diagram entry");
        let db = catalog::get(b)?.diagram().cloned().expect("a diagram entry");
        print!("{a} vs {b}:");
        for r in Relation::ALL {
            let v = decide_link(&da, &db, r)?;
            print!(" {}={}", r.name(), if v.equivalent { "yes" } else { "no" });
        }
        println!();
        let v = decide_link(&da, &db, Relation::ClaspPass)?;
        if let Some(why) = v.failed_precondition {
            println!("  clasp-pass fails on: {why}");
        }
    }

    // Links with even linking numbers have a shortcut for band-#.
    let w = catalog::get("whitehead.tangle")?.diagram().cloned().expect("a diagram entry");
    let t = catalog::get("trivial_tangle(2)")?.diagram().cloned().expect("a diagram entry");
    println!("fast path, whitehead vs unlink: {}", decide_link_z2split(&w, &t)?.equivalent);
    Ok(())
}
