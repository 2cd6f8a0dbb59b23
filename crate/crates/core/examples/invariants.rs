//! Casson and Milnor invariants of shipped bottom tangles.
//!
//!     cargo run --example invariants

use linkpass::catalog;
use linkpass::classify::InvariantProfile;
use linkpass::polyengine::{alexander_a2, conway_skein};

fn main() -> linkpass::Result<()> {
    for name in ["trefoil+.tangle", "hopf+.tangle", "whitehead.tangle", "borromean+.tangle"] {
        let entry = catalog::get(name)?;
        let p = InvariantProfile::of(entry.diagram().expect("a diagram entry"))?;
        println!(
            "{name:18} a2(i)={:?} a2(ij)={:?} mu(ij)={:?} mu(ijk)={:?} mu(jiij)={:?} phi={:?}",
            p.a2_i, p.a2_ij, p.mu_ij, p.mu_ijk, p.mu_jiij, p.phi_ij
        );
    }

    // The z^2 coefficient two ways: skein recursion and the Alexander matrix.
    let knot = catalog::get("figure8")?;
    let d = knot.diagram().expect("a diagram entry");
    println!("figure8: conway = {}, a2 by Fox calculus = {}", conway_skein(d)?, alexander_a2(d)?);
    Ok(())
}
