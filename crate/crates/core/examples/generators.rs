//! Stack generator string links below a tangle and watch the invariants move.
//!
//!     cargo run --example generators

use linkpass::catalog::templates::{build_sigma, zero_matrix};
use linkpass::catalog::{self, verify};
use linkpass::classify::InvariantProfile;

fn main() -> linkpass::Result<()> {
    let sigma = catalog::get("borromean+.tangle")?.diagram().cloned().expect("a diagram entry");
    let n = sigma.n();
    let before = InvariantProfile::of(&sigma)?;

    let mut omega = zero_matrix(n);
    omega[0][1] = 1;
    omega[2][0] = -2;
    let mut v = zero_matrix(n);
    v[1][2] = 1;
    let moved = build_sigma(&sigma, &omega, &v)?;
    let after = InvariantProfile::of(&moved)?;
    // Every linking number vanishes, so the loops leave mu(ijk) alone and
    // only the doubled clasp on (2,3) shows up, as a2(23) + 2.
    println!("crossings {} -> {}", sigma.crossing_count(), moved.crossing_count());
    println!("a2(ij)  {:?} -> {:?}", before.a2_ij, after.a2_ij);
    println!("mu(ijk) {:?} -> {:?}", before.mu_ijk, after.mu_ijk);
    println!("mu(ij)  {:?} -> {:?}", before.mu_ij, after.mu_ij);

    // Randomized check of every law the generators are meant to satisfy.
    let report = verify::verify_templates(3, 5, 20)?;
    for c in &report.checks {
        println!("{:50} {}/{}", c.name, c.cases - c.failures, c.cases);
    }
    Ok(())
}
