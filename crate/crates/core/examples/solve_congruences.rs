//! Solve a mixed system of integer equations and congruences.
//!
//!     cargo run --example solve_congruences

use linkpass::classify::{solve_congruence, CongruenceSystem, Row};

fn main() -> linkpass::Result<()> {
    // 2x + y = 7 over the integers, x + 3y = 1 mod 4, 4x = 0 mod 8.
    let system = CongruenceSystem {
        variables: vec!["x".into(), "y".into()],
        rows: vec![Row::new(vec![2, 1], 7, 0), Row::new(vec![1, 3], 1, 4), Row::new(vec![4, 0], 0, 8)],
    };
    let s = solve_congruence(&system)?;
    println!("solvable: {}, witness: {:?}", s.solvable, s.witness);
    if let Some(w) = &s.witness {
        assert!(system.is_satisfied_by(w));
    }

    // 2x = 1 mod 4 has no solution.
    let odd = CongruenceSystem { variables: vec!["x".into()], rows: vec![Row::new(vec![2], 1, 4)] };
    println!("2x = 1 mod 4 solvable: {}", solve_congruence(&odd)?.solvable);
    Ok(())
}
