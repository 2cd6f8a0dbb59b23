//! List the catalog and check every entry's recorded expectations.
//! Set LINKPASS_CATALOG to browse a different directory of `.btt` files.
//!
//!     cargo run --example catalog_tour

use linkpass::catalog;

fn main() -> linkpass::Result<()> {
    let names = catalog::list()?;
    let mut held = 0;
    let mut total = 0;
    for name in &names {
        let entry = catalog::get(name)?;
        let checks = entry.check()?;
        total += checks.len();
        held += checks.iter().filter(|c| c.ok).count();
        println!("{name:20} {}", entry.description);
    }
    println!("{} entries, {held}/{total} expectations hold", names.len());
    print!("{}", catalog::get("trivial_tangle(2)")?.text);
    Ok(())
}
