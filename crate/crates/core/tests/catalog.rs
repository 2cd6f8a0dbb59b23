//! Shipped catalog data and the directory override.

use linkpass::catalog::{self, Item};
use linkpass::classify::InvariantProfile;
use linkpass::codec::Kind;
use std::sync::{Mutex, MutexGuard};

/// The override is process-wide, so tests that read the catalog take turns.
static ENV: Mutex<()> = Mutex::new(());

fn lock() -> MutexGuard<'static, ()> {
    ENV.lock().unwrap_or_else(|e| e.into_inner())
}

#[test]
fn every_shipped_annotation_holds() {
    let _guard = lock();
    let mut checked = 0;
    for name in catalog::list().unwrap() {
        let entry = catalog::get(&name).unwrap();
        assert!(!entry.annotations.is_empty(), "{name} has no expectations");
        for c in entry.check().unwrap() {
            assert!(c.ok, "{name}: {} expected {} got {}", c.key, c.expected, c.actual);
            checked += 1;
        }
    }
    assert!(checked > 150, "only {checked} annotations");
}

#[test]
fn knot_tangles_close_up_to_their_knots() {
    let _guard = lock();
    for name in catalog::list().unwrap().into_iter().filter(|n| n.ends_with(".tangle")) {
        let knot = name.trim_end_matches(".tangle");
        let Ok(closed) = catalog::get(knot) else { continue };
        let Some(d) = closed.diagram().filter(|d| d.n() == 1) else { continue };
        let t = catalog::get(&name).unwrap();
        let Item::Diagram(tangle) = &t.item else { panic!("{name} is not a diagram") };
        assert_eq!(tangle.kind, Kind::BottomTangle);
        let p = InvariantProfile::of(tangle).unwrap();
        assert_eq!(p.a2_i[0], linkpass::polyengine::alexander_a2(d).unwrap(), "{name}");
    }
}

#[test]
fn trivial_tangles_are_generated() {
    let _guard = lock();
    for n in 1..=8 {
        let d = catalog::get(&format!("trivial_tangle({n})")).unwrap();
        let p = InvariantProfile::of(d.diagram().unwrap()).unwrap();
        assert!(p.a2_i.iter().chain(&p.a2_ij).chain(&p.mu_ij).chain(&p.mu_ijk).all(|&v| v == 0));
    }
    assert!(catalog::get("trivial_tangle(9)").is_err());
    assert!(catalog::get("trivial_tangle(0)").is_err());
}

#[test]
fn directory_override() {
    let _guard = lock();
    let dir = std::env::temp_dir().join(format!("linkpass-catalog-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let hopf = catalog::get("hopf+").unwrap().text;
    std::fs::write(dir.join("my_hopf.btt"), hopf.replace("# hopf+:", "# my_hopf:")).unwrap();

    std::env::set_var(catalog::CATALOG_ENV, &dir);
    let names = catalog::list().unwrap();
    let mine = catalog::get("my_hopf");
    let shipped = catalog::get("trefoil+");
    let escape = catalog::get("../etc/passwd");
    std::env::remove_var(catalog::CATALOG_ENV);
    std::fs::remove_dir_all(&dir).ok();

    assert_eq!(names, vec!["my_hopf".to_string()]);
    let mine = mine.unwrap();
    assert!(mine.check().unwrap().iter().all(|c| c.ok));
    assert!(shipped.is_err(), "shipped entries must not leak through the override");
    assert!(escape.is_err());
}
