#[path = "common/battery.rs"]
mod battery;

use pomlab_core::directoid::{AssignmentMode, AssignmentPolicy, Chooser};
use pomlab_core::enumerate::{enumerate_directoids, Caps, PosetEnumerator};
use pomlab_core::term::{evaluate, parse, Formula, Structure};

fn battery() -> Vec<Formula> {
    battery::BATTERY.iter().map(|s| parse(s).unwrap()).collect()
}

#[test]
fn battery_is_order_language() {
    let b = battery();
    assert!(b.iter().filter(|f| f.uses_order()).count() >= 20);
    for f in &b {
        assert!(!f.uses_lattice_ops(), "{f}");
        assert!(!f.translate().uses_order(), "{f}");
    }
}

#[test]
fn translation_agrees_with_induced_poset() {
    let policy = AssignmentPolicy::new(AssignmentMode::Relaxed, Chooser::All);
    let battery = battery();
    let translated: Vec<Formula> = battery.iter().map(Formula::translate).collect();
    let mut e = PosetEnumerator::new();
    let mut checked = 0;
    for n in 1..=5 {
        for p in e.structures(n) {
            for d in enumerate_directoids(&p, policy, &Caps::default()).unwrap() {
                let q = d.induced_poset().unwrap();
                for (eta, t) in battery.iter().zip(&translated) {
                    let direct = evaluate(Structure::Poset(&q), eta).unwrap();
                    let via = evaluate(Structure::Directoid(&d), t).unwrap();
                    assert_eq!(direct, via, "{eta}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn translated_literal_shapes() {
    assert_eq!(
        parse("x <= y").unwrap().translate().to_string(),
        "x ^ y = x"
    );
    assert_eq!(
        parse("~(x <= y')").unwrap().translate().to_string(),
        "~(x ^ y' = x)"
    );
}
