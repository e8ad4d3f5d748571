//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

#[path = "../../core/tests/common/battery.rs"]
mod battery;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use pomlab::reproduce::{self, Target};
use pomlab_core::directoid::{
    assignment_choices, AssignmentMode, AssignmentPolicy, Chooser, DirectoidClass,
};
use pomlab_core::effect::{directoids_from_orthoalgebra, orthoalgebra_from_ortho_directoid};
use pomlab_core::enumerate::{
    directoid_classes, enumerate_directoids, enumerate_effect_algebras, Caps, PosetEnumerator,
};
use pomlab_core::term::{self, evaluate, parse, Formula};
use pomlab_core::{find_b6_witness, BoundedInvolutivePoset, InvolutiveDirectoid, PosetProperty};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn posets(n_max: usize) -> Vec<BoundedInvolutivePoset> {
    let mut e = PosetEnumerator::new();
    (1..=n_max).flat_map(|n| e.structures(n)).collect()
}

fn all_of(p: &BoundedInvolutivePoset, mode: AssignmentMode) -> Option<Vec<InvolutiveDirectoid>> {
    enumerate_directoids(
        p,
        AssignmentPolicy::new(mode, Chooser::All),
        &Caps::default(),
    )
    .ok()
    .map(Iterator::collect)
}

/// Directoids up to isomorphism whose induced poset has at most `n_max`
/// elements.
fn directoids(n_max: usize) -> Vec<InvolutiveDirectoid> {
    let policy = AssignmentPolicy::new(AssignmentMode::Relaxed, Chooser::All);
    posets(n_max)
        .par_iter()
        .flat_map_iter(|p| {
            directoid_classes(p, policy, &Caps::default()).expect("fan-out within cap")
        })
        .collect()
}

fn holds(d: &InvolutiveDirectoid, c: DirectoidClass) -> bool {
    d.check_class(c).holds()
}

fn figures() -> Outcome {
    let start = Instant::now();
    let mut lines = Vec::new();
    let mut pass = true;
    for t in [Target::Fig1, Target::Fig2, Target::Fig3, Target::Fig4] {
        let r = reproduce::run(t, None, &Caps::default());
        pass &= r.confirmed();
        if !r.confirmed() {
            lines.push(r.to_text());
        }
    }
    let took = start.elapsed();
    pass &= took < Duration::from_secs(1);
    lines.push(format!("fig1-fig4 confirmed in {took:.2?}"));
    outcome(pass, lines.join("; "))
}

fn b6_characterization() -> Outcome {
    let ps = posets(10);
    let bad = ps
        .par_iter()
        .filter(|p| {
            let w = find_b6_witness(p);
            let fails = !p.check(PosetProperty::Paraorthomodular).holds();
            w.is_some() != fails || w.is_some_and(|w| !w.verify(p))
        })
        .count();
    outcome(
        bad == 0,
        format!("{bad} discrepancies over {} posets with n <= 10", ps.len()),
    )
}

fn representation() -> Outcome {
    let ps = posets(7);
    let (checked, bad, capped) = ps
        .par_iter()
        .map(|p| {
            let pom = p.check(PosetProperty::Paraorthomodular).holds();
            let mut t = (0usize, 0usize, 0usize);
            for mode in [AssignmentMode::Arbitrary, AssignmentMode::Relaxed] {
                match all_of(p, mode) {
                    Some(ds) => {
                        for d in ds {
                            t.0 += 1;
                            let ok = holds(&d, DirectoidClass::Involutive45)
                                && holds(&d, DirectoidClass::Cond6);
                            t.1 += usize::from(ok != pom);
                        }
                    }
                    None => t.2 += 1,
                }
            }
            t
        })
        .reduce(|| (0, 0, 0), |a, b| (a.0 + b.0, a.1 + b.1, a.2 + b.2));
    outcome(
        bad == 0,
        format!(
            "{bad} discrepancies over {checked} assigned directoids of {} posets with n <= 7 ({capped} capped)",
            ps.len()
        ),
    )
}

fn canonical_quasivariety() -> Outcome {
    let ps = posets(7);
    let forward: (usize, usize) = ps
        .par_iter()
        .filter(|p| p.check(PosetProperty::Paraorthomodular).holds())
        .map(|p| {
            let ds = all_of(p, AssignmentMode::Canonical).expect("fan-out within cap");
            let bad = ds
                .iter()
                .filter(|d| !holds(d, DirectoidClass::CanonicalImage))
                .count();
            (ds.len(), bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let policy = AssignmentPolicy::new(AssignmentMode::Relaxed, Chooser::All);
    let converse: (usize, usize) = ps
        .par_iter()
        .map(|p| {
            let options = assignment_choices(p, AssignmentMode::Canonical);
            let mut t = (0, 0);
            for d in directoid_classes(p, policy, &Caps::default()).expect("fan-out within cap") {
                if !holds(&d, DirectoidClass::CanonicalImage) {
                    continue;
                }
                t.0 += 1;
                let q = d.induced_poset().expect("assigned tables induce a poset");
                let canonical = options
                    .iter()
                    .all(|c| c.options.contains(&d.meet(c.x, c.y)));
                let ok = q.same_structure(p)
                    && q.check(PosetProperty::Paraorthomodular).holds()
                    && canonical;
                t.1 += usize::from(!ok);
            }
            t
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(
        forward.1 == 0 && converse.1 == 0,
        format!(
            "{} of {} canonical assignments fail (4),(5),(8); {} of {} directoids with (4),(5),(8) are not canonical over a paraorthomodular poset",
            forward.1, forward.0, converse.1, converse.0
        ),
    )
}

fn non_universality() -> Outcome {
    let r = reproduce::run(Target::Fig5, None, &Caps::default());
    let ds = directoids(6);
    let bad = ds
        .par_iter()
        .filter(|d| {
            !d.extend_with_pair()
                .quotient_theta(d.size())
                .is_ok_and(|q| q.is_isomorphic(d))
        })
        .count();
    let detail = format!(
        "fig5 {}; {bad} quotient failures over {} directoids with n <= 6",
        if r.confirmed() { "confirmed" } else { "FAILED" },
        ds.len()
    );
    outcome(r.confirmed() && bad == 0, detail)
}

fn sharply() -> Outcome {
    let ps = posets(7);
    let (every, some) = ps
        .par_iter()
        .map(|p| {
            let sharp = p.check(PosetProperty::SharplyParaorthomodular).holds();
            let sat = |d: &InvolutiveDirectoid| {
                holds(d, DirectoidClass::SharplyParaorthomodularDirectoid)
            };
            let arbitrary = all_of(p, AssignmentMode::Arbitrary).expect("fan-out within cap");
            let relaxed = all_of(p, AssignmentMode::Relaxed).expect("fan-out within cap");
            (
                usize::from(arbitrary.iter().all(sat) != sharp),
                usize::from(relaxed.iter().any(sat) != sharp),
            )
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    outcome(
        every == 0 && some == 0,
        format!(
            "over {} posets with n <= 7: {every} discrepancies for every meet-preserving assignment, {some} for some assignment",
            ps.len()
        ),
    )
}

fn ortho_directoids() -> Outcome {
    let ds: Vec<InvolutiveDirectoid> = directoids(6)
        .into_iter()
        .filter(|d| holds(d, DirectoidClass::OrthoDirectoid))
        .collect();
    let bad_laws = ds
        .iter()
        .filter(|d| {
            !d.check_ortho_derived_laws().holds()
                || !d
                    .induced_poset()
                    .is_ok_and(|p| p.check(PosetProperty::Orthoposet).holds())
                || !orthoalgebra_from_ortho_directoid(d).is_ok_and(|a| a.is_orthoalgebra())
        })
        .count();

    let om2 = term::catalog_entry("om2").expect("catalog entry");
    let mut algebras = 0;
    let mut from_algebras = 0;
    let mut bad_round = 0;
    let mut bad_om2 = 0;
    for n in 1..=8 {
        for a in enumerate_effect_algebras(n, &Caps::default()).expect("within caps") {
            if !a.is_orthoalgebra() {
                continue;
            }
            algebras += 1;
            let omp = a
                .induced_order()
                .is_ok_and(|p| p.check(PosetProperty::Orthomodular).holds());
            let mut all_om2 = true;
            for d in directoids_from_orthoalgebra(&a, Chooser::All).expect("orthoalgebra") {
                from_algebras += 1;
                if !orthoalgebra_from_ortho_directoid(&d).is_ok_and(|b| b.same_tables(&a)) {
                    bad_round += 1;
                }
                all_om2 &= evaluate(term::Structure::Directoid(&d), &om2).is_ok_and(|v| v.holds());
            }
            bad_om2 += usize::from(all_om2 != omp);
        }
    }
    outcome(
        !ds.is_empty() && bad_laws == 0 && bad_round == 0 && bad_om2 == 0,
        format!(
            "{bad_laws} of {} ortho-directoids with n <= 6 fail; {bad_round} round-trip and {bad_om2} axiom-2 discrepancies over {algebras} orthoalgebras with n <= 8 ({from_algebras} directoids)",
            ds.len()
        ),
    )
}

fn effect_algebras() -> Outcome {
    let mut count = 0;
    let mut bad = 0;
    for n in 1..=8 {
        for a in enumerate_effect_algebras(n, &Caps::default()).expect("within caps") {
            count += 1;
            let pom = a
                .induced_order()
                .is_ok_and(|p| p.check(PosetProperty::Paraorthomodular).holds());
            let defined =
                (0..n).all(|x| (0..n).all(|y| a.oplus(x, y).is_some() == a.le(x, a.inv(y))));
            bad += usize::from(!pom || !defined);
        }
    }
    outcome(
        bad == 0,
        format!("{bad} discrepancies over {count} effect algebras with n <= 8"),
    )
}

fn dm_equivalence() -> Outcome {
    let r = reproduce::run(Target::CorollaryDm, Some(9), &Caps::default());
    let detail: Vec<String> = r
        .sections
        .iter()
        .flat_map(|s| s.claims.iter().map(|c| c.detail.clone()))
        .collect();
    outcome(r.confirmed(), detail.join("; "))
}

fn translation() -> Outcome {
    let formulas: Vec<Formula> = battery::BATTERY
        .iter()
        .map(|s| parse(s).expect("battery parses"))
        .collect();
    let order_language = formulas.iter().all(|f| !f.uses_lattice_ops())
        && formulas.iter().filter(|f| f.uses_order()).count() >= 20;
    let translated: Vec<Formula> = formulas.iter().map(Formula::translate).collect();
    let policy = AssignmentPolicy::new(AssignmentMode::Relaxed, Chooser::All);
    let ds: Vec<InvolutiveDirectoid> = posets(5)
        .iter()
        .flat_map(|p| {
            enumerate_directoids(p, policy, &Caps::default()).expect("fan-out within cap")
        })
        .collect();
    let mut bad = 0;
    for d in &ds {
        let q = d.induced_poset().expect("assigned tables induce a poset");
        for (eta, t) in formulas.iter().zip(&translated) {
            let direct = evaluate(term::Structure::Poset(&q), eta);
            let via = evaluate(term::Structure::Directoid(d), t);
            bad += usize::from(direct.is_err() || direct.ok() != via.ok());
        }
    }
    outcome(
        order_language && bad == 0,
        format!(
            "{bad} discrepancies over {} formulas and {} directoids with n <= 5",
            formulas.len(),
            ds.len()
        ),
    )
}

fn oracle_counts() -> Outcome {
    let mut bad = Vec::new();
    let policy = AssignmentPolicy::new(AssignmentMode::Relaxed, Chooser::All);
    for n in 1..=5 {
        let ps = PosetEnumerator::new().structures(n);
        let mut c = oracle::Counts::default();
        let mut directoid_count = 0;
        for p in &ps {
            c.total += 1;
            c.lattice += usize::from(p.is_lattice());
            c.orthoposet += usize::from(p.check(PosetProperty::Orthoposet).holds());
            c.paraorthomodular += usize::from(p.check(PosetProperty::Paraorthomodular).holds());
            c.orthomodular += usize::from(p.check(PosetProperty::Orthomodular).holds());
            directoid_count += directoid_classes(p, policy, &Caps::default())
                .expect("fan-out within cap")
                .len();
        }
        if c != oracle::class_counts(n) || directoid_count != oracle::directoid_class_count(n) {
            bad.push(n);
        }
    }
    let detail = if bad.is_empty() {
        "poset and directoid class counts match for n <= 5".to_string()
    } else {
        format!("counts differ at n = {bad:?}")
    };
    outcome(bad.is_empty(), detail)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("figure fixtures", figures),
        ("B6 characterization", b6_characterization),
        ("directoid representation", representation),
        ("canonical quasivariety", canonical_quasivariety),
        ("non-universality", non_universality),
        ("sharply paraorthomodular characterization", sharply),
        ("ortho-directoids", ortho_directoids),
        ("effect algebras", effect_algebras),
        ("completion equivalence", dm_equivalence),
        ("translation", translation),
        ("oracle agreement", oracle_counts),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        failed += usize::from(!o.pass);
        println!(
            "{:>2} {} {name}: {} [{:.2?}]",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            start.elapsed()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
