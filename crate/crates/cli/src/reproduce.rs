//! End-to-end runs over the bundled fixtures and exhaustive sweeps.

use std::fmt::Write as _;

use clap::ValueEnum;
use rayon::prelude::*;
use serde_json::{json, Value};

use pomlab_core::directoid::{AssignmentMode, AssignmentPolicy, Chooser, DirectoidClass};
use pomlab_core::dm::{self, dm_complete, is_doubly_dense, Quantification};
use pomlab_core::effect::{directoids_from_orthoalgebra, orthoalgebra_from_ortho_directoid};
use pomlab_core::enumerate::{
    enumerate_directoids, enumerate_effect_algebras, Caps, PosetEnumerator,
};
use pomlab_core::forbidden::Role;
use pomlab_core::term::{self, evaluate};
use pomlab_core::{
    find_b6_witness, BoundedInvolutivePoset, InvolutiveDirectoid, PosetProperty, Subset, Verdict,
};

use crate::doc::{self, Structure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    CorollaryDm,
    RoundtripOa,
    All,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Fig1 => "fig1",
            Target::Fig2 => "fig2",
            Target::Fig3 => "fig3",
            Target::Fig4 => "fig4",
            Target::Fig5 => "fig5",
            Target::CorollaryDm => "corollary-dm",
            Target::RoundtripOa => "roundtrip-oa",
            Target::All => "all",
        }
    }
}

/// Bundled fixture documents by file stem.
pub const FIXTURES: &[(&str, &str)] = &[
    ("fig1", include_str!("../fixtures/fig1.json")),
    ("fig2", include_str!("../fixtures/fig2.json")),
    ("fig3", include_str!("../fixtures/fig3.json")),
    ("fig4-b6", include_str!("../fixtures/fig4-b6.json")),
    ("fig5", include_str!("../fixtures/fig5.json")),
    (
        "fig5-directoid",
        include_str!("../fixtures/fig5-directoid.json"),
    ),
    ("diamond", include_str!("../fixtures/diamond.json")),
    ("boolean-ea", include_str!("../fixtures/boolean-ea.json")),
    (
        "three-chain-ea",
        include_str!("../fixtures/three-chain-ea.json"),
    ),
];

pub fn fixture(name: &str) -> Structure {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture {name}"));
    doc::parse_document(text).expect("bundled fixtures are valid")
}

fn fixture_poset(name: &str) -> BoundedInvolutivePoset {
    match fixture(name) {
        Structure::Poset(p) => p,
        _ => panic!("{name} is not a poset"),
    }
}

fn fixture_directoid(name: &str) -> InvolutiveDirectoid {
    match fixture(name) {
        Structure::Directoid(d) => d,
        _ => panic!("{name} is not a directoid"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub text: String,
    pub confirmed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub target: &'static str,
    pub claims: Vec<Claim>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub sections: Vec<Section>,
}

impl Report {
    pub fn confirmed(&self) -> bool {
        self.sections
            .iter()
            .all(|s| s.claims.iter().all(|c| c.confirmed))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for sec in &self.sections {
            for c in &sec.claims {
                let mark = if c.confirmed { "ok" } else { "FAILED" };
                let _ = writeln!(s, "{} [{mark}] {}: {}", sec.target, c.text, c.detail);
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let sections: Vec<Value> = self
            .sections
            .iter()
            .map(|s| {
                let claims: Vec<Value> = s
                    .claims
                    .iter()
                    .map(|c| json!({ "claim": c.text, "confirmed": c.confirmed, "detail": c.detail }))
                    .collect();
                json!({ "target": s.target, "claims": claims })
            })
            .collect();
        json!({ "confirmed": self.confirmed(), "targets": sections })
    }
}

fn claim(text: impl Into<String>, confirmed: bool, detail: impl Into<String>) -> Claim {
    Claim {
        text: text.into(),
        confirmed,
        detail: detail.into(),
    }
}

fn names(p: &BoundedInvolutivePoset, s: Subset) -> String {
    let v: Vec<String> = s.iter().map(|x| p.label(x)).collect();
    format!("{{{}}}", v.join(","))
}

fn shown(p: &BoundedInvolutivePoset, v: &Verdict) -> String {
    match v {
        Verdict::Holds => "holds".into(),
        Verdict::Fails(w) | Verdict::Inconsistent { witness: w, .. } => {
            let b: Vec<String> = w
                .bindings
                .iter()
                .map(|(n, x)| format!("{n}={}", p.label(*x)))
                .collect();
            format!("fails at {}", b.join(", "))
        }
    }
}

fn holds_claim(p: &BoundedInvolutivePoset, prop: PosetProperty, expect: bool) -> Claim {
    let v = p.check(prop);
    let text = if expect {
        prop.name().to_string()
    } else {
        format!("not {}", prop.name())
    };
    claim(text, v.holds() == expect, shown(p, &v))
}

/// Runs `target`; `n` bounds the exhaustive sweeps.
pub fn run(target: Target, n: Option<usize>, caps: &Caps) -> Report {
    let mut report = Report::default();
    let targets: Vec<Target> = match target {
        Target::All => Target::value_variants()
            .iter()
            .copied()
            .filter(|&t| t != Target::All)
            .collect(),
        t => vec![t],
    };
    for t in targets {
        let claims = match t {
            Target::Fig1 => fig1(),
            Target::Fig2 => fig2(),
            Target::Fig3 => fig3(),
            Target::Fig4 => fig4(),
            Target::Fig5 => fig5(),
            Target::CorollaryDm => corollary_dm(n.unwrap_or(9).min(caps.posets)),
            Target::RoundtripOa => roundtrip_oa(n.unwrap_or(8).min(caps.effect_algebras), caps),
            Target::All => unreachable!(),
        };
        report.sections.push(Section {
            target: t.name(),
            claims,
        });
    }
    report
}

fn fig1() -> Vec<Claim> {
    let p = fixture_poset("fig1");
    let e = |s: &str| p.element(s).expect("fixture label");
    let v = p.check(PosetProperty::Distributive);
    let (a, b, c) = (e("a"), e("b"), e("c"));
    let cone = p.lower_cone(p.upper2(a, b).with(c));
    let expected = Subset::pair(e("0"), c);
    let at_abc = v
        .witness()
        .is_some_and(|w| w.get("x") == Some(a) && w.get("y") == Some(b) && w.get("z") == Some(c));
    vec![
        holds_claim(&p, PosetProperty::Paraorthomodular, true),
        holds_claim(&p, PosetProperty::Modular, true),
        claim(
            "not distributive with L(U(a,b),c) = {0,c}",
            !v.holds() && at_abc && cone == expected,
            format!("{}; L(U(a,b),c) = {}", shown(&p, &v), names(&p, cone)),
        ),
    ]
}

fn fig2() -> Vec<Claim> {
    let p = fixture_poset("fig2");
    let c = dm_complete(&p);
    let flp = dm::satisfies_flp(&p, Quantification::Raw, dm::RAW_PAIR_BUDGET);
    let wdc = dm::is_weakly_d_continuous(&p, Quantification::Raw, dm::RAW_PAIR_BUDGET);
    vec![
        holds_claim(&p, PosetProperty::Paraorthomodular, true),
        holds_claim(&p, PosetProperty::Distributive, true),
        claim(
            "completion is paraorthomodular, weakly D-continuous and satisfies FLP",
            c.is_paraorthomodular() && matches!(flp, Ok(None)) && matches!(wdc, Ok(None)),
            format!(
                "{} elements, {} new; the poset itself is {}a lattice",
                c.size(),
                c.size() - p.size(),
                if p.is_lattice() { "" } else { "not " }
            ),
        ),
    ]
}

fn fig3() -> Vec<Claim> {
    let p = fixture_poset("fig3");
    let v = p.check(PosetProperty::Modular);
    let at = v
        .witness()
        .is_some_and(|w| w.get("x") == p.element("a") && w.get("z") == p.element("c'"));
    vec![
        holds_claim(&p, PosetProperty::Paraorthomodular, true),
        claim(
            "not modular with x = a, z = c'",
            !v.holds() && at,
            shown(&p, &v),
        ),
    ]
}

fn fig4() -> Vec<Claim> {
    let p = fixture_poset("fig4-b6");
    let v = p.check(PosetProperty::Paraorthomodular);
    let e = |s: &str| p.element(s);
    let at_ab = v
        .witness()
        .is_some_and(|w| w.get("x") == e("a") && w.get("y") == e("b"));
    let w = find_b6_witness(&p);
    let roles_ok = w
        .as_ref()
        .is_some_and(|w| w.verify(&p) && Role::ALL.iter().all(|&r| e(r.name()) == Some(w.get(r))));
    let roles = w
        .as_ref()
        .map(|w| doc::b6_witness_json(w).to_string())
        .unwrap_or_else(|| "none".into());
    let policy = AssignmentPolicy::new(AssignmentMode::Arbitrary, Chooser::All);
    let ds: Vec<InvolutiveDirectoid> = enumerate_directoids(&p, policy, &Caps::default())
        .expect("small fan-out")
        .collect();
    let cond6_fails = !ds.is_empty()
        && ds.iter().all(|d| {
            d.check_class(DirectoidClass::Involutive45).holds()
                && !d.check_class(DirectoidClass::Cond6).holds()
        });
    vec![
        claim(
            "fails (P*) with witness (a, b)",
            !v.holds() && at_ab,
            shown(&p, &v),
        ),
        claim("the whole poset is a B6 witness", roles_ok, roles),
        claim(
            "every assigned directoid satisfies (4), (5) but not (6)",
            cond6_fails,
            format!("{} assigned directoids", ds.len()),
        ),
    ]
}

fn fig5() -> Vec<Claim> {
    let d = fixture_directoid("fig5-directoid");
    let p = fixture_poset("fig5");
    let parent = d.check_class(DirectoidClass::ParaDirectoidWeak);
    let a = d.element("a").expect("label a");
    let b = d.element("b").expect("label b");
    let (sub, old) = d.subdirectoid(Subset::pair(a, b));
    let child = sub.check_class(DirectoidClass::ParaDirectoidWeak);
    let sub_names: Vec<String> = old.iter().map(|&x| d.label(x)).collect();
    let induced_ok = d.induced_poset().is_ok_and(|q| q.same_structure(&p));
    let ext = d.extend_with_pair();
    let round = ext
        .quotient_theta(d.size())
        .is_ok_and(|q| q.is_isomorphic(&d));
    let axioms: Vec<(String, bool)> = ["idempotent", "commutative", "weakly-associative"]
        .iter()
        .map(|l| {
            let f = term::catalog_entry(l).expect("catalog entry");
            let ok = evaluate(term::Structure::Directoid(&d), &f).is_ok_and(|v| v.holds());
            (l.to_string(), ok)
        })
        .collect();
    vec![
        claim(
            "the directoid induces the fig5 poset",
            induced_ok,
            "order recovered from x ^ y = x",
        ),
        claim(
            "directoid axioms hold",
            axioms.iter().all(|(_, ok)| *ok),
            axioms
                .iter()
                .map(|(l, _)| l.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        ),
        claim(
            "the directoid is a weak paraorthomodular directoid",
            parent.holds(),
            "induced poset satisfies (P*)",
        ),
        claim(
            "the subdirectoid generated by a, b is not",
            !child.holds(),
            format!("universe {{{}}}", sub_names.join(",")),
        ),
        claim(
            "quotient of the one-pair extension is isomorphic to the directoid",
            round,
            format!("{} -> {} -> {} elements", d.size(), ext.size(), d.size()),
        ),
    ]
}

#[derive(Default, Clone, Copy)]
struct DmTally {
    posets: usize,
    paraorthomodular_completions: usize,
    three_way: usize,
    raw_vs_reduced: usize,
    corollary: usize,
    density: usize,
    raw_checked: usize,
}

impl DmTally {
    fn add(mut self, o: DmTally) -> DmTally {
        self.posets += o.posets;
        self.paraorthomodular_completions += o.paraorthomodular_completions;
        self.three_way += o.three_way;
        self.raw_vs_reduced += o.raw_vs_reduced;
        self.corollary += o.corollary;
        self.density += o.density;
        self.raw_checked += o.raw_checked;
        self
    }
}

/// Largest size at which the raw subset sweeps run.
pub const RAW_LIMIT: usize = 7;

fn dm_one(p: &BoundedInvolutivePoset) -> DmTally {
    let c = dm_complete(p);
    let pom = c.is_paraorthomodular();
    let wdc = dm::is_weakly_d_continuous(p, Quantification::Reduced, u128::MAX)
        .expect("no budget")
        .is_none();
    let flp = dm::satisfies_flp(p, Quantification::Reduced, u128::MAX)
        .expect("no budget")
        .is_none();
    let mut t = DmTally {
        posets: 1,
        paraorthomodular_completions: usize::from(pom),
        three_way: usize::from(pom != wdc || pom != flp),
        ..DmTally::default()
    };
    if wdc && !p.check(PosetProperty::Paraorthomodular).holds() {
        t.corollary = 1;
    }
    if wdc && pom && !is_doubly_dense(c.image(), c.lattice()).unwrap_or(false) {
        t.density = 1;
    }
    if p.size() <= RAW_LIMIT {
        t.raw_checked = 1;
        let wr = dm::is_weakly_d_continuous(p, Quantification::Raw, u128::MAX)
            .expect("no budget")
            .is_none();
        let fr = dm::satisfies_flp(p, Quantification::Raw, u128::MAX)
            .expect("no budget")
            .is_none();
        t.raw_vs_reduced = usize::from(wr != wdc || fr != flp);
    }
    t
}

fn corollary_dm(n_max: usize) -> Vec<Claim> {
    let mut e = PosetEnumerator::new();
    let posets: Vec<BoundedInvolutivePoset> = (1..=n_max).flat_map(|n| e.structures(n)).collect();
    let t = posets
        .par_iter()
        .map(dm_one)
        .reduce(DmTally::default, DmTally::add);
    let scope = format!("{} posets with n <= {n_max}", t.posets);
    vec![
        claim(
            "completion paraorthomodular <=> weakly D-continuous <=> FLP",
            t.three_way == 0,
            format!(
                "{} discrepancies over {scope}; {} completions paraorthomodular",
                t.three_way, t.paraorthomodular_completions
            ),
        ),
        claim(
            "raw and closed-set quantification agree",
            t.raw_vs_reduced == 0,
            format!(
                "{} discrepancies over {} posets with n <= {}",
                t.raw_vs_reduced,
                t.raw_checked,
                n_max.min(RAW_LIMIT)
            ),
        ),
        claim(
            "weakly D-continuous posets are paraorthomodular",
            t.corollary == 0,
            format!("{} counterexamples over {scope}", t.corollary),
        ),
        claim(
            "weakly D-continuous posets are doubly dense in their completion",
            t.density == 0,
            format!("{} counterexamples over {scope}", t.density),
        ),
    ]
}

fn roundtrip_oa(n_max: usize, caps: &Caps) -> Vec<Claim> {
    let mut algebras = Vec::new();
    for n in 1..=n_max {
        match enumerate_effect_algebras(n, caps) {
            Ok(v) => algebras.extend(v),
            Err(e) => return vec![claim("enumeration within caps", false, e.to_string())],
        }
    }
    let orthoalgebras: Vec<_> = algebras
        .into_iter()
        .filter(|a| a.is_orthoalgebra())
        .collect();
    let results: Vec<(usize, usize)> = orthoalgebras
        .par_iter()
        .map(|a| {
            let mut count = 0;
            let mut bad = 0;
            match directoids_from_orthoalgebra(a, Chooser::All) {
                Ok(ds) => {
                    for d in ds {
                        count += 1;
                        let back = orthoalgebra_from_ortho_directoid(&d);
                        if !back.is_ok_and(|b| b.same_tables(a)) {
                            bad += 1;
                        }
                    }
                }
                Err(_) => bad += 1,
            }
            (count, bad)
        })
        .collect();
    let directoids: usize = results.iter().map(|r| r.0).sum();
    let bad: usize = results.iter().map(|r| r.1).sum();
    vec![claim(
        "every orthoalgebra is recovered from each of its directoids",
        bad == 0 && !orthoalgebras.is_empty(),
        format!(
            "{bad} failures over {} orthoalgebras with n <= {n_max} and {directoids} directoids",
            orthoalgebras.len()
        ),
    )]
}

#[cfg(test)]
mod tests {
    use super::*;
    use pomlab_core::fixtures;

    #[test]
    fn fixtures_match_library() {
        assert!(fixture_poset("fig1").same_structure(&fixtures::fig1()));
        assert!(fixture_poset("fig2").same_structure(&fixtures::fig2()));
        assert!(fixture_poset("fig3").same_structure(&fixtures::fig3()));
        assert!(fixture_poset("fig4-b6").same_structure(&fixtures::b6()));
        assert!(fixture_poset("fig5").same_structure(&fixtures::fig5()));
        assert!(fixture_poset("diamond").same_structure(&fixtures::diamond()));
        assert!(fixture_directoid("fig5-directoid").same_tables(&fixtures::fig5_directoid()));
        for (name, text) in FIXTURES {
            assert!(text.contains("\"comment\""), "{name}");
        }
    }

    #[test]
    fn figures_reproduce() {
        for t in [
            Target::Fig1,
            Target::Fig2,
            Target::Fig3,
            Target::Fig4,
            Target::Fig5,
        ] {
            let r = run(t, None, &Caps::default());
            assert!(r.confirmed(), "{}", r.to_text());
        }
    }

    #[test]
    fn small_sweeps_reproduce() {
        let r = run(Target::CorollaryDm, Some(6), &Caps::default());
        assert!(r.confirmed(), "{}", r.to_text());
        let r = run(Target::RoundtripOa, Some(6), &Caps::default());
        assert!(r.confirmed(), "{}", r.to_text());
    }
}
