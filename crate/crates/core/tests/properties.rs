use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use pomlab_core::directoid::{AssignmentMode, AssignmentPolicy, Chooser};
use pomlab_core::dm::dm_complete;
use pomlab_core::enumerate::{
    canonical_form, canonicalize, effect_algebras_over, enumerate_directoids, Caps, PosetEnumerator,
};
use pomlab_core::term::{evaluate, parse, Atom, Formula, Prop, Structure, Term};
use pomlab_core::{find_b6_witness, BoundedInvolutivePoset, PosetProperty, Subset};

fn pool() -> &'static [BoundedInvolutivePoset] {
    static POOL: OnceLock<Vec<BoundedInvolutivePoset>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut e = PosetEnumerator::new();
        (1..=8).flat_map(|n| e.structures(n)).collect()
    })
}

fn poset() -> impl Strategy<Value = BoundedInvolutivePoset> {
    (0..pool().len()).prop_map(|i| pool()[i].clone())
}

fn small_poset(max: usize) -> impl Strategy<Value = BoundedInvolutivePoset> {
    let k = pool().iter().filter(|p| p.size() <= max).count();
    (0..k).prop_map(|i| pool()[i].clone())
}

fn relabeled() -> impl Strategy<Value = (BoundedInvolutivePoset, BoundedInvolutivePoset)> {
    poset().prop_flat_map(|p| {
        let n = p.size();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |perm| (p.clone(), p.relabel(&perm)))
    })
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        prop::sample::select(vec!["x", "y", "z"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::prime),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.meet(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.join(b)),
        ]
    })
}

fn prop_body() -> impl Strategy<Value = Prop> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Prop::Atom(Atom::Eq(a, b))),
        (term(), term()).prop_map(|(a, b)| Prop::Atom(Atom::Le(a, b))),
    ];
    atom.prop_recursive(3, 8, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Prop::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| a.and(b)),
            (inner.clone(), inner).prop_map(|(a, b)| a.or(b)),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    prop_oneof![
        prop_body().prop_map(Formula::new),
        (prop_body(), prop_body()).prop_map(|(a, b)| Formula::new(a.implies(b))),
    ]
}

proptest! {
    #[test]
    fn subset_ops_match_sets(a in any::<u128>(), b in any::<u128>()) {
        let (sa, sb) = (Subset::from_bits(a), Subset::from_bits(b));
        let set = |s: Subset| s.iter().collect::<BTreeSet<_>>();
        prop_assert_eq!(set(sa & sb), set(sa).intersection(&set(sb)).copied().collect());
        prop_assert_eq!(set(sa | sb), set(sa).union(&set(sb)).copied().collect());
        prop_assert_eq!(sa.is_subset(sb), set(sa).is_subset(&set(sb)));
        prop_assert_eq!(sa.len(), set(sa).len());
    }

    #[test]
    fn canonical_form_ignores_labels((p, q) in relabeled()) {
        prop_assert_eq!(canonical_form(&p), canonical_form(&q));
        prop_assert!(canonicalize(&q).same_structure(&canonicalize(&p)));
    }

    #[test]
    fn distinct_classes_have_distinct_forms(i in 0..pool().len(), j in 0..pool().len()) {
        prop_assume!(i != j);
        prop_assert_ne!(canonical_form(&pool()[i]), canonical_form(&pool()[j]));
    }

    #[test]
    fn b6_witness_iff_not_paraorthomodular(p in poset()) {
        let w = find_b6_witness(&p);
        prop_assert_eq!(w.is_none(), p.check(PosetProperty::Paraorthomodular).holds());
        if let Some(w) = w {
            prop_assert!(w.verify(&p));
        }
    }

    #[test]
    fn assigned_directoids_induce_source(p in poset(), canonical in any::<bool>()) {
        let mode = if canonical { AssignmentMode::Canonical } else { AssignmentMode::Relaxed };
        let policy = AssignmentPolicy::new(mode, Chooser::Least);
        for d in enumerate_directoids(&p, policy, &Caps::default()).unwrap() {
            prop_assert!(d.induced_poset().unwrap().same_structure(&p));
            for x in 0..p.size() {
                for y in 0..p.size() {
                    let m = d.meet(x, y);
                    prop_assert!(p.le(m, x) && p.le(m, y));
                    prop_assert_eq!(d.join(x, y), d.inv(d.meet(d.inv(x), d.inv(y))));
                }
            }
        }
    }

    #[test]
    fn joins_agree_with_expansion(p in small_poset(5), f in formula()) {
        let policy = AssignmentPolicy::new(AssignmentMode::Arbitrary, Chooser::Least);
        for d in enumerate_directoids(&p, policy, &Caps::default()).unwrap() {
            let a = evaluate(Structure::Directoid(&d), &f).unwrap();
            let b = evaluate(Structure::Directoid(&d), &f.expand_joins()).unwrap();
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn printer_round_trips(f in formula()) {
        let text = f.to_string();
        let back = parse(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn completion_embeds_densely(p in poset()) {
        let c = dm_complete(&p);
        let l = c.lattice();
        let e = c.embedding();
        prop_assert!(l.is_lattice());
        for x in 0..p.size() {
            prop_assert_eq!(e[p.inv(x)], l.inv(e[x]));
            for y in 0..p.size() {
                prop_assert_eq!(p.le(x, y), l.le(e[x], e[y]));
            }
        }
        let image = c.image();
        for z in 0..l.size() {
            prop_assert_eq!(l.join_of(l.down(z) & image), Some(z));
            prop_assert_eq!(l.meet_of(l.up(z) & image), Some(z));
        }
        if p.is_lattice() {
            prop_assert_eq!(c.size(), p.size());
        }
    }

    #[test]
    fn effect_algebra_sums_are_orthogonal(p in small_poset(7)) {
        for a in effect_algebras_over(&p) {
            for x in 0..a.size() {
                for y in 0..a.size() {
                    prop_assert_eq!(a.oplus(x, y).is_some(), a.le(x, a.inv(y)));
                    if let Some(s) = a.oplus(x, y) {
                        prop_assert_eq!(a.ominus(s, x), Some(y));
                    }
                }
            }
            prop_assert!(a.induced_order().unwrap().check(PosetProperty::Paraorthomodular).holds());
        }
    }
}
