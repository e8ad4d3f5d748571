//! Named example structures.
//!
//! `fig1` to `fig5` are small layered posets in which every element lies
//! below every element one level up unless noted. B6 is the hexagon
//! `0 < a < b < 1`, `0 < b' < a' < 1`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::directoid::{DirectoidSpec, InvolutiveDirectoid};
use crate::effect::{EffectAlgebra, EffectAlgebraSpec};
use crate::poset::{BoundedInvolutivePoset, PosetSpec, Relation};
use crate::subset::Element;

/// Builds a labelled structure. `"0"` and `"1"` are the bounds; elements not
/// mentioned in `inv_pairs` are fixed by the involution.
pub fn labelled(
    labels: &[&str],
    hasse: &[(&str, &str)],
    inv_pairs: &[(&str, &str)],
) -> BoundedInvolutivePoset {
    let idx = |s: &str| {
        labels
            .iter()
            .position(|l| *l == s)
            .unwrap_or_else(|| panic!("unknown label {s}"))
    };
    let mut inv: Vec<Element> = (0..labels.len()).collect();
    for &(x, y) in inv_pairs.iter().chain([("0", "1")].iter()) {
        inv[idx(x)] = idx(y);
        inv[idx(y)] = idx(x);
    }
    BoundedInvolutivePoset::validate(PosetSpec {
        size: labels.len(),
        relation: Relation::Hasse(hasse.iter().map(|&(x, y)| (idx(x), idx(y))).collect()),
        inv,
        bottom: idx("0"),
        top: idx("1"),
        labels: Some(labels.iter().map(|s| s.to_string()).collect()),
    })
    .expect("fixture is a bounded involutive poset")
}

/// `fig1`: three atoms each below all three coatoms.
pub fn fig1() -> BoundedInvolutivePoset {
    let atoms = ["a", "b", "c"];
    let coatoms = ["c'", "b'", "a'"];
    let mut hasse = Vec::new();
    for &x in &atoms {
        hasse.push(("0", x));
        for &y in &coatoms {
            hasse.push((x, y));
        }
    }
    for &y in &coatoms {
        hasse.push((y, "1"));
    }
    labelled(
        &["0", "a", "b", "c", "c'", "b'", "a'", "1"],
        &hasse,
        &[("a", "a'"), ("b", "b'"), ("c", "c'")],
    )
}

/// `fig2`: two atoms each below both coatoms.
pub fn fig2() -> BoundedInvolutivePoset {
    labelled(
        &["0", "a", "b", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("a", "b'"),
            ("a", "a'"),
            ("b", "b'"),
            ("b", "a'"),
            ("b'", "1"),
            ("a'", "1"),
        ],
        &[("a", "a'"), ("b", "b'")],
    )
}

/// `fig3`: four atoms, four coatoms, not modular.
pub fn fig3() -> BoundedInvolutivePoset {
    labelled(
        &["0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("0", "d"),
            ("a", "d'"),
            ("a", "c'"),
            ("a", "b'"),
            ("b", "d'"),
            ("b", "a'"),
            ("c", "d'"),
            ("c", "a'"),
            ("d", "c'"),
            ("d", "b'"),
            ("d", "a'"),
            ("d'", "1"),
            ("c'", "1"),
            ("b'", "1"),
            ("a'", "1"),
        ],
        &[("a", "a'"), ("b", "b'"), ("c", "c'"), ("d", "d'")],
    )
}

/// `fig4`, the hexagon B6. Elements are numbered in role order
/// `0, a, b, b', a', 1`.
pub fn b6() -> BoundedInvolutivePoset {
    labelled(
        &["0", "a", "b", "b'", "a'", "1"],
        &[
            ("0", "a"),
            ("a", "b"),
            ("b", "1"),
            ("0", "b'"),
            ("b'", "a'"),
            ("a'", "1"),
        ],
        &[("a", "a'"), ("b", "b'")],
    )
}

/// `fig5`: `0 < c' < {a < b, b' < a'} < c < 1`, a paraorthomodular lattice.
pub fn fig5() -> BoundedInvolutivePoset {
    labelled(
        &["0", "c'", "a", "b'", "b", "a'", "c", "1"],
        &[
            ("0", "c'"),
            ("c'", "a"),
            ("c'", "b'"),
            ("a", "b"),
            ("b'", "a'"),
            ("b", "c"),
            ("a'", "c"),
            ("c", "1"),
        ],
        &[("a", "a'"), ("b", "b'"), ("c", "c'")],
    )
}

/// The four-element Boolean algebra `0 < a, a' < 1`.
pub fn diamond() -> BoundedInvolutivePoset {
    labelled(
        &["0", "a", "a'", "1"],
        &[("0", "a"), ("0", "a'"), ("a", "1"), ("a'", "1")],
        &[("a", "a'")],
    )
}

/// The `n`-element chain with the order-reversing involution.
pub fn chain(n: usize) -> BoundedInvolutivePoset {
    assert!(n >= 1);
    let hasse: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    let inv: Vec<_> = (0..n).rev().collect();
    BoundedInvolutivePoset::from_hasse(n, &hasse, &inv, 0, n - 1).expect("chain")
}

/// The directoid on `fig5` that sends the four incomparable pairs among
/// `a, b, a', b'` to 0 and every comparable pair to its minimum.
///
/// Sending `a ⊓ a'` and `b ⊓ b'` to 0 makes `{a, b}` generate the hexagon.
/// With the lattice meet `c'` there instead (see [`fig5_directoid_with_meets`]) the
/// generated subdirectoid is the whole algebra.
pub fn fig5_directoid() -> InvolutiveDirectoid {
    fig5_table(&[("a", "b'"), ("a'", "b"), ("a", "a'"), ("b", "b'")])
}

/// `fig5` with only `a ⊓ b'` and `a' ⊓ b` sent to 0 and the lattice meet
/// everywhere else.
pub fn fig5_directoid_with_meets() -> InvolutiveDirectoid {
    fig5_table(&[("a", "b'"), ("a'", "b")])
}

fn fig5_table(zeroed: &[(&str, &str)]) -> InvolutiveDirectoid {
    let p = fig5();
    let e = |s: &str| p.element(s).unwrap();
    let n = p.size();
    let mut meet: Vec<Vec<Element>> = (0..n)
        .map(|x| (0..n).map(|y| p.meet(x, y).unwrap()).collect())
        .collect();
    for &(x, y) in zeroed {
        meet[e(x)][e(y)] = e("0");
        meet[e(y)][e(x)] = e("0");
    }
    InvolutiveDirectoid::validate(DirectoidSpec {
        size: n,
        meet,
        inv: p.involution().to_vec(),
        zero: e("0"),
        one: e("1"),
    })
    .expect("fig5 directoid")
    .with_labels(p.labels().unwrap().to_vec())
}

/// Meet table of a lattice as a directoid.
pub fn lattice_directoid(p: &BoundedInvolutivePoset) -> InvolutiveDirectoid {
    let n = p.size();
    let meet = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| p.meet(x, y).expect("fixture is a lattice"))
                .collect()
        })
        .collect();
    InvolutiveDirectoid::validate(DirectoidSpec {
        size: n,
        meet,
        inv: p.involution().to_vec(),
        zero: p.bottom(),
        one: p.top(),
    })
    .expect("lattice meet table is a directoid")
}

fn effect_algebra(n: usize, defined: &[(Element, Element, Element)]) -> EffectAlgebra {
    let mut oplus = alloc::vec![alloc::vec![None; n]; n];
    for &(x, y, z) in defined {
        oplus[x][y] = Some(z);
        oplus[y][x] = Some(z);
    }
    EffectAlgebra::validate(EffectAlgebraSpec {
        size: n,
        oplus,
        zero: 0,
        one: n - 1,
    })
    .expect("fixture is an effect algebra")
}

/// `{0, 1}` with `1 ⊕ 1` undefined.
pub fn two_element_effect_algebra() -> EffectAlgebra {
    effect_algebra(2, &[(0, 0, 0), (0, 1, 1)])
}

/// The Boolean algebra `{0, a, a', 1}` with `⊕` the join of disjoint pairs.
pub fn boolean_effect_algebra() -> EffectAlgebra {
    effect_algebra(4, &[(0, 0, 0), (0, 1, 1), (0, 2, 2), (0, 3, 3), (1, 2, 3)])
}

/// The three-element MV-effect algebra `{0, h, 1}` with `h ⊕ h = 1`.
pub fn three_chain_effect_algebra() -> EffectAlgebra {
    effect_algebra(3, &[(0, 0, 0), (0, 1, 1), (0, 2, 2), (1, 1, 2)])
}

/// Name and structure of every poset figure.
pub fn figures() -> Vec<(String, BoundedInvolutivePoset)> {
    alloc::vec![
        ("fig1".into(), fig1()),
        ("fig2".into(), fig2()),
        ("fig3".into(), fig3()),
        ("fig4".into(), b6()),
        ("fig5".into(), fig5()),
    ]
}
