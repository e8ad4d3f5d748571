//! Strong subsets and the hexagon B6 as a forbidden configuration.
//!
//! A bounded involutive poset fails (P*) exactly when it contains a strong
//! subset ortho-isomorphic to B6. The search walks the pairs violating (P*)
//! and assembles `{0, a, b, b', a', 1}` from each, which is O(n²) pairs
//! rather than a sweep over six-element subsets.

use alloc::vec::Vec;
use core::fmt;

use crate::poset::BoundedInvolutivePoset;
use crate::subset::{Element, Subset};

/// Why a subset is or is not strong.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StrongSubset {
    Yes,
    /// A bound is missing from the subset.
    MissingBound(Element),
    /// `x` is in the subset but `x'` is not.
    NotInvolutionClosed(Element),
    /// `U_P L_A(x,y) ≠ U_P L_P(x,y)`.
    LowerConeMismatch(Element, Element),
    /// `L_P U_A(x,y) ≠ L_P U_P(x,y)`.
    UpperConeMismatch(Element, Element),
}

impl StrongSubset {
    pub fn is_yes(self) -> bool {
        self == StrongSubset::Yes
    }
}

/// Decides whether `a` is a strong subset of `p`.
pub fn is_strong_subset(p: &BoundedInvolutivePoset, a: Subset) -> StrongSubset {
    for bound in [p.bottom(), p.top()] {
        if !a.contains(bound) {
            return StrongSubset::MissingBound(bound);
        }
    }
    if let Some(x) = a.iter().find(|&x| !a.contains(p.inv(x))) {
        return StrongSubset::NotInvolutionClosed(x);
    }
    for x in a {
        for y in a {
            let lp = p.lower2(x, y);
            if p.upper_cone(lp & a) != p.upper_cone(lp) {
                return StrongSubset::LowerConeMismatch(x, y);
            }
            let up = p.upper2(x, y);
            if p.lower_cone(up & a) != p.lower_cone(up) {
                return StrongSubset::UpperConeMismatch(x, y);
            }
        }
    }
    StrongSubset::Yes
}

/// Positions in the hexagon.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Role {
    Zero,
    A,
    B,
    BPrime,
    APrime,
    One,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::Zero,
        Role::A,
        Role::B,
        Role::BPrime,
        Role::APrime,
        Role::One,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Role::Zero => "0",
            Role::A => "a",
            Role::B => "b",
            Role::BPrime => "b'",
            Role::APrime => "a'",
            Role::One => "1",
        }
    }
}

/// A copy of B6 inside a poset, as a map from roles to elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct B6Witness {
    /// Indexed in [`Role::ALL`] order.
    pub roles: [Element; 6],
}

impl B6Witness {
    pub fn get(&self, role: Role) -> Element {
        self.roles[role as usize]
    }

    pub fn elements(&self) -> Subset {
        self.roles.iter().copied().collect()
    }

    /// Re-checks that the six elements are distinct, carry the hexagon's
    /// order and involution exactly, and form a strong subset.
    pub fn verify(&self, p: &BoundedInvolutivePoset) -> bool {
        use Role::*;
        let r = |role| self.get(role);
        if self.elements().len() != 6 || r(Zero) != p.bottom() || r(One) != p.top() {
            return false;
        }
        if p.inv(r(A)) != r(APrime) || p.inv(r(B)) != r(BPrime) {
            return false;
        }
        // order on the six elements must be exactly the hexagon's
        let above = |role: Role| -> &'static [Role] {
            match role {
                Zero => &[Zero, A, B, BPrime, APrime, One],
                A => &[A, B, One],
                B => &[B, One],
                BPrime => &[BPrime, APrime, One],
                APrime => &[APrime, One],
                One => &[One],
            }
        };
        for x in Role::ALL {
            for y in Role::ALL {
                if p.le(r(x), r(y)) != above(x).contains(&y) {
                    return false;
                }
            }
        }
        is_strong_subset(p, self.elements()).is_yes()
    }
}

impl fmt::Display for B6Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, role) in Role::ALL.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}={}", role.name(), self.roles[i])?;
        }
        Ok(())
    }
}

/// Outcome of the B6 search.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct B6Search {
    pub witness: Option<B6Witness>,
    /// (P*)-violating pairs `(a, b)` whose six-set had collisions or did not
    /// verify, in search order.
    pub degenerate: Vec<(Element, Element)>,
}

/// Finds a B6 configuration, or `None` when `p` is paraorthomodular. Pairs
/// are scanned in lexicographic order.
pub fn find_b6_witness(p: &BoundedInvolutivePoset) -> Option<B6Witness> {
    search(p, false).witness
}

/// Like [`find_b6_witness`] but scans every violating pair and records the
/// ones that failed to yield a hexagon.
pub fn b6_search(p: &BoundedInvolutivePoset) -> B6Search {
    search(p, true)
}

fn search(p: &BoundedInvolutivePoset, exhaustive: bool) -> B6Search {
    let mut out = B6Search::default();
    for a in 0..p.size() {
        for b in p.up(a).without(a) {
            if !p.lower2(p.inv(a), b).is_singleton_of(p.bottom()) {
                continue;
            }
            let w = B6Witness {
                roles: [p.bottom(), a, b, p.inv(b), p.inv(a), p.top()],
            };
            if w.verify(p) {
                if out.witness.is_none() {
                    out.witness = Some(w);
                }
                if !exhaustive {
                    return out;
                }
            } else {
                out.degenerate.push((a, b));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poset::PosetProperty;

    #[test]
    fn full_universe_is_strong() {
        for (_, p) in fixtures::figures() {
            assert!(is_strong_subset(&p, p.universe()).is_yes());
        }
    }

    #[test]
    fn b6_is_a_strong_subset_of_itself_and_is_found() {
        let b6 = fixtures::b6();
        assert!(is_strong_subset(&b6, b6.universe()).is_yes());
        let w = find_b6_witness(&b6).unwrap();
        assert_eq!(w.roles, [0, 1, 2, 3, 4, 5]);
        assert!(w.verify(&b6));
    }

    #[test]
    fn paraorthomodular_figures_have_no_witness() {
        for (name, p) in fixtures::figures() {
            let expect = !p.check(PosetProperty::Paraorthomodular).holds();
            assert_eq!(find_b6_witness(&p).is_some(), expect, "{name}");
        }
        assert!(find_b6_witness(&fixtures::fig2()).is_none());
    }

    #[test]
    fn non_strong_reasons() {
        let f1 = fixtures::fig1();
        let e = |s| f1.element(s).unwrap();
        let no_top: Subset = [e("0"), e("a"), e("a'")].into_iter().collect();
        assert_eq!(
            is_strong_subset(&f1, no_top),
            StrongSubset::MissingBound(e("1"))
        );
        let open: Subset = [e("0"), e("a"), e("1")].into_iter().collect();
        assert_eq!(
            is_strong_subset(&f1, open),
            StrongSubset::NotInvolutionClosed(e("a"))
        );
        // the hexagon in fig1 is strong: every cone comparison agrees
        let hex: Subset = ["0", "a", "b", "b'", "a'", "1"]
            .iter()
            .map(|s| e(s))
            .collect();
        assert!(is_strong_subset(&f1, hex).is_yes());
        // in fig5, L(a, b') = {0, c'} but only 0 survives in the hexagon
        let f5 = fixtures::fig5();
        let e5 = |s| f5.element(s).unwrap();
        let hex: Subset = ["0", "a", "b", "b'", "a'", "1"]
            .iter()
            .map(|s| e5(s))
            .collect();
        assert_eq!(
            is_strong_subset(&f5, hex),
            StrongSubset::LowerConeMismatch(e5("a"), e5("b'"))
        );
    }

    #[test]
    fn fresh_bounds_remove_the_hexagon() {
        let p = fixtures::b6().add_bounds();
        assert!(find_b6_witness(&p).is_none());
    }
}
