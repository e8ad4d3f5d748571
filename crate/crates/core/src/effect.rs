//! Finite effect algebras and orthoalgebras.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::directoid::{Assignments, Chooser, DirectoidClass, InvolutiveDirectoid, PairChoice};
use crate::poset::{BoundedInvolutivePoset, PosetError, PosetProperty, PosetSpec, Relation};
use crate::subset::{Element, MAX_SIZE};
use crate::verdict::{first_failing, Verdict};

/// Unvalidated partial table; `None` marks an undefined sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectAlgebraSpec {
    pub size: usize,
    pub oplus: Vec<Vec<Option<Element>>>,
    pub zero: Element,
    pub one: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EffectError {
    #[error("size {0} is outside 1..={MAX_SIZE}")]
    Size(usize),
    #[error("{what} refers to index {index}, but the size is {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("the ⊕ table is not {0}x{0}")]
    Shape(usize),
    #[error("(E1) fails: {x} ⊕ {y} and {y} ⊕ {x} differ")]
    E1Violation { x: Element, y: Element },
    #[error("(E2) fails: ({x} ⊕ {y}) ⊕ {z} and {x} ⊕ ({y} ⊕ {z}) differ")]
    E2Violation { x: Element, y: Element, z: Element },
    #[error("(E3) fails: {x} has {count} elements summing with it to 1")]
    E3Violation { x: Element, count: usize },
    #[error("(E4) fails: {x} ⊕ 1 is defined but {x} is not 0")]
    E4Violation { x: Element },
    #[error("0 is not neutral: {x} ⊕ 0 ≠ {x}")]
    ZeroNotNeutral { x: Element },
    #[error("induced order is invalid: {0}")]
    InducedOrder(PosetError),
    #[error("not an ortho-directoid: {0}")]
    NotOrthoDirectoid(Verdict),
    #[error("not an orthoalgebra")]
    NotOrthoalgebra,
}

/// A validated finite effect algebra `(E, ⊕, 0, 1)` with its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EffectAlgebra {
    n: usize,
    oplus: Vec<Option<Element>>,
    inv: Vec<Element>,
    zero: Element,
    one: Element,
}

impl EffectAlgebra {
    /// Checks (E1)-(E4) and neutrality of 0, and extracts the complement.
    pub fn validate(spec: EffectAlgebraSpec) -> Result<Self, EffectError> {
        let n = spec.size;
        if n == 0 || n > MAX_SIZE {
            return Err(EffectError::Size(n));
        }
        for (what, index) in [("zero", spec.zero), ("one", spec.one)] {
            if index >= n {
                return Err(EffectError::IndexOutOfRange {
                    what,
                    index,
                    size: n,
                });
            }
        }
        if spec.oplus.len() != n || spec.oplus.iter().any(|r| r.len() != n) {
            return Err(EffectError::Shape(n));
        }
        let mut oplus = Vec::with_capacity(n * n);
        for row in &spec.oplus {
            for &v in row {
                if let Some(index) = v.filter(|&v| v >= n) {
                    return Err(EffectError::IndexOutOfRange {
                        what: "⊕ entry",
                        index,
                        size: n,
                    });
                }
                oplus.push(v);
            }
        }
        let mut a = EffectAlgebra {
            n,
            oplus,
            inv: vec![0; n],
            zero: spec.zero,
            one: spec.one,
        };
        if let Some([x, y]) = first_failing(n, |[x, y]| a.oplus(x, y) != a.oplus(y, x)) {
            return Err(EffectError::E1Violation { x, y });
        }
        if let Some([x, y, z]) = first_failing(n, |[x, y, z]| {
            let lhs = a.oplus(x, y).and_then(|s| a.oplus(s, z));
            let rhs = a.oplus(y, z).and_then(|s| a.oplus(x, s));
            lhs != rhs
        }) {
            return Err(EffectError::E2Violation { x, y, z });
        }
        for x in 0..n {
            let mut comps = (0..n).filter(|&y| a.oplus(x, y) == Some(a.one));
            match (comps.next(), comps.next()) {
                (Some(y), None) => a.inv[x] = y,
                (None, _) => return Err(EffectError::E3Violation { x, count: 0 }),
                (Some(_), Some(_)) => {
                    let count = 2 + comps.count();
                    return Err(EffectError::E3Violation { x, count });
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| x != a.zero && a.oplus(x, a.one).is_some()) {
            return Err(EffectError::E4Violation { x });
        }
        if let Some(x) = (0..n).find(|&x| a.oplus(x, a.zero) != Some(x)) {
            return Err(EffectError::ZeroNotNeutral { x });
        }
        Ok(a)
    }

    pub(crate) fn from_parts_unchecked(
        n: usize,
        oplus: Vec<Option<Element>>,
        inv: Vec<Element>,
        zero: Element,
        one: Element,
    ) -> Self {
        EffectAlgebra {
            n,
            oplus,
            inv,
            zero,
            one,
        }
    }

    pub fn to_spec(&self) -> EffectAlgebraSpec {
        EffectAlgebraSpec {
            size: self.n,
            oplus: self.oplus.chunks(self.n).map(|r| r.to_vec()).collect(),
            zero: self.zero,
            one: self.one,
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn zero(&self) -> Element {
        self.zero
    }

    #[inline]
    pub fn one(&self) -> Element {
        self.one
    }

    #[inline]
    pub fn oplus(&self, x: Element, y: Element) -> Option<Element> {
        self.oplus[x * self.n + y]
    }

    /// The unique `x'` with `x ⊕ x' = 1`.
    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn involution(&self) -> &[Element] {
        &self.inv
    }

    /// `a <= b` iff `a ⊕ c = b` for some `c`.
    pub fn le(&self, a: Element, b: Element) -> bool {
        (0..self.n).any(|c| self.oplus(a, c) == Some(b))
    }

    /// `b ⊖ a = (a ⊕ b')'`, defined when `a <= b`.
    pub fn ominus(&self, b: Element, a: Element) -> Option<Element> {
        if !self.le(a, b) {
            return None;
        }
        self.oplus(a, self.inv(b)).map(|s| self.inv(s))
    }

    /// The induced bounded involutive poset.
    pub fn induced_order(&self) -> Result<BoundedInvolutivePoset, EffectError> {
        let le = (0..self.n)
            .map(|a| (0..self.n).map(|b| self.le(a, b)).collect())
            .collect();
        BoundedInvolutivePoset::validate(PosetSpec {
            size: self.n,
            relation: Relation::Le(le),
            inv: self.inv.clone(),
            bottom: self.zero,
            top: self.one,
            labels: None,
        })
        .map_err(EffectError::InducedOrder)
    }

    /// The induced poset is an orthoposet.
    pub fn is_orthoalgebra(&self) -> bool {
        self.induced_order()
            .map(|p| p.check(PosetProperty::Orthoposet).holds())
            .unwrap_or(false)
    }

    /// Same tables and constants.
    pub fn same_tables(&self, other: &EffectAlgebra) -> bool {
        self == other
    }
}

/// `x ⊕ y := x ⊔ y` when `x <= y'`, undefined otherwise.
pub fn orthoalgebra_from_ortho_directoid(
    d: &InvolutiveDirectoid,
) -> Result<EffectAlgebra, EffectError> {
    let v = d.check_class(DirectoidClass::OrthoDirectoid);
    if !v.holds() {
        return Err(EffectError::NotOrthoDirectoid(v));
    }
    let n = d.size();
    let oplus = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| d.le(x, d.inv(y)).then(|| d.join(x, y)))
                .collect()
        })
        .collect();
    EffectAlgebra::validate(EffectAlgebraSpec {
        size: n,
        oplus,
        zero: d.zero(),
        one: d.one(),
    })
}

/// The directoids `𝒟(A)`: `x ⊔ y` is `x ⊕ y` when `x <= y'`, the larger
/// element when comparable, and otherwise an upper bound picked by `chooser`;
/// `x ⊓ y := (x' ⊔ y')'`.
pub fn directoids_from_orthoalgebra(
    a: &EffectAlgebra,
    chooser: Chooser,
) -> Result<Assignments, EffectError> {
    if !a.is_orthoalgebra() {
        return Err(EffectError::NotOrthoalgebra);
    }
    let p = a.induced_order()?;
    let n = a.size();
    let mut base = vec![0; n * n];
    let mut choices = Vec::new();
    for x in 0..n {
        for y in 0..n {
            base[x * n + y] = if p.le(x, a.inv(y)) {
                a.oplus(x, y).ok_or(EffectError::NotOrthoalgebra)?
            } else if p.le(x, y) {
                y
            } else if p.le(y, x) {
                x
            } else {
                if x < y {
                    choices.push(PairChoice {
                        x,
                        y,
                        options: p.upper2(x, y).iter().collect(),
                    });
                }
                0
            };
        }
    }
    Ok(Assignments::new(&p, base, choices, chooser, true))
}
