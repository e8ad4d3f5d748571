//! Involutive commutative directoids.
//!
//! A directoid `(D, ⊓, ', 0, 1)` totalizes the meet of a poset by picking a
//! common lower bound for every pair; the order is recovered as
//! `x <= y iff x ⊓ y = x`, and `x ⊔ y := (x' ⊓ y')'`.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::poset::{BoundedInvolutivePoset, PosetError, PosetSpec, Relation};
use crate::subset::{Element, Subset, MAX_SIZE};
use crate::verdict::{first_failing, forall, Verdict, Witness};

/// Unvalidated operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectoidSpec {
    pub size: usize,
    pub meet: Vec<Vec<Element>>,
    pub inv: Vec<Element>,
    pub zero: Element,
    pub one: Element,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DirectoidError {
    #[error("size {0} is outside 1..={MAX_SIZE}")]
    Size(usize),
    #[error("{what} refers to index {index}, but the size is {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("the meet table is not {0}x{0}")]
    Shape(usize),
    #[error("not idempotent: {x} ⊓ {x} ≠ {x}")]
    NotIdempotent { x: Element },
    #[error("not commutative: {x} ⊓ {y} ≠ {y} ⊓ {x}")]
    NotCommutative { x: Element, y: Element },
    #[error("not weakly associative at x={x}, y={y}, z={z}")]
    NotWeaklyAssociative { x: Element, y: Element, z: Element },
    #[error("not an involution: inv({x}) = {image}, but inv({image}) = {back}")]
    NotInvolution {
        x: Element,
        image: Element,
        back: Element,
    },
    #[error("induced order is unbounded: {bound} {at} is not comparable with {x} as required")]
    InducedOrderUnbounded {
        bound: &'static str,
        at: Element,
        x: Element,
    },
    #[error("induced poset is invalid: {0}")]
    InducedPoset(PosetError),
    #[error("not a congruence: {x} and {y} are identified but {x} ⊓ {z} and {y} ⊓ {z} are not")]
    NotACongruence { x: Element, y: Element, z: Element },
    #[error("{0} is not a proper atom for the quotient")]
    BadQuotientAtom(Element),
}

/// A validated finite commutative directoid with an involution and two
/// constants.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InvolutiveDirectoid {
    n: usize,
    /// row-major `n * n`
    meet: Vec<Element>,
    inv: Vec<Element>,
    zero: Element,
    one: Element,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for InvolutiveDirectoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvolutiveDirectoid")
            .field("meet", &self.meet_rows())
            .field("inv", &self.inv)
            .field("zero", &self.zero)
            .field("one", &self.one)
            .finish()
    }
}

impl InvolutiveDirectoid {
    /// Checks idempotence, commutativity, weak associativity and that the
    /// unary operation is an involution. Boundedness and antitonicity are
    /// properties checked separately.
    pub fn validate(spec: DirectoidSpec) -> Result<Self, DirectoidError> {
        let n = spec.size;
        if n == 0 || n > MAX_SIZE {
            return Err(DirectoidError::Size(n));
        }
        let idx = |what, index: usize| {
            if index < n {
                Ok(index)
            } else {
                Err(DirectoidError::IndexOutOfRange {
                    what,
                    index,
                    size: n,
                })
            }
        };
        idx("zero", spec.zero)?;
        idx("one", spec.one)?;
        if spec.meet.len() != n || spec.meet.iter().any(|r| r.len() != n) {
            return Err(DirectoidError::Shape(n));
        }
        if spec.inv.len() != n {
            return Err(DirectoidError::IndexOutOfRange {
                what: "inv length",
                index: spec.inv.len(),
                size: n,
            });
        }
        let mut meet = Vec::with_capacity(n * n);
        for row in &spec.meet {
            for &v in row {
                meet.push(idx("meet entry", v)?);
            }
        }
        for &v in &spec.inv {
            idx("inv", v)?;
        }
        let d = InvolutiveDirectoid {
            n,
            meet,
            inv: spec.inv,
            zero: spec.zero,
            one: spec.one,
            labels: None,
        };
        if let Some(x) = (0..n).find(|&x| d.meet(x, x) != x) {
            return Err(DirectoidError::NotIdempotent { x });
        }
        if let Some([x, y]) = first_failing(n, |[x, y]| d.meet(x, y) != d.meet(y, x)) {
            return Err(DirectoidError::NotCommutative { x, y });
        }
        if let Some([x, y, z]) = first_failing(n, |[x, y, z]| {
            let yz = d.meet(y, z);
            d.meet(d.meet(x, yz), z) != d.meet(x, yz)
        }) {
            return Err(DirectoidError::NotWeaklyAssociative { x, y, z });
        }
        for x in 0..n {
            let back = d.inv[d.inv[x]];
            if back != x {
                return Err(DirectoidError::NotInvolution {
                    x,
                    image: d.inv[x],
                    back,
                });
            }
        }
        Ok(d)
    }

    /// Tables already known to form an involutive directoid.
    pub(crate) fn from_parts_unchecked(
        n: usize,
        meet: Vec<Element>,
        inv: Vec<Element>,
        zero: Element,
        one: Element,
    ) -> Self {
        debug_assert_eq!(meet.len(), n * n);
        InvolutiveDirectoid {
            n,
            meet,
            inv,
            zero,
            one,
            labels: None,
        }
    }

    pub fn to_spec(&self) -> DirectoidSpec {
        DirectoidSpec {
            size: self.n,
            meet: self.meet_rows(),
            inv: self.inv.clone(),
            zero: self.zero,
            one: self.one,
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn element(&self, label: &str) -> Option<Element> {
        self.labels.as_ref()?.iter().position(|l| l == label)
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
    pub fn meet(&self, x: Element, y: Element) -> Element {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn involution(&self) -> &[Element] {
        &self.inv
    }

    /// `x ⊔ y := (x' ⊓ y')'`
    #[inline]
    pub fn join(&self, x: Element, y: Element) -> Element {
        self.inv[self.meet(self.inv[x], self.inv[y])]
    }

    /// Induced order: `x <= y iff x ⊓ y = x`.
    #[inline]
    pub fn le(&self, x: Element, y: Element) -> bool {
        self.meet(x, y) == x
    }

    pub fn meet_rows(&self) -> Vec<Vec<Element>> {
        self.meet.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Same tables and constants, ignoring labels.
    pub fn same_tables(&self, other: &InvolutiveDirectoid) -> bool {
        self.n == other.n
            && self.meet == other.meet
            && self.inv == other.inv
            && self.zero == other.zero
            && self.one == other.one
    }

    /// The poset induced by `x <= y iff x ⊓ y = x`.
    pub fn induced_poset(&self) -> Result<BoundedInvolutivePoset, DirectoidError> {
        let le = (0..self.n)
            .map(|x| (0..self.n).map(|y| self.le(x, y)).collect())
            .collect();
        let spec = PosetSpec {
            size: self.n,
            relation: Relation::Le(le),
            inv: self.inv.clone(),
            bottom: self.zero,
            top: self.one,
            labels: self.labels.clone(),
        };
        BoundedInvolutivePoset::validate(spec).map_err(|e| match e {
            PosetError::NotBounded { bound, at, x } => {
                DirectoidError::InducedOrderUnbounded { bound, at, x }
            }
            other => DirectoidError::InducedPoset(other),
        })
    }

    /// `{ (x ⊓ a) ⊓ (x ⊓ b) : x in D }`, which is L(a, b) in the induced
    /// order.
    pub fn cone_via_directoid(&self, a: Element, b: Element) -> Subset {
        (0..self.n)
            .map(|x| self.meet(self.meet(x, a), self.meet(x, b)))
            .collect()
    }

    /// Closure of `generators ∪ {0, 1}` under `⊓` and `'`.
    pub fn generated(&self, generators: Subset) -> Subset {
        let mut s = generators.with(self.zero).with(self.one);
        loop {
            let mut next = s;
            for x in s {
                next.insert(self.inv[x]);
                for y in s {
                    next.insert(self.meet(x, y));
                }
            }
            if next == s {
                return s;
            }
            s = next;
        }
    }

    /// The subdirectoid generated by `generators`, renumbered in increasing
    /// index order, with the map from new to old indices.
    pub fn subdirectoid(&self, generators: Subset) -> (InvolutiveDirectoid, Vec<Element>) {
        let s = self.generated(generators);
        let old: Vec<Element> = s.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &x) in old.iter().enumerate() {
            new_of[x] = i;
        }
        let m = old.len();
        let mut meet = Vec::with_capacity(m * m);
        for &x in &old {
            for &y in &old {
                meet.push(new_of[self.meet(x, y)]);
            }
        }
        let inv = old.iter().map(|&x| new_of[self.inv[x]]).collect();
        let mut d = InvolutiveDirectoid::from_parts_unchecked(
            m,
            meet,
            inv,
            new_of[self.zero],
            new_of[self.one],
        );
        d.labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&x| l[x].clone()).collect());
        (d, old)
    }

    /// Decides membership in one of the catalogued classes.
    pub fn check_class(&self, class: DirectoidClass) -> Verdict {
        use DirectoidClass::*;
        match class {
            Involutive45 => self.check_4().and_then(|| self.check_5()),
            Cond6 => self.check_6(),
            Qid8 => self.check_8(),
            Qid9 => self.check_9(),
            Id14 => self.check_14(),
            SharplyParaorthomodularDirectoid => self
                .check_14()
                .tagged("(14)")
                .and_then(|| self.check_8().tagged("(8)")),
            ParaDirectoidWeak => match self.induced_poset() {
                Ok(p) => p.check(crate::poset::PosetProperty::Paraorthomodular),
                Err(_) => Verdict::Fails(Witness::new([])),
            },
            ParaDirectoidSharp => self
                .check_class(Involutive45)
                .and_then(|| self.check_class(SharplyParaorthomodularDirectoid)),
            OrthomodularDirectoid => self
                .check_class(Involutive45)
                .and_then(|| self.check_bounds())
                .and_then(|| self.check_om1().tagged("1."))
                .and_then(|| self.check_om2().tagged("2."))
                .and_then(|| self.check_om3().tagged("3.")),
            OrthoDirectoid => self.check_ortho_axioms(),
            LargestQuasivariety => self.check_class(Involutive45).and_then(|| self.check_9()),
            CanonicalImage => self.check_class(Involutive45).and_then(|| self.check_8()),
        }
    }

    /// (4) x'' = x
    fn check_4(&self) -> Verdict {
        forall(self.n, ["x"], |[x]| self.inv(self.inv(x)) != x).tagged("(4)")
    }

    /// (5) (x ⊓ y)' ⊓ y' = y'
    fn check_5(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            self.meet(self.inv(self.meet(x, y)), self.inv(y)) != self.inv(y)
        })
        .tagged("(5)")
    }

    /// (6) ((x ⊓ y)' ⊓ z) ⊓ (x ⊓ z) = 0 for all z implies x <= y
    fn check_6(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            let c = self.inv(self.meet(x, y));
            let antecedent =
                (0..self.n).all(|z| self.meet(self.meet(c, z), self.meet(x, z)) == self.zero);
            antecedent && !self.le(x, y)
        })
    }

    /// (8) (x ⊓ y)' ⊓ y = 0 implies x ⊓ y = y
    fn check_8(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            let m = self.meet(x, y);
            self.meet(self.inv(m), y) == self.zero && m != y
        })
    }

    /// (9) ((x ⊓ y)' ⊓ y) ⊔ (y' ⊓ (x ⊓ y)) = 0 implies x ⊓ y = y
    fn check_9(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            let m = self.meet(x, y);
            let l = self.meet(self.inv(m), y);
            let r = self.meet(self.inv(y), m);
            self.join(l, r) == self.zero && m != y
        })
    }

    /// (14) z <= ((x ⊔ z) ⊔ (y ⊔ z)') ⊓ (y ⊔ z)
    fn check_14(&self) -> Verdict {
        forall(self.n, ["x", "y", "z"], |[x, y, z]| {
            let yz = self.join(y, z);
            let rhs = self.meet(self.join(self.join(x, z), self.inv(yz)), yz);
            !self.le(z, rhs)
        })
    }

    /// 0 <= x <= 1 in the induced order
    fn check_bounds(&self) -> Verdict {
        forall(self.n, ["x"], |[x]| {
            !self.le(self.zero, x) || !self.le(x, self.one)
        })
        .tagged("bounds")
    }

    /// 1. x ⊔ x' = 1
    fn check_om1(&self) -> Verdict {
        forall(self.n, ["x"], |[x]| self.join(x, self.inv(x)) != self.one)
    }

    /// 2. (((x ⊔ z) ⊔ (y ⊔ z)') ⊓ (y ⊔ z)) ⊓ z = z
    fn check_om2(&self) -> Verdict {
        forall(self.n, ["x", "y", "z"], |[x, y, z]| {
            let yz = self.join(y, z);
            let w = self.meet(self.join(self.join(x, z), self.inv(yz)), yz);
            self.meet(w, z) != z
        })
    }

    /// 3. (x ⊓ y) ⊔ ((x ⊓ y) ⊔ y')' = y
    fn check_om3(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            let m = self.meet(x, y);
            self.join(m, self.inv(self.join(m, self.inv(y)))) != y
        })
    }

    fn check_ortho_axioms(&self) -> Verdict {
        let n = self.n;
        let (m, j, c) = (
            |x, y| self.meet(x, y),
            |x, y| self.join(x, y),
            |x| self.inv(x),
        );
        forall(n, ["x", "y"], |[x, y]| m(x, y) != m(y, x))
            .tagged("(i)")
            .and_then(|| forall(n, ["x"], |[x]| j(x, c(x)) != self.one).tagged("(ii)"))
            .and_then(|| forall(n, ["x"], |[x]| j(self.zero, x) != x).tagged("(iii)"))
            .and_then(|| {
                forall(n, ["x", "y", "z"], |[x, y, z]| {
                    let u = m(x, c(y));
                    let uy = j(u, y);
                    let w = c(j(uy, z));
                    j(uy, w) != j(u, j(y, w))
                })
                .tagged("(iv)")
            })
            .and_then(|| {
                forall(n, ["x", "y"], |[x, y]| {
                    let u = m(x, y);
                    j(u, c(j(u, c(y)))) != y
                })
                .tagged("(v)")
            })
            .and_then(|| {
                forall(n, ["x", "y", "z"], |[x, y, z]| {
                    let u = m(x, c(y));
                    let v = c(j(y, c(j(j(u, y), z))));
                    j(u, v) != v
                })
                .tagged("(vi)")
            })
    }

    /// The identities and quasi-identity every ortho-directoid satisfies,
    /// together with the orthoposet property of the induced poset.
    pub fn check_ortho_derived_laws(&self) -> Verdict {
        let n = self.n;
        let (zero, one) = (self.zero, self.one);
        let (m, j, c) = (
            |x, y| self.meet(x, y),
            |x, y| self.join(x, y),
            |x| self.inv(x),
        );
        forall(n, [], |[]| c(zero) != one)
            .tagged("(i)")
            .and_then(|| forall(n, ["x"], |[x]| c(c(x)) != x).tagged("(ii)"))
            .and_then(|| forall(n, [], |[]| c(one) != zero).tagged("(iii)"))
            .and_then(|| {
                forall(n, ["x", "y"], |[x, y]| {
                    m(x, c(x)) != zero
                        || m(x, zero) != zero
                        || m(x, one) != x
                        || j(m(x, y), y) != y
                        || m(j(x, y), y) != y
                        || j(x, one) != one
                })
                .tagged("(iv)")
            })
            .and_then(|| self.check_5().tagged("(v)"))
            .and_then(|| self.check_8().tagged("(vi)"))
            .and_then(|| forall(n, ["x"], |[x]| m(x, x) != x).tagged("(vii)"))
            .and_then(|| {
                forall(n, ["x", "y", "z"], |[x, y, z]| {
                    let w = m(m(x, y), z);
                    m(x, w) != w
                })
                .tagged("(viii)")
            })
            .and_then(|| match self.induced_poset() {
                Ok(p) => p
                    .check(crate::poset::PosetProperty::Orthoposet)
                    .tagged("(b)"),
                Err(_) => Verdict::Fails(Witness::new([]).tagged("(b)")),
            })
    }

    /// Adjoins a fresh atom `a` and coatom `a'`: every nonzero element sits
    /// above `a` and every element other than 1 below `a'`. Zero meets of
    /// nonzero elements are redirected to `a`, so `x ⊓ y = 0` only when one
    /// argument is 0. The new elements get indices `n` and `n + 1`.
    pub fn extend_with_pair(&self) -> InvolutiveDirectoid {
        let n = self.n;
        let (a, a_) = (n, n + 1);
        let m = n + 2;
        let zero = self.zero;
        let one = self.one;
        let mut meet = vec![0; m * m];
        for x in 0..m {
            for y in 0..m {
                let v = if x == zero || y == zero {
                    zero
                } else if x < n && y < n {
                    let v = self.meet(x, y);
                    if v != zero {
                        v
                    } else {
                        a
                    }
                } else if x == a || y == a {
                    a
                } else if y == a_ && x != one {
                    x
                } else if x == a_ && y != one {
                    y
                } else {
                    // {a', 1}
                    a_
                };
                meet[x * m + y] = v;
            }
        }
        let mut inv = self.inv.clone();
        inv.push(a_);
        inv.push(a);
        let mut d = InvolutiveDirectoid::from_parts_unchecked(m, meet, inv, zero, one);
        d.labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("α".into());
            l.push("α'".into());
            l
        });
        d
    }

    /// Quotient by the equivalence identifying `atom` with 0 and `atom'`
    /// with 1. Remaining elements keep their relative order.
    pub fn quotient_theta(&self, atom: Element) -> Result<InvolutiveDirectoid, DirectoidError> {
        let n = self.n;
        if atom >= n {
            return Err(DirectoidError::IndexOutOfRange {
                what: "atom",
                index: atom,
                size: n,
            });
        }
        let co = self.inv[atom];
        if atom == self.zero || atom == self.one || co == atom {
            return Err(DirectoidError::BadQuotientAtom(atom));
        }
        let class = |x: Element| -> Element {
            if x == atom {
                self.zero
            } else if x == co {
                self.one
            } else {
                x
            }
        };
        for (x, y) in [(atom, self.zero), (co, self.one)] {
            for z in 0..n {
                if class(self.meet(x, z)) != class(self.meet(y, z))
                    || class(self.inv(x)) != class(self.inv(y))
                {
                    return Err(DirectoidError::NotACongruence { x, y, z });
                }
            }
        }
        let reps: Vec<Element> = (0..n).filter(|&x| x != atom && x != co).collect();
        let mut new_of = vec![usize::MAX; n];
        for (i, &x) in reps.iter().enumerate() {
            new_of[x] = i;
        }
        let k = reps.len();
        let mut meet = Vec::with_capacity(k * k);
        for &x in &reps {
            for &y in &reps {
                meet.push(new_of[class(self.meet(x, y))]);
            }
        }
        let inv = reps.iter().map(|&x| new_of[class(self.inv(x))]).collect();
        let mut d = InvolutiveDirectoid::from_parts_unchecked(
            k,
            meet,
            inv,
            new_of[self.zero],
            new_of[self.one],
        );
        d.labels = self
            .labels
            .as_ref()
            .map(|l| reps.iter().map(|&x| l[x].clone()).collect());
        Ok(d)
    }

    /// Structural equality up to renaming elements.
    pub fn is_isomorphic(&self, other: &InvolutiveDirectoid) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n;
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        map[self.zero] = other.zero;
        used[other.zero] = true;
        if map[self.one] != usize::MAX && map[self.one] != other.one {
            return false;
        }
        if self.one != self.zero {
            if used[other.one] {
                return false;
            }
            map[self.one] = other.one;
            used[other.one] = true;
        } else if other.one != other.zero {
            return false;
        }
        self.extend_iso(other, &mut map, &mut used, 0)
    }

    fn extend_iso(
        &self,
        other: &InvolutiveDirectoid,
        map: &mut [Element],
        used: &mut [bool],
        from: Element,
    ) -> bool {
        let n = self.n;
        let Some(x) = (from..n).find(|&x| map[x] == usize::MAX) else {
            return (0..n).all(|x| {
                other.inv(map[x]) == map[self.inv(x)]
                    && (0..n).all(|y| other.meet(map[x], map[y]) == map[self.meet(x, y)])
            });
        };
        for y in 0..n {
            if used[y] {
                continue;
            }
            map[x] = y;
            used[y] = true;
            let consistent = (0..n).all(|z| {
                map[z] == usize::MAX
                    || (other.meet(y, map[z]) == map[self.meet(x, z)]
                        || map[self.meet(x, z)] == usize::MAX)
            });
            if consistent && self.extend_iso(other, map, used, x + 1) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
}

/// How incomparable pairs of a poset are assigned a meet value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AssignmentMode {
    /// `x ∧ y` whenever the meet exists, otherwise any element of L(x, y).
    Arbitrary,
    /// Any element of L(x, y), even when a meet exists. These are exactly
    /// the directoids inducing the given poset.
    Relaxed,
    /// Any element of `L(x, y) \ {0}` when `x' < y` and `L(x, y) ≠ {0}`,
    /// otherwise any element of L(x, y).
    Canonical,
}

/// Which tables to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chooser {
    /// One table: the smallest admissible index for every pair.
    Least,
    /// Every admissible table.
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AssignmentPolicy {
    pub mode: AssignmentMode,
    pub chooser: Chooser,
}

impl AssignmentPolicy {
    pub const fn new(mode: AssignmentMode, chooser: Chooser) -> Self {
        AssignmentPolicy { mode, chooser }
    }
}

impl FromStr for AssignmentMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "arbitrary" => Ok(AssignmentMode::Arbitrary),
            "relaxed" => Ok(AssignmentMode::Relaxed),
            "canonical" => Ok(AssignmentMode::Canonical),
            _ => Err(alloc::format!("unknown policy `{s}`")),
        }
    }
}

impl FromStr for Chooser {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "least" => Ok(Chooser::Least),
            "all" => Ok(Chooser::All),
            _ => Err(alloc::format!("unknown chooser `{s}`")),
        }
    }
}

/// Admissible values of `x ⊓ y` for one unordered incomparable pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairChoice {
    pub x: Element,
    pub y: Element,
    pub options: Vec<Element>,
}

/// The admissible values for every incomparable pair `x < y` (by index).
/// Comparable pairs are always sent to their minimum.
pub fn assignment_choices(p: &BoundedInvolutivePoset, mode: AssignmentMode) -> Vec<PairChoice> {
    let n = p.size();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if p.comparable(x, y) {
                continue;
            }
            let l = p.lower2(x, y);
            let allowed = match mode {
                AssignmentMode::Relaxed => l,
                AssignmentMode::Arbitrary => match p.max_of(l) {
                    Some(m) => Subset::singleton(m),
                    None => l,
                },
                AssignmentMode::Canonical => {
                    let zero_only = l.is_singleton_of(p.bottom());
                    if p.lt(p.inv(x), y) && !zero_only {
                        l.without(p.bottom())
                    } else {
                        l
                    }
                }
            };
            out.push(PairChoice {
                x,
                y,
                options: allowed.iter().collect(),
            });
        }
    }
    out
}

/// Number of tables [`assigned_directoids`] yields under `Chooser::All`,
/// saturating at `u128::MAX`.
pub fn fan_out(p: &BoundedInvolutivePoset, mode: AssignmentMode) -> u128 {
    assignment_choices(p, mode)
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.options.len() as u128))
}

/// Every directoid assigned to `p` under `policy`, in lexicographic order of
/// the choice indices (last pair fastest).
pub fn assigned_directoids(p: &BoundedInvolutivePoset, policy: AssignmentPolicy) -> Assignments {
    let n = p.size();
    let mut base = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            if p.le(x, y) {
                base[x * n + y] = x;
            } else if p.le(y, x) {
                base[x * n + y] = y;
            }
        }
    }
    let choices = assignment_choices(p, policy.mode);
    Assignments::new(p, base, choices, policy.chooser, false)
}

/// Iterator over assigned tables.
#[derive(Clone, Debug)]
pub struct Assignments {
    n: usize,
    base: Vec<Element>,
    choices: Vec<PairChoice>,
    cursor: Vec<usize>,
    inv: Vec<Element>,
    zero: Element,
    one: Element,
    single: bool,
    /// `base` and `choices` describe `⊔`; yielded meets are `(x' ⊔ y')'`.
    dual: bool,
    done: bool,
}

impl Assignments {
    pub(crate) fn new(
        p: &BoundedInvolutivePoset,
        base: Vec<Element>,
        choices: Vec<PairChoice>,
        chooser: Chooser,
        dual: bool,
    ) -> Self {
        let done = choices.iter().any(|c| c.options.is_empty());
        Assignments {
            n: p.size(),
            base,
            cursor: vec![0; choices.len()],
            choices,
            inv: p.involution().to_vec(),
            zero: p.bottom(),
            one: p.top(),
            single: chooser == Chooser::Least,
            dual,
            done,
        }
    }
}

impl Iterator for Assignments {
    type Item = InvolutiveDirectoid;

    fn next(&mut self) -> Option<InvolutiveDirectoid> {
        if self.done {
            return None;
        }
        let n = self.n;
        let mut meet = self.base.clone();
        for (c, &i) in self.choices.iter().zip(&self.cursor) {
            let v = c.options[i];
            meet[c.x * n + c.y] = v;
            meet[c.y * n + c.x] = v;
        }
        if self.dual {
            let join = meet;
            meet = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    meet[x * n + y] = self.inv[join[self.inv[x] * n + self.inv[y]]];
                }
            }
        }
        let d = InvolutiveDirectoid::from_parts_unchecked(
            n,
            meet,
            self.inv.clone(),
            self.zero,
            self.one,
        );
        // advance the odometer
        if self.single {
            self.done = true;
        } else {
            let mut k = self.cursor.len();
            loop {
                if k == 0 {
                    self.done = true;
                    break;
                }
                k -= 1;
                self.cursor[k] += 1;
                if self.cursor[k] < self.choices[k].options.len() {
                    break;
                }
                self.cursor[k] = 0;
            }
        }
        Some(d)
    }
}

/// Catalogued identity / quasi-identity classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DirectoidClass {
    /// (4) and (5): the involution is antitone.
    Involutive45,
    /// (6), with its inner quantifier over z.
    Cond6,
    Qid8,
    Qid9,
    Id14,
    /// (14) and (8).
    SharplyParaorthomodularDirectoid,
    /// The induced poset is paraorthomodular.
    ParaDirectoidWeak,
    /// (4), (5), (14) and (8).
    ParaDirectoidSharp,
    OrthomodularDirectoid,
    OrthoDirectoid,
    /// (4), (5) and (9).
    LargestQuasivariety,
    /// (4), (5) and (8).
    CanonicalImage,
}

impl DirectoidClass {
    pub const ALL: [DirectoidClass; 12] = [
        DirectoidClass::Involutive45,
        DirectoidClass::Cond6,
        DirectoidClass::Qid8,
        DirectoidClass::Qid9,
        DirectoidClass::Id14,
        DirectoidClass::SharplyParaorthomodularDirectoid,
        DirectoidClass::ParaDirectoidWeak,
        DirectoidClass::ParaDirectoidSharp,
        DirectoidClass::OrthomodularDirectoid,
        DirectoidClass::OrthoDirectoid,
        DirectoidClass::LargestQuasivariety,
        DirectoidClass::CanonicalImage,
    ];

    pub fn name(self) -> &'static str {
        use DirectoidClass::*;
        match self {
            Involutive45 => "involutive45",
            Cond6 => "cond6",
            Qid8 => "qid8",
            Qid9 => "qid9",
            Id14 => "id14",
            SharplyParaorthomodularDirectoid => "sharply_paraorthomodular_directoid",
            ParaDirectoidWeak => "para_directoid_weak",
            ParaDirectoidSharp => "para_directoid_sharp",
            OrthomodularDirectoid => "orthomodular_directoid",
            OrthoDirectoid => "ortho_directoid",
            LargestQuasivariety => "largest_quasivariety",
            CanonicalImage => "canonical_image",
        }
    }
}

impl fmt::Display for DirectoidClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DirectoidClass {
    type Err = crate::poset::UnknownProperty;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        DirectoidClass::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| crate::poset::UnknownProperty(s.into()))
    }
}
