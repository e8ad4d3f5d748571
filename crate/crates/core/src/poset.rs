//! Finite bounded posets with an antitone involution.
//!
//! The order is stored closed (as principal down- and up-sets), so cones are
//! intersections of bit vectors and every property check is an exhaustive
//! quantifier sweep over element tuples.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use thiserror::Error;

use crate::subset::{Element, Subset, MAX_SIZE};
use crate::verdict::{forall, Verdict, Witness};

/// The order relation as supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Cover pairs `(lower, upper)`; the reflexive-transitive closure is taken.
    Hasse(Vec<(Element, Element)>),
    /// Full relation matrix, `le[x][y]` meaning `x <= y`. Must already be a
    /// partial order.
    Le(Vec<Vec<bool>>),
}

/// Unvalidated input for [`BoundedInvolutivePoset::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetSpec {
    pub size: usize,
    pub relation: Relation,
    pub inv: Vec<Element>,
    pub bottom: Element,
    pub top: Element,
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderAxiom {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderAxiom::Reflexivity => "reflexivity",
            OrderAxiom::Antisymmetry => "antisymmetry",
            OrderAxiom::Transitivity => "transitivity",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("size {0} is outside 1..={MAX_SIZE}")]
    Size(usize),
    #[error("{what} refers to index {index}, but the size is {size}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },
    #[error("the relation matrix is not {0}x{0}")]
    Shape(usize),
    #[error("expected {expected} labels, got {got}")]
    Labels { expected: usize, got: usize },
    #[error("not a partial order: {axiom} fails at ({x}, {y})")]
    NotAPartialOrder {
        axiom: OrderAxiom,
        x: Element,
        y: Element,
    },
    #[error("not bounded: {bound} {at} is not comparable with {x} as required")]
    NotBounded {
        bound: &'static str,
        at: Element,
        x: Element,
    },
    #[error("not an involution: inv({x}) = {image}, but inv({image}) = {back}")]
    NotInvolution {
        x: Element,
        image: Element,
        back: Element,
    },
    #[error("the involution does not swap bottom {bottom} and top {top}")]
    BoundsNotSwapped { bottom: Element, top: Element },
    #[error("not antitone: {x} <= {y} but not inv({y}) <= inv({x})")]
    NotAntitone { x: Element, y: Element },
}

/// Which cone [`BoundedInvolutivePoset::cone`] computes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
}

/// A validated finite bounded poset `(P, <=, ', 0, 1)` with an antitone
/// involution.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundedInvolutivePoset {
    n: usize,
    /// `down[x]` = L(x)
    down: Vec<Subset>,
    /// `up[x]` = U(x)
    up: Vec<Subset>,
    inv: Vec<Element>,
    bottom: Element,
    top: Element,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for BoundedInvolutivePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundedInvolutivePoset")
            .field("n", &self.n)
            .field("hasse", &self.hasse())
            .field("inv", &self.inv)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .finish()
    }
}

impl BoundedInvolutivePoset {
    /// Checks every structural invariant and builds the closed order.
    pub fn validate(spec: PosetSpec) -> Result<Self, PosetError> {
        let n = spec.size;
        if n == 0 || n > MAX_SIZE {
            return Err(PosetError::Size(n));
        }
        let check_index = |what: &'static str, index: usize| {
            if index < n {
                Ok(())
            } else {
                Err(PosetError::IndexOutOfRange {
                    what,
                    index,
                    size: n,
                })
            }
        };
        check_index("bottom", spec.bottom)?;
        check_index("top", spec.top)?;
        if spec.inv.len() != n {
            return Err(PosetError::IndexOutOfRange {
                what: "inv length",
                index: spec.inv.len(),
                size: n,
            });
        }
        for &y in &spec.inv {
            check_index("inv", y)?;
        }
        if let Some(labels) = &spec.labels {
            if labels.len() != n {
                return Err(PosetError::Labels {
                    expected: n,
                    got: labels.len(),
                });
            }
        }

        let down = match &spec.relation {
            Relation::Hasse(edges) => {
                let mut down: Vec<Subset> = (0..n).map(Subset::singleton).collect();
                for &(lo, hi) in edges {
                    check_index("hasse edge", lo)?;
                    check_index("hasse edge", hi)?;
                    down[hi].insert(lo);
                }
                transitive_closure(&mut down);
                down
            }
            Relation::Le(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(PosetError::Shape(n));
                }
                let mut down = vec![Subset::EMPTY; n];
                for (x, row) in rows.iter().enumerate() {
                    for (y, &le) in row.iter().enumerate() {
                        if le {
                            down[y].insert(x);
                        }
                    }
                }
                for x in 0..n {
                    if !down[x].contains(x) {
                        return Err(PosetError::NotAPartialOrder {
                            axiom: OrderAxiom::Reflexivity,
                            x,
                            y: x,
                        });
                    }
                }
                // x <= y <= z requires x <= z
                for z in 0..n {
                    for y in down[z] {
                        let missing = down[y] & !down[z];
                        if let Some(x) = missing.first() {
                            return Err(PosetError::NotAPartialOrder {
                                axiom: OrderAxiom::Transitivity,
                                x,
                                y: z,
                            });
                        }
                    }
                }
                down
            }
        };

        for y in 0..n {
            for x in down[y].without(y) {
                if down[x].contains(y) {
                    return Err(PosetError::NotAPartialOrder {
                        axiom: OrderAxiom::Antisymmetry,
                        x,
                        y,
                    });
                }
            }
        }

        let up = transpose(&down);
        for x in 0..n {
            if !down[x].contains(spec.bottom) {
                return Err(PosetError::NotBounded {
                    bound: "bottom",
                    at: spec.bottom,
                    x,
                });
            }
            if !up[x].contains(spec.top) {
                return Err(PosetError::NotBounded {
                    bound: "top",
                    at: spec.top,
                    x,
                });
            }
        }

        let inv = spec.inv;
        for x in 0..n {
            let back = inv[inv[x]];
            if back != x {
                return Err(PosetError::NotInvolution {
                    x,
                    image: inv[x],
                    back,
                });
            }
        }
        if inv[spec.bottom] != spec.top {
            return Err(PosetError::BoundsNotSwapped {
                bottom: spec.bottom,
                top: spec.top,
            });
        }
        for y in 0..n {
            for x in down[y] {
                if !down[inv[x]].contains(inv[y]) {
                    return Err(PosetError::NotAntitone { x, y });
                }
            }
        }

        Ok(BoundedInvolutivePoset {
            n,
            down,
            up,
            inv,
            bottom: spec.bottom,
            top: spec.top,
            labels: spec.labels,
        })
    }

    /// Builds a structure from closed down-sets that are already known to
    /// satisfy every invariant.
    pub(crate) fn from_parts_unchecked(
        down: Vec<Subset>,
        inv: Vec<Element>,
        bottom: Element,
        top: Element,
    ) -> Self {
        let up = transpose(&down);
        BoundedInvolutivePoset {
            n: down.len(),
            down,
            up,
            inv,
            bottom,
            top,
            labels: None,
        }
    }

    /// Convenience constructor from cover pairs.
    pub fn from_hasse(
        size: usize,
        hasse: &[(Element, Element)],
        inv: &[Element],
        bottom: Element,
        top: Element,
    ) -> Result<Self, PosetError> {
        Self::validate(PosetSpec {
            size,
            relation: Relation::Hasse(hasse.to_vec()),
            inv: inv.to_vec(),
            bottom,
            top,
            labels: None,
        })
    }

    /// The spec that reproduces this structure, with the order given as
    /// cover pairs.
    pub fn to_spec(&self) -> PosetSpec {
        PosetSpec {
            size: self.n,
            relation: Relation::Hasse(self.hasse()),
            inv: self.inv.clone(),
            bottom: self.bottom,
            top: self.top,
            labels: self.labels.clone(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, PosetError> {
        if labels.len() != self.n {
            return Err(PosetError::Labels {
                expected: self.n,
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn bottom(&self) -> Element {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> Element {
        self.top
    }

    #[inline]
    pub fn inv(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn involution(&self) -> &[Element] {
        &self.inv
    }

    #[inline]
    pub fn le(&self, x: Element, y: Element) -> bool {
        self.down[y].contains(x)
    }

    #[inline]
    pub fn lt(&self, x: Element, y: Element) -> bool {
        x != y && self.le(x, y)
    }

    #[inline]
    pub fn comparable(&self, x: Element, y: Element) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    /// L(x)
    #[inline]
    pub fn down(&self, x: Element) -> Subset {
        self.down[x]
    }

    /// U(x)
    #[inline]
    pub fn up(&self, x: Element) -> Subset {
        self.up[x]
    }

    #[inline]
    pub fn universe(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label, or its index.
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    /// Index of the element carrying `label`.
    pub fn element(&self, label: &str) -> Option<Element> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// `le` as a full boolean matrix.
    pub fn le_matrix(&self) -> Vec<Vec<bool>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| self.le(x, y)).collect())
            .collect()
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between, in
    /// lexicographic order.
    pub fn hasse(&self) -> Vec<(Element, Element)> {
        let mut edges = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].without(x) {
                let between = self.up[x] & self.down[y];
                if between.len() == 2 {
                    edges.push((x, y));
                }
            }
        }
        edges
    }

    /// L(A), the common lower bounds of `a`. L(∅) is the whole universe.
    pub fn lower_cone(&self, a: Subset) -> Subset {
        a.iter().fold(self.universe(), |acc, x| acc & self.down[x])
    }

    /// U(A), the common upper bounds of `a`.
    pub fn upper_cone(&self, a: Subset) -> Subset {
        a.iter().fold(self.universe(), |acc, x| acc & self.up[x])
    }

    pub fn cone(&self, a: Subset, dir: Direction) -> Subset {
        match dir {
            Direction::Lower => self.lower_cone(a),
            Direction::Upper => self.upper_cone(a),
        }
    }

    /// L(x, y)
    #[inline]
    pub fn lower2(&self, x: Element, y: Element) -> Subset {
        self.down[x] & self.down[y]
    }

    /// U(x, y)
    #[inline]
    pub fn upper2(&self, x: Element, y: Element) -> Subset {
        self.up[x] & self.up[y]
    }

    /// LU(A)
    pub fn lu(&self, a: Subset) -> Subset {
        self.lower_cone(self.upper_cone(a))
    }

    /// UL(A)
    pub fn ul(&self, a: Subset) -> Subset {
        self.upper_cone(self.lower_cone(a))
    }

    /// A' = { x' : x in A }
    pub fn image(&self, a: Subset) -> Subset {
        a.iter().map(|x| self.inv[x]).collect()
    }

    /// Greatest element of `s`, if `s` has one.
    pub fn max_of(&self, s: Subset) -> Option<Element> {
        s.iter().find(|&m| s.is_subset(self.down[m]))
    }

    /// Least element of `s`, if `s` has one.
    pub fn min_of(&self, s: Subset) -> Option<Element> {
        s.iter().find(|&m| s.is_subset(self.up[m]))
    }

    /// Infimum of a set: the maximum of its lower cone.
    pub fn meet_of(&self, s: Subset) -> Option<Element> {
        self.max_of(self.lower_cone(s))
    }

    /// Supremum of a set: the minimum of its upper cone.
    pub fn join_of(&self, s: Subset) -> Option<Element> {
        self.min_of(self.upper_cone(s))
    }

    /// `a ∧ b` when L(a, b) has a greatest element.
    pub fn meet(&self, a: Element, b: Element) -> Option<Element> {
        self.max_of(self.lower2(a, b))
    }

    /// `a ∨ b` when U(a, b) has a least element.
    pub fn join(&self, a: Element, b: Element) -> Option<Element> {
        self.min_of(self.upper2(a, b))
    }

    /// Every pair has a meet and a join.
    pub fn is_lattice(&self) -> bool {
        (0..self.n).all(|a| {
            (a + 1..self.n).all(|b| self.meet(a, b).is_some() && self.join(a, b).is_some())
        })
    }

    /// True when `x ≤ y` and `L(x', y) = {0}`, i.e. `x` is below `y` but
    /// orthogonal to it in the sense of (P*).
    #[inline]
    fn pstar_antecedent(&self, x: Element, y: Element) -> bool {
        self.le(x, y) && self.lower2(self.inv[x], y).is_singleton_of(self.bottom)
    }

    /// Decides one of the catalogued properties. On failure the witness is
    /// the lexicographically first falsifying assignment.
    pub fn check(&self, prop: PosetProperty) -> Verdict {
        match prop {
            PosetProperty::Distributive => self.check_distributive(),
            PosetProperty::Modular => self.check_modular(),
            PosetProperty::Paraorthomodular => self.check_paraorthomodular(),
            PosetProperty::Orthoposet => self.check_orthoposet(),
            PosetProperty::Orthomodular => self.check_orthomodular(),
            PosetProperty::PseudoOrthomodular => self.check_pseudo_orthomodular(),
            PosetProperty::SharplyParaorthomodular => self.check_sharply_paraorthomodular(),
            PosetProperty::Cond12 => self.check_cond12(),
            PosetProperty::Cond13 => self.check_cond13(),
        }
    }

    /// L(U(x,y),z) = LU(L(x,z),L(y,z))
    fn check_distributive(&self) -> Verdict {
        forall(self.n, ["x", "y", "z"], |[x, y, z]| {
            let lhs = self.lower_cone(self.upper2(x, y).with(z));
            let rhs = self.lu(self.lower2(x, z) | self.lower2(y, z));
            lhs != rhs
        })
    }

    /// x <= z implies L(U(x,y),z) = LU(x,L(y,z))
    fn check_modular(&self) -> Verdict {
        forall(self.n, ["x", "y", "z"], |[x, y, z]| {
            if !self.le(x, z) {
                return false;
            }
            let lhs = self.lower_cone(self.upper2(x, y).with(z));
            let rhs = self.lu(self.lower2(y, z).with(x));
            lhs != rhs
        })
    }

    /// (P*): x <= y and L(x',y) = {0} imply x = y
    fn check_paraorthomodular(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            x != y && self.pstar_antecedent(x, y)
        })
    }

    /// The lattice form (P) of paraorthomodularity, `x <= y` and
    /// `x' ∧ y = 0` imply `x = y`. Returns `None` unless the poset is a
    /// lattice, where (P) is defined for every pair.
    pub fn check_lattice_paraorthomodular(&self) -> Option<Verdict> {
        if !self.is_lattice() {
            return None;
        }
        Some(forall(self.n, ["x", "y"], |[x, y]| {
            x != y && self.le(x, y) && self.meet(self.inv[x], y) == Some(self.bottom)
        }))
    }

    /// ' is a complementation, read cone-wise: L(x,x') = {0}, U(x,x') = {1}
    fn check_orthoposet(&self) -> Verdict {
        forall(self.n, ["x"], |[x]| {
            let c = self.inv[x];
            !self.lower2(x, c).is_singleton_of(self.bottom)
                || !self.upper2(x, c).is_singleton_of(self.top)
        })
    }

    fn check_orthomodular(&self) -> Verdict {
        self.check_orthoposet()
            .tagged("(1)")
            .and_then(|| self.check_cond12().tagged("(2)"))
            .and_then(|| self.check_orthomodular_law())
    }

    /// x <= y implies y = x ∨ (y ∧ x'), where (1) and (2) guarantee both
    /// expressions exist.
    fn check_orthomodular_law(&self) -> Verdict {
        for x in 0..self.n {
            for y in self.up[x] {
                let w = Witness::new([("x", x), ("y", y)]).tagged("(3)");
                let Some(m) = self.meet(y, self.inv[x]) else {
                    return Verdict::Inconsistent {
                        reason: "y ∧ x' does not exist although (2) holds",
                        witness: w,
                    };
                };
                let Some(j) = self.join(x, m) else {
                    return Verdict::Inconsistent {
                        reason: "x ∨ (y ∧ x') does not exist although (2) holds",
                        witness: w,
                    };
                };
                if j != y {
                    return Verdict::Fails(w);
                }
            }
        }
        Verdict::Holds
    }

    /// complementation and L(U(L(x,y),y'),y) = L(x,y)
    fn check_pseudo_orthomodular(&self) -> Verdict {
        self.check_orthoposet().tagged("complement").and_then(|| {
            forall(self.n, ["x", "y"], |[x, y]| {
                let lxy = self.lower2(x, y);
                let lhs = self.lower_cone(self.upper_cone(lxy.with(self.inv[y])).with(y));
                lhs != lxy
            })
        })
    }

    /// (10) and (11): x <= y and x' ∧ y = 0 imply x = y
    fn check_sharply_paraorthomodular(&self) -> Verdict {
        self.check_cond12().tagged("(10)").and_then(|| {
            forall(self.n, ["x", "y"], |[x, y]| {
                x != y && self.le(x, y) && self.meet(self.inv[x], y) == Some(self.bottom)
            })
            .tagged("(11)")
        })
    }

    /// (12): x <= y' implies x ∨ y exists
    fn check_cond12(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            self.le(x, self.inv[y]) && self.join(x, y).is_none()
        })
    }

    /// (13): x <= y implies x' ∧ y exists
    fn check_cond13(&self) -> Verdict {
        forall(self.n, ["x", "y"], |[x, y]| {
            self.le(x, y) && self.meet(self.inv[x], y).is_none()
        })
    }

    /// Surrounds the structure with a fresh bottom and top. The old bounds
    /// become ordinary elements; the involution is extended by swapping the
    /// new bounds.
    pub fn add_bounds(&self) -> BoundedInvolutivePoset {
        let n = self.n + 2;
        let (bot, top) = (0, n - 1);
        let mut down = vec![Subset::EMPTY; n];
        down[bot] = Subset::singleton(bot);
        for x in 0..self.n {
            down[x + 1] = Subset::from_bits(self.down[x].bits() << 1).with(bot);
        }
        down[top] = Subset::full(n);
        let mut inv = vec![0; n];
        inv[bot] = top;
        inv[top] = bot;
        for x in 0..self.n {
            inv[x + 1] = self.inv[x] + 1;
        }
        BoundedInvolutivePoset::from_parts_unchecked(down, inv, bot, top)
    }

    /// Renames element `x` to `perm[x]`. `perm` must be a permutation.
    pub fn relabel(&self, perm: &[Element]) -> BoundedInvolutivePoset {
        let n = self.n;
        let mut down = vec![Subset::EMPTY; n];
        let mut inv = vec![0; n];
        for x in 0..n {
            down[perm[x]] = self.down[x].iter().map(|y| perm[y]).collect();
            inv[perm[x]] = perm[self.inv[x]];
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for x in 0..n {
                out[perm[x]] = l[x].clone();
            }
            out
        });
        let mut p = BoundedInvolutivePoset::from_parts_unchecked(
            down,
            inv,
            perm[self.bottom],
            perm[self.top],
        );
        p.labels = labels;
        p
    }

    /// The substructure on `a` with the induced order, renumbered in
    /// increasing index order. `None` unless `a` contains both bounds and is
    /// closed under the involution. The second component maps new indices to
    /// old ones.
    pub fn restrict(&self, a: Subset) -> Option<(BoundedInvolutivePoset, Vec<Element>)> {
        if !a.contains(self.bottom) || !a.contains(self.top) || !self.image(a).is_subset(a) {
            return None;
        }
        let old: Vec<Element> = a.iter().collect();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &x) in old.iter().enumerate() {
            new_of[x] = i;
        }
        let down = old
            .iter()
            .map(|&x| (self.down[x] & a).iter().map(|y| new_of[y]).collect())
            .collect();
        let inv = old.iter().map(|&x| new_of[self.inv[x]]).collect();
        let mut p = BoundedInvolutivePoset::from_parts_unchecked(
            down,
            inv,
            new_of[self.bottom],
            new_of[self.top],
        );
        p.labels = self
            .labels
            .as_ref()
            .map(|l| old.iter().map(|&x| l[x].clone()).collect());
        Some((p, old))
    }

    /// Same structure ignoring labels.
    pub fn same_structure(&self, other: &BoundedInvolutivePoset) -> bool {
        self.n == other.n
            && self.down == other.down
            && self.inv == other.inv
            && self.bottom == other.bottom
            && self.top == other.top
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }
}

fn transpose(down: &[Subset]) -> Vec<Subset> {
    let n = down.len();
    let mut up = vec![Subset::EMPTY; n];
    for (y, d) in down.iter().enumerate() {
        for x in d.iter() {
            up[x].insert(y);
        }
    }
    up
}

/// Closes `down` (reflexive sets of direct predecessors) under transitivity.
fn transitive_closure(down: &mut [Subset]) {
    let n = down.len();
    // Warshall over the bit rows: if k is below y, everything below k is too.
    for k in 0..n {
        let dk = down[k];
        for row in down.iter_mut() {
            if row.contains(k) {
                *row |= dk;
            }
        }
    }
}

/// The poset-level conditions [`BoundedInvolutivePoset::check`] decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PosetProperty {
    Distributive,
    Modular,
    Paraorthomodular,
    Orthoposet,
    Orthomodular,
    PseudoOrthomodular,
    SharplyParaorthomodular,
    Cond12,
    Cond13,
}

impl PosetProperty {
    pub const ALL: [PosetProperty; 9] = [
        PosetProperty::Distributive,
        PosetProperty::Modular,
        PosetProperty::Paraorthomodular,
        PosetProperty::Orthoposet,
        PosetProperty::Orthomodular,
        PosetProperty::PseudoOrthomodular,
        PosetProperty::SharplyParaorthomodular,
        PosetProperty::Cond12,
        PosetProperty::Cond13,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PosetProperty::Distributive => "distributive",
            PosetProperty::Modular => "modular",
            PosetProperty::Paraorthomodular => "paraorthomodular",
            PosetProperty::Orthoposet => "orthoposet",
            PosetProperty::Orthomodular => "orthomodular",
            PosetProperty::PseudoOrthomodular => "pseudo_orthomodular",
            PosetProperty::SharplyParaorthomodular => "sharply_paraorthomodular",
            PosetProperty::Cond12 => "cond12",
            PosetProperty::Cond13 => "cond13",
        }
    }
}

impl fmt::Display for PosetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for PosetProperty {
    type Err = UnknownProperty;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.replace('-', "_");
        PosetProperty::ALL
            .into_iter()
            .find(|p| p.name() == norm)
            .ok_or_else(|| UnknownProperty(s.into()))
    }
}
