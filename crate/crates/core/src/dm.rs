//! Dedekind-MacNeille completions with the orthocomplement `X^⊥ = L(X')`.
//!
//! The completion's elements are the cone-closed sets `L(A)`, generated as
//! the intersection closure of the principal down-sets. They are numbered by
//! size and then by bit pattern, so `{0}` gets index 0 and `P` the last
//! index.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::poset::{BoundedInvolutivePoset, PosetProperty};
use crate::subset::{Element, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DmError {
    #[error("the sweep needs {needed} subset pairs, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("not a complete lattice")]
    NotACompleteLattice,
}

/// Pair budget for raw subset quantification; admits every pair at n = 8.
pub const RAW_PAIR_BUDGET: u128 = 1 << 16;
/// Pair budget for closed-set quantification.
pub const REDUCED_PAIR_BUDGET: u128 = 1 << 26;

/// How (WDC) and (FLP) quantify their set variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantification {
    /// Over all subsets of the universe.
    Raw,
    /// Over closed sets only.
    Reduced,
}

/// The pair of sets falsifying (WDC) (`first = B`, `second = C`) or (FLP)
/// (`first = X`, `second = Y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SetPair {
    pub first: Subset,
    pub second: Subset,
}

#[derive(Clone, Debug)]
pub struct DMCompletion {
    source: BoundedInvolutivePoset,
    sets: Vec<Subset>,
    index: BTreeMap<Subset, Element>,
    lattice: BoundedInvolutivePoset,
    embedding: Vec<Element>,
}

/// Builds the completion of `p`.
pub fn dm_complete(p: &BoundedInvolutivePoset) -> DMCompletion {
    let n = p.size();
    let mut frontier: Vec<Subset> = (0..n).map(|x| p.down(x)).collect();
    frontier.push(p.universe());
    let mut seen: alloc::collections::BTreeSet<Subset> = frontier.iter().copied().collect();
    // every closed set is an intersection of principal down-sets
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &s in &frontier {
            for x in 0..n {
                let t = s & p.down(x);
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut sets: Vec<Subset> = seen.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.bits()));
    let index: BTreeMap<Subset, Element> = sets.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let m = sets.len();
    let down: Vec<Subset> = sets
        .iter()
        .map(|&s| (0..m).filter(|&j| sets[j].is_subset(s)).collect())
        .collect();
    let inv: Vec<Element> = sets.iter().map(|&s| index[&perp(p, s)]).collect();
    let lattice = BoundedInvolutivePoset::from_parts_unchecked(down, inv, 0, m - 1);
    let embedding: Vec<Element> = (0..n).map(|x| index[&p.down(x)]).collect();
    let mut labels: Vec<String> = vec![String::new(); m];
    for (i, &s) in sets.iter().enumerate() {
        labels[i] = match embedding.iter().position(|&e| e == i) {
            Some(x) => p.label(x),
            None => {
                let maxima: Vec<String> = s
                    .iter()
                    .filter(|&x| (p.up(x) & s).is_singleton_of(x))
                    .map(|x| p.label(x))
                    .collect();
                format!("∨{{{}}}", maxima.join(","))
            }
        };
    }
    let lattice = lattice
        .with_labels(labels)
        .expect("one label per closed set");
    DMCompletion {
        source: p.clone(),
        sets,
        index,
        lattice,
        embedding,
    }
}

/// `X^⊥ = L(X')`
pub fn perp(p: &BoundedInvolutivePoset, x: Subset) -> Subset {
    p.lower_cone(p.image(x))
}

impl DMCompletion {
    pub fn source(&self) -> &BoundedInvolutivePoset {
        &self.source
    }

    /// The closed sets, indexed like the elements of [`Self::lattice`].
    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    /// The completion ordered by inclusion, with `⊥` as involution.
    pub fn lattice(&self) -> &BoundedInvolutivePoset {
        &self.lattice
    }

    /// `embedding()[x]` is the index of `L(x)`.
    pub fn embedding(&self) -> &[Element] {
        &self.embedding
    }

    pub fn size(&self) -> usize {
        self.sets.len()
    }

    pub fn index_of(&self, closed: Subset) -> Option<Element> {
        self.index.get(&closed).copied()
    }

    /// The embedded image of the source as a subset of the completion.
    pub fn image(&self) -> Subset {
        self.embedding.iter().copied().collect()
    }

    pub fn is_paraorthomodular(&self) -> bool {
        self.lattice.check(PosetProperty::Paraorthomodular).holds()
    }
}

fn check_budget(needed: u128, budget: u128) -> Result<(), DmError> {
    if needed > budget {
        Err(DmError::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// Number of pairs `B <= C` a raw (WDC) sweep visits.
fn raw_wdc_pairs(p: &BoundedInvolutivePoset) -> u128 {
    if p.size() > 20 {
        return u128::MAX;
    }
    p.universe()
        .subsets()
        .map(|c| 1u128 << p.lower_cone(c).len())
        .sum()
}

/// Decides (WDC): for `B <= C` with `L(C ∪ B') = {0}`, `L(C) <= U(B)`,
/// the latter read as `L(C) ⊆ LU(B)`. Returns the first failing pair.
///
/// The reduced mode takes `B` and `L(C)` closed, which loses nothing since
/// `L(B')` depends only on `U(B)`.
pub fn is_weakly_d_continuous(
    p: &BoundedInvolutivePoset,
    mode: Quantification,
    budget: u128,
) -> Result<Option<SetPair>, DmError> {
    let zero = p.bottom();
    match mode {
        Quantification::Raw => {
            check_budget(raw_wdc_pairs(p), budget)?;
            for c in p.universe().subsets() {
                let lc = p.lower_cone(c);
                for b in lc.subsets() {
                    if (lc & perp(p, b)).is_singleton_of(zero) && !lc.is_subset(p.lu(b)) {
                        return Ok(Some(SetPair {
                            first: b,
                            second: c,
                        }));
                    }
                }
            }
            Ok(None)
        }
        Quantification::Reduced => {
            let dm = dm_complete(p);
            let m = dm.size() as u128;
            check_budget(m * m, budget)?;
            for &y in dm.sets() {
                for &x in dm.sets() {
                    if x.is_subset(y) && (y & perp(p, x)).is_singleton_of(zero) && x != y {
                        return Ok(Some(SetPair {
                            first: x,
                            second: p.upper_cone(y),
                        }));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// Decides (FLP): `L(X) ⊊ L(Y)` implies `L(Y) ∩ LU(X') ≠ {0}`.
///
/// The reduced mode takes `X` and `Y` closed; this is exact because
/// `LU(X') = L(L(X)')`.
pub fn satisfies_flp(
    p: &BoundedInvolutivePoset,
    mode: Quantification,
    budget: u128,
) -> Result<Option<SetPair>, DmError> {
    let zero = p.bottom();
    match mode {
        Quantification::Raw => {
            let n = p.size();
            let needed = if n >= 64 { u128::MAX } else { 1u128 << (2 * n) };
            check_budget(needed, budget)?;
            let all: Vec<(Subset, Subset, Subset)> = p
                .universe()
                .subsets()
                .map(|x| (x, p.lower_cone(x), p.lu(p.image(x))))
                .collect();
            for &(x, lx, lux) in &all {
                for &(y, ly, _) in &all {
                    if lx.is_subset(ly) && lx != ly && (ly & lux).is_singleton_of(zero) {
                        return Ok(Some(SetPair {
                            first: x,
                            second: y,
                        }));
                    }
                }
            }
            Ok(None)
        }
        Quantification::Reduced => {
            let dm = dm_complete(p);
            let m = dm.size() as u128;
            check_budget(m * m, budget)?;
            for &x in dm.sets() {
                let px = perp(p, x);
                for &y in dm.sets() {
                    if x.is_subset(y) && x != y && (y & px).is_singleton_of(zero) {
                        return Ok(Some(SetPair {
                            first: x,
                            second: y,
                        }));
                    }
                }
            }
            Ok(None)
        }
    }
}

/// Whether `x` is involution-closed and doubly dense in the lattice `l`:
/// contains both bounds, is closed under `'`, and every element is both
/// the join of the members below it and the meet of the members above it.
pub fn is_doubly_dense(x: Subset, l: &BoundedInvolutivePoset) -> Result<bool, DmError> {
    if !l.is_lattice() {
        return Err(DmError::NotACompleteLattice);
    }
    if !x.contains(l.bottom()) || !x.contains(l.top()) || !l.image(x).is_subset(x) {
        return Ok(false);
    }
    Ok((0..l.size())
        .all(|a| l.join_of(l.down(a) & x) == Some(a) && l.meet_of(l.up(a) & x) == Some(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattices_complete_to_themselves() {
        for p in [fixtures::b6(), fixtures::diamond(), fixtures::fig5()] {
            let dm = dm_complete(&p);
            assert_eq!(dm.size(), p.size());
            let relabel: Vec<Element> = dm.embedding().to_vec();
            assert!(p.relabel(&relabel).same_structure(dm.lattice()));
        }
    }

    #[test]
    fn fig2_gains_the_join_of_its_atoms() {
        let p = fixtures::fig2();
        let dm = dm_complete(&p);
        assert_eq!(dm.size(), 7);
        let e = |s| p.element(s).unwrap();
        let ab = p.lower_cone(Subset::pair(e("a'"), e("b'")));
        assert_eq!(dm.lattice().label(dm.index_of(ab).unwrap()), "∨{a,b}");
        assert!(dm.is_paraorthomodular());
    }

    #[test]
    fn fig3_gains_elements() {
        let p = fixtures::fig3();
        let dm = dm_complete(&p);
        assert!(dm.size() > 10);
        assert!(dm.lattice().is_lattice());
        assert!(is_doubly_dense(dm.image(), dm.lattice()).unwrap());
    }

    #[test]
    fn completion_is_valid() {
        for (_, p) in fixtures::figures() {
            let dm = dm_complete(&p);
            let l = dm.lattice();
            BoundedInvolutivePoset::validate(l.to_spec()).unwrap();
            for &s in dm.sets() {
                assert_eq!(p.lu(s), s);
            }
        }
    }

    #[test]
    fn b6_fails_both() {
        let p = fixtures::b6();
        for mode in [Quantification::Raw, Quantification::Reduced] {
            let w = is_weakly_d_continuous(&p, mode, RAW_PAIR_BUDGET)
                .unwrap()
                .unwrap();
            assert!(w.first.is_subset(p.lower_cone(w.second)));
            assert!(satisfies_flp(&p, mode, RAW_PAIR_BUDGET).unwrap().is_some());
        }
        assert!(!dm_complete(&p).is_paraorthomodular());
    }

    #[test]
    fn boolean_and_fig2_pass() {
        for p in [fixtures::diamond(), fixtures::fig2()] {
            for mode in [Quantification::Raw, Quantification::Reduced] {
                assert_eq!(is_weakly_d_continuous(&p, mode, RAW_PAIR_BUDGET), Ok(None));
                assert_eq!(satisfies_flp(&p, mode, RAW_PAIR_BUDGET), Ok(None));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = fixtures::fig3();
        assert!(matches!(
            satisfies_flp(&p, Quantification::Raw, 100),
            Err(DmError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn doubly_dense_requires_a_lattice() {
        let p = fixtures::fig1();
        assert_eq!(
            is_doubly_dense(p.universe(), &p),
            Err(DmError::NotACompleteLattice)
        );
        let d = fixtures::diamond();
        assert_eq!(is_doubly_dense(d.universe(), &d), Ok(true));
        assert_eq!(is_doubly_dense(Subset::pair(0, 3), &d), Ok(false));
    }
}
