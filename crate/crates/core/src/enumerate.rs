//! Exhaustive generation up to ortho-isomorphism.
//!
//! Bounded involutive posets on `n >= 2` elements are a bottom, a top and
//! an interior poset on `n - 2` elements carrying an involutive
//! anti-automorphism. Interior posets are grown one maximal element at a
//! time over every order ideal and deduplicated by canonical form; their
//! involutions are found by backtracking and deduplicated by the canonical
//! form of the whole pointed structure.
//!
//! Canonical forms come from ordered partition refinement followed by an
//! individualize-and-refine search, taking the least leaf encoding. The
//! initial colouring starts with the height of each element, so canonical
//! labelings are linear extensions with the bottom at 0 and the top last.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::directoid::{
    assigned_directoids, fan_out, AssignmentPolicy, Assignments, Chooser, InvolutiveDirectoid,
};
use crate::effect::EffectAlgebra;
use crate::poset::{BoundedInvolutivePoset, PosetProperty};
use crate::subset::{Element, Subset};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{what} {requested} exceeds the cap of {cap}")]
pub struct CapExceeded {
    pub what: &'static str,
    pub requested: u128,
    pub cap: u128,
}

/// Limits on enumeration sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest poset size.
    pub posets: usize,
    /// Largest number of assigned directoids per poset.
    pub fan_out: u128,
    /// Largest effect algebra size.
    pub effect_algebras: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            posets: 10,
            fan_out: 1_000_000,
            effect_algebras: 8,
        }
    }
}

impl Caps {
    /// The same cap for every size limit.
    pub fn uniform(n: usize) -> Caps {
        Caps {
            posets: n,
            effect_algebras: n,
            ..Caps::default()
        }
    }

    fn check(&self, what: &'static str, requested: usize, cap: usize) -> Result<(), CapExceeded> {
        if requested > cap {
            Err(CapExceeded {
                what,
                requested: requested as u128,
                cap: cap as u128,
            })
        } else {
            Ok(())
        }
    }
}

/// Encoding of a structure in its canonical labeling. Equal forms mean
/// ortho-isomorphic structures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u128>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u128] {
        &self.0
    }
}

// ---------------------------------------------------------------- refinement

struct Labeler<'a> {
    n: usize,
    down: &'a [Subset],
    up: Vec<Subset>,
    inv: &'a [Element],
    best: Option<(Vec<u128>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

fn transpose(down: &[Subset]) -> Vec<Subset> {
    let mut up = vec![Subset::EMPTY; down.len()];
    for (y, d) in down.iter().enumerate() {
        for x in d.iter() {
            up[x].insert(y);
        }
    }
    up
}

/// Replaces arbitrary comparable keys by their dense ranks.
fn rank<K: Ord + Clone>(keys: &[K]) -> (Vec<u32>, usize) {
    let distinct: BTreeSet<K> = keys.iter().cloned().collect();
    let index: BTreeMap<K, u32> = distinct
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, i as u32))
        .collect();
    (keys.iter().map(|k| index[k]).collect(), index.len())
}

impl Labeler<'_> {
    fn initial(&self) -> Vec<u32> {
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.down[x].len());
        let mut height = vec![0u32; n];
        for &x in &order {
            height[x] = self.down[x]
                .without(x)
                .iter()
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        let keys: Vec<(u32, usize, usize, bool)> = (0..n)
            .map(|x| {
                (
                    height[x],
                    self.down[x].len(),
                    self.up[x].len(),
                    self.inv[x] == x,
                )
            })
            .collect();
        rank(&keys).0
    }

    fn refine(&self, colors: &mut Vec<u32>) {
        let mut cells = colors.iter().collect::<BTreeSet<_>>().len();
        loop {
            let keys: Vec<(u32, Vec<u32>, Vec<u32>, u32)> = (0..self.n)
                .map(|x| {
                    let mut d: Vec<u32> =
                        self.down[x].without(x).iter().map(|y| colors[y]).collect();
                    let mut u: Vec<u32> = self.up[x].without(x).iter().map(|y| colors[y]).collect();
                    d.sort_unstable();
                    u.sort_unstable();
                    (colors[x], d, u, colors[self.inv[x]])
                })
                .collect();
            let (next, k) = rank(&keys);
            *colors = next;
            if k == cells {
                return;
            }
            cells = k;
        }
    }

    fn encode(&self, perm: &[usize]) -> Vec<u128> {
        let n = self.n;
        let mut down = vec![0u128; n];
        let mut inv = vec![0u128; n];
        for x in 0..n {
            down[perm[x]] = self.down[x].iter().map(|y| 1u128 << perm[y]).sum();
            inv[perm[x]] = perm[self.inv[x]] as u128;
        }
        let mut code = Vec::with_capacity(2 * n + 1);
        code.push(n as u128);
        code.extend(down);
        code.extend(inv);
        code
    }

    fn search(&mut self, mut colors: Vec<u32>, path: &mut Vec<usize>) {
        self.refine(&mut colors);
        let n = self.n;
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(cell) = (0..n).find(|&c| counts[c] > 1) else {
            let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
            let code = self.encode(&perm);
            match &self.best {
                Some((best, best_perm)) if *best == code => {
                    // best_perm^-1 ∘ perm is an automorphism
                    let mut inv_best = vec![0; n];
                    for (x, &p) in best_perm.iter().enumerate() {
                        inv_best[p] = x;
                    }
                    self.autos.push(perm.iter().map(|&p| inv_best[p]).collect());
                }
                Some((best, _)) if *best <= code => {}
                _ => self.best = Some((code, perm)),
            }
            return;
        };
        let members: Vec<usize> = (0..n).filter(|&x| colors[x] as usize == cell).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &x in &members {
            if self.same_orbit(path, &explored, x) {
                continue;
            }
            explored.push(x);
            let child: Vec<u32> = (0..n).map(|y| 2 * colors[y] + u32::from(y != x)).collect();
            let (child, _) = rank(&child);
            path.push(x);
            self.search(child, path);
            path.pop();
        }
    }

    /// Whether `x` is in the orbit of an explored sibling under the known
    /// automorphisms fixing `path` pointwise.
    fn same_orbit(&self, path: &[usize], explored: &[usize], x: usize) -> bool {
        if explored.is_empty() || self.autos.is_empty() {
            return false;
        }
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &self.autos {
            if path.iter().all(|&v| g[v] == v) {
                for y in 0..n {
                    let (a, b) = (find(&mut parent, y), find(&mut parent, g[y]));
                    parent[a] = b;
                }
            }
        }
        let rx = find(&mut parent, x);
        explored.iter().any(|&e| find(&mut parent, e) == rx)
    }
}

/// Canonical labeling of the structure given by closed down-sets and an
/// involution: `perm[x]` is the new index of `x`.
fn label(down: &[Subset], inv: &[Element]) -> (Vec<usize>, Vec<u128>) {
    let mut l = Labeler {
        n: down.len(),
        down,
        up: transpose(down),
        inv,
        best: None,
        autos: Vec::new(),
    };
    if l.n == 0 {
        return (Vec::new(), vec![0]);
    }
    let colors = l.initial();
    l.search(colors, &mut Vec::new());
    let (code, perm) = l.best.expect("search reaches a leaf");
    (perm, code)
}

fn down_sets(p: &BoundedInvolutivePoset) -> Vec<Subset> {
    (0..p.size()).map(|x| p.down(x)).collect()
}

/// Canonical labeling and form of `p`, respecting bounds and involution.
pub fn canonical_labeling(p: &BoundedInvolutivePoset) -> (Vec<Element>, CanonicalForm) {
    let (perm, code) = label(&down_sets(p), p.involution());
    (perm, CanonicalForm(code))
}

pub fn canonical_form(p: &BoundedInvolutivePoset) -> CanonicalForm {
    canonical_labeling(p).1
}

/// `p` relabeled canonically.
pub fn canonicalize(p: &BoundedInvolutivePoset) -> BoundedInvolutivePoset {
    p.relabel(&canonical_labeling(p).0)
}

pub fn is_ortho_isomorphic(a: &BoundedInvolutivePoset, b: &BoundedInvolutivePoset) -> bool {
    a.size() == b.size() && canonical_form(a) == canonical_form(b)
}

/// Every ortho-automorphism of `p`, identity first.
pub fn automorphisms(p: &BoundedInvolutivePoset) -> Vec<Vec<Element>> {
    fn go(
        p: &BoundedInvolutivePoset,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = p.size();
        let Some(x) = (0..n).find(|&x| map[x] == usize::MAX) else {
            out.push(map.clone());
            return;
        };
        let ix = p.inv(x);
        for y in 0..n {
            let iy = p.inv(y);
            if used[y]
                || p.down(x).len() != p.down(y).len()
                || p.up(x).len() != p.up(y).len()
                || (ix == x) != (iy == y)
                || (ix != x && (used[iy] || map[ix] != usize::MAX))
            {
                continue;
            }
            let ok = |m: &[usize], a: usize, b: usize| {
                (0..n).all(|z| {
                    m[z] == usize::MAX
                        || (p.le(a, z) == p.le(b, m[z]) && p.le(z, a) == p.le(m[z], b))
                })
            };
            if !ok(map, x, y) {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if ix != x {
                if !ok(map, ix, iy) {
                    map[x] = usize::MAX;
                    used[y] = false;
                    continue;
                }
                map[ix] = iy;
                used[iy] = true;
            }
            go(p, map, used, out);
            map[x] = usize::MAX;
            used[y] = false;
            if ix != x {
                map[ix] = usize::MAX;
                used[iy] = false;
            }
        }
    }
    let n = p.size();
    let mut out = Vec::new();
    go(p, &mut vec![usize::MAX; n], &mut vec![false; n], &mut out);
    out
}

// ---------------------------------------------------------------- posets

/// A poset without bounds, as closed down-sets, in canonical labeling.
pub type Interior = Vec<Subset>;

/// Caches interior posets level by level.
#[derive(Clone, Debug, Default)]
pub struct PosetEnumerator {
    levels: Vec<Vec<Interior>>,
}

impl PosetEnumerator {
    pub fn new() -> Self {
        PosetEnumerator {
            levels: vec![vec![Vec::new()]],
        }
    }

    /// All posets on `k` elements up to isomorphism, in canonical labeling
    /// and sorted by canonical code.
    pub fn interiors(&mut self, k: usize) -> &[Interior] {
        while self.levels.len() <= k {
            let prev = self.levels.last().expect("level 0 exists");
            let next = grow(prev);
            self.levels.push(next);
        }
        &self.levels[k]
    }

    /// Every bounded involutive poset on `n` elements up to
    /// ortho-isomorphism, in canonical labeling.
    pub fn structures(&mut self, n: usize) -> Vec<BoundedInvolutivePoset> {
        if n == 0 {
            return Vec::new();
        }
        if n == 1 {
            return vec![BoundedInvolutivePoset::from_parts_unchecked(
                vec![Subset::singleton(0)],
                vec![0],
                0,
                0,
            )];
        }
        self.interiors(n - 2)
            .iter()
            .flat_map(|q| structures_over(q))
            .collect()
    }
}

fn grow(prev: &[Interior]) -> Vec<Interior> {
    let mut found: BTreeMap<Vec<u128>, Interior> = BTreeMap::new();
    for q in prev {
        let k = q.len();
        let identity: Vec<usize> = (0..=k).collect();
        for ideal in Subset::full(k).subsets() {
            if !ideal.iter().all(|x| q[x].is_subset(ideal)) {
                continue;
            }
            let mut down = q.clone();
            down.push(ideal.with(k));
            let (perm, code) = label(&down, &identity);
            found
                .entry(code)
                .or_insert_with(|| relabel_down(&down, &perm));
        }
    }
    found.into_values().collect()
}

fn relabel_down(down: &[Subset], perm: &[usize]) -> Vec<Subset> {
    let mut out = vec![Subset::EMPTY; down.len()];
    for (x, d) in down.iter().enumerate() {
        out[perm[x]] = d.iter().map(|y| perm[y]).collect();
    }
    out
}

/// Involutive anti-automorphisms of an interior poset, in backtracking
/// order.
pub fn involutions(q: &[Subset]) -> Vec<Vec<usize>> {
    let k = q.len();
    let up = transpose(q);
    let mut height = vec![0usize; k];
    let mut depth = vec![0usize; k];
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&x| q[x].len());
    for &x in &order {
        height[x] = q[x]
            .without(x)
            .iter()
            .map(|y| height[y] + 1)
            .max()
            .unwrap_or(0);
    }
    for &x in order.iter().rev() {
        depth[x] = up[x]
            .without(x)
            .iter()
            .map(|y| depth[y] + 1)
            .max()
            .unwrap_or(0);
    }
    let le = |a: usize, b: usize| q[b].contains(a);
    let mut out = Vec::new();
    let mut phi = vec![usize::MAX; k];
    fn go(
        k: usize,
        phi: &mut Vec<usize>,
        fits: &dyn Fn(&[usize], usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let Some(x) = (0..k).find(|&x| phi[x] == usize::MAX) else {
            out.push(phi.clone());
            return;
        };
        for y in x..k {
            if phi[y] != usize::MAX || !fits(phi, x, y) {
                continue;
            }
            phi[x] = y;
            phi[y] = x;
            go(k, phi, fits, out);
            phi[x] = usize::MAX;
            phi[y] = usize::MAX;
        }
    }
    let fits = |phi: &[usize], x: usize, y: usize| -> bool {
        if height[x] != depth[y] || height[y] != depth[x] {
            return false;
        }
        if q[x].len() != up[y].len() || q[y].len() != up[x].len() {
            return false;
        }
        // x <-> y must reverse order against every assigned pair and each other
        let check = |a: usize, pa: usize, b: usize, pb: usize| le(a, b) == le(pb, pa);
        if !check(x, y, y, x) || !check(y, x, x, y) {
            return false;
        }
        (0..k).all(|z| {
            let pz = phi[z];
            pz == usize::MAX
                || (check(x, y, z, pz)
                    && check(z, pz, x, y)
                    && check(y, x, z, pz)
                    && check(z, pz, y, x))
        })
    };
    go(k, &mut phi, &fits, &mut out);
    out
}

/// Bounded involutive posets whose interior is `q`, one per
/// ortho-isomorphism class, in canonical labeling, sorted by canonical
/// form.
pub fn structures_over(q: &[Subset]) -> Vec<BoundedInvolutivePoset> {
    let k = q.len();
    let n = k + 2;
    let mut found: BTreeMap<CanonicalForm, BoundedInvolutivePoset> = BTreeMap::new();
    for phi in involutions(q) {
        let mut down = Vec::with_capacity(n);
        down.push(Subset::singleton(0));
        for d in q {
            down.push(Subset::from_bits(d.bits() << 1).with(0));
        }
        down.push(Subset::full(n));
        let mut inv = vec![0; n];
        inv[0] = n - 1;
        inv[n - 1] = 0;
        for (x, &y) in phi.iter().enumerate() {
            inv[x + 1] = y + 1;
        }
        let p = BoundedInvolutivePoset::from_parts_unchecked(down, inv, 0, n - 1);
        let (perm, form) = canonical_labeling(&p);
        found.entry(form).or_insert_with(|| p.relabel(&perm));
    }
    found.into_values().collect()
}

/// Every bounded involutive poset on `n` elements satisfying all of
/// `filter`, one per ortho-isomorphism class.
pub fn enumerate_posets(
    n: usize,
    filter: &[PosetProperty],
    caps: &Caps,
) -> Result<Vec<BoundedInvolutivePoset>, CapExceeded> {
    caps.check("poset size", n, caps.posets)?;
    Ok(PosetEnumerator::new()
        .structures(n)
        .into_iter()
        .filter(|p| filter.iter().all(|&f| p.check(f).holds()))
        .collect())
}

/// Smallest poset (by size, then enumeration order) satisfying every
/// antecedent property but not every consequent property.
pub fn search_counterexample(
    antecedent: &[PosetProperty],
    consequent: &[PosetProperty],
    n_max: usize,
    caps: &Caps,
) -> Result<Option<BoundedInvolutivePoset>, CapExceeded> {
    caps.check("poset size", n_max, caps.posets)?;
    let mut e = PosetEnumerator::new();
    for n in 1..=n_max {
        for p in e.structures(n) {
            if antecedent.iter().all(|&a| p.check(a).holds())
                && !consequent.iter().all(|&c| p.check(c).holds())
            {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------- directoids

/// Assigned directoids of `p`, refusing fan-outs over the cap.
pub fn enumerate_directoids(
    p: &BoundedInvolutivePoset,
    policy: AssignmentPolicy,
    caps: &Caps,
) -> Result<Assignments, CapExceeded> {
    if policy.chooser == Chooser::All {
        let f = fan_out(p, policy.mode);
        if f > caps.fan_out {
            return Err(CapExceeded {
                what: "directoid fan-out",
                requested: f,
                cap: caps.fan_out,
            });
        }
    }
    Ok(assigned_directoids(p, policy))
}

fn permuted_meet(d: &InvolutiveDirectoid, perm: &[usize]) -> Vec<usize> {
    let n = d.size();
    let mut t = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            t[perm[x] * n + perm[y]] = perm[d.meet(x, y)];
        }
    }
    t
}

/// The directoids of `p` under `policy` up to isomorphism: tables related
/// by an automorphism of `p` are identified, keeping the first.
pub fn directoid_classes(
    p: &BoundedInvolutivePoset,
    policy: AssignmentPolicy,
    caps: &Caps,
) -> Result<Vec<InvolutiveDirectoid>, CapExceeded> {
    let autos = automorphisms(p);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for d in enumerate_directoids(p, policy, caps)? {
        let key = autos
            .iter()
            .map(|g| permuted_meet(&d, g))
            .min()
            .expect("identity is an automorphism");
        if seen.insert(key) {
            out.push(d);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- effect algebras

struct EaSearch<'a> {
    p: &'a BoundedInvolutivePoset,
    n: usize,
    table: Vec<Option<Element>>,
    pairs: Vec<(Element, Element)>,
    out: Vec<Vec<Option<Element>>>,
}

impl EaSearch<'_> {
    /// Sets `a ⊕ b = c`, recording changes on `trail`. False on conflict.
    fn set(&mut self, a: Element, b: Element, c: Element, trail: &mut Vec<usize>) -> bool {
        let n = self.n;
        for (i, j) in [(a, b), (b, a)] {
            match self.table[i * n + j] {
                Some(v) if v == c => {}
                Some(_) => return false,
                None => {
                    self.table[i * n + j] = Some(c);
                    trail.push(i * n + j);
                }
            }
        }
        true
    }

    /// `a ⊕ b = c` together with the two sums it forces.
    fn set_triple(&mut self, a: Element, b: Element, c: Element, trail: &mut Vec<usize>) -> bool {
        let p = self.p;
        let cc = p.inv(c);
        self.set(a, b, c, trail)
            && self.set(b, cc, p.inv(a), trail)
            && self.set(a, cc, p.inv(b), trail)
    }

    fn undo(&mut self, trail: &[usize]) {
        for &i in trail {
            self.table[i] = None;
        }
    }

    fn go(&mut self, from: usize) {
        let n = self.n;
        let p = self.p;
        let Some(idx) = (from..self.pairs.len()).find(|&i| {
            let (a, b) = self.pairs[i];
            self.table[a * n + b].is_none()
        }) else {
            self.out.push(self.table.clone());
            return;
        };
        let (a, b) = self.pairs[idx];
        let cands = (p.up(a) & p.up(b)).without(a).without(b).without(p.top());
        for c in cands {
            let mut trail = Vec::new();
            if self.set_triple(a, b, c, &mut trail) {
                self.go(idx + 1);
            }
            self.undo(&trail);
        }
    }
}

/// Effect algebras whose induced poset is exactly `p` (order and
/// complement), up to automorphisms of `p`.
pub fn effect_algebras_over(p: &BoundedInvolutivePoset) -> Vec<EffectAlgebra> {
    let n = p.size();
    let (zero, one) = (p.bottom(), p.top());
    let mut table = vec![None; n * n];
    for a in 0..n {
        for (i, j, v) in [
            (a, zero, a),
            (zero, a, a),
            (a, p.inv(a), one),
            (p.inv(a), a, one),
        ] {
            if table[i * n + j].is_some_and(|w| w != v) {
                return Vec::new();
            }
            table[i * n + j] = Some(v);
        }
    }
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a..n {
            if a != zero && b != zero && b != p.inv(a) && p.le(a, p.inv(b)) {
                pairs.push((a, b));
            }
        }
    }
    let mut s = EaSearch {
        p,
        n,
        table,
        pairs,
        out: Vec::new(),
    };
    s.go(0);
    let autos = automorphisms(p);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for t in s.out {
        let key = autos
            .iter()
            .map(|g| {
                let mut r = vec![usize::MAX; n * n];
                for x in 0..n {
                    for y in 0..n {
                        if let Some(v) = t[x * n + y] {
                            r[g[x] * n + g[y]] = g[v];
                        }
                    }
                }
                r
            })
            .min()
            .expect("identity is an automorphism");
        if !seen.insert(key) {
            continue;
        }
        let spec = crate::effect::EffectAlgebraSpec {
            size: n,
            oplus: t.chunks(n).map(|r| r.to_vec()).collect(),
            zero,
            one,
        };
        let Ok(a) = EffectAlgebra::validate(spec) else {
            continue;
        };
        if a.involution() != p.involution() {
            continue;
        }
        let induced = (0..n).all(|x| (0..n).all(|y| a.le(x, y) == p.le(x, y)));
        if induced {
            out.push(a);
        }
    }
    out
}

/// Every effect algebra on `n` elements up to isomorphism.
pub fn enumerate_effect_algebras(n: usize, caps: &Caps) -> Result<Vec<EffectAlgebra>, CapExceeded> {
    caps.check("effect algebra size", n, caps.effect_algebras)?;
    if n == 1 {
        return Ok(vec![EffectAlgebra::from_parts_unchecked(
            1,
            vec![Some(0)],
            vec![0],
            0,
            0,
        )]);
    }
    Ok(PosetEnumerator::new()
        .structures(n)
        .iter()
        .flat_map(effect_algebras_over)
        .collect())
}
