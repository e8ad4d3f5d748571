//! Naive labeled enumeration used as an independent reference.
//!
//! Structures live on `0..n` with the bottom at 0 and the top at `n - 1`.
//! Every strict order on the interior is generated pair by pair, every
//! antitone involution is tried, and classes are found by minimizing an
//! encoding over all interior permutations.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Labeled {
    pub le: Vec<Vec<bool>>,
    pub inv: Vec<usize>,
}

impl Labeled {
    pub fn n(&self) -> usize {
        self.inv.len()
    }

    fn lower(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&z| xs.iter().all(|&x| self.le[z][x]))
            .collect()
    }

    fn upper(&self, xs: &[usize]) -> Vec<usize> {
        (0..self.n())
            .filter(|&z| xs.iter().all(|&x| self.le[x][z]))
            .collect()
    }

    fn greatest(&self, s: &[usize]) -> Option<usize> {
        s.iter()
            .copied()
            .find(|&g| s.iter().all(|&z| self.le[z][g]))
    }

    fn least(&self, s: &[usize]) -> Option<usize> {
        s.iter()
            .copied()
            .find(|&g| s.iter().all(|&z| self.le[g][z]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.greatest(&self.lower(&[x, y]))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.least(&self.upper(&[x, y]))
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| (0..n).all(|y| self.meet(x, y).is_some() && self.join(x, y).is_some()))
    }

    pub fn is_orthoposet(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            self.lower(&[x, self.inv[x]]) == [0] && self.upper(&[x, self.inv[x]]) == [n - 1]
        })
    }

    /// x <= y and L(x', y) = {0} imply x = y.
    pub fn is_paraorthomodular(&self) -> bool {
        let n = self.n();
        (0..n).all(|x| {
            (0..n).all(|y| !self.le[x][y] || x == y || self.lower(&[self.inv[x], y]) != [0])
        })
    }

    pub fn is_orthomodular(&self) -> bool {
        let n = self.n();
        self.is_orthoposet()
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    if self.le[x][self.inv[y]] && self.join(x, y).is_none() {
                        return false;
                    }
                    if !self.le[x][y] {
                        return true;
                    }
                    match self.meet(y, self.inv[x]) {
                        Some(m) => self.join(x, m) == Some(y),
                        None => false,
                    }
                })
            })
    }

    /// Encoding after renaming `x` to `perm[x]`.
    fn encode(&self, perm: &[usize]) -> Vec<usize> {
        let n = self.n();
        let mut le = vec![vec![false; n]; n];
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[perm[x]] = perm[self.inv[x]];
            for y in 0..n {
                le[perm[x]][perm[y]] = self.le[x][y];
            }
        }
        let mut code: Vec<usize> = le.into_iter().flatten().map(usize::from).collect();
        code.extend(inv);
        code
    }

    pub fn canonical(&self) -> Vec<usize> {
        let n = self.n();
        permutations(n)
            .iter()
            .map(|p| self.encode(p))
            .min()
            .expect("at least one permutation")
    }
}

/// Permutations of `0..n` fixing 0 and `n - 1`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n <= 2 {
        return vec![(0..n).collect()];
    }
    let mut out = Vec::new();
    let mut inner: Vec<usize> = (1..n - 1).collect();
    heap(&mut inner, n - 2, &mut |p| {
        let mut v = vec![0];
        v.extend_from_slice(p);
        v.push(n - 1);
        out.push(v);
    });
    out
}

fn heap(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k {
        heap(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

/// Every labeled bounded poset on `0..n` with an antitone involution.
pub fn labeled_structures(n: usize) -> Vec<Labeled> {
    if n == 1 {
        return vec![Labeled {
            le: vec![vec![true]],
            inv: vec![0],
        }];
    }
    let inner: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&i| inner.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let total = 3usize.pow(pairs.len() as u32);
    for code in 0..total {
        let mut le = vec![vec![false; n]; n];
        for x in 0..n {
            le[x][x] = true;
            le[0][x] = true;
            le[x][n - 1] = true;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            match c % 3 {
                1 => le[i][j] = true,
                2 => le[j][i] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive =
            (0..n).all(|a| (0..n).all(|b| !le[a][b] || (0..n).all(|d| !le[b][d] || le[a][d])));
        if !transitive {
            continue;
        }
        for inv in involutions(n) {
            let antitone = (0..n).all(|x| (0..n).all(|y| !le[x][y] || le[inv[y]][inv[x]]));
            if antitone {
                out.push(Labeled {
                    le: le.clone(),
                    inv,
                });
            }
        }
    }
    out
}

/// Involutions of `0..n` swapping 0 and `n - 1`.
fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let n = cur.len();
        if i == n {
            out.push(cur.clone());
            return;
        }
        if cur[i] != usize::MAX {
            return go(i + 1, cur, out);
        }
        for j in i..n {
            if cur[j] == usize::MAX {
                cur[i] = j;
                cur[j] = i;
                go(i + 1, cur, out);
                cur[i] = usize::MAX;
                cur[j] = usize::MAX;
            }
        }
    }
    let mut cur = vec![usize::MAX; n];
    cur[0] = n - 1;
    cur[n - 1] = 0;
    let mut out = Vec::new();
    go(1, &mut cur, &mut out);
    out
}

/// One representative per isomorphism class, keyed by canonical code.
pub fn classes(n: usize) -> BTreeMap<Vec<usize>, Labeled> {
    let mut out = BTreeMap::new();
    for s in labeled_structures(n) {
        out.entry(s.canonical()).or_insert(s);
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub total: usize,
    pub lattice: usize,
    pub orthoposet: usize,
    pub paraorthomodular: usize,
    pub orthomodular: usize,
}

pub fn class_counts(n: usize) -> Counts {
    let mut c = Counts::default();
    for s in classes(n).values() {
        c.total += 1;
        c.lattice += usize::from(s.is_lattice());
        c.orthoposet += usize::from(s.is_orthoposet());
        c.paraorthomodular += usize::from(s.is_paraorthomodular());
        c.orthomodular += usize::from(s.is_orthomodular());
    }
    c
}

/// Involutive directoids on `0..n` up to isomorphism: commutative,
/// idempotent, weakly associative tables with an involution making the
/// derived order bounded by 0 and `n - 1` and the involution antitone.
pub fn directoid_class_count(n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let inner: Vec<usize> = (1..n - 1).collect();
    let pairs: Vec<(usize, usize)> = inner
        .iter()
        .flat_map(|&i| inner.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeSet::new();
    let total = n.pow(pairs.len() as u32);
    for code in 0..total {
        let mut m = vec![vec![0usize; n]; n];
        for x in 0..n {
            m[x][x] = x;
            m[0][x] = 0;
            m[x][0] = 0;
            m[n - 1][x] = x;
            m[x][n - 1] = x;
        }
        let mut c = code;
        for &(i, j) in &pairs {
            m[i][j] = c % n;
            m[j][i] = c % n;
            c /= n;
        }
        let weak =
            (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m[m[m[x][y]][z]][z] == m[m[x][y]][z])));
        if !weak {
            continue;
        }
        let le = |x: usize, y: usize| m[x][y] == x;
        let order_ok = (0..n).all(|a| {
            (0..n).all(|b| {
                (!(le(a, b) && le(b, a)) || a == b)
                    && (0..n).all(|d| !(le(a, b) && le(b, d)) || le(a, d))
            })
        });
        if !order_ok {
            continue;
        }
        for inv in involutions(n) {
            if !(0..n).all(|x| (0..n).all(|y| !le(x, y) || le(inv[y], inv[x]))) {
                continue;
            }
            let key = perms
                .iter()
                .map(|p| {
                    let mut t = vec![0; n * n + n];
                    for x in 0..n {
                        t[n * n + p[x]] = p[inv[x]];
                        for y in 0..n {
                            t[p[x] * n + p[y]] = p[m[x][y]];
                        }
                    }
                    t
                })
                .min()
                .expect("nonempty");
            seen.insert(key);
        }
    }
    seen.len()
}
