use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::subset::Element;

/// A variable assignment that falsifies a condition.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub bindings: Vec<(String, Element)>,
}

impl Witness {
    pub fn new<'a, I>(bindings: I) -> Self
    where
        I: IntoIterator<Item = (&'a str, Element)>,
    {
        Witness {
            bindings: bindings
                .into_iter()
                .map(|(name, x)| (String::from(name), x))
                .collect(),
        }
    }

    /// Value bound to `name`, if present.
    pub fn get(&self, name: &str) -> Option<Element> {
        self.bindings
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, x)| x)
    }

    /// Prefixes every variable name, used when a compound condition reports
    /// which component failed.
    pub fn tagged(mut self, tag: &str) -> Self {
        for (name, _) in &mut self.bindings {
            let mut s = String::from(tag);
            s.push(':');
            s.push_str(name);
            *name = s;
        }
        self
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (name, x)) in self.bindings.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={x}")?;
        }
        Ok(())
    }
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The first failing assignment in lexicographic order.
    Fails(Witness),
    /// A derived expression that the other axioms guarantee to exist did not
    /// exist. Indicates a malformed structure or a checker bug.
    Inconsistent {
        reason: &'static str,
        witness: Witness,
    },
}

impl Verdict {
    #[inline]
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) | Verdict::Inconsistent { witness: w, .. } => Some(w),
        }
    }

    /// Conjunction: the first non-holding verdict wins.
    pub fn and_then(self, next: impl FnOnce() -> Verdict) -> Verdict {
        match self {
            Verdict::Holds => next(),
            other => other,
        }
    }

    pub(crate) fn tagged(self, tag: &str) -> Verdict {
        match self {
            Verdict::Holds => Verdict::Holds,
            Verdict::Fails(w) => Verdict::Fails(w.tagged(tag)),
            Verdict::Inconsistent { reason, witness } => Verdict::Inconsistent {
                reason,
                witness: witness.tagged(tag),
            },
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            None => Verdict::Holds,
            Some(w) => Verdict::Fails(w),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds => f.write_str("holds"),
            Verdict::Fails(w) => write!(f, "fails({w})"),
            Verdict::Inconsistent { reason, witness } => {
                write!(f, "inconsistent: {reason} ({witness})")
            }
        }
    }
}

/// First tuple in `[0, n)^K` (lexicographic, last coordinate fastest) for
/// which `bad` returns true.
pub(crate) fn first_failing<const K: usize>(
    n: usize,
    mut bad: impl FnMut([Element; K]) -> bool,
) -> Option<[Element; K]> {
    if n == 0 {
        return None;
    }
    let mut t = [0; K];
    loop {
        if bad(t) {
            return Some(t);
        }
        let mut i = K;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
        }
    }
}

/// Runs [`first_failing`] and names the coordinates.
pub(crate) fn forall<const K: usize>(
    n: usize,
    names: [&str; K],
    bad: impl FnMut([Element; K]) -> bool,
) -> Verdict {
    first_failing(n, bad)
        .map(|t| Witness::new(names.iter().copied().zip(t)))
        .into()
}
