//! Frame precongruences and their bijection with sublocales.

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::lattice::Frame;

/// A binary relation on the elements of a frame, stored as an `n × n` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    rel: Vec<bool>,
}

impl Relation {
    pub fn from_fn<F: Fn(usize, usize) -> bool>(n: usize, f: F) -> Self {
        let mut rel = alloc::vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                rel[a * n + b] = f(a, b);
            }
        }
        Relation { n, rel }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn holds(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (0..self.n).filter(move |&b| self.holds(a, b)).map(move |b| (a, b)))
    }

    /// First precongruence condition that fails, if any.
    ///
    /// Join stability is checked on the empty family and on binary joins;
    /// on a finite frame every family is finite, so these generate it.
    pub fn precongruence_violation(&self, frame: &Frame) -> Option<&'static str> {
        let l = frame.lattice();
        let n = self.n;
        if (0..n).any(|a| !self.holds(a, a)) {
            return Some("reflexivity");
        }
        for (a, b) in self.pairs() {
            for c in 0..n {
                if self.holds(b, c) && !self.holds(a, c) {
                    return Some("transitivity");
                }
            }
            for a2 in l.down_set(a).iter() {
                for b2 in l.up_set(b).iter() {
                    if !self.holds(a2, b2) {
                        return Some("down-up stability");
                    }
                }
            }
        }
        for b in 0..n {
            if !self.holds(l.bottom(), b) {
                return Some("join stability");
            }
            for a1 in 0..n {
                for a2 in 0..n {
                    if self.holds(a1, b) && self.holds(a2, b) && !self.holds(l.join(a1, a2), b) {
                        return Some("join stability");
                    }
                }
            }
        }
        for a in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    if self.holds(a, b1) && self.holds(a, b2) && !self.holds(a, l.meet(b1, b2)) {
                        return Some("meet stability");
                    }
                }
            }
        }
        None
    }

    pub fn is_precongruence(&self, frame: &Frame) -> bool {
        self.precongruence_violation(frame).is_none()
    }
}

/// A relation certified to satisfy the five precongruence conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precongruence {
    relation: Relation,
}

impl Precongruence {
    pub fn new(frame: &Frame, relation: Relation) -> Result<Self> {
        match relation.precongruence_violation(frame) {
            Some(why) => Err(Error::NotAPrecongruence(why)),
            None => Ok(Precongruence { relation }),
        }
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    /// `{(a, b) | ν_S(a) ≤ ν_S(b)}`.
    pub fn of_sublocale(frame: &Frame, s: &BitSet) -> Self {
        let l = frame.lattice();
        let nu: Vec<usize> = l.elements().map(|a| frame.nucleus(s, a)).collect();
        Precongruence {
            relation: Relation::from_fn(l.len(), |a, b| l.leq(nu[a], nu[b])),
        }
    }

    /// `⋂ {𝔠(x) ∨ 𝔬(y) | (x, y) ∈ R}`.
    pub fn to_sublocale(&self, frame: &Frame) -> BitSet {
        let mut acc = BitSet::full(frame.len());
        for (x, y) in self.relation.pairs() {
            let piece = frame.sublocale_join([&frame.closed_sublocale(x), &frame.open_sublocale(y)]);
            acc.intersect_with(&piece);
        }
        acc
    }
}
