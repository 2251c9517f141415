//! Sublocales of a finite frame and the coframes `S(L)` and `S_o(L)`.
//!
//! A sublocale is stored as the bit set of its member elements. The
//! materialized coframes index their sublocales in canonical order
//! (cardinality, then lexicographic member list).

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::{subsets, BitSet};
use crate::error::{Error, Result};
use crate::lattice::{Coframe, Frame, Lattice};

/// Bounds for the exhaustive constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Frames up to this size have `S(L)` found by scanning every subset.
    pub exhaustive_scan: usize,
    /// Largest frame accepted for sublocale enumeration at all.
    pub max_frame: usize,
    /// Largest number of sublocales materialized.
    pub max_sublocales: usize,
    /// Largest host coframe for brute-force subcolocale enumeration.
    pub max_subcolocale_host: usize,
    /// Node budget of lift searches.
    pub lift_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            exhaustive_scan: 12,
            max_frame: 24,
            max_sublocales: 512,
            max_subcolocale_host: 16,
            lift_budget: 1_000_000,
        }
    }
}

impl Frame {
    /// Condition 1 (closure under meets, including the empty meet `1`) and
    /// condition 2 (`a → s ∈ S`).
    pub fn is_sublocale(&self, s: &BitSet) -> bool {
        let l = self.lattice();
        s.contains(l.top())
            && s.iter().all(|x| s.iter().all(|y| s.contains(l.meet(x, y))))
            && s.iter().all(|x| l.elements().all(|a| s.contains(self.heyting(a, x))))
    }

    /// `ν_S(a)`, the least member of `s` above `a`.
    pub fn nucleus(&self, s: &BitSet, a: usize) -> usize {
        let l = self.lattice();
        l.big_meet(s.iter().filter(|&x| l.leq(a, x)))
    }

    /// `𝔬(a) = {a → b | b ∈ L}`.
    pub fn open_sublocale(&self, a: usize) -> BitSet {
        BitSet::from_indices(self.len(), self.lattice().elements().map(|b| self.heyting(a, b)))
    }

    /// `𝔠(a) = ↑a`.
    pub fn closed_sublocale(&self, a: usize) -> BitSet {
        self.lattice().up_set(a).clone()
    }

    /// `𝔟(a) = {b → a | b ∈ L}`, the smallest sublocale containing `a`.
    pub fn b_sublocale(&self, a: usize) -> BitSet {
        BitSet::from_indices(self.len(), self.lattice().elements().map(|b| self.heyting(b, a)))
    }

    /// The smallest sublocale containing every member of `sets`: the union
    /// is closed under binary meets and `a → (−)` until nothing changes.
    pub fn sublocale_join<'a, I: IntoIterator<Item = &'a BitSet>>(&self, sets: I) -> BitSet {
        let l = self.lattice();
        let mut acc = BitSet::new(self.len());
        acc.insert(l.top());
        for s in sets {
            acc.union_with(s);
        }
        loop {
            let mut next = acc.clone();
            for x in acc.iter() {
                for y in acc.iter() {
                    next.insert(l.meet(x, y));
                }
                for a in l.elements() {
                    next.insert(self.heyting(a, x));
                }
            }
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    /// `fit(S) = ⋂ {𝔬(x) | S ⊆ 𝔬(x)}`.
    pub fn fit_set(&self, s: &BitSet) -> BitSet {
        let mut acc = BitSet::full(self.len());
        for x in self.lattice().elements() {
            let o = self.open_sublocale(x);
            if s.is_subset(&o) {
                acc.intersect_with(&o);
            }
        }
        acc
    }

    /// Every family of elements (as a mask) whose meet is exact, paired with
    /// that meet. Exhaustive over all `2^n` families.
    pub fn exact_meet_families(&self) -> Vec<(u64, usize)> {
        self.lattice().exact_meet_masks()
    }

    /// Whether, for every exact meet `⋀ xᵢ` and every `x`,
    /// `S ∩ 𝔠(xᵢ) ⊆ 𝔠(x)` for all `i` implies `S ∩ 𝔠(⋀ xᵢ) ⊆ 𝔠(x)`.
    pub fn is_exact_sublocale(&self, s: &BitSet) -> bool {
        self.is_exact_sublocale_with(s, &self.exact_meet_families())
    }

    pub fn is_exact_sublocale_with(&self, s: &BitSet, exact: &[(u64, usize)]) -> bool {
        let l = self.lattice();
        let n = l.len();
        // inside[y][x]: S ∩ 𝔠(y) ⊆ 𝔠(x)
        let inside = |y: usize, x: usize| s.intersection(l.up_set(y)).is_subset(l.up_set(x));
        let table: Vec<bool> = (0..n * n).map(|k| inside(k / n, k % n)).collect();
        (0..n).all(|x| {
            let premise: u64 = (0..n).filter(|&y| table[y * n + x]).fold(0, |m, y| m | 1 << y);
            exact
                .iter()
                .all(|&(mask, meet)| mask & !premise != 0 || table[meet * n + x])
        })
    }

    /// The sublocale `{s(a) | a ∈ L}` of fixpoints of a nucleus given as a
    /// table.
    pub fn image_of(&self, table: &[usize]) -> BitSet {
        BitSet::from_indices(self.len(), table.iter().copied())
    }
}

/// Which family of sublocales a [`SublocaleCoframe`] materializes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    /// All sublocales, `S(L)`.
    All,
    /// Fitted sublocales, `S_o(L)`.
    Fitted,
}

/// An indexed coframe of sublocales with its lattice tables.
#[derive(Clone, Debug)]
pub struct SublocaleCoframe {
    ambient: Frame,
    kind: Kind,
    elems: Vec<BitSet>,
    index: BTreeMap<BitSet, usize>,
    coframe: Coframe,
    open_index: Vec<usize>,
    closed_index: Vec<Option<usize>>,
}

impl SublocaleCoframe {
    /// Materializes `S(L)`.
    pub fn enumerate(frame: &Frame, limits: &Limits) -> Result<Self> {
        let n = frame.len();
        if n > limits.max_frame {
            return Err(Error::SizeLimit { what: "frame for sublocale enumeration", limit: limits.max_frame });
        }
        let elems = if n <= limits.exhaustive_scan {
            let mut found = Vec::new();
            for mask in subsets(n) {
                let s = BitSet::from_mask(n, mask);
                if frame.is_sublocale(&s) {
                    found.push(s);
                    if found.len() > limits.max_sublocales {
                        return Err(Error::SizeLimit { what: "sublocale count", limit: limits.max_sublocales });
                    }
                }
            }
            found
        } else {
            generate_sublocales(frame, limits.max_sublocales)?
        };
        Self::assemble(frame, Kind::All, elems)
    }

    /// Materializes `S_o(L)`: the closure of the opens under intersection.
    pub fn fitted(frame: &Frame) -> Result<Self> {
        let opens: Vec<BitSet> = frame.lattice().elements().map(|a| frame.open_sublocale(a)).collect();
        let mut set: BTreeMap<BitSet, ()> = opens.iter().cloned().map(|o| (o, ())).collect();
        loop {
            let current: Vec<BitSet> = set.keys().cloned().collect();
            let mut grew = false;
            for a in &current {
                for o in &opens {
                    if set.insert(a.intersection(o), ()).is_none() {
                        grew = true;
                    }
                }
            }
            if !grew {
                break;
            }
        }
        Self::assemble(frame, Kind::Fitted, set.into_keys().collect())
    }

    fn assemble(frame: &Frame, kind: Kind, mut elems: Vec<BitSet>) -> Result<Self> {
        elems.sort_by(|a, b| a.canonical_cmp(b));
        elems.dedup();
        let m = elems.len();
        let index: BTreeMap<BitSet, usize> =
            elems.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let lookup = |s: &BitSet| -> Result<usize> { index.get(s).copied().ok_or(Error::NotASublocale) };
        let mut up = alloc::vec![BitSet::new(m); m];
        let mut meet = alloc::vec![0; m * m];
        let mut join = alloc::vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                if elems[i].is_subset(&elems[j]) {
                    up[i].insert(j);
                }
            }
            for j in i..m {
                let mt = lookup(&elems[i].intersection(&elems[j]))?;
                let mut jn = frame.sublocale_join([&elems[i], &elems[j]]);
                if kind == Kind::Fitted {
                    jn = frame.fit_set(&jn);
                }
                let jn = lookup(&jn)?;
                meet[i * m + j] = mt;
                meet[j * m + i] = mt;
                join[i * m + j] = jn;
                join[j * m + i] = jn;
            }
        }
        let coframe = Coframe::new(Lattice::from_tables(up, meet, join))?;
        let open_index = frame
            .lattice()
            .elements()
            .map(|a| lookup(&frame.open_sublocale(a)))
            .collect::<Result<Vec<_>>>()?;
        let closed_index = frame
            .lattice()
            .elements()
            .map(|a| index.get(&frame.closed_sublocale(a)).copied())
            .collect();
        Ok(SublocaleCoframe {
            ambient: frame.clone(),
            kind,
            elems,
            index,
            coframe,
            open_index,
            closed_index,
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.ambient
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn coframe(&self) -> &Coframe {
        &self.coframe
    }

    pub fn lattice(&self) -> &Lattice {
        self.coframe.lattice()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[BitSet] {
        &self.elems
    }

    pub fn get(&self, i: usize) -> &BitSet {
        &self.elems[i]
    }

    pub fn index_of(&self, s: &BitSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Index of a member set known to belong to this coframe.
    pub(crate) fn idx(&self, s: &BitSet) -> usize {
        self.index_of(s).expect("member set belongs to the coframe")
    }

    /// Index of `𝔬(a)`.
    pub fn open(&self, a: usize) -> usize {
        self.open_index[a]
    }

    /// Index of `𝔠(a)`, when it belongs to this coframe.
    pub fn closed(&self, a: usize) -> Option<usize> {
        self.closed_index[a]
    }

    pub fn is_open(&self, i: usize) -> bool {
        self.open_index.contains(&i)
    }

    pub fn is_closed(&self, i: usize) -> bool {
        self.closed_index.contains(&Some(i))
    }

    /// Smallest member `{1}`.
    pub fn bottom(&self) -> usize {
        self.coframe.bottom()
    }

    /// Largest member `L`.
    pub fn top(&self) -> usize {
        self.coframe.top()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.lattice().leq(i, j)
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.lattice().meet(i, j)
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.lattice().join(i, j)
    }

    pub fn difference(&self, i: usize, j: usize) -> usize {
        self.coframe.difference(i, j)
    }

    /// Least upper bound of a family of indices, computed on member sets
    /// (fitted after the join when this is `S_o(L)`).
    pub fn join_of<I: IntoIterator<Item = usize>>(&self, family: I) -> usize {
        let sets: Vec<&BitSet> = family.into_iter().map(|i| &self.elems[i]).collect();
        let mut j = self.ambient.sublocale_join(sets);
        if self.kind == Kind::Fitted {
            j = self.ambient.fit_set(&j);
        }
        self.idx(&j)
    }

    /// Fitting as a closure operator on this coframe.
    pub fn fit(&self, i: usize) -> usize {
        self.idx(&self.ambient.fit_set(&self.elems[i]))
    }

    pub fn is_fitted(&self, i: usize) -> bool {
        self.fit(i) == i
    }
}

/// All sublocales as joins of the one-generated sublocales `𝔟(a)`: every
/// sublocale is the join of `𝔟(s)` over its members.
fn generate_sublocales(frame: &Frame, limit: usize) -> Result<Vec<BitSet>> {
    let gens: Vec<BitSet> = frame.lattice().elements().map(|a| frame.b_sublocale(a)).collect();
    let mut seen: BTreeMap<BitSet, ()> = BTreeMap::new();
    let mut bottom = BitSet::new(frame.len());
    bottom.insert(frame.top());
    let mut work = alloc::vec![bottom.clone()];
    seen.insert(bottom, ());
    while let Some(s) = work.pop() {
        for g in &gens {
            if g.is_subset(&s) {
                continue;
            }
            let j = frame.sublocale_join([&s, g]);
            if seen.insert(j.clone(), ()).is_none() {
                if seen.len() > limit {
                    return Err(Error::SizeLimit { what: "sublocale count", limit });
                }
                work.push(j);
            }
        }
    }
    Ok(seen.into_keys().collect())
}
