//! Finite bounded lattices with their frame and coframe structure.
//!
//! Elements are dense indices `0..n`. The order is stored as one up-set and
//! one down-set bit row per element; binary meets and joins are tabulated
//! once at construction so every later operation is a table lookup.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{mask_iter, subsets, BitSet};
use crate::error::{Error, Result};

/// A set of elements of a lattice, used as an indexed family `{x_i}`.
pub type ElementFamily = BitSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    bottom: usize,
    top: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
}

impl Lattice {
    /// Builds a lattice from an order predicate, validating the partial
    /// order axioms and the existence of all binary meets and joins.
    pub fn from_order<F: Fn(usize, usize) -> bool>(n: usize, leq: F) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut up = alloc::vec![BitSet::new(n); n];
        let mut down = alloc::vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::NotAnOrder("not reflexive"));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotAnOrder("not antisymmetric"));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::NotAnOrder("not transitive"));
                }
            }
        }
        let mut meet = alloc::vec![0; n * n];
        let mut join = alloc::vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let lower = down[i].intersection(&down[j]);
                let m = lower
                    .iter()
                    .find(|&g| lower.is_subset(&down[g]))
                    .ok_or(Error::NotALattice { left: i, right: j })?;
                let upper = up[i].intersection(&up[j]);
                let s = upper
                    .iter()
                    .find(|&g| upper.is_subset(&up[g]))
                    .ok_or(Error::NotALattice { left: i, right: j })?;
                meet[i * n + j] = m;
                meet[j * n + i] = m;
                join[i * n + j] = s;
                join[j * n + i] = s;
            }
        }
        let bottom = (0..n).find(|&b| up[b].len() == n).ok_or(Error::NotALattice { left: 0, right: 0 })?;
        let top = (0..n).find(|&t| down[t].len() == n).ok_or(Error::NotALattice { left: 0, right: 0 })?;
        Ok(Lattice { n, up, down, bottom, top, meet, join })
    }

    /// Builds a lattice from generating pairs `i < j`; the order is their
    /// reflexive-transitive closure.
    pub fn from_covers(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut up = alloc::vec![BitSet::new(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            row.insert(i);
        }
        for &(i, j) in pairs {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange { index: idx, len: n });
                }
            }
            up[i].insert(j);
        }
        // Warshall closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        Self::from_order(n, |i, j| up[i].contains(j))
    }

    /// Assembles a lattice from precomputed tables whose correctness the
    /// caller guarantees (used for materialized sublocale coframes).
    pub(crate) fn from_tables(up: Vec<BitSet>, meet: Vec<usize>, join: Vec<usize>) -> Self {
        let n = up.len();
        let mut down = alloc::vec![BitSet::new(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        let bottom = (0..n).find(|&b| up[b].len() == n).expect("bottom");
        let top = (0..n).find(|&t| down[t].len() == n).expect("top");
        Lattice { n, up, down, bottom, top, meet, join }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn is_degenerate(&self) -> bool {
        self.n == 1
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.n + y]
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.n + y]
    }

    /// Elements above `x`, including `x`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// Elements below `x`, including `x`.
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.n
    }

    /// Greatest lower bound of a family; the empty family meets to top.
    pub fn big_meet<I: IntoIterator<Item = usize>>(&self, family: I) -> usize {
        family.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Least upper bound of a family; the empty family joins to bottom.
    pub fn big_join<I: IntoIterator<Item = usize>>(&self, family: I) -> usize {
        family.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Covering pairs `(i, j)` with `i < j` and nothing strictly between,
    /// sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.up[i].iter() {
                if j == i {
                    continue;
                }
                let between = self.up[i]
                    .intersection(&self.down[j])
                    .iter()
                    .any(|k| k != i && k != j);
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The order-reversed lattice on the same indices.
    pub fn dual(&self) -> Lattice {
        Lattice {
            n: self.n,
            up: self.down.clone(),
            down: self.up.clone(),
            bottom: self.top,
            top: self.bottom,
            meet: self.join.clone(),
            join: self.meet.clone(),
        }
    }

    /// First triple violating `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)`.
    pub fn distributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in y..self.n {
                    let lhs = self.meet(x, self.join(y, z));
                    let rhs = self.join(self.meet(x, y), self.meet(x, z));
                    if lhs != rhs {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    /// First triple violating `x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z)`.
    pub fn codistributivity_counterexample(&self) -> Option<(usize, usize, usize)> {
        self.dual().distributivity_counterexample()
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_counterexample().is_none()
    }

    /// Whether `⋀ fam` is exact: `(⋀ᵢ xᵢ) ∨ y = ⋀ᵢ (xᵢ ∨ y)` for every `y`.
    pub fn is_exact_meet(&self, fam: &ElementFamily) -> bool {
        let m = self.big_meet(fam.iter());
        (0..self.n).all(|y| self.join(m, y) == self.big_meet(fam.iter().map(|x| self.join(x, y))))
    }

    /// Whether `⋁ fam` is exact: `(⋁ᵢ xᵢ) ∧ y = ⋁ᵢ (xᵢ ∧ y)` for every `y`.
    pub fn is_exact_join(&self, fam: &ElementFamily) -> bool {
        let j = self.big_join(fam.iter());
        (0..self.n).all(|y| self.meet(j, y) == self.big_join(fam.iter().map(|x| self.meet(x, y))))
    }

    /// Every family whose meet is exact, as `(mask, meet)` in increasing
    /// mask order. Tabulates meets of all `2^n` families incrementally, so
    /// only for `n ≤ 26`.
    pub fn exact_meet_masks(&self) -> Vec<(u64, usize)> {
        assert!(self.n <= 26, "family tables need n <= 26");
        let size = 1usize << self.n;
        let mut meets = vec![self.top as u8; size];
        for mask in 1..size {
            let low = mask.trailing_zeros() as usize;
            meets[mask] = self.meet(meets[mask & (mask - 1)] as usize, low) as u8;
        }
        let mut exact = vec![true; size];
        let mut joined = vec![self.top as u8; size];
        for y in 0..self.n {
            for mask in 1..size {
                let low = mask.trailing_zeros() as usize;
                joined[mask] = self.meet(joined[mask & (mask - 1)] as usize, self.join(low, y)) as u8;
                if self.join(meets[mask] as usize, y) != joined[mask] as usize {
                    exact[mask] = false;
                }
            }
        }
        (0..size)
            .filter(|&m| exact[m])
            .map(|m| (m as u64, meets[m] as usize))
            .collect()
    }

    /// Elements `p ≠ 1` that are not the meet of two elements strictly above.
    pub fn meet_irreducibles(&self) -> BitSet {
        let mut out = BitSet::new(self.n);
        for p in 0..self.n {
            if p == self.top {
                continue;
            }
            let reducible = self.up[p].iter().any(|a| {
                a != p && self.up[p].iter().any(|b| b != p && self.meet(a, b) == p)
            });
            if !reducible {
                out.insert(p);
            }
        }
        out
    }

    pub fn complement(&self, c: usize) -> Option<usize> {
        self.elements()
            .find(|&d| self.meet(c, d) == self.bottom && self.join(c, d) == self.top)
    }

    /// Whether `⋁ᵢ (aᵢ ∧ c) = (⋁ᵢ aᵢ) ∧ c` for every family. On a finite
    /// lattice the empty family is trivial and larger families reduce to
    /// binary joins by induction, so checking all pairs is exhaustive.
    pub fn is_linear(&self, c: usize) -> bool {
        self.elements().all(|a| {
            self.elements()
                .all(|b| self.meet(self.join(a, b), c) == self.join(self.meet(a, c), self.meet(b, c)))
        })
    }

    /// Every family of elements, as word masks. Only for `n < 64`.
    pub fn families(&self) -> impl Iterator<Item = ElementFamily> + '_ {
        subsets(self.n).map(move |m| BitSet::from_mask(self.n, m))
    }

    /// Meet of the family encoded by a word mask.
    pub fn mask_meet(&self, mask: u64) -> usize {
        self.big_meet(mask_iter(mask))
    }

    pub fn mask_join(&self, mask: u64) -> usize {
        self.big_join(mask_iter(mask))
    }
}

/// A finite lattice certified distributive, hence a frame, with its Heyting
/// implication tabulated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    lattice: Lattice,
    implication: Vec<usize>,
}

impl Frame {
    pub fn new(lattice: Lattice) -> Result<Self> {
        if let Some((x, y, z)) = lattice.distributivity_counterexample() {
            return Err(Error::NotAFrame { x, y, z });
        }
        let n = lattice.len();
        let mut implication = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                implication[x * n + y] =
                    lattice.big_join((0..n).filter(|&z| lattice.leq(lattice.meet(z, x), y)));
            }
        }
        Ok(Frame { lattice, implication })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// `x → y`, the largest `z` with `z ∧ x ≤ y`.
    #[inline]
    pub fn heyting(&self, x: usize, y: usize) -> usize {
        self.implication[x * self.lattice.len() + y]
    }

    /// `¬a = a → 0`.
    pub fn pseudocomplement(&self, a: usize) -> usize {
        self.heyting(a, self.lattice.bottom())
    }

    /// Proper elements `p` with `x ∧ y ≤ p ⇒ x ≤ p or y ≤ p`.
    pub fn primes(&self) -> BitSet {
        let l = &self.lattice;
        let mut out = BitSet::new(l.len());
        for p in l.elements() {
            if p == l.top() {
                continue;
            }
            let prime = l.elements().all(|x| {
                l.elements()
                    .all(|y| !l.leq(l.meet(x, y), p) || l.leq(x, p) || l.leq(y, p))
            });
            if prime {
                out.insert(p);
            }
        }
        out
    }

    /// Primes `p` such that no family of elements meets to `p` without
    /// containing it. Any such family lies strictly above `p`, so `p` is
    /// covered exactly when the meet of its strict up-set differs from `p`.
    pub fn covered_primes(&self) -> BitSet {
        let l = &self.lattice;
        let mut out = self.primes();
        for p in self.primes().iter() {
            let above = l.big_meet(l.up_set(p).iter().filter(|&x| x != p));
            if above == p {
                out.remove(p);
            }
        }
        out
    }

    /// Whether `xᵢ → y = y` for all `i` implies `(⋀ᵢ xᵢ) → y = y`, for every `y`.
    pub fn is_strongly_exact_meet(&self, fam: &ElementFamily) -> bool {
        let m = self.lattice.big_meet(fam.iter());
        self.lattice.elements().all(|y| {
            !fam.iter().all(|x| self.heyting(x, y) == y) || self.heyting(m, y) == y
        })
    }

    /// Whether every `a ≰ b` is separated by a prime `p` with `b ≤ p`, `a ≰ p`.
    pub fn is_spatial(&self) -> bool {
        let l = &self.lattice;
        let primes = self.primes();
        l.elements().all(|a| {
            l.elements().all(|b| {
                l.leq(a, b) || primes.iter().any(|p| l.leq(b, p) && !l.leq(a, p))
            })
        })
    }
}

/// A finite lattice certified co-distributive, with its difference
/// operator `x ∖ y` tabulated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coframe {
    lattice: Lattice,
    difference: Vec<usize>,
}

impl Coframe {
    pub fn new(lattice: Lattice) -> Result<Self> {
        if let Some((x, y, z)) = lattice.codistributivity_counterexample() {
            return Err(Error::NotACoframe { x, y, z });
        }
        let n = lattice.len();
        let mut difference = alloc::vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                difference[x * n + y] =
                    lattice.big_meet((0..n).filter(|&z| lattice.leq(x, lattice.join(y, z))));
            }
        }
        Ok(Coframe { lattice, difference })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    /// `x ∖ y`, the least `z` with `x ≤ y ∨ z`.
    #[inline]
    pub fn difference(&self, x: usize, y: usize) -> usize {
        self.difference[x * self.lattice.len() + y]
    }

    /// `c* = 1 ∖ c`.
    pub fn supplement(&self, c: usize) -> usize {
        self.difference(self.lattice.top(), c)
    }

    pub fn complement(&self, c: usize) -> Option<usize> {
        self.lattice.complement(c)
    }

    pub fn is_complemented(&self, c: usize) -> bool {
        self.complement(c).is_some()
    }

    pub fn is_linear(&self, c: usize) -> bool {
        self.lattice.is_linear(c)
    }
}
