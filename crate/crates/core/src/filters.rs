//! Filters of a finite frame, their exact and strongly exact variants, and
//! the maps `φ` and `ker` from sublocales to filters.

use alloc::vec::Vec;

use crate::bitset::{mask_iter, submasks, BitSet};
use crate::lattice::Frame;
use crate::sublocale::{Kind, SublocaleCoframe};

/// An indexed collection of filters, sorted canonically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilterSet {
    filters: Vec<BitSet>,
}

impl FilterSet {
    pub fn filters(&self) -> &[BitSet] {
        &self.filters
    }

    pub fn len(&self) -> usize {
        self.filters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filters.is_empty()
    }

    pub fn contains(&self, f: &BitSet) -> bool {
        self.filters.binary_search_by(|g| g.canonical_cmp(f)).is_ok()
    }

    fn from_vec(mut filters: Vec<BitSet>) -> Self {
        filters.sort_by(|a, b| a.canonical_cmp(b));
        filters.dedup();
        FilterSet { filters }
    }
}

/// Largest filter size for which closure under subfamily meets is checked
/// by enumerating every subfamily.
const SUBFAMILY_SCAN: usize = 16;

impl Frame {
    /// An up-set containing `1` and closed under binary meets. The improper
    /// filter `L` is included.
    pub fn is_filter(&self, f: &BitSet) -> bool {
        let l = self.lattice();
        f.contains(l.top())
            && f.iter().all(|x| l.up_set(x).is_subset(f))
            && f.iter().all(|x| f.iter().all(|y| f.contains(l.meet(x, y))))
    }

    /// All filters. A filter of a finite lattice contains the meet of its
    /// members, so the candidates are the principal up-sets.
    pub fn filters(&self) -> FilterSet {
        let l = self.lattice();
        FilterSet::from_vec(
            l.elements()
                .map(|a| l.up_set(a).clone())
                .filter(|f| self.is_filter(f))
                .collect(),
        )
    }

    fn closed_under_meets<P: Fn(&BitSet) -> bool>(&self, f: &BitSet, qualifies: P) -> bool {
        let l = self.lattice();
        let members = f.to_vec();
        if members.len() > SUBFAMILY_SCAN {
            // Closure under binary meets already places every finite
            // subfamily meet in the filter.
            return self.is_filter(f);
        }
        let full = if members.is_empty() { 0 } else { (1u64 << members.len()) - 1 };
        submasks(full).all(|sub| {
            let fam = BitSet::from_indices(l.len(), mask_iter(sub).map(|k| members[k]));
            !qualifies(&fam) || f.contains(l.big_meet(fam.iter()))
        })
    }

    /// Filters closed under exact meets of their members.
    pub fn exact_filters(&self) -> FilterSet {
        FilterSet::from_vec(
            self.filters()
                .filters
                .into_iter()
                .filter(|f| self.closed_under_meets(f, |fam| self.lattice().is_exact_meet(fam)))
                .collect(),
        )
    }

    /// Filters closed under strongly exact meets of their members.
    pub fn strongly_exact_filters(&self) -> FilterSet {
        FilterSet::from_vec(
            self.filters()
                .filters
                .into_iter()
                .filter(|f| self.closed_under_meets(f, |fam| self.is_strongly_exact_meet(fam)))
                .collect(),
        )
    }
}

impl SublocaleCoframe {
    /// `φ(F) = {x ∈ L | F ⊆ 𝔬(x)}` for a member of this coframe.
    pub fn phi(&self, i: usize) -> BitSet {
        let frame = self.frame();
        let s = self.get(i);
        BitSet::from_indices(
            frame.len(),
            frame
                .lattice()
                .elements()
                .filter(|&x| s.is_subset(self.get(self.open(x)))),
        )
    }

    /// `ker(S) = φ(fit(S))`, the set of elements the quotient map onto `S`
    /// sends to `1`.
    pub fn ker(&self, i: usize) -> BitSet {
        let fitted = self.fit(i);
        debug_assert!(self.kind() == Kind::Fitted || self.is_fitted(fitted));
        self.phi(fitted)
    }
}
