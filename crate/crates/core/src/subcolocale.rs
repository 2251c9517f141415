//! Subcolocales of an arbitrary finite coframe: membership, conuclei,
//! join closure, generated subcolocales, codensity and brute-force
//! enumeration.

use alloc::vec::Vec;

use crate::bitset::{mask_iter, BitSet};
use crate::error::{Error, Result};
use crate::lattice::Coframe;

/// A join-closed, difference-stable set of host indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subcolocale {
    members: BitSet,
}

impl Subcolocale {
    pub fn new(host: &Coframe, members: BitSet) -> Result<Self> {
        if is_subcolocale(host, &members) {
            Ok(Subcolocale { members })
        } else {
            Err(Error::NotASubcolocale)
        }
    }

    /// The whole host.
    pub fn whole(host: &Coframe) -> Self {
        Subcolocale { members: BitSet::full(host.len()) }
    }

    /// The trivial subcolocale `{0}`.
    pub fn trivial(host: &Coframe) -> Self {
        Subcolocale { members: BitSet::from_indices(host.len(), [host.bottom()]) }
    }

    pub(crate) fn unchecked(members: BitSet) -> Self {
        Subcolocale { members }
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn into_members(self) -> BitSet {
        self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset(&self, other: &Subcolocale) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter()
    }

    /// `ν_D(c)`, the largest member below `c`.
    pub fn conucleus(&self, host: &Coframe, c: usize) -> usize {
        let l = host.lattice();
        l.big_join(self.members.iter().filter(|&d| l.leq(d, c)))
    }

    pub fn conucleus_table(&self, host: &Coframe) -> Vec<usize> {
        host.lattice().elements().map(|c| self.conucleus(host, c)).collect()
    }

    /// Binary meet inside the subcolocale, `ν_D(a ∧ b)`.
    pub fn meet_in(&self, host: &Coframe, a: usize, b: usize) -> usize {
        self.conucleus(host, host.lattice().meet(a, b))
    }

    pub fn is_codense(&self, host: &Coframe) -> bool {
        self.members.contains(host.top())
    }
}

/// Closed under all joins (the empty join included) and under `d ∖ c`.
pub fn is_subcolocale(host: &Coframe, members: &BitSet) -> bool {
    let l = host.lattice();
    members.contains(l.bottom())
        && members.iter().all(|a| members.iter().all(|b| members.contains(l.join(a, b))))
        && members
            .iter()
            .all(|d| l.elements().all(|c| members.contains(host.difference(d, c))))
}

/// `𝒥(X)`: the closure of `x` under all joins, the empty join included.
pub fn join_closure(host: &Coframe, x: &BitSet) -> BitSet {
    let l = host.lattice();
    let mut acc = x.clone();
    acc.insert(l.bottom());
    let mut frontier: Vec<usize> = acc.to_vec();
    while let Some(a) = frontier.pop() {
        let current: Vec<usize> = acc.to_vec();
        for b in current {
            let j = l.join(a, b);
            if acc.insert(j) {
                frontier.push(j);
            }
        }
    }
    acc
}

/// `𝒮(X)`: alternates join closure and closure under differences until a
/// fixpoint is reached.
pub fn generated_subcolocale(host: &Coframe, x: &BitSet) -> Subcolocale {
    let l = host.lattice();
    let mut acc = join_closure(host, x);
    loop {
        let mut next = acc.clone();
        for d in acc.iter() {
            for c in l.elements() {
                next.insert(host.difference(d, c));
            }
        }
        let next = join_closure(host, &next);
        if next == acc {
            return Subcolocale::unchecked(acc);
        }
        acc = next;
    }
}

/// Every subcolocale of `host` accepted by `keep`, in increasing order of
/// the member bit pattern. Candidates must contain the bottom and be join
/// closed before the difference condition is tested.
pub fn enumerate_subcolocales<F: FnMut(&Subcolocale) -> bool>(
    host: &Coframe,
    limit: usize,
    mut keep: F,
) -> Result<Vec<Subcolocale>> {
    let m = host.len();
    if m > limit || m >= 32 {
        return Err(Error::SizeLimit { what: "subcolocale enumeration host", limit });
    }
    let l = host.lattice();
    let bottom = 1u64 << l.bottom();
    let diff_mask: Vec<u64> = (0..m)
        .map(|d| (0..m).fold(0, |acc, c| acc | 1 << host.difference(d, c)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << m) {
        if mask & bottom == 0 {
            continue;
        }
        let joins_closed = mask_iter(mask)
            .all(|a| mask_iter(mask).all(|b| mask >> l.join(a, b) & 1 == 1));
        if !joins_closed || !mask_iter(mask).all(|d| diff_mask[d] & !mask == 0) {
            continue;
        }
        let s = Subcolocale::unchecked(BitSet::from_mask(m, mask));
        if keep(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{boolean, chain};
    use crate::lattice::Coframe;

    #[test]
    fn whole_and_trivial_are_subcolocales() {
        let host = Coframe::new(boolean(2)).unwrap();
        assert!(is_subcolocale(&host, Subcolocale::whole(&host).members()));
        assert!(is_subcolocale(&host, Subcolocale::trivial(&host).members()));
        assert!(!is_subcolocale(&host, &BitSet::from_indices(4, [3])));
    }

    #[test]
    fn conucleus_extremes() {
        let host = Coframe::new(chain(4)).unwrap();
        let whole = Subcolocale::whole(&host);
        let triv = Subcolocale::trivial(&host);
        for c in 0..4 {
            assert_eq!(whole.conucleus(&host, c), c);
            assert_eq!(triv.conucleus(&host, c), 0);
        }
    }

    #[test]
    fn boolean_subcolocales_are_principal_downsets() {
        let host = Coframe::new(boolean(2)).unwrap();
        let all = enumerate_subcolocales(&host, 16, |_| true).unwrap();
        assert_eq!(all.len(), 4);
        for s in &all {
            let top = host.lattice().big_join(s.iter());
            assert_eq!(s.members(), host.lattice().down_set(top));
        }
    }

    #[test]
    fn single_element_host() {
        let host = Coframe::new(chain(1)).unwrap();
        let all = enumerate_subcolocales(&host, 16, |_| true).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].is_codense(&host));
    }

    #[test]
    fn generated_from_empty_is_trivial() {
        let host = Coframe::new(chain(3)).unwrap();
        assert_eq!(generated_subcolocale(&host, &BitSet::new(3)), Subcolocale::trivial(&host));
        let top = BitSet::from_indices(3, [2]);
        assert_eq!(generated_subcolocale(&host, &top).members(), &BitSet::from_indices(3, [0, 2]));
        let mid = BitSet::from_indices(3, [1]);
        assert_eq!(generated_subcolocale(&host, &mid).members(), &BitSet::from_indices(3, [0, 1]));
    }

    #[test]
    fn enumeration_respects_limit() {
        let host = Coframe::new(chain(5)).unwrap();
        assert!(matches!(enumerate_subcolocales(&host, 4, |_| true), Err(Error::SizeLimit { .. })));
    }
}
