//! Frame homomorphisms between finite frames, quotient maps onto
//! sublocales, and the down-set frame `𝒟(L)` with `ε(D) = ⋁ D`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::bitset::{mask_iter, BitSet};
use crate::error::{Error, Result};
use crate::generators::downsets_of_poset;
use crate::lattice::{Frame, Lattice};

/// A map of element indices preserving `0`, `1`, binary meets and binary
/// joins, hence all finite meets and all joins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMap {
    source: Frame,
    target: Frame,
    map: Vec<usize>,
}

impl FrameMap {
    pub fn new(source: Frame, target: Frame, map: Vec<usize>) -> Result<Self> {
        let (s, t) = (source.lattice(), target.lattice());
        if map.len() != s.len() {
            return Err(Error::NotAFrameMap("map length differs from the source size"));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= t.len()) {
            return Err(Error::IndexOutOfRange { index: bad, len: t.len() });
        }
        if map[s.bottom()] != t.bottom() {
            return Err(Error::NotAFrameMap("bottom is not preserved"));
        }
        if map[s.top()] != t.top() {
            return Err(Error::NotAFrameMap("top is not preserved"));
        }
        for x in s.elements() {
            for y in s.elements() {
                if map[s.meet(x, y)] != t.meet(map[x], map[y]) {
                    return Err(Error::NotAFrameMap("binary meets are not preserved"));
                }
                if map[s.join(x, y)] != t.join(map[x], map[y]) {
                    return Err(Error::NotAFrameMap("binary joins are not preserved"));
                }
            }
        }
        Ok(FrameMap { source, target, map })
    }

    pub fn identity(frame: &Frame) -> Self {
        FrameMap { source: frame.clone(), target: frame.clone(), map: frame.lattice().elements().collect() }
    }

    pub fn source(&self) -> &Frame {
        &self.source
    }

    pub fn target(&self) -> &Frame {
        &self.target
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = BitSet::new(self.target.len());
        self.map.iter().for_each(|&y| {
            hit.insert(y);
        });
        hit.len() == self.target.len()
    }

    /// `f_*(y) = ⋁ {x | f(x) ≤ y}`.
    pub fn right_adjoint(&self, y: usize) -> usize {
        let (s, t) = (self.source.lattice(), self.target.lattice());
        s.big_join(s.elements().filter(|&x| t.leq(self.map[x], y)))
    }

    /// The sublocale `f_*[M]` of the source.
    pub fn induced_sublocale(&self) -> BitSet {
        BitSet::from_indices(self.source.len(), self.target.lattice().elements().map(|y| self.right_adjoint(y)))
    }

    /// Whether `f(⋀ fam) = ⋀ f[fam]` for every family of the source.
    pub fn preserves_all_meets(&self) -> bool {
        let (s, t) = (self.source.lattice(), self.target.lattice());
        family_meets(s).iter().enumerate().all(|(mask, &m)| {
            self.map[m] == t.big_meet(mask_iter(mask as u64).map(|x| self.map[x]))
        })
    }

    /// Whether every exact meet of the source is preserved and sent to an
    /// exact meet of the target.
    pub fn is_exact(&self) -> bool {
        let (s, t) = (self.source.lattice(), self.target.lattice());
        let mut seen: BTreeMap<BitSet, bool> = BTreeMap::new();
        s.exact_meet_masks().into_iter().all(|(mask, meet)| {
            let image = BitSet::from_indices(t.len(), mask_iter(mask).map(|x| self.map[x]));
            self.map[meet] == t.big_meet(image.iter())
                && *seen.entry(image).or_insert_with_key(|img| t.is_exact_meet(img))
        })
    }

    /// `g ∘ f`.
    pub fn then(&self, g: &FrameMap) -> Result<FrameMap> {
        if self.target != g.source {
            return Err(Error::NotAFrameMap("maps do not compose"));
        }
        Ok(FrameMap {
            source: self.source.clone(),
            target: g.target.clone(),
            map: self.map.iter().map(|&y| g.map[y]).collect(),
        })
    }
}

/// Meet of every family of a lattice, indexed by mask. Only for `n ≤ 26`.
fn family_meets(l: &Lattice) -> Vec<usize> {
    assert!(l.len() <= 26, "family tables need n <= 26");
    let size = 1usize << l.len();
    let mut meets = alloc::vec![l.top(); size];
    for mask in 1..size {
        meets[mask] = l.meet(meets[mask & (mask - 1)], mask.trailing_zeros() as usize);
    }
    meets
}

/// The quotient `a ↦ ν_S(a)` of a frame onto one of its sublocales.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surjection {
    map: FrameMap,
    members: Vec<usize>,
}

impl Surjection {
    pub fn map(&self) -> &FrameMap {
        &self.map
    }

    /// The sublocale as a frame, with the order inherited from the source.
    pub fn target(&self) -> &Frame {
        self.map.target()
    }

    /// Source element represented by a target index.
    pub fn member(&self, k: usize) -> usize {
        self.members[k]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// `ν_S(a)` as a source element.
    pub fn nucleus(&self, a: usize) -> usize {
        self.members[self.map.apply(a)]
    }
}

/// The frame surjection `L → S` of a sublocale `S`; target index `k` is the
/// `k`-th smallest member index of `S`.
pub fn surjection_of(frame: &Frame, s: &BitSet) -> Result<Surjection> {
    if !frame.is_sublocale(s) {
        return Err(Error::NotASublocale);
    }
    let l = frame.lattice();
    let members = s.to_vec();
    let target = Frame::new(Lattice::from_order(members.len(), |i, j| l.leq(members[i], members[j]))?)?;
    let position = |x: usize| members.binary_search(&x).expect("nucleus lands in S");
    let map = l.elements().map(|a| position(frame.nucleus(s, a))).collect();
    Ok(Surjection { map: FrameMap::new(frame.clone(), target, map)?, members })
}

/// `𝒟(L)` with the surjection `ε(D) = ⋁ D`.
#[derive(Clone, Debug)]
pub struct DownsetFrame {
    /// Element `k` of `𝒟(L)` is the down-set with mask `downsets[k]`.
    pub downsets: Vec<u64>,
    pub epsilon: FrameMap,
}

impl DownsetFrame {
    pub fn frame(&self) -> &Frame {
        self.epsilon.source()
    }

    /// `ε_*[L] = {↓x | x ∈ L}`.
    pub fn induced_sublocale(&self) -> BitSet {
        self.epsilon.induced_sublocale()
    }

    pub fn induced_is_exact(&self) -> bool {
        self.frame().is_exact_sublocale(&self.induced_sublocale())
    }
}

/// Builds `𝒟(L)` for `L` seen as a poset. The empty down-set is included.
pub fn downset_frame(frame: &Frame, max_size: usize) -> Result<DownsetFrame> {
    let l = frame.lattice();
    if l.len() > 20 {
        return Err(Error::SizeLimit { what: "poset for down-set enumeration", limit: 20 });
    }
    let below: Vec<(usize, usize)> = l.covers();
    let (lattice, downsets) = downsets_of_poset(l.len(), &below)?;
    if lattice.len() > max_size {
        return Err(Error::SizeLimit { what: "down-set frame", limit: max_size });
    }
    let dframe = Frame::new(lattice)?;
    let map = downsets.iter().map(|&d| l.big_join(mask_iter(d))).collect();
    let epsilon = FrameMap::new(dframe, frame.clone(), map)?;
    Ok(DownsetFrame { downsets, epsilon })
}
