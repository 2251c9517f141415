//! Subcolocale calculus on `S(L)` and `S_o(L)`: the distinguished
//! subcolocales, properness, `σ`, `Δ`, saturation, essentiality and the
//! adjunction `Δ ⊣ fit[−]`.

use alloc::vec::Vec;

use crate::bitset::{subsets, BitSet};
use crate::error::{Error, Result};
use crate::lattice::{Frame, Lattice};
use crate::precongruence::Relation;
use crate::subcolocale::{enumerate_subcolocales, generated_subcolocale, is_subcolocale, join_closure, Subcolocale};
use crate::sublocale::{Limits, SublocaleCoframe};

/// The coframe a subcolocale lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Host {
    /// `S(L)`
    Sublocales,
    /// `S_o(L)`
    Fitted,
}

/// Which subcolocales an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    All,
    /// Subcolocales containing the host top; "dense" elsewhere means this.
    Codense,
    /// Proper subcolocales; only meaningful over `S_o(L)`.
    Proper,
}

/// Outcome of the two properness tests on a subcolocale of `S_o(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Properness {
    pub contains_opens: bool,
    /// Every join of opens distributes over binary meets in the subcolocale.
    pub exact_open_joins: bool,
    /// Every `≤_F` is a frame precongruence.
    pub precongruences: bool,
}

impl Properness {
    pub fn agree(&self) -> bool {
        self.exact_open_joins == self.precongruences
    }

    pub fn is_proper(&self) -> bool {
        self.contains_opens && self.exact_open_joins && self.precongruences
    }
}

/// Outcome of the essentiality tests on a codense subcolocale of `S(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Essentiality {
    /// `D = 𝒥({F ∩ 𝔠(z) | F ∈ Sat(D)})`.
    pub by_saturation: bool,
    /// `D = 𝒮(Sat(D))` by the generic closure fixpoint.
    pub by_generic_closure: bool,
    /// `D ⊆ Δ(fit[D])`.
    pub by_delta: bool,
}

impl Essentiality {
    pub fn agree(&self) -> bool {
        self.by_saturation == self.by_generic_closure && self.by_saturation == self.by_delta
    }

    pub fn is_essential(&self) -> bool {
        self.by_saturation && self.by_generic_closure && self.by_delta
    }
}

/// A frame with `S(L)` and `S_o(L)` materialized and cross-indexed.
#[derive(Clone, Debug)]
pub struct Workbench {
    limits: Limits,
    sl: SublocaleCoframe,
    so: SublocaleCoframe,
    sl_to_so: Vec<usize>,
    so_to_sl: Vec<usize>,
}

impl Workbench {
    pub fn new(frame: &Frame, limits: Limits) -> Result<Self> {
        let sl = SublocaleCoframe::enumerate(frame, &limits)?;
        let so = SublocaleCoframe::fitted(frame)?;
        let sl_to_so = (0..sl.len()).map(|i| so.idx(&frame.fit_set(sl.get(i)))).collect();
        let so_to_sl = so.elements().iter().map(|f| sl.idx(f)).collect();
        Ok(Workbench { limits, sl, so, sl_to_so, so_to_sl })
    }

    pub fn from_lattice(lattice: Lattice, limits: Limits) -> Result<Self> {
        Self::new(&Frame::new(lattice)?, limits)
    }

    pub fn frame(&self) -> &Frame {
        self.sl.frame()
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    /// `S(L)`.
    pub fn sl(&self) -> &SublocaleCoframe {
        &self.sl
    }

    /// `S_o(L)`.
    pub fn so(&self) -> &SublocaleCoframe {
        &self.so
    }

    /// `fit` as a map from `S(L)` indices to `S_o(L)` indices.
    pub fn fit_to_so(&self, s: usize) -> usize {
        self.sl_to_so[s]
    }

    /// The `S(L)` index of a fitted sublocale.
    pub fn so_to_sl(&self, f: usize) -> usize {
        self.so_to_sl[f]
    }

    fn sl_index(&self, s: &BitSet) -> usize {
        self.sl.idx(s)
    }

    fn sl_members<I: IntoIterator<Item = usize>>(&self, items: I) -> BitSet {
        BitSet::from_indices(self.sl.len(), items)
    }

    /// `S ∩ 𝔬(a) ∩ 𝔠(b)` as an `S(L)` index.
    fn cut(&self, s: usize, a: usize, b: usize) -> usize {
        let frame = self.frame();
        let mut x = self.sl.get(s).intersection(self.sl.get(self.sl.open(a)));
        x.intersect_with(&frame.closed_sublocale(b));
        self.sl_index(&x)
    }

    fn cap_closed(&self, s: usize, b: usize) -> usize {
        let x = self.sl.get(s).intersection(&self.frame().closed_sublocale(b));
        self.sl_index(&x)
    }

    fn cap_open(&self, s: usize, a: usize) -> usize {
        let x = self.sl.get(s).intersection(self.sl.get(self.sl.open(a)));
        self.sl_index(&x)
    }

    // ---- membership criteria ----

    /// Subcolocale of `S(L)` by the raw definition.
    pub fn is_subcolocale_of_sl(&self, members: &BitSet) -> bool {
        is_subcolocale(self.sl.coframe(), members)
    }

    /// Join closed and stable under `− ∩ 𝔬(x)` and `− ∩ 𝔠(x)`.
    pub fn sl_intersection_criterion(&self, members: &BitSet) -> bool {
        let l = self.frame().lattice();
        let host = self.sl.lattice();
        members.contains(host.bottom())
            && members.iter().all(|a| members.iter().all(|b| members.contains(host.join(a, b))))
            && members.iter().all(|s| {
                l.elements()
                    .all(|x| members.contains(self.cap_open(s, x)) && members.contains(self.cap_closed(s, x)))
            })
    }

    /// Subcolocale of `S_o(L)` by the raw definition.
    pub fn is_subcolocale_of_so(&self, members: &BitSet) -> bool {
        is_subcolocale(self.so.coframe(), members)
    }

    /// Join closed in `S_o(L)` and stable under `fit(− ∩ 𝔠(x))`.
    pub fn so_fitting_criterion(&self, members: &BitSet) -> bool {
        let frame = self.frame();
        let host = self.so.lattice();
        members.contains(host.bottom())
            && members.iter().all(|a| members.iter().all(|b| members.contains(host.join(a, b))))
            && members.iter().all(|f| {
                frame.lattice().elements().all(|x| {
                    let cut = self.so.get(f).intersection(&frame.closed_sublocale(x));
                    members.contains(self.so.idx(&frame.fit_set(&cut)))
                })
            })
    }

    // ---- generated subcolocales ----

    /// `𝒮(X)` in `S(L)` as `𝒥({X ∩ 𝔬(a) ∩ 𝔠(b)})`.
    pub fn generated_by_formula(&self, x: &BitSet) -> Subcolocale {
        let l = self.frame().lattice();
        let mut pieces = BitSet::new(self.sl.len());
        for s in x.iter() {
            for a in l.elements() {
                for b in l.elements() {
                    pieces.insert(self.cut(s, a, b));
                }
            }
        }
        Subcolocale::unchecked(join_closure(self.sl.coframe(), &pieces))
    }

    /// `𝒮(X)` in `S(L)` by alternating join and difference closure.
    pub fn generated(&self, x: &BitSet) -> Subcolocale {
        generated_subcolocale(self.sl.coframe(), x)
    }

    // ---- distinguished subcolocales ----

    /// `S_b(L)`: joins of the complemented sublocales `𝔠(x) ∩ 𝔬(y)`.
    pub fn sb(&self) -> Subcolocale {
        let l = self.frame().lattice();
        let gens = self.sl_members(
            l.elements()
                .flat_map(|x| l.elements().map(move |y| (x, y)))
                .map(|(x, y)| self.cut(self.sl.top(), y, x)),
        );
        Subcolocale::unchecked(join_closure(self.sl.coframe(), &gens))
    }

    /// `S_sp(L)`: joins of the two-element sublocales `𝔟(p) = {p, 1}`.
    pub fn ssp(&self) -> Subcolocale {
        let frame = self.frame();
        let gens = self.sl_members(frame.primes().iter().map(|p| self.sl_index(&frame.b_sublocale(p))));
        Subcolocale::unchecked(join_closure(self.sl.coframe(), &gens))
    }

    /// `S_E(L)`: all exact sublocales; checked to be a subcolocale.
    pub fn se(&self) -> Result<Subcolocale> {
        let frame = self.frame();
        let exact = frame.exact_meet_families();
        let members = self.sl_members(
            (0..self.sl.len()).filter(|&s| frame.is_exact_sublocale_with(self.sl.get(s), &exact)),
        );
        Subcolocale::new(self.sl.coframe(), members)
    }

    pub fn is_exact_sublocale(&self, s: usize) -> bool {
        self.frame().is_exact_sublocale(self.sl.get(s))
    }

    // ---- fitting of subcolocales ----

    /// `fit[D]` for a codense subcolocale `D ⊆ S(L)`.
    pub fn fit_image(&self, d: &Subcolocale) -> Result<Subcolocale> {
        if !d.is_codense(self.sl.coframe()) {
            return Err(Error::NotCodense);
        }
        let members = BitSet::from_indices(self.so.len(), d.iter().map(|s| self.sl_to_so[s]));
        Ok(Subcolocale::unchecked(members))
    }

    pub fn contains_opens(&self, f_sub: &Subcolocale) -> bool {
        self.frame().lattice().elements().all(|x| f_sub.contains(self.so.open(x)))
    }

    /// `F ∧^𝔉 G`.
    fn meet_in(&self, f_sub: &Subcolocale, f: usize, g: usize) -> usize {
        f_sub.meet_in(self.so.coframe(), f, g)
    }

    /// Every join of opens `⋁^𝔉 𝔬(xᵢ)` distributes over binary meets in
    /// `f_sub`. Exhaustive over all families of elements.
    pub fn has_exact_open_joins(&self, f_sub: &Subcolocale) -> bool {
        let l = self.frame().lattice();
        let host = self.so.lattice();
        subsets(l.len()).all(|mask| {
            let opens: Vec<usize> = crate::bitset::mask_iter(mask).map(|x| self.so.open(x)).collect();
            let joined = host.big_join(opens.iter().copied());
            f_sub.iter().all(|g| {
                self.meet_in(f_sub, joined, g)
                    == host.big_join(opens.iter().map(|&o| self.meet_in(f_sub, o, g)))
            })
        })
    }

    /// `≤_F = {(x, y) | F ∧^𝔉 𝔬(x) ⊆ 𝔬(y)}`.
    pub fn leq_f(&self, f_sub: &Subcolocale, f: usize) -> Result<Relation> {
        if !self.contains_opens(f_sub) {
            return Err(Error::MissingOpens);
        }
        if !f_sub.contains(f) {
            return Err(Error::NotAMember(f));
        }
        let n = self.frame().len();
        let cut: Vec<usize> = (0..n).map(|x| self.meet_in(f_sub, f, self.so.open(x))).collect();
        Ok(Relation::from_fn(n, |x, y| self.so.leq(cut[x], self.so.open(y))))
    }

    pub fn properness(&self, f_sub: &Subcolocale) -> Properness {
        if !self.contains_opens(f_sub) {
            return Properness { contains_opens: false, exact_open_joins: false, precongruences: false };
        }
        let frame = self.frame();
        let precongruences = f_sub
            .iter()
            .all(|f| self.leq_f(f_sub, f).map(|r| r.is_precongruence(frame)).unwrap_or(false));
        Properness {
            contains_opens: true,
            exact_open_joins: self.has_exact_open_joins(f_sub),
            precongruences,
        }
    }

    pub fn is_proper(&self, f_sub: &Subcolocale) -> bool {
        self.properness(f_sub).is_proper()
    }

    // ---- σ and Δ ----

    /// `σ(F) = ⋂ {𝔠(x) ∨ 𝔬(y) | x ≤_F y}` as an `S(L)` index, validated
    /// against `fit(σ(F) ∩ 𝔬(x)) = F ∧^𝔉 𝔬(x)` for every `x`.
    pub fn sigma(&self, f_sub: &Subcolocale, f: usize) -> Result<usize> {
        let frame = self.frame();
        let rel = self.leq_f(f_sub, f)?;
        let mut s = BitSet::full(frame.len());
        for (x, y) in rel.pairs() {
            let piece = frame.sublocale_join([&frame.closed_sublocale(x), &frame.open_sublocale(y)]);
            s.intersect_with(&piece);
        }
        let sigma = self.sl_index(&s);
        for x in frame.lattice().elements() {
            let lhs = self.fit_to_so(self.cap_open(sigma, x));
            if lhs != self.meet_in(f_sub, f, self.so.open(x)) {
                return Err(Error::NotProper);
            }
        }
        Ok(sigma)
    }

    /// `σ[𝔉]` as a set of `S(L)` indices.
    pub fn sigma_image(&self, f_sub: &Subcolocale) -> Result<BitSet> {
        let mut out = BitSet::new(self.sl.len());
        for f in f_sub.iter() {
            out.insert(self.sigma(f_sub, f)?);
        }
        Ok(out)
    }

    fn require_proper(&self, f_sub: &Subcolocale) -> Result<()> {
        if !self.contains_opens(f_sub) {
            return Err(Error::MissingOpens);
        }
        if !self.is_proper(f_sub) {
            return Err(Error::NotProper);
        }
        Ok(())
    }

    /// `Δ(𝔉) = 𝒮(σ[𝔉])`, generated through the closed formula on `S(L)`.
    pub fn delta(&self, f_sub: &Subcolocale) -> Result<Subcolocale> {
        self.require_proper(f_sub)?;
        Ok(self.generated_by_formula(&self.sigma_image(f_sub)?))
    }

    /// `Δ(𝔉)` as `{⋁ᵢ σ(Fᵢ) ∩ 𝔠(xᵢ)}`.
    pub fn delta_concrete(&self, f_sub: &Subcolocale) -> Result<Subcolocale> {
        self.require_proper(f_sub)?;
        let sig = self.sigma_image(f_sub)?;
        let l = self.frame().lattice();
        let pieces = self.sl_members(sig.iter().flat_map(|s| l.elements().map(move |x| self.cap_closed(s, x))));
        Ok(Subcolocale::unchecked(join_closure(self.sl.coframe(), &pieces)))
    }

    // ---- saturation and essentiality ----

    fn require_codense(&self, d: &Subcolocale) -> Result<()> {
        if d.is_codense(self.sl.coframe()) {
            Ok(())
        } else {
            Err(Error::NotCodense)
        }
    }

    /// `Sat(D) = {ν_D(⋂ᵢ 𝔬(xᵢ))}`. The intersections of opens are exactly
    /// the members of `S_o(L)`.
    pub fn saturated_elements(&self, d: &Subcolocale) -> Result<BitSet> {
        self.require_codense(d)?;
        let host = self.sl.coframe();
        Ok(self.sl_members(self.so_to_sl.iter().map(|&f| d.conucleus(host, f))))
    }

    /// `𝒮(Sat(D))` as `𝒥({F ∩ 𝔠(z) | F ∈ Sat(D)})`.
    pub fn sat_closure(&self, d: &Subcolocale) -> Result<Subcolocale> {
        let sat = self.saturated_elements(d)?;
        let l = self.frame().lattice();
        let pieces = self.sl_members(sat.iter().flat_map(|s| l.elements().map(move |z| self.cap_closed(s, z))));
        Ok(Subcolocale::unchecked(join_closure(self.sl.coframe(), &pieces)))
    }

    pub fn essentiality(&self, d: &Subcolocale) -> Result<Essentiality> {
        self.require_codense(d)?;
        let by_saturation = self.sat_closure(d)? == *d;
        let by_generic_closure = self.generated(&self.saturated_elements(d)?) == *d;
        let by_delta = d.is_subset(&self.delta(&self.fit_image(d)?)?);
        Ok(Essentiality { by_saturation, by_generic_closure, by_delta })
    }

    pub fn is_essential(&self, d: &Subcolocale) -> Result<bool> {
        Ok(self.essentiality(d)?.is_essential())
    }

    /// Whether `Δ(𝔉) ⊆ D ⇔ 𝔉 ⊆ fit[D]` for this pair.
    pub fn adjunction_check(&self, f_sub: &Subcolocale, d: &Subcolocale) -> Result<bool> {
        let left = self.delta(f_sub)?.is_subset(d);
        let right = f_sub.is_subset(&self.fit_image(d)?);
        Ok(left == right)
    }

    // ---- enumeration ----

    pub fn enumerate(&self, host: Host, filter: Filter) -> Result<Vec<Subcolocale>> {
        let limit = self.limits.max_subcolocale_host;
        match (host, filter) {
            (Host::Sublocales, Filter::Proper) => {
                Err(Error::Unsupported("properness is defined for subcolocales of S_o(L)"))
            }
            (Host::Sublocales, Filter::All) => enumerate_subcolocales(self.sl.coframe(), limit, |_| true),
            (Host::Sublocales, Filter::Codense) => {
                let co = self.sl.coframe();
                enumerate_subcolocales(co, limit, |d| d.is_codense(co))
            }
            (Host::Fitted, Filter::All) => enumerate_subcolocales(self.so.coframe(), limit, |_| true),
            (Host::Fitted, Filter::Codense) => {
                let co = self.so.coframe();
                enumerate_subcolocales(co, limit, |d| d.is_codense(co))
            }
            (Host::Fitted, Filter::Proper) => {
                enumerate_subcolocales(self.so.coframe(), limit, |f| self.is_proper(f))
            }
        }
    }

    /// Runs the adjunction `Δ ⊣ fit[−]` over every codense subcolocale of
    /// `S(L)` and every proper subcolocale of `S_o(L)`.
    pub fn verify_main_adjunction(&self) -> Result<AdjunctionReport> {
        let codense = self.enumerate(Host::Sublocales, Filter::Codense)?;
        let with_opens = enumerate_subcolocales(
            self.so.coframe(),
            self.limits.max_subcolocale_host,
            |f| self.contains_opens(f),
        )?;
        let mut violations = Vec::new();
        let mut proper = Vec::new();
        for f in &with_opens {
            let p = self.properness(f);
            if !p.agree() {
                violations.push(Violation::PropernessRoutesDisagree(f.clone()));
            }
            if p.is_proper() {
                proper.push(f.clone());
            }
        }
        let mut essential = Vec::new();
        for d in &codense {
            let e = self.essentiality(d)?;
            if !e.agree() {
                violations.push(Violation::EssentialityRoutesDisagree(d.clone()));
            }
            if e.is_essential() {
                essential.push(d.clone());
            }
            let image = self.fit_image(d)?;
            if !self.is_subcolocale_of_so(image.members()) || !self.is_proper(&image) {
                violations.push(Violation::FitImageNotProper(d.clone()));
            }
            let back = self.delta(&image)?;
            if !back.is_subset(d) {
                violations.push(Violation::CounitFails(d.clone()));
            }
            if (back == *d) != e.is_essential() {
                violations.push(Violation::EssentialNotFixed(d.clone()));
            }
        }
        let mut pairs_checked = 0;
        for f in &proper {
            let delta = self.delta(f)?;
            if delta != self.delta_concrete(f)? {
                violations.push(Violation::DeltaRoutesDisagree(f.clone()));
            }
            if self.fit_image(&delta)? != *f {
                violations.push(Violation::FitDeltaNotIdentity(f.clone()));
            }
            if !essential.contains(&delta) {
                violations.push(Violation::DeltaNotEssential(f.clone()));
            }
            for d in &codense {
                pairs_checked += 1;
                if !self.adjunction_check(f, d)? {
                    violations.push(Violation::Adjunction { proper: f.clone(), codense: d.clone() });
                }
            }
        }
        if proper.len() != essential.len() {
            violations.push(Violation::CountMismatch { proper: proper.len(), essential: essential.len() });
        }
        Ok(AdjunctionReport { codense, proper, essential, pairs_checked, violations })
    }
}

/// A failed instance of the adjunction theorem or of a double-entry check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Adjunction { proper: Subcolocale, codense: Subcolocale },
    FitDeltaNotIdentity(Subcolocale),
    DeltaNotEssential(Subcolocale),
    DeltaRoutesDisagree(Subcolocale),
    FitImageNotProper(Subcolocale),
    CounitFails(Subcolocale),
    EssentialNotFixed(Subcolocale),
    PropernessRoutesDisagree(Subcolocale),
    EssentialityRoutesDisagree(Subcolocale),
    CountMismatch { proper: usize, essential: usize },
}

impl core::fmt::Display for Violation {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Violation::Adjunction { proper, codense } => write!(
                f,
                "Δ(F) ⊆ D and F ⊆ fit[D] disagree for F = {} (S_o indices), D = {} (S indices)",
                proper.members(),
                codense.members()
            ),
            Violation::FitDeltaNotIdentity(s) => write!(f, "fit[Δ(F)] ≠ F for F = {}", s.members()),
            Violation::DeltaNotEssential(s) => write!(f, "Δ(F) is not essential for F = {}", s.members()),
            Violation::DeltaRoutesDisagree(s) => {
                write!(f, "the two Δ formulas disagree for F = {}", s.members())
            }
            Violation::FitImageNotProper(s) => write!(f, "fit[D] is not proper for D = {}", s.members()),
            Violation::CounitFails(s) => write!(f, "Δ(fit[D]) ⊄ D for D = {}", s.members()),
            Violation::EssentialNotFixed(s) => {
                write!(f, "Δ(fit[D]) = D does not match essentiality for D = {}", s.members())
            }
            Violation::PropernessRoutesDisagree(s) => {
                write!(f, "properness criteria disagree for F = {}", s.members())
            }
            Violation::EssentialityRoutesDisagree(s) => {
                write!(f, "essentiality criteria disagree for D = {}", s.members())
            }
            Violation::CountMismatch { proper, essential } => {
                write!(f, "{proper} proper subcolocales but {essential} essential ones")
            }
        }
    }
}

/// Result of [`Workbench::verify_main_adjunction`].
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    pub codense: Vec<Subcolocale>,
    pub proper: Vec<Subcolocale>,
    pub essential: Vec<Subcolocale>,
    pub pairs_checked: usize,
    pub violations: Vec<Violation>,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}
