//! Raney extensions `(L, 𝔉)` and strictly zero-dimensional biframes
//! `(L, 𝒟)` in pair form, the maps `fit` and `Δ` between them, and the
//! lifting criteria for frame maps.

use alloc::vec::Vec;

use crate::calculus::Workbench;
use crate::error::{Error, Result};
use crate::frame_map::{surjection_of, FrameMap};
use crate::lift::{search_lift, LiftProblem, LiftVerdict};
use crate::subcolocale::{is_subcolocale, Subcolocale};

/// `(L, 𝔉)` with `𝔉 ⊆ S_o(L)` a subcolocale containing every open.
#[derive(Clone, Debug)]
pub struct RaneyExtension<'w> {
    bench: &'w Workbench,
    sub: Subcolocale,
    proper: bool,
}

impl<'w> RaneyExtension<'w> {
    pub fn new(bench: &'w Workbench, sub: Subcolocale) -> Result<Self> {
        if !is_subcolocale(bench.so().coframe(), sub.members()) {
            return Err(Error::NotASubcolocale);
        }
        if !bench.contains_opens(&sub) {
            return Err(Error::MissingOpens);
        }
        let proper = bench.is_proper(&sub);
        Ok(RaneyExtension { bench, sub, proper })
    }

    pub fn bench(&self) -> &'w Workbench {
        self.bench
    }

    pub fn sub(&self) -> &Subcolocale {
        &self.sub
    }

    pub fn is_proper(&self) -> bool {
        self.proper
    }
}

impl PartialEq for RaneyExtension<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.bench, other.bench) && self.sub == other.sub
    }
}

/// `(L, 𝒟)` with `𝒟 ⊆ S(L)` a codense subcolocale.
#[derive(Clone, Debug)]
pub struct Szdbf<'w> {
    bench: &'w Workbench,
    sub: Subcolocale,
    essential: bool,
}

impl<'w> Szdbf<'w> {
    pub fn new(bench: &'w Workbench, sub: Subcolocale) -> Result<Self> {
        if !is_subcolocale(bench.sl().coframe(), sub.members()) {
            return Err(Error::NotASubcolocale);
        }
        let essential = bench.is_essential(&sub)?;
        Ok(Szdbf { bench, sub, essential })
    }

    pub fn bench(&self) -> &'w Workbench {
        self.bench
    }

    pub fn sub(&self) -> &Subcolocale {
        &self.sub
    }

    pub fn is_essential(&self) -> bool {
        self.essential
    }
}

impl PartialEq for Szdbf<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.bench, other.bench) && self.sub == other.sub
    }
}

/// `(L, 𝒟) ↦ (L, fit[𝒟])`.
pub fn to_raney<'w>(b: &Szdbf<'w>) -> Result<RaneyExtension<'w>> {
    RaneyExtension::new(b.bench, b.bench.fit_image(&b.sub)?)
}

/// `(L, 𝔉) ↦ (L, Δ(𝔉))` for proper `𝔉`.
pub fn to_szdbf<'w>(r: &RaneyExtension<'w>) -> Result<Szdbf<'w>> {
    if !r.proper {
        return Err(Error::NotProper);
    }
    Szdbf::new(r.bench, r.bench.delta(&r.sub)?)
}

/// Membership in `S_b(L)`.
pub fn is_smooth(bench: &Workbench, s: usize) -> bool {
    bench.sb().contains(s)
}

fn check_endpoints(f: &FrameMap, source: &Workbench, target: &Workbench) -> Result<()> {
    if f.source() != source.frame() || f.target() != target.frame() {
        return Err(Error::NotAFrameMap("map endpoints do not match the structures"));
    }
    Ok(())
}

/// Maximum number of witnesses recorded in a verdict.
pub const MAX_WITNESSES: usize = 16;

/// Searches for a coframe map `𝔉 → 𝒢` sending `𝔬(x)` to `𝔬(f(x))`.
pub fn raney_lift_check(f: &FrameMap, r1: &RaneyExtension<'_>, r2: &RaneyExtension<'_>) -> Result<LiftVerdict> {
    check_endpoints(f, r1.bench, r2.bench)?;
    let (a, b) = (r1.bench.so(), r2.bench.so());
    let fixed: Vec<(usize, usize)> =
        a.frame().lattice().elements().map(|x| (a.open(x), b.open(f.apply(x)))).collect();
    let problem = LiftProblem {
        source: a.coframe(),
        source_sub: &r1.sub,
        target: b.coframe(),
        target_sub: &r2.sub,
        fixed: &fixed,
    };
    search_lift(&problem, r1.bench.limits().lift_budget, MAX_WITNESSES)
}

/// Searches for a coframe map `𝒟 → ℰ` sending `𝔠(x)` to `𝔠(f(x))`.
pub fn szdbf_lift_check(f: &FrameMap, b1: &Szdbf<'_>, b2: &Szdbf<'_>) -> Result<LiftVerdict> {
    check_endpoints(f, b1.bench, b2.bench)?;
    let (a, b) = (b1.bench.sl(), b2.bench.sl());
    let closed = |s: &crate::sublocale::SublocaleCoframe, x| s.closed(x).ok_or(Error::NotASublocale);
    let fixed = a
        .frame()
        .lattice()
        .elements()
        .map(|x| Ok((closed(a, x)?, closed(b, f.apply(x))?)))
        .collect::<Result<Vec<_>>>()?;
    let problem = LiftProblem {
        source: a.coframe(),
        source_sub: &b1.sub,
        target: b.coframe(),
        target_sub: &b2.sub,
        fixed: &fixed,
    };
    search_lift(&problem, b1.bench.limits().lift_budget, MAX_WITNESSES)
}

/// Both lifting criteria for the surjection `L → S` of one sublocale.
#[derive(Clone, Debug)]
pub struct SublocaleLifts {
    pub smooth: bool,
    pub exact: bool,
    /// `(L, S_b(L)) → (S, S_b(S))`.
    pub szdbf: LiftVerdict,
    /// `(L, fit[S_b(L)]) → (S, fit[S_b(S)])`.
    pub raney: LiftVerdict,
}

impl SublocaleLifts {
    pub fn agree(&self) -> bool {
        self.szdbf.exists == self.smooth && self.raney.exists == self.exact
    }
}

/// Runs both lift checks for the sublocale with `S(L)` index `s`.
pub fn sublocale_lifts(bench: &Workbench, s: usize) -> Result<SublocaleLifts> {
    let surj = surjection_of(bench.frame(), bench.sl().get(s))?;
    let target = Workbench::new(surj.target(), *bench.limits())?;
    let sb_source = bench.sb();
    let sb_target = target.sb();
    let b1 = Szdbf::new(bench, sb_source.clone())?;
    let b2 = Szdbf::new(&target, sb_target.clone())?;
    let r1 = RaneyExtension::new(bench, bench.fit_image(&sb_source)?)?;
    let r2 = RaneyExtension::new(&target, target.fit_image(&sb_target)?)?;
    Ok(SublocaleLifts {
        smooth: is_smooth(bench, s),
        exact: bench.is_exact_sublocale(s),
        szdbf: szdbf_lift_check(surj.map(), &b1, &b2)?,
        raney: raney_lift_check(surj.map(), &r1, &r2)?,
    })
}
