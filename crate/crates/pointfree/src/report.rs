//! The per-frame JSON report.

use pointfree_core::calculus::{Filter, Host};
use pointfree_core::correspondence::is_smooth;
use pointfree_core::{BitSet, Error, Workbench};
use serde::Serialize;

use crate::suites::FINITE_SCALE_NOTE;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct SublocaleEntry {
    pub index: usize,
    pub members: Vec<usize>,
    /// Elements `a` with `o(a)` equal to this sublocale.
    pub open_of: Vec<usize>,
    /// Elements `a` with `c(a)` equal to this sublocale.
    pub closed_of: Vec<usize>,
    pub fitted: bool,
    pub exact: bool,
    pub smooth: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Distinguished {
    /// `S(L)` indices.
    pub sb: Vec<usize>,
    pub ssp: Vec<usize>,
    pub se: Vec<usize>,
    /// `S_o(L)` indices of `fit[S_b(L)]`.
    pub fit_sb: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubcolocaleVerdict {
    pub members: Vec<usize>,
    pub verdict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Enumeration {
    /// Codense subcolocales of `S(L)` with their essentiality.
    pub codense: Vec<SubcolocaleVerdict>,
    /// Subcolocales of `S_o(L)` containing all opens, with their properness.
    pub with_opens: Vec<SubcolocaleVerdict>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Adjunction {
    pub holds: bool,
    pub pairs_checked: usize,
    pub proper: usize,
    pub essential: usize,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FrameReport {
    pub schema_version: u32,
    pub name: String,
    pub elements: usize,
    pub primes: Vec<usize>,
    pub sublocale_count: usize,
    pub fitted_count: usize,
    pub sublocales: Vec<SublocaleEntry>,
    /// `S_o(L)` members as `S(L)` indices.
    pub fitted: Vec<usize>,
    pub distinguished: Distinguished,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enumeration: Option<Enumeration>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjunction: Option<Adjunction>,
    pub notes: Vec<String>,
}

fn list(s: &BitSet) -> Vec<usize> {
    s.to_vec()
}

pub fn analyze(name: &str, w: &Workbench) -> Result<FrameReport, Error> {
    let frame = w.frame();
    let l = frame.lattice();
    let sl = w.sl();
    let exact = frame.exact_meet_families();
    let sublocales = (0..sl.len())
        .map(|i| SublocaleEntry {
            index: i,
            members: list(sl.get(i)),
            open_of: l.elements().filter(|&a| sl.open(a) == i).collect(),
            closed_of: l.elements().filter(|&a| sl.closed(a) == Some(i)).collect(),
            fitted: sl.is_fitted(i),
            exact: frame.is_exact_sublocale_with(sl.get(i), &exact),
            smooth: is_smooth(w, i),
        })
        .collect();
    let sb = w.sb();
    let distinguished = Distinguished {
        sb: list(sb.members()),
        ssp: list(w.ssp().members()),
        se: list(w.se()?.members()),
        fit_sb: list(w.fit_image(&sb)?.members()),
    };
    let mut notes = Vec::new();
    let (enumeration, adjunction) = if sl.len() <= w.limits().max_subcolocale_host {
        let codense = w
            .enumerate(Host::Sublocales, Filter::Codense)?
            .into_iter()
            .map(|d| Ok(SubcolocaleVerdict { verdict: w.is_essential(&d)?, members: list(d.members()) }))
            .collect::<Result<Vec<_>, Error>>()?;
        let with_opens = w
            .enumerate(Host::Fitted, Filter::All)?
            .into_iter()
            .filter(|f| w.contains_opens(f))
            .map(|f| SubcolocaleVerdict { verdict: w.is_proper(&f), members: list(f.members()) })
            .collect();
        let r = w.verify_main_adjunction()?;
        let adj = Adjunction {
            holds: r.holds(),
            pairs_checked: r.pairs_checked,
            proper: r.proper.len(),
            essential: r.essential.len(),
            violations: r.violations.iter().map(|v| v.to_string()).collect(),
        };
        (Some(Enumeration { codense, with_opens }), Some(adj))
    } else {
        notes.push(format!(
            "subcolocale enumeration skipped: |S(L)| = {} exceeds {}",
            sl.len(),
            w.limits().max_subcolocale_host
        ));
        (None, None)
    };
    notes.push(FINITE_SCALE_NOTE.to_string());
    Ok(FrameReport {
        schema_version: SCHEMA_VERSION,
        name: name.to_string(),
        elements: l.len(),
        primes: list(&frame.primes()),
        sublocale_count: sl.len(),
        fitted_count: w.so().len(),
        sublocales,
        fitted: (0..w.so().len()).map(|f| w.so_to_sl(f)).collect(),
        distinguished,
        enumeration,
        adjunction,
        notes,
    })
}
