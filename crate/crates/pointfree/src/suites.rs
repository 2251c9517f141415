//! Exhaustive check suites run per frame. Each check records a name, a
//! verdict and, on failure, the first counterexample found.

use pointfree_core::bitset::{mask_iter, subsets};
use pointfree_core::calculus::{Filter, Host};
use pointfree_core::correspondence::{sublocale_lifts, to_raney, to_szdbf, RaneyExtension, Szdbf};
use pointfree_core::frame_map::downset_frame;
use pointfree_core::precongruence::Precongruence;
use pointfree_core::subcolocale::Subcolocale;
use pointfree_core::{BitSet, Coframe, Error, Frame, Lattice, Limits, Workbench};
use serde::Serialize;

/// Stated when a report touches smoothness on finite frames.
pub const FINITE_SCALE_NOTE: &str = "finite frames force S_b(L) = S(L): every sublocale is smooth and exact, \
so an exact sublocale that is not smooth cannot exist at this scale and the non-functoriality \
counterexample built from one is out of scope";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Laws,
    Adjunction,
    Correspondence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Outcome {
    pub frame: String,
    pub checks: Vec<Check>,
    /// Checks not run, with the reason.
    pub skipped: Vec<String>,
    pub notes: Vec<String>,
}

impl Outcome {
    pub fn new(frame: &str) -> Self {
        Outcome { frame: frame.to_string(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Records a check; `find` returns the first counterexample, if any.
    pub fn check<F: FnOnce() -> Option<String>>(&mut self, name: &str, find: F) {
        let counterexample = find();
        self.checks.push(Check { name: name.to_string(), passed: counterexample.is_none(), counterexample });
    }

    /// Records a check whose computation may fail; errors count as failures.
    pub fn check_result<F: FnOnce() -> Result<Option<String>, Error>>(&mut self, name: &str, find: F) {
        self.check(name, || find().unwrap_or_else(|e| Some(format!("error: {e}"))));
    }

    pub fn skip(&mut self, what: &str, why: impl std::fmt::Display) {
        self.skipped.push(format!("{what}: {why}"));
    }

    pub fn merge(&mut self, other: Outcome) {
        self.checks.extend(other.checks);
        self.skipped.extend(other.skipped);
        self.notes.extend(other.notes);
    }
}

fn first<I: IntoIterator<Item = T>, T, F: FnMut(&T) -> bool>(items: I, mut bad: F) -> Option<T> {
    items.into_iter().find(|t| bad(t))
}

fn members(s: &BitSet) -> String {
    s.to_string()
}

/// Exhaustive family scans are limited to lattices of this size.
const FAMILY_SCAN: usize = 16;

// ---- frame-level laws ----

pub fn lattice_laws(frame: &Frame, out: &mut Outcome) {
    let l = frame.lattice();
    let n = l.len();
    let triples = || (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))));
    out.check("heyting adjunction", || {
        first(triples(), |&(x, y, z)| l.leq(z, frame.heyting(x, y)) != l.leq(l.meet(z, x), y))
            .map(|(x, y, z)| format!("x={x} y={y} z={z}"))
    });
    match Coframe::new(l.clone()) {
        Ok(co) => {
            out.check("difference adjunction", || {
                first(triples(), |&(x, y, z)| l.leq(co.difference(x, y), z) != l.leq(x, l.join(y, z)))
                    .map(|(x, y, z)| format!("x={x} y={y} z={z}"))
            });
            out.check("frame operations on the dual are coframe operations", || {
                let dual = Frame::new(l.dual()).ok()?;
                first((0..n).flat_map(|x| (0..n).map(move |y| (x, y))), |&(x, y)| {
                    dual.heyting(x, y) != co.difference(y, x)
                })
                .map(|(x, y)| format!("x={x} y={y}"))
            });
        }
        Err(e) => out.check("lattice is a coframe", || Some(e.to_string())),
    }
    if n <= FAMILY_SCAN {
        out.check("every meet is exact and strongly exact", || {
            first(l.families(), |fam| !l.is_exact_meet(fam) || !frame.is_strongly_exact_meet(fam))
                .map(|f| members(&f))
        });
    } else {
        out.skip("exactness of all meets", format!("more than {FAMILY_SCAN} elements"));
    }
    out.check("primes are the meet-irreducible proper elements", || {
        let (p, m) = (frame.primes(), l.meet_irreducibles());
        (p != m).then(|| format!("primes {p}, meet-irreducibles {m}"))
    });
    out.check("every prime is covered", || {
        let (p, c) = (frame.primes(), frame.covered_primes());
        (p != c).then(|| format!("primes {p}, covered {c}"))
    });
}

// ---- criterion 1: S(L) coframe and open/closed laws ----

pub fn sublocale_laws(w: &Workbench, out: &mut Outcome) {
    let frame = w.frame();
    let l = frame.lattice();
    let sl = w.sl();
    let n = l.len();
    let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    out.check("S(L) satisfies the coframe distributive law", || {
        sl.lattice().codistributivity_counterexample().map(|(x, y, z)| format!("S{x} S{y} S{z}"))
    });
    out.check("intersections of sublocales are sublocales", || {
        let m = sl.len();
        first((0..m).flat_map(|i| (0..m).map(move |j| (i, j))), |&(i, j)| {
            sl.get(sl.meet(i, j)) != &sl.get(i).intersection(sl.get(j))
        })
        .map(|(i, j)| format!("S{i} ∩ S{j}"))
    });
    let o = |a: usize| frame.open_sublocale(a);
    let c = |a: usize| frame.closed_sublocale(a);
    let one = BitSet::from_indices(n, [l.top()]);
    let whole = BitSet::full(n);
    out.check("o(1) = L and o(0) = {1}", || {
        (o(l.top()) != whole || o(l.bottom()) != one).then(|| "failed".into())
    });
    out.check("c(1) = {1} and c(0) = L", || {
        (c(l.top()) != one || c(l.bottom()) != whole).then(|| "failed".into())
    });
    out.check("o(a) ∩ c(a) = {1} and o(a) ∨ c(a) = L", || {
        first(l.elements(), |&a| o(a).intersection(&c(a)) != one || frame.sublocale_join([&o(a), &c(a)]) != whole)
            .map(|a| format!("a={a}"))
    });
    let families: Vec<u64> = if n <= FAMILY_SCAN { subsets(n).collect() } else { Vec::new() };
    if families.is_empty() {
        out.skip("open/closed laws over all families", format!("more than {FAMILY_SCAN} elements"));
    }
    out.check("joins of opens are opens of joins, o(a) ∩ o(b) = o(a ∧ b)", || {
        let joins = first(families.iter().copied(), |&m| {
            let opens: Vec<BitSet> = mask_iter(m).map(o).collect();
            frame.sublocale_join(opens.iter()) != o(l.mask_join(m))
        })
        .map(|m| format!("family {}", BitSet::from_mask(n, m)));
        joins.or_else(|| {
            first(pairs(), |&(a, b)| o(a).intersection(&o(b)) != o(l.meet(a, b))).map(|(a, b)| format!("a={a} b={b}"))
        })
    });
    out.check("intersections of closeds are closeds of joins, c(a) ∨ c(b) = c(a ∧ b)", || {
        let meets = first(families.iter().copied(), |&m| {
            let cut = mask_iter(m).fold(BitSet::full(n), |acc, a| acc.intersection(&c(a)));
            cut != c(l.mask_join(m))
        })
        .map(|m| format!("family {}", BitSet::from_mask(n, m)));
        meets.or_else(|| {
            first(pairs(), |&(a, b)| frame.sublocale_join([&c(a), &c(b)]) != c(l.meet(a, b)))
                .map(|(a, b)| format!("a={a} b={b}"))
        })
    });
    out.check("sublocale joins agree with the pointwise meet of nuclei", || {
        let m = sl.len();
        first((0..m).flat_map(|i| (0..m).map(move |j| (i, j))), |&(i, j)| {
            let (s, t) = (sl.get(i), sl.get(j));
            let oracle =
                BitSet::from_indices(n, l.elements().map(|a| l.meet(frame.nucleus(s, a), frame.nucleus(t, a))));
            sl.get(sl.join(i, j)) != &oracle
        })
        .map(|(i, j)| format!("S{i} ∨ S{j}"))
    });
    out.check("fit is a closure operator", || {
        first(0..sl.len(), |&i| {
            let f = sl.fit(i);
            !sl.leq(i, f) || sl.fit(f) != f || (0..sl.len()).any(|j| sl.leq(i, j) && !sl.leq(f, sl.fit(j)))
        })
        .map(|i| format!("S{i}"))
    });
    out.check("fit(S ∩ c(x)) = fit(fit(S) ∩ c(x))", || {
        first((0..sl.len()).flat_map(|i| l.elements().map(move |x| (i, x))), |&(i, x)| {
            let lhs = frame.fit_set(&sl.get(i).intersection(&c(x)));
            let rhs = frame.fit_set(&sl.get(sl.fit(i)).intersection(&c(x)));
            lhs != rhs
        })
        .map(|(i, x)| format!("S{i}, x={x}"))
    });
}

// ---- criterion 2: φ and ker ----

pub fn phi_ker(w: &Workbench, out: &mut Outcome) {
    let frame = w.frame();
    let so = w.so();
    let se = frame.strongly_exact_filters();
    let images: Vec<BitSet> = (0..so.len()).map(|f| so.phi(f)).collect();
    out.check("φ is a bijection onto the strongly exact filters", || {
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        let mut target: Vec<BitSet> = se.filters().to_vec();
        target.sort();
        (sorted.len() != images.len() || sorted != target)
            .then(|| format!("{} fitted sublocales, {} distinct images, {} filters", so.len(), sorted.len(), target.len()))
    });
    out.check("φ reverses inclusion", || {
        let m = so.len();
        first((0..m).flat_map(|i| (0..m).map(move |j| (i, j))), |&(i, j)| {
            so.leq(i, j) != images[j].is_subset(&images[i])
        })
        .map(|(i, j)| format!("F{i}, F{j}"))
    });
    out.check("ker[S_b(L)] = exact filters", || {
        let mut kernels: Vec<BitSet> = w.sb().iter().map(|s| w.sl().ker(s)).collect();
        kernels.sort();
        kernels.dedup();
        let mut exact = frame.exact_filters().filters().to_vec();
        exact.sort();
        (kernels != exact).then(|| format!("{} kernels, {} exact filters", kernels.len(), exact.len()))
    });
}

// ---- criterion 5: concrete examples ----

pub fn concrete_examples(w: &Workbench, out: &mut Outcome) {
    let frame = w.frame();
    let host = w.sl().coframe();
    let sb = w.sb();
    let ssp = w.ssp();
    for (name, d) in [("S_b(L)", &sb), ("S_sp(L)", &ssp)] {
        out.check_result(&format!("{name} is codense and essential"), || {
            if !d.is_codense(host) {
                return Ok(Some("not codense".into()));
            }
            let e = w.essentiality(d)?;
            Ok((!e.agree() || !e.is_essential()).then(|| format!("{e:?}")))
        });
    }
    out.check_result("S_b(L) ⊆ S_E(L) with equal fit images", || {
        let se = w.se()?;
        if !sb.is_subset(&se) {
            return Ok(Some(format!("S_b {} not inside S_E {}", sb.members(), se.members())));
        }
        let (a, b) = (w.fit_image(&sb)?, w.fit_image(&se)?);
        Ok((a != b).then(|| format!("fit[S_b] {} vs fit[S_E] {}", a.members(), b.members())))
    });
    out.check("b(p) = c(p) ∩ fit(b(p)) for every prime", || {
        first(frame.primes().iter(), |&p| {
            let b = frame.b_sublocale(p);
            b != frame.closed_sublocale(p).intersection(&frame.fit_set(&b))
        })
        .map(|p| format!("p={p}"))
    });
    out.check_result("Δ(fit[S_b(L)]) = S_b(L)", || {
        let back = w.delta(&w.fit_image(&sb)?)?;
        Ok((back != sb).then(|| format!("{}", back.members())))
    });
    if w.sl().len() <= w.limits().max_subcolocale_host {
        out.check_result("S_b(L) is the smallest codense subcolocale", || {
            let all = w.enumerate(Host::Sublocales, Filter::Codense)?;
            Ok(first(all, |d| !sb.is_subset(d)).map(|d| d.members().to_string()))
        });
    } else {
        out.skip("minimality of S_b(L)", format!("|S(L)| = {} exceeds the enumeration bound", w.sl().len()));
    }
}

// ---- criterion 7: double-entry oracles ----

/// Subsets of an `m`-element host used as generator sets: all of them when
/// `m ≤ 10`, otherwise all sets of at most two elements.
fn generator_sets(m: usize) -> Vec<BitSet> {
    if m <= 10 {
        subsets(m).map(|mask| BitSet::from_mask(m, mask)).collect()
    } else {
        let mut out = vec![BitSet::new(m)];
        for i in 0..m {
            for j in i..m {
                out.push(BitSet::from_indices(m, [i, j]));
            }
        }
        out
    }
}

pub fn double_entry(w: &Workbench, out: &mut Outcome) {
    let frame = w.frame();
    let sl = w.sl();
    out.check("closed formula for generated subcolocales equals the closure fixpoint", || {
        first(generator_sets(sl.len()), |x| w.generated_by_formula(x) != w.generated(x)).map(|x| members(&x))
    });
    out.check("sublocale → precongruence → sublocale is the identity", || {
        first(0..sl.len(), |&s| {
            Precongruence::of_sublocale(frame, sl.get(s)).to_sublocale(frame) != *sl.get(s)
        })
        .map(|s| format!("S{s}"))
    });
    out.check("precongruence → sublocale → precongruence is the identity", || {
        first(0..sl.len(), |&s| {
            let r = Precongruence::of_sublocale(frame, sl.get(s));
            Precongruence::of_sublocale(frame, &r.to_sublocale(frame)) != r
        })
        .map(|s| format!("relation of S{s}"))
    });
    out.check_result("≤_F relations are precongruences realizing σ(F)", || {
        let f_sub = Subcolocale::whole(w.so().coframe());
        for f in 0..w.so().len() {
            let rel = w.leq_f(&f_sub, f)?;
            let p = Precongruence::new(frame, rel.clone())?;
            let sigma = w.sigma(&f_sub, f)?;
            if p.to_sublocale(frame) != *sl.get(sigma) {
                return Ok(Some(format!("F{f}")));
            }
            if Precongruence::of_sublocale(frame, sl.get(sigma)).relation() != &rel {
                return Ok(Some(format!("relation of σ(F{f})")));
            }
        }
        Ok(None)
    });
    let limit = w.limits().max_subcolocale_host;
    for (name, m) in [("S(L)", sl.len()), ("S_o(L)", w.so().len())] {
        if m > limit {
            out.skip(&format!("subcolocale characterizations on {name}"), format!("host has {m} > {limit} elements"));
            continue;
        }
        out.check(&format!("subcolocale characterizations agree on {name}"), || {
            first(subsets(m), |&mask| {
                let x = BitSet::from_mask(m, mask);
                if name == "S(L)" {
                    w.is_subcolocale_of_sl(&x) != w.sl_intersection_criterion(&x)
                } else {
                    w.is_subcolocale_of_so(&x) != w.so_fitting_criterion(&x)
                }
            })
            .map(|mask| BitSet::from_mask(m, mask).to_string())
        });
    }
}

// ---- criteria 3 and 4: the adjunction ----

pub fn adjunction(w: &Workbench, out: &mut Outcome) {
    let limit = w.limits().max_subcolocale_host;
    if w.sl().len() > limit {
        out.skip("adjunction", format!("|S(L)| = {} exceeds {limit}", w.sl().len()));
        return;
    }
    let report = match w.verify_main_adjunction() {
        Ok(r) => r,
        Err(e) => {
            out.check("adjunction enumeration", || Some(e.to_string()));
            return;
        }
    };
    out.notes.push(format!(
        "{} codense, {} proper, {} essential, {} pairs checked",
        report.codense.len(),
        report.proper.len(),
        report.essential.len(),
        report.pairs_checked
    ));
    out.check("Δ ⊣ fit[−], fit[Δ(F)] = F, proper ↔ essential", || {
        report.violations.first().map(|v| format!("{v} ({} violations)", report.violations.len()))
    });
    for f_sub in &report.proper {
        sigma_consistency(w, f_sub, out);
    }
    for d in &report.codense {
        codense_laws(w, d, out);
    }
}

/// Criterion 4 for one proper subcolocale.
pub fn sigma_consistency(w: &Workbench, f_sub: &Subcolocale, out: &mut Outcome) {
    let sl = w.sl();
    let so = w.so();
    let l = w.frame().lattice();
    out.check_result(&format!("σ on {}", f_sub.members()), || {
        for f in f_sub.iter() {
            let sigma = w.sigma(f_sub, f)?;
            if w.fit_to_so(sigma) != f {
                return Ok(Some(format!("fit(σ(F{f})) ≠ F{f}")));
            }
            for x in l.elements() {
                let cut = sl.get(sigma).intersection(sl.get(sl.open(x)));
                let lhs = so.index_of(&w.frame().fit_set(&cut));
                let rhs = f_sub.meet_in(so.coframe(), f, so.open(x));
                if lhs != Some(rhs) {
                    return Ok(Some(format!("fit(σ(F{f}) ∩ o({x})) ≠ F{f} ∧ o({x})")));
                }
            }
        }
        for x in l.elements() {
            if w.sigma(f_sub, so.open(x))? != sl.open(x) {
                return Ok(Some(format!("σ(o({x})) ≠ o({x})")));
            }
        }
        Ok(None)
    });
}

/// Invariants of a codense subcolocale of `S(L)` and its fit image.
pub fn codense_laws(w: &Workbench, d: &Subcolocale, out: &mut Outcome) {
    let frame = w.frame();
    let l = frame.lattice();
    let sl = w.sl();
    let host = sl.coframe();
    let tag = d.members().to_string();
    out.check(&format!("D = {tag} contains the opens and closeds, meet-generated by o(x) ∨ c(y)"), || {
        if let Some(x) = l.elements().find(|&x| !d.contains(sl.open(x)) || sl.closed(x).is_none_or(|c| !d.contains(c))) {
            return Some(format!("missing o({x}) or c({x})"));
        }
        let gens: Vec<usize> = l
            .elements()
            .flat_map(|x| l.elements().map(move |y| (x, y)))
            .map(|(x, y)| sl.join(sl.open(x), sl.closed(y).expect("closed")))
            .collect();
        first(d.iter(), |&s| {
            sl.lattice().big_meet(gens.iter().copied().filter(|&g| sl.leq(s, g))) != s
        })
        .map(|s| format!("S{s}"))
    });
    out.check(&format!("conucleus of {tag} commutes with ∩ o(x) and ∩ c(x)"), || {
        first((0..sl.len()).flat_map(|s| l.elements().map(move |x| (s, x))), |&(s, x)| {
            let nu = d.conucleus(host, s);
            let c = sl.closed(x).expect("closed");
            d.conucleus(host, sl.meet(s, sl.open(x))) != sl.meet(nu, sl.open(x))
                || d.conucleus(host, sl.meet(s, c)) != sl.meet(nu, c)
        })
        .map(|(s, x)| format!("S{s}, x={x}"))
    });
    out.check_result(&format!("fit ⊣ σ and ν_D ∘ fit = σ ∘ fit on {tag}"), || {
        let f_sub = w.fit_image(d)?;
        let so = w.so();
        for s in d.iter() {
            let fit_s = w.fit_to_so(s);
            for f in f_sub.iter() {
                let sigma = w.sigma(&f_sub, f)?;
                if so.leq(fit_s, f) != sl.leq(s, sigma) {
                    return Ok(Some(format!("S{s}, F{f}")));
                }
            }
            let fitted = w.so_to_sl(fit_s);
            if d.conucleus(host, fitted) != w.sigma(&f_sub, fit_s)? {
                return Ok(Some(format!("ν_D(fit(S{s}))")));
            }
        }
        for f in 0..so.len() {
            let expected = w.fit_to_so(d.conucleus(host, w.so_to_sl(f)));
            if f_sub.conucleus(so.coframe(), f) != expected {
                return Ok(Some(format!("ν_fit[D](F{f}) ≠ fit(ν_D(F{f}))")));
            }
        }
        if w.saturated_elements(d)? != w.sigma_image(&f_sub)? {
            return Ok(Some("Sat(D) ≠ σ[fit[D]]".into()));
        }
        Ok(None)
    });
}

// ---- criterion 6 and the object correspondence ----

pub fn correspondence(w: &Workbench, out: &mut Outcome) {
    lift_criteria(w, out);
    object_correspondence(w, out);
    downset_checks(w, out);
}

/// Criterion 6 on every sublocale of the frame.
pub fn lift_criteria(w: &Workbench, out: &mut Outcome) {
    let sl = w.sl();
    let mut exact_not_smooth = 0;
    out.check_result("lift checks agree with smoothness and exactness", || {
        for s in 0..sl.len() {
            let lifts = sublocale_lifts(w, s)?;
            if lifts.exact && !lifts.smooth {
                exact_not_smooth += 1;
            }
            if !lifts.agree() {
                return Ok(Some(format!(
                    "S{s}: smooth {} / SZDBF lift {}, exact {} / Raney lift {}",
                    lifts.smooth, lifts.szdbf.exists, lifts.exact, lifts.raney.exists
                )));
            }
            if !lifts.szdbf.exhausted || !lifts.raney.exhausted {
                return Ok(Some(format!("S{s}: search budget exhausted")));
            }
        }
        Ok(None)
    });
    out.notes.push(format!("{exact_not_smooth} exact sublocales that are not smooth; {FINITE_SCALE_NOTE}"));
}

/// `fit` and `Δ` as maps between proper Raney extensions and essential
/// biframes on this frame.
pub fn object_correspondence(w: &Workbench, out: &mut Outcome) {
    let sl = w.sl();
    let limit = w.limits().max_subcolocale_host;
    if sl.len() <= limit {
        out.check_result("fit and Δ are inverse on proper and essential structures", || {
            for f in w.enumerate(Host::Fitted, Filter::Proper)? {
                let r = RaneyExtension::new(w, f.clone())?;
                let b = to_szdbf(&r)?;
                if to_raney(&b)?.sub() != &f {
                    return Ok(Some(format!("fit(Δ({})) ≠ itself", f.members())));
                }
            }
            for d in w.enumerate(Host::Sublocales, Filter::Codense)? {
                let b = Szdbf::new(w, d.clone())?;
                let back = to_szdbf(&to_raney(&b)?)?;
                if (back.sub() == &d) != b.is_essential() {
                    return Ok(Some(format!("Δ(fit({})) fixed-point status differs from essentiality", d.members())));
                }
            }
            Ok(None)
        });
    } else {
        out.skip("object correspondence", format!("|S(L)| = {} exceeds {limit}", sl.len()));
    }
}

/// `ε: 𝒟(L) → L` and its induced sublocale.
pub fn downset_checks(w: &Workbench, out: &mut Outcome) {
    match downset_frame(w.frame(), w.limits().max_frame) {
        Ok(df) => {
            out.check("ε: D(L) → L preserves all meets", || {
                (!df.epsilon.preserves_all_meets()).then(|| "failed".into())
            });
            out.check("ε_*[L] is an exact sublocale of D(L)", || {
                let s = df.induced_sublocale();
                (!df.frame().is_sublocale(&s) || !df.induced_is_exact()).then(|| s.to_string())
            });
        }
        Err(e) => out.skip("down-set frame", e),
    }
}

// ---- drivers ----

pub fn run(suite: Suite, name: &str, lattice: &Lattice, limits: Limits) -> Result<Outcome, Error> {
    let frame = Frame::new(lattice.clone())?;
    let w = Workbench::new(&frame, limits)?;
    let mut out = Outcome::new(name);
    match suite {
        Suite::Laws => {
            lattice_laws(&frame, &mut out);
            sublocale_laws(&w, &mut out);
            phi_ker(&w, &mut out);
            concrete_examples(&w, &mut out);
            double_entry(&w, &mut out);
        }
        Suite::Adjunction => adjunction(&w, &mut out),
        Suite::Correspondence => correspondence(&w, &mut out),
    }
    if w.sb() == Subcolocale::whole(w.sl().coframe()) {
        out.notes.push("S_b(L) = S(L)".into());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pointfree_core::generators::{boolean, chain};

    #[test]
    fn suites_pass_on_small_frames() {
        for l in [chain(1), chain(3), boolean(2)] {
            for suite in [Suite::Laws, Suite::Adjunction, Suite::Correspondence] {
                let out = run(suite, "t", &l, Limits::default()).unwrap();
                assert!(out.passed(), "{:?}", out.failures().collect::<Vec<_>>());
                assert!(!out.checks.is_empty());
            }
        }
    }

    #[test]
    fn failures_are_recorded() {
        let mut out = Outcome::new("x");
        out.check("fine", || None);
        out.check("broken", || Some("witness".into()));
        assert!(!out.passed());
        assert_eq!(out.failures().next().unwrap().counterexample.as_deref(), Some("witness"));
    }
}
