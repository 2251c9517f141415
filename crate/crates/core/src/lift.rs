//! Backtracking search for coframe maps between subcolocales that extend a
//! prescribed partial assignment.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::Coframe;
use crate::subcolocale::Subcolocale;

/// A search for `g: D → E` preserving all joins and all meets of the
/// subcolocales, with `g(a) = b` for every `(a, b)` in `fixed`.
#[derive(Clone, Copy, Debug)]
pub struct LiftProblem<'a> {
    pub source: &'a Coframe,
    pub source_sub: &'a Subcolocale,
    pub target: &'a Coframe,
    pub target_sub: &'a Subcolocale,
    pub fixed: &'a [(usize, usize)],
}

/// Outcome of a lift search. A witness lists, for each member of the source
/// subcolocale in increasing index order, the target host index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftVerdict {
    pub exists: bool,
    /// The lexicographically least witness.
    pub witness: Option<Vec<usize>>,
    /// Witnesses found within the budget, in lexicographic order, at most
    /// `max_witnesses` of them.
    pub witnesses: Vec<Vec<usize>>,
    pub witness_count: u64,
    pub nodes_explored: u64,
    /// The whole search space was covered.
    pub exhausted: bool,
}

struct Search<'a> {
    d_join: Vec<usize>,
    d_meet: Vec<usize>,
    e_join: &'a dyn Fn(usize, usize) -> usize,
    e_meet: &'a dyn Fn(usize, usize) -> usize,
    m: usize,
    candidates: Vec<usize>,
    budget: u64,
    max_witnesses: usize,
    nodes: u64,
    found: Vec<Vec<usize>>,
    count: u64,
    out_of_budget: bool,
}

impl Search<'_> {
    /// Assigns `value` at `pos` and propagates every forced join and meet.
    fn assign(&self, a: &mut [Option<usize>], pos: usize, value: usize) -> bool {
        let mut queue = vec![(pos, value)];
        while let Some((i, v)) = queue.pop() {
            match a[i] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => a[i] = Some(v),
            }
            for j in 0..self.m {
                let Some(w) = a[j] else { continue };
                for (k, val) in [
                    (self.d_join[i * self.m + j], (self.e_join)(v, w)),
                    (self.d_meet[i * self.m + j], (self.e_meet)(v, w)),
                ] {
                    match a[k] {
                        Some(x) if x != val => return false,
                        Some(_) => {}
                        None => queue.push((k, val)),
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, a: Vec<Option<usize>>) {
        let Some(pos) = a.iter().position(Option::is_none) else {
            self.count += 1;
            if self.found.len() < self.max_witnesses {
                self.found.push(a.into_iter().map(|v| v.expect("complete")).collect());
            }
            return;
        };
        for c in 0..self.candidates.len() {
            if self.nodes >= self.budget {
                self.out_of_budget = true;
                return;
            }
            self.nodes += 1;
            let mut next = a.clone();
            if self.assign(&mut next, pos, self.candidates[c]) {
                self.run(next);
                if self.out_of_budget {
                    return;
                }
            }
        }
    }
}

/// Exhaustive search up to `budget` nodes. Fails with `SizeLimit` when the
/// budget runs out before any witness is found.
pub fn search_lift(problem: &LiftProblem<'_>, budget: u64, max_witnesses: usize) -> Result<LiftVerdict> {
    let (src, tgt) = (problem.source, problem.target);
    let (d, e) = (problem.source_sub, problem.target_sub);
    let members: Vec<usize> = d.iter().collect();
    let m = members.len();
    let pos = |x: usize| members.binary_search(&x).ok();
    let sl = src.lattice();
    let mut d_join = vec![0; m * m];
    let mut d_meet = vec![0; m * m];
    for i in 0..m {
        for j in 0..m {
            let (a, b) = (members[i], members[j]);
            d_join[i * m + j] = pos(sl.join(a, b)).ok_or(Error::NotASubcolocale)?;
            d_meet[i * m + j] = pos(d.meet_in(src, a, b)).ok_or(Error::NotASubcolocale)?;
        }
    }
    let e_join = |u: usize, v: usize| tgt.lattice().join(u, v);
    let e_meet = |u: usize, v: usize| e.meet_in(tgt, u, v);
    let mut search = Search {
        d_join,
        d_meet,
        e_join: &e_join,
        e_meet: &e_meet,
        m,
        candidates: e.iter().collect(),
        budget,
        max_witnesses: max_witnesses.max(1),
        nodes: 0,
        found: Vec::new(),
        count: 0,
        out_of_budget: false,
    };
    let d_top = d.conucleus(src, src.top());
    let e_top = e.conucleus(tgt, tgt.top());
    let mut start = vec![None; m];
    let mut seeds = vec![(sl.bottom(), tgt.bottom()), (d_top, e_top)];
    seeds.extend_from_slice(problem.fixed);
    let mut consistent = true;
    for &(a, b) in &seeds {
        let p = pos(a).ok_or(Error::NotAMember(a))?;
        if !e.contains(b) || !search.assign(&mut start, p, b) {
            consistent = false;
            break;
        }
    }
    if consistent {
        search.run(start);
    }
    if search.out_of_budget && search.found.is_empty() {
        return Err(Error::SizeLimit { what: "lift search nodes", limit: budget as usize });
    }
    Ok(LiftVerdict {
        exists: search.count > 0,
        witness: search.found.first().cloned(),
        witnesses: search.found,
        witness_count: search.count,
        nodes_explored: search.nodes,
        exhausted: !search.out_of_budget,
    })
}
