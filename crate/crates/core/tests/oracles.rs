//! Brute-force oracles written from the definitions, compared against the
//! library on small lattices, plus the worked examples.

use pointfree_core::bitset::subsets;
use pointfree_core::calculus::{Filter, Host};
use pointfree_core::correspondence::sublocale_lifts;
use pointfree_core::frame_map::{downset_frame, surjection_of};
use pointfree_core::generators::{all_topologies, boolean, chain, diamond, downsets_of_poset, opens_of_topology};
use pointfree_core::lift::{search_lift, LiftProblem};
use pointfree_core::precongruence::Relation;
use pointfree_core::subcolocale::{is_subcolocale, Subcolocale};
use pointfree_core::{BitSet, Coframe, Frame, Lattice, Limits, SublocaleCoframe, Workbench};

fn frame(l: Lattice) -> Frame {
    Frame::new(l).unwrap()
}

fn bench(l: Lattice) -> Workbench {
    Workbench::from_lattice(l, Limits::default()).unwrap()
}

fn set(n: usize, items: &[usize]) -> BitSet {
    BitSet::from_indices(n, items.iter().copied())
}

/// Small frames: chains, Booleans, and the 3-point topologies.
fn small_frames() -> Vec<Lattice> {
    let mut out: Vec<Lattice> = (1..=5).map(chain).collect();
    out.extend((0..=3).map(boolean));
    out.extend(all_topologies(3).iter().map(|t| opens_of_topology(3, t).unwrap()));
    out
}

fn oracle_heyting(l: &Lattice, x: usize, y: usize) -> usize {
    let cands: Vec<usize> = l.elements().filter(|&z| l.leq(l.meet(z, x), y)).collect();
    *cands.iter().find(|&&z| cands.iter().all(|&w| l.leq(w, z))).unwrap()
}

fn oracle_difference(l: &Lattice, x: usize, y: usize) -> usize {
    let cands: Vec<usize> = l.elements().filter(|&z| l.leq(x, l.join(y, z))).collect();
    *cands.iter().find(|&&z| cands.iter().all(|&w| l.leq(z, w))).unwrap()
}

/// Subsets closed under binary meets, containing 1 and closed under a → s.
fn oracle_sublocales(f: &Frame) -> Vec<BitSet> {
    let l = f.lattice();
    let n = l.len();
    let mut out: Vec<BitSet> = subsets(n)
        .map(|m| BitSet::from_mask(n, m))
        .filter(|s| {
            s.contains(l.top())
                && s.iter().all(|a| s.iter().all(|b| s.contains(l.meet(a, b))))
                && s.iter().all(|a| l.elements().all(|x| s.contains(oracle_heyting(l, x, a))))
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

#[test]
fn worked_examples_in_small_lattices() {
    let c3 = frame(chain(3));
    let l = c3.lattice();
    assert_eq!(l.big_meet([0, 1]), 0);
    assert_eq!(l.big_meet([]), 2);
    assert_eq!(c3.heyting(1, 0), 0);
    assert_eq!(c3.heyting(0, 1), 2);
    assert_eq!(c3.pseudocomplement(1), 0);
    assert_eq!(c3.primes(), set(3, &[0, 1]));
    assert_eq!(frame(chain(2)).primes(), set(2, &[0]));
    let b2 = frame(boolean(2));
    assert_eq!(b2.lattice().big_meet([1, 2]), 0);
    assert_eq!(b2.heyting(1, 2), 2);
    assert_eq!(b2.pseudocomplement(1), 2);
    assert_eq!(b2.primes(), set(4, &[1, 2]));
    let c3co = Coframe::new(chain(3)).unwrap();
    assert_eq!(c3co.difference(2, 1), 2);
    let b2co = Coframe::new(boolean(2)).unwrap();
    assert_eq!(b2co.difference(3, 1), 2);
    assert_eq!(b2co.supplement(1), 2);
    assert!(!diamond().is_linear(1));
    assert!(Coframe::new(diamond()).is_err());
    assert!(!diamond().is_exact_meet(&set(5, &[1, 2])));
    assert!(Frame::new(diamond()).is_err());
}

#[test]
fn heyting_and_difference_match_scans() {
    for l in small_frames() {
        let f = frame(l.clone());
        let co = Coframe::new(l.clone()).unwrap();
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(f.heyting(x, y), oracle_heyting(&l, x, y));
                assert_eq!(co.difference(x, y), oracle_difference(&l, x, y));
            }
        }
    }
}

#[test]
fn primes_and_covered_primes_from_definitions() {
    for l in small_frames() {
        let f = frame(l.clone());
        let n = l.len();
        let primes = BitSet::from_indices(
            n,
            l.elements().filter(|&p| {
                p != l.top()
                    && l.elements().all(|x| l.elements().all(|y| !l.leq(l.meet(x, y), p) || l.leq(x, p) || l.leq(y, p)))
            }),
        );
        assert_eq!(f.primes(), primes);
        let covered = BitSet::from_indices(
            n,
            primes.iter().filter(|&p| {
                subsets(n).all(|m| {
                    let fam = BitSet::from_mask(n, m);
                    l.big_meet(fam.iter()) != p || fam.contains(p)
                })
            }),
        );
        assert_eq!(f.covered_primes(), covered);
    }
}

#[test]
fn linearity_matches_full_family_scan() {
    let mut coframes: Vec<Lattice> = small_frames();
    coframes.push(diamond());
    for l in coframes {
        let n = l.len();
        if n > 8 {
            continue;
        }
        let co = Coframe::new(l.clone());
        for c in l.elements() {
            let scan = subsets(n).all(|m| {
                let fam = BitSet::from_mask(n, m);
                l.meet(l.big_join(fam.iter()), c) == l.big_join(fam.iter().map(|a| l.meet(a, c)))
            });
            assert_eq!(l.is_linear(c), scan);
            if let Ok(co) = &co {
                assert_eq!(co.is_linear(c), scan);
                if co.is_complemented(c) {
                    assert!(co.is_linear(c));
                }
            }
        }
    }
}

#[test]
fn sublocale_enumeration_matches_subset_scan() {
    for l in small_frames() {
        let f = frame(l.clone());
        let sl = SublocaleCoframe::enumerate(&f, &Limits::default()).unwrap();
        let oracle = oracle_sublocales(&f);
        assert_eq!(sl.elements(), oracle.as_slice());
        assert_eq!(sl.len(), 1 << f.primes().len());
        let generated = SublocaleCoframe::enumerate(&f, &Limits { exhaustive_scan: 0, ..Limits::default() }).unwrap();
        assert_eq!(generated.elements(), oracle.as_slice());
    }
}

#[test]
fn sublocale_joins_are_pointwise_meets_of_nuclei() {
    for l in small_frames() {
        let f = frame(l.clone());
        let sl = SublocaleCoframe::enumerate(&f, &Limits::default()).unwrap();
        let nucleus = |s: &BitSet, a: usize| l.big_meet(s.iter().filter(|&x| l.leq(a, x)));
        for i in 0..sl.len() {
            for j in 0..sl.len() {
                let (s, t) = (sl.get(i), sl.get(j));
                let oracle = BitSet::from_indices(l.len(), l.elements().map(|a| l.meet(nucleus(s, a), nucleus(t, a))));
                assert_eq!(sl.get(sl.join(i, j)), &oracle);
            }
        }
    }
}

#[test]
fn filters_match_exhaustive_scan() {
    for l in small_frames() {
        let f = frame(l.clone());
        let n = l.len();
        let mut scan: Vec<BitSet> = subsets(n)
            .map(|m| BitSet::from_mask(n, m))
            .filter(|s| {
                s.contains(l.top())
                    && s.iter().all(|x| l.elements().all(|y| !l.leq(x, y) || s.contains(y)))
                    && s.iter().all(|x| s.iter().all(|y| s.contains(l.meet(x, y))))
            })
            .collect();
        scan.sort();
        let mut got = f.filters().filters().to_vec();
        got.sort();
        assert_eq!(got, scan);
        let so = SublocaleCoframe::fitted(&f).unwrap();
        assert_eq!(f.strongly_exact_filters().len(), so.len());
    }
}

#[test]
fn sublocale_examples_on_c3() {
    let c3 = frame(chain(3));
    assert!(c3.is_sublocale(&set(3, &[2])));
    assert!(c3.is_sublocale(&set(3, &[0, 2])));
    assert!(!c3.is_sublocale(&set(3, &[0, 1])));
    assert_eq!(c3.nucleus(&set(3, &[1, 2]), 0), 1);
    assert_eq!(c3.nucleus(&set(3, &[2]), 0), 2);
    assert_eq!(c3.open_sublocale(1), set(3, &[0, 2]));
    assert_eq!(c3.open_sublocale(2), set(3, &[0, 1, 2]));
    assert_eq!(c3.open_sublocale(0), set(3, &[2]));
    assert_eq!(c3.closed_sublocale(1), set(3, &[1, 2]));
    assert_eq!(c3.b_sublocale(1), set(3, &[1, 2]));
    assert_eq!(c3.b_sublocale(0), set(3, &[0, 2]));
    assert_eq!(c3.b_sublocale(2), set(3, &[2]));
    assert_eq!(c3.fit_set(&set(3, &[1, 2])), set(3, &[0, 1, 2]));
    assert_eq!(c3.fit_set(&set(3, &[2])), set(3, &[2]));
    let sl = SublocaleCoframe::enumerate(&c3, &Limits::default()).unwrap();
    let so = SublocaleCoframe::fitted(&c3).unwrap();
    assert_eq!(sl.len(), 4);
    assert_eq!(so.len(), 3);
    let idx = |s: &[usize]| so.index_of(&set(3, s)).unwrap();
    assert_eq!(so.phi(idx(&[2])), set(3, &[0, 1, 2]));
    assert_eq!(so.phi(idx(&[0, 1, 2])), set(3, &[2]));
    assert_eq!(so.phi(idx(&[0, 2])), set(3, &[1, 2]));
    let sidx = |s: &[usize]| sl.index_of(&set(3, s)).unwrap();
    assert_eq!(sl.ker(sidx(&[1, 2])), set(3, &[2]));
    assert_eq!(sl.ker(sidx(&[0, 2])), set(3, &[1, 2]));
    assert_eq!(sl.ker(sidx(&[0, 1, 2])), set(3, &[2]));
    assert!(c3.is_exact_sublocale(&set(3, &[2])));
    assert_eq!(SublocaleCoframe::fitted(&frame(boolean(2))).unwrap().len(), 4);
    assert_eq!(SublocaleCoframe::fitted(&frame(chain(2))).unwrap().len(), 2);
}

#[test]
fn leq_f_and_sigma_by_hand_on_c3() {
    let w = bench(chain(3));
    let l = w.frame().lattice();
    let f_sub = Subcolocale::whole(w.so().coframe());
    let f_set = set(3, &[0, 2]);
    let f = w.so().index_of(&f_set).unwrap();
    // S_o(C3) is closed under intersection, so F ∧ o(x) is F ∩ o(x).
    let hand = Relation::from_fn(3, |x, y| {
        f_set.intersection(&w.frame().open_sublocale(x)).is_subset(&w.frame().open_sublocale(y))
    });
    assert_eq!(w.leq_f(&f_sub, f).unwrap(), hand);
    assert_eq!(hand, Relation::from_fn(3, |x, y| x == 0 || y >= 1));
    // σ(F) as an intersection of c(x) ∨ o(y), joins by pointwise nucleus meet.
    let frame = w.frame();
    let nucleus = |s: &BitSet, a: usize| l.big_meet(s.iter().filter(|&x| l.leq(a, x)));
    let mut sigma = BitSet::full(3);
    for (x, y) in hand.pairs() {
        let (c, o) = (frame.closed_sublocale(x), frame.open_sublocale(y));
        sigma.intersect_with(&BitSet::from_indices(3, l.elements().map(|a| l.meet(nucleus(&c, a), nucleus(&o, a)))));
    }
    assert_eq!(sigma, f_set);
    assert_eq!(w.sl().get(w.sigma(&f_sub, f).unwrap()), &f_set);
}

/// Subcolocales by the raw definition, independent of the library's
/// enumeration.
fn oracle_subcolocales(co: &Coframe) -> Vec<BitSet> {
    let l = co.lattice();
    let m = l.len();
    subsets(m)
        .map(|mask| BitSet::from_mask(m, mask))
        .filter(|d| {
            d.contains(l.bottom())
                && d.iter().all(|a| d.iter().all(|b| d.contains(l.join(a, b))))
                && d.iter().all(|a| l.elements().all(|c| d.contains(oracle_difference(l, a, c))))
        })
        .collect()
}

#[test]
fn subcolocale_enumeration_matches_definition() {
    for l in [chain(2), chain(3), boolean(2), chain(4)] {
        let w = bench(l);
        for (host, co) in [(Host::Sublocales, w.sl().coframe()), (Host::Fitted, w.so().coframe())] {
            let mut got: Vec<BitSet> = w.enumerate(host, Filter::All).unwrap().into_iter().map(|s| s.into_members()).collect();
            let mut want = oracle_subcolocales(co);
            got.sort();
            want.sort();
            assert_eq!(got, want);
            let codense = w.enumerate(host, Filter::Codense).unwrap();
            assert_eq!(codense.len(), want.iter().filter(|d| d.contains(co.top())).count());
        }
    }
    let w = bench(chain(2));
    assert_eq!(w.enumerate(Host::Sublocales, Filter::Codense).unwrap().len(), 1);
    let one = Coframe::new(chain(1)).unwrap();
    assert_eq!(oracle_subcolocales(&one).len(), 1);
}

#[test]
fn proper_subcolocales_of_so_by_brute_force() {
    for l in [chain(3), boolean(2), chain(4)] {
        let w = bench(l);
        let want: Vec<BitSet> = oracle_subcolocales(w.so().coframe())
            .into_iter()
            .filter(|f| (0..w.frame().len()).all(|x| f.contains(w.so().open(x))))
            .collect();
        let proper = w.enumerate(Host::Fitted, Filter::Proper).unwrap();
        assert_eq!(proper.len(), want.len());
        assert_eq!(proper.len(), 1);
    }
}

#[test]
fn calculus_examples() {
    let w = bench(chain(3));
    let whole_sl = Subcolocale::whole(w.sl().coframe());
    let whole_so = Subcolocale::whole(w.so().coframe());
    let top = set(w.sl().len(), &[w.sl().top()]);
    assert!(!is_subcolocale(w.sl().coframe(), &top));
    assert_eq!(w.generated_by_formula(&top), whole_sl);
    let opens = BitSet::from_indices(w.so().len(), (0..3).map(|x| w.so().open(x)));
    assert_eq!(w.generated(&BitSet::new(w.sl().len())), Subcolocale::trivial(w.sl().coframe()));
    assert_eq!(pointfree_core::subcolocale::generated_subcolocale(w.so().coframe(), &opens), whole_so);
    assert_eq!(w.delta(&whole_so).unwrap(), whole_sl);
    assert!(w.is_essential(&whole_sl).unwrap());
    assert!(w.is_proper(&w.fit_image(&w.sb()).unwrap()));
    let sat_sb = w.saturated_elements(&w.sb()).unwrap();
    assert_eq!(sat_sb.len(), 3);
    let w2 = bench(chain(2));
    let sat = w2.saturated_elements(&Subcolocale::whole(w2.sl().coframe())).unwrap();
    assert_eq!(sat.len(), 2);
}

#[test]
fn frame_maps_and_down_sets() {
    let c3 = frame(chain(3));
    let s = surjection_of(&c3, &c3.closed_sublocale(1)).unwrap();
    assert_eq!((0..3).map(|a| s.nucleus(a)).collect::<Vec<_>>(), vec![1, 1, 2]);
    let d = downset_frame(&frame(chain(2)), 24).unwrap();
    assert_eq!(d.frame().len(), 3);
    assert_eq!(d.downsets, vec![0b00, 0b01, 0b11]);
    for l in small_frames() {
        let d = downset_frame(&frame(l), 24).unwrap();
        assert!(d.epsilon.is_surjective());
        assert!(d.epsilon.preserves_all_meets());
        assert!(d.induced_is_exact());
    }
}

#[test]
fn lifts_for_every_sublocale_and_a_blocked_instance() {
    for l in [chain(3), boolean(2), chain(4)] {
        let w = bench(l);
        for s in 0..w.sl().len() {
            let lifts = sublocale_lifts(&w, s).unwrap();
            assert!(lifts.agree() && lifts.smooth && lifts.exact);
            assert_eq!(lifts.szdbf.witness_count, 1);
        }
    }
    // Closeds of S(C3) cannot land in a target subcolocale without them.
    let w = bench(chain(3));
    let co = w.sl().coframe();
    let whole = Subcolocale::whole(co);
    let bottom_only = Subcolocale::trivial(co);
    let fixed: Vec<(usize, usize)> = (0..3).map(|x| (w.sl().closed(x).unwrap(), w.sl().closed(x).unwrap())).collect();
    let p = LiftProblem { source: co, source_sub: &whole, target: co, target_sub: &bottom_only, fixed: &fixed };
    let v = search_lift(&p, 1_000, 4).unwrap();
    assert!(!v.exists && v.exhausted);
}

#[test]
fn downsets_of_discrete_and_chain_posets() {
    let (l, _) = downsets_of_poset(2, &[]).unwrap();
    assert_eq!(l, boolean(2));
    let (l, _) = downsets_of_poset(3, &[(0, 1), (1, 2)]).unwrap();
    assert_eq!(l, chain(4));
}
