//! Properties over down-set lattices of random posets on at most four
//! points, that is, arbitrary finite distributive lattices of that width.
//! The whole-calculus properties use three points.

use pointfree_core::calculus::{Filter, Host};
use pointfree_core::correspondence::sublocale_lifts;
use pointfree_core::generators::downsets_of_poset;
use pointfree_core::precongruence::Precongruence;
use pointfree_core::subcolocale::Subcolocale;
use pointfree_core::{BitSet, Coframe, Frame, Lattice, Limits, Workbench};
use proptest::prelude::*;

fn lattice() -> impl Strategy<Value = Lattice> {
    lattice_on(4)
}

fn lattice_on(points: usize) -> impl Strategy<Value = Lattice> {
    (1usize..=points)
        .prop_flat_map(|n| {
            let pairs = proptest::collection::vec((0..n, 0..n), 0..6)
                .prop_map(|v| v.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>());
            (Just(n), pairs)
        })
        .prop_map(|(n, pairs)| downsets_of_poset(n, &pairs).unwrap().0)
}

fn bench(l: &Lattice) -> Workbench {
    Workbench::from_lattice(l.clone(), Limits::default()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heyting_and_difference_adjunctions(l in lattice()) {
        let f = Frame::new(l.clone()).unwrap();
        let co = Coframe::new(l.clone()).unwrap();
        let dual = Frame::new(l.dual()).unwrap();
        for x in l.elements() {
            for y in l.elements() {
                prop_assert_eq!(dual.heyting(x, y), co.difference(y, x));
                for z in l.elements() {
                    prop_assert_eq!(l.leq(z, f.heyting(x, y)), l.leq(l.meet(z, x), y));
                    prop_assert_eq!(l.leq(co.difference(x, y), z), l.leq(x, l.join(y, z)));
                }
            }
        }
    }

    #[test]
    fn every_meet_is_exact(l in lattice()) {
        let f = Frame::new(l.clone()).unwrap();
        for fam in l.families() {
            prop_assert!(l.is_exact_meet(&fam));
            prop_assert!(f.is_strongly_exact_meet(&fam));
        }
    }

    #[test]
    fn primes_count_the_sublocales(l in lattice()) {
        let w = bench(&l);
        let primes = w.frame().primes();
        prop_assert_eq!(&primes, &l.meet_irreducibles());
        prop_assert_eq!(w.sl().len(), 1 << primes.len());
        prop_assert_eq!(w.so().len(), l.len());
    }

    #[test]
    fn fit_closure_laws(l in lattice()) {
        let w = bench(&l);
        let sl = w.sl();
        for i in 0..sl.len() {
            let f = sl.fit(i);
            prop_assert!(sl.leq(i, f));
            prop_assert_eq!(sl.fit(f), f);
            for j in 0..sl.len() {
                if sl.leq(i, j) {
                    prop_assert!(sl.leq(f, sl.fit(j)));
                }
            }
            for x in l.elements() {
                let c = w.frame().closed_sublocale(x);
                prop_assert_eq!(
                    w.frame().fit_set(&sl.get(i).intersection(&c)),
                    w.frame().fit_set(&sl.get(f).intersection(&c))
                );
            }
        }
    }

    #[test]
    fn phi_reverses_inclusion_bijectively(l in lattice()) {
        let w = bench(&l);
        let so = w.so();
        let se = w.frame().strongly_exact_filters();
        let images: Vec<BitSet> = (0..so.len()).map(|f| so.phi(f)).collect();
        for (i, a) in images.iter().enumerate() {
            prop_assert!(se.contains(a));
            for (j, b) in images.iter().enumerate() {
                prop_assert_eq!(so.leq(i, j), b.is_subset(a));
            }
        }
        prop_assert_eq!(se.len(), so.len());
        let mut kernels: Vec<BitSet> = w.sb().iter().map(|s| w.sl().ker(s)).collect();
        kernels.sort();
        kernels.dedup();
        let mut exact = w.frame().exact_filters().filters().to_vec();
        exact.sort();
        prop_assert_eq!(kernels, exact);
    }

    #[test]
    fn two_element_sublocales_are_t0(l in lattice()) {
        let f = Frame::new(l).unwrap();
        for p in f.primes().iter() {
            let b = f.b_sublocale(p);
            prop_assert_eq!(b.len(), 2);
            prop_assert_eq!(&b, &f.closed_sublocale(p).intersection(&f.fit_set(&b)));
        }
    }

    #[test]
    fn precongruence_round_trip(l in lattice()) {
        let w = bench(&l);
        let f = w.frame();
        for s in w.sl().elements() {
            let r = Precongruence::of_sublocale(f, s);
            prop_assert!(r.relation().is_precongruence(f));
            prop_assert_eq!(&r.to_sublocale(f), s);
        }
    }

    #[test]
    fn codense_conucleus_commutes_with_opens_and_closeds(l in lattice()) {
        let w = bench(&l);
        let sl = w.sl();
        let host = sl.coframe();
        for d in [w.sb(), w.ssp(), w.se().unwrap()] {
            for s in 0..sl.len() {
                let nu = d.conucleus(host, s);
                for x in l.elements() {
                    let c = sl.closed(x).unwrap();
                    prop_assert_eq!(d.conucleus(host, sl.meet(s, sl.open(x))), sl.meet(nu, sl.open(x)));
                    prop_assert_eq!(d.conucleus(host, sl.meet(s, c)), sl.meet(nu, c));
                }
            }
        }
    }

    #[test]
    fn fit_is_left_adjoint_to_sigma(l in lattice()) {
        let w = bench(&l);
        let d = w.sb();
        let f_sub = w.fit_image(&d).unwrap();
        let host = w.sl().coframe();
        for s in d.iter() {
            for f in f_sub.iter() {
                let sigma = w.sigma(&f_sub, f).unwrap();
                prop_assert_eq!(w.so().leq(w.fit_to_so(s), f), w.sl().leq(s, sigma));
            }
            let fit_s = w.fit_to_so(s);
            prop_assert_eq!(d.conucleus(host, w.so_to_sl(fit_s)), w.sigma(&f_sub, fit_s).unwrap());
        }
    }

    #[test]
    fn generation_formula_matches_fixpoint(l in lattice(), picks in proptest::collection::vec(0usize..64, 0..4)) {
        let w = bench(&l);
        let m = w.sl().len();
        let x = BitSet::from_indices(m, picks.iter().map(|p| p % m));
        prop_assert_eq!(w.generated_by_formula(&x), w.generated(&x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn main_adjunction(l in lattice_on(3)) {
        let w = bench(&l);
        let report = w.verify_main_adjunction().unwrap();
        prop_assert!(report.holds(), "{:?}", report.violations);
        for f in w.enumerate(Host::Fitted, Filter::All).unwrap() {
            if w.contains_opens(&f) {
                prop_assert!(w.properness(&f).agree());
            }
        }
        prop_assert_eq!(&w.sb(), &Subcolocale::whole(w.sl().coframe()));
    }

    #[test]
    fn lifts_agree_with_smoothness_and_exactness(l in lattice_on(3)) {
        let w = bench(&l);
        for s in 0..w.sl().len() {
            let lifts = sublocale_lifts(&w, s).unwrap();
            prop_assert!(lifts.agree());
        }
    }
}
