use pointfree::corpus;
use pointfree::format::{parse, serialize};
use pointfree_core::generators::downsets_of_poset;
use proptest::prelude::*;

#[test]
fn corpus_round_trips_bit_exactly() {
    for e in corpus::with_sample(11, 20).into_iter().chain(corpus::non_frames()) {
        let text = serialize(&e.lattice);
        let back = parse(&text, true).unwrap();
        assert_eq!(back, e.lattice, "{}", e.name);
        assert_eq!(serialize(&back), text, "{}", e.name);
    }
}

fn poset() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..6).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..8)
            .prop_map(|v| v.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>());
        (Just(n), pairs)
    })
}

proptest! {
    #[test]
    fn downset_lattices_round_trip((n, pairs) in poset()) {
        let (lattice, _) = downsets_of_poset(n, &pairs).unwrap();
        let text = serialize(&lattice);
        prop_assert_eq!(parse(&text, true).unwrap(), lattice.clone());
        prop_assert_eq!(parse(&text, false).unwrap(), lattice);
    }
}
