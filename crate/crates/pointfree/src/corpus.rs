//! The frame corpus: chains, Boolean algebras, every labeled topology on
//! three points, and a seeded sample of four-point topologies. `M3` is kept
//! apart as the lattice that is not a frame.

use pointfree_core::generators::{all_topologies, boolean, chain, diamond, opens_of_topology};
use pointfree_core::Lattice;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Entry {
    pub name: String,
    pub lattice: Lattice,
}

fn entry(name: String, lattice: Lattice) -> Entry {
    Entry { name, lattice }
}

/// Chains of length 1 to 6, Boolean algebras on 0 to 3 atoms, and the 29
/// labeled topologies on three points.
pub fn base() -> Vec<Entry> {
    let mut out: Vec<Entry> = (1..=6).map(|n| entry(format!("chain-{n}"), chain(n))).collect();
    out.extend((0..=3).map(|k| entry(format!("boolean-{k}"), boolean(k))));
    out.extend(topologies(3));
    out
}

/// The opens lattices of every labeled topology on `points` points, named
/// `top<points>-<k>` with `k` the zero-padded position in enumeration order.
pub fn topologies(points: usize) -> Vec<Entry> {
    let all = all_topologies(points);
    let width = all.len().to_string().len();
    all.iter()
        .enumerate()
        .map(|(k, opens)| {
            let lattice = opens_of_topology(points, opens).expect("enumerated families are topologies");
            entry(format!("top{points}-{k:0width$}"), lattice)
        })
        .collect()
}

/// `count` four-point topologies chosen deterministically from `seed`,
/// listed in enumeration order.
pub fn sample_four_point(seed: u64, count: usize) -> Vec<Entry> {
    let all = topologies(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<usize> = (0..all.len()).collect();
    picked.shuffle(&mut rng);
    picked.truncate(count);
    picked.sort_unstable();
    picked.into_iter().map(|k| all[k].clone()).collect()
}

/// `base()` plus `count` sampled four-point topologies.
pub fn with_sample(seed: u64, count: usize) -> Vec<Entry> {
    let mut out = base();
    out.extend(sample_four_point(seed, count));
    out
}

/// Lattices that are deliberately not frames.
pub fn non_frames() -> Vec<Entry> {
    vec![entry("diamond-M3".into(), diamond())]
}
