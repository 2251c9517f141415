//! Small lattice generators: chains, Boolean algebras, down-set lattices of
//! posets, open-set lattices of finite topologies, products, and `M3`.

use alloc::vec::Vec;

use crate::bitset::mask_iter;
use crate::error::{Error, Result};
use crate::lattice::Lattice;

/// The total order `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> Lattice {
    Lattice::from_order(n, |i, j| i <= j).expect("chains are lattices")
}

/// The Boolean algebra of subsets of `k` atoms; element `i` is the subset
/// with bit mask `i`.
pub fn boolean(k: usize) -> Lattice {
    assert!(k < 16);
    Lattice::from_order(1 << k, |i, j| i & !j == 0).expect("powersets are lattices")
}

/// The five-element modular non-distributive lattice: `0` bottom, atoms
/// `1, 2, 3`, and `4` top.
pub fn diamond() -> Lattice {
    Lattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .expect("M3 is a lattice")
}

/// Componentwise product; the pair `(i, j)` has index `i * |b| + j`.
pub fn product(a: &Lattice, b: &Lattice) -> Lattice {
    let m = b.len();
    Lattice::from_order(a.len() * m, |x, y| a.leq(x / m, y / m) && b.leq(x % m, y % m))
        .expect("products of lattices are lattices")
}

/// Sorts subset masks by cardinality, then numerically, so the empty set
/// comes first and the full set last.
fn sort_masks(masks: &mut [u64]) {
    masks.sort_by_key(|&m| (m.count_ones(), m));
}

/// Inclusion lattice on a family of masks.
fn inclusion_lattice(masks: &[u64]) -> Result<Lattice> {
    Lattice::from_order(masks.len(), |i, j| masks[i] & !masks[j] == 0)
}

/// Down-sets of a poset on `points` elements, ordered by inclusion.
/// `below` lists pairs `(a, b)` meaning `a ≤ b`; the order is closed
/// reflexively and transitively. Returns the lattice together with the
/// down-set mask of each element index.
pub fn downsets_of_poset(points: usize, below: &[(usize, usize)]) -> Result<(Lattice, Vec<u64>)> {
    assert!(points <= 20, "poset too large for down-set enumeration");
    let order = Lattice::order_closure(points, below)?;
    let mut sets: Vec<u64> = (0..1u64 << points)
        .filter(|&d| {
            mask_iter(d).all(|b| (0..points).all(|a| !order[a * points + b] || d >> a & 1 == 1))
        })
        .collect();
    sort_masks(&mut sets);
    let lattice = inclusion_lattice(&sets)?;
    Ok((lattice, sets))
}

/// Checks that `opens` is a topology on `points` points.
pub fn is_topology(points: usize, opens: &[u64]) -> bool {
    let full = if points == 64 { u64::MAX } else { (1u64 << points) - 1 };
    opens.contains(&0)
        && opens.contains(&full)
        && opens.iter().all(|&u| u & !full == 0)
        && opens
            .iter()
            .all(|&u| opens.iter().all(|&v| opens.contains(&(u | v)) && opens.contains(&(u & v))))
}

/// The frame of opens of a finite topology. On finite spaces closure under
/// finite unions and intersections is closure under all of them.
pub fn opens_of_topology(points: usize, opens: &[u64]) -> Result<Lattice> {
    if points > 8 || !is_topology(points, opens) {
        return Err(Error::NotATopology);
    }
    let mut sets = opens.to_vec();
    sets.sort_unstable();
    sets.dedup();
    sort_masks(&mut sets);
    inclusion_lattice(&sets)
}

/// Every labeled topology on `points ≤ 4` points, each as a sorted list of
/// open masks. The order of the result is by the bit pattern of the family.
pub fn all_topologies(points: usize) -> Vec<Vec<u64>> {
    assert!(points <= 4, "labeled topology enumeration is limited to 4 points");
    let full = (1u64 << points) - 1;
    let subsets = 1usize << points;
    // Families always contain ∅ and the full set; enumerate the rest.
    let inner: Vec<u64> = (1..full).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1 << inner.len()) {
        let mut family = alloc::vec![0, full];
        family.extend(mask_iter(choice).map(|k| inner[k]));
        if points == 0 {
            family.truncate(1);
        }
        if is_topology(points, &family) {
            sort_masks(&mut family);
            out.push(family);
        }
    }
    debug_assert!(out.len() <= 1 << subsets);
    out
}

impl Lattice {
    /// Reflexive-transitive closure of `pairs` on `n` points as a flat
    /// `n × n` table, rejecting cycles.
    pub fn order_closure(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<bool>> {
        let mut rel = alloc::vec![false; n * n];
        for i in 0..n {
            rel[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::IndexOutOfRange { index: a.max(b), len: n });
            }
            rel[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if rel[i * n + k] {
                    for j in 0..n {
                        if rel[k * n + j] {
                            rel[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && rel[i * n + j] && rel[j * n + i] {
                    return Err(Error::NotAnOrder("cycle in poset"));
                }
            }
        }
        Ok(rel)
    }
}
