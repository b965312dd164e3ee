//! Oracles and generators shared by the integration tests. Everything here
//! works from the definitions, never from the library's search code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dicrit_core::{brute_force_dichromatic, canonical_form, CanonicalForm, Digraph};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ordered_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
        .collect()
}

/// The digraph whose arcs are the pairs selected by `mask`.
pub fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Digraph {
    Digraph::from_arcs(
        n,
        pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p),
    )
    .unwrap()
}

/// Every labelled digraph on `n` vertices.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs = ordered_pairs(n);
    (0u64..1 << pairs.len()).map(move |m| from_mask(n, &pairs, m))
}

/// Each ordered pair becomes an arc with probability `density`.
pub fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Digraph {
    let arcs: Vec<_> = ordered_pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect();
    Digraph::from_arcs(n, arcs).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, rng.gen_range(0..=i));
    }
    p
}

/// Criticality straight from the definition: the brute-force dichromatic
/// number is `k`, and it drops under every arc deletion. Isolated vertices
/// are excluded for `k >= 2` since deleting them is not an arc deletion;
/// the single vertex is the only 1-critical digraph.
pub fn critical_by_definition(d: &Digraph, k: usize) -> bool {
    if brute_force_dichromatic(d).unwrap() != k {
        return false;
    }
    if k == 1 {
        return d.order() == 1;
    }
    if !d.isolated_vertices().is_empty() {
        return false;
    }
    d.arcs()
        .all(|a| brute_force_dichromatic(&d.delete_arc(a).unwrap()).unwrap() < k)
}

/// Result of the unpruned scan over raw arc masks.
pub struct RawScan {
    pub ext: Option<usize>,
    pub minimizers: BTreeSet<CanonicalForm>,
    pub masks_examined: u64,
}

/// Next integer with the same popcount (Gosper's hack).
fn next_same_popcount(x: u64) -> u64 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

/// Minimum arc count of a `k`-critical digraph on `n` vertices by scanning
/// every arc mask in order of popcount, with no pruning at all.
pub fn raw_mask_ext(k: usize, n: usize) -> RawScan {
    let pairs = ordered_pairs(n);
    let len = pairs.len();
    let mut examined = 0;
    for m in 0..=len {
        let mut found = BTreeSet::new();
        let mut mask: u64 = (1u64 << m) - 1;
        loop {
            examined += 1;
            let d = from_mask(n, &pairs, mask);
            if critical_by_definition(&d, k) {
                found.insert(canonical_form(&d).unwrap());
            }
            if m == 0 || m == len {
                break;
            }
            mask = next_same_popcount(mask);
            if mask >> len != 0 {
                break;
            }
        }
        if !found.is_empty() {
            return RawScan {
                ext: Some(m),
                minimizers: found,
                masks_examined: examined,
            };
        }
    }
    RawScan {
        ext: None,
        minimizers: BTreeSet::new(),
        masks_examined: examined,
    }
}
