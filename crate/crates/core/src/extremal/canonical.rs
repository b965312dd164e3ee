//! Canonical forms by exhaustive permutation minimisation.
//!
//! A labelled digraph is encoded column by column: for `j = 1..n` and
//! `i = 0..j` the bits `[ij ∈ A, ji ∈ A]`. The canonical form is the
//! lexicographically smallest such bit string over all relabellings. The
//! minimum is found depth-first, fixing one vertex per position and cutting
//! any branch whose prefix already exceeds the best string found.

use std::fmt;

use crate::bits::{bit, contains};
use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Largest order accepted by [`canonical_form`].
pub const CANONICAL_MAX_ORDER: usize = 9;

/// Bit string of the minimal relabelling. Equal iff the digraphs are
/// isomorphic; ordered by order, then by the bit string.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

impl CanonicalForm {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Length of the encoding in bits.
    pub fn len(&self) -> usize {
        let n = self.order();
        n * n.saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The canonically labelled digraph.
    pub fn to_digraph(&self) -> Digraph {
        let n = self.order();
        let len = self.len();
        let mut out = vec![0u64; n];
        let mut t = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (len - 1 - t) & 1 == 1 {
                    out[i] |= bit(j);
                }
                if self.bits >> (len - 2 - t) & 1 == 1 {
                    out[j] |= bit(i);
                }
                t += 2;
            }
        }
        Digraph::from_rows_unchecked(n, out)
    }

    /// Hex rendering of the bit string, prefixed by the order.
    pub fn to_hex(&self) -> String {
        let digits = self.len().div_ceil(4).max(1);
        let padded = self.bits << (digits * 4 - self.len());
        format!("{}:{:0width$x}", self.n, padded, width = digits)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Column `j` of the encoding for the partial labelling `order[..=j]`.
#[inline]
fn column(d: &Digraph, order: &[usize], j: usize) -> u32 {
    let vj = order[j];
    let (out_j, in_j) = (d.out_neighbors(vj), d.in_neighbors(vj));
    order[..j].iter().fold(0u32, |acc, &vi| {
        acc << 2 | (contains(in_j, vi) as u32) << 1 | contains(out_j, vi) as u32
    })
}

struct Minimiser<'a> {
    d: &'a Digraph,
    order: Vec<usize>,
    cols: Vec<u32>,
    best: Option<Vec<u32>>,
}

impl Minimiser<'_> {
    fn search(&mut self, depth: usize, used: u64) {
        let n = self.d.order();
        if depth == n {
            if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..n {
            if contains(used, v) {
                continue;
            }
            self.order[depth] = v;
            self.cols[depth] = column(self.d, &self.order, depth);
            if let Some(best) = &self.best {
                if self.cols[..=depth] > best[..=depth] {
                    continue;
                }
            }
            self.search(depth + 1, used | bit(v));
        }
    }
}

/// The canonical form of `d`, for orders up to [`CANONICAL_MAX_ORDER`].
pub fn canonical_form(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.order();
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: CANONICAL_MAX_ORDER,
        });
    }
    let mut m = Minimiser {
        d,
        order: vec![0; n],
        cols: vec![0; n],
        best: None,
    };
    m.search(0, 0);
    let best = m.best.expect("at least one labelling");
    let bits = best
        .iter()
        .enumerate()
        .fold(0u128, |acc, (j, &c)| acc << (2 * j) | c as u128);
    Ok(CanonicalForm { n: n as u8, bits })
}

/// The canonical form of `d` relabelled by `order` (position `j` holds the
/// old vertex `order[j]`), without minimisation.
pub fn encode_labelled(d: &Digraph, order: &[usize]) -> CanonicalForm {
    let bits = (0..order.len()).fold(0u128, |acc, j| acc << (2 * j) | column(d, order, j) as u128);
    CanonicalForm {
        n: order.len() as u8,
        bits,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{bidirected_cycle, directed_cycle};

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut all = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                all.push(q);
            }
        }
        all
    }

    /// Minimum over every labelling, no pruning.
    fn brute_force(d: &Digraph) -> CanonicalForm {
        permutations(d.order())
            .into_iter()
            .map(|order| encode_labelled(d, &order))
            .min_by_key(|f| f.bits)
            .unwrap()
    }

    #[test]
    fn triangle_relabellings_agree() {
        let c3 = directed_cycle(3).unwrap();
        let f = canonical_form(&c3).unwrap();
        for perm in permutations(3) {
            assert_eq!(canonical_form(&c3.relabel(&perm).unwrap()).unwrap(), f);
        }
        assert_eq!(canonical_form(&c3.reverse()).unwrap(), f);
    }

    #[test]
    fn digon_differs_from_single_arc() {
        let digon = directed_cycle(2).unwrap();
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_ne!(
            canonical_form(&digon).unwrap(),
            canonical_form(&arc).unwrap()
        );
    }

    #[test]
    fn decoding_gives_an_isomorphic_digraph() {
        let d = bidirected_cycle(5)
            .unwrap()
            .delete_arc((0, 1).into())
            .unwrap();
        let f = canonical_form(&d).unwrap();
        let back = f.to_digraph();
        assert_eq!(back.arc_count(), d.arc_count());
        assert_eq!(canonical_form(&back).unwrap(), f);
        assert_eq!(encode_labelled(&back, &[0, 1, 2, 3, 4]), f);
    }

    fn all_digraphs(n: usize) -> Vec<Digraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        (0u32..1 << pairs.len())
            .map(|mask| {
                Digraph::from_arcs(
                    n,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p),
                )
                .unwrap()
            })
            .collect()
    }

    #[test]
    fn matches_unpruned_minimum_exhaustively_on_four_vertices() {
        for d in all_digraphs(4) {
            assert_eq!(canonical_form(&d).unwrap(), brute_force(&d), "{d:?}");
        }
    }

    #[test]
    fn counts_isomorphism_classes() {
        // known counts of unlabelled digraphs on 3 and 4 vertices
        for (n, classes) in [(3, 16), (4, 218)] {
            let forms: std::collections::BTreeSet<_> = all_digraphs(n)
                .iter()
                .map(|d| canonical_form(d).unwrap())
                .collect();
            assert_eq!(forms.len(), classes);
        }
    }

    #[test]
    fn rejects_large_orders() {
        assert!(canonical_form(&Digraph::empty(10).unwrap()).is_err());
        assert!(canonical_form(&Digraph::empty(9).unwrap()).is_ok());
        assert_eq!(
            canonical_form(&Digraph::empty(0).unwrap())
                .unwrap()
                .to_hex(),
            "0:0"
        );
    }
}
