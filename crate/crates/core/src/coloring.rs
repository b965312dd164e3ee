//! Acyclic colorings and the exact dichromatic number.
//!
//! The solver colors vertices in index order. Each vertex either joins a
//! class already in use, when the class stays acyclic, or opens the next
//! fresh class. Fresh classes are interchangeable, so only one is ever
//! tried, which removes the `k!` color-permutation symmetry.

use serde::{Deserialize, Serialize};

use crate::bits::{bit, members};
use crate::digraph::{Digraph, Graph};
use crate::error::{Error, Result};

/// A color per vertex, colors in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some((v, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::ColorOutOfRange { v, color, k });
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The vertex set of color `c`.
    pub fn class(&self, c: usize) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &x)| x == c)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> usize {
        (1..=self.k).filter(|&c| self.colors.contains(&c)).count()
    }
}

/// Result of a decision query `AC_k(D) != {}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveOutcome {
    pub satisfiable: bool,
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
}

/// True iff every color class induces an acyclic subdigraph.
pub fn is_acyclic_coloring(d: &Digraph, c: &Coloring) -> Result<bool> {
    if c.len() != d.order() {
        return Err(Error::ColoringLength {
            got: c.len(),
            n: d.order(),
        });
    }
    Ok((1..=c.k()).all(|color| d.is_acyclic_on(c.class(color))))
}

struct Solver<'a> {
    out: &'a [u64],
    inn: &'a [u64],
    k: usize,
    classes: Vec<u64>,
    color: Vec<usize>,
    nodes: u64,
}

impl Solver<'_> {
    /// Whether `v` can join the acyclic set `class` without closing a cycle,
    /// i.e. no out-neighbour of `v` in the class reaches an in-neighbour.
    #[inline]
    fn can_join(&self, class: u64, v: usize) -> bool {
        let outs = self.out[v] & class;
        let ins = self.inn[v] & class;
        if outs == 0 || ins == 0 {
            return true;
        }
        if outs & ins != 0 {
            return false;
        }
        let mut seen = outs;
        let mut frontier = outs;
        while frontier != 0 {
            let mut next = 0;
            for u in members(frontier) {
                next |= self.out[u];
            }
            next &= class & !seen;
            if next & ins != 0 {
                return false;
            }
            seen |= next;
            frontier = next;
        }
        true
    }

    fn extend(&mut self, v: usize) -> bool {
        if v == self.color.len() {
            return true;
        }
        self.nodes += 1;
        let used = self.classes.len();
        for c in 0..used {
            if self.can_join(self.classes[c], v) {
                self.classes[c] |= bit(v);
                self.color[v] = c + 1;
                if self.extend(v + 1) {
                    return true;
                }
                self.classes[c] &= !bit(v);
            }
        }
        if used < self.k {
            self.classes.push(bit(v));
            self.color[v] = used + 1;
            if self.extend(v + 1) {
                return true;
            }
            self.classes.pop();
        }
        self.color[v] = 0;
        false
    }
}

/// Decides whether `d` has an acyclic `k`-coloring, returning a witness
/// when it does. The outcome is a deterministic function of the input.
pub fn exists_acyclic_k_coloring(d: &Digraph, k: usize) -> SolveOutcome {
    let n = d.order();
    if n == 0 {
        return SolveOutcome {
            satisfiable: true,
            witness: Some(Coloring { k, colors: vec![] }),
            nodes_explored: 0,
        };
    }
    let mut solver = Solver {
        out: d.out_rows(),
        inn: d.in_rows(),
        k,
        classes: Vec::with_capacity(k.min(n)),
        color: vec![0; n],
        nodes: 0,
    };
    let satisfiable = k > 0 && solver.extend(0);
    SolveOutcome {
        satisfiable,
        witness: satisfiable.then(|| Coloring {
            k,
            colors: solver.color.clone(),
        }),
        nodes_explored: solver.nodes,
    }
}

/// The dichromatic number together with an optimal coloring.
pub fn dichromatic_number_with_witness(d: &Digraph) -> (usize, Coloring) {
    for k in 0..=d.order() {
        let outcome = exists_acyclic_k_coloring(d, k);
        if let Some(w) = outcome.witness {
            return (k, w);
        }
    }
    unreachable!("singleton classes always give an acyclic coloring")
}

pub fn dichromatic_number(d: &Digraph) -> usize {
    dichromatic_number_with_witness(d).0
}

/// Chromatic number of a graph by the classic independent-set branching.
/// Deliberately shares no code with the acyclic solver.
pub fn chromatic_number(g: &Graph) -> usize {
    fn extend(g: &Graph, v: usize, k: usize, classes: &mut Vec<u64>) -> bool {
        if v == g.order() {
            return true;
        }
        for c in 0..classes.len() {
            if g.neighbors(v) & classes[c] == 0 {
                classes[c] |= bit(v);
                if extend(g, v + 1, k, classes) {
                    return true;
                }
                classes[c] &= !bit(v);
            }
        }
        if classes.len() < k {
            classes.push(bit(v));
            if extend(g, v + 1, k, classes) {
                return true;
            }
            classes.pop();
        }
        false
    }
    if g.order() == 0 {
        return 0;
    }
    (1..=g.order())
        .find(|&k| extend(g, 0, k, &mut Vec::new()))
        .expect("n colors always suffice")
}

/// Largest order accepted by [`brute_force_dichromatic`].
pub const BRUTE_FORCE_MAX_ORDER: usize = 8;

/// The dichromatic number by trying every one of the `k^n` assignments for
/// `k = 0, 1, ..`. Exponential; used as an independent test oracle.
pub fn brute_force_dichromatic(d: &Digraph) -> Result<usize> {
    let n = d.order();
    if n > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: BRUTE_FORCE_MAX_ORDER,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    for k in 1..=n {
        let mut colors = vec![1usize; n];
        loop {
            let c = Coloring {
                k,
                colors: colors.clone(),
            };
            if is_acyclic_coloring(d, &c)? {
                return Ok(k);
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] == k {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("k = n always admits an acyclic coloring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::biorient;

    fn cycle(n: usize) -> Digraph {
        Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn bicomplete(n: usize) -> Digraph {
        biorient(&Graph::complete(n).unwrap())
    }

    #[test]
    fn acyclic_coloring_predicate() {
        let c3 = cycle(3);
        assert!(is_acyclic_coloring(&c3, &Coloring::new(vec![1, 1, 2], 2).unwrap()).unwrap());
        assert!(!is_acyclic_coloring(&c3, &Coloring::new(vec![1, 1, 1], 1).unwrap()).unwrap());
        assert!(
            is_acyclic_coloring(&bicomplete(3), &Coloring::new(vec![1, 2, 3], 3).unwrap()).unwrap()
        );
        assert_eq!(
            is_acyclic_coloring(&c3, &Coloring::new(vec![1, 1], 1).unwrap()),
            Err(Error::ColoringLength { got: 2, n: 3 })
        );
        assert!(Coloring::new(vec![1, 0], 2).is_err());
        assert!(Coloring::new(vec![3], 2).is_err());
    }

    #[test]
    fn decision_examples() {
        assert!(!exists_acyclic_k_coloring(&cycle(3), 1).satisfiable);
        let two = exists_acyclic_k_coloring(&cycle(3), 2);
        assert!(two.satisfiable);
        assert!(is_acyclic_coloring(&cycle(3), two.witness.as_ref().unwrap()).unwrap());
        let k4 = exists_acyclic_k_coloring(&bicomplete(4), 3);
        assert!(!k4.satisfiable);
        assert!(k4.witness.is_none());
        assert!(k4.nodes_explored > 0);
    }

    #[test]
    fn zero_colors_only_for_the_empty_digraph() {
        assert!(exists_acyclic_k_coloring(&Digraph::empty(0).unwrap(), 0).satisfiable);
        assert!(!exists_acyclic_k_coloring(&Digraph::empty(1).unwrap(), 0).satisfiable);
    }

    #[test]
    fn deterministic_witness() {
        let d = biorient(&Graph::cycle(7).unwrap());
        let a = exists_acyclic_k_coloring(&d, 3);
        let b = exists_acyclic_k_coloring(&d, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn dichromatic_examples() {
        assert_eq!(dichromatic_number(&Digraph::empty(0).unwrap()), 0);
        assert_eq!(dichromatic_number(&Digraph::empty(3).unwrap()), 1);
        assert_eq!(dichromatic_number(&biorient(&Graph::cycle(5).unwrap())), 3);
        assert_eq!(dichromatic_number(&bicomplete(5)), 5);
        assert_eq!(dichromatic_number(&cycle(2)), 2);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()), 4);
        assert_eq!(chromatic_number(&Graph::path(4).unwrap()), 2);
        assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_dichromatic(&cycle(4)).unwrap(), 2);
        assert_eq!(brute_force_dichromatic(&bicomplete(3)).unwrap(), 3);
        assert!(brute_force_dichromatic(&Digraph::empty(9).unwrap()).is_err());
    }

    #[test]
    fn coloring_class_helpers() {
        let c = Coloring::new(vec![2, 1, 2], 3).unwrap();
        assert_eq!(c.class(2), 0b101);
        assert_eq!(c.used_colors(), 2);
    }
}
