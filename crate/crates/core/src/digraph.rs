//! Dense bitset digraphs and graphs.
//!
//! Vertices are `0..n` with `n <= 64`; row `v` of the adjacency is a `u64`
//! whose bit `w` is set iff the arc `vw` (or edge `vw`) is present. Both
//! types are immutable values: every operation that changes the structure
//! returns a new value.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, contains, members};
use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// An ordered pair of distinct vertices. Serialised as `[tail, head]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub const fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }

    pub const fn reversed(self) -> Self {
        Arc::new(self.head, self.tail)
    }
}

impl From<(usize, usize)> for Arc {
    fn from((tail, head): (usize, usize)) -> Self {
        Arc::new(tail, head)
    }
}

impl From<[usize; 2]> for Arc {
    fn from([tail, head]: [usize; 2]) -> Self {
        Arc::new(tail, head)
    }
}

impl From<Arc> for [usize; 2] {
    fn from(a: Arc) -> Self {
        [a.tail, a.head]
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.tail, self.head)
    }
}

/// Correspondence between the vertices of a derived digraph and the digraph
/// it was derived from. `new_to_old[i]` is the original label of new vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    new_to_old: Vec<usize>,
}

impl VertexMap {
    pub fn new_to_old(&self, v: usize) -> usize {
        self.new_to_old[v]
    }

    pub fn old_to_new(&self, v: usize) -> Option<usize> {
        self.new_to_old.iter().position(|&o| o == v)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.new_to_old
    }

    pub fn len(&self) -> usize {
        self.new_to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.new_to_old.is_empty()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge { n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// A digraph without loops or parallel arcs; digons are allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
}

impl Digraph {
    /// The arcless digraph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Digraph {
            n,
            out: vec![0; n],
            inn: vec![0; n],
        })
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<Arc>,
    {
        check_order(n)?;
        let mut out = vec![0u64; n];
        for a in arcs {
            let Arc { tail, head } = a.into();
            if tail >= n || head >= n {
                return Err(Error::VertexOutOfRange { tail, head, n });
            }
            if tail == head {
                return Err(Error::Loop { tail, head });
            }
            if contains(out[tail], head) {
                return Err(Error::DuplicateArc { tail, head });
            }
            out[tail] |= bit(head);
        }
        Ok(Self::from_rows_unchecked(n, out))
    }

    /// Builds a digraph from out-neighbourhood rows.
    pub fn from_out_rows(rows: &[u64]) -> Result<Self> {
        let n = rows.len();
        check_order(n)?;
        let all = bits::full(n);
        for (v, &row) in rows.iter().enumerate() {
            if contains(row, v) {
                return Err(Error::Loop { tail: v, head: v });
            }
            if row & !all != 0 {
                let head = (row & !all).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { tail: v, head, n });
            }
        }
        Ok(Self::from_rows_unchecked(n, rows.to_vec()))
    }

    pub(crate) fn from_rows_unchecked(n: usize, out: Vec<u64>) -> Self {
        debug_assert_eq!(out.len(), n);
        let mut inn = vec![0u64; n];
        for (u, &row) in out.iter().enumerate() {
            for v in members(row) {
                inn[v] |= bit(u);
            }
        }
        Digraph { n, out, inn }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// All vertices as a set.
    pub fn vertex_set(&self) -> u64 {
        bits::full(self.n)
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.n && head < self.n && contains(self.out[tail], head)
    }

    pub fn has_digon(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) && self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> u64 {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> u64 {
        self.inn[v]
    }

    pub fn out_rows(&self) -> &[u64] {
        &self.out
    }

    pub fn in_rows(&self) -> &[u64] {
        &self.inn
    }

    pub fn out_degree(&self, v: usize) -> usize {
        bits::len(self.out[v])
    }

    pub fn in_degree(&self, v: usize) -> usize {
        bits::len(self.inn[v])
    }

    /// Per-vertex `(out-degree, in-degree)`.
    pub fn degrees(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .map(|v| (self.out_degree(v), self.in_degree(v)))
            .collect()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| members(row).map(move |v| Arc::new(u, v)))
    }

    /// Vertices with no incident arc.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.out[v] | self.inn[v] == 0)
            .collect()
    }

    /// `uv` is an arc of the result iff `u != v` and `uv` is not an arc here.
    pub fn complement(&self) -> Digraph {
        let all = self.vertex_set();
        let out = (0..self.n).map(|v| all & !bit(v) & !self.out[v]).collect();
        Self::from_rows_unchecked(self.n, out)
    }

    /// The digraph with every arc reversed.
    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Subdigraph induced by `vertices`, relabelled `0..|vertices|` in the
    /// order the vertices are given.
    pub fn induced(&self, vertices: &[usize]) -> Result<(Digraph, VertexMap)> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n || contains(seen, v) {
                return Err(Error::MissingVertex { v, n: self.n });
            }
            seen |= bit(v);
        }
        let out = vertices
            .iter()
            .map(|&u| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &v)| contains(self.out[u], v))
                    .fold(0u64, |acc, (j, _)| acc | bit(j))
            })
            .collect();
        Ok((
            Self::from_rows_unchecked(vertices.len(), out),
            VertexMap {
                new_to_old: vertices.to_vec(),
            },
        ))
    }

    /// Subdigraph induced by a vertex set, keeping the relative order.
    pub fn induced_set(&self, set: u64) -> (Digraph, VertexMap) {
        let vs: Vec<usize> = members(set & self.vertex_set()).collect();
        self.induced(&vs).expect("members of the vertex set")
    }

    pub fn delete_arc(&self, a: Arc) -> Result<Digraph> {
        if !self.has_arc(a.tail, a.head) {
            return Err(Error::MissingArc {
                tail: a.tail,
                head: a.head,
            });
        }
        let mut d = self.clone();
        d.out[a.tail] &= !bit(a.head);
        d.inn[a.head] &= !bit(a.tail);
        Ok(d)
    }

    pub fn add_arc(&self, a: Arc) -> Result<Digraph> {
        let Arc { tail, head } = a;
        if tail >= self.n || head >= self.n {
            return Err(Error::VertexOutOfRange {
                tail,
                head,
                n: self.n,
            });
        }
        if tail == head {
            return Err(Error::Loop { tail, head });
        }
        if self.has_arc(tail, head) {
            return Err(Error::DuplicateArc { tail, head });
        }
        let mut d = self.clone();
        d.out[tail] |= bit(head);
        d.inn[head] |= bit(tail);
        Ok(d)
    }

    /// Removes `v`; the remaining vertices are relabelled `0..n-1` in order.
    pub fn delete_vertex(&self, v: usize) -> Result<(Digraph, VertexMap)> {
        if v >= self.n {
            return Err(Error::MissingVertex { v, n: self.n });
        }
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Applies a relabelling: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParams(format!(
                "permutation of length {} for order {}",
                perm.len(),
                self.n
            )));
        }
        let mut hit = 0u64;
        for &p in perm {
            if p >= self.n || contains(hit, p) {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            hit |= bit(p);
        }
        let mut out = vec![0u64; self.n];
        for (u, &row) in self.out.iter().enumerate() {
            out[perm[u]] = members(row).fold(0, |acc, v| acc | bit(perm[v]));
        }
        Ok(Self::from_rows_unchecked(self.n, out))
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_on(self.vertex_set())
    }

    /// Whether the subdigraph induced by `set` has no directed cycle, by
    /// repeatedly peeling off sources.
    pub fn is_acyclic_on(&self, set: u64) -> bool {
        let mut rest = set & self.vertex_set();
        while rest != 0 {
            let source = members(rest).find(|&v| self.inn[v] & rest == 0);
            match source {
                Some(v) => rest &= !bit(v),
                None => return false,
            }
        }
        true
    }

    /// A topological order of the vertices, if one exists.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut rest = self.vertex_set();
        let mut order = Vec::with_capacity(self.n);
        while rest != 0 {
            let v = members(rest).find(|&v| self.inn[v] & rest == 0)?;
            order.push(v);
            rest &= !bit(v);
        }
        Some(order)
    }

    /// Vertices reachable from `from` by directed paths inside `within`
    /// (including `from` itself when it lies in `within`).
    pub fn reachable_within(&self, from: usize, within: u64) -> u64 {
        if !contains(within, from) {
            return 0;
        }
        let mut seen = bit(from);
        let mut frontier = seen;
        while frontier != 0 {
            let next = members(frontier).fold(0u64, |acc, u| acc | self.out[u]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// True iff every arc lies in a digon.
    pub fn is_symmetric(&self) -> bool {
        self.out == self.inn
    }

    /// The underlying graph of a symmetric digraph.
    pub fn symmetric_graph(&self) -> Option<Graph> {
        self.is_symmetric().then(|| Graph {
            n: self.n,
            adj: self.out.clone(),
        })
    }

    /// True iff the digraph is a single directed cycle through all its
    /// vertices (order at least 2).
    pub fn is_directed_cycle(&self) -> bool {
        if self.n < 2 {
            return false;
        }
        if (0..self.n).any(|v| self.out_degree(v) != 1 || self.in_degree(v) != 1) {
            return false;
        }
        let mut v = 0;
        for step in 1..=self.n {
            v = self.out[v].trailing_zeros() as usize;
            if v == 0 {
                return step == self.n;
            }
        }
        false
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field(
                "arcs",
                &self.arcs().map(|a| (a.tail, a.head)).collect::<Vec<_>>(),
            )
            .finish()
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    tail: u,
                    head: v,
                    n,
                });
            }
            if u == v {
                return Err(Error::Loop { tail: u, head: v });
            }
            if contains(g.adj[u], v) {
                return Err(Error::DuplicateArc { tail: u, head: v });
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        check_order(n)?;
        let all = bits::full(n);
        Ok(Graph {
            n,
            adj: (0..n).map(|v| all & !bit(v)).collect(),
        })
    }

    /// The cycle `0 - 1 - .. - (n-1) - 0`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParams(format!(
                "cycle of order {n} (need n >= 3)"
            )));
        }
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && contains(self.adj[u], v)
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::len(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| members(row & !bits::full(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let next = members(frontier).fold(0, |acc, u| acc | self.adj[u]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen == bits::full(self.n)
    }

    /// True iff the graph is a single cycle through all vertices.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && (0..self.n).all(|v| self.degree(v) == 2) && self.is_connected()
    }
}

/// The biorientation: every edge becomes a digon.
pub fn biorient(g: &Graph) -> Digraph {
    Digraph::from_rows_unchecked(g.n, g.adj.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3() -> Digraph {
        Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn transpose_consistent(d: &Digraph) -> bool {
        (0..d.order()).all(|u| {
            (0..d.order())
                .all(|v| contains(d.out_neighbors(u), v) == contains(d.in_neighbors(v), u))
        })
    }

    #[test]
    fn make_digraph_examples() {
        let d = c3();
        assert_eq!(d.degrees(), vec![(1, 1); 3]);
        let k1 = Digraph::from_arcs(1, Vec::<Arc>::new()).unwrap();
        assert_eq!((k1.order(), k1.arc_count()), (1, 0));
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(digon.has_digon(0, 1));
        assert!(digon.is_directed_cycle());
    }

    #[test]
    fn make_digraph_errors_name_the_arc() {
        assert_eq!(
            Digraph::from_arcs(3, [(0, 1), (0, 1)]),
            Err(Error::DuplicateArc { tail: 0, head: 1 })
        );
        assert_eq!(
            Digraph::from_arcs(3, [(2, 2)]),
            Err(Error::Loop { tail: 2, head: 2 })
        );
        assert_eq!(
            Digraph::from_arcs(3, [(0, 3)]),
            Err(Error::VertexOutOfRange {
                tail: 0,
                head: 3,
                n: 3
            })
        );
        assert!(matches!(
            Digraph::empty(65),
            Err(Error::OrderTooLarge { n: 65, .. })
        ));
        assert!(Digraph::from_out_rows(&[0b1]).is_err());
    }

    #[test]
    fn biorient_examples() {
        let k2 = biorient(&Graph::complete(2).unwrap());
        assert_eq!(k2, Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap());
        let k1 = biorient(&Graph::complete(1).unwrap());
        assert_eq!((k1.order(), k1.arc_count()), (1, 0));
        let c5 = biorient(&Graph::cycle(5).unwrap());
        assert_eq!(c5.arc_count(), 10);
        assert_eq!(c5.degrees(), vec![(2, 2); 5]);
        assert!(transpose_consistent(&c5));
    }

    #[test]
    fn complement_examples() {
        let k3 = biorient(&Graph::complete(3).unwrap());
        assert_eq!(k3.complement().arc_count(), 0);
        assert_eq!(
            Digraph::empty(4).unwrap().complement(),
            biorient(&Graph::complete(4).unwrap())
        );
        let reversed = Digraph::from_arcs(3, [(1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(c3().complement(), reversed);
        assert_eq!(c3().reverse(), reversed);
    }

    #[test]
    fn induced_examples() {
        let (d, map) = c3().induced(&[0, 1]).unwrap();
        assert_eq!(d, Digraph::from_arcs(2, [(0, 1)]).unwrap());
        assert_eq!(map.as_slice(), &[0, 1]);
        assert_eq!(c3().induced(&[0, 1, 2]).unwrap().0, c3());
        let k4 = biorient(&Graph::complete(4).unwrap());
        let (pair, map) = k4.induced(&[3, 1]).unwrap();
        assert_eq!(pair, Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap());
        assert_eq!(map.new_to_old(0), 3);
        assert_eq!(map.old_to_new(1), Some(1));
        assert!(c3().induced(&[0, 0]).is_err());
    }

    #[test]
    fn deletion_examples() {
        let path = c3().delete_arc(Arc::new(0, 1)).unwrap();
        assert!(path.is_acyclic());
        assert_eq!(path.order(), 3);
        let (e, map) = Digraph::empty(1).unwrap().delete_vertex(0).unwrap();
        assert_eq!(e.order(), 0);
        assert!(map.is_empty());
        let k3 = biorient(&Graph::complete(3).unwrap());
        assert_eq!(k3.delete_arc(Arc::new(0, 1)).unwrap().arc_count(), 5);
        assert_eq!(
            path.delete_arc(Arc::new(0, 1)),
            Err(Error::MissingArc { tail: 0, head: 1 })
        );
        assert!(c3().delete_vertex(3).is_err());
        let (d, map) = c3().delete_vertex(1).unwrap();
        assert_eq!(d, Digraph::from_arcs(2, [(1, 0)]).unwrap());
        assert_eq!(map.as_slice(), &[0, 2]);
    }

    #[test]
    fn acyclicity_examples() {
        assert!(!Digraph::from_arcs(2, [(0, 1), (1, 0)])
            .unwrap()
            .is_acyclic());
        let tt4 = Digraph::from_arcs(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(tt4.is_acyclic());
        assert_eq!(tt4.topological_order(), Some(vec![0, 1, 2, 3]));
        assert!(c3().delete_arc(Arc::new(2, 0)).unwrap().is_acyclic());
        assert!(!c3().is_acyclic());
        assert!(c3().topological_order().is_none());
    }

    #[test]
    fn degree_examples() {
        let c6 = Digraph::from_arcs(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(c6.degrees(), vec![(1, 1); 6]);
        let k5 = biorient(&Graph::complete(5).unwrap());
        assert_eq!(k5.degrees(), vec![(4, 4); 5]);
        let arc = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(arc.degrees(), vec![(1, 0), (0, 1)]);
    }

    /// Searches for a directed cycle by trying every sequence of distinct
    /// vertices of length at least two.
    fn has_cycle_brute_force(d: &Digraph) -> bool {
        fn extend(d: &Digraph, path: &mut Vec<usize>) -> bool {
            let (first, last) = (path[0], *path.last().unwrap());
            if path.len() >= 2 && d.has_arc(last, first) {
                return true;
            }
            for v in 0..d.order() {
                if !path.contains(&v) && d.has_arc(last, v) {
                    path.push(v);
                    if extend(d, path) {
                        return true;
                    }
                    path.pop();
                }
            }
            false
        }
        (0..d.order()).any(|s| extend(d, &mut vec![s]))
    }

    fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
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
    }

    #[test]
    fn acyclicity_matches_brute_force_cycle_search() {
        for n in 0..=4 {
            let mut count = 0;
            for d in all_digraphs(n) {
                assert_eq!(d.is_acyclic(), !has_cycle_brute_force(&d), "{d:?}");
                assert!(transpose_consistent(&d));
                count += 1;
            }
            assert_eq!(count, 1usize << (n * n.saturating_sub(1)));
        }
    }

    #[test]
    fn complement_counts_and_involution_exhaustive() {
        for d in all_digraphs(4) {
            let c = d.complement();
            assert!(transpose_consistent(&c));
            assert_eq!(d.arc_count() + c.arc_count(), 12);
            assert_eq!(c.complement(), d);
        }
    }

    #[test]
    fn directed_cycle_recognition() {
        assert!(c3().is_directed_cycle());
        let two_cycles = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2)]).unwrap();
        assert!(!two_cycles.is_directed_cycle());
        assert!(!Digraph::empty(1).unwrap().is_directed_cycle());
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        assert!(c3().relabel(&[0, 0, 1]).is_err());
        assert!(c3().relabel(&[0, 1]).is_err());
        let r = c3().relabel(&[1, 2, 0]).unwrap();
        assert_eq!(r, Digraph::from_arcs(3, [(1, 2), (2, 0), (0, 1)]).unwrap());
    }

    #[test]
    fn graph_basics() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(c5.is_cycle());
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.edges().count(), 5);
        assert!(!Graph::path(4).unwrap().is_cycle());
        assert!(Graph::cycle(2).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
        let d = biorient(&c5);
        assert_eq!(d.symmetric_graph(), Some(c5));
        assert!(c3().symmetric_graph().is_none());
    }
}
