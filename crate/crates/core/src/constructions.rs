//! Digraph families: cycles, bidirected cliques, the Dirac and Hajós joins,
//! Dirac–Gallai (DG) graphs and digraphs, and the extremal family
//! `D±(K_{k-p-1}) ⊞ DG→(p+1)`.

use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, members};
use crate::digraph::{biorient, Arc, Digraph, Graph, MAX_ORDER};
use crate::error::{Error, Result};

/// The directed cycle `0 -> 1 -> .. -> n-1 -> 0`, `n >= 2`.
pub fn directed_cycle(n: usize) -> Result<Digraph> {
    if n < 2 {
        return Err(Error::InvalidParams(format!(
            "directed cycle of order {n} (need n >= 2)"
        )));
    }
    Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The biorientation of the cycle `C_n`, `n >= 3`.
pub fn bidirected_cycle(n: usize) -> Result<Digraph> {
    Ok(biorient(&Graph::cycle(n)?))
}

/// `D±(K_k)`, `k >= 1`.
pub fn bidirected_complete(k: usize) -> Result<Digraph> {
    if k == 0 {
        return Err(Error::InvalidParams(
            "bidirected complete digraph of order 0".into(),
        ));
    }
    Ok(biorient(&Graph::complete(k)?))
}

/// Disjoint union plus a digon between every vertex of `d1` and every
/// vertex of `d2`. `d1` keeps labels `0..n1`; `d2` is shifted by `n1`.
pub fn dirac_join(d1: &Digraph, d2: &Digraph) -> Result<Digraph> {
    let (n1, n2) = (d1.order(), d2.order());
    let n = n1 + n2;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let left = bits::full(n1);
    let right = bits::full(n) & !left;
    let mut out = Vec::with_capacity(n);
    out.extend(d1.out_rows().iter().map(|&r| r | right));
    out.extend(d2.out_rows().iter().map(|&r| r << n1 | left));
    Ok(Digraph::from_rows_unchecked(n, out))
}

/// Dirac join of a sequence of digraphs, left to right.
pub fn dirac_join_all<'a, I>(parts: I) -> Result<Digraph>
where
    I: IntoIterator<Item = &'a Digraph>,
{
    parts
        .into_iter()
        .try_fold(Digraph::empty(0)?, |acc, d| dirac_join(&acc, d))
}

/// Hajós join of `d1` and `d2` along `a1 = u1v1 ∈ A(d1)` and
/// `a2 = v2u2 ∈ A(d2)`: both arcs are deleted, `v1` and `v2` are
/// identified and the arc `u1u2` is added.
///
/// Vertices of `d1` keep their labels and the identified vertex is `v1`;
/// the remaining vertices of `d2` follow in their original order.
pub fn hajos_join(d1: &Digraph, a1: Arc, d2: &Digraph, a2: Arc) -> Result<Digraph> {
    for (d, a) in [(d1, a1), (d2, a2)] {
        if !d.has_arc(a.tail, a.head) {
            return Err(Error::MissingArc {
                tail: a.tail,
                head: a.head,
            });
        }
    }
    let (n1, n2) = (d1.order(), d2.order());
    let n = n1 + n2 - 1;
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    let (u1, v1) = (a1.tail, a1.head);
    let (v2, u2) = (a2.tail, a2.head);
    let map2 = |w: usize| -> usize {
        match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => n1 + w,
            std::cmp::Ordering::Greater => n1 + w - 1,
        }
    };
    let mut out = vec![0u64; n];
    out[..n1].copy_from_slice(d1.out_rows());
    out[u1] &= !bit(v1);
    for w in 0..n2 {
        let mut row = d2.out_neighbors(w);
        if w == v2 {
            row &= !bit(u2);
        }
        let row = members(row).fold(0u64, |acc, x| acc | bit(map2(x)));
        out[map2(w)] |= row;
    }
    out[u1] |= bit(map2(u2));
    Ok(Digraph::from_rows_unchecked(n, out))
}

/// Part sizes of a Dirac–Gallai graph: `|X| = k - 2`, `|Y1| = y1`,
/// `|Y2| = y2` with `y1 + y2 = k - 1` and `1 <= y1 <= y2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DGParams {
    k: usize,
    y1: usize,
    y2: usize,
}

impl DGParams {
    pub fn new(k: usize, y1: usize, y2: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParams(format!("DG(k) needs k >= 3, got {k}")));
        }
        if y1 == 0 || y2 == 0 || y1 + y2 != k - 1 {
            return Err(Error::InvalidParams(format!(
                "DG({k}) needs y1, y2 >= 1 with y1 + y2 = {}, got ({y1}, {y2})",
                k - 1
            )));
        }
        if y1 > y2 {
            return Err(Error::InvalidParams(format!(
                "DG parameters must satisfy y1 <= y2, got ({y1}, {y2})"
            )));
        }
        Ok(DGParams { k, y1, y2 })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn y1(&self) -> usize {
        self.y1
    }

    pub fn y2(&self) -> usize {
        self.y2
    }

    /// Every valid parameterisation for level `k`, by increasing `y1`.
    pub fn all(k: usize) -> Vec<DGParams> {
        if k < 3 {
            return Vec::new();
        }
        (1..=(k - 1) / 2)
            .map(|y1| DGParams {
                k,
                y1,
                y2: k - 1 - y1,
            })
            .collect()
    }
}

/// The Dirac–Gallai graph of order `2k - 1`. Labels: `X` first, then `Y1`,
/// `Y2`, then `v1`, `v2`.
pub fn dg_graph(p: DGParams) -> Result<Graph> {
    let x = p.k - 2;
    let n = 2 * p.k - 1;
    let xs: Vec<usize> = (0..x).collect();
    let y1: Vec<usize> = (x..x + p.y1).collect();
    let y2: Vec<usize> = (x + p.y1..x + p.y1 + p.y2).collect();
    let (v1, v2) = (n - 2, n - 1);
    let mut edges = Vec::new();
    let clique = |vs: &[usize], edges: &mut Vec<(usize, usize)>| {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                edges.push((a, b));
            }
        }
    };
    clique(&xs, &mut edges);
    let ys: Vec<usize> = y1.iter().chain(&y2).copied().collect();
    clique(&ys, &mut edges);
    for (v, own) in [(v1, &y1), (v2, &y2)] {
        edges.extend(xs.iter().chain(own.iter()).map(|&w| (w, v)));
    }
    Graph::from_edges(n, edges)
}

/// `DG→(k)`: the directed triangle for `k = 2`, the biorientation of a
/// Dirac–Gallai graph for `k >= 3`.
pub fn dg_digraph(k: usize, params: Option<DGParams>) -> Result<Digraph> {
    match (k, params) {
        (2, None) => directed_cycle(3),
        (2, Some(_)) => Err(Error::InvalidParams("DG→(2) takes no parameters".into())),
        (k, Some(p)) if k >= 3 && p.k == k => Ok(biorient(&dg_graph(p)?)),
        (k, Some(p)) if k >= 3 => Err(Error::InvalidParams(format!(
            "parameters are for DG({}) but k = {k}",
            p.k
        ))),
        (k, None) if k >= 3 => Err(Error::InvalidParams(format!(
            "DG→({k}) needs parameters (y1, y2)"
        ))),
        (k, _) => Err(Error::InvalidParams(format!(
            "DG→(k) needs k >= 2, got {k}"
        ))),
    }
}

/// `D±(K_{k-p-1}) ⊞ DG→(p+1)` on `k + p` vertices, `1 <= p <= k-1`.
/// `params` selects the member of `DG→(p+1)` and must be absent for `p = 1`.
pub fn extremal_digraph(k: usize, p: usize, params: Option<DGParams>) -> Result<Digraph> {
    if p == 0 || p >= k {
        return Err(Error::InvalidParams(format!(
            "extremal digraph needs 1 <= p <= k-1, got k = {k}, p = {p}"
        )));
    }
    let clique = biorient(&Graph::complete(k - p - 1)?);
    dirac_join(&clique, &dg_digraph(p + 1, params)?)
}

/// Every member of the extremal family for `(k, p)`, one per valid
/// parameterisation of `DG→(p+1)`.
pub fn extremal_family(k: usize, p: usize) -> Result<Vec<Digraph>> {
    if p == 1 {
        return Ok(vec![extremal_digraph(k, 1, None)?]);
    }
    DGParams::all(p + 1)
        .into_iter()
        .map(|params| extremal_digraph(k, p, Some(params)))
        .collect()
}
