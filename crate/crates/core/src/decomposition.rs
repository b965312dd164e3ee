//! Decomposition of a digraph into the Dirac join of its complement
//! components, and the structural bounds critical digraphs obey.
//!
//! Two vertices lie in the same complement component when they are linked
//! by a chain of pairs that are *not* digons. Each component induces a
//! factor and the digraph is the Dirac join of its factors.

use serde::Serialize;

use crate::bits::{self, bit, members};
use crate::coloring::dichromatic_number;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::SCHEMA;

/// Partition of the vertices into complement components, each sorted,
/// ordered by smallest vertex.
pub fn complement_components(d: &Digraph) -> Vec<Vec<usize>> {
    let all = d.vertex_set();
    let non_digon = |v: usize| all & !bit(v) & !(d.out_neighbors(v) & d.in_neighbors(v));
    let mut rest = all;
    let mut parts = Vec::new();
    while rest != 0 {
        let start = rest.trailing_zeros() as usize;
        let mut comp = bit(start);
        let mut frontier = comp;
        while frontier != 0 {
            let next = members(frontier).fold(0u64, |acc, u| acc | non_digon(u)) & !comp;
            comp |= next;
            frontier = next;
        }
        rest &= !comp;
        parts.push(members(comp).collect());
    }
    parts
}

/// True iff the complement is connected, i.e. `d` is not a Dirac join of
/// two non-empty digraphs.
pub fn is_indecomposable(d: &Digraph) -> Result<bool> {
    if d.is_empty() {
        return Err(Error::Empty);
    }
    Ok(complement_components(d).len() == 1)
}

/// Vertices joined by a digon to every other vertex. A digraph of order at
/// most one has none, since a dominating vertex needs a non-empty rest.
pub fn dominating_vertices(d: &Digraph) -> Vec<usize> {
    if d.order() < 2 {
        return Vec::new();
    }
    let all = d.vertex_set();
    (0..d.order())
        .filter(|&v| d.out_neighbors(v) & d.in_neighbors(v) == all & !bit(v))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FactorClass {
    /// A single dominating vertex.
    P,
    /// A dominating directed cycle of order at least three.
    Q,
    /// Anything else.
    R,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub vertices: Vec<usize>,
    pub digraph: Digraph,
    pub class: FactorClass,
    pub dichromatic: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub k: usize,
    pub n: usize,
    pub factors: Vec<Factor>,
    pub p: usize,
    pub q: usize,
}

impl DecompositionReport {
    pub fn factors_of(&self, class: FactorClass) -> impl Iterator<Item = &Factor> {
        self.factors.iter().filter(move |f| f.class == class)
    }

    /// Fills in the dichromatic number of every factor.
    pub fn with_dichromatic(mut self) -> Self {
        for f in &mut self.factors {
            if f.dichromatic.is_none() {
                f.dichromatic = Some(dichromatic_number(&f.digraph));
            }
        }
        self
    }

    /// Dirac join of the factors, in report order.
    pub fn rebuild(&self) -> Result<Digraph> {
        crate::constructions::dirac_join_all(self.factors.iter().map(|f| &f.digraph))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": SCHEMA,
            "kind": "decomposition",
            "k": self.k,
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "factors": self.factors.iter().map(|f| serde_json::json!({
                "vertices": f.vertices,
                "class": f.class,
                "order": f.digraph.order(),
                "arcs": f.digraph.arc_count(),
                "dichromatic": f.dichromatic,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Splits `d` into complement-component factors and tags each one as P
/// (singleton), Q (directed cycle of order >= 3) or R. Criticality of `d`
/// is not checked.
pub fn decompose(d: &Digraph, k: usize) -> DecompositionReport {
    let factors: Vec<Factor> = complement_components(d)
        .into_iter()
        .map(|vertices| {
            let (digraph, _) = d.induced(&vertices).expect("component vertices");
            let class = if vertices.len() == 1 {
                FactorClass::P
            } else if vertices.len() >= 3 && digraph.is_directed_cycle() {
                FactorClass::Q
            } else {
                FactorClass::R
            };
            Factor {
                vertices,
                digraph,
                class,
                dichromatic: None,
            }
        })
        .collect();
    let count = |c| factors.iter().filter(|f| f.class == c).count();
    DecompositionReport {
        k,
        n: d.order(),
        p: count(FactorClass::P),
        q: count(FactorClass::Q),
        factors,
    }
}

/// A lower bound `lhs >= rhs` with its slack.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub lhs: i64,
    pub rhs: i64,
    pub slack: i64,
    pub equality: bool,
    /// Whether the structure required (or excluded) by the equality case
    /// matches.
    pub equality_structure_ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorBoundReport {
    pub k: usize,
    pub n: usize,
    pub p: usize,
    pub q: usize,
    pub dominating_bound: BoundCheck,
    pub cycle_bound: BoundCheck,
}

impl FactorBoundReport {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("report serialises");
        v["schema"] = SCHEMA.into();
        v["kind"] = "factor-bounds".into();
        v
    }
}

/// Checks, for a `k`-critical `d` (certified by the caller):
///
/// - `0 <= p <= k` and `p + 2q <= k`;
/// - `p >= 3k - 2|D|`, with equality iff every non-P factor is a directed
///   triangle;
/// - `2p + q >= 5k - 3|D|`, with equality iff every Q factor is a directed
///   triangle and every R factor is 3-critical of order 5.
pub fn check_factor_bounds(
    d: &Digraph,
    k: usize,
    report: &DecompositionReport,
) -> Result<FactorBoundReport> {
    if report.n != d.order() || report.k != k {
        return Err(Error::InvalidParams(
            "report does not belong to this digraph".into(),
        ));
    }
    let report = report.clone().with_dichromatic();
    let (p, q, n) = (report.p as i64, report.q as i64, d.order() as i64);
    let k_i = k as i64;
    let violation = |msg: String| Err(Error::Violation(msg));
    if p > k_i {
        return violation(format!("p = {p} exceeds k = {k}"));
    }
    if p + 2 * q > k_i {
        return violation(format!("p + 2q = {} exceeds k = {k}", p + 2 * q));
    }

    let triangle = |f: &Factor| f.digraph.order() == 3 && f.digraph.is_directed_cycle();
    let non_p_triangles = report
        .factors
        .iter()
        .filter(|f| f.class != FactorClass::P)
        .all(triangle);
    let rhs = 3 * k_i - 2 * n;
    let equality = p == rhs;
    let dominating_bound = BoundCheck {
        name: "p >= 3k - 2|D|",
        lhs: p,
        rhs,
        slack: p - rhs,
        equality,
        equality_structure_ok: equality == non_p_triangles,
    };
    if p < rhs {
        return violation(format!("p = {p} < 3k - 2|D| = {rhs}"));
    }
    if !dominating_bound.equality_structure_ok {
        return violation(format!(
            "equality in p >= 3k - 2|D| is {equality} but all non-P factors are triangles is {non_p_triangles}"
        ));
    }

    let q_triangles = report.factors_of(FactorClass::Q).all(triangle);
    let r_small = report
        .factors_of(FactorClass::R)
        .all(|f| f.digraph.order() == 5 && f.dichromatic == Some(3));
    let structure = q_triangles && r_small;
    let rhs = 5 * k_i - 3 * n;
    let lhs = 2 * p + q;
    let equality = lhs == rhs;
    let cycle_bound = BoundCheck {
        name: "2p + q >= 5k - 3|D|",
        lhs,
        rhs,
        slack: lhs - rhs,
        equality,
        equality_structure_ok: equality == structure,
    };
    if lhs < rhs {
        return violation(format!("2p + q = {lhs} < 5k - 3|D| = {rhs}"));
    }
    if !cycle_bound.equality_structure_ok {
        return violation(format!(
            "equality in 2p + q >= 5k - 3|D| is {equality} but the triangle / CRI(3,5) structure is {structure}"
        ));
    }

    Ok(FactorBoundReport {
        k,
        n: d.order(),
        p: report.p,
        q: report.q,
        dominating_bound,
        cycle_bound,
    })
}

/// For a `k`-critical `d`: an indecomposable `d` has order at least `2k - 1`.
/// Equivalently, order at most `2k - 2` forces a decomposition.
pub fn stehlik_check(d: &Digraph, k: usize) -> bool {
    if d.is_empty() {
        return true;
    }
    let indecomposable = complement_components(d).len() == 1;
    !indecomposable || d.order() + 1 >= 2 * k
}

/// Vertex set of a component as a bitset.
pub fn component_set(component: &[usize]) -> u64 {
    bits::from_vertices(component.iter().copied())
}
