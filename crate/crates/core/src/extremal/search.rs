//! Exhaustive search for minimum-arc critical digraphs.
//!
//! Candidates are generated row by row (row `u` is the out-neighbourhood of
//! vertex `u`) with three cuts:
//!
//! - every out- and in-degree must reach `k - 1`, the minimum degree of a
//!   `k`-critical digraph;
//! - out-degrees are non-increasing along the rows, which loses no
//!   isomorphism class since any digraph can be relabelled that way;
//! - with a target arc count, partial rows that cannot hit the target
//!   exactly are abandoned.
//!
//! Survivors go through the criticality check and are reduced to canonical
//! forms. Work is split by the choice of row 0, so the merged result does
//! not depend on the number of threads.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::bits::{self, bit, members};
use crate::coloring::exists_acyclic_k_coloring;
use crate::constructions::extremal_family;
use crate::criticality::is_k_critical;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::extremal::canonical::{canonical_form, CanonicalForm};
use crate::extremal::formulas::ext_formula_digraph;
use crate::SCHEMA;

/// Largest order searched without the `extended` flag.
pub const DEFAULT_MAX_ORDER: usize = 5;
/// Largest order searched at all.
pub const EXTENDED_MAX_ORDER: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Highest arc count to try.
    pub budget: Option<usize>,
    /// Allows orders above [`DEFAULT_MAX_ORDER`].
    pub extended: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub threads: usize,
    /// Keep only candidates with non-increasing out-degrees. Turning this
    /// off enumerates every labelled digraph meeting the degree bound.
    pub degree_order_reduction: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            extended: false,
            threads: 1,
            degree_order_reduction: true,
        }
    }
}

fn check_feasible(n: usize, opts: &SearchOptions, need_budget_above: usize) -> Result<()> {
    if n > EXTENDED_MAX_ORDER {
        return Err(Error::Infeasible(format!(
            "exhaustive search on {n} vertices is out of reach (limit {EXTENDED_MAX_ORDER})"
        )));
    }
    if n > DEFAULT_MAX_ORDER && !opts.extended {
        return Err(Error::Infeasible(format!(
            "search on {n} vertices is long-running; pass the extended flag"
        )));
    }
    if n > need_budget_above && opts.budget.is_none() {
        return Err(Error::Infeasible(format!(
            "search on {n} vertices needs an arc budget"
        )));
    }
    Ok(())
}

/// Row-by-row generator of digraphs meeting the degree bound.
struct Generator {
    n: usize,
    min_deg: usize,
    target: Option<usize>,
    ordered: bool,
    choices: Vec<Vec<u64>>,
}

struct GenState {
    rows: Vec<u64>,
    indeg: Vec<usize>,
    arcs: usize,
}

impl Generator {
    fn new(n: usize, min_deg: usize, target: Option<usize>, ordered: bool) -> Self {
        let choices = (0..n)
            .map(|u| {
                let allowed = bits::full(n) & !bit(u);
                (0..=allowed)
                    .filter(|&r| r & !allowed == 0 && bits::len(r) >= min_deg)
                    .collect()
            })
            .collect();
        Generator {
            n,
            min_deg,
            target,
            ordered,
            choices,
        }
    }

    /// Whether row `u = r` keeps the partial digraph completable.
    fn admissible(&self, st: &GenState, u: usize, r: u64) -> bool {
        let pop = bits::len(r);
        if self.ordered && u > 0 && pop > bits::len(st.rows[u - 1]) {
            return false;
        }
        let later = self.n - 1 - u;
        if let Some(m) = self.target {
            let arcs = st.arcs + pop;
            let per_row_max = if self.ordered { pop } else { self.n - 1 };
            if arcs + later * self.min_deg > m || arcs + later * per_row_max < m {
                return false;
            }
        }
        // rows after u can each add one in-arc to v, except row v itself
        (0..self.n).all(|v| {
            let indeg = st.indeg[v] + bits::contains(r, v) as usize;
            let remaining = later - (v > u) as usize;
            indeg + remaining >= self.min_deg
        })
    }

    fn push(st: &mut GenState, r: u64) {
        for v in members(r) {
            st.indeg[v] += 1;
        }
        st.arcs += bits::len(r);
        st.rows.push(r);
    }

    fn pop(st: &mut GenState) {
        let r = st.rows.pop().expect("row to pop");
        for v in members(r) {
            st.indeg[v] -= 1;
        }
        st.arcs -= bits::len(r);
    }

    fn extend(&self, st: &mut GenState, visit: &mut dyn FnMut(&[u64])) {
        let u = st.rows.len();
        if u == self.n {
            visit(&st.rows);
            return;
        }
        for &r in &self.choices[u] {
            if self.admissible(st, u, r) {
                Self::push(st, r);
                self.extend(st, visit);
                Self::pop(st);
            }
        }
    }

    /// Admissible first rows, the unit of parallel work.
    fn first_rows(&self) -> Vec<u64> {
        if self.n == 0 {
            return Vec::new();
        }
        let st = self.fresh();
        self.choices[0]
            .iter()
            .copied()
            .filter(|&r| self.admissible(&st, 0, r))
            .collect()
    }

    fn fresh(&self) -> GenState {
        GenState {
            rows: Vec::with_capacity(self.n),
            indeg: vec![0; self.n],
            arcs: 0,
        }
    }

    fn run_from(&self, first: u64, visit: &mut dyn FnMut(&[u64])) {
        let mut st = self.fresh();
        Self::push(&mut st, first);
        self.extend(&mut st, visit);
    }
}

#[derive(Default)]
struct Tally {
    examined: u64,
    forms: BTreeSet<CanonicalForm>,
}

/// Runs the generator, keeping the canonical forms of `k`-critical digraphs.
fn collect_critical(gen: &Generator, k: usize, threads: usize) -> Result<Tally> {
    if gen.n == 0 {
        let d = Digraph::empty(0)?;
        let mut tally = Tally {
            examined: 1,
            ..Tally::default()
        };
        if k == 0 && gen.target.is_none_or(|m| m == 0) {
            tally.forms.insert(canonical_form(&d)?);
        }
        return Ok(tally);
    }
    let work = |first: u64| -> Tally {
        let mut tally = Tally::default();
        gen.run_from(first, &mut |rows| {
            tally.examined += 1;
            let d = Digraph::from_rows_unchecked(gen.n, rows.to_vec());
            // cheapest rejection first
            if k >= 1 && exists_acyclic_k_coloring(&d, k - 1).satisfiable {
                return;
            }
            if is_k_critical(&d, k).is_some() {
                tally
                    .forms
                    .insert(canonical_form(&d).expect("order checked by caller"));
            }
        });
        tally
    };
    let firsts = gen.first_rows();
    let parts: Vec<Tally> = if threads <= 1 {
        firsts.into_iter().map(work).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::Infeasible(format!("thread pool: {e}")))?;
        pool.install(|| firsts.into_par_iter().map(work).collect())
    };
    Ok(parts.into_iter().fold(Tally::default(), |mut acc, t| {
        acc.examined += t.examined;
        acc.forms.extend(t.forms);
        acc
    }))
}

/// Outcome of a minimum-arc search at `(k, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSearchResult {
    pub k: usize,
    pub n: usize,
    /// Minimum arc count, or `None` when nothing was found within budget.
    pub ext_value: Option<usize>,
    /// Pairwise non-isomorphic minimizers, sorted.
    pub minimizers: Vec<CanonicalForm>,
    /// Degree-feasible candidates generated across all arc counts tried.
    pub digraphs_examined: u64,
    /// Every arc count up to the answer (or up to `n(n-1)` when nothing
    /// was found) was searched completely.
    pub exhaustive: bool,
    pub wall_time_ms: u128,
}

impl ExtremalSearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": SCHEMA,
            "kind": "ext",
            "k": self.k,
            "n": self.n,
            "ext": self.ext_value,
            "classes": self.minimizers.len(),
            "minimizers": forms_json(&self.minimizers),
            "digraphs_examined": self.digraphs_examined,
            "exhaustive": self.exhaustive,
            "wall_time_ms": self.wall_time_ms as u64,
        })
    }
}

pub(crate) fn forms_json(forms: &[CanonicalForm]) -> Vec<serde_json::Value> {
    forms
        .iter()
        .map(|f| {
            let d = f.to_digraph();
            serde_json::json!({
                "canonical": f.to_hex(),
                "n": d.order(),
                "arcs": d.arcs().collect::<Vec<_>>(),
            })
        })
        .collect()
}

/// Searches arc counts upward from `(k-1)n` and stops at the first count
/// admitting a `k`-critical digraph on `n` vertices.
pub fn compute_ext(k: usize, n: usize, opts: &SearchOptions) -> Result<ExtremalSearchResult> {
    check_feasible(n, opts, 6)?;
    let start = Instant::now();
    let lowest = k.saturating_sub(1) * n;
    let highest = n * n.saturating_sub(1);
    let cap = opts.budget.map_or(highest, |b| b.min(highest));
    let mut examined = 0;
    for m in lowest..=cap {
        let gen = Generator::new(n, k.saturating_sub(1), Some(m), opts.degree_order_reduction);
        let tally = collect_critical(&gen, k, opts.threads)?;
        examined += tally.examined;
        if !tally.forms.is_empty() {
            return Ok(ExtremalSearchResult {
                k,
                n,
                ext_value: Some(m),
                minimizers: tally.forms.into_iter().collect(),
                digraphs_examined: examined,
                exhaustive: true,
                wall_time_ms: start.elapsed().as_millis(),
            });
        }
    }
    Ok(ExtremalSearchResult {
        k,
        n,
        ext_value: None,
        minimizers: Vec::new(),
        digraphs_examined: examined,
        exhaustive: cap == highest,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// All `k`-critical digraphs of order `n` up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub k: usize,
    pub n: usize,
    pub classes: Vec<CanonicalForm>,
    pub digraphs_examined: u64,
}

impl Enumeration {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": SCHEMA,
            "kind": "enumeration",
            "k": self.k,
            "n": self.n,
            "classes": forms_json(&self.classes),
            "digraphs_examined": self.digraphs_examined,
        })
    }
}

pub fn enumerate_critical(k: usize, n: usize, opts: &SearchOptions) -> Result<Enumeration> {
    check_feasible(n, opts, EXTENDED_MAX_ORDER)?;
    if n == EXTENDED_MAX_ORDER {
        return Err(Error::Infeasible(format!(
            "enumerating every critical digraph on {n} vertices is out of reach"
        )));
    }
    let gen = Generator::new(n, k.saturating_sub(1), None, opts.degree_order_reduction);
    let tally = collect_critical(&gen, k, opts.threads)?;
    Ok(Enumeration {
        k,
        n,
        classes: tally.forms.into_iter().collect(),
        digraphs_examined: tally.examined,
    })
}

/// Comparison of a search result with the extremal family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalFamilyVerdict {
    pub expected_ext: usize,
    pub found_ext: Option<usize>,
    /// Family members the search did not report.
    pub missing: Vec<CanonicalForm>,
    /// Reported minimizers outside the family.
    pub extra: Vec<CanonicalForm>,
}

impl ExtremalFamilyVerdict {
    pub fn holds(&self) -> bool {
        self.found_ext == Some(self.expected_ext)
            && self.missing.is_empty()
            && self.extra.is_empty()
    }

    pub fn describe(&self) -> String {
        format!(
            "expected ext {}, found {:?}; missing {:?}; extra {:?}",
            self.expected_ext, self.found_ext, self.missing, self.extra
        )
    }
}

/// Canonical forms of `D±(K_{k-p-1}) ⊞ DG→(p+1)` over all parameterisations.
pub fn expected_minimizers(k: usize, n: usize) -> Result<BTreeSet<CanonicalForm>> {
    let p = n
        .checked_sub(k)
        .ok_or_else(|| Error::InvalidParams(format!("order {n} is below k = {k}")))?;
    extremal_family(k, p)?.iter().map(canonical_form).collect()
}

/// Checks a finished search against the closed form and the extremal family.
pub fn verify_extremal_family(
    k: usize,
    n: usize,
    result: &ExtremalSearchResult,
) -> Result<ExtremalFamilyVerdict> {
    if !result.exhaustive {
        return Err(Error::InvalidParams(
            "search result is not exhaustive".into(),
        ));
    }
    if (result.k, result.n) != (k, n) {
        return Err(Error::InvalidParams(format!(
            "result is for ({}, {}), not ({k}, {n})",
            result.k, result.n
        )));
    }
    let expected_ext = ext_formula_digraph(k as u64, n as u64)? as usize;
    let expected = expected_minimizers(k, n)?;
    let found: BTreeSet<CanonicalForm> = result.minimizers.iter().copied().collect();
    Ok(ExtremalFamilyVerdict {
        expected_ext,
        found_ext: result.ext_value,
        missing: expected.difference(&found).copied().collect(),
        extra: found.difference(&expected).copied().collect(),
    })
}
