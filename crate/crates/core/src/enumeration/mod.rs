//! Exhaustive enumeration of pairwise non-isomorphic structures for a
//! given order and Γ size, with constraint-propagation pruning and
//! canonical-form deduplication.
//!
//! The pipeline follows the reduct-first layout: enumerate the additive
//! monoids, search tensor families over each reduct, canonicalize the
//! survivors jointly, and merge. Work is partitioned by (reduct, first
//! branching value); merging sorts by canonical bytes, so the catalog is
//! byte-identical no matter how many workers ran.

pub mod canonical;
pub mod monoids;
mod search;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::axioms::{AxiomId, AxiomMode};
use crate::error::{Error, Result};
use crate::radical::{invariant_tuple, InvariantTuple};
use crate::structure::{Elem, TernaryGammaSemiring};

pub use canonical::{
    are_isomorphic, canonical_form, canonicalize, CanonicalForm, Canonicalization,
};
pub use monoids::enumerate_additive_monoids;

/// All permutations of 0..n-1 with φ(0) = 0, in lexicographic order.
pub(crate) fn perms_fixing_zero(n: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut current: Vec<Elem> = vec![0];
    fn rec(n: usize, current: &mut Vec<Elem>, out: &mut Vec<Vec<Elem>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 1..n as Elem {
            if !current.contains(&v) {
                current.push(v);
                rec(n, current, out);
                current.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![0]];
    }
    rec(n, &mut current, &mut out);
    out
}

/// A refusal threshold, not a promise: anything above is rejected before
/// any search runs.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct Bounds {
    pub max_order: usize,
    pub max_gamma: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self { max_order: 4, max_gamma: 2 }
    }
}

/// Absolute ceiling regardless of configured bounds.
pub const HARD_MAX_ORDER: usize = 6;
pub const HARD_MAX_GAMMA: usize = 3;

#[derive(Debug, Clone)]
pub struct EnumerationParams {
    pub n: usize,
    pub m: usize,
    pub mode: AxiomMode,
    pub permute_gamma: bool,
    /// Worker count; 0 or 1 runs single-threaded. The catalog bytes do not
    /// depend on this.
    pub jobs: usize,
    pub bounds: Bounds,
}

impl EnumerationParams {
    pub fn new(n: usize, m: usize, mode: AxiomMode) -> Self {
        Self { n, m, mode, permute_gamma: false, jobs: 1, bounds: Bounds::default() }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationStats {
    pub additive_reducts: usize,
    /// Branch decisions tried across the whole search.
    pub nodes_explored: u64,
    /// Complete assignments that reached the final axiom check.
    pub candidates_checked: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub canonical: CanonicalForm,
    /// The canonical representative; its table bytes equal the canonical
    /// bytes.
    pub structure: TernaryGammaSemiring,
    pub invariants: InvariantTuple,
    pub axiom_mode: AxiomMode,
    /// Search-branch identifier (reduct and first branching value).
    pub branch: String,
}

impl PartialEq for CatalogEntry {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Catalog {
    pub n: usize,
    pub m: usize,
    pub mode: AxiomMode,
    pub permute_gamma: bool,
    pub stats: EnumerationStats,
    /// Sorted by canonical bytes; no two entries share them.
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains_isomorphic(&self, ts: &TernaryGammaSemiring) -> bool {
        let form = canonical_form(ts, self.permute_gamma);
        self.entries.iter().any(|e| e.canonical == form)
    }
}

struct WorkItem {
    reduct: usize,
    fix: Option<(usize, Elem)>,
}

/// Enumerates all pairwise non-isomorphic structures of order `n` with `m`
/// operations that satisfy the axioms of `params.mode`.
pub fn enumerate_structures(params: &EnumerationParams) -> Result<Catalog> {
    let bound_err = |what: &str, limit: usize, requested: usize| Error::BoundExceeded {
        what: what.into(),
        limit,
        requested,
    };
    if params.n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if params.m == 0 {
        return Err(Error::EmptyGamma);
    }
    let order_cap = params.bounds.max_order.min(HARD_MAX_ORDER);
    let gamma_cap = params.bounds.max_gamma.min(HARD_MAX_GAMMA);
    if params.n > order_cap {
        return Err(bound_err("order", order_cap, params.n));
    }
    if params.m > gamma_cap {
        return Err(bound_err("gamma size", gamma_cap, params.m));
    }
    if !params.mode.enabled(AxiomId::C) {
        return Err(Error::ModeWithoutSymmetry);
    }

    let reducts = enumerate_additive_monoids(params.n);
    let searches: Vec<search::ReductSearch> = reducts
        .iter()
        .map(|add| search::ReductSearch::new(params.n, params.m, params.mode, add.clone()))
        .collect();

    let mut items = Vec::new();
    let mut states = Vec::new();
    for (ri, s) in searches.iter().enumerate() {
        match s.initial_state() {
            None => states.push(None),
            Some(state) => {
                match s.first_undetermined(&state) {
                    None => items.push(WorkItem { reduct: ri, fix: None }),
                    Some(var) => {
                        for v in 0..params.n as Elem {
                            items.push(WorkItem { reduct: ri, fix: Some((var, v)) });
                        }
                    }
                }
                states.push(Some(state));
            }
        }
    }

    let run_item = |item: &WorkItem| {
        let state = states[item.reduct].clone().expect("items only for live reducts");
        searches[item.reduct].run(state, item.fix)
    };
    let outcomes: Vec<search::SearchOutcome> = if params.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(params.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            use rayon::prelude::*;
            items.par_iter().map(run_item).collect()
        })
    } else {
        items.iter().map(run_item).collect()
    };

    let mut stats = EnumerationStats {
        additive_reducts: reducts.len(),
        ..Default::default()
    };
    let mut merged: BTreeMap<Vec<u8>, CatalogEntry> = BTreeMap::new();
    for (item, outcome) in items.iter().zip(outcomes) {
        stats.nodes_explored += outcome.nodes;
        stats.candidates_checked += outcome.candidates;
        let branch = match item.fix {
            Some((_, v)) => format!("r{}.v{}", item.reduct, v),
            None => format!("r{}", item.reduct),
        };
        for ops in outcome.structures {
            let labels = (0..params.m).map(|i| format!("g{i}")).collect();
            let ts = TernaryGammaSemiring::new(
                params.n,
                labels,
                reducts[item.reduct].clone(),
                ops,
            )?;
            let canon = canonicalize(&ts, params.permute_gamma);
            merged.entry(canon.form.bytes.clone()).or_insert_with(|| CatalogEntry {
                invariants: invariant_tuple(&canon.structure),
                canonical: canon.form,
                structure: canon.structure,
                axiom_mode: params.mode,
                branch: branch.clone(),
            });
        }
    }

    Ok(Catalog {
        n: params.n,
        m: params.m,
        mode: params.mode,
        permute_gamma: params.permute_gamma,
        stats,
        entries: merged.into_values().collect(),
    })
}
