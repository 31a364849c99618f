//! Idempotent ternary path algebra: walk-weight joins to a fixed point,
//! then the ternary product of the aggregate with itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{Elem, TernaryGammaSemiring};

/// Directed multigraph with edge weights in the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, Elem)>,
}

impl WeightedGraph {
    /// Edge-list text format: a `vertices N` header, then one
    /// `src dst weight` triple per line. Blank lines and `#` comments are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse { what: "graph".into(), message: msg };
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| bad("empty input".into()))?;
        let vertices: usize = header
            .strip_prefix("vertices")
            .map(str::trim)
            .ok_or_else(|| bad(format!("expected `vertices N` header, got `{header}`")))?
            .parse()
            .map_err(|_| bad(format!("bad vertex count in `{header}`")))?;
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(bad(format!("expected `src dst weight`, got `{line}`")));
            }
            let src: usize = parts[0].parse().map_err(|_| bad(format!("bad src `{line}`")))?;
            let dst: usize = parts[1].parse().map_err(|_| bad(format!("bad dst `{line}`")))?;
            let w: Elem = parts[2].parse().map_err(|_| bad(format!("bad weight `{line}`")))?;
            if src >= vertices || dst >= vertices {
                return Err(bad(format!("vertex out of range in `{line}`")));
            }
            edges.push((src, dst, w));
        }
        Ok(Self { vertices, edges })
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathMatrices {
    /// A(u,v): join of all walk weights u → v (walks of length ≥ 1),
    /// where a walk's weight is the add-fold of its edge weights.
    /// None when no walk exists.
    pub aggregate: Vec<Vec<Option<Elem>>>,
    /// Path value {A, A, A}_γ; None where the aggregate is undefined.
    pub path_values: Vec<Vec<Option<Elem>>>,
    pub iterations: usize,
    /// False when the horizon ran out first; the matrices are then partial.
    pub stabilized: bool,
}

/// Iterates the closure A ← A ⊕ (A ∘ A) over the idempotent additive
/// semilattice until it stabilizes or the horizon is exhausted
/// (default |V|·n iterations). Requires idempotent addition.
pub fn ternary_path_values(
    ts: &TernaryGammaSemiring,
    gamma: &str,
    graph: &WeightedGraph,
    horizon: Option<usize>,
) -> Result<PathMatrices> {
    let g = ts.gamma_index(gamma)?;
    if let Some(witness) = ts.elements().find(|&a| ts.add(a, a) != a) {
        return Err(Error::NotIdempotentAdd { witness });
    }
    for &(src, dst, w) in &graph.edges {
        if src >= graph.vertices || dst >= graph.vertices {
            return Err(Error::Parse {
                what: "graph".into(),
                message: format!("edge ({src}, {dst}) out of range"),
            });
        }
        if w as usize >= ts.carrier_size() {
            return Err(Error::ElementRange { value: w as usize, n: ts.carrier_size() });
        }
    }
    let v = graph.vertices;
    let join = |acc: Option<Elem>, x: Elem| -> Option<Elem> {
        Some(match acc {
            None => x,
            Some(a) => ts.add(a, x),
        })
    };
    let mut aggregate: Vec<Vec<Option<Elem>>> = vec![vec![None; v]; v];
    for &(src, dst, w) in &graph.edges {
        aggregate[src][dst] = join(aggregate[src][dst], w);
    }
    let horizon = horizon.unwrap_or_else(|| (v * ts.carrier_size()).max(1));
    let mut iterations = 0;
    let mut stabilized = false;
    while iterations < horizon {
        iterations += 1;
        let mut next = aggregate.clone();
        #[allow(clippy::needless_range_loop)]
        for s in 0..v {
            for t in 0..v {
                for mid in 0..v {
                    if let (Some(a), Some(b)) = (aggregate[s][mid], aggregate[mid][t]) {
                        // concatenated walk: fold of both weight folds
                        next[s][t] = join(next[s][t], ts.add(a, b));
                    }
                }
            }
        }
        if next == aggregate {
            stabilized = true;
            break;
        }
        aggregate = next;
    }
    let path_values = aggregate
        .iter()
        .map(|row| row.iter().map(|c| c.map(|a| ts.tern(g, a, a, a))).collect())
        .collect();
    Ok(PathMatrices { aggregate, path_values, iterations, stabilized })
}
