//! Homomorphisms between structures, verified exhaustively.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::IdealSet;
use crate::structure::{Elem, TernaryGammaSemiring};

/// A carrier map between two structures over the same Γ. The map is stored
/// with owned copies of both structures (they are tiny) so a homomorphism
/// can travel on its own.
#[derive(Debug, Clone)]
pub struct Homomorphism {
    pub source: TernaryGammaSemiring,
    pub target: TernaryGammaSemiring,
    pub map: Vec<Elem>,
}

impl Homomorphism {
    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a as usize]
    }

    pub fn identity(ts: &TernaryGammaSemiring) -> Self {
        Self {
            source: ts.clone(),
            target: ts.clone(),
            map: ts.elements().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HomWitness {
    /// f(0) ≠ 0.
    Identity { image: Elem },
    /// f(a + b) ≠ f(a) + f(b).
    Add { a: Elem, b: Elem, lhs: Elem, rhs: Elem },
    /// f({a b c}_γ) ≠ {f(a) f(b) f(c)}_γ.
    Tern { gamma: usize, a: Elem, b: Elem, c: Elem, lhs: Elem, rhs: Elem },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HomVerdict {
    /// The map preserves everything; `kernel` is f⁻¹(0).
    Pass { kernel: IdealSet },
    Fail { witness: HomWitness },
}

impl HomVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, HomVerdict::Pass { .. })
    }
}

/// Verifies f(0) = 0, preservation of + and of every ternary product, all
/// exhaustively. Failure is a returned witness, not an error; errors are
/// reserved for shape mismatches.
pub fn is_homomorphism(
    source: &TernaryGammaSemiring,
    target: &TernaryGammaSemiring,
    map: &[Elem],
) -> Result<HomVerdict> {
    if source.gamma() != target.gamma() {
        return Err(Error::GammaMismatch);
    }
    if map.len() != source.carrier_size() {
        return Err(Error::MapLength {
            expected: source.carrier_size(),
            got: map.len(),
        });
    }
    for (i, &v) in map.iter().enumerate() {
        if v as usize >= target.carrier_size() {
            return Err(Error::EntryRange {
                table: "map".into(),
                index: i,
                value: v as usize,
                n: target.carrier_size(),
            });
        }
    }
    if map[0] != 0 {
        return Ok(HomVerdict::Fail {
            witness: HomWitness::Identity { image: map[0] },
        });
    }
    let n = source.carrier_size() as Elem;
    for a in 0..n {
        for b in 0..n {
            let lhs = map[source.add(a, b) as usize];
            let rhs = target.add(map[a as usize], map[b as usize]);
            if lhs != rhs {
                return Ok(HomVerdict::Fail {
                    witness: HomWitness::Add { a, b, lhs, rhs },
                });
            }
        }
    }
    for gamma in 0..source.gamma_size() {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = map[source.tern(gamma, a, b, c) as usize];
                    let rhs =
                        target.tern(gamma, map[a as usize], map[b as usize], map[c as usize]);
                    if lhs != rhs {
                        return Ok(HomVerdict::Fail {
                            witness: HomWitness::Tern { gamma, a, b, c, lhs, rhs },
                        });
                    }
                }
            }
        }
    }
    let kernel = IdealSet::from_elems((0..n).filter(|&a| map[a as usize] == 0));
    Ok(HomVerdict::Pass { kernel })
}
