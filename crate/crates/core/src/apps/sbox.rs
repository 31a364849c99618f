//! Differential profiles of the parameterized ternary maps
//! F_γ(x, y, z) = {x y z}_γ, with the semisimple-lift comparison.

use serde::{Deserialize, Serialize};

use crate::quotient::{quotient, QuotientBy};
use crate::radical::radical;
use crate::structure::{Elem, TernaryGammaSemiring};

/// Difference table in equation form: Δ(a,b,c;d) counts the (x,y,z) with
/// `{x+a, y+b, z+c}_γ = {x,y,z}_γ + d`. Subtraction never appears, so the
/// table is total for every additive reduct; over a group reduct it
/// coincides with the usual DDT and its rows sum to n³.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SBoxProfile {
    pub gamma: String,
    pub n: usize,
    /// Row-major ((a·n + b)·n + c)·n + d.
    pub table: Vec<u64>,
    /// Max over (a,b,c) ≠ (0,0,0) and all d.
    pub delta: u64,
    pub argmax: (Elem, Elem, Elem, Elem),
    pub add_is_group: bool,
    pub row_sum_min: u64,
    pub row_sum_max: u64,
}

impl SBoxProfile {
    pub fn entry(&self, a: Elem, b: Elem, c: Elem, d: Elem) -> u64 {
        let n = self.n;
        self.table[((a as usize * n + b as usize) * n + c as usize) * n + d as usize]
    }

    pub fn row_sum(&self, a: Elem, b: Elem, c: Elem) -> u64 {
        (0..self.n as Elem).map(|d| self.entry(a, b, c, d)).sum()
    }
}

pub fn sbox_differential_profile(
    ts: &TernaryGammaSemiring,
    gamma: &str,
) -> crate::error::Result<SBoxProfile> {
    let g = ts.gamma_index(gamma)?;
    let n = ts.carrier_size();
    let ne = n as Elem;
    let mut table = vec![0u64; n * n * n * n];
    for x in 0..ne {
        for y in 0..ne {
            for z in 0..ne {
                let base = ts.tern(g, x, y, z);
                for a in 0..ne {
                    for b in 0..ne {
                        for c in 0..ne {
                            let shifted =
                                ts.tern(g, ts.add(x, a), ts.add(y, b), ts.add(z, c));
                            for d in 0..ne {
                                if ts.add(base, d) == shifted {
                                    let idx = ((a as usize * n + b as usize) * n
                                        + c as usize)
                                        * n
                                        + d as usize;
                                    table[idx] += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut delta = 0u64;
    let mut argmax = (0, 0, 0, 0);
    for a in 0..ne {
        for b in 0..ne {
            for c in 0..ne {
                if (a, b, c) == (0, 0, 0) {
                    continue;
                }
                for d in 0..ne {
                    let v = table[((a as usize * n + b as usize) * n + c as usize) * n
                        + d as usize];
                    if v > delta {
                        delta = v;
                        argmax = (a, b, c, d);
                    }
                }
            }
        }
    }
    if n == 1 {
        // single cell, vacuous maximum
        delta = table[0];
    }
    let mut row_sum_min = u64::MAX;
    let mut row_sum_max = 0u64;
    for a in 0..ne {
        for b in 0..ne {
            for c in 0..ne {
                let s: u64 = (0..ne)
                    .map(|d| {
                        table[((a as usize * n + b as usize) * n + c as usize) * n
                            + d as usize]
                    })
                    .sum();
                row_sum_min = row_sum_min.min(s);
                row_sum_max = row_sum_max.max(s);
            }
        }
    }
    Ok(SBoxProfile {
        gamma: gamma.to_string(),
        n,
        table,
        delta,
        argmax,
        add_is_group: ts.add_is_group(),
        row_sum_min,
        row_sum_max,
    })
}

/// Profile over T next to the profile over S = T/Rad(T). When the radical
/// cosets are uniform, the coset-cube scaling prediction
/// δ_T = δ_S · (|T|/|S|)³ is evaluated; otherwise only the raw values are
/// reported.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SBoxLiftReport {
    pub base: SBoxProfile,
    pub quotient: Option<SBoxProfile>,
    pub quotient_order: Option<usize>,
    pub cosets_uniform: Option<bool>,
    pub coset_cube: Option<u64>,
    pub scaled_match: Option<bool>,
    pub quotient_error: Option<String>,
}

pub fn sbox_lift_report(
    ts: &TernaryGammaSemiring,
    gamma: &str,
) -> crate::error::Result<SBoxLiftReport> {
    let base = sbox_differential_profile(ts, gamma)?;
    match quotient(ts, QuotientBy::Ideal(radical(ts).radical)) {
        Ok(q) => {
            let quotient_profile = sbox_differential_profile(&q.structure, gamma)?;
            let blocks = q.relation.blocks();
            let uniform = blocks.iter().all(|b| b.len() == blocks[0].len());
            let (coset_cube, scaled_match) = if uniform {
                let cube = (blocks[0].len() as u64).pow(3);
                (Some(cube), Some(base.delta == quotient_profile.delta * cube))
            } else {
                (None, None)
            };
            Ok(SBoxLiftReport {
                base,
                quotient_order: Some(q.structure.carrier_size()),
                quotient: Some(quotient_profile),
                cosets_uniform: Some(uniform),
                coset_cube,
                scaled_match,
                quotient_error: None,
            })
        }
        Err(e) => Ok(SBoxLiftReport {
            base,
            quotient: None,
            quotient_order: None,
            cosets_uniform: None,
            coset_cube: None,
            scaled_match: None,
            quotient_error: Some(e.to_string()),
        }),
    }
}
