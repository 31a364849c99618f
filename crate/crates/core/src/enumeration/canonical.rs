//! Canonical labeling by lexicographic minimization of the vectorized
//! tables, and isomorphism testing with explicit witnessing bijections.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{Elem, TernaryGammaSemiring};

use super::perms_fixing_zero;

/// The lexicographically least concatenation add ∥ M₁ ∥ … ∥ M_m over every
/// carrier relabeling fixing 0 (and, optionally, every γ reordering).
/// Equality of canonical bytes characterizes isomorphism at the same scope.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    /// Hex-encoded in serialized form.
    #[serde(with = "hex_bytes")]
    pub bytes: Vec<u8>,
    pub permuted_gamma: bool,
}

mod hex_bytes {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
        let hex: String = bytes.iter().map(|b| format!("{b:02x}")).collect();
        s.serialize_str(&hex)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        if s.len() % 2 != 0 {
            return Err(serde::de::Error::custom("odd hex length"));
        }
        (0..s.len() / 2)
            .map(|i| {
                u8::from_str_radix(&s[2 * i..2 * i + 2], 16)
                    .map_err(serde::de::Error::custom)
            })
            .collect()
    }
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

#[derive(Debug, Clone)]
pub struct Canonicalization {
    pub form: CanonicalForm,
    /// A relabeling achieving the minimum.
    pub relabeling: Vec<Elem>,
    /// The γ order achieving the minimum (identity unless γ permutation was
    /// allowed).
    pub gamma_order: Vec<usize>,
    /// The canonical representative: `structure.table_bytes() == form.bytes`.
    pub structure: TernaryGammaSemiring,
}

fn gamma_orders(m: usize, permute: bool) -> Vec<Vec<usize>> {
    if !permute {
        return vec![(0..m).collect()];
    }
    let mut orders = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    fn rec(m: usize, current: &mut Vec<usize>, orders: &mut Vec<Vec<usize>>) {
        if current.len() == m {
            orders.push(current.clone());
            return;
        }
        for i in 0..m {
            if !current.contains(&i) {
                current.push(i);
                rec(m, current, orders);
                current.pop();
            }
        }
    }
    rec(m, &mut current, &mut orders);
    orders
}

type Candidate = (Vec<u8>, Vec<Elem>, Vec<usize>, TernaryGammaSemiring);

/// Minimizes the vectorized tables over all admissible relabelings.
pub fn canonicalize(ts: &TernaryGammaSemiring, permute_gamma: bool) -> Canonicalization {
    let n = ts.carrier_size();
    let orders = gamma_orders(ts.gamma_size(), permute_gamma);
    let mut best: Option<Candidate> = None;
    for phi in perms_fixing_zero(n) {
        let relabeled = ts.relabel(&phi).expect("valid permutation");
        for order in &orders {
            let candidate = if order.iter().enumerate().all(|(i, &o)| i == o) {
                relabeled.clone()
            } else {
                relabeled.permute_gamma(order).expect("valid order")
            };
            let bytes = candidate.table_bytes();
            if best.as_ref().is_none_or(|(b, ..)| bytes < *b) {
                best = Some((bytes, phi.clone(), order.clone(), candidate));
            }
        }
    }
    let (bytes, relabeling, gamma_order, structure) = best.unwrap();
    Canonicalization {
        form: CanonicalForm { bytes, permuted_gamma: permute_gamma },
        relabeling,
        gamma_order,
        structure,
    }
}

/// Convenience wrapper returning just the form.
pub fn canonical_form(ts: &TernaryGammaSemiring, permute_gamma: bool) -> CanonicalForm {
    canonicalize(ts, permute_gamma).form
}

/// Searches for a bijection φ with φ(0) = 0 carrying every table of `lhs`
/// onto `rhs` (γ matched by position, or by any order when `permute_gamma`).
/// Returns the first witnessing bijection in lexicographic order, or None.
pub fn are_isomorphic(
    lhs: &TernaryGammaSemiring,
    rhs: &TernaryGammaSemiring,
    permute_gamma: bool,
) -> Result<Option<Vec<Elem>>> {
    if lhs.carrier_size() != rhs.carrier_size() {
        return Err(Error::SizeMismatch {
            left: lhs.carrier_size(),
            right: rhs.carrier_size(),
        });
    }
    if lhs.gamma_size() != rhs.gamma_size() {
        return Err(Error::GammaMismatch);
    }
    let n = lhs.carrier_size() as Elem;
    let orders = gamma_orders(lhs.gamma_size(), permute_gamma);
    for phi in perms_fixing_zero(lhs.carrier_size()) {
        let add_ok = (0..n).all(|a| {
            (0..n).all(|b| {
                phi[lhs.add(a, b) as usize] == rhs.add(phi[a as usize], phi[b as usize])
            })
        });
        if !add_ok {
            continue;
        }
        for order in &orders {
            let ops_ok = (0..lhs.gamma_size()).all(|g| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..n).all(|c| {
                            phi[lhs.tern(g, a, b, c) as usize]
                                == rhs.tern(
                                    order[g],
                                    phi[a as usize],
                                    phi[b as usize],
                                    phi[c as usize],
                                )
                        })
                    })
                })
            });
            if ops_ok {
                return Ok(Some(phi));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, AddKind, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn z0_or() -> TernaryGammaSemiring {
        build_named(
            NamedKind::ZeroOp,
            2,
            &NamedParams { add: Some(AddKind::Max), gamma_size: None },
        )
        .unwrap()
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let ts = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let canon = canonicalize(&ts, false);
        let again = canonicalize(&canon.structure, false);
        assert_eq!(canon.form.bytes, again.form.bytes);
        assert_eq!(canon.structure.table_bytes(), canon.form.bytes);
    }

    #[test]
    fn canonical_form_is_orbit_invariant() {
        let ts = build_named(NamedKind::Modular, 4, &NamedParams::default()).unwrap();
        let base = canonical_form(&ts, false);
        for phi in perms_fixing_zero(4) {
            let relabeled = ts.relabel(&phi).unwrap();
            assert_eq!(canonical_form(&relabeled, false), base);
        }
    }

    #[test]
    fn order_two_canonical_bytes_are_the_tables_themselves() {
        // With n = 2 only the identity fixes 0, so the canonical bytes are
        // literally add ∥ tensor.
        let ts = z0_or();
        let canon = canonicalize(&ts, false);
        assert_eq!(canon.form.bytes, ts.table_bytes());
        assert_eq!(canon.relabeling, vec![0, 1]);
    }

    #[test]
    fn self_isomorphism_is_identity() {
        let ts = bao();
        let phi = are_isomorphic(&ts, &ts, false).unwrap().unwrap();
        assert_eq!(phi, vec![0, 1]);
    }

    #[test]
    fn relabelings_are_recognized() {
        let ts = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let relabeled = ts.relabel(&[0, 2, 1]).unwrap();
        let phi = are_isomorphic(&ts, &relabeled, false).unwrap();
        assert!(phi.is_some());
        assert_eq!(canonical_form(&ts, false), canonical_form(&relabeled, false));
    }

    #[test]
    fn bao_and_or_zero_op_are_not_isomorphic() {
        // tensors differ at (1,1,1) and the only candidate bijection is the
        // identity
        assert!(are_isomorphic(&bao(), &z0_or(), false).unwrap().is_none());
        assert_ne!(canonical_form(&bao(), false), canonical_form(&z0_or(), false));
    }

    #[test]
    fn gamma_permutation_merges_swapped_pairs() {
        let a = build_named(
            NamedKind::TruncatedSum,
            4,
            &NamedParams { add: None, gamma_size: Some(2) },
        )
        .unwrap();
        let b = a.permute_gamma(&[1, 0]).unwrap();
        assert!(are_isomorphic(&a, &b, false).unwrap().is_none());
        assert!(are_isomorphic(&a, &b, true).unwrap().is_some());
        assert_ne!(canonical_form(&a, false), canonical_form(&b, false));
        assert_eq!(canonical_form(&a, true), canonical_form(&b, true));
    }

    #[test]
    fn size_mismatch_is_an_error() {
        let one = build_named(NamedKind::ZeroOp, 1, &NamedParams::default()).unwrap();
        assert!(are_isomorphic(&bao(), &one, false).is_err());
    }
}
