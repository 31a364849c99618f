//! Quotient structures by congruences and by ideals (via the Bourne
//! relation), with verified well-definedness.

use crate::congruence::{Congruence, UnionFind};
use crate::error::{Error, Result};
use crate::hom::Homomorphism;
use crate::ideals::IdealSet;
use crate::structure::{Elem, TernaryGammaSemiring};

/// What to quotient by.
#[derive(Debug, Clone)]
pub enum QuotientBy<'a> {
    Congruence(&'a Congruence),
    /// The Bourne relation of the ideal is computed, transitively closed,
    /// and verified compatible before quotienting.
    Ideal(IdealSet),
}

#[derive(Debug, Clone)]
pub struct Quotient {
    pub structure: TernaryGammaSemiring,
    /// Canonical projection a ↦ block of a.
    pub projection: Homomorphism,
    /// The congruence actually used (for an ideal input, the transitively
    /// closed Bourne relation).
    pub relation: Congruence,
}

/// The Bourne relation of an ideal: `a ~ b` iff `a + i = b + j` for some
/// i, j ∈ I, transitively closed into a partition.
pub fn bourne_congruence(ts: &TernaryGammaSemiring, ideal: IdealSet) -> Congruence {
    let n = ts.carrier_size();
    let mut uf = UnionFind::new(n);
    for a in 0..n as Elem {
        for b in 0..n as Elem {
            let related = ideal.elements().any(|i| {
                ideal
                    .elements()
                    .any(|j| i < n as Elem && j < n as Elem && ts.add(a, i) == ts.add(b, j))
            });
            if related {
                uf.union(a as usize, b as usize);
            }
        }
    }
    uf.into_congruence()
}

/// Builds the quotient with the block of 0 renumbered to element 0 and the
/// remaining blocks ordered by minimal representative. The induced tables
/// are verified to be well-defined; an incompatible relation is an error
/// carrying a witness pair, not a silently chosen value.
pub fn quotient(ts: &TernaryGammaSemiring, by: QuotientBy<'_>) -> Result<Quotient> {
    let relation = match by {
        QuotientBy::Congruence(c) => c.clone(),
        QuotientBy::Ideal(ideal) => bourne_congruence(ts, ideal),
    };
    if relation.size() != ts.carrier_size() {
        return Err(Error::MapLength {
            expected: ts.carrier_size(),
            got: relation.size(),
        });
    }
    // Verify compatibility directly in terms of the induced tables so the
    // error witness speaks the quotient's language.
    verify_well_defined(ts, &relation)?;

    let n = ts.carrier_size() as Elem;
    let blocks = relation.blocks();
    let k = blocks.len();
    let block_of: Vec<usize> = (0..n).map(|a| relation.block_index(a)).collect();
    let rep: Vec<Elem> = blocks.iter().map(|b| b[0]).collect();

    let mut add = vec![0 as Elem; k * k];
    for i in 0..k {
        for j in 0..k {
            add[i * k + j] = block_of[ts.add(rep[i], rep[j]) as usize] as Elem;
        }
    }
    let mut ops = Vec::with_capacity(ts.gamma_size());
    for gamma in 0..ts.gamma_size() {
        let mut t = vec![0 as Elem; k * k * k];
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    t[(i * k + j) * k + l] =
                        block_of[ts.tern(gamma, rep[i], rep[j], rep[l]) as usize] as Elem;
                }
            }
        }
        ops.push(t);
    }
    let structure = TernaryGammaSemiring::new(k, ts.gamma().to_vec(), add, ops)?;
    let projection = Homomorphism {
        source: ts.clone(),
        target: structure.clone(),
        map: block_of.iter().map(|&b| b as Elem).collect(),
    };
    Ok(Quotient { structure, projection, relation })
}

fn verify_well_defined(ts: &TernaryGammaSemiring, relation: &Congruence) -> Result<()> {
    let n = ts.carrier_size() as Elem;
    for a in 0..n {
        for b in 0..n {
            if !relation.same(a, b) {
                continue;
            }
            for c in 0..n {
                let (lhs, rhs) = (ts.add(a, c), ts.add(b, c));
                if !relation.same(lhs, rhs) {
                    return Err(Error::IllDefinedQuotient {
                        op: "add".into(),
                        lhs_inputs: vec![a, c],
                        rhs_inputs: vec![b, c],
                        lhs_value: lhs,
                        rhs_value: rhs,
                    });
                }
            }
            for gamma in 0..ts.gamma_size() {
                for c in 0..n {
                    for d in 0..n {
                        let probes = [
                            ([a, c, d], [b, c, d]),
                            ([c, a, d], [c, b, d]),
                            ([c, d, a], [c, d, b]),
                        ];
                        for (xs, ys) in probes {
                            let lhs = ts.tern(gamma, xs[0], xs[1], xs[2]);
                            let rhs = ts.tern(gamma, ys[0], ys[1], ys[2]);
                            if !relation.same(lhs, rhs) {
                                return Err(Error::IllDefinedQuotient {
                                    op: ts.gamma()[gamma].clone(),
                                    lhs_inputs: xs.to_vec(),
                                    rhs_inputs: ys.to_vec(),
                                    lhs_value: lhs,
                                    rhs_value: rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::is_homomorphism;
    use crate::structure::{build_named, NamedKind, NamedParams};

    fn z0(n: usize) -> TernaryGammaSemiring {
        build_named(NamedKind::ZeroOp, n, &NamedParams::default()).unwrap()
    }

    #[test]
    fn quotient_by_diagonal_is_the_structure_itself() {
        let ts = build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap();
        let q = quotient(&ts, QuotientBy::Congruence(&Congruence::diagonal(2))).unwrap();
        assert_eq!(q.structure, ts);
    }

    #[test]
    fn quotient_by_full_is_one_element() {
        let ts = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let q = quotient(&ts, QuotientBy::Congruence(&Congruence::full(3))).unwrap();
        assert_eq!(q.structure.carrier_size(), 1);
    }

    #[test]
    fn bourne_by_zero_ideal_over_group_reduct_is_identity() {
        // a + 0 = b + 0 forces a = b in a group reduct.
        let ts = z0(3);
        let q = quotient(&ts, QuotientBy::Ideal(IdealSet::zero_only())).unwrap();
        assert_eq!(q.structure, ts);
        assert_eq!(q.relation, Congruence::diagonal(3));
    }

    #[test]
    fn bourne_by_full_ideal_collapses_everything() {
        let ts = z0(3);
        let q = quotient(&ts, QuotientBy::Ideal(IdealSet::full(3))).unwrap();
        assert_eq!(q.structure.carrier_size(), 1);
    }

    #[test]
    fn projection_is_a_homomorphism() {
        let ts = z0(4);
        let q = quotient(&ts, QuotientBy::Ideal(IdealSet::from_elems([0, 2]))).unwrap();
        let verdict =
            is_homomorphism(&q.projection.source, &q.projection.target, &q.projection.map)
                .unwrap();
        assert!(verdict.passed());
    }

    #[test]
    fn incompatible_partition_yields_witnessed_error() {
        // On the modular order-3 structure, the partition {0,1}{2} is not
        // compatible with addition: 0 ~ 1 but 0+2=2, 1+2=0 land apart.
        let ts = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let bad = Congruence::from_reprs(&[0, 0, 2]);
        let err = quotient(&ts, QuotientBy::Congruence(&bad)).unwrap_err();
        match err {
            Error::IllDefinedQuotient { lhs_value, rhs_value, .. } => {
                assert_ne!(lhs_value, rhs_value);
            }
            other => panic!("unexpected error {other}"),
        }
    }
}
