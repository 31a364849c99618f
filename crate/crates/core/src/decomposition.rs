//! Subdirect irreducibility, subdirect decompositions (two strategies),
//! the Wedderburn-style product check, and the pattern classifier.

use serde::{Deserialize, Serialize};

use crate::congruence::{all_congruences, Congruence};
use crate::enumeration::are_isomorphic;
use crate::error::Result;
use crate::hom::is_homomorphism;
use crate::ideals::{all_ideals, IdealSet};
use crate::quotient::{quotient, QuotientBy};
use crate::radical::radical;
use crate::structure::{direct_product, Elem, TernaryGammaSemiring};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SiReport {
    pub subdirectly_irreducible: bool,
    /// Least nontrivial congruence, when it exists.
    pub monolith: Option<Congruence>,
    /// True for the one-element structure, where Con \ {Δ} is empty and the
    /// question is vacuous.
    pub trivial: bool,
}

/// SI iff the congruences above the diagonal have a least element.
pub fn is_subdirectly_irreducible(ts: &TernaryGammaSemiring) -> SiReport {
    let lattice = all_congruences(ts);
    let diagonal = Congruence::diagonal(ts.carrier_size());
    let nontrivial: Vec<&Congruence> =
        lattice.elements.iter().filter(|c| **c != diagonal).collect();
    if nontrivial.is_empty() {
        return SiReport { subdirectly_irreducible: false, monolith: None, trivial: true };
    }
    let monolith = nontrivial
        .iter()
        .find(|cand| nontrivial.iter().all(|other| cand.refines(other)))
        .map(|c| (*c).clone());
    SiReport { subdirectly_irreducible: monolith.is_some(), monolith, trivial: false }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubdirectStrategy {
    /// Quotients by the maximal proper congruences. Whether their
    /// intersection is the diagonal is verified, not assumed.
    MaximalCongruences,
    /// Quotients by the meet-irreducible congruences; for finite algebras
    /// the intersection is guaranteed to be the diagonal.
    MeetIrreducible,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SubdirectDecomposition {
    pub strategy: SubdirectStrategy,
    pub factor_congruences: Vec<Congruence>,
    pub factors: Vec<TernaryGammaSemiring>,
    pub factor_subdirectly_irreducible: Vec<bool>,
    pub product: TernaryGammaSemiring,
    /// Embedding of the source into the product, as a carrier map.
    pub embedding: Vec<Elem>,
    pub injective: bool,
}

fn one_element_like(ts: &TernaryGammaSemiring) -> TernaryGammaSemiring {
    TernaryGammaSemiring::new(
        1,
        ts.gamma().to_vec(),
        vec![0],
        vec![vec![0]; ts.gamma_size()],
    )
    .expect("one-element structure is always valid")
}

/// Splits `ts` subdirectly along congruences chosen by `strategy`.
pub fn subdirect_decomposition(
    ts: &TernaryGammaSemiring,
    strategy: SubdirectStrategy,
) -> Result<SubdirectDecomposition> {
    let lattice = all_congruences(ts);
    let n = ts.carrier_size();
    let full = Congruence::full(n);
    let chosen: Vec<Congruence> = match strategy {
        SubdirectStrategy::MaximalCongruences => {
            // maximal in Con \ {∇}
            lattice
                .elements
                .iter()
                .filter(|c| **c != full)
                .filter(|c| {
                    lattice
                        .elements
                        .iter()
                        .all(|d| *d == full || *d == **c || !c.refines(d) || d.refines(c))
                })
                .cloned()
                .collect()
        }
        SubdirectStrategy::MeetIrreducible => lattice
            .elements
            .iter()
            .filter(|c| **c != full)
            .filter(|c| {
                // meet of everything strictly above must differ from c
                let above: Vec<&Congruence> = lattice
                    .elements
                    .iter()
                    .filter(|d| c.refines(d) && *d != *c)
                    .collect();
                let meet = above
                    .iter()
                    .fold(full.clone(), |acc, d| acc.meet(d));
                meet != **c
            })
            .cloned()
            .collect(),
    };

    let mut factors = Vec::new();
    let mut factor_si = Vec::new();
    for c in &chosen {
        let q = quotient(ts, QuotientBy::Congruence(c))?;
        factor_si.push(is_subdirectly_irreducible(&q.structure).subdirectly_irreducible);
        factors.push(q.structure);
    }

    // Product (one-element structure for the empty family) and embedding.
    let product = factors
        .iter()
        .fold(None::<TernaryGammaSemiring>, |acc, f| {
            Some(match acc {
                None => f.clone(),
                Some(p) => direct_product(&p, f).expect("factors share gamma"),
            })
        })
        .unwrap_or_else(|| one_element_like(ts));
    let embedding: Vec<Elem> = (0..n as Elem)
        .map(|a| {
            let mut idx = 0usize;
            for (c, f) in chosen.iter().zip(&factors) {
                idx = idx * f.carrier_size() + c.block_index(a);
            }
            idx as Elem
        })
        .collect();
    let mut distinct = embedding.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let injective = distinct.len() == n;

    // The embedding must be a homomorphism into the product.
    debug_assert!(is_homomorphism(ts, &product, &embedding)?.passed());

    Ok(SubdirectDecomposition {
        strategy,
        factor_congruences: chosen,
        factors,
        factor_subdirectly_irreducible: factor_si,
        product,
        embedding,
        injective,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WedderburnReport {
    pub radical: IdealSet,
    pub radical_order: usize,
    pub quotient_order: Option<usize>,
    /// T ≅ Rad(T) × T/Rad(T)?
    pub holds: bool,
    pub isomorphism: Option<Vec<Elem>>,
    /// Ideal-lattice sizes (T, Rad, S) and whether |L(T)| = |L(Rad)|·|L(S)|.
    pub ideal_counts: Option<(usize, usize, usize)>,
    pub lattice_factors: Option<bool>,
    /// Bourne relation of the radical failed compatibility.
    pub quotient_error: Option<String>,
}

/// Restriction of the structure to an ideal's carrier; ideals are closed
/// under + and absorb products, so the tables restrict cleanly.
pub fn restrict_to_ideal(ts: &TernaryGammaSemiring, ideal: IdealSet) -> TernaryGammaSemiring {
    let members: Vec<Elem> = ideal.elements().collect();
    let k = members.len();
    let index_of = |e: Elem| members.iter().position(|&x| x == e).expect("ideal not closed");
    let mut add = vec![0 as Elem; k * k];
    for i in 0..k {
        for j in 0..k {
            add[i * k + j] = index_of(ts.add(members[i], members[j])) as Elem;
        }
    }
    let mut ops = Vec::new();
    for gamma in 0..ts.gamma_size() {
        let mut t = vec![0 as Elem; k * k * k];
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    t[(i * k + j) * k + l] =
                        index_of(ts.tern(gamma, members[i], members[j], members[l])) as Elem;
                }
            }
        }
        ops.push(t);
    }
    TernaryGammaSemiring::new(k, ts.gamma().to_vec(), add, ops)
        .expect("ideal restriction preserves validity")
}

/// Executable check of T ≅ Rad(T) × T/Rad(T), with the companion
/// ideal-lattice factorization comparison.
pub fn wedderburn_check(ts: &TernaryGammaSemiring) -> WedderburnReport {
    let rad = radical(ts).radical;
    let rad_structure = restrict_to_ideal(ts, rad);
    match quotient(ts, QuotientBy::Ideal(rad)) {
        Ok(q) => {
            let product = direct_product(&rad_structure, &q.structure)
                .expect("factors share gamma");
            let isomorphism = if product.carrier_size() == ts.carrier_size() {
                are_isomorphic(&product, ts, false).unwrap_or(None)
            } else {
                None
            };
            let counts = (
                all_ideals(ts).len(),
                all_ideals(&rad_structure).len(),
                all_ideals(&q.structure).len(),
            );
            WedderburnReport {
                radical: rad,
                radical_order: rad_structure.carrier_size(),
                quotient_order: Some(q.structure.carrier_size()),
                holds: isomorphism.is_some(),
                isomorphism,
                ideal_counts: Some(counts),
                lattice_factors: Some(counts.0 == counts.1 * counts.2),
                quotient_error: None,
            }
        }
        Err(e) => WedderburnReport {
            radical: rad,
            radical_order: rad_structure.carrier_size(),
            quotient_order: None,
            holds: false,
            isomorphism: None,
            ideal_counts: None,
            lattice_factors: None,
            quotient_error: Some(e.to_string()),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PatternKind {
    Simple,
    IdempotentBoolean,
    SubdirectlyDecomposable,
    Other,
}

impl PatternKind {
    pub fn label(&self) -> &'static str {
        match self {
            PatternKind::Simple => "simple",
            PatternKind::IdempotentBoolean => "idempotent_boolean",
            PatternKind::SubdirectlyDecomposable => "subdirectly_decomposable",
            PatternKind::Other => "other",
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PatternLabel {
    pub kind: PatternKind,
    pub congruence_count: usize,
    pub additively_idempotent: bool,
    pub multiplicatively_idempotent: bool,
    pub subdirectly_irreducible: bool,
    /// Full congruence dump, attached whenever the label is `Other`.
    pub evidence: Option<Vec<Congruence>>,
}

/// Labels per the observed trichotomy: simple, else idempotent-Boolean,
/// else subdirectly decomposable. Anything matching none is `Other` and is
/// reported with its whole congruence lattice as evidence.
pub fn classify_pattern(ts: &TernaryGammaSemiring) -> PatternLabel {
    let lattice = all_congruences(ts);
    let congruence_count = lattice.len();
    let n = ts.carrier_size() as Elem;
    let additively_idempotent = ts.add_is_idempotent();
    let multiplicatively_idempotent = (0..ts.gamma_size())
        .all(|g| (0..n).all(|a| ts.tern(g, a, a, a) == a));
    let si = is_subdirectly_irreducible(ts);
    let kind = if congruence_count == 2 {
        PatternKind::Simple
    } else if additively_idempotent && multiplicatively_idempotent {
        PatternKind::IdempotentBoolean
    } else if !si.subdirectly_irreducible && !si.trivial {
        PatternKind::SubdirectlyDecomposable
    } else {
        PatternKind::Other
    };
    let evidence = (kind == PatternKind::Other).then(|| lattice.elements.clone());
    PatternLabel {
        kind,
        congruence_count,
        additively_idempotent,
        multiplicatively_idempotent,
        subdirectly_irreducible: si.subdirectly_irreducible,
        evidence,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn bao_squared() -> TernaryGammaSemiring {
        direct_product(&bao(), &bao()).unwrap()
    }

    fn z0(n: usize) -> TernaryGammaSemiring {
        build_named(NamedKind::ZeroOp, n, &NamedParams::default()).unwrap()
    }

    #[test]
    fn bao_is_si_with_full_monolith() {
        let report = is_subdirectly_irreducible(&bao());
        assert!(report.subdirectly_irreducible);
        assert_eq!(report.monolith, Some(Congruence::full(2)));
    }

    #[test]
    fn one_element_is_trivially_not_si() {
        let report = is_subdirectly_irreducible(&z0(1));
        assert!(!report.subdirectly_irreducible);
        assert!(report.trivial);
    }

    #[test]
    fn product_of_simples_is_not_si() {
        let report = is_subdirectly_irreducible(&bao_squared());
        assert!(!report.subdirectly_irreducible);
        assert!(!report.trivial);
    }

    #[test]
    fn simple_structure_decomposes_as_itself() {
        for strategy in [SubdirectStrategy::MaximalCongruences, SubdirectStrategy::MeetIrreducible]
        {
            let d = subdirect_decomposition(&bao(), strategy).unwrap();
            assert_eq!(d.factors.len(), 1);
            assert_eq!(d.factors[0], bao());
            assert!(d.injective);
        }
    }

    #[test]
    fn product_splits_into_two_factors() {
        let d =
            subdirect_decomposition(&bao_squared(), SubdirectStrategy::MeetIrreducible).unwrap();
        assert!(d.injective);
        assert!(d.factors.len() >= 2);
        assert!(d.factors.iter().all(|f| f.carrier_size() == 2));
        assert!(d.factor_subdirectly_irreducible.iter().all(|&b| b));
    }

    #[test]
    fn one_element_decomposes_via_empty_product() {
        let d = subdirect_decomposition(&z0(1), SubdirectStrategy::MeetIrreducible).unwrap();
        assert!(d.factors.is_empty());
        assert_eq!(d.product.carrier_size(), 1);
        assert!(d.injective);
    }

    #[test]
    fn wedderburn_holds_for_semiprime_and_for_full_radical() {
        // semiprime: Rad = {0}, so the product is 1 × T ≅ T
        let report = wedderburn_check(&bao());
        assert!(report.holds, "{report:?}");
        assert_eq!(report.lattice_factors, Some(true));
        // full radical: Rad = T, S is one-element, product ≅ T
        let report = wedderburn_check(&z0(3));
        assert!(report.holds, "{report:?}");
        assert_eq!(report.radical_order, 3);
        assert_eq!(report.quotient_order, Some(1));
    }

    #[test]
    fn classify_reference_structures() {
        assert_eq!(classify_pattern(&bao()).kind, PatternKind::Simple);
        assert_eq!(classify_pattern(&bao_squared()).kind, PatternKind::IdempotentBoolean);
        // Z0(2) over the two-element group: only Δ and ∇ are compatible.
        assert_eq!(classify_pattern(&z0(2)).kind, PatternKind::Simple);
    }

    #[test]
    fn trichotomy_counterexample_is_labeled_other_with_evidence() {
        // Over Z4 with {a b c} = 2abc mod 4, all five axioms hold, the
        // congruence lattice is the 3-chain Δ ⊂ (mod 2 cosets) ⊂ ∇, so the
        // structure is SI but neither simple nor idempotent: it escapes the
        // trichotomy and must arrive as Other with its lattice attached.
        let n = 4usize;
        let mut add = vec![0 as crate::structure::Elem; 16];
        let mut op = vec![0 as crate::structure::Elem; 64];
        for a in 0..4u8 {
            for b in 0..4u8 {
                add[a as usize * n + b as usize] = (a + b) % 4;
                for c in 0..4u8 {
                    op[(a as usize * n + b as usize) * n + c as usize] =
                        (2 * a as usize * b as usize * c as usize % 4) as u8;
                }
            }
        }
        let ts = TernaryGammaSemiring::new(n, vec!["1".into()], add, vec![op]).unwrap();
        assert!(crate::axioms::check_axioms(&ts, crate::axioms::AxiomMode::strict()).all_pass());
        let label = classify_pattern(&ts);
        assert_eq!(label.kind, PatternKind::Other);
        assert_eq!(label.congruence_count, 3);
        assert!(label.subdirectly_irreducible);
        assert!(label.evidence.is_some());
        assert_eq!(label.evidence.unwrap().len(), 3);
    }
}
