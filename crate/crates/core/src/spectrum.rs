//! Prime spectrum: Zariski-style closed sets, the Galois connection with
//! radical ideals, Krull-type dimension, prime avoidance, and contraction
//! of primes along homomorphisms. Every claimed property is verified.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hom::{is_homomorphism, Homomorphism};
use crate::ideals::{all_ideals, IdealSet};
use crate::quotient::{quotient, QuotientBy};
use crate::radical::{all_prime_ideals, radical};
use crate::structure::{Elem, TernaryGammaSemiring};

/// One closed set V(I) = { P prime : I ⊆ P }, as sorted prime indices,
/// together with every ideal that produces it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedSet {
    pub primes: Vec<usize>,
    pub ideals: Vec<IdealSet>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub primes: Vec<IdealSet>,
    /// Covering pairs (i, j) with `primes[i] ⊂ primes[j]` and nothing between.
    pub inclusion_covers: Vec<(usize, usize)>,
    /// The distinct closed sets, sorted by their prime-index vectors.
    pub closed_sets: Vec<ClosedSet>,
    pub union_closed: bool,
    pub union_witness: Option<(usize, usize)>,
    pub intersection_closed: bool,
    pub intersection_witness: Option<(usize, usize)>,
    /// V is inclusion-reversing on ideals.
    pub v_order_reversing: bool,
    /// Ideals I with I = ⋂ { P : P ⊇ I } (empty intersection = carrier).
    pub radical_ideals: Vec<IdealSet>,
    /// Closed sets and radical ideals are in order-reversing bijection via
    /// V and X ↦ ⋂_{P ∈ X} P.
    pub galois_anti_isomorphism: bool,
    pub galois_witness: Option<String>,
    pub dimension: i64,
}

fn v_of(primes: &[IdealSet], ideal: IdealSet) -> Vec<usize> {
    primes
        .iter()
        .enumerate()
        .filter(|(_, p)| ideal.is_subset(**p))
        .map(|(i, _)| i)
        .collect()
}

fn intersect_primes(ts: &TernaryGammaSemiring, primes: &[IdealSet], set: &[usize]) -> IdealSet {
    set.iter()
        .fold(IdealSet::full(ts.carrier_size()), |acc, &i| acc.intersect(primes[i]))
}

/// Enumerates V(I) over every ideal, audits the closed-set family for
/// topology closure, and verifies the Galois pairing against the radical
/// ideals. Failures come back as witnesses, never as assumptions.
pub fn spec_closed_sets(ts: &TernaryGammaSemiring) -> SpectrumReport {
    let primes = all_prime_ideals(ts).primes;
    let ideals = all_ideals(ts).elements;

    let mut family: BTreeMap<Vec<usize>, Vec<IdealSet>> = BTreeMap::new();
    for &ideal in &ideals {
        family.entry(v_of(&primes, ideal)).or_default().push(ideal);
    }
    let closed_sets: Vec<ClosedSet> = family
        .into_iter()
        .map(|(primes, ideals)| ClosedSet { primes, ideals })
        .collect();
    let member = |set: &Vec<usize>| closed_sets.iter().any(|c| &c.primes == set);

    // Finite family: pairwise closure plus the forced members (∅ = V(T),
    // Spec = V(⟨∅⟩)) give closure under finite union and arbitrary
    // intersection.
    let mut union_closed = true;
    let mut union_witness = None;
    let mut intersection_closed = true;
    let mut intersection_witness = None;
    'outer: for i in 0..closed_sets.len() {
        for j in 0..closed_sets.len() {
            let mut un: Vec<usize> =
                [closed_sets[i].primes.clone(), closed_sets[j].primes.clone()].concat();
            un.sort_unstable();
            un.dedup();
            if !member(&un) {
                union_closed = false;
                union_witness = Some((i, j));
                break 'outer;
            }
            let inter: Vec<usize> = closed_sets[i]
                .primes
                .iter()
                .filter(|p| closed_sets[j].primes.contains(p))
                .copied()
                .collect();
            if !member(&inter) {
                intersection_closed = false;
                intersection_witness = Some((i, j));
                break 'outer;
            }
        }
    }

    let mut v_order_reversing = true;
    'vrev: for &a in &ideals {
        for &b in &ideals {
            if a.is_subset(b) {
                let va = v_of(&primes, a);
                let vb = v_of(&primes, b);
                if !vb.iter().all(|p| va.contains(p)) {
                    v_order_reversing = false;
                    break 'vrev;
                }
            }
        }
    }

    let radical_ideals: Vec<IdealSet> = ideals
        .iter()
        .copied()
        .filter(|&i| intersect_primes(ts, &primes, &v_of(&primes, i)) == i)
        .collect();

    // Galois anti-isomorphism audit: V restricted to radical ideals must hit
    // each closed set exactly once, and k ∘ V must be the identity there.
    let mut galois_anti_isomorphism = true;
    let mut galois_witness = None;
    for c in &closed_sets {
        let k = intersect_primes(ts, &primes, &c.primes);
        let back = v_of(&primes, k);
        if back != c.primes {
            galois_anti_isomorphism = false;
            galois_witness = Some(format!(
                "V(k(X)) != X for closed set {:?} (k = {})",
                c.primes,
                k.hex()
            ));
            break;
        }
    }
    if galois_anti_isomorphism && radical_ideals.len() != closed_sets.len() {
        galois_anti_isomorphism = false;
        galois_witness = Some(format!(
            "{} radical ideals vs {} closed sets",
            radical_ideals.len(),
            closed_sets.len()
        ));
    }

    let dimension = krull_dimension_of(&primes);
    SpectrumReport {
        inclusion_covers: prime_covers(&primes),
        primes,
        closed_sets,
        union_closed,
        union_witness,
        intersection_closed,
        intersection_witness,
        v_order_reversing,
        radical_ideals,
        galois_anti_isomorphism,
        galois_witness,
        dimension,
    }
}

fn prime_covers(primes: &[IdealSet]) -> Vec<(usize, usize)> {
    let mut covers = Vec::new();
    for i in 0..primes.len() {
        for j in 0..primes.len() {
            if i == j || !primes[i].is_subset(primes[j]) {
                continue;
            }
            let between = (0..primes.len()).any(|x| {
                x != i
                    && x != j
                    && primes[i].is_subset(primes[x])
                    && primes[x].is_subset(primes[j])
            });
            if !between {
                covers.push((i, j));
            }
        }
    }
    covers
}

fn krull_dimension_of(primes: &[IdealSet]) -> i64 {
    if primes.is_empty() {
        return -1;
    }
    // longest strict chain length = longest path in the strict-inclusion DAG
    let k = primes.len();
    let mut memo = vec![None::<i64>; k];
    fn longest(i: usize, primes: &[IdealSet], memo: &mut Vec<Option<i64>>) -> i64 {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut best = 0;
        for j in 0..primes.len() {
            if j != i && primes[i].is_subset(primes[j]) && primes[i] != primes[j] {
                best = best.max(1 + longest(j, primes, memo));
            }
        }
        memo[i] = Some(best);
        best
    }
    (0..k).map(|i| longest(i, primes, &mut memo)).max().unwrap()
}

/// Length of the longest strict chain of primes; −1 for the empty spectrum.
pub fn krull_dimension(ts: &TernaryGammaSemiring) -> i64 {
    krull_dimension_of(&all_prime_ideals(ts).primes)
}

/// Companion audit: the dimension of T/Rad(T) is expected to be 0 (or −1
/// when the quotient has no primes at all); any other outcome is reported.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimensionAudit {
    pub dimension: i64,
    pub quotient_dimension: Option<i64>,
    pub quotient_zero_dimensional: Option<bool>,
    pub quotient_error: Option<String>,
}

pub fn dimension_audit(ts: &TernaryGammaSemiring) -> DimensionAudit {
    let dimension = krull_dimension(ts);
    match quotient(ts, QuotientBy::Ideal(radical(ts).radical)) {
        Ok(q) => {
            let qd = krull_dimension(&q.structure);
            DimensionAudit {
                dimension,
                quotient_dimension: Some(qd),
                quotient_zero_dimensional: Some(qd <= 0),
                quotient_error: None,
            }
        }
        Err(e) => DimensionAudit {
            dimension,
            quotient_dimension: None,
            quotient_zero_dimensional: None,
            quotient_error: Some(e.to_string()),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AvoidanceVariant {
    /// I ⊆ P₁ ∪ … ∪ P_k ⇒ I ⊆ P_j for some j (the standard reading).
    Union,
    /// I ⊆ P₁ ∩ … ∩ P_k ⇒ I ⊆ P_j for some j (vacuously true; retained so
    /// the verbatim statement can be cited in reports).
    IntersectionAsPrinted,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AvoidanceCounterexample {
    pub ideal: IdealSet,
    pub primes: Vec<IdealSet>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AvoidanceReport {
    pub variant: AvoidanceVariant,
    pub cases_checked: u64,
    pub holds: bool,
    pub counterexamples: Vec<AvoidanceCounterexample>,
}

/// Tests prime avoidance over all ideals and all prime subsets of size ≤ 3.
pub fn prime_avoidance_check(
    ts: &TernaryGammaSemiring,
    variant: AvoidanceVariant,
) -> AvoidanceReport {
    let primes = all_prime_ideals(ts).primes;
    let ideals = all_ideals(ts).elements;
    let mut cases_checked = 0u64;
    let mut counterexamples = Vec::new();
    let k = primes.len();
    for size in 1..=3.min(k) {
        let subsets = subsets_of_size(k, size);
        for subset in &subsets {
            let combined = match variant {
                AvoidanceVariant::Union => subset
                    .iter()
                    .fold(IdealSet::empty(), |acc, &i| acc.union(primes[i])),
                AvoidanceVariant::IntersectionAsPrinted => subset
                    .iter()
                    .fold(IdealSet::full(ts.carrier_size()), |acc, &i| {
                        acc.intersect(primes[i])
                    }),
            };
            for &ideal in &ideals {
                cases_checked += 1;
                if ideal.is_subset(combined)
                    && !subset.iter().any(|&i| ideal.is_subset(primes[i]))
                {
                    counterexamples.push(AvoidanceCounterexample {
                        ideal,
                        primes: subset.iter().map(|&i| primes[i]).collect(),
                    });
                }
            }
        }
    }
    AvoidanceReport { variant, cases_checked, holds: counterexamples.is_empty(), counterexamples }
}

fn subsets_of_size(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, k: usize, size: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..k {
            current.push(i);
            rec(i + 1, k, size, current, out);
            current.pop();
        }
    }
    rec(0, k, size, &mut current, &mut out);
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeContraction {
    pub target_prime: IdealSet,
    pub preimage: IdealSet,
    pub is_ideal: bool,
    pub is_prime: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ContractionReport {
    pub contractions: Vec<PrimeContraction>,
    pub all_contractions_prime: bool,
    /// Preimage of every closed set is closed (computed only when the
    /// induced map lands in the source spectrum).
    pub continuous: Option<bool>,
    pub continuity_witness: Option<IdealSet>,
}

/// Pulls every target prime back along f and audits primality of the
/// contractions plus continuity of the induced spectrum map.
pub fn contract_primes(f: &Homomorphism) -> Result<ContractionReport> {
    match is_homomorphism(&f.source, &f.target, &f.map)? {
        v if v.passed() => {}
        _ => return Err(Error::NotAHomomorphism("map fails preservation checks".into())),
    }
    let source_primes = all_prime_ideals(&f.source).primes;
    let target_primes = all_prime_ideals(&f.target).primes;
    let n = f.source.carrier_size() as Elem;

    let mut contractions = Vec::new();
    for &p in &target_primes {
        let preimage = IdealSet::from_elems((0..n).filter(|&a| p.contains(f.apply(a))));
        let is_ideal = crate::ideals::is_ideal(&f.source, preimage);
        let is_prime = is_ideal && source_primes.contains(&preimage);
        contractions.push(PrimeContraction { target_prime: p, preimage, is_ideal, is_prime });
    }
    let all_contractions_prime = contractions.iter().all(|c| c.is_prime);

    let (continuous, continuity_witness) = if all_contractions_prime {
        let source_ideals = all_ideals(&f.source).elements;
        let target_ideals = all_ideals(&f.target).elements;
        let mut witness = None;
        'cont: for &i in &source_ideals {
            // pullback of V(i) under the induced map
            let pulled: Vec<usize> = (0..target_primes.len())
                .filter(|&pi| i.is_subset(contractions[pi].preimage))
                .collect();
            let closed = target_ideals
                .iter()
                .any(|&j| v_of(&target_primes, j) == pulled);
            if !closed {
                witness = Some(i);
                break 'cont;
            }
        }
        (Some(witness.is_none()), witness)
    } else {
        (None, None)
    };

    Ok(ContractionReport { contractions, all_contractions_prime, continuous, continuity_witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, direct_product, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn z0(n: usize) -> TernaryGammaSemiring {
        build_named(NamedKind::ZeroOp, n, &NamedParams::default()).unwrap()
    }

    #[test]
    fn bao_spectrum_is_single_point() {
        let report = spec_closed_sets(&bao());
        assert_eq!(report.primes, vec![IdealSet::zero_only()]);
        // closed sets: ∅ = V(T) and {{0}} = V({0})
        assert_eq!(report.closed_sets.len(), 2);
        assert!(report.union_closed && report.intersection_closed);
        assert!(report.v_order_reversing);
        assert!(report.galois_anti_isomorphism, "{:?}", report.galois_witness);
        assert_eq!(report.dimension, 0);
    }

    #[test]
    fn empty_spectrum_conventions() {
        let report = spec_closed_sets(&z0(3));
        assert!(report.primes.is_empty());
        assert_eq!(report.closed_sets.len(), 1); // only ∅
        assert_eq!(report.dimension, -1);
        assert_eq!(krull_dimension(&z0(1)), -1);
    }

    #[test]
    fn product_of_simples_is_zero_dimensional() {
        let ts = direct_product(&bao(), &bao()).unwrap();
        // the two projection kernels are incomparable primes
        let report = spec_closed_sets(&ts);
        assert_eq!(report.primes.len(), 2);
        assert_eq!(report.dimension, 0);
        assert!(report.inclusion_covers.is_empty());
        // V(I ∩ J) ⊇ V(I) ∪ V(J) over all ideal pairs
        let ideals = crate::ideals::all_ideals(&ts).elements;
        for &i in &ideals {
            for &j in &ideals {
                let vi = v_of(&report.primes, i);
                let vj = v_of(&report.primes, j);
                let vmeet = v_of(&report.primes, i.intersect(j));
                assert!(vi.iter().chain(&vj).all(|p| vmeet.contains(p)));
            }
        }
    }

    #[test]
    fn dimension_audit_on_reference_structures() {
        let audit = dimension_audit(&bao());
        assert_eq!(audit.quotient_dimension, Some(0));
        let audit = dimension_audit(&z0(3));
        assert_eq!(audit.dimension, -1);
        // quotient by the full radical is one-element: empty spectrum
        assert_eq!(audit.quotient_dimension, Some(-1));
        assert_eq!(audit.quotient_zero_dimensional, Some(true));
    }

    #[test]
    fn intersection_variant_avoidance_is_vacuous() {
        for ts in [bao(), z0(3), direct_product(&bao(), &bao()).unwrap()] {
            let report = prime_avoidance_check(&ts, AvoidanceVariant::IntersectionAsPrinted);
            assert!(report.holds, "{:?}", report.counterexamples);
        }
    }

    #[test]
    fn union_variant_on_single_prime_passes() {
        let report = prime_avoidance_check(&bao(), AvoidanceVariant::Union);
        assert!(report.holds);
    }

    #[test]
    fn identity_contraction_is_continuous() {
        let ts = bao();
        let f = crate::hom::Homomorphism::identity(&ts);
        let report = contract_primes(&f).unwrap();
        assert!(report.all_contractions_prime);
        assert_eq!(report.continuous, Some(true));
    }

    #[test]
    fn projection_contracts_prime_to_kernel_prime() {
        let square = direct_product(&bao(), &bao()).unwrap();
        // first projection: (x, y) = 2x + y -> x
        let map: Vec<Elem> = (0..4).map(|e| e / 2).collect();
        let f = Homomorphism { source: square.clone(), target: bao(), map };
        let report = contract_primes(&f).unwrap();
        assert_eq!(report.contractions.len(), 1);
        // preimage of {0} is { (0,0), (0,1) } = kernel of the projection
        assert_eq!(report.contractions[0].preimage, IdealSet::from_elems([0, 1]));
        assert!(report.contractions[0].is_prime);
        assert_eq!(report.continuous, Some(true));
    }

    #[test]
    fn map_into_one_element_target_is_vacuous() {
        let ts = z0(3);
        let one = TernaryGammaSemiring::new(1, ts.gamma().to_vec(), vec![0], vec![vec![0]])
            .unwrap();
        let f = Homomorphism { source: ts, target: one, map: vec![0, 0, 0] };
        let report = contract_primes(&f).unwrap();
        assert!(report.contractions.is_empty());
        assert!(report.all_contractions_prime);
    }
}
