//! Nilpotent elements (under three competing definitions), prime ideals,
//! the prime radical, cancellation and identity audits, and the
//! six-component invariant fingerprint.

use serde::{Deserialize, Serialize};

use crate::congruence::all_congruences;
use crate::error::Result;
use crate::ideals::{all_ideals, IdealSet};
use crate::quotient::{quotient, Quotient, QuotientBy};
use crate::structure::{Elem, TernaryGammaSemiring};

/// Which reading of "nilpotent" to use.
///
/// * `Weak` — some a, b annihilate x in the first and second slot:
///   `{x a b}_γ = 0` and `{a x b}_δ = 0`.
/// * `Literal` — iterated left products `{..{{x x a₁}_γ₁ x a₂}_γ₂ ..}`
///   reach 0 for some choice of aᵢ. With an absorbing zero this degenerates
///   (pick a₁ = 0), which is the documented pathology of that definition.
/// * `Power` — the aᵢ are x itself: iterated odd ternary powers reach 0.
///   This is the default used for radical comparisons and fingerprints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NilDefinition {
    Weak,
    Literal,
    Power,
}

impl NilDefinition {
    pub fn parse(s: &str) -> crate::error::Result<Self> {
        match s {
            "weak" => Ok(NilDefinition::Weak),
            "literal" => Ok(NilDefinition::Literal),
            "power" => Ok(NilDefinition::Power),
            _ => Err(crate::error::Error::Parse {
                what: "nil definition".into(),
                message: format!("unknown mode `{s}` (expected weak|literal|power)"),
            }),
        }
    }
}

/// Elements nilpotent under the chosen definition. The iterated variants
/// run a reachability fixpoint over the finite carrier, so no explicit
/// depth bound is needed.
pub fn nilpotents(ts: &TernaryGammaSemiring, defn: NilDefinition) -> IdealSet {
    let n = ts.carrier_size() as Elem;
    let m = ts.gamma_size();
    let mut out = IdealSet::empty();
    for x in 0..n {
        let nil = match defn {
            NilDefinition::Weak => (0..n).any(|a| {
                (0..n).any(|b| {
                    (0..m).any(|g| ts.tern(g, x, a, b) == 0)
                        && (0..m).any(|d| ts.tern(d, a, x, b) == 0)
                })
            }),
            NilDefinition::Literal => reaches_zero(ts, x, false),
            NilDefinition::Power => reaches_zero(ts, x, true),
        };
        if nil {
            out.insert(x);
        }
    }
    out
}

/// BFS over values reachable as `{y x a}_γ` from the seed products
/// `{x x a}_γ`. With `power_only`, the aᵢ are forced to x.
fn reaches_zero(ts: &TernaryGammaSemiring, x: Elem, power_only: bool) -> bool {
    let n = ts.carrier_size() as Elem;
    let m = ts.gamma_size();
    let companions: Vec<Elem> = if power_only { vec![x] } else { (0..n).collect() };
    let mut seen = vec![false; n as usize];
    let mut queue: Vec<Elem> = Vec::new();
    for g in 0..m {
        for &a in &companions {
            let v = ts.tern(g, x, x, a);
            if !seen[v as usize] {
                seen[v as usize] = true;
                queue.push(v);
            }
        }
    }
    while let Some(y) = queue.pop() {
        if y == 0 {
            return true;
        }
        for g in 0..m {
            for &a in &companions {
                let v = ts.tern(g, y, x, a);
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    queue.push(v);
                }
            }
        }
    }
    false
}

/// Proper ideals P with `{a b c}_γ ∈ P ⇒ a ∈ P ∨ b ∈ P ∨ c ∈ P`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PrimeIdealSet {
    pub primes: Vec<IdealSet>,
}

fn is_prime(ts: &TernaryGammaSemiring, p: IdealSet) -> bool {
    let n = ts.carrier_size() as Elem;
    if p == IdealSet::full(ts.carrier_size()) {
        return false;
    }
    for gamma in 0..ts.gamma_size() {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if p.contains(ts.tern(gamma, a, b, c))
                        && !(p.contains(a) || p.contains(b) || p.contains(c))
                    {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Filters the ideal lattice by the elementwise primality predicate.
pub fn all_prime_ideals(ts: &TernaryGammaSemiring) -> PrimeIdealSet {
    let primes = all_ideals(ts)
        .elements
        .into_iter()
        .filter(|&p| is_prime(ts, p))
        .collect();
    PrimeIdealSet { primes }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadicalReport {
    pub primes: Vec<IdealSet>,
    /// Intersection of all primes; the full carrier when no prime exists.
    pub radical: IdealSet,
    pub is_semiprime: bool,
}

pub fn radical(ts: &TernaryGammaSemiring) -> RadicalReport {
    let primes = all_prime_ideals(ts).primes;
    let full = IdealSet::full(ts.carrier_size());
    let radical = primes.iter().fold(full, |acc, &p| acc.intersect(p));
    let is_semiprime = radical == IdealSet::zero_only();
    RadicalReport { primes, radical, is_semiprime }
}

/// Set comparison between the radical and a nilpotent set, with
/// symmetric-difference witnesses.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadNilReport {
    pub definition: NilDefinition,
    pub radical: IdealSet,
    pub nil: IdealSet,
    pub equal: bool,
    /// Elements in the radical but not nilpotent.
    pub radical_only: Vec<Elem>,
    /// Nilpotent elements outside the radical.
    pub nil_only: Vec<Elem>,
}

pub fn rad_nil_report(ts: &TernaryGammaSemiring, defn: NilDefinition) -> RadNilReport {
    let rad = radical(ts).radical;
    let nil = nilpotents(ts, defn);
    RadNilReport {
        definition: defn,
        radical: rad,
        nil,
        equal: rad == nil,
        radical_only: rad.elements().filter(|&e| !nil.contains(e)).collect(),
        nil_only: nil.elements().filter(|&e| !rad.contains(e)).collect(),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CancellationReport {
    pub quotient_size: usize,
    pub cancellative: bool,
    /// (γ, a, b, c, d) with {a b c}_γ = {a b d}_γ but c ≠ d, in the quotient.
    pub cancellation_witness: Option<(usize, Elem, Elem, Elem, Elem)>,
    pub quotient_semiprime: bool,
    /// Radical of the quotient when it is not {0}.
    pub quotient_radical: IdealSet,
}

/// Builds T/Rad(T) through the Bourne relation and audits the claimed
/// cancellation law and semiprimeness of the quotient.
pub fn cancellation_check(ts: &TernaryGammaSemiring) -> Result<CancellationReport> {
    let rad = radical(ts).radical;
    let Quotient { structure: q, .. } = quotient(ts, QuotientBy::Ideal(rad))?;
    let k = q.carrier_size() as Elem;
    let mut cancellation_witness = None;
    'outer: for gamma in 0..q.gamma_size() {
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        if c != d && q.tern(gamma, a, b, c) == q.tern(gamma, a, b, d) {
                            cancellation_witness = Some((gamma, a, b, c, d));
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    let qrad = radical(&q);
    Ok(CancellationReport {
        quotient_size: q.carrier_size(),
        cancellative: cancellation_witness.is_none(),
        cancellation_witness,
        quotient_semiprime: qrad.is_semiprime || q.carrier_size() == 1,
        quotient_radical: qrad.radical,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    /// Elements z with `{z a b}_γ = {a z b}_γ = {a b z}_γ = z` everywhere.
    pub absorbing_zeros: Vec<Elem>,
    /// Elements e with `{e a e}_γ = a` everywhere.
    pub units: Vec<Elem>,
    /// Some γ has `{a a a}_γ = a` for every a.
    pub diagonal_identity_gamma: Option<usize>,
    /// When the hypothesis above holds: is a + a = a for every a?
    pub additive_idempotent: Option<bool>,
    /// Witness a with a + a ≠ a when the implication fails.
    pub idempotence_witness: Option<Elem>,
}

/// Scans for absorbing zeros and units, and audits the implication
/// "some γ has {a a a}_γ = a pointwise ⇒ addition is idempotent".
pub fn find_identities(ts: &TernaryGammaSemiring) -> IdentityReport {
    let n = ts.carrier_size() as Elem;
    let m = ts.gamma_size();
    let absorbing_zeros = (0..n)
        .filter(|&z| {
            (0..m).all(|g| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        ts.tern(g, z, a, b) == z
                            && ts.tern(g, a, z, b) == z
                            && ts.tern(g, a, b, z) == z
                    })
                })
            })
        })
        .collect();
    let units = (0..n)
        .filter(|&e| (0..m).all(|g| (0..n).all(|a| ts.tern(g, e, a, e) == a)))
        .collect();
    let diagonal_identity_gamma =
        (0..m).find(|&g| (0..n).all(|a| ts.tern(g, a, a, a) == a));
    let (additive_idempotent, idempotence_witness) = match diagonal_identity_gamma {
        Some(_) => {
            let witness = (0..n).find(|&a| ts.add(a, a) != a);
            (Some(witness.is_none()), witness)
        }
        None => (None, None),
    };
    IdentityReport {
        absorbing_zeros,
        units,
        diagonal_identity_gamma,
        additive_idempotent,
        idempotence_witness,
    }
}

/// The six-component fingerprint:
/// (|T|, |Γ|, #ideals, #congruences, |Rad \ {0}|, |Nil \ {0}|),
/// with Nil taken under the power definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantTuple {
    pub order: usize,
    pub gamma_size: usize,
    pub ideals: usize,
    pub congruences: usize,
    pub radical_nonzero: usize,
    pub nil_nonzero: usize,
}

impl InvariantTuple {
    pub fn as_array(&self) -> [usize; 6] {
        [
            self.order,
            self.gamma_size,
            self.ideals,
            self.congruences,
            self.radical_nonzero,
            self.nil_nonzero,
        ]
    }
}

pub fn invariant_tuple(ts: &TernaryGammaSemiring) -> InvariantTuple {
    let rad = radical(ts).radical;
    let nil = nilpotents(ts, NilDefinition::Power);
    InvariantTuple {
        order: ts.carrier_size(),
        gamma_size: ts.gamma_size(),
        ideals: all_ideals(ts).len(),
        congruences: all_congruences(ts).len(),
        radical_nonzero: rad.elements().filter(|&e| e != 0).count(),
        nil_nonzero: nil.elements().filter(|&e| e != 0).count(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn z0(n: usize) -> TernaryGammaSemiring {
        build_named(NamedKind::ZeroOp, n, &NamedParams::default()).unwrap()
    }

    #[test]
    fn zero_op_is_all_nilpotent_under_every_definition() {
        for defn in [NilDefinition::Weak, NilDefinition::Literal, NilDefinition::Power] {
            assert_eq!(nilpotents(&z0(3), defn), IdealSet::full(3));
        }
    }

    #[test]
    fn bao_power_nilpotents_are_zero_only() {
        // {1,1,1} = 1 forever, so only 0 reaches 0.
        assert_eq!(nilpotents(&bao(), NilDefinition::Power), IdealSet::zero_only());
    }

    #[test]
    fn literal_definition_degenerates_with_absorbing_zero() {
        // Choosing a₁ = 0 kills any element, so everything is nilpotent.
        assert_eq!(nilpotents(&bao(), NilDefinition::Literal), IdealSet::full(2));
    }

    #[test]
    fn bao_primes_and_radical() {
        let report = radical(&bao());
        assert_eq!(report.primes, vec![IdealSet::zero_only()]);
        assert_eq!(report.radical, IdealSet::zero_only());
        assert!(report.is_semiprime);
    }

    #[test]
    fn mod3_zero_op_has_empty_spectrum_and_full_radical() {
        // {1,1,1} = 0 ∈ {0} without 1 ∈ {0}: the only proper ideal is not
        // prime, so the empty intersection convention gives Rad = T.
        let report = radical(&z0(3));
        assert!(report.primes.is_empty());
        assert_eq!(report.radical, IdealSet::full(3));
        assert!(!report.is_semiprime);
    }

    #[test]
    fn one_element_structure_has_no_proper_ideal() {
        let report = radical(&z0(1));
        assert!(report.primes.is_empty());
        assert_eq!(report.radical, IdealSet::full(1));
    }

    #[test]
    fn rad_nil_agree_on_small_zero_ops_and_bao() {
        assert!(rad_nil_report(&z0(2), NilDefinition::Power).equal);
        assert!(rad_nil_report(&bao(), NilDefinition::Power).equal);
        assert!(rad_nil_report(&z0(1), NilDefinition::Power).equal);
    }

    #[test]
    fn cancellation_fails_on_bao_with_witness() {
        // min(0,0,c) = 0 for every c, so the quotient (≅ BAO itself)
        // cannot be cancellative.
        let report = cancellation_check(&bao()).unwrap();
        assert_eq!(report.quotient_size, 2);
        assert!(!report.cancellative);
        assert!(report.quotient_semiprime);
    }

    #[test]
    fn cancellation_vacuous_on_one_element_quotient() {
        let report = cancellation_check(&z0(3)).unwrap();
        assert_eq!(report.quotient_size, 1);
        assert!(report.cancellative);
        assert!(report.quotient_semiprime);
    }

    #[test]
    fn identities_on_bao() {
        let report = find_identities(&bao());
        assert_eq!(report.absorbing_zeros, vec![0]);
        assert_eq!(report.units, vec![1]);
        assert_eq!(report.diagonal_identity_gamma, Some(0));
        assert_eq!(report.additive_idempotent, Some(true));
    }

    #[test]
    fn identities_on_zero_op_and_modular() {
        let report = find_identities(&z0(3));
        assert_eq!(report.absorbing_zeros, vec![0]);
        assert!(report.units.is_empty());

        // Modular order 3: no absorbing zero ({0,1,1} = 2), the exhaustive
        // unit scan returns {0} since 2·0 + a = a.
        let z3 = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let report = find_identities(&z3);
        assert!(report.absorbing_zeros.is_empty());
        assert_eq!(report.units, vec![0]);
    }

    #[test]
    fn invariant_tuples_for_reference_structures() {
        let one = invariant_tuple(&z0(1));
        assert_eq!(one.as_array(), [1, 1, 1, 1, 0, 0]);
        let b = invariant_tuple(&bao());
        assert_eq!(b.as_array(), [2, 1, 2, 2, 0, 0]);
    }

    #[test]
    fn power_nil_is_contained_in_literal_nil() {
        for ts in [bao(), z0(3), build_named(NamedKind::Modular, 4, &NamedParams::default()).unwrap()] {
            let power = nilpotents(&ts, NilDefinition::Power);
            let literal = nilpotents(&ts, NilDefinition::Literal);
            assert!(power.is_subset(literal));
        }
    }
}
