//! Γ-linear codes: generation by closure, weight-enumerator projection
//! audit, and parity-check kernels with syndrome partitions.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quotient::{quotient, QuotientBy};
use crate::radical::radical;
use crate::structure::{Elem, TernaryGammaSemiring};

pub const DEFAULT_CODE_BUDGET: u64 = 1_000_000;

/// A nonempty set of words closed under componentwise + and componentwise
/// ternary products for every γ.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GammaLinearCode {
    pub length: usize,
    /// Sorted, duplicate-free.
    pub words: Vec<Vec<Elem>>,
}

impl GammaLinearCode {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn check_budget(ts: &TernaryGammaSemiring, length: usize, budget: u64) -> Result<()> {
    let mut space = 1u64;
    for _ in 0..length {
        space = space.saturating_mul(ts.carrier_size() as u64);
        if space > budget {
            return Err(Error::BudgetExceeded { budget, required: space });
        }
    }
    Ok(())
}

fn validate_word(ts: &TernaryGammaSemiring, length: usize, word: &[Elem]) -> Result<()> {
    if word.len() != length {
        return Err(Error::MapLength { expected: length, got: word.len() });
    }
    for &x in word {
        if x as usize >= ts.carrier_size() {
            return Err(Error::ElementRange { value: x as usize, n: ts.carrier_size() });
        }
    }
    Ok(())
}

fn vec_add(ts: &TernaryGammaSemiring, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
    x.iter().zip(y).map(|(&a, &b)| ts.add(a, b)).collect()
}

fn vec_tern(ts: &TernaryGammaSemiring, g: usize, x: &[Elem], y: &[Elem], z: &[Elem]) -> Vec<Elem> {
    x.iter()
        .zip(y)
        .zip(z)
        .map(|((&a, &b), &c)| ts.tern(g, a, b, c))
        .collect()
}

/// Least fixed point of the generators under componentwise + and all
/// componentwise ternary products. The zero word is *not* adjoined unless
/// generated: codes are additive subsemigroups, not submonoids.
pub fn code_generate(
    ts: &TernaryGammaSemiring,
    length: usize,
    generators: &[Vec<Elem>],
    budget: u64,
) -> Result<GammaLinearCode> {
    if length == 0 {
        return Err(Error::Parse {
            what: "code length".into(),
            message: "length must be at least 1".into(),
        });
    }
    if generators.is_empty() {
        return Err(Error::Parse {
            what: "generators".into(),
            message: "a code is nonempty; give at least one generator".into(),
        });
    }
    check_budget(ts, length, budget)?;
    for g in generators {
        validate_word(ts, length, g)?;
    }
    let mut set: BTreeSet<Vec<Elem>> = generators.iter().cloned().collect();
    loop {
        let words: Vec<Vec<Elem>> = set.iter().cloned().collect();
        let before = set.len();
        for x in &words {
            for y in &words {
                set.insert(vec_add(ts, x, y));
            }
        }
        let words: Vec<Vec<Elem>> = set.iter().cloned().collect();
        for g in 0..ts.gamma_size() {
            for x in &words {
                for y in &words {
                    for z in &words {
                        set.insert(vec_tern(ts, g, x, y, z));
                    }
                }
            }
        }
        if set.len() == before {
            break;
        }
    }
    Ok(GammaLinearCode { length, words: set.into_iter().collect() })
}

fn hamming(word: &[Elem]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightReport {
    /// Hamming distribution of the code; index = weight.
    pub distribution: Vec<u64>,
    /// Distribution under the coset-constant weight (a coordinate counts as
    /// zero iff its class in T/Rad is the class of 0).
    pub coset_distribution: Vec<u64>,
    /// Hamming distribution of the projected code in (T/Rad)^ℓ, after
    /// deduplication.
    pub image_distribution: Vec<u64>,
    pub projection_injective: bool,
    /// The projected code has the same Hamming enumerator as the original.
    pub holds: bool,
    /// A codeword whose weight class changes or that collides under
    /// projection.
    pub witness: Option<Vec<Elem>>,
    pub quotient_error: Option<String>,
}

/// Projects the code to S = T/Rad(T) and compares weight enumerators, both
/// for the plain Hamming weight and the coset-constant weight.
pub fn weight_report(ts: &TernaryGammaSemiring, code: &GammaLinearCode) -> WeightReport {
    let ell = code.length;
    let mut distribution = vec![0u64; ell + 1];
    for w in &code.words {
        distribution[hamming(w)] += 1;
    }
    let rad = radical(ts).radical;
    let q = match quotient(ts, QuotientBy::Ideal(rad)) {
        Ok(q) => q,
        Err(e) => {
            return WeightReport {
                distribution,
                coset_distribution: Vec::new(),
                image_distribution: Vec::new(),
                projection_injective: false,
                holds: false,
                witness: None,
                quotient_error: Some(e.to_string()),
            }
        }
    };
    let mut coset_distribution = vec![0u64; ell + 1];
    let mut image: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut collision_witness = None;
    for w in &code.words {
        let projected: Vec<Elem> = w.iter().map(|&x| q.projection.apply(x)).collect();
        coset_distribution[hamming(&projected)] += 1;
        if !image.insert(projected) && collision_witness.is_none() {
            collision_witness = Some(w.clone());
        }
    }
    let mut image_distribution = vec![0u64; ell + 1];
    for w in &image {
        image_distribution[hamming(w)] += 1;
    }
    let projection_injective = image.len() == code.words.len();
    let holds = distribution == image_distribution;
    let witness = if holds {
        None
    } else {
        collision_witness.or_else(|| {
            code.words
                .iter()
                .find(|w| {
                    let projected: Vec<Elem> =
                        w.iter().map(|&x| q.projection.apply(x)).collect();
                    hamming(w) != hamming(&projected)
                })
                .cloned()
        })
    };
    WeightReport {
        distribution,
        coset_distribution,
        image_distribution,
        projection_injective,
        holds,
        witness,
        quotient_error: None,
    }
}

/// One parity operator: x ↦ {u x v}_γ componentwise.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOperator {
    pub gamma: String,
    pub u: Vec<Elem>,
    pub v: Vec<Elem>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SyndromePartition {
    pub class_count: usize,
    /// Class sizes in sorted-syndrome order.
    pub class_sizes: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckCodeReport {
    /// Common kernel of all checks (may be empty when 0 is not absorbing).
    pub kernel: Vec<Vec<Elem>>,
    pub syndromes: SyndromePartition,
    /// Kernel minimum distance; None for fewer than two codewords.
    pub min_distance: Option<usize>,
    /// True when the additive reduct is not a group and the pseudo-metric
    /// w(x ⊕ y) was used.
    pub distance_is_pseudo: bool,
    /// Induced data over S = T/Rad, for the syndrome-equivalence audit.
    pub quotient_class_count: Option<usize>,
    pub quotient_min_distance: Option<usize>,
    pub class_counts_agree: Option<bool>,
    pub min_distances_agree: Option<bool>,
    pub quotient_error: Option<String>,
}

fn words_of(n: usize, length: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::with_capacity(n.pow(length as u32));
    let mut current = vec![0 as Elem; length];
    loop {
        out.push(current.clone());
        let mut i = length;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (current[i] as usize) < n - 1 {
                current[i] += 1;
                for c in current[i + 1..].iter_mut() {
                    *c = 0;
                }
                break;
            }
        }
    }
}

fn min_distance(ts: &TernaryGammaSemiring, words: &[Vec<Elem>]) -> (Option<usize>, bool) {
    let group = ts.add_is_group();
    if words.len() < 2 {
        return (None, !group);
    }
    let mut best = usize::MAX;
    for i in 0..words.len() {
        for j in i + 1..words.len() {
            let d = if group {
                // in a group, w(x − y) is the count of differing coordinates
                words[i].iter().zip(&words[j]).filter(|(a, b)| a != b).count()
            } else {
                hamming(&vec_add(ts, &words[i], &words[j]))
            };
            best = best.min(d);
        }
    }
    (Some(best), !group)
}

fn syndrome_map(
    ts: &TernaryGammaSemiring,
    length: usize,
    checks: &[(usize, Vec<Elem>, Vec<Elem>)],
) -> (Vec<Vec<Elem>>, SyndromePartition) {
    let mut kernel = Vec::new();
    let mut classes: BTreeMap<Vec<Elem>, u64> = BTreeMap::new();
    for x in words_of(ts.carrier_size(), length) {
        let mut syndrome = Vec::with_capacity(checks.len() * length);
        for (g, u, v) in checks {
            for i in 0..length {
                syndrome.push(ts.tern(*g, u[i], x[i], v[i]));
            }
        }
        if syndrome.iter().all(|&s| s == 0) {
            kernel.push(x.clone());
        }
        *classes.entry(syndrome).or_insert(0) += 1;
    }
    let partition = SyndromePartition {
        class_count: classes.len(),
        class_sizes: classes.into_values().collect(),
    };
    (kernel, partition)
}

/// Kernel-of-checks code plus the syndrome partition of the whole space,
/// with the same data recomputed over T/Rad for comparison.
pub fn check_code(
    ts: &TernaryGammaSemiring,
    length: usize,
    checks: &[CheckOperator],
    budget: u64,
) -> Result<CheckCodeReport> {
    if length == 0 {
        return Err(Error::Parse {
            what: "code length".into(),
            message: "length must be at least 1".into(),
        });
    }
    check_budget(ts, length, budget)?;
    let mut resolved = Vec::new();
    for c in checks {
        let g = ts.gamma_index(&c.gamma)?;
        validate_word(ts, length, &c.u)?;
        validate_word(ts, length, &c.v)?;
        resolved.push((g, c.u.clone(), c.v.clone()));
    }
    let (kernel, syndromes) = syndrome_map(ts, length, &resolved);
    let (min_d, pseudo) = min_distance(ts, &kernel);

    let (qcc, qmd, agree_c, agree_d, qerr) =
        match quotient(ts, QuotientBy::Ideal(radical(ts).radical)) {
            Ok(q) => {
                let proj = |w: &[Elem]| -> Vec<Elem> {
                    w.iter().map(|&x| q.projection.apply(x)).collect()
                };
                let induced: Vec<(usize, Vec<Elem>, Vec<Elem>)> = resolved
                    .iter()
                    .map(|(g, u, v)| (*g, proj(u), proj(v)))
                    .collect();
                let (qkernel, qsynd) = syndrome_map(&q.structure, length, &induced);
                let (qmin, _) = min_distance(&q.structure, &qkernel);
                (
                    Some(qsynd.class_count),
                    qmin,
                    Some(qsynd.class_count == syndromes.class_count),
                    Some(qmin == min_d),
                    None,
                )
            }
            Err(e) => (None, None, None, None, Some(e.to_string())),
        };

    Ok(CheckCodeReport {
        kernel,
        syndromes,
        min_distance: min_d,
        distance_is_pseudo: pseudo,
        quotient_class_count: qcc,
        quotient_min_distance: qmd,
        class_counts_agree: agree_c,
        min_distances_agree: agree_d,
        quotient_error: qerr,
    })
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
    fn zero_vector_generates_itself() {
        let code = code_generate(&bao(), 3, &[vec![0, 0, 0]], DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(code.words, vec![vec![0, 0, 0]]);
    }

    #[test]
    fn single_generator_over_bao_is_a_fixed_point() {
        // (1,0)+(1,0) = (1,0) and min over any triple of copies is (1,0):
        // the zero word is not forced in.
        let code = code_generate(&bao(), 2, &[vec![1, 0]], DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(code.words, vec![vec![1, 0]]);
    }

    #[test]
    fn full_generator_set_gives_full_space() {
        let gens = words_of(2, 2);
        let code = code_generate(&bao(), 2, &gens, DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(code.len(), 4);
    }

    #[test]
    fn budget_is_enforced() {
        let err = code_generate(&z0(3), 20, &[vec![0; 20]], DEFAULT_CODE_BUDGET);
        assert!(matches!(err, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn weight_report_trivial_code() {
        let code = code_generate(&bao(), 3, &[vec![0, 0, 0]], DEFAULT_CODE_BUDGET).unwrap();
        let report = weight_report(&bao(), &code);
        assert_eq!(report.distribution, vec![1, 0, 0, 0]);
        assert!(report.holds);
    }

    #[test]
    fn weight_report_is_exact_for_semiprime_structures() {
        // BAO is semiprime: the projection is injective and enumerators
        // agree.
        let code = code_generate(&bao(), 2, &[vec![1, 0], vec![0, 1]], DEFAULT_CODE_BUDGET)
            .unwrap();
        let report = weight_report(&bao(), &code);
        assert!(report.projection_injective);
        assert!(report.holds);
    }

    #[test]
    fn weight_report_fails_when_radical_swallows_everything() {
        // Z0(2): Rad = T, every coordinate collapses to the zero class.
        let ts = z0(2);
        let code = code_generate(&ts, 2, &[vec![1, 0]], DEFAULT_CODE_BUDGET).unwrap();
        let report = weight_report(&ts, &code);
        assert!(!report.holds);
        assert!(report.witness.is_some());
        // coset-constant weight concentrates at 0
        assert_eq!(report.coset_distribution[0], report.distribution.iter().sum::<u64>());
    }

    #[test]
    fn no_checks_means_full_kernel() {
        let report = check_code(&bao(), 2, &[], DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(report.kernel.len(), 4);
        assert_eq!(report.syndromes.class_count, 1);
    }

    #[test]
    fn zero_op_checks_accept_everything() {
        let ts = z0(2);
        let checks = [CheckOperator { gamma: "g0".into(), u: vec![1, 1], v: vec![1, 1] }];
        let report = check_code(&ts, 2, &checks, DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(report.kernel.len(), 4);
        assert_eq!(report.syndromes.class_count, 1);
    }

    #[test]
    fn bao_identity_check_pins_kernel_to_zero() {
        // H(x) = min(1, x, 1) = x, so the kernel is the zero word alone.
        let checks = [CheckOperator { gamma: "1".into(), u: vec![1], v: vec![1] }];
        let report = check_code(&bao(), 1, &checks, DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(report.kernel, vec![vec![0]]);
        assert_eq!(report.syndromes.class_count, 2);
        assert_eq!(report.min_distance, None);
    }

    #[test]
    fn syndrome_classes_partition_the_space() {
        // disjoint by construction; covering means the sizes sum to n^ℓ
        let z3 = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let checks = [
            CheckOperator { gamma: "1".into(), u: vec![1, 0], v: vec![1, 2] },
            CheckOperator { gamma: "1".into(), u: vec![2, 1], v: vec![0, 1] },
        ];
        let report = check_code(&z3, 2, &checks, DEFAULT_CODE_BUDGET).unwrap();
        assert_eq!(report.syndromes.class_sizes.iter().sum::<u64>(), 9);
    }
}
