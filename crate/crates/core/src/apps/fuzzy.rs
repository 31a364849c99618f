//! Fuzzy Γ-ideals with exact rational grades, level-cut audits, and the
//! inverse chain-to-membership construction.

use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{ideal_violation, IdealSet, IdealViolation};
use crate::structure::{Elem, TernaryGammaSemiring};

pub type Grade = Ratio<u64>;

/// Parses "p/q", "0.25", or "1" into an exact rational.
pub fn parse_grade(s: &str) -> Result<Grade> {
    let bad = |msg: &str| Error::Parse { what: "grade".into(), message: msg.into() };
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.trim().parse().map_err(|_| bad("bad numerator"))?;
        let q: u64 = q.trim().parse().map_err(|_| bad("bad denominator"))?;
        if q == 0 {
            return Err(bad("zero denominator"));
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad("bad number"))? };
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("bad decimal"));
        }
        let digits: u64 = frac.parse().map_err(|_| bad("bad decimal"))?;
        let denom = 10u64.pow(frac.len() as u32);
        return Ok(Ratio::new(int * denom + digits, denom));
    }
    let int: u64 = s.parse().map_err(|_| bad("expected p/q, decimal, or integer"))?;
    Ok(Ratio::from_integer(int))
}

pub fn grade_to_string(g: &Grade) -> String {
    if g.is_integer() {
        g.to_integer().to_string()
    } else {
        format!("{}/{}", g.numer(), g.denom())
    }
}

/// A membership function on the carrier with grades in [0, 1].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyIdeal {
    grades: Vec<Grade>,
}

impl FuzzyIdeal {
    pub fn new(n: usize, grades: Vec<Grade>) -> Result<Self> {
        if grades.len() != n {
            return Err(Error::MapLength { expected: n, got: grades.len() });
        }
        let one = Grade::from_integer(1);
        for (i, g) in grades.iter().enumerate() {
            if *g > one {
                return Err(Error::GradeRange {
                    element: i,
                    grade: grade_to_string(g),
                });
            }
        }
        Ok(Self { grades })
    }

    pub fn grade(&self, a: Elem) -> Grade {
        self.grades[a as usize]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FuzzyViolation {
    /// μ(a+b) < min(μ(a), μ(b)).
    Add { a: Elem, b: Elem },
    /// μ({x y a}_γ) < μ(a).
    Tern { gamma: usize, x: Elem, y: Elem, a: Elem },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LevelCut {
    pub alpha: String,
    pub set: IdealSet,
    pub is_ideal: bool,
    pub violation: Option<IdealViolation>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FuzzyReport {
    pub is_fuzzy_ideal: bool,
    pub violation: Option<FuzzyViolation>,
    /// One cut per distinct positive grade, highest grade first. Each cut
    /// is checked against the full Γ-ideal conditions.
    pub cuts: Vec<LevelCut>,
    pub all_cuts_are_ideals: bool,
}

/// Verifies the membership conditions exhaustively and audits every level
/// cut against the crisp ideal checker.
pub fn fuzzy_ideal_check(ts: &TernaryGammaSemiring, mu: &FuzzyIdeal) -> FuzzyReport {
    let n = ts.carrier_size() as Elem;
    let mut violation = None;
    'add: for a in 0..n {
        for b in 0..n {
            let needed = mu.grade(a).min(mu.grade(b));
            if mu.grade(ts.add(a, b)) < needed {
                violation = Some(FuzzyViolation::Add { a, b });
                break 'add;
            }
        }
    }
    if violation.is_none() {
        'tern: for gamma in 0..ts.gamma_size() {
            for x in 0..n {
                for y in 0..n {
                    for a in 0..n {
                        if mu.grade(ts.tern(gamma, x, y, a)) < mu.grade(a) {
                            violation = Some(FuzzyViolation::Tern { gamma, x, y, a });
                            break 'tern;
                        }
                    }
                }
            }
        }
    }
    let mut levels: Vec<Grade> = mu
        .grades()
        .iter()
        .copied()
        .filter(|g| !g.is_zero())
        .collect();
    levels.sort();
    levels.dedup();
    levels.reverse();
    let cuts: Vec<LevelCut> = levels
        .into_iter()
        .map(|alpha| {
            let set = IdealSet::from_elems((0..n).filter(|&a| mu.grade(a) >= alpha));
            let violation = ideal_violation(ts, set);
            LevelCut {
                alpha: grade_to_string(&alpha),
                set,
                is_ideal: violation.is_none(),
                violation,
            }
        })
        .collect();
    FuzzyReport {
        is_fuzzy_ideal: violation.is_none(),
        violation,
        all_cuts_are_ideals: cuts.iter().all(|c| c.is_ideal),
        cuts,
    }
}

/// Inverse direction: grades-indexed descending chain of ideals →
/// membership function μ(a) = sup { α : a ∈ I_α }, then re-verified.
pub fn fuzzy_from_chain(
    ts: &TernaryGammaSemiring,
    chain: &[(Grade, IdealSet)],
) -> Result<(FuzzyIdeal, FuzzyReport)> {
    let one = Grade::from_integer(1);
    for (alpha, _) in chain {
        if *alpha > one || alpha.is_zero() {
            return Err(Error::GradeRange { element: 0, grade: grade_to_string(alpha) });
        }
    }
    for (a, sa) in chain {
        for (b, sb) in chain {
            if a > b && !sa.is_subset(*sb) {
                return Err(Error::NotAChain {
                    alpha: grade_to_string(a),
                    beta: grade_to_string(b),
                });
            }
        }
    }
    let n = ts.carrier_size() as Elem;
    let grades: Vec<Grade> = (0..n)
        .map(|a| {
            chain
                .iter()
                .filter(|(_, set)| set.contains(a))
                .map(|(alpha, _)| *alpha)
                .max()
                .unwrap_or_else(Grade::zero)
        })
        .collect();
    let mu = FuzzyIdeal::new(ts.carrier_size(), grades)?;
    let report = fuzzy_ideal_check(ts, &mu);
    Ok((mu, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn grade(s: &str) -> Grade {
        parse_grade(s).unwrap()
    }

    #[test]
    fn grade_parsing() {
        assert_eq!(grade("1/2"), Ratio::new(1, 2));
        assert_eq!(grade("0.25"), Ratio::new(1, 4));
        assert_eq!(grade("1"), Ratio::from_integer(1));
        assert!(parse_grade("1/0").is_err());
        assert!(parse_grade("x").is_err());
        assert!(FuzzyIdeal::new(1, vec![grade("3/2")]).is_err());
    }

    #[test]
    fn constant_one_is_a_fuzzy_ideal_with_full_cut() {
        let ts = bao();
        let mu = FuzzyIdeal::new(2, vec![grade("1"), grade("1")]).unwrap();
        let report = fuzzy_ideal_check(&ts, &mu);
        assert!(report.is_fuzzy_ideal);
        assert_eq!(report.cuts.len(), 1);
        assert_eq!(report.cuts[0].set, IdealSet::full(2));
        assert!(report.all_cuts_are_ideals);
    }

    #[test]
    fn zero_indicator_on_bao_is_a_fuzzy_ideal() {
        let ts = bao();
        let mu = FuzzyIdeal::new(2, vec![grade("1"), grade("0")]).unwrap();
        let report = fuzzy_ideal_check(&ts, &mu);
        assert!(report.is_fuzzy_ideal, "{:?}", report.violation);
        assert_eq!(report.cuts.len(), 1);
        assert_eq!(report.cuts[0].set, IdealSet::zero_only());
        assert!(report.cuts[0].is_ideal);
    }

    #[test]
    fn inverted_indicator_fails_with_witness() {
        // μ(0)=0, μ(1)=1: μ({x y 1}) ≥ 1 requires min(x,y,1) to have grade
        // 1 for every x, y; x = 0 breaks it.
        let ts = bao();
        let mu = FuzzyIdeal::new(2, vec![grade("0"), grade("1")]).unwrap();
        let report = fuzzy_ideal_check(&ts, &mu);
        assert!(!report.is_fuzzy_ideal);
        assert!(matches!(report.violation, Some(FuzzyViolation::Tern { .. })));
    }

    #[test]
    fn chain_roundtrip_reproduces_cuts() {
        let ts = bao();
        let chain = vec![
            (grade("1"), IdealSet::zero_only()),
            (grade("1/2"), IdealSet::full(2)),
        ];
        let (mu, report) = fuzzy_from_chain(&ts, &chain).unwrap();
        assert!(report.is_fuzzy_ideal);
        assert_eq!(mu.grade(0), grade("1"));
        assert_eq!(mu.grade(1), grade("1/2"));
        // cuts at the chain's own grades reproduce the chain
        assert_eq!(report.cuts.len(), 2);
        assert_eq!(report.cuts[0].set, IdealSet::zero_only());
        assert_eq!(report.cuts[1].set, IdealSet::full(2));
    }

    #[test]
    fn non_chain_input_is_rejected() {
        let ts = build_named(NamedKind::ZeroOp, 4, &NamedParams::default()).unwrap();
        let chain = vec![
            (grade("1"), IdealSet::from_elems([0, 1])),
            (grade("1/2"), IdealSet::from_elems([0, 2])),
        ];
        assert!(matches!(fuzzy_from_chain(&ts, &chain), Err(Error::NotAChain { .. })));
    }
}
