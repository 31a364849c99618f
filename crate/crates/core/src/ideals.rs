//! Γ-ideals: membership checking, generation, and the full ideal lattice
//! with audited modularity/distributivity.

use serde::{Deserialize, Serialize};

use crate::structure::{Elem, TernaryGammaSemiring};

/// Subset of the carrier as a bitmask. Bit `e` set means element `e` is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IdealSet {
    bits: u64,
}

impl IdealSet {
    pub fn empty() -> Self {
        Self { bits: 0 }
    }

    pub fn zero_only() -> Self {
        Self { bits: 1 }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        Self { bits: if n >= 64 { u64::MAX } else { (1u64 << n) - 1 } }
    }

    pub fn from_bits(bits: u64) -> Self {
        Self { bits }
    }

    pub fn from_elems<I: IntoIterator<Item = Elem>>(elems: I) -> Self {
        let mut bits = 0u64;
        for e in elems {
            bits |= 1 << e;
        }
        Self { bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.bits >> e & 1 == 1
    }

    pub fn insert(&mut self, e: Elem) {
        self.bits |= 1 << e;
    }

    pub fn union(&self, other: Self) -> Self {
        Self { bits: self.bits | other.bits }
    }

    pub fn intersect(&self, other: Self) -> Self {
        Self { bits: self.bits & other.bits }
    }

    pub fn is_subset(&self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..64u8).filter(|&e| self.contains(e))
    }

    pub fn hex(&self) -> String {
        format!("{:#x}", self.bits)
    }
}

impl Serialize for IdealSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

impl<'de> Deserialize<'de> for IdealSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let body = s.strip_prefix("0x").unwrap_or(&s);
        u64::from_str_radix(body, 16)
            .map(IdealSet::from_bits)
            .map_err(serde::de::Error::custom)
    }
}

/// Why a subset fails to be a Γ-ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IdealViolation {
    MissingZero,
    NotAddClosed { a: Elem, b: Elem, sum: Elem },
    NotAbsorbing { slot: u8, member: Elem, t: Elem, u: Elem, gamma: usize, product: Elem },
}

/// Checks the Γ-ideal conditions: contains 0, closed under +, and absorbs
/// ternary products with a member in *every* argument position. Absorption
/// is checked per position; symmetry of the products is not assumed.
pub fn ideal_violation(ts: &TernaryGammaSemiring, set: IdealSet) -> Option<IdealViolation> {
    let n = ts.carrier_size() as Elem;
    if !set.contains(0) {
        return Some(IdealViolation::MissingZero);
    }
    for a in 0..n {
        if !set.contains(a) {
            continue;
        }
        for b in 0..n {
            if !set.contains(b) {
                continue;
            }
            let sum = ts.add(a, b);
            if !set.contains(sum) {
                return Some(IdealViolation::NotAddClosed { a, b, sum });
            }
        }
    }
    for member in 0..n {
        if !set.contains(member) {
            continue;
        }
        for gamma in 0..ts.gamma_size() {
            for t in 0..n {
                for u in 0..n {
                    let products = [
                        (0u8, ts.tern(gamma, member, t, u)),
                        (1u8, ts.tern(gamma, t, member, u)),
                        (2u8, ts.tern(gamma, t, u, member)),
                    ];
                    for (slot, product) in products {
                        if !set.contains(product) {
                            return Some(IdealViolation::NotAbsorbing {
                                slot, member, t, u, gamma, product,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_ideal(ts: &TernaryGammaSemiring, set: IdealSet) -> bool {
    ideal_violation(ts, set).is_none()
}

/// Least Γ-ideal containing `seed`: closure under 0-adjunction, addition,
/// and ternary absorption in every position.
pub fn ideal_generate(ts: &TernaryGammaSemiring, seed: IdealSet) -> IdealSet {
    let n = ts.carrier_size() as Elem;
    let mut set = seed;
    set.insert(0);
    loop {
        let before = set;
        for a in 0..n {
            if !set.contains(a) {
                continue;
            }
            for b in 0..n {
                if set.contains(b) {
                    set.insert(ts.add(a, b));
                }
            }
            for gamma in 0..ts.gamma_size() {
                for t in 0..n {
                    for u in 0..n {
                        set.insert(ts.tern(gamma, a, t, u));
                        set.insert(ts.tern(gamma, t, a, u));
                        set.insert(ts.tern(gamma, t, u, a));
                    }
                }
            }
        }
        if set == before {
            return set;
        }
    }
}

/// A finite lattice given by its element list and join/meet index tables,
/// with brute-force modularity and distributivity verdicts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeReport<E> {
    pub elements: Vec<E>,
    /// `join[i][j]` is the index of `elements[i] ∨ elements[j]`.
    pub join: Vec<Vec<usize>>,
    pub meet: Vec<Vec<usize>>,
    pub is_modular: bool,
    /// Indices (i, j, k) with i ≤ k but i ∨ (j ∧ k) ≠ (i ∨ j) ∧ k.
    pub modularity_witness: Option<[usize; 3]>,
    pub is_distributive: bool,
    /// Indices (i, j, k) with i ∧ (j ∨ k) ≠ (i ∧ j) ∨ (i ∧ k).
    pub distributivity_witness: Option<[usize; 3]>,
}

impl<E> LatticeReport<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.meet[i][j] == i
    }

    /// Covering pairs (lower, upper) of the Hasse diagram.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let k = self.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i == j || !self.leq(i, j) {
                    continue;
                }
                let between = (0..k)
                    .any(|x| x != i && x != j && self.leq(i, x) && self.leq(x, j));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn bottom(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j))).unwrap()
    }

    pub fn top(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i))).unwrap()
    }
}

pub(crate) fn lattice_laws<E>(
    elements: Vec<E>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
) -> LatticeReport<E> {
    let k = elements.len();
    let mut is_modular = true;
    let mut modularity_witness = None;
    let mut is_distributive = true;
    let mut distributivity_witness = None;
    'outer_mod: for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if meet[i][l] != i {
                    continue; // need i ≤ l
                }
                if join[i][meet[j][l]] != meet[join[i][j]][l] {
                    is_modular = false;
                    modularity_witness = Some([i, j, l]);
                    break 'outer_mod;
                }
            }
        }
    }
    'outer_dist: for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                if meet[i][join[j][l]] != join[meet[i][j]][meet[i][l]] {
                    is_distributive = false;
                    distributivity_witness = Some([i, j, l]);
                    break 'outer_dist;
                }
            }
        }
    }
    LatticeReport {
        elements,
        join,
        meet,
        is_modular,
        modularity_witness,
        is_distributive,
        distributivity_witness,
    }
}

/// Enumerates every Γ-ideal (exhaustively over the subsets that contain 0)
/// and assembles the lattice with join = generated union, meet =
/// intersection. Modularity and distributivity are tested, not assumed.
pub fn all_ideals(ts: &TernaryGammaSemiring) -> LatticeReport<IdealSet> {
    let n = ts.carrier_size();
    let mut ideals = Vec::new();
    for rest in 0..(1u64 << (n - 1)) {
        let set = IdealSet::from_bits(rest << 1 | 1);
        if is_ideal(ts, set) {
            ideals.push(set);
        }
    }
    ideals.sort();
    let k = ideals.len();
    let index_of = |s: IdealSet| ideals.binary_search(&s).expect("closure left the lattice");
    let mut join = vec![vec![0usize; k]; k];
    let mut meet = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            join[i][j] = index_of(ideal_generate(ts, ideals[i].union(ideals[j])));
            meet[i][j] = index_of(ideals[i].intersect(ideals[j]));
        }
    }
    lattice_laws(ideals, join, meet)
}

/// Shape classification used by the lattice-distribution report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LatticeShape {
    Chain,
    Boolean22,
    DiamondM3,
    ModularNonDistributive,
    Other,
}

impl LatticeShape {
    pub fn label(&self) -> &'static str {
        match self {
            LatticeShape::Chain => "chain",
            LatticeShape::Boolean22 => "boolean_2x2",
            LatticeShape::DiamondM3 => "diamond_m3",
            LatticeShape::ModularNonDistributive => "modular_non_distributive",
            LatticeShape::Other => "other",
        }
    }
}

pub fn lattice_shape<E>(report: &LatticeReport<E>) -> LatticeShape {
    let k = report.len();
    let chain = (0..k).all(|i| (0..k).all(|j| report.leq(i, j) || report.leq(j, i)));
    if chain {
        return LatticeShape::Chain;
    }
    if k == 4 {
        // A four-element non-chain lattice is the 2×2 Boolean lattice.
        return LatticeShape::Boolean22;
    }
    if k == 5 {
        let bottom = report.bottom();
        let top = report.top();
        let mids: Vec<usize> = (0..k).filter(|&i| i != bottom && i != top).collect();
        let pairwise_incomparable = mids
            .iter()
            .all(|&i| mids.iter().all(|&j| i == j || (!report.leq(i, j) && !report.leq(j, i))));
        if pairwise_incomparable {
            return LatticeShape::DiamondM3;
        }
    }
    if report.is_modular && !report.is_distributive {
        return LatticeShape::ModularNonDistributive;
    }
    LatticeShape::Other
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{build_named, AddKind, NamedKind, NamedParams};

    fn bao() -> TernaryGammaSemiring {
        build_named(NamedKind::BooleanAndOr, 2, &NamedParams::default()).unwrap()
    }

    fn z0(n: usize) -> TernaryGammaSemiring {
        build_named(NamedKind::ZeroOp, n, &NamedParams::default()).unwrap()
    }

    #[test]
    fn generate_from_empty_is_zero() {
        assert_eq!(ideal_generate(&bao(), IdealSet::empty()), IdealSet::zero_only());
    }

    #[test]
    fn generate_full_is_full() {
        assert_eq!(ideal_generate(&bao(), IdealSet::full(2)), IdealSet::full(2));
    }

    #[test]
    fn generate_on_modular_zero_op_closes_under_addition() {
        // 1 generates {0,1,2}: 1+1=2 joins, ternary products only add 0.
        let gen = ideal_generate(&z0(3), IdealSet::from_elems([1]));
        assert_eq!(gen, IdealSet::full(3));
    }

    #[test]
    fn bao_ideal_lattice_is_a_two_chain() {
        let report = all_ideals(&bao());
        assert_eq!(report.elements, vec![IdealSet::zero_only(), IdealSet::full(2)]);
        assert!(report.is_modular);
        assert!(report.is_distributive);
        assert_eq!(lattice_shape(&report), LatticeShape::Chain);
    }

    #[test]
    fn one_element_structure_has_single_ideal() {
        let one = z0(1);
        let report = all_ideals(&one);
        assert_eq!(report.len(), 1);
        assert!(report.is_modular && report.is_distributive);
    }

    #[test]
    fn modular3_zero_is_not_an_ideal() {
        // The order-3 modular structure is sometimes credited with the
        // lattice {0} ⊂ T, but {0} does not absorb: {t,u,0} = t+u. The
        // computed lattice is T alone, and {0} fails with a witness.
        let ts = build_named(NamedKind::Modular, 3, &NamedParams::default()).unwrap();
        let report = all_ideals(&ts);
        assert_eq!(report.elements, vec![IdealSet::full(3)]);
        assert_eq!(lattice_shape(&report), LatticeShape::Chain);
        assert!(matches!(
            ideal_violation(&ts, IdealSet::zero_only()),
            Some(IdealViolation::NotAbsorbing { .. })
        ));
    }

    #[test]
    fn non_ideals_are_rejected_with_witnesses() {
        let ts = z0(3);
        assert_eq!(
            ideal_violation(&ts, IdealSet::from_elems([1])),
            Some(IdealViolation::MissingZero)
        );
        // {0,1} is not add-closed in mod-3 addition: 1+1=2.
        assert_eq!(
            ideal_violation(&ts, IdealSet::from_elems([0, 1])),
            Some(IdealViolation::NotAddClosed { a: 1, b: 1, sum: 2 })
        );
    }

    #[test]
    fn boolean_or_zero_op_has_three_chain() {
        let ts = build_named(
            NamedKind::ZeroOp,
            2,
            &NamedParams { add: Some(AddKind::Max), gamma_size: None },
        )
        .unwrap();
        // zero op absorbs everything, so any +-closed subset with 0 works:
        // {0} and {0,1}.
        let report = all_ideals(&ts);
        assert_eq!(report.len(), 2);
    }
}
