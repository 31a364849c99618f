//! Γ-congruences: compatible partitions of the carrier, their lattice, and
//! the audited ideal–congruence correspondence.

use serde::{Deserialize, Serialize};

use crate::ideals::{all_ideals, lattice_laws, IdealSet, LatticeReport};
use crate::structure::{Elem, TernaryGammaSemiring};

/// A partition of the carrier, stored as the minimal representative of each
/// element's block. The diagonal is `repr[a] = a`; the full relation maps
/// everything to 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Congruence {
    repr: Vec<Elem>,
}

impl Congruence {
    /// Normalizes an arbitrary block-representative array: each element's
    /// representative becomes the least element of its block.
    pub fn from_reprs(raw: &[Elem]) -> Self {
        let n = raw.len();
        let mut repr = vec![0 as Elem; n];
        for (a, slot) in repr.iter_mut().enumerate() {
            let mut least = a as Elem;
            for b in 0..n {
                if raw[b] == raw[a] && (b as Elem) < least {
                    least = b as Elem;
                }
            }
            *slot = least;
        }
        Self { repr }
    }

    pub fn diagonal(n: usize) -> Self {
        Self { repr: (0..n as Elem).collect() }
    }

    pub fn full(n: usize) -> Self {
        Self { repr: vec![0; n] }
    }

    pub fn size(&self) -> usize {
        self.repr.len()
    }

    pub fn reprs(&self) -> &[Elem] {
        &self.repr
    }

    pub fn same(&self, a: Elem, b: Elem) -> bool {
        self.repr[a as usize] == self.repr[b as usize]
    }

    /// Blocks ordered by minimal representative; the block of 0 is first.
    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let n = self.repr.len();
        let mut reps: Vec<Elem> = self.repr.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.iter()
            .map(|&r| (0..n as Elem).filter(|&a| self.repr[a as usize] == r).collect())
            .collect()
    }

    pub fn block_count(&self) -> usize {
        let mut reps: Vec<Elem> = self.repr.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.len()
    }

    /// Index of `a`'s block in the [`Self::blocks`] ordering.
    pub fn block_index(&self, a: Elem) -> usize {
        let mut reps: Vec<Elem> = self.repr.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.binary_search(&self.repr[a as usize]).unwrap()
    }

    /// True when every block of `self` is inside a block of `other`.
    pub fn refines(&self, other: &Congruence) -> bool {
        let n = self.repr.len();
        (0..n as Elem).all(|a| {
            (0..n as Elem).all(|b| !self.same(a, b) || other.same(a, b))
        })
    }

    /// Common refinement (meet in the partition lattice).
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.repr.len();
        let mut raw = vec![0 as Elem; n];
        for (a, slot) in raw.iter_mut().enumerate() {
            let key = (self.repr[a], other.repr[a]);
            *slot = (0..n)
                .find(|&b| (self.repr[b], other.repr[b]) == key)
                .unwrap() as Elem;
        }
        Congruence::from_reprs(&raw)
    }

    /// Partition join: transitive closure of the union of the relations.
    pub fn partition_join(&self, other: &Congruence) -> Congruence {
        let n = self.repr.len();
        let mut uf = UnionFind::new(n);
        for a in 0..n {
            uf.union(a, self.repr[a] as usize);
            uf.union(a, other.repr[a] as usize);
        }
        uf.into_congruence()
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so reprs come out minimal
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn into_congruence(mut self) -> Congruence {
        let n = self.parent.len();
        let raw: Vec<Elem> = (0..n).map(|a| self.find(a) as Elem).collect();
        Congruence::from_reprs(&raw)
    }
}

/// Why a partition fails compatibility with the operations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CongruenceViolation {
    Add { a: Elem, b: Elem, c: Elem, lhs: Elem, rhs: Elem },
    Tern { gamma: usize, slot: u8, a: Elem, b: Elem, c: Elem, d: Elem, lhs: Elem, rhs: Elem },
}

/// Checks compatibility of an equivalence relation with + and every ternary
/// operation. One-position substitution suffices: full compatibility follows
/// by transitivity.
pub fn congruence_violation(
    ts: &TernaryGammaSemiring,
    part: &Congruence,
) -> Option<CongruenceViolation> {
    let n = ts.carrier_size() as Elem;
    for a in 0..n {
        for b in 0..n {
            if !part.same(a, b) {
                continue;
            }
            for c in 0..n {
                let (lhs, rhs) = (ts.add(a, c), ts.add(b, c));
                if !part.same(lhs, rhs) {
                    return Some(CongruenceViolation::Add { a, b, c, lhs, rhs });
                }
            }
            for gamma in 0..ts.gamma_size() {
                for c in 0..n {
                    for d in 0..n {
                        let probes = [
                            (0u8, ts.tern(gamma, a, c, d), ts.tern(gamma, b, c, d)),
                            (1u8, ts.tern(gamma, c, a, d), ts.tern(gamma, c, b, d)),
                            (2u8, ts.tern(gamma, c, d, a), ts.tern(gamma, c, d, b)),
                        ];
                        for (slot, lhs, rhs) in probes {
                            if !part.same(lhs, rhs) {
                                return Some(CongruenceViolation::Tern {
                                    gamma, slot, a, b, c, d, lhs, rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn is_congruence(ts: &TernaryGammaSemiring, part: &Congruence) -> bool {
    congruence_violation(ts, part).is_none()
}

/// Least congruence above a partition: repeatedly merge the offending image
/// blocks until compatibility holds.
pub fn congruence_closure(ts: &TernaryGammaSemiring, start: &Congruence) -> Congruence {
    let n = ts.carrier_size();
    let mut current = start.clone();
    loop {
        match congruence_violation(ts, &current) {
            None => return current,
            Some(v) => {
                let (x, y) = match v {
                    CongruenceViolation::Add { lhs, rhs, .. }
                    | CongruenceViolation::Tern { lhs, rhs, .. } => (lhs, rhs),
                };
                let mut uf = UnionFind::new(n);
                for a in 0..n {
                    uf.union(a, current.reprs()[a] as usize);
                }
                uf.union(x as usize, y as usize);
                current = uf.into_congruence();
            }
        }
    }
}

/// Iterator over all partitions of {0..n-1} as restricted growth strings.
fn all_partitions(n: usize) -> Vec<Congruence> {
    let mut out = Vec::new();
    let mut rgs = vec![0u8; n];
    loop {
        let raw: Vec<Elem> = rgs.iter().map(|&g| g as Elem).collect();
        // RGS labels blocks by first occurrence, which is exactly the
        // minimal-representative form after normalization.
        out.push(Congruence::from_reprs(&raw));
        // advance the restricted growth string
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for g in rgs[i + 1..].iter_mut() {
                    *g = 0;
                }
                break;
            }
        }
    }
}

/// Enumerates all Γ-congruences (over every partition of the carrier) and
/// assembles their lattice. Join is the congruence closure of the partition
/// join; meet is the common refinement.
pub fn all_congruences(ts: &TernaryGammaSemiring) -> LatticeReport<Congruence> {
    let mut congruences: Vec<Congruence> = all_partitions(ts.carrier_size())
        .into_iter()
        .filter(|p| is_congruence(ts, p))
        .collect();
    congruences.sort();
    congruences.dedup();
    let k = congruences.len();
    let index_of = |c: &Congruence| {
        congruences.binary_search(c).expect("closure left the congruence lattice")
    };
    let mut join = vec![vec![0usize; k]; k];
    let mut meet = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            let joined = congruence_closure(ts, &congruences[i].partition_join(&congruences[j]));
            join[i][j] = index_of(&joined);
            meet[i][j] = index_of(&congruences[i].meet(&congruences[j]));
        }
    }
    lattice_laws(congruences, join, meet)
}

/// Audit of the claimed order-reversing bijection I ↦ ρ_I where
/// `a ρ_I b` iff `{a b c}_γ ∈ I` for all c and γ. Nothing is assumed: the
/// relation's equivalence-ness, congruence-ness, injectivity,
/// order-reversal, and surjectivity are all verified per structure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub per_ideal: Vec<IdealCorrespondence>,
    pub injective: bool,
    /// Two ideal indices mapped to the same relation.
    pub injectivity_witness: Option<(usize, usize)>,
    pub order_reversing: bool,
    /// Ideal indices (i, j) with I_i ⊆ I_j but ρ_{I_i} ⊉ ρ_{I_j}.
    pub order_witness: Option<(usize, usize)>,
    pub surjective: bool,
    /// Congruences that are not ρ_I for any ideal I.
    pub missing_congruences: Vec<Congruence>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdealCorrespondence {
    pub ideal: IdealSet,
    /// The raw relation as pairs, in lexicographic order.
    pub pairs: Vec<(Elem, Elem)>,
    pub reflexive: bool,
    pub reflexivity_witness: Option<Elem>,
    pub symmetric: bool,
    pub transitive: bool,
    /// Set when the relation is an equivalence compatible with the
    /// operations; None otherwise.
    pub congruence: Option<Congruence>,
}

fn rho_pairs(ts: &TernaryGammaSemiring, ideal: IdealSet) -> Vec<(Elem, Elem)> {
    let n = ts.carrier_size() as Elem;
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let related = (0..ts.gamma_size()).all(|gamma| {
                (0..n).all(|c| ideal.contains(ts.tern(gamma, a, b, c)))
            });
            if related {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

pub fn correspondence_report(ts: &TernaryGammaSemiring) -> CorrespondenceReport {
    let n = ts.carrier_size() as Elem;
    let ideal_lattice = all_ideals(ts);
    let congruence_lattice = all_congruences(ts);

    let mut per_ideal = Vec::new();
    for &ideal in &ideal_lattice.elements {
        let pairs = rho_pairs(ts, ideal);
        let related = |a: Elem, b: Elem| pairs.binary_search(&(a, b)).is_ok();
        let reflexivity_witness = (0..n).find(|&a| !related(a, a));
        let reflexive = reflexivity_witness.is_none();
        let symmetric = pairs.iter().all(|&(a, b)| related(b, a));
        let transitive = pairs
            .iter()
            .all(|&(a, b)| (0..n).all(|c| !related(b, c) || related(a, c)));
        let congruence = if reflexive && symmetric && transitive {
            let mut uf = UnionFind::new(n as usize);
            for &(a, b) in &pairs {
                uf.union(a as usize, b as usize);
            }
            let part = uf.into_congruence();
            is_congruence(ts, &part).then_some(part)
        } else {
            None
        };
        per_ideal.push(IdealCorrespondence {
            ideal,
            pairs,
            reflexive,
            reflexivity_witness,
            symmetric,
            transitive,
            congruence,
        });
    }

    let mut injective = true;
    let mut injectivity_witness = None;
    'inj: for i in 0..per_ideal.len() {
        for j in i + 1..per_ideal.len() {
            if per_ideal[i].pairs == per_ideal[j].pairs {
                injective = false;
                injectivity_witness = Some((i, j));
                break 'inj;
            }
        }
    }

    let mut order_reversing = true;
    let mut order_witness = None;
    'ord: for i in 0..per_ideal.len() {
        for j in 0..per_ideal.len() {
            if !per_ideal[i].ideal.is_subset(per_ideal[j].ideal) {
                continue;
            }
            let superset = per_ideal[j]
                .pairs
                .iter()
                .all(|p| per_ideal[i].pairs.binary_search(p).is_ok());
            if !superset {
                order_reversing = false;
                order_witness = Some((i, j));
                break 'ord;
            }
        }
    }

    let realized: Vec<&Congruence> =
        per_ideal.iter().filter_map(|ic| ic.congruence.as_ref()).collect();
    let missing_congruences: Vec<Congruence> = congruence_lattice
        .elements
        .iter()
        .filter(|c| !realized.contains(c))
        .cloned()
        .collect();
    let surjective = missing_congruences.is_empty();

    CorrespondenceReport {
        per_ideal,
        injective,
        injectivity_witness,
        order_reversing,
        order_witness,
        surjective,
        missing_congruences,
    }
}
