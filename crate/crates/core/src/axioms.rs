//! Exhaustive axiom verification with witness reporting.
//!
//! Five checks are available:
//!
//! * `T1` — (T, +) is a commutative monoid with identity 0;
//! * `T2` — distributivity of every ternary product in each argument;
//! * `T3` — 0 is absorbing in every argument;
//! * `T4` — ternary-compatible associativity across γ pairs;
//! * `C`  — invariance of `{a b c}_γ` under all argument permutations.
//!
//! The checked subset is a parameter ([`AxiomMode`]) because several of the
//! standard small examples in the literature satisfy only T1/T2/T4/C; every
//! report and catalog records the mode it was produced under. T1 is always
//! enabled — without a commutative additive monoid nothing downstream is
//! meaningful.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::structure::{Elem, TernaryGammaSemiring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AxiomId {
    T1,
    T2,
    T3,
    T4,
    C,
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomId::T1 => "T1",
            AxiomId::T2 => "T2",
            AxiomId::T3 => "T3",
            AxiomId::T4 => "T4",
            AxiomId::C => "C",
        };
        f.write_str(s)
    }
}

/// Which axioms a check (or an enumeration sweep) enforces. T1 is implicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AxiomMode {
    t2: bool,
    t3: bool,
    t4: bool,
    c: bool,
}

impl AxiomMode {
    /// All five axioms.
    pub fn strict() -> Self {
        Self { t2: true, t3: true, t4: true, c: true }
    }

    /// Everything except the absorbing-zero axiom T3.
    pub fn relaxed() -> Self {
        Self { t2: true, t3: false, t4: true, c: true }
    }

    pub fn custom(t2: bool, t3: bool, t4: bool, c: bool) -> Self {
        Self { t2, t3, t4, c }
    }

    pub fn enabled(&self, id: AxiomId) -> bool {
        match id {
            AxiomId::T1 => true,
            AxiomId::T2 => self.t2,
            AxiomId::T3 => self.t3,
            AxiomId::T4 => self.t4,
            AxiomId::C => self.c,
        }
    }

    pub fn enabled_axioms(&self) -> Vec<AxiomId> {
        [AxiomId::T1, AxiomId::T2, AxiomId::T3, AxiomId::T4, AxiomId::C]
            .into_iter()
            .filter(|&id| self.enabled(id))
            .collect()
    }

    /// Stable identifier embedded in reports, catalogs, and manifests.
    pub fn name(&self) -> String {
        if *self == Self::strict() {
            "strict".into()
        } else if *self == Self::relaxed() {
            "relaxed".into()
        } else {
            self.enabled_axioms()
                .iter()
                .map(|id| id.to_string())
                .collect::<Vec<_>>()
                .join("+")
        }
    }

    /// Parses `strict`, `relaxed`, or a `+`/`,`-separated axiom list.
    /// T1 is always enabled regardless of the list.
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "strict" => return Ok(Self::strict()),
            "relaxed" => return Ok(Self::relaxed()),
            _ => {}
        }
        let mut mode = Self { t2: false, t3: false, t4: false, c: false };
        for part in s.split(['+', ',']) {
            match part.trim().to_ascii_uppercase().as_str() {
                "T1" | "" => {}
                "T2" => mode.t2 = true,
                "T3" => mode.t3 = true,
                "T4" => mode.t4 = true,
                "C" => mode.c = true,
                other => {
                    return Err(Error::Parse {
                        what: "axiom mode".into(),
                        message: format!("unknown axiom `{other}`"),
                    })
                }
            }
        }
        Ok(mode)
    }
}

impl fmt::Display for AxiomMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for AxiomMode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for AxiomMode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        AxiomMode::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A single counterexample tuple. Every variant carries enough data to
/// re-evaluate both sides from the tables; see [`AxiomWitness::recheck`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AxiomWitness {
    AddAssociativity { a: Elem, b: Elem, c: Elem, lhs: Elem, rhs: Elem },
    AddCommutativity { a: Elem, b: Elem, lhs: Elem, rhs: Elem },
    AddIdentity { a: Elem, lhs: Elem, rhs: Elem },
    /// `slot` is the argument position (0-based) holding the sum a + b;
    /// `c`, `d` fill the remaining positions in order.
    Distributivity { gamma: usize, slot: u8, a: Elem, b: Elem, c: Elem, d: Elem, lhs: Elem, rhs: Elem },
    /// `slot` is the position of the zero; `a`, `b` fill the rest.
    Absorption { gamma: usize, slot: u8, a: Elem, b: Elem, lhs: Elem, rhs: Elem },
    Associativity { alpha: usize, beta: usize, a: Elem, b: Elem, c: Elem, d: Elem, e: Elem, lhs: Elem, rhs: Elem },
    /// `perm` is the permuted argument order compared against (a, b, c).
    Symmetry { gamma: usize, a: Elem, b: Elem, c: Elem, perm: [Elem; 3], lhs: Elem, rhs: Elem },
}

fn tern_slot(ts: &TernaryGammaSemiring, gi: usize, slot: u8, x: Elem, c: Elem, d: Elem) -> Elem {
    match slot {
        0 => ts.tern(gi, x, c, d),
        1 => ts.tern(gi, c, x, d),
        _ => ts.tern(gi, c, d, x),
    }
}

impl AxiomWitness {
    /// Re-derives (lhs, rhs) from the tables. A stored witness is valid iff
    /// this returns exactly the recorded pair and the pair is unequal.
    pub fn recheck(&self, ts: &TernaryGammaSemiring) -> (Elem, Elem) {
        match *self {
            AxiomWitness::AddAssociativity { a, b, c, .. } => {
                (ts.add(ts.add(a, b), c), ts.add(a, ts.add(b, c)))
            }
            AxiomWitness::AddCommutativity { a, b, .. } => (ts.add(a, b), ts.add(b, a)),
            AxiomWitness::AddIdentity { a, .. } => (ts.add(0, a), a),
            AxiomWitness::Distributivity { gamma, slot, a, b, c, d, .. } => {
                let lhs = tern_slot(ts, gamma, slot, ts.add(a, b), c, d);
                let rhs = ts.add(
                    tern_slot(ts, gamma, slot, a, c, d),
                    tern_slot(ts, gamma, slot, b, c, d),
                );
                (lhs, rhs)
            }
            AxiomWitness::Absorption { gamma, slot, a, b, .. } => {
                (tern_slot(ts, gamma, slot, 0, a, b), 0)
            }
            AxiomWitness::Associativity { alpha, beta, a, b, c, d, e, .. } => {
                let lhs = ts.tern(beta, ts.tern(alpha, a, b, c), d, e);
                let rhs = ts.tern(alpha, a, b, ts.tern(beta, c, d, e));
                (lhs, rhs)
            }
            AxiomWitness::Symmetry { gamma, a, b, c, perm, .. } => {
                (ts.tern(gamma, a, b, c), ts.tern(gamma, perm[0], perm[1], perm[2]))
            }
        }
    }

    pub fn recorded(&self) -> (Elem, Elem) {
        match *self {
            AxiomWitness::AddAssociativity { lhs, rhs, .. }
            | AxiomWitness::AddCommutativity { lhs, rhs, .. }
            | AxiomWitness::AddIdentity { lhs, rhs, .. }
            | AxiomWitness::Distributivity { lhs, rhs, .. }
            | AxiomWitness::Absorption { lhs, rhs, .. }
            | AxiomWitness::Associativity { lhs, rhs, .. }
            | AxiomWitness::Symmetry { lhs, rhs, .. } => (lhs, rhs),
        }
    }
}

/// Outcome for one axiom: total violation count plus the first few
/// counterexamples in scan order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: AxiomId,
    pub violations: u64,
    pub witnesses: Vec<AxiomWitness>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AxiomReport {
    pub mode: AxiomMode,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, id: AxiomId) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == id)
    }
}

pub const DEFAULT_MAX_WITNESSES: usize = 10;

struct Collector {
    violations: u64,
    witnesses: Vec<AxiomWitness>,
    cap: usize,
}

impl Collector {
    fn new(cap: usize) -> Self {
        Self { violations: 0, witnesses: Vec::new(), cap }
    }

    fn hit(&mut self, w: impl FnOnce() -> AxiomWitness) {
        self.violations += 1;
        if self.witnesses.len() < self.cap {
            self.witnesses.push(w());
        }
    }

    fn into_check(self, axiom: AxiomId) -> AxiomCheck {
        AxiomCheck { axiom, violations: self.violations, witnesses: self.witnesses }
    }
}

const PERMS: [[usize; 3]; 5] = [
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn check_t1(ts: &TernaryGammaSemiring, cap: usize) -> AxiomCheck {
    let n = ts.carrier_size() as Elem;
    let mut col = Collector::new(cap);
    for a in 0..n {
        let lhs = ts.add(0, a);
        if lhs != a {
            col.hit(|| AxiomWitness::AddIdentity { a, lhs, rhs: a });
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let (lhs, rhs) = (ts.add(a, b), ts.add(b, a));
            if lhs != rhs {
                col.hit(|| AxiomWitness::AddCommutativity { a, b, lhs, rhs });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = ts.add(ts.add(a, b), c);
                let rhs = ts.add(a, ts.add(b, c));
                if lhs != rhs {
                    col.hit(|| AxiomWitness::AddAssociativity { a, b, c, lhs, rhs });
                }
            }
        }
    }
    col.into_check(AxiomId::T1)
}

fn check_t2(ts: &TernaryGammaSemiring, cap: usize) -> AxiomCheck {
    let n = ts.carrier_size() as Elem;
    let mut col = Collector::new(cap);
    for slot in 0..3u8 {
        for gamma in 0..ts.gamma_size() {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            let lhs = tern_slot(ts, gamma, slot, ts.add(a, b), c, d);
                            let rhs = ts.add(
                                tern_slot(ts, gamma, slot, a, c, d),
                                tern_slot(ts, gamma, slot, b, c, d),
                            );
                            if lhs != rhs {
                                col.hit(|| AxiomWitness::Distributivity {
                                    gamma, slot, a, b, c, d, lhs, rhs,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    col.into_check(AxiomId::T2)
}

fn check_t3(ts: &TernaryGammaSemiring, cap: usize) -> AxiomCheck {
    let n = ts.carrier_size() as Elem;
    let mut col = Collector::new(cap);
    for gamma in 0..ts.gamma_size() {
        for slot in 0..3u8 {
            for a in 0..n {
                for b in 0..n {
                    let lhs = tern_slot(ts, gamma, slot, 0, a, b);
                    if lhs != 0 {
                        col.hit(|| AxiomWitness::Absorption { gamma, slot, a, b, lhs, rhs: 0 });
                    }
                }
            }
        }
    }
    col.into_check(AxiomId::T3)
}

fn check_t4(ts: &TernaryGammaSemiring, cap: usize) -> AxiomCheck {
    let n = ts.carrier_size() as Elem;
    let mut col = Collector::new(cap);
    for alpha in 0..ts.gamma_size() {
        for beta in 0..ts.gamma_size() {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            for e in 0..n {
                                let lhs = ts.tern(beta, ts.tern(alpha, a, b, c), d, e);
                                let rhs = ts.tern(alpha, a, b, ts.tern(beta, c, d, e));
                                if lhs != rhs {
                                    col.hit(|| AxiomWitness::Associativity {
                                        alpha, beta, a, b, c, d, e, lhs, rhs,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    col.into_check(AxiomId::T4)
}

fn check_c(ts: &TernaryGammaSemiring, cap: usize) -> AxiomCheck {
    let n = ts.carrier_size() as Elem;
    let mut col = Collector::new(cap);
    for gamma in 0..ts.gamma_size() {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let base = ts.tern(gamma, a, b, c);
                    let args = [a, b, c];
                    for p in PERMS {
                        let perm = [args[p[0]], args[p[1]], args[p[2]]];
                        let v = ts.tern(gamma, perm[0], perm[1], perm[2]);
                        if v != base {
                            col.hit(|| AxiomWitness::Symmetry {
                                gamma, a, b, c, perm, lhs: base, rhs: v,
                            });
                        }
                    }
                }
            }
        }
    }
    col.into_check(AxiomId::C)
}

/// Exhaustively verifies the enabled axioms, collecting up to
/// `max_witnesses` counterexamples per axiom plus total violation counts.
/// Scan order is fixed, so witnesses are deterministic. A failing axiom
/// always carries at least one witness, so the cap is clamped to 1.
pub fn check_axioms_with(
    ts: &TernaryGammaSemiring,
    mode: AxiomMode,
    max_witnesses: usize,
) -> AxiomReport {
    let max_witnesses = max_witnesses.max(1);
    let mut checks = vec![check_t1(ts, max_witnesses)];
    if mode.enabled(AxiomId::T2) {
        checks.push(check_t2(ts, max_witnesses));
    }
    if mode.enabled(AxiomId::T3) {
        checks.push(check_t3(ts, max_witnesses));
    }
    if mode.enabled(AxiomId::T4) {
        checks.push(check_t4(ts, max_witnesses));
    }
    if mode.enabled(AxiomId::C) {
        checks.push(check_c(ts, max_witnesses));
    }
    AxiomReport { mode, checks }
}

pub fn check_axioms(ts: &TernaryGammaSemiring, mode: AxiomMode) -> AxiomReport {
    check_axioms_with(ts, mode, DEFAULT_MAX_WITNESSES)
}

/// Early-exit variant used in search inner loops.
pub fn axioms_hold(ts: &TernaryGammaSemiring, mode: AxiomMode) -> bool {
    if !check_t1(ts, 1).passed() {
        return false;
    }
    if mode.enabled(AxiomId::T3) && !check_t3(ts, 1).passed() {
        return false;
    }
    if mode.enabled(AxiomId::C) && !check_c(ts, 1).passed() {
        return false;
    }
    if mode.enabled(AxiomId::T2) && !check_t2(ts, 1).passed() {
        return false;
    }
    if mode.enabled(AxiomId::T4) && !check_t4(ts, 1).passed() {
        return false;
    }
    true
}
