//! Explicit-table representation of finite commutative ternary Γ-semirings.
//!
//! A structure is a carrier `{0, .., n-1}` with an additive table and, for
//! each γ ∈ Γ, one n×n×n tensor holding the ternary products `{a b c}_γ`.
//! Element 0 is always the additive identity; constructors and the file
//! loader enforce that normalization. Nothing else is assumed: axiom
//! checking is a separate, explicit step (see [`crate::axioms`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Carrier element. Carriers stay tiny (n ≤ 6), so a byte is plenty.
pub type Elem = u8;

/// A finite commutative ternary Γ-semiring candidate, stored as raw tables.
///
/// `add` is row-major `a·n + b`; each tensor in `ops` is row-major
/// `a·n² + b·n + c`, parallel to `gamma`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryGammaSemiring {
    n: usize,
    gamma: Vec<String>,
    add: Vec<Elem>,
    ops: Vec<Vec<Elem>>,
}

impl TernaryGammaSemiring {
    /// Builds a structure after validating shapes, ranges, and the
    /// identity-at-zero normalization. No axioms beyond that are checked.
    pub fn new(
        n: usize,
        gamma: Vec<String>,
        add: Vec<Elem>,
        ops: Vec<Vec<Elem>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        // subsets of the carrier live in u64 bitmasks
        if n > 64 {
            return Err(Error::BoundExceeded {
                what: "carrier size".into(),
                limit: 64,
                requested: n,
            });
        }
        if gamma.is_empty() {
            return Err(Error::EmptyGamma);
        }
        for (i, label) in gamma.iter().enumerate() {
            if gamma[..i].contains(label) {
                return Err(Error::DuplicateGammaLabel(label.clone()));
            }
        }
        if add.len() != n * n {
            return Err(Error::TableShape {
                table: "add".into(),
                expected: n * n,
                got: add.len(),
            });
        }
        for (i, &v) in add.iter().enumerate() {
            if v as usize >= n {
                return Err(Error::EntryRange {
                    table: "add".into(),
                    index: i,
                    value: v as usize,
                    n,
                });
            }
        }
        if ops.len() != gamma.len() {
            return Err(Error::TableShape {
                table: "ops".into(),
                expected: gamma.len(),
                got: ops.len(),
            });
        }
        for (gi, tensor) in ops.iter().enumerate() {
            if tensor.len() != n * n * n {
                return Err(Error::TableShape {
                    table: format!("ops[{}]", gamma[gi]),
                    expected: n * n * n,
                    got: tensor.len(),
                });
            }
            for (i, &v) in tensor.iter().enumerate() {
                if v as usize >= n {
                    return Err(Error::EntryRange {
                        table: format!("ops[{}]", gamma[gi]),
                        index: i,
                        value: v as usize,
                        n,
                    });
                }
            }
        }
        for (a, &got) in add.iter().take(n).enumerate() {
            if got as usize != a {
                return Err(Error::IdentityAtZero { a: a as Elem, got });
            }
        }
        Ok(Self { n, gamma, add, ops })
    }

    pub fn carrier_size(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[String] {
        &self.gamma
    }

    pub fn gamma_size(&self) -> usize {
        self.gamma.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        0..self.n as Elem
    }

    pub fn add_table(&self) -> &[Elem] {
        &self.add
    }

    pub fn op_tensor(&self, gi: usize) -> &[Elem] {
        &self.ops[gi]
    }

    pub fn gamma_index(&self, label: &str) -> Result<usize> {
        self.gamma
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| Error::UnknownGamma(label.into()))
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.n + b as usize]
    }

    /// Ternary product by γ index. Hot path; no bounds diagnostics.
    #[inline]
    pub fn tern(&self, gi: usize, a: Elem, b: Elem, c: Elem) -> Elem {
        let n = self.n;
        self.ops[gi][(a as usize * n + b as usize) * n + c as usize]
    }

    /// Ternary product by γ label, with input validation.
    pub fn evaluate(&self, label: &str, a: Elem, b: Elem, c: Elem) -> Result<Elem> {
        let gi = self.gamma_index(label)?;
        for &x in &[a, b, c] {
            if x as usize >= self.n {
                return Err(Error::ElementRange {
                    value: x as usize,
                    n: self.n,
                });
            }
        }
        Ok(self.tern(gi, a, b, c))
    }

    /// Sum of a slice of elements (0 for the empty slice).
    pub fn sum(&self, xs: &[Elem]) -> Elem {
        xs.iter().fold(0, |acc, &x| self.add(acc, x))
    }

    /// Applies a carrier bijection φ with φ(0) = 0 to every table.
    ///
    /// The new tables satisfy `T'(φ(a), φ(b), ..) = φ(T(a, b, ..))`, so the
    /// result is isomorphic to `self` by construction.
    pub fn relabel(&self, phi: &[Elem]) -> Result<Self> {
        let n = self.n;
        if phi.len() != n {
            return Err(Error::MapLength {
                expected: n,
                got: phi.len(),
            });
        }
        let mut seen = vec![false; n];
        for &v in phi {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::BadRelabeling);
            }
            seen[v as usize] = true;
        }
        if phi[0] != 0 {
            return Err(Error::BadRelabeling);
        }
        let mut inv = vec![0 as Elem; n];
        for (x, &y) in phi.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        let mut add = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = phi[self.add(inv[a], inv[b]) as usize];
            }
        }
        let mut ops = Vec::with_capacity(self.ops.len());
        for gi in 0..self.ops.len() {
            let mut t = vec![0 as Elem; n * n * n];
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        t[(a * n + b) * n + c] =
                            phi[self.tern(gi, inv[a], inv[b], inv[c]) as usize];
                    }
                }
            }
            ops.push(t);
        }
        Self::new(n, self.gamma.clone(), add, ops)
    }

    /// Returns a copy with the γ tensors (and labels) reordered by `order`.
    pub fn permute_gamma(&self, order: &[usize]) -> Result<Self> {
        let m = self.gamma.len();
        if order.len() != m {
            return Err(Error::MapLength {
                expected: m,
                got: order.len(),
            });
        }
        let mut seen = vec![false; m];
        for &i in order {
            if i >= m || seen[i] {
                return Err(Error::BadRelabeling);
            }
            seen[i] = true;
        }
        let gamma = order.iter().map(|&i| self.gamma[i].clone()).collect();
        let ops = order.iter().map(|&i| self.ops[i].clone()).collect();
        Self::new(self.n, gamma, self.add.clone(), ops)
    }

    /// Catenation of all tables: add table followed by each tensor in γ
    /// order. This is the vectorized form canonical labeling minimizes.
    pub fn table_bytes(&self) -> Vec<u8> {
        let mut bytes = Vec::with_capacity(self.n * self.n + self.ops.len() * self.n.pow(3));
        bytes.extend_from_slice(&self.add);
        for t in &self.ops {
            bytes.extend_from_slice(t);
        }
        bytes
    }

    /// True when every element has an additive inverse (the reduct is a
    /// group; with T1 this is exactly cancellativity on a finite carrier).
    pub fn add_is_group(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).any(|b| self.add[a * self.n + b] == 0))
    }

    /// True when a + a = a for every a.
    pub fn add_is_idempotent(&self) -> bool {
        (0..self.n as Elem).all(|a| self.add(a, a) == a)
    }
}

/// Additive reducts used by the named constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AddKind {
    /// (a + b) mod n.
    Modular,
    /// min(a + b, n-1).
    Truncated,
    /// max(a, b); equals Boolean OR on a two-element carrier.
    Max,
}

impl AddKind {
    pub fn table(self, n: usize) -> Vec<Elem> {
        let mut add = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = match self {
                    AddKind::Modular => ((a + b) % n) as Elem,
                    AddKind::Truncated => (a + b).min(n - 1) as Elem,
                    AddKind::Max => a.max(b) as Elem,
                };
            }
        }
        add
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "modular" | "mod" => Ok(AddKind::Modular),
            "truncated" | "trunc" => Ok(AddKind::Truncated),
            "max" | "or" => Ok(AddKind::Max),
            _ => Err(Error::Parse {
                what: "additive reduct".into(),
                message: format!("unknown kind `{s}` (expected modular|truncated|max)"),
            }),
        }
    }
}

/// The named example structures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedKind {
    /// Addition mod n with `{a b c} = (a+b+c) mod n`, Γ = {1}.
    Modular,
    /// Truncated addition `min(a+b, n-1)`. With one γ the product is
    /// `min(a+b+c, n-1)`; with two γ the pair is `[min-sum, max]`,
    /// Γ = {alpha, beta}.
    TruncatedSum,
    /// Idempotent chain: addition and product are both max.
    MaxOp,
    /// The order-2 table with `{0,0,1} -> 0` and `{0,1,1} -> 1` (ternary
    /// majority), over OR addition.
    BooleanTable2,
    /// Order-2 OR addition with `{a b c} = min(a, b, c)`.
    BooleanAndOr,
    /// All ternary products 0, over a choice of additive reduct.
    ZeroOp,
}

impl NamedKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "modular" => Ok(NamedKind::Modular),
            "truncated_sum" => Ok(NamedKind::TruncatedSum),
            "max_op" => Ok(NamedKind::MaxOp),
            "boolean_table2" => Ok(NamedKind::BooleanTable2),
            "boolean_and_or" => Ok(NamedKind::BooleanAndOr),
            "zero_op" => Ok(NamedKind::ZeroOp),
            _ => Err(Error::Parse {
                what: "named kind".into(),
                message: format!("unknown kind `{s}`"),
            }),
        }
    }
}

/// Options for [`build_named`]. `add` selects the reduct for `ZeroOp`;
/// `gamma_size` selects one or two operations where a kind supports both.
#[derive(Debug, Clone, Default)]
pub struct NamedParams {
    pub add: Option<AddKind>,
    pub gamma_size: Option<usize>,
}

fn tensor_from<F: Fn(usize, usize, usize) -> usize>(n: usize, f: F) -> Vec<Elem> {
    let mut t = vec![0 as Elem; n * n * n];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                t[(a * n + b) * n + c] = f(a, b, c) as Elem;
            }
        }
    }
    t
}

/// Builds one of the named structures. Constructions are emitted exactly as
/// their defining formulas state; several intentionally violate axioms, so
/// no axiom checking happens here.
pub fn build_named(kind: NamedKind, n: usize, params: &NamedParams) -> Result<TernaryGammaSemiring> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let unsupported = |message: String| Error::Parse {
        what: "named construction".into(),
        message,
    };
    let gamma_size = params.gamma_size.unwrap_or(1);
    match kind {
        NamedKind::Modular => {
            if gamma_size != 1 {
                return Err(unsupported("modular takes exactly one gamma".into()));
            }
            TernaryGammaSemiring::new(
                n,
                vec!["1".into()],
                AddKind::Modular.table(n),
                vec![tensor_from(n, |a, b, c| (a + b + c) % n)],
            )
        }
        NamedKind::TruncatedSum => {
            if n < 2 {
                return Err(unsupported("truncated_sum needs n >= 2".into()));
            }
            let top = n - 1;
            let add = AddKind::Truncated.table(n);
            match gamma_size {
                1 => TernaryGammaSemiring::new(
                    n,
                    vec!["1".into()],
                    add,
                    vec![tensor_from(n, |a, b, c| (a + b + c).min(top))],
                ),
                2 => TernaryGammaSemiring::new(
                    n,
                    vec!["alpha".into(), "beta".into()],
                    add,
                    vec![
                        tensor_from(n, |a, b, c| (a + b + c).min(top)),
                        tensor_from(n, |a, b, c| a.max(b).max(c)),
                    ],
                ),
                k => Err(unsupported(format!("truncated_sum takes 1 or 2 gammas, got {k}"))),
            }
        }
        NamedKind::MaxOp => {
            if gamma_size != 1 {
                return Err(unsupported("max_op takes exactly one gamma".into()));
            }
            TernaryGammaSemiring::new(
                n,
                vec!["1".into()],
                AddKind::Max.table(n),
                vec![tensor_from(n, |a, b, c| a.max(b).max(c))],
            )
        }
        NamedKind::BooleanTable2 => {
            if n != 2 {
                return Err(unsupported("boolean_table2 is an order-2 structure".into()));
            }
            // Symmetric completion of the four listed triples: majority.
            TernaryGammaSemiring::new(
                2,
                vec!["1".into()],
                AddKind::Max.table(2),
                vec![tensor_from(2, |a, b, c| if a + b + c >= 2 { 1 } else { 0 })],
            )
        }
        NamedKind::BooleanAndOr => {
            if n != 2 {
                return Err(unsupported("boolean_and_or is an order-2 structure".into()));
            }
            TernaryGammaSemiring::new(
                2,
                vec!["1".into()],
                AddKind::Max.table(2),
                vec![tensor_from(2, |a, b, c| a.min(b).min(c))],
            )
        }
        NamedKind::ZeroOp => {
            let add = params.add.unwrap_or(AddKind::Modular).table(n);
            let labels = (0..gamma_size).map(|i| format!("g{i}")).collect::<Vec<_>>();
            if labels.is_empty() {
                return Err(Error::EmptyGamma);
            }
            let ops = (0..gamma_size).map(|_| vec![0 as Elem; n * n * n]).collect();
            TernaryGammaSemiring::new(n, labels, add, ops)
        }
    }
}

/// Componentwise product. Element (x, y) is encoded as `x·n2 + y`, so
/// (0, 0) is the additive identity of the product.
pub fn direct_product(
    lhs: &TernaryGammaSemiring,
    rhs: &TernaryGammaSemiring,
) -> Result<TernaryGammaSemiring> {
    if lhs.gamma != rhs.gamma {
        return Err(Error::GammaMismatch);
    }
    let (n1, n2) = (lhs.n, rhs.n);
    let n = n1 * n2;
    let enc = |x: Elem, y: Elem| (x as usize * n2 + y as usize) as Elem;
    let dec = |e: usize| ((e / n2) as Elem, (e % n2) as Elem);
    let mut add = vec![0 as Elem; n * n];
    for a in 0..n {
        for b in 0..n {
            let (ax, ay) = dec(a);
            let (bx, by) = dec(b);
            add[a * n + b] = enc(lhs.add(ax, bx), rhs.add(ay, by));
        }
    }
    let mut ops = Vec::with_capacity(lhs.ops.len());
    for gi in 0..lhs.ops.len() {
        let mut t = vec![0 as Elem; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (ax, ay) = dec(a);
                    let (bx, by) = dec(b);
                    let (cx, cy) = dec(c);
                    t[(a * n + b) * n + c] =
                        enc(lhs.tern(gi, ax, bx, cx), rhs.tern(gi, ay, by, cy));
                }
            }
        }
        ops.push(t);
    }
    TernaryGammaSemiring::new(n, lhs.gamma.clone(), add, ops)
}
