//! Backtracking tensor search over one additive reduct.
//!
//! Commutativity is built into the storage: only the multisets a ≤ b ≤ c
//! are variables. Absorption (when enabled) pre-assigns the 0-triples,
//! distributivity propagates values from summands to sums after every
//! assignment, and ternary associativity both checks and forces values on
//! quintuples as soon as one side is determined. A surviving complete
//! assignment is still passed through the full axiom checker before it
//! counts: the propagation rules prune, the final check decides.

use crate::axioms::{axioms_hold, AxiomId, AxiomMode};
use crate::structure::{Elem, TernaryGammaSemiring};

#[derive(Debug, Clone, Copy)]
struct T2Rule {
    target: u32,
    src1: u32,
    src2: u32,
}

#[derive(Debug, Clone, Copy)]
struct T4Rule {
    inner_left: u32,
    inner_right: u32,
    a: Elem,
    b: Elem,
    d: Elem,
    e: Elem,
    alpha: u16,
    beta: u16,
}

pub(crate) struct ReductSearch {
    n: usize,
    m: usize,
    mode: AxiomMode,
    add: Vec<Elem>,
    gamma: Vec<String>,
    /// sorted triples (a ≤ b ≤ c) in lexicographic order
    multisets: Vec<(Elem, Elem, Elem)>,
    /// ordered triple (a·n + b)·n + c → multiset index
    ms_index: Vec<u32>,
    t2_rules: Vec<T2Rule>,
    t4_rules: Vec<T4Rule>,
}

#[derive(Debug, Clone)]
pub(crate) struct State {
    values: Vec<Option<Elem>>,
    trail: Vec<u32>,
}

#[derive(Debug, Default)]
pub(crate) struct SearchOutcome {
    /// Complete, axiom-verified tensor families (one tensor per γ).
    pub structures: Vec<Vec<Vec<Elem>>>,
    pub nodes: u64,
    pub candidates: u64,
}

impl ReductSearch {
    pub(crate) fn new(n: usize, m: usize, mode: AxiomMode, add: Vec<Elem>) -> Self {
        let mut multisets = Vec::new();
        for a in 0..n as Elem {
            for b in a..n as Elem {
                for c in b..n as Elem {
                    multisets.push((a, b, c));
                }
            }
        }
        let mut ms_index = vec![0u32; n * n * n];
        for a in 0..n as Elem {
            for b in 0..n as Elem {
                for c in 0..n as Elem {
                    let mut t = [a, b, c];
                    t.sort_unstable();
                    let pos = multisets
                        .binary_search(&(t[0], t[1], t[2]))
                        .expect("every sorted triple is listed");
                    ms_index[(a as usize * n + b as usize) * n + c as usize] = pos as u32;
                }
            }
        }
        let gamma = (0..m).map(|i| format!("g{i}")).collect();
        let mut search = Self {
            n,
            m,
            mode,
            add,
            gamma,
            multisets,
            ms_index,
            t2_rules: Vec::new(),
            t4_rules: Vec::new(),
        };
        search.build_rules();
        search
    }

    #[inline]
    fn entry(&self, gi: usize, a: Elem, b: Elem, c: Elem) -> u32 {
        let n = self.n;
        gi as u32 * self.multisets.len() as u32
            + self.ms_index[(a as usize * n + b as usize) * n + c as usize]
    }

    #[inline]
    fn add_of(&self, a: Elem, b: Elem) -> Elem {
        self.add[a as usize * self.n + b as usize]
    }

    fn build_rules(&mut self) {
        let n = self.n as Elem;
        if self.mode.enabled(AxiomId::T2) {
            let mut seen = std::collections::BTreeSet::new();
            for gi in 0..self.m {
                for x in 0..n {
                    for y in x..n {
                        let s = self.add_of(x, y);
                        for c in 0..n {
                            for d in c..n {
                                let rule = T2Rule {
                                    target: self.entry(gi, s, c, d),
                                    src1: self.entry(gi, x, c, d),
                                    src2: self.entry(gi, y, c, d),
                                };
                                if seen.insert((rule.target, rule.src1, rule.src2)) {
                                    self.t2_rules.push(rule);
                                }
                            }
                        }
                    }
                }
            }
        }
        if self.mode.enabled(AxiomId::T4) {
            for alpha in 0..self.m {
                for beta in 0..self.m {
                    for a in 0..n {
                        for b in a..n {
                            for c in 0..n {
                                for d in 0..n {
                                    for e in d..n {
                                        self.t4_rules.push(T4Rule {
                                            inner_left: self.entry(alpha, a, b, c),
                                            inner_right: self.entry(beta, c, d, e),
                                            a,
                                            b,
                                            d,
                                            e,
                                            alpha: alpha as u16,
                                            beta: beta as u16,
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    /// Absorption prefill plus initial propagation; None when the rules are
    /// already contradictory on this reduct.
    pub(crate) fn initial_state(&self) -> Option<State> {
        let mut state = State {
            values: vec![None; self.m * self.multisets.len()],
            trail: Vec::new(),
        };
        if self.mode.enabled(AxiomId::T3) {
            for gi in 0..self.m {
                for (mi, &(a, _, _)) in self.multisets.iter().enumerate() {
                    if a == 0 {
                        let idx = gi * self.multisets.len() + mi;
                        state.values[idx] = Some(0);
                        state.trail.push(idx as u32);
                    }
                }
            }
        }
        self.propagate(&mut state).then_some(state)
    }

    pub(crate) fn first_undetermined(&self, state: &State) -> Option<usize> {
        state.values.iter().position(Option::is_none)
    }

    fn assign(&self, state: &mut State, idx: usize, v: Elem) -> bool {
        match state.values[idx] {
            Some(existing) => existing == v,
            None => {
                state.values[idx] = Some(v);
                state.trail.push(idx as u32);
                true
            }
        }
    }

    fn undo(&self, state: &mut State, mark: usize) {
        while state.trail.len() > mark {
            let idx = state.trail.pop().unwrap();
            state.values[idx as usize] = None;
        }
    }

    /// Runs the rule set to fixpoint. Returns false on conflict.
    fn propagate(&self, state: &mut State) -> bool {
        loop {
            let mut changed = false;
            for rule in &self.t2_rules {
                if let (Some(v1), Some(v2)) =
                    (state.values[rule.src1 as usize], state.values[rule.src2 as usize])
                {
                    let forced = self.add_of(v1, v2);
                    match state.values[rule.target as usize] {
                        Some(existing) => {
                            if existing != forced {
                                return false;
                            }
                        }
                        None => {
                            state.values[rule.target as usize] = Some(forced);
                            state.trail.push(rule.target);
                            changed = true;
                        }
                    }
                }
            }
            for rule in &self.t4_rules {
                let left = state.values[rule.inner_left as usize].map(|v| {
                    let idx = self.entry(rule.beta as usize, v, rule.d, rule.e);
                    (idx, state.values[idx as usize])
                });
                let right = state.values[rule.inner_right as usize].map(|v| {
                    let idx = self.entry(rule.alpha as usize, rule.a, rule.b, v);
                    (idx, state.values[idx as usize])
                });
                match (left, right) {
                    (Some((_, Some(x))), Some((_, Some(y)))) => {
                        if x != y {
                            return false;
                        }
                    }
                    (Some((_, Some(x))), Some((idx, None))) => {
                        state.values[idx as usize] = Some(x);
                        state.trail.push(idx);
                        changed = true;
                    }
                    (Some((idx, None)), Some((_, Some(y)))) => {
                        state.values[idx as usize] = Some(y);
                        state.trail.push(idx);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                return true;
            }
        }
    }

    /// DFS from `state`, optionally fixing one (variable, value) first —
    /// the unit used to partition work across threads.
    pub(crate) fn run(&self, mut state: State, fix: Option<(usize, Elem)>) -> SearchOutcome {
        let mut out = SearchOutcome::default();
        if let Some((idx, v)) = fix {
            out.nodes += 1;
            if !(self.assign(&mut state, idx, v) && self.propagate(&mut state)) {
                return out;
            }
        }
        self.dfs(&mut state, &mut out);
        out
    }

    fn dfs(&self, state: &mut State, out: &mut SearchOutcome) {
        match self.first_undetermined(state) {
            None => {
                out.candidates += 1;
                if let Some(ops) = self.materialize_and_check(state) {
                    out.structures.push(ops);
                }
            }
            Some(var) => {
                for v in 0..self.n as Elem {
                    out.nodes += 1;
                    let mark = state.trail.len();
                    if self.assign(state, var, v) && self.propagate(state) {
                        self.dfs(state, out);
                    }
                    self.undo(state, mark);
                }
            }
        }
    }

    fn materialize_and_check(&self, state: &State) -> Option<Vec<Vec<Elem>>> {
        let n = self.n;
        let per = self.multisets.len();
        let mut ops = Vec::with_capacity(self.m);
        for gi in 0..self.m {
            let mut t = vec![0 as Elem; n * n * n];
            for (pos, cell) in t.iter_mut().enumerate() {
                let mi = self.ms_index[pos] as usize;
                *cell = state.values[gi * per + mi].expect("complete assignment");
            }
            ops.push(t);
        }
        let ts = TernaryGammaSemiring::new(n, self.gamma.clone(), self.add.clone(), ops)
            .expect("search tables are in range");
        axioms_hold(&ts, self.mode).then(|| {
            (0..self.m).map(|gi| ts.op_tensor(gi).to_vec()).collect()
        })
    }
}
