//! Acceptance suite: ten numbered criteria, each as one test printing a
//! single PASS line on success (run with `-- --nocapture` to see them).
//! Tolerances are exact unless a criterion states otherwise; reference
//! mismatches against previously published counts are logged, never hidden.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tgs_core::apps::{code_generate, ternary_path_values, weight_report, WeightedGraph,
    DEFAULT_CODE_BUDGET};
use tgs_core::axioms::{check_axioms, check_axioms_with, AxiomId, AxiomMode, AxiomWitness};
use tgs_core::decomposition::{
    classify_pattern, subdirect_decomposition, wedderburn_check, PatternKind, SubdirectStrategy,
};
use tgs_core::enumeration::{
    are_isomorphic, canonical_form, enumerate_structures, EnumerationParams,
};
use tgs_core::ideals::{all_ideals, IdealSet};
use tgs_core::radical::{rad_nil_report, radical, NilDefinition};
use tgs_core::spectrum::{
    dimension_audit, prime_avoidance_check, spec_closed_sets, AvoidanceVariant,
};
use tgs_core::structure::{build_named, Elem, NamedKind, NamedParams, TernaryGammaSemiring};

fn named(kind: NamedKind, n: usize) -> TernaryGammaSemiring {
    build_named(kind, n, &NamedParams::default()).unwrap()
}

fn strict_catalogs_n3() -> &'static Vec<tgs_core::Catalog> {
    static CATALOGS: OnceLock<Vec<tgs_core::Catalog>> = OnceLock::new();
    CATALOGS.get_or_init(|| {
        [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]
            .into_iter()
            .map(|(n, m)| {
                enumerate_structures(&EnumerationParams::new(n, m, AxiomMode::strict())).unwrap()
            })
            .collect()
    })
}

fn artifact_dir() -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn archive(name: &str, value: &serde_json::Value) -> PathBuf {
    let path = artifact_dir().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

fn tgs_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tgs"))
}

#[test]
fn criterion_01_table_value_fidelity() {
    let started = Instant::now();
    let boolean = named(NamedKind::BooleanTable2, 2);
    let table2: [((Elem, Elem, Elem), Elem); 4] =
        [((0, 0, 0), 0), ((0, 0, 1), 0), ((0, 1, 1), 1), ((1, 1, 1), 1)];
    for ((a, b, c), want) in table2 {
        assert_eq!(boolean.evaluate("1", a, b, c).unwrap(), want, "order-2 cell ({a},{b},{c})");
    }
    let modular = named(NamedKind::Modular, 3);
    let table3: [((Elem, Elem, Elem), Elem); 9] = [
        ((0, 0, 0), 0),
        ((0, 0, 1), 1),
        ((0, 0, 2), 2),
        ((0, 1, 1), 2),
        ((0, 1, 2), 0),
        ((0, 2, 2), 1),
        ((1, 1, 1), 0),
        ((1, 1, 2), 1),
        ((1, 2, 2), 2),
    ];
    for ((a, b, c), want) in table3 {
        assert_eq!(modular.evaluate("1", a, b, c).unwrap(), want, "order-3 cell ({a},{b},{c})");
    }
    assert!(started.elapsed().as_secs() < 1);
    println!("ACCEPTANCE 01 table-value fidelity: PASS (13 cells exact)");
}

#[test]
fn criterion_02_axiom_audit_findings() {
    let started = Instant::now();
    let modular = named(NamedKind::Modular, 3);
    let report = check_axioms(&modular, AxiomMode::strict());
    let t3 = report.check(AxiomId::T3).unwrap();
    assert!(!t3.passed(), "T3 must fail on the order-3 modular structure");
    assert!(
        t3.witnesses.iter().any(|w| matches!(
            w,
            AxiomWitness::Absorption { gamma: 0, slot: 0, a: 1, b: 1, lhs: 2, rhs: 0 }
        )),
        "expected the {{0,1,1}} -> 2 witness, got {:?}",
        t3.witnesses
    );
    let t2 = report.check(AxiomId::T2).unwrap();
    assert!(!t2.passed(), "T2 must fail on the order-3 modular structure");

    // determinism: the witness lists are identical across runs
    let again = check_axioms(&modular, AxiomMode::strict());
    for (a, b) in report.checks.iter().zip(&again.checks) {
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.violations, b.violations);
    }

    let pair = build_named(
        NamedKind::TruncatedSum,
        4,
        &NamedParams { add: None, gamma_size: Some(2) },
    )
    .unwrap();
    let report = check_axioms_with(&pair, AxiomMode::strict(), 1000);
    let t3 = report.check(AxiomId::T3).unwrap();
    let failing_gammas: BTreeSet<usize> = t3
        .witnesses
        .iter()
        .map(|w| match w {
            AxiomWitness::Absorption { gamma, .. } => *gamma,
            other => panic!("unexpected witness {other:?}"),
        })
        .collect();
    assert_eq!(failing_gammas.len(), 2, "T3 must fail for both operations");
    assert!(started.elapsed().as_secs() < 1);
    println!("ACCEPTANCE 02 axiom-audit findings: PASS (T3/T2 witnesses as specified)");
}

/// Unpruned filter-everything oracle: every commutative identity-at-zero
/// addition table (associativity filtered, nothing deduplicated), every
/// symmetric tensor family, pushed through the reference axiom checker,
/// then canonicalized.
fn oracle_canonical_set(n: usize, m: usize, mode: AxiomMode) -> BTreeSet<Vec<u8>> {
    let free_pairs: Vec<(usize, usize)> =
        (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut adds = Vec::new();
    let add_total = (n as u64).pow(free_pairs.len() as u32);
    for code in 0..add_total {
        let mut table = vec![0 as Elem; n * n];
        for a in 0..n {
            table[a] = a as Elem;
            table[a * n] = a as Elem;
        }
        let mut rest = code;
        for &(a, b) in &free_pairs {
            let v = (rest % n as u64) as Elem;
            rest /= n as u64;
            table[a * n + b] = v;
            table[b * n + a] = v;
        }
        let assoc = (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    let xy = table[x * n + y] as usize;
                    let yz = table[y * n + z] as usize;
                    table[xy * n + z] == table[x * n + yz]
                })
            })
        });
        if assoc {
            adds.push(table);
        }
    }

    let mut multisets = Vec::new();
    for a in 0..n as Elem {
        for b in a..n as Elem {
            for c in b..n as Elem {
                multisets.push((a, b, c));
            }
        }
    }
    let per_tensor = (n as u64).pow(multisets.len() as u32);
    let tensor_for = |code: u64| -> Vec<Elem> {
        let mut values = Vec::with_capacity(multisets.len());
        let mut rest = code;
        for _ in 0..multisets.len() {
            values.push((rest % n as u64) as Elem);
            rest /= n as u64;
        }
        let mut t = vec![0 as Elem; n * n * n];
        for a in 0..n as Elem {
            for b in 0..n as Elem {
                for c in 0..n as Elem {
                    let mut s = [a, b, c];
                    s.sort_unstable();
                    let mi = multisets.binary_search(&(s[0], s[1], s[2])).unwrap();
                    t[(a as usize * n + b as usize) * n + c as usize] = values[mi];
                }
            }
        }
        t
    };

    let gamma: Vec<String> = (0..m).map(|i| format!("g{i}")).collect();
    let mut found = BTreeSet::new();
    let total_families = per_tensor.pow(m as u32);
    for add in &adds {
        for family_code in 0..total_families {
            let mut rest = family_code;
            let mut ops = Vec::with_capacity(m);
            for _ in 0..m {
                ops.push(tensor_for(rest % per_tensor));
                rest /= per_tensor;
            }
            let ts =
                TernaryGammaSemiring::new(n, gamma.clone(), add.clone(), ops).unwrap();
            if check_axioms(&ts, mode).all_pass() {
                found.insert(canonical_form(&ts, false).bytes);
            }
        }
    }
    found
}

#[test]
fn criterion_03_enumeration_oracle_equivalence() {
    let started = Instant::now();
    for (n, m) in [(1usize, 1usize), (2, 1), (2, 2), (3, 1)] {
        for mode in [AxiomMode::strict(), AxiomMode::relaxed()] {
            let catalog =
                enumerate_structures(&EnumerationParams::new(n, m, mode)).unwrap();
            let pruned: BTreeSet<Vec<u8>> =
                catalog.entries.iter().map(|e| e.canonical.bytes.clone()).collect();
            let oracle = oracle_canonical_set(n, m, mode);
            assert_eq!(
                pruned, oracle,
                "({n},{m}) {mode}: pruned and unpruned sets differ"
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, budget 5 min");
    println!(
        "ACCEPTANCE 03 enumeration oracle equivalence: PASS \
         (4 scales x 2 modes, exact set equality, {elapsed:?})"
    );
}

#[test]
fn criterion_04_paper_count_comparison() {
    let dir = artifact_dir();
    let mut catalog_paths = Vec::new();
    for (n, m) in [(2usize, 1usize), (3, 1), (3, 2), (4, 1), (4, 2)] {
        let path = dir.join(format!("table1_c{n}{m}.jsonl"));
        let status = tgs_bin()
            .args([
                "enumerate",
                "--order",
                &n.to_string(),
                "--gamma-size",
                &m.to_string(),
                "--out",
                path.to_str().unwrap(),
            ])
            .status()
            .unwrap();
        assert!(status.success());
        catalog_paths.push(path);
    }
    let mut args = vec!["report".to_string(), "--table".into(), "1".into()];
    args.extend(catalog_paths.iter().map(|p| p.to_str().unwrap().to_string()));
    let output = tgs_bin().args(&args).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let csv = String::from_utf8(output.stdout).unwrap();
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows.len(), 6, "header plus five rows: {csv}");
    let mut mismatches = Vec::new();
    for row in &rows[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        let (computed_add, computed_valid) = (fields[3], fields[4]);
        let (ref_add, ref_valid) = (fields[5], fields[6]);
        assert!(!computed_add.is_empty() && !computed_valid.is_empty());
        assert!(
            !ref_add.is_empty() && !ref_valid.is_empty(),
            "reference column must be populated for row {row}"
        );
        if computed_add != ref_add || computed_valid != ref_valid {
            mismatches.push(row.to_string());
        }
    }
    // The reference values are not assumed reproducible; differences are
    // logged and archived, not hidden.
    let archived = archive(
        "table1_comparison.json",
        &serde_json::json!({ "csv": csv, "mismatches": mismatches }),
    );
    for m in &mismatches {
        println!("  reference mismatch (logged): {m}");
    }
    println!(
        "ACCEPTANCE 04 paper-count comparison: PASS \
         (5 rows, both columns populated, {} mismatches logged to {})",
        mismatches.len(),
        archived.display()
    );
}

#[test]
fn criterion_05_determinism_across_jobs() {
    let dir = artifact_dir();
    for (n, m) in [(1usize, 1usize), (2, 1), (2, 2), (3, 1), (3, 2)] {
        let mut bytes = Vec::new();
        for jobs in ["1", "8"] {
            let path = dir.join(format!("det_{n}{m}_j{jobs}.jsonl"));
            let status = tgs_bin()
                .args([
                    "enumerate",
                    "--order",
                    &n.to_string(),
                    "--gamma-size",
                    &m.to_string(),
                    "--jobs",
                    jobs,
                    "--out",
                    path.to_str().unwrap(),
                ])
                .status()
                .unwrap();
            assert!(status.success());
            bytes.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(bytes[0], bytes[1], "({n},{m}): catalogs differ between --jobs 1 and 8");
    }
    println!("ACCEPTANCE 05 determinism: PASS (byte-identical catalogs, jobs 1 vs 8)");
}

#[test]
fn criterion_06_isomorphism_soundness() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e52_a11c);
    // 1000 random (structure, permutation) pairs at n ≤ 4
    for round in 0..1000 {
        let n = rng.random_range(2..=4usize);
        let m = rng.random_range(1..=2usize);
        let gamma: Vec<String> = (0..m).map(|i| format!("g{i}")).collect();
        let mut add = vec![0 as Elem; n * n];
        for a in 0..n {
            add[a] = a as Elem;
            add[a * n] = a as Elem;
        }
        for a in 1..n {
            for b in 1..n {
                add[a * n + b] = rng.random_range(0..n) as Elem;
            }
        }
        let ops: Vec<Vec<Elem>> = (0..m)
            .map(|_| (0..n * n * n).map(|_| rng.random_range(0..n) as Elem).collect())
            .collect();
        let ts = TernaryGammaSemiring::new(n, gamma, add, ops).unwrap();
        let mut phi: Vec<Elem> = (0..n as Elem).collect();
        for i in (2..n).rev() {
            let j = rng.random_range(1..=i);
            phi.swap(i, j);
        }
        let relabeled = ts.relabel(&phi).unwrap();
        assert_eq!(
            canonical_form(&ts, false),
            canonical_form(&relabeled, false),
            "round {round}: canonical form not orbit-invariant"
        );
        let witness = are_isomorphic(&ts, &relabeled, false)
            .unwrap()
            .unwrap_or_else(|| panic!("round {round}: no bijection found"));
        assert_eq!(ts.relabel(&witness).unwrap(), relabeled, "round {round}: invalid bijection");
    }

    // 1000 random non-isomorphic catalog pairs
    let catalogs: Vec<tgs_core::Catalog> = [(3usize, 1usize), (3, 2), (4, 1)]
        .into_iter()
        .map(|(n, m)| {
            enumerate_structures(&EnumerationParams::new(n, m, AxiomMode::strict())).unwrap()
        })
        .collect();
    for round in 0..1000 {
        let catalog = &catalogs[rng.random_range(0..catalogs.len())];
        let i = rng.random_range(0..catalog.entries.len());
        let mut j = rng.random_range(0..catalog.entries.len());
        while j == i {
            j = rng.random_range(0..catalog.entries.len());
        }
        let a = &catalog.entries[i].structure;
        let b = &catalog.entries[j].structure;
        assert!(
            are_isomorphic(a, b, false).unwrap().is_none(),
            "round {round}: distinct canonical entries reported isomorphic"
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 2 min");
    println!(
        "ACCEPTANCE 06 isomorphism soundness: PASS (1000+1000 pairs, zero failures, {elapsed:?})"
    );
}

#[test]
fn criterion_07_rad_nil_audit() {
    let started = Instant::now();
    let mut equal = 0u64;
    let mut witnessed = Vec::new();
    let mut total = 0u64;
    for catalog in strict_catalogs_n3() {
        for entry in &catalog.entries {
            total += 1;
            let report = rad_nil_report(&entry.structure, NilDefinition::Power);
            if report.equal {
                equal += 1;
            } else {
                witnessed.push(serde_json::json!({
                    "n": catalog.n,
                    "m": catalog.m,
                    "canonical": entry.canonical.hex(),
                    "radical_only": report.radical_only,
                    "nil_only": report.nil_only,
                }));
            }
        }
    }
    assert!(total > 0);
    let tally = serde_json::json!({
        "entries": total,
        "equal": equal,
        "witnessed": witnessed.len(),
        "witnesses": witnessed,
    });
    let path = archive("rad_nil_tally.json", &tally);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 2 min");
    println!(
        "ACCEPTANCE 07 rad=nil audit: PASS ({total} entries, {equal} equal, {} witnessed, \
         tally archived to {})",
        total - equal,
        path.display()
    );
}

#[test]
fn criterion_08_decomposition_audits() {
    let started = Instant::now();
    let mut total = 0u64;
    let mut maximal_injective = 0u64;
    let mut wedderburn_holds = 0u64;
    let mut findings = Vec::new();
    for catalog in strict_catalogs_n3() {
        for entry in &catalog.entries {
            total += 1;
            let ts = &entry.structure;
            let mi = subdirect_decomposition(ts, SubdirectStrategy::MeetIrreducible).unwrap();
            assert!(
                mi.injective,
                "meet-irreducible embedding must inject (n={}, {})",
                catalog.n,
                entry.canonical.hex()
            );
            let maximal =
                subdirect_decomposition(ts, SubdirectStrategy::MaximalCongruences).unwrap();
            if maximal.injective {
                maximal_injective += 1;
            }
            let wedderburn = wedderburn_check(ts);
            if wedderburn.holds {
                wedderburn_holds += 1;
            }
            let pattern = classify_pattern(ts);
            if pattern.kind == PatternKind::Other || !wedderburn.holds {
                findings.push(serde_json::json!({
                    "n": catalog.n,
                    "m": catalog.m,
                    "canonical": entry.canonical.hex(),
                    "pattern": pattern.kind.label(),
                    "wedderburn_holds": wedderburn.holds,
                    "wedderburn_quotient_error": wedderburn.quotient_error,
                    "congruence_count": pattern.congruence_count,
                }));
            }
        }
    }
    let tally = serde_json::json!({
        "entries": total,
        "maximal_strategy_injective": maximal_injective,
        "wedderburn_holds": wedderburn_holds,
        "findings": findings,
    });
    let path = archive("decomposition_tally.json", &tally);
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 300, "took {elapsed:?}, budget 5 min");
    println!(
        "ACCEPTANCE 08 decomposition audits: PASS ({total} entries, meet-irreducible all \
         injective, maximal injective on {maximal_injective}, wedderburn holds on \
         {wedderburn_holds}, {} findings archived to {})",
        findings.len(),
        path.display()
    );
}

/// A longest strict chain of primes, for counterexample printouts.
fn longest_prime_chain(ts: &TernaryGammaSemiring) -> Vec<IdealSet> {
    let primes = tgs_core::radical::all_prime_ideals(ts).primes;
    let mut best: Vec<IdealSet> = Vec::new();
    fn extend(primes: &[IdealSet], chain: &mut Vec<IdealSet>, best: &mut Vec<IdealSet>) {
        if chain.len() > best.len() {
            *best = chain.clone();
        }
        let last = *chain.last().unwrap();
        for &p in primes {
            if last.is_subset(p) && last != p {
                chain.push(p);
                extend(primes, chain, best);
                chain.pop();
            }
        }
    }
    for &p in &primes {
        let mut chain = vec![p];
        extend(&primes, &mut chain, &mut best);
    }
    best
}

#[test]
fn criterion_09_spectrum_audits() {
    let started = Instant::now();
    let mut total = 0u64;
    let mut union_failures = Vec::new();
    let mut zero_dim_quotients = 0u64;
    let mut dim_counterexamples = Vec::new();
    for catalog in strict_catalogs_n3() {
        for entry in &catalog.entries {
            total += 1;
            let ts = &entry.structure;
            let spectrum = spec_closed_sets(ts);
            assert!(spectrum.v_order_reversing, "{}", entry.canonical.hex());
            assert!(spectrum.union_closed && spectrum.intersection_closed);
            assert!(
                spectrum.galois_anti_isomorphism,
                "{}: {:?}",
                entry.canonical.hex(),
                spectrum.galois_witness
            );
            // Galois closure inclusions, checked directly
            let primes = &spectrum.primes;
            for ideal in all_ideals(ts).elements {
                let closure = primes
                    .iter()
                    .filter(|p| ideal.is_subset(**p))
                    .fold(IdealSet::full(ts.carrier_size()), |acc, p| acc.intersect(*p));
                assert!(ideal.is_subset(closure), "I ⊆ k(V(I)) failed");
            }
            // Zero-dimensionality of T/Rad is audited, not assumed: every
            // entry must yield a verdict, and any counterexample chain is
            // printed and archived.
            let audit = dimension_audit(ts);
            let qd = audit.quotient_dimension.unwrap_or_else(|| {
                panic!("quotient failed: {:?}", audit.quotient_error)
            });
            if qd == 0 || qd == -1 {
                zero_dim_quotients += 1;
            } else {
                let q = tgs_core::quotient::quotient(
                    ts,
                    tgs_core::quotient::QuotientBy::Ideal(radical(ts).radical),
                )
                .unwrap();
                let chain: Vec<String> =
                    longest_prime_chain(&q.structure).iter().map(|p| p.hex()).collect();
                println!(
                    "  counterexample: dim(T/Rad) = {qd} on {} (n={}, m={}), \
                     prime chain {}",
                    entry.canonical.hex(),
                    catalog.n,
                    catalog.m,
                    chain.join(" ⊂ ")
                );
                dim_counterexamples.push(serde_json::json!({
                    "n": catalog.n,
                    "m": catalog.m,
                    "canonical": entry.canonical.hex(),
                    "quotient_dimension": qd,
                    "prime_chain": chain,
                }));
            }
            let printed =
                prime_avoidance_check(ts, AvoidanceVariant::IntersectionAsPrinted);
            assert!(printed.holds, "intersection variant is vacuous yet failed");
            let union = prime_avoidance_check(ts, AvoidanceVariant::Union);
            if !union.holds {
                union_failures.push(serde_json::json!({
                    "n": catalog.n,
                    "m": catalog.m,
                    "canonical": entry.canonical.hex(),
                    "counterexamples": union.counterexamples.len(),
                }));
            }
        }
    }
    // every entry produced a dimension verdict
    assert_eq!(zero_dim_quotients + dim_counterexamples.len() as u64, total);
    let avoidance_path = archive(
        "prime_avoidance_union_tally.json",
        &serde_json::json!({ "entries": total, "union_failures": union_failures }),
    );
    let dim_path = archive(
        "zero_dimension_audit.json",
        &serde_json::json!({
            "entries": total,
            "zero_or_empty": zero_dim_quotients,
            "counterexamples": dim_counterexamples,
        }),
    );
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 2 min");
    println!(
        "ACCEPTANCE 09 spectrum audits: PASS ({total} entries, V monotone, Galois verified; \
         dim(T/Rad) ∈ {{0,-1}} on {zero_dim_quotients}, {} counterexample chains printed and \
         archived to {}; {} union-variant failures archived to {})",
        dim_counterexamples.len(),
        dim_path.display(),
        union_failures.len(),
        avoidance_path.display()
    );
}

/// Exact oracle for walk-weight sets: fixpoint over subsets of the carrier.
#[allow(clippy::needless_range_loop)]
fn walk_weight_sets(ts: &TernaryGammaSemiring, g: &WeightedGraph) -> Vec<Vec<u8>> {
    let v = g.vertices;
    let mut sets = vec![vec![0u8; v]; v];
    for &(s, t, w) in &g.edges {
        sets[s][t] |= 1 << w;
    }
    loop {
        let mut changed = false;
        for s in 0..v {
            for t in 0..v {
                for mid in 0..v {
                    let (a, b) = (sets[s][mid], sets[mid][t]);
                    if a == 0 || b == 0 {
                        continue;
                    }
                    for wa in 0..ts.carrier_size() as Elem {
                        if a >> wa & 1 == 0 {
                            continue;
                        }
                        for wb in 0..ts.carrier_size() as Elem {
                            if b >> wb & 1 == 0 {
                                continue;
                            }
                            let folded = ts.add(wa, wb);
                            if sets[s][t] >> folded & 1 == 0 {
                                sets[s][t] |= 1 << folded;
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            return sets;
        }
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn criterion_10_apps_sanity() {
    let started = Instant::now();

    // (a) S-box row sums partition the cube for every group-reduct entry.
    let mut group_entries = 0u64;
    for catalog in strict_catalogs_n3() {
        for entry in &catalog.entries {
            let ts = &entry.structure;
            if !ts.add_is_group() {
                continue;
            }
            group_entries += 1;
            let cube = (ts.carrier_size() as u64).pow(3);
            for label in ts.gamma() {
                let profile =
                    tgs_core::apps::sbox_differential_profile(ts, label).unwrap();
                assert_eq!(
                    (profile.row_sum_min, profile.row_sum_max),
                    (cube, cube),
                    "row sums must equal n³ on {}",
                    entry.canonical.hex()
                );
            }
        }
    }
    assert!(group_entries > 0);

    // (b) weight_report equality for every semiprime entry.
    let mut semiprime_entries = 0u64;
    for catalog in strict_catalogs_n3() {
        for entry in &catalog.entries {
            let ts = &entry.structure;
            if !radical(ts).is_semiprime {
                continue;
            }
            semiprime_entries += 1;
            let generators: Vec<Vec<Elem>> = if ts.carrier_size() >= 2 {
                vec![vec![1, 0], vec![0, 1]]
            } else {
                vec![vec![0, 0]]
            };
            let code = code_generate(ts, 2, &generators, DEFAULT_CODE_BUDGET).unwrap();
            let report = weight_report(ts, &code);
            assert!(report.projection_injective, "{}", entry.canonical.hex());
            assert!(report.holds, "{}", entry.canonical.hex());
        }
    }
    assert!(semiprime_entries > 0);

    // (c) path values agree with explicit triple enumeration on every
    // ≤3-vertex graph over the order-2 OR/AND structure.
    let bao = named(NamedKind::BooleanAndOr, 2);
    let mut graphs_checked = 0u64;
    for v in 1..=3usize {
        let cells = v * v;
        // each ordered pair: absent, weight 0, or weight 1
        let total = 3u64.pow(cells as u32);
        for code in 0..total {
            let mut edges = Vec::new();
            let mut rest = code;
            for s in 0..v {
                for t in 0..v {
                    let state = rest % 3;
                    rest /= 3;
                    if state > 0 {
                        edges.push((s, t, (state - 1) as Elem));
                    }
                }
            }
            let graph = WeightedGraph { vertices: v, edges };
            let matrices = ternary_path_values(&bao, "1", &graph, None).unwrap();
            assert!(matrices.stabilized);
            let sets = walk_weight_sets(&bao, &graph);
            for s in 0..v {
                for t in 0..v {
                    let set = sets[s][t];
                    // aggregate = join of all achievable walk weights
                    let expected_aggregate = if set == 0 {
                        None
                    } else {
                        Some((0..2 as Elem).filter(|w| set >> w & 1 == 1).fold(0, |acc, w| {
                            bao.add(acc, w)
                        }))
                    };
                    assert_eq!(matrices.aggregate[s][t], expected_aggregate);
                    // triple enumeration over achievable weights
                    let expected_path = if set == 0 {
                        None
                    } else {
                        let weights: Vec<Elem> =
                            (0..2 as Elem).filter(|w| set >> w & 1 == 1).collect();
                        let mut acc: Option<Elem> = None;
                        for &w1 in &weights {
                            for &w2 in &weights {
                                for &w3 in &weights {
                                    let v = bao.tern(0, w1, w2, w3);
                                    acc = Some(match acc {
                                        None => v,
                                        Some(a) => bao.add(a, v),
                                    });
                                }
                            }
                        }
                        acc
                    };
                    assert_eq!(
                        matrices.path_values[s][t], expected_path,
                        "graph #{code} with {v} vertices at ({s},{t})"
                    );
                }
            }
            graphs_checked += 1;
        }
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs() < 120, "took {elapsed:?}, budget 2 min");
    println!(
        "ACCEPTANCE 10 apps sanity: PASS ({group_entries} group-reduct entries, \
         {semiprime_entries} semiprime entries, {graphs_checked} graphs, zero failures, \
         {elapsed:?})"
    );
}
