//! `tgs check`: load, verify, report, and exit 0/1/2.

use std::path::Path;

use tgs_core::axioms::{check_axioms_with, AxiomReport, AxiomWitness};
use tgs_core::fileio::load_structure;
use tgs_core::structure::TernaryGammaSemiring;

use crate::{exit_code_for, parse_mode};

fn slot_args(slot: u8, x: String, c: u8, d: u8) -> [String; 3] {
    match slot {
        0 => [x, c.to_string(), d.to_string()],
        1 => [c.to_string(), x, d.to_string()],
        _ => [c.to_string(), d.to_string(), x],
    }
}

fn render_witness(ts: &TernaryGammaSemiring, w: &AxiomWitness) -> String {
    let label = |g: usize| ts.gamma()[g].clone();
    match w {
        AxiomWitness::AddAssociativity { a, b, c, lhs, rhs } => {
            format!("({a}+{b})+{c} = {lhs} but {a}+({b}+{c}) = {rhs}")
        }
        AxiomWitness::AddCommutativity { a, b, lhs, rhs } => {
            format!("{a}+{b} = {lhs} but {b}+{a} = {rhs}")
        }
        AxiomWitness::AddIdentity { a, lhs, .. } => format!("0+{a} = {lhs}, expected {a}"),
        AxiomWitness::Distributivity { gamma, slot, a, b, c, d, lhs, rhs } => {
            let args = slot_args(*slot, format!("{a}+{b}"), *c, *d);
            format!(
                "{{{},{},{}}}_{} = {lhs} but the sum of products is {rhs}",
                args[0], args[1], args[2], label(*gamma)
            )
        }
        AxiomWitness::Absorption { gamma, slot, a, b, lhs, .. } => {
            let args = slot_args(*slot, "0".into(), *a, *b);
            format!(
                "{{{},{},{}}}_{} = {lhs}, expected 0",
                args[0], args[1], args[2], label(*gamma)
            )
        }
        AxiomWitness::Associativity { alpha, beta, a, b, c, d, e, lhs, rhs } => format!(
            "{{{{{a},{b},{c}}}_{},{d},{e}}}_{} = {lhs} but {{{a},{b},{{{c},{d},{e}}}_{}}}_{} = {rhs}",
            label(*alpha), label(*beta), label(*beta), label(*alpha)
        ),
        AxiomWitness::Symmetry { gamma, a, b, c, perm, lhs, rhs } => format!(
            "{{{a},{b},{c}}}_{} = {lhs} but {{{},{},{}}}_{} = {rhs}",
            label(*gamma), perm[0], perm[1], perm[2], label(*gamma)
        ),
    }
}

fn render_text(ts: &TernaryGammaSemiring, report: &AxiomReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("axiom mode: {}\n", report.mode));
    for check in &report.checks {
        if check.passed() {
            out.push_str(&format!("{}: pass\n", check.axiom));
        } else {
            out.push_str(&format!("{}: FAIL ({} violations)\n", check.axiom, check.violations));
            for w in &check.witnesses {
                out.push_str(&format!("  witness: {}\n", render_witness(ts, w)));
            }
        }
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if report.all_pass() { "pass" } else { "FAIL" }
    ));
    out
}

pub fn run(file: &Path, axiom_mode: &str, max_witnesses: usize, format: &str) -> Result<(), u8> {
    let mode = parse_mode(axiom_mode)?;
    let ts = load_structure(file).map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })?;
    let report = check_axioms_with(&ts, mode, max_witnesses);
    match format {
        "json" => println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        ),
        _ => print!("{}", render_text(&ts, &report)),
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(1)
    }
}
