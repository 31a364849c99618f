//! DOT exports of Hasse diagrams for external rendering.

use crate::congruence::Congruence;
use crate::ideals::{IdealSet, LatticeReport};
use crate::spectrum::SpectrumReport;

pub fn format_ideal(set: &IdealSet) -> String {
    let elems: Vec<String> = set.elements().map(|e| e.to_string()).collect();
    format!("{{{}}}", elems.join(","))
}

pub fn format_congruence(c: &Congruence) -> String {
    let blocks: Vec<String> = c
        .blocks()
        .iter()
        .map(|b| {
            let elems: Vec<String> = b.iter().map(|e| e.to_string()).collect();
            format!("{{{}}}", elems.join(","))
        })
        .collect();
    format!("{{{}}}", blocks.join(""))
}

fn hasse_dot(name: &str, labels: &[String], covers: &[(usize, usize)]) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {name} {{\n"));
    out.push_str("  rankdir=BT;\n  node [shape=box];\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    for (lo, hi) in covers {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn ideal_lattice_dot(report: &LatticeReport<IdealSet>) -> String {
    let labels: Vec<String> = report.elements.iter().map(format_ideal).collect();
    hasse_dot("ideals", &labels, &report.covers())
}

pub fn congruence_lattice_dot(report: &LatticeReport<Congruence>) -> String {
    let labels: Vec<String> = report.elements.iter().map(format_congruence).collect();
    hasse_dot("congruences", &labels, &report.covers())
}

pub fn spectrum_dot(report: &SpectrumReport) -> String {
    let labels: Vec<String> = report.primes.iter().map(format_ideal).collect();
    hasse_dot("spectrum", &labels, &report.inclusion_covers)
}
