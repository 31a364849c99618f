//! `tgs analyze`: dispatch one analyzer over a loaded structure and print
//! its JSON report.

use std::path::{Path, PathBuf};

use clap::ValueEnum;
use serde_json::json;

use tgs_core::apps::{
    check_code, code_generate, fuzzy_from_chain, fuzzy_ideal_check, parse_grade,
    sbox_lift_report, ternary_path_values, weight_report, CheckOperator, FuzzyIdeal,
    WeightedGraph,
};
use tgs_core::congruence::{all_congruences, correspondence_report};
use tgs_core::decomposition::{
    classify_pattern, is_subdirectly_irreducible, subdirect_decomposition, SubdirectStrategy,
    wedderburn_check,
};
use tgs_core::dot::{congruence_lattice_dot, ideal_lattice_dot, spectrum_dot};
use tgs_core::error::Error;
use tgs_core::fileio::load_structure;
use tgs_core::hom::Homomorphism;
use tgs_core::ideals::{all_ideals, lattice_shape, IdealSet};
use tgs_core::radical::{
    cancellation_check, find_identities, invariant_tuple, nilpotents, rad_nil_report, radical,
    NilDefinition,
};
use tgs_core::spectrum::{
    contract_primes, dimension_audit, prime_avoidance_check, spec_closed_sets, AvoidanceVariant,
};
use tgs_core::structure::{Elem, TernaryGammaSemiring};

use crate::{exit_code_for, write_or_print, OutputFormat};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Ideals,
    Radical,
    Decompose,
    Spectrum,
    Code,
    Sbox,
    Fuzzy,
    Paths,
}

pub struct Args {
    pub file: PathBuf,
    pub what: What,
    pub dot_ideals: Option<PathBuf>,
    pub dot_congruences: Option<PathBuf>,
    pub dot: Option<PathBuf>,
    pub target: Option<PathBuf>,
    pub map: Option<String>,
    pub nil_mode: String,
    pub length: Option<usize>,
    pub generators: Option<String>,
    pub checks: Option<String>,
    pub budget: u64,
    pub gamma: Option<String>,
    pub csv: Option<PathBuf>,
    pub grades: Option<String>,
    pub chain: Option<String>,
    pub graph: Option<PathBuf>,
    pub horizon: Option<usize>,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

fn fail(e: Error) -> u8 {
    eprintln!("error: {e}");
    exit_code_for(&e)
}

fn input_error(message: String) -> u8 {
    eprintln!("error: {message}");
    2
}

fn parse_vector(s: &str) -> Result<Vec<Elem>, u8> {
    s.split(',')
        .map(|p| p.trim().parse::<Elem>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| input_error(format!("bad vector `{s}` (expected comma-separated elements)")))
}

fn parse_vectors(s: &str) -> Result<Vec<Vec<Elem>>, u8> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(parse_vector).collect()
}

fn parse_checks(s: &str) -> Result<Vec<CheckOperator>, u8> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|part| {
            let pieces: Vec<&str> = part.split(':').collect();
            if pieces.len() != 3 {
                return Err(input_error(format!(
                    "bad check `{part}` (expected gamma:u_vector:v_vector)"
                )));
            }
            Ok(CheckOperator {
                gamma: pieces[0].trim().to_string(),
                u: parse_vector(pieces[1])?,
                v: parse_vector(pieces[2])?,
            })
        })
        .collect()
}

fn default_gamma(ts: &TernaryGammaSemiring, flag: &Option<String>) -> String {
    flag.clone().unwrap_or_else(|| ts.gamma()[0].clone())
}

fn write_dot(path: &Option<PathBuf>, content: String) -> Result<(), u8> {
    if let Some(path) = path {
        std::fs::write(path, content)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

pub fn run(args: Args) -> Result<(), u8> {
    let ts = load_structure(&args.file).map_err(fail)?;
    let report = match args.what {
        What::Ideals => ideals_report(&ts, &args)?,
        What::Radical => radical_report(&ts, &args)?,
        What::Decompose => decompose_report(&ts)?,
        What::Spectrum => spectrum_report(&ts, &args)?,
        What::Code => code_report(&ts, &args)?,
        What::Sbox => sbox_report(&ts, &args)?,
        What::Fuzzy => fuzzy_report(&ts, &args)?,
        What::Paths => paths_report(&ts, &args)?,
    };
    let rendered = match args.format {
        OutputFormat::Pretty => serde_json::to_string_pretty(&report),
        OutputFormat::Json => serde_json::to_string(&report),
    }
    .expect("reports serialize");
    write_or_print(&args.out, &rendered)
}

fn ideals_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let ideal_lattice = all_ideals(ts);
    let congruence_lattice = all_congruences(ts);
    write_dot(&args.dot_ideals, ideal_lattice_dot(&ideal_lattice))?;
    write_dot(&args.dot_congruences, congruence_lattice_dot(&congruence_lattice))?;
    let correspondence = correspondence_report(ts);
    Ok(json!({
        "ideal_lattice": ideal_lattice,
        "ideal_lattice_shape": lattice_shape(&ideal_lattice).label(),
        "congruence_lattice": congruence_lattice,
        "correspondence": correspondence,
    }))
}

fn radical_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let defn = NilDefinition::parse(&args.nil_mode).map_err(fail)?;
    let rad = radical(ts);
    Ok(json!({
        "primes": rad.primes,
        "radical": rad.radical,
        "is_semiprime": rad.is_semiprime,
        "nilpotents": {
            "weak": nilpotents(ts, NilDefinition::Weak),
            "literal": nilpotents(ts, NilDefinition::Literal),
            "power": nilpotents(ts, NilDefinition::Power),
        },
        "rad_nil": rad_nil_report(ts, defn),
        "cancellation": cancellation_check(ts).map_err(fail)?,
        "identities": find_identities(ts),
        "invariant_tuple": invariant_tuple(ts),
    }))
}

fn decompose_report(ts: &TernaryGammaSemiring) -> Result<serde_json::Value, u8> {
    let si = is_subdirectly_irreducible(ts);
    let maximal =
        subdirect_decomposition(ts, SubdirectStrategy::MaximalCongruences).map_err(fail)?;
    let meet_irreducible =
        subdirect_decomposition(ts, SubdirectStrategy::MeetIrreducible).map_err(fail)?;
    Ok(json!({
        "subdirectly_irreducible": si,
        "maximal_congruence_decomposition": maximal,
        "meet_irreducible_decomposition": meet_irreducible,
        "wedderburn": wedderburn_check(ts),
        "pattern": classify_pattern(ts),
    }))
}

fn spectrum_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let spectrum = spec_closed_sets(ts);
    write_dot(&args.dot, spectrum_dot(&spectrum))?;
    let contraction = match (&args.target, &args.map) {
        (Some(target), Some(map)) => {
            let target = load_structure(target).map_err(fail)?;
            let map = parse_vector(map)?;
            let hom = Homomorphism { source: ts.clone(), target, map };
            Some(contract_primes(&hom).map_err(fail)?)
        }
        (None, None) => None,
        _ => {
            return Err(input_error(
                "--target and --map must be given together".into(),
            ))
        }
    };
    Ok(json!({
        "spectrum": spectrum,
        "dimension_audit": dimension_audit(ts),
        "prime_avoidance": {
            "union": prime_avoidance_check(ts, AvoidanceVariant::Union),
            "intersection_as_printed":
                prime_avoidance_check(ts, AvoidanceVariant::IntersectionAsPrinted),
        },
        "contraction": contraction,
    }))
}

fn code_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let length = args
        .length
        .ok_or_else(|| input_error("--what code needs --length".into()))?;
    let checks = match &args.checks {
        Some(s) => Some(parse_checks(s)?),
        None => None,
    };
    let mut report = serde_json::Map::new();
    if let Some(gens) = &args.generators {
        let generators = parse_vectors(gens)?;
        let code = code_generate(ts, length, &generators, args.budget).map_err(fail)?;
        report.insert("weights".into(), json!(weight_report(ts, &code)));
        report.insert("code".into(), json!(code));
    }
    if let Some(checks) = checks {
        let syndrome = check_code(ts, length, &checks, args.budget).map_err(fail)?;
        report.insert("check_code".into(), json!(syndrome));
    }
    if report.is_empty() {
        return Err(input_error(
            "--what code needs --generators and/or --checks".into(),
        ));
    }
    Ok(report.into())
}

fn sbox_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let gamma = default_gamma(ts, &args.gamma);
    let lift = sbox_lift_report(ts, &gamma).map_err(fail)?;
    if let Some(path) = &args.csv {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record(["a", "b", "c", "d", "count"])
            .expect("in-memory CSV");
        let n = lift.base.n as Elem;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        writer
                            .write_record([
                                a.to_string(),
                                b.to_string(),
                                c.to_string(),
                                d.to_string(),
                                lift.base.entry(a, b, c, d).to_string(),
                            ])
                            .expect("in-memory CSV");
                    }
                }
            }
        }
        let bytes = writer.into_inner().expect("in-memory CSV flush");
        std::fs::write(path, bytes)
            .map_err(|e| input_error(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(json!(lift))
}

fn fuzzy_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    match (&args.grades, &args.chain) {
        (Some(grades), None) => {
            let grades = grades
                .split(',')
                .map(|g| parse_grade(g).map_err(fail))
                .collect::<Result<Vec<_>, u8>>()?;
            let mu = FuzzyIdeal::new(ts.carrier_size(), grades).map_err(fail)?;
            Ok(json!(fuzzy_ideal_check(ts, &mu)))
        }
        (None, Some(chain)) => {
            let pairs = chain
                .split(';')
                .filter(|p| !p.trim().is_empty())
                .map(|part| {
                    let (grade, mask) = part.split_once(':').ok_or_else(|| {
                        input_error(format!("bad chain item `{part}` (expected grade:hexmask)"))
                    })?;
                    let grade = parse_grade(grade).map_err(fail)?;
                    let mask = mask.trim().strip_prefix("0x").unwrap_or(mask.trim());
                    let bits = u64::from_str_radix(mask, 16).map_err(|_| {
                        input_error(format!("bad hex mask in `{part}`"))
                    })?;
                    Ok((grade, IdealSet::from_bits(bits)))
                })
                .collect::<Result<Vec<_>, u8>>()?;
            let (mu, report) = fuzzy_from_chain(ts, &pairs).map_err(fail)?;
            let grades: Vec<String> = mu
                .grades()
                .iter()
                .map(tgs_core::apps::grade_to_string)
                .collect();
            Ok(json!({ "reconstructed_grades": grades, "report": report }))
        }
        _ => Err(input_error("--what fuzzy needs exactly one of --grades or --chain".into())),
    }
}

fn paths_report(ts: &TernaryGammaSemiring, args: &Args) -> Result<serde_json::Value, u8> {
    let graph_path: &Path = args
        .graph
        .as_deref()
        .ok_or_else(|| input_error("--what paths needs --graph".into()))?;
    let text = std::fs::read_to_string(graph_path)
        .map_err(|e| input_error(format!("cannot read {}: {e}", graph_path.display())))?;
    let graph = WeightedGraph::parse(&text).map_err(fail)?;
    let gamma = default_gamma(ts, &args.gamma);
    let matrices = ternary_path_values(ts, &gamma, &graph, args.horizon).map_err(fail)?;
    Ok(json!({ "graph": graph, "gamma": gamma, "matrices": matrices }))
}
