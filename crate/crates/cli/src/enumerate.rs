//! `tgs enumerate`: run the sweep, write the catalog, and record the run
//! manifest (parameters, wall-clock per phase, explored-node counts, and
//! output digests).

use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;
use sha2::{Digest, Sha256};

use tgs_core::enumeration::{enumerate_structures, Bounds, EnumerationParams};
use tgs_core::fileio::save_catalog;

use crate::{exit_code_for, parse_mode};

pub struct Args {
    pub order: usize,
    pub gamma_size: usize,
    pub axiom_mode: String,
    pub permute_gamma: bool,
    pub jobs: Option<usize>,
    pub max_order: usize,
    pub max_gamma_size: usize,
    pub out: PathBuf,
}

#[derive(Serialize)]
struct ManifestParameters {
    order: usize,
    gamma_size: usize,
    axiom_mode: String,
    permute_gamma: bool,
    jobs: usize,
    max_order: usize,
    max_gamma_size: usize,
}

#[derive(Serialize)]
struct PhaseTiming {
    phase: String,
    seconds: f64,
}

#[derive(Serialize)]
struct OutputDigest {
    path: String,
    sha256: String,
    bytes: u64,
}

/// Everything needed to reproduce and verify a sweep: identical parameters
/// and tool version must reproduce identical output digests.
#[derive(Serialize)]
struct RunManifest {
    tool_version: String,
    command: String,
    parameters: ManifestParameters,
    phases: Vec<PhaseTiming>,
    additive_reducts: usize,
    explored_nodes: u64,
    candidates_checked: u64,
    entry_count: usize,
    outputs: Vec<OutputDigest>,
}

pub fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| {
            std::env::var("TGS_JOBS").ok().and_then(|v| v.parse().ok())
        })
        .filter(|&j| j >= 1)
        .unwrap_or(1)
}

pub fn run(args: Args) -> Result<(), u8> {
    let mode = parse_mode(&args.axiom_mode)?;
    let jobs = resolve_jobs(args.jobs);
    let params = EnumerationParams {
        n: args.order,
        m: args.gamma_size,
        mode,
        permute_gamma: args.permute_gamma,
        jobs,
        bounds: Bounds { max_order: args.max_order, max_gamma: args.max_gamma_size },
    };

    let search_started = Instant::now();
    let catalog = enumerate_structures(&params).map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })?;
    let search_seconds = search_started.elapsed().as_secs_f64();

    let write_started = Instant::now();
    save_catalog(&args.out, &catalog).map_err(|e| {
        eprintln!("error: {e}");
        exit_code_for(&e)
    })?;
    let write_seconds = write_started.elapsed().as_secs_f64();

    let bytes = std::fs::read(&args.out).map_err(|e| {
        eprintln!("error: {e}");
        2u8
    })?;
    let digest: String = Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect();
    let manifest = RunManifest {
        tool_version: env!("CARGO_PKG_VERSION").into(),
        command: "enumerate".into(),
        parameters: ManifestParameters {
            order: args.order,
            gamma_size: args.gamma_size,
            axiom_mode: mode.name(),
            permute_gamma: args.permute_gamma,
            jobs,
            max_order: args.max_order,
            max_gamma_size: args.max_gamma_size,
        },
        phases: vec![
            PhaseTiming { phase: "search".into(), seconds: search_seconds },
            PhaseTiming { phase: "write".into(), seconds: write_seconds },
        ],
        additive_reducts: catalog.stats.additive_reducts,
        explored_nodes: catalog.stats.nodes_explored,
        candidates_checked: catalog.stats.candidates_checked,
        entry_count: catalog.entries.len(),
        outputs: vec![OutputDigest {
            path: args.out.display().to_string(),
            sha256: digest,
            bytes: bytes.len() as u64,
        }],
    };
    let manifest_path = manifest_path_for(&args.out);
    std::fs::write(
        &manifest_path,
        serde_json::to_string_pretty(&manifest).expect("manifest serializes") + "\n",
    )
    .map_err(|e| {
        eprintln!("error: cannot write {}: {e}", manifest_path.display());
        2u8
    })?;
    eprintln!(
        "wrote {} entries to {} (manifest: {})",
        catalog.entries.len(),
        args.out.display(),
        manifest_path.display()
    );
    Ok(())
}

pub fn manifest_path_for(out: &std::path::Path) -> PathBuf {
    let mut name = out.file_name().unwrap_or_default().to_os_string();
    name.push(".manifest.json");
    out.with_file_name(name)
}
