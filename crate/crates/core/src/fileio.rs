//! On-disk formats: the structure JSON file and the JSON-Lines catalog.
//!
//! Structure files look like
//! `{"n": 2, "gamma": ["1"], "add": [[0,1],[1,1]], "ops": {"1": [0,...]}}`
//! with each tensor flat in row-major a·n² + b·n + c order. The loader
//! validates ranges and the identity-at-zero normalization.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::enumeration::{Catalog, CatalogEntry, EnumerationStats};
use crate::error::{Error, Result};
use crate::structure::{Elem, TernaryGammaSemiring};

#[derive(Serialize, Deserialize)]
struct StructureDto {
    n: usize,
    gamma: Vec<String>,
    add: Vec<Vec<u32>>,
    ops: BTreeMap<String, Vec<u32>>,
}

impl Serialize for TernaryGammaSemiring {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let n = self.carrier_size();
        let add = (0..n)
            .map(|a| (0..n).map(|b| self.add(a as Elem, b as Elem) as u32).collect())
            .collect();
        let ops = self
            .gamma()
            .iter()
            .enumerate()
            .map(|(gi, label)| {
                (label.clone(), self.op_tensor(gi).iter().map(|&v| v as u32).collect())
            })
            .collect();
        StructureDto { n, gamma: self.gamma().to_vec(), add, ops }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for TernaryGammaSemiring {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let dto = StructureDto::deserialize(d)?;
        structure_from_dto(dto).map_err(D::Error::custom)
    }
}

fn structure_from_dto(dto: StructureDto) -> Result<TernaryGammaSemiring> {
    let n = dto.n;
    let range_check = |v: u32, table: &str, index: usize| -> Result<Elem> {
        if (v as usize) < n {
            Ok(v as Elem)
        } else {
            Err(Error::EntryRange { table: table.into(), index, value: v as usize, n })
        }
    };
    if dto.add.len() != n {
        return Err(Error::TableShape { table: "add".into(), expected: n, got: dto.add.len() });
    }
    let mut add = Vec::with_capacity(n * n);
    for (r, row) in dto.add.iter().enumerate() {
        if row.len() != n {
            return Err(Error::TableShape {
                table: format!("add row {r}"),
                expected: n,
                got: row.len(),
            });
        }
        for (i, &v) in row.iter().enumerate() {
            add.push(range_check(v, "add", r * n + i)?);
        }
    }
    if dto.ops.len() != dto.gamma.len() {
        return Err(Error::TableShape {
            table: "ops".into(),
            expected: dto.gamma.len(),
            got: dto.ops.len(),
        });
    }
    let mut ops = Vec::with_capacity(dto.gamma.len());
    for label in &dto.gamma {
        let flat = dto.ops.get(label).ok_or_else(|| Error::UnknownGamma(label.clone()))?;
        let mut tensor = Vec::with_capacity(n * n * n);
        for (i, &v) in flat.iter().enumerate() {
            tensor.push(range_check(v, &format!("ops[{label}]"), i)?);
        }
        ops.push(tensor);
    }
    TernaryGammaSemiring::new(n, dto.gamma, add, ops)
}

pub fn structure_to_json(ts: &TernaryGammaSemiring) -> String {
    serde_json::to_string_pretty(ts).expect("structure serialization is infallible")
}

pub fn save_structure(path: &Path, ts: &TernaryGammaSemiring) -> Result<()> {
    fs::write(path, structure_to_json(ts) + "\n")?;
    Ok(())
}

pub fn load_structure(path: &Path) -> Result<TernaryGammaSemiring> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// First line of a catalog file: parameters and tool version.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogHeader {
    pub kind: String,
    pub version: String,
    pub n: usize,
    pub m: usize,
    pub axiom_mode: crate::axioms::AxiomMode,
    pub permute_gamma: bool,
    pub entry_count: usize,
    pub stats: EnumerationStats,
}

pub const CATALOG_KIND: &str = "tgs-catalog";

/// One entry per line, sorted by canonical bytes, after a header line.
pub fn write_catalog<W: Write>(mut w: W, catalog: &Catalog) -> Result<()> {
    let header = CatalogHeader {
        kind: CATALOG_KIND.into(),
        version: env!("CARGO_PKG_VERSION").into(),
        n: catalog.n,
        m: catalog.m,
        axiom_mode: catalog.mode,
        permute_gamma: catalog.permute_gamma,
        entry_count: catalog.entries.len(),
        stats: catalog.stats,
    };
    writeln!(w, "{}", serde_json::to_string(&header)?)?;
    for entry in &catalog.entries {
        writeln!(w, "{}", serde_json::to_string(entry)?)?;
    }
    Ok(())
}

pub fn read_catalog<R: BufRead>(r: R) -> Result<Catalog> {
    let mut lines = r.lines();
    let header_line = lines
        .next()
        .ok_or_else(|| Error::Parse { what: "catalog".into(), message: "empty file".into() })??;
    let header: CatalogHeader = serde_json::from_str(&header_line)?;
    if header.kind != CATALOG_KIND {
        return Err(Error::Parse {
            what: "catalog".into(),
            message: format!("unexpected kind `{}`", header.kind),
        });
    }
    let mut entries: Vec<CatalogEntry> = Vec::with_capacity(header.entry_count);
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        entries.push(serde_json::from_str(&line)?);
    }
    if entries.len() != header.entry_count {
        return Err(Error::Parse {
            what: "catalog".into(),
            message: format!(
                "header claims {} entries, found {}",
                header.entry_count,
                entries.len()
            ),
        });
    }
    Ok(Catalog {
        n: header.n,
        m: header.m,
        mode: header.axiom_mode,
        permute_gamma: header.permute_gamma,
        stats: header.stats,
        entries,
    })
}

pub fn save_catalog(path: &Path, catalog: &Catalog) -> Result<()> {
    let mut buf = Vec::new();
    write_catalog(&mut buf, catalog)?;
    fs::write(path, buf)?;
    Ok(())
}

pub fn load_catalog(path: &Path) -> Result<Catalog> {
    let file = fs::File::open(path)?;
    read_catalog(std::io::BufReader::new(file))
}
