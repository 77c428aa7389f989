//! Report emission: JSON, CSV and plain text for the CLI subcommands.
//!
//! JSON bodies are schema-stable and byte-deterministic for a fixed run
//! configuration; `elapsed_ms` is the only field excluded from that
//! guarantee. CSV degree columns print Z^m degrees with components joined by
//! `:` so the documented headers round-trip without quoting.

use crate::grading::Degree;
use crate::parity::{SpectrumReport, TangentReport};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Serialize)]
pub struct DimCount {
    pub dim: u64,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumParams {
    pub vars: usize,
    pub rank: usize,
    pub points: u64,
    pub characteristic: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumJson {
    pub params: SpectrumParams,
    pub values: Vec<DimCount>,
    pub total: u64,
    pub elapsed_ms: u64,
}

pub fn degree_str(j: &Degree) -> String {
    j.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(":")
}

pub fn spectrum_output(s: &SpectrumReport, characteristic: u64, elapsed_ms: u64, format: Format) -> String {
    match format {
        Format::Json => {
            let body = SpectrumJson {
                params: SpectrumParams {
                    vars: s.nvars,
                    rank: s.rank,
                    points: s.colength,
                    characteristic,
                },
                values: s
                    .values
                    .iter()
                    .map(|&(dim, multiplicity)| DimCount { dim, multiplicity })
                    .collect(),
                total: s.total,
                elapsed_ms,
            };
            serde_json::to_string_pretty(&body).unwrap()
        }
        Format::Csv => {
            let mut out = String::from("dim,multiplicity\n");
            for (d, m) in &s.values {
                out.push_str(&format!("{d},{m}\n"));
            }
            out
        }
        Format::Text => {
            let dims: Vec<String> = s.values.iter().map(|(d, _)| d.to_string()).collect();
            let mut out = format!(
                "tangent dimension spectrum: vars {}, rank {}, points {} ({} monomial points)\n",
                s.nvars, s.rank, s.colength, s.total
            );
            out.push_str(&format!("distinct dimensions: {}\n", dims.join(", ")));
            for (d, m) in &s.values {
                out.push_str(&format!("  dim {d}: {m} points\n"));
            }
            out
        }
    }
}

pub fn tangent_output(r: &TangentReport, characteristic: u64, elapsed_ms: u64, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "params": {
                "vars": r.nvars,
                "rank": r.rank,
                "characteristic": characteristic,
                "input": r.input,
            },
            "points": r.colength,
            "dim": r.dim,
            "parity_ok": r.parity_ok,
            "elapsed_ms": elapsed_ms,
        }))
        .unwrap(),
        Format::Csv => format!(
            "vars,rank,points,dim,parity_ok\n{},{},{},{},{}\n",
            r.nvars, r.rank, r.colength, r.dim, r.parity_ok
        ),
        Format::Text => format!(
            "hom(K, M) = {} for a colength-{} submodule (rank {}, {} vars); parity_ok: {}\n",
            r.dim, r.colength, r.rank, r.nvars, r.parity_ok
        ),
    }
}

pub fn ext_table_output(
    table: &crate::ext::ExtTable,
    characteristic: u64,
    elapsed_ms: u64,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = table
                .iter()
                .map(|(i, j, v)| json!({ "i": i, "degree": j, "dim": v }))
                .collect();
            serde_json::to_string_pretty(&json!({
                "params": { "characteristic": characteristic },
                "entries": entries,
                "elapsed_ms": elapsed_ms,
            }))
            .unwrap()
        }
        Format::Csv => {
            let mut out = String::from("i,j,dim\n");
            for (i, j, v) in table.iter() {
                out.push_str(&format!("{},{},{}\n", i, degree_str(j), v));
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for i in 0..=table.nvars {
                let total = table.total(i);
                if total == 0 {
                    continue;
                }
                out.push_str(&format!("ext^{i}: total {total}\n"));
                for j in table.degrees_in_row(i) {
                    out.push_str(&format!("  degree {}: {}\n", degree_str(&j), table.dim(i, &j)));
                }
            }
            out
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub params: serde_json::Value,
    pub trials: u64,
    pub failures: u64,
    pub ok: bool,
    pub elapsed_ms: u64,
}

pub fn verify_output(v: &VerifyJson, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).unwrap(),
        Format::Csv => format!("trials,failures,ok\n{},{},{}\n", v.trials, v.failures, v.ok),
        Format::Text => format!(
            "verify: {} trials, {} failures -> {}\n",
            v.trials,
            v.failures,
            if v.ok { "ok" } else { "FAILED" }
        ),
    }
}
