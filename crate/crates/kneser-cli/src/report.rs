//! The versioned JSON report envelope.
//!
//! Every command emits one document embedding the tool version, the full
//! resolved parameters, the guard configuration (with any environment
//! override echoed), the input hash, and the command-specific payload.
//! Reports contain no wall-clock data; costs are reported as
//! deterministic search-node counts, so rerunning an identical
//! configuration reproduces the output byte for byte.

use serde::Serialize;
use sha2::{Digest, Sha256};

use kneser_core::{BuildStats, Guards, Hypergraph};

pub const SCHEMA: u32 = 1;
pub const TOOL: &str = "kneser";

/// The single documented environment variable for default guard
/// overrides, e.g. `KNESER_GUARDS=max-n=18,node-budget=1000000`.
pub const GUARDS_ENV_VAR: &str = "KNESER_GUARDS";

#[derive(Serialize)]
pub struct GuardsEcho {
    pub max_n: usize,
    pub max_alt_n: usize,
    pub max_kriz_n: usize,
    pub max_kg_vertices: usize,
    pub max_kg_edges: u64,
    pub node_budget: u64,
    /// Raw value of [`GUARDS_ENV_VAR`] when it was set.
    pub env_override: Option<String>,
    /// Always "ok" in an emitted report; a guard refusal aborts the run
    /// with exit code 3 before any report exists.
    pub status: &'static str,
}

impl GuardsEcho {
    pub fn new(g: &Guards, env_override: Option<String>) -> Self {
        GuardsEcho {
            max_n: g.max_n,
            max_alt_n: g.max_alt_n,
            max_kriz_n: g.max_kriz_n,
            max_kg_vertices: g.max_kg_vertices,
            max_kg_edges: g.max_kg_edges,
            node_budget: g.node_budget,
            env_override,
            status: "ok",
        }
    }
}

#[derive(Serialize)]
pub struct InputEcho {
    pub path: String,
    pub sha256: String,
    pub n: usize,
    pub edges: usize,
    pub duplicates_removed: usize,
}

impl InputEcho {
    pub fn new(path: &str, raw: &[u8], h: &Hypergraph, stats: &BuildStats) -> Self {
        InputEcho {
            path: path.to_string(),
            sha256: hex_digest(raw),
            n: h.n(),
            edges: h.edge_count(),
            duplicates_removed: stats.duplicates_removed,
        }
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub params: serde_json::Value,
    pub seed: u64,
    pub guards: GuardsEcho,
    pub input: Option<InputEcho>,
    pub result: serde_json::Value,
}

impl Report {
    pub fn new(
        command: impl Into<String>,
        params: serde_json::Value,
        seed: u64,
        guards: GuardsEcho,
        input: Option<InputEcho>,
        result: serde_json::Value,
    ) -> Self {
        Report {
            schema: SCHEMA,
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            params,
            seed,
            guards,
            input,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_is_stable() {
        assert_eq!(
            hex_digest(b"H 2 1\ne 1 2\n"),
            hex_digest(b"H 2 1\ne 1 2\n")
        );
        assert_ne!(hex_digest(b"a"), hex_digest(b"b"));
        assert_eq!(hex_digest(b"").len(), 64);
    }

    #[test]
    fn report_fields_in_declared_order() {
        let guards = GuardsEcho::new(&Guards::default(), None);
        let rep = Report::new(
            "compute cd",
            serde_json::json!({"r": 2}),
            0,
            guards,
            None,
            serde_json::json!({"value": 1}),
        );
        let text = rep.to_json();
        let schema_pos = text.find("\"schema\"").unwrap();
        let command_pos = text.find("\"command\"").unwrap();
        let result_pos = text.find("\"result\"").unwrap();
        assert!(schema_pos < command_pos && command_pos < result_pos);
    }
}
