//! The ".hg" hypergraph text format and its JSON mirror.
//!
//! Ground format:
//!
//! ```text
//! # optional comments
//! H <n> <m>
//! e v1 v2 ... vk        (m lines, 1-based, strictly increasing)
//! ```
//!
//! The JSON mirror is `{"n": ..., "edges": [[...], ...]}`; files whose
//! first non-blank byte is `{` are parsed as JSON. Derived Kneser
//! hypergraphs serialize with the extended header
//! `K <vertex_count> <edge_count> r=<r>` and may repeat indices within an
//! edge line; they are output-only.

use serde::{Deserialize, Serialize};

use kneser_core::{BuildStats, Hypergraph, MultiHypergraph};

use crate::error::{parse_err, CliResult};

#[derive(Serialize, Deserialize)]
struct JsonMirror {
    n: usize,
    edges: Vec<Vec<usize>>,
}

pub fn parse_hypergraph(text: &str) -> CliResult<(Hypergraph, BuildStats)> {
    if text.trim_start().starts_with('{') {
        let mirror: JsonMirror =
            serde_json::from_str(text).map_err(|e| crate::error::CliError::Parse(e.to_string()))?;
        return build(mirror.n, &mirror.edges);
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = match lines.next() {
        Some(h) => h,
        None => return parse_err("empty input"),
    };
    let mut fields = header.split_whitespace();
    match fields.next() {
        Some("H") => {}
        Some("K") => {
            return parse_err(
                "K files are derived Kneser output; computations take ground hypergraphs",
            )
        }
        _ => return parse_err("expected header line `H <n> <m>`"),
    }
    let n: usize = match fields.next().map(str::parse) {
        Some(Ok(n)) => n,
        _ => return parse_err("bad vertex count in header"),
    };
    let m: usize = match fields.next().map(str::parse) {
        Some(Ok(m)) => m,
        _ => return parse_err("bad edge count in header"),
    };
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut fields = line.split_whitespace();
        if fields.next() != Some("e") {
            return parse_err(format!("expected edge line `e v1 v2 ...`, got `{line}`"));
        }
        let mut edge = Vec::new();
        for f in fields {
            let v: usize = f
                .parse()
                .map_err(|_| crate::error::CliError::Parse(format!("bad vertex id `{f}`")))?;
            if let Some(&last) = edge.last() {
                if v <= last {
                    return parse_err(format!("edge vertices must be strictly increasing: {line}"));
                }
            }
            edge.push(v);
        }
        if edge.is_empty() {
            return parse_err("empty edge line");
        }
        edges.push(edge);
    }
    if edges.len() != m {
        return parse_err(format!(
            "header declares {m} edges, found {}",
            edges.len()
        ));
    }
    build(n, &edges)
}

fn build(n: usize, edges: &[Vec<usize>]) -> CliResult<(Hypergraph, BuildStats)> {
    for e in edges {
        for &v in e {
            if v < 1 || v > n {
                return parse_err(format!("vertex {v} outside 1..={n}"));
            }
        }
    }
    let masks = edges
        .iter()
        .map(|e| kneser_core::VSet::from_vertices(e.iter().copied()))
        .collect();
    Ok(Hypergraph::with_stats(n, masks)?)
}

pub fn write_hg(h: &Hypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!("H {} {}\n", h.n(), h.edge_count()));
    for e in h.edges() {
        out.push('e');
        for v in e.iter() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

pub fn write_json(h: &Hypergraph) -> String {
    let mirror = JsonMirror {
        n: h.n(),
        edges: h.edges().iter().map(|e| e.vertices()).collect(),
    };
    let mut s = serde_json::to_string_pretty(&mirror).expect("serialization cannot fail");
    s.push('\n');
    s
}

pub fn write_kneser_hg(kg: &MultiHypergraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "# s = {}\n",
        kg.s()
            .entries()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    ));
    out.push_str(&format!(
        "K {} {} r={}\n",
        kg.vertex_count(),
        kg.edge_count(),
        kg.r()
    ));
    for e in kg.edges() {
        out.push('e');
        for v in e {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

/// The vertex-index → ground-edge table emitted under `--map`.
pub fn kneser_map_json(kg: &MultiHypergraph) -> serde_json::Value {
    let map: Vec<Vec<usize>> = (1..=kg.vertex_count())
        .map(|i| kg.ground_edge(i).vertices())
        .collect();
    serde_json::json!({ "vertex_to_ground_edge": map })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let text = "# a comment\n\nH 4 2\ne 1 2\ne 2 3 4\n";
        let (h, stats) = parse_hypergraph(text).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(stats.duplicates_removed, 0);
        let (again, _) = parse_hypergraph(&write_hg(&h)).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn round_trip_json() {
        let text = r#"{"n": 3, "edges": [[1,2],[1,2],[2,3]]}"#;
        let (h, stats) = parse_hypergraph(text).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(stats.duplicates_removed, 1);
        let (again, _) = parse_hypergraph(&write_json(&h)).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_hypergraph("").is_err());
        assert!(parse_hypergraph("H 2").is_err());
        assert!(parse_hypergraph("H 2 1\ne 2 1\n").is_err()); // not increasing
        assert!(parse_hypergraph("H 2 1\ne 1 3\n").is_err()); // out of range
        assert!(parse_hypergraph("H 2 2\ne 1 2\n").is_err()); // count mismatch
        assert!(parse_hypergraph("K 2 0 r=2\n").is_err()); // derived files are output-only
    }

    #[test]
    fn kneser_output_has_extended_header() {
        let h = Hypergraph::from_vertex_lists(4, &[vec![1, 2], vec![3, 4], vec![1, 3]]).unwrap();
        let kg =
            kneser_core::build_kneser(&h, 2, &kneser_core::Guards::default()).unwrap();
        // only {1,2} and {3,4} are disjoint
        let text = write_kneser_hg(&kg);
        assert!(text.contains("K 3 1 r=2"), "{text}");
        assert!(text.contains("# s = 1,1,1,1"));
    }
}
