//! Text reports for `check` and `trace`.
//!
//! Vertices are printed one-based with a side prefix, so id 0 of the left
//! graph is `v1` and id 4 of the right graph is `u5`.

use std::fmt::Write;

use anyhow::Result;
use isopos_core::positioning::format_levels;
use isopos_core::{
    decide_isomorphism, exact_isomorphism, extract_candidate_mapping, verify_mapping,
    AuxiliaryDigraph, Decision, FailureStage, Graph, VertexId,
};

pub fn label(prefix: char, v: VertexId) -> String {
    format!("{prefix}{}", v as u64 + 1)
}

/// `None` when the trace is incomplete; otherwise whether the pairing is an
/// isomorphism.
pub fn mapping_verified(g: &Graph, h: &Graph, d: &Decision) -> Result<Option<bool>> {
    match extract_candidate_mapping(&d.trace) {
        Ok(m) => Ok(Some(verify_mapping(g, h, m.as_permutation())?)),
        Err(_) => Ok(None),
    }
}

/// Verdict line, then the candidate-mapping line when the run completed, then
/// the oracle line when requested.
pub fn check_report(g: &Graph, h: &Graph, with_oracle: bool) -> Result<String> {
    let decision = decide_isomorphism(g, h)?;
    let mut out = format!("{}\n", decision.verdict);
    if let Some(ok) = mapping_verified(g, h, &decision)? {
        let status = if ok { "verified" } else { "not-verified" };
        writeln!(out, "candidate-mapping: {status}")?;
    }
    if with_oracle {
        let iso = g.vertex_count() == h.vertex_count() && exact_isomorphism(g, h)?.isomorphic;
        let oracle = if iso { "ISOMORPHIC" } else { "NOT_ISOMORPHIC" };
        writeln!(out, "oracle: {oracle}")?;
    }
    Ok(out)
}

fn write_digraph(out: &mut String, side: char, d: &AuxiliaryDigraph) -> std::fmt::Result {
    let tag = side.to_ascii_uppercase();
    let side_label = |v| label(side, v);
    write!(out, "{tag} levels:")?;
    for (k, line) in d.decomposition().levels().iter().enumerate() {
        let names: Vec<String> = line.iter().copied().map(side_label).collect();
        write!(out, " {k}:{{{}}}", names.join(","))?;
    }
    writeln!(out)?;
    for (&v, c) in d.characteristics() {
        let name = side_label(v);
        writeln!(
            out,
            "{tag} I_{name}={} O_{name}={}",
            format_levels(&c.input),
            format_levels(&c.output)
        )?;
    }
    Ok(())
}

/// Round-by-round replay of the decision with every characteristic table.
pub fn trace_report(g: &Graph, h: &Graph) -> Result<String> {
    let decision = decide_isomorphism(g, h)?;
    let mut out = String::new();
    let mut left = g.clone();
    let mut right = h.clone();
    for (i, &(v, u)) in decision.trace.rounds().iter().enumerate() {
        writeln!(out, "round {}: pivot {} matched {}", i + 1, label('v', v), label('u', u))?;
        write_digraph(&mut out, 'v', &AuxiliaryDigraph::build(&left, v)?)?;
        write_digraph(&mut out, 'u', &AuxiliaryDigraph::build(&right, u)?)?;
        left = left.remove_vertex(v)?;
        right = right.remove_vertex(u)?;
    }
    match decision.verdict.failure_stage() {
        Some(FailureStage::NoMatch { round, pivot }) => {
            writeln!(out, "round {round}: pivot {} unmatched", label('v', pivot))?;
            write_digraph(&mut out, 'v', &AuxiliaryDigraph::build(&left, pivot)?)?;
        }
        Some(FailureStage::DisconnectedIntermediate { round }) => {
            writeln!(out, "round {round}: disconnected-intermediate")?;
        }
        Some(FailureStage::Precheck) => writeln!(out, "precheck failed")?,
        None => {}
    }
    writeln!(out, "verdict: {}", decision.verdict)?;
    if let Some(ok) = mapping_verified(g, h, &decision)? {
        let status = if ok { "verified" } else { "not-verified" };
        writeln!(out, "candidate-mapping: {status}")?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use isopos_core::corpus::named_graph;

    #[test]
    fn k3_self_trace() {
        let k3 = named_graph("complete_3").unwrap();
        let report = trace_report(&k3, &k3).unwrap();
        assert!(report.contains("round 1: pivot v1 matched u1"));
        assert!(report.contains("round 3: pivot v3 matched u3"));
        assert!(!report.contains("round 4"));
        assert!(report.contains("V I_v2=(0,1) O_v2=(1)"));
        assert!(report.ends_with("verdict: HEURISTIC_ISOMORPHIC\ncandidate-mapping: verified\n"));
    }

    #[test]
    fn precheck_check_line() {
        let k3 = named_graph("complete_3").unwrap();
        let p3 = named_graph("path_3").unwrap();
        let report = check_report(&k3, &p3, true).unwrap();
        assert_eq!(report, "HEURISTIC_NOT_ISOMORPHIC (precheck)\noracle: NOT_ISOMORPHIC\n");
    }
}
