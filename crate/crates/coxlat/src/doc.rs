//! Serializable poset documents and their DOT / JSON renderings.
//!
//! Exact numbers are serialized as strings (`p/q`, `(p/q)+(r/s)√5`),
//! never as floats; both renderings are deterministic byte-for-byte.

use crate::bitset::GenSet;
use crate::coset::CoxeterComplex;
use crate::error::{Error, Result};
use crate::facial::FacialLattice;
use crate::facial_congruence::{fan_cones, FacialCongruence, QuotientLattice};
use crate::names::format_word_compact;
use crate::system::CoxeterSystem;
use serde::{Deserialize, Serialize};

pub const POSET_SCHEMA: &str = "coxlat-poset/1";
pub const FAN_SCHEMA: &str = "coxlat-fan/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetDocument {
    pub schema: String,
    pub metadata: DocMetadata,
    pub nodes: Vec<DocNode>,
    pub edges: Vec<DocEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocMetadata {
    /// Coxeter matrix in the plain text format.
    pub system: String,
    pub group_order: usize,
    pub positive_roots: usize,
    pub cosets: usize,
    /// Congruence description, e.g. `descent` or `cambrian:s,r,t`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub congruence: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocNode {
    pub id: usize,
    pub label: String,
    /// `coset` or `class`.
    pub kind: String,
    /// Canonical reduced word of the minimal representative.
    pub min_word: String,
    /// Generator names of the parabolic part.
    pub generators: String,
    /// Canonical reduced word of the maximal element.
    pub top_word: String,
    /// `|R ∩ Φ+|`.
    pub positive_root_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocEdge {
    pub from: usize,
    pub to: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cover_type: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanDocument {
    pub schema: String,
    pub metadata: DocMetadata,
    pub cones: Vec<DocCone>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocCone {
    pub class: usize,
    pub dim: usize,
    /// Generator matrix, one weight vector per row, exact coordinates.
    pub generators: Vec<Vec<String>>,
}

/// Label such as `tsrW{st}`.
pub fn coset_label(system: &CoxeterSystem, complex: &CoxeterComplex, idx: usize) -> String {
    let record = complex.record(idx);
    let n = system.rank();
    let word = format_word_compact(n, &complex.group().element(record.x).reduced_word(system));
    let gens: String =
        record.i_set.iter().map(|s| crate::names::generator_name(n, s)).collect();
    format!("{word}W{{{gens}}}")
}

fn metadata(
    system: &CoxeterSystem,
    complex: &CoxeterComplex,
    congruence: Option<String>,
) -> DocMetadata {
    DocMetadata {
        system: system.matrix().to_text(),
        group_order: complex.group().len(),
        positive_roots: system.num_positive_roots(),
        cosets: complex.len(),
        congruence,
    }
}

fn coset_node(system: &CoxeterSystem, complex: &CoxeterComplex, id: usize, idx: usize) -> DocNode {
    let record = complex.record(idx);
    let n = system.rank();
    let p = system.num_positive_roots();
    DocNode {
        id,
        label: coset_label(system, complex, idx),
        kind: "coset".into(),
        min_word: crate::names::format_word(
            n,
            &complex.group().element(record.x).reduced_word(system),
        ),
        generators: generators_string(n, record.i_set),
        top_word: crate::names::format_word(
            n,
            &complex.group().element(record.top).reduced_word(system),
        ),
        positive_root_count: record.root_set.iter().filter(|&i| i < p).count(),
    }
}

fn generators_string(rank: usize, i_set: GenSet) -> String {
    i_set
        .iter()
        .map(|s| crate::names::generator_name(rank, s))
        .collect::<Vec<_>>()
        .join(",")
}

/// Nodes only: the enumerated complex.
pub fn complex_document(system: &CoxeterSystem, complex: &CoxeterComplex) -> PosetDocument {
    PosetDocument {
        schema: POSET_SCHEMA.into(),
        metadata: metadata(system, complex, None),
        nodes: (0..complex.len()).map(|i| coset_node(system, complex, i, i)).collect(),
        edges: Vec::new(),
    }
}

/// The facial weak order with typed cover edges.
pub fn lattice_document(
    system: &CoxeterSystem,
    complex: &CoxeterComplex,
    lattice: &FacialLattice,
) -> PosetDocument {
    let mut edges: Vec<DocEdge> = lattice
        .covers()
        .iter()
        .map(|&(from, to, kind)| DocEdge { from, to, cover_type: Some(kind.tag().into()) })
        .collect();
    edges.sort_by_key(|e| (e.from, e.to));
    PosetDocument {
        schema: POSET_SCHEMA.into(),
        metadata: metadata(system, complex, None),
        nodes: (0..complex.len()).map(|i| coset_node(system, complex, i, i)).collect(),
        edges,
    }
}

/// Quotient lattice: one `class` node per congruence class, labeled and
/// carrying the payload of its bottom coset.
pub fn quotient_document(
    system: &CoxeterSystem,
    complex: &CoxeterComplex,
    fc: &FacialCongruence,
    quotient: &QuotientLattice,
    congruence: String,
) -> PosetDocument {
    let p = system.num_positive_roots();
    let nodes = (0..fc.num_classes())
        .map(|class| {
            let mut node = coset_node(system, complex, class, fc.classes[class].bottom);
            node.kind = "class".into();
            node.top_word = crate::names::format_word(
                system.rank(),
                &complex
                    .group()
                    .element(complex.record(fc.classes[class].top).x)
                    .reduced_word(system),
            );
            node.positive_root_count =
                fc.class_root_set(complex, class).iter().filter(|&i| i < p).count();
            node
        })
        .collect();
    let mut edges: Vec<DocEdge> = quotient
        .hasse
        .iter()
        .map(|&(from, to)| DocEdge { from, to, cover_type: None })
        .collect();
    edges.sort_by_key(|e| (e.from, e.to));
    PosetDocument {
        schema: POSET_SCHEMA.into(),
        metadata: metadata(system, complex, Some(congruence)),
        nodes,
        edges,
    }
}

/// Fan cones of a facial congruence, one generator matrix per class.
pub fn fan_document(
    system: &CoxeterSystem,
    complex: &CoxeterComplex,
    fc: &FacialCongruence,
    congruence: String,
) -> FanDocument {
    let cones = fan_cones(system, complex, fc)
        .into_iter()
        .map(|cone| DocCone {
            class: cone.class,
            dim: cone.dim,
            generators: cone
                .generators
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect())
                .collect(),
        })
        .collect();
    FanDocument {
        schema: FAN_SCHEMA.into(),
        metadata: metadata(system, complex, Some(congruence)),
        cones,
    }
}

pub fn export_json(doc: &PosetDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn import_json(text: &str) -> Result<PosetDocument> {
    let doc: PosetDocument =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.schema != POSET_SCHEMA {
        return Err(Error::Schema(format!(
            "unsupported schema `{}`, expected `{POSET_SCHEMA}`",
            doc.schema
        )));
    }
    for (i, node) in doc.nodes.iter().enumerate() {
        if node.id != i {
            return Err(Error::Schema(format!("node ids must be dense, found {} at {i}", node.id)));
        }
    }
    for edge in &doc.edges {
        if edge.from >= doc.nodes.len() || edge.to >= doc.nodes.len() {
            return Err(Error::Schema(format!(
                "edge ({}, {}) points outside the node range",
                edge.from, edge.to
            )));
        }
    }
    Ok(doc)
}

pub fn export_fan_json(doc: &FanDocument) -> String {
    let mut text = serde_json::to_string_pretty(doc).expect("document serializes");
    text.push('\n');
    text
}

pub fn import_fan_json(text: &str) -> Result<FanDocument> {
    let doc: FanDocument =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.schema != FAN_SCHEMA {
        return Err(Error::Schema(format!(
            "unsupported schema `{}`, expected `{FAN_SCHEMA}`",
            doc.schema
        )));
    }
    Ok(doc)
}

/// Deterministic DOT digraph, edges from lower to higher node, cover types
/// as edge labels.
pub fn export_dot(doc: &PosetDocument) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    for node in &doc.nodes {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", node.id, escape(&node.label)));
    }
    let mut edges = doc.edges.clone();
    edges.sort_by_key(|e| (e.from, e.to));
    for edge in &edges {
        match &edge.cover_type {
            Some(tag) => out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                edge.from,
                edge.to,
                escape(tag)
            )),
            None => out.push_str(&format!("  n{} -> n{};\n", edge.from, edge.to)),
        }
    }
    out.push_str("}\n");
    out
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::{congruence_from_projections, descent_projections};

    fn a2_docs() -> (CoxeterSystem, CoxeterComplex) {
        let system = CoxeterSystem::from_descriptor("A2").unwrap();
        let complex = CoxeterComplex::build(&system);
        (system, complex)
    }

    #[test]
    fn lattice_document_shape_and_round_trip() {
        let (system, complex) = a2_docs();
        let lattice = FacialLattice::build(&system, &complex).unwrap();
        let doc = lattice_document(&system, &complex, &lattice);
        assert_eq!(doc.nodes.len(), 13);
        // Edge count is the number of facial covers of A2.
        assert_eq!(doc.edges.len(), lattice.covers().len());
        let text = export_json(&doc);
        let back = import_json(&text).unwrap();
        assert_eq!(doc, back);
    }

    #[test]
    fn schema_violations_are_rejected() {
        let (system, complex) = a2_docs();
        let doc = complex_document(&system, &complex);
        let mut wrong = doc.clone();
        wrong.schema = "coxlat-poset/0".into();
        assert!(matches!(import_json(&export_json(&wrong)), Err(Error::Schema(_))));
        let mut bad_edge = doc.clone();
        bad_edge.edges.push(DocEdge { from: 0, to: 999, cover_type: None });
        assert!(matches!(import_json(&export_json(&bad_edge)), Err(Error::Schema(_))));
        assert!(matches!(import_json("{"), Err(Error::Schema(_))));
    }

    #[test]
    fn dot_output_is_deterministic_and_labeled() {
        let (system, complex) = a2_docs();
        let lattice = FacialLattice::build(&system, &complex).unwrap();
        let doc = lattice_document(&system, &complex, &lattice);
        let dot1 = export_dot(&doc);
        let dot2 = export_dot(&lattice_document(&system, &complex, &lattice));
        assert_eq!(dot1, dot2);
        assert!(dot1.contains("label=\"eW{}\""));
        assert!(dot1.contains("label=\"(1)\""));
        assert!(dot1.contains("label=\"(2)\""));
        assert!(dot1.starts_with("digraph poset {"));
    }

    #[test]
    fn single_node_document_renders() {
        let doc = PosetDocument {
            schema: POSET_SCHEMA.into(),
            metadata: DocMetadata {
                system: "1\n1\n".into(),
                group_order: 2,
                positive_roots: 1,
                cosets: 1,
                congruence: None,
            },
            nodes: vec![DocNode {
                id: 0,
                label: "eW{}".into(),
                kind: "coset".into(),
                min_word: "e".into(),
                generators: String::new(),
                top_word: "e".into(),
                positive_root_count: 0,
            }],
            edges: Vec::new(),
        };
        let dot = export_dot(&doc);
        assert!(dot.contains("n0 [label=\"eW{}\"];"));
        assert_eq!(import_json(&export_json(&doc)).unwrap(), doc);
    }

    #[test]
    fn quotient_document_counts() {
        let (system, complex) = a2_docs();
        let pair = descent_projections(&system, complex.group());
        let base = congruence_from_projections(complex.group(), pair).unwrap();
        let fc = FacialCongruence::build(&system, &complex, base).unwrap();
        let quotient = QuotientLattice::build(&system, &complex, &fc);
        let doc = quotient_document(&system, &complex, &fc, &quotient, "descent".into());
        assert_eq!(doc.nodes.len(), 9);
        assert!(doc.nodes.iter().all(|n| n.kind == "class"));
        assert_eq!(doc.metadata.congruence.as_deref(), Some("descent"));
        let fan = fan_document(&system, &complex, &fc, "descent".into());
        assert_eq!(fan.cones.len(), 9);
        // Exact scalar strings, never floats.
        for cone in &fan.cones {
            for row in &cone.generators {
                for coord in row {
                    assert!(coord.contains('/'), "{coord} must be an exact ratio");
                }
            }
        }
        let text = export_fan_json(&fan);
        assert_eq!(import_fan_json(&text).unwrap(), fan);
    }
}
