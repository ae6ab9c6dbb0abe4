//! Reader for a strict subset of Alpino XML, plus canonical XML and DOT
//! writers for inspection.
//!
//! Accepted shape:
//!
//! ```xml
//! <alpino_ds id="sample">
//!   <node id="0" rel="--" cat="smain" begin="0" end="3">
//!     <node id="1" rel="su" pt="n" word="Jan" begin="0" end="1"/>
//!     ...
//!   </node>
//!   <sentence>Jan ziet Marie</sentence>
//! </alpino_ds>
//! ```
//!
//! Unknown attributes are ignored; unknown elements are errors.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;

use deptypes_core::dag::{Dag, Edge, EdgeRank, Node, NodeId};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LoadError {
    #[error("xml: {0}")]
    Xml(String),
    #[error("unexpected element <{0}>")]
    UnknownElement(String),
    #[error("missing <{0}>")]
    Missing(&'static str),
    #[error("node {node}: missing attribute `{attr}`")]
    MissingAttr { node: String, attr: &'static str },
    #[error("node {node}: bad value for `{attr}`")]
    BadAttr { node: String, attr: &'static str },
    #[error("node {0}: span must satisfy begin < end")]
    Span(String),
    #[error("duplicate node id {0}")]
    DuplicateId(NodeId),
    #[error("root must be non-terminal")]
    TerminalRoot,
    #[error("node {0}: a phrase needs `cat`, a leaf needs `pt` and `word`")]
    Content(String),
}

fn attr_u32(n: roxmltree::Node, name: &'static str, label: &str) -> Result<Option<u32>, LoadError> {
    match n.attribute(name) {
        None => Ok(None),
        Some(v) => v.trim().parse().map(Some).map_err(|_| LoadError::BadAttr {
            node: label.to_string(),
            attr: name,
        }),
    }
}

fn required<T>(v: Option<T>, node: &str, attr: &'static str) -> Result<T, LoadError> {
    v.ok_or_else(|| LoadError::MissingAttr {
        node: node.to_string(),
        attr,
    })
}

/// Parse a document into the raw tree: phantoms kept, all edges primary.
/// `fallback_id` names the sample when the root element has no `id`.
pub fn load_alpino(text: &str, fallback_id: &str) -> Result<Dag, LoadError> {
    let doc = roxmltree::Document::parse(text).map_err(|e| LoadError::Xml(e.to_string()))?;
    let top = doc.root_element();
    if top.tag_name().name() != "alpino_ds" {
        return Err(LoadError::UnknownElement(top.tag_name().name().to_string()));
    }
    let mut tree = None;
    let mut sentence = None;
    for child in top.children().filter(|c| c.is_element()) {
        match child.tag_name().name() {
            "node" if tree.is_none() => tree = Some(child),
            "sentence" if sentence.is_none() => {
                sentence = Some(
                    child
                        .text()
                        .unwrap_or("")
                        .split_whitespace()
                        .map(String::from)
                        .collect(),
                )
            }
            other => return Err(LoadError::UnknownElement(other.to_string())),
        }
    }
    let tree = tree.ok_or(LoadError::Missing("node"))?;
    let sentence: Vec<String> = sentence.ok_or(LoadError::Missing("sentence"))?;

    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    let root = read_node(tree, None, &mut nodes, &mut edges)?;
    if nodes.len() == 1 || !edges.iter().any(|e: &Edge| e.parent == root) {
        return Err(LoadError::TerminalRoot);
    }
    let id = top.attribute("id").unwrap_or(fallback_id).to_string();
    let mut dag = Dag {
        id,
        nodes,
        edges,
        root,
        sentence,
    };
    dag.normalize();
    Ok(dag)
}

fn read_node(
    n: roxmltree::Node,
    parent: Option<NodeId>,
    nodes: &mut BTreeMap<NodeId, Node>,
    edges: &mut Vec<Edge>,
) -> Result<NodeId, LoadError> {
    let label = n.attribute("id").unwrap_or("?").to_string();
    let id = required(attr_u32(n, "id", &label)?, &label, "id")?;
    if nodes.contains_key(&id) {
        return Err(LoadError::DuplicateId(id));
    }
    let children: Vec<roxmltree::Node> = n.children().filter(|c| c.is_element()).collect();
    for c in &children {
        if c.tag_name().name() != "node" {
            return Err(LoadError::UnknownElement(c.tag_name().name().to_string()));
        }
    }
    let index = attr_u32(n, "index", &label)?;
    let cat = n.attribute("cat").map(String::from);
    let pos = n.attribute("pt").map(String::from);
    let word = n.attribute("word").map(String::from);
    let phantom =
        index.is_some() && cat.is_none() && pos.is_none() && word.is_none() && children.is_empty();
    let begin = attr_u32(n, "begin", &label)?;
    let end = attr_u32(n, "end", &label)?;
    let (begin, end) = if phantom {
        (begin.unwrap_or(0), end.unwrap_or(0))
    } else {
        let b = required(begin, &label, "begin")?;
        let e = required(end, &label, "end")?;
        if b >= e {
            return Err(LoadError::Span(label));
        }
        (b, e)
    };
    if !phantom {
        let ok = if children.is_empty() {
            pos.is_some() && word.is_some()
        } else {
            cat.is_some() && pos.is_none() && word.is_none()
        };
        if !ok {
            if parent.is_none() && children.is_empty() {
                return Err(LoadError::TerminalRoot);
            }
            return Err(LoadError::Content(label));
        }
    }
    if let Some(p) = parent {
        let rel = required(n.attribute("rel"), &label, "rel")?;
        edges.push(Edge {
            parent: p,
            child: id,
            dep: rel.to_string(),
            rank: EdgeRank::Primary,
        });
    }
    nodes.insert(
        id,
        Node {
            id,
            begin,
            end,
            word,
            pos,
            cat,
            index,
        },
    );
    for c in children {
        read_node(c, Some(id), nodes, edges)?;
    }
    Ok(id)
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Canonical XML. The primary tree is nested; each secondary edge is
/// written as a phantom leaf sharing an index with its target, so
/// reloading and collapsing phantoms gives the same graph back.
pub fn write_xml(d: &Dag) -> String {
    let mut index: BTreeMap<NodeId, u32> = d
        .nodes
        .values()
        .filter_map(|n| n.index.map(|i| (n.id, i)))
        .collect();
    let used: BTreeSet<u32> = index.values().copied().collect();
    let mut fresh_index = used.iter().max().map_or(1, |m| m + 1);
    for e in d.edges.iter().filter(|e| !e.is_primary()) {
        index.entry(e.child).or_insert_with(|| {
            fresh_index += 1;
            fresh_index - 1
        });
    }
    let mut fresh_id = d.next_id();
    let mut out = String::new();
    writeln!(out, "<alpino_ds id=\"{}\">", escape(&d.id)).unwrap();
    write_node(d, d.root, "--", 1, &index, &mut fresh_id, &mut out);
    writeln!(
        out,
        "  <sentence>{}</sentence>",
        escape(&d.sentence.join(" "))
    )
    .unwrap();
    out.push_str("</alpino_ds>\n");
    out
}

fn write_node(
    d: &Dag,
    id: NodeId,
    rel: &str,
    depth: usize,
    index: &BTreeMap<NodeId, u32>,
    fresh_id: &mut NodeId,
    out: &mut String,
) {
    let n = d.node(id);
    let pad = "  ".repeat(depth);
    write!(out, "{pad}<node id=\"{}\" rel=\"{}\"", n.id, escape(rel)).unwrap();
    if let Some(c) = &n.cat {
        write!(out, " cat=\"{}\"", escape(c)).unwrap();
    }
    if let Some(p) = &n.pos {
        write!(out, " pt=\"{}\"", escape(p)).unwrap();
    }
    if let Some(w) = &n.word {
        write!(out, " word=\"{}\"", escape(w)).unwrap();
    }
    write!(out, " begin=\"{}\" end=\"{}\"", n.begin, n.end).unwrap();
    if let Some(i) = index.get(&id) {
        write!(out, " index=\"{i}\"").unwrap();
    }
    let kids = d.out_edges(id);
    if kids.is_empty() {
        out.push_str("/>\n");
        return;
    }
    out.push_str(">\n");
    for e in kids {
        if e.is_primary() {
            write_node(d, e.child, &e.dep, depth + 1, index, fresh_id, out);
        } else {
            let c = d.node(e.child);
            writeln!(
                out,
                "{pad}  <node id=\"{}\" rel=\"{}\" begin=\"{}\" end=\"{}\" index=\"{}\"/>",
                fresh_id,
                escape(&e.dep),
                c.begin,
                c.end,
                index[&e.child]
            )
            .unwrap();
            *fresh_id += 1;
        }
    }
    writeln!(out, "{pad}</node>").unwrap();
}

/// Graphviz rendering; secondary edges are dashed.
pub fn write_dot(d: &Dag) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", d.id.replace('"', "\\\"")).unwrap();
    for n in d.nodes.values() {
        let tag = n.tag().unwrap_or("");
        let label = match &n.word {
            Some(w) => format!("{tag}\\n{w}"),
            None => tag.to_string(),
        };
        writeln!(
            out,
            "  n{} [label=\"{}\"];",
            n.id,
            label.replace('"', "\\\"")
        )
        .unwrap();
    }
    for e in &d.edges {
        let style = if e.is_primary() { "" } else { ", style=dashed" };
        writeln!(
            out,
            "  n{} -> n{} [label=\"{}\"{style}];",
            e.parent, e.child, e.dep
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}
