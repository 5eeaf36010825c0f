//! Minimal writer for DOT graph descriptions.
//!
//! Statements are emitted in insertion order, so callers control the
//! ordering and the output is byte-stable.

use std::fmt::Write;

type Attrs = Vec<(String, String)>;

#[derive(Clone, Debug, Default)]
pub struct DotGraph {
    name: String,
    graph_attrs: Attrs,
    node_defaults: Attrs,
    nodes: Vec<(String, Attrs)>,
    edges: Vec<(String, String, Attrs)>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn attr_list(attrs: &[(String, String)]) -> String {
    if attrs.is_empty() {
        return String::new();
    }
    let body: Vec<String> = attrs.iter().map(|(k, v)| format!("{k}={}", quote(v))).collect();
    format!(" [{}]", body.join(", "))
}

fn owned(attrs: &[(&str, &str)]) -> Attrs {
    attrs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

impl DotGraph {
    pub fn new(name: impl Into<String>) -> Self {
        DotGraph {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn graph_attr(&mut self, key: &str, value: &str) -> &mut Self {
        self.graph_attrs.push((key.into(), value.into()));
        self
    }

    pub fn node_default(&mut self, key: &str, value: &str) -> &mut Self {
        self.node_defaults.push((key.into(), value.into()));
        self
    }

    pub fn node(&mut self, id: impl Into<String>, attrs: &[(&str, &str)]) -> &mut Self {
        self.nodes.push((id.into(), owned(attrs)));
        self
    }

    pub fn edge(
        &mut self,
        from: impl Into<String>,
        to: impl Into<String>,
        attrs: &[(&str, &str)],
    ) -> &mut Self {
        self.edges.push((from.into(), to.into(), owned(attrs)));
        self
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", quote(&self.name)).unwrap();
        for (k, v) in &self.graph_attrs {
            writeln!(out, "  {k}={};", quote(v)).unwrap();
        }
        if !self.node_defaults.is_empty() {
            writeln!(out, "  node{};", attr_list(&self.node_defaults)).unwrap();
        }
        for (id, attrs) in &self.nodes {
            writeln!(out, "  {}{};", quote(id), attr_list(attrs)).unwrap();
        }
        for (from, to, attrs) in &self.edges {
            writeln!(out, "  {} -> {}{};", quote(from), quote(to), attr_list(attrs)).unwrap();
        }
        out.push_str("}\n");
        out
    }
}
