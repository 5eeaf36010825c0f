//! De Bruijn graphs `B(d, n)` and the closed path a circular word traces in them.
//!
//! Vertices are the `d^n` words of length `n`, edges the `d^(n+1)` words of
//! length `n + 1`; an edge runs from its length-`n` prefix to its length-`n`
//! suffix. The graph is never materialised: a word's lexicographic index is
//! its id, so the source of edge `e` is `e / d` and its target `e mod d^n`.

use std::collections::BTreeSet;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::dot::DotGraph;
use crate::error::{Error, Result};
use crate::words::{all_words, occurrence_vector, Alphabet, CircularWord, Word};

/// Default cap on the number of edges, `d^(n+1) <= 2^20`.
pub const DEFAULT_EDGE_LIMIT: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DeBruijnGraph {
    alphabet: Alphabet,
    order: usize,
    vertex_count: usize,
    edge_count: usize,
}

pub fn build_graph(alphabet: Alphabet, n: usize) -> Result<DeBruijnGraph> {
    DeBruijnGraph::with_limit(alphabet, n, DEFAULT_EDGE_LIMIT)
}

impl DeBruijnGraph {
    pub fn with_limit(alphabet: Alphabet, n: usize, edge_limit: u128) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "De Bruijn graph order must be at least 1".into(),
            ));
        }
        let edge_count = alphabet.power_bounded(n + 1, "De Bruijn graph edges", edge_limit)?;
        Ok(DeBruijnGraph {
            alphabet,
            order: n,
            vertex_count: edge_count / alphabet.size(),
            edge_count,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Length `n` of the vertex words.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn name(&self) -> String {
        format!("B({},{})", self.alphabet, self.order)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Word> {
        all_words(self.alphabet, self.order)
    }

    pub fn edges(&self) -> impl Iterator<Item = Word> {
        all_words(self.alphabet, self.order + 1)
    }

    fn fits(&self, w: &Word, len: usize) -> bool {
        w.len() == len && w.letters().iter().all(|&a| (a as usize) < self.alphabet.size())
    }

    pub fn contains_vertex(&self, v: &Word) -> bool {
        self.fits(v, self.order)
    }

    pub fn contains_edge(&self, e: &Word) -> bool {
        self.fits(e, self.order + 1)
    }

    fn check_edge(&self, e: &Word) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::UnknownLabel {
                label: e.to_string(),
                d: self.alphabet.size(),
                n: self.order,
            })
        }
    }

    pub fn source(&self, e: &Word) -> Result<Word> {
        self.check_edge(e)?;
        Ok(e.prefix(self.order))
    }

    pub fn target(&self, e: &Word) -> Result<Word> {
        self.check_edge(e)?;
        Ok(e.suffix(self.order))
    }

    pub fn source_id(&self, edge: usize) -> usize {
        edge / self.alphabet.size()
    }

    pub fn target_id(&self, edge: usize) -> usize {
        edge % self.vertex_count
    }

    pub fn out_edges(&self, vertex: usize) -> impl Iterator<Item = usize> {
        let d = self.alphabet.size();
        (0..d).map(move |a| vertex * d + a)
    }

    pub fn in_edges(&self, vertex: usize) -> impl Iterator<Item = usize> {
        let stride = self.vertex_count;
        (0..self.alphabet.size()).map(move |a| a * stride + vertex)
    }

    fn union_find(&self, edges: impl Iterator<Item = usize>) -> (UnionFind<usize>, usize) {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut cycles = 0;
        for e in edges {
            if !uf.union(self.source_id(e), self.target_id(e)) {
                cycles += 1;
            }
        }
        (uf, cycles)
    }

    /// Connected components of the underlying undirected graph.
    pub fn component_count(&self) -> usize {
        let (uf, _) = self.union_find(0..self.edge_count);
        let labels = uf.into_labeling();
        labels.iter().collect::<BTreeSet<_>>().len()
    }
}

/// `|E| - |V| + c`, the dimension of the cycle space.
pub fn cyclomatic_number(g: &DeBruijnGraph) -> usize {
    g.edge_count() + g.component_count() - g.vertex_count()
}

/// Whether the edge labels, taken as undirected edges, form a spanning tree.
pub fn is_spanning_tree(g: &DeBruijnGraph, edge_subset: &[Word]) -> Result<bool> {
    let mut ids = BTreeSet::new();
    for e in edge_subset {
        g.check_edge(e)?;
        ids.insert(e.index(g.alphabet()));
    }
    if ids.len() + 1 != g.vertex_count() {
        return Ok(false);
    }
    // n - 1 edges without a cycle connect all n vertices.
    let (_, cycles) = g.union_find(ids.into_iter());
    Ok(cycles == 0)
}

/// The closed walk of a circular word: vertex `i` is its length-`n` factor at
/// position `i`, edge `i` its length-`(n+1)` factor at position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedPath {
    pub vertices: Vec<Word>,
    pub edges: Vec<Word>,
}

impl ClosedPath {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `source(edge_i) = vertex_i` and `target(edge_i) = vertex_{i+1}` cyclically.
    pub fn is_closed_in(&self, g: &DeBruijnGraph) -> bool {
        let n = self.vertices.len();
        n == self.edges.len()
            && self.edges.iter().enumerate().all(|(i, e)| {
                g.source(e).ok().as_ref() == Some(&self.vertices[i])
                    && g.target(e).ok().as_ref() == Some(&self.vertices[(i + 1) % n])
            })
    }

    pub fn edge_set(&self) -> BTreeSet<Word> {
        self.edges.iter().cloned().collect()
    }
}

pub fn path_of_word(g: &DeBruijnGraph, w: &CircularWord) -> Result<ClosedPath> {
    if w.alphabet() != g.alphabet() {
        return Err(Error::AlphabetMismatch {
            expected: g.alphabet().size(),
            got: w.alphabet().size(),
        });
    }
    let n = g.order();
    Ok(ClosedPath {
        vertices: (0..w.len()).map(|i| w.factor_at(i, n)).collect(),
        edges: (0..w.len()).map(|i| w.factor_at(i, n + 1)).collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexResidual {
    pub vertex: Word,
    /// `|W|_U`
    pub count: u64,
    /// `|W|_U - sum_a |W|_{Ua}`
    pub out_residual: i64,
    /// `|W|_U - sum_a |W|_{aU}`
    pub in_residual: i64,
}

/// Flow conservation of factor counts at every vertex of `B(d, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KirchhoffReport {
    pub order: usize,
    pub residuals: Vec<VertexResidual>,
}

impl KirchhoffReport {
    pub fn is_balanced(&self) -> bool {
        self.violations().next().is_none()
    }

    pub fn violations(&self) -> impl Iterator<Item = &VertexResidual> {
        self.residuals
            .iter()
            .filter(|r| r.out_residual != 0 || r.in_residual != 0)
    }

    pub fn residual(&self, vertex: &str) -> Option<&VertexResidual> {
        let v = Word::parse(vertex).ok()?;
        self.residuals.iter().find(|r| r.vertex == v)
    }
}

pub fn verify_kirchhoff(w: &CircularWord, n: usize) -> Result<KirchhoffReport> {
    let g = build_graph(w.alphabet(), n)?;
    let vertex_counts = occurrence_vector(w, n)?;
    let edge_counts = occurrence_vector(w, n + 1)?;
    let edges = edge_counts.counts();
    let residuals = vertex_counts
        .counts()
        .iter()
        .enumerate()
        .map(|(v, &count)| {
            let out: u64 = g.out_edges(v).map(|e| edges[e]).sum();
            let inc: u64 = g.in_edges(v).map(|e| edges[e]).sum();
            VertexResidual {
                vertex: Word::from_index(v, w.alphabet(), n),
                count,
                out_residual: count as i64 - out as i64,
                in_residual: count as i64 - inc as i64,
            }
        })
        .collect();
    Ok(KirchhoffReport {
        order: n,
        residuals,
    })
}

/// Marking for [`export_dot`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DotStyle {
    pub highlight_edges: BTreeSet<Word>,
    pub double_circled: BTreeSet<Word>,
}

impl DotStyle {
    pub fn highlight_path(path: &ClosedPath) -> Self {
        DotStyle {
            highlight_edges: path.edge_set(),
            ..Default::default()
        }
    }
}

/// Parses a comma-separated list of edge labels such as `"0011,1100"`.
pub fn parse_edge_list(s: &str) -> Result<Vec<Word>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(Word::parse)
        .collect()
}

/// DOT text for the graph, vertices and edges in lexicographic order.
pub fn export_dot(g: &DeBruijnGraph, style: &DotStyle) -> String {
    let mut dot = DotGraph::new(g.name());
    dot.node_default("shape", "circle");
    for v in g.vertices() {
        let label = v.to_string();
        if style.double_circled.contains(&v) {
            dot.node(label, &[("shape", "doublecircle")]);
        } else {
            dot.node(label, &[]);
        }
    }
    let n = g.order();
    for e in g.edges() {
        let label = e.to_string();
        let (from, to) = (e.prefix(n).to_string(), e.suffix(n).to_string());
        if style.highlight_edges.contains(&e) {
            dot.edge(from, to, &[("label", &label), ("color", "red"), ("penwidth", "2")]);
        } else {
            dot.edge(from, to, &[("label", &label)]);
        }
    }
    dot.render()
}
