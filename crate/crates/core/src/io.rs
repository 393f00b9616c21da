//! Text formats: edge lists and matrix-kernel CSV.
//!
//! Edge lists carry one edge per line as two whitespace-separated tokens.
//! Lines starting with `#` and blank lines are ignored, except that a leading
//! `# n=<count>` directive fixes the node count — the canonical form written
//! by [`write_edge_list`] uses it so graphs with isolated nodes survive a
//! round trip. Files without the directive may use arbitrary string labels,
//! which are remapped to dense 0-based ids in first-appearance order.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{BuildDiagnostics, Graph, GraphError};
use crate::kernel::{Kernel, KernelError};

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: expected 2 whitespace-separated tokens, found {found}")]
    TokenCount { line: usize, found: usize },
    #[error("line {line}: token {token:?} is not a node id in [0, {n}) (file declares n={n})")]
    BadNodeId { line: usize, token: String, n: usize },
    #[error("line {line}: malformed node-count directive {directive:?}")]
    BadHeader { line: usize, directive: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("matrix row {row}: expected {expected} comma-separated values, found {found}")]
    BadMatrixRow { row: usize, expected: usize, found: usize },
    #[error("matrix row {row}: {token:?} is not a number")]
    BadMatrixValue { row: usize, token: String },
    #[error("matrix file has no rows")]
    EmptyMatrix,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// What ingestion saw: the label table and the cleanup counts.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EdgeListDocument {
    /// Label for each node id; identity strings when the file declared `n=`.
    pub labels: Vec<String>,
    pub declared_n: Option<usize>,
    pub comment_lines: usize,
    pub self_loops_dropped: usize,
    pub duplicates_collapsed: usize,
    /// The document contained no edges.
    pub empty: bool,
}

impl EdgeListDocument {
    pub fn diagnostics(&self) -> BuildDiagnostics {
        BuildDiagnostics {
            self_loops_dropped: self.self_loops_dropped,
            duplicates_collapsed: self.duplicates_collapsed,
        }
    }
}

/// Parse an edge-list document. Self-loops are dropped and duplicate edges
/// (in either orientation) collapsed, with counts reported in the document.
pub fn parse_edge_list(text: &str) -> Result<(Graph, EdgeListDocument), ParseError> {
    let mut doc = EdgeListDocument::default();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut label_ids: HashMap<&str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            doc.comment_lines += 1;
            let comment = comment.trim();
            if doc.declared_n.is_none() {
                if let Some(value) = comment.strip_prefix("n=") {
                    let n = value.trim().parse::<usize>().map_err(|_| ParseError::BadHeader {
                        line: line_no,
                        directive: line.to_string(),
                    })?;
                    doc.declared_n = Some(n);
                }
            }
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError::TokenCount { line: line_no, found: tokens.len() });
        }
        let pair = if let Some(n) = doc.declared_n {
            let mut ids = [0usize; 2];
            for (slot, token) in ids.iter_mut().zip(&tokens) {
                *slot = token
                    .parse::<usize>()
                    .ok()
                    .filter(|&id| id < n)
                    .ok_or_else(|| ParseError::BadNodeId {
                        line: line_no,
                        token: token.to_string(),
                        n,
                    })?;
            }
            (ids[0], ids[1])
        } else {
            let mut ids = [0usize; 2];
            for (slot, token) in ids.iter_mut().zip(&tokens) {
                *slot = *label_ids.entry(token).or_insert_with(|| {
                    labels.push(token.to_string());
                    labels.len() - 1
                });
            }
            (ids[0], ids[1])
        };
        pairs.push(pair);
    }

    let n = doc.declared_n.unwrap_or(labels.len());
    doc.labels = match doc.declared_n {
        Some(n) => (0..n).map(|i| i.to_string()).collect(),
        None => labels,
    };
    let (graph, diag) = Graph::build(n, &pairs)?;
    doc.self_loops_dropped = diag.self_loops_dropped;
    doc.duplicates_collapsed = diag.duplicates_collapsed;
    doc.empty = graph.edge_count() == 0;
    Ok((graph, doc))
}

/// Canonical edge-list text: a `# n=<n>` directive, then one `i j` line per
/// edge with `i < j` in lexicographic order. `parse_edge_list` inverts it.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# n={}\n", g.node_count());
    for &(i, j) in g.edges() {
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Parse an `n x n` comma-separated kernel matrix (one row per line) and
/// validate it as a [`Kernel`].
pub fn parse_matrix_csv(text: &str) -> Result<Kernel, ParseError> {
    let rows: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if rows.is_empty() {
        return Err(ParseError::EmptyMatrix);
    }
    let n = rows.len();
    let mut values = Vec::with_capacity(n * n);
    for (r, row) in rows.iter().enumerate() {
        let cells: Vec<&str> = row.split(',').map(str::trim).collect();
        if cells.len() != n {
            return Err(ParseError::BadMatrixRow { row: r + 1, expected: n, found: cells.len() });
        }
        for cell in cells {
            values.push(cell.parse::<f64>().map_err(|_| ParseError::BadMatrixValue {
                row: r + 1,
                token: cell.to_string(),
            })?);
        }
    }
    Ok(Kernel::matrix(n, values)?)
}
