//! Plain-text hypergraph format.
//!
//! Line 1 is `r n m`, followed by `m` lines of `r` space-separated vertex
//! indices in ascending order. Lines starting with `#` are comments. Files
//! are UTF-8 with LF newlines. Writing is canonical: edges sorted
//! lexicographically, no comments, one trailing newline.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Error)]
pub enum TextIoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: HypergraphError,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, TextIoError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut header_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let numbers: Vec<usize> = fields
            .iter()
            .map(|f| {
                f.parse::<usize>().map_err(|_| TextIoError::Parse {
                    line: lineno,
                    message: format!("expected an integer, got {f:?}"),
                })
            })
            .collect::<Result<_, _>>()?;
        match header {
            None => {
                if numbers.len() != 3 {
                    return Err(TextIoError::Parse {
                        line: lineno,
                        message: format!("header needs 3 fields `r n m`, got {}", numbers.len()),
                    });
                }
                header = Some((numbers[0], numbers[1], numbers[2]));
                header_line = lineno;
            }
            Some((r, _, _)) => {
                if numbers.len() != r {
                    return Err(TextIoError::Parse {
                        line: lineno,
                        message: format!("edge needs {r} vertices, got {}", numbers.len()),
                    });
                }
                edges.push(numbers);
            }
        }
    }
    let (r, n, m) = header.ok_or(TextIoError::Parse {
        line: text.lines().count() + 1,
        message: "missing header line `r n m`".into(),
    })?;
    if edges.len() != m {
        return Err(TextIoError::Parse {
            line: header_line,
            message: format!("header announces {m} edges, file has {}", edges.len()),
        });
    }
    Hypergraph::new(r, n, edges).map_err(|source| TextIoError::Invalid { line: header_line, source })
}

pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.uniformity(), h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_hypergraph(path: impl AsRef<Path>) -> Result<Hypergraph, TextIoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| TextIoError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_hypergraph(&text)
}

pub fn write_hypergraph(h: &Hypergraph, path: impl AsRef<Path>) -> Result<(), TextIoError> {
    let path = path.as_ref();
    fs::write(path, format_hypergraph(h)).map_err(|source| TextIoError::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_c33() {
        let h = parse_hypergraph("3 6 3\n0 1 2\n2 3 4\n0 4 5\n").unwrap();
        assert_eq!(h.uniformity(), 3);
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 3);
    }

    #[test]
    fn comments_and_blanks_skipped() {
        let h = parse_hypergraph("# a comment\n\n3 3 1\n# another\n0 1 2\n").unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn bad_header_reports_line() {
        let err = parse_hypergraph("3 6\n0 1 2\n").unwrap_err();
        match err {
            TextIoError::Parse { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected: {other}"),
        }
    }

    #[test]
    fn edge_count_mismatch_rejected() {
        assert!(parse_hypergraph("3 6 2\n0 1 2\n").is_err());
    }

    #[test]
    fn write_read_round_trip() {
        let h = parse_hypergraph("3 6 3\n0 1 2\n2 3 4\n0 4 5\n").unwrap();
        let text = format_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        assert_eq!(h, back);
        assert_eq!(text, format_hypergraph(&back));
    }
}
