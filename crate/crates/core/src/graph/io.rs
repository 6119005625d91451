//! Plain-text graph format: a header line `n m`, then `m` lines `u v`
//! with 0-based endpoints. Blank lines and lines starting with `#` are
//! ignored.

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Graph, GraphError};

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn format_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Format {
        line,
        message: message.into(),
    }
}

pub(crate) fn parse_numbers<const N: usize>(line: usize, text: &str) -> Result<[usize; N], GraphError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != N {
        return Err(format_err(line, format!("expected {N} integers, found `{text}`")));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field
            .parse()
            .map_err(|_| format_err(line, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

impl Graph {
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut lines = content_lines(text);
        let (line, header) = lines.next().ok_or_else(|| format_err(1, "missing `n m` header"))?;
        let [n, m] = parse_numbers::<2>(line, header)?;
        let mut g = Graph::empty(n);
        let mut seen = 0;
        for (line, body) in lines {
            let [u, v] = parse_numbers::<2>(line, body)?;
            g.try_add_edge(u, v)
                .map_err(|e| format_err(line, e.to_string()))?;
            seen += 1;
        }
        if seen != m {
            return Err(format_err(line, format!("header announces {m} edges, found {seen}")));
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let g: Graph = "# a path\n3 2\n\n0 1\n# middle\n1 2\n".parse().unwrap();
        assert_eq!(g, Graph::path(3));
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let err = "3 2\n0 1\n1 1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::Format { line: 3, .. }), "{err:?}");
        let err = "3 3\n0 1\n1 2\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::Format { line: 1, .. }));
        assert!("x 1".parse::<Graph>().is_err());
    }
}
