use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{parse_graph6, Graph};

/// Reads one graph6 graph per line. Blank lines are skipped and a leading
/// `>>graph6<<` header is tolerated; line numbers in errors are 1-based.
pub fn read_graph6_stream<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| Error::StreamParse {
            line: i + 1,
            reason: e.to_string(),
        })?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        let g = parse_graph6(text.as_bytes()).map_err(|e| Error::StreamParse {
            line: i + 1,
            reason: e.to_string(),
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_and_blank_lines() {
        let text = ">>graph6<<D~{\n\nC~\n  A_  \n";
        let gs = read_graph6_stream(text.as_bytes()).unwrap();
        assert_eq!(gs.iter().map(Graph::order).collect::<Vec<_>>(), vec![5, 4, 2]);
    }

    #[test]
    fn bad_line_is_reported() {
        let err = read_graph6_stream("C~\n\nC~~\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::StreamParse { line: 3, .. }), "{err}");
    }
}
