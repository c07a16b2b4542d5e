//! Reading and writing trees in the supported text formats.

use std::fs;
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context};
use treedom_core::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use treedom_core::Tree;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> anyhow::Result<Self> {
        match s {
            "edgelist" => Ok(Format::EdgeList),
            "graph6" => Ok(Format::Graph6),
            other => bail!("unknown format `{other}` (expected edgelist or graph6)"),
        }
    }
}

impl Format {
    /// `.g6` and `.graph6` files are graph6; anything else is an edge list.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => Format::Graph6,
            _ => Format::EdgeList,
        }
    }

    /// Guesses the format of piped text. A graph6 string uses only bytes
    /// 63..=126, which never occur in an edge list.
    pub fn sniff(text: &str) -> Format {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'))
            .unwrap_or("");
        if first.starts_with(">>graph6<<") || (!first.is_empty() && first.bytes().all(|b| (63..=126).contains(&b))) {
            Format::Graph6
        } else {
            Format::EdgeList
        }
    }
}

pub fn parse_tree(text: &str, format: Format) -> treedom_core::Result<Tree> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Graph6 => parse_graph6(text),
    }
}

pub fn render_tree(t: &Tree, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(t),
        Format::Graph6 => {
            let mut s = to_graph6(t);
            s.push('\n');
            s
        }
    }
}

/// Reads a tree from `path`, or from `stdin` when `path` is `-`. An explicit
/// `format` wins over the extension or content guess.
pub fn read_tree(path: &str, format: Option<Format>, stdin: &mut dyn Read) -> anyhow::Result<Tree> {
    let (text, guessed) = if path == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).context("reading standard input")?;
        let guessed = Format::sniff(&text);
        (text, guessed)
    } else {
        let text = fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        (text, Format::from_path(Path::new(path)))
    };
    let tree = parse_tree(&text, format.unwrap_or(guessed)).with_context(|| format!("parsing {path}"))?;
    Ok(tree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_guessing() {
        assert_eq!(Format::from_path(Path::new("a/b.g6")), Format::Graph6);
        assert_eq!(Format::from_path(Path::new("t.graph6")), Format::Graph6);
        assert_eq!(Format::from_path(Path::new("t.txt")), Format::EdgeList);
        assert_eq!(Format::sniff("Ch\n"), Format::Graph6);
        assert_eq!(Format::sniff(">>graph6<<Ch"), Format::Graph6);
        assert_eq!(Format::sniff("# comment\n0 1\n"), Format::EdgeList);
        assert_eq!(Format::sniff("0\n"), Format::EdgeList);
    }

    #[test]
    fn stdin_reading() {
        let mut input = "0 1\n1 2\n".as_bytes();
        let t = read_tree("-", None, &mut input).unwrap();
        assert_eq!(t.order(), 3);
        let mut input = "Ch".as_bytes();
        assert_eq!(read_tree("-", None, &mut input).unwrap().order(), 4);
        let mut input = "Ch".as_bytes();
        assert!(read_tree("-", Some(Format::EdgeList), &mut input).is_err());
    }
}
