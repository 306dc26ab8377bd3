use std::fs;
use std::path::Path;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use isopos_core::corpus::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use isopos_core::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    G6,
    Edges,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g6" | "graph6" => Ok(Format::G6),
            "edges" | "edge-list" => Ok(Format::Edges),
            other => bail!("unknown format {other:?} (expected g6 or edges)"),
        }
    }
}

impl Format {
    /// `.g6` files are graph6; `.edges` and `.txt` are edge lists.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "g6" => Some(Format::G6),
            "edges" | "txt" => Some(Format::Edges),
            _ => None,
        }
    }

    pub fn resolve(explicit: Option<Format>, path: &Path) -> Format {
        explicit
            .or_else(|| Format::from_path(path))
            .unwrap_or(Format::G6)
    }

    pub fn parse(self, text: &str) -> Result<Graph> {
        Ok(match self {
            Format::G6 => parse_graph6(text)?,
            Format::Edges => parse_edge_list(text)?,
        })
    }

    pub fn emit(self, g: &Graph) -> String {
        match self {
            Format::G6 => format!("{}\n", emit_graph6(g)),
            Format::Edges => emit_edge_list(g),
        }
    }
}

pub fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Format::resolve(format, path)
        .parse(&text)
        .with_context(|| format!("parsing {}", path.display()))
}

pub fn write_graph(path: &Path, g: &Graph, format: Option<Format>) -> Result<()> {
    let text = Format::resolve(format, path).emit(g);
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}
