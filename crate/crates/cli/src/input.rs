//! Graph input: graph6 or edge list, from a file, an argument or stdin.

use std::io::Read;
use std::path::{Path, PathBuf};

use clap::Args;
use kdense_core::graph::{from_edge_list_text, from_graph6};
use kdense_core::Graph;

#[derive(Args, Debug)]
pub struct GraphSource {
    /// Graph file; `-` or nothing reads stdin. Format is detected from the
    /// first byte: `?`..`~` or `>>graph6<<` means graph6, anything else an
    /// edge list.
    #[arg(value_name = "FILE", conflicts_with_all = ["input", "g6", "el"])]
    file: Option<PathBuf>,
    /// Same as FILE.
    #[arg(long, value_name = "FILE", conflicts_with_all = ["g6", "el"])]
    input: Option<PathBuf>,
    /// graph6 string given inline.
    #[arg(long, conflicts_with = "el")]
    g6: Option<String>,
    /// Edge-list file (`n m` header, then `u v` per line).
    #[arg(long, value_name = "FILE")]
    el: Option<PathBuf>,
}

impl GraphSource {
    pub fn read(&self) -> Result<Graph, String> {
        if let Some(s) = &self.g6 {
            return parse_graph6(s);
        }
        if let Some(p) = &self.el {
            return parse_edge_list(&read_path(p)?);
        }
        let text = match self.file.as_ref().or(self.input.as_ref()) {
            Some(p) if p.as_os_str() != "-" => read_path(p)?,
            _ => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| format!("stdin: {e}"))?;
                s
            }
        };
        detect_and_parse(&text)
    }
}

fn read_path(p: &Path) -> Result<String, String> {
    std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))
}

pub fn detect_and_parse(text: &str) -> Result<Graph, String> {
    let body = text.trim_start();
    match body.bytes().next() {
        None => Err("empty input".into()),
        Some(b'?'..=b'~') => parse_graph6(body),
        Some(b'>') if body.starts_with(">>graph6<<") => parse_graph6(body),
        Some(_) => parse_edge_list(text),
    }
}

/// Exactly one non-empty line is accepted.
fn parse_graph6(text: &str) -> Result<Graph, String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let first = lines.next().ok_or("empty input")?;
    if lines.next().is_some() {
        return Err("graph6 input holds more than one graph".into());
    }
    from_graph6(first).map_err(|e| e.to_string())
}

fn parse_edge_list(text: &str) -> Result<Graph, String> {
    let parsed = from_edge_list_text(text).map_err(|e| e.to_string())?;
    if parsed.duplicates > 0 {
        eprintln!("warning: {} duplicate edge(s) collapsed", parsed.duplicates);
    }
    Ok(parsed.graph)
}
