use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;

use anyhow::{bail, Context};
use clap::{Args, ValueEnum};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use zfgrundy::graph::parse_edge_list;
use zfgrundy::graph6::parse_graph6;
use zfgrundy::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Edgelist,
    Graph6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

/// Where the input graph comes from. Exactly one source is required.
#[derive(Debug, Args)]
pub struct Input {
    /// Graph file, `-` for stdin.
    pub path: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long, conflicts_with = "path")]
    pub graph6: Option<String>,
    /// Format of the graph file.
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    pub format: Format,
    /// Relabel the input by a random permutation drawn from this seed.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl Input {
    pub fn load(&self) -> anyhow::Result<Graph> {
        let g = match (&self.graph6, &self.path) {
            (Some(s), _) => parse_graph6(s.trim()).context("inline graph6")?,
            (None, Some(path)) => {
                let text = if path.as_os_str() == "-" {
                    let mut s = String::new();
                    io::stdin().read_to_string(&mut s).context("reading stdin")?;
                    s
                } else {
                    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
                };
                match self.format {
                    Format::Edgelist => parse_edge_list(&text),
                    Format::Graph6 => parse_graph6(first_line(&text)),
                }
                .with_context(|| format!("parsing {}", path.display()))?
            }
            (None, None) => bail!("no input: pass a graph file or --graph6"),
        };
        Ok(match self.seed {
            Some(seed) => shuffled(&g, seed),
            None => g,
        })
    }
}

fn first_line(text: &str) -> &str {
    text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("")
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut p: Vec<usize> = (0..g.n()).collect();
    p.shuffle(&mut StdRng::seed_from_u64(seed));
    Graph::from_edges(g.n(), g.edges().into_iter().map(|(u, v)| (p[u], p[v]))).expect("relabeling keeps a simple graph")
}
