use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::Args;
use gemkit_core::catalog::{self, CatalogEntry};
use gemkit_core::invariants::ManifoldMeta;
use gemkit_core::{parse_gem, ColoredGraph};

/// A graph read from a file, or taken from the catalog when no such file
/// exists.
pub struct Loaded {
    pub label: String,
    pub graph: ColoredGraph,
    pub entry: Option<CatalogEntry>,
}

pub fn load(arg: &str) -> Result<Loaded> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let graph = parse_gem(&text).with_context(|| format!("parsing {arg}"))?;
        return Ok(Loaded {
            label: arg.to_string(),
            graph,
            entry: None,
        });
    }
    match catalog::catalog_get(arg) {
        Ok(entry) => Ok(Loaded {
            label: entry.name.clone(),
            graph: entry.graph.clone(),
            entry: Some(entry),
        }),
        Err(_) => bail!("`{arg}` is neither a readable file nor a catalog entry"),
    }
}

/// Manifold facts the graph does not determine.
#[derive(Args, Debug, Clone, Default)]
pub struct MetaArgs {
    /// Rank of the fundamental group.
    #[arg(long)]
    pub rank: Option<usize>,

    /// Regular genus of the boundary.
    #[arg(long)]
    pub boundary_genus: Option<usize>,

    /// Rank of the fundamental group of the double.
    #[arg(long)]
    pub double_rank: Option<usize>,

    /// Gem-complexity of the boundary.
    #[arg(long)]
    pub boundary_complexity: Option<usize>,
}

impl MetaArgs {
    /// `h` and `χ` from the graph, the rest from the catalog entry (if any)
    /// with command-line values taking precedence.
    pub fn resolve(&self, loaded: &Loaded) -> Result<ManifoldMeta> {
        let mut meta = match &loaded.entry {
            Some(e) => e.manifold_meta()?,
            None => ManifoldMeta::derive(&loaded.graph)?,
        };
        meta.rank = self.rank.or(meta.rank);
        meta.boundary_genus = self.boundary_genus.or(meta.boundary_genus);
        meta.double_rank = self.double_rank.or(meta.double_rank);
        meta.boundary_complexity = self.boundary_complexity.or(meta.boundary_complexity);
        Ok(meta)
    }
}

/// Converts a 1-based vertex argument.
pub fn vertex(g: &ColoredGraph, v: usize, which: &str) -> Result<usize> {
    if v == 0 || v > g.vertex_count() {
        bail!("{which} vertex {v} is outside 1..={}", g.vertex_count());
    }
    Ok(v - 1)
}
