//! Built-in example gems.
//!
//! Entries are stored as canonical GEM v1 text. Extra entries can be loaded
//! from a directory of `NAME.gem` files (see [`load_dir`]); user entries carry
//! no metadata beyond what the graph itself determines.

use std::path::Path;

use serde::Serialize;

use crate::error::{GemError, Result};
use crate::format::parse_gem;
use crate::graph::ColoredGraph;
use crate::invariants::ManifoldMeta;
use crate::Ratio;

/// Directory of extra `*.gem` catalog files.
pub const CATALOG_DIR_ENV: &str = "GEMKIT_CATALOG_DIR";

/// Facts about the represented manifold that the graph does not determine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EntryMeta {
    pub rank: Option<usize>,
    pub boundary_genus: Option<usize>,
    pub double_rank: Option<usize>,
    pub boundary_complexity: Option<usize>,
}

/// Values the entry is expected to reproduce.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expectations {
    pub vertices: usize,
    /// Boundary components; `None` for 3-dimensional entries.
    pub h: Option<usize>,
    pub chi: Option<i64>,
    pub bipartite: bool,
    #[serde(serialize_with = "crate::invariants::serialize_opt_ratio")]
    pub regular_genus: Option<Ratio>,
    pub gem_complexity: Option<usize>,
}

/// An entry obtained from another by deleting edges of the last color.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Derivation {
    pub parent: &'static str,
    /// 1-based pairs, as in the GEM files.
    pub removed: &'static [(usize, usize)],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub manifold: String,
    pub provenance: String,
    #[serde(skip)]
    pub graph: ColoredGraph,
    pub meta: EntryMeta,
    pub expected: Option<Expectations>,
    pub derivation: Option<Derivation>,
    /// 0-based connector vertices for sums through this sphere.
    pub connector: Option<(usize, usize)>,
}

impl CatalogEntry {
    /// Manifold metadata with `h` and `χ` taken from the graph.
    pub fn manifold_meta(&self) -> Result<ManifoldMeta> {
        let mut meta = ManifoldMeta::derive(&self.graph)?;
        meta.rank = self.meta.rank;
        meta.boundary_genus = self.meta.boundary_genus;
        meta.double_rank = self.meta.double_rank;
        meta.boundary_complexity = self.meta.boundary_complexity;
        Ok(meta)
    }
}

struct Builtin {
    name: &'static str,
    manifold: &'static str,
    provenance: &'static str,
    text: &'static str,
    meta: EntryMeta,
    expected: Option<Expectations>,
    derivation: Option<Derivation>,
    connector: Option<(usize, usize)>,
}

const FIG1_S4: &str = "gem-format 1
dim 4
vertices 10
color 0: 1-10 2-4 3-5 6-7 8-9
color 1: 1-10 2-3 4-6 5-7 8-9
color 2: 1-10 2-3 4-5 6-8 7-9
color 3: 1-9 2-3 4-5 6-7 8-10
color 4: 1-10 2-3 4-5 6-7 8-9
end
";

const FIG2_S3XI: &str = "gem-format 1
dim 4
vertices 10
color 0: 1-10 2-4 3-5 6-7 8-9
color 1: 1-10 2-3 4-6 5-7 8-9
color 2: 1-10 2-3 4-5 6-8 7-9
color 3: 1-9 2-3 4-5 6-7 8-10
color 4: 4-5 6-7 8-9
end
";

const FIG3_D3XS1: &str = "gem-format 1
dim 4
vertices 10
color 0: 1-10 2-4 3-5 6-7 8-9
color 1: 1-10 2-3 4-6 5-7 8-9
color 2: 1-10 2-3 4-5 6-8 7-9
color 3: 1-9 2-3 4-5 6-7 8-10
color 4: 1-2
end
";

const FIG4_BOUNDARY16: &str = "gem-format 1
dim 4
vertices 16
color 0: 1-2 3-4 5-6 7-8 9-10 11-12 13-14 15-16
color 1: 1-9 2-10 3-11 4-12 5-13 6-14 7-15 8-16
color 2: 1-4 2-3 5-8 6-7 9-12 10-11 13-16 14-15
color 3: 1-14 2-13 3-16 4-15 5-10 6-9 7-12 8-11
color 4: 4-5 9-16 10-15 12-13
end
";

const S3XS1_10: &str = "gem-format 1
dim 4
vertices 10
color 0: 1-10 2-4 3-5 6-7 8-9
color 1: 1-10 2-3 4-6 5-7 8-9
color 2: 1-10 2-3 4-5 6-8 7-9
color 3: 1-9 2-3 4-5 6-7 8-10
color 4: 1-2 3-10 4-5 6-7 8-9
end
";

const RP4_16: &str = "gem-format 1
dim 4
vertices 16
color 0: 1-2 3-4 5-6 7-8 9-10 11-12 13-14 15-16
color 1: 1-9 2-10 3-11 4-12 5-13 6-14 7-15 8-16
color 2: 1-4 2-3 5-8 6-7 9-12 10-11 13-16 14-15
color 3: 1-14 2-13 3-16 4-15 5-10 6-9 7-12 8-11
color 4: 1-8 2-7 3-6 4-5 9-16 10-15 11-14 12-13
end
";

const S4_ORDER2: &str = "gem-format 1
dim 4
vertices 2
color 0: 1-2
color 1: 1-2
color 2: 1-2
color 3: 1-2
color 4: 1-2
end
";

const D4_ORDER2: &str = "gem-format 1
dim 4
vertices 2
color 0: 1-2
color 1: 1-2
color 2: 1-2
color 3: 1-2
color 4:
end
";

const S3_ORDER2: &str = "gem-format 1
dim 3
vertices 2
color 0: 1-2
color 1: 1-2
color 2: 1-2
color 3: 1-2
end
";

const S2XS1_8: &str = "gem-format 1
dim 3
vertices 8
color 0: 1-2 3-4 5-6 7-8
color 1: 1-2 3-5 4-7 6-8
color 2: 1-3 2-4 5-7 6-8
color 3: 1-6 2-8 3-4 5-7
end
";

const RP3_8: &str = "gem-format 1
dim 3
vertices 8
color 0: 1-2 3-4 5-6 7-8
color 1: 1-3 2-4 5-7 6-8
color 2: 1-5 2-6 3-7 4-8
color 3: 1-8 2-7 3-6 4-5
end
";

const fn meta(rank: usize) -> EntryMeta {
    EntryMeta {
        rank: Some(rank),
        boundary_genus: None,
        double_rank: None,
        boundary_complexity: None,
    }
}

const fn int(n: i64) -> Option<Ratio> {
    Some(Ratio::new_raw(n, 1))
}

const BUILTINS: &[Builtin] = &[
    Builtin {
        name: "fig1_s4",
        manifold: "S^4",
        provenance: "10-vertex gem of S^4 used as the connector for connected sums; as drawn it carries 4-dipoles, so it is not contracted",
        text: FIG1_S4,
        meta: meta(0),
        expected: Some(Expectations {
            vertices: 10,
            h: Some(0),
            chi: Some(2),
            bipartite: true,
            regular_genus: int(0),
            gem_complexity: None,
        }),
        derivation: None,
        connector: Some((0, 1)),
    },
    Builtin {
        name: "fig2_s3xI",
        manifold: "S^3 x [0,1]",
        provenance: "minimal 10-vertex crystallization; color-4 edges deleted from s3xs1_10",
        text: FIG2_S3XI,
        meta: EntryMeta {
            rank: Some(0),
            boundary_genus: Some(0),
            double_rank: Some(1),
            boundary_complexity: None,
        },
        expected: Some(Expectations {
            vertices: 10,
            h: Some(2),
            chi: Some(0),
            bipartite: true,
            regular_genus: int(0),
            gem_complexity: Some(4),
        }),
        derivation: Some(Derivation {
            parent: "s3xs1_10",
            removed: &[(1, 2), (3, 10)],
        }),
        connector: None,
    },
    Builtin {
        name: "fig3_d3xs1",
        manifold: "D^3 x S^1",
        provenance: "minimal 10-vertex crystallization; color-4 edges deleted from s3xs1_10",
        text: FIG3_D3XS1,
        meta: EntryMeta {
            rank: Some(1),
            boundary_genus: Some(1),
            double_rank: Some(1),
            boundary_complexity: Some(3),
        },
        expected: Some(Expectations {
            vertices: 10,
            h: Some(1),
            chi: Some(0),
            bipartite: true,
            regular_genus: int(1),
            gem_complexity: Some(4),
        }),
        derivation: Some(Derivation {
            parent: "s3xs1_10",
            removed: &[(3, 10), (4, 5), (6, 7), (8, 9)],
        }),
        connector: None,
    },
    Builtin {
        name: "fig4_boundary16",
        manifold: "RP^4 with color-4 edges removed (boundary left unidentified)",
        provenance: "minimal 16-vertex crystallization; color-4 edges deleted from rp4_16",
        text: FIG4_BOUNDARY16,
        meta: meta(1),
        expected: Some(Expectations {
            vertices: 16,
            h: Some(1),
            chi: Some(1),
            bipartite: false,
            regular_genus: int(3),
            gem_complexity: Some(7),
        }),
        derivation: Some(Derivation {
            parent: "rp4_16",
            removed: &[(1, 8), (2, 7), (3, 6), (11, 14)],
        }),
        connector: None,
    },
    Builtin {
        name: "s3xs1_10",
        manifold: "S^3 x S^1",
        provenance: "10-vertex crystallization of S^3 x S^1 sharing colors 0-3 with fig1_s4",
        text: S3XS1_10,
        meta: meta(1),
        expected: Some(Expectations {
            vertices: 10,
            h: Some(0),
            chi: Some(0),
            bipartite: true,
            regular_genus: None,
            gem_complexity: Some(4),
        }),
        derivation: None,
        connector: None,
    },
    Builtin {
        name: "rp4_16",
        manifold: "RP^4",
        provenance: "16-vertex crystallization of RP^4",
        text: RP4_16,
        meta: meta(1),
        expected: Some(Expectations {
            vertices: 16,
            h: Some(0),
            chi: Some(1),
            bipartite: false,
            regular_genus: None,
            gem_complexity: Some(7),
        }),
        derivation: None,
        connector: None,
    },
    Builtin {
        name: "s4_order2",
        manifold: "S^4",
        provenance: "standard order-2 gem",
        text: S4_ORDER2,
        meta: meta(0),
        expected: Some(Expectations {
            vertices: 2,
            h: Some(0),
            chi: Some(2),
            bipartite: true,
            regular_genus: int(0),
            gem_complexity: Some(0),
        }),
        derivation: None,
        connector: None,
    },
    Builtin {
        name: "d4_order2",
        manifold: "D^4",
        provenance: "standard order-2 gem; color 4 deleted from s4_order2",
        text: D4_ORDER2,
        meta: EntryMeta {
            rank: Some(0),
            boundary_genus: Some(0),
            double_rank: Some(0),
            boundary_complexity: Some(0),
        },
        expected: Some(Expectations {
            vertices: 2,
            h: Some(1),
            chi: Some(1),
            bipartite: true,
            regular_genus: int(0),
            gem_complexity: Some(0),
        }),
        derivation: Some(Derivation {
            parent: "s4_order2",
            removed: &[(1, 2)],
        }),
        connector: None,
    },
    Builtin {
        name: "s3_order2",
        manifold: "S^3",
        provenance: "standard order-2 gem",
        text: S3_ORDER2,
        meta: meta(0),
        expected: Some(Expectations {
            vertices: 2,
            h: None,
            chi: Some(0),
            bipartite: true,
            regular_genus: int(0),
            gem_complexity: Some(0),
        }),
        derivation: None,
        connector: None,
    },
    Builtin {
        name: "s2xs1_8",
        manifold: "S^2 x S^1",
        provenance: "8-vertex contracted bipartite gem with g_ij = 2 for every pair and H_1 = Z",
        text: S2XS1_8,
        meta: meta(1),
        expected: Some(Expectations {
            vertices: 8,
            h: None,
            chi: Some(0),
            bipartite: true,
            regular_genus: int(1),
            gem_complexity: Some(3),
        }),
        derivation: None,
        connector: None,
    },
    Builtin {
        name: "rp3_8",
        manifold: "RP^3",
        provenance: "8-vertex contracted bipartite gem with g_ij = 2 for every pair and H_1 = Z_2",
        text: RP3_8,
        meta: meta(1),
        expected: Some(Expectations {
            vertices: 8,
            h: None,
            chi: Some(0),
            bipartite: true,
            regular_genus: int(1),
            gem_complexity: Some(3),
        }),
        derivation: None,
        connector: None,
    },
];

fn build(b: &Builtin) -> CatalogEntry {
    CatalogEntry {
        name: b.name.to_string(),
        manifold: b.manifold.to_string(),
        provenance: b.provenance.to_string(),
        graph: parse_gem(b.text).expect("built-in catalog entry parses"),
        meta: b.meta,
        expected: b.expected,
        derivation: b.derivation,
        connector: b.connector,
    }
}

/// Names of the built-in entries, in catalog order.
pub fn builtin_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|b| b.name).collect()
}

/// Canonical GEM text of a built-in entry.
pub fn builtin_text(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|b| b.name == name).map(|b| b.text)
}

pub fn builtin(name: &str) -> Result<CatalogEntry> {
    BUILTINS
        .iter()
        .find(|b| b.name == name)
        .map(build)
        .ok_or_else(|| GemError::UnknownCatalogEntry(name.to_string()))
}

pub fn builtins() -> Vec<CatalogEntry> {
    BUILTINS.iter().map(build).collect()
}

/// The 10-vertex S^4 crystallization and its connector vertices.
pub fn connector_sphere() -> (ColoredGraph, (usize, usize)) {
    let e = build(&BUILTINS[0]);
    (e.graph, e.connector.expect("fig1_s4 has connector vertices"))
}

/// Loads `*.gem` files from `dir` as user entries, sorted by name.
pub fn load_dir(dir: &Path) -> std::io::Result<Vec<std::result::Result<CatalogEntry, (String, GemError)>>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gem"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(&path)?;
        out.push(
            parse_gem(&text)
                .map(|graph| CatalogEntry {
                    name: name.clone(),
                    manifold: String::new(),
                    provenance: format!("user entry {}", path.display()),
                    graph,
                    meta: EntryMeta::default(),
                    expected: None,
                    derivation: None,
                    connector: None,
                })
                .map_err(|e| (name, e)),
        );
    }
    Ok(out)
}

/// Built-in entries followed by the entries of `$GEMKIT_CATALOG_DIR`, if set.
/// User entries whose name clashes with a built-in are skipped.
pub fn catalog_list() -> Vec<String> {
    let mut names: Vec<String> = builtin_names().into_iter().map(String::from).collect();
    for entry in user_entries().into_iter().flatten() {
        if !names.contains(&entry.name) {
            names.push(entry.name);
        }
    }
    names
}

pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    match builtin(name) {
        Ok(e) => Ok(e),
        Err(err) => user_entries()
            .into_iter()
            .flatten()
            .find(|e| e.name == name)
            .ok_or(err),
    }
}

fn user_entries() -> Vec<Option<CatalogEntry>> {
    let Some(dir) = std::env::var_os(CATALOG_DIR_ENV) else {
        return Vec::new();
    };
    match load_dir(Path::new(&dir)) {
        Ok(entries) => entries.into_iter().map(|e| e.ok()).collect(),
        Err(_) => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::write_gem;

    #[test]
    fn builtins_are_canonical() {
        for b in BUILTINS {
            let g = parse_gem(b.text).unwrap();
            assert_eq!(write_gem(&g), b.text, "{}", b.name);
        }
    }

    #[test]
    fn unknown_name() {
        assert_eq!(
            builtin("t3").unwrap_err(),
            GemError::UnknownCatalogEntry("t3".into())
        );
    }
}
