mod input;
mod output;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use gemkit_core::constructions::{
    connected_sum_with, crystallize_double, double, interval_product, represents_connected_sum, sphere_connector_sum,
    SumPolicy,
};
use gemkit_core::invariants::{
    certify_minimal, regular_genus, rho_epsilon, rho_epsilon_census, rho_epsilon_via_double, weak_semi_simple,
    PermutationScheme,
};
use gemkit_core::verify::{verify_bounds, verify_identities, IdentityReport};
use gemkit_core::{boundary_graph, catalog, census, face_vector, validate, write_gem, GemError};
use serde::Serialize;

use input::{load, vertex, MetaArgs};
use output::{envelope, is_check_failure, kind, rows, yes, OutArgs, Verdict};

/// Invariants, bounds and constructions for edge-colored graphs encoding
/// PL manifolds.
#[derive(Parser, Debug)]
#[command(name = "gemkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validation, vertex tallies, residue highlights and the face vector.
    Info {
        /// GEM file or catalog entry name.
        input: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Regular genus over all permutation schemes.
    Genus {
        input: String,
        /// List every scheme.
        #[arg(long)]
        all_permutations: bool,
        /// Evaluate a single scheme, e.g. `(2,0,3,1,4)`.
        #[arg(long)]
        scheme: Option<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Lower bounds against the values the graph attains.
    Bounds {
        input: String,
        #[command(flatten)]
        meta: MetaArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Double along the boundary.
    Double {
        input: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Double followed by 1-dipole cancellation down to a crystallization.
    CrystallizeDouble {
        input: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Graph connected sum at two vertices (1-based).
    Connect {
        first: String,
        second: String,
        /// Summing vertex of the first graph.
        #[arg(long, short = 'u', default_value_t = 1)]
        u: usize,
        /// Summing vertex of the second graph.
        #[arg(long, short = 'v', default_value_t = 1)]
        v: usize,
        /// Sum through the built-in 10-vertex S^4 connector.
        #[arg(long)]
        via_sphere: bool,
        /// Enforce the per-color representation condition instead of
        /// requiring internal vertices.
        #[arg(long, conflicts_with = "via_sphere")]
        per_color: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Product of a closed 3-manifold crystallization with an interval.
    Product {
        input: String,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Boundary graph, whole or one component at a time.
    Boundary {
        input: String,
        /// Export only this component (1-based).
        #[arg(long)]
        component: Option<usize>,
        /// Write every component to DIR/component_Q.gem.
        #[arg(long, value_name = "DIR", conflicts_with = "component")]
        split: Option<PathBuf>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Identity and bound checks. Exits 1 when a check fails.
    Verify {
        input: String,
        #[command(flatten)]
        meta: MetaArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Weak semi-simple recognition and minimality certificates.
    Recognize {
        input: String,
        #[command(flatten)]
        meta: MetaArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Built-in and user catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    /// Entry names with their manifolds.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Metadata and GEM text of one entry.
    Show {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Canonical GEM text of one entry.
    Export {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::CheckFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_check_failure(&err) { 1 } else { 2 })
        }
    }
}

fn run(command: Command) -> Result<Verdict> {
    match command {
        Command::Info { input, out } => info(&input, &out),
        Command::Genus {
            input,
            all_permutations,
            scheme,
            out,
        } => genus(&input, all_permutations, scheme.as_deref(), &out),
        Command::Bounds { input, meta, out } => bounds(&input, &meta, &out),
        Command::Double { input, out } => {
            let l = load(&input)?;
            let (g, provenance) = double(&l.graph)?;
            out.graph("double", &l.label, &g, &provenance)?;
            Ok(Verdict::Ok)
        }
        Command::CrystallizeDouble { input, out } => {
            let l = load(&input)?;
            let result = crystallize_double(&l.graph)?;
            out.graph("crystallize-double", &l.label, &result.graph, &result)?;
            Ok(Verdict::Ok)
        }
        Command::Connect {
            first,
            second,
            u,
            v,
            via_sphere,
            per_color,
            out,
        } => connect(&first, &second, u, v, via_sphere, per_color, &out),
        Command::Product { input, out } => {
            let l = load(&input)?;
            let g = interval_product(&l.graph)?;
            #[derive(Serialize)]
            struct Scheme {
                scheme: PermutationScheme,
            }
            out.graph(
                "product",
                &l.label,
                &g,
                &Scheme {
                    scheme: gemkit_core::constructions::product_scheme(),
                },
            )?;
            Ok(Verdict::Ok)
        }
        Command::Boundary {
            input,
            component,
            split,
            out,
        } => boundary(&input, component, split, &out),
        Command::Verify { input, meta, out } => verify(&input, &meta, &out),
        Command::Recognize { input, meta, out } => recognize(&input, &meta, &out),
        Command::Catalog { action } => catalog_cmd(action),
    }
}

fn info(input: &str, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let g = &l.graph;
    let report = validate(g)?;
    let fv = face_vector(g);
    let c = census(g)?;
    #[derive(Serialize)]
    struct Info<'a> {
        validation: &'a gemkit_core::ValidationReport,
        face_vector: &'a gemkit_core::FaceVector,
        census: &'a gemkit_core::ResidueCensus,
    }
    out.report(
        "info",
        &l.label,
        &Info {
            validation: &report,
            face_vector: &fv,
            census: &c,
        },
        || {
            let t = g.tally();
            let hats: Vec<String> = (0..=g.dim()).map(|i| c.g_hat([i]).to_string()).collect();
            let mut s = rows(&[
                ("input", l.label.clone()),
                ("dimension", g.dim().to_string()),
                ("vertices", format!("{} ({} internal, {} boundary)", t.total, t.internal, t.boundary)),
                ("kind", kind(report.crystallization)),
                ("connected", yes(report.connected).into()),
                ("bipartite", yes(report.bipartite).into()),
                ("contracted", yes(report.contracted).into()),
                ("boundary components", report.boundary_components.to_string()),
                ("g of Γ_ĉ, c = 0..d", hats.join(" ")),
                (
                    "face vector",
                    fv.f.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
                ),
                ("χ", fv.chi().to_string()),
            ]);
            for w in &report.warnings {
                writeln!(s, "warning: {w}").unwrap();
            }
            s
        },
    )?;
    Ok(Verdict::Ok)
}

fn genus(input: &str, all: bool, scheme: Option<&str>, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let g = &l.graph;
    if let Some(text) = scheme {
        let s = PermutationScheme::parse(text, g.dim())?;
        let e = rho_epsilon(g, &s)?;
        let alt = |r: Result<gemkit_core::Ratio, GemError>| r.ok().map(|x| x.to_string());
        let (via_double, via_census) = if g.dim() == 4 && !g.is_closed() {
            (alt(rho_epsilon_via_double(g, &s)), alt(rho_epsilon_census(g, &s)))
        } else {
            (None, None)
        };
        #[derive(Serialize)]
        struct One<'a> {
            #[serde(flatten)]
            genus: &'a gemkit_core::invariants::SchemeGenus,
            via_double: Option<String>,
            via_census: Option<String>,
        }
        let disagree = [&via_double, &via_census]
            .iter()
            .any(|v| v.as_ref().is_some_and(|x| *x != e.rho.to_string()));
        out.report(
            "genus",
            &l.label,
            &One {
                genus: &e,
                via_double: via_double.clone(),
                via_census: via_census.clone(),
            },
            || {
                let mut pairs = vec![
                    ("scheme", s.to_string()),
                    ("χ_ε", e.chi.to_string()),
                    ("λ_ε", e.lambda.to_string()),
                    ("ρ_ε", e.rho.to_string()),
                ];
                if let Some(d) = &via_double {
                    pairs.push(("ρ_ε via double", d.clone()));
                }
                if let Some(c) = &via_census {
                    pairs.push(("ρ_ε via census", c.clone()));
                }
                rows(&pairs)
            },
        )?;
        return Ok(Verdict::from_pass(!disagree));
    }
    let p = regular_genus(g)?;
    out.report("genus", &l.label, &p, || {
        let mut s = String::new();
        writeln!(s, "ρ(Γ) = {}", p.rho).unwrap();
        writeln!(s, "attained at {} ({} schemes)", p.argmin, p.schemes.len()).unwrap();
        if p.cross_checked {
            writeln!(s, "double and census formulas agree on every scheme").unwrap();
        }
        if all {
            writeln!(s).unwrap();
            let mut header = format!("{:<14} {:>5} {:>4} {:>6}", "scheme", "χ_ε", "λ_ε", "ρ_ε");
            if p.cross_checked {
                header.push_str(&format!(" {:>7} {:>7}", "double", "census"));
            }
            writeln!(s, "{header}").unwrap();
            for e in &p.schemes {
                let mut line = format!(
                    "{:<14} {:>5} {:>4} {:>6}",
                    e.genus.scheme.to_string(),
                    e.genus.chi,
                    e.genus.lambda,
                    e.genus.rho.to_string()
                );
                if let (Some(a), Some(b)) = (e.via_double, e.via_census) {
                    line.push_str(&format!(" {:>7} {:>7}", a.to_string(), b.to_string()));
                }
                writeln!(s, "{line}").unwrap();
            }
        }
        for d in &p.diagnostics {
            writeln!(s, "diagnostic: {d}").unwrap();
        }
        s
    })?;
    Ok(Verdict::Ok)
}

fn render_checks(title: &str, r: &IdentityReport) -> String {
    let mut s = String::new();
    writeln!(s, "{title}: {}", if r.pass { "pass" } else { "FAIL" }).unwrap();
    writeln!(s, "  input is a {}", kind(r.crystallization)).unwrap();
    for c in &r.checks {
        let sharp = match c.sharp {
            Some(true) => " (sharp)",
            _ => "",
        };
        writeln!(
            s,
            "  [{}] {:<28} {}: {} {} {}{sharp}",
            if c.pass { " ok " } else { "FAIL" },
            c.family,
            c.name,
            c.left,
            c.relation.symbol(),
            c.right
        )
        .unwrap();
    }
    for k in &r.skipped {
        writeln!(s, "  [skip] {:<28} {}", k.family, k.reason).unwrap();
    }
    s
}

fn bounds(input: &str, meta: &MetaArgs, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let m = meta.resolve(&l)?;
    let r = verify_bounds(&l.graph, &m)?;
    out.report("bounds", &l.label, &r, || render_checks("bounds", &r))?;
    Ok(Verdict::from_pass(r.pass))
}

fn verify(input: &str, meta: &MetaArgs, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let m = meta.resolve(&l)?;
    let identities = verify_identities(&l.graph, &m)?;
    let bound_checks = verify_bounds(&l.graph, &m)?;
    let pass = identities.pass && bound_checks.pass;
    #[derive(Serialize)]
    struct Verify<'a> {
        pass: bool,
        meta: &'a gemkit_core::invariants::ManifoldMeta,
        identities: &'a IdentityReport,
        bounds: &'a IdentityReport,
    }
    out.report(
        "verify",
        &l.label,
        &Verify {
            pass,
            meta: &m,
            identities: &identities,
            bounds: &bound_checks,
        },
        || {
            let mut s = render_checks("identities", &identities);
            s.push_str(&render_checks("bounds", &bound_checks));
            writeln!(s, "overall: {}", if pass { "pass" } else { "FAIL" }).unwrap();
            s
        },
    )?;
    Ok(Verdict::from_pass(pass))
}

fn recognize(input: &str, meta: &MetaArgs, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let m = meta.resolve(&l)?;
    let w = weak_semi_simple(&l.graph, &m)?;
    let minimal = certify_minimal(&l.graph, &m)?;
    #[derive(Serialize)]
    struct Recognize<'a> {
        weak_semi_simple: &'a gemkit_core::invariants::WeakSemiSimpleReport,
        minimality: &'a gemkit_core::invariants::MinimalityReport,
    }
    out.report(
        "recognize",
        &l.label,
        &Recognize {
            weak_semi_simple: &w,
            minimality: &minimal,
        },
        || {
            let relabel = |p: Option<[usize; 4]>| match p {
                Some(p) => format!("yes, colors {:?} as 0..3", p),
                None => "no".into(),
            };
            let type_i = match w.type_i {
                None => "unknown (needs --boundary-genus)".into(),
                Some(_) => relabel(w.first_type_i),
            };
            rows(&[
                ("weak semi-simple type I", type_i),
                ("weak semi-simple type II", relabel(w.first_type_ii)),
                ("gem-complexity", minimal.gem_complexity.to_string()),
                (
                    "complexity bounds",
                    match minimal.complexity_bounds.1 {
                        Some(b) => format!("{}, {b}", minimal.complexity_bounds.0),
                        None => minimal.complexity_bounds.0.to_string(),
                    },
                ),
                ("certified minimal", yes(minimal.certified_minimal).into()),
                ("ρ(Γ)", minimal.regular_genus.to_string()),
                ("genus bound attained", yes(minimal.genus_attained).into()),
            ])
        },
    )?;
    Ok(Verdict::Ok)
}

fn connect(
    first: &str,
    second: &str,
    u: usize,
    v: usize,
    via_sphere: bool,
    per_color: bool,
    out: &OutArgs,
) -> Result<Verdict> {
    let a = load(first)?;
    let b = load(second)?;
    let (u0, v0) = (vertex(&a.graph, u, "first")?, vertex(&b.graph, v, "second")?);
    let g = if via_sphere {
        sphere_connector_sum(&a.graph, u0, &b.graph, v0)?
    } else {
        let policy = if per_color {
            SumPolicy::PerColorCondition
        } else {
            SumPolicy::InternalVertices
        };
        connected_sum_with(&a.graph, u0, &b.graph, v0, policy)?
    };
    #[derive(Serialize)]
    struct Sum {
        via_sphere: bool,
        /// Whether the per-color condition holds at the chosen vertices.
        represents_connected_sum: bool,
    }
    let label = format!("{} + {}", a.label, b.label);
    let info = Sum {
        via_sphere,
        represents_connected_sum: via_sphere || represents_connected_sum(&a.graph, u0, &b.graph, v0),
    };
    if !info.represents_connected_sum && !out.json {
        eprintln!("note: the per-color condition fails at these vertices; the result need not represent the connected sum");
    }
    out.graph("connect", &label, &g, &info)?;
    Ok(Verdict::Ok)
}

fn boundary(input: &str, component: Option<usize>, split: Option<PathBuf>, out: &OutArgs) -> Result<Verdict> {
    let l = load(input)?;
    let bg = boundary_graph(&l.graph)?;
    let Some(whole) = bg.as_graph() else {
        bail!("{} has no boundary vertices", l.label);
    };
    if let Some(dir) = split {
        std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        for q in 0..bg.component_count() {
            let path = dir.join(format!("component_{}.gem", q + 1));
            std::fs::write(&path, write_gem(&bg.component_graph(q)))
                .with_context(|| format!("writing {}", path.display()))?;
        }
        #[derive(Serialize)]
        struct Split {
            components: Vec<usize>,
        }
        let sizes: Vec<usize> = bg.components().iter().map(Vec::len).collect();
        let summary = Split { components: sizes };
        out.report("boundary", &l.label, &summary, || {
            let mut s = String::new();
            for (q, n) in summary.components.iter().enumerate() {
                writeln!(s, "component {}: {n} vertices -> component_{}.gem", q + 1, q + 1).unwrap();
            }
            s
        })?;
        return Ok(Verdict::Ok);
    }
    let g = match component {
        Some(q) if q == 0 || q > bg.component_count() => {
            bail!("component {q} is outside 1..={}", bg.component_count())
        }
        Some(q) => bg.component_graph(q - 1),
        None => whole.clone(),
    };
    #[derive(Serialize)]
    struct Parent<'a> {
        component_count: usize,
        /// 1-based parent vertex of each boundary-graph vertex.
        parent_vertices: Vec<usize>,
        components: &'a [Vec<usize>],
    }
    let parents: Vec<usize> = match component {
        Some(q) => bg.components()[q - 1].iter().map(|&i| bg.parent_vertices()[i] + 1).collect(),
        None => bg.parent_vertices().iter().map(|&p| p + 1).collect(),
    };
    out.graph(
        "boundary",
        &l.label,
        &g,
        &Parent {
            component_count: bg.component_count(),
            parent_vertices: parents,
            components: bg.components(),
        },
    )?;
    Ok(Verdict::Ok)
}

fn catalog_cmd(action: CatalogAction) -> Result<Verdict> {
    match action {
        CatalogAction::List { json } => {
            #[derive(Serialize)]
            struct Item {
                name: String,
                manifold: String,
                dim: usize,
                vertices: usize,
            }
            let items: Vec<Item> = catalog::catalog_list()
                .into_iter()
                .filter_map(|name| catalog::catalog_get(&name).ok())
                .map(|e| Item {
                    dim: e.graph.dim(),
                    vertices: e.graph.vertex_count(),
                    name: e.name,
                    manifold: e.manifold,
                })
                .collect();
            if json {
                print!("{}", envelope("catalog list", "", &items)?);
            } else {
                for i in &items {
                    println!("{:<18} d={} {:>3} vertices  {}", i.name, i.dim, i.vertices, i.manifold);
                }
            }
        }
        CatalogAction::Show { name, json } => {
            let e = catalog::catalog_get(&name)?;
            if json {
                #[derive(Serialize)]
                struct Show<'a> {
                    #[serde(flatten)]
                    entry: &'a catalog::CatalogEntry,
                    gem: String,
                }
                print!(
                    "{}",
                    envelope(
                        "catalog show",
                        &name,
                        &Show {
                            entry: &e,
                            gem: write_gem(&e.graph),
                        }
                    )?
                );
            } else {
                let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
                let mut pairs = vec![
                    ("name", e.name.clone()),
                    ("manifold", e.manifold.clone()),
                    ("provenance", e.provenance.clone()),
                    ("rank", opt(e.meta.rank)),
                    ("boundary genus", opt(e.meta.boundary_genus)),
                    ("double rank", opt(e.meta.double_rank)),
                    ("boundary complexity", opt(e.meta.boundary_complexity)),
                ];
                if let Some(d) = &e.derivation {
                    let removed: Vec<String> = d.removed.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    pairs.push((
                        "derived from",
                        format!("{} minus color-{} edges {}", d.parent, e.graph.dim(), removed.join(" ")),
                    ));
                }
                if let Some((a, b)) = e.connector {
                    pairs.push(("connector vertices", format!("{} {}", a + 1, b + 1)));
                }
                print!("{}", rows(&pairs));
                println!();
                print!("{}", write_gem(&e.graph));
            }
        }
        CatalogAction::Export { name, output } => {
            let e = catalog::catalog_get(&name)?;
            OutArgs { json: false, output }.emit(&write_gem(&e.graph))?;
        }
    }
    Ok(Verdict::Ok)
}
