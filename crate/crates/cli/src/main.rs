mod spec;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use ffgrid_core::bridge::lift_latin_gds;
use ffgrid_core::campaign::{run_campaign, CampaignConfig, CampaignId};
use ffgrid_core::descent::find_descents;
use ffgrid_core::first_fit::{first_fit, Coloring};
use ffgrid_core::gds::{certify, hitting_set_gds, minimum_gds, GdsCertificate, GdsMethod, HittingMode, SearchStats};
use ffgrid_core::graph::{cartesian_product, VertexOrder};
use ffgrid_core::io::{color_grid, grid_csv, parse_grid, CertificateRecord};
use ffgrid_core::latin::tensor_defining_set;
use ffgrid_core::ordering::{is_quasi_lex, lex_ordering, OrderingKind, ProductOrdering};
use ffgrid_core::Caps;

use spec::{latin_level, parse_latin, parse_order_spec, parse_product, OrderSpec};

#[derive(Parser)]
#[command(
    name = "ffgrid",
    version,
    about = "First-Fit colorings of Cartesian products, descents and greedy defining sets"
)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Cap overrides, e.g. `grundy=14,enumeration=20`; applied after FFGRID_CAP_OVERRIDE.
    #[arg(long, global = true)]
    caps: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    HittingGreedy,
    HittingExact,
    Exhaustive,
    Dk,
    Lift,
}

#[derive(Subcommand)]
enum Command {
    /// First-Fit coloring of a product.
    Color {
        /// Two factors: `Kn`, `Pn`, `Cn` or edge-list paths, e.g. `K8,K8`.
        #[arg(long)]
        product: String,
        /// `lex`, `file:<path>` or `perm:<list>`.
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Greedy defining set of a Latin square or a product coloring.
    Gds {
        /// `Lk:<k>`, `Ct:<t>` or a Latin CSV path.
        #[arg(long)]
        latin: Option<String>,
        #[arg(long)]
        product: Option<String>,
        /// Color grid of the product (defaults to its First-Fit coloring).
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long, default_value = "lex")]
        order: String,
        #[arg(long, value_enum, default_value_t = Method::HittingExact)]
        method: Method,
    },
    /// Run a property campaign: T1..T11, P1, COR or LIFT.
    Verify {
        id: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        trials: Option<usize>,
        /// Size parameter (product size, order or level, by campaign).
        #[arg(long)]
        nmax: Option<usize>,
        /// Largest factor vertex count for graph campaigns.
        #[arg(long)]
        vmax: Option<usize>,
        #[arg(long)]
        product: Option<String>,
    },
}

struct Output {
    text: String,
    passed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&cli, &out.text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(std::io::stdout().write_all(text.as_bytes())?),
    }
}

fn run(cli: &Cli) -> Result<Output> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let mut caps = Caps::from_env()?;
    if let Some(spec) = &cli.caps {
        caps.apply_overrides(spec)?;
    }
    match &cli.command {
        Command::Color { product, order } => color(cli.format, product, order),
        Command::Gds {
            latin,
            product,
            coloring,
            order,
            method,
        } => gds(
            cli.format,
            latin.as_deref(),
            product.as_deref(),
            coloring.as_ref(),
            order,
            *method,
            &caps,
        ),
        Command::Verify {
            id,
            seed,
            trials,
            nmax,
            vmax,
            product,
        } => {
            let cfg = CampaignConfig {
                seed: *seed,
                trials: *trials,
                nmax: *nmax,
                vmax: *vmax,
                products: product.as_deref().map(parse_product).transpose()?.map(|p| vec![p]),
                caps,
            };
            verify(cli.format, id.parse()?, &cfg, product.as_deref())
        }
    }
}

fn json_text(value: &impl Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn grid_text(rows: &[Vec<u32>]) -> String {
    let width = rows.iter().flatten().max().map_or(1, |m| m.to_string().len());
    rows.iter()
        .map(|r| r.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ") + "\n")
        .collect()
}

fn color(format: Format, product_spec: &str, order_spec: &str) -> Result<Output> {
    let (g, h) = parse_product(product_spec)?;
    let product = cartesian_product(&g.graph, &h.graph)?;
    let dims = product.dims();
    let (order, kind) = match parse_order_spec(order_spec, product.n())? {
        OrderSpec::Lex => (lex_ordering(&g, &h).order, OrderingKind::Lex),
        OrderSpec::Explicit(order) => {
            let tau = ProductOrdering::new(dims, order, OrderingKind::Arbitrary)?;
            let kind = if is_quasi_lex(&tau, &g, &h)? {
                OrderingKind::QuasiLex
            } else {
                OrderingKind::Arbitrary
            };
            (tau.order, kind)
        }
    };
    let c = first_fit(&product.graph, &order);
    let descent_free = find_descents(&product.graph, &order, &c)?.is_empty();
    let grid = color_grid(&product, c.colors());
    let kind_name = match kind {
        OrderingKind::Lex => "lex",
        OrderingKind::QuasiLex => "quasi-lex",
        OrderingKind::Arbitrary => "arbitrary",
    };
    let text = match format {
        Format::Text => format!(
            "product: {product_spec} ({}x{}, {} vertices)\nordering: {kind_name}\ncolors: {}\ndescent-free: {}\n{}",
            dims.0,
            dims.1,
            product.n(),
            c.k(),
            if descent_free { "yes" } else { "no" },
            grid_text(&grid)
        ),
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "color",
            "product": product_spec,
            "dims": [dims.0, dims.1],
            "ordering": kind_name,
            "k": c.k(),
            "descent_free": descent_free,
            "grid": grid,
        }))?,
        Format::Csv => grid_csv(&grid),
    };
    Ok(Output {
        text,
        passed: descent_free,
    })
}

#[allow(clippy::too_many_arguments)]
fn gds(
    format: Format,
    latin: Option<&str>,
    product_spec: Option<&str>,
    coloring: Option<&PathBuf>,
    order_spec: &str,
    method: Method,
    caps: &Caps,
) -> Result<Output> {
    let (cert, n_h, target): (GdsCertificate, usize, String) = match (method, latin, product_spec) {
        (Method::Lift, Some(l), Some(p)) => {
            let (g, h) = parse_product(p)?;
            let r = parse_latin(l)?;
            let (rp, ro) = r.product()?;
            let s = hitting_set_gds(&rp.graph, &ro, &r.to_coloring()?, HittingMode::Exact, caps)?.domain;
            let lift = lift_latin_gds(&g, &h, &r, &s)?;
            (lift.certificate, h.n(), format!("{p} lifted from {l}"))
        }
        (Method::Lift, _, _) => bail!("--method lift needs both --product and --latin"),
        (_, Some(l), None) => {
            let r = parse_latin(l)?;
            let (product, order) = r.product()?;
            let c = r.to_coloring()?;
            let cert = if method == Method::Dk {
                let k = latin_level(l).context("--method dk needs --latin Lk:<k>")?;
                certify(
                    &product.graph,
                    &order,
                    &c,
                    tensor_defining_set(k)?.cells(),
                    GdsMethod::Dk,
                    SearchStats::default(),
                )?
            } else {
                search(&product.graph, &order, &c, method, caps)?
            };
            (cert, r.cols(), l.to_string())
        }
        (Method::Dk, _, _) => bail!("--method dk needs --latin Lk:<k>"),
        (_, None, Some(p)) => {
            let (g, h) = parse_product(p)?;
            let product = cartesian_product(&g.graph, &h.graph)?;
            let order = match parse_order_spec(order_spec, product.n())? {
                OrderSpec::Lex => lex_ordering(&g, &h).order,
                OrderSpec::Explicit(o) => o,
            };
            let c = match coloring {
                Some(path) => {
                    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                    let rows = parse_grid(&text).with_context(|| format!("in {}", path.display()))?;
                    if rows.len() != g.n() || rows[0].len() != h.n() {
                        bail!(
                            "coloring grid is {}x{}, product is {}x{}",
                            rows.len(),
                            rows[0].len(),
                            g.n(),
                            h.n()
                        );
                    }
                    Coloring::new(rows.concat())?
                }
                None => first_fit(&product.graph, &order),
            };
            (search(&product.graph, &order, &c, method, caps)?, h.n(), p.to_string())
        }
        (_, Some(_), Some(_)) => bail!("give either --latin or --product (both only with --method lift)"),
        (_, None, None) => bail!("give --latin or --product"),
    };
    let record = CertificateRecord::new(&cert, n_h);
    let text = match format {
        Format::Text => {
            let cells: Vec<String> = record
                .vertices
                .iter()
                .zip(&record.colors)
                .map(|([i, j], c)| format!("({i},{j})={c}"))
                .collect();
            let s = &record.search_stats;
            format!(
                "target: {target}\nmethod: {}\nsize: {}\nverified: {}\ncolors: {}\ndescents: {}, family: {}, nodes: {}, lower bound: {}, candidates: {}\ncells: {}\n",
                record.method,
                cert.size(),
                if cert.verified { "yes" } else { "no" },
                record.k,
                s.descents,
                s.family_size,
                s.nodes,
                s.lower_bound,
                s.candidates_checked,
                cells.join(" ")
            )
        }
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "gds",
            "target": target,
            "size": cert.size(),
            "certificate": record,
        }))?,
        Format::Csv => record.to_csv(),
    };
    Ok(Output {
        text,
        passed: cert.verified,
    })
}

fn search(
    g: &ffgrid_core::graph::Graph,
    order: &VertexOrder,
    c: &Coloring,
    method: Method,
    caps: &Caps,
) -> Result<GdsCertificate> {
    Ok(match method {
        Method::HittingGreedy => hitting_set_gds(g, order, c, HittingMode::Greedy, caps)?,
        Method::HittingExact => hitting_set_gds(g, order, c, HittingMode::Exact, caps)?,
        Method::Exhaustive => minimum_gds(g, order, c, caps)?,
        Method::Dk | Method::Lift => unreachable!("handled by the caller"),
    })
}

fn verify(format: Format, id: CampaignId, cfg: &CampaignConfig, product: Option<&str>) -> Result<Output> {
    let report = run_campaign(id, cfg)?;
    let text = match format {
        Format::Text => {
            let mut t = format!("{id}: {}\n", id.describe());
            for c in &report.checks {
                t.push_str(&format!(
                    "{} {}: {}\n",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                ));
            }
            t.push_str(&format!("result: {}\n", if report.passed { "PASS" } else { "FAIL" }));
            t
        }
        Format::Json => json_text(&json!({
            "schema": 1,
            "command": "verify",
            "config": {
                "seed": cfg.seed,
                "trials": cfg.trials,
                "nmax": cfg.nmax,
                "vmax": cfg.vmax,
                "product": product,
                "caps": cfg.caps,
            },
            "report": report,
        }))?,
        Format::Csv => {
            let mut t = String::from("id,check,passed,detail\n");
            for c in &report.checks {
                t.push_str(&format!(
                    "{id},\"{}\",{},\"{}\"\n",
                    c.name,
                    c.passed,
                    c.detail.replace('"', "\"\"")
                ));
            }
            t
        }
    };
    Ok(Output {
        text,
        passed: report.passed,
    })
}
