//! Command-line front end: argument parsing, dispatch and output.

pub mod dsl;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use chromllt::chromaticq::{chromatic_bruteforce_bounded, verify_triple_deletion};
use chromllt::lltuni::{
    hook_coefficient, llt_bruteforce_words_bounded, llt_schur_bounded, plethysm_bridge_check, proved_wt_family,
    schur_via_wt, HookRoute, DEFAULT_PERM_BOUND,
};
use chromllt::relcheck::{scan_relations_with, verify_equivalence_with, verify_k_deletion_with, verify_lee_with, RelationReport};
use chromllt::symfunc::{check_conjecture_sw, latex, latex_poly, quasi_to_schur_elw, Basis, SymExpansion};
use chromllt::unigraphs::UnitIntervalGraph;
use chromllt::{Error, QPoly};

use dsl::{parse_expr, DslError, GraphExpr};

/// Exit status for a verification whose identity failed.
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
/// Exit status for command-line usage errors (as reported by clap).
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_INVALID_GRAPH: i32 = 4;
pub const EXIT_RANGE: i32 = 5;
pub const EXIT_BOUND: i32 = 6;
pub const EXIT_NOT_TRIANGLE: i32 = 7;
pub const EXIT_ARITHMETIC: i32 = 8;
pub const EXIT_SHAPE: i32 = 9;
pub const EXIT_IO: i32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    M,
    E,
    S,
    P,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Basis {
        match b {
            BasisArg::M => Basis::Monomial,
            BasisArg::E => Basis::Elementary,
            BasisArg::S => Basis::Schur,
            BasisArg::P => Basis::PowerSum,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChromaticRoute {
    /// Closed form when the expression names a family, brute force otherwise.
    Auto,
    Brute,
    Closed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LltRoute {
    /// Fundamental expansion over permutations.
    F,
    /// All words.
    Words,
    /// Descent-weight sum over standard tableaux.
    Wt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HookRouteArg {
    Shuffle,
    Wt,
    Elw,
}

impl From<HookRouteArg> for HookRoute {
    fn from(r: HookRouteArg) -> HookRoute {
        match r {
            HookRouteArg::Shuffle => HookRoute::Shuffle,
            HookRouteArg::Wt => HookRoute::Wt,
            HookRouteArg::Elw => HookRoute::Elw,
        }
    }
}

/// Chromatic quasisymmetric functions and unicellular LLT polynomials of
/// natural unit interval graphs.
#[derive(Debug, Parser)]
#[command(name = "chromllt", version)]
pub struct CliConfig {
    /// Largest vertex count for brute-force enumeration.
    #[arg(long, global = true, env = "CHROMLLT_MAX_BRUTE", default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_brute: u32,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true, env = "CHROMLLT_WORKERS", value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a chromatic quasisymmetric function or LLT polynomial.
    #[command(subcommand)]
    Compute(ComputeCmd),
    /// Extract a single coefficient.
    #[command(subcommand)]
    Coeff(CoeffCmd),
    /// Check identities and properties.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Render expansions.
    #[command(subcommand)]
    Render(RenderCmd),
}

#[derive(Debug, Subcommand)]
pub enum ComputeCmd {
    Chromatic {
        graph: String,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = ChromaticRoute::Auto)]
        route: ChromaticRoute,
    },
    Llt {
        graph: String,
        #[arg(long, value_enum, default_value_t = BasisArg::S)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = LltRoute::F)]
        route: LltRoute,
    },
}

#[derive(Debug, Subcommand)]
pub enum CoeffCmd {
    /// Coefficient of the hook Schur function s_(k,1^(n-k)) in the LLT polynomial.
    Hook {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = HookRouteArg::Shuffle)]
        route: HookRouteArg,
    },
}

#[derive(Debug, Args)]
pub struct AreaRow {
    /// Area sequence, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub area: Vec<usize>,
    /// Row index (1-based).
    #[arg(long)]
    pub i: usize,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// Three-term relation LLT(a^0) + q LLT(a^2) = (1+q) LLT(a^1).
    Lee {
        #[command(flatten)]
        at: AreaRow,
    },
    /// Deletion relations of depth ell.
    Kdel {
        #[command(flatten)]
        at: AreaRow,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        k: usize,
    },
    /// Whether a combination of chromatic functions and the same
    /// combination of LLT polynomials vanish together.
    Equiv {
        /// Graph expression (repeat, paired with --coeff).
        #[arg(long = "graph", required = true)]
        graphs: Vec<String>,
        /// Coefficient polynomial such as "1+q" or "-1-q" (repeat).
        #[arg(long = "coeff", required = true, allow_hyphen_values = true)]
        coeffs: Vec<String>,
    },
    /// Triple deletion at q = 1 on an edge set.
    Triple {
        /// Graph expression; alternatively give --n and --edges.
        graph: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Edges as a-b pairs, comma separated.
        #[arg(long, value_delimiter = ',')]
        edges: Vec<String>,
        /// The three triangle edges as a-b pairs, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        triangle: Vec<String>,
    },
    /// X_G against (q-1)^(-n) LLT_G[(q-1)X].
    Plethysm { graph: String },
    /// Every relation instance on NUIOs with n vertices.
    Scan {
        #[arg(long)]
        n: usize,
    },
    /// e-positivity, palindromicity and e-unimodality of X_G.
    Conjecture {
        graph: String,
        #[arg(long, value_enum, default_value_t = ChromaticRoute::Auto)]
        route: ChromaticRoute,
    },
    /// Closed form against brute force.
    Chromatic { graph: String },
}

#[derive(Debug, Subcommand)]
pub enum RenderCmd {
    /// LaTeX for the chromatic quasisymmetric function of a graph.
    Latex {
        graph: String,
        #[arg(long, value_enum, default_value_t = BasisArg::E)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = ChromaticRoute::Auto)]
        route: ChromaticRoute,
    },
}

/// A failure with its exit status.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidMSeq { .. } | Error::InvalidArea { .. } | Error::NotUnitInterval(_) => EXIT_INVALID_GRAPH,
            Error::RangeViolation(_) => EXIT_RANGE,
            Error::BruteForceBound { .. } => EXIT_BOUND,
            Error::NotATriangle => EXIT_NOT_TRIANGLE,
            Error::DivisionByZero | Error::NonzeroRemainder | Error::NonIntegral => EXIT_ARITHMETIC,
            Error::InvalidPartition(_)
            | Error::InvalidComposition(_)
            | Error::ShapeMismatch(_)
            | Error::SizeMismatch { .. }
            | Error::InvalidTableau(_)
            | Error::LengthMismatch { .. }
            | Error::DegreeMismatch(..) => EXIT_SHAPE,
        };
        CliError { code, message: e.to_string() }
    }
}

impl From<DslError> for CliError {
    fn from(e: DslError) -> Self {
        match e {
            DslError::Parse(p) => CliError { code: EXIT_PARSE, message: p.to_string() },
            DslError::Graph(g) => g.into(),
        }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: EXIT_USAGE, message: message.into() }
}

/// Rendered output plus whether every verification passed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub passed: bool,
}

struct Ctx {
    bound: usize,
    format: Format,
}

impl Ctx {
    fn manifest(&self, graph: Option<(&str, &UnitIntervalGraph)>) -> Value {
        let mut m = json!({
            "version": env!("CARGO_PKG_VERSION"),
            "bounds": { "max_brute": self.bound },
        });
        if let Some((expr, g)) = graph {
            m["graph"] = json!({ "expr": expr, "n": g.n(), "mseq": g.mseq(), "area": g.area() });
        }
        m
    }
}

fn graph(text: &str) -> Result<(GraphExpr, UnitIntervalGraph), CliError> {
    let expr = parse_expr(text).map_err(DslError::Parse)?;
    let g = expr.to_graph()?;
    Ok((expr, g))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialise");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialise")
}

fn chromatic(ctx: &Ctx, expr: &GraphExpr, g: &UnitIntervalGraph, route: ChromaticRoute) -> Result<(SymExpansion, &'static str), CliError> {
    let closed = || -> Result<SymExpansion, CliError> {
        match expr.closed_form() {
            Some(f) => Ok(f?),
            None => Err(usage("no closed form is known for this graph expression")),
        }
    };
    match route {
        ChromaticRoute::Brute => Ok((chromatic_bruteforce_bounded(g, ctx.bound)?, "brute")),
        ChromaticRoute::Closed => Ok((closed()?, "closed")),
        ChromaticRoute::Auto => match expr.closed_form() {
            Some(f) => Ok((f?, "closed")),
            None => Ok((chromatic_bruteforce_bounded(g, ctx.bound)?, "brute")),
        },
    }
}

fn render_expansion(ctx: &Ctx, f: &SymExpansion, manifest: Value, extra: Value) -> String {
    match ctx.format {
        Format::Text => format!("{f}\n"),
        Format::Latex => format!("{}\n", latex(f)),
        Format::Json => {
            let mut v = json!({ "manifest": manifest, "result": to_value(f) });
            if let Value::Object(extra) = extra {
                for (k, x) in extra {
                    v[k] = x;
                }
            }
            pretty(&v)
        }
    }
}

fn report_line(r: &RelationReport) -> String {
    let mut s = r.relation.clone();
    let p = &r.params;
    if let Some(a) = &p.area {
        let a: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        let _ = write!(s, " area=({})", a.join(","));
    }
    for (name, v) in [("i", p.i), ("ell", p.ell), ("k", p.k), ("edges", p.edge_count)] {
        if let Some(v) = v {
            let _ = write!(s, " {name}={v}");
        }
    }
    let _ = write!(
        s,
        ": hypothesis {}, identity {}",
        if r.hypothesis_ok { "holds" } else { "fails" },
        if r.identity_ok { "holds" } else { "fails" }
    );
    if let Some(w) = &r.witness {
        let _ = write!(s, " [{} at {} q^{}: {}]", w.form, w.partition, w.q_power, w.values.join(" vs "));
    }
    for n in &r.notes {
        let _ = write!(s, " ({n})");
    }
    s
}

fn render_reports(ctx: &Ctx, reports: &[RelationReport], manifest: Value, extra: Option<String>) -> Output {
    let violations = reports.iter().filter(|r| r.is_violation()).count();
    let passed = violations == 0;
    let text = match ctx.format {
        Format::Json => {
            let v = json!({
                "manifest": manifest,
                "reports": reports.iter().map(to_value).collect::<Vec<_>>(),
                "summary": {
                    "instances": reports.len(),
                    "hypothesis_ok": reports.iter().filter(|r| r.hypothesis_ok).count(),
                    "violations": violations,
                    "passed": passed,
                },
            });
            pretty(&v)
        }
        Format::Text | Format::Latex => {
            let mut s = String::new();
            match extra {
                Some(summary) => {
                    s.push_str(&summary);
                    s.push('\n');
                    for r in reports.iter().filter(|r| r.is_violation()) {
                        s.push_str(&report_line(r));
                        s.push('\n');
                    }
                }
                None => {
                    for r in reports {
                        s.push_str(&report_line(r));
                        s.push('\n');
                    }
                }
            }
            s
        }
    };
    Output { text, passed }
}

fn parse_edge(text: &str) -> Result<(usize, usize), CliError> {
    let bad = || usage(format!("edge '{text}' is not of the form a-b"));
    let (a, b) = text.split_once('-').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn run_verify(ctx: &Ctx, cmd: &VerifyCmd) -> Result<Output, CliError> {
    let single = |r: RelationReport, manifest: Value| Ok(render_reports(ctx, &[r], manifest, None));
    match cmd {
        VerifyCmd::Lee { at } => single(verify_lee_with(&at.area, at.i, ctx.bound)?, ctx.manifest(None)),
        VerifyCmd::Kdel { at, ell, k } => single(verify_k_deletion_with(&at.area, at.i, *ell, *k, ctx.bound)?, ctx.manifest(None)),
        VerifyCmd::Equiv { graphs, coeffs } => {
            if graphs.len() != coeffs.len() {
                return Err(usage(format!("{} graphs but {} coefficients", graphs.len(), coeffs.len())));
            }
            let gs: Vec<UnitIntervalGraph> = graphs.iter().map(|t| graph(t).map(|x| x.1)).collect::<Result<_, _>>()?;
            let cs: Vec<QPoly> = coeffs
                .iter()
                .map(|c| c.parse::<QPoly>().map_err(|_| usage(format!("cannot read coefficient '{c}'"))))
                .collect::<Result<_, _>>()?;
            single(verify_equivalence_with(&cs, &gs, ctx.bound)?, ctx.manifest(None))
        }
        VerifyCmd::Triple { graph: expr, n, edges, triangle } => {
            let (n, es, manifest) = match (expr, n) {
                (Some(t), _) => {
                    let (_, g) = graph(t)?;
                    let m = ctx.manifest(Some((t, &g)));
                    (g.n(), g.edges(), m)
                }
                (None, Some(n)) => (*n, edges.iter().map(|e| parse_edge(e)).collect::<Result<_, _>>()?, ctx.manifest(None)),
                (None, None) => return Err(usage("give a graph expression or --n with --edges")),
            };
            let tri: Vec<(usize, usize)> = triangle.iter().map(|e| parse_edge(e)).collect::<Result<_, _>>()?;
            if tri.len() != 3 {
                return Err(usage("--triangle needs exactly three edges"));
            }
            single(verify_triple_deletion(n, &es, tri[0], tri[1], tri[2], ctx.bound)?, manifest)
        }
        VerifyCmd::Plethysm { graph: t } => {
            let (_, g) = graph(t)?;
            single(plethysm_bridge_check(&g, ctx.bound)?, ctx.manifest(Some((t, &g))))
        }
        VerifyCmd::Scan { n } => {
            if *n > 7 {
                return Err(CliError::from(Error::RangeViolation(format!("scan supports n <= 7, got {n}"))));
            }
            let reports = scan_relations_with(*n, ctx.bound)?;
            let held = reports.iter().filter(|r| r.hypothesis_ok).count();
            let bad = reports.iter().filter(|r| r.is_violation()).count();
            let summary = format!("scan n={n}: {} instances, {held} with hypotheses satisfied, {bad} violations", reports.len());
            Ok(render_reports(ctx, &reports, ctx.manifest(None), Some(summary)))
        }
        VerifyCmd::Conjecture { graph: t, route } => {
            let (expr, g) = graph(t)?;
            let (f, used) = chromatic(ctx, &expr, &g, *route)?;
            let mut r = check_conjecture_sw(&f, g.edge_count())?;
            r.params.graphs = Some(vec![g.mseq().to_vec()]);
            r.notes.push(format!("route {used}"));
            single(r, ctx.manifest(Some((t, &g))))
        }
        VerifyCmd::Chromatic { graph: t } => {
            let (expr, g) = graph(t)?;
            let closed = match expr.closed_form() {
                Some(f) => f?,
                None => return Err(usage("no closed form is known for this graph expression")),
            };
            let brute = chromatic_bruteforce_bounded(&g, ctx.bound)?;
            let mut r = RelationReport::new(
                "closed_form",
                chromllt::relcheck::ReportParams {
                    graphs: Some(vec![g.mseq().to_vec()]),
                    edge_count: Some(g.edge_count()),
                    ..Default::default()
                },
            );
            r.hypothesis_ok = true;
            r = match chromllt::relcheck::Witness::first_difference("closed form vs brute force", &closed, &brute) {
                Some(w) => r.fail(w),
                None => {
                    r.identity_ok = true;
                    r
                }
            };
            single(r, ctx.manifest(Some((t, &g))))
        }
    }
}

fn run_inner(cfg: &CliConfig) -> Result<Output, CliError> {
    let ctx = Ctx { bound: cfg.max_brute as usize, format: cfg.format };
    let ok = |text: String| Ok(Output { text, passed: true });
    match &cfg.command {
        Command::Compute(ComputeCmd::Chromatic { graph: t, basis, route }) => {
            let (expr, g) = graph(t)?;
            let (f, used) = chromatic(&ctx, &expr, &g, *route)?;
            let f = f.change_basis((*basis).into())?;
            ok(render_expansion(&ctx, &f, ctx.manifest(Some((t, &g))), json!({ "route": used })))
        }
        Command::Compute(ComputeCmd::Llt { graph: t, basis, route }) => {
            let (_, g) = graph(t)?;
            let d = g.dyck();
            let perm_bound = ctx.bound.max(DEFAULT_PERM_BOUND);
            let (f, extra) = match route {
                LltRoute::F => (quasi_to_schur_elw(&chromllt::lltuni::llt_via_f_bounded(&d, perm_bound)?), json!({ "route": "f" })),
                LltRoute::Words => (llt_bruteforce_words_bounded(&d, ctx.bound)?, json!({ "route": "words" })),
                LltRoute::Wt => {
                    let family = proved_wt_family(&d);
                    let extra = json!({ "route": "wt", "wt_family": family, "conjectural": family.is_none() });
                    (schur_via_wt(&d), extra)
                }
            };
            let f = f.change_basis((*basis).into())?;
            ok(render_expansion(&ctx, &f, ctx.manifest(Some((t, &g))), extra))
        }
        Command::Coeff(CoeffCmd::Hook { graph: t, k, route }) => {
            let (_, g) = graph(t)?;
            let d = g.dyck();
            let c = match route {
                HookRouteArg::Elw => {
                    let s = llt_schur_bounded(&d, ctx.bound.max(DEFAULT_PERM_BOUND))?;
                    if *k == 0 || *k > d.n() {
                        return Err(Error::RangeViolation(format!("hook needs 1 <= k <= n, got k = {k}, n = {}", d.n())).into());
                    }
                    s.coeff(&chromllt::combinat::Partition::hook(d.n(), *k))
                }
                r => hook_coefficient(&d, *k, (*r).into())?,
            };
            let text = match ctx.format {
                Format::Text => format!("{c}\n"),
                Format::Latex => format!("{}\n", latex_poly(&c)),
                Format::Json => pretty(&json!({
                    "manifest": ctx.manifest(Some((t, &g))),
                    "k": k,
                    "route": format!("{route:?}").to_lowercase(),
                    "coefficient": to_value(&c),
                    "text": c.to_string(),
                })),
            };
            ok(text)
        }
        Command::Verify(v) => run_verify(&ctx, v),
        Command::Render(RenderCmd::Latex { graph: t, basis, route }) => {
            let (expr, g) = graph(t)?;
            let (f, _) = chromatic(&ctx, &expr, &g, *route)?;
            ok(format!("{}\n", latex(&f.change_basis((*basis).into())?)))
        }
    }
}

/// Runs a parsed configuration, writing output to `--out` or standard
/// output, and returns the process exit status.
pub fn run(cfg: &CliConfig) -> i32 {
    if let Some(w) = cfg.workers {
        // a second initialisation in the same process is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w as usize).build_global();
    }
    match run_inner(cfg) {
        Ok(out) => {
            let written = match &cfg.out {
                Some(path) => std::fs::write(path, &out.text),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_IO;
            }
            if out.passed {
                0
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}
