//! The `tokentw` command line.
//!
//! Exit codes: 0 success, 1 failed invariant, 2 usage or input error, 3 resource cap.
//! Errors are reported on stderr as a single line `tokentw: error kind=<kind>: <message>`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bramble::{kn_bramble, star_bramble, Bramble};
use crate::decompositions::{
    f2kn_path_decomposition, fkkn_lex_decomposition, star_decomposition, TreeDecomposition,
};
use crate::error::{Error, Result};
use crate::formulas::{bounds, BoundReport};
use crate::graph::{generate, Family, Graph, GraphJson, Label};
use crate::oracles::{
    border, decomposition_from_ordering, exact_treewidth_capped, f2pn_balanced_ordering,
    f2pn_ordering, lambda2_capped, max_border, mmb_exhaustive_capped, spectral_lower_bound_capped,
    SpectralReport, VertexOrdering,
};
use crate::token::{token_graph_capped, HostRef, TokenGraph};
use crate::verify::{self, Caps, Suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "tokentw",
    version,
    about = "Token graphs, their decompositions, brambles and exact treewidth"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[arg(long, global = true, env = "TOKENTW_CAP_TOKEN_VERTICES", default_value_t = crate::token::DEFAULT_MAX_TOKEN_VERTICES)]
    pub cap_token_vertices: usize,

    #[arg(long, global = true, env = "TOKENTW_CAP_TREEWIDTH", default_value_t = crate::oracles::DEFAULT_TREEWIDTH_CAP)]
    pub cap_treewidth: usize,

    #[arg(long, global = true, env = "TOKENTW_CAP_MMB", default_value_t = crate::oracles::DEFAULT_MMB_CAP)]
    pub cap_mmb: usize,

    #[arg(long, global = true, env = "TOKENTW_CAP_EIGEN", default_value_t = crate::oracles::DEFAULT_EIGEN_CAP)]
    pub cap_eigen: usize,
}

impl Common {
    fn caps(&self) -> Result<Caps> {
        let caps = Caps {
            token_vertices: self.cap_token_vertices,
            treewidth: self.cap_treewidth,
            mmb: self.cap_mmb,
            eigen: self.cap_eigen,
        };
        if [caps.token_vertices, caps.treewidth, caps.mmb, caps.eigen].contains(&0) {
            return Err(Error::invalid("caps must be positive"));
        }
        Ok(caps)
    }
}

/// Where a graph comes from: a JSON file, or a generated family with an optional token count.
#[derive(Debug, Args)]
pub struct GraphSource {
    /// Graph JSON (`labels`, `edges`); token-graph JSON is accepted too.
    #[arg(long, conflicts_with_all = ["family", "n", "k"])]
    pub graph: Option<PathBuf>,

    #[arg(long, value_enum, requires = "n")]
    pub family: Option<Family>,

    #[arg(long)]
    pub n: Option<usize>,

    /// Token count; without it the base graph itself is used.
    #[arg(long, requires = "family")]
    pub k: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NamedOrdering {
    /// `F_2(P_n)` by `x1 + x2`, ties by smaller `x1`.
    Diagonal,
    /// `F_2(P_n)` by `x1 + x2`, odd diagonals from the middle outwards.
    Balanced,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a token graph, or its decomposition or bramble, as JSON.
    Build {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Emit the explicit decomposition instead of the graph.
        #[arg(long, conflicts_with = "bramble")]
        decomp: bool,
        /// Emit the bramble instead of the graph (k = 2, star or complete).
        #[arg(long)]
        bramble: bool,
    },
    /// Run the cross-check battery.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        random_graphs: usize,
    },
    /// Tabulate closed-form bounds over a range of n.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: usize,
        /// `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        /// Add exact treewidth where it fits under the oracle cap.
        #[arg(long)]
        oracle: bool,
    },
    /// Exact treewidth with an optimal elimination ordering.
    Tw {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Exhaustive minimax border with a witness ordering.
    Mmb {
        #[command(flatten)]
        source: GraphSource,
    },
    /// Border of a vertex set, or the max border of an ordering.
    Border {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated vertex labels.
        #[arg(long, value_delimiter = ',', required_unless_present_any = ["order", "ordering"])]
        set: Vec<Label>,
        /// Comma-separated vertex labels, a full ordering.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["set", "ordering"])]
        order: Vec<Label>,
        /// A named ordering of `F_2(P_n)`.
        #[arg(long, value_enum, conflicts_with = "set")]
        ordering: Option<NamedOrdering>,
    },
    /// Build a bramble, validate it and compute its order.
    Bramble {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// Algebraic connectivity and the spectral treewidth lower bound.
    Spectral {
        #[command(flatten)]
        source: GraphSource,
    },
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|e| format!("bad number {t:?}: {e}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

/// What a command produced: a JSON value, its text and CSV renderings, and whether every
/// invariant it checked held.
pub struct Output {
    pub json: Value,
    pub text: String,
    pub csv: Option<String>,
    pub passed: bool,
    pub cap_only: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            csv: None,
            passed: true,
            cap_only: false,
        }
    }

    fn render(&self, format: Format) -> Result<String> {
        Ok(match format {
            Format::Json => serde_json::to_string_pretty(&self.json)? + "\n",
            Format::Text => self.text.clone(),
            Format::Csv => match &self.csv {
                Some(csv) => csv.clone(),
                None => {
                    return Err(Error::invalid(
                        "csv output is only available for table and verify",
                    ))
                }
            },
        })
    }
}

fn load_graph(source: &GraphSource, caps: &Caps) -> Result<(Graph, Option<TokenGraph>)> {
    if let Some(path) = &source.graph {
        let json: GraphJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        return Ok((Graph::from_json(&json)?, None));
    }
    let (Some(family), Some(n)) = (source.family, source.n) else {
        return Err(Error::invalid(
            "give --graph FILE or --family F --n N [--k K]",
        ));
    };
    let base = generate(family, n)?;
    match source.k {
        Some(k) => {
            let tg = token_graph_capped(&base, k, caps.token_vertices)?;
            Ok((tg.graph().clone(), Some(tg)))
        }
        None => Ok((base, None)),
    }
}

fn labels(g: &Graph, order: &[usize]) -> Vec<Label> {
    order.iter().map(|&v| g.label(v)).collect()
}

fn explicit_decomposition(
    family: Family,
    n: usize,
    k: usize,
    caps: &Caps,
) -> Result<TreeDecomposition> {
    match family {
        Family::Star => star_decomposition(n, k),
        Family::Complete if k == 2 => f2kn_path_decomposition(n),
        Family::Complete => fkkn_lex_decomposition(n, k),
        Family::Path => {
            let tg = token_graph_capped(&generate(family, n)?, k, caps.token_vertices)?;
            let ordering = if k == 2 {
                f2pn_balanced_ordering(n)?
            } else {
                exact_treewidth_capped(tg.graph(), caps.treewidth)?.ordering
            };
            decomposition_from_ordering(tg.graph(), &ordering)
        }
    }
}

fn explicit_bramble(family: Family, n: usize) -> Result<Bramble> {
    match family {
        Family::Star => star_bramble(n),
        Family::Complete => kn_bramble(n),
        Family::Path => Err(Error::invalid(
            "brambles are constructed for stars and complete graphs only",
        )),
    }
}

fn cmd_build(
    family: Family,
    n: usize,
    k: usize,
    decomp: bool,
    bramble: bool,
    caps: &Caps,
) -> Result<Output> {
    let host = HostRef { family, n, k };
    let tg = host.build(caps.token_vertices)?;
    if decomp {
        let td = explicit_decomposition(family, n, k, caps)?;
        let report = td.validate(tg.graph())?;
        let width = td.width()?;
        let text = format!(
            "decomposition {family} n={n} k={k}: {} nodes, width {width}, {}\n",
            td.n_nodes(),
            if report.is_valid() {
                "valid"
            } else {
                "INVALID"
            }
        );
        let mut out = Output::new(serde_json::to_value(td.to_json(Some(host)))?, text);
        out.passed = report.is_valid();
        return Ok(out);
    }
    if bramble {
        if k != 2 {
            return Err(Error::invalid(
                "brambles are built on 2-token graphs; use --k 2",
            ));
        }
        let b = explicit_bramble(family, n)?;
        let report = b.validate(tg.graph())?;
        let text = format!(
            "bramble {family} n={n}: {} sets, {}\n",
            b.len(),
            if report.is_valid() {
                "valid"
            } else {
                "INVALID"
            }
        );
        let mut out = Output::new(serde_json::to_value(b.to_json(Some(host)))?, text);
        out.passed = report.is_valid();
        return Ok(out);
    }
    let text = format!(
        "token graph {family} n={n} k={k}: {} vertices, {} edges\n",
        tg.n_vertices(),
        tg.graph().edge_count()
    );
    Ok(Output::new(serde_json::to_value(tg.to_json())?, text))
}

fn cmd_verify(config: VerifyConfig, suite: Suite) -> Result<Output> {
    let report = verify::run(suite, &config);
    let mut text = String::new();
    let mut csv = String::from("suite,key,passed,expected,observed,error\n");
    for s in &report.suites {
        let failed = s.checks.iter().filter(|c| !c.passed).count();
        let _ = writeln!(
            text,
            "{} {} ({} checks, {failed} failed)",
            if s.passed { "PASS" } else { "FAIL" },
            s.suite.name(),
            s.checks.len()
        );
        for line in &s.summary {
            let _ = writeln!(text, "  {line}");
        }
        for c in &s.checks {
            if !c.passed {
                let reason = c
                    .error
                    .as_ref()
                    .map(|e| format!(" [{}] {}", e.kind, e.message))
                    .unwrap_or_default();
                let _ = writeln!(
                    text,
                    "  fail {}: expected {} observed {}{reason}",
                    c.key, c.expected, c.observed
                );
            }
            let _ = writeln!(
                csv,
                "{},{},{},{},{},{}",
                s.suite.name(),
                csv_field(&c.key),
                c.passed,
                csv_field(&c.expected.to_string()),
                csv_field(&c.observed.to_string()),
                csv_field(&c.error.as_ref().map(|e| e.kind.clone()).unwrap_or_default()),
            );
        }
    }
    let _ = writeln!(
        text,
        "{} (seed {})",
        if report.passed { "PASS" } else { "FAIL" },
        report.config.seed
    );
    let mut out = Output::new(serde_json::to_value(&report)?, text);
    out.csv = Some(csv);
    out.passed = report.passed;
    out.cap_only = report.only_cap_failures();
    Ok(out)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct TableRow {
    #[serde(flatten)]
    report: BoundReport,
    constructed: Option<usize>,
}

fn cmd_table(
    family: Family,
    k: usize,
    (lo, hi): (usize, usize),
    oracle: bool,
    caps: &Caps,
) -> Result<Output> {
    let mut rows = Vec::new();
    for n in lo..=hi {
        let mut report = bounds(family, n, k)?;
        if oracle {
            if let Some(tw) = verify::oracle_treewidth(family, n, k, caps) {
                report = report.with_oracle(tw as u128);
            }
        }
        rows.push(TableRow {
            constructed: verify::constructed_width(family, n, k, caps),
            report,
        });
    }
    let mut candidates: Vec<String> = Vec::new();
    for r in &rows {
        for c in &r.report.upper_candidates {
            if !candidates.contains(&c.name) {
                candidates.push(c.name.clone());
            }
        }
    }
    let opt = |v: Option<u128>| v.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
    let mut header = vec![
        "family",
        "n",
        "k",
        "lower",
        "upper",
        "exact",
        "oracle",
        "constructed",
    ];
    header.extend(candidates.iter().map(String::as_str));
    let table: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let b = &r.report;
            let mut cells = vec![
                b.family.to_string(),
                b.n.to_string(),
                b.k.to_string(),
                b.lower
                    .map(|l| format!("{l:.3}"))
                    .unwrap_or_else(|| "-".into()),
                b.upper.to_string(),
                opt(b.exact),
                opt(b.oracle),
                opt(r.constructed.map(|c| c as u128)),
            ];
            for name in &candidates {
                let v = b.upper_candidates.iter().find(|c| &c.name == name);
                cells.push(v.map(|c| c.value.to_string()).unwrap_or_else(|| "-".into()));
            }
            cells
        })
        .collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| {
            table
                .iter()
                .map(|row| row[i].len())
                .chain([header[i].len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: &[&str]| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut text = line(&header);
    for row in &table {
        text += &line(&row.iter().map(String::as_str).collect::<Vec<_>>());
    }
    let notes: Vec<String> = rows
        .iter()
        .flat_map(|r| {
            r.report
                .notes
                .iter()
                .map(move |note| format!("n={}: {note}", r.report.n))
        })
        .collect();
    for note in &notes {
        let _ = writeln!(text, "# {note}");
    }
    let mut csv = header.join(",") + "\n";
    for row in &table {
        csv += &(row.join(",") + "\n");
    }
    let consistent = rows.iter().all(|r| r.report.is_consistent());
    let mut out = Output::new(serde_json::to_value(&rows)?, text);
    out.csv = Some(csv);
    out.passed = consistent;
    Ok(out)
}

fn cmd_tw(source: &GraphSource, caps: &Caps) -> Result<Output> {
    let (g, _) = load_graph(source, caps)?;
    let result = exact_treewidth_capped(&g, caps.treewidth)?;
    let order = labels(&g, result.ordering.as_slice());
    let text = format!(
        "treewidth {}\nordering {}\n",
        result.treewidth,
        order
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(Output::new(
        json!({ "n_vertices": g.n(), "treewidth": result.treewidth, "ordering": order }),
        text,
    ))
}

fn cmd_mmb(source: &GraphSource, caps: &Caps) -> Result<Output> {
    let (g, _) = load_graph(source, caps)?;
    let m = mmb_exhaustive_capped(&g, caps.mmb)?;
    let order = labels(&g, m.ordering.as_slice());
    let text = format!(
        "mmb {}\nordering {}\n",
        m.value,
        order
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    );
    Ok(Output::new(
        json!({ "n_vertices": g.n(), "mmb": m.value, "ordering": order }),
        text,
    ))
}

fn cmd_border(
    source: &GraphSource,
    set: &[Label],
    order: &[Label],
    named: Option<NamedOrdering>,
    caps: &Caps,
) -> Result<Output> {
    let (g, tg) = load_graph(source, caps)?;
    if !set.is_empty() {
        let b = border(&g, &g.indices_of(set)?)?;
        return Ok(Output::new(
            json!({ "set": set, "border": b }),
            format!("border {b}\n"),
        ));
    }
    let ordering = match named {
        Some(kind) => {
            let is_f2pn = tg
                .as_ref()
                .is_some_and(|t| t.k() == 2 && source.family == Some(Family::Path));
            if !is_f2pn {
                return Err(Error::invalid("named orderings need --family path --k 2"));
            }
            let n = source.n.unwrap_or(0);
            match kind {
                NamedOrdering::Diagonal => f2pn_ordering(n)?,
                NamedOrdering::Balanced => f2pn_balanced_ordering(n)?,
            }
        }
        None => VertexOrdering::new(g.indices_of(order)?, g.n())?,
    };
    let mb = max_border(&g, &ordering)?;
    Ok(Output::new(
        json!({ "ordering": labels(&g, ordering.as_slice()), "max_border": mb }),
        format!("max border {mb}\n"),
    ))
}

fn cmd_bramble(family: Family, n: usize, caps: &Caps) -> Result<Output> {
    let host = HostRef { family, n, k: 2 };
    let tg = host.build(caps.token_vertices)?;
    let b = explicit_bramble(family, n)?;
    let report = b.validate(tg.graph())?;
    let order = b.min_hitting_set()?;
    let text = format!(
        "bramble {family} n={n}: {} sets, {}, order {}\nhitting set {:?}\n",
        b.len(),
        if report.is_valid() {
            "valid"
        } else {
            "INVALID"
        },
        order.size,
        order
            .witness
            .iter()
            .map(|&v| tg.members(v))
            .collect::<Vec<_>>()
    );
    let mut out = Output::new(
        json!({ "bramble": b.to_json(Some(host)), "report": report, "order": order.size, "hitting_set": order.witness }),
        text,
    );
    out.passed = report.is_valid();
    Ok(out)
}

fn cmd_spectral(source: &GraphSource, caps: &Caps) -> Result<Output> {
    let (g, tg) = load_graph(source, caps)?;
    let report = match &tg {
        Some(tg) => spectral_lower_bound_capped(tg, caps.eigen)?,
        None => {
            let l = lambda2_capped(&g, caps.eigen)?;
            let delta = g.max_degree();
            SpectralReport {
                lambda2: l.value,
                token_lambda2: None,
                connected: l.connected,
                max_degree: delta,
                n_vertices: g.n(),
                chandran_lower_bound: if delta == 0 {
                    -1.0
                } else {
                    g.n() as f64 / (12.0 * delta as f64) * l.value - 1.0
                },
            }
        }
    };
    let mut text = format!("lambda2 {:.12}\n", report.lambda2);
    if let Some(t) = report.token_lambda2 {
        let _ = writeln!(text, "token lambda2 {t:.12}");
    }
    if !report.connected {
        text += "warning: graph is disconnected, lambda2 = 0\n";
    }
    let _ = writeln!(
        text,
        "max degree {}\nvertices {}\nspectral lower bound {:.6}",
        report.max_degree, report.n_vertices, report.chandran_lower_bound
    );
    Ok(Output::new(serde_json::to_value(&report)?, text))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let caps = cli.common.caps()?;
    match &cli.command {
        Command::Build {
            family,
            n,
            k,
            decomp,
            bramble,
        } => cmd_build(*family, *n, *k, *decomp, *bramble, &caps),
        Command::Verify {
            suite,
            n_max,
            k_max,
            seed,
            random_graphs,
        } => cmd_verify(
            VerifyConfig {
                n_max: *n_max,
                k_max: *k_max,
                seed: *seed,
                random_graphs: *random_graphs,
                caps,
            },
            *suite,
        ),
        Command::Table {
            family,
            k,
            n,
            oracle,
        } => cmd_table(*family, *k, *n, *oracle, &caps),
        Command::Tw { source } => cmd_tw(source, &caps),
        Command::Mmb { source } => cmd_mmb(source, &caps),
        Command::Border {
            source,
            set,
            order,
            ordering,
        } => cmd_border(source, set, order, *ordering, &caps),
        Command::Bramble { family, n } => cmd_bramble(*family, *n, &caps),
        Command::Spectral { source } => cmd_spectral(source, &caps),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit { .. } => 3,
        _ => 2,
    }
}

fn error_line(kind: &str, message: &str) -> String {
    let message = message.lines().next().unwrap_or("").trim();
    format!("tokentw: error kind={kind}: {message}")
}

/// Parses `args`, runs the command and writes its output. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(stdout, "{e}");
            return 0;
        }
        Err(e) => {
            let rendered = e.render().to_string();
            let first = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("")
                .trim_start_matches("error: ");
            let _ = writeln!(stderr, "{}", error_line("usage", first));
            return 2;
        }
    };
    let result = execute(&cli).and_then(|out| {
        let rendered = out.render(cli.common.format)?;
        match &cli.common.out {
            Some(path) => {
                std::fs::write(path, &rendered)?;
                let _ = writeln!(stdout, "wrote {}", path.display());
                if cli.common.format != Format::Text {
                    let _ = write!(stdout, "{}", out.text);
                }
            }
            None => {
                let _ = write!(stdout, "{rendered}");
            }
        }
        Ok(out)
    });
    match result {
        Ok(out) if out.passed => 0,
        Ok(out) if out.cap_only => {
            let _ = writeln!(
                stderr,
                "{}",
                error_line("resource-limit", "a cap stopped part of the run")
            );
            3
        }
        Ok(_) => {
            let _ = writeln!(
                stderr,
                "{}",
                error_line("invariant", "at least one check failed")
            );
            1
        }
        Err(e) => {
            let _ = writeln!(stderr, "{}", error_line(e.kind(), &e.to_string()));
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("tokentw").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok((4, 8)));
        assert_eq!(parse_range("4..=8"), Ok((4, 8)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("x..4").is_err());
    }

    #[test]
    fn build_reports_widths() {
        let (code, out, _) = call(&[
            "build", "--family", "star", "--n", "4", "--k", "2", "--decomp",
        ]);
        assert_eq!(code, 0);
        let json: Value = serde_json::from_str(&out).unwrap_or(Value::Null);
        assert!(json.is_null(), "text mode prints a summary");
        assert!(out.contains("width 3, valid"), "{out}");
        let (_, out, _) = call(&[
            "build", "--family", "complete", "--n", "6", "--k", "3", "--decomp",
        ]);
        assert!(out.contains("width 13, valid"), "{out}");
        let (_, out, _) = call(&[
            "build", "--family", "path", "--n", "4", "--k", "2", "--format", "json",
        ]);
        let json: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(json["labels"].as_array().unwrap().len(), 6);
    }

    #[test]
    fn table_columns() {
        let (code, out, _) = call(&[
            "table", "--family", "complete", "--k", "2", "--n", "4..8", "--format", "csv",
        ]);
        assert_eq!(code, 0);
        let header: Vec<&str> = out.lines().next().unwrap().split(',').collect();
        let exact = header.iter().position(|h| *h == "exact").unwrap();
        let col: Vec<&str> = out
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(exact).unwrap())
            .collect();
        assert_eq!(col, vec!["4", "7", "10", "14", "18"]);
    }

    #[test]
    fn error_lines_and_codes() {
        let (code, _, err) = call(&["tw", "--family", "complete", "--n", "7", "--k", "3"]);
        assert_eq!(code, 3);
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("tokentw: error kind=resource-limit"));
        let (code, _, err) = call(&["tw", "--family", "complete", "--n", "3", "--k", "3"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("tokentw: error kind=invalid-parameter"));
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        assert!(err.starts_with("tokentw: error kind=usage"));
        let (code, _, _) = call(&[
            "table",
            "--family",
            "star",
            "--k",
            "2",
            "--n",
            "3..4",
            "--format",
            "json",
            "--cap-mmb",
            "0",
        ]);
        assert_eq!(code, 2);
    }
}
