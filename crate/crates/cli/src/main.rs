//! `domchrom`: exact dominated-coloring solving, graph operations, and
//! exhaustive theorem verification over small-graph corpora.
//!
//! Exit codes: 0 = success / all checks passed, 1 = operational error,
//! 2 = mathematical finding (a violated bound or a conjecture
//! counterexample; the report is still written).

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context as _};
use clap::{Args, Parser, Subcommand, ValueEnum};

use domchrom_core::verify::{
    find_sharpness_witnesses_with, run_suite, search_conjecture_with, BoundSide, CheckContext,
    Emission, GraphSource, SuiteConfig, SuiteReport, TheoremId,
};
use domchrom_core::{
    apply, chromatic_number_with, dominated_chromatic_number_with, make_family, parse_graph6,
    read_graph6_file, subdivide, total_dominator_chromatic_number_with, write_graph6, FamilySpec,
    Graph, OperationDescriptor, SolverLimits,
};

#[derive(Parser)]
#[command(
    name = "domchrom",
    version,
    about = "Dominated chromatic number toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Which {
    /// chromatic number
    Chi,
    /// dominated chromatic number
    Chidom,
    /// total dominator chromatic number
    Chidt,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RecordsMode {
    All,
    Violations,
}

#[derive(Args, Clone)]
struct GraphInputArgs {
    /// A graph6 literal
    #[arg(long)]
    graph: Option<String>,
    /// A family spec: kind:n with kind in {path, cycle, complete, star,
    /// wheel}, optionally subdivided with a ^1/k suffix ("star:3^1/5")
    #[arg(long)]
    family: Option<String>,
    /// A graph6 file, one record per line
    #[arg(long)]
    graphs_file: Option<PathBuf>,
    /// Record index within --graphs-file (0-based)
    #[arg(long, default_value_t = 0)]
    index: usize,
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Write the result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Compute chi, chi_dom or chi_d^t exactly, with a certificate
    Solve {
        #[arg(value_enum)]
        which: Which,
        #[command(flatten)]
        input: GraphInputArgs,
        /// Solver vertex budget
        #[arg(long, default_value_t = 40)]
        cap_vertices: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply a graph operation and print the result as graph6
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Run verification suites over enumerated graphs, a corpus file, or
    /// a single graph
    Verify {
        /// Theorem ids (repeatable); "all" selects every check.
        /// Default: the per-graph bound checks
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        /// Enumeration bound for corpus scans
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        /// n range for family-indexed checks, inclusive ("4..12")
        #[arg(long, default_value = "4..12")]
        range: String,
        /// Single subdivision parameter
        #[arg(long)]
        k: Option<usize>,
        /// Subdivision parameter range, inclusive ("2..5")
        #[arg(long)]
        k_range: Option<String>,
        /// Order cap on subdivided graphs
        #[arg(long, default_value_t = 20)]
        cap_vertices: usize,
        /// Worker threads (0 = all available)
        #[arg(long, env = "DOMCHROM_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Which records to include in the report body
        #[arg(long, value_enum)]
        records: Option<RecordsMode>,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Search for counterexamples to the contraction lower-bound
    /// conjecture over all labeled connected graphs
    Conjecture {
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long, env = "DOMCHROM_JOBS", default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Find instances achieving equality in a theorem bound
    Sharpness {
        /// Theorem id (edge_deletion, vertex_deletion, edge_contraction,
        /// vertex_contraction, odot)
        theorem: String,
        /// Which side: lower or upper
        bound: String,
        #[arg(long, default_value_t = 5)]
        nmax: usize,
        #[arg(long, env = "DOMCHROM_JOBS", default_value_t = 0)]
        jobs: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum OpCommand {
    /// Remove an edge
    DeleteEdge {
        /// Edge as "u,v"
        #[arg(long)]
        edge: String,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Remove a vertex and renumber
    DeleteVertex {
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Contract an edge (merge endpoints, keep the graph simple)
    ContractEdge {
        #[arg(long)]
        edge: String,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Contract a vertex (delete it, clique its neighborhood)
    ContractVertex {
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Remove all edges between neighbors of a vertex
    Odot {
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Replace every edge with a path of length k
    Subdivide {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: GraphInputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_family_spec(spec: &str) -> anyhow::Result<Graph> {
    let (base, k) = match spec.split_once('^') {
        Some((b, suffix)) => {
            let k: usize = suffix
                .strip_prefix("1/")
                .ok_or_else(|| anyhow!("subdivision suffix must look like ^1/k, got ^{suffix}"))?
                .parse()
                .with_context(|| format!("bad subdivision parameter in {spec:?}"))?;
            (b, Some(k))
        }
        None => (spec, None),
    };
    let (kind, n) = base
        .split_once(':')
        .ok_or_else(|| anyhow!("family spec must look like kind:n, got {spec:?}"))?;
    let n: usize = n
        .parse()
        .with_context(|| format!("bad size parameter in {spec:?}"))?;
    let fam = match kind {
        "path" => FamilySpec::Path(n),
        "cycle" => FamilySpec::Cycle(n),
        "complete" => FamilySpec::Complete(n),
        "star" => FamilySpec::Star(n),
        "wheel" => FamilySpec::Wheel(n),
        other => {
            bail!("unknown family kind {other:?} (expected path, cycle, complete, star, wheel)")
        }
    };
    let g = make_family(fam)?;
    match k {
        Some(k) => Ok(subdivide(&g, k)?.0),
        None => Ok(g),
    }
}

impl GraphInputArgs {
    fn count_sources(&self) -> usize {
        usize::from(self.graph.is_some())
            + usize::from(self.family.is_some())
            + usize::from(self.graphs_file.is_some())
    }

    /// Resolves to a single graph; exactly one source form is required.
    fn resolve_one(&self) -> anyhow::Result<Graph> {
        if self.count_sources() != 1 {
            bail!("provide exactly one of --graph, --family, --graphs-file");
        }
        if let Some(g6) = &self.graph {
            return Ok(parse_graph6(g6)?);
        }
        if let Some(spec) = &self.family {
            return parse_family_spec(spec);
        }
        let path = self.graphs_file.as_ref().unwrap();
        let graphs = read_graph6_file(path)?;
        graphs
            .into_iter()
            .nth(self.index)
            .ok_or_else(|| anyhow!("file has no record at index {}", self.index))
    }
}

fn parse_range(text: &str) -> anyhow::Result<(usize, usize)> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("range must look like a..b, got {text:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo: usize = a
        .parse()
        .with_context(|| format!("bad range start in {text:?}"))?;
    let hi: usize = b
        .parse()
        .with_context(|| format!("bad range end in {text:?}"))?;
    if lo > hi {
        bail!("empty range {text:?}");
    }
    Ok((lo, hi))
}

fn parse_edge(text: &str) -> anyhow::Result<(usize, usize)> {
    let (u, v) = text
        .split_once(',')
        .ok_or_else(|| anyhow!("edge must look like u,v, got {text:?}"))?;
    Ok((u.trim().parse()?, v.trim().parse()?))
}

fn emit(output: &OutputArgs, json: &serde_json::Value, plain: &str) -> anyhow::Result<()> {
    let body = match output.format {
        Format::Json => serde_json::to_string_pretty(json)? + "\n",
        Format::Plain => plain.to_string(),
        Format::Csv => bail!("csv output is only available for verify"),
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(())
}

fn cmd_solve(
    which: Which,
    input: &GraphInputArgs,
    cap_vertices: usize,
    output: &OutputArgs,
) -> anyhow::Result<ExitCode> {
    let g = input.resolve_one()?;
    let limits = SolverLimits::with_max_vertices(cap_vertices);
    let g6 = write_graph6(&g)?;
    let (name, value, certificate, stats) = match which {
        Which::Chi => {
            let r = chromatic_number_with(&g, limits)?;
            (
                "chi",
                r.value,
                serde_json::to_value(&r.certificate)?,
                r.stats,
            )
        }
        Which::Chidom => {
            let r = dominated_chromatic_number_with(&g, limits)?;
            r.certificate.validate(&g)?;
            (
                "chidom",
                r.value,
                serde_json::to_value(&r.certificate)?,
                r.stats,
            )
        }
        Which::Chidt => {
            let r = total_dominator_chromatic_number_with(&g, limits)?;
            r.certificate.validate(&g)?;
            (
                "chidt",
                r.value,
                serde_json::to_value(&r.certificate)?,
                r.stats,
            )
        }
    };
    let json = serde_json::json!({
        "which": name,
        "graph": g6,
        "n": g.n(),
        "value": value,
        "certificate": certificate,
        "stats": stats,
    });
    let plain = format!(
        "{name}({g6}) = {value}\ncertificate: {certificate}\nnodes: {} decisions: {} elapsed_ms: {:.3}\n",
        stats.nodes, stats.decisions, stats.elapsed_ms
    );
    emit(output, &json, &plain)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_op(op: &OpCommand) -> anyhow::Result<ExitCode> {
    let (descriptor, input, output) = match op {
        OpCommand::DeleteEdge {
            edge,
            input,
            output,
        } => (
            OperationDescriptor::DeleteEdge {
                edge: parse_edge(edge)?,
            },
            input,
            output,
        ),
        OpCommand::DeleteVertex {
            vertex,
            input,
            output,
        } => (
            OperationDescriptor::DeleteVertex { vertex: *vertex },
            input,
            output,
        ),
        OpCommand::ContractEdge {
            edge,
            input,
            output,
        } => (
            OperationDescriptor::ContractEdge {
                edge: parse_edge(edge)?,
            },
            input,
            output,
        ),
        OpCommand::ContractVertex {
            vertex,
            input,
            output,
        } => (
            OperationDescriptor::ContractVertex { vertex: *vertex },
            input,
            output,
        ),
        OpCommand::Odot {
            vertex,
            input,
            output,
        } => (
            OperationDescriptor::OdotVertex { vertex: *vertex },
            input,
            output,
        ),
        OpCommand::Subdivide { k, input, output } => {
            (OperationDescriptor::Subdivide { k: *k }, input, output)
        }
    };
    let g = input.resolve_one()?;
    let applied = apply(&g, &descriptor)?;
    let result_g6 = write_graph6(&applied.graph)?;
    let mut json = serde_json::json!({
        "operation": descriptor,
        "input": write_graph6(&g)?,
        "graph6": result_g6,
        "n": applied.graph.n(),
        "m": applied.graph.edge_count(),
        "renumbering": applied.renumbering,
    });
    if let Some(lab) = &applied.labeling {
        json["labeling"] = serde_json::to_value(lab)?;
    }
    let plain = format!("{result_g6}\n");
    emit(output, &json, &plain)?;
    Ok(ExitCode::SUCCESS)
}

fn resolve_theorems(theorems: &[String]) -> anyhow::Result<Vec<TheoremId>> {
    if theorems.is_empty() {
        return Ok(TheoremId::PER_GRAPH.to_vec());
    }
    if theorems.iter().any(|t| t == "all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    theorems
        .iter()
        .map(|t| t.parse::<TheoremId>().map_err(Into::into))
        .collect()
}

fn verify_csv(report: &SuiteReport) -> String {
    let mut out = String::from("theorem,checked,violations,tight,skipped\n");
    for (id, counts) in &report.per_theorem {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            id, counts.checked, counts.violations, counts.tight, counts.skipped
        ));
    }
    out
}

fn verify_plain(report: &SuiteReport) -> String {
    let mut out = String::new();
    for (id, counts) in &report.per_theorem {
        out.push_str(&format!(
            "{id}: checked {} violations {} tight {} skipped {}\n",
            counts.checked, counts.violations, counts.tight, counts.skipped
        ));
    }
    out.push_str(&format!(
        "total: checked {} violations {} tight {} skipped {} conjecture_counterexamples {}\n",
        report.summary.checked,
        report.summary.violations,
        report.summary.tight,
        report.summary.skipped,
        report.summary.conjecture_counterexamples
    ));
    for rec in &report.records {
        if rec.violated() {
            let bad: Vec<&str> = rec.violated_bounds().map(|b| b.name.as_str()).collect();
            out.push_str(&format!(
                "VIOLATION {} on {} {}: {}\n",
                rec.theorem,
                rec.graph,
                rec.operation
                    .map(|o| serde_json::to_string(&o).unwrap_or_default())
                    .unwrap_or_default(),
                bad.join(", ")
            ));
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    theorems: &[String],
    nmax: usize,
    range: &str,
    k: Option<usize>,
    k_range: Option<&str>,
    cap_vertices: usize,
    jobs: usize,
    records: Option<RecordsMode>,
    input: &GraphInputArgs,
    output: &OutputArgs,
) -> anyhow::Result<ExitCode> {
    let single_input = input.count_sources() > 0;
    let source = match input.count_sources() {
        0 => GraphSource::Enumerate { n_max: nmax },
        1 => {
            if let Some(path) = &input.graphs_file {
                GraphSource::File(path.clone())
            } else {
                GraphSource::List(vec![input.resolve_one()?])
            }
        }
        _ => bail!("provide at most one of --graph, --family, --graphs-file"),
    };
    let emit_records = match records {
        Some(RecordsMode::All) => Emission::All,
        Some(RecordsMode::Violations) => Emission::ViolationsOnly,
        None if single_input => Emission::All,
        None => Emission::ViolationsOnly,
    };
    let k_range = match (k, k_range) {
        (Some(k), None) => (k, k),
        (None, Some(r)) => parse_range(r)?,
        (None, None) => (2, 5),
        (Some(_), Some(_)) => bail!("use either --k or --k-range, not both"),
    };
    let cfg = SuiteConfig {
        theorems: resolve_theorems(theorems)?,
        source,
        k_range,
        cap_vertices,
        family_range: parse_range(range)?,
        workers: jobs,
        emit: emit_records,
        ..SuiteConfig::default()
    };
    let report = run_suite(&cfg)?;
    let json = serde_json::to_value(&report)?;
    let body = match output.format {
        Format::Json => serde_json::to_string_pretty(&json)? + "\n",
        Format::Csv => verify_csv(&report),
        Format::Plain => verify_plain(&report),
    };
    match &output.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(if report.has_findings() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_conjecture(nmax: usize, jobs: usize, output: &OutputArgs) -> anyhow::Result<ExitCode> {
    let report = search_conjecture_with(nmax, jobs, &CheckContext::default())?;
    let json = serde_json::to_value(&report)?;
    let plain = format!(
        "scanned {} graphs, checked {} contractions, found {} counterexamples\n",
        report.graphs_scanned,
        report.instances_checked,
        report.counterexamples.len()
    );
    emit(output, &json, &plain)?;
    Ok(if report.counterexamples.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_sharpness(
    theorem: &str,
    bound: &str,
    nmax: usize,
    jobs: usize,
    output: &OutputArgs,
) -> anyhow::Result<ExitCode> {
    let theorem: TheoremId = theorem.parse()?;
    let side: BoundSide = bound.parse()?;
    let witnesses =
        find_sharpness_witnesses_with(theorem, side, nmax, jobs, &CheckContext::default())?;
    let json = serde_json::json!({
        "theorem": theorem,
        "bound": side,
        "n_max": nmax,
        "count": witnesses.len(),
        "witnesses": witnesses,
    });
    let mut plain = format!("{} witnesses\n", witnesses.len());
    for w in &witnesses {
        plain.push_str(&format!(
            "{} {}\n",
            w.graph,
            serde_json::to_string(&w.operation).unwrap_or_default()
        ));
    }
    emit(output, &json, &plain)?;
    Ok(ExitCode::SUCCESS)
}

fn run() -> anyhow::Result<ExitCode> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Solve {
            which,
            input,
            cap_vertices,
            output,
        } => cmd_solve(*which, input, *cap_vertices, output),
        Command::Op { op } => cmd_op(op),
        Command::Verify {
            theorems,
            nmax,
            range,
            k,
            k_range,
            cap_vertices,
            jobs,
            records,
            input,
            output,
        } => cmd_verify(
            theorems,
            *nmax,
            range,
            *k,
            k_range.as_deref(),
            *cap_vertices,
            *jobs,
            *records,
            input,
            output,
        ),
        Command::Conjecture { nmax, jobs, output } => cmd_conjecture(*nmax, *jobs, output),
        Command::Sharpness {
            theorem,
            bound,
            nmax,
            jobs,
            output,
        } => cmd_sharpness(theorem, bound, *nmax, *jobs, output),
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
