use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};
use coalition_core::coalition::{analyze, assess_partition, coalition_graph};
use coalition_core::graph::{encode_graph, make_family, parse_graph, EnumMode, FamilySpec, Format};
use coalition_core::harness::{run_check, CheckId, Filter, HarnessOptions, UniverseSpec};
use coalition_core::hstar::{build_hstar, validate_hstar_with};
use coalition_core::{Graph, Limits, Partition};

#[derive(Parser, Debug)]
#[command(name = "coalition", version, about = "Coalition partitions of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print n, m, f, delta, alpha, domatic, C and c.
    Analyze {
        #[command(flatten)]
        input: Input,
        /// Also print witness partitions.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Build a host graph and c-partition whose coalition graph is the input.
    Construct {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        caps: Caps,
    },
    /// Coalition graph of a given c-partition.
    Cg {
        #[command(flatten)]
        input: Input,
        /// Partition such as "0,5|1|2|3|4".
        #[arg(long)]
        partition: String,
    },
    /// Run a harness check over a universe of graphs.
    Verify {
        /// T31, T32, COR, T34, R35, T36, HSTAR or ORACLE.
        #[arg(long)]
        check: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// labeled or iso; defaults per check.
        #[arg(long)]
        mode: Option<String>,
        /// all, no_isolates, one_full_and_delta1, sp_no_full or
        /// family_membership; defaults per check.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        /// T34: check every maximum-order c-partition.
        #[arg(long)]
        all_witnesses: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Print the accepted input grammars.
    Formats,
}

#[derive(Args, Debug)]
#[group(skip)]
#[command(group(ArgGroup::new("source").required(true).args(["file", "g6", "family"])))]
struct Input {
    /// Graph file, edge list or graph6.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Inline graph6 string.
    #[arg(long)]
    g6: Option<String>,
    /// Named family, e.g. cycle:4 or fpq:2,2,1.
    #[arg(long)]
    family: Option<String>,
    /// Override format detection for --file.
    #[arg(long, requires = "file")]
    format: Option<String>,
}

#[derive(Args, Debug)]
struct Caps {
    /// Lift the default search and enumeration caps.
    #[arg(long)]
    force_cap: bool,
}

impl Caps {
    fn limits(&self) -> Limits {
        if self.force_cap {
            Limits::unbounded()
        } else {
            Limits::default()
        }
    }
}

impl Input {
    fn load(&self) -> Result<Graph> {
        if self.format.is_some() && self.file.is_none() {
            bail!("--format only applies to --file");
        }
        if let Some(path) = &self.file {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let format = match &self.format {
                Some(f) => f.parse()?,
                None => Format::detect(&text),
            };
            return parse_graph(&text, format).with_context(|| format!("parsing {}", path.display()));
        }
        if let Some(g6) = &self.g6 {
            return Ok(parse_graph(g6.trim(), Format::Graph6)?);
        }
        if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse()?;
            return Ok(make_family(&spec)?);
        }
        bail!("no input given")
    }
}

fn show(v: Option<usize>) -> String {
    v.map_or_else(|| "NONE".to_string(), |x| x.to_string())
}

fn edge_list_inline(g: &Graph) -> String {
    let mut s = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        write!(s, ";{u} {v}").unwrap();
    }
    s
}

fn join_edges(edges: &[(usize, usize)]) -> String {
    edges.iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(";")
}

fn cmd_analyze(g: &Graph, witness: bool, limits: &Limits) -> Result<(String, u8)> {
    let a = analyze(g, limits)?;
    let inv = a.invariants;
    let mut out = String::new();
    writeln!(out, "n={}", inv.n)?;
    writeln!(out, "m={}", inv.m)?;
    writeln!(out, "f={}", inv.f)?;
    writeln!(out, "delta={}", inv.delta)?;
    writeln!(out, "alpha={}", inv.alpha)?;
    writeln!(out, "domatic={}", inv.domatic_d)?;
    writeln!(out, "C={}", show(a.coalition_number.value))?;
    writeln!(out, "c={}", show(a.coalition_count.value))?;
    if witness {
        writeln!(out, "domatic_witness={}", a.domatic_witness)?;
        for (key, outcome) in [("C", &a.coalition_number), ("c", &a.coalition_count)] {
            if let Some(w) = &outcome.witness {
                writeln!(out, "{key}_witness={w}")?;
                let pairs = assess_partition(g, w)?.coalition_pairs;
                writeln!(out, "{key}_witness_pairs={}", join_edges(&pairs))?;
            }
        }
    }
    Ok((out, 0))
}

fn cmd_construct(g: &Graph, limits: &Limits) -> Result<(String, u8)> {
    let r = build_hstar(g)?;
    let a = validate_hstar_with(g, &r, limits);
    let mut out = String::new();
    writeln!(out, "case={}", r.case_tag)?;
    writeln!(out, "host_n={}", r.host.n())?;
    writeln!(out, "host_m={}", r.host.m())?;
    writeln!(out, "host_edge_list={}", edge_list_inline(&r.host))?;
    writeln!(out, "host_g6={}", encode_graph(&r.host, Format::Graph6)?)?;
    writeln!(out, "pi_star={}", r.pi_star)?;
    let map: Vec<String> = r.target_to_part.iter().map(usize::to_string).collect();
    writeln!(out, "target_to_part={}", map.join(","))?;
    writeln!(out, "predicted_order={}", r.predicted.order)?;
    writeln!(out, "predicted_size={}", r.predicted.size_verbatim)?;
    writeln!(out, "predicted_size_corrected={}", r.predicted.size_corrected)?;
    writeln!(out, "actual_order={}", r.actual_order)?;
    writeln!(out, "actual_size={}", r.actual_size)?;
    writeln!(out, "partition_valid={}", a.partition_valid)?;
    writeln!(out, "cg_matches={}", a.cg_matches)?;
    writeln!(out, "iso_matches={}", a.iso_matches)?;
    writeln!(out, "order_size_match_table={}", a.order_size_match_table)?;
    writeln!(out, "corrected_size_match={}", a.corrected_size_match)?;
    for v in &a.violations {
        writeln!(out, "violation={v}")?;
    }
    writeln!(out, "audit_ok={}", a.ok())?;
    Ok((out, if a.ok() { 0 } else { 2 }))
}

fn cmd_cg(g: &Graph, partition: &str) -> Result<(String, u8)> {
    let p = Partition::parse(partition, g.n())?;
    let a = assess_partition(g, &p)?;
    let mut out = String::new();
    writeln!(out, "partition={p}")?;
    writeln!(out, "valid={}", a.valid)?;
    for (i, class) in a.part_class.iter().enumerate() {
        writeln!(out, "part{i}={{{}}} class={class}", p.part(i))?;
    }
    if !a.valid {
        print!("{out}");
        bail!("{p} is not a c-partition");
    }
    let cg = coalition_graph(g, &p)?;
    writeln!(out, "cg_n={}", cg.cg.n())?;
    writeln!(out, "cg_m={}", cg.cg.m())?;
    writeln!(out, "cg_edges={}", join_edges(&cg.cg.edges()))?;
    writeln!(out, "cg_labels={}", cg.part_labels.join(";"))?;
    writeln!(out, "cg_g6={}", encode_graph(&cg.cg, Format::Graph6)?)?;
    Ok((out, 0))
}

const FORMATS: &str = "\
# edge list: first line \"n m\", then m lines \"u v\" with 0 <= u,v < n, u != v
# blank lines and lines starting with '#' are ignored
# graph6: byte n+63 (n <= 62), then upper-triangle bits in column order
#   (0,1),(0,2),(1,2),(0,3),... packed big-endian in 6-bit groups, each + 63
# partition: parts separated by '|', members by ',', e.g. 0,5|1|2|3|4
# family: path:n cycle:n complete:n star:n empty:n fpq:f,p,q
#   star:n is K_{1,n-1}; fpq:f,p,q is (K_f + pK_1) u qK_1
format=edge_list
format=graph6
";

fn run(cli: Cli) -> Result<u8> {
    let (out, code) = match cli.command {
        Command::Analyze { input, witness, caps } => cmd_analyze(&input.load()?, witness, &caps.limits())?,
        Command::Construct { input, caps } => cmd_construct(&input.load()?, &caps.limits())?,
        Command::Cg { input, partition } => cmd_cg(&input.load()?, &partition)?,
        Command::Formats => (FORMATS.to_string(), 0),
        Command::Verify {
            check,
            max_n,
            mode,
            filter,
            jobs,
            all_witnesses,
            out,
            caps,
        } => {
            let check: CheckId = check.parse()?;
            let spec = UniverseSpec {
                max_n,
                mode: match mode {
                    Some(m) => m.parse::<EnumMode>()?,
                    None => check.default_mode(),
                },
                filter: match filter {
                    Some(f) => f.parse::<Filter>()?,
                    None => check.default_filter(),
                },
            };
            let opts = HarnessOptions {
                limits: caps.limits(),
                jobs,
                all_witnesses,
            };
            let report = run_check(check, &spec, &opts)?;
            let text = report.to_string();
            let code = if report.passed { 0 } else { 2 };
            if let Some(path) = out {
                std::fs::write(&path, &text).with_context(|| format!("writing {}", path.display()))?;
                (String::new(), code)
            } else {
                (text, code)
            }
        }
    };
    print!("{out}");
    Ok(code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            if let Some(coalition_core::Error::CapExceeded { .. }) = e.downcast_ref() {
                eprintln!("hint: pass --force-cap to lift the default caps");
            }
            ExitCode::from(1)
        }
    }
}
