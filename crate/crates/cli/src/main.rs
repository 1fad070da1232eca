use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use proofnet::cut::{normalize, Strategy};
use proofnet::dot::export_dot;
use proofnet::generator::{random_proof, random_ps, GenParams};
use proofnet::graph::{parse_ps, to_dsl, to_json};
use proofnet::sequent::{parse_proof, proof_to_text, ProofFile};
use proofnet::sequentialize::JumpedPs;
use proofnet::switching::{check_with, CheckOptions, Criterion, Switching};
use proofnet::*;

#[derive(Parser)]
#[command(name = "proofnet", version, about = "Proof-structures of MLL with units")]
struct Cli {
    /// Largest number of ⅋ nodes whose switchings may be enumerated.
    #[arg(long, global = true, default_value_t = 20)]
    max_parr: usize,
    /// Output format for proof-structures.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dsl,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum CriterionArg {
    Ac,
    C,
    Cw,
    Acc,
    Accw,
    Cwforall,
    Wten,
}

impl From<CriterionArg> for Criterion {
    fn from(c: CriterionArg) -> Criterion {
        match c {
            CriterionArg::Ac => Criterion::Ac,
            CriterionArg::C => Criterion::C,
            CriterionArg::Cw => Criterion::Cw,
            CriterionArg::Acc => Criterion::Acc,
            CriterionArg::Accw => Criterion::Accw,
            CriterionArg::Cwforall => Criterion::CwForall,
            CriterionArg::Wten => Criterion::Wten,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Wten,
    Btenll,
    Icomll,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Deterministic,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Proof,
    Ps,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a correctness criterion; exit 0 when it holds, 1 otherwise.
    Check {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "accw")]
        criterion: CriterionArg,
    },
    /// Eliminate all cuts, printing the trace (JSON lines) and the normal form.
    Normalize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "deterministic")]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the trace here instead of standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the normal form here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a sequent proof; the jump map follows as a comment line.
    Sequentialize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "wten")]
        mode: Mode,
        /// Jump target for ⊥ nodes with no ⅋ below them (btenll mode);
        /// defaults to the first non-erasing node.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Print the structure with its canonical jumps.
    Jumps {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "btenll")]
        mode: Mode,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Compare two proofs, or two jump-correct structures; prints true or false.
    Equiv { first: PathBuf, second: PathBuf },
    /// Desequentialize a proof file.
    Deseq { file: PathBuf },
    /// Generate random proofs or structures.
    Gen {
        #[arg(long, value_enum, default_value = "proof")]
        kind: Kind,
        #[arg(long, default_value = "mllu")]
        fragment: FragmentId,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long, default_value_t = 10)]
        max_rules: usize,
        #[arg(long, default_value_t = 10)]
        max_nodes: usize,
        #[arg(long, default_value_t = 0.0)]
        cut_probability: f64,
        /// Write one file per item into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Graphviz rendering, optionally of a switching graph.
    Dot {
        file: PathBuf,
        /// Switching as a JSON object from ⅋ node ids to chosen premise arc ids.
        #[arg(long)]
        switching: Option<String>,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_ps(path: &Path) -> Result<ProofStructure> {
    let ps = parse_ps(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))?;
    let report = ps.validate(None);
    if !report.ok {
        bail!("{}: {report}", path.display());
    }
    Ok(ps)
}

fn load_proof(path: &Path) -> Result<ProofFile> {
    let file = parse_proof(&read(path)?).with_context(|| format!("cannot parse {}", path.display()))?;
    let frag = file.fragment.unwrap_or(FragmentId::MllU);
    let report = check_proof(&file.proof, frag);
    if !report.ok {
        bail!("{}: {report}", path.display());
    }
    Ok(file)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(ps: &ProofStructure, format: Option<Format>) -> String {
    match format.unwrap_or(Format::Json) {
        Format::Json => to_json(ps) + "\n",
        Format::Dsl => to_dsl(ps),
        Format::Dot => export_dot(ps, None),
    }
}

fn default_m(ps: &ProofStructure, m: Option<u32>) -> Result<NodeId> {
    if let Some(m) = m {
        return Ok(NodeId(m));
    }
    let erasing = ps.erasing_nodes();
    ps.nodes
        .keys()
        .copied()
        .find(|n| !erasing.contains(n) && ps.label(*n) != Label::Dot)
        .context("no non-erasing node to jump to")
}

fn jumped(ps: &ProofStructure, mode: Mode, m: Option<u32>) -> Result<(SequentProof, JumpedPs)> {
    Ok(match mode {
        Mode::Btenll => sequentialize_btenll(ps, default_m(ps, m)?)?,
        Mode::Icomll => sequentialize_icomll(ps)?,
        Mode::Wten => unreachable!(),
    })
}

fn run(cli: Cli) -> Result<u8> {
    let opts = CheckOptions { max_parr: cli.max_parr, ..CheckOptions::default() };
    match cli.command {
        Command::Check { file, criterion } => {
            let ps = load_ps(&file)?;
            let v = check_with(&ps, criterion.into(), &opts)?;
            println!("{}", v.to_json());
            Ok(if v.holds { 0 } else { 1 })
        }
        Command::Normalize { file, strategy, seed, trace, out } => {
            let ps = load_ps(&file)?;
            let strategy = match strategy {
                StrategyArg::Deterministic => Strategy::Deterministic,
                StrategyArg::Random => Strategy::RandomSeeded(seed),
            };
            let t = normalize(&ps, strategy);
            emit(trace.as_deref(), &t.to_json_lines())?;
            emit(out.as_deref(), &render(&t.normal_form, cli.format))?;
            Ok(0)
        }
        Command::Sequentialize { file, mode, m } => {
            let ps = load_ps(&file)?;
            let (pi, frag, jumps) = match mode {
                Mode::Wten => (sequentialize_wten(&ps)?, FragmentId::MllU, None),
                _ => {
                    let frag = if mode == Mode::Btenll { FragmentId::Btenll } else { FragmentId::Icomll };
                    let (pi, j) = jumped(&ps, mode, m)?;
                    (pi, frag, Some(j.ps.jumps))
                }
            };
            let mut text = proof_to_text(&pi, Some(frag));
            if let Some(j) = jumps {
                let map: std::collections::BTreeMap<u32, u32> = j.iter().map(|(b, t)| (b.0, t.0)).collect();
                text += &format!("; jumps {}\n", serde_json::to_string(&map)?);
            }
            print!("{text}");
            Ok(0)
        }
        Command::Jumps { file, mode, m } => {
            let ps = load_ps(&file)?;
            let j = match mode {
                Mode::Btenll => canonical_jumps_btenll(&ps, default_m(&ps, m)?)?,
                Mode::Icomll => canonical_jumps_icomll(&ps)?,
                Mode::Wten => bail!("jumps needs --mode btenll or icomll"),
            };
            print!("{}", render(&j.ps, cli.format));
            Ok(0)
        }
        Command::Equiv { first, second } => {
            let same = match (parse_proof(&read(&first)?), parse_proof(&read(&second)?)) {
                (Ok(_), Ok(_)) => proofs_equivalent(&load_proof(&first)?.proof, &load_proof(&second)?.proof),
                _ => rewiring_equivalent(&load_ps(&first)?, &load_ps(&second)?)?,
            };
            println!("{same}");
            Ok(0)
        }
        Command::Deseq { file } => {
            let p = load_proof(&file)?;
            print!("{}", render(&desequentialize(&p.proof).ps, cli.format));
            Ok(0)
        }
        Command::Gen { kind, fragment, seed, count, max_rules, max_nodes, cut_probability, out_dir } => {
            if !(0.0..=1.0).contains(&cut_probability) {
                bail!("--cut-probability must lie in [0, 1]");
            }
            for s in seed..seed + count {
                let params = GenParams { fragment, max_rules, max_nodes, cut_probability, seed: s };
                let (text, ext) = match kind {
                    Kind::Proof => (proof_to_text(&random_proof(&params), Some(fragment)), "proof"),
                    Kind::Ps => (render(&random_ps(&params), cli.format), "ps"),
                };
                match &out_dir {
                    Some(dir) => {
                        fs::create_dir_all(dir)?;
                        emit(Some(&dir.join(format!("gen_{s}.{ext}"))), &text)?;
                    }
                    None => print!("{text}"),
                }
            }
            Ok(0)
        }
        Command::Dot { file, switching } => {
            let ps = load_ps(&file)?;
            let sw: Option<Switching> = switching
                .map(|s| serde_json::from_str(&s).context("switching must be a JSON object of node to arc ids"))
                .transpose()?;
            print!("{}", export_dot(&ps, sw.as_ref()));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
