//! Command-line front end.
//!
//! Exit codes: 0 yes, 1 no, 2 usage or parse error, 3 budget exceeded,
//! 4 self-check mismatch (fast path against oracle, or a witness that fails to replay).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use ecswitch_core::switching::monochromatize_sequence;
use ecswitch_core::{
    reachable_signatures, Colour, DecisionOutcome, Decider, EdgeColouredGraph, Error, Expansion, Limits, Method, Witness,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{parse_graph, parse_group, parse_sequence, serialize_graph, serialize_sequence};

pub const EXIT_YES: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_MISMATCH: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "ecswitch", version, about = "Switching of edge-coloured graphs under permutation groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// S<m>, A<m>, D<m>, Z<m> or gens<m>:(1 2)(3 4);(1 2 3 4)
    #[arg(long)]
    pub group: String,
    /// Maximum number of states an exhaustive search may visit
    #[arg(long, default_value_t = Limits::DEFAULT_STATE_CAP as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Expand the oracle by generators only (longer witnesses)
    #[arg(long)]
    pub generators_only: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide switch equivalence of two graphs
    Equiv {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        /// Also run the reachability oracle and fail with exit 4 on disagreement
        #[arg(long)]
        oracle: bool,
        /// Write the switching sequence and vertex bijection here
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Switch a graph to a monochromatic one
    Mono {
        g: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        colour: Colour,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Apply a switching sequence and print the result
    Apply { g: PathBuf, seq: PathBuf },
    /// Decide switchable k-colouring
    Kcol {
        g: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Decide switchable homomorphism from G to H
    Hom {
        g: PathBuf,
        h: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Print a random graph
    Gen {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print statistics of the reachable switching class
    Oracle {
        g: PathBuf,
        #[command(flatten)]
        group: GroupArgs,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Budget(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Budget(_) => EXIT_BUDGET,
            Failure::Mismatch(_) => EXIT_MISMATCH,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_YES
            };
        }
    };
    let mut text = String::new();
    let result = dispatch(cli.command, &mut text);
    let _ = out.write_all(text.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<EdgeColouredGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn decider(args: &GroupArgs) -> Result<Decider, Failure> {
    let group = parse_group(&args.group).map_err(|e| Failure::Usage(e.to_string()))?;
    let limits = Limits {
        state_cap: usize::try_from(args.budget).unwrap_or(usize::MAX),
        expansion: if args.generators_only { Expansion::Generators } else { Expansion::Elements },
        ..Limits::default()
    };
    Ok(Decider::with_limits(group, limits))
}

fn joined(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn report(out: &mut String, outcome: &DecisionOutcome) {
    let _ = writeln!(out, "verdict: {}", if outcome.verdict { "yes" } else { "no" });
    let _ = writeln!(out, "method: {}", outcome.method);
    let _ = writeln!(out, "notes: {}", outcome.notes);
    if let Some(w) = &outcome.witness {
        let _ = writeln!(out, "steps: {}", w.sequence().len());
        match w {
            Witness::Equivalence { bijection, .. } => {
                let _ = writeln!(out, "bijection: {}", joined(bijection));
            }
            Witness::Homomorphism { map, .. } => {
                let _ = writeln!(out, "map: {}", joined(&map.map));
            }
            Witness::Colouring { map, target, .. } => {
                let _ = writeln!(out, "map: {}", joined(&map.map));
                let _ = writeln!(out, "target:");
                for line in serialize_graph(target).lines() {
                    let _ = writeln!(out, "  {line}");
                }
            }
        }
    }
}

/// The `.seq` body followed by comment lines describing the rest of the witness.
pub fn witness_file(w: &Witness) -> String {
    let mut body = serialize_sequence(w.sequence());
    match w {
        Witness::Equivalence { bijection, .. } => {
            let _ = writeln!(body, "# bijection {}", joined(bijection));
        }
        Witness::Homomorphism { map, .. } => {
            let _ = writeln!(body, "# map {}", joined(&map.map));
        }
        Witness::Colouring { map, target, .. } => {
            let _ = writeln!(body, "# map {}", joined(&map.map));
            for line in serialize_graph(target).lines() {
                let _ = writeln!(body, "# target {line}");
            }
        }
    }
    body
}

fn finish(
    out: &mut String,
    outcome: DecisionOutcome,
    replays: impl Fn(&Witness) -> bool,
    oracle: Option<DecisionOutcome>,
    witness: Option<&Path>,
) -> Result<u8, Failure> {
    report(out, &outcome);
    if let Some(w) = &outcome.witness {
        if !replays(w) {
            return Err(Failure::Mismatch(format!("{} witness does not replay", outcome.method)));
        }
    }
    if let Some(o) = oracle {
        if let Some(w) = &o.witness {
            if !replays(w) {
                return Err(Failure::Mismatch("oracle witness does not replay".into()));
            }
        }
        if o.verdict != outcome.verdict {
            return Err(Failure::Mismatch(format!(
                "{} says {}, {} says {}",
                outcome.method,
                outcome.verdict,
                o.method,
                o.verdict
            )));
        }
        let _ = writeln!(out, "self-check: agrees with {}", o.method);
    }
    if let (Some(path), Some(w)) = (witness, &outcome.witness) {
        write_file(path, &witness_file(w))?;
    }
    Ok(if outcome.verdict { EXIT_YES } else { EXIT_NO })
}

fn dispatch(command: Command, out: &mut String) -> Result<u8, Failure> {
    match command {
        Command::Equiv { g, h, group, oracle, witness } => {
            let d = decider(&group)?;
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let outcome = d.equivalent(&g, &h)?;
            let check = if oracle && outcome.method != Method::OracleBfs { Some(d.equivalent_by_oracle(&g, &h)?) } else { None };
            finish(out, outcome, |w| w.verify_equivalence(&g, &h, Some(d.group())), check, witness.as_deref())
        }
        Command::Mono { g, group, colour, witness } => {
            let d = decider(&group)?;
            let g = load_graph(&g)?;
            match monochromatize_sequence(&g, colour, d.group()) {
                Ok(seq) => {
                    let mono = g.apply_sequence(&seq)?;
                    if !mono.is_monochromatic(colour) {
                        return Err(Failure::Mismatch("monochromatizing sequence does not replay".into()));
                    }
                    let _ = writeln!(out, "verdict: yes");
                    let _ = writeln!(out, "method: {}", Method::PropertyTFastPath);
                    let _ = writeln!(out, "steps: {}", seq.len());
                    if let Some(path) = witness {
                        write_file(&path, &serialize_sequence(&seq))?;
                    }
                    Ok(EXIT_YES)
                }
                Err(Error::NoPropertyT { colour, failing }) => {
                    let _ = writeln!(out, "verdict: no");
                    let _ = writeln!(out, "notes: group has no T_{{{failing},{colour}}} witness");
                    Ok(EXIT_NO)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Apply { g, seq } => {
            let g = load_graph(&g)?;
            let seq = parse_sequence(&read(&seq)?, g.colour_count()).map_err(|e| Failure::Usage(e.to_string()))?;
            let after = g.apply_sequence(&seq).map_err(|e| Failure::Usage(e.to_string()))?;
            out.push_str(&serialize_graph(&after));
            Ok(EXIT_YES)
        }
        Command::Kcol { g, group, k, oracle, witness } => {
            let d = decider(&group)?;
            let g = load_graph(&g)?;
            let outcome = d.switchable_k_colouring(&g, k)?;
            let check = if oracle && outcome.method != Method::OracleBfs { Some(d.switchable_k_colouring_by_oracle(&g, k)?) } else { None };
            finish(out, outcome, |w| w.verify_colouring(&g, k, Some(d.group())), check, witness.as_deref())
        }
        Command::Hom { g, h, group, oracle, witness } => {
            let d = decider(&group)?;
            let (g, h) = (load_graph(&g)?, load_graph(&h)?);
            let outcome = d.switchable_hom(&g, &h)?;
            let check = if oracle && outcome.method != Method::OracleBfs { Some(d.switchable_hom_by_oracle(&g, &h)?) } else { None };
            finish(out, outcome, |w| w.verify_homomorphism(&g, &h, Some(d.group())), check, witness.as_deref())
        }
        Command::Gen { vertices, edges, m, seed } => {
            out.push_str(&serialize_graph(&random_graph(vertices, edges, m, seed).map_err(Failure::Usage)?));
            Ok(EXIT_YES)
        }
        Command::Oracle { g, group } => {
            let d = decider(&group)?;
            let g = load_graph(&g)?;
            let class = reachable_signatures(&g, d.group(), d.limits())?;
            let _ = writeln!(out, "group_order: {}", d.group().order());
            let _ = writeln!(out, "signatures: {}", class.len());
            let _ = writeln!(out, "max_depth: {}", class.max_depth());
            let mut hist = vec![0usize; class.max_depth() + 1];
            for i in 0..class.len() {
                hist[class.depth(i)] += 1;
            }
            let _ = writeln!(out, "by_depth: {}", joined(&hist));
            Ok(EXIT_YES)
        }
    }
}

/// Uniform simple graph with exactly `e` edges and uniform colours.
pub fn random_graph(n: usize, e: usize, m: usize, seed: u64) -> Result<EdgeColouredGraph, String> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    if e > pairs.len() {
        return Err(format!("{e} edges do not fit on {n} vertices"));
    }
    if m == 0 || m > usize::from(Colour::MAX) {
        return Err(format!("m must be in 1..={}", Colour::MAX));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = sample(&mut rng, pairs.len(), e).into_vec();
    chosen.sort_unstable();
    let edges: Vec<_> = chosen.into_iter().map(|i| (pairs[i].0, pairs[i].1, rng.gen_range(1..=m as Colour))).collect();
    EdgeColouredGraph::new(m, n, edges).map_err(|e| e.to_string())
}
