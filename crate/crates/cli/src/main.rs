use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use cagegen::oracle::hamiltonian_cycle;
use cagegen::{generate, Emitted, Error, GenerationTask, PlanarCodeWriter};
use clap::Parser;

/// Generate all non-isomorphic fullerenes up to a given number of atoms.
///
/// Graphs are written in planar_code. Per-size counts go to stderr.
#[derive(Parser, Debug)]
#[command(name = "cagegen", version)]
struct Args {
    /// Largest atom count (even, at least 20).
    n: usize,

    /// Smallest atom count to output; defaults to N.
    #[arg(long)]
    start: Option<usize>,

    /// Only fullerenes with isolated pentagons.
    #[arg(long)]
    ipr: bool,

    /// Write the dual triangulations instead of the cubic graphs.
    #[arg(long)]
    dual: bool,

    /// Count only, write no graphs.
    #[arg(long)]
    counts_only: bool,

    /// Do part R of M, written R/M.
    #[arg(long = "mod", value_name = "R/M")]
    split: Option<Split>,

    /// Disable the expansion-length bounds.
    #[arg(long)]
    no_lookahead: bool,

    /// Check every output graph for a Hamiltonian cycle.
    #[arg(long)]
    ham_check: bool,

    /// Output file; `-` or absent means stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,

    /// Print canonicity statistics to stderr.
    #[arg(long)]
    stats: bool,
}

#[derive(Clone, Copy, Debug)]
struct Split {
    residue: usize,
    modulus: usize,
}

impl FromStr for Split {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (r, m) = s.split_once('/').ok_or("expected R/M")?;
        let residue = r.trim().parse().map_err(|_| format!("bad residue {r:?}"))?;
        let modulus = m.trim().parse().map_err(|_| format!("bad modulus {m:?}"))?;
        Ok(Split { residue, modulus })
    }
}

fn run(args: Args) -> cagegen::Result<bool> {
    let mut task = GenerationTask::with_range(args.start.unwrap_or(args.n), args.n);
    if args.ipr {
        task = task.ipr();
    }
    if let Some(s) = args.split {
        task = task.split(s.residue, s.modulus);
    }
    task.lookahead = !args.no_lookahead;
    task.validate()?;

    let out: Box<dyn Write> = match &args.output {
        Some(p) if p.as_os_str() != "-" => Box::new(File::create(p)?),
        _ => Box::new(io::stdout().lock()),
    };
    let mut writer = PlanarCodeWriter::new(BufWriter::new(out));
    let mut non_hamiltonian = 0u64;
    let started = Instant::now();
    let stats = generate(&task, &mut |e: &Emitted<'_>| {
        if args.counts_only && !args.ham_check {
            return Ok(());
        }
        let primal = e.dual.to_primal();
        if args.ham_check && hamiltonian_cycle(&primal)?.is_none() {
            non_hamiltonian += 1;
            eprintln!("not Hamiltonian: a graph with {} atoms", e.n);
        }
        if !args.counts_only {
            if args.dual {
                writer.write_dual(e.dual)?;
            } else {
                writer.write_primal(&primal)?;
            }
        }
        Ok::<(), Error>(())
    })?;
    writer.flush()?;

    let stderr = io::stderr();
    let mut err = stderr.lock();
    for n in (task.n_min.max(20)..=task.n_max).filter(|n| n % 2 == 0) {
        writeln!(err, "{n}: {}", stats.emitted(n))?;
    }
    writeln!(err, "total: {}", stats.total_emitted())?;
    if args.stats {
        for (n, s) in &stats.per_n {
            writeln!(
                err,
                "{n}: attempted {} accepted {} decided {:?}",
                s.attempted, s.accepted, s.decided_at
            )?;
        }
        writeln!(err, "time: {:.2?}", started.elapsed())?;
    }
    if args.ham_check {
        writeln!(err, "non-Hamiltonian: {non_hamiltonian}")?;
    }
    Ok(non_hamiltonian == 0)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("cagegen: {e}");
            ExitCode::from(2)
        }
    }
}
