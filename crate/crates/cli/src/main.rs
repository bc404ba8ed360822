use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use gbraid_core::braid::{braid_matrices_of, DEFAULT_IMAGE_CAP};
use gbraid_core::job::{CheckEntry, Job, JobSpec};
use gbraid_core::monomial::DEFAULT_MAX_TUPLES;
use gbraid_core::oracle::{check_compressed, sigma_equivariance_violation, ORACLE_MAX_TUPLES};
use gbraid_core::{
    brute_force_dimension, image_order, pure_braid_matrices, verify_braid_relations, Error, MonomialMatrix,
    OrbitOptions, OrbitTable, Result, TensorProduct,
};

/// Braid group representations on gapped-boundary ground states.
#[derive(Parser)]
#[command(name = "gbraid", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Validate the group, cocycle, cochains and boundary modules.
    Check(JobArgs),
    /// Dimension of Hom(1, X⊗ⁿ).
    Dim(JobArgs),
    /// Orbits of degree-e tuples with their regularity.
    Orbits(JobArgs),
    /// Braid generator matrices (or pure-braid matrices for mixed boundaries).
    Matrices(JobArgs),
    /// Order of the image group.
    Image(JobArgs),
    /// Run every consistency check on the job.
    Verify(JobArgs),
}

#[derive(Args)]
struct JobArgs {
    /// JSON job file.
    job: PathBuf,
    /// Number of strands (overrides the job file).
    #[arg(long)]
    n: Option<usize>,
    /// Element cap for the image closure.
    #[arg(long)]
    cap: Option<u64>,
    /// Cap on the number of tuples enumerated.
    #[arg(long)]
    max_tuples: Option<u64>,
    /// Also compute the dimension by brute force and compare.
    #[arg(long)]
    oracle: bool,
    /// Write the JSON result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write each matrix as a dense CSV file into this directory.
    #[arg(long)]
    csv: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

struct Ctx {
    args: JobArgs,
    job: Job,
}

impl Ctx {
    fn n(&self) -> Result<usize> {
        match self.args.n {
            Some(0) => Err(Error::Input("n must be at least 1".into())),
            Some(n) if self.job.homogeneous => Ok(n),
            Some(n) if n != self.job.modules.len() => {
                Err(Error::Input(format!("n = {n} but {} boundaries were given", self.job.modules.len())))
            }
            _ => self.job.strands(),
        }
    }

    fn options(&self) -> OrbitOptions {
        let max = self.args.max_tuples.or(self.job.spec.max_tuples).map_or(DEFAULT_MAX_TUPLES, u128::from);
        OrbitOptions { max_tuples: max, check_all_members: false }
    }

    fn cap(&self) -> u64 {
        self.args.cap.or(self.job.spec.cap).unwrap_or(DEFAULT_IMAGE_CAP)
    }

    fn table(&self) -> Result<Arc<OrbitTable>> {
        let n = self.n()?;
        let product = TensorProduct::new(self.job.factors(n)?)?;
        Ok(Arc::new(OrbitTable::new(product, self.options())?))
    }

    fn pairs(&self, n: usize) -> Vec<(usize, usize)> {
        self.job
            .spec
            .pairs
            .clone()
            .unwrap_or_else(|| (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect())
    }

    /// Braid generators, or pure-braid generators for mixed boundaries.
    fn matrices(&self) -> Result<(Value, Vec<(String, MonomialMatrix)>)> {
        if self.job.homogeneous {
            let rep = braid_matrices_of(self.table()?)?;
            let report = verify_braid_relations(&rep);
            if let Some(v) = report.violation {
                return Err(Error::Internal(format!(
                    "braid relation {:?} = {:?} fails in column {}",
                    v.lhs, v.rhs, v.column
                )));
            }
            let named = rep
                .generators()
                .iter()
                .enumerate()
                .map(|(i, m)| (format!("sigma_{}", i + 1), m.clone()))
                .collect();
            Ok((serde_json::to_value(rep.to_json()).unwrap(), named))
        } else {
            let table = self.table()?;
            let n = self.n()?;
            let pairs = self.pairs(n);
            let mats = pure_braid_matrices(&self.job.modules, &pairs, self.options())?;
            let value = json!({
                "dim": table.num_regular(),
                "pairs": pairs,
                "generators": mats,
                "basis": table.basis(),
            });
            let named = pairs.iter().zip(&mats).map(|(&(i, j), m)| (format!("pure_{i}_{j}"), m.clone())).collect();
            Ok((value, named))
        }
    }
}

fn run(command: Command) -> Result<()> {
    let (name, args) = match command {
        Command::Check(a) => ("check", a),
        Command::Dim(a) => ("dim", a),
        Command::Orbits(a) => ("orbits", a),
        Command::Matrices(a) => ("matrices", a),
        Command::Image(a) => ("image", a),
        Command::Verify(a) => ("verify", a),
    };
    let text = std::fs::read_to_string(&args.job)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", args.job.display())))?;
    let spec = JobSpec::from_json(&text)?;
    let mut log = Vec::new();
    let job = match Job::build_logged(&spec, &mut log) {
        Ok(job) => job,
        Err(e) => {
            if name == "check" || name == "verify" {
                let report = json!({"ok": false, "checks": log});
                if args.out.is_none() {
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
            }
            return Err(e);
        }
    };
    let ctx = Ctx { args, job };
    let out = match name {
        "check" => json!({"ok": true, "checks": log}),
        "dim" => cmd_dim(&ctx)?,
        "orbits" => serde_json::to_value(ctx.table()?.summaries()).unwrap(),
        "matrices" => {
            let (value, named) = ctx.matrices()?;
            if let Some(dir) = &ctx.args.csv {
                std::fs::create_dir_all(dir).map_err(io_err)?;
                for (file, m) in &named {
                    write_atomic(&dir.join(format!("{file}.csv")), m.to_csv().as_bytes())?;
                }
            }
            value
        }
        "image" => {
            let (_, named) = ctx.matrices()?;
            let gens: Vec<MonomialMatrix> = named.into_iter().map(|(_, m)| m).collect();
            serde_json::to_value(image_order(&gens, ctx.cap())).unwrap()
        }
        "verify" => cmd_verify(&ctx, log)?,
        _ => unreachable!(),
    };
    emit(&ctx.args.out, &out)
}

fn cmd_dim(ctx: &Ctx) -> Result<Value> {
    let n = ctx.n()?;
    let table = ctx.table()?;
    let d = table.num_regular();
    if !ctx.args.oracle {
        return Ok(json!({"n": n, "dimension": d}));
    }
    let oracle = brute_force_dimension(table.product())?;
    if oracle != d {
        return Err(Error::Internal(format!("orbit count {d} differs from brute-force rank {oracle}")));
    }
    Ok(json!({"n": n, "dimension": d, "oracle_dimension": oracle}))
}

fn cmd_verify(ctx: &Ctx, mut log: Vec<CheckEntry>) -> Result<Value> {
    let mut push = |check: &str, r: Result<Option<String>>| -> Result<()> {
        match r {
            Ok(None) => {
                log.push(CheckEntry { check: check.into(), ok: true, error: None });
                Ok(())
            }
            Ok(Some(skip)) => {
                log.push(CheckEntry { check: check.into(), ok: true, error: Some(skip) });
                Ok(())
            }
            Err(e) => {
                log.push(CheckEntry { check: check.into(), ok: false, error: Some(e.to_string()) });
                Err(e)
            }
        }
    };
    let outcome = (|| -> Result<()> {
        let table = ctx.table()?;
        let product = table.product().clone();
        let small = product.total_tuples() <= ORACLE_MAX_TUPLES;
        push("braid relations", ctx.matrices().map(|_| None))?;
        push(
            "brute-force dimension",
            if small {
                brute_force_dimension(&product).and_then(|o| {
                    if o == table.num_regular() {
                        Ok(None)
                    } else {
                        Err(Error::Internal(format!("orbit count {} but rank {o}", table.num_regular())))
                    }
                })
            } else {
                Ok(Some("skipped: too many tuples".into()))
            },
        )?;
        if ctx.job.homogeneous && product.len() > 1 {
            push(
                "σ' equivariance",
                if small {
                    (1..product.len()).try_fold(None, |_, i| match sigma_equivariance_violation(&product, i)? {
                        None => Ok(None),
                        Some((t, g)) => Err(Error::Internal(format!("σ'_{i} fails at {t:?}, g = {g}"))),
                    })
                } else {
                    Ok(Some("skipped: too many tuples".into()))
                },
            )?;
            push(
                "compressed oracle matrices",
                if small {
                    let rep = braid_matrices_of(table.clone())?;
                    check_compressed::<BigRational>(&rep).and_then(|r| match r.mismatch {
                        None => Ok(None),
                        Some((i, j)) => Err(Error::Internal(format!("σ_{i} differs in column {j}"))),
                    })
                } else {
                    Ok(Some("skipped: too many tuples".into()))
                },
            )?;
        }
        Ok(())
    })();
    if let Err(e) = outcome {
        if ctx.args.out.is_none() {
            println!("{}", serde_json::to_string_pretty(&json!({"ok": false, "checks": log})).unwrap());
        }
        return Err(e);
    }
    Ok(json!({"ok": true, "checks": log}))
}

fn io_err(e: std::io::Error) -> Error {
    Error::Input(e.to_string())
}

/// Writes via a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(bytes).map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

fn emit(out: &Option<PathBuf>, value: &Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).unwrap();
    text.push('\n');
    match out {
        Some(p) => write_atomic(p, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
