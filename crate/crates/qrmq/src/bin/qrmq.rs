use std::fs::{self, File};
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use qrmq::bench::{bench_grid, read_csv, write_csv};
use qrmq::fit::{fit, Axis};
use qrmq::formats::{format_traces, read_array, read_ops};
use qrmq::verify::{run_verify, trace_ops, VerifyOptions};
use qrmq_core::{kmin_success_trial, qfindmin_k, FindminConfig};

#[derive(Parser)]
#[command(name = "qrmq", version, about = "Dynamic RMQ over a simulated quantum minimum-finding oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Differential check of both trees against brute force, plus trace bounds.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long = "n-max", default_value_t = 4096)]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Break the quantum pushdown; the run is expected to fail.
        #[arg(long, hide = true)]
        mutate: bool,
    },
    /// Ledger benchmark over an (n, q) grid, written as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<usize>,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Seeds per cell.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// First seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Log-log least-squares slope of quantum queries against q or n.
    Fit {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        axis: Axis,
    },
    /// Export per-operation creation traces for an op file.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ops: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// k-minimum finding on an array fixture.
    Kmin {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of failure-injected trials to run instead of a single exact run.
        #[arg(long)]
        trials: Option<u64>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Verify {
            trials,
            n_max,
            seed,
            mutate,
        } => {
            let rep = run_verify(&VerifyOptions {
                trials,
                n_max,
                seed,
                mutate,
            })?;
            println!(
                "trials={} ops={} queries={} lazy_creations={} mismatches={} structural_violations={} stale_creations={}",
                rep.trials,
                rep.ops,
                rep.queries,
                rep.lazy_creations,
                rep.mismatches,
                rep.structural_violations,
                rep.stale_creations
            );
            if let Some(f) = &rep.first_failure {
                println!("first failure: {f}");
            }
            println!("{}", if rep.passed() { "PASS" } else { "FAIL" });
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Bench {
            n,
            q,
            eps,
            seeds,
            seed,
            out,
        } => {
            let rows = bench_grid(&n, &q, eps, seeds, seed)?;
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            write_csv(&rows, BufWriter::new(file))?;
            eprintln!("wrote {} rows to {}", rows.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit { input, axis } => {
            let file = File::open(&input).with_context(|| format!("opening {}", input.display()))?;
            let report = fit(&read_csv(file)?, axis)?;
            println!("{report}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Trace { n, ops, out, seed } => {
            let ops = read_ops(&ops).with_context(|| format!("reading {}", ops.display()))?;
            let traces = trace_ops(n, &ops, seed)?;
            fs::write(&out, format_traces(&traces)).with_context(|| format!("writing {}", out.display()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Kmin {
            input,
            k,
            eps,
            seed,
            trials,
        } => {
            let arr = read_array(&input).with_context(|| format!("reading {}", input.display()))?;
            match trials {
                None => {
                    let res = qfindmin_k(&arr, k, eps, FindminConfig::with_seed(seed))?;
                    let list: Vec<String> = res.indices.iter().map(ToString::to_string).collect();
                    println!("indices={}", list.join(","));
                    println!(
                        "quantum_queries={} findmin_calls={} ops={}",
                        res.ledger.quantum_queries, res.ledger.findmin_calls, res.ops_issued
                    );
                }
                Some(t) => {
                    let mut ok = 0u64;
                    for s in seed..seed + t {
                        ok += u64::from(kmin_success_trial(&arr, k, eps, s)?);
                    }
                    println!("trials={t} successes={ok} rate={:.4}", ok as f64 / t.max(1) as f64);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
