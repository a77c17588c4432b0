use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use boolgb::engine::{Config, ReductionPath};
use boolgb::io::{
    emit_basis, emit_stats, emit_system, gen_random, parse_system, RandomSpec, SystemFile,
};
use boolgb::oracle::{buchberger, gb_equal};
use boolgb::{reduce_basis, run, Algo, Error};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "boolgb",
    version,
    about = "Groebner bases over boolean polynomial rings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Gvw,
    Mgvw,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Algo {
        match a {
            AlgoArg::Gvw => Algo::Gvw,
            AlgoArg::Mgvw => Algo::Mgvw,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PathArg {
    Matrix,
    Poly,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a Groebner basis and print it.
    Gb(GbArgs),
    /// Run gvw, mgvw and the Buchberger oracle and compare.
    Verify {
        #[arg(long, default_value_t = 4)]
        deg_limit: u32,
        input: PathBuf,
    },
    /// Write a random system.
    Gen {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        polys: usize,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Only monomials of degree exactly `degree`.
        #[arg(long)]
        homogeneous: bool,
        /// Standard output when omitted.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Time gvw and mgvw on random square systems.
    Bench {
        /// Comma-separated variable counts.
        #[arg(long, value_delimiter = ',', default_value = "6,8,10")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, default_value_t = 4)]
        deg_limit: u32,
    },
}

#[derive(Args)]
struct GbArgs {
    #[arg(long, value_enum, default_value = "mgvw")]
    algo: AlgoArg,
    /// Mutants are only appended below this degree.
    #[arg(long, default_value_t = 4)]
    deg_limit: u32,
    #[arg(long)]
    stats: Option<PathBuf>,
    /// Print the reduced basis.
    #[arg(long)]
    reduce: bool,
    /// One line per processed pair or row.
    #[arg(long)]
    trace: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "matrix")]
    path: PathArg,
    /// Abort with exit code 3 when a pair above this degree survives.
    #[arg(long)]
    max_degree: Option<u32>,
    input: PathBuf,
}

enum Failure {
    Mismatch(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Input(e.to_string()),
            Error::SafetyCap(_) => Failure::Cap(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Input(format!("{}: {e}", path.display()))
}

fn read_system(path: &Path) -> Result<SystemFile, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    parse_system(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_err(path, e))
}

fn gb(args: GbArgs) -> Result<(), Failure> {
    let GbArgs {
        algo,
        deg_limit,
        stats,
        reduce,
        trace,
        path,
        max_degree,
        input,
    } = args;
    let sys = read_system(&input)?;
    let cfg = Config {
        algo: algo.into(),
        deg_limit,
        path: match path {
            PathArg::Matrix => ReductionPath::Matrix,
            PathArg::Poly => ReductionPath::Polynomial,
        },
        trace: trace.is_some(),
        max_degree,
        ..Config::default()
    };
    let out = run(&sys.polys, sys.n_vars, &cfg)?;
    let basis = if reduce {
        reduce_basis(&out.basis)
    } else {
        out.basis
    };
    print!("{}", emit_basis(&basis, sys.n_vars));
    if let Some(p) = stats {
        write_file(&p, &emit_stats(&out.stats))?;
    }
    if let Some(p) = trace {
        let text: String = out.trace.iter().map(|e| format!("{e}\n")).collect();
        write_file(&p, &text)?;
    }
    Ok(())
}

fn verify(deg_limit: u32, input: &Path) -> Result<(), Failure> {
    let sys = read_system(input)?;
    let reference = buchberger(&sys.polys);
    println!(
        "buchberger: {} polynomials reduced",
        reduce_basis(&reference).len()
    );
    let mut bad = Vec::new();
    for algo in [Algo::Gvw, Algo::Mgvw] {
        let out = run(
            &sys.polys,
            sys.n_vars,
            &Config {
                deg_limit,
                ..Config::new(algo)
            },
        )?;
        let ok = gb_equal(&out.basis, &reference);
        println!(
            "{algo}: {} ({} polynomials, {} mutants)",
            if ok { "ok" } else { "MISMATCH" },
            out.stats.basis_size,
            out.stats.mutants_appended
        );
        if !ok {
            bad.push(algo.to_string());
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} disagree with the oracle",
            bad.join(", ")
        )))
    }
}

fn bench(sizes: &[usize], seed: u64, degree: u32, deg_limit: u32) -> Result<(), Failure> {
    println!("vars\talgo\tms\tmax_matrix\tmax_degree\tmutants\tbasis\treduced");
    for &n in sizes {
        let sys = gen_random(&RandomSpec {
            n_vars: n,
            n_polys: n,
            max_degree: degree,
            density: 0.5,
            seed: seed.wrapping_add(n as u64),
            homogeneous: false,
        });
        let mut reduced = Vec::new();
        for algo in [Algo::Gvw, Algo::Mgvw] {
            let start = Instant::now();
            let out = run(
                &sys.polys,
                n,
                &Config {
                    deg_limit,
                    ..Config::new(algo)
                },
            )?;
            let ms = start.elapsed().as_secs_f64() * 1e3;
            let s = &out.stats;
            let m = s.max_matrix;
            println!(
                "{n}\t{algo}\t{ms:.1}\t{}x{}({})\t{}\t{}\t{}\t{}",
                m.rows,
                m.cols,
                m.degree,
                s.max_degree,
                s.mutants_appended,
                s.basis_size,
                s.reduced_basis_size
            );
            reduced.push(reduce_basis(&out.basis));
        }
        if reduced[0] != reduced[1] {
            return Err(Failure::Mismatch(format!(
                "gvw and mgvw disagree on {n} variables"
            )));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Gb(args) => gb(args),
        Cmd::Verify { deg_limit, input } => verify(deg_limit, &input),
        Cmd::Gen {
            vars,
            polys,
            degree,
            density,
            seed,
            homogeneous,
            output,
        } => {
            let spec = RandomSpec {
                n_vars: vars,
                n_polys: polys,
                max_degree: degree,
                density,
                seed,
                homogeneous,
            };
            let text = emit_system(&gen_random(&spec));
            match output {
                Some(p) => write_file(&p, &text),
                None => std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|e| Failure::Input(e.to_string())),
            }
        }
        Cmd::Bench {
            sizes,
            seed,
            degree,
            deg_limit,
        } => bench(&sizes, seed, degree, deg_limit),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Mismatch(msg) | Failure::Input(msg) | Failure::Cap(msg)) = &f;
            eprintln!("boolgb: {msg}");
            ExitCode::from(f.code())
        }
    }
}
