use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use hypertoric::arrangement::{chamber, torus_data};
use hypertoric::feasibility::is_feasible;
use hypertoric::io::{self, to_json};
use hypertoric::quotient::{adjacency_lemma_check, chart_complement, theta_cpt, verify_covering, verify_density};
use hypertoric::render::render_svg;
use hypertoric::stability::{
    hk_semistable_geometric, hk_semistable_numeric, toric_semistable_geometric, toric_semistable_numeric,
};
use hypertoric::{fixtures, Arrangement, Error, Guard, SignVector, SmoothArrangement, SupportPattern, SupportStatus};

/// Exact checks on oriented hyperplane arrangements and the toric and
/// hypertoric quotients they encode.
///
/// Exit status: 0 on success, 1 when a check comes out negative,
/// 2 on invalid input.
#[derive(Parser)]
#[command(name = "hypertoric", version)]
struct Cli {
    /// Lift the limits on exhaustive enumerations.
    #[arg(long, global = true)]
    force: bool,
    /// Seed for randomized self-tests.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Regularity, simplicity and smoothness.
    Check { file: PathBuf },
    /// Every chamber of the extended core and the compact ones.
    Core { file: PathBuf },
    /// Semi-stability of a pattern over {z, w, 0, *}.
    Stability {
        file: PathBuf,
        #[arg(long)]
        pattern: String,
    },
    /// Whether the compact charts cover the whole quotient.
    Cover { file: PathBuf },
    /// Density of every chart against nonemptiness of its chamber.
    Density { file: PathBuf },
    /// Semistable points outside one chart, given by a sign string over {+, -}.
    Complement {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        chart: String,
    },
    /// Draw a one or two dimensional arrangement.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Everything above as one JSON document.
    Report {
        file: PathBuf,
        /// Include the complement of this chart; may be repeated.
        #[arg(long, allow_hyphen_values = true)]
        chart: Vec<String>,
    },
    /// Run the equivalence and covering checks on random smooth arrangements.
    Selftest {
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

enum Failure {
    Input(String),
    Negative,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn load(path: &Path) -> Result<Arrangement, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    io::parse(&bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_smooth(path: &Path) -> Result<SmoothArrangement, Failure> {
    Ok(SmoothArrangement::new(load(path)?)?)
}

fn guard(force: bool) -> Result<Guard, Failure> {
    if force {
        return Ok(Guard::Unlimited);
    }
    match std::env::var(hypertoric::ENUM_LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Guard::Limit)
            .map_err(|_| Failure::Input(format!("{} must be a nonnegative integer, got {v:?}", hypertoric::ENUM_LIMIT_ENV))),
        Err(_) => Ok(Guard::Default),
    }
}

fn emit<T: Serialize>(v: &T) {
    println!("{}", to_json(v));
}

fn negative_if(bad: bool) -> Outcome {
    if bad {
        Err(Failure::Negative)
    } else {
        Ok(())
    }
}

fn parse_chart(s: &str, d: usize) -> Result<SignVector, Failure> {
    let eps: SignVector = s.parse()?;
    if eps.len() != d {
        return Err(Failure::Input(format!("chart has length {}, arrangement has {d} hyperplanes", eps.len())));
    }
    Ok(eps)
}

#[derive(Serialize, Default)]
struct SelftestOutput {
    seed: u64,
    arrangements: usize,
    patterns_checked: usize,
    covering_checked: usize,
    failures: Vec<String>,
}

fn selftest(seed: u64, count: usize, guard: Guard) -> Result<SelftestOutput, Failure> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = SelftestOutput {
        seed,
        ..Default::default()
    };
    while out.arrangements < count {
        let n = rng.gen_range(1..=3);
        let d = rng.gen_range(n + 1..=7);
        let Some(arr) = fixtures::random_smooth(&mut rng, n, d, 200) else { continue };
        out.arrangements += 1;
        let label = io::serialize(&arr)?;
        let sa = SmoothArrangement::new(arr.clone())?;
        let td = sa.torus();
        for p in SupportPattern::enumerate(&SupportStatus::NO_BOTH, d) {
            out.patterns_checked += 1;
            let num = hk_semistable_numeric(td, &p)?;
            let geo = hk_semistable_geometric(&arr, &p)?;
            if num.semistable != geo.semistable || !num.verify() || !geo.verify() {
                out.failures.push(format!("{label}: oracles disagree on {p}"));
            }
        }
        for mask in 0u32..1 << d {
            let support: Vec<usize> = (0..d).filter(|i| mask >> i & 1 == 1).collect();
            if toric_semistable_numeric(td, &support)?.semistable != toric_semistable_geometric(&arr, &support)?.semistable {
                out.failures.push(format!("{label}: toric oracles disagree on {support:?}"));
            }
        }
        for eps in SignVector::enumerate(d) {
            if !verify_density(&sa, &eps)? {
                out.failures.push(format!("{label}: density fails at {eps}"));
            }
        }
        if !theta_cpt(&sa, guard)?.is_empty() {
            out.covering_checked += 1;
            let r = verify_covering(&sa, guard)?;
            if !r.covered {
                out.failures.push(format!("{label}: not covered"));
            }
            if !adjacency_lemma_check(&sa, guard)? {
                out.failures.push(format!("{label}: adjacency lemma fails"));
            }
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Outcome {
    let guard = guard(cli.force)?;
    match cli.command {
        Command::Check { file } => {
            let out = io::check(&load(&file)?);
            emit(&out);
            negative_if(!out.smooth)
        }
        Command::Core { file } => {
            emit(&io::core_section(&load_smooth(&file)?, guard)?);
            Ok(())
        }
        Command::Stability { file, pattern } => {
            let arr = load(&file)?;
            let p: SupportPattern = pattern.parse()?;
            if p.len() != arr.len() {
                return Err(Error::PatternLength {
                    expected: arr.len(),
                    found: p.len(),
                }
                .into());
            }
            emit(&io::stability(&arr, &torus_data(&arr)?, &p)?);
            Ok(())
        }
        Command::Cover { file } => {
            let r = verify_covering(&load_smooth(&file)?, guard)?;
            emit(&io::CoverOutput::new(&r));
            negative_if(!r.covered)
        }
        Command::Density { file } => {
            let out = io::density(&load_smooth(&file)?, guard)?;
            emit(&out);
            negative_if(!out.all)
        }
        Command::Complement { file, chart } => {
            let sa = load_smooth(&file)?;
            let eps = parse_chart(&chart, sa.len())?;
            emit(&io::ComplementSection::new(&chart_complement(&sa, &eps, guard)?));
            Ok(())
        }
        Command::Render { file, output } => {
            let svg = render_svg(&load(&file)?)?;
            std::fs::write(&output, svg).map_err(|e| Failure::Input(format!("{}: {e}", output.display())))
        }
        Command::Report { file, chart } => {
            let arr = load(&file)?;
            let charts = chart
                .iter()
                .map(|c| parse_chart(c, arr.len()))
                .collect::<Result<Vec<_>, _>>()?;
            for eps in &charts {
                if !is_feasible(&chamber(&arr, eps)?).is_feasible() {
                    return Err(Error::EmptyChamber(eps.to_string()).into());
                }
            }
            println!("{}", io::report(&arr, guard, &charts)?.to_json());
            Ok(())
        }
        Command::Selftest { count } => {
            let out = selftest(cli.seed, count, guard)?;
            emit(&out);
            negative_if(!out.failures.is_empty())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
