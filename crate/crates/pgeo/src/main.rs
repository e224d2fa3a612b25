use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pgeo::report;
use pgeo::script::eval::{EXIT_CONSTRUCTION, EXIT_PARSE};
use pgeo::script::{run_source, Env, RunReport};
use pgeo::svg::{write_svg, ChartOptions, Viewport};
use pgeo_core::axioms::run_axiom_suite;
use pgeo_core::extension::{brouwerian_probe, cotransitivity_probe, extend, IncidencePlane};
use pgeo_core::Scalar;

#[derive(Parser)]
#[command(name = "pgeo", version, about = "Exact constructions in the projective plane")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate a construction script.
    Run {
        file: PathBuf,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a script and draw everything it declares.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// World rectangle x0,y0,x1,y1.
        #[arg(long, allow_hyphen_values = true)]
        viewport: Option<Viewport>,
    },
    /// Randomized check of the incidence and apartness axioms.
    Axioms {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long)]
        json: bool,
    },
    /// Build and verify the projective extension of an affine plane.
    Extend {
        /// `rational` or `fq` for a prime q below 100 (f3, f5, ...).
        #[arg(long)]
        plane: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Seed and pair count for the randomized rational check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: usize,
    },
    /// Finite instances of the constructive counterexamples.
    Probe {
        #[command(subcommand)]
        probe: Probe,
    },
}

#[derive(Subcommand)]
enum Probe {
    /// Meet of [a+,0,1] and [0,a-,1].
    Llpo {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Scalar,
        #[arg(long)]
        json: bool,
    },
    /// Which axis class the e-point of a sign-dependent line avoids.
    Cotrans {
        #[arg(long, allow_hyphen_values = true)]
        c: Scalar,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn load(file: &Path) -> Result<(RunReport, Env), ExitCode> {
    match std::fs::read_to_string(file) {
        Ok(src) => Ok(run_source(&src)),
        Err(e) => {
            eprintln!("pgeo: cannot read {}: {e}", file.display());
            Err(code(EXIT_PARSE))
        }
    }
}

fn run(file: &Path, json: bool) -> ExitCode {
    let (r, env) = match load(file) {
        Ok(x) => x,
        Err(c) => return c,
    };
    if json {
        print!("{}", r.to_json());
    } else {
        print!("{}", report::run_text(&r));
    }
    if r.errors.is_empty() {
        let dir = file.parent().unwrap_or(Path::new("."));
        for req in &r.renders {
            let opts = ChartOptions { viewport: req.viewport.as_ref().and_then(Viewport::from_scalars), ..ChartOptions::default() };
            let out = dir.join(&req.path);
            if let Err(e) = write_svg(&env, &out, &opts) {
                eprintln!("pgeo: cannot write {}: {e}", out.display());
                return code(EXIT_CONSTRUCTION);
            }
        }
    }
    code(r.exit_code())
}

fn render(file: &Path, output: &Path, viewport: Option<Viewport>) -> ExitCode {
    let (r, env) = match load(file) {
        Ok(x) => x,
        Err(c) => return c,
    };
    if !r.errors.is_empty() {
        eprint!("{}", report::run_text(&r));
        return code(r.exit_code());
    }
    let opts = ChartOptions { viewport, ..ChartOptions::default() };
    if let Err(e) = write_svg(&env, output, &opts) {
        eprintln!("pgeo: cannot write {}: {e}", output.display());
        return code(EXIT_CONSTRUCTION);
    }
    code(r.exit_code())
}

fn plane(name: &str) -> Option<IncidencePlane> {
    if name == "rational" {
        return Some(IncidencePlane::rational());
    }
    let q = name.strip_prefix('f')?.parse().ok()?;
    IncidencePlane::finite(q).ok()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Run { file, json } => run(&file, json),
        Cmd::Render { file, output, viewport } => render(&file, &output, viewport),
        Cmd::Axioms { trials, seed, bound, json } => {
            let r = run_axiom_suite(trials, seed, bound.max(1));
            print!("{}", if json { report::axioms_json(&r) } else { report::axioms_text(&r) });
            code(if r.passed() { 0 } else { 1 })
        }
        Cmd::Extend { plane: name, report: format, seed, cases } => {
            let Some(p) = plane(&name) else {
                eprintln!("pgeo: unknown plane `{name}`; use rational or fq for a prime q < 100");
                return code(2);
            };
            let ext = extend(&p);
            let r = if p.order().is_some() { ext.verify() } else { ext.verify_random(seed, cases) };
            print!(
                "{}",
                match format {
                    Format::Json => report::extension_json(&r),
                    Format::Text => report::extension_text(&r),
                }
            );
            code(if r.passed() { 0 } else { 1 })
        }
        Cmd::Probe { probe: Probe::Llpo { alpha, json } } => {
            let r = brouwerian_probe(&alpha);
            print!("{}", if json { report::llpo_json(&r) } else { report::llpo_text(&r) });
            code(0)
        }
        Cmd::Probe { probe: Probe::Cotrans { c, json } } => {
            let r = cotransitivity_probe(&c);
            print!("{}", if json { report::cotrans_json(&r) } else { report::cotrans_text(&r) });
            code(0)
        }
    }
}
