use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sharpstep::experiment::{self, presets, ExperimentConfig};

#[derive(Parser)]
#[command(name = "sharpstep", version, about = "Polyak-step subgradient experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one experiment described by a JSON config file.
    Run {
        #[arg(long)]
        config: PathBuf,
    },
    /// Run a named preset, writing one CSV per panel.
    Reproduce {
        preset: String,
        /// Problem dimension to use instead of the published one.
        #[arg(long)]
        scale: Option<usize>,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Print the preset configs as a JSON array instead of running them.
        #[arg(long)]
        print_config: bool,
    },
    /// List problems, step rules, bounds and presets.
    ListProblems,
}

const CONFIG_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { config } => {
            let text = match std::fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => return fail(CONFIG_ERROR, format!("cannot read {}: {e}", config.display())),
            };
            let cfg: ExperimentConfig = match serde_json::from_str(&text) {
                Ok(c) => c,
                Err(e) => return fail(CONFIG_ERROR, format!("config error: {e}")),
            };
            if let Err(e) = experiment::validate(&cfg) {
                return fail(CONFIG_ERROR, format!("config error: {e}"));
            }
            run_all(&[cfg])
        }
        Command::Reproduce {
            preset,
            scale,
            out,
            print_config,
        } => {
            let configs = match presets::preset_in(&preset, scale, &out) {
                Ok(c) => c,
                Err(e) => return fail(CONFIG_ERROR, e.to_string()),
            };
            if print_config {
                println!("{}", serde_json::to_string_pretty(&configs).expect("configs serialize"));
                return ExitCode::SUCCESS;
            }
            if let Err(e) = std::fs::create_dir_all(&out) {
                return fail(1, format!("cannot create {}: {e}", out.display()));
            }
            run_all(&configs)
        }
        Command::ListProblems => {
            print!("{}", catalog());
            ExitCode::SUCCESS
        }
    }
}

fn run_all(configs: &[ExperimentConfig]) -> ExitCode {
    for cfg in configs {
        match experiment::run(cfg) {
            Ok(s) => {
                let gap = s.final_gap.map_or("n/a".to_string(), |g| format!("{g:e}"));
                println!(
                    "{}: {} rows, terminated_by={}, final gap={gap}",
                    s.output_path.display(),
                    s.rows,
                    s.terminated_by
                );
            }
            Err(e) => {
                let code = match e {
                    sharpstep::Error::InvalidParameter { .. } | sharpstep::Error::DimensionMismatch { .. } => CONFIG_ERROR,
                    _ => 1,
                };
                return fail(code, format!("{}: {e}", cfg.output_path.display()));
            }
        }
    }
    ExitCode::SUCCESS
}

fn fail(code: u8, msg: String) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn catalog() -> String {
    let mut s = String::new();
    s.push_str("problems (config field problem.name):\n");
    let problem_params = [
        ("norm_plus_quadratic", "gamma, shift?"),
        ("enclosing_ball", "points, scale_alpha?, squared?, approx_min?"),
        ("capsule_regularized", "endpoint_a, endpoint_b, radius, gamma; R = feasible_radius"),
        ("hull_of_balls_inexact", "centers, radius; seed drives the oracle"),
        ("weakly_quasiconvex_1d", "(none); dimension 1"),
        ("dist_to_ball", "center, radius"),
        ("ball_system", "centers, radius, delta, f_bar, sweeps?; no rule"),
    ];
    for (name, params) in problem_params {
        s.push_str(&format!("  {name:<24} {params}\n"));
    }
    s.push_str("rules (config field rule.name; omitted values come from the problem):\n");
    let rule_params = [
        ("polyak_adaptive", "beta?, f_bar?"),
        ("polyak_lipschitz", "beta?, f_bar?, M?"),
        ("polyak_partial", "f_bar?, M?"),
        ("polyak_delta_partial", "f_bar?, delta? (absent: realized inexactness), M?"),
        ("harmonic_strongly_convex", "mu?"),
    ];
    for (name, params) in rule_params {
        s.push_str(&format!("  {name:<24} {params}\n"));
    }
    s.push_str("bounds (config field bounds):\n");
    for name in experiment::BOUND_NAMES {
        s.push_str(&format!("  {name}\n"));
    }
    s.push_str("presets (reproduce <name>):\n");
    for (name, about) in presets::PRESETS {
        s.push_str(&format!("  {name:<34} {about}\n"));
    }
    s
}
