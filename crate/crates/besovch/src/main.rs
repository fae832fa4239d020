//! Command-line front end: every library capability behind one subcommand.
//!
//! Artifacts land in --out (default ./out). Reports are deterministic:
//! rerunning a command with the same inputs reproduces them byte for byte.
//! BESOVCH_THREADS caps experiment fan-out (runs here are sequential, so it
//! is recorded in the manifest and clamped to >= 1).

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};

use besovch::besov::{besov_norm, h1_energy, BesovSpec, Exponent};
use besovch::config::{parse_f64_list, parse_u32_list, ConfigMap};
use besovch::counterexample::{
    algebra_failure_experiment, build_u0, evolution_grid, CounterexampleParams,
};
use besovch::dyadic::FilterBank;
use besovch::experiments::{
    e_transport_residual, early_time_linearization, inflation_experiment,
    no_inflation_experiment,
};
use besovch::grid::{Field, Grid};
use besovch::peakon::{evolve_recorded, mollified_peakon_field, PeakonState};
use besovch::report::{
    json_to_csv, read_field_binary, run_manifest, sha256_hex, to_json_string,
    write_block_csv, write_field_binary, write_field_csv, write_json,
    write_peakon_csv, write_table_csv, RunManifest,
};
use besovch::solver::{solve, SolveConfig};

#[derive(Parser)]
#[command(
    name = "besovch",
    version,
    about = "Littlewood-Paley / Besov toolkit for Camassa-Holm dynamics on the torus"
)]
struct Cli {
    /// Flat key=value config file; command-line flags take precedence.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Directory for artifacts (created if missing).
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dyadic block decomposition of a field: per-block sup and L2 table.
    Decompose {
        /// Field source: file:PATH, bump, peakon, or counterexample:N.
        #[arg(long)]
        init: Option<String>,
        /// Domain half-length for built-in initial data.
        #[arg(long)]
        l: Option<f64>,
        /// Grid size for built-in initial data.
        #[arg(long)]
        n: Option<usize>,
        /// Also write each block as a field binary.
        #[arg(long)]
        dump_blocks: bool,
    },
    /// Besov norm B^s_{inf,r} of a field, with per-block contributions.
    BesovNorm {
        /// Field source: file:PATH, bump, peakon, or counterexample:N.
        #[arg(long)]
        init: Option<String>,
        /// Domain half-length for built-in initial data.
        #[arg(long)]
        l: Option<f64>,
        /// Grid size for built-in initial data.
        #[arg(long)]
        n: Option<usize>,
        /// Regularity index s.
        #[arg(long)]
        s: Option<f64>,
        /// Summation exponent r: 1, 2 or inf.
        #[arg(long)]
        r: Option<String>,
        /// Weight blocks by max(j,1) as well (log-augmented norm).
        #[arg(long)]
        log_weight: bool,
    },
    /// Integrate the Camassa-Holm equation from a chosen initial field.
    Solve {
        /// Field source: file:PATH, bump, peakon, or counterexample:N.
        #[arg(long)]
        init: Option<String>,
        /// Domain half-length for built-in initial data.
        #[arg(long)]
        l: Option<f64>,
        /// Grid size for built-in initial data.
        #[arg(long)]
        n: Option<usize>,
        /// Integration horizon.
        #[arg(long)]
        t_end: Option<f64>,
        /// Time-step safety factor: dt = cfl dx / max(1, |u|_inf).
        #[arg(long)]
        cfl: Option<f64>,
        /// Keep every k-th step in the trajectory.
        #[arg(long)]
        record_every: Option<usize>,
        /// Comma-separated record times (overrides record-every).
        #[arg(long)]
        record_times: Option<String>,
        /// Stop when min u_x drops below -threshold.
        #[arg(long)]
        breaking_threshold: Option<f64>,
        /// Disable the 2/3-rule dealiasing projection.
        #[arg(long)]
        no_dealias: bool,
        /// Write each recorded state as a field binary.
        #[arg(long)]
        dump_fields: bool,
    },
    /// Integrate the exact multipeakon ODE system.
    Peakon {
        /// Comma-separated momenta (antipeakons are negative).
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        /// Comma-separated positions.
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Integration horizon.
        #[arg(long)]
        t_end: Option<f64>,
        /// Fixed RK4 step.
        #[arg(long)]
        dt: Option<f64>,
        /// Keep every k-th step in the trajectory.
        #[arg(long)]
        record_every: Option<usize>,
    },
    /// Static scaling ladder of the oscillatory data family u0(N).
    Counterexample {
        /// Comma-separated list of N values.
        #[arg(long)]
        n_list: Option<String>,
        /// Also write u0(N) on its one-period window for this N.
        #[arg(long)]
        dump_field: Option<u32>,
    },
    /// Norm-inflation runs: evolve u0(N) and track the B^1 norm.
    Inflate {
        /// Comma-separated list of N values.
        #[arg(long)]
        n_list: Option<String>,
        /// Time-step safety factor.
        #[arg(long)]
        cfl: Option<f64>,
    },
    /// Early-time comparison of the flow against u0 + t E0.
    Linearize {
        /// Frequency exponent N of the data family.
        #[arg(long)]
        n: Option<u32>,
        /// Comma-separated comparison times.
        #[arg(long)]
        t: Option<String>,
    },
    /// Cadence-refinement residual of the transported-E identity.
    EResidual {
        /// Frequency exponent N of the data family.
        #[arg(long)]
        n: Option<u32>,
        /// Time-step safety factor.
        #[arg(long)]
        cfl: Option<f64>,
    },
    /// Smooth-bump control run: amplification must stay modest.
    Control {
        /// Bump amplitude.
        #[arg(long)]
        amp: Option<f64>,
        /// Bump width.
        #[arg(long)]
        width: Option<f64>,
        /// Integration horizon.
        #[arg(long)]
        t_end: Option<f64>,
    },
    /// Product-algebra failure: |u_x^2|_{B0} / |u_x|_{B0}^2 across N.
    Algebra {
        /// Comma-separated list of N values.
        #[arg(long)]
        n_list: Option<String>,
    },
    /// Re-emit a JSON report as canonical JSON or flattened CSV.
    Report {
        #[arg(long)]
        input: PathBuf,
        /// json or csv.
        #[arg(long)]
        format: Option<String>,
    },
}

fn load_config(path: &Option<PathBuf>) -> anyhow::Result<ConfigMap> {
    match path {
        Some(p) => Ok(ConfigMap::load(p)?),
        None => Ok(ConfigMap::default()),
    }
}

/// Resolve a field source string into samples on a grid.
fn build_init(init: &str, l: Option<f64>, n: Option<usize>) -> anyhow::Result<Field> {
    if let Some(path) = init.strip_prefix("file:") {
        return Ok(read_field_binary(Path::new(path))?);
    }
    if let Some(ne) = init.strip_prefix("counterexample:") {
        let n_exp: u32 = ne
            .parse()
            .with_context(|| format!("bad N in init {init:?}"))?;
        let grid = match (l, n) {
            (Some(l), Some(n)) => Grid::new(l, n)?,
            _ => evolution_grid(n_exp)?,
        };
        return Ok(build_u0(&CounterexampleParams::new(n_exp, grid))?);
    }
    match init {
        "bump" => {
            let grid = Grid::new(l.unwrap_or(std::f64::consts::PI), n.unwrap_or(1 << 12))?;
            Ok(Field::from_fn(grid, |x| 0.5 * (-x * x).exp()))
        }
        "peakon" => {
            let grid = Grid::new(
                l.unwrap_or(4.0 * std::f64::consts::PI),
                n.unwrap_or(1 << 14),
            )?;
            let s = PeakonState::new(vec![1.0], vec![0.0])?;
            Ok(mollified_peakon_field(
                &s,
                grid,
                besovch::peakon::default_width(grid),
            ))
        }
        other => bail!(
            "unknown init {other:?}: expected file:PATH, bump, peakon or counterexample:N"
        ),
    }
}

fn resolve_init(flag: &Option<String>, cfg: &ConfigMap) -> String {
    flag.clone()
        .or_else(|| cfg.get("init").map(str::to_string))
        .unwrap_or_else(|| "bump".to_string())
}

fn resolve_u32_list(
    flag: &Option<String>,
    cfg: &ConfigMap,
    key: &str,
    default: &[u32],
) -> anyhow::Result<Vec<u32>> {
    if let Some(text) = flag {
        return parse_u32_list(text).map_err(|e| anyhow::anyhow!("--{key}: {e}"));
    }
    if let Some(list) = cfg.u32_list(key)? {
        return Ok(list);
    }
    Ok(default.to_vec())
}

#[derive(serde::Serialize)]
struct Enveloped<T: serde::Serialize> {
    manifest: RunManifest,
    #[serde(flatten)]
    body: T,
}

fn emit<T: serde::Serialize>(
    out_dir: &Path,
    name: &str,
    manifest: RunManifest,
    body: T,
) -> anyhow::Result<PathBuf> {
    let path = out_dir.join(name);
    write_json(&path, &Enveloped { manifest, body })?;
    Ok(path)
}

fn main() -> anyhow::Result<()> {
    let cli = Cli::parse();
    fs::create_dir_all(&cli.out)
        .with_context(|| format!("creating output directory {}", cli.out.display()))?;
    let cfg = load_config(&cli.config)?;
    let out = cli.out.as_path();

    match &cli.cmd {
        Cmd::Decompose { init, l, n, dump_blocks } => {
            let src = resolve_init(init, &cfg);
            let f = build_init(&src, *l, *n)?;
            let bank = FilterBank::new(f.grid)?;
            let stats = bank.block_stats(&f);
            write_block_csv(&out.join("blocks.csv"), &stats)?;
            if *dump_blocks {
                let dec = bank.decompose(&f);
                for (i, b) in dec.blocks.iter().enumerate() {
                    let j = i as i32 - 1;
                    write_field_binary(&out.join(format!("block_{j}.bin")), b)?;
                }
            }
            println!("init = {src}, grid n = {}, jmax = {}", f.grid.n, bank.jmax);
            for s in &stats {
                println!("j = {:>3}  sup = {:.6e}  l2 = {:.6e}", s.j, s.linf, s.l2);
            }
            println!("wrote {}", out.join("blocks.csv").display());
        }
        Cmd::BesovNorm { init, l, n, s, r, log_weight } => {
            let src = resolve_init(init, &cfg);
            let f = build_init(&src, *l, *n)?;
            let s_val = match s {
                Some(v) => *v,
                None => cfg.f64_or("s", 1.0)?,
            };
            let r_text = r
                .clone()
                .or_else(|| cfg.get("r").map(str::to_string))
                .unwrap_or_else(|| "1".to_string());
            let r_exp = Exponent::parse(&r_text)?;
            let mut spec = BesovSpec::new(s_val, Exponent::Inf, r_exp);
            if *log_weight || cfg.bool_or("log_weight", false)? {
                spec = spec.with_log_weight();
            }
            let bank = FilterBank::new(f.grid)?;
            let report = besov_norm(&bank, &f, &spec)?;
            let manifest = run_manifest(
                "besov-norm",
                &[
                    ("init", src.clone()),
                    ("s", format!("{s_val}")),
                    ("r", r_text.clone()),
                    ("log_weight", format!("{}", spec.log_weight)),
                ],
            );
            let path = emit(out, "norm.json", manifest, &report)?;
            println!("B^{s_val}_(inf,{r_text}) norm of {src}: {:.10e}", report.value);
            println!("wrote {}", path.display());
        }
        Cmd::Solve {
            init,
            l,
            n,
            t_end,
            cfl,
            record_every,
            record_times,
            breaking_threshold,
            no_dealias,
            dump_fields,
        } => {
            let src = resolve_init(init, &cfg);
            let u0 = build_init(&src, *l, *n)?;
            let t_end = match t_end {
                Some(v) => *v,
                None => cfg.f64_or("t_end", 1.0)?,
            };
            let cfl = match cfl {
                Some(v) => *v,
                None => cfg.f64_or("cfl", 0.4)?,
            };
            let mut sc = SolveConfig::new(t_end).with_cfl(cfl);
            sc.breaking_threshold = match breaking_threshold {
                Some(v) => *v,
                None => cfg.f64_or("breaking_threshold", 1e3)?,
            };
            sc.dealias = !(*no_dealias || !cfg.bool_or("dealias", true)?);
            if let Some(text) = record_times {
                let ts = parse_f64_list(text).map_err(|e| anyhow::anyhow!("--record-times: {e}"))?;
                sc = sc.recording_at(ts);
            } else if let Some(k) = record_every {
                sc = sc.recording_every(*k);
            } else if let Some(k) = cfg.get("record_every") {
                sc = sc.recording_every(
                    k.parse()
                        .map_err(|_| anyhow::anyhow!("record_every: not an integer"))?,
                );
            } else {
                let est = (t_end / (cfl * u0.grid.dx())).ceil() as usize;
                sc = sc.recording_every((est / 64).max(1));
            }
            let traj = solve(&u0, &sc)?;
            let bank = FilterBank::new(u0.grid)?;
            let b1 = BesovSpec::b1_inf_1();
            let mut rows = Vec::new();
            let mut files = Vec::new();
            for (i, (t, u)) in traj.times.iter().zip(&traj.states).enumerate() {
                rows.push(vec![
                    *t,
                    h1_energy(u),
                    u.derivative().min(),
                    besov_norm(&bank, u, &b1)?.value,
                ]);
                if *dump_fields {
                    let name = format!("u_{i:06}.bin");
                    write_field_binary(&out.join(&name), u)?;
                    files.push(name);
                }
            }
            write_table_csv(
                &out.join("diagnostics.csv"),
                &["t", "h1", "min_ux", "b1_inf_1"],
                &rows,
            )?;
            let manifest = run_manifest(
                "solve",
                &[
                    ("init", src.clone()),
                    ("t_end", format!("{t_end}")),
                    ("cfl", format!("{cfl}")),
                    ("dealias", format!("{}", sc.dealias)),
                    ("breaking_threshold", format!("{}", sc.breaking_threshold)),
                ],
            );
            #[derive(serde::Serialize)]
            struct TrajectorySummary {
                l: f64,
                n: usize,
                steps: usize,
                broke_at: Option<f64>,
                times: Vec<f64>,
                record_files: Vec<String>,
            }
            let path = emit(
                out,
                "trajectory.json",
                manifest,
                TrajectorySummary {
                    l: u0.grid.l,
                    n: u0.grid.n,
                    steps: traj.steps,
                    broke_at: traj.broke_at,
                    times: traj.times.clone(),
                    record_files: files,
                },
            )?;
            println!(
                "solved {src} to t = {:.6} in {} steps ({} records){}",
                traj.times.last().copied().unwrap_or(0.0),
                traj.steps,
                traj.times.len(),
                match traj.broke_at {
                    Some(tb) => format!(", wave breaking at t = {tb:.6}"),
                    None => String::new(),
                }
            );
            println!("wrote {} and {}", path.display(), out.join("diagnostics.csv").display());
        }
        Cmd::Peakon { p, q, t_end, dt, record_every } => {
            let p_text = p
                .clone()
                .or_else(|| cfg.get("p").map(str::to_string))
                .unwrap_or_else(|| "1".to_string());
            let q_text = q
                .clone()
                .or_else(|| cfg.get("q").map(str::to_string))
                .unwrap_or_else(|| "0".to_string());
            let ps = parse_f64_list(&p_text).map_err(|e| anyhow::anyhow!("--p: {e}"))?;
            let qs = parse_f64_list(&q_text).map_err(|e| anyhow::anyhow!("--q: {e}"))?;
            let t_end = match t_end {
                Some(v) => *v,
                None => cfg.f64_or("t_end", 5.0)?,
            };
            let dt = match dt {
                Some(v) => *v,
                None => cfg.f64_or("dt", 1e-3)?,
            };
            let every = match record_every {
                Some(v) => *v,
                None => cfg.usize_or("record_every", 10)?,
            };
            let s0 = PeakonState::new(ps, qs)?;
            let states = evolve_recorded(&s0, t_end, dt, every)?;
            write_peakon_csv(&out.join("peakon.csv"), &states)?;
            let manifest = run_manifest(
                "peakon",
                &[
                    ("p", p_text.clone()),
                    ("q", q_text.clone()),
                    ("t_end", format!("{t_end}")),
                    ("dt", format!("{dt}")),
                ],
            );
            #[derive(serde::Serialize)]
            struct PeakonSummary {
                initial: PeakonState,
                last: PeakonState,
                momentum_drift: f64,
            }
            let last = states.last().unwrap().clone();
            let drift = (last.total_momentum() - s0.total_momentum()).abs();
            let path = emit(
                out,
                "peakon.json",
                manifest,
                PeakonSummary { initial: s0, last: last.clone(), momentum_drift: drift },
            )?;
            println!(
                "{} peakons to t = {:.6}: q = {:?}, total momentum drift = {:.3e}",
                last.p.len(),
                last.t,
                last.q,
                drift
            );
            println!("wrote {} and {}", path.display(), out.join("peakon.csv").display());
        }
        Cmd::Counterexample { n_list, dump_field } => {
            let ns = resolve_u32_list(n_list, &cfg, "n_list", &[10, 12, 14, 16, 18])?;
            let report = algebra_failure_experiment(&ns)?;
            let rows: Vec<Vec<f64>> = report
                .per_n
                .iter()
                .map(|r| {
                    vec![r.n_exp as f64, r.u0_b1, r.ux_b0, r.ux2_b0, r.u0_b1ww, r.algebra_ratio]
                })
                .collect();
            write_table_csv(
                &out.join("scaling.csv"),
                &["n", "u0_b1", "ux_b0", "ux2_b0", "u0_b1ww", "algebra_ratio"],
                &rows,
            )?;
            if let Some(n_exp) = dump_field {
                let grid = evolution_grid(*n_exp)?;
                let u0 = build_u0(&CounterexampleParams::new(*n_exp, grid))?;
                write_field_binary(&out.join(format!("u0_N{n_exp}.bin")), &u0)?;
                write_field_csv(&out.join(format!("u0_N{n_exp}.csv")), &u0)?;
            }
            let manifest = run_manifest(
                "counterexample",
                &[("n_list", format!("{ns:?}"))],
            );
            let path = emit(out, "scaling.json", manifest, &report)?;
            for r in &report.per_n {
                println!(
                    "N = {:>2}  |u0|_B1 = {:.4}  |u0x|_B0 = {:.4}  |u0x^2|_B0 = {:.4e}  ratio = {:.4}",
                    r.n_exp, r.u0_b1, r.ux_b0, r.ux2_b0, r.algebra_ratio
                );
            }
            println!(
                "log2 slopes vs N: u0_b1 {:.4}, ux_b0 {:.4}, ux2_b0 {:.4}, u0_b1ww {:.4}",
                report.slopes.u0_b1.slope,
                report.slopes.ux_b0.slope,
                report.slopes.ux2_b0.slope,
                report.slopes.u0_b1ww.slope
            );
            println!("wrote {}", path.display());
        }
        Cmd::Inflate { n_list, cfl } => {
            let ns = resolve_u32_list(n_list, &cfg, "n_list", &[8, 10, 12])?;
            let cfl = match cfl {
                Some(v) => *v,
                None => cfg.f64_or("cfl", 0.8)?,
            };
            let mut runs = Vec::new();
            for &n_exp in &ns {
                let run = inflation_experiment(n_exp, cfl)?;
                let rows: Vec<Vec<f64>> = run
                    .history
                    .iter()
                    .map(|h| vec![h.t, h.b1, h.ux_b0, h.lipschitz, h.h1])
                    .collect();
                write_table_csv(
                    &out.join(format!("inflate_history_N{n_exp}.csv")),
                    &["t", "b1_inf_1", "ux_b0", "lipschitz", "h1"],
                    &rows,
                )?;
                println!(
                    "N = {:>2}  amplification = {:.4} (linear prediction {:.4})  ux growth at t = {:.4}: {:.4}{}",
                    n_exp,
                    run.amplification,
                    run.amplification_linear_prediction,
                    run.t_half_used,
                    run.ux_growth_at_thalf,
                    if run.broke { "  [wave breaking]" } else { "" }
                );
                runs.push(run);
            }
            let manifest = run_manifest(
                "inflate",
                &[("n_list", format!("{ns:?}")), ("cfl", format!("{cfl}"))],
            );
            #[derive(serde::Serialize)]
            struct InflateSummary {
                runs: Vec<besovch::experiments::InflationRun>,
            }
            let path = emit(out, "inflation.json", manifest, InflateSummary { runs })?;
            println!("wrote {}", path.display());
        }
        Cmd::Linearize { n, t } => {
            let n_exp = match n {
                Some(v) => *v,
                None => cfg.u32_or("n_exp", 10)?,
            };
            let ts = match t {
                Some(text) => {
                    Some(parse_f64_list(text).map_err(|e| anyhow::anyhow!("--t: {e}"))?)
                }
                None => cfg.f64_list("t_list")?,
            };
            let report = early_time_linearization(n_exp, ts)?;
            let manifest = run_manifest("linearize", &[("n", format!("{n_exp}"))]);
            for row in &report.rows {
                println!(
                    "t = {:.4e}  eulerian deviation ratio = {:.4}  block-sup ratio = {:.4}",
                    row.t, row.r_eulerian, row.r_blocksup
                );
            }
            let path = emit(out, "linearize.json", manifest, &report)?;
            println!("wrote {}", path.display());
        }
        Cmd::EResidual { n, cfl } => {
            let n_exp = match n {
                Some(v) => *v,
                None => cfg.u32_or("n_exp", 8)?,
            };
            let cfl = match cfl {
                Some(v) => *v,
                None => cfg.f64_or("cfl", 0.8)?,
            };
            let report = e_transport_residual(n_exp, cfl)?;
            for e in &report.entries {
                println!(
                    "cadence = {:.6e}  |dE/dt + u E_x - G|_B0 = {:.6e}",
                    e.cadence, e.residual_norm
                );
            }
            println!(
                "fitted order = {:.3}; G-ratio in [{:.4}, {:.4}] over {} samples (spread {:.3})",
                report.order,
                report.g_ratio.min,
                report.g_ratio.max,
                report.g_ratio.count,
                report.g_ratio.dev_of_mid
            );
            let manifest = run_manifest(
                "e-residual",
                &[("n", format!("{n_exp}")), ("cfl", format!("{cfl}"))],
            );
            let path = emit(out, "eresidual.json", manifest, &report)?;
            println!("wrote {}", path.display());
        }
        Cmd::Control { amp, width, t_end } => {
            let amp = match amp {
                Some(v) => *v,
                None => cfg.f64_or("amp", 0.5)?,
            };
            let width = match width {
                Some(v) => *v,
                None => cfg.f64_or("width", 1.0)?,
            };
            let t_end = match t_end {
                Some(v) => *v,
                None => cfg.f64_or("t_end", 2.0 / 8f64.sqrt())?,
            };
            let run = no_inflation_experiment(amp, width, t_end)?;
            println!(
                "bump amp = {amp}, width = {width}: amplification {:.4} over [0, {:.4}] (no-inflation window {:.4})",
                run.amplification, run.t_end, run.window
            );
            let manifest = run_manifest(
                "control",
                &[
                    ("amp", format!("{amp}")),
                    ("width", format!("{width}")),
                    ("t_end", format!("{t_end}")),
                ],
            );
            let path = emit(out, "control.json", manifest, &run)?;
            println!("wrote {}", path.display());
        }
        Cmd::Algebra { n_list } => {
            let ns = resolve_u32_list(n_list, &cfg, "n_list", &[10, 12, 14, 16, 18])?;
            let report = algebra_failure_experiment(&ns)?;
            for r in &report.per_n {
                println!(
                    "N = {:>2}  |u0x|_B0 = {:.4}  |u0x^2|_B0 = {:.4e}  defect ratio = {:.4}",
                    r.n_exp, r.ux_b0, r.ux2_b0, r.algebra_ratio
                );
            }
            let first = report.per_n.first().map(|r| r.algebra_ratio).unwrap_or(f64::NAN);
            let last = report.per_n.last().map(|r| r.algebra_ratio).unwrap_or(f64::NAN);
            println!(
                "ratio growth {:.4}x across N = {:?}: B^0_(inf,1) is not an algebra on this family",
                last / first,
                ns
            );
            let manifest = run_manifest("algebra", &[("n_list", format!("{ns:?}"))]);
            let path = emit(out, "algebra.json", manifest, &report)?;
            println!("wrote {}", path.display());
        }
        Cmd::Report { input, format } => {
            let format = format
                .clone()
                .or_else(|| cfg.get("format").map(str::to_string))
                .unwrap_or_else(|| "json".to_string());
            let text = fs::read_to_string(input)
                .with_context(|| format!("reading {}", input.display()))?;
            let value: serde_json::Value =
                serde_json::from_str(&text).with_context(|| "parsing report JSON")?;
            let (name, bytes) = match format.as_str() {
                "json" => ("report.json", to_json_string(&value)?.into_bytes()),
                "csv" => ("report.csv", json_to_csv(&value).into_bytes()),
                other => bail!("unknown format {other:?}: expected json or csv"),
            };
            let path = out.join(name);
            fs::write(&path, &bytes).with_context(|| format!("writing {}", path.display()))?;
            println!("wrote {} (sha256 {})", path.display(), sha256_hex(&bytes));
        }
    }
    Ok(())
}
