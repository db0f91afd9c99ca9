//! `bidisc`: membership, distances, geodesics and traces for the symmetrized
//! bidisc from the command line. Data goes to stdout (or `--output`), messages
//! to stderr.
//!
//! Exit codes: 0 ok, 1 malformed input or internal failure, 2 domain or
//! infeasible input, 3 certification or verification failure.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bidisc::{
    boundary_trace, contains, lempert_upper, lift, royal_intersection_class, verify_geodesic, Complex64,
    DistanceReport64, Geodesic64, SymPoint64, SymPointN64, Tolerances,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

mod fail;

use fail::Failure;

#[derive(Parser, Debug)]
#[command(name = "bidisc", version, about = "Invariant distances and complex geodesics of the symmetrized bidisc")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Global {
    /// Tolerance for two-point interpolation.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol_interp: f64,
    /// Gap between the bounds below which a distance counts as tight; also the
    /// per-pair tolerance for `verify`.
    #[arg(long, global = true, default_value_t = 1e-6)]
    tol_gap: f64,
    /// Angle grid for the extremal-function sweep (at least 16).
    #[arg(long, global = true, default_value_t = 1024)]
    omega_grid: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format. `trace` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write data here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Membership, margin and lift of a point `{"s":[re,im],"p":[re,im]}`.
    Member {
        #[arg(long)]
        point: String,
    },
    /// Caratheodory lower bound, Lempert upper bound and witness.
    Dist {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Witness geodesic through two points with its certificate.
    Geodesic {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Checks the isometry property on seeded random pairs.
    Verify {
        #[arg(long)]
        geodesic: String,
        #[arg(long, default_value_t = 32)]
        pairs: usize,
    },
    /// Samples the geodesic on the unit circle.
    Trace {
        #[arg(long)]
        geodesic: String,
        #[arg(long, default_value_t = 256)]
        samples: usize,
    },
    /// How the geodesic meets the royal variety.
    Classify {
        #[arg(long)]
        geodesic: String,
    },
    /// Upper bound from the conjectured geodesics of the symmetrized polydisc.
    Gn {
        #[arg(long)]
        n: usize,
        /// `{"n":3,"sigma":[[re,im],...]}` or just the list of coordinates.
        #[arg(long)]
        target: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("bidisc: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let opts = &cli.global;
    let tol = tolerances(opts)?;
    let format = opts.format.unwrap_or(if matches!(cli.cmd, Cmd::Trace { .. }) { Format::Csv } else { Format::Json });
    let mut out = Vec::new();
    let outcome = match &cli.cmd {
        Cmd::Member { point } => {
            let z: SymPoint64 = parse(point, "point")?;
            let m = contains(&z);
            let l = lift(&z);
            emit_json(&mut out, format, &MemberOut { inside: m.inside, margin: m.margin, lift: [l.l1, l.l2] })?;
            Ok(())
        }
        Cmd::Dist { from, to } => {
            let (z, w) = (parse(from, "from")?, parse(to, "to")?);
            let r: DistanceReport64 = bidisc::distance_report(&z, &w, &tol)?;
            emit_json(&mut out, format, &r)?;
            Ok(())
        }
        Cmd::Geodesic { from, to } => {
            let (z, w) = (parse(from, "from")?, parse(to, "to")?);
            geodesic(&mut out, format, &z, &w, &tol)
        }
        Cmd::Verify { geodesic, pairs } => {
            let g = parse_geodesic(geodesic)?;
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            let pairs: Vec<(Complex64, Complex64)> = (0..*pairs)
                .map(|_| (bidisc::random_disc_point(&mut rng, 0.95), bidisc::random_disc_point(&mut rng, 0.95)))
                .collect();
            let r = verify_geodesic(&g, &pairs, opts.tol_gap, &tol);
            match format {
                Format::Json => write_json(&mut out, &r)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record([
                        "l1_re",
                        "l1_im",
                        "l2_re",
                        "l2_im",
                        "caratheodory",
                        "poincare",
                        "deviation",
                        "passed",
                    ])?;
                    for c in &r.pairs {
                        w.serialize((
                            c.l1.re,
                            c.l1.im,
                            c.l2.re,
                            c.l2.im,
                            c.caratheodory,
                            c.poincare,
                            c.deviation,
                            c.passed,
                        ))?;
                    }
                    w.flush()?;
                }
            }
            if r.passed {
                Ok(())
            } else {
                Err(Failure::Verify(r.worst_deviation))
            }
        }
        Cmd::Trace { geodesic, samples } => {
            let g = parse_geodesic(geodesic)?;
            let rows = boundary_trace(&g, *samples)?;
            match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(&mut out);
                    w.write_record(["theta", "root1_modulus", "root2_modulus", "s_re", "s_im", "p_re", "p_im"])?;
                    for r in &rows {
                        let (s, p) = (r.point.s, r.point.p);
                        w.serialize((r.theta, r.root1_modulus, r.root2_modulus, s.re, s.im, p.re, p.im))?;
                    }
                    w.flush()?;
                }
                Format::Json => write_json(&mut out, &rows)?,
            }
            Ok(())
        }
        Cmd::Classify { geodesic } => {
            let g = parse_geodesic(geodesic)?;
            emit_json(&mut out, format, &royal_intersection_class(&g)?)?;
            Ok(())
        }
        Cmd::Gn { n, target } => {
            let t = parse_n(target, *n)?;
            let r = bidisc::lempert_upper_origin_n(&t, &bidisc::FitConfig::default())?;
            emit_json(&mut out, format, &r)?;
            Ok(())
        }
    };
    // Reports that fail verification are still data.
    if !out.is_empty() {
        flush(&out, opts.output.as_deref())?;
    }
    outcome
}

fn tolerances(g: &Global) -> Result<Tolerances, Failure> {
    if g.omega_grid < 16 {
        return Err(Failure::Input(format!("--omega-grid must be at least 16, got {}", g.omega_grid)));
    }
    for (name, v) in [("--tol-interp", g.tol_interp), ("--tol-gap", g.tol_gap)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Failure::Input(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(Tolerances { interp: g.tol_interp, gap: g.tol_gap, omega_grid: g.omega_grid, ..Tolerances::default() })
}

#[derive(Serialize)]
struct MemberOut {
    inside: bool,
    margin: f64,
    lift: [Complex64; 2],
}

#[derive(Serialize)]
struct GeodesicOut<'a> {
    geodesic: &'a Geodesic64,
    kind: &'static str,
    at_z: Complex64,
    at_w: Complex64,
    distance: f64,
    path: bidisc::WitnessPath,
    residual: f64,
    certificate: bidisc::Certificate<f64>,
}

fn geodesic(
    out: &mut Vec<u8>,
    format: Format,
    z: &SymPoint64,
    w: &SymPoint64,
    tol: &Tolerances,
) -> Result<(), Failure> {
    let b = lempert_upper(z, w, tol)?;
    let (at_z, at_w) = b.witness.params();
    let g = b.witness.geodesic().ok_or_else(|| Failure::Input("witness is not a geodesic".into()))?;
    let certificate = g.certificate(tol)?;
    emit_json(
        out,
        format,
        &GeodesicOut {
            geodesic: g,
            kind: g.kind(),
            at_z,
            at_w,
            distance: b.value,
            path: b.path,
            residual: b.residual,
            certificate,
        },
    )
}

/// Inline JSON, or a path to a file holding it.
fn parse<T: serde::de::DeserializeOwned>(arg: &str, what: &str) -> Result<T, Failure> {
    let text = read_arg(arg)?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("--{what}: {e}")))
}

/// A geodesic, or the output of the `geodesic` command that wraps one.
fn parse_geodesic(arg: &str) -> Result<Geodesic64, Failure> {
    let mut v: serde_json::Value = parse(arg, "geodesic")?;
    if v.get("type").is_none() {
        if let Some(inner) = v.get_mut("geodesic") {
            v = inner.take();
        }
    }
    serde_json::from_value(v).map_err(|e| Failure::Input(format!("--geodesic: {e}")))
}

fn read_arg(arg: &str) -> Result<String, Failure> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Input(format!("{arg}: {e}")))
}

fn parse_n(arg: &str, n: usize) -> Result<SymPointN64, Failure> {
    let text = read_arg(arg)?;
    let v: serde_json::Value = serde_json::from_str(&text).map_err(|e| Failure::Input(format!("--target: {e}")))?;
    let v = if v.is_array() { serde_json::json!({ "n": n, "sigma": v }) } else { v };
    let z: SymPointN64 = serde_json::from_value(v).map_err(|e| Failure::Input(format!("--target: {e}")))?;
    if z.n() != n {
        return Err(Failure::Input(format!("--n is {n} but the target has {} coordinates", z.n())));
    }
    Ok(z)
}

fn emit_json<T: Serialize>(out: &mut Vec<u8>, format: Format, v: &T) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Input("csv output is only available for trace and verify".into()));
    }
    write_json(out, v)
}

fn write_json<T: Serialize>(out: &mut Vec<u8>, v: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| Failure::Internal(e.to_string()))?;
    out.push(b'\n');
    Ok(())
}

fn flush(data: &[u8], path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, data).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(data).and_then(|_| so.flush()).map_err(|e| Failure::Internal(e.to_string()))
        }
    }
}
