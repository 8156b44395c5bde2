//! `spaceform`: solvers, verification suites and tables for the surfaces of
//! constant curvature −1, 0 and 1.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use spaceform::verify::{self, SuiteOptions, SuiteReport};
use spaceform::{
    isoperimetric, polygon, regular, Execution, GeodesicPolygon, Kappa, MinimizerOptions,
    SurfacePoint, Triangle,
};

/// Seed used when neither `--seed` nor `SPACEFORM_SEED` is given.
const DEFAULT_SEED: u64 = 7;

#[derive(Parser, Debug)]
#[command(name = "spaceform", version, about = "Geometry on the sphere, the plane and the hyperbolic plane")]
struct Cli {
    /// Output format; `iso limit` defaults to csv, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// RNG seed for randomized commands.
    #[arg(long, global = true, env = "SPACEFORM_SEED", default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Run batches on the thread pool or on the calling thread.
    #[arg(long, global = true, value_enum, default_value_t = Mode::Parallel)]
    execution: Mode,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Sequential,
    Parallel,
}

impl From<Mode> for Execution {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Sequential => Execution::Sequential,
            Mode::Parallel => Execution::Parallel,
        }
    }
}

fn parse_kappa(s: &str) -> Result<Kappa, String> {
    let v: i64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    Kappa::from_value(v).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
struct KappaArg {
    /// Curvature: -1, 0 or 1.
    #[arg(long, value_parser = parse_kappa, allow_negative_numbers = true)]
    kappa: Kappa,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triangle solvers.
    #[command(subcommand)]
    Triangle(TriangleCmd),
    /// Regular n-gon from its circumradius, side, angle or area.
    Regular(RegularArgs),
    /// Isoperimetric quantities.
    #[command(subcommand)]
    Iso(IsoCmd),
    /// Measurements of explicit polygons and chains.
    #[command(subcommand)]
    Polygon(PolygonCmd),
    /// Randomized verification suites.
    Verify(VerifyArgs),
}

#[derive(Subcommand, Debug)]
enum TriangleCmd {
    /// Solve a triangle from three sides, two sides and their angle, or two
    /// angles and their side.
    Solve {
        #[command(flatten)]
        kappa: KappaArg,
        #[command(flatten)]
        given: TriangleGiven,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TriangleGiven {
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], allow_negative_numbers = true)]
    sss: Option<Vec<f64>>,
    #[arg(long, num_args = 3, value_names = ["A", "B", "GAMMA"], allow_negative_numbers = true)]
    sas: Option<Vec<f64>>,
    #[arg(long, num_args = 3, value_names = ["ALPHA", "C", "BETA"], allow_negative_numbers = true)]
    asa: Option<Vec<f64>>,
}

#[derive(Args, Debug)]
struct RegularArgs {
    #[command(flatten)]
    kappa: KappaArg,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    given: RegularGiven,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct RegularGiven {
    /// Circumradius.
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    side: Option<f64>,
    /// Interior angle.
    #[arg(long, allow_negative_numbers = true)]
    angle: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    area: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum IsoCmd {
    /// The circle of least perimeter enclosing the given area.
    Circle {
        #[command(flatten)]
        kappa: KappaArg,
        #[arg(long, allow_negative_numbers = true)]
        area: f64,
    },
    /// Numerically minimize the perimeter of n-gons of fixed area; the best
    /// of `--seeds` restarts is reported.
    Minimize {
        #[command(flatten)]
        kappa: KappaArg,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        area: f64,
        /// Number of restarts, seeded `seed, seed + 1, …`.
        #[arg(long, default_value_t = 8)]
        seeds: u64,
    },
    /// Regular n-gons of fixed area for n = 3 … n-max.
    Limit {
        #[command(flatten)]
        kappa: KappaArg,
        #[arg(long, allow_negative_numbers = true)]
        area: f64,
        #[arg(long)]
        n_max: usize,
    },
}

#[derive(Subcommand, Debug)]
enum PolygonCmd {
    /// Sides, angles, perimeter, area and convexity of a polygon.
    Measure {
        #[command(flatten)]
        kappa: KappaArg,
        /// JSON list of [x, y, z] vertices ([x, y] in the plane).
        #[arg(long)]
        vertices: String,
    },
    /// Lay out an open chain and report its closing length.
    Arm {
        #[command(flatten)]
        kappa: KappaArg,
        /// JSON list of the n − 1 side lengths.
        #[arg(long)]
        sides: String,
        /// JSON list of the n − 2 interior angles.
        #[arg(long)]
        angles: String,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: Suite,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    /// Replaces the suite's default tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Identities,
    Halfangle,
    Armlemma,
    Dominance,
}

/// Why a run stopped early.
enum Failure {
    Usage(String),
    Domain(String),
    Io(io::Error),
}

impl From<spaceform::Error> for Failure {
    fn from(e: spaceform::Error) -> Self {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// What a command produced.
enum Report {
    Record(Box<dyn ErasedRecord>),
    Limit(LimitTable),
    Suite(SuiteReport),
}

/// Object-safe serialization for single-record outputs.
trait ErasedRecord {
    fn json(&self, out: &mut dyn Write) -> io::Result<()>;
    fn csv(&self, out: &mut dyn Write) -> io::Result<()>;
}

impl<T: Serialize> ErasedRecord for T {
    fn json(&self, out: &mut dyn Write) -> io::Result<()> {
        output::json(self, out)
    }

    fn csv(&self, out: &mut dyn Write) -> io::Result<()> {
        output::csv_record(self, out)
    }
}

fn record<T: Serialize + 'static>(v: T) -> Report {
    Report::Record(Box::new(v))
}

#[derive(Serialize)]
struct LimitRow {
    n: usize,
    r_n: f64,
    perimeter_n: f64,
    deficit_n: f64,
}

#[derive(Serialize)]
struct LimitTable {
    kappa: Kappa,
    area: f64,
    optimal_radius: f64,
    optimal_perimeter: f64,
    rows: Vec<LimitRow>,
}

#[derive(Serialize)]
struct PolygonMeasure {
    kappa: Kappa,
    vertices: Vec<SurfacePoint>,
    sides: Vec<f64>,
    angles: Vec<f64>,
    perimeter: f64,
    /// Absent for non-convex polygons on curved surfaces.
    area: Option<f64>,
    convex: bool,
}

#[derive(Serialize)]
struct ArmReport {
    kappa: Kappa,
    sides: Vec<f64>,
    angles: Vec<f64>,
    chain: Vec<SurfacePoint>,
    closing_length: f64,
}

fn three(v: &[f64]) -> (f64, f64, f64) {
    (v[0], v[1], v[2])
}

fn parse_json<T: serde::de::DeserializeOwned>(flag: &str, s: &str) -> Result<T, Failure> {
    serde_json::from_str(s).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn triangle(cmd: TriangleCmd) -> Result<Report, Failure> {
    let TriangleCmd::Solve { kappa, given } = cmd;
    let k = kappa.kappa;
    let t = match (given.sss, given.sas, given.asa) {
        (Some(v), _, _) => {
            let (a, b, c) = three(&v);
            Triangle::from_sss(k, a, b, c)?
        }
        (_, Some(v), _) => {
            let (a, b, g) = three(&v);
            Triangle::from_sas(k, a, b, g)?
        }
        (_, _, Some(v)) => {
            let (al, c, be) = three(&v);
            Triangle::from_asa(k, al, c, be)?
        }
        _ => unreachable!("clap enforces one of --sss, --sas, --asa"),
    };
    Ok(record(t))
}

fn regular_cmd(args: RegularArgs) -> Result<Report, Failure> {
    let (k, n, g) = (args.kappa.kappa, args.n, args.given);
    if n < 3 {
        return Err(Failure::Usage(format!("--n must be at least 3, got {n}")));
    }
    let r = match (g.r, g.side, g.angle, g.area) {
        (Some(r), ..) => r,
        (_, Some(a), ..) => regular::radius_from_side(k, n, a)?,
        (_, _, Some(t), _) => regular::radius_from_angle(k, n, t)?,
        (.., Some(a)) => regular::radius_from_area(k, n, a)?,
        _ => unreachable!("clap enforces one of --r, --side, --angle, --area"),
    };
    Ok(record(regular::build(k, n, r)?))
}

fn iso(cmd: IsoCmd, seed: u64, exec: Execution) -> Result<Report, Failure> {
    match cmd {
        IsoCmd::Circle { kappa, area } => Ok(record(isoperimetric::optimal_circle(kappa.kappa, area)?)),
        IsoCmd::Minimize {
            kappa,
            n,
            area,
            seeds,
        } => {
            if n < 3 || seeds == 0 {
                return Err(Failure::Usage("--n must be at least 3 and --seeds positive".into()));
            }
            let seeds: Vec<u64> = (0..seeds).map(|i| seed.wrapping_add(i)).collect();
            let best = isoperimetric::minimize_polygon_restarts(
                kappa.kappa,
                n,
                area,
                &seeds,
                &MinimizerOptions::default(),
                exec,
            )?;
            Ok(record(best))
        }
        IsoCmd::Limit { kappa, area, n_max } => {
            let k = kappa.kappa;
            if !(3..=regular::MAX_LIMIT_N).contains(&n_max) {
                return Err(Failure::Usage(format!(
                    "--n-max must lie in 3..={}, got {n_max}",
                    regular::MAX_LIMIT_N
                )));
            }
            let circle = isoperimetric::optimal_circle(k, area)?;
            let rows = exec
                .map(n_max - 2, |i| {
                    let n = i + 3;
                    regular::circle_limit(k, area, n).map(|(r_n, perimeter_n)| LimitRow {
                        n,
                        r_n,
                        perimeter_n,
                        deficit_n: isoperimetric::deficit_value(k, perimeter_n, area),
                    })
                })
                .into_iter()
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Report::Limit(LimitTable {
                kappa: k,
                area,
                optimal_radius: circle.optimal_radius,
                optimal_perimeter: circle.optimal_perimeter,
                rows,
            }))
        }
    }
}

fn polygon_cmd(cmd: PolygonCmd) -> Result<Report, Failure> {
    match cmd {
        PolygonCmd::Measure { kappa, vertices } => {
            let k = kappa.kappa;
            let raw: Vec<Vec<f64>> = parse_json("vertices", &vertices)?;
            let pts = raw
                .iter()
                .map(|v| match (k, v.as_slice()) {
                    (Kappa::Flat, &[x, y]) => Ok(SurfacePoint::plane(x, y)),
                    (_, &[x, y, z]) => Ok(SurfacePoint::new(k, x, y, z)?),
                    _ => Err(Failure::Usage(format!(
                        "vertex {v:?} needs 3 coordinates (or 2 in the plane)"
                    ))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let p = GeodesicPolygon::new(pts)?;
            let convex = p.is_convex();
            Ok(record(PolygonMeasure {
                kappa: k,
                vertices: p.vertices().to_vec(),
                sides: p.sides(),
                angles: p.vertex_angles()?,
                perimeter: p.perimeter(),
                area: if convex || k.is_flat() { Some(p.area()?) } else { None },
                convex,
            }))
        }
        PolygonCmd::Arm {
            kappa,
            sides,
            angles,
        } => {
            let k = kappa.kappa;
            let sides: Vec<f64> = parse_json("sides", &sides)?;
            let angles: Vec<f64> = parse_json("angles", &angles)?;
            let chain = polygon::arm_chain(k, &sides, &angles)?;
            let closing_length = chain[0].distance_to(chain.last().expect("nonempty chain"));
            Ok(record(ArmReport {
                kappa: k,
                sides,
                angles,
                chain,
                closing_length,
            }))
        }
    }
}

fn verify_cmd(args: VerifyArgs, seed: u64, exec: Execution) -> Result<Report, Failure> {
    if args.samples == 0 {
        return Err(Failure::Usage("--samples must be positive".into()));
    }
    let opts = SuiteOptions {
        samples: args.samples,
        seed,
        tolerance: args.tol,
        execution: exec,
    };
    let report = match args.suite {
        Suite::Identities => verify::identities(&opts),
        Suite::Halfangle => verify::half_angle(&opts),
        Suite::Armlemma => verify::arm_lemma(&opts),
        Suite::Dominance => verify::dominance(&opts),
    };
    Ok(Report::Suite(report))
}

fn emit(report: &Report, format: Option<Format>, out: &mut dyn Write) -> io::Result<bool> {
    match report {
        Report::Record(r) => {
            match format.unwrap_or(Format::Json) {
                Format::Json => r.json(out)?,
                Format::Csv => r.csv(out)?,
            }
            Ok(true)
        }
        Report::Limit(t) => {
            match format.unwrap_or(Format::Csv) {
                Format::Csv => output::csv_rows(&t.rows, out)?,
                Format::Json => output::json(t, out)?,
            }
            Ok(true)
        }
        Report::Suite(s) => {
            match format.unwrap_or(Format::Json) {
                Format::Json => output::json(s, out)?,
                Format::Csv => output::csv_rows(&s.checks, out)?,
            }
            Ok(s.passed)
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let exec = Execution::from(cli.execution);
    let report = match cli.command {
        Command::Triangle(c) => triangle(c)?,
        Command::Regular(a) => regular_cmd(a)?,
        Command::Iso(c) => iso(c, cli.seed, exec)?,
        Command::Polygon(c) => polygon_cmd(c)?,
        Command::Verify(a) => verify_cmd(a, cli.seed, exec)?,
    };
    let mut out = io::stdout().lock();
    let passed = emit(&report, cli.format, &mut out)?;
    out.flush()?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("i/o error: {e}");
            ExitCode::from(3)
        }
    }
}
