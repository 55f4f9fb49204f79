//! Command-line front end: solid and profile ingestion, drainage times,
//! orientation search, turn-up numbers, clepsydra balancing, CSV sampling,
//! and the golden verification suite.
//!
//! Exit codes: 0 success, 1 computation error (or failed verification
//! rows), 2 usage error. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::clepsydra::{
    balance_pair, characterization_residual, enumerate_balanced, moment, potential_moment,
    solve_balanced, BalanceSolution,
};
use crate::drainage::{
    drainage_time, drainage_time_surface, fill_fraction, potential_energy, simulate, volume,
};
use crate::error::{Error, Result};
use crate::geometry::io::load_mesh;
use crate::geometry::{
    analytic_profile, area_profile, platonic, AnalyticProfile, AreaProfile, ConvexPolyhedron,
    Direction, PlatonicSolid, RevolutionProfile,
};
use crate::numfmt::{sig, sig17};
use crate::orientation::{
    symmetric_rho_bound, torricelli_closed_forms, torricelli_number, turn_up_number,
};

#[derive(Parser)]
#[command(
    name = "torricelli",
    version,
    about = "Drainage times, Torricelli numbers, turn-up numbers, and balanced clepsydra profiles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the catalog solids with volume and radii.
    Solids(SolidsArgs),
    /// Drainage time of a solid along a direction, or of a profile.
    Time(TimeArgs),
    /// Orientation search for T_min, T_max, and their ratio.
    Torricelli(TorricelliArgs),
    /// Turn-up number of a revolution profile.
    Turnup(TurnupArgs),
    /// Balance a pair of profile terms, or enumerate balanced pairs.
    Balance(BalanceArgs),
    /// Sample the drainage trajectory as CSV (t,h).
    Simulate(SimulateArgs),
    /// Sample the area profile as CSV (h,A).
    Section(SectionArgs),
    /// Run the golden verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolidsArgs {
    /// Edge length for every listed solid.
    #[arg(long, default_value_t = 1.0)]
    edge: f64,
    /// Emit JSON instead of a table.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolidSelection {
    /// Catalog solid: tetrahedron, cube, octahedron, icosahedron.
    #[arg(long, conflicts_with = "mesh")]
    solid: Option<String>,
    /// Edge length for --solid.
    #[arg(long, default_value_t = 1.0)]
    edge: f64,
    /// Mesh file (.obj or .json).
    #[arg(long, value_name = "FILE")]
    mesh: Option<PathBuf>,
}

impl SolidSelection {
    fn load(&self) -> Result<ConvexPolyhedron> {
        match (&self.solid, &self.mesh) {
            (Some(name), None) => platonic(PlatonicSolid::from_str(name)?, self.edge),
            (None, Some(path)) => load_mesh(path),
            _ => Err(Error::Parse(
                "select a solid with --solid NAME or --mesh FILE".into(),
            )),
        }
    }
}

#[derive(Args)]
struct PoseArgs {
    /// Drainage direction (upward vertical) as x,y,z.
    #[arg(long, value_name = "X,Y,Z")]
    dir: Option<String>,
    /// Rest the solid on vertex INDEX (default 0); overrides --dir.
    #[arg(long, value_name = "INDEX", num_args = 0..=1, default_missing_value = "0")]
    vertex_down: Option<usize>,
    /// Rest the solid on face INDEX (default 0); overrides --dir.
    #[arg(long, value_name = "INDEX", num_args = 0..=1, default_missing_value = "0", conflicts_with = "vertex_down")]
    face_down: Option<usize>,
}

impl PoseArgs {
    fn resolve(&self, poly: &ConvexPolyhedron) -> Result<Direction> {
        if let Some(i) = self.vertex_down {
            if i >= poly.vertices().len() {
                return Err(Error::Parse(format!("vertex index {i} out of range")));
            }
            return poly.vertex_down_direction(i);
        }
        if let Some(i) = self.face_down {
            if i >= poly.faces().len() {
                return Err(Error::Parse(format!("face index {i} out of range")));
            }
            return Ok(poly.face_down_direction(i));
        }
        match &self.dir {
            Some(text) => parse_direction(text),
            None => Ok(Direction::z()),
        }
    }
}

#[derive(Args)]
struct ProfileSelection {
    /// Revolution profile DSL, e.g. "29*y^2*(1-y)+33*y*(1-y)^4".
    #[arg(long, value_name = "DSL")]
    profile: Option<String>,
    /// Turn the revolution profile upside down.
    #[arg(long, requires = "profile")]
    flipped: bool,
    /// Closed-form catalog profile, e.g. cube-diagonal, octahedron-max.
    #[arg(long, value_name = "NAME", conflicts_with = "profile")]
    catalog: Option<String>,
}

#[derive(Args)]
struct TimeArgs {
    #[command(flatten)]
    solid: SolidSelection,
    #[command(flatten)]
    pose: PoseArgs,
    #[command(flatten)]
    profile: ProfileSelection,
    /// Lumped constant K = k·a·√(2g).
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Use the divergence-theorem surface form (mesh input only).
    #[arg(long)]
    surface: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TorricelliArgs {
    #[command(flatten)]
    solid: SolidSelection,
    /// Number of lattice directions to search.
    #[arg(long, default_value_t = 4096)]
    grid: usize,
    /// Polish the lattice extrema with simplex descent.
    #[arg(long)]
    refine: bool,
    /// Also print the symmetric-solid bound √(2D/d) when applicable.
    #[arg(long)]
    bound: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TurnupArgs {
    /// Revolution profile DSL.
    #[arg(long, value_name = "DSL", required = true)]
    profile: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BalanceArgs {
    /// First term exponents m,n of y^m*(1-y)^n.
    #[arg(long, value_name = "M,N", conflicts_with = "enumerate")]
    u1: Option<String>,
    /// Second term exponents p,q.
    #[arg(long, value_name = "P,Q", requires = "u1", conflicts_with = "enumerate")]
    u2: Option<String>,
    /// Enumerate balanced pairs with exponents up to this bound.
    #[arg(long, value_name = "BOUND")]
    enumerate: Option<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    solid: SolidSelection,
    #[command(flatten)]
    pose: PoseArgs,
    #[command(flatten)]
    profile: ProfileSelection,
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Number of trajectory samples.
    #[arg(long, default_value_t = 101)]
    samples: usize,
}

#[derive(Args)]
struct SectionArgs {
    #[command(flatten)]
    solid: SolidSelection,
    #[command(flatten)]
    pose: PoseArgs,
    #[command(flatten)]
    profile: ProfileSelection,
    /// Number of height samples.
    #[arg(long, default_value_t = 101)]
    samples: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    json: bool,
}

struct CommandOutput {
    text: String,
    code: i32,
}

fn ok(text: String) -> Result<CommandOutput> {
    Ok(CommandOutput { text, code: 0 })
}

/// Parses an argv, runs the selected operation, and returns the process
/// exit code (0 success, 1 computation error, 2 usage error).
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(command: Command) -> Result<CommandOutput> {
    match command {
        Command::Solids(args) => run_solids(args),
        Command::Time(args) => run_time(args),
        Command::Torricelli(args) => run_torricelli(args),
        Command::Turnup(args) => run_turnup(args),
        Command::Balance(args) => run_balance(args),
        Command::Simulate(args) => run_simulate(args),
        Command::Section(args) => run_section(args),
        Command::Verify(args) => run_verify(args),
    }
}

fn parse_direction(text: &str) -> Result<Direction> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "--dir expects x,y,z with three components, got `{text}`"
        )));
    }
    let coord = |s: &str| -> Result<f64> {
        s.trim()
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad direction component `{s}`")))
    };
    Direction::new(coord(parts[0])?, coord(parts[1])?, coord(parts[2])?)
}

fn parse_exponent_pair(text: &str, flag: &str) -> Result<(u32, u32)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("{flag} expects m,n, got `{text}`")));
    }
    let num = |s: &str| -> Result<u32> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad exponent `{s}` in {flag}")))
    };
    Ok((num(parts[0])?, num(parts[1])?))
}

/// Resolves the area profile named by the argument set: a mesh pose, a
/// catalog profile, or a revolution profile.
fn resolve_profile(
    solid: &SolidSelection,
    pose: &PoseArgs,
    profile: &ProfileSelection,
) -> Result<AreaProfile> {
    if let Some(dsl) = &profile.profile {
        let g = RevolutionProfile::from_str(dsl)?;
        return Ok(crate::geometry::revolution_area_profile(&g, profile.flipped));
    }
    if let Some(name) = &profile.catalog {
        return Ok(analytic_profile(AnalyticProfile::from_str(name)?));
    }
    let poly = solid.load()?;
    let dir = pose.resolve(&poly)?;
    Ok(area_profile(&poly, dir))
}

fn run_solids(args: SolidsArgs) -> Result<CommandOutput> {
    let mut rows = Vec::new();
    for which in PlatonicSolid::ALL {
        let p = platonic(which, args.edge)?;
        rows.push((
            which.name().to_string(),
            p.vertices().len(),
            p.faces().len(),
            p.edges().len(),
            p.volume(),
            p.circumradius(),
            p.inradius(),
        ));
    }
    if args.json {
        let body = rows
            .iter()
            .map(|(name, v, f, e, vol, cr, ir)| {
                format!(
                    "{{\"name\":\"{name}\",\"vertices\":{v},\"faces\":{f},\"edges\":{e},\"volume\":{},\"circumradius\":{},\"inradius\":{}}}",
                    sig17(*vol),
                    sig17(*cr),
                    sig17(*ir)
                )
            })
            .collect::<Vec<_>>()
            .join(",");
        return ok(format!("[{body}]\n"));
    }
    let mut text = format!(
        "{:<14} {:>3} {:>3} {:>3} {:>14} {:>14} {:>14}\n",
        "solid", "V", "F", "E", "volume", "circumradius", "inradius"
    );
    for (name, v, f, e, vol, cr, ir) in rows {
        text.push_str(&format!(
            "{:<14} {:>3} {:>3} {:>3} {:>14} {:>14} {:>14}\n",
            name,
            v,
            f,
            e,
            sig(vol, 10),
            sig(cr, 10),
            sig(ir, 10)
        ));
    }
    ok(text)
}

fn run_time(args: TimeArgs) -> Result<CommandOutput> {
    let report = if args.surface {
        let poly = args.solid.load()?;
        let dir = args.pose.resolve(&poly)?;
        drainage_time_surface(&poly, dir, args.k)?
    } else {
        drainage_time(&resolve_profile(&args.solid, &args.pose, &args.profile)?, args.k)?
    };
    if args.json {
        return ok(format!("{}\n", report.to_json()));
    }
    ok(format!(
        "T = {}   (H = {}, K = {}, err = {})\nprofile: {}\n",
        sig(report.time, 10),
        sig(report.height, 10),
        sig(report.lumped_constant, 10),
        sig(report.error_estimate, 3),
        report.profile_id
    ))
}

fn run_torricelli(args: TorricelliArgs) -> Result<CommandOutput> {
    let poly = args.solid.load()?;
    let report = torricelli_number(&poly, args.grid, args.refine)?;
    let bound = if args.bound {
        Some(symmetric_rho_bound(&poly)?)
    } else {
        None
    };
    if args.json {
        let mut json = report.to_json();
        if let Some(b) = bound {
            json.truncate(json.len() - 1);
            json.push_str(&format!(",\"rho_bound\":{}}}", sig17(b)));
        }
        return ok(format!("{json}\n"));
    }
    let dmin = report.dir_min.as_vec();
    let dmax = report.dir_max.as_vec();
    let mut text = format!(
        "T_min = {}  along ({}, {}, {})\nT_max = {}  along ({}, {}, {})\nrho   = {}   (grid {}, refined: {})\n",
        sig(report.t_min, 10),
        sig(dmin.x, 6),
        sig(dmin.y, 6),
        sig(dmin.z, 6),
        sig(report.t_max, 10),
        sig(dmax.x, 6),
        sig(dmax.y, 6),
        sig(dmax.z, 6),
        sig(report.rho, 10),
        report.grid,
        report.refined
    );
    if let Some(b) = bound {
        text.push_str(&format!("rho <= {} (symmetric-solid bound)\n", sig(b, 10)));
    }
    ok(text)
}

fn run_turnup(args: TurnupArgs) -> Result<CommandOutput> {
    let g = RevolutionProfile::from_str(&args.profile)?;
    let report = turn_up_number(&g)?;
    if args.json {
        return ok(format!("{}\n", report.to_json()));
    }
    let exact = report
        .rho_exact
        .as_ref()
        .map(|r| format!(" (exactly {r})"))
        .unwrap_or_default();
    ok(format!(
        "T_upright = {}\nT_flipped = {}\nrho_ell   = {}{exact}\n",
        sig(report.t_upright, 10),
        sig(report.t_flipped, 10),
        sig(report.rho, 10)
    ))
}

fn run_balance(args: BalanceArgs) -> Result<CommandOutput> {
    if let Some(bound) = args.enumerate {
        let pairs = enumerate_balanced(bound);
        if args.json {
            let body = pairs
                .iter()
                .map(|p| {
                    format!(
                        "{{\"u1\":[{},{}],\"u2\":[{},{}],\"coefficients\":[{},{}],\"profile\":\"{}\"}}",
                        p.exponents.0 .0,
                        p.exponents.0 .1,
                        p.exponents.1 .0,
                        p.exponents.1 .1,
                        p.coefficients.0,
                        p.coefficients.1,
                        p.profile.to_dsl()
                    )
                })
                .collect::<Vec<_>>()
                .join(",");
            return ok(format!("[{body}]\n"));
        }
        let mut text = format!("balanced pairs with exponents <= {bound}:\n");
        for p in &pairs {
            text.push_str(&format!("  {}\n", p.profile.to_dsl()));
        }
        text.push_str(&format!("{} pairs\n", pairs.len()));
        return ok(text);
    }

    let (Some(u1_text), Some(u2_text)) = (&args.u1, &args.u2) else {
        return Err(Error::Parse(
            "provide --u1 M,N and --u2 P,Q, or --enumerate BOUND".into(),
        ));
    };
    let u1 = parse_exponent_pair(u1_text, "--u1")?;
    let u2 = parse_exponent_pair(u2_text, "--u2")?;
    match solve_balanced(u1, u2) {
        BalanceSolution::Unsolvable => {
            if args.json {
                return ok("{\"solution\":null}\n".to_string());
            }
            ok("no balancing constant exists (u1 is symmetric, u2 is not)\n".to_string())
        }
        BalanceSolution::Symmetric => {
            if args.json {
                return ok("{\"solution\":\"symmetric\",\"C\":\"1\"}\n".to_string());
            }
            ok("both terms are already balanced: any C works (C = 1)\n".to_string())
        }
        BalanceSolution::Unique(c) => {
            let balanced = balance_pair(u1, u2)?;
            let m_up = moment(&balanced.profile, false);
            if args.json {
                let cert = &balanced.certificate;
                return ok(format!(
                    "{{\"C\":\"{c}\",\"profile\":\"{}\",\"moment\":\"{m_up}\",\"concave\":{},\"g_prime_0\":\"{}\",\"g_prime_1\":\"{}\",\"smooth\":{}}}\n",
                    balanced.profile.to_dsl(),
                    cert.concave,
                    cert.derivative_at_zero,
                    cert.derivative_at_one,
                    cert.smooth_of_revolution
                ));
            }
            let cert = &balanced.certificate;
            ok(format!(
                "C = {c}\nbalanced profile: {}\nmoment (both ways up): {m_up}\nconcave: {}, g'(0) = {}, g'(1) = {}, smooth of revolution: {}\n",
                balanced.profile.to_dsl(),
                cert.concave,
                cert.derivative_at_zero,
                cert.derivative_at_one,
                cert.smooth_of_revolution
            ))
        }
    }
}

fn run_simulate(args: SimulateArgs) -> Result<CommandOutput> {
    let profile = resolve_profile(&args.solid, &args.pose, &args.profile)?;
    let trajectory = simulate(&profile, args.k, args.samples)?;
    ok(trajectory.to_csv())
}

fn run_section(args: SectionArgs) -> Result<CommandOutput> {
    let profile = resolve_profile(&args.solid, &args.pose, &args.profile)?;
    if args.samples < 2 {
        return Err(Error::Parse("--samples must be at least 2".into()));
    }
    let mut text = String::from("h,A\n");
    for i in 0..args.samples {
        let h = profile.height() * i as f64 / (args.samples - 1) as f64;
        text.push_str(&sig17(h));
        text.push(',');
        text.push_str(&sig17(profile.area(h)));
        text.push('\n');
    }
    ok(text)
}

/// One line of the golden verification table.
#[derive(Debug, Clone)]
pub struct VerificationRow {
    pub name: String,
    /// Exact expression the computed value is checked against.
    pub expected_expr: String,
    pub expected: f64,
    pub computed: f64,
    pub abs_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl VerificationRow {
    fn close(
        name: &str,
        expr: &str,
        expected: f64,
        computed: f64,
        tolerance: f64,
    ) -> VerificationRow {
        let abs_error = (computed - expected).abs();
        VerificationRow {
            name: name.to_string(),
            expected_expr: expr.to_string(),
            expected,
            computed,
            abs_error,
            tolerance,
            pass: abs_error <= tolerance,
        }
    }

    /// Exact-rational comparison: passes only on equality, shown with
    /// tolerance 0.
    fn exact(
        name: &str,
        expr: &str,
        expected: &BigRational,
        computed: &BigRational,
    ) -> VerificationRow {
        let pass = expected == computed;
        let expected_f = expected.to_f64().unwrap_or(f64::NAN);
        let computed_f = computed.to_f64().unwrap_or(f64::NAN);
        VerificationRow {
            name: name.to_string(),
            expected_expr: expr.to_string(),
            expected: expected_f,
            computed: computed_f,
            abs_error: if pass {
                0.0
            } else {
                (computed_f - expected_f).abs().max(f64::MIN_POSITIVE)
            },
            tolerance: 0.0,
            pass,
        }
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Runs every golden value in the catalog and reports one row per value.
pub fn verify_suite() -> Result<Vec<VerificationRow>> {
    let mut rows = Vec::new();
    let sqrt2 = 2f64.sqrt();
    let sqrt3 = 3f64.sqrt();
    let sqrt5 = 5f64.sqrt();

    // Cube.
    let cube = platonic(PlatonicSolid::Cube, 1.0)?;
    let cube_forms = torricelli_closed_forms(PlatonicSolid::Cube);
    let t_face = drainage_time(&area_profile(&cube, Direction::z()), 1.0)?.time;
    rows.push(VerificationRow::close(
        "cube: T_max, face-down prism pose",
        "2",
        2.0,
        t_face,
        1e-12,
    ));
    let cube_diag = analytic_profile(AnalyticProfile::CubeDiagonal);
    let t_diag = drainage_time(&cube_diag, 1.0)?.time;
    rows.push(VerificationRow::close(
        "cube: T_min, piecewise profile quadrature",
        "(8*3^(1/4)/5)(1+3*sqrt(3)-4*sqrt(2))",
        cube_forms.t_min,
        t_diag,
        1e-10,
    ));
    let diag_dir = Direction::new(1.0, 1.0, 1.0)?;
    let t_diag_mesh = drainage_time(&area_profile(&cube, diag_dir), 1.0)?.time;
    rows.push(VerificationRow::close(
        "cube: T_min, mesh sections on the diagonal",
        "(8*3^(1/4)/5)(1+3*sqrt(3)-4*sqrt(2))",
        cube_forms.t_min,
        t_diag_mesh,
        1e-8,
    ));
    rows.push(VerificationRow::close(
        "cube: rho, closed form vs reference decimal",
        "5/(4*3^(1/4)*(1+3*sqrt(3)-4*sqrt(2)))",
        1.761_167_855_258_351_678_0,
        cube_forms.rho.unwrap(),
        1e-9,
    ));
    let search = torricelli_number(&cube, 4096, true)?;
    rows.push(VerificationRow::close(
        "cube: rho, orientation search (grid 4096 + refine)",
        "5/(4*3^(1/4)*(1+3*sqrt(3)-4*sqrt(2)))",
        cube_forms.rho.unwrap(),
        search.rho,
        1e-6,
    ));
    rows.push(VerificationRow::close(
        "cube: volume of the diagonal profile",
        "1",
        1.0,
        volume(&cube_diag)?,
        1e-12,
    ));
    rows.push(VerificationRow::close(
        "cube: potential energy of the diagonal profile",
        "sqrt(3)/2",
        sqrt3 / 2.0,
        potential_energy(&cube_diag)?,
        1e-12,
    ));
    rows.push(VerificationRow::close(
        "cube: fill fraction below 5*sqrt(3)/9",
        "101/162",
        101.0 / 162.0,
        fill_fraction(&cube_diag, 0.0, 5.0 * sqrt3 / 9.0)?,
        1e-12,
    ));
    rows.push(VerificationRow::close(
        "cube: symmetric-solid bound on rho",
        "sqrt(2*sqrt(3))",
        (2.0 * sqrt3).sqrt(),
        symmetric_rho_bound(&cube)?,
        1e-9,
    ));

    // Octahedron.
    let octa = platonic(PlatonicSolid::Octahedron, 1.0)?;
    let octa_forms = torricelli_closed_forms(PlatonicSolid::Octahedron);
    let t_max = drainage_time(&area_profile(&octa, octa.face_down_direction(0)), 1.0)?.time;
    rows.push(VerificationRow::close(
        "octahedron: T_max, mesh face-down",
        "19/(5*6^(3/4))",
        octa_forms.t_max.unwrap(),
        t_max,
        1e-8,
    ));
    let t_min = drainage_time(
        &area_profile(&octa, octa.vertex_down_direction(0)?),
        1.0,
    )?
    .time;
    rows.push(VerificationRow::close(
        "octahedron: T_min, mesh vertex-down",
        "(8/15)(8*2^(1/4)-5*2^(3/4))",
        octa_forms.t_min,
        t_min,
        1e-8,
    ));
    rows.push(VerificationRow::close(
        "octahedron: rho, closed form vs reference decimal",
        "19*3^(1/4)*(8+5*sqrt(2))/224",
        1.682_402_558_920_436_50,
        octa_forms.rho.unwrap(),
        1e-9,
    ));
    let octa_max = analytic_profile(AnalyticProfile::OctahedronFaceDown);
    rows.push(VerificationRow::close(
        "octahedron: volume of the face-down profile",
        "sqrt(2)/3",
        sqrt2 / 3.0,
        volume(&octa_max)?,
        1e-12,
    ));
    let h = octa_max.height();
    rows.push(VerificationRow::close(
        "octahedron: fill fraction at half height",
        "(3t+3t^2-2t^3)/4 at t=1/2",
        0.5,
        fill_fraction(&octa_max, 0.0, h / 2.0)?,
        1e-12,
    ));

    // Tetrahedron.
    let tet = platonic(PlatonicSolid::Tetrahedron, 1.0)?;
    let tet_forms = torricelli_closed_forms(PlatonicSolid::Tetrahedron);
    let t_max = drainage_time(&area_profile(&tet, tet.face_down_direction(0)), 1.0)?.time;
    rows.push(VerificationRow::close(
        "tetrahedron: T_max, mesh face-down",
        "4*2^(1/4)/(5*3^(3/4))",
        tet_forms.t_max.unwrap(),
        t_max,
        1e-8,
    ));
    let t_min = drainage_time(&area_profile(&tet, tet.vertex_down_direction(0)?), 1.0)?.time;
    rows.push(VerificationRow::close(
        "tetrahedron: T_min, mesh vertex-down",
        "3^(1/4)/(5*2^(3/4))",
        tet_forms.t_min,
        t_min,
        1e-8,
    ));
    rows.push(VerificationRow::close(
        "tetrahedron: rho closed form",
        "8/3",
        8.0 / 3.0,
        tet_forms.rho.unwrap(),
        1e-12,
    ));

    // Icosahedron (golden-rectangle construction, edge 2).
    let icosa = platonic(PlatonicSolid::Icosahedron, 2.0)?;
    let phi = (1.0 + sqrt5) / 2.0;
    rows.push(VerificationRow::close(
        "icosahedron: circumradius",
        "sqrt((5+sqrt(5))/2)",
        ((5.0 + sqrt5) / 2.0).sqrt(),
        icosa.circumradius(),
        1e-10,
    ));
    rows.push(VerificationRow::close(
        "icosahedron: inradius",
        "(phi+1)/sqrt(3)",
        (phi + 1.0) / sqrt3,
        icosa.inradius(),
        1e-10,
    ));
    rows.push(VerificationRow::close(
        "icosahedron: volume",
        "(10/3)(3+sqrt(5))",
        10.0 / 3.0 * (3.0 + sqrt5),
        icosa.volume(),
        1e-10,
    ));
    let vdir = icosa.vertex_down_direction(0)?;
    let vprofile = area_profile(&icosa, vdir);
    let height = vprofile.height();
    rows.push(VerificationRow::close(
        "icosahedron: lower splitting ratio",
        "1/2 - sqrt(5)/10",
        0.5 - sqrt5 / 10.0,
        vprofile.breakpoints()[0] / height,
        1e-10,
    ));
    rows.push(VerificationRow::close(
        "icosahedron: upper splitting ratio",
        "1/2 + sqrt(5)/10",
        0.5 + sqrt5 / 10.0,
        vprofile.breakpoints()[1] / height,
        1e-10,
    ));
    let h_probe = vprofile.breakpoints()[0] / 2.0;
    rows.push(VerificationRow::close(
        "icosahedron: pentagon cap coefficient",
        "(5/8)sqrt(50+22*sqrt(5))",
        crate::geometry::profile::icosahedron_cap_coefficient(),
        vprofile.area(h_probe) / (h_probe * h_probe),
        1e-10,
    ));
    let pentagon = (5.0 * (5.0 + 2.0 * sqrt5)).sqrt();
    let mid = height / 2.0;
    let band_measured = (vprofile.area(mid) - pentagon)
        / ((mid - vprofile.breakpoints()[0]) * (vprofile.breakpoints()[1] - mid));
    rows.push(VerificationRow::close(
        "icosahedron: band coefficient",
        "(5/4)(7-3*sqrt(5))sqrt(5+2*sqrt(5))",
        crate::geometry::profile::icosahedron_band_coefficient(),
        band_measured,
        1e-10,
    ));
    let icosa_forms = torricelli_closed_forms(PlatonicSolid::Icosahedron);
    let icosa_catalog = analytic_profile(AnalyticProfile::IcosahedronVertexDown);
    rows.push(VerificationRow::close(
        "icosahedron: T_min, piecewise profile quadrature",
        "(1/15)[2*sqrt(5)(2(33112325-14587199*sqrt(5)))^(1/4)+...]",
        icosa_forms.t_min,
        drainage_time(&icosa_catalog, 1.0)?.time,
        1e-6,
    ));
    rows.push(VerificationRow::close(
        "icosahedron: T_min, mesh vertex-down",
        "(1/15)[2*sqrt(5)(2(33112325-14587199*sqrt(5)))^(1/4)+...]",
        icosa_forms.t_min,
        drainage_time(&vprofile, 1.0)?.time,
        1e-6,
    ));

    // Gauss surface form.
    rows.push(VerificationRow::close(
        "surface form: cube face-down",
        "2",
        2.0,
        drainage_time_surface(&cube, Direction::z(), 1.0)?.time,
        1e-8,
    ));
    rows.push(VerificationRow::close(
        "surface form: tetrahedron vertex-down",
        "3^(1/4)/(5*2^(3/4))",
        tet_forms.t_min,
        drainage_time_surface(&tet, tet.vertex_down_direction(0)?, 1.0)?.time,
        1e-8,
    ));

    // Clepsydra rationals (exact comparisons).
    let g: RevolutionProfile = "29*y^2*(1-y)+33*y*(1-y)^4".parse()?;
    rows.push(VerificationRow::exact(
        "clepsydra: moment of g, upright",
        "302/105",
        &rat(302, 105),
        &moment(&g, false),
    ));
    rows.push(VerificationRow::exact(
        "clepsydra: moment of g, flipped",
        "302/105",
        &rat(302, 105),
        &moment(&g, true),
    ));
    rows.push(VerificationRow::exact(
        "clepsydra: potential energy, upright",
        "247/140",
        &rat(247, 140),
        &potential_moment(&g, false),
    ));
    rows.push(VerificationRow::exact(
        "clepsydra: potential energy, flipped",
        "184/105",
        &rat(184, 105),
        &potential_moment(&g, true),
    ));
    rows.push(VerificationRow::exact(
        "clepsydra: potential energy difference",
        "1/84",
        &rat(1, 84),
        &(potential_moment(&g, false) - potential_moment(&g, true)),
    ));
    let c1 = match solve_balanced((2, 1), (1, 4)) {
        BalanceSolution::Unique(c) => c,
        _ => BigRational::zero(),
    };
    rows.push(VerificationRow::exact(
        "clepsydra: balance constant for y^2(1-y) vs y(1-y)^4",
        "29/33",
        &rat(29, 33),
        &c1,
    ));
    let c2 = match solve_balanced((2, 6), (3, 2)) {
        BalanceSolution::Unique(c) => c,
        _ => BigRational::zero(),
    };
    rows.push(VerificationRow::exact(
        "clepsydra: balance constant for y^2(1-y)^6 vs y^3(1-y)^2",
        "13/9",
        &rat(13, 9),
        &c2,
    ));
    let (d0, d1) = g.endpoint_derivatives();
    rows.push(VerificationRow::exact(
        "clepsydra: g'(0)",
        "33",
        &rat(33, 1),
        &d0,
    ));
    rows.push(VerificationRow::exact(
        "clepsydra: g'(1)",
        "-29",
        &rat(-29, 1),
        &d1,
    ));
    let g_eval = g.clone();
    rows.push(VerificationRow::close(
        "clepsydra: characterization residual of g",
        "0",
        0.0,
        characterization_residual(move |y| g_eval.eval(y))?,
        1e-12,
    ));
    let turnup = turn_up_number(&g)?;
    rows.push(VerificationRow::exact(
        "clepsydra: turn-up number of g",
        "1",
        &BigRational::one(),
        turnup.rho_exact.as_ref().unwrap(),
    ));
    let cone: RevolutionProfile = "y^2".parse()?;
    let cone_report = turn_up_number(&cone)?;
    rows.push(VerificationRow::exact(
        "turn-up: cone, exact moments",
        "8/3",
        &rat(8, 3),
        cone_report.rho_exact.as_ref().unwrap(),
    ));
    let quad_report = crate::orientation::turn_up_number_fn(|y: f64| y * y)?;
    rows.push(VerificationRow::close(
        "turn-up: cone, quadrature",
        "8/3",
        8.0 / 3.0,
        quad_report.rho,
        1e-12,
    ));

    Ok(rows)
}

fn run_verify(args: VerifyArgs) -> Result<CommandOutput> {
    let rows = verify_suite()?;
    let failures = rows.iter().filter(|r| !r.pass).count();
    if args.json {
        let body = rows
            .iter()
            .map(|r| {
                format!(
                    "{{\"name\":\"{}\",\"expected_expr\":\"{}\",\"expected\":{},\"computed\":{},\"abs_error\":{},\"tolerance\":{},\"pass\":{}}}",
                    r.name,
                    r.expected_expr.replace('\\', "\\\\").replace('"', "\\\""),
                    sig17(r.expected),
                    sig17(r.computed),
                    sig17(r.abs_error),
                    sig17(r.tolerance),
                    r.pass
                )
            })
            .collect::<Vec<_>>()
            .join(",");
        return Ok(CommandOutput {
            text: format!("[{body}]\n"),
            code: if failures == 0 { 0 } else { 1 },
        });
    }
    let mut text = format!(
        "{:<52} {:>16} {:>16} {:>10} {:>8}  {}\n",
        "check", "computed", "expected", "|error|", "tol", "status"
    );
    for r in &rows {
        text.push_str(&format!(
            "{:<52} {:>16} {:>16} {:>10} {:>8}  {}\n",
            r.name,
            sig(r.computed, 10),
            sig(r.expected, 10),
            sig(r.abs_error, 3),
            sig(r.tolerance, 2),
            if r.pass { "pass" } else { "FAIL" }
        ));
    }
    text.push_str(&format!(
        "{} of {} checks pass\n",
        rows.len() - failures,
        rows.len()
    ));
    Ok(CommandOutput {
        text,
        code: if failures == 0 { 0 } else { 1 },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_pair_parsing() {
        assert_eq!(parse_exponent_pair("2,1", "--u1").unwrap(), (2, 1));
        assert!(parse_exponent_pair("2", "--u1").is_err());
        assert!(parse_exponent_pair("a,b", "--u1").is_err());
    }

    #[test]
    fn direction_parsing() {
        let d = parse_direction("0,0,2").unwrap();
        assert!((d.as_vec().z - 1.0).abs() < 1e-15);
        assert!(parse_direction("1,2").is_err());
        assert!(parse_direction("0,0,0").is_err());
    }
}
