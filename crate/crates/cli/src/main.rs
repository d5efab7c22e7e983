//! `cubelat`: construct, classify and verify cubic sublattices of `Z³`
//! from the command line.
//!
//! Vectors are comma-separated integers without spaces (`--v 5,5,2`); bases
//! are semicolon-separated columns (`--basis -1,2,2;2,-1,2;2,2,-1`). Every
//! subcommand prints deterministic output: human-readable text by default,
//! canonical JSON with `--json`. Exit codes: 0 success, 1 domain error
//! (reported on stderr), 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use cubelat::{
    classify, divisor_family, edge_splits, extract_cubic_basis, gamma, gamma_any,
    gamma_contains_def, maximal_cubic_under, minimal_cubic_over, prime_vector, reverse_construct,
    scale_down, scale_up, verify, Basis3, CubicLattice, Error, IntVec3,
};

fn parse_vec(s: &str) -> Result<IntVec3, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected x,y,z, got `{s}`"));
    }
    let mut c = [0i128; 3];
    for (i, p) in parts.iter().enumerate() {
        c[i] = p
            .parse::<i128>()
            .map_err(|e| format!("bad integer `{p}`: {e}"))?;
    }
    Ok(IntVec3::new(c[0], c[1], c[2]))
}

fn parse_basis(s: &str) -> Result<Basis3, String> {
    let cols: Vec<&str> = s.split(';').collect();
    if cols.len() != 3 {
        return Err(format!("expected three `;`-separated columns, got `{s}`"));
    }
    let c0 = parse_vec(cols[0])?;
    let c1 = parse_vec(cols[1])?;
    let c2 = parse_vec(cols[2])?;
    Basis3::new(c0, c1, c2).map_err(|e| e.to_string())
}

fn parse_box(s: &str) -> Result<[i128; 6], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 6 {
        return Err(format!("expected x0,x1,y0,y1,z0,z1, got `{s}`"));
    }
    let mut b = [0i128; 6];
    for (i, p) in parts.iter().enumerate() {
        b[i] = p
            .parse::<i128>()
            .map_err(|e| format!("bad integer `{p}`: {e}"))?;
    }
    Ok(b)
}

#[derive(Parser)]
#[command(name = "cubelat", version, about, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputMode {
    /// Emit canonical JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cubic sublattice of edge d containing v (unique for primitive v).
    Gamma {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        v: IntVec3,
        #[arg(long)]
        d: i128,
        /// Accept imprimitive v via the edge split d = d1·d2.
        #[arg(long)]
        any: bool,
        /// List every valid edge split d = d1·d2 and its lattice
        /// (implies --any).
        #[arg(long)]
        splits: bool,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Extract the canonical cubic basis of a lattice, if one exists.
    CubicBasis {
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        basis: Basis3,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Decide cubicity and recover the k·gamma(v, d) presentation.
    Classify {
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        basis: Basis3,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Divisibility membership test for gamma(v, d).
    Member {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        v: IntVec3,
        #[arg(long)]
        d: i128,
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        a: IntVec3,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Primitive vector with squared length divisible by p², odd prime p.
    PrimeVector {
        #[arg(long)]
        p: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Reverse embedding: u and a cubic basis in which u's coordinates are v.
    Reverse {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        v: IntVec3,
        #[arg(long)]
        d: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Coordinates of a coprime triple in its edge-d cubic sublattice.
    ScaleDown {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        t: IntVec3,
        #[arg(long)]
        d: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Coprime triple with squared sum d²·Σtᵢ², odd d.
    ScaleUp {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        t: IntVec3,
        #[arg(long)]
        d: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Minimal cubic sublattices containing both inputs (join search).
    PosetJoin {
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        l1: Basis3,
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        l2: Basis3,
        /// Edge bound for the exhaustive search.
        #[arg(long, default_value_t = 9)]
        bound: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Maximal cubic sublattices contained in both inputs (meet search).
    PosetMeet {
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        l1: Basis3,
        #[arg(long, value_parser = parse_basis, allow_hyphen_values = true)]
        l2: Basis3,
        #[arg(long, default_value_t = 9)]
        bound: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// All cubic sublattices containing a primitive v, indexed by divisor.
    DivisorFamily {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        v: IntVec3,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Run the brute-force oracle suites and report pass/fail per suite.
    Verify {
        /// Bound on ‖v‖² in the sweeps.
        #[arg(long = "max-norm", default_value_t = 200)]
        max_norm: i128,
        /// Bound on the edge length d.
        #[arg(long = "max-d", default_value_t = 5)]
        max_d: i128,
        #[command(flatten)]
        out: OutputMode,
    },
    /// Lattice points of gamma(v, d) and of Z³ inside a box, as plot data.
    Export {
        #[arg(long, value_parser = parse_vec, allow_hyphen_values = true)]
        v: IntVec3,
        #[arg(long)]
        d: i128,
        /// Inclusive bounds x0,x1,y0,y1,z0,z1.
        #[arg(long = "box", value_parser = parse_box, allow_hyphen_values = true)]
        bounds: [i128; 6],
        #[command(flatten)]
        out: OutputMode,
    },
}

fn fmt_basis(b: &Basis3) -> String {
    format!("{} {} {}", b.col(0), b.col(1), b.col(2))
}

fn print_lattice(l: &CubicLattice, out: &OutputMode) -> Result<(), CliError> {
    if out.json {
        println!("{}", serde_json::to_string(l).expect("serializable"));
    } else {
        println!("edge: {}", l.edge());
        println!("k: {}", l.k());
        println!("d: {}", l.d());
        println!("v: {}", l.witness());
        println!("cubic basis: {}", fmt_basis(l.basis()));
        println!("hnf: {}", fmt_basis(l.hnf().basis()));
    }
    Ok(())
}

#[derive(Serialize)]
struct SplitEntry {
    d1: i128,
    d2: i128,
    lattice: CubicLattice,
}

#[derive(Serialize)]
struct SplitsDoc {
    splits: Vec<SplitEntry>,
}

#[derive(Serialize)]
struct FamilyMember<'a> {
    d: i128,
    lattice: &'a CubicLattice,
}

#[derive(Serialize)]
struct FamilyDoc<'a> {
    v: IntVec3,
    d_max: i128,
    members: Vec<FamilyMember<'a>>,
}

#[derive(Serialize)]
struct BoundsReport<'a> {
    #[serde(
        rename = "minimal_upper_bounds",
        skip_serializing_if = "Option::is_none"
    )]
    uppers: Option<&'a [CubicLattice]>,
    #[serde(rename = "join_exists", skip_serializing_if = "Option::is_none")]
    join_exists: Option<bool>,
    #[serde(
        rename = "maximal_lower_bounds",
        skip_serializing_if = "Option::is_none"
    )]
    lowers: Option<&'a [CubicLattice]>,
    #[serde(rename = "meet_exists", skip_serializing_if = "Option::is_none")]
    meet_exists: Option<bool>,
}

enum CliError {
    Domain(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn as_cubic(b: &Basis3) -> Result<CubicLattice, CliError> {
    let r =
        classify(b)?.ok_or_else(|| CliError::Domain("input lattice is not cubic".to_string()))?;
    Ok(gamma(r.v, r.d)?.scaled(r.k)?)
}

fn run(cmd: Command) -> Result<bool, CliError> {
    match cmd {
        Command::Gamma {
            v,
            d,
            any,
            splits,
            out,
        } => {
            if splits {
                let pairs = edge_splits(v, d)?;
                if pairs.is_empty() {
                    return Err(Error::SquareDivisibility.into());
                }
                let (_, u) = v.primitive_part()?;
                let mut entries = Vec::new();
                for (d1, d2) in pairs {
                    entries.push(SplitEntry {
                        d1,
                        d2,
                        lattice: gamma(u, d2)?.scaled(d1)?,
                    });
                }
                if out.json {
                    println!(
                        "{}",
                        serde_json::to_string(&SplitsDoc { splits: entries })
                            .expect("serializable")
                    );
                } else {
                    for e in &entries {
                        println!(
                            "d1 = {}, d2 = {}: hnf {}",
                            e.d1,
                            e.d2,
                            fmt_basis(e.lattice.hnf().basis())
                        );
                    }
                }
            } else {
                let l = if any { gamma_any(v, d)? } else { gamma(v, d)? };
                print_lattice(&l, &out)?;
            }
        }
        Command::CubicBasis { basis, out } => {
            let extracted = extract_cubic_basis(&basis)?;
            if out.json {
                let value = extracted.map(|(a, b, c)| [a, b, c]);
                println!(
                    "{}",
                    serde_json::to_string(&serde_json::json!({ "cubic_basis": value }))
                        .expect("serializable")
                );
            } else {
                match extracted {
                    Some((a, b, c)) => println!("cubic basis: {a} {b} {c}"),
                    None => println!("not cubic"),
                }
            }
        }
        Command::Classify { basis, out } => {
            let r = classify(&basis)?;
            if out.json {
                match r {
                    Some(r) => println!(
                        "{}",
                        serde_json::to_string(&serde_json::json!({
                            "cubic": true, "k": r.k, "d": r.d, "v": r.v
                        }))
                        .expect("serializable")
                    ),
                    None => println!("{}", serde_json::json!({ "cubic": false })),
                }
            } else {
                match r {
                    Some(r) => println!("k: {}\nd: {}\nv: {}", r.k, r.d, r.v),
                    None => println!("not cubic"),
                }
            }
        }
        Command::Member { v, d, a, out } => {
            let m = gamma_contains_def(v, d, a)?;
            if out.json {
                println!("{}", serde_json::json!({ "member": m }));
            } else {
                println!("{m}");
            }
        }
        Command::PrimeVector { p, out } => {
            let w = prime_vector(p)?;
            if out.json {
                println!("{}", serde_json::json!({ "p": p, "w": w }));
            } else {
                println!("{w}");
            }
        }
        Command::Reverse { v, d, out } => {
            let trace = reverse_construct(v, d)?;
            if out.json {
                println!("{}", serde_json::to_string(&trace).expect("serializable"));
            } else {
                println!("u: {}", trace.u);
                println!("steps: {}", trace.steps.len());
                for s in &trace.steps {
                    println!(
                        "  p = {}: w = {}, permutation {:?}, sign flip {}",
                        s.prime, s.w, s.permutation, s.sign_flipped
                    );
                }
                println!("certifying basis: {}", fmt_basis(&trace.certifying_basis));
            }
        }
        Command::ScaleDown { t, d, out } => {
            let r = scale_down(t, d)?;
            if out.json {
                println!("{}", serde_json::json!({ "t": t, "d": d, "result": r }));
            } else {
                println!("{r}");
            }
        }
        Command::ScaleUp { t, d, out } => {
            let r = scale_up(t, d)?;
            if out.json {
                println!("{}", serde_json::json!({ "t": t, "d": d, "result": r }));
            } else {
                println!("{r}");
            }
        }
        Command::PosetJoin { l1, l2, bound, out } => {
            let (a, b) = (as_cubic(&l1)?, as_cubic(&l2)?);
            let ups = minimal_cubic_over(&a, &b, bound)?;
            let exists = ups.len() == 1;
            if out.json {
                let report = BoundsReport {
                    uppers: Some(&ups),
                    join_exists: Some(exists),
                    lowers: None,
                    meet_exists: None,
                };
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("minimal upper bounds: {}", ups.len());
                for l in &ups {
                    println!("  edge {}: hnf {}", l.edge(), fmt_basis(l.hnf().basis()));
                }
                println!("join exists: {exists}");
            }
        }
        Command::PosetMeet { l1, l2, bound, out } => {
            let (a, b) = (as_cubic(&l1)?, as_cubic(&l2)?);
            let downs = maximal_cubic_under(&a, &b, bound)?;
            let exists = downs.len() == 1;
            if out.json {
                let report = BoundsReport {
                    uppers: None,
                    join_exists: None,
                    lowers: Some(&downs),
                    meet_exists: Some(exists),
                };
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("maximal lower bounds: {}", downs.len());
                for l in &downs {
                    println!("  edge {}: hnf {}", l.edge(), fmt_basis(l.hnf().basis()));
                }
                println!("meet exists: {exists}");
            }
        }
        Command::DivisorFamily { v, out } => {
            let fam = divisor_family(v)?;
            if out.json {
                let members: Vec<FamilyMember> = fam
                    .members()
                    .iter()
                    .map(|(d, l)| FamilyMember { d: *d, lattice: l })
                    .collect();
                let doc = FamilyDoc {
                    v: fam.v(),
                    d_max: fam.d_max(),
                    members,
                };
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            } else {
                println!("v: {}", fam.v());
                println!("d_max: {}", fam.d_max());
                for (d, l) in fam.members() {
                    println!("  d = {d}: hnf {}", fmt_basis(l.hnf().basis()));
                }
            }
        }
        Command::Verify {
            max_norm,
            max_d,
            out,
        } => {
            let report = verify::run_all(max_norm, max_d)?;
            if out.json {
                let checks: Vec<serde_json::Value> = report
                    .checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "name": c.name, "passed": c.passed, "cases": c.cases,
                            "detail": c.detail,
                        })
                    })
                    .collect();
                println!(
                    "{}",
                    serde_json::json!({
                        "checks": checks, "all_passed": report.all_passed()
                    })
                );
            } else {
                for c in &report.checks {
                    let status = if c.passed { "pass" } else { "FAIL" };
                    match &c.detail {
                        Some(d) => println!("{}: {status} ({} cases): {d}", c.name, c.cases),
                        None => println!("{}: {status} ({} cases)", c.name, c.cases),
                    }
                }
                if report.all_passed() {
                    println!("all checks passed");
                }
            }
            return Ok(report.all_passed());
        }
        Command::Export { v, d, bounds, out } => {
            let doc = export_points(v, d, bounds)?;
            if out.json {
                println!("{}", serde_json::to_string(&doc).expect("serializable"));
            } else {
                println!("v: {}", doc.v);
                println!("cubic basis: {}", fmt_basis(&doc.cubic_basis));
                println!("gamma points ({}):", doc.gamma_points.len());
                for p in &doc.gamma_points {
                    println!("  {p}");
                }
                println!("ambient points ({}):", doc.ambient_points.len());
                for p in &doc.ambient_points {
                    println!("  {p}");
                }
            }
        }
    }
    Ok(true)
}

const MAX_BOX_POINTS: i128 = 1_000_000;

#[derive(Serialize)]
struct ExportDoc {
    gamma_points: Vec<IntVec3>,
    ambient_points: Vec<IntVec3>,
    v: IntVec3,
    cubic_basis: Basis3,
}

fn export_points(v: IntVec3, d: i128, b: [i128; 6]) -> Result<ExportDoc, CliError> {
    let lattice = gamma_any(v, d)?;
    let [x0, x1, y0, y1, z0, z1] = b;
    let side = |lo: i128, hi: i128| (hi - lo + 1).max(0);
    let volume = side(x0, x1)
        .checked_mul(side(y0, y1))
        .and_then(|p| p.checked_mul(side(z0, z1)))
        .ok_or(Error::Overflow)?;
    if volume > MAX_BOX_POINTS {
        return Err(Error::BoxTooLarge {
            max: MAX_BOX_POINTS,
        }
        .into());
    }
    let mut ambient = Vec::new();
    let mut in_gamma = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            for z in z0..=z1 {
                let p = IntVec3::new(x, y, z);
                ambient.push(p);
                if lattice.contains(p)? {
                    in_gamma.push(p);
                }
            }
        }
    }
    // lexicographic output order regardless of scan order
    ambient.sort_unstable();
    in_gamma.sort_unstable();
    Ok(ExportDoc {
        gamma_points: in_gamma,
        ambient_points: ambient,
        v,
        cubic_basis: lattice.basis().clone(),
    })
}

fn main() -> ExitCode {
    // die quietly on closed pipes (e.g. `cubelat export ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
