//! Command-line front end for `polycenter`.
//!
//! Exit codes: 0 success, 1 a check failed (identity mismatch, congruence
//! counterexample, or `--expect` mismatch), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polycenter::congruences::{verify_congruence, CongruenceCheck};
use polycenter::numbers::{catalan_mod, BigCount};
use polycenter::polygon::parse_diagonal_list;
use polycenter::recursions::{sweep_recursion, RecursionKind};
use polycenter::{
    catalan, central_census, count_vertex0_outside, dyck_formula, dyck_midpoint_uu_bruteforce,
    fixed_vertex_outside, fixed_vertex_outside_double_sum, fuss_catalan, kangulation_count,
    quadrangulation_count, render_svg, Dissection,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polycenter",
    version,
    about = "Central components of polygon triangulations: counts, recursions, congruences, censuses and drawings"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalan number C_N (0 for negative N)
    Catalan {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        /// Print C_N modulo M instead
        #[arg(long = "mod", value_name = "M", value_parser = clap::value_parser!(u64).range(2..))]
        modulus: Option<u64>,
        #[command(flatten)]
        expect: Expect,
    },
    /// Fuss-Catalan number C_{N,K}
    Fuss {
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(2..))]
        k: u64,
        #[command(flatten)]
        expect: Expect,
    },
    /// Number of K-angulations of an N-gon
    Kang {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        #[command(flatten)]
        expect: Expect,
    },
    /// Number of quadrangulations Q_N of a (2N+2)-gon
    Quad {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[command(flatten)]
        expect: Expect,
    },
    /// Sweep a recursion or a congruence theorem
    Verify {
        #[command(subcommand)]
        what: Verify,
    },
    /// Brute-force census of K-angulations of an N-gon by central component
    Census {
        n: usize,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(3..))]
        k: u64,
        /// Emit JSON instead of a table
        #[arg(long)]
        json: bool,
    },
    /// Triangulations of an N-gon with vertex 0 outside the central component
    FixedVertex {
        #[arg(value_parser = clap::value_parser!(u64).range(3..))]
        n: u64,
        /// Also count by exhaustive enumeration
        #[arg(long)]
        brute: bool,
        /// Also evaluate the Dyck-path formulation
        #[arg(long)]
        dyck: bool,
        #[command(flatten)]
        expect: Expect,
    },
    /// Draw a dissection as SVG
    Render {
        n: usize,
        /// Diagonals as "x-y,x-y,..."
        #[arg(long, allow_hyphen_values = true)]
        diagonals: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        out: PathBuf,
        /// Highlight the central component
        #[arg(long)]
        highlight_central: bool,
    },
}

#[derive(Debug, Args)]
struct Expect {
    /// Exit with status 1 unless the printed value equals this
    #[arg(long, value_name = "VALUE")]
    expect: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Verify {
    /// Compare a central-component recursion with its closed form
    Recursion {
        #[arg(long, value_enum)]
        kind: RecursionArg,
        /// Cell size, for --kind kang
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max: usize,
    },
    /// Check a congruence theorem over 0..=max
    Congruence {
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        max: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RecursionArg {
    Central,
    Quad,
    Kang,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TheoremArg {
    Odd,
    Mod4,
    Modp,
    Kangp,
}

/// A failure that maps to an exit code and a message on stderr.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn print_value(out: &mut dyn Write, value: String, expect: &Expect) -> Result<i32, Failure> {
    writeln!(out, "{value}").map_err(io_failure)?;
    match &expect.expect {
        Some(e) if e.trim() != value => Err(Failure {
            code: EXIT_FAILED,
            message: format!("expected {}, got {value}", e.trim()),
        }),
        _ => Ok(EXIT_OK),
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_FAILED,
        message: format!("i/o error: {e}"),
    }
}

/// Parses `args` (program name first) and runs the command, writing results to
/// `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if f.code == EXIT_USAGE {
                let _ = writeln!(err, "\nFor more information, try '--help'.");
            }
            f.code
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Catalan { n, modulus, expect } => {
            let value = match modulus {
                Some(m) if n >= 0 => catalan_mod(n as u64, m).to_string(),
                Some(_) => "0".to_string(),
                None => catalan(n).to_string(),
            };
            print_value(out, value, &expect)
        }
        Command::Fuss { n, k, expect } => print_value(out, fuss_catalan(n, k).to_string(), &expect),
        Command::Kang { n, k, expect } => print_value(out, kangulation_count(n, k).to_string(), &expect),
        Command::Quad { n, expect } => print_value(out, quadrangulation_count(n).to_string(), &expect),
        Command::Verify { what } => match what {
            Verify::Recursion { kind, k, max } => verify_recursion(kind, k, max, out),
            Verify::Congruence { theorem, p, k, max } => verify_theorem(theorem, p, k, max, out),
        },
        Command::Census { n, k, json } => census(n, k as usize, json, out),
        Command::FixedVertex {
            n,
            brute,
            dyck,
            expect,
        } => fixed_vertex(n as usize, brute, dyck, &expect, out),
        Command::Render {
            n,
            diagonals,
            k,
            out: path,
            highlight_central,
        } => {
            let pairs = parse_diagonal_list(&diagonals).map_err(|e| usage(e.to_string()))?;
            let d = Dissection::new(n, k, pairs).map_err(|e| usage(e.to_string()))?;
            let svg = render_svg(&d, highlight_central);
            fs::write(&path, svg).map_err(io_failure)?;
            writeln!(out, "wrote {}", path.display()).map_err(io_failure)?;
            Ok(EXIT_OK)
        }
    }
}

fn verify_recursion(kind: RecursionArg, k: Option<usize>, max: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let (kind, label) = match (kind, k) {
        (RecursionArg::Central, _) => (RecursionKind::Central, "central".to_string()),
        (RecursionArg::Quad, _) => (RecursionKind::Quad, "quad".to_string()),
        (RecursionArg::Kang, Some(k)) => (RecursionKind::Kang(k), format!("kang k={k}")),
        (RecursionArg::Kang, None) => return Err(usage("--kind kang requires --k")),
    };
    let sweep = sweep_recursion(kind, max).map_err(|e| usage(e.to_string()))?;
    for &n in &sweep.checked {
        match sweep.mismatches.iter().find(|m| m.n == n) {
            None => writeln!(out, "n={n} OK"),
            Some(m) => writeln!(out, "n={n} MISMATCH recursion={} closed-form={}", m.recursion, m.closed_form),
        }
        .map_err(io_failure)?;
    }
    let ok = sweep.checked.len() - sweep.mismatches.len();
    writeln!(out, "{label}: {ok}/{} OK", sweep.checked.len()).map_err(io_failure)?;
    Ok(if sweep.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn verify_theorem(
    theorem: TheoremArg,
    p: Option<u64>,
    k: Option<u64>,
    max_n: u64,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let need = |v: Option<u64>, flag: &str| v.ok_or_else(|| usage(format!("this theorem requires {flag}")));
    let check = match theorem {
        TheoremArg::Odd => CongruenceCheck::OddCharacterization { max_n },
        TheoremArg::Mod4 => CongruenceCheck::Mod4Classification { max_n },
        TheoremArg::Modp => CongruenceCheck::ModpCatalan {
            p: need(p, "--p")?,
            max_n,
        },
        TheoremArg::Kangp => CongruenceCheck::ModpKangulation {
            p: need(p, "--p")?,
            k: need(k, "--k")?,
            max_n,
        },
    };
    let report = verify_congruence(check).map_err(|e| usage(e.to_string()))?;
    writeln!(out, "{}", report.to_json()).map_err(io_failure)?;
    Ok(if report.passed { EXIT_OK } else { EXIT_FAILED })
}

fn census(n: usize, k: usize, json: bool, out: &mut dyn Write) -> Result<i32, Failure> {
    let census = central_census(n, k);
    if json {
        writeln!(out, "{}", census.to_json()).map_err(io_failure)?;
    } else {
        for e in &census.entries {
            writeln!(out, "{}\t{}", e.key, e.count).map_err(io_failure)?;
        }
        writeln!(out, "total\t{}", census.total()).map_err(io_failure)?;
    }
    Ok(EXIT_OK)
}

fn fixed_vertex(n: usize, brute: bool, dyck: bool, expect: &Expect, out: &mut dyn Write) -> Result<i32, Failure> {
    let closed = fixed_vertex_outside(n);
    if !brute && !dyck {
        return print_value(out, closed.to_string(), expect);
    }
    let mut rows: Vec<(&str, BigCount)> = vec![
        ("closed-form", closed.clone()),
        ("double-sum", fixed_vertex_outside_double_sum(n)),
    ];
    if brute {
        rows.push(("brute-force", count_vertex0_outside(n)));
    }
    if dyck {
        rows.push(("dyck-formula", dyck_formula(n - 2)));
        if brute {
            rows.push(("dyck-paths", dyck_midpoint_uu_bruteforce(n - 1)));
        }
    }
    for (label, v) in &rows {
        writeln!(out, "{label}\t{v}").map_err(io_failure)?;
    }
    if rows.iter().any(|(_, v)| v != &closed) {
        return Err(Failure {
            code: EXIT_FAILED,
            message: "the counts disagree".into(),
        });
    }
    match &expect.expect {
        Some(e) if e.trim() != closed.to_string() => Err(Failure {
            code: EXIT_FAILED,
            message: format!("expected {}, got {closed}", e.trim()),
        }),
        _ => Ok(EXIT_OK),
    }
}
