use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use z2z4::code::Cap;
use z2z4::constructions::{random_self_orthogonal, ConstructionRecipe};
use z2z4::duality::{self, BinaryImage};
use z2z4::verify::{self, VerifyConfig};
use z2z4::{BinaryCode, BinaryVector, CodeFile, Error, QuaternaryCode, Z2Z4Code, Z4};

/// Z2Z4-additive codes: duals, Gray images and complementary duality.
#[derive(Parser, Debug)]
#[command(name = "z2z4", version)]
struct Cli {
    /// Largest number of elements any enumeration may visit.
    #[arg(long, global = true, env = "Z2Z4_CAP", default_value_t = Cap::DEFAULT.0)]
    cap: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full duality report for a code file.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generator rows of the dual, as a code file.
    Dual { file: PathBuf },
    /// Basis of the Gray image, or a nonlinearity witness.
    Gray { file: PathBuf },
    /// Standard-form generator matrix and the monomial transform reaching it.
    StandardForm { file: PathBuf },
    /// Exit 0 if the property holds, 1 otherwise.
    Check { property: Property, file: PathBuf },
    /// Write a code from one of the known families.
    Construct {
        #[command(subcommand)]
        recipe: Recipe,
        /// Output path; standard output when absent.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Oracle agreement and theorem checks on fixtures and random codes.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random codes beyond the fixtures.
        #[arg(long, default_value_t = 200)]
        random: usize,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Property {
    Acd,
    Separable,
    ImageLinear,
    RowCondition,
    GramInvertible,
}

#[derive(Subcommand, Debug)]
enum Recipe {
    /// (G_X | I_delta) over independent binary rows.
    FreeAcd {
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long = "row", value_parser = parse_binary)]
        rows: Vec<BinaryVector>,
    },
    /// (G_X | I_delta) over a self-orthogonal binary code.
    SelfOrthogonalX {
        #[arg(long)]
        alpha: usize,
        #[arg(long = "row", value_parser = parse_binary, conflicts_with = "random")]
        rows: Vec<BinaryVector>,
        /// Draw this many self-orthogonal rows instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// (I_alpha | 2 I_alpha).
    DoubleIdentity {
        #[arg(long)]
        alpha: usize,
    },
    /// Direct product of a binary and a quaternary code.
    SeparableProduct {
        #[command(flatten)]
        parts: ProductParts,
    },
}

#[derive(Args, Debug)]
struct ProductParts {
    #[arg(long)]
    binary_length: usize,
    #[arg(long = "binary-row", value_parser = parse_binary)]
    binary_rows: Vec<BinaryVector>,
    #[arg(long)]
    quaternary_length: usize,
    #[arg(long = "quaternary-row", value_parser = parse_quaternary)]
    quaternary_rows: Vec<Vec<Z4>>,
}

fn parse_binary(s: &str) -> Result<BinaryVector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_quaternary(s: &str) -> Result<Vec<Z4>, String> {
    s.split_whitespace()
        .map(|t| t.parse::<u8>().ok().and_then(Z4::from_digit).ok_or_else(|| format!("`{t}` is not an element of Z4")))
        .collect()
}

/// Failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            Error::Parse { .. } | Error::Syntax { .. } | Error::InvalidDigit { .. } => 4,
            Error::ShapeMismatch { .. } | Error::LengthMismatch { .. } => 4,
            Error::Inconsistency(_) => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<(String, u8), Failure>;

fn read_code(path: &Path) -> Result<(CodeFile, Z2Z4Code), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure { code: 2, message: format!("cannot read {}: {e}", path.display()) })?;
    let file: CodeFile =
        text.parse().map_err(|e: Error| Failure { code: 4, message: format!("{}: {e}", path.display()) })?;
    let code = file.to_code().map_err(|e| Failure { code: 4, message: format!("{}: {e}", path.display()) })?;
    Ok((file, code))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn analyze(file: &Path, json: bool, cap: Cap) -> Outcome {
    let (_, code) = read_code(file)?;
    let r = duality::analyze(&code, cap)?;
    if json {
        return Ok((r.to_json() + "\n", 0));
    }
    let mut out = String::new();
    let mut line = |label: &str, value: String, key: &str| {
        let witness = r.witnesses.get(key).map(|w| format!("  witness {w}")).unwrap_or_default();
        let _ = writeln!(out, "{label:<34}{value}{witness}");
    };
    let opt = |o: Option<bool>| o.map_or("n/a (not linear)".to_string(), |b| yes_no(b).to_string());
    line("type", r.code_type.to_string(), "");
    line("ACD", yes_no(r.is_acd).into(), "is_acd");
    line("C_X binary LCD", yes_no(r.cx_lcd).into(), "cx_lcd");
    line("C_Y quaternary LCD", yes_no(r.cy_lcd).into(), "cy_lcd");
    line("Phi(C) linear", yes_no(r.image_linear).into(), "image_linear");
    line("Phi(C^perp) linear", yes_no(r.dual_image_linear).into(), "dual_image_linear");
    line("Phi(C) LCD", opt(r.image_lcd), "image_lcd");
    line("Phi(C^perp) LCD", opt(r.dual_image_lcd), "dual_image_lcd");
    line("D_C trivial", yes_no(r.d_trivial).into(), "d_trivial");
    line("D_C in C / in C^perp", format!("{} / {}", yes_no(r.d_in_code), yes_no(r.d_in_dual)), "");
    line("Phi(C^perp) = Phi(C)^perp", yes_no(r.dual_image_equals_binary_dual).into(), "dual_image_equals_binary_dual");
    let s: Vec<&str> = r.statements.as_array().iter().map(|&b| yes_no(b)).collect();
    line("statements (i)..(vi)", s.join(" "), "");
    Ok((out, 0))
}

fn gray(file: &Path, cap: Cap) -> Outcome {
    let (_, code) = read_code(file)?;
    let mut out = String::new();
    match duality::binary_image(&code, cap)? {
        BinaryImage::Linear(b) => {
            let _ = writeln!(out, "linear, length {}, dimension {}", b.length(), b.dimension());
            for row in b.basis() {
                let _ = writeln!(out, "{row}");
            }
        }
        BinaryImage::Nonlinear { witness: (a, b), .. } => {
            let _ = writeln!(out, "nonlinear: the sum of these images is not an image");
            let _ = writeln!(out, "{a}\n{b}");
        }
    }
    Ok((out, 0))
}

fn join(v: &[usize]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn standard_form(file: &Path) -> Outcome {
    let (_, code) = read_code(file)?;
    let sf = code.standard_form();
    let mut out = format!("type {}\n", sf.code_type);
    for row in &sf.rows {
        let _ = writeln!(out, "{row}");
    }
    let t = &sf.transform;
    let _ = writeln!(out, "binary permutation: {}", join(t.binary_permutation()));
    let _ = writeln!(out, "quaternary permutation: {}", join(t.quaternary_permutation()));
    let _ = writeln!(out, "sign changes: {}", join(t.sign_flips()));
    Ok((out, 0))
}

fn check(property: Property, file: &Path, cap: Cap) -> Outcome {
    let (_, code) = read_code(file)?;
    let (holds, witness) = match property {
        Property::Acd => {
            let w = duality::acd_witness(&code, cap)?;
            (w.is_none(), w.map(|w| w.to_string()))
        }
        Property::Separable => (code.is_separable(), None),
        Property::ImageLinear => {
            let w = duality::gray_image_nonlinearity(&code);
            (w.is_none(), w.map(|(g, h)| format!("{g}\n{h}")))
        }
        Property::RowCondition => (duality::sufficient_acd_by_rows(&code), None),
        Property::GramInvertible => (duality::gram_matrix(&code).is_invertible(), None),
    };
    if let Some(w) = witness {
        eprintln!("{w}");
    }
    Ok((if holds { "yes\n" } else { "no\n" }.to_string(), if holds { 0 } else { 1 }))
}

fn construct(recipe: Recipe, output: Option<&Path>) -> Outcome {
    let recipe = match recipe {
        Recipe::FreeAcd { alpha, delta, rows } => ConstructionRecipe::FreeAcd { alpha, basis: rows, delta },
        Recipe::SelfOrthogonalX { alpha, rows, random, seed } => {
            let gx = match random {
                Some(k) => random_self_orthogonal(alpha, k, seed)?,
                None => rows,
            };
            ConstructionRecipe::SelfOrthogonalX { alpha, gx }
        }
        Recipe::DoubleIdentity { alpha } => ConstructionRecipe::DoubleIdentity { alpha },
        Recipe::SeparableProduct { parts } => ConstructionRecipe::SeparableProduct {
            binary: BinaryCode::from_generators(parts.binary_length, parts.binary_rows)?,
            quaternary: QuaternaryCode::new(parts.quaternary_length, &parts.quaternary_rows)?,
        },
    };
    let code = recipe.build()?;
    let text = format!("# {} {}\n{}", recipe.name(), code.code_type(), CodeFile::from_code(&code));
    match output {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure { code: 2, message: format!("cannot write {}: {e}", path.display()) })?;
            Ok((String::new(), 0))
        }
        None => Ok((text, 0)),
    }
}

fn run_verify(seed: u64, random: usize, cap: Cap) -> Outcome {
    let cfg = VerifyConfig { cap, seed, random_codes: random, ..VerifyConfig::default() };
    let outcomes = verify::run(&cfg)?;
    let mut out = String::new();
    for o in &outcomes {
        let _ = write!(out, "{} {}", if o.passed { "PASS" } else { "FAIL" }, o.name);
        if let Some(d) = &o.detail {
            let _ = write!(out, ": {d}");
        }
        out.push('\n');
    }
    Ok((out, if outcomes.iter().all(|o| o.passed) { 0 } else { 1 }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cap = Cap(cli.cap);
    let outcome = match cli.command {
        Command::Analyze { file, json } => analyze(&file, json, cap),
        Command::Dual { file } => read_code(&file).map(|(_, c)| (CodeFile::from_code(&c.dual()).to_string(), 0)),
        Command::Gray { file } => gray(&file, cap),
        Command::StandardForm { file } => standard_form(&file),
        Command::Check { property, file } => check(property, &file, cap),
        Command::Construct { recipe, output } => construct(recipe, output.as_deref()),
        Command::Verify { seed, random } => run_verify(seed, random, cap),
    };
    match outcome {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
