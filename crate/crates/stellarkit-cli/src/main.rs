//! `stellarkit` — exact computations with simplicial complexes, their face
//! rings, unprojection presentations, graded Betti tables and fans.
//!
//! Structured output is JSON on stdout (`--format text` switches to the
//! human-readable forms); diagnostics go to stderr. Exit codes: 0 on
//! success, 1 on a domain error (the error name is printed), 2 on usage
//! errors. The environment variable `STELLARKIT_THREADS` caps the worker
//! threads of the parallel maps; 0 means fully serial.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use stellarkit::homology::PrimeField;
use stellarkit::suite;
use stellarkit::{io, FaceSet, SimplicialComplex};

#[derive(Parser)]
#[command(name = "stellarkit", version, about = "Exact toolkit for stellar subdivisions, face rings and Betti tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct InputArg {
    /// Input complex: a `.cplx` facet file, or `.json` in the complex schema
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
}

#[derive(Args)]
struct OutputArgs {
    /// Write the result to a file instead of stdout; `.cplx` and `.json`
    /// extensions pick their format, anything else follows --format
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect and transform complexes
    Complex {
        #[command(subcommand)]
        command: ComplexCommand,
    },
    /// Test the Gorenstein* property over GF(p)
    Gorenstein {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Square-free monomial ideals of the face ring
    Ideal {
        #[command(subcommand)]
        command: IdealCommand,
    },
    /// Unprojection presentation for a face of dimension at least 1
    Unproject {
        #[command(flatten)]
        input: InputArg,
        /// Face as comma-separated vertex ids, e.g. 1,2
        #[arg(long, value_name = "FACE")]
        sigma: String,
        /// Use degree-one variables z1..z(d-1) instead of one z of degree d-1
        #[arg(long)]
        deg1: bool,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded Betti tables
    Betti {
        #[arg(long, value_enum)]
        method: BettiMethod,
        /// Complex input (hochster method)
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// Polytope dimension (km and closed methods)
        #[arg(long)]
        d: Option<u32>,
        /// Vertex count (km and closed methods)
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate θ(d, m, i)
    Theta {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
    },
    /// Polyhedral fans of unprojection presentations
    Fan {
        #[command(subcommand)]
        command: FanCommand,
    },
    /// Run a verification suite (see `verify --help` for names)
    Verify {
        /// Suite name, or `all`
        suite: String,
        /// Seed for the randomized suite
        #[arg(long, default_value_t = suite::DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum ComplexCommand {
    /// Vertex count, dimension, purity, f-vector and h-polynomial
    Info {
        #[command(flatten)]
        input: InputArg,
    },
    /// All faces, ordered by cardinality then lexicographically
    Faces {
        #[command(flatten)]
        input: InputArg,
    },
    /// Link of a face, compacted, with the vertex map
    Link {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_name = "FACE")]
        sigma: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Stellar subdivision on a face of dimension at least 1
    Stellar {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_name = "FACE")]
        sigma: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Join of two complexes (second vertex set shifted)
    Join {
        /// The two input complexes
        #[arg(long = "in", value_name = "FILE", num_args = 1, action = clap::ArgAction::Append)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Boundary complex of a stacked polytope
    Stacked {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
        /// Facet index chosen at each subdivision step, comma-separated
        #[arg(long, value_name = "LIST")]
        choices: Option<String>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Stanley-Reisner ideal (minimal non-faces)
    Sr {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Annihilator of the face monomial x_sigma
    Colon {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_name = "FACE")]
        sigma: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Annihilator of the monomial ideal given by --gen faces
    Annihilator {
        #[command(flatten)]
        input: InputArg,
        /// Generator support, repeatable, e.g. --gen 3 --gen 4,5
        #[arg(long = "gen", value_name = "FACE")]
        gens: Vec<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BettiMethod {
    /// Unprojection recursion for stacked complexes
    Km,
    /// Closed form for stacked complexes
    Closed,
    /// Brute-force oracle on an arbitrary complex
    Hochster,
}

#[derive(Subcommand)]
enum FanCommand {
    /// Fan of the unprojection presentation of (complex, sigma)
    Build {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_name = "FACE")]
        sigma: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify pointedness and pairwise face intersections
    Check {
        /// Fan in the JSON schema
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// The rank-3 embedded example fan
    ExampleP3 {
        #[command(flatten)]
        output: OutputArgs,
    },
}

enum CliError {
    Domain(stellarkit::Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<stellarkit::Error> for CliError {
    fn from(e: stellarkit::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("STELLARKIT_THREADS") {
        match value.trim().parse::<usize>() {
            Ok(threads) => {
                stellarkit::configure_threads(threads);
            }
            Err(_) => {
                eprintln!("warning: ignoring invalid STELLARKIT_THREADS={value:?}");
            }
        }
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(CliError::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.name());
            ExitCode::from(1)
        }
        Err(CliError::Io(path, e)) => {
            eprintln!("error[Io]: {}: {e}", path.display());
            ExitCode::from(1)
        }
        Err(CliError::Usage(message)) => {
            eprintln!("usage error: {message}");
            ExitCode::from(2)
        }
    }
}

fn parse_face(text: &str) -> CliResult<FaceSet> {
    let mut vertices = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        if token.is_empty() {
            continue;
        }
        let v: usize = token
            .parse()
            .map_err(|_| CliError::Usage(format!("bad vertex id {token:?} in face {text:?}")))?;
        vertices.push(v);
    }
    Ok(FaceSet::new(vertices)?)
}

fn parse_choices(text: &str) -> CliResult<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| CliError::Usage(format!("bad facet index {t:?}")))
        })
        .collect()
}

fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn read_complex(path: &Path) -> CliResult<SimplicialComplex> {
    let text = read_file(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Domain(stellarkit::Error::Parse {
                line: e.line(),
                message: e.to_string(),
            }))?;
        Ok(io::complex_from_json(&value)?)
    } else {
        Ok(io::read_cplx(&text)?)
    }
}

/// Emits a result that has both a JSON and a text form, honoring --out and
/// its extension override.
fn emit(output: &OutputArgs, json: serde_json::Value, text: impl Fn() -> CliResult<String>) -> CliResult<()> {
    let rendered = match &output.output {
        Some(path) => {
            let as_text = match path.extension().and_then(|e| e.to_str()) {
                Some("cplx") | Some("txt") => true,
                Some("json") => false,
                _ => output.format == Format::Text,
            };
            let mut content = if as_text { text()? } else { json.to_string() };
            if !content.ends_with('\n') {
                content.push('\n');
            }
            std::fs::write(path, content).map_err(|e| CliError::Io(path.clone(), e))?;
            return Ok(());
        }
        None => match output.format {
            Format::Json => json.to_string(),
            Format::Text => text()?,
        },
    };
    println!("{rendered}");
    Ok(())
}

fn print_value(format: Format, json: serde_json::Value, text: impl Fn() -> String) {
    match format {
        Format::Json => println!("{json}"),
        Format::Text => println!("{}", text()),
    }
}

fn ideal_text(ideal: &stellarkit::MonomialIdeal) -> String {
    if ideal.is_zero() {
        return "0".to_string();
    }
    ideal
        .generators()
        .iter()
        .map(|g| {
            if g.is_empty() {
                "1".to_string()
            } else {
                g.vertices()
                    .map(|v| format!("x{v}"))
                    .collect::<Vec<_>>()
                    .join("*")
            }
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn run(command: Command) -> CliResult<ExitCode> {
    match command {
        Command::Complex { command } => run_complex(command)?,
        Command::Gorenstein { input, p, format } => {
            let complex = read_complex(&input.input)?;
            let field = PrimeField::new(p)?;
            let report = stellarkit::is_gorenstein_star(&complex, field)?;
            let witness = report.witness.as_ref().map(|w| {
                serde_json::json!({
                    "face": w.face.to_vec(),
                    "link_dim": w.link_dim,
                    "profile": w.profile.dims(),
                })
            });
            let json = serde_json::json!({
                "p": p,
                "gorenstein": report.is_gorenstein_star,
                "witness": witness,
            });
            print_value(format, json, || match &report.witness {
                None => "true".to_string(),
                Some(w) => format!("false (witness {}, homology {:?})", w.face, w.profile.dims()),
            });
        }
        Command::Ideal { command } => run_ideal(command)?,
        Command::Unproject {
            input,
            sigma,
            deg1,
            p,
            output,
        } => {
            let complex = read_complex(&input.input)?;
            let sigma = parse_face(&sigma)?;
            let field = PrimeField::new(p)?;
            let presentation = if deg1 {
                stellarkit::unprojection_presentation_deg1(&complex, sigma, field)?
            } else {
                stellarkit::unprojection_presentation(&complex, sigma, field)?
            };
            emit(
                &output,
                io::presentation_to_json(&presentation),
                || Ok(presentation.to_text()),
            )?;
        }
        Command::Betti {
            method,
            input,
            d,
            m,
            p,
            output,
        } => {
            let table = match method {
                BettiMethod::Km | BettiMethod::Closed => {
                    let (Some(d), Some(m)) = (d, m) else {
                        return Err(CliError::Usage(
                            "--method km|closed needs --d and --m".into(),
                        ));
                    };
                    match method {
                        BettiMethod::Km => stellarkit::stacked_betti_recursive(d, m)?,
                        _ => stellarkit::stacked_betti_closed(d, m)?,
                    }
                }
                BettiMethod::Hochster => {
                    let Some(path) = input else {
                        return Err(CliError::Usage("--method hochster needs --in".into()));
                    };
                    let complex = read_complex(&path)?;
                    stellarkit::betti_oracle(&complex, PrimeField::new(p)?)?
                }
            };
            emit(&output, io::betti_to_json(&table), || {
                Ok(table.to_diagram_text())
            })?;
        }
        Command::Theta { d, m, i } => {
            let value = stellarkit::theta(d, m, i)?;
            println!(
                "{}",
                serde_json::json!({ "d": d, "m": m, "i": i, "theta": value })
            );
        }
        Command::Fan { command } => run_fan(command)?,
        Command::Verify { suite: name, seed } => {
            let Some(reports) = suite::run_suite(&name, seed) else {
                return Err(CliError::Usage(format!(
                    "unknown suite {name:?}; available: all, {}",
                    suite::SUITE_NAMES.join(", ")
                )));
            };
            let mut all_passed = true;
            for report in &reports {
                eprintln!("{}", report.line());
                all_passed &= report.passed;
            }
            let json: Vec<serde_json::Value> = reports
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "millis": r.elapsed.as_secs_f64() * 1e3,
                        "detail": r.detail,
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(json));
            if !all_passed {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn complex_text(complex: &SimplicialComplex) -> CliResult<String> {
    Ok(io::write_cplx(complex)?)
}

fn run_complex(command: ComplexCommand) -> CliResult<()> {
    match command {
        ComplexCommand::Info { input } => {
            let complex = read_complex(&input.input)?;
            let h = complex.h_polynomial()?;
            let json = serde_json::json!({
                "m": complex.num_vertices(),
                "dim": complex.dim()?,
                "pure": complex.is_pure()?,
                "f_vector": complex.f_vector()?,
                "h_polynomial": h.coeffs(),
            });
            println!("{json}");
        }
        ComplexCommand::Faces { input } => {
            let complex = read_complex(&input.input)?;
            let faces: Vec<Vec<usize>> = complex.faces().iter().map(|f| f.to_vec()).collect();
            println!("{}", serde_json::json!({ "faces": faces }));
        }
        ComplexCommand::Link {
            input,
            sigma,
            output,
        } => {
            let complex = read_complex(&input.input)?;
            let sigma = parse_face(&sigma)?;
            let link = complex.link(sigma)?;
            emit(&output, io::mapped_complex_to_json(&link), || {
                complex_text(&link.complex)
            })?;
        }
        ComplexCommand::Stellar {
            input,
            sigma,
            output,
        } => {
            let complex = read_complex(&input.input)?;
            let sigma = parse_face(&sigma)?;
            let subdivided = complex.stellar_subdivision(sigma)?;
            emit(&output, io::complex_to_json(&subdivided), || {
                complex_text(&subdivided)
            })?;
        }
        ComplexCommand::Join { inputs, output } => {
            if inputs.len() != 2 {
                return Err(CliError::Usage(
                    "join needs exactly two --in complexes".into(),
                ));
            }
            let a = read_complex(&inputs[0])?;
            let b = read_complex(&inputs[1])?;
            let joined = a.join(&b)?;
            emit(&output, io::complex_to_json(&joined), || {
                complex_text(&joined)
            })?;
        }
        ComplexCommand::Stacked {
            d,
            m,
            choices,
            output,
        } => {
            let choices = choices.as_deref().map(parse_choices).transpose()?;
            let complex = SimplicialComplex::stacked(d, m, choices.as_deref())?;
            emit(&output, io::complex_to_json(&complex), || {
                complex_text(&complex)
            })?;
        }
    }
    Ok(())
}

fn run_ideal(command: IdealCommand) -> CliResult<()> {
    match command {
        IdealCommand::Sr { input, format } => {
            let complex = read_complex(&input.input)?;
            let ideal = stellarkit::stanley_reisner_ideal(&complex)?;
            print_value(format, io::ideal_to_json(&ideal), || ideal_text(&ideal));
        }
        IdealCommand::Colon {
            input,
            sigma,
            format,
        } => {
            let complex = read_complex(&input.input)?;
            let sigma = parse_face(&sigma)?;
            let ideal = stellarkit::colon_ideal(&complex, sigma)?;
            print_value(format, io::ideal_to_json(&ideal), || ideal_text(&ideal));
        }
        IdealCommand::Annihilator {
            input,
            gens,
            format,
        } => {
            let complex = read_complex(&input.input)?;
            let faces = gens
                .iter()
                .map(|g| parse_face(g))
                .collect::<CliResult<Vec<_>>>()?;
            let ideal = stellarkit::MonomialIdeal::new(faces);
            let ann = stellarkit::annihilator(&complex, &ideal)?;
            print_value(format, io::ideal_to_json(&ann), || ideal_text(&ann));
        }
    }
    Ok(())
}

fn run_fan(command: FanCommand) -> CliResult<()> {
    match command {
        FanCommand::Build {
            input,
            sigma,
            output,
        } => {
            let complex = read_complex(&input.input)?;
            let sigma = parse_face(&sigma)?;
            let fan = stellarkit::build_fan(&complex, sigma)?;
            emit(&output, io::fan_to_json(&fan), || {
                let mut text = String::new();
                let (rays, cones) = fan.ray_index_form();
                writeln!(text, "rank {}", fan.rank()).unwrap();
                for (i, ray) in rays.iter().enumerate() {
                    writeln!(text, "ray {i}: {ray:?}").unwrap();
                }
                for (i, cone) in cones.iter().enumerate() {
                    writeln!(text, "cone {i}: {cone:?}").unwrap();
                }
                Ok(text.trim_end().to_string())
            })?;
        }
        FanCommand::Check { input } => {
            let text = read_file(&input)?;
            let value: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| CliError::Domain(stellarkit::Error::Parse {
                    line: e.line(),
                    message: e.to_string(),
                }))?;
            let fan = io::fan_from_json(&value)?;
            let verdict = stellarkit::check_fan(&fan)?;
            let violation = verdict.violation.map(|v| match v {
                stellarkit::FanViolation::NotPointed { cone } => {
                    serde_json::json!({ "kind": "not_pointed", "cone": cone })
                }
                stellarkit::FanViolation::NotAFacePair { first, second } => {
                    serde_json::json!({ "kind": "bad_pair", "cones": [first, second] })
                }
            });
            println!(
                "{}",
                serde_json::json!({ "ok": verdict.ok, "violation": violation })
            );
        }
        FanCommand::ExampleP3 { output } => {
            let fan = stellarkit::embedded_example_p3();
            emit(&output, io::fan_to_json(&fan), || {
                Ok(io::fan_to_json(&fan).to_string())
            })?;
        }
    }
    Ok(())
}
