//! `fuzzmorph`: classify, map, compress and law-check fuzzy relations.
//!
//! Exit status: 0 on success (consistent, lossless, all laws hold), 1 when
//! the computation succeeded but found an inconsistency or a violation, 2 on
//! usage, format or I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fuzzmorph::document::{CompressionDocument, SystemCompressionDocument};
use fuzzmorph::lawcheck::{run_suite, search_counterexample};
use fuzzmorph::{
    classify, classify_approx, compress, compress_system, neighborhood, FuzzyInformationSystem,
    FuzzyRelation, GradeScale, LawId, MappingDocument, Mode, NeighborhoodKind, RelationDocument,
    UniverseMapping,
};

const SUCCESS: u8 = 0;
const FOUND: u8 = 1;
const FAILURE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "fuzzmorph",
    version,
    about = "Consistent functions and lossless compression of fuzzy relations"
)]
struct Cli {
    /// Decimal digits accepted in grades (1 to 18).
    #[arg(
        long,
        global = true,
        env = "FUZZMORPH_GRADE_DIGITS",
        default_value_t = 6
    )]
    digits: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Zadeh,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a mapping is predecessor-, successor- and blockwise consistent.
    Classify {
        #[arg(short, long, value_name = "REL")]
        relation: PathBuf,
        #[arg(short, long, value_name = "MAP")]
        mapping: PathBuf,
        /// Treat grades closer than this as equal (approximate report).
        #[arg(long, value_name = "T")]
        tol: Option<String>,
    },
    /// Write the image f(R) of a relation.
    Image {
        #[arg(short, long, value_name = "REL")]
        relation: PathBuf,
        #[arg(short, long, value_name = "MAP")]
        mapping: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Write the preimage f⁻¹(Q) of a relation over the codomain.
    Preimage {
        #[arg(short = 'q', long, value_name = "REL")]
        relation: PathBuf,
        #[arg(short, long, value_name = "MAP")]
        mapping: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print a neighborhood of one element in Zadeh notation.
    Neighborhood {
        #[arg(short, long, value_name = "REL")]
        relation: PathBuf,
        #[arg(short = 'x', long, value_name = "ELEM")]
        element: String,
        /// pred, succ, meet or join.
        #[arg(long, value_name = "K")]
        kind: NeighborhoodKind,
    },
    /// Quotient a relation by its coarsest consistent partition.
    Compress {
        #[arg(short, long, value_name = "REL")]
        relation: PathBuf,
        /// pred, succ or both.
        #[arg(long, value_name = "M", default_value = "both")]
        mode: Mode,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// Quotient every attribute of an information system at once.
    CompressSystem {
        #[arg(short, long, value_name = "SYS")]
        system: PathBuf,
        #[arg(short, long, value_name = "OUT")]
        output: Option<PathBuf>,
    },
    /// Run the law suite on seeded random instances.
    VerifyLaws {
        /// Law id (repeatable); all laws with full hypotheses by default.
        #[arg(long = "law", value_name = "ID")]
        laws: Vec<LawId>,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest universe drawn.
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Search for an instance violating a law, typically a weakened one.
    Counterexample {
        #[arg(long, value_name = "ID")]
        law: LawId,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_relation(path: &Path, scale: GradeScale) -> Result<(String, FuzzyRelation)> {
    let doc = RelationDocument::parse(&read(path)?).with_context(|| path.display().to_string())?;
    doc.to_single(scale)
        .with_context(|| path.display().to_string())
}

fn load_system(path: &Path, scale: GradeScale) -> Result<FuzzyInformationSystem> {
    let doc = RelationDocument::parse(&read(path)?).with_context(|| path.display().to_string())?;
    doc.to_system(scale)
        .with_context(|| path.display().to_string())
}

fn load_mapping(path: &Path) -> Result<UniverseMapping> {
    let doc = MappingDocument::parse(&read(path)?).with_context(|| path.display().to_string())?;
    doc.to_mapping().with_context(|| path.display().to_string())
}

fn emit(out: &mut impl Write, output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn render(name: &str, relation: &FuzzyRelation, format: Format) -> Result<String> {
    let doc = RelationDocument::single(name, relation);
    Ok(match format {
        Format::Json => doc.to_json(),
        Format::Zadeh => doc.to_zadeh()?,
    })
}

/// Status line for commands that write a document: to stdout when the
/// document goes to a file, otherwise to stderr so stdout stays parseable.
fn status(out: &mut impl Write, output: Option<&Path>, line: &str) -> Result<()> {
    if output.is_some() {
        writeln!(out, "{line}")?;
    } else {
        eprintln!("{line}");
    }
    Ok(())
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8> {
    let scale = GradeScale::new(cli.digits).context("--digits")?;
    match cli.command {
        Command::Classify {
            relation,
            mapping,
            tol,
        } => {
            let (_, r) = load_relation(&relation, scale)?;
            let f = load_mapping(&mapping)?;
            let report = match tol {
                Some(t) => classify_approx(&f, &r, scale.parse(&t).context("--tol")?)?,
                None => classify(&f, &r)?,
            };
            writeln!(out, "{report}")?;
            Ok(if report.satisfies(Mode::Both) {
                SUCCESS
            } else {
                FOUND
            })
        }
        Command::Image {
            relation,
            mapping,
            output,
            format,
        } => {
            let (name, r) = load_relation(&relation, scale)?;
            let f = load_mapping(&mapping)?;
            let image = f.image_relation(&r)?;
            emit(out, output.as_deref(), &render(&name, &image, format)?)?;
            if !classify(&f, &r)?.satisfies(Mode::Both) {
                status(
                    out,
                    output.as_deref(),
                    "note: the mapping is not both-consistent; the image loses information",
                )?;
            }
            Ok(SUCCESS)
        }
        Command::Preimage {
            relation,
            mapping,
            output,
            format,
        } => {
            let (name, q) = load_relation(&relation, scale)?;
            let f = load_mapping(&mapping)?;
            emit(
                out,
                output.as_deref(),
                &render(&name, &f.preimage_relation(&q)?, format)?,
            )?;
            Ok(SUCCESS)
        }
        Command::Neighborhood {
            relation,
            element,
            kind,
        } => {
            let (_, r) = load_relation(&relation, scale)?;
            writeln!(out, "{}", neighborhood(&r, &element, kind)?)?;
            Ok(SUCCESS)
        }
        Command::Compress {
            relation,
            mode,
            output,
        } => {
            let (name, r) = load_relation(&relation, scale)?;
            let result = compress(&r, mode);
            let lossless = result.roundtrip(&r).is_equal();
            emit(
                out,
                output.as_deref(),
                &CompressionDocument::new(&name, &result, lossless).to_json(),
            )?;
            status(
                out,
                output.as_deref(),
                &format!(
                    "{} classes from {} elements ({mode}); round trip {}",
                    result.partition.len(),
                    r.size(),
                    if lossless { "exact" } else { "lossy" }
                ),
            )?;
            Ok(if lossless { SUCCESS } else { FOUND })
        }
        Command::CompressSystem { system, output } => {
            let s = load_system(&system, scale)?;
            let result = compress_system(&s);
            let roundtrips = result.roundtrip(&s)?;
            let lossless = roundtrips.iter().all(|(_, rt)| rt.is_equal());
            emit(
                out,
                output.as_deref(),
                &SystemCompressionDocument::new(&result, lossless).to_json(),
            )?;
            status(
                out,
                output.as_deref(),
                &format!(
                    "{} classes from {} elements over {} attributes; round trip {}",
                    result.partition.len(),
                    s.universe().len(),
                    s.len(),
                    if lossless { "exact" } else { "lossy" }
                ),
            )?;
            Ok(if lossless { SUCCESS } else { FOUND })
        }
        Command::VerifyLaws {
            laws,
            trials,
            seed,
            max_size,
        } => {
            let laws = if laws.is_empty() {
                LawId::FULL.to_vec()
            } else {
                laws
            };
            let summaries = run_suite(&laws, trials, seed, max_size)?;
            writeln!(
                out,
                "{:<20} {:>8} {:>8} {:>8} {:>8}",
                "law", "trials", "holds", "vacuous", "violated"
            )?;
            for s in &summaries {
                writeln!(
                    out,
                    "{:<20} {:>8} {:>8} {:>8} {:>8}",
                    s.law.as_str(),
                    s.trials,
                    s.holds,
                    s.vacuous,
                    s.violated
                )?;
            }
            let failed: Vec<_> = summaries.iter().filter(|s| !s.passed()).collect();
            for s in &failed {
                let c = s
                    .first_violation
                    .as_ref()
                    .expect("violated summaries keep a witness");
                writeln!(
                    out,
                    "\n{} violated on trial {}: {}\n{}",
                    s.law, c.trial, c.witness, c.instance
                )?;
            }
            if failed.is_empty() {
                writeln!(
                    out,
                    "\nall {} laws hold (seed {seed}, |U| <= {max_size})",
                    summaries.len()
                )?;
                Ok(SUCCESS)
            } else {
                writeln!(
                    out,
                    "\n{} of {} laws violated",
                    failed.len(),
                    summaries.len()
                )?;
                Ok(FOUND)
            }
        }
        Command::Counterexample {
            law,
            trials,
            seed,
            max_size,
        } => {
            if trials == 0 {
                bail!("--trials must be at least 1");
            }
            writeln!(out, "{law}: {}", law.statement())?;
            match search_counterexample(law, trials, seed, max_size)? {
                Some(c) => {
                    writeln!(
                        out,
                        "violated on trial {}: {}\n{}",
                        c.trial, c.witness, c.instance
                    )?;
                    Ok(FOUND)
                }
                None => {
                    writeln!(
                        out,
                        "no violation in {trials} trials (seed {seed}, |U| <= {max_size})"
                    )?;
                    Ok(SUCCESS)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let result = run(cli, &mut stdout.lock()).and_then(|code| {
        io::stdout().flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        // the reader went away (`| head`); nothing left to report to
        Err(err)
            if err.downcast_ref::<io::Error>().map(io::Error::kind)
                == Some(io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::from(SUCCESS)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(FAILURE)
        }
    }
}
