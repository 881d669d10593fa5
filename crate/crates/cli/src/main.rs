//! Command line surface over the algebra library. File-producing commands
//! print canonical JSON on stdout and keep commentary on stderr, so outputs
//! pipe straight back in as inputs.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use algext::central::{
    annihilator_central, centrality_agreement, classically_central, lemma31_report, thm33_report,
};
use algext::format::{
    action_to_json, algebra_to_json, extension_to_json, hom_to_json, parse_file, Parsed,
};
use algext::verify::{verify_corpus, CorpusSpec};
use algext::{
    accessify, algebraically_central, categorically_central, enumerate_algebras, extract_action,
    is_faithful, semidirect, weak_actor, Action, Error, Field, SplitExtension,
};

#[derive(Parser)]
#[command(name = "algext", version, about = "actions, split extensions, and central extensions of non-unital algebras over exact fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a file, printing a one-line summary.
    Validate { file: PathBuf },
    /// Commutative reflection of an algebra; prints the unit A -> Comm(A).
    Comm { file: PathBuf },
    /// Centrality of a surjective homomorphism file.
    Central {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Mode::All)]
        mode: Mode,
        #[arg(long)]
        json: bool,
    },
    /// Semidirect product of an action file; prints an extension file.
    Semidirect { file: PathBuf },
    /// The action carried by a split extension file.
    ActionOf { file: PathBuf },
    /// Flag battery for the kernel commutation equivalences of an extension.
    Lemma31 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Flag battery for the central extension characterizations.
    Thm33 {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Weak actor [X] of an algebra file; prints its presentation.
    Actor { file: PathBuf },
    /// Whether an action (or the action of an extension) is faithful.
    Faithful { file: PathBuf },
    /// Map an extension (or action) onto a faithful one, fixing the kernel.
    Accessify { file: PathBuf },
    /// All associative multiplication tables of a dimension over F_p.
    Enumerate(EnumerateArgs),
    /// Run the exhaustive theorem battery over a corpus.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    dim: usize,
    #[arg(long)]
    prime: u64,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    prime: u64,
    #[arg(long)]
    max_dim: usize,
    /// Directory of curated algebra files (*.json, sorted by name).
    #[arg(long)]
    curated: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Classic,
    Algebraic,
    Categorical,
    Annihilator,
    All,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(exit_code(&err));
        }
    }
}

/// 1 signals a property violation or theorem counterexample, 2 a bad input
/// or resource limit.
fn exit_code(err: &anyhow::Error) -> i32 {
    match err.downcast_ref::<Error>() {
        Some(Error::TheoremViolation(_)) => 1,
        _ => 2,
    }
}

fn load(path: &Path) -> Result<Parsed> {
    parse_file(path).with_context(|| format!("reading {}", path.display()))
}

fn load_algebra(path: &Path) -> Result<algext::Algebra> {
    match load(path)? {
        Parsed::Algebra(a) => Ok(a),
        other => bail!("{} holds a {}, expected an algebra", path.display(), other.kind()),
    }
}

fn load_hom(path: &Path) -> Result<algext::AlgebraHom> {
    match load(path)? {
        Parsed::Hom(h) => Ok(h),
        other => bail!("{} holds a {}, expected a homomorphism", path.display(), other.kind()),
    }
}

fn load_action(path: &Path) -> Result<Action> {
    match load(path)? {
        Parsed::Action(a) => Ok(a),
        Parsed::Extension(e) => Ok(extract_action(&e)),
        other => bail!("{} holds a {}, expected an action or extension", path.display(), other.kind()),
    }
}

fn load_extension(path: &Path) -> Result<SplitExtension> {
    match load(path)? {
        Parsed::Extension(e) => Ok(e),
        Parsed::Action(a) => Ok(semidirect(&a)),
        other => bail!("{} holds a {}, expected an extension or action", path.display(), other.kind()),
    }
}

fn run(command: Command) -> Result<i32> {
    match command {
        Command::Validate { file } => {
            let parsed = load(&file)?;
            let summary = match &parsed {
                Parsed::Algebra(a) => format!(
                    "algebra: dim {} over {}{}",
                    a.dim(),
                    a.field(),
                    if a.is_commutative() { ", commutative" } else { "" }
                ),
                Parsed::Hom(h) => format!(
                    "hom: {} -> {} over {}, rank {}{}",
                    h.source().dim(),
                    h.target().dim(),
                    h.source().field(),
                    h.rank(),
                    if h.is_surjective() { ", surjective" } else { "" }
                ),
                Parsed::Action(a) => format!(
                    "action: base dim {} on space dim {} over {}{}",
                    a.base().dim(),
                    a.space().dim(),
                    a.base().field(),
                    if a.is_symmetric() { ", symmetric" } else { "" }
                ),
                Parsed::Extension(e) => format!(
                    "extension: total {} = base {} + kernel {} over {}",
                    e.total().dim(),
                    e.base().dim(),
                    e.kernel_algebra().dim(),
                    e.total().field()
                ),
            };
            println!("{summary}");
            Ok(0)
        }
        Command::Comm { file } => {
            let a = load_algebra(&file)?;
            let refl = a.comm_reflection();
            eprintln!(
                "commutator ideal has dim {}, quotient has dim {}",
                refl.commutator.dim(),
                refl.quotient.dim()
            );
            print!("{}", hom_to_json(&refl.unit));
            Ok(0)
        }
        Command::Central { file, mode, json } => {
            let alpha = load_hom(&file)?;
            let (holds, rendered) = match mode {
                Mode::Classic => {
                    let c = classically_central(&alpha)?;
                    (c.holds, format!("classic: {}", c.holds))
                }
                Mode::Algebraic => {
                    let h = algebraically_central(&alpha)?;
                    (h, format!("algebraic: {h}"))
                }
                Mode::Categorical => {
                    let h = categorically_central(&alpha)?;
                    (h, format!("categorical: {h}"))
                }
                Mode::Annihilator => {
                    let c = annihilator_central(&alpha)?;
                    (c.holds, format!("annihilator: {c}", c = c.holds))
                }
                Mode::All => {
                    let report = centrality_agreement(&alpha)?;
                    let all = report.classic && report.annihilator;
                    let text = if json {
                        let mut s = serde_json::to_string_pretty(&report)?;
                        s.push('\n');
                        s
                    } else {
                        format!(
                            "classic: {}\nalgebraic: {}\ncategorical: {}\nannihilator: {}\n",
                            report.classic, report.algebraic, report.categorical, report.annihilator
                        )
                    };
                    print!("{text}");
                    return Ok(if all { 0 } else { 1 });
                }
            };
            println!("{rendered}");
            Ok(if holds { 0 } else { 1 })
        }
        Command::Semidirect { file } => {
            let act = load_action(&file)?;
            print!("{}", extension_to_json(&semidirect(&act)));
            Ok(0)
        }
        Command::ActionOf { file } => {
            let e = load_extension(&file)?;
            print!("{}", action_to_json(&extract_action(&e)));
            Ok(0)
        }
        Command::Lemma31 { file, json } => {
            let e = load_extension(&file)?;
            let report = lemma31_report(&e);
            if json {
                let mut s = serde_json::to_string_pretty(&serde_json::json!({
                    "flags": report,
                    "unanimous": report.unanimous(),
                }))?;
                s.push('\n');
                print!("{s}");
            } else {
                println!(
                    "a={} b={} c={} d={} e={} f={} g={} unanimous={}",
                    report.a, report.b, report.c, report.d, report.e, report.f, report.g,
                    report.unanimous()
                );
            }
            Ok(if report.unanimous() { 0 } else { 1 })
        }
        Command::Thm33 { file, json } => {
            let e = load_extension(&file)?;
            let report = thm33_report(&e);
            if json {
                let mut s = serde_json::to_string_pretty(&serde_json::json!({
                    "flags": report,
                    "unanimous": report.unanimous(),
                }))?;
                s.push('\n');
                print!("{s}");
            } else {
                println!(
                    "a={} b={} c={} d={} e={} unanimous={}",
                    report.a, report.b, report.c, report.d, report.e,
                    report.unanimous()
                );
            }
            Ok(if report.unanimous() { 0 } else { 1 })
        }
        Command::Actor { file } => {
            let x = load_algebra(&file)?;
            let w = weak_actor(&x)?;
            eprintln!(
                "weak actor has dim {} inside the {}-dim endomorphism pair algebra",
                w.algebra.dim(),
                w.target.algebra().dim()
            );
            print!("{}", algebra_to_json(&w.algebra));
            Ok(0)
        }
        Command::Faithful { file } => {
            let act = load_action(&file)?;
            let faithful = is_faithful(&act);
            println!("{faithful}");
            Ok(if faithful { 0 } else { 1 })
        }
        Command::Accessify { file } => {
            let e = load_extension(&file)?;
            let (m, faithful) = accessify(&e)?;
            eprintln!(
                "base dim {} -> {} (quotient by the acting morphism kernel, rank {})",
                e.base().dim(),
                faithful.base().dim(),
                m.g.rank()
            );
            print!("{}", extension_to_json(&faithful));
            Ok(0)
        }
        Command::Enumerate(args) => {
            let field = Field::prime(args.prime)?;
            let algebras = enumerate_algebras(field, args.dim, args.budget)?;
            for a in &algebras {
                let pretty = algebra_to_json(a);
                let value: serde_json::Value = serde_json::from_str(&pretty)?;
                println!("{}", serde_json::to_string(&value)?);
            }
            eprintln!(
                "{} associative algebras of dim {} over {}",
                algebras.len(),
                args.dim,
                field
            );
            Ok(0)
        }
        Command::Verify(args) => {
            let mut spec = CorpusSpec::new(args.prime, args.max_dim);
            spec.budget = args.budget;
            spec.seed = args.seed;
            spec.jobs = args.jobs;
            if let Some(dir) = &args.curated {
                spec.curated = curated_files(dir)?;
            }
            let report = verify_corpus(&spec)?;
            if args.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", report.render_human());
            }
            Ok(if report.ok { 0 } else { 1 })
        }
    }
}

fn curated_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir).with_context(|| format!("reading {}", dir.display()))? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            files.push(path);
        }
    }
    files.sort();
    if files.is_empty() {
        bail!("no .json files in {}", dir.display());
    }
    Ok(files)
}
