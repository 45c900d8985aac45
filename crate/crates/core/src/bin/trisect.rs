use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use trisect::demo::paper_demo;
use trisect::moves::parse_class;
use trisect::report;
use trisect::{
    apply_move, cap_off, distinguish, enumerate_types, invariant_report, minimal_genus_bound,
    openbook_boundary_filter, parse_diagram, serialize_diagram, validate_closed, Boundary, Diagram,
    DiagramDocument, Error, Family, Move, Outcome, Sign,
};

const EX_USAGE: u8 = 64;
const EX_IOERR: u8 = 74;

#[derive(Parser)]
#[command(
    name = "trisect",
    version,
    about = "Homological toolkit for trisection diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a diagram against the standard homological model; exit 0 iff valid
    Validate { file: PathBuf },
    /// Cap off a (g,k;0,b) relative diagram
    Cap {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Homology and intersection form of a closed diagram (relative diagrams are capped first)
    Invariants { file: PathBuf },
    /// Handleslide one curve over another in the same family
    Slide {
        file: PathBuf,
        #[arg(long)]
        family: Family,
        /// 1-based index of the curve that moves
        #[arg(long)]
        curve: usize,
        /// 1-based index of the curve slid over
        #[arg(long)]
        over: usize,
        #[arg(long, allow_hyphen_values = true)]
        sign: Sign,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Apply a power of the Dehn twist along a primitive class to every curve
    Twist {
        file: PathBuf,
        /// Comma-separated coordinates, e.g. 1,0,-1,0
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        #[arg(long, allow_hyphen_values = true)]
        power: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Cap off two relative diagrams and compare invariants.
    /// Exit 0: distinguished, 2: inconclusive, 1: error
    Distinguish { left: PathBuf, right: PathBuf },
    /// List admissible (g,k;p,b) types with a given Euler characteristic
    Params {
        #[arg(long, allow_hyphen_values = true)]
        chi: i64,
        #[arg(long)]
        gmax: usize,
        /// Keep only types whose open-book page can bound this 3-manifold
        #[arg(long)]
        boundary: Option<Boundary>,
    },
    /// Run the bundled S2xD2 pipeline end to end
    PaperDemo,
}

enum Failure {
    Io(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Run = Result<u8, Failure>;

fn read_document(path: &Path) -> Result<DiagramDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let parsed =
        parse_diagram(&text).map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(parsed.document)
}

fn write_document(path: &Path, doc: &DiagramDocument) -> Result<(), Failure> {
    fs::write(path, serialize_diagram(doc))
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn relative(
    doc: DiagramDocument,
    path: &Path,
) -> Result<trisect::RelativeTrisectionDiagram, Failure> {
    match doc.diagram {
        Diagram::Relative(d) => Ok(d),
        Diagram::Closed(_) => Err(Failure::Other(format!(
            "{}: expected a relative diagram (surface boundary > 0)",
            path.display()
        ))),
    }
}

fn moved(doc: DiagramDocument, m: &Move) -> Result<DiagramDocument, Error> {
    let diagram = match &doc.diagram {
        Diagram::Relative(d) => Diagram::Relative(apply_move(d, m)?),
        Diagram::Closed(d) => Diagram::Closed(apply_move(d, m)?),
    };
    Ok(DiagramDocument { diagram, ..doc })
}

fn position(i: usize, what: &str) -> Result<usize, Failure> {
    i.checked_sub(1)
        .ok_or_else(|| Failure::Other(format!("{what} index is 1-based, got 0")))
}

fn run(command: Command) -> Run {
    match command {
        Command::Validate { file } => {
            let doc = read_document(&file)?;
            let v = doc.diagram.validate();
            print!("{v}");
            Ok(if v.ok { 0 } else { 1 })
        }
        Command::Cap { file, output } => {
            let d = relative(read_document(&file)?, &file)?;
            let capped = cap_off(&d)?;
            let t = validate_closed(&capped).into_result()?;
            write_document(&output, &DiagramDocument::new(capped))?;
            println!("capped to {t}, written to {}", output.display());
            Ok(0)
        }
        Command::Invariants { file } => {
            let doc = read_document(&file)?;
            let closed = match doc.diagram {
                Diagram::Closed(d) => d,
                Diagram::Relative(d) => {
                    let c = cap_off(&d)?;
                    println!("relative diagram capped off before computing invariants");
                    c
                }
            };
            print!("{}", report::render_invariants(&invariant_report(&closed)?));
            Ok(0)
        }
        Command::Slide {
            file,
            family,
            curve,
            over,
            sign,
            output,
        } => {
            let m = Move::Handleslide {
                family,
                slid: position(curve, "curve")?,
                over: position(over, "over")?,
                sign,
            };
            let doc = moved(read_document(&file)?, &m)?;
            write_document(&output, &doc)?;
            println!("{m}: written to {}", output.display());
            Ok(0)
        }
        Command::Twist {
            file,
            class,
            power,
            output,
        } => {
            let m = Move::Transvection {
                class: parse_class(&class)?,
                power,
            };
            let doc = moved(read_document(&file)?, &m)?;
            write_document(&output, &doc)?;
            println!("{m}: written to {}", output.display());
            Ok(0)
        }
        Command::Distinguish { left, right } => {
            let d = relative(read_document(&left)?, &left)?;
            let e = relative(read_document(&right)?, &right)?;
            let verdict = distinguish(&d, &e)?;
            print!("{}", report::render_verdict(&verdict));
            Ok(match verdict.outcome {
                Outcome::Distinguished => 0,
                Outcome::Inconclusive => 2,
            })
        }
        Command::Params {
            chi,
            gmax,
            boundary,
        } => {
            let types = enumerate_types(chi, gmax);
            match boundary {
                None => print!("{}", report::render_types(&types)),
                Some(b) => {
                    let kept = openbook_boundary_filter(&types, b);
                    println!(
                        "boundary {b}: {} of {} type(s) survive",
                        kept.len(),
                        types.len()
                    );
                    print!("{}", report::render_filtered(&kept));
                    if kept.is_empty() {
                        println!("note: minimal genus ≥ {}", gmax + 1);
                    }
                    print!("{}", report::render_bound(&minimal_genus_bound(chi, b)));
                }
            }
            Ok(0)
        }
        Command::PaperDemo => {
            let summary = paper_demo()?;
            print!("{summary}");
            Ok(if summary.all_passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EX_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EX_IOERR)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
