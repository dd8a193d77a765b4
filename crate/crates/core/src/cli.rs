//! Command-line front end. Exit codes: 0 success, 1 validation failure,
//! 2 parse error, 3 unsupported operation, 4 pipeline failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::catalog;
use crate::complement::{build_complement, select_arcs, ArcSelection, SelectionMode};
use crate::diagrams::{Diagram, Params};
use crate::error::{Error, Result};
use crate::glue::{glue_with, price_twist_pipeline, BoundaryMatching, Completion};
use crate::invariants::{euler_char, h1_closed, h1_spine_relative, homology_4sphere_check, pi1_presentation};
use crate::io::svg::render_svg;
use crate::io::tri::{check_declared, parse_tri, write_tri, TriDocument};
use crate::kirby::{extract_handles, standardize_alpha_beta};
use crate::openbook::{check_quaternion_signature, monodromy_twist_vector, seifert_h1};

#[derive(Parser, Debug)]
#[command(name = "trisect", about = "Trisection diagrams of 4-manifolds and surfaces in them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a diagram and report its parameters.
    Validate { file: PathBuf },
    /// Homology, Euler characteristic and optionally a presentation of pi_1.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        pi1: bool,
    },
    /// Relative trisection of the complement of the surface a shadow describes.
    Complement {
        shadow: PathBuf,
        /// auto:p0b3, auto:any or @<selection file>
        #[arg(long, default_value = "auto:p0b3")]
        arcs: String,
        #[arg(short = 'o')]
        out: PathBuf,
    },
    /// Glue two relative trisections along their boundaries.
    Glue {
        a: PathBuf,
        b: PathBuf,
        /// image of each boundary circle of A, e.g. 0,2,1
        #[arg(long = "match")]
        matching: String,
        /// auto or @<diagram file>
        #[arg(long, default_value = "auto")]
        complete: String,
        #[arg(short = 'o')]
        out: PathBuf,
    },
    /// Complement of a projective plane reglued to its neighbourhood in every possible way.
    PriceTwist {
        shadow: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        euler: i64,
        #[arg(short = 'o')]
        out: PathBuf,
    },
    /// Standardize the alpha/beta pair and read off a handle decomposition.
    Kirby {
        file: PathBuf,
        #[arg(long, default_value_t = 50)]
        budget: usize,
    },
    /// Boundary twists of the open book on a planar-page relative trisection.
    Monodromy { file: PathBuf },
    /// Built-in diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Schematic SVG drawing.
    Render {
        file: PathBuf,
        #[arg(short = 'o')]
        out: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Get {
        name: String,
        #[arg(short = 'o')]
        out: Option<PathBuf>,
    },
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SyntaxError { .. } | Error::UnknownSection(_) | Error::DanglingPairing(_) | Error::Io(_) => 2,
        Error::ValidationFailed(_) | Error::NotValidated | Error::MalformedCurve(..) | Error::MalformedSurface(_) => 1,
        Error::UnsupportedPage(_) | Error::NotStandardizedInput | Error::CNotOne(_) | Error::Precondition(_) => 3,
        _ => 4,
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I: IntoIterator<Item = String>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn read(path: &Path) -> Result<TriDocument> {
    parse_tri(&std::fs::read_to_string(path)?)
}

fn write_doc(path: &Path, d: Diagram, meta: &[(&str, String)]) -> Result<()> {
    let mut doc = TriDocument::new(d);
    for (k, v) in meta {
        doc.meta.insert(k.to_string(), v.clone());
    }
    std::fs::write(path, write_tri(&doc))?;
    Ok(())
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Validate { file } => {
            let doc = read(&file)?;
            let report = doc.diagram.validate();
            writeln!(out, "{report}")?;
            if !report.passed() {
                return Ok(1);
            }
            if let Err(e) = check_declared(&doc) {
                writeln!(out, "{e}")?;
                return Ok(1);
            }
            Ok(0)
        }
        Command::Invariants { file, pi1 } => {
            let d = read(&file)?.diagram;
            let params = d.parameters()?;
            writeln!(out, "parameters {params}")?;
            match params {
                Params::Closed { .. } => {
                    writeln!(out, "H1 {}", h1_closed(&d)?)?;
                    let v = homology_4sphere_check(&d)?;
                    writeln!(out, "{v}")?;
                }
                Params::Relative { .. } => {
                    writeln!(out, "H1 {}", h1_spine_relative(&d)?)?;
                    writeln!(out, "euler characteristic {}", euler_char(&d)?)?;
                }
                Params::Shadow { .. } => return Err(Error::Precondition("invariants need a closed or relative diagram".into())),
            }
            if pi1 {
                writeln!(out, "pi1 {}", pi1_presentation(&d)?)?;
            }
            Ok(0)
        }
        Command::Complement { shadow, arcs, out: path } => {
            let d = read(&shadow)?.diagram;
            let mode = match arcs.as_str() {
                "auto:p0b3" => SelectionMode::AutoP0B3,
                "auto:any" => SelectionMode::AutoAny,
                s if s.starts_with('@') => SelectionMode::Explicit(ArcSelection::parse(&std::fs::read_to_string(&s[1..])?)?),
                s => return Err(Error::Precondition(format!("unknown --arcs value `{s}`"))),
            };
            let sel = select_arcs(&d, &mode)?;
            let c = build_complement(&d, &sel)?;
            let p = c.parameters()?;
            write!(out, "{sel}")?;
            writeln!(out, "parameters {p}")?;
            write_doc(&path, c, &[("params", p.to_string())])?;
            Ok(0)
        }
        Command::Glue { a, b, matching, complete, out: path } => {
            let (da, db) = (read(&a)?.diagram, read(&b)?.diagram);
            let map = matching
                .split(',')
                .map(|s| s.trim().parse().map_err(|_| Error::Precondition(format!("bad matching `{matching}`"))))
                .collect::<Result<Vec<usize>>>()?;
            let completion = match complete.as_str() {
                "auto" => Completion::Auto,
                s if s.starts_with('@') => Completion::Explicit(Box::new(read(Path::new(&s[1..]))?.diagram)),
                s => return Err(Error::Precondition(format!("unknown --complete value `{s}`"))),
            };
            let g = glue_with(&da, &db, &BoundaryMatching { map }, &completion)?;
            let p = g.parameters()?;
            writeln!(out, "parameters {p}")?;
            writeln!(out, "H1 {}", h1_closed(&g)?)?;
            write_doc(&path, g, &[("params", p.to_string())])?;
            Ok(0)
        }
        Command::PriceTwist { shadow, euler, out: dir } => {
            let d = read(&shadow)?.diagram;
            let r = price_twist_pipeline(&d, euler)?;
            std::fs::create_dir_all(&dir)?;
            write_doc(&dir.join("complement.tri"), r.complement.clone(), &[])?;
            write_doc(&dir.join("neighbourhood.tri"), r.neighbourhood.clone(), &[])?;
            for o in &r.outputs {
                let meta = [("params", o.diagram.parameters()?.to_string()), ("h1", o.h1.to_string()), ("target", o.target.clone())];
                write_doc(&dir.join(format!("{}.tri", o.label.name())), o.diagram.clone(), &meta)?;
            }
            std::fs::write(dir.join("report.txt"), r.to_string())?;
            write!(out, "{r}")?;
            Ok(0)
        }
        Command::Kirby { file, budget } => {
            let d = read(&file)?.diagram;
            let (s, log) = standardize_alpha_beta(&d, budget)?;
            for step in &log {
                writeln!(out, "{step}")?;
            }
            write!(out, "{}", extract_handles(&s)?)?;
            Ok(0)
        }
        Command::Monodromy { file } => {
            let d = read(&file)?.diagram;
            let t = monodromy_twist_vector(&d)?;
            writeln!(out, "twists {t}")?;
            if t.values.len() == 3 {
                writeln!(out, "quaternion signature {}", check_quaternion_signature(&t.values))?;
                writeln!(out, "seifert H1 {}", seifert_h1(&t.values))?;
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::List } => {
            for n in catalog::list() {
                writeln!(out, "{n}")?;
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Get { name, out: path } } => {
            let e = catalog::get(&name)?;
            let meta = [("name", e.name.to_string()), ("params", e.expected.to_string()), ("note", e.note.split_whitespace().collect::<Vec<_>>().join(" "))];
            match path {
                Some(p) => {
                    write_doc(&p, e.diagram, &meta)?;
                    writeln!(out, "{} {}", e.name, e.expected)?;
                }
                None => {
                    let mut doc = TriDocument::new(e.diagram);
                    for (k, v) in meta {
                        doc.meta.insert(k.into(), v);
                    }
                    write!(out, "{}", write_tri(&doc))?;
                }
            }
            Ok(0)
        }
        Command::Render { file, out: path } => {
            let d = read(&file)?.diagram;
            std::fs::write(path, render_svg(&d))?;
            Ok(0)
        }
    }
}
