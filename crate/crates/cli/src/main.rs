//! `nestochroma` command-line front end.

mod report;
mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use nestochroma::chroma::DEFAULT_BUDGET;
use nestochroma::{
    assoc_colouring, cyclo_colouring, cyclo_improve_with_budget, dsatur, exact_chromatic,
    pa_colouring, permuto_colouring, stello_colouring, validate, validate_sampled, Colouring,
    ConflictGraph, FacetSystem, Family, FamilyTag, PermAssoc,
};
use serde::Serialize;

use report::{Check, Effort, Report};

/// Facet systems above this size are validated by sampling.
const EXHAUSTIVE_LIMIT: u128 = 60_000;
const SAMPLES: usize = 100_000;

#[derive(Parser)]
#[command(
    name = "nestochroma",
    version,
    about = "Facet colourings and chromatic numbers of nestohedra"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the facets of a polytope.
    Facets {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a proper facet colouring and validate it.
    Colour {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Paper)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write the assignment (facet and colour per entry) to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-run one of the built-in checks.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Reference values to compare against; defaults to the bundled table.
        #[arg(long)]
        fixture: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        #[arg(long, default_value_t = 12)]
        max_balls: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Bracket or determine the chromatic number with the exact solver.
    Chroma {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Write the conflict graph in DOT format.
        #[arg(long)]
        export_dot: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Colour a range of dimensions and emit one CSV row per dimension.
    Sweep {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[arg(long, value_enum, default_value_t = Method::Paper)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    #[value(alias = "associahedron")]
    Assoc,
    #[value(alias = "cyclohedron")]
    Cyclo,
    #[value(alias = "permutohedron")]
    Permuto,
    #[value(alias = "stellohedron")]
    Stello,
    #[value(alias = "permutoassociahedron")]
    Pa,
}

impl FamilyArg {
    fn name(self) -> &'static str {
        match self {
            FamilyArg::Assoc => "assoc",
            FamilyArg::Cyclo => "cyclo",
            FamilyArg::Permuto => "permuto",
            FamilyArg::Stello => "stello",
            FamilyArg::Pa => "pa",
        }
    }

    fn family(self) -> Option<Family> {
        match self {
            FamilyArg::Assoc => Some(Family::Associahedron),
            FamilyArg::Cyclo => Some(Family::Cyclohedron),
            FamilyArg::Permuto => Some(Family::Permutohedron),
            FamilyArg::Stello => Some(Family::Stellohedron),
            FamilyArg::Pa => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Paper,
    Improve,
    Dsatur,
    Exact,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Paper => "paper",
            Method::Improve => "improve",
            Method::Dsatur => "dsatur",
            Method::Exact => "exact",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Bad arguments, capacity limits, unreadable input: exit code 2. Checks
/// that run and fail are reported as `Ok(false)` instead.
#[derive(Debug)]
enum Failure {
    Usage(String),
}

impl From<nestochroma::Error> for Failure {
    fn from(e: nestochroma::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Facets { family, n, format } => cmd_facets(family, n, format),
        Command::Colour {
            family,
            n,
            method,
            budget,
            format,
            out,
        } => {
            let start = Instant::now();
            let (mut report, assignment) = colour(family, n, method, budget)?;
            report.seconds = Some(start.elapsed().as_secs_f64());
            if let Some(path) = out {
                write_assignment(&path, &report, &assignment, format)?;
            }
            print(&report.render(format))?;
            Ok(report.valid == Some(true))
        }
        Command::Verify {
            suite,
            fixture,
            max_m,
            max_balls,
            format,
        } => {
            let fixture = match fixture {
                Some(path) => fs::read_to_string(path)?,
                None => verify::BUNDLED.to_string(),
            };
            let result = verify::run(suite, &fixture, max_m, max_balls)?;
            print(&result.render(format))?;
            Ok(result.passed)
        }
        Command::Chroma {
            family,
            n,
            budget,
            export_dot,
            format,
        } => {
            let start = Instant::now();
            let graph = conflict_graph(family, n)?;
            if let Some(path) = export_dot {
                fs::write(path, graph.to_dot())?;
            }
            let r = exact_chromatic(&graph, budget);
            let report = Report {
                family: family.name().into(),
                n,
                method: "exact".into(),
                m: Some(r.upper),
                valid: Some(graph.is_proper(&r.witness)),
                check: Some(Check::Exhaustive),
                lower: Some(r.lower),
                upper: Some(r.upper),
                optimal: Some(r.optimal),
                effort: Some(Effort {
                    nodes: r.nodes,
                    budget: r.budget,
                }),
                seconds: Some(start.elapsed().as_secs_f64()),
            };
            print(&report.render(format))?;
            Ok(report.valid == Some(true))
        }
        Command::Sweep {
            family,
            from,
            to,
            method,
            budget,
            out,
        } => {
            if from > to {
                return Err(Failure::Usage(format!("empty range {from}..={to}")));
            }
            let mut rows = Vec::new();
            for n in from..=to {
                rows.push(colour(family, n, method, budget)?.0);
            }
            let csv = report::to_csv(&rows)?;
            match out {
                Some(path) => fs::write(path, csv)?,
                None => print(&csv)?,
            }
            Ok(rows.iter().all(|r| r.valid == Some(true)))
        }
    }
}

fn print(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    let written = out.write_all(text.as_bytes()).and_then(|()| {
        if text.ends_with('\n') {
            Ok(())
        } else {
            out.write_all(b"\n")
        }
    });
    match written {
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct Listing<'a, T> {
    family: &'a str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'a str>,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct Facets {
    facets: Vec<String>,
}

#[derive(Serialize)]
struct Entry<'a> {
    facet: &'a str,
    colour: u32,
}

#[derive(Serialize)]
struct Entries<'a> {
    colouring: Vec<Entry<'a>>,
}

fn tag(family: Family, n: usize) -> Result<FamilyTag, Failure> {
    Ok(FamilyTag::new(family, n)?)
}

fn cmd_facets(family: FamilyArg, n: usize, format: Format) -> Outcome {
    let labels: Vec<String> = match family.family() {
        Some(f) => tag(f, n)?
            .facets()?
            .iter()
            .map(ToString::to_string)
            .collect(),
        None => PermAssoc::new(n)?
            .facets()?
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    let text = match format {
        Format::Text => labels.join("\n"),
        Format::Json => {
            let listing = Listing {
                family: family.name(),
                n,
                method: None,
                body: Facets { facets: labels },
            };
            serde_json::to_string_pretty(&listing).expect("listing serialises")
        }
    };
    print(&text)?;
    Ok(true)
}

fn conflict_graph(family: FamilyArg, n: usize) -> Result<ConflictGraph, Failure> {
    Ok(match family.family() {
        Some(f) => ConflictGraph::from_system(&tag(f, n)?)?,
        None => ConflictGraph::from_system(&PermAssoc::new(n)?)?,
    })
}

type Assignment = Vec<(String, u32)>;

fn colour(
    family: FamilyArg,
    n: usize,
    method: Method,
    budget: u64,
) -> Result<(Report, Assignment), Failure> {
    if method == Method::Improve && family != FamilyArg::Cyclo {
        return Err(Failure::Usage(
            "method `improve` applies to the cyclohedron only".into(),
        ));
    }
    match family.family() {
        None => {
            let system = PermAssoc::new(n)?;
            colour_system(&system, family, n, method, budget, || Ok(pa_colouring(n)?))
        }
        Some(f) => {
            let system = tag(f, n)?;
            colour_system(&system, family, n, method, budget, || {
                Ok(match (f, method) {
                    (Family::Associahedron, _) => assoc_colouring(n)?,
                    (Family::Cyclohedron, Method::Improve) => cyclo_improve_with_budget(n, budget)?,
                    (Family::Cyclohedron, _) => cyclo_colouring(n)?,
                    (Family::Permutohedron, _) => permuto_colouring(n)?,
                    (Family::Stellohedron, _) => stello_colouring(n)?,
                })
            })
        }
    }
}

fn colour_system<S: FacetSystem>(
    system: &S,
    family: FamilyArg,
    n: usize,
    method: Method,
    budget: u64,
    construct: impl FnOnce() -> Result<Colouring<S::Facet>, Failure>,
) -> Result<(Report, Assignment), Failure> {
    let mut report = Report::new(family.name(), n, method.name());
    let colouring = match method {
        Method::Paper | Method::Improve => construct()?,
        Method::Dsatur => {
            let graph = ConflictGraph::from_system(system)?;
            Colouring::new(system.facets()?, dsatur(&graph))?
        }
        Method::Exact => {
            let graph = ConflictGraph::from_system(system)?;
            let r = exact_chromatic(&graph, budget);
            report.lower = Some(r.lower);
            report.upper = Some(r.upper);
            report.optimal = Some(r.optimal);
            report.effort = Some(Effort {
                nodes: r.nodes,
                budget: r.budget,
            });
            r.colouring(system.facets()?)?
        }
    };
    let (valid, check) = if system.facet_count()? <= EXHAUSTIVE_LIMIT {
        (validate(&colouring, system)?, Check::Exhaustive)
    } else {
        (
            validate_sampled(&colouring, system, SAMPLES, 0)?,
            Check::Sampled,
        )
    };
    report.m = Some(colouring.colour_count());
    report.valid = Some(valid);
    report.check = Some(check);
    let assignment = colouring.iter().map(|(f, c)| (f.to_string(), c)).collect();
    Ok((report, assignment))
}

fn write_assignment(
    path: &PathBuf,
    report: &Report,
    assignment: &Assignment,
    format: Format,
) -> Result<(), Failure> {
    let text = match format {
        Format::Text => assignment
            .iter()
            .map(|(f, c)| format!("{f}\t{c}\n"))
            .collect::<String>(),
        Format::Json => {
            let listing = Listing {
                family: &report.family,
                n: report.n,
                method: Some(&report.method),
                body: Entries {
                    colouring: assignment
                        .iter()
                        .map(|(f, c)| Entry {
                            facet: f,
                            colour: *c,
                        })
                        .collect(),
                },
            };
            serde_json::to_string_pretty(&listing).expect("listing serialises") + "\n"
        }
    };
    fs::write(path, text)?;
    Ok(())
}
