//! `flagquot`: verification runner and report generator.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flagquot::cremona::weyl_cremona;
use flagquot::quotfan::ChartSubfan;
use flagquot::verify::{self, Check, Group};
use flagquot::weylc2::WeylElt;

use render::Artifact;

#[derive(Parser)]
#[command(name = "flagquot", version, about = "Exact checks for the torus quotient of the C2 flag variety")]
struct Cli {
    /// Omit timing fields so that output is byte-stable.
    #[arg(long, global = true)]
    stable: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a group of checks (or all of them).
    Verify {
        #[arg(value_enum)]
        group: VerifyGroup,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one of the tables.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Print a fan with its cone types.
    Fan {
        #[command(subcommand)]
        which: FanKind,
    },
    /// Plane Cremona maps.
    Map {
        #[command(subcommand)]
        which: MapKind,
    },
    /// Full report with every table and check.
    Emit {
        #[arg(value_enum)]
        format: EmitFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyGroup {
    All,
    Weyl,
    Fans,
    Subdivisions,
    Toric,
    Table,
    Relations,
    Mori,
    Nef,
    Antican,
    Quadrics,
    Aut,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Md,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Intersections,
    Coordinates,
    Form,
    MoriFaces,
    NefGens,
}

#[derive(Subcommand)]
enum FanKind {
    Quotient {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Xe {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Octagon {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    Subfan {
        #[arg(value_parser = ["p", "pprime", "circ"])]
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum MapKind {
    /// The Cremona map of a Weyl word such as `r1r2` or `121`.
    Weyl {
        word: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmitFormat {
    Json,
    Md,
}

enum Failure {
    Checks,
    Usage(String),
    Runtime(String),
}

impl From<flagquot::Error> for Failure {
    fn from(e: flagquot::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

fn group_of(g: VerifyGroup) -> Option<Group> {
    Some(match g {
        VerifyGroup::All => return None,
        VerifyGroup::Weyl => Group::Weyl,
        VerifyGroup::Fans => Group::Fans,
        VerifyGroup::Subdivisions => Group::Subdivisions,
        VerifyGroup::Toric => Group::Toric,
        VerifyGroup::Table => Group::Table,
        VerifyGroup::Relations => Group::Relations,
        VerifyGroup::Mori => Group::Mori,
        VerifyGroup::Nef => Group::Nef,
        VerifyGroup::Antican => Group::Antican,
        VerifyGroup::Quadrics => Group::Quadrics,
        VerifyGroup::Aut => Group::Aut,
    })
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize") + "\n"
}

fn show(a: Artifact, format: Format) -> String {
    match format {
        Format::Json => json_text(&a.json),
        Format::Text | Format::Md => a.text,
    }
}

fn run_checks(group: Option<Group>, stable: bool) -> Vec<Check> {
    let checks = match group {
        Some(g) => verify::run(g),
        None => verify::all(),
    };
    if stable {
        checks.into_iter().map(Check::stable).collect()
    } else {
        checks
    }
}

fn execute(cli: Cli) -> Result<String, Failure> {
    let out = match cli.command {
        Command::Verify { group, format } => {
            let checks = run_checks(group_of(group), cli.stable);
            let text = match format {
                Format::Json => json_text(&render::verify_json(&checks)),
                Format::Text | Format::Md => render::verify_text(&checks),
            };
            print!("{text}");
            return if checks.iter().all(|c| c.pass) { Ok(String::new()) } else { Err(Failure::Checks) };
        }
        Command::Table { which, format } => {
            let a = match which {
                TableKind::Intersections => render::intersections(),
                TableKind::Coordinates => render::coordinates(),
                TableKind::Form => render::form(),
                TableKind::MoriFaces => render::mori_faces()?,
                TableKind::NefGens => render::nef_gens(),
            };
            show(a, format)
        }
        Command::Fan { which } => match which {
            FanKind::Quotient { format } => show(render::fan_quotient()?, format),
            FanKind::Xe { format } => show(render::fan_xe()?, format),
            FanKind::Octagon { format } => show(render::fan_octagon()?, format),
            FanKind::Subfan { name, format } => {
                let c: ChartSubfan = name.parse().map_err(|e: flagquot::Error| Failure::Usage(e.to_string()))?;
                show(render::fan_subfan(c)?, format)
            }
        },
        Command::Map { which: MapKind::Weyl { word, format } } => {
            let w: WeylElt = word.parse().map_err(|e: flagquot::Error| Failure::Usage(e.to_string()))?;
            show(render::map(&w.name(), &weyl_cremona(&w))?, format)
        }
        Command::Emit { format, out } => {
            let checks = run_checks(None, cli.stable);
            let (md, json) = render::emit(&checks)?;
            let text = match format {
                EmitFormat::Md => md,
                EmitFormat::Json => json_text(&json),
            };
            let failed = checks.iter().any(|c| !c.pass);
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?
                }
                None => print!("{text}"),
            }
            return if failed { Err(Failure::Checks) } else { Ok(String::new()) };
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
