use std::fs;
use std::path::{Path, PathBuf};

use lefschetz::chart::{self, ChartError};
use lefschetz::corpus::{manifest, Example};
use lefschetz::hurwitz::{self, Direction, InvariantReport, MonodromyData};
use lefschetz::io::{parse_chart, parse_monodromy, to_canonical_json, FormatError};
use lefschetz::{Genus, LefschetzError};
use serde_json::json;
use sphere_braid::{comb, dirac_class, to_pure_generators, BraidError, BraidWord};
use thiserror::Error;

use crate::args::{ChartAction, Command, ExampleAction, ExportArgs, MoveKind, Side};

pub const SUCCESS: u8 = 0;
pub const NEGATIVE: u8 = 1;
pub const INVALID_INPUT: u8 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    System(#[from] LefschetzError),
    #[error(transparent)]
    Chart(#[from] ChartError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            Self::Io { .. } => "io",
            Self::Format { .. } => "format",
            Self::System(_) => "system",
            Self::Chart(_) => "chart",
            Self::Braid(_) => "braid",
            Self::Usage(_) => "usage",
        }
    }

    /// One-line JSON object for stderr.
    pub fn diagnostic(&self) -> String {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } }).to_string()
    }
}

pub struct Output {
    pub stdout: String,
    pub code: u8,
    pub warning: Option<String>,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            code: SUCCESS,
            warning: None,
        }
    }

    fn decision(stdout: String, yes: bool) -> Self {
        Self {
            stdout,
            code: if yes { SUCCESS } else { NEGATIVE },
            warning: None,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load(path: &Path) -> Result<MonodromyData, CliError> {
    parse_monodromy(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn load_chart(path: &Path) -> Result<chart::Chart, CliError> {
    parse_chart(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn render_report(r: &InvariantReport) -> String {
    let mut s = format!(
        "fiber genus {}, base genus {}\n",
        r.fiber_genus.get(),
        r.base_genus
    );
    s += &format!("n={} (n0+={}, n0-={}", r.n, r.n0_plus, r.n0_minus);
    for c in &r.chains {
        s += &format!(", n{h}+={}, n{h}-={}", c.plus, c.minus, h = c.h);
    }
    s += &format!(")\nchi={}\nsigma={}\nw={}", r.chi, r.sigma, r.w.value);
    if !r.w.invariant_for_this_genus {
        s += " (not an invariant for even fiber genus)";
    }
    s.push('\n');
    s
}

pub fn dispatch(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Validate { file } => {
            let report = hurwitz::validate(&load(&file)?)?;
            Ok(Output::decision(
                to_canonical_json(&report),
                report.is_valid(),
            ))
        }
        Command::Invariants { file, json } => {
            let report = hurwitz::invariants(&load(&file)?)?;
            Ok(Output::ok(if json {
                to_canonical_json(&report)
            } else {
                render_report(&report)
            }))
        }
        Command::W { file } => {
            let w = hurwitz::w_invariant(&load(&file)?)?;
            let warning = (!w.invariant_for_this_genus)
                .then(|| "fiber genus is even; w is not an isomorphism invariant here".to_string());
            Ok(Output {
                stdout: format!("{}\n", w.value),
                code: SUCCESS,
                warning,
            })
        }
        Command::Compare {
            stable: _,
            first,
            second,
            json,
        } => {
            let d = hurwitz::stably_isomorphic(&load(&first)?, &load(&second)?)?;
            let text = if json {
                to_canonical_json(&d)
            } else {
                format!("{d}\n")
            };
            Ok(Output::decision(text, d.stably_isomorphic))
        }
        Command::Move {
            kind: MoveKind::Slide { at, dir, file },
        } => {
            let dir = match dir {
                Side::Left => Direction::Left,
                Side::Right => Direction::Right,
            };
            Ok(Output::ok(to_canonical_json(
                &hurwitz::elementary_transformation(&load(&file)?, at, dir)?,
            )))
        }
        Command::Conjugate { word, file } => Ok(Output::ok(to_canonical_json(
            &hurwitz::simultaneous_conjugate(&load(&file)?, &word.0)?,
        ))),
        Command::Fibersum {
            first,
            second,
            twist,
        } => Ok(Output::ok(to_canonical_json(&hurwitz::fiber_sum(
            &load(&first)?,
            &load(&second)?,
            &twist.0,
        )?))),
        Command::Stabilize { times, file } => Ok(Output::ok(to_canonical_json(
            &hurwitz::stabilize(&load(&file)?, times)?,
        ))),
        Command::Comb { strands, word } => {
            let b = BraidWord::new(strands, word.0)?;
            let class = dirac_class(&b);
            let combed = match to_pure_generators(&b) {
                Ok(p) => Some(comb(&p)?),
                Err(BraidError::NotPure) => None,
                Err(e) => return Err(e.into()),
            };
            let out = json!({ "combed": combed, "dirac_class": class, "permutation": b.permutation().to_string() });
            Ok(Output::ok(to_canonical_json(&out)))
        }
        Command::Chart {
            action: ChartAction::Validate { file },
        } => {
            let report = chart::validate_chart(&load_chart(&file)?)?;
            Ok(Output::decision(to_canonical_json(&report), report.valid))
        }
        Command::Chart {
            action: ChartAction::Counts { file },
        } => {
            let c = load_chart(&file)?;
            let counts = chart::counts(&c)?;
            let out = json!({ "counts": counts, "degree_sum_check": chart::degree_sum_check(&c) });
            Ok(Output::ok(to_canonical_json(&out)))
        }
        Command::Examples {
            action: ExampleAction::Export(a),
        } => {
            let e: Example = a.name.parse()?;
            Ok(Output::ok(to_canonical_json(
                &e.build(Genus::new(a.genus)?)?,
            )))
        }
        Command::Examples {
            action: ExampleAction::Chart(a),
        } => Ok(Output::ok(to_canonical_json(&example_chart(&a)?))),
        Command::Examples {
            action: ExampleAction::Manifest,
        } => Ok(Output::ok(to_canonical_json(&manifest()))),
    }
}

fn example_chart(a: &ExportArgs) -> Result<chart::Chart, CliError> {
    let g = Genus::new(a.genus)?;
    let index = || {
        a.index
            .ok_or_else(|| CliError::Usage(format!("chart {} needs --index", a.name)))
    };
    Ok(match a.name.to_ascii_lowercase().as_str() {
        "gamma0" => chart::gamma0_chart(g),
        "r3" => chart::r3_chart(g),
        "r4" => chart::r4_chart(g),
        "l0" => chart::l0_chart(g, index()?)?,
        "l" | "lh" => chart::lh_chart(g, index()?)?,
        _ => return Err(CliError::Usage(format!("unknown chart {:?}", a.name))),
    })
}
