//! Space files, the bundled corpus, and the commands behind the `acso`
//! binary. Commands return their output and exit code instead of printing,
//! so they can be driven from tests and the C interface.

mod corpus;
mod report;
mod spacefile;

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::obstruct::{
    acs_verdict, homotopy_group, obstruction_denominator, ObstructError, DEFAULT_BOUND,
};

pub use corpus::{
    check_expectations, run_builtin, run_case, run_dir, CaseResult, CorpusSummary, BUILTIN_CORPUS,
};
pub use report::{
    candidate_classes, element_text, spec_text, CandidateDoc, DegreeVerdictDoc, ReportDocument,
    VerdictDoc,
};
pub use spacefile::{
    class_spec, parse_space_file, parse_space_str, space_file_from_bundle, BundleSection,
    ClassSpec, Expectations, LoadedSpace, MapSpec, MapsSection, RelationSpec, RingSpec,
    RingsSection, SpaceFile, SCHEMA_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("field {field}: {message}")]
    Field { field: String, message: String },
    #[error(transparent)]
    Bundle(#[from] ObstructError),
    #[error("{0}")]
    Usage(String),
    #[error("{file}: {inner}")]
    InFile { file: String, inner: Box<CliError> },
}

impl CliError {
    pub(crate) fn in_file(self, path: &Path) -> CliError {
        CliError::InFile {
            file: path.display().to_string(),
            inner: Box::new(self),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// Text written to stdout together with the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub exit_code: i32,
    pub stdout: String,
}

/// Evaluates a loaded space. The bound defaults to the file's expectation,
/// then to [`DEFAULT_BOUND`].
pub fn check_loaded(loaded: &LoadedSpace, bound: Option<u64>) -> Result<ReportDocument, CliError> {
    let bound = bound
        .or_else(|| loaded.file.expectations.as_ref().and_then(|e| e.bound))
        .unwrap_or(DEFAULT_BOUND);
    let report = acs_verdict(&loaded.bundle, bound)?;
    Ok(ReportDocument::new(
        &loaded.file.name,
        &loaded.bundle,
        &report,
    ))
}

pub fn cmd_check(
    path: &Path,
    bound: Option<u64>,
    format: Format,
) -> Result<CommandOutput, CliError> {
    let loaded = parse_space_file(path)?;
    let doc = check_loaded(&loaded, bound).map_err(|e| e.in_file(path))?;
    let stdout = match format {
        Format::Text => doc.to_text(),
        Format::Json => doc.to_json(),
    };
    Ok(CommandOutput {
        exit_code: doc.exit_code,
        stdout,
    })
}

/// Lists the integral lifts of a Stiefel–Whitney class within the bound.
pub fn cmd_lifts(path: &Path, class: &str, bound: Option<u64>) -> Result<CommandOutput, CliError> {
    let loaded = parse_space_file(path)?;
    let d = &loaded.bundle;
    let i: usize = class
        .strip_prefix('w')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| CliError::Usage(format!("unknown class {class:?}; expected w<i>")))?;
    let w = d
        .w(i)
        .map_err(|_| CliError::Usage(format!("{class} lies above the cutoff {}", d.cutoff())))?;
    let bound = bound.unwrap_or(DEFAULT_BOUND);
    let search = d
        .rings()
        .integral_lifts(w, bound)
        .map_err(ObstructError::from)?;
    let mut out = String::new();
    let _ = writeln!(out, "{class} = {}", element_text(d, w));
    if search.unsolvable {
        let name = if i.is_multiple_of(2) {
            format!("W{}", i + 1)
        } else {
            format!("beta({class})")
        };
        let _ = writeln!(out, "no integral lift ({name} != 0)");
    } else {
        let _ = writeln!(
            out,
            "{} integral lifts with free coefficients in [-{bound}, {bound}]:",
            search.lifts.len()
        );
        for x in &search.lifts {
            let _ = writeln!(out, "  {}", element_text(d, x));
        }
    }
    Ok(CommandOutput {
        exit_code: 0,
        stdout: out,
    })
}

pub fn cmd_table_pi(n: u64, q: u64) -> Result<CommandOutput, CliError> {
    let g = homotopy_group(n, q)?;
    Ok(CommandOutput {
        exit_code: 0,
        stdout: format!("{g}\n"),
    })
}

pub fn cmd_table_denominator(k: u64) -> Result<CommandOutput, CliError> {
    let ell = obstruction_denominator(k)?;
    Ok(CommandOutput {
        exit_code: 0,
        stdout: format!("{ell}\n"),
    })
}

/// Runs the bundled corpus, or every file in `dir` when given.
pub fn cmd_corpus(dir: Option<&Path>, format: Format) -> Result<CommandOutput, CliError> {
    let summary = match dir {
        Some(dir) => run_dir(dir)?,
        None => run_builtin(),
    };
    let stdout = match format {
        Format::Text => summary.to_text(),
        Format::Json => summary.to_json(),
    };
    Ok(CommandOutput {
        exit_code: summary.exit_code(),
        stdout,
    })
}
