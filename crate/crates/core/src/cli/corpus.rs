use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::report::ReportDocument;
use super::spacefile::{parse_space_str, Expectations};
use super::CliError;
use crate::obstruct::{acs_verdict, DEFAULT_BOUND};

/// The bundled example spaces as `(file name, contents)`, in file-name order.
pub const BUILTIN_CORPUS: &[(&str, &str)] = &[
    ("cp2.json", include_str!("../../corpus/cp2.json")),
    ("cp2bar.json", include_str!("../../corpus/cp2bar.json")),
    ("cp4.json", include_str!("../../corpus/cp4.json")),
    ("hp2.json", include_str!("../../corpus/hp2.json")),
    ("s1xwu.json", include_str!("../../corpus/s1xwu.json")),
    ("s2xs4.json", include_str!("../../corpus/s2xs4.json")),
    ("s4.json", include_str!("../../corpus/s4.json")),
    ("s6.json", include_str!("../../corpus/s6.json")),
    ("s8.json", include_str!("../../corpus/s8.json")),
    ("s8_rank6.json", include_str!("../../corpus/s8_rank6.json")),
];

/// Outcome of one corpus file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseResult {
    pub file: String,
    pub name: String,
    pub passed: bool,
    pub conclusion: Option<String>,
    pub exit_code: Option<i32>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub cases: Vec<CaseResult>,
    pub total: usize,
    pub failed: usize,
}

impl CorpusSummary {
    pub fn exit_code(&self) -> i32 {
        if self.failed == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            let conclusion = c.conclusion.as_deref().unwrap_or("error");
            let _ = writeln!(out, "{tag}  {:<16} {conclusion}", c.file);
            for m in &c.mismatches {
                let _ = writeln!(out, "      {m}");
            }
        }
        let _ = writeln!(out, "{} cases, {} failed", self.total, self.failed);
        out
    }
}

/// Compares a report against the expectations of its file.
pub fn check_expectations(doc: &ReportDocument, exp: &Expectations) -> Vec<String> {
    let mut out = Vec::new();
    let mut cmp = |what: &str, want: String, got: String| {
        if want != got {
            out.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    let show = |s: Option<crate::obstruct::Status>| s.map_or("none".to_string(), |s| s.to_string());
    if let Some(x) = exp.exit_code {
        cmp("exit_code", x.to_string(), doc.exit_code.to_string());
    }
    if let Some(x) = exp.conclusion {
        cmp(
            "conclusion",
            format!("{x:?}"),
            format!("{:?}", doc.conclusion),
        );
    }
    if let Some(x) = exp.first {
        cmp("first", x.to_string(), doc.first.status.to_string());
    }
    if let Some(x) = exp.ehresmann_w7 {
        cmp(
            "ehresmann_w7",
            x.to_string(),
            show(doc.ehresmann_w7.as_ref().map(|v| v.status)),
        );
    }
    for (k, want) in &exp.theorem1 {
        let got = doc
            .theorem1
            .iter()
            .find(|t| t.k.to_string() == *k)
            .map(|t| t.verdict.status);
        cmp(&format!("theorem1[{k}]"), want.to_string(), show(got));
    }
    if let Some(x) = exp.final_status {
        cmp(
            "final",
            x.to_string(),
            show(doc.final_verdict.as_ref().map(|v| v.status)),
        );
    }
    if let Some(x) = &exp.vanishing_candidates {
        let want = serde_json::to_string(x).unwrap_or_default();
        let got = serde_json::to_string(&doc.vanishing_candidates).unwrap_or_default();
        cmp("vanishing_candidates", want, got);
    }
    if let Some(x) = &exp.euler_pairing {
        cmp(
            "euler_pairing",
            x.clone(),
            doc.euler_pairing.clone().unwrap_or_else(|| "none".into()),
        );
    }
    for needle in &exp.notes {
        let found = doc.notes.iter().any(|n| n.contains(needle.as_str()))
            || doc
                .final_verdict
                .as_ref()
                .is_some_and(|v| v.note.contains(needle.as_str()));
        if !found {
            out.push(format!("notes: missing {needle:?}"));
        }
    }
    out
}

/// Parses, evaluates and checks one file.
pub fn run_case(file: &str, text: &str) -> CaseResult {
    let fail = |name: String, m: String| CaseResult {
        file: file.to_string(),
        name,
        passed: false,
        conclusion: None,
        exit_code: None,
        mismatches: vec![m],
    };
    let loaded = match parse_space_str(text) {
        Ok(l) => l,
        Err(e) => return fail(file.to_string(), e.to_string()),
    };
    let exp = loaded.file.expectations.clone().unwrap_or_default();
    let bound = exp.bound.unwrap_or(DEFAULT_BOUND);
    let report = match acs_verdict(&loaded.bundle, bound) {
        Ok(r) => r,
        Err(e) => return fail(loaded.file.name.clone(), e.to_string()),
    };
    let doc = ReportDocument::new(&loaded.file.name, &loaded.bundle, &report);
    let mismatches = check_expectations(&doc, &exp);
    CaseResult {
        file: file.to_string(),
        name: loaded.file.name,
        passed: mismatches.is_empty(),
        conclusion: Some(doc.conclusion.to_string()),
        exit_code: Some(doc.exit_code),
        mismatches,
    }
}

fn summarize(cases: Vec<CaseResult>) -> CorpusSummary {
    let failed = cases.iter().filter(|c| !c.passed).count();
    CorpusSummary {
        total: cases.len(),
        failed,
        cases,
    }
}

pub fn run_builtin() -> CorpusSummary {
    summarize(BUILTIN_CORPUS.iter().map(|(f, t)| run_case(f, t)).collect())
}

/// Runs every `*.json` file in `dir`, in file-name order.
pub fn run_dir(dir: &Path) -> Result<CorpusSummary, CliError> {
    let entries =
        std::fs::read_dir(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::Io(e.to_string()))?.path();
        if path.extension().is_some_and(|e| e == "json") && path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    let mut cases = Vec::new();
    for path in files {
        let file = path
            .file_name()
            .map(|f| f.to_string_lossy().into_owned())
            .unwrap_or_default();
        let case = match std::fs::read_to_string(&path) {
            Ok(text) => run_case(&file, &text),
            Err(e) => CaseResult {
                name: file.clone(),
                file,
                passed: false,
                conclusion: None,
                exit_code: None,
                mismatches: vec![e.to_string()],
            },
        };
        cases.push(case);
    }
    Ok(summarize(cases))
}
