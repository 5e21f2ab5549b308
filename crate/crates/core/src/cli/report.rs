use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::spacefile::{class_spec, ClassSpec};
use crate::gradedring::RingElement;
use crate::obstruct::{BundleData, ChernCandidate, Conclusion, ObstructionReport, Status, Verdict};

pub const REPORT_VERSION: u32 = 1;

/// Machine form of an [`ObstructionReport`], with classes written out by
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub space: String,
    pub rank: usize,
    pub base_dimension: Option<usize>,
    pub bound: u64,
    pub conclusion: Conclusion,
    pub exit_code: i32,
    pub first: VerdictDoc,
    pub ehresmann_w7: Option<VerdictDoc>,
    pub theorem1: Vec<DegreeVerdictDoc>,
    #[serde(rename = "final")]
    pub final_verdict: Option<VerdictDoc>,
    pub euler_pairing: Option<String>,
    pub searched_candidates: usize,
    pub candidates: Vec<CandidateDoc>,
    pub vanishing_candidates: Vec<BTreeMap<String, ClassSpec>>,
    pub checked_degrees: Vec<usize>,
    pub unchecked_degrees: Vec<usize>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDoc {
    pub label: String,
    pub degree: usize,
    pub status: Status,
    pub witness: Option<ClassSpec>,
    pub witness_pairing: Option<String>,
    pub denominator: Option<String>,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeVerdictDoc {
    pub k: usize,
    pub verdict: VerdictDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateDoc {
    pub classes: BTreeMap<String, ClassSpec>,
    pub q: ClassSpec,
    pub q_pairing: Option<String>,
    pub status: Status,
}

fn verdict_doc(d: &BundleData, label: String, v: &Verdict) -> VerdictDoc {
    let z = d.rings().integral();
    VerdictDoc {
        label,
        degree: v.degree,
        status: v.status,
        witness: v.witness.as_ref().map(|w| class_spec(z, w)),
        witness_pairing: v
            .witness
            .as_ref()
            .and_then(|w| d.evaluate(w))
            .map(|x| x.to_string()),
        denominator: v.denominator.as_ref().map(|x| x.to_string()),
        note: v.note.clone(),
    }
}

/// `{"c1": …, "c2": …}` without the fixed `c0` and `cn`.
pub fn candidate_classes(d: &BundleData, c: &ChernCandidate) -> BTreeMap<String, ClassSpec> {
    let z = d.rings().integral();
    let n = c.n();
    (1..n)
        .filter_map(|i| c.c(i).map(|x| (format!("c{i}"), class_spec(z, x))))
        .collect()
}

fn final_label(d: &BundleData, r: &ObstructionReport) -> String {
    match d.rank() {
        6 if r.base_dimension.is_some_and(|b| b <= 6) => {
            "W3 (sole obstruction, dimension <= 6)".into()
        }
        4 => "p1 - c1^2 + 2e = 4o".into(),
        6 => "-2c1c3 + c2^2 - p2 = 4o".into(),
        rank => format!("sum (-1)^i c_i c_j - (-1)^k p_k = 4o (k={})", rank / 4),
    }
}

impl ReportDocument {
    pub fn new(space: &str, d: &BundleData, r: &ObstructionReport) -> ReportDocument {
        ReportDocument {
            schema_version: REPORT_VERSION,
            space: space.to_string(),
            rank: r.rank,
            base_dimension: r.base_dimension,
            bound: r.bound,
            conclusion: r.conclusion,
            exit_code: r.exit_code(),
            first: verdict_doc(d, "W3".into(), &r.first),
            ehresmann_w7: r
                .ehresmann_w7
                .as_ref()
                .map(|v| verdict_doc(d, "W7 (Ehresmann)".into(), v)),
            theorem1: r
                .theorem1
                .iter()
                .map(|(k, v)| {
                    let ell = v
                        .denominator
                        .as_ref()
                        .map(|x| x.to_string())
                        .unwrap_or_default();
                    DegreeVerdictDoc {
                        k: *k,
                        verdict: verdict_doc(d, format!("W{} = {ell}*o (k={k})", 4 * k + 3), v),
                    }
                })
                .collect(),
            final_verdict: r
                .final_verdict
                .as_ref()
                .map(|v| verdict_doc(d, final_label(d, r), v)),
            euler_pairing: d.evaluate(d.euler()).map(|x| x.to_string()),
            searched_candidates: r.searched_candidates,
            candidates: r
                .candidates
                .iter()
                .map(|c| CandidateDoc {
                    classes: candidate_classes(d, &c.candidate),
                    q: class_spec(d.rings().integral(), &c.q),
                    q_pairing: c.q_pairing.as_ref().map(|x| x.to_string()),
                    status: c.verdict.status,
                })
                .collect(),
            vanishing_candidates: r
                .vanishing_candidates
                .iter()
                .map(|c| candidate_classes(d, c))
                .collect(),
            checked_degrees: r.checked_degrees.clone(),
            unchecked_degrees: r.unchecked_degrees.clone(),
            notes: r.notes.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ReportDocument, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Rows in degree order, skipping the duplicate W7 row in ranks ≥ 8.
    fn rows(&self) -> Vec<&VerdictDoc> {
        let mut rows = vec![&self.first];
        if self.theorem1.is_empty() {
            rows.extend(self.ehresmann_w7.iter());
        }
        rows.extend(self.theorem1.iter().map(|t| &t.verdict));
        if let Some(f) = &self.final_verdict {
            if f.degree != 3 {
                rows.push(f);
            }
        }
        rows
    }

    /// Human form: one table row per obstruction.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let base = self
            .base_dimension
            .map_or("unknown".to_string(), |b| b.to_string());
        let _ = writeln!(
            out,
            "{} (rank {}, base dimension {base})",
            self.space, self.rank
        );
        let rows = self.rows();
        let width = rows
            .iter()
            .map(|r| r.label.len())
            .max()
            .unwrap_or(0)
            .max(11);
        let _ = writeln!(
            out,
            "{:<7} {:<width$}  {:<5} {:<13} witness",
            "degree", "obstruction", "l", "verdict"
        );
        for r in rows {
            let witness = match (&r.witness, &r.witness_pairing) {
                (None, _) => "-".to_string(),
                (Some(w), None) => spec_text(w),
                (Some(w), Some(p)) => format!("{} (pairs to {p})", spec_text(w)),
            };
            let ell = r.denominator.as_deref().unwrap_or("-");
            let _ = writeln!(
                out,
                "{:<7} {:<width$}  {:<5} {:<13} {witness}",
                r.degree,
                r.label,
                ell,
                r.status.to_string()
            );
        }
        if self.searched_candidates > 0 {
            let list: Vec<String> = self
                .vanishing_candidates
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|(k, v)| format!("{k} = {}", spec_text(v)))
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .map(|s| {
                    if s.is_empty() {
                        "(no free classes)".to_string()
                    } else {
                        s
                    }
                })
                .collect();
            let shown = if list.is_empty() {
                "none".to_string()
            } else {
                list.join("; ")
            };
            let _ = writeln!(
                out,
                "vanishing candidates ({} of {} searched, bound {}): {shown}",
                self.vanishing_candidates.len(),
                self.searched_candidates,
                self.bound
            );
        }
        let degrees = |v: &[usize]| {
            v.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(out, "checked degrees: {}", degrees(&self.checked_degrees));
        if !self.unchecked_degrees.is_empty() {
            let _ = writeln!(
                out,
                "unchecked degrees: {}",
                degrees(&self.unchecked_degrees)
            );
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(out, "conclusion: {}", self.conclusion);
        out
    }
}

/// `3*alpha^2 - t*W` style rendering of a class spec.
pub fn spec_text(spec: &ClassSpec) -> String {
    if spec.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = spec
        .iter()
        .map(|(m, c)| match (c.as_str(), m.as_str()) {
            (c, "1") => c.to_string(),
            ("1", m) => m.to_string(),
            ("-1", m) => format!("-{m}"),
            (c, m) => format!("{c}*{m}"),
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

/// Renders a ring element through [`spec_text`].
pub fn element_text(d: &BundleData, x: &RingElement) -> String {
    spec_text(&class_spec(d.rings().ring(x.ring()), x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_text() {
        let spec: ClassSpec = [
            ("alpha^2".to_string(), "-1".to_string()),
            ("t*W".to_string(), "3".to_string()),
        ]
        .into_iter()
        .collect();
        assert_eq!(spec_text(&spec), "-alpha^2 + 3*t*W");
        assert_eq!(spec_text(&ClassSpec::new()), "0");
        let unit: ClassSpec = [("1".to_string(), "-2".to_string())].into_iter().collect();
        assert_eq!(spec_text(&unit), "-2");
        let two: ClassSpec = [
            ("a".to_string(), "1".to_string()),
            ("b".to_string(), "-4".to_string()),
        ]
        .into_iter()
        .collect();
        assert_eq!(spec_text(&two), "a - 4*b");
    }
}
