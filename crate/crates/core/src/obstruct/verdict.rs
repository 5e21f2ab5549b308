use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::gradedring::RingElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Zero,
    NonZero,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Zero => "Zero",
            Status::NonZero => "NonZero",
            Status::Inconclusive => "Inconclusive",
        })
    }
}

/// The verdict on one obstruction class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    /// Degree of the obstruction class.
    pub degree: usize,
    /// Nonzero for `NonZero` verdicts, sign-normalized.
    pub witness: Option<RingElement>,
    /// The known multiple is `denominator · o`.
    pub denominator: Option<BigInt>,
    pub note: String,
}

impl Verdict {
    pub fn with_note(mut self, extra: &str) -> Verdict {
        if self.note.is_empty() {
            self.note = extra.to_string();
        } else {
            self.note = format!("{}; {extra}", self.note);
        }
        self
    }
}

/// Candidate Chern classes `c_1 … c_{n-1}` of a reduction to U(n) over a
/// skeleton, with `c_0 = 1` and `c_n` the Euler class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernCandidate {
    /// `classes[i] = c_i` for `0 ≤ i ≤ n`.
    pub classes: Vec<RingElement>,
}

impl ChernCandidate {
    /// `c_i`, or `None` past `c_n`.
    pub fn c(&self, i: usize) -> Option<&RingElement> {
        self.classes.get(i)
    }

    /// Half the rank.
    pub fn n(&self) -> usize {
        self.classes.len() - 1
    }
}

/// One evaluated candidate of a lift search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateResult {
    pub candidate: ChernCandidate,
    /// The class equal to 4·o.
    pub q: RingElement,
    pub q_pairing: Option<BigInt>,
    /// All o with 4·o = q.
    pub solutions: Vec<RingElement>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Conclusion {
    /// Every obstruction up to the base dimension was checked and vanishes.
    Admits,
    Obstructed,
    /// Some checked obstruction could not be decided.
    Inconclusive,
    /// Nothing checked is nonzero, but not every degree could be checked.
    NoObstructionDetected,
}

impl Conclusion {
    pub fn exit_code(self) -> i32 {
        match self {
            Conclusion::Admits | Conclusion::NoObstructionDetected => 0,
            Conclusion::Obstructed => 2,
            Conclusion::Inconclusive => 3,
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Admits => "admits",
            Conclusion::Obstructed => "obstructed",
            Conclusion::Inconclusive => "inconclusive",
            Conclusion::NoObstructionDetected => "no obstruction detected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    pub rank: usize,
    pub base_dimension: Option<usize>,
    pub bound: u64,
    /// W₃.
    pub first: Verdict,
    pub ehresmann_w7: Option<Verdict>,
    /// `(k, verdict)` for the degree-(4k+3) obstructions.
    pub theorem1: Vec<(usize, Verdict)>,
    /// The top obstruction selected by rank and dimension.
    pub final_verdict: Option<Verdict>,
    pub searched_candidates: usize,
    pub candidates: Vec<CandidateResult>,
    pub vanishing_candidates: Vec<ChernCandidate>,
    pub checked_degrees: Vec<usize>,
    /// Degrees up to the base dimension whose obstruction group may be
    /// nonzero but which no verdict covers.
    pub unchecked_degrees: Vec<usize>,
    pub notes: Vec<String>,
    pub conclusion: Conclusion,
}

impl ObstructionReport {
    pub fn exit_code(&self) -> i32 {
        self.conclusion.exit_code()
    }

    /// Every verdict in the report, lowest degree first.
    pub fn verdicts(&self) -> Vec<&Verdict> {
        let mut all = vec![&self.first];
        all.extend(self.ehresmann_w7.iter());
        all.extend(self.theorem1.iter().map(|(_, v)| v));
        all.extend(self.final_verdict.iter());
        all
    }
}
