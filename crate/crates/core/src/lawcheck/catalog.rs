use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Stable identifiers for every law in the catalog.
///
/// The first block are the laws as stated; the last three are deliberately
/// weakened variants whose hypotheses are too weak, kept to show empirically
/// that the dropped hypothesis is needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq6,
    T2_1,
    P2_1,
    C2_1,
    L2_1,
    T2_2,
    T2_3a,
    T2_3b,
    P2_2a,
    P2_2b,
    T2_4a,
    T2_4b,
    T3_1a,
    T3_1b,
    T3_2_1,
    T3_2_2,
    T3_2_3,
    T3_2_4,
    T3_3Sufficient,
    T3_3Necessary,
    T3_4a,
    T3_4b,
    /// `T3.3⇒` with only predecessor-consistency assumed.
    T3_3PredOnly,
    /// `T3.2` with no consistency assumption at all.
    T3_2Unconditional,
    /// `T3.1` with no consistency assumption.
    T3_1Unconditional,
}

/// Which parts of an [`Instance`](super::Instance) a law reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Needs {
    pub second_relation: bool,
    pub mapping: bool,
}

const R: Needs = Needs {
    second_relation: false,
    mapping: false,
};
const RQ: Needs = Needs {
    second_relation: true,
    mapping: false,
};
const RF: Needs = Needs {
    second_relation: false,
    mapping: true,
};
const RQF: Needs = Needs {
    second_relation: true,
    mapping: true,
};

impl LawId {
    pub const FULL: [LawId; 27] = [
        LawId::Eq1,
        LawId::Eq2,
        LawId::Eq3,
        LawId::Eq4,
        LawId::Eq5,
        LawId::Eq6,
        LawId::T2_1,
        LawId::P2_1,
        LawId::C2_1,
        LawId::L2_1,
        LawId::T2_2,
        LawId::T2_3a,
        LawId::T2_3b,
        LawId::P2_2a,
        LawId::P2_2b,
        LawId::T2_4a,
        LawId::T2_4b,
        LawId::T3_1a,
        LawId::T3_1b,
        LawId::T3_2_1,
        LawId::T3_2_2,
        LawId::T3_2_3,
        LawId::T3_2_4,
        LawId::T3_3Sufficient,
        LawId::T3_3Necessary,
        LawId::T3_4a,
        LawId::T3_4b,
    ];

    pub const WEAKENED: [LawId; 3] = [
        LawId::T3_3PredOnly,
        LawId::T3_2Unconditional,
        LawId::T3_1Unconditional,
    ];

    pub fn all() -> impl Iterator<Item = LawId> {
        LawId::FULL.into_iter().chain(LawId::WEAKENED)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::Eq1 => "EQ1",
            LawId::Eq2 => "EQ2",
            LawId::Eq3 => "EQ3",
            LawId::Eq4 => "EQ4",
            LawId::Eq5 => "EQ5",
            LawId::Eq6 => "EQ6",
            LawId::T2_1 => "T2.1",
            LawId::P2_1 => "P2.1",
            LawId::C2_1 => "C2.1",
            LawId::L2_1 => "L2.1",
            LawId::T2_2 => "T2.2",
            LawId::T2_3a => "T2.3a",
            LawId::T2_3b => "T2.3b",
            LawId::P2_2a => "P2.2a",
            LawId::P2_2b => "P2.2b",
            LawId::T2_4a => "T2.4a",
            LawId::T2_4b => "T2.4b",
            LawId::T3_1a => "T3.1a",
            LawId::T3_1b => "T3.1b",
            LawId::T3_2_1 => "T3.2.1",
            LawId::T3_2_2 => "T3.2.2",
            LawId::T3_2_3 => "T3.2.3",
            LawId::T3_2_4 => "T3.2.4",
            LawId::T3_3Sufficient => "T3.3⇒",
            LawId::T3_3Necessary => "T3.3⇐",
            LawId::T3_4a => "T3.4a",
            LawId::T3_4b => "T3.4b",
            LawId::T3_3PredOnly => "T3.3⇒/pred-only",
            LawId::T3_2Unconditional => "T3.2/unconditional",
            LawId::T3_1Unconditional => "T3.1/unconditional",
        }
    }

    /// ASCII spelling accepted on the command line (`=>` for `⇒`, `<=` for `⇐`).
    pub fn ascii(self) -> String {
        self.as_str().replace('⇒', "=>").replace('⇐', "<=")
    }

    /// Hypothesis and conclusion in symbols.
    pub fn statement(self) -> &'static str {
        match self {
            LawId::Eq1 => "R_p^x = (R⁻¹)_s^x",
            LawId::Eq2 => "R_s^x = (R⁻¹)_p^x",
            LawId::Eq3 => "(R ∪ Q)_p^x = R_p^x ∪ Q_p^x",
            LawId::Eq4 => "(R ∪ Q)_s^x = R_s^x ∪ Q_s^x",
            LawId::Eq5 => "(R ∩ Q)_p^x = R_p^x ∩ Q_p^x",
            LawId::Eq6 => "(R ∩ Q)_s^x = R_s^x ∩ Q_s^x",
            LawId::T2_1 => "f blockwise consistent ⇔ f pred-consistent ∧ succ-consistent",
            LawId::P2_1 => "f pred-consistent w.r.t. R ⇔ succ-consistent w.r.t. R⁻¹ (and dually)",
            LawId::C2_1 => "R symmetric ⇒ (f pred-consistent ⇔ f succ-consistent)",
            LawId::L2_1 => "R reflexive ∧ transitive ⇒ (R_p^x = R_p^y ⇔ R_s^x = R_s^y)",
            LawId::T2_2 => "R reflexive ∧ transitive ⇒ (f pred-consistent ⇔ f succ-consistent)",
            LawId::T2_3a => "f pred-consistent w.r.t. R or Q ⇒ f((R ∩ Q)_s^x) = f(R_s^x) ∩ f(Q_s^x)",
            LawId::T2_3b => "f succ-consistent w.r.t. R or Q ⇒ f((R ∩ Q)_p^x) = f(R_p^x) ∩ f(Q_p^x)",
            LawId::P2_2a => "f((R ∪ Q)_p^x) = f(R_p^x) ∪ f(Q_p^x)",
            LawId::P2_2b => "f((R ∪ Q)_s^x) = f(R_s^x) ∪ f(Q_s^x)",
            LawId::T2_4a => "f pred-consistent ⇔ ∀x f⁻¹(f(R_s^x)) = R_s^x",
            LawId::T2_4b => "f succ-consistent ⇔ ∀x f⁻¹(f(R_p^x)) = R_p^x",
            LawId::T3_1a => "R transitive ∧ f pred-consistent ⇒ f(R) transitive",
            LawId::T3_1b => "R transitive ∧ f succ-consistent ⇒ f(R) transitive",
            LawId::T3_2_1 => "f pred- and succ-consistent w.r.t. R ⇒ f(R ∩ Q) = f(R) ∩ f(Q)",
            LawId::T3_2_2 => "f pred- and succ-consistent w.r.t. Q ⇒ f(R ∩ Q) = f(R) ∩ f(Q)",
            LawId::T3_2_3 => "f pred-consistent w.r.t. R ∧ succ-consistent w.r.t. Q ⇒ f(R ∩ Q) = f(R) ∩ f(Q)",
            LawId::T3_2_4 => "f succ-consistent w.r.t. R ∧ pred-consistent w.r.t. Q ⇒ f(R ∩ Q) = f(R) ∩ f(Q)",
            LawId::T3_3Sufficient => "f pred- and succ-consistent ⇒ f⁻¹(f(R)) = R",
            LawId::T3_3Necessary => "f⁻¹(f(R)) = R ⇒ f pred- and succ-consistent",
            LawId::T3_4a => "f(R)_p^y = ⋃_{x ∈ f⁻¹(y)} f(R_p^x), and = f(R_p^x) for each such x when f is pred-consistent",
            LawId::T3_4b => "f(R)_s^y = ⋃_{x ∈ f⁻¹(y)} f(R_s^x), and = f(R_s^x) for each such x when f is succ-consistent",
            LawId::T3_3PredOnly => "f pred-consistent ⇒ f⁻¹(f(R)) = R   [too weak]",
            LawId::T3_2Unconditional => "f(R ∩ Q) = f(R) ∩ f(Q)   [too weak]",
            LawId::T3_1Unconditional => "R transitive ⇒ f(R) transitive   [too weak]",
        }
    }

    pub fn needs(self) -> Needs {
        match self {
            LawId::Eq1 | LawId::Eq2 | LawId::L2_1 => R,
            LawId::Eq3 | LawId::Eq4 | LawId::Eq5 | LawId::Eq6 => RQ,
            LawId::T2_1
            | LawId::P2_1
            | LawId::C2_1
            | LawId::T2_2
            | LawId::T2_4a
            | LawId::T2_4b
            | LawId::T3_1a
            | LawId::T3_1b
            | LawId::T3_3Sufficient
            | LawId::T3_3Necessary
            | LawId::T3_4a
            | LawId::T3_4b
            | LawId::T3_3PredOnly
            | LawId::T3_1Unconditional => RF,
            LawId::T2_3a
            | LawId::T2_3b
            | LawId::P2_2a
            | LawId::P2_2b
            | LawId::T3_2_1
            | LawId::T3_2_2
            | LawId::T3_2_3
            | LawId::T3_2_4
            | LawId::T3_2Unconditional => RQF,
        }
    }

    /// The law this one weakens, if any.
    pub fn weakens(self) -> Option<LawId> {
        match self {
            LawId::T3_3PredOnly => Some(LawId::T3_3Sufficient),
            LawId::T3_2Unconditional => Some(LawId::T3_2_1),
            LawId::T3_1Unconditional => Some(LawId::T3_1a),
            _ => None,
        }
    }

    pub fn is_weakened(self) -> bool {
        self.weakens().is_some()
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim();
        LawId::all()
            .find(|law| {
                law.as_str().eq_ignore_ascii_case(wanted)
                    || law.ascii().eq_ignore_ascii_case(wanted)
            })
            .ok_or_else(|| {
                let known: Vec<String> = LawId::all().map(LawId::ascii).collect();
                Error::Parameter(format!(
                    "unknown law `{wanted}` (known: {})",
                    known.join(", ")
                ))
            })
    }
}
