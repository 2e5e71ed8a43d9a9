use serde::Serialize;

/// Three-valued answer for questions that are undecidable in general.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

/// Structured witness attached to every verdict. A Yes/No always carries
/// evidence that an independent routine can re-check; Unknown records why the
/// bounded machinery gave up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Named object is terminal in the category under test.
    TerminalObject { object: String },
    /// Named object is initial.
    InitialObject { object: String },
    /// The identity is interval-homotopic to a constant.
    Contractible,
    /// The category under test is empty.
    EmptyCategory,
    /// Component counts that agree or disagree.
    ComponentCount { left: usize, right: usize },
    /// Presentations are identical after deterministic simplification.
    SyntacticIdentity,
    /// Both sides enumerated to finite groups; orders and whether a
    /// multiplication-table isomorphism was found.
    CosetEnumeration { left_order: usize, right_order: usize, iso_found: bool },
    /// Abelianization invariant factors (0 encodes a free Z factor).
    AbelianizationInvariants { left: Vec<String>, right: Vec<String> },
    /// A coset enumeration ran out of budget.
    BudgetExhausted { budget: u64 },
    /// An exhaustive search ran over its cap.
    SearchCapped { context: String },
    /// Reduced homology is nonzero in the given degree.
    HomologyNonzero { degree: usize, betti: usize, torsion: Vec<String> },
    /// Homology vanished through the validity bound but that is not
    /// conclusive for the localizer under test.
    TruncationInconclusive { valid_through: usize },
    /// Functor failed to be essentially surjective or fully faithful;
    /// carries the offending objects.
    NotEquivalence { reason: String },
    /// Exhaustively checked equivalence of finite groupoids.
    ExhaustiveEquivalence,
    /// Verdict for a conjunction of named sub-checks.
    Conjunction { parts: Vec<(String, Answer)> },
    /// A named sub-check failed or was inconclusive; carries its verdict.
    Component { name: String, verdict: Box<Verdict> },
    /// Free-form note for verdicts whose substance is in the answer itself.
    Note { text: String },
}

/// A three-valued answer with machine-checkable evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub answer: Answer,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn yes(evidence: Evidence) -> Verdict {
        Verdict { answer: Answer::Yes, evidence }
    }

    pub fn no(evidence: Evidence) -> Verdict {
        Verdict { answer: Answer::No, evidence }
    }

    pub fn unknown(evidence: Evidence) -> Verdict {
        Verdict { answer: Answer::Unknown, evidence }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }

    pub fn is_no(&self) -> bool {
        self.answer == Answer::No
    }

    pub fn is_unknown(&self) -> bool {
        self.answer == Answer::Unknown
    }

    /// Three-valued conjunction over named parts: No dominates, then Unknown.
    /// The No (or first Unknown) witness is surfaced as evidence.
    pub fn all(parts: Vec<(String, Verdict)>) -> Verdict {
        if let Some((name, v)) = parts.iter().find(|(_, v)| v.is_no()) {
            return Verdict::no(Evidence::Component {
                name: name.clone(),
                verdict: Box::new(v.clone()),
            });
        }
        if let Some((name, v)) = parts.iter().find(|(_, v)| v.is_unknown()) {
            return Verdict::unknown(Evidence::Component {
                name: name.clone(),
                verdict: Box::new(v.clone()),
            });
        }
        Verdict::yes(Evidence::Conjunction {
            parts: parts.into_iter().map(|(n, v)| (n, v.answer)).collect(),
        })
    }
}
