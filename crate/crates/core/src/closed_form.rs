//! Closed-form b-chromatic numbers of SVN coronas of two family members.
//!
//! Every supported `(left, right)` pair is answered by one clause of a case
//! table. Each table carries its hypothesis region explicitly, and within it
//! the clauses are meant to partition the `(n, t)` plane: `n` is the size of
//! the left operand and `t` the size of the right one (leaf count for stars).
//! Clause predicates are written out in full rather than as "otherwise" so the
//! partition can be checked mechanically; see [`clause_matches`].

// bounds are kept in the form the tables use, e.g. `n >= 2 * t + 1`
#![allow(clippy::int_plus_one)]

use std::fmt;

use thiserror::Error;

use crate::family::{FamilyKind, FamilySpec};
use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum ClosedFormError {
    #[error("operand outside the family definitions: {0}")]
    OutOfTheoremRange(#[from] GraphError),
    #[error("no closed form covers {left} ⊡ {right}")]
    Unsupported { left: FamilySpec, right: FamilySpec },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("constructed coloring failed verification and could not be repaired: {0}")]
    ConstructionInvalid(String),
}

/// Which family pair a case table answers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Table {
    PathPath,
    PathCycle,
    PathStar,
    PathComplete,
    CyclePath,
    CycleCycle,
    CycleStar,
    CycleComplete,
    StarPath,
    StarCycle,
    StarStar,
    StarComplete,
    CompletePath,
    CompleteCycle,
    CompleteStar,
    CompleteComplete,
    /// `P_n ⊡ H` for an arbitrary `H` with `n > 2|V(H)| + 3`.
    GenericPath,
    /// `C_n ⊡ H` for an arbitrary `H` with `n > 2|V(H)| + 2`.
    GenericCycle,
    /// `S_n ⊡ H` from an optimal b-coloring of `H`.
    GenericStar,
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub struct Clause {
    pub label: &'static str,
    pub applies: fn(usize, usize) -> bool,
    pub value: fn(usize, usize) -> usize,
}

pub struct CaseTable {
    pub table: Table,
    pub left: FamilyKind,
    pub right: FamilyKind,
    /// Region of `(n, t)` the table claims to cover.
    pub hypothesis: fn(usize, usize) -> bool,
    pub clauses: &'static [Clause],
}

/// Result of [`phi_closed_form`]. `value` and `branch` are absent iff the
/// pair is unsupported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiResult {
    pub value: Option<usize>,
    pub branch: Option<&'static str>,
    pub supported: bool,
    pub case: Option<CaseId>,
}

/// Identifies the clause (or generic statement) that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseId {
    pub table: Table,
    pub clause: usize,
}

impl PhiResult {
    fn unsupported() -> Self {
        Self { value: None, branch: None, supported: false, case: None }
    }

    fn of(table: Table, clause: usize, label: &'static str, value: usize) -> Self {
        Self { value: Some(value), branch: Some(label), supported: true, case: Some(CaseId { table, clause }) }
    }
}

impl fmt::Display for PhiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.value, self.branch) {
            (Some(v), Some(b)) => write!(f, "{v} ({b})"),
            _ => f.write_str("unsupported"),
        }
    }
}

const GENERIC_PATH: &str = "path-any:n>2|V(H)|+3";
const GENERIC_CYCLE: &str = "cycle-any:n>2|V(H)|+2";
const GENERIC_STAR: &str = "star-any:min{n,|V(H)|+2}+φ(H)";

fn at_least_three(n: usize, t: usize) -> bool {
    n >= 3 && t >= 3
}

fn left_three_right_one(n: usize, t: usize) -> bool {
    n >= 3 && t >= 1
}

static PATH_PATH: &[Clause] = &[
    Clause { label: "path-path:n=3,t∈{3,4}", applies: |n, t| n == 3 && t <= 4, value: |_, _| 4 },
    Clause {
        label: "path-path:n=3,t≥5 or n∈{4,5}",
        applies: |n, t| (n == 3 && t >= 5) || n == 4 || n == 5,
        value: |_, _| 5,
    },
    Clause { label: "path-path:6≤n≤2t+3", applies: |n, t| 6 <= n && n <= 2 * t + 3, value: |n, _| n - 1 },
    Clause { label: GENERIC_PATH, applies: |n, t| n > 2 * t + 3, value: |_, t| 2 * t + 3 },
];

static PATH_CYCLE: &[Clause] = &[
    Clause { label: "path-cycle:(n,t)=(3,4)", applies: |n, t| (n, t) == (3, 4), value: |_, _| 4 },
    Clause {
        label: "path-cycle:n=3,t≠4 or n∈{4,5}",
        applies: |n, t| (n == 3 && t != 4) || n == 4 || n == 5,
        value: |_, _| 5,
    },
    Clause { label: "path-cycle:6≤n≤2t+3", applies: |n, t| 6 <= n && n <= 2 * t + 3, value: |n, _| n - 1 },
    Clause { label: GENERIC_PATH, applies: |n, t| n > 2 * t + 3, value: |_, t| 2 * t + 3 },
];

// ⌈(t+4)/2⌉ == (t+5)/2 in integer division
static PATH_STAR: &[Clause] = &[
    Clause { label: "path-star:n≤(t+3)/2", applies: |n, t| 2 * n <= t + 3, value: |n, _| 2 * n - 1 },
    Clause { label: "path-star:n=⌈(t+4)/2⌉", applies: |n, t| n == (t + 5) / 2, value: |_, t| t + 2 },
    Clause {
        label: "path-star:⌈(t+4)/2⌉<n≤t+4", applies: |n, t| (t + 5) / 2 < n && n <= t + 4, value: |_, t| t + 3
    },
    Clause { label: "path-star:t+4<n≤2t+5", applies: |n, t| t + 4 < n && n <= 2 * t + 5, value: |n, _| n - 1 },
    Clause { label: GENERIC_PATH, applies: |n, t| n > 2 * t + 5, value: |_, t| 2 * t + 5 },
];

static PATH_COMPLETE: &[Clause] = &[
    Clause { label: "path-complete:n≤t+3", applies: |n, t| n <= t + 3, value: |_, t| t + 2 },
    Clause { label: "path-complete:t+3<n≤2t+3", applies: |n, t| t + 3 < n && n <= 2 * t + 3, value: |n, _| n - 1 },
    Clause { label: GENERIC_PATH, applies: |n, t| n > 2 * t + 3, value: |_, t| 2 * t + 3 },
];

static CYCLE_PATH: &[Clause] = &[
    Clause { label: "cycle-path:n∈{3,4}", applies: |n, _| n <= 4, value: |_, _| 5 },
    Clause { label: "cycle-path:5≤n≤2t+2", applies: |n, t| 5 <= n && n <= 2 * t + 2, value: |n, _| n },
    Clause { label: GENERIC_CYCLE, applies: |n, t| n > 2 * t + 2, value: |_, t| 2 * t + 3 },
];

static CYCLE_CYCLE: &[Clause] = &[
    Clause { label: "cycle-cycle:n∈{3,4}", applies: |n, _| n <= 4, value: |_, _| 5 },
    Clause { label: "cycle-cycle:5≤n≤2t+2", applies: |n, t| 5 <= n && n <= 2 * t + 2, value: |n, _| n },
    Clause { label: GENERIC_CYCLE, applies: |n, t| n > 2 * t + 2, value: |_, t| 2 * t + 3 },
];

static CYCLE_STAR: &[Clause] = &[
    Clause { label: "cycle-star:n≤⌊(t+3)/2⌋", applies: |n, t| 2 * n <= t + 3, value: |n, _| 2 * n },
    Clause {
        label: "cycle-star:⌊(t+3)/2⌋<n≤t+2", applies: |n, t| 2 * n > t + 3 && n <= t + 2, value: |_, t| t + 3
    },
    Clause { label: "cycle-star:t+3≤n≤2t+4", applies: |n, t| t + 3 <= n && n <= 2 * t + 4, value: |n, _| n },
    Clause { label: GENERIC_CYCLE, applies: |n, t| n > 2 * t + 4, value: |_, t| 2 * t + 5 },
];

static CYCLE_COMPLETE: &[Clause] = &[
    Clause { label: "cycle-complete:n≤t+1", applies: |n, t| n <= t + 1, value: |_, t| t + 2 },
    Clause { label: "cycle-complete:t+2≤n≤2t+3", applies: |n, t| t + 2 <= n && n <= 2 * t + 3, value: |n, _| n },
    Clause { label: GENERIC_CYCLE, applies: |n, t| n > 2 * t + 3, value: |_, t| 2 * t + 3 },
];

static STAR_PATH: &[Clause] = &[
    Clause { label: "star-path:t∈{3,4},n≤t+2", applies: |n, t| t <= 4 && n <= t + 2, value: |n, _| n + 2 },
    Clause { label: "star-path:t>4,n≤t+2", applies: |n, t| t > 4 && n <= t + 2, value: |n, _| n + 3 },
    Clause { label: "star-path:t∈{3,4},n>t+2", applies: |n, t| t <= 4 && n > t + 2, value: |_, t| t + 4 },
    Clause { label: "star-path:t>4,n>t+2", applies: |n, t| t > 4 && n > t + 2, value: |_, t| t + 5 },
];

static STAR_CYCLE: &[Clause] = &[
    Clause { label: "star-cycle:t=4,n≤t+2", applies: |n, t| t == 4 && n <= t + 2, value: |n, _| n + 2 },
    Clause { label: "star-cycle:t≠4,n≤t+2", applies: |n, t| t != 4 && n <= t + 2, value: |n, _| n + 3 },
    Clause { label: "star-cycle:t=4,n>t+2", applies: |n, t| t == 4 && n > t + 2, value: |_, t| t + 4 },
    Clause { label: "star-cycle:t≠4,n>t+2", applies: |n, t| t != 4 && n > t + 2, value: |_, t| t + 5 },
];

static STAR_STAR: &[Clause] = &[
    Clause { label: "star-star:n≤(t+1)/2", applies: |n, t| 2 * n <= t + 1, value: |n, _| 2 * n + 1 },
    Clause { label: "star-star:(t+1)/2<n<t", applies: |n, t| 2 * n > t + 1 && n < t, value: |_, t| t + 2 },
    Clause { label: "star-star:n≥t", applies: |n, t| n >= t, value: |n, t| usize::min(n, t + 3) + 2 },
];

static STAR_COMPLETE: &[Clause] =
    &[Clause { label: "star-complete:min{n,t+2}+t", applies: |_, _| true, value: |n, t| usize::min(n, t + 2) + t }];

static COMPLETE_PATH: &[Clause] = &[
    Clause { label: "complete-path:n=2,t=3", applies: |n, t| n == 2 && t == 3, value: |n, _| n + 1 },
    Clause { label: "complete-path:n≥7,t=3", applies: |n, t| n >= 7 && t == 3, value: |n, _| n + 1 },
    Clause { label: "complete-path:n=2,t>3", applies: |n, t| n == 2 && t > 3, value: |n, _| n + 2 },
    Clause { label: "complete-path:n∈{3,4}", applies: |n, _| n == 3 || n == 4, value: |n, _| n + 2 },
    Clause { label: "complete-path:n≥2t+1>7", applies: |n, t| n >= 2 * t + 1 && 2 * t + 1 > 7, value: |n, _| n + 2 },
];

static COMPLETE_CYCLE: &[Clause] = &[
    Clause { label: "complete-cycle:(n,t)=(2,4)", applies: |n, t| (n, t) == (2, 4), value: |n, _| n + 1 },
    Clause { label: "complete-cycle:n≥9,t=4", applies: |n, t| n >= 9 && t == 4, value: |n, _| n + 1 },
    Clause { label: "complete-cycle:n=2,t≠4", applies: |n, t| n == 2 && t != 4, value: |n, _| n + 2 },
    Clause { label: "complete-cycle:n∈{3,4}", applies: |n, _| n == 3 || n == 4, value: |n, _| n + 2 },
    Clause { label: "complete-cycle:n≥2t+1,t≠4", applies: |n, t| n >= 2 * t + 1 && t != 4, value: |n, _| n + 2 },
];

static COMPLETE_STAR: &[Clause] = &[
    Clause { label: "complete-star:n=2t+3", applies: |n, t| n == 2 * t + 3, value: |n, _| n },
    Clause { label: "complete-star:n≥2t+4", applies: |n, t| n >= 2 * t + 4, value: |n, _| n + 1 },
];

static COMPLETE_COMPLETE: &[Clause] = &[
    Clause {
        label: "complete-complete:t=1,n>4 even",
        applies: |n, t| t == 1 && n > 4 && n % 2 == 0,
        value: |n, _| n - 1,
    },
    Clause { label: "complete-complete:t=1,n odd", applies: |n, t| t == 1 && n % 2 == 1, value: |n, _| n },
    Clause {
        label: "complete-complete:(n,t)∈{(2,1),(4,1),(5,2)}",
        applies: |n, t| matches!((n, t), (2, 1) | (4, 1) | (5, 2)),
        value: |n, _| n,
    },
    Clause {
        label: "complete-complete:(n,t)∈{(2,2),(3,2)}",
        applies: |n, t| matches!((n, t), (2, 2) | (3, 2)),
        value: |n, _| n + 1,
    },
    Clause { label: "complete-complete:n≥6,t=2", applies: |n, t| n >= 6 && t == 2, value: |n, _| n + 1 },
    Clause {
        label: "complete-complete:(n,t)∈{(2,3),(3,3),(4,2),(4,3)}",
        applies: |n, t| matches!((n, t), (2, 3) | (3, 3) | (4, 2) | (4, 3)),
        value: |n, _| n + 2,
    },
    Clause { label: "complete-complete:n≥7,t=3", applies: |n, t| n >= 7 && t == 3, value: |n, _| n + 2 },
];

static TABLES: &[CaseTable] = &[
    CaseTable {
        table: Table::PathPath,
        left: FamilyKind::Path,
        right: FamilyKind::Path,
        hypothesis: at_least_three,
        clauses: PATH_PATH,
    },
    CaseTable {
        table: Table::PathCycle,
        left: FamilyKind::Path,
        right: FamilyKind::Cycle,
        hypothesis: at_least_three,
        clauses: PATH_CYCLE,
    },
    CaseTable {
        table: Table::PathStar,
        left: FamilyKind::Path,
        right: FamilyKind::Star,
        hypothesis: at_least_three,
        clauses: PATH_STAR,
    },
    CaseTable {
        table: Table::PathComplete,
        left: FamilyKind::Path,
        right: FamilyKind::Complete,
        hypothesis: left_three_right_one,
        clauses: PATH_COMPLETE,
    },
    CaseTable {
        table: Table::CyclePath,
        left: FamilyKind::Cycle,
        right: FamilyKind::Path,
        hypothesis: at_least_three,
        clauses: CYCLE_PATH,
    },
    CaseTable {
        table: Table::CycleCycle,
        left: FamilyKind::Cycle,
        right: FamilyKind::Cycle,
        hypothesis: at_least_three,
        clauses: CYCLE_CYCLE,
    },
    CaseTable {
        table: Table::CycleStar,
        left: FamilyKind::Cycle,
        right: FamilyKind::Star,
        hypothesis: at_least_three,
        clauses: CYCLE_STAR,
    },
    CaseTable {
        table: Table::CycleComplete,
        left: FamilyKind::Cycle,
        right: FamilyKind::Complete,
        hypothesis: left_three_right_one,
        clauses: CYCLE_COMPLETE,
    },
    CaseTable {
        table: Table::StarPath,
        left: FamilyKind::Star,
        right: FamilyKind::Path,
        hypothesis: at_least_three,
        clauses: STAR_PATH,
    },
    CaseTable {
        table: Table::StarCycle,
        left: FamilyKind::Star,
        right: FamilyKind::Cycle,
        hypothesis: at_least_three,
        clauses: STAR_CYCLE,
    },
    CaseTable {
        table: Table::StarStar,
        left: FamilyKind::Star,
        right: FamilyKind::Star,
        hypothesis: at_least_three,
        clauses: STAR_STAR,
    },
    CaseTable {
        table: Table::StarComplete,
        left: FamilyKind::Star,
        right: FamilyKind::Complete,
        hypothesis: left_three_right_one,
        clauses: STAR_COMPLETE,
    },
    CaseTable {
        table: Table::CompletePath,
        left: FamilyKind::Complete,
        right: FamilyKind::Path,
        hypothesis: |n, t| n >= 2 && t >= 3 && (n <= 4 || n >= 2 * t + 1),
        clauses: COMPLETE_PATH,
    },
    CaseTable {
        table: Table::CompleteCycle,
        left: FamilyKind::Complete,
        right: FamilyKind::Cycle,
        hypothesis: |n, t| n >= 2 && t >= 3 && (n <= 4 || n >= 2 * t + 1),
        clauses: COMPLETE_CYCLE,
    },
    CaseTable {
        table: Table::CompleteStar,
        left: FamilyKind::Complete,
        right: FamilyKind::Star,
        hypothesis: |n, t| t >= 3 && n >= 2 * t + 3,
        clauses: COMPLETE_STAR,
    },
    CaseTable {
        table: Table::CompleteComplete,
        left: FamilyKind::Complete,
        right: FamilyKind::Complete,
        hypothesis: |n, t| n >= 2 && (1..=3).contains(&t) && !(t == 3 && (n == 5 || n == 6)),
        clauses: COMPLETE_COMPLETE,
    },
];

/// All family-pair case tables.
pub fn case_tables() -> &'static [CaseTable] {
    TABLES
}

pub fn case_table(left: FamilyKind, right: FamilyKind) -> &'static CaseTable {
    TABLES.iter().find(|t| t.left == left && t.right == right).expect("every family pair has a table")
}

/// Indices of the clauses of `table` that apply at `(n, t)`.
pub fn clause_matches(table: &CaseTable, n: usize, t: usize) -> Vec<usize> {
    table.clauses.iter().enumerate().filter(|(_, c)| (c.applies)(n, t)).map(|(i, _)| i).collect()
}

/// φ of a base family member. Defined for every valid spec; `Star(t)` with
/// `t <= 2` is `K_2` or `P_3`.
pub fn family_phi(spec: FamilySpec) -> usize {
    match spec.kind {
        FamilyKind::Path => {
            if spec.size <= 4 {
                2
            } else {
                3
            }
        }
        FamilyKind::Cycle => {
            if spec.size == 4 {
                2
            } else {
                3
            }
        }
        FamilyKind::Star => 2,
        FamilyKind::Complete => spec.size,
    }
}

/// Value of the generic star statement, `min{n, |V(H)|+2} + φ(H)`, when its
/// hypothesis `Δ(H) + 1 < min{n, |V(H)|+2} + φ(H)` holds and `n > 2`.
pub fn generic_star_value(n: usize, h_order: usize, h_max_degree: usize, h_phi: usize) -> Option<usize> {
    let value = usize::min(n, h_order + 2) + h_phi;
    (n >= 3 && h_max_degree + 1 < value).then_some(value)
}

/// φ(left ⊡ right) from the case tables.
///
/// Malformed operands (e.g. `Path(2)`) are an error; well-formed pairs that no
/// statement covers come back with `supported == false`.
pub fn phi_closed_form(left: FamilySpec, right: FamilySpec) -> Result<PhiResult, ClosedFormError> {
    left.validate()?;
    right.validate()?;
    let (n, t) = (left.size, right.size);

    if right.kind == FamilyKind::Star && t < 3 {
        return Ok(small_star_right(left, right));
    }
    let table = case_table(left.kind, right.kind);
    if !(table.hypothesis)(n, t) {
        return Ok(PhiResult::unsupported());
    }
    let Some((idx, clause)) = table.clauses.iter().enumerate().find(|(_, c)| (c.applies)(n, t)) else {
        return Ok(PhiResult::unsupported());
    };
    Ok(PhiResult::of(table.table, idx, clause.label, (clause.value)(n, t)))
}

/// Stars with one or two leaves fall outside the star theorems; only the
/// statements for arbitrary `H` apply.
fn small_star_right(left: FamilySpec, right: FamilySpec) -> PhiResult {
    let n = left.size;
    let h_order = right.order();
    match left.kind {
        FamilyKind::Path if n > 2 * h_order + 3 => PhiResult::of(Table::GenericPath, 0, GENERIC_PATH, 2 * h_order + 3),
        FamilyKind::Cycle if n > 2 * h_order + 2 => {
            PhiResult::of(Table::GenericCycle, 0, GENERIC_CYCLE, 2 * h_order + 3)
        }
        FamilyKind::Star => match generic_star_value(n, h_order, right.max_degree(), family_phi(right)) {
            Some(v) => PhiResult::of(Table::GenericStar, 0, GENERIC_STAR, v),
            None => PhiResult::unsupported(),
        },
        _ => PhiResult::unsupported(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi(left: FamilySpec, right: FamilySpec) -> PhiResult {
        phi_closed_form(left, right).unwrap()
    }

    #[test]
    fn examples() {
        let r = phi(FamilySpec::path(10), FamilySpec::path(3));
        assert_eq!((r.value, r.branch), (Some(9), Some(GENERIC_PATH)));
        assert_eq!(phi(FamilySpec::path(3), FamilySpec::cycle(4)).value, Some(4));
        assert_eq!(phi(FamilySpec::star(3), FamilySpec::star(6)).value, Some(7));
        assert_eq!(phi(FamilySpec::complete(9), FamilySpec::star(3)).value, Some(9));
        assert_eq!(phi(FamilySpec::complete(6), FamilySpec::complete(1)).value, Some(5));
        let r = phi(FamilySpec::complete(5), FamilySpec::path(3));
        assert!(!r.supported && r.value.is_none() && r.branch.is_none());
    }

    #[test]
    fn malformed_sizes_are_errors() {
        assert!(matches!(
            phi_closed_form(FamilySpec::path(2), FamilySpec::path(3)),
            Err(ClosedFormError::OutOfTheoremRange(_))
        ));
        assert!(phi_closed_form(FamilySpec::path(3), FamilySpec::cycle(1)).is_err());
    }

    #[test]
    fn small_left_operands_unsupported() {
        assert!(!phi(FamilySpec::star(2), FamilySpec::path(3)).supported);
        assert!(!phi(FamilySpec::complete(1), FamilySpec::path(3)).supported);
    }

    #[test]
    fn small_star_right_uses_generic_statements() {
        // S_1 has order 2: path needs n > 7, cycle n > 6
        assert!(!phi(FamilySpec::path(7), FamilySpec::star(1)).supported);
        assert_eq!(phi(FamilySpec::path(8), FamilySpec::star(1)).value, Some(7));
        assert_eq!(phi(FamilySpec::cycle(7), FamilySpec::star(1)).value, Some(7));
        assert_eq!(phi(FamilySpec::star(3), FamilySpec::star(2)).value, Some(5));
        assert!(!phi(FamilySpec::complete(9), FamilySpec::star(2)).supported);
    }

    #[test]
    fn cycle_complete_meets_generic_at_boundary() {
        for t in 1..10 {
            let n = 2 * t + 3;
            assert_eq!(phi(FamilySpec::cycle(n), FamilySpec::complete(t)).value, Some(2 * t + 3));
        }
    }

    #[test]
    fn family_phi_values() {
        assert_eq!(family_phi(FamilySpec::path(4)), 2);
        assert_eq!(family_phi(FamilySpec::path(5)), 3);
        assert_eq!(family_phi(FamilySpec::cycle(4)), 2);
        assert_eq!(family_phi(FamilySpec::cycle(3)), 3);
        assert_eq!(family_phi(FamilySpec::star(5)), 2);
        assert_eq!(family_phi(FamilySpec::complete(6)), 6);
    }
}
