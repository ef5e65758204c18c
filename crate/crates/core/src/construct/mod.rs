//! Constructive b-colorings reaching the closed-form values.
//!
//! Each supported pair has a coloring table, transcribed into a [`Draft`]
//! over the labelled corona. A draft is only returned after it passes
//! [`verify_b_coloring`]; when it does not, it is repaired with the same
//! number of colors (see `repair`) and the result says so. Pairs for which
//! no table exists are colored by search and marked [`Origin::Searched`].

mod canvas;
mod complete;
mod cycle;
mod path;
mod repair;
mod star;
mod tabu;

use std::fmt;

use crate::closed_form::{family_phi, phi_closed_form, ClosedFormError};
use crate::coloring::{is_b_vertex, m_degree, verify_b_coloring, BReport, Coloring};
use crate::family::{build_family, FamilyKind, FamilySpec};
use crate::graph::{svn_corona, Graph};

use canvas::{Canvas, Draft};
use repair::Fix;

/// How a verified coloring was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Origin {
    /// The table verified as transcribed.
    Formula,
    /// The table needed local recoloring before it verified.
    Repaired,
    /// No usable table; found by search.
    Searched,
    /// An explicit coloring kept in the crate, for a pair whose only
    /// construction is a drawing.
    Stored,
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Formula => "formula",
            Self::Repaired => "repaired",
            Self::Searched => "searched",
            Self::Stored => "stored",
        })
    }
}

/// A b-coloring that passed verification, with the graph it colors.
#[derive(Debug, Clone)]
pub struct VerifiedColoring {
    pub graph: Graph,
    pub coloring: Coloring,
    pub report: BReport,
    /// True iff the coloring is not a table as transcribed.
    pub repaired: bool,
    pub origin: Origin,
    pub branch: Option<&'static str>,
    /// Vertex ids of the rainbow set the table names (empty if none).
    pub stated_rainbow: Vec<usize>,
    /// Whether every vertex of `stated_rainbow` is a b-vertex of `coloring`.
    pub stated_rainbow_holds: bool,
    /// Whether some table value fell outside `0..k` and was reduced mod `k`.
    pub reduced: bool,
}

impl VerifiedColoring {
    pub fn k(&self) -> usize {
        self.coloring.k()
    }
}

pub(crate) enum Recipe {
    Formula(Draft),
    Search,
    Stored(&'static [usize]),
}

/// The coloring of base and inserted vertices shared by the path and cycle
/// tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    /// `c(u_i)` for `i < n`.
    pub base: Vec<usize>,
    /// `c(s_{j,j+1})` for `j < n - 1`.
    pub path_inserted: Vec<usize>,
    /// `c(s_{0,n-1})`, for cycles.
    pub closure: Option<usize>,
}

/// `c(u_i) = (i+1) mod M`, `c(s_{j,j+1}) = j mod M`; for a cycle also
/// `c(s_{0,n-1}) = (n-1) mod M`, or `0` when `n ≡ 2 (mod M)`.
///
/// # Panics
/// If `modulus < 2`.
pub fn skeleton_coloring(n: usize, modulus: usize, is_cycle: bool) -> Skeleton {
    assert!(modulus >= 2, "skeleton modulus must be at least 2");
    let base = (0..n).map(|i| (i + 1) % modulus).collect();
    let path_inserted = (0..n.saturating_sub(1)).map(|j| j % modulus).collect();
    let closure = is_cycle.then(|| if n % modulus == 2 % modulus { 0 } else { (n - 1) % modulus });
    Skeleton { base, path_inserted, closure }
}

impl Skeleton {
    fn paint(&self, cv: &mut Canvas) {
        for (i, &c) in self.base.iter().enumerate() {
            cv.u(i as i64, c as i64);
        }
        for (j, &c) in self.path_inserted.iter().enumerate() {
            cv.s(j as i64, j as i64 + 1, c as i64);
        }
        if let Some(c) = self.closure {
            let n = self.base.len() as i64;
            cv.s(0, n - 1, c as i64);
        }
    }
}

/// Parameters the path and cycle tables are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanParams {
    /// Number of copy positions carrying the extra colors (star tables only).
    pub alpha: Option<usize>,
    pub skeleton_modulus: usize,
    /// `c(s_{0,n-1})`, for cycles.
    pub cycle_closure: Option<usize>,
}

/// The table parameters used for `left ⊡ right`; `None` unless the left
/// operand is a path or a cycle.
pub fn plan_params(left: FamilySpec, right: FamilySpec) -> Result<Option<PlanParams>, ClosedFormError> {
    let is_cycle = match left.kind {
        FamilyKind::Path => false,
        FamilyKind::Cycle => true,
        _ => return Ok(None),
    };
    let g = svn_corona(&build_family(left)?, &build_family(right)?)?;
    let (n, t, h) = (left.size, right.size, right.order());
    let generic = if is_cycle { n > 2 * h + 2 } else { n > 2 * h + 3 };
    let modulus = if generic { 2 * h + 3 } else { skeleton_modulus(&g, n) };
    let m = m_degree(&g);
    let alpha = match (right.kind, is_cycle) {
        (FamilyKind::Star, false) if !generic && n <= t + 4 => Some(m + 1 - n),
        (FamilyKind::Star, true) if !generic && n <= t + 2 => Some(m - n),
        _ => None,
    };
    let sk = skeleton_coloring(n, modulus, is_cycle);
    Ok(Some(PlanParams { alpha, skeleton_modulus: modulus, cycle_closure: sk.closure }))
}

/// An optimal b-coloring of a family member, with φ colors.
pub fn optimal_family_coloring(spec: FamilySpec) -> Coloring {
    let size = spec.size;
    let assignment: Vec<usize> = match spec.kind {
        FamilyKind::Path if size <= 4 => (0..size).map(|i| i % 2).collect(),
        FamilyKind::Path => (0..size).map(|i| i % 3).collect(),
        FamilyKind::Cycle if size == 4 => vec![0, 1, 0, 1],
        FamilyKind::Cycle => {
            let mut colors: Vec<usize> = (0..size).map(|i| i % 3).collect();
            if size % 3 == 1 {
                colors[size - 1] = 1;
            }
            colors
        }
        FamilyKind::Star => (0..=size).map(|i| usize::from(i > 0)).collect(),
        FamilyKind::Complete => (0..size).collect(),
    };
    Coloring::new(family_phi(spec), assignment).expect("family colorings use φ colors")
}

/// Builds `left ⊡ right` and a verified b-coloring with φ(left ⊡ right) colors.
pub fn construct_coloring(left: FamilySpec, right: FamilySpec) -> Result<VerifiedColoring, ClosedFormError> {
    let phi = phi_closed_form(left, right)?;
    let Some(k) = phi.value else {
        return Err(ClosedFormError::Unsupported { left, right });
    };
    let g = svn_corona(&build_family(left)?, &build_family(right)?)?;
    let recipe = recipe(left, right, &g, k);
    realize(g, k, recipe, phi.branch)
}

/// Runs the table of the left family with `k` colors, whether or not the
/// pair is covered by a closed form. Success only shows φ ≥ `k`.
///
/// Used for pairs that appear in drawings outside a theorem's range, such as
/// `K_8 ⊡ P_4`.
pub fn construct_with_colors(
    left: FamilySpec,
    right: FamilySpec,
    k: usize,
) -> Result<VerifiedColoring, ClosedFormError> {
    let g = svn_corona(&build_family(left)?, &build_family(right)?)?;
    if k < 2 || k > g.max_degree() + 1 {
        return Err(ClosedFormError::ConstructionInvalid(format!("{k} colors is outside 2..=Δ+1")));
    }
    let recipe = recipe(left, right, &g, k);
    realize(g, k, recipe, None)
}

fn recipe(left: FamilySpec, right: FamilySpec, g: &Graph, k: usize) -> Recipe {
    match left.kind {
        FamilyKind::Path => path::recipe(left.size, right, g, k),
        FamilyKind::Cycle => cycle::recipe(left.size, right, g, k),
        FamilyKind::Star => star::recipe(left.size, right, g, k),
        FamilyKind::Complete => complete::recipe(left.size, right, g, k),
    }
}

/// The graph and the table draft for a supported pair, before verification.
#[cfg(test)]
pub(crate) fn draft(left: FamilySpec, right: FamilySpec) -> Option<(Graph, Draft)> {
    let k = phi_closed_form(left, right).ok()?.value?;
    let g = svn_corona(&build_family(left).ok()?, &build_family(right).ok()?).ok()?;
    match recipe(left, right, &g, k) {
        Recipe::Formula(d) => Some((g, d)),
        Recipe::Search | Recipe::Stored(_) => None,
    }
}

fn realize(
    g: Graph,
    k: usize,
    recipe: Recipe,
    branch: Option<&'static str>,
) -> Result<VerifiedColoring, ClosedFormError> {
    let mut inherited_repair = false;
    let (fixed, stated, reduced) = match recipe {
        Recipe::Formula(draft) => {
            debug_assert_eq!(draft.k, k);
            inherited_repair = draft.inherited_repair;
            (repair::fix(&g, &draft), draft.rainbow, draft.reduced)
        }
        Recipe::Search => (repair::search(&g, k).map(Fix::Searched), Vec::new(), false),
        Recipe::Stored(colors) => (Some(Fix::Stored(colors.to_vec())), Vec::new(), false),
    };
    let invalid = || ClosedFormError::ConstructionInvalid(format!("no b-coloring with {k} colors found for the table"));
    let (colors, origin) = match fixed.ok_or_else(invalid)? {
        Fix::Verified(c) if inherited_repair => (c, Origin::Repaired),
        Fix::Verified(c) => (c, Origin::Formula),
        Fix::Repaired(c) => (c, Origin::Repaired),
        Fix::Searched(c) => (c, Origin::Searched),
        Fix::Stored(c) => (c, Origin::Stored),
    };
    let coloring = Coloring::new(k, colors).map_err(|e| ClosedFormError::ConstructionInvalid(e.to_string()))?;
    let report = verify_b_coloring(&g, &coloring).map_err(|e| ClosedFormError::ConstructionInvalid(e.to_string()))?;
    if !report.is_b_coloring() {
        return Err(invalid());
    }
    let stated_rainbow_holds = stated.iter().all(|&v| is_b_vertex(&g, &coloring, v));
    Ok(VerifiedColoring {
        graph: g,
        coloring,
        report,
        repaired: origin != Origin::Formula,
        origin,
        branch,
        stated_rainbow: stated,
        stated_rainbow_holds,
        reduced,
    })
}

fn realize_generic(g: Graph, draft: Draft, branch: &'static str) -> Result<VerifiedColoring, ClosedFormError> {
    let k = draft.k;
    realize(g, k, Recipe::Formula(draft), Some(branch))
}

/// `P_n ⊡ h` with `2|V(h)| + 3` colors, for `n > 2|V(h)| + 3`.
pub fn color_generic_path_corona(n: usize, h: &Graph) -> Result<VerifiedColoring, ClosedFormError> {
    if n <= 2 * h.order() + 3 {
        return Err(ClosedFormError::PreconditionViolated(format!(
            "path order {n} must exceed 2|V(H)|+3 = {}",
            2 * h.order() + 3
        )));
    }
    let g = svn_corona(&build_family(FamilySpec::path(n))?, h)?;
    let draft = path::generic(n, h.order(), &g);
    realize_generic(g, draft, "path-any:n>2|V(H)|+3")
}

/// `C_n ⊡ h` with `2|V(h)| + 3` colors, for `n > 2|V(h)| + 2`.
pub fn color_generic_cycle_corona(n: usize, h: &Graph) -> Result<VerifiedColoring, ClosedFormError> {
    if n <= 2 * h.order() + 2 {
        return Err(ClosedFormError::PreconditionViolated(format!(
            "cycle order {n} must exceed 2|V(H)|+2 = {}",
            2 * h.order() + 2
        )));
    }
    let g = svn_corona(&build_family(FamilySpec::cycle(n))?, h)?;
    let draft = cycle::generic(n, h.order(), &g);
    realize_generic(g, draft, "cycle-any:n>2|V(H)|+2")
}

/// `S_n ⊡ h` with `min{n, |V(h)|+2} + φ(h)` colors, given an optimal
/// b-coloring `c_h` of `h`.
pub fn color_generic_star_corona(n: usize, h: &Graph, c_h: &Coloring) -> Result<VerifiedColoring, ClosedFormError> {
    check_optimal_input(h, c_h)?;
    if n < 3 {
        return Err(ClosedFormError::PreconditionViolated(format!("star needs at least 3 leaves, got {n}")));
    }
    let k = usize::min(n, h.order() + 2) + c_h.k();
    if h.max_degree() + 1 >= k {
        return Err(ClosedFormError::HypothesisViolated(format!("Δ(H)+1 = {} is not below {k}", h.max_degree() + 1)));
    }
    let g = svn_corona(&build_family(FamilySpec::star(n))?, h)?;
    let draft = star::generic(n, h, c_h, &g);
    realize_generic(g, draft, "star-any:min{n,|V(H)|+2}+φ(H)")
}

/// `K_2 ⊡ h` with `φ(h) + 1` colors, given an optimal b-coloring `c_h` of `h`.
pub fn color_k2_corona(h: &Graph, c_h: &Coloring) -> Result<VerifiedColoring, ClosedFormError> {
    check_optimal_input(h, c_h)?;
    let g = svn_corona(&build_family(FamilySpec::complete(2))?, h)?;
    let draft = complete::k2(h, c_h, &g);
    realize_generic(g, draft, "complete-2:φ(H)+1")
}

/// The inputs are trusted to be optimal; only the b-coloring part is checked.
fn check_optimal_input(h: &Graph, c_h: &Coloring) -> Result<(), ClosedFormError> {
    let report = verify_b_coloring(h, c_h).map_err(|e| ClosedFormError::PreconditionViolated(e.to_string()))?;
    if !report.is_b_coloring() {
        return Err(ClosedFormError::PreconditionViolated("c_h is not a b-coloring of H".into()));
    }
    Ok(())
}

/// Skeleton modulus `min{m(G ⊡ H), n}`.
fn skeleton_modulus(g: &Graph, n: usize) -> usize {
    usize::min(m_degree(g), n)
}

#[cfg(test)]
mod tests;
