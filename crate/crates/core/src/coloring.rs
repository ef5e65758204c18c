//! Colorings and the b-coloring predicates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("a coloring needs at least one color")]
    NoColors,
}

/// Total assignment of colors `0..k` to vertex ids. `k` is declared, not
/// inferred, so an unused color stays visible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    assignment: Vec<usize>,
}

impl Coloring {
    pub fn new(k: usize, assignment: Vec<usize>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::NoColors);
        }
        if let Some((vertex, &color)) = assignment.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Self { k, assignment })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Keeps the colors of vertex ids `0..order`.
    pub fn prefix(&self, order: usize) -> Coloring {
        Coloring { k: self.k, assignment: self.assignment[..order.min(self.len())].to_vec() }
    }

    fn check_arity(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.len() != g.order() {
            return Err(ColoringError::ArityMismatch { expected: g.order(), got: self.len() });
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson { colors: self.k, assignment: self.assignment.clone() })
            .expect("coloring serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, ColoringJsonError> {
        let doc: ColoringJson = serde_json::from_str(text)?;
        Ok(Self::new(doc.colors, doc.assignment)?)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    colors: usize,
    assignment: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum ColoringJsonError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] ColoringError),
}

/// Outcome of checking a coloring against the b-coloring definition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BReport {
    pub proper: bool,
    /// Lexicographically first monochromatic edge, when not proper.
    pub conflict: Option<(usize, usize)>,
    /// `b_vertices[c]` lists every b-vertex of color `c`, ascending.
    pub b_vertices: Vec<Vec<usize>>,
    /// Lowest-id b-vertex of each color; present iff proper and no color is missing.
    pub rainbow: Option<Vec<usize>>,
    pub missing_colors: Vec<usize>,
}

impl BReport {
    pub fn is_b_coloring(&self) -> bool {
        self.rainbow.is_some()
    }

    pub fn is_b_vertex(&self, v: usize) -> bool {
        self.b_vertices.iter().any(|list| list.binary_search(&v).is_ok())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Returns `Ok(None)` when proper, or the first monochromatic edge.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<Option<(usize, usize)>, ColoringError> {
    c.check_arity(g)?;
    Ok(first_conflict(g, c.assignment()))
}

pub(crate) fn first_conflict(g: &Graph, colors: &[usize]) -> Option<(usize, usize)> {
    (0..g.order()).find_map(|a| g.neighbors(a).iter().find(|&&b| a < b && colors[a] == colors[b]).map(|&b| (a, b)))
}

/// True when the neighbourhood of `v` shows every color other than its own.
pub fn is_b_vertex(g: &Graph, c: &Coloring, v: usize) -> bool {
    let k = c.k();
    if g.degree(v) + 1 < k {
        return false;
    }
    let mut seen = vec![false; k];
    seen[c.color(v)] = true;
    for &w in g.neighbors(v) {
        seen[c.color(w)] = true;
    }
    seen.into_iter().all(|s| s)
}

pub fn verify_b_coloring(g: &Graph, c: &Coloring) -> Result<BReport, ColoringError> {
    let conflict = is_proper(g, c)?;
    let mut b_vertices = vec![Vec::new(); c.k()];
    for v in 0..g.order() {
        if is_b_vertex(g, c, v) {
            b_vertices[c.color(v)].push(v);
        }
    }
    let missing_colors: Vec<usize> = (0..c.k()).filter(|&col| b_vertices[col].is_empty()).collect();
    let rainbow =
        (conflict.is_none() && missing_colors.is_empty()).then(|| b_vertices.iter().map(|list| list[0]).collect());
    Ok(BReport { proper: conflict.is_none(), conflict, b_vertices, rainbow, missing_colors })
}

/// The m-degree: the largest `m` such that at least `m` vertices have degree `>= m - 1`.
pub fn m_degree(g: &Graph) -> usize {
    let mut degrees = g.degrees();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    // the condition `d_i >= i - 1` is monotone along a non-increasing sequence
    degrees.iter().enumerate().take_while(|&(i, &d)| d >= i).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{build_family, FamilySpec};
    use crate::graph::svn_corona;

    fn fam(spec: FamilySpec) -> Graph {
        build_family(spec).unwrap()
    }

    #[test]
    fn edgeless_is_proper() {
        let g = Graph::empty(4);
        let c = Coloring::new(1, vec![0; 4]).unwrap();
        assert_eq!(is_proper(&g, &c).unwrap(), None);
    }

    #[test]
    fn triangle_conflict_witness() {
        let g = fam(FamilySpec::complete(3));
        let c = Coloring::new(2, vec![0, 1, 1]).unwrap();
        assert_eq!(is_proper(&g, &c).unwrap(), Some((1, 2)));
        let report = verify_b_coloring(&g, &c).unwrap();
        assert!(!report.proper && report.rainbow.is_none());
    }

    #[test]
    fn arity_mismatch() {
        let g = fam(FamilySpec::path(3));
        let c = Coloring::new(2, vec![0, 1]).unwrap();
        assert_eq!(is_proper(&g, &c), Err(ColoringError::ArityMismatch { expected: 3, got: 2 }));
        assert!(verify_b_coloring(&g, &c).is_err());
    }

    #[test]
    fn out_of_range_color_rejected() {
        assert!(matches!(Coloring::new(2, vec![0, 2]), Err(ColoringError::ColorOutOfRange { vertex: 1, .. })));
        assert_eq!(Coloring::new(0, vec![]), Err(ColoringError::NoColors));
    }

    #[test]
    fn single_color_everyone_is_b_vertex() {
        let g = Graph::empty(3);
        let c = Coloring::new(1, vec![0; 3]).unwrap();
        assert!((0..3).all(|v| is_b_vertex(&g, &c, v)));
    }

    #[test]
    fn low_degree_is_not_b_vertex() {
        // vertex 0 of P_5 has degree 1 = k - 2 for k = 3
        let g = fam(FamilySpec::path(5));
        let c = Coloring::new(3, vec![0, 1, 2, 0, 1]).unwrap();
        assert!(!is_b_vertex(&g, &c, 0));
        assert!(is_b_vertex(&g, &c, 1));
    }

    #[test]
    fn unused_color_is_missing() {
        let g = fam(FamilySpec::path(4));
        let c = Coloring::new(3, vec![0, 1, 0, 1]).unwrap();
        let report = verify_b_coloring(&g, &c).unwrap();
        assert!(report.proper);
        // no vertex of P_4 sees three colors, so nothing is a b-vertex
        assert_eq!(report.missing_colors, vec![0, 1, 2]);
        assert!(report.rainbow.is_none());
    }

    #[test]
    fn rainbow_is_lowest_id_per_color() {
        let g = fam(FamilySpec::path(5));
        let c = Coloring::new(3, vec![0, 1, 2, 0, 1]).unwrap();
        let report = verify_b_coloring(&g, &c).unwrap();
        assert_eq!(report.b_vertices, vec![vec![3], vec![1], vec![2]]);
        assert_eq!(report.rainbow, Some(vec![3, 1, 2]));
    }

    #[test]
    fn m_degree_examples() {
        for n in 1..8 {
            assert_eq!(m_degree(&fam(FamilySpec::complete(n))), n);
        }
        assert_eq!(m_degree(&fam(FamilySpec::path(3))), 2);
        let g = svn_corona(&fam(FamilySpec::path(5)), &fam(FamilySpec::cycle(3))).unwrap();
        assert_eq!(m_degree(&g), 5);
        assert_eq!(m_degree(&Graph::empty(0)), 0);
    }

    #[test]
    fn m_degree_complete_star_corona() {
        for t in 3..5 {
            for n in 2 * t + 4..2 * t + 7 {
                let g = svn_corona(&fam(FamilySpec::complete(n)), &fam(FamilySpec::star(t))).unwrap();
                assert_eq!(m_degree(&g), n + 1, "K_{n} with S_{t}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let c = Coloring::new(3, vec![0, 2, 1]).unwrap();
        assert_eq!(c.to_json(), r#"{"colors":3,"assignment":[0,2,1]}"#);
        assert_eq!(Coloring::from_json(&c.to_json()).unwrap(), c);
        assert!(Coloring::from_json(r#"{"colors":2,"assignment":[0,2]}"#).is_err());
    }
}
