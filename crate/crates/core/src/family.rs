//! The four graph families used as corona operands.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, GraphError, Provenance};

/// Family of a corona operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Path,
    Cycle,
    Star,
    Complete,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [Self::Path, Self::Cycle, Self::Star, Self::Complete];

    pub fn name(self) -> &'static str {
        match self {
            Self::Path => "path",
            Self::Cycle => "cycle",
            Self::Star => "star",
            Self::Complete => "complete",
        }
    }

    /// Smallest size accepted by [`build_family`].
    pub fn min_size(self) -> usize {
        match self {
            Self::Path | Self::Cycle => 3,
            Self::Star | Self::Complete => 1,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(Self::Path),
            "cycle" | "c" => Ok(Self::Cycle),
            "star" | "s" => Ok(Self::Star),
            "complete" | "k" => Ok(Self::Complete),
            other => Err(GraphError::Parse(format!("unknown family kind `{other}`"))),
        }
    }
}

/// A member of one of the four families.
///
/// `size` is the order for paths, cycles and complete graphs, and the number
/// of leaves for stars (so `Star(t)` has order `t + 1` and its centre is
/// vertex 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub size: usize,
}

impl FamilySpec {
    pub const fn new(kind: FamilyKind, size: usize) -> Self {
        Self { kind, size }
    }

    pub const fn path(n: usize) -> Self {
        Self::new(FamilyKind::Path, n)
    }

    pub const fn cycle(n: usize) -> Self {
        Self::new(FamilyKind::Cycle, n)
    }

    pub const fn star(leaves: usize) -> Self {
        Self::new(FamilyKind::Star, leaves)
    }

    pub const fn complete(n: usize) -> Self {
        Self::new(FamilyKind::Complete, n)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let min = self.kind.min_size();
        if self.size < min {
            return Err(GraphError::SizeTooSmall { kind: self.kind, size: self.size, min });
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        match self.kind {
            FamilyKind::Star => self.size + 1,
            _ => self.size,
        }
    }

    pub fn edge_count(&self) -> usize {
        match self.kind {
            FamilyKind::Path => self.size.saturating_sub(1),
            FamilyKind::Cycle => self.size,
            FamilyKind::Star => self.size,
            FamilyKind::Complete => self.size * self.size.saturating_sub(1) / 2,
        }
    }

    pub fn max_degree(&self) -> usize {
        match self.kind {
            FamilyKind::Path => usize::min(2, self.size.saturating_sub(1)),
            FamilyKind::Cycle => 2,
            FamilyKind::Star => self.size,
            FamilyKind::Complete => self.size.saturating_sub(1),
        }
    }

    /// Degree of vertex `v` in the canonical labelling.
    pub fn degree(&self, v: usize) -> usize {
        match self.kind {
            FamilyKind::Path => {
                if self.size == 1 {
                    0
                } else if v == 0 || v + 1 == self.size {
                    1
                } else {
                    2
                }
            }
            FamilyKind::Cycle => 2,
            FamilyKind::Star => {
                if v == 0 {
                    self.size
                } else {
                    1
                }
            }
            FamilyKind::Complete => self.size - 1,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.size)
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses `<kind>:<size>`, e.g. `star:6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (kind, size) =
            s.split_once(':').ok_or_else(|| GraphError::Parse(format!("expected <kind>:<size>, got `{s}`")))?;
        let kind: FamilyKind = kind.parse()?;
        let size: usize = size.trim().parse().map_err(|_| GraphError::Parse(format!("invalid size `{size}`")))?;
        Ok(Self { kind, size })
    }
}

/// Builds the canonical member of a family.
pub fn build_family(spec: FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let n = spec.size;
    let edges: Vec<(usize, usize)> = match spec.kind {
        FamilyKind::Path => (0..n - 1).map(|i| (i, i + 1)).collect(),
        FamilyKind::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        FamilyKind::Star => (1..=n).map(|i| (0, i)).collect(),
        FamilyKind::Complete => (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect(),
    };
    let mut g = Graph::from_edges(spec.order(), &edges)?;
    g.set_provenance(Some(Provenance::Family(spec)));
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_three() {
        let g = build_family(FamilySpec::path(3)).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn star_three() {
        let g = build_family(FamilySpec::star(3)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn complete_four_has_six_edges() {
        assert_eq!(build_family(FamilySpec::complete(4)).unwrap().edge_count(), 6);
    }

    #[test]
    fn cycle_closes() {
        let g = build_family(FamilySpec::cycle(5)).unwrap();
        assert!(g.has_edge(4, 0));
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn size_too_small() {
        for spec in [FamilySpec::path(2), FamilySpec::cycle(2), FamilySpec::star(0), FamilySpec::complete(0)] {
            assert!(matches!(build_family(spec), Err(GraphError::SizeTooSmall { .. })), "{spec}");
        }
    }

    #[test]
    fn closed_form_degrees_match() {
        for kind in FamilyKind::ALL {
            for size in kind.min_size()..9 {
                let spec = FamilySpec::new(kind, size);
                let g = build_family(spec).unwrap();
                assert_eq!(g.edge_count(), spec.edge_count(), "{spec}");
                assert_eq!(g.max_degree(), spec.max_degree(), "{spec}");
                for v in 0..g.order() {
                    assert_eq!(g.degree(v), spec.degree(v), "{spec} vertex {v}");
                }
            }
        }
    }

    #[test]
    fn parse_round_trip() {
        let spec: FamilySpec = "star:6".parse().unwrap();
        assert_eq!(spec, FamilySpec::star(6));
        assert_eq!(spec.to_string(), "star:6");
        assert!("star".parse::<FamilySpec>().is_err());
        assert!("wheel:4".parse::<FamilySpec>().is_err());
    }
}
