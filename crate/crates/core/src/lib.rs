//! b-chromatic numbers of subdivision-vertex neighbourhood (SVN) coronas.
//!
//! * [`family`] and [`graph`] build paths, cycles, stars, complete graphs,
//!   their subdivision graphs and SVN coronas with labelled vertices.
//! * [`coloring`] checks properness, b-vertices and the m-degree bound.
//! * [`oracle`] computes χ and φ exactly on small graphs.
//! * [`closed_form`] evaluates φ for every supported pair of families and
//!   [`construct`] builds a matching b-coloring, verified before it is returned.

pub mod closed_form;
pub mod coloring;
pub mod construct;
pub mod dot;
pub mod family;
pub mod graph;
pub mod oracle;
mod search;

pub use closed_form::{phi_closed_form, ClosedFormError, PhiResult};
pub use coloring::{is_b_vertex, is_proper, m_degree, verify_b_coloring, BReport, Coloring, ColoringError};
pub use construct::{construct_coloring, construct_with_colors, Origin, VerifiedColoring};
pub use family::{build_family, FamilyKind, FamilySpec};
pub use graph::{corona_degree, subdivision, svn_corona, Graph, GraphError, Provenance, VertexLabel};
pub use oracle::{exact_b_chromatic, exact_chromatic, exists_b_coloring, OracleError, SearchBudget};
