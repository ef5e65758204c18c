//! Exact chromatic and b-chromatic numbers of small graphs.
//!
//! This is the ground truth the closed forms are checked against, so it only
//! relies on the definitions: a DSATUR branch and bound for χ, and for φ an
//! independent decision for every `k` between χ and `min(m(G), Δ(G) + 1)`.
//! b-colorability is not monotone in `k`, so no decision is inferred from
//! another.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::coloring::{m_degree, verify_b_coloring, Coloring};
use crate::graph::Graph;
use crate::search::{BSearch, Limits, Outcome, MAX_COLORS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_vertices: usize,
    pub time_limit: Duration,
    pub node_limit: Option<u64>,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self { max_vertices: 20, time_limit: Duration::from_secs(120), node_limit: None }
    }
}

impl SearchBudget {
    pub fn with_max_vertices(mut self, max_vertices: usize) -> Self {
        self.max_vertices = max_vertices;
        self
    }

    pub fn with_time_limit(mut self, time_limit: Duration) -> Self {
        self.time_limit = time_limit;
        self
    }

    pub fn with_node_limit(mut self, node_limit: u64) -> Self {
        self.node_limit = Some(node_limit);
        self
    }

    fn validate(&self, g: &Graph) -> Result<(), OracleError> {
        if self.max_vertices == 0 || self.time_limit.is_zero() || self.node_limit == Some(0) {
            return Err(OracleError::InvalidBudget);
        }
        if g.order() > self.max_vertices {
            return Err(OracleError::TooLarge { order: g.order(), max_vertices: self.max_vertices });
        }
        Ok(())
    }

    fn limits(&self) -> Limits {
        Limits::new(Some(Instant::now() + self.time_limit), self.node_limit)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {order} vertices, budget allows {max_vertices}")]
    TooLarge { order: usize, max_vertices: usize },
    #[error("search budget exhausted; value lies in {lower}..={upper}")]
    BudgetExceeded { lower: usize, upper: usize },
    #[error("search budget limits must be positive")]
    InvalidBudget,
    #[error("the b-chromatic number of the empty graph is undefined")]
    EmptyGraph,
}

/// χ(G) by DSATUR branch and bound, with a greedy clique as lower bound.
pub fn exact_chromatic(g: &Graph, budget: &SearchBudget) -> Result<usize, OracleError> {
    budget.validate(g)?;
    let mut limits = budget.limits();
    chromatic_with_limits(g, &mut limits)
}

fn chromatic_with_limits(g: &Graph, limits: &mut Limits) -> Result<usize, OracleError> {
    let n = g.order();
    if n == 0 {
        return Ok(0);
    }
    let lower = greedy_clique(g).len();
    let upper = dsatur_greedy(g);
    if lower == upper {
        return Ok(lower);
    }
    let mut solver = Dsatur { g, colors: vec![usize::MAX; n], limits };
    for k in lower..upper {
        match solver.colorable(k) {
            Some(true) => return Ok(k),
            Some(false) => {}
            None => return Err(OracleError::BudgetExceeded { lower: k, upper }),
        }
    }
    Ok(upper)
}

fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..g.order() {
        let mut clique = vec![start];
        let mut pool: Vec<usize> = g.neighbors(start).to_vec();
        while !pool.is_empty() {
            let &pick = pool
                .iter()
                .max_by_key(|&&v| (pool.iter().filter(|&&w| g.has_edge(v, w)).count(), usize::MAX - v))
                .unwrap();
            clique.push(pick);
            pool.retain(|&w| w != pick && g.has_edge(pick, w));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn dsatur_greedy(g: &Graph) -> usize {
    let n = g.order();
    let mut colors = vec![usize::MAX; n];
    let mut used = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation(g, &colors, v), g.degree(v), usize::MAX - v))
            .unwrap();
        let c = (0..).find(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c)).unwrap();
        colors[v] = c;
        used = used.max(c + 1);
    }
    used
}

fn saturation(g: &Graph, colors: &[usize], v: usize) -> usize {
    let mut seen: u128 = 0;
    for &w in g.neighbors(v) {
        if colors[w] != usize::MAX && colors[w] < 128 {
            seen |= 1 << colors[w];
        }
    }
    seen.count_ones() as usize
}

struct Dsatur<'g, 'l> {
    g: &'g Graph,
    colors: Vec<usize>,
    limits: &'l mut Limits,
}

impl Dsatur<'_, '_> {
    /// `None` when the budget ran out.
    fn colorable(&mut self, k: usize) -> Option<bool> {
        self.colors.iter_mut().for_each(|c| *c = usize::MAX);
        self.extend(k, 0, 0)
    }

    fn extend(&mut self, k: usize, assigned: usize, used: usize) -> Option<bool> {
        if !self.limits.tick() {
            return None;
        }
        let n = self.g.order();
        if assigned == n {
            return Some(true);
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == usize::MAX)
            .max_by_key(|&v| (saturation(self.g, &self.colors, v), self.g.degree(v), usize::MAX - v))
            .unwrap();
        // a fresh color is interchangeable with any other fresh one
        for c in 0..usize::min(used + 1, k) {
            if self.g.neighbors(v).iter().any(|&w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            let res = self.extend(k, assigned + 1, used.max(c + 1));
            self.colors[v] = usize::MAX;
            match res {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
}

/// A b-coloring of `g` with exactly `k` colors, or `None` if there is none.
///
/// Candidate b-vertices are the vertices of degree at least `k - 1`.
pub fn exists_b_coloring(g: &Graph, k: usize, budget: &SearchBudget) -> Result<Option<Coloring>, OracleError> {
    budget.validate(g)?;
    let mut limits = budget.limits();
    decide(g, k, &mut limits).map_err(|()| OracleError::BudgetExceeded { lower: 0, upper: k })
}

fn decide(g: &Graph, k: usize, limits: &mut Limits) -> Result<Option<Coloring>, ()> {
    if k == 0 || k > g.order() || k > MAX_COLORS {
        return Ok(None);
    }
    let candidates: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) + 1 >= k).collect();
    match BSearch::new(g.adjacency(), k).find_with_anchor_choice(&candidates, limits) {
        Outcome::Found(colors) => {
            let coloring = Coloring::new(k, colors).expect("search colors are in range");
            debug_assert!(verify_b_coloring(g, &coloring).unwrap().is_b_coloring());
            Ok(Some(coloring))
        }
        Outcome::Infeasible => Ok(None),
        Outcome::Exhausted => Err(()),
    }
}

/// Exact b-chromatic number together with an optimal b-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BChromatic {
    pub phi: usize,
    pub chromatic: usize,
    pub upper_bound: usize,
    pub coloring: Coloring,
}

/// φ(G): the largest `k` in `[χ(G), min(m(G), Δ(G) + 1)]` admitting a b-coloring.
pub fn exact_b_chromatic(g: &Graph, budget: &SearchBudget) -> Result<usize, OracleError> {
    exact_b_chromatic_with_witness(g, budget).map(|r| r.phi)
}

pub fn exact_b_chromatic_with_witness(g: &Graph, budget: &SearchBudget) -> Result<BChromatic, OracleError> {
    budget.validate(g)?;
    if g.order() == 0 {
        return Err(OracleError::EmptyGraph);
    }
    let mut limits = budget.limits();
    let chromatic = chromatic_with_limits(g, &mut limits)?;
    let upper_bound = usize::min(m_degree(g), g.max_degree() + 1);
    for k in (chromatic..=upper_bound).rev() {
        match decide(g, k, &mut limits) {
            Ok(Some(coloring)) => return Ok(BChromatic { phi: k, chromatic, upper_bound, coloring }),
            Ok(None) => {}
            Err(()) => return Err(OracleError::BudgetExceeded { lower: chromatic, upper: k }),
        }
    }
    unreachable!("every χ-coloring is a b-coloring, so k = χ always succeeds")
}
