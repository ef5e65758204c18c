//! Turning a draft into a verified b-coloring.
//!
//! A draft that already verifies is returned untouched. Otherwise the draft
//! is repaired with the same `k`: a set of anchors (one intended b-vertex per
//! color, the claimed rainbow when it is usable) keeps its colors, and a
//! hint-guided backtracking search recolors first a small neighbourhood of
//! the defects; then a tabu search and a hint-guided search over the whole
//! graph get a turn. Last comes a search that also picks the anchors.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

use crate::coloring::{verify_b_coloring, Coloring};
use crate::graph::Graph;
use crate::search::{BSearch, Limits, Outcome, MAX_COLORS};

use super::canvas::Draft;
use super::tabu::Tabu;

const LOCAL_NODES: u64 = 20_000;
const GLOBAL_NODES: u64 = 200_000;
const SEARCH_MAX_ORDER: usize = 60;
const SEARCH_TIME: Duration = Duration::from_secs(20);
const TABU_STEPS: u64 = 20_000;
const TABU_RESTARTS: u64 = 3;
const TABU_ANCHOR_SETS: u64 = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Fix {
    Verified(Vec<usize>),
    Repaired(Vec<usize>),
    Searched(Vec<usize>),
    Stored(Vec<usize>),
}

pub(crate) fn draft_is_b_coloring(g: &Graph, draft: &Draft) -> Option<Vec<usize>> {
    let colors: Vec<usize> = draft.colors.iter().copied().collect::<Option<_>>()?;
    let coloring = Coloring::new(draft.k, colors.clone()).ok()?;
    verify_b_coloring(g, &coloring).ok()?.is_b_coloring().then_some(colors)
}

pub(crate) fn fix(g: &Graph, draft: &Draft) -> Option<Fix> {
    if let Some(colors) = draft_is_b_coloring(g, draft) {
        return Some(Fix::Verified(colors));
    }
    if let Some(colors) = repair(g, draft) {
        return Some(Fix::Repaired(colors));
    }
    search(g, draft.k).map(Fix::Searched)
}

fn repair(g: &Graph, draft: &Draft) -> Option<Vec<usize>> {
    let k = draft.k;
    if k > MAX_COLORS || k > g.order() {
        return None;
    }
    let hint: Vec<usize> = draft.colors.iter().map(|c| c.unwrap_or(usize::MAX)).collect();
    let mut anchor_sets = Vec::new();
    if let Some(stated) = stated_anchors(g, draft) {
        anchor_sets.push(stated);
    }
    let derived = derived_anchors(g, k, &hint, &draft.rainbow);
    if !anchor_sets.contains(&derived) {
        anchor_sets.push(derived);
    }
    let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    for anchors in &anchor_sets {
        let bad = defects(g, k, &hint, anchors);
        for radius in 1..=3 {
            let free = ball(g, &bad, radius);
            let allowed: Vec<u64> =
                (0..g.order()).map(|v| if free[v] || hint[v] >= k { full } else { 1u64 << hint[v] }).collect();
            if let Some(colors) = anchored(g, k, &hint, &allowed, anchors, LOCAL_NODES) {
                return Some(colors);
            }
        }
        for seed in 0..TABU_RESTARTS {
            if let Some(colors) = Tabu::new(g, k, &hint, anchors, seed).run(TABU_STEPS) {
                return Some(colors);
            }
        }
        let allowed = vec![full; g.order()];
        if let Some(colors) = anchored(g, k, &hint, &allowed, anchors, GLOBAL_NODES) {
            return Some(colors);
        }
    }
    None
}

fn anchored(
    g: &Graph,
    k: usize,
    hint: &[usize],
    allowed: &[u64],
    anchors: &[(usize, usize)],
    nodes: u64,
) -> Option<Vec<usize>> {
    let mut allowed = allowed.to_vec();
    for &(v, c) in anchors {
        allowed[v] &= 1u64 << c;
    }
    let mut limits = Limits::new(None, Some(nodes));
    match BSearch::new(g.adjacency(), k).with_hint(hint).with_allowed(&allowed).complete(anchors, &mut limits) {
        Outcome::Found(colors) => Some(colors),
        _ => None,
    }
}

/// The claimed rainbow, when it names one colored vertex per color.
fn stated_anchors(g: &Graph, draft: &Draft) -> Option<Vec<(usize, usize)>> {
    let mut by_color = vec![None; draft.k];
    for &v in &draft.rainbow {
        let c = draft.colors[v]?;
        if g.degree(v) + 1 < draft.k {
            return None;
        }
        if by_color[c].replace(v).is_some() {
            return None;
        }
    }
    by_color.iter().enumerate().map(|(c, v)| v.map(|v| (v, c))).collect()
}

/// One anchor per color: a claimed rainbow vertex of that color if there is
/// one, otherwise the vertex of that color whose neighbourhood already shows
/// the most colors.
fn derived_anchors(g: &Graph, k: usize, hint: &[usize], rainbow: &[usize]) -> Vec<(usize, usize)> {
    let seen = |v: usize| {
        let mut mask = 0u64;
        for &w in g.neighbors(v) {
            if hint[w] < k {
                mask |= 1u64 << hint[w];
            }
        }
        mask.count_ones()
    };
    let mut used = vec![false; g.order()];
    let mut anchors = Vec::with_capacity(k);
    for c in 0..k {
        let pick = rainbow
            .iter()
            .copied()
            .find(|&v| hint[v] == c && !used[v] && g.degree(v) + 1 >= k)
            .or_else(|| {
                (0..g.order())
                    .filter(|&v| hint[v] == c && !used[v] && g.degree(v) + 1 >= k)
                    .max_by_key(|&v| (seen(v), usize::MAX - v))
            })
            .or_else(|| {
                (0..g.order())
                    .filter(|&v| !used[v] && g.degree(v) + 1 >= k)
                    .max_by_key(|&v| (g.degree(v), usize::MAX - v))
            });
        if let Some(v) = pick {
            used[v] = true;
            anchors.push((v, c));
        }
    }
    anchors
}

/// Vertices the repair has to be allowed to touch: uncolored vertices,
/// endpoints of monochromatic edges and anchors that are not yet b-vertices.
fn defects(g: &Graph, k: usize, hint: &[usize], anchors: &[(usize, usize)]) -> Vec<usize> {
    let mut bad: Vec<usize> = (0..g.order()).filter(|&v| hint[v] >= k).collect();
    for v in 0..g.order() {
        if hint[v] < k && g.neighbors(v).iter().any(|&w| hint[w] == hint[v]) {
            bad.push(v);
        }
    }
    for &(v, c) in anchors {
        let mut mask = 1u64 << c;
        for &w in g.neighbors(v) {
            if hint[w] < k {
                mask |= 1u64 << hint[w];
            }
        }
        if hint[v] != c || mask.count_ones() as usize != k {
            bad.push(v);
        }
    }
    bad
}

fn ball(g: &Graph, sources: &[usize], radius: usize) -> Vec<bool> {
    let mut dist = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s] != 0 {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        if dist[v] == radius {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist.into_iter().map(|d| d != usize::MAX).collect()
}

/// b-coloring search with `k` colors: tabu search over random anchor sets,
/// then an exhaustive search for graphs small enough.
pub(crate) fn search(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 0 || k > MAX_COLORS || k > g.order() {
        return None;
    }
    let candidates: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
    let start = vec![usize::MAX; g.order()];
    for seed in 0..TABU_ANCHOR_SETS {
        let anchors: Vec<(usize, usize)> =
            candidates.choose_multiple(&mut rng, k).copied().enumerate().map(|(c, v)| (v, c)).collect();
        if let Some(colors) = Tabu::new(g, k, &start, &anchors, seed).run(TABU_STEPS) {
            return Some(colors);
        }
    }
    if g.order() > SEARCH_MAX_ORDER {
        return None;
    }
    let mut limits = Limits::new(Some(Instant::now() + SEARCH_TIME), None);
    match BSearch::new(g.adjacency(), k).find_with_anchor_choice(&candidates, &mut limits) {
        Outcome::Found(colors) => Some(colors),
        _ => None,
    }
}
