//! Backtracking search for b-colorings.
//!
//! Variables are vertices with bitmask domains over `0..k` (so `k <= 64`).
//! Anchors are `(vertex, color)` pairs that must end up as b-vertices of their
//! color. Propagation does forward checking on edges plus, per anchor, unit
//! propagation and a matching test between the colors the anchor still
//! misses and its unassigned neighbours.

use std::time::Instant;

const UNSET: u8 = u8::MAX;

pub(crate) const MAX_COLORS: usize = 64;

#[inline]
fn bit(c: u8) -> u64 {
    1u64 << c
}

/// Node and wall-clock limits shared by one search.
#[derive(Debug, Clone)]
pub(crate) struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    pub nodes: u64,
    exhausted: bool,
}

impl Limits {
    pub fn new(deadline: Option<Instant>, node_limit: Option<u64>) -> Self {
        Self { deadline, node_limit, nodes: 0, exhausted: false }
    }

    /// Counts one node; false once a limit is hit.
    pub fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        let over_nodes = self.node_limit.is_some_and(|limit| self.nodes > limit);
        let over_time = self.nodes.is_multiple_of(256) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.exhausted = true;
        }
        !self.exhausted
    }

    #[cfg(test)]
    pub fn is_exhausted(&self) -> bool {
        self.exhausted
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<usize>),
    Infeasible,
    Exhausted,
}

#[derive(Clone)]
struct State {
    dom: Vec<u64>,
    color: Vec<u8>,
}

pub(crate) struct BSearch<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    full: u64,
    hint: Option<&'a [usize]>,
    /// Per-vertex restriction applied before search (all colors if absent).
    allowed: Option<&'a [u64]>,
}

impl<'a> BSearch<'a> {
    pub fn new(adj: &'a [Vec<usize>], k: usize) -> Self {
        assert!((1..=MAX_COLORS).contains(&k), "k = {k} outside 1..=64");
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        Self { adj, k, full, hint: None, allowed: None }
    }

    pub fn with_hint(mut self, hint: &'a [usize]) -> Self {
        self.hint = Some(hint);
        self
    }

    pub fn with_allowed(mut self, allowed: &'a [u64]) -> Self {
        self.allowed = Some(allowed);
        self
    }

    fn initial_state(&self) -> State {
        let n = self.adj.len();
        let dom = match self.allowed {
            Some(a) => a.iter().map(|&m| m & self.full).collect(),
            None => vec![self.full; n],
        };
        State { dom, color: vec![UNSET; n] }
    }

    /// Completes a coloring in which every anchor is a b-vertex of its color.
    pub fn complete(&self, anchors: &[(usize, usize)], limits: &mut Limits) -> Outcome {
        let mut st = self.initial_state();
        if st.dom.contains(&0) {
            return Outcome::Infeasible;
        }
        let queue: Vec<(usize, u8)> = anchors.iter().map(|&(v, c)| (v, c as u8)).collect();
        if !self.propagate(&mut st, queue, anchors) {
            return Outcome::Infeasible;
        }
        self.dfs(st, anchors, limits)
    }

    /// Searches for a b-coloring with all `k` colors, choosing one anchor per
    /// color among `candidates`. Anchors are taken in increasing id order and
    /// color `i` goes to the `i`-th anchor, which removes color permutations.
    pub fn find_with_anchor_choice(&self, candidates: &[usize], limits: &mut Limits) -> Outcome {
        let mut cands = candidates.to_vec();
        cands.sort_unstable();
        cands.dedup();
        if cands.len() < self.k {
            return Outcome::Infeasible;
        }
        let st = self.initial_state();
        let mut chosen = Vec::with_capacity(self.k);
        self.choose(0, 0, st, &cands, &mut chosen, limits)
    }

    fn choose(
        &self,
        level: usize,
        start: usize,
        st: State,
        cands: &[usize],
        chosen: &mut Vec<(usize, usize)>,
        limits: &mut Limits,
    ) -> Outcome {
        if level == self.k {
            return self.dfs(st, chosen, limits);
        }
        let last = cands.len() - (self.k - level);
        for idx in start..=last {
            if !limits.tick() {
                return Outcome::Exhausted;
            }
            let v = cands[idx];
            if st.dom[v] & bit(level as u8) == 0 {
                continue;
            }
            let mut next = st.clone();
            chosen.push((v, level));
            let outcome = if self.propagate(&mut next, vec![(v, level as u8)], chosen) {
                self.choose(level + 1, idx + 1, next, cands, chosen, limits)
            } else {
                Outcome::Infeasible
            };
            chosen.pop();
            match outcome {
                Outcome::Infeasible => {}
                other => return other,
            }
        }
        Outcome::Infeasible
    }

    fn dfs(&self, st: State, anchors: &[(usize, usize)], limits: &mut Limits) -> Outcome {
        if !limits.tick() {
            return Outcome::Exhausted;
        }
        let Some(v) = self.pick_variable(&st) else {
            return Outcome::Found(st.color.iter().map(|&c| c as usize).collect());
        };
        let dom = st.dom[v];
        let hinted = self.hint.map(|h| h[v]).filter(|&c| c < self.k && dom & bit(c as u8) != 0);
        let rest = (0..self.k as u8).filter(|&c| dom & bit(c) != 0 && Some(c as usize) != hinted);
        for c in hinted.map(|c| c as u8).into_iter().chain(rest) {
            let mut next = st.clone();
            if !self.propagate(&mut next, vec![(v, c)], anchors) {
                continue;
            }
            match self.dfs(next, anchors, limits) {
                Outcome::Infeasible => {}
                other => return other,
            }
        }
        Outcome::Infeasible
    }

    /// Unassigned vertex with the smallest domain; ties go to larger degree, then lower id.
    fn pick_variable(&self, st: &State) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..st.dom.len() {
            if st.color[v] != UNSET {
                continue;
            }
            let size = st.dom[v].count_ones();
            let key = (size, usize::MAX - self.adj[v].len(), v);
            if best.is_none_or(|b| key < b) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn propagate(&self, st: &mut State, mut queue: Vec<(usize, u8)>, anchors: &[(usize, usize)]) -> bool {
        loop {
            while let Some((v, c)) = queue.pop() {
                if st.color[v] != UNSET {
                    if st.color[v] != c {
                        return false;
                    }
                    continue;
                }
                if st.dom[v] & bit(c) == 0 {
                    return false;
                }
                st.color[v] = c;
                st.dom[v] = bit(c);
                for &w in &self.adj[v] {
                    if st.color[w] == c {
                        return false;
                    }
                    if st.color[w] == UNSET && st.dom[w] & bit(c) != 0 {
                        st.dom[w] &= !bit(c);
                        match st.dom[w].count_ones() {
                            0 => return false,
                            1 => queue.push((w, st.dom[w].trailing_zeros() as u8)),
                            _ => {}
                        }
                    }
                }
            }
            for &(b, cb) in anchors {
                if !self.check_anchor(st, b, cb as u8, &mut queue) {
                    return false;
                }
            }
            if queue.is_empty() {
                return true;
            }
        }
    }

    fn check_anchor(&self, st: &State, b: usize, cb: u8, queue: &mut Vec<(usize, u8)>) -> bool {
        if st.color[b] != cb && st.dom[b] & bit(cb) == 0 {
            return false;
        }
        let mut have = bit(cb);
        let mut open: Vec<usize> = Vec::new();
        let mut reach = 0u64;
        for &w in &self.adj[b] {
            if st.color[w] != UNSET {
                have |= bit(st.color[w]);
            } else {
                open.push(w);
                reach |= st.dom[w];
            }
        }
        let need = self.full & !have;
        if need == 0 {
            return true;
        }
        if need & !reach != 0 || (need.count_ones() as usize) > open.len() {
            return false;
        }
        let mut forced = false;
        let mut rest = need;
        while rest != 0 {
            let d = rest.trailing_zeros() as u8;
            rest &= rest - 1;
            let mut only = None;
            let mut count = 0;
            for &w in &open {
                if st.dom[w] & bit(d) != 0 {
                    count += 1;
                    only = Some(w);
                    if count > 1 {
                        break;
                    }
                }
            }
            if count == 1 {
                queue.push((only.unwrap(), d));
                forced = true;
            }
        }
        forced || has_color_matching(need, &open, &st.dom)
    }
}

/// Whether every color in `need` can be given to a distinct vertex of `open`
/// whose domain contains it.
fn has_color_matching(need: u64, open: &[usize], dom: &[u64]) -> bool {
    let colors: Vec<u8> = (0..64u8).filter(|&c| need & bit(c) != 0).collect();
    let mut owner: Vec<Option<usize>> = vec![None; open.len()];
    for &c in &colors {
        let mut visited = vec![false; open.len()];
        if !augment(c, open, dom, &mut owner, &mut visited) {
            return false;
        }
    }
    true
}

fn augment(c: u8, open: &[usize], dom: &[u64], owner: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for (slot, &w) in open.iter().enumerate() {
        if visited[slot] || dom[w] & bit(c) == 0 {
            continue;
        }
        visited[slot] = true;
        match owner[slot] {
            None => {
                owner[slot] = Some(c as usize);
                return true;
            }
            Some(prev) => {
                if augment(prev as u8, open, dom, owner, visited) {
                    owner[slot] = Some(c as usize);
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{verify_b_coloring, Coloring};
    use crate::family::{build_family, FamilySpec};

    fn unlimited() -> Limits {
        Limits::new(None, None)
    }

    #[test]
    fn anchored_completion_on_p5() {
        let g = build_family(FamilySpec::path(5)).unwrap();
        let out = BSearch::new(g.adjacency(), 3).complete(&[(1, 0), (2, 1), (3, 2)], &mut unlimited());
        let Outcome::Found(colors) = out else { panic!("{out:?}") };
        let report = verify_b_coloring(&g, &Coloring::new(3, colors).unwrap()).unwrap();
        assert!(report.is_b_coloring());
    }

    #[test]
    fn c4_has_no_three_b_coloring() {
        let g = build_family(FamilySpec::cycle(4)).unwrap();
        let all: Vec<usize> = (0..4).collect();
        let out = BSearch::new(g.adjacency(), 3).find_with_anchor_choice(&all, &mut unlimited());
        assert_eq!(out, Outcome::Infeasible);
    }

    #[test]
    fn hint_is_followed_when_valid() {
        let g = build_family(FamilySpec::path(5)).unwrap();
        let hint = [0, 1, 2, 0, 1];
        let out = BSearch::new(g.adjacency(), 3).with_hint(&hint).complete(&[(1, 1), (2, 2), (3, 0)], &mut unlimited());
        assert_eq!(out, Outcome::Found(hint.to_vec()));
    }

    #[test]
    fn node_limit_reports_exhaustion() {
        let g = build_family(FamilySpec::complete(6)).unwrap();
        let all: Vec<usize> = (0..6).collect();
        let mut limits = Limits::new(None, Some(2));
        let out = BSearch::new(g.adjacency(), 6).find_with_anchor_choice(&all, &mut limits);
        assert_eq!(out, Outcome::Exhausted);
        assert!(limits.is_exhausted());
    }

    #[test]
    fn matching_detects_hall_violation() {
        // two open neighbours that can only take color 1, but colors 1 and 2 are needed
        let dom = vec![0b010, 0b010];
        assert!(!has_color_matching(0b110, &[0, 1], &dom));
        let dom = vec![0b010, 0b110];
        assert!(has_color_matching(0b110, &[0, 1], &dom));
    }
}
