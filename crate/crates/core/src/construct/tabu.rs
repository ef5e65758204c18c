//! Tabu search for a b-coloring with fixed anchors.
//!
//! Anchors keep their colors for the whole run. The cost is the number of
//! monochromatic edges plus, for every anchor, the number of other colors
//! missing from its neighbourhood; a b-coloring with these anchors is a
//! zero-cost state. Runs are seeded, so results are reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

const NOISE: f64 = 0.02;

pub(crate) struct Tabu<'g> {
    g: &'g Graph,
    k: usize,
    colors: Vec<usize>,
    fixed: Vec<bool>,
    /// `anchor_of[v]` is the anchor's color when `v` is an anchor.
    anchor_of: Vec<Option<usize>>,
    /// Per vertex, how many neighbours have each color.
    counts: Vec<Vec<u32>>,
    tabu_until: Vec<Vec<u64>>,
    rng: ChaCha8Rng,
}

impl<'g> Tabu<'g> {
    /// `start` gives initial colors (values `>= k` are drawn at random).
    pub(crate) fn new(g: &'g Graph, k: usize, start: &[usize], anchors: &[(usize, usize)], seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = g.order();
        let mut colors: Vec<usize> = start.iter().map(|&c| if c < k { c } else { rng.gen_range(0..k) }).collect();
        let mut fixed = vec![false; n];
        let mut anchor_of = vec![None; n];
        for &(v, c) in anchors {
            colors[v] = c;
            fixed[v] = true;
            anchor_of[v] = Some(c);
        }
        let mut counts = vec![vec![0u32; k]; n];
        for (v, row) in counts.iter_mut().enumerate() {
            for &w in g.neighbors(v) {
                row[colors[w]] += 1;
            }
        }
        Self { g, k, colors, fixed, anchor_of, counts, tabu_until: vec![vec![0; k]; n], rng }
    }

    fn cost(&self) -> i64 {
        let mut total = 0i64;
        for v in 0..self.g.order() {
            total += i64::from(self.counts[v][self.colors[v]]);
        }
        total /= 2;
        for v in 0..self.g.order() {
            if let Some(c) = self.anchor_of[v] {
                total += self.missing(v, c);
            }
        }
        total
    }

    fn missing(&self, v: usize, own: usize) -> i64 {
        (0..self.k).filter(|&c| c != own && self.counts[v][c] == 0).count() as i64
    }

    /// Cost change of recoloring `v` to `to`.
    fn delta(&self, v: usize, to: usize) -> i64 {
        let from = self.colors[v];
        let mut d = i64::from(self.counts[v][to]) - i64::from(self.counts[v][from]);
        for &a in self.g.neighbors(v) {
            if let Some(ca) = self.anchor_of[a] {
                if from != ca && self.counts[a][from] == 1 {
                    d += 1;
                }
                if to != ca && self.counts[a][to] == 0 {
                    d -= 1;
                }
            }
        }
        d
    }

    fn recolor(&mut self, v: usize, to: usize) {
        let from = self.colors[v];
        for i in 0..self.g.neighbors(v).len() {
            let w = self.g.neighbors(v)[i];
            self.counts[w][from] -= 1;
            self.counts[w][to] += 1;
        }
        self.colors[v] = to;
    }

    /// Vertices whose recoloring can lower the cost.
    fn candidates(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut mark = vec![false; self.g.order()];
        for v in 0..self.g.order() {
            let conflicted = self.counts[v][self.colors[v]] > 0;
            let deficient = self.anchor_of[v].is_some_and(|c| self.missing(v, c) > 0);
            if conflicted && !self.fixed[v] && !mark[v] {
                mark[v] = true;
                out.push(v);
            }
            if conflicted || deficient {
                for &w in self.g.neighbors(v) {
                    if !self.fixed[w] && !mark[w] {
                        mark[w] = true;
                        out.push(w);
                    }
                }
            }
        }
        out
    }

    /// Runs for at most `steps` moves; returns the coloring on success.
    pub(crate) fn run(mut self, steps: u64) -> Option<Vec<usize>> {
        let mut cost = self.cost();
        let mut best = cost;
        for step in 1..=steps {
            if cost == 0 {
                return Some(self.colors);
            }
            let cands = self.candidates();
            if cands.is_empty() {
                return None;
            }
            let mv = if self.rng.gen_bool(NOISE) {
                let v = *cands.choose(&mut self.rng).expect("non-empty");
                let to = self.rng.gen_range(0..self.k);
                (to != self.colors[v]).then(|| (v, to, self.delta(v, to)))
            } else {
                let mut chosen: Option<(usize, usize, i64)> = None;
                let mut ties = 0u32;
                for &v in &cands {
                    for to in 0..self.k {
                        if to == self.colors[v] {
                            continue;
                        }
                        let d = self.delta(v, to);
                        let allowed = self.tabu_until[v][to] < step || cost + d < best;
                        if !allowed {
                            continue;
                        }
                        match chosen {
                            Some((_, _, bd)) if d > bd => {}
                            Some((_, _, bd)) if d == bd => {
                                ties += 1;
                                if self.rng.gen_range(0..ties) == 0 {
                                    chosen = Some((v, to, d));
                                }
                            }
                            _ => {
                                ties = 1;
                                chosen = Some((v, to, d));
                            }
                        }
                    }
                }
                chosen
            };
            let Some((v, to, d)) = mv else { continue };
            let from = self.colors[v];
            self.recolor(v, to);
            cost += d;
            best = best.min(cost);
            let tenure = 7 + self.rng.gen_range(0..10) + cands.len() as u64 / 4;
            self.tabu_until[v][from] = step + tenure;
        }
        (cost == 0).then_some(self.colors)
    }
}
