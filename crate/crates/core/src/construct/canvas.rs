//! A partial coloring addressed by vertex labels, for transcribing the
//! piecewise coloring tables.
//!
//! Indices wrap the way the tables expect: base and inserted indices modulo
//! the order of the left operand, copy indices modulo the order of the right
//! one. Values are reduced into `0..k`; a value that needed reducing sets the
//! `reduced` flag so callers can report it.

use crate::graph::{Graph, VertexLabel};

/// Draft coloring produced by a table, before verification.
#[derive(Debug, Clone)]
pub(crate) struct Draft {
    pub k: usize,
    pub colors: Vec<Option<usize>>,
    /// The rainbow set the table claims, as vertex ids.
    pub rainbow: Vec<usize>,
    pub reduced: bool,
    /// The table was read off a coloring that itself needed repair.
    pub inherited_repair: bool,
}

pub(crate) struct Canvas<'g> {
    g: &'g Graph,
    left: i64,
    right: i64,
    k: usize,
    colors: Vec<Option<usize>>,
    rainbow: Vec<usize>,
    reduced: bool,
    inherited_repair: bool,
}

impl<'g> Canvas<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Self {
        let labels = g.labels().expect("corona graphs are labelled");
        let left = labels.iter().filter(|l| matches!(l, VertexLabel::Base(_))).count() as i64;
        let copies = labels.iter().filter(|l| matches!(l, VertexLabel::Copy(..))).count() as i64;
        let right = if left == 0 { 0 } else { copies / left };
        Self {
            g,
            left,
            right,
            k,
            colors: vec![None; g.order()],
            rainbow: Vec::new(),
            reduced: false,
            inherited_repair: false,
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn li(&self, i: i64) -> usize {
        i.rem_euclid(self.left) as usize
    }

    fn ri(&self, j: i64) -> usize {
        j.rem_euclid(self.right) as usize
    }

    fn id_u(&self, i: i64) -> usize {
        self.g.vertex(VertexLabel::Base(self.li(i))).expect("base vertex exists")
    }

    /// `None` when `u_i u_j` is not an edge of the left operand.
    fn id_s(&self, i: i64, j: i64) -> Option<usize> {
        self.g.vertex(VertexLabel::inserted(self.li(i), self.li(j)))
    }

    fn id_v(&self, i: i64, j: i64) -> usize {
        self.g.vertex(VertexLabel::Copy(self.li(i), self.ri(j))).expect("copy vertex exists")
    }

    fn put(&mut self, id: usize, value: Option<i64>) {
        let Some(value) = value else { return };
        let k = self.k as i64;
        if !(0..k).contains(&value) {
            self.reduced = true;
        }
        self.colors[id] = Some(value.rem_euclid(k) as usize);
    }

    pub fn u(&mut self, i: i64, value: impl Into<Option<i64>>) {
        let id = self.id_u(i);
        self.put(id, value.into());
    }

    pub fn s(&mut self, i: i64, j: i64, value: impl Into<Option<i64>>) {
        let id = self.id_s(i, j).unwrap_or_else(|| panic!("s_{{{i},{j}}} is not an inserted vertex"));
        self.put(id, value.into());
    }

    pub fn v(&mut self, i: i64, j: i64, value: impl Into<Option<i64>>) {
        let id = self.id_v(i, j);
        self.put(id, value.into());
    }

    pub fn get_u(&self, i: i64) -> Option<i64> {
        self.colors[self.id_u(i)].map(|c| c as i64)
    }

    pub fn get_s(&self, i: i64, j: i64) -> Option<i64> {
        self.id_s(i, j).and_then(|id| self.colors[id]).map(|c| c as i64)
    }

    pub fn get_v(&self, i: i64, j: i64) -> Option<i64> {
        self.colors[self.id_v(i, j)].map(|c| c as i64)
    }

    pub fn rainbow_u(&mut self, i: i64) {
        let id = self.id_u(i);
        self.push_rainbow(id);
    }

    pub fn rainbow_s(&mut self, i: i64, j: i64) {
        if let Some(id) = self.id_s(i, j) {
            self.push_rainbow(id);
        }
    }

    pub fn rainbow_v(&mut self, i: i64, j: i64) {
        let id = self.id_v(i, j);
        self.push_rainbow(id);
    }

    fn push_rainbow(&mut self, id: usize) {
        if !self.rainbow.contains(&id) {
            self.rainbow.push(id);
        }
    }

    /// `s_{0,1}, …, s_{n-2,n-1}` of a path or cycle of order `n`.
    pub fn rainbow_path_inserted(&mut self, n: i64) {
        for j in 0..n - 1 {
            self.rainbow_s(j, j + 1);
        }
    }

    pub fn mark_inherited_repair(&mut self) {
        self.inherited_repair = true;
    }

    pub fn into_draft(self) -> Draft {
        Draft {
            k: self.k,
            colors: self.colors,
            rainbow: self.rainbow,
            reduced: self.reduced,
            inherited_repair: self.inherited_repair,
        }
    }
}
