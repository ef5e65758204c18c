//! Tables for `C_n ⊡ H`.

use crate::coloring::m_degree;
use crate::family::{FamilyKind, FamilySpec};
use crate::graph::Graph;

use super::canvas::{Canvas, Draft};
use super::path::{back, complete_copies, generic_copies, offset_star_table, spread_star_table};
use super::{skeleton_coloring, skeleton_modulus, Recipe};

pub(super) fn recipe(n: usize, right: FamilySpec, g: &Graph, k: usize) -> Recipe {
    let h_order = right.order();
    if n > 2 * h_order + 2 {
        return Recipe::Formula(generic(n, h_order, g));
    }
    Recipe::Formula(table(n, right, g, k))
}

/// The cycle table for `n <= 2|V(H)| + 2`; also used for `K_3 ⊡ H`, which is
/// the same labelled graph.
pub(super) fn table(n: usize, right: FamilySpec, g: &Graph, k: usize) -> Draft {
    let mut cv = Canvas::new(g, k);
    skeleton_coloring(n, skeleton_modulus(g, n), true).paint(&mut cv);
    let t = right.size as i64;
    let n = n as i64;
    match right.kind {
        FamilyKind::Path => cycle_path(&mut cv, n, t, |_, _, _| None),
        FamilyKind::Cycle => cycle_cycle(&mut cv, n, t),
        FamilyKind::Star => cycle_star(&mut cv, n, t, m_degree(g) as i64),
        FamilyKind::Complete => cycle_complete(&mut cv, n, t),
    }
    cv.into_draft()
}

/// `2|V(H)| + 3` colors, the path pattern with the closing inserted vertex.
pub(super) fn generic(n: usize, h_order: usize, g: &Graph) -> Draft {
    let k = 2 * h_order + 3;
    let mut cv = Canvas::new(g, k);
    skeleton_coloring(n, k, true).paint(&mut cv);
    generic_copies(&mut cv, n as i64, h_order as i64);
    cv.into_draft()
}

fn closing_rainbow(cv: &mut Canvas, n: i64) {
    cv.rainbow_path_inserted(n);
    cv.rainbow_s(0, n - 1);
}

fn cycle_path(cv: &mut Canvas, n: i64, t: i64, special: impl Fn(&Canvas, i64, i64) -> Option<i64>) {
    if n <= 4 {
        for i in 0..n {
            for j in 0..t {
                let value = if let Some(v) = special(cv, i, j) {
                    Some(v)
                } else {
                    match (i, j) {
                        (2, 2) | (3, 0) => Some(0),
                        (0, 0) | (3, 1) => Some(1),
                        (1, 0) => Some(2),
                        (1, 1) | (2, 0) => Some(3),
                        (0, 1) | (1, 2) | (2, 1) => Some(4),
                        _ => back(cv, i, j, 2),
                    }
                };
                cv.v(i, j, value);
            }
        }
        cv.rainbow_path_inserted(n);
        cv.rainbow_v(1, 1);
        cv.rainbow_v(2, 1);
        if n == 3 {
            cv.rainbow_s(0, 2);
        }
        return;
    }
    let floor = (n - 3) / 2;
    let ceil = (n - 2) / 2;
    for i in 0..n {
        for j in 0..t {
            let value = if let Some(v) = special(cv, i, j) {
                Some(v)
            } else if (j, n) == (1, 5) {
                Some(i + 1)
            } else if n % 2 == 1 && j < (n - 3) / 2 {
                Some((i + 2 * j + 3).rem_euclid(n))
            } else if n % 2 == 0 && ((i % 2 == 0 && j < floor) || (i % 2 == 1 && j < ceil)) {
                Some((i + 2 * j + (4 - 2 * (i % 2))).rem_euclid(n - 1))
            } else if (j, n) == (1, 6) && i % 2 == 0 {
                Some((i + 2) % 6)
            } else {
                back(cv, i, j, 2)
            };
            cv.v(i, j, value);
        }
    }
    closing_rainbow(cv, n);
}

fn cycle_cycle(cv: &mut Canvas, n: i64, t: i64) {
    cycle_path(cv, n, t, |cv, i, j| match (i, j, n) {
        (0, 2, 4) => Some(2),
        (3, 2, 4) => Some(4),
        (0, 2, 3) => Some(3),
        (_, 2, 5 | 7) => Some((i + 2) % n),
        (_, 2, 6 | 8) => {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            cv.get_v((i + sign).rem_euclid(n), 0)
        }
        _ => None,
    });
}

fn cycle_star(cv: &mut Canvas, n: i64, t: i64, m: i64) {
    if n <= t + 2 {
        let alpha = m - n;
        offset_star_table(cv, n, t, alpha, n);
        closing_rainbow(cv, n);
        if n <= (t + 3) / 2 {
            for i in 0..n {
                cv.rainbow_v(i, 0);
            }
        } else {
            for i in 1..=t + 3 - n {
                cv.rainbow_v(i, 1);
            }
        }
    } else {
        spread_star_table(cv, n, t, n, n - 5);
        closing_rainbow(cv, n);
    }
}

fn cycle_complete(cv: &mut Canvas, n: i64, t: i64) {
    complete_copies(cv, n, t);
    if n <= t + 1 {
        cv.v(0, n - 2, t);
        cv.rainbow_path_inserted(n);
        for j in (n - 3).max(0)..t {
            cv.rainbow_v(1, j);
        }
    } else {
        closing_rainbow(cv, n);
    }
}
