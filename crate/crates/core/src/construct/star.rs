//! Tables for `S_n ⊡ H`. The left star has center `u_0` and leaves
//! `u_1, …, u_n`.

use crate::coloring::{verify_b_coloring, Coloring};
use crate::family::{FamilyKind, FamilySpec};
use crate::graph::Graph;

use super::canvas::{Canvas, Draft};
use super::{optimal_family_coloring, Recipe};

pub(super) fn recipe(n: usize, right: FamilySpec, g: &Graph, k: usize) -> Recipe {
    let t = right.size;
    if right.kind == FamilyKind::Star && t >= 3 && n < t {
        return Recipe::Formula(star_star(n as i64, t as i64, g, k));
    }
    let h = crate::family::build_family(right).expect("validated operand");
    let draft = generic(n, &h, &optimal_family_coloring(right), g);
    debug_assert_eq!(draft.k, k);
    Recipe::Formula(draft)
}

/// `min{n, |V(H)|+2} + φ(H)` colors from an optimal coloring `c_h` of `H`:
/// copy 0 repeats `c_h`, the inserted vertices cycle through the new colors,
/// and every other copy uses all the new colors its inserted neighbour misses.
pub(super) fn generic(n: usize, h: &Graph, c_h: &Coloring, g: &Graph) -> Draft {
    let t = h.order();
    let phi_h = c_h.k();
    let alpha = usize::min(n, t + 2);
    let k = alpha + phi_h;
    let mut cv = Canvas::new(g, k);
    cv.u(0, 0);
    for j in 0..t {
        cv.v(0, j as i64, c_h.color(j) as i64);
    }
    for i in 1..=n {
        let s = phi_h + (i - 1) % alpha;
        let u = phi_h + i % alpha;
        cv.s(0, i as i64, s as i64);
        cv.u(i as i64, u as i64);
        let must: Vec<usize> = (phi_h..phi_h + alpha).filter(|&c| c != s && c != u).collect();
        let mut allowed = must.clone();
        if n <= h.max_degree() + 2 {
            allowed.extend(0..=h.max_degree() + 2 - n);
        }
        let wide: Vec<usize> = (0..k).filter(|&c| c != s).collect();
        let copy = surjective_coloring(h, &allowed, &must).or_else(|| surjective_coloring(h, &wide, &must));
        for (j, c) in copy.into_iter().flatten().enumerate() {
            cv.v(i as i64, j as i64, c as i64);
        }
    }
    for i in 1..=alpha {
        cv.rainbow_s(0, i as i64);
    }
    let report = verify_b_coloring(h, c_h).expect("c_h covers H");
    for list in &report.b_vertices {
        if let Some(&v) = list.first() {
            cv.rainbow_v(0, v as i64);
        }
    }
    cv.into_draft()
}

/// Proper coloring of `h` from `allowed` that uses every color of `must`.
fn surjective_coloring(h: &Graph, allowed: &[usize], must: &[usize]) -> Option<Vec<usize>> {
    fn go(h: &Graph, v: usize, allowed: &[usize], must: &[usize], colors: &mut Vec<usize>) -> bool {
        let missing = must.iter().filter(|c| !colors.contains(c)).count();
        if missing > h.order() - v {
            return false;
        }
        if v == h.order() {
            return true;
        }
        for &c in allowed {
            if h.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
                continue;
            }
            colors.push(c);
            if go(h, v + 1, allowed, must, colors) {
                return true;
            }
            colors.pop();
        }
        false
    }
    let mut colors = Vec::with_capacity(h.order());
    go(h, 0, allowed, must, &mut colors).then_some(colors)
}

fn star_star(n: i64, t: i64, g: &Graph, k: usize) -> Draft {
    let mut cv = Canvas::new(g, k);
    if 2 * n <= t + 1 {
        cv.u(0, 2 * n);
        cv.v(0, 0, 2 * n);
        for j in 1..=t {
            cv.v(0, j, 1 + (j - 1) % n);
        }
        for i in 1..=n {
            cv.u(i, 2 * n);
            cv.s(0, i, 2 * (i - 1));
            cv.v(i, 0, 2 * i - 1);
            for j in 1..=t {
                cv.v(i, j, 2 * i + (j - 1) % (2 * n - 1));
            }
        }
    } else {
        cv.u(0, 1);
        cv.v(0, 0, 1);
        for j in 1..=t {
            cv.v(0, j, 3);
        }
        for i in 1..=n {
            cv.u(i, 1);
            cv.s(0, i, (2 * (i - 1)) % (t + 2));
            cv.v(i, 0, (2 * i - 1) % (t + 2));
            for j in 1..=t {
                cv.v(i, j, 2 * i + (j - 1) % (t + 2));
            }
        }
    }
    cv.into_draft()
}
