//! Tables for `K_n ⊡ H`, in the range `m(K_n ⊡ H) <= n + 2`.

use crate::coloring::{m_degree, verify_b_coloring, Coloring};
use crate::family::{build_family, FamilyKind, FamilySpec};
use crate::graph::{Graph, VertexLabel};

use super::canvas::{Canvas, Draft};
use super::{cycle, optimal_family_coloring, Recipe};

pub(super) fn recipe(n: usize, right: FamilySpec, g: &Graph, k: usize) -> Recipe {
    let t = right.size;
    // K_3 is C_3, and the two give the same labelled corona
    let right = if right.kind == FamilyKind::Complete && t == 3 { FamilySpec::cycle(3) } else { right };
    let kind = right.kind;
    if n == 2 {
        let c_h = optimal_family_coloring(right);
        if c_h.k() + 1 != k {
            return Recipe::Search;
        }
        let h = build_family(right).expect("validated operand");
        return Recipe::Formula(k2(&h, &c_h, g));
    }
    if n == 3 {
        return Recipe::Formula(cycle::table(3, right, g, k));
    }
    let m = m_degree(g) as i64;
    let mut cv = Canvas::new(g, k);
    let (n, t) = (n as i64, t as i64);
    match (kind, n, t) {
        (FamilyKind::Path | FamilyKind::Cycle, 4, _) => four(&mut cv, t, m),
        (FamilyKind::Complete, 4, _) | (FamilyKind::Complete, 5, 2) => return Recipe::Search,
        (FamilyKind::Path, _, 3) => {
            p3(&mut cv, n, 3, m);
        }
        (FamilyKind::Path, _, _) => long_path(&mut cv, n, t, m),
        (FamilyKind::Cycle, _, 3) => {
            p3(&mut cv, n, 3, m);
            for i in 1..n {
                cv.v(i, 2, n + 1);
            }
        }
        (FamilyKind::Cycle, _, 4) => c4(&mut cv, n, m),
        (FamilyKind::Cycle, _, _) => long_path(&mut cv, n, t, m),
        (FamilyKind::Star, _, _) if n == 2 * t + 3 => odd_star(&mut cv, n, t),
        (FamilyKind::Star, _, _) => return from_p3(n as usize, t, g, k),
        (FamilyKind::Complete, _, 1) => k1(&mut cv, n),
        (FamilyKind::Complete, 6, 2) => return Recipe::Stored(&K6_K2),
        (FamilyKind::Complete, _, 2) => {
            p3(&mut cv, n, 2, m);
        }
        (FamilyKind::Complete, _, _) => return Recipe::Search,
    }
    Recipe::Formula(cv.into_draft())
}

/// `φ(H) + 1` colors on `K_2 ⊡ H`: `c(u_0) = c(u_1) = 0`, `c(s_{0,1}) = φ(H)`,
/// both copies repeat `c_h`.
pub(super) fn k2(h: &Graph, c_h: &Coloring, g: &Graph) -> Draft {
    let mut cv = Canvas::new(g, c_h.k() + 1);
    cv.u(0, 0);
    cv.u(1, 0);
    cv.s(0, 1, c_h.k() as i64);
    for i in 0..2 {
        for (j, &c) in c_h.assignment().iter().enumerate() {
            cv.v(i, j as i64, c as i64);
        }
    }
    cv.rainbow_s(0, 1);
    let report = verify_b_coloring(h, c_h).expect("c_h covers H");
    for list in &report.b_vertices {
        if let Some(&v) = list.first() {
            cv.rainbow_v(0, v as i64);
        }
    }
    cv.into_draft()
}

fn four(cv: &mut Canvas, t: i64, m: i64) {
    for i in 0..4 {
        cv.u(i, i % m);
        for j in i + 1..4 {
            cv.s(i, j, if j == i + 1 { (i - 1).rem_euclid(4) } else { 4 + i });
        }
    }
    for i in 0..4 {
        for j in 0..t {
            let value = match (i, j) {
                (1 | 3, 1) => Some(4),
                (0 | 2, 1) => Some(5),
                (_, 2) => Some(i),
                (_, 0) => Some((i + 1) % 4),
                _ if j >= 2 => cv.get_v(i, j - 2),
                _ => None,
            };
            cv.v(i, j, value);
        }
    }
}

/// Inserted colors for `n >= 7`, `t = 3` on `K_n`.
fn inserted(cv: &mut Canvas, n: i64) {
    for a in 0..n {
        for b in a + 1..n {
            let value = if n % 2 == 1 {
                (a + b + 1) % (n + 1)
            } else {
                let d = b - a;
                let (i, h) = if 2 * d <= n { (a, d) } else { (b, n - d) };
                if h == 1 {
                    (i - 2).rem_euclid(n + 1)
                } else if 2 * h < n && h % 2 == 0 {
                    (i + (n - h) / 2).rem_euclid(n + 1)
                } else if 2 * h < n {
                    (i - (h - 1) / 2).rem_euclid(n + 1)
                } else {
                    i + 1
                }
            };
            cv.s(a, b, value);
        }
    }
}

/// The `n >= 7`, `P_3` coloring, applied to copy positions `0..width`.
fn p3(cv: &mut Canvas, n: i64, width: i64, m: i64) {
    for i in 0..n {
        cv.u(i, i % m);
    }
    inserted(cv, n);
    for i in 0..n {
        for k in 0..width {
            let value = if k == 1 {
                cv.get_u(i)
            } else if n % 2 == 1 && (k == 0 || k == 2) {
                Some((2 * i + 1) % (n + 1))
            } else {
                cv.get_s(i - 1, i + 1)
            };
            cv.v(i, k, value);
        }
    }
    p3_rainbow(cv, n, width);
}

fn p3_rainbow(cv: &mut Canvas, n: i64, width: i64) {
    if n % 2 == 1 {
        for i in 0..n {
            cv.rainbow_v(i, 1);
        }
        if width > 2 {
            cv.rainbow_v((n - 1) / 2, 2);
        }
    } else {
        for i in 0..n / 2 {
            cv.rainbow_v(i, 1);
            if width > 2 {
                cv.rainbow_v(i, 2);
            }
        }
        cv.rainbow_v(n / 2, 1);
    }
}

/// `n >= 2t+1 > 7`: the `P_3` coloring with a new color on some copy vertices.
fn long_path(cv: &mut Canvas, n: i64, t: i64, m: i64) {
    p3(cv, n, 3, m);
    let even = n % 2 == 0;
    for i in 0..n {
        for k in 0..t {
            let new_color = if even {
                (i != n / 2 && (k == 0 || k == 3)) || (i, k) == (n / 2, 1)
            } else {
                (i != (n - 1) / 2 && k == 2) || (i == (n - 1) / 2 && (k == 0 || k == 3))
            };
            let value = if new_color {
                Some(n + 1)
            } else if k == 4 || k == 5 {
                cv.get_v(i, k - 3)
            } else if k >= 3 {
                cv.get_v(i, k - 2)
            } else {
                continue;
            };
            cv.v(i, k, value);
        }
    }
    if even {
        cv.rainbow_v(n / 2, 1);
    } else {
        cv.rainbow_v(0, 2);
    }
}

/// `K_n ⊡ C_4`, `n >= 9`: the `P_3` coloring extended to four positions.
fn c4(cv: &mut Canvas, n: i64, m: i64) {
    p3(cv, n, 4, m);
    for j in 0..4 {
        for i in 0..n {
            let value = if n % 2 == 0 {
                if i == n / 2 && (j == 1 || j == 3) {
                    cv.get_u(n / 2)
                } else if i != n / 2 && j == 3 {
                    cv.get_v(i, 1)
                } else if j == 0 {
                    cv.get_v(i, 2)
                } else {
                    continue;
                }
            } else if i == (n - 1) / 2 && j == 0 {
                Some(n + 1)
            } else if i != (n - 1) / 2 && j == 2 {
                cv.get_v(i, 0)
            } else if j == 3 {
                cv.get_v(i, 1)
            } else {
                continue;
            };
            cv.v(i, j, value);
        }
    }
}

/// `n >= 2t+4`: a verified `K_n ⊡ P_3` coloring moved onto the star, the
/// middle path vertex becoming the center and every leaf beyond the second
/// repeating the last. Neighbourhood color sets carry over unchanged.
fn from_p3(n: usize, t: i64, g: &Graph, k: usize) -> Recipe {
    let Ok(base) = super::construct_coloring(FamilySpec::complete(n), FamilySpec::path(3)) else {
        return Recipe::Search;
    };
    if base.k() != k {
        return Recipe::Search;
    }
    let color = |label| base.coloring.color(base.graph.vertex(label).expect("label in K_n ⊡ P_3")) as i64;
    let mut cv = Canvas::new(g, k);
    if base.repaired {
        cv.mark_inherited_repair();
    }
    for a in 0..n {
        cv.u(a as i64, color(VertexLabel::Base(a)));
        for b in a + 1..n {
            cv.s(a as i64, b as i64, color(VertexLabel::Inserted(a, b)));
        }
    }
    // swaps the center and the first leaf; the map is its own inverse on 0..3
    let relabel = |j: usize| match j {
        0 => 1,
        1 => 0,
        _ => 2,
    };
    for i in 0..n {
        for j in 0..=t {
            cv.v(i as i64, j, color(VertexLabel::Copy(i, relabel(j as usize))));
        }
    }
    for &v in &base.stated_rainbow {
        match base.graph.label(v).expect("labelled") {
            VertexLabel::Base(a) => cv.rainbow_u(a as i64),
            VertexLabel::Inserted(a, b) => cv.rainbow_s(a as i64, b as i64),
            VertexLabel::Copy(i, j) => cv.rainbow_v(i as i64, relabel(j) as i64),
        }
    }
    Recipe::Formula(cv.into_draft())
}

/// `n = 2t+3` with `n` colors.
fn odd_star(cv: &mut Canvas, n: i64, t: i64) {
    for i in 0..n {
        cv.u(i, i % n);
        cv.v(i, 0, i % n);
        for k in 1..=t {
            cv.v(i, k, (i + 2 * k) % n);
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let d = b - a;
            let (i, h) = if 2 * d < n { (a, d) } else { (b, n - d) };
            cv.s(a, b, (i + 2 * (h / 2) - 1).rem_euclid(n));
        }
    }
    cv.rainbow_path_inserted(n);
    cv.rainbow_s(0, n - 1);
}

/// `K_n ⊡ K_1`: `n - 1` colors for even `n`, `n` for odd `n`.
fn k1(cv: &mut Canvas, n: i64) {
    let q = if n % 2 == 0 { n - 1 } else { n };
    for i in 0..n {
        cv.u(i, (2 * i) % q);
        cv.v(i, 0, (2 * i) % q);
        for j in i + 1..n {
            cv.s(i, j, (i + j) % q);
        }
        cv.rainbow_v(i, 0);
    }
    if n % 2 == 0 {
        cv.s(0, n - 1, 1);
    }
}

/// A b-coloring of `K_6 ⊡ K_2` with 7 colors, in vertex-id order (bases,
/// inserted vertices, copies). The printed recipe for this pair only reaches
/// 6 colors.
const K6_K2: [usize; 33] =
    [4, 3, 2, 2, 6, 3, 1, 6, 3, 2, 0, 6, 1, 2, 6, 6, 0, 5, 1, 1, 4, 5, 4, 5, 0, 4, 1, 4, 0, 5, 3, 3, 2];
