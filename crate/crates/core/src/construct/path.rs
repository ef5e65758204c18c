//! Tables for `P_n ⊡ H`.

use crate::coloring::m_degree;
use crate::family::{FamilyKind, FamilySpec};
use crate::graph::Graph;

use super::canvas::{Canvas, Draft};
use super::{skeleton_coloring, skeleton_modulus, Recipe};

pub(super) fn recipe(n: usize, right: FamilySpec, g: &Graph, k: usize) -> Recipe {
    let h_order = right.order();
    if n > 2 * h_order + 3 {
        return Recipe::Formula(generic(n, h_order, g));
    }
    let t = right.size;
    if right.kind == FamilyKind::Cycle && (n, t) == (3, 4) {
        return Recipe::Search;
    }
    let mut cv = Canvas::new(g, k);
    skeleton_coloring(n, skeleton_modulus(g, n), false).paint(&mut cv);
    cv.rainbow_path_inserted(n as i64);
    let (n, t) = (n as i64, t as i64);
    match right.kind {
        FamilyKind::Path => path_path(&mut cv, n, t),
        FamilyKind::Cycle => path_cycle(&mut cv, n, t),
        FamilyKind::Star => path_star(&mut cv, n, t, m_degree(g) as i64),
        FamilyKind::Complete => path_complete(&mut cv, n, t),
    }
    Recipe::Formula(cv.into_draft())
}

/// `2|V(H)| + 3` colors: `c(v_{i,k}) = (i+2k+3) mod (2|V(H)|+3)`.
pub(super) fn generic(n: usize, h_order: usize, g: &Graph) -> Draft {
    let k = 2 * h_order + 3;
    let mut cv = Canvas::new(g, k);
    skeleton_coloring(n, k, false).paint(&mut cv);
    generic_copies(&mut cv, n as i64, h_order as i64);
    cv.into_draft()
}

pub(super) fn generic_copies(cv: &mut Canvas, n: i64, h_order: i64) {
    let k = cv.k() as i64;
    for i in 0..n {
        for c in 0..h_order {
            cv.v(i, c, (i + 2 * c + 3) % k);
        }
    }
    for j in 0..k {
        cv.rainbow_s(j, j + 1);
    }
}

/// `c(v_{i,j-d})` when that copy index exists, else nothing.
pub(super) fn back(cv: &Canvas, i: i64, j: i64, d: i64) -> Option<i64> {
    if j >= d {
        cv.get_v(i, j - d)
    } else {
        None
    }
}

fn path_path(cv: &mut Canvas, n: i64, t: i64) {
    if n <= 6 {
        short_path_path(cv, n, t);
    } else {
        long_path_path(cv, n, t, |_, _| None);
    }
}

fn short_path_path(cv: &mut Canvas, n: i64, t: i64) {
    for i in 0..n {
        for j in 0..t {
            let value = if n == 3 && t <= 4 { (i + j % 2 + 1) % 4 } else { (i + j % 3 + 1) % 5 };
            cv.v(i, j, value);
        }
    }
    if n < 6 {
        cv.rainbow_v(1, 1);
    }
    if n <= 4 {
        cv.rainbow_v(1, 2);
    }
    if n == 3 && t >= 5 {
        cv.rainbow_v(1, 3);
    }
}

/// The `7 <= n <= 2t+3` table, with `special` consulted before it.
pub(super) fn long_path_path(cv: &mut Canvas, n: i64, t: i64, special: impl Fn(i64, i64) -> Option<i64>) {
    let floor = (n - 4) / 2;
    let ceil = (n - 3) / 2;
    for i in 0..n {
        for j in 0..t {
            let value = if let Some(v) = special(i, j) {
                Some(v)
            } else if n % 2 == 0 && j < floor {
                Some((i + 2 * j + 3).rem_euclid(n - 1))
            } else if n % 2 == 1 && ((i % 2 == 0 && j < floor) || (i % 2 == 1 && j < ceil)) {
                Some((i + 2 * j + (4 - 2 * (i % 2))).rem_euclid(n - 1))
            } else if (j, n) == (1, 7) && i % 2 == 0 {
                Some((i + 2) % 6)
            } else {
                back(cv, i, j, 2)
            };
            cv.v(i, j, value);
        }
    }
}

fn path_cycle(cv: &mut Canvas, n: i64, t: i64) {
    if n <= 6 {
        for i in 0..n {
            for j in 0..t {
                let value = if (n, i, j) == (3, 1, 2) {
                    2
                } else if j != t - 1 {
                    (i + 2 + j % 2) % 5
                } else {
                    i + 1
                };
                cv.v(i, j, value);
            }
        }
        if n == 4 || n == 5 {
            cv.rainbow_v(2, 0);
        }
        if n <= 4 {
            cv.rainbow_v(1, 0);
        }
        if n == 3 {
            cv.rainbow_v(1, 1);
            cv.rainbow_v(1, t - 1);
        }
    } else {
        long_path_path(cv, n, t, |i, j| {
            if t % 2 == 1 && j == t - 1 {
                match n {
                    8 => Some(i + 1),
                    7 | 9 => Some(i + 3),
                    _ => None,
                }
            } else {
                None
            }
        });
    }
}

fn path_star(cv: &mut Canvas, n: i64, t: i64, m: i64) {
    if n <= t + 4 {
        let alpha = m - n + 1;
        offset_star_table(cv, n, t, alpha, n - 1);
        // the last range starts at copy 1: v_{0,0} has degree t+1 < k-1 there
        let copies = if 2 * n <= t + 3 {
            0..n
        } else if n == (t + 5) / 2 {
            0..t - n + 3
        } else {
            1..t - n + 5
        };
        for i in copies {
            cv.rainbow_v(i, 0);
        }
    } else {
        spread_star_table(cv, n, t, n - 1, n - 6);
    }
}

/// Star table for small `n`: the first `alpha` copy vertices take the extra
/// colors `base + ((i+j) mod alpha)`, the rest repeat skeleton colors mod
/// `modulus`. Shared with the cycle tables (`base = modulus = n`).
pub(super) fn offset_star_table(cv: &mut Canvas, n: i64, t: i64, alpha: i64, modulus: i64) {
    let base = modulus;
    for i in 0..n {
        for j in 0..=t {
            let value = if j < alpha {
                Some(base + (i + j) % alpha)
            } else if j < alpha + n - 2 && i == 0 {
                Some((j - alpha + 1).rem_euclid(modulus))
            } else if j < alpha + n - 2 && i == n - 1 {
                Some((j - alpha).rem_euclid(modulus))
            } else if j < alpha + n - 3 && i != 0 && i != n - 1 {
                Some((i + j - alpha + 1).rem_euclid(modulus))
            } else {
                back(cv, i, j, 1)
            };
            cv.v(i, j, value);
        }
    }
}

/// Star table for large `n`, shared with the cycle tables.
pub(super) fn spread_star_table(cv: &mut Canvas, n: i64, t: i64, modulus: i64, reach: i64) {
    let reach = reach.min(t);
    for i in 0..n {
        for j in 0..=t {
            let value = if j == 0 {
                Some((i + 3).rem_euclid(modulus))
            } else if i % 2 == 0 && j <= reach {
                Some((i - j - 2).rem_euclid(modulus))
            } else if i % 2 == 1 && j <= reach {
                Some((i + j + 3).rem_euclid(modulus))
            } else {
                back(cv, i, j, 1)
            };
            cv.v(i, j, value);
        }
    }
}

fn path_complete(cv: &mut Canvas, n: i64, t: i64) {
    complete_copies(cv, n, t);
    if n <= t + 3 {
        for j in (n - 3).max(0)..t {
            cv.rainbow_v(1, j);
        }
    }
}

/// Copy colors for `K_t` copies, shared with the cycle tables.
pub(super) fn complete_copies(cv: &mut Canvas, n: i64, t: i64) {
    if n <= t + 3 {
        for i in 0..n {
            for j in 0..t {
                cv.v(i, j, (i + j + 1) % (t + 2));
            }
        }
        return;
    }
    let f = (n - 4) / 2;
    // later copy indices refer back to earlier ones in other copies
    for j in 0..t {
        for i in 0..n {
            let value = if j < f {
                Some((i + 2 * j + 3).rem_euclid(n - 1))
            } else if f <= j && j < t - 1 {
                cv.get_v(((i + 1) - i % 2).rem_euclid(n - 1), j - f)
            } else if j == t - 1 && j == 1 {
                Some((i + 1).rem_euclid(n - 1))
            } else if j == t - 1 {
                Some((i - 2).rem_euclid(n - 1))
            } else {
                None
            };
            cv.v(i, j, value);
        }
    }
}
