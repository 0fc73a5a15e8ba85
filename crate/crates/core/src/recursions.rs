//! Right-hand sides of the central-component recursions, and the formulas for
//! triangulations whose central component avoids a fixed vertex.
//!
//! Sorting dissections of an n-gon by their central component gives
//!
//! ```text
//! f(n) = (n/2) f(n/2 + 1)^2 + sum over i_1 <= ... <= i_k < n/2, sum i = n,
//!        of m(i_1..i_k) * f(i_1 + 1) * ... * f(i_k + 1)
//! ```
//!
//! where `f(s)` counts k-angulations of an s-gon and `m` is [`placement_count`].
//! The first term collects dissections with a diameter; it vanishes for odd n.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::ArgumentError;
use crate::numbers::{
    ballot_t, catalan, catalan_at, catalan_table, kangulation_count, quadrangulation_count,
    quadrangulation_count_at, BigCount, Index,
};
use crate::polygon::placement_count;

/// Calls `visit` on every nondecreasing `parts`-tuple of positive integers
/// summing to `total`, each strictly below `total / 2` and with
/// `allowed(part)` true.
fn for_each_central_shape(
    total: usize,
    parts: usize,
    allowed: &dyn Fn(usize) -> bool,
    visit: &mut dyn FnMut(&[usize]),
) {
    fn go(
        cur: &mut Vec<usize>,
        remaining: usize,
        slots: usize,
        bound: usize,
        allowed: &dyn Fn(usize) -> bool,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if slots == 0 {
            if remaining == 0 {
                visit(cur);
            }
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        // the remaining slots are all >= part, so part * slots <= remaining
        for part in lo..=bound.min(remaining / slots) {
            if !allowed(part) {
                continue;
            }
            cur.push(part);
            go(cur, remaining - part, slots - 1, bound, allowed, visit);
            cur.pop();
        }
    }
    // part < total / 2  <=>  2 * part < total
    let bound = (total.saturating_sub(1)) / 2;
    go(&mut Vec::with_capacity(parts), total, parts, bound, allowed, visit);
}

/// Right side of the triangulation recursion, which equals `C_{n-2}`:
/// `(n/2) C_{n/2-1}^2 + sum m_{ijk} C_{i-1} C_{j-1} C_{k-1}`.
pub fn central_recursion_rhs(n: usize) -> BigCount {
    assert!(n >= 3, "central_recursion_rhs requires n >= 3");
    let cat = catalan_table(n);
    let mut total = if n.is_multiple_of(2) {
        let half = catalan_at(Index::frac(n as i64 - 2, 2));
        BigUint::from(n / 2) * &half * &half
    } else {
        BigUint::zero()
    };
    for_each_central_shape(n, 3, &|_| true, &mut |s| {
        let m = placement_count(s, n).expect("central shape");
        total += m * &cat[s[0] - 1] * &cat[s[1] - 1] * &cat[s[2] - 1];
    });
    total
}

/// Right side of the quadrangulation recursion for the (2n+2)-gon, which
/// equals `Q_n`: `(n+1) Q_{n/2}^2 + sum m_{ijkl} Q_{(i-1)/2} ... Q_{(l-1)/2}`.
pub fn quad_recursion_rhs(n: usize) -> BigCount {
    assert!(n >= 1, "quad_recursion_rhs requires n >= 1");
    let sides = 2 * n + 2;
    let half = quadrangulation_count_at(Index::frac(n as i64, 2));
    let mut total = BigUint::from(n + 1) * &half * &half;
    let q: Vec<BigCount> = (0..=n as i64).map(quadrangulation_count).collect();
    let q_at = |part: usize| -> BigCount {
        let idx = Index::frac(part as i64 - 1, 2);
        match idx.integral() {
            Some(i) => q[i as usize].clone(),
            None => BigUint::zero(),
        }
    };
    // Q_{(i-1)/2} vanishes for even i
    for_each_central_shape(sides, 4, &|part| part % 2 == 1, &mut |s| {
        let m = placement_count(s, sides).expect("central shape");
        total += m * q_at(s[0]) * q_at(s[1]) * q_at(s[2]) * q_at(s[3]);
    });
    total
}

/// Right side of the general k-angulation recursion (diameter term squared),
/// which equals `f_{n,k}`. Defined for `n > k` with `n ≡ 2 (mod k-2)`.
pub fn kang_recursion_rhs(n: usize, k: usize) -> Result<BigCount, ArgumentError> {
    if k < 3 || n <= k || !(n - 2).is_multiple_of(k - 2) {
        return Err(ArgumentError::RecursionDomain {
            n: n as u64,
            k: k as u64,
        });
    }
    let ku = k as u64;
    let f: Vec<BigCount> = (0..=n as i64).map(|s| kangulation_count(s, ku)).collect();
    let mut total = if n.is_multiple_of(2) {
        let half = &f[n / 2 + 1];
        BigUint::from(n / 2) * half * half
    } else {
        BigUint::zero()
    };
    // f_{i+1,k} vanishes unless i ≡ 1 (mod k-2)
    for_each_central_shape(n, k, &|part| (part - 1) % (k - 2) == 0, &mut |s| {
        let m = placement_count(s, n).expect("central shape");
        let product = s.iter().fold(BigUint::one(), |acc, &i| acc * &f[i + 1]);
        total += m * product;
    });
    Ok(total)
}

/// Triangulations of an n-gon with vertex 0 outside the central component:
/// `sum_{m=1}^{floor(n/2)-1} C_m C_{n-2-m}`.
pub fn fixed_vertex_outside(n: usize) -> BigCount {
    assert!(n >= 3, "fixed_vertex_outside requires n >= 3");
    let n = n as i64;
    (1..n / 2).map(|m| catalan(m) * catalan(n - 2 - m)).sum()
}

/// The same count organized by the cyclic length `l` of the shortest diagonal
/// separating vertex 0 from the center, and the position `j` of that diagonal.
pub fn fixed_vertex_outside_double_sum(n: usize) -> BigCount {
    assert!(n >= 3, "fixed_vertex_outside_double_sum requires n >= 3");
    let n = n as i64;
    let cat: Vec<BigCount> = (0..n).map(catalan).collect();
    let c = |i: i64| -> &BigCount { &cat[i as usize] };
    let mut total = BigUint::zero();
    for l in 2..=n / 2 {
        for j in 1..l {
            total += c(n - l - 1) * c(l - j - 1) * c(j - 1);
        }
    }
    total
}

/// `sum_{0 <= k < m/2} T(m,k) T(m,k+1)`.
pub fn dyck_formula(m: usize) -> BigCount {
    let mu = m as u64;
    (0..)
        .take_while(|&k: &i64| 2 * k < m as i64)
        .map(|k| ballot_t(mu, k) * ballot_t(mu, k + 1))
        .sum()
}

/// Counts Dyck paths of semilength `s` whose steps `s` and `s + 1` are both
/// up-steps, by walking every Dyck path.
pub fn dyck_midpoint_uu_bruteforce(s: usize) -> BigCount {
    assert!(s >= 1, "semilength must be at least 1");
    let mut count = 0u64;
    for_each_dyck_path(s, &mut |path| {
        // 1-indexed steps s and s+1
        if path[s - 1] && path[s] {
            count += 1;
        }
    });
    BigUint::from(count)
}

/// Visits every Dyck path of semilength `s` as a step list, `true` = up.
pub fn for_each_dyck_path(s: usize, visit: &mut dyn FnMut(&[bool])) {
    fn go(path: &mut Vec<bool>, height: usize, ups: usize, s: usize, visit: &mut dyn FnMut(&[bool])) {
        if path.len() == 2 * s {
            visit(path);
            return;
        }
        if ups < s {
            path.push(true);
            go(path, height + 1, ups + 1, s, visit);
            path.pop();
        }
        if height > 0 {
            path.push(false);
            go(path, height - 1, ups, s, visit);
            path.pop();
        }
    }
    go(&mut Vec::with_capacity(2 * s), 0, 0, s, visit);
}

/// Which recursion a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecursionKind {
    /// Triangulations, compared with `C_{n-2}` for `3 <= n <= max`.
    Central,
    /// Quadrangulations of (2n+2)-gons, compared with `Q_n` for `1 <= n <= max`.
    Quad,
    /// k-angulations, compared with `f_{n,k}` for valid `k < n <= max`.
    Kang(usize),
}

/// One index where the recursion disagreed with the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionMismatch {
    pub n: usize,
    pub recursion: BigCount,
    pub closed_form: BigCount,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursionSweep {
    pub kind: RecursionKind,
    pub checked: Vec<usize>,
    pub mismatches: Vec<RecursionMismatch>,
}

impl RecursionSweep {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares a recursion with its closed form at every admissible index up to
/// `max`.
pub fn sweep_recursion(kind: RecursionKind, max: usize) -> Result<RecursionSweep, ArgumentError> {
    let mut checked = Vec::new();
    let mut mismatches = Vec::new();
    let mut check = |n: usize, recursion: BigCount, closed_form: BigCount| {
        checked.push(n);
        if recursion != closed_form {
            mismatches.push(RecursionMismatch {
                n,
                recursion,
                closed_form,
            });
        }
    };
    match kind {
        RecursionKind::Central => {
            for n in 3..=max {
                check(n, central_recursion_rhs(n), catalan(n as i64 - 2));
            }
        }
        RecursionKind::Quad => {
            for n in 1..=max {
                check(n, quad_recursion_rhs(n), quadrangulation_count(n as i64));
            }
        }
        RecursionKind::Kang(k) => {
            if k < 3 {
                return Err(ArgumentError::CellSize { k: k as u64 });
            }
            for n in (k + 1..=max).filter(|n| (n - 2) % (k - 2) == 0) {
                check(n, kang_recursion_rhs(n, k)?, kangulation_count(n as i64, k as u64));
            }
        }
    }
    Ok(RecursionSweep {
        kind,
        checked,
        mismatches,
    })
}
