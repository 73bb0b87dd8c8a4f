//! Oracles that share no code with the library: machine-integer binomials
//! and direct evaluations of the displayed sums.

#![allow(dead_code)]

use std::collections::HashMap;

pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut acc: i128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as i128 / (j + 1) as i128;
    }
    acc
}

/// Kontsevich's sum, degrees up to 8 fit comfortably in i128.
pub fn plane_brute(d: i64, memo: &mut HashMap<i64, i128>) -> i128 {
    if d == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&d) {
        return v;
    }
    let mut s = 0;
    for d1 in 1..d {
        let d2 = d - d1;
        let n1 = plane_brute(d1, memo);
        let n2 = plane_brute(d2, memo);
        s += n1
            * n2
            * (d1 * d2) as i128
            * (binom(3 * d - 4, 3 * d1 - 2) * (d1 * d2) as i128
                - binom(3 * d - 4, 3 * d1 - 3) * (d2 * d2) as i128);
    }
    memo.insert(d, s);
    s
}

/// The quadric sum with rulings as reference curves.
pub fn quadric_brute(a: i64, b: i64, memo: &mut HashMap<(i64, i64), i128>) -> i128 {
    if (a, b) == (1, 0) || (a, b) == (0, 1) {
        return 1;
    }
    if a < 1 || b < 1 {
        return 0;
    }
    if (a - 1) * (b - 1) == 0 {
        return 1;
    }
    if let Some(&v) = memo.get(&(a, b)) {
        return v;
    }
    let s = quadric_sum(a, b, memo);
    memo.insert((a, b), s);
    s
}

/// The displayed quadric sum for `(a, b)`, whether or not it is a seed.
pub fn quadric_sum(a: i64, b: i64, memo: &mut HashMap<(i64, i64), i128>) -> i128 {
    let r0 = |x: i64, y: i64| 2 * x + 2 * y - 1;
    let mut s = 0;
    for x in 0..=a {
        for y in 0..=b {
            let (u, v) = (a - x, b - y);
            if (x, y) == (0, 0) || (u, v) == (0, 0) {
                continue;
            }
            let n1 = quadric_brute(x, y, memo);
            let n2 = quadric_brute(u, v, memo);
            if n1 == 0 || n2 == 0 {
                continue;
            }
            let g = n1
                * n2
                * (binom(r0(a, b) - 3, r0(x, y) - 1) * (y * u) as i128
                    - binom(r0(a, b) - 3, r0(x, y) - 2) * (v * u) as i128);
            s += g * (x * v + y * u) as i128;
        }
    }
    s
}
