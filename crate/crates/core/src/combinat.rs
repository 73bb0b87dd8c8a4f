//! Exact binomials, multinomials and the `(1+t)^a / (1−t)^3` coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact signed count. Final degrees are nonnegative; kernel terms need not be.
pub type Count = BigInt;

/// `C(n, k)`, and `0` whenever `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Count {
    if k < 0 || n < 0 || k > n {
        return Count::zero();
    }
    let k = k.min(n - k);
    let mut acc = Count::one();
    for j in 0..k {
        // acc = C(n, j) here, so the division is exact
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// `n! / (p_1! ⋯ p_r! · (n − Σp)!)`: the last slot takes whatever the listed
/// parts leave over. Zero if a part is negative or the parts exceed `n`.
pub fn multinomial(n: i64, parts: &[i64]) -> Count {
    if n < 0 || parts.iter().any(|&p| p < 0) {
        return Count::zero();
    }
    let mut remaining = n;
    let mut acc = Count::one();
    for &p in parts {
        if p > remaining {
            return Count::zero();
        }
        acc *= binomial(remaining, p);
        remaining -= p;
    }
    acc
}

/// Coefficient of `t^m` in `(1+t)^a / (1−t)^3`.
pub fn series_coeff(a: i64, m: i64) -> Count {
    (0..=m)
        .map(|k| binomial(a, k) * binomial(m - k + 2, 2))
        .sum()
}
