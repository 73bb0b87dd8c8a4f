use crate::combinat::{binomial, Count};

/// Each intermediate quantity in the reduction of the ledger balance to the
/// closed formula, every one computed from its own expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SReductions {
    pub n: u32,
    /// `n³(C(2n,n) − C(2n,n−1))`.
    pub leading: Count,
    /// `n² C(2n,n−1)`.
    pub leading_simplified: Count,
    /// `S` as first assembled from the ledger brackets, `k = 1..n−1`.
    pub s: Count,
    /// `S = Σ (n−k)[C(2n,k)(−kn) + C(2n,k−1)·2(2n−k)n + C(2n,k−2)(−kn)]`, `k = 1..n−1`.
    pub s_reduced: Count,
    /// The same sum started at `k = 0`.
    pub s_reduced_from_zero: Count,
    /// `S' = Σ_{k=0}^{n−1} 4n²(n−k) C(2n,k−1)`.
    pub s_prime: Count,
    /// `S'' = Σ (n−k)kn[C(2n,k) + 2C(2n,k−1) + C(2n,k−2)]`.
    pub s_double_prime_raw: Count,
    /// `S'' = Σ (n−k)kn C(2n+2,k)`.
    pub s_double_prime: Count,
    /// `n² Σ (2(n−k)−1) C(2n+1,k)`, after the first absorption pass.
    pub absorbed_once: Count,
    /// `n² Σ (n−k) C(2n+2,k)`.
    pub combined: Count,
    /// `n Σ (n−k)² C(2n+2,k)`, i.e. `n · N(2C)`.
    pub telescoped: Count,
}

pub fn s_reductions(n: u32) -> SReductions {
    let n_u = n;
    let n = i64::from(n);
    let b = |top: i64, k: i64| binomial(top, k);
    let sum = |from: i64, f: &dyn Fn(i64) -> Count| -> Count { (from..n).map(f).sum() };

    let leading = (b(2 * n, n) - b(2 * n, n - 1)) * (n * n * n);
    let leading_simplified = b(2 * n, n - 1) * (n * n);

    let s = sum(1, &|k| {
        let m = n - k;
        let w = 2 * n - k;
        (b(2 * n, k) * (-k * (m + 1) - k * (k - 1))
            + b(2 * n, k - 1)
                * (2 * w * (m + 1) + 2 * w * (k - 1) + 2 * (k - 1) * m - 2 * (k - 1) * m)
            + b(2 * n, k - 2) * (2 * w * m + 2 * (k - 2) * m + 2 * m - w * w - (k - 2) * m))
            * m
    });
    let reduced = |k: i64| {
        let m = n - k;
        (b(2 * n, k) * (-k * n)
            + b(2 * n, k - 1) * (2 * (2 * n - k) * n)
            + b(2 * n, k - 2) * (-k * n))
            * m
    };
    let s_reduced = sum(1, &reduced);
    let s_reduced_from_zero = sum(0, &reduced);

    let s_prime = sum(0, &|k| b(2 * n, k - 1) * (4 * n * n * (n - k)));
    let s_double_prime_raw = sum(0, &|k| {
        (b(2 * n, k) + b(2 * n, k - 1) * 2 + b(2 * n, k - 2)) * ((n - k) * k * n)
    });
    let s_double_prime = sum(0, &|k| b(2 * n + 2, k) * ((n - k) * k * n));

    let absorbed_once = sum(0, &|k| b(2 * n + 1, k) * (2 * (n - k) - 1)) * (n * n);
    let combined = sum(0, &|k| b(2 * n + 2, k) * (n - k)) * (n * n);
    let telescoped = sum(0, &|k| b(2 * n + 2, k) * ((n - k) * (n - k))) * n;

    SReductions {
        n: n_u,
        leading,
        leading_simplified,
        s,
        s_reduced,
        s_reduced_from_zero,
        s_prime,
        s_double_prime_raw,
        s_double_prime,
        absorbed_once,
        combined,
        telescoped,
    }
}

impl SReductions {
    /// Every link of the chain as `(description, holds)`.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        vec![
            (
                "n^3(C(2n,n)-C(2n,n-1)) = n^2 C(2n,n-1)",
                self.leading == self.leading_simplified,
            ),
            ("S = reduced S", self.s == self.s_reduced),
            (
                "reduced S unchanged by the k = 0 term",
                self.s_reduced == self.s_reduced_from_zero,
            ),
            (
                "S = S' - S''",
                self.s == &self.s_prime - &self.s_double_prime,
            ),
            (
                "S'' telescopes to C(2n+2,k)",
                self.s_double_prime_raw == self.s_double_prime,
            ),
            (
                "n^2 C(2n,n-1) + S' = n^2 sum (2(n-k)-1) C(2n+1,k)",
                &self.leading_simplified + &self.s_prime == self.absorbed_once,
            ),
            (
                "first absorption = n^2 sum (n-k) C(2n+2,k)",
                self.absorbed_once == self.combined,
            ),
            (
                "combined - S'' = n sum (n-k)^2 C(2n+2,k)",
                &self.combined - &self.s_double_prime == self.telescoped,
            ),
            (
                "leading + S = telescoped",
                &self.leading + &self.s == self.telescoped,
            ),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.checks().iter().all(|(_, ok)| *ok)
    }
}
