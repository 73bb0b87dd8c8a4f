use num_integer::Integer;

use crate::combinat::{binomial, Count};
use crate::error::{Error, Result};

/// One kind of reducible fiber: how many there are and with what
/// multiplicity they enter `φ*(0)` or `φ*(∞)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerTerm {
    /// `"C+C"` for the fibers avoiding `E`, `"case 1"` … `"case 11"` otherwise.
    pub case: &'static str,
    /// Number of fibers `F_i` in `E + F_1 + … + F_k + D`, absent for `C+C`.
    pub k: Option<u32>,
    pub count: Count,
    pub multiplicity: i64,
}

impl LedgerTerm {
    pub fn contribution(&self) -> Count {
        &self.count * self.multiplicity
    }
}

/// Zeroes and poles of the cross-ratio on the family of curves in `|2C|`
/// on `F_n`. The `n · N(2C)` zeroes at irreducible fibers are kept
/// symbolic and are not listed in `zero_terms`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerationLedger {
    pub n: u32,
    pub zero_terms: Vec<LedgerTerm>,
    pub pole_terms: Vec<LedgerTerm>,
}

pub fn ledger_2c(n: u32) -> DegenerationLedger {
    let nn = i64::from(n);
    let b = |k: i64| binomial(2 * nn, k);
    let mut zero_terms = vec![LedgerTerm {
        case: "C+C",
        k: None,
        count: b(nn - 1) * (nn * nn * nn),
        multiplicity: 1,
    }];
    let mut pole_terms = vec![LedgerTerm {
        case: "C+C",
        k: None,
        count: b(nn) * (nn * nn * nn),
        multiplicity: 1,
    }];

    for k in 1..n {
        let kk = i64::from(k);
        let m = nn - kk; // n − k
        let w = 2 * nn - kk; // 2n − k
        let term = |case, count: Count, multiplicity| LedgerTerm {
            case,
            k: Some(k),
            count,
            multiplicity,
        };
        zero_terms.extend([
            term("case 1", b(kk) * (kk * m), m + 1),
            term("case 3", b(kk) * (kk * (kk - 1) * m), 1),
            term("case 5", b(kk - 2) * (m * w * w), 1),
            term("case 6", b(kk - 1) * (2 * (kk - 1) * m), m),
            term("case 9", b(kk - 2) * ((kk - 2) * m), m),
        ]);
        pole_terms.extend([
            term("case 2", b(kk - 1) * (2 * m * w), m + 1),
            term("case 4", b(kk - 1) * (2 * (kk - 1) * m * w), 1),
            term("case 7", b(kk - 1) * (2 * (kk - 1) * m), m),
            term("case 8", b(kk - 2) * (2 * m * w), m),
            term("case 10", b(kk - 2) * (2 * (kk - 2) * m), m),
            term("case 11", b(kk - 2) * m, 2 * m),
        ]);
    }

    DegenerationLedger {
        n,
        zero_terms,
        pole_terms,
    }
}

impl DegenerationLedger {
    /// Zeroes at reducible fibers.
    pub fn zero_reducible_total(&self) -> Count {
        self.zero_terms.iter().map(LedgerTerm::contribution).sum()
    }

    /// `deg φ*(0)` with `degree` substituted for `N(2C)`.
    pub fn zero_total(&self, degree: &Count) -> Count {
        degree * self.n + self.zero_reducible_total()
    }

    /// `deg φ*(∞)`.
    pub fn pole_total(&self) -> Count {
        self.pole_terms.iter().map(LedgerTerm::contribution).sum()
    }

    /// `N(2C)` from `deg φ*(0) = deg φ*(∞)`; the division by `n` must be exact.
    pub fn solve(&self) -> Result<Count> {
        if self.n == 0 {
            return Err(Error::InvalidArgument(
                "Hirzebruch index must be at least 1".into(),
            ));
        }
        let diff = self.pole_total() - self.zero_reducible_total();
        let (q, r) = diff.div_rem(&Count::from(self.n));
        if r != Count::from(0) {
            return Err(Error::Inconsistent(format!(
                "ledger for n = {}: {diff} is not divisible by n",
                self.n
            )));
        }
        Ok(q)
    }
}

/// The reducible part of `deg φ*(0)` in its aggregated bracket form:
/// `n³C(2n,n−1) + Σ (n−k)[C(2n,k)(k(n−k+1) + k(k−1)) + C(2n,k−1)·2(k−1)(n−k)
/// + C(2n,k−2)((2n−k)² + (k−2)(n−k))]`.
pub fn aggregate_zero_reducible_total(n: u32) -> Count {
    let n = i64::from(n);
    let b = |k: i64| binomial(2 * n, k);
    let mut total = b(n - 1) * (n * n * n);
    for k in 1..n {
        let m = n - k;
        let w = 2 * n - k;
        total += (b(k) * (k * (m + 1) + k * (k - 1))
            + b(k - 1) * (2 * (k - 1) * m)
            + b(k - 2) * (w * w + (k - 2) * m))
            * m;
    }
    total
}

/// `deg φ*(∞)` in its aggregated bracket form.
pub fn aggregate_pole_total(n: u32) -> Count {
    let n = i64::from(n);
    let b = |k: i64| binomial(2 * n, k);
    let mut total = b(n) * (n * n * n);
    for k in 1..n {
        let m = n - k;
        let w = 2 * n - k;
        total += (b(k - 1) * (2 * w * (m + 1) + 2 * w * (k - 1) + 2 * (k - 1) * m)
            + b(k - 2) * (2 * w * m + 2 * (k - 2) * m + 2 * m))
            * m;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fn2c::closed_2c;

    #[test]
    fn n_two_totals() {
        let l = ledger_2c(2);
        let c_plus_c = l.zero_terms.iter().find(|t| t.case == "C+C").unwrap();
        assert_eq!(c_plus_c.contribution(), Count::from(32));
        let case1 = l.zero_terms.iter().find(|t| t.case == "case 1").unwrap();
        assert_eq!(case1.contribution(), Count::from(8));
        assert_eq!(l.zero_reducible_total(), Count::from(40));
        assert_eq!(l.pole_total(), Count::from(48 + 12));
        assert_eq!(l.solve().unwrap(), Count::from(10));
    }

    #[test]
    fn n_one_has_only_c_plus_c() {
        let l = ledger_2c(1);
        assert_eq!(l.zero_terms.len(), 1);
        assert_eq!(l.pole_terms.len(), 1);
        assert_eq!(l.zero_reducible_total(), Count::from(1));
        assert_eq!(l.pole_total(), Count::from(2));
        assert_eq!(l.solve().unwrap(), Count::from(1));
    }

    #[test]
    fn n_three_solves_to_69() {
        assert_eq!(ledger_2c(3).solve().unwrap(), Count::from(69));
    }

    #[test]
    fn per_case_terms_match_aggregates() {
        for n in 1..=40 {
            let l = ledger_2c(n);
            assert_eq!(
                l.zero_reducible_total(),
                aggregate_zero_reducible_total(n),
                "n = {n}"
            );
            assert_eq!(l.pole_total(), aggregate_pole_total(n), "n = {n}");
            assert_eq!(l.zero_total(&closed_2c(n)), l.pole_total(), "n = {n}");
        }
    }

    #[test]
    fn zero_n_is_rejected() {
        assert!(ledger_2c(0).solve().is_err());
    }
}
