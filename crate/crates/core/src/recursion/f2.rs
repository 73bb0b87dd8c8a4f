use num_integer::Integer;

use super::{default_reference_curves, gamma_kernel, Resolver, SeveriRecursion};
use crate::combinat::Count;
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Surface};

/// The `F2` recursion
/// `N(D) = ½ Σ_{D1+D2=D} γ(D1,D2)(D1·D2) + Σ_{D1+D2=D−E} γ(D1,D2)(D1·E)(D2·E)`,
/// both sums over ordered pairs avoiding `E`, with `r0(D)` in every binomial.
#[derive(Clone, Copy, Debug)]
pub struct F2Recursion {
    pub reference: (DivisorClass, DivisorClass),
}

impl Default for F2Recursion {
    fn default() -> Self {
        F2Recursion {
            reference: default_reference_curves(Surface::Hirzebruch(2)),
        }
    }
}

/// The two sums of the recursion for one class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Subtotals {
    /// First sum before halving.
    pub first_raw: Count,
    /// `first_raw / 2`.
    pub first: Count,
    /// Sum over splittings of `D − E`.
    pub second: Count,
}

impl F2Subtotals {
    pub fn total(&self) -> Count {
        &self.first + &self.second
    }
}

impl F2Recursion {
    pub fn subtotals(&self, d: DivisorClass, resolver: &mut Resolver<'_>) -> Result<F2Subtotals> {
        let e = Surface::Hirzebruch(2).exceptional().expect("F2 has E");
        let (c3, c4) = self.reference;

        let mut first_raw = Count::from(0);
        for pair in d.decompositions(2)? {
            let (d1, d2) = (pair[0], pair[1]);
            let n1 = resolver.resolve(d1)?;
            let n2 = resolver.resolve(d2)?;
            first_raw += gamma_kernel(&n1, &n2, d1, d2, d, c3, c4) * d1.dot(&d2);
        }

        let mut second = Count::from(0);
        for pair in (d - e).decompositions(2)? {
            let (d1, d2) = (pair[0], pair[1]);
            let n1 = resolver.resolve(d1)?;
            let n2 = resolver.resolve(d2)?;
            second += gamma_kernel(&n1, &n2, d1, d2, d, c3, c4) * (d1.dot(&e) * d2.dot(&e));
        }

        let (first, rem) = first_raw.div_rem(&Count::from(2));
        if rem != Count::from(0) {
            return Err(Error::Inconsistent(format!(
                "first F2 sum for {d} is odd ({first_raw}); cannot halve"
            )));
        }
        Ok(F2Subtotals {
            first_raw,
            first,
            second,
        })
    }
}

impl SeveriRecursion for F2Recursion {
    fn name(&self) -> &str {
        "f2"
    }

    fn handles(&self, surface: Surface) -> bool {
        surface == Surface::Hirzebruch(2)
    }

    fn degree(&self, d: DivisorClass, resolver: &mut Resolver<'_>) -> Result<Count> {
        Ok(self.subtotals(d, resolver)?.total())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recursion::{f2_n, NTable, RecursionRegistry};

    fn f2(a: i64, b: i64) -> DivisorClass {
        DivisorClass::hirzebruch(2, a, b)
    }

    #[test]
    fn two_c_is_ten() {
        let mut t = NTable::new();
        assert_eq!(f2_n(f2(2, 0), &mut t).unwrap(), Count::from(10));
        assert_eq!(f2_n(f2(1, 0), &mut t).unwrap(), Count::from(1));
        assert!(matches!(f2_n(f2(1, -2), &mut t), Err(Error::Excluded(_))));
    }

    #[test]
    fn two_c_subtotals() {
        let registry = RecursionRegistry::standard();
        let mut t = NTable::new();
        let mut r = Resolver::new(&registry, &mut t);
        let s = F2Recursion::default().subtotals(f2(2, 0), &mut r).unwrap();
        assert_eq!(s.first_raw, Count::from(16));
        assert_eq!(s.first, Count::from(8));
        assert_eq!(s.second, Count::from(2));
    }

    /// Halved ordered sum equals the unordered sum of the symmetrized
    /// kernel, diagonal pairs counted once.
    #[test]
    fn unordered_first_sum_agrees() {
        let registry = RecursionRegistry::standard();
        let mut t = NTable::new();
        for d in [f2(2, 0), f2(2, 1), f2(3, 0), f2(3, 2), f2(4, 1)] {
            let mut r = Resolver::new(&registry, &mut t);
            let s = F2Recursion::default().subtotals(d, &mut r).unwrap();
            let c = f2(1, 0);
            let mut doubled = Count::from(0);
            for pair in d.decompositions(2).unwrap() {
                let (a, b) = (pair[0], pair[1]);
                if a > b {
                    continue;
                }
                let g = crate::recursion::gamma(a, b, d, c, c, &t).unwrap()
                    + crate::recursion::gamma(b, a, d, c, c, &t).unwrap();
                let w = if a == b { 1 } else { 2 };
                doubled += g * a.dot(&b) * w;
            }
            assert_eq!(doubled, s.first_raw.clone() * 2, "{d}");
        }
    }
}
