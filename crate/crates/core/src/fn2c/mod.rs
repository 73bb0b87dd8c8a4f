//! Independent routes to `N(2C)` on `F_n`.
//!
//! Every route implements [`TwoCRoute`] and is registered by name in a
//! [`RouteRegistry`], so callers (the CLI's `verify-2c`) can select any
//! subset at runtime and compare them.

mod ledger;
mod reductions;

pub use ledger::{
    aggregate_pole_total, aggregate_zero_reducible_total, ledger_2c, DegenerationLedger, LedgerTerm,
};
pub use reductions::{s_reductions, SReductions};

use std::fmt;

use crate::combinat::{binomial, series_coeff, Count};
use crate::error::{Error, Result};

pub trait TwoCRoute: Send + Sync {
    fn name(&self) -> &str;

    fn describe(&self) -> &str;

    fn degree(&self, n: u32) -> Result<Count>;
}

/// `Σ_{k=0}^{n−1} (n−k)² C(2n+2, k)`.
pub fn closed_2c(n: u32) -> Count {
    let n = i64::from(n);
    (0..n)
        .map(|k| binomial(2 * n + 2, k) * ((n - k) * (n - k)))
        .sum()
}

/// `Σ_{k=0}^{n−1} C(n−k+1, 2) C(2n+3, k)`.
pub fn altsum_2c(n: u32) -> Count {
    let n = i64::from(n);
    (0..n)
        .map(|k| binomial(n - k + 1, 2) * binomial(2 * n + 3, k))
        .sum()
}

/// Coefficient of `t^(n−1)` in `(1+t)^(2n+3) / (1−t)^3`.
pub fn genfunc_2c(n: u32) -> Count {
    let n = i64::from(n);
    series_coeff(2 * n + 3, n - 1)
}

/// Solves the degeneration ledger's zero/pole balance for `N(2C)`.
pub fn oracle_2c(n: u32) -> Result<Count> {
    ledger_2c(n).solve()
}

struct Closed;
struct AltSum;
struct GenFunc;
struct Oracle;

fn require_positive(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidArgument(
            "Hirzebruch index must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

impl TwoCRoute for Closed {
    fn name(&self) -> &str {
        "closed"
    }
    fn describe(&self) -> &str {
        "sum (n-k)^2 C(2n+2,k)"
    }
    fn degree(&self, n: u32) -> Result<Count> {
        require_positive(n)?;
        Ok(closed_2c(n))
    }
}

impl TwoCRoute for AltSum {
    fn name(&self) -> &str {
        "altsum"
    }
    fn describe(&self) -> &str {
        "sum C(n-k+1,2) C(2n+3,k)"
    }
    fn degree(&self, n: u32) -> Result<Count> {
        require_positive(n)?;
        Ok(altsum_2c(n))
    }
}

impl TwoCRoute for GenFunc {
    fn name(&self) -> &str {
        "genfunc"
    }
    fn describe(&self) -> &str {
        "[t^(n-1)] (1+t)^(2n+3)/(1-t)^3"
    }
    fn degree(&self, n: u32) -> Result<Count> {
        require_positive(n)?;
        Ok(genfunc_2c(n))
    }
}

impl TwoCRoute for Oracle {
    fn name(&self) -> &str {
        "oracle"
    }
    fn describe(&self) -> &str {
        "degeneration ledger balance"
    }
    fn degree(&self, n: u32) -> Result<Count> {
        require_positive(n)?;
        oracle_2c(n)
    }
}

#[derive(Default)]
pub struct RouteRegistry {
    routes: Vec<Box<dyn TwoCRoute>>,
}

impl RouteRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Box::new(Closed));
        r.register(Box::new(AltSum));
        r.register(Box::new(GenFunc));
        r.register(Box::new(Oracle));
        r
    }

    /// Replaces any route already registered under the same name.
    pub fn register(&mut self, route: Box<dyn TwoCRoute>) {
        self.routes.retain(|r| r.name() != route.name());
        self.routes.push(route);
    }

    pub fn get(&self, name: &str) -> Option<&dyn TwoCRoute> {
        self.routes
            .iter()
            .find(|r| r.name() == name)
            .map(|r| r.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.routes.iter().map(|r| r.name()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn TwoCRoute> {
        self.routes.iter().map(|r| r.as_ref())
    }

    /// Restricts to the named routes, in the given order.
    pub fn select(&self, names: &[&str]) -> Result<Vec<&dyn TwoCRoute>> {
        names
            .iter()
            .map(|name| {
                self.get(name).ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "unknown route `{name}` (known: {})",
                        self.names().join(", ")
                    ))
                })
            })
            .collect()
    }
}

impl fmt::Debug for RouteRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// Values of several routes at one `n`.
#[derive(Debug)]
pub struct RouteComparison {
    pub n: u32,
    pub values: Vec<(String, Result<Count>)>,
}

impl RouteComparison {
    pub fn run(routes: &[&dyn TwoCRoute], n: u32) -> Self {
        RouteComparison {
            n,
            values: routes
                .iter()
                .map(|r| (r.name().to_string(), r.degree(n)))
                .collect(),
        }
    }

    /// True when every route succeeded with the same value.
    pub fn agrees(&self) -> bool {
        let mut ok = self.values.iter().map(|(_, v)| v.as_ref().ok());
        match ok.next() {
            Some(Some(first)) => ok.all(|v| v == Some(first)),
            Some(None) => false,
            None => true,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Count {
        Count::from(v)
    }

    #[test]
    fn closed_values() {
        assert_eq!(closed_2c(1), c(1));
        assert_eq!(closed_2c(2), c(10));
        assert_eq!(closed_2c(3), c(69));
        assert_eq!(closed_2c(4), c(406));
    }

    #[test]
    fn altsum_values() {
        assert_eq!(altsum_2c(1), c(1));
        assert_eq!(altsum_2c(2), c(10));
        assert_eq!(altsum_2c(3), c(69));
    }

    #[test]
    fn genfunc_values() {
        assert_eq!(genfunc_2c(1), c(1));
        assert_eq!(genfunc_2c(2), c(10));
        assert_eq!(genfunc_2c(3), c(69));
        assert_eq!(genfunc_2c(4), c(406));
        // the t^n coefficient is a different number
        assert_eq!(series_coeff(7, 2), c(48));
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle_2c(2).unwrap(), c(10));
        assert_eq!(oracle_2c(4).unwrap(), c(406));
        assert_eq!(oracle_2c(10).unwrap(), closed_2c(10));
    }

    #[test]
    fn registry_selects_by_name() {
        let reg = RouteRegistry::standard();
        assert_eq!(reg.names(), vec!["closed", "altsum", "genfunc", "oracle"]);
        let picked = reg.select(&["oracle", "closed"]).unwrap();
        assert_eq!(picked[0].name(), "oracle");
        assert!(reg.select(&["nope"]).is_err());
        let cmp = RouteComparison::run(&picked, 5);
        assert!(cmp.agrees());
        assert!(reg.get("closed").unwrap().degree(0).is_err());
    }

    struct Broken;
    impl TwoCRoute for Broken {
        fn name(&self) -> &str {
            "broken"
        }
        fn describe(&self) -> &str {
            "off by one"
        }
        fn degree(&self, n: u32) -> Result<Count> {
            Ok(closed_2c(n) + 1)
        }
    }

    #[test]
    fn comparison_flags_disagreement() {
        let mut reg = RouteRegistry::standard();
        reg.register(Box::new(Broken));
        let all: Vec<_> = reg.iter().collect();
        assert!(!RouteComparison::run(&all, 3).agrees());
    }
}
