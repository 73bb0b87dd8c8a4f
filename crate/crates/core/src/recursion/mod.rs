//! The γ kernel and the complete recursions for `P2`, `Q` and `F2`.
//!
//! Each recursion is a [`SeveriRecursion`] registered by name in a
//! [`RecursionRegistry`]; a [`Resolver`] dispatches on the surface of the
//! requested class and memoizes every value into an [`NTable`].

mod f2;
mod plane;
mod quadric;
mod table;

use std::fmt;

pub use f2::{F2Recursion, F2Subtotals};
pub use plane::KontsevichRecursion;
pub use quadric::QuadricRecursion;
pub use table::{NTable, Provenance, TableEntry, TableKey};

use crate::combinat::{binomial, Count};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Eligibility, Surface};

/// A complete recursion for `N(D)` on one family of surfaces.
pub trait SeveriRecursion: Send + Sync {
    fn name(&self) -> &str;

    fn handles(&self, surface: Surface) -> bool;

    /// Computes `N(d)` for a class of eligibility [`Eligibility::Recurse`],
    /// pulling smaller degrees through `resolver`.
    fn degree(&self, d: DivisorClass, resolver: &mut Resolver<'_>) -> Result<Count>;
}

#[derive(Default)]
pub struct RecursionRegistry {
    strategies: Vec<Box<dyn SeveriRecursion>>,
}

impl RecursionRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Plane, quadric and `F2` recursions with their default reference curves.
    pub fn standard() -> Self {
        let mut r = Self::new();
        r.register(Box::new(KontsevichRecursion));
        r.register(Box::new(QuadricRecursion::default()));
        r.register(Box::new(F2Recursion::default()));
        r
    }

    /// Later registrations for the same surface take precedence.
    pub fn register(&mut self, strategy: Box<dyn SeveriRecursion>) {
        self.strategies.push(strategy);
    }

    pub fn get(&self, name: &str) -> Option<&dyn SeveriRecursion> {
        self.strategies
            .iter()
            .rev()
            .find(|s| s.name() == name)
            .map(|s| s.as_ref())
    }

    pub fn for_surface(&self, surface: Surface) -> Option<&dyn SeveriRecursion> {
        self.strategies
            .iter()
            .rev()
            .find(|s| s.handles(surface))
            .map(|s| s.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }
}

impl fmt::Debug for RecursionRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

/// Memoizing dispatcher over a registry.
pub struct Resolver<'a> {
    registry: &'a RecursionRegistry,
    table: &'a mut NTable,
}

impl<'a> Resolver<'a> {
    pub fn new(registry: &'a RecursionRegistry, table: &'a mut NTable) -> Self {
        Resolver { registry, table }
    }

    pub fn table(&self) -> &NTable {
        self.table
    }

    pub fn resolve(&mut self, d: DivisorClass) -> Result<Count> {
        match d.eligibility() {
            Eligibility::Excluded => Err(Error::Excluded(d)),
            Eligibility::Zero => Ok(Count::from(0)),
            Eligibility::Seed1 => {
                if self.table.get(&d, 1).is_none() {
                    self.table
                        .insert(d, 1, Count::from(1), Provenance::Seeded)?;
                }
                Ok(Count::from(1))
            }
            Eligibility::Recurse => {
                if let Some(e) = self.table.get(&d, 1) {
                    return Ok(e.value.clone());
                }
                let registry = self.registry;
                let strategy = registry
                    .for_surface(d.surface())
                    .ok_or(Error::MissingDegree {
                        class: d,
                        tangency: 1,
                    })?;
                let value = strategy.degree(d, self)?;
                if value < Count::from(0) {
                    return Err(Error::Inconsistent(format!(
                        "{} produced a negative degree {value} for {d}",
                        strategy.name()
                    )));
                }
                self.table
                    .insert(d, 1, value.clone(), Provenance::Computed)?;
                Ok(value)
            }
        }
    }
}

/// `N(d)` through the standard registry, memoized into `table`.
pub fn resolve_n(d: DivisorClass, table: &mut NTable) -> Result<Count> {
    let registry = RecursionRegistry::standard();
    Resolver::new(&registry, table).resolve(d)
}

pub fn plane_n(d: i64, table: &mut NTable) -> Result<Count> {
    if d < 1 {
        return Err(Error::InvalidArgument(format!(
            "plane degree must be positive, got {d}"
        )));
    }
    resolve_n(DivisorClass::plane(d), table)
}

pub fn quadric_n(d: DivisorClass, table: &mut NTable) -> Result<Count> {
    expect_surface(d, Surface::Quadric)?;
    resolve_n(d, table)
}

pub fn f2_n(d: DivisorClass, table: &mut NTable) -> Result<Count> {
    expect_surface(d, Surface::Hirzebruch(2))?;
    resolve_n(d, table)
}

fn expect_surface(d: DivisorClass, s: Surface) -> Result<()> {
    if d.surface() == s {
        Ok(())
    } else {
        Err(Error::SurfaceMismatch {
            left: d.surface(),
            right: s,
        })
    }
}

/// Default reference curves `C3`, `C4`: two lines, the two rulings, or two
/// copies of `C`.
pub fn default_reference_curves(surface: Surface) -> (DivisorClass, DivisorClass) {
    match surface {
        Surface::Plane => (DivisorClass::plane(1), DivisorClass::plane(1)),
        Surface::Quadric => (DivisorClass::quadric(1, 0), DivisorClass::quadric(0, 1)),
        Surface::Hirzebruch(n) => (
            DivisorClass::hirzebruch(n, 1, 0),
            DivisorClass::hirzebruch(n, 1, 0),
        ),
    }
}

/// `γ(D1, D2)` for a split of (a class related to) `total`, with `N(D1)` and
/// `N(D2)` read from `table`. The value is signed.
pub fn gamma(
    d1: DivisorClass,
    d2: DivisorClass,
    total: DivisorClass,
    c3: DivisorClass,
    c4: DivisorClass,
    table: &NTable,
) -> Result<Count> {
    for c in [d2, total, c3, c4] {
        d1.intersect(&c)?;
    }
    let n1 = table.degree(&d1, 1)?;
    let n2 = table.degree(&d2, 1)?;
    Ok(gamma_kernel(&n1, &n2, d1, d2, total, c3, c4))
}

/// `N1·N2·[C(r0(D)−3, r0(D1)−1)(D1·C3)(D2·C4) − C(r0(D)−3, r0(D1)−2)(D2·C3)(D2·C4)]`.
pub(crate) fn gamma_kernel(
    n1: &Count,
    n2: &Count,
    d1: DivisorClass,
    d2: DivisorClass,
    total: DivisorClass,
    c3: DivisorClass,
    c4: DivisorClass,
) -> Count {
    let top = total.r0() - 3;
    let r1 = d1.r0();
    let plus = binomial(top, r1 - 1) * (d1.dot(&c3) * d2.dot(&c4));
    let minus = binomial(top, r1 - 2) * (d2.dot(&c3) * d2.dot(&c4));
    n1 * n2 * (plus - minus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2(a: i64, b: i64) -> DivisorClass {
        DivisorClass::hirzebruch(2, a, b)
    }

    #[test]
    fn gamma_hand_values() {
        let t = NTable::new();
        let c = f2(1, 0);
        assert_eq!(gamma(c, c, f2(2, 0), c, c, &t).unwrap(), Count::from(8));
        assert_eq!(
            gamma(f2(1, 1), f2(0, 1), f2(1, 2), c, c, &t).unwrap(),
            Count::from(-1)
        );
        assert_eq!(
            gamma(f2(0, 1), f2(1, 1), f2(1, 2), c, c, &t).unwrap(),
            Count::from(3)
        );
        // N(2F) = 0
        assert_eq!(
            gamma(f2(0, 2), f2(2, -2), f2(2, 0), c, c, &t).unwrap(),
            Count::from(0)
        );
    }

    #[test]
    fn gamma_reports_missing_class() {
        let t = NTable::new();
        let c = f2(1, 0);
        match gamma(f2(2, 0), c, f2(3, 0), c, c, &t) {
            Err(Error::MissingDegree { class, tangency: 1 }) => assert_eq!(class, f2(2, 0)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(gamma(c, DivisorClass::plane(1), c, c, c, &t).is_err());
    }

    #[test]
    fn resolve_dispatch() {
        let mut t = NTable::new();
        assert_eq!(resolve_n(f2(0, 2), &mut t).unwrap(), Count::from(0));
        assert_eq!(
            resolve_n(DivisorClass::plane(4), &mut t).unwrap(),
            Count::from(620)
        );
        assert_eq!(
            resolve_n(DivisorClass::quadric(0, 1), &mut t).unwrap(),
            Count::from(1)
        );
        assert!(matches!(
            resolve_n(f2(1, -2), &mut t),
            Err(Error::Excluded(_))
        ));
        assert_eq!(
            t.get(&DivisorClass::plane(4), 1).unwrap().provenance,
            Provenance::Computed
        );
        assert_eq!(
            t.get(&DivisorClass::plane(1), 1).unwrap().provenance,
            Provenance::Seeded
        );
    }

    #[test]
    fn hirzebruch_without_recursion_needs_external_data() {
        let mut t = NTable::new();
        let d = DivisorClass::hirzebruch(3, 2, 0);
        assert!(matches!(
            resolve_n(d, &mut t),
            Err(Error::MissingDegree { tangency: 1, .. })
        ));
        assert_eq!(
            resolve_n(DivisorClass::hirzebruch(3, 1, 4), &mut t).unwrap(),
            Count::from(1)
        );
        t.insert(d, 1, Count::from(69), Provenance::External)
            .unwrap();
        assert_eq!(resolve_n(d, &mut t).unwrap(), Count::from(69));
    }

    #[test]
    fn registry_lookup() {
        let r = RecursionRegistry::standard();
        assert_eq!(r.names(), vec!["kontsevich", "quadric", "f2"]);
        assert_eq!(r.for_surface(Surface::Quadric).unwrap().name(), "quadric");
        assert!(r.for_surface(Surface::Hirzebruch(3)).is_none());
        assert!(r.get("f2").unwrap().handles(Surface::Hirzebruch(2)));
    }
}
