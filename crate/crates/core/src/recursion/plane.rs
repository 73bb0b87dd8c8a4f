use super::{Resolver, SeveriRecursion};
use crate::combinat::{binomial, Count};
use crate::error::Result;
use crate::lattice::{DivisorClass, Surface};

/// Kontsevich's recursion for rational plane curves:
/// `N(d) = Σ_{d1+d2=d} N(d1)N(d2) d1 d2 [C(3d−4, 3d1−2) d1 d2 − C(3d−4, 3d1−3) d2²]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KontsevichRecursion;

impl SeveriRecursion for KontsevichRecursion {
    fn name(&self) -> &str {
        "kontsevich"
    }

    fn handles(&self, surface: Surface) -> bool {
        surface == Surface::Plane
    }

    fn degree(&self, d: DivisorClass, resolver: &mut Resolver<'_>) -> Result<Count> {
        let d = d.coords()[0];
        let mut sum = Count::from(0);
        for d1 in 1..d {
            let d2 = d - d1;
            let n1 = resolver.resolve(DivisorClass::plane(d1))?;
            let n2 = resolver.resolve(DivisorClass::plane(d2))?;
            let bracket = binomial(3 * d - 4, 3 * d1 - 2) * (d1 * d2)
                - binomial(3 * d - 4, 3 * d1 - 3) * (d2 * d2);
            sum += n1 * n2 * (d1 * d2) * bracket;
        }
        Ok(sum)
    }
}
