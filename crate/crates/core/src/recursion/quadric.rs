use super::{default_reference_curves, gamma_kernel, Resolver, SeveriRecursion};
use crate::combinat::Count;
use crate::error::Result;
use crate::lattice::{DivisorClass, Surface};

/// `N(D) = Σ_{D1+D2=D} γ(D1, D2)(D1·D2)` on ℙ¹×ℙ¹ over ordered splittings.
#[derive(Clone, Copy, Debug)]
pub struct QuadricRecursion {
    pub reference: (DivisorClass, DivisorClass),
}

impl Default for QuadricRecursion {
    fn default() -> Self {
        QuadricRecursion {
            reference: default_reference_curves(Surface::Quadric),
        }
    }
}

impl SeveriRecursion for QuadricRecursion {
    fn name(&self) -> &str {
        "quadric"
    }

    fn handles(&self, surface: Surface) -> bool {
        surface == Surface::Quadric
    }

    fn degree(&self, d: DivisorClass, resolver: &mut Resolver<'_>) -> Result<Count> {
        let (c3, c4) = self.reference;
        let mut sum = Count::from(0);
        for pair in d.decompositions(2)? {
            let (d1, d2) = (pair[0], pair[1]);
            let n1 = resolver.resolve(d1)?;
            let n2 = resolver.resolve(d2)?;
            sum += gamma_kernel(&n1, &n2, d1, d2, d, c3, c4) * d1.dot(&d2);
        }
        Ok(sum)
    }
}
