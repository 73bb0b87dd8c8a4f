//! Picard lattices of the plane, the quadric and the Hirzebruch surfaces.
//!
//! Bases:
//! - `P2`: the line class; a class is its degree `d`.
//! - `Q` (ℙ¹×ℙ¹): the two rulings; a class is the bidegree `(a, b)`.
//! - `F<n>`: `C` (with `C² = n`) and the fiber `F`; a class `αC + βF` is
//!   stored as `(α, β)`. The negative curve is `E = C − nF = (1, −n)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Surface {
    Plane,
    Quadric,
    /// Hirzebruch surface `F_n`, `n ≥ 1`.
    Hirzebruch(u32),
}

impl Surface {
    pub fn hirzebruch(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "Hirzebruch index must be at least 1 (use Q for the quadric)".into(),
            ));
        }
        Ok(Surface::Hirzebruch(n))
    }

    pub fn rank(self) -> usize {
        match self {
            Surface::Plane => 1,
            Surface::Quadric | Surface::Hirzebruch(_) => 2,
        }
    }

    /// Tag used in every file format: `P2`, `Q`, `F<n>`.
    pub fn tag(self) -> String {
        self.to_string()
    }

    pub fn class(self, coords: &[i64]) -> Result<DivisorClass> {
        DivisorClass::new(self, coords)
    }

    pub fn zero(self) -> DivisorClass {
        DivisorClass {
            surface: self,
            coords: [0, 0],
        }
    }

    /// Canonical class: `−3` on the plane, `(−2, −2)` on the quadric and
    /// `−C − E − 2F = (−2, n − 2)` on `F_n`.
    pub fn canonical(self) -> DivisorClass {
        let coords = match self {
            Surface::Plane => [-3, 0],
            Surface::Quadric => [-2, -2],
            Surface::Hirzebruch(n) => [-2, i64::from(n) - 2],
        };
        DivisorClass {
            surface: self,
            coords,
        }
    }

    /// The negative section `E`, present only on Hirzebruch surfaces.
    pub fn exceptional(self) -> Option<DivisorClass> {
        match self {
            Surface::Hirzebruch(n) => Some(DivisorClass {
                surface: self,
                coords: [1, -i64::from(n)],
            }),
            _ => None,
        }
    }

    /// The section class `C` on `F_n`.
    pub fn section(self) -> Option<DivisorClass> {
        match self {
            Surface::Hirzebruch(_) => Some(DivisorClass {
                surface: self,
                coords: [1, 0],
            }),
            _ => None,
        }
    }

    /// The fiber class `F` on `F_n`.
    pub fn fiber(self) -> Option<DivisorClass> {
        match self {
            Surface::Hirzebruch(_) => Some(DivisorClass {
                surface: self,
                coords: [0, 1],
            }),
            _ => None,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Plane => f.write_str("P2"),
            Surface::Quadric => f.write_str("Q"),
            Surface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

impl FromStr for Surface {
    type Err = Error;

    /// Accepts `P2`, `Q` and `F<n>` in either case.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_uppercase().as_str() {
            "P2" => Ok(Surface::Plane),
            "Q" => Ok(Surface::Quadric),
            u if u.starts_with('F') => {
                let n: u32 = u[1..]
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("unknown surface `{t}`")))?;
                Surface::hirzebruch(n)
            }
            _ => Err(Error::InvalidArgument(format!("unknown surface `{t}`"))),
        }
    }
}

/// A divisor class in the chosen basis of its surface's Picard lattice.
///
/// Ordering is by surface, then coordinates lexicographically, which is the
/// order used for persisted tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorClass {
    surface: Surface,
    // Rank-1 lattices keep the second slot at zero.
    coords: [i64; 2],
}

impl DivisorClass {
    pub fn new(surface: Surface, coords: &[i64]) -> Result<Self> {
        if coords.len() != surface.rank() {
            return Err(Error::InvalidClass(format!(
                "{surface} classes take {} coordinate(s), got {}",
                surface.rank(),
                coords.len()
            )));
        }
        if let Surface::Hirzebruch(0) = surface {
            return Err(Error::InvalidArgument(
                "Hirzebruch index must be at least 1".into(),
            ));
        }
        let mut c = [0; 2];
        c[..coords.len()].copy_from_slice(coords);
        Ok(DivisorClass { surface, coords: c })
    }

    pub fn plane(d: i64) -> Self {
        DivisorClass {
            surface: Surface::Plane,
            coords: [d, 0],
        }
    }

    pub fn quadric(a: i64, b: i64) -> Self {
        DivisorClass {
            surface: Surface::Quadric,
            coords: [a, b],
        }
    }

    /// `αC + βF` on `F_n`.
    ///
    /// # Panics
    /// If `n == 0`.
    pub fn hirzebruch(n: u32, alpha: i64, beta: i64) -> Self {
        assert!(n >= 1, "Hirzebruch index must be at least 1");
        DivisorClass {
            surface: Surface::Hirzebruch(n),
            coords: [alpha, beta],
        }
    }

    /// Parses comma-separated coordinates such as `2,0` or `3`.
    pub fn parse(surface: Surface, text: &str) -> Result<Self> {
        let coords = text
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::InvalidClass(format!("bad coordinate `{}`", p.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(surface, &coords)
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.surface.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coords == [0, 0]
    }

    fn same_surface(&self, other: &Self) -> Result<()> {
        if self.surface == other.surface {
            Ok(())
        } else {
            Err(Error::SurfaceMismatch {
                left: self.surface,
                right: other.surface,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_surface(other)?;
        Ok(*self + *other)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_surface(other)?;
        Ok(*self - *other)
    }

    pub fn scale(&self, k: i64) -> Self {
        DivisorClass {
            surface: self.surface,
            coords: [self.coords[0] * k, self.coords[1] * k],
        }
    }

    /// Intersection number; errors if the classes live on different surfaces.
    pub fn intersect(&self, other: &Self) -> Result<i64> {
        self.same_surface(other)?;
        Ok(self.dot(other))
    }

    /// Intersection number for classes known to share a surface.
    pub(crate) fn dot(&self, other: &Self) -> i64 {
        debug_assert_eq!(self.surface, other.surface);
        let [a, b] = self.coords;
        let [c, d] = other.coords;
        match self.surface {
            Surface::Plane => a * c,
            Surface::Quadric => a * d + b * c,
            Surface::Hirzebruch(n) => a * c * i64::from(n) + a * d + b * c,
        }
    }

    pub fn canonical_degree(&self) -> i64 {
        self.dot(&self.surface.canonical())
    }

    /// Arithmetic genus `(D·D + D·K)/2 + 1`; negative for e.g. `2F`.
    pub fn pa(&self) -> i64 {
        let twice = self.dot(self) + self.canonical_degree();
        debug_assert!(twice % 2 == 0, "D² + K·D is always even");
        twice / 2 + 1
    }

    /// Dimension of the Severi variety of rational curves, `−(K·D) − 1`.
    pub fn r0(&self) -> i64 {
        -self.canonical_degree() - 1
    }

    /// Dimension of the variety of rational curves with contact orders `m`
    /// along `E`.
    pub fn r0_tangential(&self, m: &TangencyTuple) -> i64 {
        self.r0() - m.excess()
    }

    /// `r0^i(D) = r0(D) − (i − 1)`.
    pub fn r0_contact(&self, i: u32) -> i64 {
        self.r0() - (i64::from(i) - 1)
    }

    /// Dimension of the complete linear series, `r0 + pa`.
    pub fn r_dim(&self) -> i64 {
        self.r0() + self.pa()
    }

    pub fn eligibility(&self) -> Eligibility {
        let [a, b] = self.coords;
        match self.surface {
            Surface::Plane => match a {
                1 => Eligibility::Seed1,
                d if d >= 2 => Eligibility::Recurse,
                _ => Eligibility::Zero,
            },
            Surface::Quadric => {
                if (a, b) == (1, 0) || (a, b) == (0, 1) {
                    Eligibility::Seed1
                } else if a >= 1 && b >= 1 {
                    self.genus_split()
                } else {
                    Eligibility::Zero
                }
            }
            Surface::Hirzebruch(n) => {
                if (a, b) == (1, -i64::from(n)) {
                    Eligibility::Excluded
                } else if (a, b) == (0, 1) {
                    Eligibility::Seed1
                } else if a >= 1 && b >= 0 {
                    self.genus_split()
                } else {
                    Eligibility::Zero
                }
            }
        }
    }

    fn genus_split(&self) -> Eligibility {
        if self.pa() == 0 {
            Eligibility::Seed1
        } else {
            Eligibility::Recurse
        }
    }

    /// All ordered `t`-tuples of Seed1/Recurse classes summing to `self`.
    pub fn decompositions(&self, t: usize) -> Result<Vec<Vec<DivisorClass>>> {
        if t < 2 {
            return Err(Error::InvalidArgument(format!(
                "decompositions need at least two parts, got {t}"
            )));
        }
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(t);
        self.split_into(t, &mut prefix, &mut out);
        Ok(out)
    }

    fn split_into(
        &self,
        t: usize,
        prefix: &mut Vec<DivisorClass>,
        out: &mut Vec<Vec<DivisorClass>>,
    ) {
        if t == 1 {
            if self.eligibility().carries_degree() {
                prefix.push(*self);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        let [a, b] = self.coords;
        if a < 0 || b < 0 {
            return;
        }
        let second_max = if self.surface.rank() == 2 { b } else { 0 };
        for x in 0..=a {
            for y in 0..=second_max {
                let part = DivisorClass {
                    surface: self.surface,
                    coords: [x, y],
                };
                if !part.eligibility().carries_degree() {
                    continue;
                }
                prefix.push(part);
                (*self - part).split_into(t - 1, prefix, out);
                prefix.pop();
            }
        }
    }
}

impl Add for DivisorClass {
    type Output = DivisorClass;

    /// # Panics
    /// On a surface mismatch; use [`DivisorClass::checked_add`] otherwise.
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.surface, rhs.surface, "surface mismatch");
        DivisorClass {
            surface: self.surface,
            coords: [
                self.coords[0] + rhs.coords[0],
                self.coords[1] + rhs.coords[1],
            ],
        }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.surface)?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    surface: String,
    coords: Vec<i64>,
}

impl Serialize for DivisorClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClassRepr {
            surface: self.surface.tag(),
            coords: self.coords().to_vec(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DivisorClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ClassRepr::deserialize(deserializer)?;
        let surface: Surface = repr.surface.parse().map_err(serde::de::Error::custom)?;
        DivisorClass::new(surface, &repr.coords).map_err(serde::de::Error::custom)
    }
}

/// How a class enters the recursions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Eligibility {
    /// Genus-0 linear system: exactly one curve through `r0` general points.
    Seed1,
    Recurse,
    /// No irreducible member; `N = 0`.
    Zero,
    /// The curve `E` on `F_n`.
    Excluded,
}

impl Eligibility {
    pub fn carries_degree(self) -> bool {
        matches!(self, Eligibility::Seed1 | Eligibility::Recurse)
    }
}

/// Contact orders `(m_1, …, m_k)` with the curve `E`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TangencyTuple(Vec<u32>);

impl TangencyTuple {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidArgument(
                "tangency orders must be positive".into(),
            ));
        }
        Ok(TangencyTuple(entries))
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ (m_i − 1)`.
    pub fn excess(&self) -> i64 {
        self.0.iter().map(|&m| i64::from(m) - 1).sum()
    }
}

impl fmt::Display for TangencyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u32, a: i64, b: i64) -> DivisorClass {
        DivisorClass::hirzebruch(n, a, b)
    }

    #[test]
    fn intersection_form() {
        assert_eq!(f(3, 1, 0).intersect(&f(3, 1, 0)).unwrap(), 3);
        let e = Surface::Hirzebruch(2).exceptional().unwrap();
        assert_eq!(e.coords(), &[1, -2]);
        assert_eq!(e.intersect(&e).unwrap(), -2);
        for (a, b) in [(0, 0), (3, 5), (-2, 7), (1, -1)] {
            assert_eq!(e.intersect(&f(2, a, b)).unwrap(), b);
        }
        let d = DivisorClass::quadric(4, -3);
        assert_eq!(d.intersect(&Surface::Quadric.zero()).unwrap(), 0);
    }

    #[test]
    fn mismatch_is_an_error() {
        let err = DivisorClass::plane(1).intersect(&DivisorClass::quadric(1, 0));
        assert!(matches!(err, Err(Error::SurfaceMismatch { .. })));
        assert!(f(2, 1, 0).checked_add(&f(3, 1, 0)).is_err());
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(Surface::Hirzebruch(2).canonical().coords(), &[-2, 0]);
        assert_eq!(Surface::Hirzebruch(3).canonical().coords(), &[-2, 1]);
        assert_eq!(Surface::Plane.canonical().coords(), &[-3]);
        assert_eq!(Surface::Quadric.canonical().coords(), &[-2, -2]);
        // −C − E − 2F
        for n in 1..6 {
            let s = Surface::Hirzebruch(n);
            let k = -s.section().unwrap() - s.exceptional().unwrap() - s.fiber().unwrap().scale(2);
            assert_eq!(k, s.canonical());
        }
    }

    #[test]
    fn genus_and_dimensions() {
        for n in 1..8 {
            let two_c = f(n, 2, 0);
            let n = i64::from(n);
            assert_eq!(two_c.pa(), n - 1);
            assert_eq!(two_c.r0(), 2 * n + 3);
            assert_eq!(two_c.r_dim(), 3 * n + 2);
            assert_eq!(f(n as u32, 0, 1).pa(), 0);
        }
        assert_eq!(DivisorClass::quadric(2, 0).pa(), -1);
        for d in 1..10 {
            let c = DivisorClass::plane(d);
            assert_eq!(c.r0(), 3 * d - 1);
            assert_eq!(c.r_dim(), d * (d + 3) / 2);
        }
        assert_eq!(f(2, 1, 0).r0(), 3);
        assert_eq!(f(2, 1, 1).r0(), 5);
        assert_eq!(f(2, 1, 1).pa(), 0);
        assert_eq!(f(2, 1, 1).r_dim(), 5);
    }

    #[test]
    fn tangential_dimension() {
        let m = TangencyTuple::new(vec![4]).unwrap();
        assert_eq!(f(4, 2, 0).r0_tangential(&m), 8);
        let ones = TangencyTuple::new(vec![1, 1, 1]).unwrap();
        assert_eq!(f(4, 2, 3).r0_tangential(&ones), f(4, 2, 3).r0());
        for n in 2..7u32 {
            for k in 0..n - 1 {
                let d = f(n, 1, i64::from(n - k));
                let m = TangencyTuple::new(vec![n - k]).unwrap();
                assert_eq!(d.r0_tangential(&m), d.r0() - i64::from(n - k - 1));
                assert_eq!(d.r0_contact(n - k), d.r0_tangential(&m));
            }
        }
        assert!(TangencyTuple::new(vec![1, 0]).is_err());
    }

    #[test]
    fn eligibility_rules() {
        use Eligibility::*;
        for n in 1..6 {
            assert_eq!(
                Surface::Hirzebruch(n).exceptional().unwrap().eligibility(),
                Excluded
            );
        }
        assert_eq!(f(2, 0, 2).eligibility(), Zero);
        assert_eq!(f(2, 1, 2).eligibility(), Seed1);
        assert_eq!(f(2, 0, 1).eligibility(), Seed1);
        assert_eq!(f(2, 2, 0).eligibility(), Recurse);
        assert_eq!(f(2, 2, -1).eligibility(), Zero);
        assert_eq!(f(2, 0, 0).eligibility(), Zero);
        assert_eq!(DivisorClass::plane(1).eligibility(), Seed1);
        assert_eq!(DivisorClass::plane(2).eligibility(), Recurse);
        assert_eq!(DivisorClass::plane(0).eligibility(), Zero);
        assert_eq!(DivisorClass::quadric(1, 0).eligibility(), Seed1);
        assert_eq!(DivisorClass::quadric(2, 0).eligibility(), Zero);
        assert_eq!(DivisorClass::quadric(1, 5).eligibility(), Seed1);
        assert_eq!(DivisorClass::quadric(2, 2).eligibility(), Recurse);
    }

    /// Unfiltered splittings of a class into two parts over a generous box,
    /// kept apart from `split_into`.
    fn brute_pairs(d: DivisorClass) -> Vec<Vec<DivisorClass>> {
        let s = d.surface();
        let mut out = Vec::new();
        for x in -6..=6i64 {
            for y in -6..=6i64 {
                if s.rank() == 1 && y != 0 {
                    continue;
                }
                let coords = if s.rank() == 1 { vec![x] } else { vec![x, y] };
                let p = DivisorClass::new(s, &coords).unwrap();
                let q = d - p;
                if p.eligibility().carries_degree() && q.eligibility().carries_degree() {
                    out.push(vec![p, q]);
                }
            }
        }
        out
    }

    #[test]
    fn decompositions_match_brute_force() {
        let two_c = f(2, 2, 0);
        assert_eq!(
            two_c.decompositions(2).unwrap(),
            vec![vec![f(2, 1, 0), f(2, 1, 0)]]
        );
        let d = f(2, 1, 2);
        let mut got = d.decompositions(2).unwrap();
        got.sort();
        assert_eq!(
            got,
            vec![vec![f(2, 0, 1), f(2, 1, 1)], vec![f(2, 1, 1), f(2, 0, 1)]]
        );
        assert!(f(2, 0, 1).decompositions(2).unwrap().is_empty());
        assert!(d.decompositions(1).is_err());

        for d in [
            f(2, 2, 0),
            f(2, 1, 2),
            f(2, 3, 1),
            f(3, 2, 2),
            DivisorClass::quadric(3, 2),
            DivisorClass::plane(5),
        ] {
            let mut a = d.decompositions(2).unwrap();
            let mut b = brute_pairs(d);
            a.sort();
            b.sort();
            assert_eq!(a, b, "{d}");
        }
    }

    #[test]
    fn triple_decompositions_sum_back() {
        let d = f(3, 1, 3);
        let triples = d.decompositions(3).unwrap();
        assert!(!triples.is_empty());
        for t in &triples {
            assert_eq!(t.iter().copied().reduce(|a, b| a + b).unwrap(), d);
            assert!(t.iter().all(|p| p.eligibility().carries_degree()));
        }
        // F + F + (C + F) in every order
        assert_eq!(triples.len(), 3);
    }

    #[test]
    fn parse_and_display() {
        let s: Surface = "f3".parse().unwrap();
        assert_eq!(s, Surface::Hirzebruch(3));
        assert_eq!("P2".parse::<Surface>().unwrap(), Surface::Plane);
        assert_eq!("q".parse::<Surface>().unwrap(), Surface::Quadric);
        assert!("F0".parse::<Surface>().is_err());
        assert!("G2".parse::<Surface>().is_err());
        let d = DivisorClass::parse(s, "2, -1").unwrap();
        assert_eq!(d.to_string(), "F3[2,-1]");
        assert!(DivisorClass::parse(Surface::Plane, "1,2").is_err());
        assert!(DivisorClass::parse(Surface::Plane, "x").is_err());
        let json = serde_json::to_string(&DivisorClass::hirzebruch(2, 2, 0)).unwrap();
        assert_eq!(json, r#"{"surface":"F2","coords":[2,0]}"#);
        let back: DivisorClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, DivisorClass::hirzebruch(2, 2, 0));
    }
}
