//! The multi-index kernel `γ_{i_1,…,i_t}` and the right-hand side of the
//! `F_n` formula
//!
//! ```text
//! n·N(D) = Σ_{D1+D2=D} (D1·D2) γ_{1,1}(D1,D2)
//!        + Σ_{t=2}^{n} Σ_{D1+…+Dt=D−E} Σ_{i} Π_{j: i_j=1}(E·D_j) γ_{i_1..i_t}(D1,…,Dt)
//! ```
//!
//! The kernel is evaluated exactly as written, over rationals. Tangential
//! degrees `N_i(D)` with `i ≥ 2` are never computed here; they come from an
//! externally supplied [`TangentialDegreeTable`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{multinomial, Count};
use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, Eligibility, Surface, TangencyTuple};
use crate::recursion::{NTable, Provenance, RecursionRegistry, Resolver};

/// Degrees `N_i(D)` on one `F_n`. Absent `i ≥ 2` entries are hard errors.
#[derive(Clone, Debug)]
pub struct TangentialDegreeTable {
    n: u32,
    table: NTable,
}

impl TangentialDegreeTable {
    pub fn new(n: u32) -> Result<Self> {
        Surface::hirzebruch(n)?;
        Ok(TangentialDegreeTable {
            n,
            table: NTable::new(),
        })
    }

    /// Keeps only the entries that live on `F_n`.
    pub fn from_table(n: u32, table: &NTable) -> Result<Self> {
        let mut out = Self::new(n)?;
        for (key, entry) in table.iter() {
            if key.class.surface() == Surface::Hirzebruch(n) {
                out.table.insert(
                    key.class,
                    key.tangency,
                    entry.value.clone(),
                    entry.provenance,
                )?;
            }
        }
        Ok(out)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn surface(&self) -> Surface {
        Surface::Hirzebruch(self.n)
    }

    pub fn table(&self) -> &NTable {
        &self.table
    }

    pub fn insert(&mut self, d: DivisorClass, i: u32, value: Count) -> Result<()> {
        if d.surface() != self.surface() {
            return Err(Error::SurfaceMismatch {
                left: d.surface(),
                right: self.surface(),
            });
        }
        self.table.insert(d, i, value, Provenance::External)
    }

    /// Fills `i = 1` entries for every class that can occur below `target`
    /// (as a part of `target` or of `target − E`) wherever a complete
    /// recursion exists. Classes without one are left absent.
    pub fn autofill_plain(&mut self, target: DivisorClass) -> Result<()> {
        let registry = RecursionRegistry::standard();
        let [a, b] = [target.coords()[0], target.coords()[1]];
        let mut resolver = Resolver::new(&registry, &mut self.table);
        for x in 0..=a.max(0) {
            for y in 0..=(b + i64::from(self.n)).max(0) {
                let d = DivisorClass::hirzebruch(self.n, x, y);
                if d.eligibility() != Eligibility::Recurse {
                    continue;
                }
                match resolver.resolve(d) {
                    Ok(_) | Err(Error::MissingDegree { .. }) => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Ok(())
    }

    pub fn lookup(&self, d: &DivisorClass, i: u32) -> Result<Count> {
        self.table.degree(d, i)
    }
}

/// Ordered tuples `(i_1, …, i_t)`, `i_j ≥ 1`, with `Σ (i_j − 1) = n − t`,
/// in descending lexicographic order.
pub fn tangency_tuples(t: usize, n: u32) -> Result<Vec<TangencyTuple>> {
    let n_us = n as usize;
    if t < 2 || t > n_us {
        return Err(Error::InvalidArgument(format!(
            "tuple length must satisfy 2 <= t <= n, got t = {t}, n = {n}"
        )));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(t);
    compositions(t, (n_us - t) as u32, &mut cur, &mut out);
    Ok(out
        .into_iter()
        .map(|v| TangencyTuple::new(v).expect("entries are positive"))
        .collect())
}

fn compositions(slots: usize, excess: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if slots == 1 {
        cur.push(excess + 1);
        out.push(cur.clone());
        cur.pop();
        return;
    }
    for e in (0..=excess).rev() {
        cur.push(e + 1);
        compositions(slots - 1, excess - e, cur, out);
        cur.pop();
    }
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `γ_{i_1,…,i_t}(D_1,…,D_t)` for a decomposition of (a class related to)
/// `total`, evaluated literally over the rationals. The result must be an
/// integer; anything else is reported as [`Error::Inconsistent`].
pub fn gamma_multi(
    is: &TangencyTuple,
    ds: &[DivisorClass],
    total: DivisorClass,
    table: &TangentialDegreeTable,
) -> Result<Count> {
    let t = ds.len();
    if t < 2 || is.len() != t {
        return Err(Error::InvalidArgument(format!(
            "need matching tangency and class lists of length >= 2, got {} and {t}",
            is.len()
        )));
    }
    let surface = table.surface();
    for d in ds.iter().chain(std::iter::once(&total)) {
        if d.surface() != surface {
            return Err(Error::SurfaceMismatch {
                left: d.surface(),
                right: surface,
            });
        }
    }
    let i: Vec<u32> = is.entries().to_vec();

    let mut prefactor = Count::one();
    for (d, &ij) in ds.iter().zip(&i) {
        prefactor *= table.lookup(d, ij)? * ij;
    }
    if prefactor.is_zero() {
        return Ok(Count::zero());
    }

    let section = surface.section().expect("Hirzebruch surface");
    let c: Vec<i64> = ds.iter().map(|d| d.dot(&section)).collect();
    let inv = |j: usize| ratio(1, i64::from(i[j]));
    let over = |j: usize| ratio(c[j], i64::from(i[j]));
    let r0i: Vec<i64> = ds.iter().zip(&i).map(|(d, &ij)| d.r0_contact(ij)).collect();
    let top = total.r0() - 3;

    let mut first_parts = vec![r0i[0] - 1, r0i[1] - 1];
    first_parts.extend_from_slice(&r0i[2..]);
    let mut second_parts = vec![r0i[0] - 2, r0i[1]];
    second_parts.extend_from_slice(&r0i[2..]);
    let m1 = BigRational::from_integer(multinomial(top, &first_parts));
    let m2 = BigRational::from_integer(multinomial(top, &second_parts));

    let lead = over(0) + over(1);
    let mut a = BigRational::zero();
    for j in 2..t {
        a += over(j) * &lead - ratio(c[j] * c[j], i64::from(i[j]));
    }
    let mut b = BigRational::zero();
    for j in 1..t {
        b += ratio(c[j] * c[j], 1) * (inv(j) + inv(0));
    }
    let mut cross = BigRational::zero();
    for j in 1..t {
        for k in j + 1..t {
            cross += ratio(c[j] * c[k], 1);
        }
    }
    b += cross * inv(0);

    let value = BigRational::from_integer(prefactor) * (m1 * a - m2 * b);
    if !value.is_integer() {
        return Err(Error::Inconsistent(format!(
            "γ{is} on {} is not integral: {value}",
            ds.iter()
                .map(|d| d.to_string())
                .collect::<Vec<_>>()
                .join(" + ")
        )));
    }
    Ok(value.to_integer())
}

/// Right-hand side of the `F_n` formula, split by the number of parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnRhs {
    pub class: DivisorClass,
    pub n: u32,
    /// `Σ_{D1+D2=D} (D1·D2) γ_{1,1}(D1,D2)`.
    pub first_sum: Count,
    /// `(t, Σ_{D1+…+Dt=D−E} Σ_i Π(E·D_j) γ_i)` for `t = 2..=n`.
    pub by_parts: Vec<(usize, Count)>,
}

impl FnRhs {
    pub fn total(&self) -> Count {
        self.by_parts
            .iter()
            .fold(self.first_sum.clone(), |acc, (_, v)| acc + v)
    }

    /// `RHS / n`, which is `N(D)` when the formula applies.
    pub fn over_n(&self) -> BigRational {
        BigRational::new(self.total(), BigInt::from(self.n))
    }
}

/// Evaluates the right-hand side for `d` on `F_n`, with ordered
/// decompositions and every `j` with `i_j = 1` in the `E·D_j` product.
pub fn theorem_fn_rhs(d: DivisorClass, n: u32, table: &TangentialDegreeTable) -> Result<Count> {
    Ok(theorem_fn_terms(d, n, table)?.total())
}

pub fn theorem_fn_terms(d: DivisorClass, n: u32, table: &TangentialDegreeTable) -> Result<FnRhs> {
    let surface = Surface::hirzebruch(n)?;
    if d.surface() != surface {
        return Err(Error::SurfaceMismatch {
            left: d.surface(),
            right: surface,
        });
    }
    if table.n() != n {
        return Err(Error::SurfaceMismatch {
            left: table.surface(),
            right: surface,
        });
    }
    let e = surface.exceptional().expect("Hirzebruch surface");
    let ones = TangencyTuple::new(vec![1, 1])?;

    let mut first_sum = Count::zero();
    for pair in d.decompositions(2)? {
        first_sum += gamma_multi(&ones, &pair, d, table)? * pair[0].dot(&pair[1]);
    }

    let rest = d - e;
    let mut by_parts = Vec::new();
    for t in 2..=n as usize {
        let tuples = tangency_tuples(t, n)?;
        let mut sum = Count::zero();
        for parts in rest.decompositions(t)? {
            for is in &tuples {
                let weight: i64 = parts
                    .iter()
                    .zip(is.entries())
                    .filter(|(_, &ij)| ij == 1)
                    .map(|(p, _)| p.dot(&e))
                    .product();
                if weight == 0 {
                    continue;
                }
                sum += gamma_multi(is, &parts, d, table)? * weight;
            }
        }
        by_parts.push((t, sum));
    }

    Ok(FnRhs {
        class: d,
        n,
        first_sum,
        by_parts,
    })
}

/// The `F_n` formula at `n = 2` set against the complete `F2` recursion.
#[derive(Clone, Debug)]
pub struct F2Comparison {
    pub rhs: FnRhs,
    pub recursion: Count,
}

impl F2Comparison {
    pub fn agrees(&self) -> bool {
        self.rhs.over_n() == BigRational::from_integer(self.recursion.clone())
    }

    pub fn discrepancy(&self) -> BigRational {
        self.rhs.over_n() - BigRational::from_integer(self.recursion.clone())
    }
}

impl fmt::Display for F2Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "class            {}", self.rhs.class)?;
        writeln!(f, "first sum        {}", self.rhs.first_sum)?;
        for (t, v) in &self.rhs.by_parts {
            writeln!(f, "t = {t} sum        {v}")?;
        }
        writeln!(f, "rhs              {}", self.rhs.total())?;
        writeln!(f, "rhs / n          {}", self.rhs.over_n())?;
        writeln!(f, "f2 recursion     {}", self.recursion)?;
        writeln!(f, "discrepancy      {}", self.discrepancy())?;
        write!(f, "agrees           {}", self.agrees())
    }
}

pub fn compare_with_f2_recursion(d: DivisorClass) -> Result<F2Comparison> {
    let mut table = TangentialDegreeTable::new(2)?;
    table.autofill_plain(d)?;
    let mut scratch = table.table().clone();
    let recursion = crate::recursion::f2_n(d, &mut scratch)?;
    let rhs = theorem_fn_terms(d, 2, &table)?;
    Ok(F2Comparison { rhs, recursion })
}
