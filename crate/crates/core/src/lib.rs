//! Exact degrees `N(D)` of Severi varieties of rational curves on the plane,
//! on ℙ¹×ℙ¹ and on the Hirzebruch surfaces `F_n`.
//!
//! - [`lattice`]: Picard lattices, intersection numbers, genus and dimension.
//! - [`combinat`]: big-integer binomials and series coefficients.
//! - [`recursion`]: the γ kernel and the plane, quadric and `F2` recursions.
//! - [`fn2c`]: four independent routes to `N(2C)` on `F_n`.
//! - [`fngeneral`]: the tangential kernel and the `F_n` right-hand side.
//! - [`store`]: persisted degree tables.
//!
//! ```
//! use severi_core::{lattice::DivisorClass, recursion::{resolve_n, NTable}};
//!
//! let mut table = NTable::new();
//! let n = resolve_n(DivisorClass::hirzebruch(2, 2, 0), &mut table).unwrap();
//! assert_eq!(n.to_string(), "10");
//! ```

pub mod combinat;
pub mod error;
pub mod fn2c;
pub mod fngeneral;
pub mod lattice;
pub mod recursion;
pub mod store;

pub use combinat::Count;
pub use error::{Error, Result};
pub use lattice::{DivisorClass, Eligibility, Surface, TangencyTuple};
