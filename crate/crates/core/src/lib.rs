//! Exact combinatorics for cyclic sieving on words and the characters of
//! representations induced from cyclic and wreath-product subgroups of `S_n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`words`]: words, compositions, necklaces and word statistics
//!   (descents, `maj`, `maj_n`, `flex`, `bfmaj_ν`, `flex_a^b`, `maj_a^b`).
//! * [`tableaux`]: partitions, standard and semistandard tableaux, RSK.
//! * [`symfunc`]: homogeneous symmetric functions with exact coefficients
//!   in the monomial, Schur, power-sum, homogeneous and elementary bases.
//! * [`characters`]: an independent character oracle (Murnaghan–Nakayama,
//!   Ramanujan sums, exact evaluation at roots of unity).
//! * [`csp`]: cyclic sieving verification.
//! * [`liemodules`]: Schur expansions of induced characters and higher Lie
//!   modules, each computed along several independent routes.
//! * [`verify`] and [`cli`]: the verification suites and the command-line
//!   front end.
//!
//! All arithmetic is exact. Symmetric functions are generic over the
//! coefficient field ([`Scalar`]); the aliases below fix the usual choices.

pub mod characters;
pub mod cli;
pub mod csp;
mod error;
pub mod liemodules;
mod scalar;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub use characters::{CycleType, IntPolyModQn, RootValue};
pub use symfunc::{Basis, SymFunc};
pub use tableaux::{Partition, PartitionTuple, Tableau, TableauKind};
pub use words::{Composition, Letter, MajTuple, Necklace, NecklaceFilter, Word};

/// Exact rationals with machine-word numerator and denominator.
pub type Q = num_rational::Ratio<i64>;

/// Arbitrary-precision rationals.
pub type BigQ = num_rational::BigRational;

/// Symmetric functions over [`Q`]; the default coefficient type everywhere.
pub type Sym = SymFunc<Q>;

/// Symmetric functions over [`BigQ`].
pub type BigSym = SymFunc<BigQ>;
