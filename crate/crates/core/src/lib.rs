//! Exact enumeration and classification of basic shades.
//!
//! A *shade* is a singular skew-symmetric integer matrix with entries in
//! `[-2, 2]` whose rows satisfy the sign and multiplicity constraints checked
//! by [`enumerate::is_admissible_row`]. A shade is a *tame periodicity shadow*
//! when some symmetric matrix `C` with natural entries and nonzero columns
//! satisfies `A C = 0`. This crate generates one representative per orbit
//! under simultaneous row/column permutation and negation, decides which
//! representatives are shadows and which of those are essential, and exposes
//! the exact linear algebra needed to do so.

pub mod canonical;
pub mod classifier;
pub mod enumerate;
pub mod error;
pub mod exactla;
pub mod lp;
pub mod matrix;
pub mod oracle;
pub mod quiver;

pub use canonical::{canonical_max, canonical_min, is_basic_orbit_rep};
pub use classifier::{classify, ClassificationRecord, FilterVerdict};
pub use enumerate::{enumerate_basic_shades, EnumerationOptions};
pub use error::{Result, ShadowError};
pub use exactla::{LinearForm, ParametricSymmetricMatrix, ParametricVector, Rational};
pub use matrix::{compare_lex, Permutation, SkewIntMatrix, MAX_N};
pub use quiver::Quiver;
