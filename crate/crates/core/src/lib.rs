//! Exact tools for deciding when the circuit ideal of a uniform clutter's
//! complement has a linear resolution.
//!
//! The crate works with three kinds of objects on the ground set `{1..n}`:
//! [`Clutter`]s, [`SquarefreeMonomialIdeal`]s and [`SimplicialComplex`]es. Graded
//! Betti tables come from Hochster's formula ([`betti::betti_hochster`]) and are
//! cross-checked against a Koszul-complex oracle ([`koszul::betti_koszul_oracle`]).
//! The [`reduction`] module implements clutter moves that leave the regularity
//! of `I(C̄)` unchanged and records them as replayable certificates; the
//! [`triangulation`] module applies them to triangulated 2-spheres.
//!
//! ```
//! use linres::{betti, fixtures, FieldSpec};
//!
//! let bipyramid = fixtures::hexahedron();
//! let ideal = bipyramid.complement_ideal();
//! assert_eq!(betti::regularity(&ideal, FieldSpec::Rationals).unwrap(), Some(4));
//! assert!(!betti::has_linear_resolution(&ideal, 3, FieldSpec::GF2).unwrap());
//! ```

pub mod analysis;
pub mod betti;
pub mod clutter;
pub mod complex;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod format;
pub mod homology;
pub mod ideal;
pub mod iso;
pub mod koszul;
pub mod linalg;
pub mod reduction;
pub mod triangulation;
pub mod vertex;

pub use clutter::Clutter;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use ideal::{NamedIdeal, PrimeComponent, SquarefreeMonomialIdeal};
pub use vertex::VertexSet;
