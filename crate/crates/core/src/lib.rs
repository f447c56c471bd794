//! Plane convex geometry in normed planes.
//!
//! The crate computes the four normed areas (Busemann, Holmes–Thompson,
//! Gromov's mass and mass*) of a convex body measured in the norm whose unit
//! disk is the body's central symmetral, together with the maximal-area
//! translation bodies, reflection bodies, Reuleaux triangles and extremal
//! inscribed/circumscribed figures that determine them.
//!
//! All kernels are generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix `f64`, which is what every documented tolerance
//! refers to.

pub mod body;
pub mod error;
pub mod extremal;
pub mod hull_tr;
pub mod m0;
pub mod normvol;
pub mod optimize;
pub mod scalar;

pub use error::{GeomError, Result};
pub use normvol::VolumeKind;
pub use scalar::Scalar;

pub type Point = body::Point<f64>;
pub type Direction = body::Direction<f64>;
pub type Body = body::ConvexBody<f64>;
pub type Affine = body::AffineMap<f64>;
pub type Shape = body::ShapeSpec<f64>;
pub type Figure = extremal::ExtremalFigure<f64>;
pub type Witness = extremal::Witness<f64>;
pub type Chord = extremal::ChordResult<f64>;
pub type NormContext = normvol::NormContext<f64>;
pub type TranslationResult = hull_tr::TranslationResult<f64>;
pub type ReuleauxTriangle = hull_tr::ReuleauxTriangle<f64>;
pub type M0Params = m0::M0Params<f64>;
