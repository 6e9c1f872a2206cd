//! Finite Blaschke products and golden-ratio geometry in the unit disc.
//!
//! - [`numerics`]: complex polynomials, root finding, small solvers.
//! - [`blaschke`]: products, circle preimages, interspersed-tuple
//!   identification.
//! - [`golden`]: golden chords, triangles and rectangles on the unit circle.
//! - [`poncelet`]: Blaschke ellipses, tangency, inscribed ellipses of
//!   quadrilaterals and degree-4 products.
//! - [`render`]: deterministic SVG scenes, including the stock figures.

pub mod blaschke;
pub mod error;
pub mod golden;
pub mod numerics;
pub mod poncelet;
pub mod render;

pub use blaschke::{construct_identifying_product, is_interspersed, BlaschkeProduct};
pub use error::{Error, Result};
pub use golden::{ChordSolution, GoldenRectangle, GoldenTriangle, ALPHA};
pub use numerics::{ComplexPoint, ComplexPolynomial, TolerancePolicy};
pub use poncelet::{Chord, Ellipse};
pub use render::{render_svg, SceneDescription, SceneElement};
