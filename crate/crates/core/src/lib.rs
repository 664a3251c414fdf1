//! Restricted roots, nests and dimension formulas for spherical pairs.

pub mod catalog;
pub mod dimension;
pub mod error;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod restriction;
pub mod root_system;
pub mod vector;

pub use catalog::{catalog, families, instantiate, lookup, Klass, Params, SphericalPair};
pub use dimension::{dim_for_k, dim_restricted, DimensionReport, Mode};
pub use error::{Error, Result};
pub use rational::Q;
pub use report::{render_text, Description};
pub use restriction::{Analysis, RestrictedRootDatum, SatakeDiagram};
pub use root_system::RootSystem;
pub use vector::ExactVector;
