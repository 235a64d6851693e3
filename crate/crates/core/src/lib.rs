//! Exact computations on hypertoric varieties: oriented hyperplane
//! arrangements, the toric and hyperkähler stability conditions they encode,
//! and the combinatorics of the core and its covering by toric cotangent charts.

pub mod arrangement;
pub mod combinatorics;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod feasibility;
pub mod linalg;
pub mod quotient;
pub mod render;
pub mod stability;

pub use error::{Error, Result};
pub use arrangement::{Arrangement, Sign, SignVector, SmoothArrangement, TorusData};
pub use feasibility::{Certificate, Constraint, Polyhedron, Relation};
pub use linalg::{Integer, Rational};
pub use quotient::{Guard, ENUM_LIMIT_ENV};
pub use stability::{StabilityVerdict, SupportPattern, SupportStatus};
