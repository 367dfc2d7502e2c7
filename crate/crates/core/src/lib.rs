//! Exact construction, verification and reconstruction of solutions of the
//! pentagon equation `Φ12 Φ13 Φ23 = Φ23 Φ12` and of the modified pentagon
//! equation `F12 F13 Φ23 = F23 F12`.

pub mod error;
pub mod galois;
pub mod group;
pub mod hopf;
pub mod pentagon;
pub mod phi_module;
pub mod reconstruction;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
pub use report::{CheckReport, Violation};
pub use tensor::{FieldSpec, LegMap, Matrix, Scalar, Space};
