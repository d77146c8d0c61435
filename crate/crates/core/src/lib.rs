//! Z2Z4-additive codes, their duals and Gray images, and decisions about
//! additive complementary duality.
//!
//! ```
//! use z2z4::{duality, Cap, Z2Z4Code};
//!
//! let c = Z2Z4Code::new(1, 1, &["1 | 1".parse().unwrap()]).unwrap();
//! assert!(duality::is_acd(&c, Cap::DEFAULT).unwrap());
//! assert_eq!(c.dual().generators(), vec!["1 | 2".parse().unwrap()]);
//! ```

pub mod code;
pub mod constructions;
pub mod duality;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod linalg;
pub mod oracle;
pub mod verify;
pub mod zring;

pub use code::{
    BinaryCode, Cap, CodeType, MonomialTransform, Punctured, QuaternaryCode, Side, StandardForm, Z2Z4Code,
};
pub use duality::{AnalysisReport, BinaryImage, DSet, GramMatrix, Statements};
pub use error::{Error, Result};
pub use io::CodeFile;
pub use zring::{BinaryVector, MixedVector, Z4};
