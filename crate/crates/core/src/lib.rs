//! Exact-arithmetic word symmetric functions (`WSym`), the Hopf algebra of
//! set partitions into lists (`BWSym`) and its variants, the set-composition
//! operad, and Redfield-Polya-type enumeration with brute-force oracles.

pub mod bwsym;
pub mod combinat;
pub mod enumeration;
pub mod error;
pub mod groups;
pub mod linear;
pub mod sym;
pub mod variants;
pub mod wsym;

pub use error::{Error, Result};
