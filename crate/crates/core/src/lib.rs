//! Constacyclic, quadratic residue and extended quadratic residue codes over
//! the non-chain ring `R = F_p[u]/(u^4 - u)`, `p ≡ 1 (mod 3)`.
//!
//! `R` splits as `F_p^4` through four primitive idempotents, so every
//! `R`-linear code is stored as a quadruple of `F_p`-linear codes and all
//! duality, intersection and membership questions reduce to linear algebra
//! over `F_p`. Two Gray maps carry codes over `R` to codes over `F_p`.

pub mod error;
pub mod field;
pub mod fpcode;
pub mod gray;
mod linalg;
pub mod poly;
pub mod qr;
pub mod rcode;
pub mod ring;

pub use error::{Error, Result};
pub use field::{ExtField, PrimeField};
pub use fpcode::{FpLinearCode, ModulusTag, MonomialMap};
pub use poly::{FpPoly, RPoly};
pub use qr::{Family, QRMask, QRSystem};
pub use rcode::{ConstaGenerators, RLinearCode};
pub use ring::{IdempotentSet, Ring, RingElement};
