//! Exact multiplicities `⟨χ, Ind_K^G(1)⟩` for the finite symmetric spaces of
//! `GL_n(F_q)` and `U_n(F_{q^2})`, together with the symmetric-group
//! combinatorics they reduce to.

pub mod character;
pub mod error;
pub mod identity;
pub mod involution;
pub mod multiplicity;
pub mod orbit;
pub mod partition;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::Partition;

use num_bigint::BigInt;

pub(crate) fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}
