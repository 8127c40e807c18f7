//! Serialization helpers shared by the report types.

use num_bigint::BigInt;
use serde::Serializer;

/// A big integer as a JSON number when it fits in 64 bits, else as a
/// decimal string.
pub fn bigint_number<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if let Ok(x) = i64::try_from(v) {
        s.serialize_i64(x)
    } else if let Ok(x) = u64::try_from(v) {
        s.serialize_u64(x)
    } else {
        s.serialize_str(&v.to_string())
    }
}
