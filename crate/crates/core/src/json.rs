//! JSON helpers shared by the export types.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::SerializeSeq;
use serde::Serializer;
use serde_json::Value;

/// Integers that fit in `i64` become JSON numbers; larger ones become strings.
pub fn bigint_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::from(v.to_string()),
    }
}

pub(crate) fn serialize_bigints<S: Serializer>(vals: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(vals.len()))?;
    for v in vals {
        seq.serialize_element(&bigint_value(v))?;
    }
    seq.end()
}

pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_some(&bigint_value(v))
}
