//! Big integers go to JSON as plain decimal numbers, not digit arrays.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub fn number(x: &BigInt) -> serde_json::Number {
    x.to_string().parse().expect("decimal integer is a JSON number")
}

pub fn value(x: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(number(x))
}

pub(crate) fn serialize_ints<S: Serializer>(xs: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
    let mut seq = serializer.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&number(x))?;
    }
    seq.end()
}
