//! Integers serialize as JSON numbers when they fit in `i64` and as decimal
//! strings otherwise; both forms are accepted on input.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserializer, Serializer};
use std::fmt;

pub(crate) fn serialize_int<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(small) => s.serialize_i64(small),
        None => s.serialize_str(&v.to_string()),
    }
}

pub(crate) fn serialize_ints<S: Serializer>(vs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    struct One<'a>(&'a BigInt);
    impl serde::Serialize for One<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            serialize_int(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        seq.serialize_element(&One(v))?;
    }
    seq.end()
}

pub(crate) struct IntVisitor;

impl<'de> Visitor<'de> for IntVisitor {
    type Value = BigInt;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a decimal integer string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<BigInt, E> {
        Ok(v.into())
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<BigInt, E> {
        v.parse().map_err(E::custom)
    }
}

pub(crate) struct IntWrapper(pub BigInt);

impl<'de> serde::Deserialize<'de> for IntWrapper {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_any(IntVisitor).map(IntWrapper)
    }
}
