//! JSON encoding of exact numbers.
//!
//! Integers that fit in an `i64` are emitted as JSON numbers; anything wider
//! becomes a decimal string, so consumers never see truncated values.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// An `i128` that serializes as a number when it fits in `i64`, else as a
/// decimal string.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JsonInt(pub i128);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        if let Ok(small) = i64::try_from(self.0) {
            ser.serialize_i64(small)
        } else {
            ser.serialize_str(&self.0.to_string())
        }
    }
}

fn serialize_bigint<S: Serializer>(v: &BigInt, ser: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => ser.serialize_i64(small),
        Err(_) => ser.serialize_str(&v.to_string()),
    }
}

/// A rational emitted as `{"numer": .., "denom": ..}` with the same
/// number-or-string rule per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JsonRational(pub BigRational);

impl Serialize for JsonRational {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        struct Big<'a>(&'a BigInt);
        impl Serialize for Big<'_> {
            fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
                serialize_bigint(self.0, ser)
            }
        }
        let mut s = ser.serialize_struct("rational", 2)?;
        s.serialize_field("numer", &Big(self.0.numer()))?;
        s.serialize_field("denom", &Big(self.0.denom()))?;
        s.end()
    }
}
