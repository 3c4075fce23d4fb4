//! Serialisation helpers for the `serde` feature.

use alloc::string::ToString;
use core::fmt::Display;

use serde::{Serialize, Serializer};

use crate::mis::ClassReport;
use crate::structure::Girth;

pub(crate) fn display<T: Display, S: Serializer>(value: &T, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&value.to_string())
}

/// Cycle lengths serialise as integers, forests as the string `"acyclic"`.
impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Cycle(c) => s.serialize_u64(*c as u64),
            Girth::Acyclic => s.serialize_str("acyclic"),
        }
    }
}

impl Serialize for ClassReport {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ClassReport", 7)?;
        st.serialize_field("order", &self.order)?;
        st.serialize_field("spectrum", &self.spectrum)?;
        st.serialize_field("class_size", &self.class_size)?;
        st.serialize_field("girth", &self.girth)?;
        st.serialize_field("min_degree", &self.min_degree)?;
        st.serialize_field("leafless", &self.leafless)?;
        st.serialize_field("mis_count", &self.mis_count)?;
        st.end()
    }
}
