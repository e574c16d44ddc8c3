// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

use crate::rt::{self, JsonWriter, TripleWriter, Value};
use crate::{Entity, Error};

pub trait Appointment: Entity {}

/// Default implementation of [`Appointment`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct AppointmentRecord {
    pub id: String,
}

impl AppointmentRecord {
    pub const CLASS_IRI: &'static str = "https://know.dev/Appointment";

    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            ..Self::default()
        }
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Self::from_object(&rt::parse_object(text)?)
    }

    pub fn from_object(object: &[(String, Value)]) -> Result<Self, Error> {
        let record = Self::new(rt::read_id(object, Self::CLASS_IRI)?);
        for (key, _) in object {
            match key.as_str() {
                "id" | "type" => {}
                _ => return Err(rt::unknown_member(key, Self::CLASS_IRI)),
            }
        }
        Ok(record)
    }
}

impl Entity for AppointmentRecord {
    fn id(&self) -> &str {
        &self.id
    }

    fn class_iri(&self) -> &'static str {
        Self::CLASS_IRI
    }

    fn to_json(&self) -> String {
        let w = JsonWriter::new(&self.id, Self::CLASS_IRI);
        w.finish()
    }

    fn to_triples(&self) -> String {
        let w = TripleWriter::new(&self.id, Self::CLASS_IRI);
        w.finish()
    }
}

impl Appointment for AppointmentRecord {}
