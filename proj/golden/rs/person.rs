// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

use crate::rt::{self, JsonWriter, TripleWriter, Value};
use crate::{Entity, Error};

/// A person, real or fictional.
pub trait Person: Entity {
    fn age(&self) -> Option<&i64>;
    fn aunt(&self) -> &[String];
    fn brother(&self) -> &[String];
    fn child(&self) -> &[String];
    fn father(&self) -> Option<&String>;
    fn mother(&self) -> Option<&String>;
    fn name(&self) -> Option<&String>;
    fn nephew(&self) -> &[String];
    fn niece(&self) -> &[String];
    fn parent(&self) -> &[String];
    fn sibling(&self) -> &[String];
    fn sister(&self) -> &[String];
    fn uncle(&self) -> &[String];
}

/// Default implementation of [`Person`].
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PersonRecord {
    pub id: String,
    pub age: Option<i64>,
    pub aunt: Vec<String>,
    pub brother: Vec<String>,
    pub child: Vec<String>,
    pub father: Option<String>,
    pub mother: Option<String>,
    pub name: Option<String>,
    pub nephew: Vec<String>,
    pub niece: Vec<String>,
    pub parent: Vec<String>,
    pub sibling: Vec<String>,
    pub sister: Vec<String>,
    pub uncle: Vec<String>,
}

impl PersonRecord {
    pub const CLASS_IRI: &'static str = "https://know.dev/Person";

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
        let mut record = Self::new(rt::read_id(object, Self::CLASS_IRI)?);
        for (key, value) in object {
            match key.as_str() {
                "id" | "type" => {}
                "age" => record.age = rt::read_single(value, key)?,
                "aunt" => record.aunt = rt::read_many(value, key)?,
                "brother" => record.brother = rt::read_many(value, key)?,
                "child" => record.child = rt::read_many(value, key)?,
                "father" => record.father = rt::read_single(value, key)?,
                "mother" => record.mother = rt::read_single(value, key)?,
                "name" => record.name = rt::read_single(value, key)?,
                "nephew" => record.nephew = rt::read_many(value, key)?,
                "niece" => record.niece = rt::read_many(value, key)?,
                "parent" => record.parent = rt::read_many(value, key)?,
                "sibling" => record.sibling = rt::read_many(value, key)?,
                "sister" => record.sister = rt::read_many(value, key)?,
                "uncle" => record.uncle = rt::read_many(value, key)?,
                _ => return Err(rt::unknown_member(key, Self::CLASS_IRI)),
            }
        }
        Ok(record)
    }
}

impl Entity for PersonRecord {
    fn id(&self) -> &str {
        &self.id
    }

    fn class_iri(&self) -> &'static str {
        Self::CLASS_IRI
    }

    fn to_json(&self) -> String {
        let mut w = JsonWriter::new(&self.id, Self::CLASS_IRI);
        w.single("age", &self.age);
        w.many("aunt", &self.aunt);
        w.many("brother", &self.brother);
        w.many("child", &self.child);
        w.single("father", &self.father);
        w.single("mother", &self.mother);
        w.single("name", &self.name);
        w.many("nephew", &self.nephew);
        w.many("niece", &self.niece);
        w.many("parent", &self.parent);
        w.many("sibling", &self.sibling);
        w.many("sister", &self.sister);
        w.many("uncle", &self.uncle);
        w.finish()
    }

    fn to_triples(&self) -> String {
        let mut w = TripleWriter::new(&self.id, Self::CLASS_IRI);
        if let Some(v) = &self.age {
            w.literal(
                "https://know.dev/age",
                v,
                "http://www.w3.org/2001/XMLSchema#integer",
            );
        }
        for v in &self.aunt {
            w.reference("https://know.dev/aunt", v);
        }
        for v in &self.brother {
            w.reference("https://know.dev/brother", v);
        }
        for v in &self.child {
            w.reference("https://know.dev/child", v);
        }
        if let Some(v) = &self.father {
            w.reference("https://know.dev/father", v);
        }
        if let Some(v) = &self.mother {
            w.reference("https://know.dev/mother", v);
        }
        if let Some(v) = &self.name {
            w.literal(
                "https://know.dev/name",
                v,
                "http://www.w3.org/2001/XMLSchema#string",
            );
        }
        for v in &self.nephew {
            w.reference("https://know.dev/nephew", v);
        }
        for v in &self.niece {
            w.reference("https://know.dev/niece", v);
        }
        for v in &self.parent {
            w.reference("https://know.dev/parent", v);
        }
        for v in &self.sibling {
            w.reference("https://know.dev/sibling", v);
        }
        for v in &self.sister {
            w.reference("https://know.dev/sister", v);
        }
        for v in &self.uncle {
            w.reference("https://know.dev/uncle", v);
        }
        w.finish()
    }
}

impl Person for PersonRecord {
    fn age(&self) -> Option<&i64> {
        self.age.as_ref()
    }

    fn aunt(&self) -> &[String] {
        &self.aunt
    }

    fn brother(&self) -> &[String] {
        &self.brother
    }

    fn child(&self) -> &[String] {
        &self.child
    }

    fn father(&self) -> Option<&String> {
        self.father.as_ref()
    }

    fn mother(&self) -> Option<&String> {
        self.mother.as_ref()
    }

    fn name(&self) -> Option<&String> {
        self.name.as_ref()
    }

    fn nephew(&self) -> &[String] {
        &self.nephew
    }

    fn niece(&self) -> &[String] {
        &self.niece
    }

    fn parent(&self) -> &[String] {
        &self.parent
    }

    fn sibling(&self) -> &[String] {
        &self.sibling
    }

    fn sister(&self) -> &[String] {
        &self.sister
    }

    fn uncle(&self) -> &[String] {
        &self.uncle
    }
}
