// Code generated by knowforge from the KNOW ontology. DO NOT EDIT.
// SPDX-License-Identifier: Unlicense

//! KNOW ontology SDK.
//!
//! Each type is a trait plus a record struct implementing it. [`from_json`]
//! picks the type from the "type" member of a JSON instance.

pub mod airport;
pub mod appointment;
pub mod birthday;
pub mod cafe;
pub mod event;
pub mod group;
pub mod holiday;
pub mod hospital;
pub mod hotel;
pub mod landmark;
pub mod meeting;
pub mod organization;
pub mod party;
pub mod person;
pub mod place;
pub mod place_of_worship;
pub mod restaurant;

pub use airport::{Airport, AirportRecord};
pub use appointment::{Appointment, AppointmentRecord};
pub use birthday::{Birthday, BirthdayRecord};
pub use cafe::{Cafe, CafeRecord};
pub use event::{Event, EventRecord};
pub use group::{Group, GroupRecord};
pub use holiday::{Holiday, HolidayRecord};
pub use hospital::{Hospital, HospitalRecord};
pub use hotel::{Hotel, HotelRecord};
pub use landmark::{Landmark, LandmarkRecord};
pub use meeting::{Meeting, MeetingRecord};
pub use organization::{Organization, OrganizationRecord};
pub use party::{Party, PartyRecord};
pub use person::{Person, PersonRecord};
pub use place::{Place, PlaceRecord};
pub use place_of_worship::{PlaceOfWorship, PlaceOfWorshipRecord};
pub use restaurant::{Restaurant, RestaurantRecord};

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    UnknownProperty(String),
    CardinalityViolation(String),
    InvalidValue(String),
    UnknownType(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownProperty(m) => write!(f, "unknown property: {m}"),
            Error::CardinalityViolation(m) => write!(f, "cardinality violation: {m}"),
            Error::InvalidValue(m) => write!(f, "invalid value: {m}"),
            Error::UnknownType(m) => write!(f, "unknown type: {m}"),
        }
    }
}

impl std::error::Error for Error {}

/// Behavior shared by every generated record.
pub trait Entity {
    fn id(&self) -> &str;
    fn class_iri(&self) -> &'static str;
    /// JSON document: id, type, then non-empty members sorted by key.
    fn to_json(&self) -> String;
    /// Canonical N-Triples, sorted.
    fn to_triples(&self) -> String;
}

/// Runtime support for the generated modules.
pub mod rt {
    use super::Error;

    const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
    const XSD_STRING: &str = "http://www.w3.org/2001/XMLSchema#string";

    /// Parsed JSON. Numbers keep their source text.
    #[derive(Debug, Clone, PartialEq)]
    pub enum Value {
        Null,
        Bool(bool),
        Number(String),
        String(String),
        Array(Vec<Value>),
        Object(Vec<(String, Value)>),
    }

    struct Parser<'a> {
        text: &'a str,
        pos: usize,
    }

    impl<'a> Parser<'a> {
        fn error(&self, what: &str) -> Error {
            Error::InvalidValue(format!("malformed JSON at byte {}: {}", self.pos, what))
        }

        fn peek(&self) -> Option<u8> {
            self.text.as_bytes().get(self.pos).copied()
        }

        fn skip_ws(&mut self) {
            while matches!(self.peek(), Some(b' ' | b'\t' | b'\n' | b'\r')) {
                self.pos += 1;
            }
        }

        fn digits(&mut self) -> Result<(), Error> {
            if !matches!(self.peek(), Some(b'0'..=b'9')) {
                return Err(self.error("expected a digit"));
            }
            while matches!(self.peek(), Some(b'0'..=b'9')) {
                self.pos += 1;
            }
            Ok(())
        }

        fn value(&mut self) -> Result<Value, Error> {
            self.skip_ws();
            match self.peek() {
                Some(b'{') => self.object(),
                Some(b'[') => self.array(),
                Some(b'"') => Ok(Value::String(self.string()?)),
                Some(b't') => self.word("true", Value::Bool(true)),
                Some(b'f') => self.word("false", Value::Bool(false)),
                Some(b'n') => self.word("null", Value::Null),
                Some(b'-' | b'0'..=b'9') => self.number(),
                _ => Err(self.error("expected a value")),
            }
        }

        fn word(&mut self, word: &str, value: Value) -> Result<Value, Error> {
            if !self.text[self.pos..].starts_with(word) {
                return Err(self.error("invalid literal"));
            }
            self.pos += word.len();
            Ok(value)
        }

        fn number(&mut self) -> Result<Value, Error> {
            let start = self.pos;
            if self.peek() == Some(b'-') {
                self.pos += 1;
            }
            if self.peek() == Some(b'0') {
                self.pos += 1;
            } else {
                self.digits()?;
            }
            if self.peek() == Some(b'.') {
                self.pos += 1;
                self.digits()?;
            }
            if matches!(self.peek(), Some(b'e' | b'E')) {
                self.pos += 1;
                if matches!(self.peek(), Some(b'+' | b'-')) {
                    self.pos += 1;
                }
                self.digits()?;
            }
            Ok(Value::Number(self.text[start..self.pos].to_string()))
        }

        fn hex4(&mut self) -> Result<u32, Error> {
            let digits = match self.text.get(self.pos..self.pos + 4) {
                Some(d) if d.bytes().all(|b| b.is_ascii_hexdigit()) => d,
                _ => return Err(self.error("invalid \\u escape")),
            };
            self.pos += 4;
            u32::from_str_radix(digits, 16).map_err(|_| self.error("invalid \\u escape"))
        }

        fn string(&mut self) -> Result<String, Error> {
            self.pos += 1;
            let mut out = String::new();
            loop {
                let start = self.pos;
                while let Some(c) = self.peek() {
                    if c == b'"' || c == b'\\' || c < 0x20 {
                        break;
                    }
                    self.pos += 1;
                }
                out.push_str(&self.text[start..self.pos]);
                match self.peek() {
                    Some(b'"') => {
                        self.pos += 1;
                        return Ok(out);
                    }
                    Some(b'\\') => {
                        self.pos += 1;
                        let c = self.peek().ok_or_else(|| self.error("unterminated escape"))?;
                        self.pos += 1;
                        match c {
                            b'"' => out.push('"'),
                            b'\\' => out.push('\\'),
                            b'/' => out.push('/'),
                            b'b' => out.push('\u{8}'),
                            b'f' => out.push('\u{c}'),
                            b'n' => out.push('\n'),
                            b'r' => out.push('\r'),
                            b't' => out.push('\t'),
                            b'u' => {
                                let mut code = self.hex4()?;
                                if (0xD800..0xDC00).contains(&code) {
                                    if !self.text[self.pos..].starts_with("\\u") {
                                        return Err(self.error("unpaired surrogate"));
                                    }
                                    self.pos += 2;
                                    let low = self.hex4()?;
                                    if !(0xDC00..0xE000).contains(&low) {
                                        return Err(self.error("unpaired surrogate"));
                                    }
                                    code = 0x10000 + ((code - 0xD800) << 10) + (low - 0xDC00);
                                }
                                let ch = char::from_u32(code).ok_or_else(|| self.error("invalid code point"))?;
                                out.push(ch);
                            }
                            _ => return Err(self.error("invalid escape")),
                        }
                    }
                    _ => return Err(self.error("unterminated string")),
                }
            }
        }

        fn array(&mut self) -> Result<Value, Error> {
            self.pos += 1;
            let mut items = Vec::new();
            self.skip_ws();
            if self.peek() == Some(b']') {
                self.pos += 1;
                return Ok(Value::Array(items));
            }
            loop {
                items.push(self.value()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        return Ok(Value::Array(items));
                    }
                    _ => return Err(self.error("expected ',' or ']'")),
                }
            }
        }

        fn object(&mut self) -> Result<Value, Error> {
            self.pos += 1;
            let mut members = Vec::new();
            self.skip_ws();
            if self.peek() == Some(b'}') {
                self.pos += 1;
                return Ok(Value::Object(members));
            }
            loop {
                self.skip_ws();
                if self.peek() != Some(b'"') {
                    return Err(self.error("expected a member name"));
                }
                let key = self.string()?;
                self.skip_ws();
                if self.peek() != Some(b':') {
                    return Err(self.error("expected ':'"));
                }
                self.pos += 1;
                let value = self.value()?;
                members.push((key, value));
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b'}') => {
                        self.pos += 1;
                        return Ok(Value::Object(members));
                    }
                    _ => return Err(self.error("expected ',' or '}'")),
                }
            }
        }
    }

    pub fn parse(text: &str) -> Result<Value, Error> {
        let mut parser = Parser { text, pos: 0 };
        let value = parser.value()?;
        parser.skip_ws();
        if parser.pos != text.len() {
            return Err(parser.error("trailing characters"));
        }
        Ok(value)
    }

    pub fn parse_object(text: &str) -> Result<Vec<(String, Value)>, Error> {
        match parse(text)? {
            Value::Object(members) => Ok(members),
            _ => Err(Error::InvalidValue("instance must be a JSON object".to_string())),
        }
    }

    fn member<'a>(object: &'a [(String, Value)], key: &str) -> Option<&'a Value> {
        object.iter().rev().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn type_of(object: &[(String, Value)]) -> Result<&str, Error> {
        match member(object, "type") {
            Some(Value::String(s)) => Ok(s),
            _ => Err(Error::InvalidValue("instance needs a string \"type\" member".to_string())),
        }
    }

    /// Checks id and type; returns the id.
    pub fn read_id(object: &[(String, Value)], class_iri: &str) -> Result<String, Error> {
        if type_of(object)? != class_iri {
            return Err(Error::InvalidValue(format!("instance type is not {class_iri}")));
        }
        match member(object, "id") {
            Some(Value::String(s)) => Ok(s.clone()),
            _ => Err(Error::InvalidValue("instance needs a string \"id\" member".to_string())),
        }
    }

    pub fn unknown_member(key: &str, class_iri: &str) -> Error {
        Error::UnknownProperty(format!("member \"{key}\" is not a property of {class_iri}"))
    }

    fn expects(key: &str, what: &str) -> Error {
        Error::InvalidValue(format!("member \"{key}\" expects {what}"))
    }

    /// Shortest round-trip fixed notation, always with a fractional part.
    ///
    /// # Panics
    ///
    /// If `value` is NaN or infinite.
    pub fn canonical_decimal(value: f64) -> String {
        assert!(value.is_finite(), "decimal value is not finite");
        if value == 0.0 {
            return "0.0".to_string();
        }
        let text = format!("{value}");
        if text.contains('.') {
            text
        } else {
            text + ".0"
        }
    }

    pub fn quote(text: &str) -> String {
        let mut out = String::from("\"");
        for ch in text.chars() {
            match ch {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\u{8}' => out.push_str("\\b"),
                '\u{c}' => out.push_str("\\f"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                '\t' => out.push_str("\\t"),
                c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                c => out.push(c),
            }
        }
        out.push('"');
        out
    }

    fn nt_escape(text: &str) -> String {
        let mut out = String::new();
        for ch in text.chars() {
            match ch {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\u{8}' => out.push_str("\\b"),
                '\u{c}' => out.push_str("\\f"),
                '\n' => out.push_str("\\n"),
                '\r' => out.push_str("\\r"),
                '\t' => out.push_str("\\t"),
                c if (c as u32) < 0x20 || c as u32 == 0x7f => {
                    out.push_str(&format!("\\u{:04X}", c as u32))
                }
                c => out.push(c),
            }
        }
        out
    }

    /// A value type a field can hold.
    pub trait Scalar: Sized {
        fn lexical(&self) -> String;
        fn json(&self) -> String {
            quote(&self.lexical())
        }
        fn decode(value: &Value, key: &str) -> Result<Self, Error>;
    }

    impl Scalar for String {
        fn lexical(&self) -> String {
            self.clone()
        }
        fn decode(value: &Value, key: &str) -> Result<Self, Error> {
            match value {
                Value::String(s) => Ok(s.clone()),
                _ => Err(expects(key, "a string")),
            }
        }
    }

    impl Scalar for i64 {
        fn lexical(&self) -> String {
            self.to_string()
        }
        fn json(&self) -> String {
            self.lexical()
        }
        fn decode(value: &Value, key: &str) -> Result<Self, Error> {
            match value {
                Value::Number(n) if !n.contains(['.', 'e', 'E']) => {
                    n.parse().map_err(|_| expects(key, "a 64-bit integer"))
                }
                _ => Err(expects(key, "a 64-bit integer")),
            }
        }
    }

    impl Scalar for f64 {
        fn lexical(&self) -> String {
            canonical_decimal(*self)
        }
        fn json(&self) -> String {
            self.lexical()
        }
        fn decode(value: &Value, key: &str) -> Result<Self, Error> {
            match value {
                Value::Number(n) => match n.parse::<f64>() {
                    Ok(v) if v.is_finite() => Ok(v),
                    _ => Err(expects(key, "a finite number")),
                },
                _ => Err(expects(key, "a number")),
            }
        }
    }

    impl Scalar for bool {
        fn lexical(&self) -> String {
            if *self { "true" } else { "false" }.to_string()
        }
        fn json(&self) -> String {
            self.lexical()
        }
        fn decode(value: &Value, key: &str) -> Result<Self, Error> {
            match value {
                Value::Bool(b) => Ok(*b),
                _ => Err(expects(key, "a boolean")),
            }
        }
    }

    pub fn read_single<T: Scalar>(value: &Value, key: &str) -> Result<Option<T>, Error> {
        match value {
            Value::Array(_) => Err(Error::CardinalityViolation(format!(
                "member \"{key}\" is single-valued"
            ))),
            Value::Null => Ok(None),
            v => T::decode(v, key).map(Some),
        }
    }

    pub fn read_many<T: Scalar>(value: &Value, key: &str) -> Result<Vec<T>, Error> {
        match value {
            Value::Array(items) => items.iter().map(|v| T::decode(v, key)).collect(),
            _ => Err(Error::InvalidValue(format!("member \"{key}\" must be an array"))),
        }
    }

    pub struct JsonWriter {
        out: String,
    }

    impl JsonWriter {
        pub fn new(id: &str, class_iri: &str) -> Self {
            JsonWriter {
                out: format!("{{\n  \"id\": {},\n  \"type\": {}", quote(id), quote(class_iri)),
            }
        }

        pub fn single<T: Scalar>(&mut self, key: &str, value: &Option<T>) {
            if let Some(v) = value {
                self.out.push_str(&format!(",\n  {}: {}", quote(key), v.json()));
            }
        }

        pub fn many<T: Scalar>(&mut self, key: &str, values: &[T]) {
            if values.is_empty() {
                return;
            }
            let items: Vec<String> = values.iter().map(|v| format!("    {}", v.json())).collect();
            self.out.push_str(&format!(",\n  {}: [\n{}\n  ]", quote(key), items.join(",\n")));
        }

        pub fn finish(self) -> String {
            self.out + "\n}\n"
        }
    }

    pub struct TripleWriter {
        subject: String,
        lines: Vec<String>,
    }

    impl TripleWriter {
        pub fn new(id: &str, class_iri: &str) -> Self {
            let mut w = TripleWriter { subject: format!("<{id}>"), lines: Vec::new() };
            w.add(RDF_TYPE, &format!("<{class_iri}>"));
            w
        }

        pub fn literal<T: Scalar>(&mut self, property: &str, value: &T, datatype: &str) {
            let mut object = format!("\"{}\"", nt_escape(&value.lexical()));
            if datatype != XSD_STRING {
                object.push_str(&format!("^^<{datatype}>"));
            }
            self.add(property, &object);
        }

        pub fn reference(&mut self, property: &str, iri: &str) {
            self.add(property, &format!("<{iri}>"));
        }

        pub fn finish(mut self) -> String {
            self.lines.sort();
            self.lines.concat()
        }

        fn add(&mut self, property: &str, object: &str) {
            self.lines.push(format!("{} <{}> {} .\n", self.subject, property, object));
        }
    }
}

/// Generated type names, sorted.
pub const TYPE_NAMES: [&str; 17] = [
    "Airport",
    "Appointment",
    "Birthday",
    "Cafe",
    "Event",
    "Group",
    "Holiday",
    "Hospital",
    "Hotel",
    "Landmark",
    "Meeting",
    "Organization",
    "Party",
    "Person",
    "Place",
    "PlaceOfWorship",
    "Restaurant",
];

/// Decodes an instance of any generated type, chosen by its "type" member.
pub fn from_json(text: &str) -> Result<Box<dyn Entity>, Error> {
    let object = rt::parse_object(text)?;
    match rt::type_of(&object)? {
        AirportRecord::CLASS_IRI => Ok(Box::new(AirportRecord::from_object(&object)?)),
        AppointmentRecord::CLASS_IRI => Ok(Box::new(AppointmentRecord::from_object(&object)?)),
        BirthdayRecord::CLASS_IRI => Ok(Box::new(BirthdayRecord::from_object(&object)?)),
        CafeRecord::CLASS_IRI => Ok(Box::new(CafeRecord::from_object(&object)?)),
        EventRecord::CLASS_IRI => Ok(Box::new(EventRecord::from_object(&object)?)),
        GroupRecord::CLASS_IRI => Ok(Box::new(GroupRecord::from_object(&object)?)),
        HolidayRecord::CLASS_IRI => Ok(Box::new(HolidayRecord::from_object(&object)?)),
        HospitalRecord::CLASS_IRI => Ok(Box::new(HospitalRecord::from_object(&object)?)),
        HotelRecord::CLASS_IRI => Ok(Box::new(HotelRecord::from_object(&object)?)),
        LandmarkRecord::CLASS_IRI => Ok(Box::new(LandmarkRecord::from_object(&object)?)),
        MeetingRecord::CLASS_IRI => Ok(Box::new(MeetingRecord::from_object(&object)?)),
        OrganizationRecord::CLASS_IRI => Ok(Box::new(OrganizationRecord::from_object(&object)?)),
        PartyRecord::CLASS_IRI => Ok(Box::new(PartyRecord::from_object(&object)?)),
        PersonRecord::CLASS_IRI => Ok(Box::new(PersonRecord::from_object(&object)?)),
        PlaceRecord::CLASS_IRI => Ok(Box::new(PlaceRecord::from_object(&object)?)),
        PlaceOfWorshipRecord::CLASS_IRI => Ok(Box::new(PlaceOfWorshipRecord::from_object(&object)?)),
        RestaurantRecord::CLASS_IRI => Ok(Box::new(RestaurantRecord::from_object(&object)?)),
        other => Err(Error::UnknownType(format!("no generated type for {other}"))),
    }
}
