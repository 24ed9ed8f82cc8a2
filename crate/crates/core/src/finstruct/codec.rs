//! JSON text records: one object per file, or one object per line in stream mode.

use serde_json::{json, Value};
use thiserror::Error;

use super::{
    iso, BinaryRelation, Lattice, OrderedSpace, PointSet, Qoset, SpaceMap, Topology,
    ValidationError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("schema error in field `{field}`: {message}")]
    Schema { field: String, message: String },
    #[error("invalid structure: {0}")]
    Invalid(#[from] ValidationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("cannot compare a {0} with a {1}")]
    KindMismatch(&'static str, &'static str),
}

/// Any structure that can appear in a text record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Record {
    Qoset(Qoset),
    Topology(Topology),
    OrderedSpace(OrderedSpace),
    Lattice(Lattice),
    Relation(BinaryRelation),
    Map(SpaceMap),
}

impl Record {
    pub fn kind(&self) -> &'static str {
        match self {
            Record::Qoset(_) => "qoset",
            Record::Topology(_) => "topology",
            Record::OrderedSpace(_) => "ordered_space",
            Record::Lattice(_) => "lattice",
            Record::Relation(_) => "relation",
            Record::Map(_) => "map",
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            Record::Qoset(q) => json!({"kind": "qoset", "n": q.size(), "leq": bits(&q.matrix())}),
            Record::Topology(t) => {
                json!({"kind": "topology", "n": t.size(), "opens": sets(t.opens())})
            }
            Record::OrderedSpace(s) => json!({
                "kind": "ordered_space",
                "n": s.size(),
                "leq": bits(&s.qoset().matrix()),
                "opens": sets(s.topology().opens()),
            }),
            Record::Lattice(l) => json!({"kind": "lattice", "n": l.size(), "leq": bits(&l.matrix())}),
            Record::Relation(r) => {
                json!({"kind": "relation", "n": r.size(), "rel": bits(&r.matrix())})
            }
            Record::Map(f) => json!({
                "kind": "map",
                "source": f.source(),
                "target": f.target(),
                "value": f.values(),
            }),
        }
    }

    pub fn from_value(value: &Value) -> Result<Self, CodecError> {
        let kind = field(value, "kind")?
            .as_str()
            .ok_or_else(|| schema("kind", "expected a string"))?;
        match kind {
            "qoset" => {
                let n = get_usize(value, "n")?;
                Ok(Record::Qoset(Qoset::new(n, &get_matrix(value, "leq")?)?))
            }
            "topology" => {
                let n = get_usize(value, "n")?;
                Ok(Record::Topology(Topology::validate(n, &get_sets(value, "opens", n)?)?))
            }
            "ordered_space" => {
                let n = get_usize(value, "n")?;
                let q = Qoset::new(n, &get_matrix(value, "leq")?)?;
                let t = Topology::validate(n, &get_sets(value, "opens", n)?)?;
                Ok(Record::OrderedSpace(OrderedSpace::new(q, t)?))
            }
            "lattice" => {
                let n = get_usize(value, "n")?;
                Ok(Record::Lattice(Lattice::new(n, &get_matrix(value, "leq")?)?))
            }
            "relation" => {
                let n = get_usize(value, "n")?;
                Ok(Record::Relation(BinaryRelation::new(n, &get_matrix(value, "rel")?)?))
            }
            "map" => {
                let source = get_usize(value, "source")?;
                let target = get_usize(value, "target")?;
                let values = field(value, "value")?
                    .as_array()
                    .ok_or_else(|| schema("value", "expected an array"))?
                    .iter()
                    .map(|v| as_usize(v, "value"))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Record::Map(SpaceMap::new(source, target, values)?))
            }
            other => Err(schema("kind", &format!("unknown kind `{other}`"))),
        }
    }

    /// Canonical single-line text.
    pub fn encode(&self) -> String {
        self.to_value().to_string()
    }

    pub fn decode(text: &str) -> Result<Self, CodecError> {
        Self::from_value(&parse_value(text)?)
    }
}

macro_rules! record_from {
    ($($ty:ident => $variant:ident),*) => {$(
        impl From<$ty> for Record {
            fn from(x: $ty) -> Self {
                Record::$variant(x)
            }
        }
    )*};
}

record_from!(Qoset => Qoset, Topology => Topology, OrderedSpace => OrderedSpace,
    Lattice => Lattice, BinaryRelation => Relation, SpaceMap => Map);

/// Decode every record in `text`: a single (possibly pretty-printed) object or
/// one object per line.
pub fn decode_all(text: &str) -> Result<Vec<Record>, CodecError> {
    let mut out = Vec::new();
    for item in serde_json::Deserializer::from_str(text).into_iter::<Value>() {
        out.push(Record::from_value(&item.map_err(parse_error)?)?);
    }
    Ok(out)
}

pub fn parse_value(text: &str) -> Result<Value, CodecError> {
    serde_json::from_str(text).map_err(parse_error)
}

fn parse_error(e: serde_json::Error) -> CodecError {
    CodecError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
}

/// Compare two records up to relabelling of points.
pub fn are_isomorphic(a: &Record, b: &Record) -> Result<Option<Vec<usize>>, IsoError> {
    Ok(match (a, b) {
        (Record::Qoset(x), Record::Qoset(y)) => iso::isomorphism(x, y),
        (Record::Topology(x), Record::Topology(y)) => iso::isomorphism(x, y),
        (Record::OrderedSpace(x), Record::OrderedSpace(y)) => iso::isomorphism(x, y),
        (Record::Lattice(x), Record::Lattice(y)) => iso::isomorphism(x, y),
        (Record::Relation(x), Record::Relation(y)) => iso::isomorphism(x, y),
        _ => return Err(IsoError::KindMismatch(a.kind(), b.kind())),
    })
}

pub(crate) fn bits(matrix: &[Vec<bool>]) -> Vec<Vec<u8>> {
    matrix.iter().map(|r| r.iter().map(|&b| b as u8).collect()).collect()
}

pub(crate) fn sets(family: &[PointSet]) -> Vec<Vec<usize>> {
    family.iter().map(|s| s.to_vec()).collect()
}

pub(crate) fn schema(field: &str, message: &str) -> CodecError {
    CodecError::Schema { field: field.to_string(), message: message.to_string() }
}

pub(crate) fn field<'a>(value: &'a Value, name: &str) -> Result<&'a Value, CodecError> {
    value.get(name).ok_or_else(|| schema(name, "missing"))
}

fn as_usize(v: &Value, name: &str) -> Result<usize, CodecError> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(name, "expected a nonnegative integer"))
}

pub(crate) fn get_usize(value: &Value, name: &str) -> Result<usize, CodecError> {
    as_usize(field(value, name)?, name)
}

pub(crate) fn get_matrix(value: &Value, name: &str) -> Result<Vec<Vec<bool>>, CodecError> {
    field(value, name)?
        .as_array()
        .ok_or_else(|| schema(name, "expected an array of rows"))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| schema(name, "expected a row array"))?
                .iter()
                .map(|v| match v.as_u64() {
                    Some(0) => Ok(false),
                    Some(1) => Ok(true),
                    _ => Err(schema(name, "matrix entries must be 0 or 1")),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn get_set(value: &Value, name: &str, n: usize) -> Result<PointSet, CodecError> {
    let items = value.as_array().ok_or_else(|| schema(name, "expected a set array"))?;
    let mut set = PointSet::EMPTY;
    for v in items {
        let x = as_usize(v, name)?;
        if x >= n {
            return Err(schema(name, &format!("point {x} outside carrier of size {n}")));
        }
        set = set.with(x);
    }
    Ok(set)
}

pub(crate) fn get_sets(value: &Value, name: &str, n: usize) -> Result<Vec<PointSet>, CodecError> {
    field(value, name)?
        .as_array()
        .ok_or_else(|| schema(name, "expected an array of sets"))?
        .iter()
        .map(|s| get_set(s, name, n))
        .collect()
}
