//! JSON subspace documents:
//! `{"field":"real"|"complex","ambient_dim":n,"vectors":[[...],...]}` with
//! complex entries written as `[re, im]`.

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::subspace::Subspace;
use crate::tolerance::ToleranceConfig;

const KEYS: [&str; 3] = ["field", "ambient_dim", "vectors"];

fn invalid(field: impl Into<String>, message: impl Into<String>) -> Error {
    Error::InvalidDocument {
        field: field.into(),
        message: message.into(),
    }
}

/// Rounds to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if x.is_finite() {
        format!("{x:.14e}").parse().unwrap_or(x)
    } else {
        x
    }
}

/// A JSON number at 15 significant digits, or `null` when not finite.
pub fn number(x: f64) -> Value {
    serde_json::Number::from_f64(round15(x)).map_or(Value::Null, Value::Number)
}

/// Scalars with a JSON encoding.
pub trait JsonScalar: Scalar<Real = f64> {
    fn from_json(v: &Value, path: &str) -> Result<Self>;
    fn to_json(self) -> Value;
}

fn finite(v: &Value, path: &str) -> Result<f64> {
    v.as_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| invalid(path, "expected a finite number"))
}

impl JsonScalar for f64 {
    fn from_json(v: &Value, path: &str) -> Result<Self> {
        finite(v, path)
    }

    fn to_json(self) -> Value {
        number(self)
    }
}

impl JsonScalar for Complex64 {
    fn from_json(v: &Value, path: &str) -> Result<Self> {
        match v.as_array().map(Vec::as_slice) {
            Some([re, im]) => Ok(Complex64::new(
                finite(re, &format!("{path}[0]"))?,
                finite(im, &format!("{path}[1]"))?,
            )),
            _ => Err(invalid(path, "expected a two-element [re, im] array")),
        }
    }

    fn to_json(self) -> Value {
        Value::Array(vec![number(self.re), number(self.im)])
    }
}

/// A parsed document: spanning vectors in their given order.
#[derive(Debug, Clone, PartialEq)]
pub struct Document<S> {
    pub ambient_dim: usize,
    pub vectors: Vec<Vec<S>>,
}

impl<S: JsonScalar> Document<S> {
    pub fn subspace(&self, cfg: &ToleranceConfig) -> Result<Subspace<S>> {
        Subspace::from_spanning(self.ambient_dim, &self.vectors, cfg)
    }

    /// Document listing the orthonormal basis of `v`.
    pub fn from_subspace(v: &Subspace<S>) -> Self {
        Self {
            ambient_dim: v.ambient_dim(),
            vectors: v.basis().to_columns(),
        }
    }

    pub fn to_value(&self) -> Value {
        let mut m = Map::new();
        m.insert("field".into(), Value::String(S::FIELD.to_string()));
        m.insert("ambient_dim".into(), Value::from(self.ambient_dim));
        let vectors = self
            .vectors
            .iter()
            .map(|v| Value::Array(v.iter().map(|&x| x.to_json()).collect()))
            .collect();
        m.insert("vectors".into(), Value::Array(vectors));
        Value::Object(m)
    }

    fn parse_vectors(ambient_dim: usize, raw: &Value) -> Result<Self> {
        let list = raw
            .as_array()
            .ok_or_else(|| invalid("vectors", "expected an array of vectors"))?;
        let mut vectors = Vec::with_capacity(list.len());
        for (i, v) in list.iter().enumerate() {
            let path = format!("vectors[{i}]");
            let entries = v
                .as_array()
                .ok_or_else(|| invalid(&path, "expected an array of entries"))?;
            if entries.len() != ambient_dim {
                return Err(invalid(
                    &path,
                    format!("has {} entries, ambient_dim is {ambient_dim}", entries.len()),
                ));
            }
            let parsed = entries
                .iter()
                .enumerate()
                .map(|(j, x)| S::from_json(x, &format!("{path}[{j}]")))
                .collect::<Result<Vec<S>>>()?;
            vectors.push(parsed);
        }
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }
}

/// A document of either field.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyDocument {
    Real(Document<f64>),
    Complex(Document<Complex64>),
}

/// Two documents of one field and one ambient dimension.
#[derive(Debug, Clone, PartialEq)]
pub enum DocumentPair {
    Real(Document<f64>, Document<f64>),
    Complex(Document<Complex64>, Document<Complex64>),
}

impl AnyDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let root: Value =
            serde_json::from_str(text).map_err(|e| invalid("document", format!("malformed JSON: {e}")))?;
        Self::from_value(&root)
    }

    pub fn from_value(root: &Value) -> Result<Self> {
        let obj = root
            .as_object()
            .ok_or_else(|| invalid("document", "expected a JSON object"))?;
        if let Some(k) = obj.keys().find(|k| !KEYS.contains(&k.as_str())) {
            return Err(invalid(k.as_str(), "unknown field"));
        }
        let get = |k: &str| obj.get(k).ok_or_else(|| invalid(k, "missing"));
        let field = match get("field")?.as_str() {
            Some("real") => Field::Real,
            Some("complex") => Field::Complex,
            _ => return Err(invalid("field", "expected \"real\" or \"complex\"")),
        };
        let ambient_dim = get("ambient_dim")?
            .as_u64()
            .filter(|&n| n >= 1)
            .and_then(|n| usize::try_from(n).ok())
            .ok_or_else(|| invalid("ambient_dim", "expected a positive integer"))?;
        let vectors = get("vectors")?;
        Ok(match field {
            Field::Real => AnyDocument::Real(Document::parse_vectors(ambient_dim, vectors)?),
            Field::Complex => AnyDocument::Complex(Document::parse_vectors(ambient_dim, vectors)?),
        })
    }

    pub fn field(&self) -> Field {
        match self {
            AnyDocument::Real(_) => Field::Real,
            AnyDocument::Complex(_) => Field::Complex,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        match self {
            AnyDocument::Real(d) => d.ambient_dim,
            AnyDocument::Complex(d) => d.ambient_dim,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            AnyDocument::Real(d) => d.to_value(),
            AnyDocument::Complex(d) => d.to_value(),
        }
    }

    /// Pairs two documents, rejecting mixed fields or ambient dimensions.
    pub fn pair(left: AnyDocument, right: AnyDocument) -> Result<DocumentPair> {
        if left.ambient_dim() != right.ambient_dim() {
            return Err(invalid(
                "ambient_dim",
                format!(
                    "documents disagree: {} versus {}",
                    left.ambient_dim(),
                    right.ambient_dim()
                ),
            ));
        }
        match (left, right) {
            (AnyDocument::Real(a), AnyDocument::Real(b)) => Ok(DocumentPair::Real(a, b)),
            (AnyDocument::Complex(a), AnyDocument::Complex(b)) => Ok(DocumentPair::Complex(a, b)),
            (a, b) => Err(invalid(
                "field",
                format!("documents disagree: {} versus {}", a.field(), b.field()),
            )),
        }
    }
}

impl From<Document<f64>> for AnyDocument {
    fn from(d: Document<f64>) -> Self {
        AnyDocument::Real(d)
    }
}

impl From<Document<Complex64>> for AnyDocument {
    fn from(d: Document<Complex64>) -> Self {
        AnyDocument::Complex(d)
    }
}
