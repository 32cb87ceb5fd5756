//! Facet-list text format and its JSON alternative.

use serde::{Deserialize, Serialize};

use crate::complex::Complex;
use crate::error::ComplexError;
use crate::oriented::OrientedComplex;
use crate::simplex::{Simplex, Vertex};

/// JSON form: `{"facets": [[...], ...], "orientation": [1, -1, ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ComplexJson {
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<i8>>,
}

/// Either an unoriented or an oriented complex, as read from input.
#[derive(Clone, Debug)]
pub enum Parsed {
    Plain(Complex),
    Oriented(OrientedComplex),
}

impl Parsed {
    pub fn complex(&self) -> &Complex {
        match self {
            Parsed::Plain(c) => c,
            Parsed::Oriented(o) => o.complex(),
        }
    }
}

/// One facet per line, whitespace separated; `#` starts a comment line.
pub fn parse_facets(text: &str) -> Result<Complex, ComplexError> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let verts = t
            .split_whitespace()
            .map(|w| {
                w.parse::<Vertex>().map_err(|e| ComplexError::Parse {
                    line: i + 1,
                    msg: format!("{w:?}: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        facets.push(Simplex::new(verts)?);
    }
    Complex::from_simplices(facets)
}

pub fn parse_json(text: &str) -> Result<Parsed, ComplexError> {
    let j: ComplexJson = serde_json::from_str(text).map_err(|e| ComplexError::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    from_json(j)
}

pub fn from_json(j: ComplexJson) -> Result<Parsed, ComplexError> {
    match j.orientation {
        None => Ok(Parsed::Plain(Complex::from_facets(j.facets)?)),
        Some(signs) => {
            if signs.len() != j.facets.len() {
                return Err(ComplexError::BadOrientation(format!(
                    "{} signs for {} facets",
                    signs.len(),
                    j.facets.len()
                )));
            }
            let pairs = j
                .facets
                .into_iter()
                .zip(signs)
                .map(|(f, s)| Simplex::new(f).map(|f| (f, s)))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Parsed::Oriented(OrientedComplex::from_signed_facets(pairs)?))
        }
    }
}

/// Accepts either format: JSON when the first non-blank character is `{`.
pub fn parse_any(text: &str) -> Result<Parsed, ComplexError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_facets(text).map(Parsed::Plain)
    }
}

pub fn to_json(k: &Complex) -> ComplexJson {
    ComplexJson {
        facets: k.facets().iter().map(|f| f.vertices().to_vec()).collect(),
        orientation: None,
    }
}

pub fn oriented_to_json(oc: &OrientedComplex) -> ComplexJson {
    ComplexJson {
        facets: oc.facets().iter().map(|f| f.vertices().to_vec()).collect(),
        orientation: Some(oc.signs().to_vec()),
    }
}

pub fn to_facet_text(k: &Complex) -> String {
    let mut s = String::new();
    for f in k.facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        s.push_str(&line.join(" "));
        s.push('\n');
    }
    s
}
