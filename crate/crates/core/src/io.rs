//! Text formats: role-prefixed vectors and JSON complex documents.

use serde::{Deserialize, Serialize};

use crate::complex::{CountVector, Face, Role, ShellingCertificate, SimplicialComplex};
use crate::error::{Error, Result};

/// A parsed vector: either a counting vector or a degree sequence (`m:`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedVector {
    Count(CountVector),
    DegreeSequence(Vec<i64>),
}

/// Parses `h:1,4,5`, `f:1,3,3,1`, `g:1,2`, or `m:1,3,4`.
pub fn parse_vector(text: &str) -> Result<ParsedVector> {
    let (prefix, body) = text
        .trim()
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("missing role prefix in {text:?}")))?;
    let entries = body
        .split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<i64>()
                .map_err(|_| Error::Parse(format!("{s:?} is not an integer")))
        })
        .collect::<Result<Vec<i64>>>()?;
    if entries.is_empty() {
        return Err(Error::Parse("empty vector".into()));
    }
    let d = entries.len() - 1;
    let role = match prefix.trim() {
        "h" => Role::H,
        "f" => Role::F,
        "g" => Role::G,
        "m" => return Ok(ParsedVector::DegreeSequence(entries)),
        other => return Err(Error::Parse(format!("unknown role prefix {other:?}"))),
    };
    Ok(ParsedVector::Count(CountVector { role, d, entries }))
}

/// Parses a vector that must carry the given role.
pub fn parse_count_vector(text: &str, role: Role) -> Result<CountVector> {
    match parse_vector(text)? {
        ParsedVector::Count(v) if v.role == role => Ok(v),
        ParsedVector::Count(v) => Err(Error::WrongRole {
            expected: role.name(),
            found: v.role.name(),
        }),
        ParsedVector::DegreeSequence(_) => Err(Error::WrongRole {
            expected: role.name(),
            found: "m",
        }),
    }
}

/// On-disk complex document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexDocument {
    pub dim: isize,
    pub facets: Vec<Face>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<ShellingCertificate>,
}

impl ComplexDocument {
    pub fn new(c: &SimplicialComplex, certificate: Option<ShellingCertificate>) -> Self {
        ComplexDocument {
            dim: c.dim(),
            facets: c.facets().to_vec(),
            h: c.is_pure().then(|| c.h_vector().to_text()),
            certificate,
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        let c = SimplicialComplex::from_facets(self.facets.iter().cloned())?;
        if c.dim() != self.dim {
            return Err(Error::Parse(format!(
                "declared dim {} but facets have dim {}",
                self.dim,
                c.dim()
            )));
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}
