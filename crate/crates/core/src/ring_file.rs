//! JSON ring files.
//!
//! ```json
//! { "name": "m2_f5", "domain": {"Fp": 5}, "dim": 4,
//!   "basis": ["E11", "E12", "E21", "E22"], "unit": ["1", "0", "0", "1"],
//!   "mul": [[["1", "0", "0", "0"], ...], ...] }
//! ```
//!
//! Scalars are strings (`"3"`, `"-1/2"`); plain JSON integers are accepted on
//! input. Residues must already be reduced mod `p`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::linalg::Vector;
use crate::ring::Ring;
use crate::scalar::{Scalar, ScalarDomain};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DomainSpec {
    /// The literal string `"Q"`.
    Named(String),
    PrimeField {
        #[serde(rename = "Fp")]
        p: u32,
    },
}

impl DomainSpec {
    pub fn resolve(&self) -> Result<ScalarDomain> {
        match self {
            DomainSpec::Named(s) if s == "Q" => Ok(ScalarDomain::Rationals),
            DomainSpec::Named(s) => Err(AlgebraError::Parse(format!("unknown domain {s:?} (expected \"Q\" or {{\"Fp\": p}})"))),
            DomainSpec::PrimeField { p } => ScalarDomain::prime_field(*p),
        }
    }

    pub fn from_domain(domain: ScalarDomain) -> Self {
        match domain {
            ScalarDomain::Rationals => DomainSpec::Named("Q".into()),
            ScalarDomain::PrimeField(p) => DomainSpec::PrimeField { p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarToken {
    Text(String),
    Int(i64),
}

impl ScalarToken {
    pub fn parse(&self, domain: ScalarDomain) -> Result<Scalar> {
        match self {
            ScalarToken::Text(s) => domain.parse(s),
            ScalarToken::Int(v) => domain.parse(&v.to_string()),
        }
    }
}

impl From<&Scalar> for ScalarToken {
    fn from(s: &Scalar) -> Self {
        ScalarToken::Text(s.to_string())
    }
}

pub fn parse_vector(tokens: &[ScalarToken], domain: ScalarDomain) -> Result<Vector> {
    tokens.iter().map(|t| t.parse(domain)).collect()
}

pub fn tokens(v: &[Scalar]) -> Vec<ScalarToken> {
    v.iter().map(ScalarToken::from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub domain: DomainSpec,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<ScalarToken>,
    pub mul: Vec<Vec<Vec<ScalarToken>>>,
}

impl RingFile {
    pub fn from_ring(ring: &Ring) -> Self {
        let n = ring.dim();
        RingFile {
            name: ring.name().to_string(),
            note: ring.note().map(String::from),
            domain: DomainSpec::from_domain(ring.domain()),
            dim: n,
            basis: ring.basis_names().to_vec(),
            unit: tokens(ring.unit_coords()),
            mul: (0..n)
                .map(|i| (0..n).map(|j| tokens(ring.structure_constant(i, j))).collect())
                .collect(),
        }
    }

    /// Validates shapes and the unit axiom.
    pub fn into_ring(self) -> Result<Ring> {
        let domain = self.domain.resolve()?;
        let n = self.dim;
        if n == 0 {
            return Err(AlgebraError::Parse("dim must be positive".into()));
        }
        if self.basis.len() != n {
            return Err(AlgebraError::Parse(format!("basis has {} names, dim is {n}", self.basis.len())));
        }
        if self.unit.len() != n {
            return Err(AlgebraError::Parse(format!("unit has {} coordinates, dim is {n}", self.unit.len())));
        }
        if self.mul.len() != n || self.mul.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(AlgebraError::Parse(format!("mul must have shape {n}×{n}×{n}")));
        }
        let constants = self
            .mul
            .iter()
            .map(|row| row.iter().map(|v| parse_vector(v, domain)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let unit = parse_vector(&self.unit, domain)?;
        let ring = Ring::new(self.name, domain, self.basis, constants, unit)?;
        Ok(match self.note {
            Some(note) => ring.with_note(note),
            None => ring,
        })
    }
}

pub fn ring_from_json(text: &str) -> Result<Ring> {
    let file: RingFile = serde_json::from_str(text).map_err(|e| AlgebraError::Parse(e.to_string()))?;
    file.into_ring()
}

pub fn ring_to_json(ring: &Ring) -> String {
    serde_json::to_string_pretty(&RingFile::from_ring(ring)).expect("ring file serializes")
}

pub fn load_ring(path: &Path) -> Result<Ring> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AlgebraError::Parse(format!("{}: {e}", path.display())))?;
    ring_from_json(&text)
}

/// Parses a comma-separated coordinate list such as `1,0,0,0`.
pub fn parse_coords(text: &str, domain: ScalarDomain) -> Result<Vector> {
    text.split(',').map(|t| domain.parse(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn round_trip_preserves_ring() {
        for ring in [
            generators::m2(ScalarDomain::PrimeField(5)).unwrap(),
            generators::zorn(ScalarDomain::Rationals).unwrap(),
        ] {
            let back = ring_from_json(&ring_to_json(&ring)).unwrap();
            assert_eq!(back.id(), ring.id());
            assert_eq!(back.note(), ring.note());
        }
    }

    #[test]
    fn integer_tokens_accepted() {
        let text = r#"{"name":"f5","domain":{"Fp":5},"dim":1,"basis":["1"],"unit":[1],"mul":[[[1]]]}"#;
        let r = ring_from_json(text).unwrap();
        assert_eq!(r.dim(), 1);
    }

    #[test]
    fn bad_unit_names_the_axiom() {
        let text = r#"{"name":"bad","domain":"Q","dim":2,"basis":["a","b"],"unit":["1","0"],
            "mul":[[["1","0"],["0","1"]],[["0","0"],["0","0"]]]}"#;
        let err = ring_from_json(text).unwrap_err();
        assert!(matches!(err, AlgebraError::UnitAxiom(ref m) if m.contains("b")), "{err}");
    }

    #[test]
    fn shape_errors() {
        let text = r#"{"name":"bad","domain":"Q","dim":2,"basis":["a","b"],"unit":["1","0"],"mul":[[["1","0"]]]}"#;
        assert!(matches!(ring_from_json(text), Err(AlgebraError::Parse(_))));
        let text = r#"{"name":"bad","domain":{"Fp":4},"dim":1,"basis":["a"],"unit":["1"],"mul":[[["1"]]]}"#;
        assert!(matches!(ring_from_json(text), Err(AlgebraError::InvalidField(_))));
        let text = r#"{"name":"bad","domain":{"Fp":5},"dim":1,"basis":["a"],"unit":["7"],"mul":[[["1"]]]}"#;
        assert!(matches!(ring_from_json(text), Err(AlgebraError::Parse(_))));
    }

    #[test]
    fn coords_parsing() {
        let v = parse_coords("1, 0,4,0", ScalarDomain::PrimeField(5)).unwrap();
        assert_eq!(v.len(), 4);
        assert!(parse_coords("1,x", ScalarDomain::PrimeField(5)).is_err());
    }
}
