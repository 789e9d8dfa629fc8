//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "h3",
//!   "dim": 3,
//!   "field": {"type": "Q"},
//!   "constants": [[1, 2, 3, "1"], [2, 1, 3, "-1"]],
//!   "ideals": {"center": [["0", "0", "1"]]}
//! }
//! ```
//!
//! Indices are 1-based. Coefficients are strings (`"3"`, `"-1/2"`) so that no
//! value ever passes through a JSON float.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraDef, IdealHandle};
use crate::error::{Error, Result};
use crate::linear::{Subspace, Vector};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldSpec {
    Q,
    Fp { p: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp { p } => Field::prime(p),
        }
    }

    pub fn from_field(field: Field) -> Self {
        match field {
            Field::Rational => FieldSpec::Q,
            Field::Prime(p) => FieldSpec::Fp { p },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub field: FieldSpec,
    pub constants: Vec<(usize, usize, usize, String)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<Vec<String>>>,
}

/// An algebra together with the named subspaces declared in its file.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: AlgebraDef,
    pub ideals: BTreeMap<String, Subspace>,
}

impl LoadedAlgebra {
    /// The named ideal, re-checked for two-sidedness.
    pub fn ideal(&self, name: &str) -> Result<IdealHandle<'_>> {
        let space = self
            .ideals
            .get(name)
            .ok_or_else(|| Error::UnknownIdeal(name.to_string()))?;
        IdealHandle::new(&self.algebra, space.clone())
    }
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        AlgebraFile::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files serialize")
    }

    /// Builds the algebra (unvalidated) and parses the declared subspaces.
    pub fn load(&self) -> Result<LoadedAlgebra> {
        let field = self.field.to_field()?;
        let mut constants = Vec::with_capacity(self.constants.len());
        for (i, j, k, c) in &self.constants {
            constants.push((*i, *j, *k, field.parse(c)?));
        }
        let algebra = AlgebraDef::new(self.name.clone(), self.dim, field, constants)?;
        let mut ideals = BTreeMap::new();
        for (name, rows) in &self.ideals {
            let mut vectors = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != self.dim {
                    return Err(Error::Schema(format!(
                        "ideal {name:?}: vector of length {} in dimension {}",
                        row.len(),
                        self.dim
                    )));
                }
                let coords = row.iter().map(|c| field.parse(c)).collect::<Result<_>>()?;
                vectors.push(Vector::new(field, coords)?);
            }
            ideals.insert(name.clone(), algebra.span(&vectors)?);
        }
        Ok(LoadedAlgebra { algebra, ideals })
    }

    pub fn from_algebra(a: &AlgebraDef) -> Self {
        AlgebraFile {
            name: a.name().to_string(),
            dim: a.dim(),
            field: FieldSpec::from_field(a.field()),
            constants: a
                .constants()
                .map(|(i, j, k, c)| (i, j, k, c.to_string()))
                .collect(),
            ideals: BTreeMap::new(),
        }
    }
}

/// Parses `"1,0,-1/2"` or `"e2"` into a vector of `a`.
pub fn parse_vector(text: &str, a: &AlgebraDef) -> Result<Vector> {
    let t = text.trim();
    if let Some(idx) = t.strip_prefix('e') {
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Schema(format!("bad basis vector {t:?}")))?;
        if !(1..=a.dim()).contains(&i) {
            return Err(Error::Schema(format!("basis vector {t:?} out of range")));
        }
        return Ok(a.e(i));
    }
    let coords = t
        .split(',')
        .map(|c| a.field().parse(c))
        .collect::<Result<Vec<_>>>()?;
    let v = Vector::new(a.field(), coords)?;
    if v.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: v.dim(),
        });
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    const H3: &str = r#"{
        "name": "h3", "dim": 3, "field": {"type": "Q"},
        "constants": [[1, 2, 3, "1"], [2, 1, 3, "-1"]],
        "ideals": {"center": [["0", "0", "1"]], "e1_e3": [["1","0","0"],["0","0","2/3"]]}
    }"#;

    #[test]
    fn loads_constants_and_ideals() {
        let loaded = AlgebraFile::from_json(H3).unwrap().load().unwrap();
        let a = &loaded.algebra;
        assert_eq!(a.dim(), 3);
        assert_eq!(a.bracket(&a.e(2), &a.e(1)).unwrap(), -&a.e(3));
        assert_eq!(loaded.ideal("center").unwrap().space().dim(), 1);
        assert_eq!(loaded.ideal("e1_e3").unwrap().space().dim(), 2);
        assert_eq!(
            loaded.ideal("nope").unwrap_err(),
            Error::UnknownIdeal("nope".into())
        );
    }

    #[test]
    fn prime_fields_and_fractions() {
        let text =
            r#"{"name":"x","dim":1,"field":{"type":"Fp","p":5},"constants":[[1,1,1,"1/2"]]}"#;
        let a = AlgebraFile::from_json(text)
            .unwrap()
            .load()
            .unwrap()
            .algebra;
        assert_eq!(a.field(), Field::Prime(5));
        assert_eq!(
            a.bracket(&a.e(1), &a.e(1)).unwrap(),
            a.vector(&[3]).unwrap()
        );
    }

    #[test]
    fn schema_errors() {
        let bad_p = r#"{"name":"x","dim":1,"field":{"type":"Fp","p":2},"constants":[]}"#;
        assert_eq!(
            AlgebraFile::from_json(bad_p).unwrap().load().unwrap_err(),
            Error::InvalidModulus(2)
        );
        let bad_index = r#"{"name":"x","dim":2,"field":{"type":"Q"},"constants":[[1,3,1,"1"]]}"#;
        assert!(matches!(
            AlgebraFile::from_json(bad_index).unwrap().load(),
            Err(Error::IndexOutOfRange { .. })
        ));
        let float = r#"{"name":"x","dim":1,"field":{"type":"Q"},"constants":[[1,1,1,0.5]]}"#;
        assert!(matches!(
            AlgebraFile::from_json(float),
            Err(Error::Schema(_))
        ));
        let bad_coeff = r#"{"name":"x","dim":1,"field":{"type":"Q"},"constants":[[1,1,1,"one"]]}"#;
        assert!(matches!(
            AlgebraFile::from_json(bad_coeff).unwrap().load(),
            Err(Error::InvalidCoefficient { .. })
        ));
        let short =
            r#"{"name":"x","dim":2,"field":{"type":"Q"},"constants":[],"ideals":{"b":[["1"]]}}"#;
        assert!(matches!(
            AlgebraFile::from_json(short).unwrap().load(),
            Err(Error::Schema(_))
        ));
        let not_ideal = r#"{"name":"a2","dim":2,"field":{"type":"Q"},"constants":[[2,1,2,"1"]],"ideals":{"b":[["1","0"]]}}"#;
        let loaded = AlgebraFile::from_json(not_ideal).unwrap().load().unwrap();
        assert!(matches!(loaded.ideal("b"), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn round_trips_through_algebra() {
        let file = AlgebraFile::from_json(H3).unwrap();
        let a = file.load().unwrap().algebra;
        let back = AlgebraFile::from_algebra(&a);
        assert_eq!(back.constants, file.constants);
        assert_eq!(AlgebraFile::from_json(&back.to_json()).unwrap(), back);
    }

    #[test]
    fn vector_syntax() {
        let a = AlgebraFile::from_json(H3).unwrap().load().unwrap().algebra;
        assert_eq!(parse_vector("e2", &a).unwrap(), a.e(2));
        assert_eq!(parse_vector("1, 0, 0", &a).unwrap(), a.e(1));
        assert!(parse_vector("e4", &a).is_err());
        assert!(parse_vector("1,0", &a).is_err());
    }
}
