//! JSON algebra files:
//! `{"name", "dim", "basis", "unit", "mult": [[i, j, [[k, "p/q"], …]], …]}`.
//! Omitted products are zero.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{make_algebra, AlgebraError, FinDimAlgebra};
use crate::exactlin::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: usize,
    pub mult: Vec<(usize, usize, Vec<(usize, Rational)>)>,
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("dim is {dim} but {labels} basis labels were given")]
    DimMismatch { dim: usize, labels: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        serde_json::from_str(text).map_err(|e| IoError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_algebra(&self) -> Result<FinDimAlgebra, IoError> {
        if self.basis.len() != self.dim {
            return Err(IoError::DimMismatch {
                dim: self.dim,
                labels: self.basis.len(),
            });
        }
        let triples: Vec<(usize, usize, usize, Rational)> = self
            .mult
            .iter()
            .flat_map(|(i, j, v)| v.iter().map(move |(k, c)| (*i, *j, *k, c.clone())))
            .collect();
        Ok(make_algebra(&self.name, self.basis.clone(), &triples, self.unit)?)
    }

    pub fn from_algebra(alg: &FinDimAlgebra) -> Self {
        let n = alg.dim();
        let mut mult = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let p = alg.product(i, j);
                if !p.is_empty() {
                    mult.push((i, j, p.to_vec()));
                }
            }
        }
        AlgebraFile {
            name: alg.name().to_string(),
            dim: n,
            basis: alg.labels().to_vec(),
            unit: 0,
            mult,
        }
    }

    /// Pretty JSON with one product per line.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{\n");
        s += &format!("  \"name\": {},\n", serde_json::to_string(&self.name).unwrap());
        s += &format!("  \"dim\": {},\n", self.dim);
        s += &format!("  \"basis\": {},\n", serde_json::to_string(&self.basis).unwrap());
        s += &format!("  \"unit\": {},\n", self.unit);
        s += "  \"mult\": [";
        for (n, m) in self.mult.iter().enumerate() {
            s += if n == 0 { "\n    " } else { ",\n    " };
            s += &serde_json::to_string(m).unwrap();
        }
        s += if self.mult.is_empty() { "]\n}\n" } else { "\n  ]\n}\n" };
        s
    }
}

pub fn parse_algebra(text: &str) -> Result<FinDimAlgebra, IoError> {
    AlgebraFile::parse(text)?.to_algebra()
}

pub fn read_algebra(path: &Path) -> Result<FinDimAlgebra, IoError> {
    let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
        path: path.display().to_string(),
        source,
    })?;
    parse_algebra(&text)
}

pub fn algebra_to_json(alg: &FinDimAlgebra) -> String {
    AlgebraFile::from_algebra(alg).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{radical_square_zero, standard_algebras};

    #[test]
    fn round_trip() {
        let mut algs = standard_algebras();
        algs.push(radical_square_zero(2));
        for a in algs {
            let text = algebra_to_json(&a);
            let b = parse_algebra(&text).unwrap();
            assert_eq!(a, b, "{}", a.name());
            assert_eq!(b.name(), a.name());
        }
    }

    #[test]
    fn dual_numbers_file() {
        let text = r#"{"name": "D", "dim": 2, "basis": ["1", "x"], "unit": 0,
            "mult": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]]]}"#;
        let a = parse_algebra(text).unwrap();
        assert_eq!(a, crate::algebra::dual_numbers());
    }

    #[test]
    fn errors() {
        let bad_q = r#"{"name": "D", "dim": 2, "basis": ["1", "x"], "unit": 0,
            "mult": [[0, 0, [[0, "1/0"]]]]}"#;
        match parse_algebra(bad_q) {
            Err(IoError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        // x·x = 1 but x·1 = 0 with 1 declared as the unit
        let not_unital = r#"{"name": "bad", "dim": 2, "basis": ["1", "x"], "unit": 0,
            "mult": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 1, [[0, "1"]]]]}"#;
        assert!(matches!(
            parse_algebra(not_unital),
            Err(IoError::Algebra(AlgebraError::NotUnital(1)))
        ));
        // x·y = y, y·y = x, x·x = 0: x·(y·y) = 0 but (x·y)·y = x
        let not_assoc = r#"{"name": "bad", "dim": 3, "basis": ["1", "x", "y"], "unit": 0,
            "mult": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]],
                     [0, 2, [[2, "1"]]], [2, 0, [[2, "1"]]],
                     [1, 2, [[2, "1"]]], [2, 2, [[1, "1"]]]]}"#;
        assert!(matches!(
            parse_algebra(not_assoc),
            Err(IoError::Algebra(AlgebraError::NotAssociative(..)))
        ));
        assert!(matches!(
            parse_algebra(r#"{"name": "x", "dim": 2, "basis": ["1"], "unit": 0, "mult": []}"#),
            Err(IoError::DimMismatch { .. })
        ));
    }
}
