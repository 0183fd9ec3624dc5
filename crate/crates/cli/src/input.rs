//! Algebra input files: UTF-8 JSON with 1-based bracket entries and
//! rational coefficients as strings ("3/2" or "-1"), never floats.
//!
//! For an ordered pair (i, j) with explicit entries whose reverse (j, i)
//! has none, the reverse is filled by antisymmetry. Files that list both
//! orders keep both verbatim, so structure violations can be expressed and
//! reported by `validate`.

use lpcoh_core::liealg::LieAlgebra;
use lpcoh_core::rat::{parse_rat, Rat};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub coef: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Expected {
    pub verdict: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<String>,
}

#[derive(Debug)]
pub struct ParsedAlgebra {
    pub name: String,
    pub algebra: LieAlgebra,
    pub expected: Option<Expected>,
}

impl AlgebraFile {
    /// Serializes an algebra back into the file format, one entry per
    /// nonzero constant with i < j (the reverse pairs regenerate by
    /// antisymmetry on parse).
    pub fn from_algebra(name: &str, algebra: &LieAlgebra, expected: Option<Expected>) -> Self {
        let n = algebra.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let c = algebra.structure_constant(i, j, k);
                    if !c.is_zero() {
                        brackets.push(BracketEntry {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                            coef: lpcoh_core::rat::format_rat(c),
                        });
                    }
                }
            }
        }
        AlgebraFile {
            name: name.to_string(),
            dim: n,
            basis: Some(algebra.basis_names().to_vec()),
            brackets,
            expected,
        }
    }
}

pub fn parse_algebra_file(text: &str) -> Result<ParsedAlgebra, String> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    if file.dim < 1 {
        return Err("dim must be at least 1".into());
    }
    let names = match &file.basis {
        Some(b) => {
            if b.len() != file.dim {
                return Err(format!("basis has {} labels, dim is {}", b.len(), file.dim));
            }
            b.clone()
        }
        None => (1..=file.dim).map(|i| format!("e{i}")).collect(),
    };
    let n = file.dim;
    let mut table = vec![vec![vec![Rat::zero(); n]; n]; n];
    let mut seen: HashSet<(usize, usize, usize)> = HashSet::new();
    let mut pair_explicit: HashSet<(usize, usize)> = HashSet::new();
    for e in &file.brackets {
        for (label, v) in [("i", e.i), ("j", e.j), ("k", e.k)] {
            if v < 1 || v > n {
                return Err(format!("index {label}={v} out of range 1..{n}"));
            }
        }
        if !seen.insert((e.i, e.j, e.k)) {
            return Err(format!("duplicate bracket entry ({}, {}, {})", e.i, e.j, e.k));
        }
        let c = parse_rat(&e.coef).map_err(|err| format!("entry ({}, {}, {}): {err}", e.i, e.j, e.k))?;
        table[e.i - 1][e.j - 1][e.k - 1] = c;
        pair_explicit.insert((e.i - 1, e.j - 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && pair_explicit.contains(&(i, j)) && !pair_explicit.contains(&(j, i)) {
                for k in 0..n {
                    table[j][i][k] = -table[i][j][k].clone();
                }
            }
        }
    }
    Ok(ParsedAlgebra {
        name: file.name,
        algebra: LieAlgebra::from_table(names, table),
        expected: file.expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lpcoh_core::rat::rat_i;

    #[test]
    fn parses_with_antisymmetric_fill() {
        let text = r#"{
            "name": "aff(R)", "dim": 2,
            "brackets": [{"i": 1, "j": 2, "k": 2, "coef": "1"}]
        }"#;
        let parsed = parse_algebra_file(text).unwrap();
        assert!(parsed.algebra.validate().ok());
        assert_eq!(*parsed.algebra.structure_constant(1, 0, 1), rat_i(-1));
    }

    #[test]
    fn keeps_explicit_violations() {
        let text = r#"{
            "name": "bad", "dim": 2,
            "brackets": [
                {"i": 1, "j": 2, "k": 2, "coef": "1"},
                {"i": 2, "j": 1, "k": 2, "coef": "1"}
            ]
        }"#;
        let parsed = parse_algebra_file(text).unwrap();
        assert!(!parsed.algebra.validate().ok());
    }

    #[test]
    fn rejects_bad_indices_and_duplicates() {
        let bad_index = r#"{"name":"x","dim":2,"brackets":[{"i":0,"j":2,"k":1,"coef":"1"}]}"#;
        assert!(parse_algebra_file(bad_index).is_err());
        let dup = r#"{"name":"x","dim":2,"brackets":[
            {"i":1,"j":2,"k":1,"coef":"1"},{"i":1,"j":2,"k":1,"coef":"2"}]}"#;
        assert!(parse_algebra_file(dup).is_err());
        let float = r#"{"name":"x","dim":2,"brackets":[{"i":1,"j":2,"k":1,"coef":"1.5"}]}"#;
        assert!(parse_algebra_file(float).is_err());
    }
}
