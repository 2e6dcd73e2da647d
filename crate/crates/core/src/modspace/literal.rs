//! Textual forms: `GF(p)^n` / `Q^n` for spaces, `[v1; v2; ...]` for row
//! lists, and the JSON space description with action generators.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec, Matrix};

/// A parsed `GF(p)^n` or `Q^n` header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceLiteral {
    pub field: FieldSpec,
    pub dim: usize,
}

pub fn parse_space(s: &str) -> Result<SpaceLiteral> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (field_part, dim_part) = compact
        .split_once('^')
        .ok_or_else(|| Error::Parse(format!("expected `GF(p)^n` or `Q^n`, got `{s}`")))?;
    let dim: usize = dim_part
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension `{dim_part}`")))?;
    let field = if field_part == "Q" {
        FieldSpec::Rationals
    } else if let Some(inner) = field_part.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        FieldSpec::Prime(
            inner
                .parse()
                .map_err(|_| Error::Parse(format!("bad characteristic `{inner}`")))?,
        )
    } else {
        return Err(Error::Parse(format!("unknown field `{field_part}`")));
    };
    Ok(SpaceLiteral { field, dim })
}

/// Parses `[1,0,0; 0,1,0]` into a matrix with `dim` columns. `[]` is the
/// empty list.
pub fn parse_rows<F: Field>(field: &F, dim: usize, s: &str) -> Result<Matrix<F>> {
    let t = s.trim();
    let body = t
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("row list must be bracketed: `{s}`")))?;
    let mut rows = Vec::new();
    for chunk in body.split(';') {
        if chunk.trim().is_empty() {
            continue;
        }
        let row: Vec<F::Elem> = chunk
            .split(',')
            .map(|tok| {
                field
                    .parse(tok)
                    .ok_or_else(|| Error::Parse(format!("bad scalar `{}`", tok.trim())))
            })
            .collect::<Result<_>>()?;
        if row.len() != dim {
            return Err(Error::Parse(format!(
                "vector of length {} in a space of dimension {dim}",
                row.len()
            )));
        }
        rows.push(row);
    }
    Matrix::from_rows(field, dim, &rows)
}

/// Splits `GF(p)^n : [rows]` into its header and the row-list text.
pub fn parse_subspace_literal(s: &str) -> Result<(SpaceLiteral, &str)> {
    let (head, rows) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected `<space> : [rows]`, got `{s}`")))?;
    Ok((parse_space(head)?, rows.trim()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldToken {
    Prime(u32),
    Named(String),
}

impl FieldToken {
    pub fn to_spec(&self) -> Result<FieldSpec> {
        match self {
            FieldToken::Prime(p) => Ok(FieldSpec::Prime(*p)),
            FieldToken::Named(s) if s == "Q" => Ok(FieldSpec::Rationals),
            FieldToken::Named(s) => parse_space(&format!("{s}^0")).map(|l| l.field),
        }
    }
}

/// JSON space file: `{"field": 2, "dim": 4, "generators": [[[...]]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceDescription {
    pub field: FieldToken,
    pub dim: usize,
    #[serde(default)]
    pub generators: Vec<Vec<Vec<i64>>>,
}

impl SpaceDescription {
    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.to_spec()
    }

    pub fn generator_matrices<F: Field>(&self, field: &F) -> Result<Vec<Matrix<F>>> {
        self.generators
            .iter()
            .map(|g| {
                let rows: Vec<Vec<F::Elem>> =
                    g.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect();
                Matrix::from_rows(field, self.dim, &rows)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{PrimeField, Rationals};

    #[test]
    fn parses_headers() {
        assert_eq!(
            parse_space("GF(2)^4").unwrap(),
            SpaceLiteral { field: FieldSpec::Prime(2), dim: 4 }
        );
        assert_eq!(parse_space(" Q ^ 3").unwrap().field, FieldSpec::Rationals);
        assert!(parse_space("GF2^4").is_err());
    }

    #[test]
    fn parses_rows() {
        let f = PrimeField::new(3).unwrap();
        let m = parse_rows(&f, 2, "[ 1, 2 ;0,-1 ]").unwrap();
        assert_eq!(m, Matrix::from_ints(&f, &[&[1, 2], &[0, 2]]));
        assert_eq!(parse_rows(&f, 2, "[]").unwrap().rows(), 0);
        assert!(parse_rows(&f, 2, "[1,2,3]").is_err());
        let q = parse_rows(&Rationals, 2, "[1/2, -3]").unwrap();
        assert_eq!(Rationals.format(q.get(0, 0)), "1/2");
    }

    #[test]
    fn parses_full_literal() {
        let (head, rows) = parse_subspace_literal("GF(2)^4 : [1,0,0,0; 0,1,0,0]").unwrap();
        assert_eq!(head.dim, 4);
        let m = parse_rows(&PrimeField::new(2).unwrap(), 4, rows).unwrap();
        assert_eq!(m.rows(), 2);
    }

    #[test]
    fn parses_space_file() {
        let d: SpaceDescription =
            serde_json::from_str(r#"{"field":2,"dim":2,"generators":[[[0,1],[1,0]]]}"#).unwrap();
        assert_eq!(d.field_spec().unwrap(), FieldSpec::Prime(2));
        let g = d.generator_matrices(&PrimeField::new(2).unwrap()).unwrap();
        assert_eq!(g.len(), 1);
        let d: SpaceDescription = serde_json::from_str(r#"{"field":"Q","dim":1}"#).unwrap();
        assert_eq!(d.field_spec().unwrap(), FieldSpec::Rationals);
    }
}
