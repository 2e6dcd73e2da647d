use serde::{Deserialize, Serialize};

use super::{Algebra, AssociativePair, UnitalAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, FieldSpec};
use crate::modspace::FieldToken;

/// JSON pair file, e.g. `{"field": 2, "kind": "algebra", "dim": 1, "mult": [[[1]]]}`
/// or `{"field": 2, "kind": "operator", "e": 1, "f": 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairDescription {
    pub field: FieldToken,
    #[serde(flatten)]
    pub shape: PairShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PairShape {
    /// mult[i][j] = eᵢeⱼ; the unit is solved for when omitted.
    Algebra {
        dim: usize,
        mult: Vec<Vec<Vec<i64>>>,
        #[serde(default)]
        unit: Option<Vec<i64>>,
    },
    /// (Hom(𝕂^e, 𝕂^f), Hom(𝕂^f, 𝕂^e)).
    Operator { e: usize, f: usize },
    /// Raw structure constants, flattened as in [`AssociativePair::new`].
    Pair {
        plus_dim: usize,
        minus_dim: usize,
        plus: Vec<Vec<i64>>,
        minus: Vec<Vec<i64>>,
    },
}

impl PairDescription {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.to_spec()
    }

    pub fn build<F: Field>(&self, field: &F) -> Result<AssociativePair<F>> {
        let vecs = |v: &[Vec<i64>]| -> Vec<Vec<F::Elem>> { v.iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect() };
        match &self.shape {
            PairShape::Algebra { dim, mult, unit } => {
                if mult.len() != *dim {
                    return Err(Error::ShapeMismatch(format!("mult needs {dim} rows")));
                }
                let flat: Vec<Vec<i64>> = mult.iter().flatten().cloned().collect();
                let alg = Algebra::new(field.clone(), *dim, vecs(&flat))?;
                let alg = match unit {
                    Some(u) => UnitalAlgebra::new(alg, u.iter().map(|&x| field.from_int(x)).collect())?,
                    None => UnitalAlgebra::from_algebra(alg)?,
                };
                Ok(AssociativePair::from_algebra(&alg))
            }
            PairShape::Operator { e, f } => Ok(AssociativePair::operator_pair(field.clone(), *e, *f)),
            PairShape::Pair { plus_dim, minus_dim, plus, minus } => {
                AssociativePair::new(field.clone(), *plus_dim, *minus_dim, vecs(plus), vecs(minus))
            }
        }
    }
}
