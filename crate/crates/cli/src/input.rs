//! Space and literal parsing, and the mapping from library errors to exit
//! codes.

use std::fs;

use assocgeo::exactla::{Field, FieldSpec, PrimeField, Rationals};
use assocgeo::modspace::{parse_rows, parse_space, parse_subspace_literal, SpaceDescription};
use assocgeo::{Error, ModuleSpace, Subspace};

use crate::SpaceArgs;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { code: 2, message: msg.into() }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError { code: 3, message: msg.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::UnknownSuite(_)
            | Error::InvalidField(_)
            | Error::ShapeMismatch(_)
            | Error::MixedSpaces
            | Error::NotASubmodule { .. } => 2,
            _ => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

pub enum AnySpace {
    Prime(ModuleSpace<PrimeField>),
    Rational(ModuleSpace<Rationals>),
}

pub fn load_space(args: &SpaceArgs) -> Result<AnySpace, CliError> {
    if let Some(path) = &args.space_file {
        let text = fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        let desc: SpaceDescription = serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
        return Ok(match desc.field_spec()? {
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p)?;
                let gens = desc.generator_matrices(&f)?;
                AnySpace::Prime(ModuleSpace::new(f, desc.dim, gens)?)
            }
            FieldSpec::Rationals => {
                let gens = desc.generator_matrices(&Rationals)?;
                AnySpace::Rational(ModuleSpace::new(Rationals, desc.dim, gens)?)
            }
        });
    }
    let text = args.space.as_deref().ok_or_else(|| CliError::usage("give --space or --space-file"))?;
    let lit = parse_space(text)?;
    Ok(match lit.field {
        FieldSpec::Prime(p) => AnySpace::Prime(ModuleSpace::vector_space(PrimeField::new(p)?, lit.dim)),
        FieldSpec::Rationals => AnySpace::Rational(ModuleSpace::vector_space(Rationals, lit.dim)),
    })
}

/// `[1,0; 0,1]`, or a full `GF(p)^n : [...]` literal whose header must match
/// the space.
pub fn parse_literal<F: Field>(space: &ModuleSpace<F>, name: &str, text: &str) -> Result<Subspace<F>, CliError> {
    let rows = if text.contains(':') {
        let (head, rows) = parse_subspace_literal(text)?;
        if head.field != space.field().spec() || head.dim != space.dim() {
            return Err(CliError::usage(format!("--{name}: literal header does not match the space")));
        }
        rows
    } else {
        text
    };
    let m = parse_rows(space.field(), space.dim(), rows).map_err(|e| CliError::usage(format!("--{name}: {e}")))?;
    space.subspace_from_matrix(&m).map_err(|e| CliError::usage(format!("--{name}: {e}")))
}
