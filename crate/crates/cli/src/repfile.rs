//! Parsing of representation files for the twisted Alexander polynomial.
//!
//! A representation file is a JSON object:
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "field": "Q",
//!   "generators": {
//!     "x1": [["2", 0], [0, "1/2"]],
//!     "x2": [[1, 0], [0, 1]]
//!   }
//! }
//! ```
//!
//! Matrix entries are integers or rational strings such as `"3/4"`; with
//! `"field": "Qi"` an entry may also be a two-element array `[re, im]` of a
//! Gaussian rational.  Generator names follow the presentation (`x3`,
//! `g1_2`); generators that are not named act as the identity.  Every matrix
//! must be square of the declared dimension and invertible, and the whole
//! assignment is verified against every relator of the presentation before
//! use.

use std::collections::BTreeMap;

use linarr_core::arrangement::Arrangement;
use linarr_core::matrix::Mat;
use linarr_core::presentation::{minimal_presentation, Gen, GroupPresentation, Representation};
use linarr_core::scalar::parse_rat;
use linarr_core::{Error, Field, GaussRat, Rat, Result};
use num::Zero;
use serde_json::Value;

/// A parsed and verified representation, tagged by its coefficient field.
pub enum RepFile {
    Rational { dim: usize, rep: Representation<Rat> },
    Gaussian { dim: usize, rep: Representation<GaussRat> },
}

pub fn parse(text: &str, arr: &Arrangement) -> Result<RepFile> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("invalid representation file: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::Parse("representation file must be a JSON object".into()))?;
    let dim = obj
        .get("dimension")
        .and_then(Value::as_u64)
        .ok_or_else(|| {
            Error::Parse("representation file needs a positive integer `dimension`".into())
        })? as usize;
    if dim == 0 {
        return Err(Error::Parse("representation dimension must be positive".into()));
    }
    let field = match obj.get("field") {
        None => "Q",
        Some(Value::String(s)) => s.as_str(),
        Some(_) => return Err(Error::Parse("`field` must be \"Q\" or \"Qi\"".into())),
    };
    let generators = obj
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("representation file needs a `generators` object".into()))?;
    let pres = minimal_presentation(arr);
    let by_name: BTreeMap<String, Gen> = pres
        .generators
        .iter()
        .map(|g| (g.name(), g.clone()))
        .collect();
    match field {
        "Q" => {
            let rep = build(dim, generators, &by_name, rat_entry)?;
            verify(&pres, &rep)?;
            Ok(RepFile::Rational { dim, rep })
        }
        "Qi" => {
            let rep = build(dim, generators, &by_name, gauss_entry)?;
            verify(&pres, &rep)?;
            Ok(RepFile::Gaussian { dim, rep })
        }
        other => Err(Error::Parse(format!(
            "unknown field {other:?}; expected \"Q\" or \"Qi\""
        ))),
    }
}

fn build<F: Field>(
    dim: usize,
    generators: &serde_json::Map<String, Value>,
    by_name: &BTreeMap<String, Gen>,
    entry: fn(&Value) -> Result<F>,
) -> Result<Representation<F>> {
    let mut rep = Representation::identity(dim);
    for (name, rows) in generators {
        let gen = by_name
            .get(name)
            .ok_or_else(|| Error::InvalidRepresentation(format!("unknown generator {name:?}")))?;
        let rows = rows.as_array().ok_or_else(|| {
            Error::Parse(format!("matrix for {name} must be an array of rows"))
        })?;
        let mut parsed: Vec<Vec<F>> = Vec::with_capacity(rows.len());
        for row in rows {
            let row = row.as_array().ok_or_else(|| {
                Error::Parse(format!("matrix row for {name} must be an array"))
            })?;
            parsed.push(row.iter().map(entry).collect::<Result<Vec<F>>>()?);
        }
        if parsed.len() != dim || parsed.iter().any(|row| row.len() != dim) {
            return Err(Error::InvalidRepresentation(format!(
                "matrix for {name} must be {dim}x{dim}"
            )));
        }
        rep.set(gen.clone(), Mat::from_rows(parsed)?)?;
    }
    Ok(rep)
}

fn rat_entry(value: &Value) -> Result<Rat> {
    match value {
        Value::Number(x) => x
            .as_i64()
            .map(|i| Rat::from_integer(i.into()))
            .ok_or_else(|| Error::Parse(format!("entry {x} is not an exact integer"))),
        Value::String(s) => parse_rat(s),
        other => Err(Error::Parse(format!(
            "entry {other} must be an integer or a rational string"
        ))),
    }
}

fn gauss_entry(value: &Value) -> Result<GaussRat> {
    match value {
        Value::Array(parts) if parts.len() == 2 => {
            Ok(GaussRat::new(rat_entry(&parts[0])?, rat_entry(&parts[1])?))
        }
        Value::Array(_) => Err(Error::Parse(
            "a Gaussian entry is a two-element array [re, im]".into(),
        )),
        other => Ok(GaussRat::new(rat_entry(other)?, Rat::zero())),
    }
}

fn verify<F: Field>(pres: &GroupPresentation, rep: &Representation<F>) -> Result<()> {
    for (index, (_, word)) in pres.relators.iter().enumerate() {
        if !rep.evaluate(word).is_identity() {
            return Err(Error::NotARepresentation { index });
        }
    }
    Ok(())
}
