use std::str::FromStr;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::algebra::{AlgebraicReal, FieldContext};
use crate::error::{CoxeterError, Result};
use crate::roots::RootVector;

fn coeff_strings(x: &AlgebraicReal) -> Vec<String> {
    let c = x.coeffs();
    if c.is_empty() {
        vec!["0".to_string()]
    } else {
        c.iter().map(ToString::to_string).collect()
    }
}

/// `{"exact": [c_0, c_1, ...], "approx": x}` with `x = sum c_j theta^j`.
pub fn scalar_json(x: &AlgebraicReal) -> Value {
    json!({ "exact": coeff_strings(x), "approx": x.to_f64() })
}

pub fn vector_json(v: &RootVector<AlgebraicReal>) -> Value {
    Value::Array(v.0.iter().map(scalar_json).collect())
}

/// Compact text form: a rational, or `c_0:c_1:...` for irrational values.
pub fn coord_text(x: &AlgebraicReal) -> String {
    coeff_strings(x).join(":")
}

pub fn coords_text(v: &RootVector<AlgebraicReal>) -> String {
    v.0.iter().map(coord_text).collect::<Vec<_>>().join(" ")
}

/// Inverse of [`coord_text`].
pub fn parse_coord(text: &str, field: &Arc<FieldContext>) -> Result<AlgebraicReal> {
    let coeffs = text
        .split(':')
        .map(|c| BigRational::from_str(c.trim()).map_err(|_| CoxeterError::Selector(format!("bad coefficient {c:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() > field.degree() && coeffs[field.degree()..].iter().any(|c| !c.is_zero()) {
        return Err(CoxeterError::Selector(format!(
            "{text:?} has more than {} coefficients",
            field.degree()
        )));
    }
    Ok(AlgebraicReal::from_coeffs(coeffs, field))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let field = Arc::new(FieldContext::for_order(4));
        for text in ["0", "3", "-1/2", "1:1", "0:-2"] {
            let x = parse_coord(text, &field).unwrap();
            assert_eq!(coord_text(&x), text);
        }
        assert!(parse_coord("1:2:3", &field).is_err());
        assert!(parse_coord("x", &field).is_err());
    }

    #[test]
    fn json_shape() {
        let x = AlgebraicReal::from_integer(2);
        assert_eq!(scalar_json(&x), json!({"exact": ["2"], "approx": 2.0}));
    }
}
