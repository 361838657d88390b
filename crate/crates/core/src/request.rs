//! JSON request and response formats for single integrations.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, Rational};
use crate::error::{Error, Result};
use crate::integrate::{integrate, IntegrationConfig, MethodChoice, PolynomialInput};
use crate::polynomial::{parse_expression, LinearForm, SparsePolynomial, SparseTermJson};
use crate::simplex::{Point, RationalJson, Simplex};

/// A simplex, one polynomial and a method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegrationRequest {
    pub vertices: Vec<Point>,
    pub polynomial: PolynomialInput,
    pub method: MethodChoice,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RequestJson {
    vertices: Vec<Vec<RationalJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    expression: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sparse: Option<Vec<SparseTermJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    linear_power: Option<LinearPowerJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    method: Option<String>,
}

/// `{"form": ["1", "2"], "exponent": 3}`; integers are accepted for the
/// coefficients.
#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct LinearPowerJson {
    form: Vec<RationalJson>,
    exponent: u32,
}

/// Parse a standalone `{"form": [...], "exponent": M}` object.
pub fn parse_linear_power(text: &str) -> Result<(LinearForm, u32)> {
    let raw: LinearPowerJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    raw.into_parts()
}

impl LinearPowerJson {
    fn into_parts(self) -> Result<(LinearForm, u32)> {
        let coefficients = self
            .form
            .into_iter()
            .map(RationalJson::into_rational)
            .collect::<Result<Vec<_>>>()?;
        Ok((LinearForm::new(coefficients), self.exponent))
    }
}

impl IntegrationRequest {
    pub fn simplex(&self) -> Result<Simplex> {
        Simplex::new(self.vertices.clone())
    }

    pub fn variable_count(&self) -> usize {
        self.vertices.first().map_or(0, Vec::len)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RequestJson = serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
        let vertices = raw
            .vertices
            .into_iter()
            .map(|v| v.into_iter().map(RationalJson::into_rational).collect())
            .collect::<Result<Vec<Point>>>()?;
        let n = vertices.first().map_or(0, Vec::len);
        let present = [
            raw.expression.is_some(),
            raw.sparse.is_some(),
            raw.linear_power.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if present != 1 {
            return Err(Error::InvalidInput(
                "exactly one of `expression`, `sparse`, `linear_power` is required".into(),
            ));
        }
        let polynomial = if let Some(text) = raw.expression {
            PolynomialInput::Expression(parse_expression(&text, n)?)
        } else if let Some(terms) = raw.sparse {
            PolynomialInput::Sparse(SparsePolynomial::from_json_terms(n, &terms)?)
        } else {
            let (form, exponent) = raw.linear_power.expect("counted above").into_parts()?;
            PolynomialInput::LinearPower { form, exponent }
        };
        let method = match raw.method {
            Some(m) => m.parse()?,
            None => MethodChoice::Auto,
        };
        Ok(IntegrationRequest {
            vertices,
            polynomial,
            method,
        })
    }

    pub fn to_json(&self) -> String {
        let vertices = self
            .vertices
            .iter()
            .map(|v| v.iter().map(|x| RationalJson::Text(format_rational(x))).collect())
            .collect();
        let mut raw = RequestJson {
            vertices,
            expression: None,
            sparse: None,
            linear_power: None,
            method: Some(self.method.name().to_string()),
        };
        match &self.polynomial {
            PolynomialInput::Expression(e) => raw.expression = Some(e.to_string()),
            PolynomialInput::Sparse(p) => raw.sparse = Some(p.to_json_terms()),
            PolynomialInput::LinearPower { form, exponent } => {
                raw.linear_power = Some(LinearPowerJson {
                    form: form
                        .coefficients()
                        .iter()
                        .map(|c| RationalJson::Text(format_rational(c)))
                        .collect(),
                    exponent: *exponent,
                })
            }
        }
        serde_json::to_string(&raw).expect("request serializes")
    }

    /// Integrate and time the computation.
    pub fn run(&self, config: &IntegrationConfig) -> Result<IntegrationResult> {
        let simplex = self.simplex()?;
        let start = Instant::now();
        let (integral, method) = integrate(&simplex, &self.polynomial, self.method, config)?;
        Ok(IntegrationResult {
            integral,
            method,
            elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrationResult {
    pub integral: Rational,
    pub method: MethodChoice,
    pub elapsed_ms: f64,
}

#[derive(Serialize)]
struct ResultJson<'a> {
    integral: String,
    method: &'a str,
    elapsed_ms: f64,
}

impl IntegrationResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ResultJson {
            integral: format_rational(&self.integral),
            method: self.method.name(),
            elapsed_ms: (self.elapsed_ms * 1000.0).round() / 1000.0,
        })
        .expect("result serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn expression_request() {
        let req = IntegrationRequest::from_json(
            r#"{"vertices": [[0,0],[1,0],[0,1]], "expression": "(x1*x2)", "method": "auto"}"#,
        )
        .unwrap();
        let out = req.run(&IntegrationConfig::default()).unwrap();
        assert_eq!(out.integral, rat(1, 24));
        let json: serde_json::Value = serde_json::from_str(&out.to_json()).unwrap();
        assert_eq!(json["integral"], "1/24");
        assert!(json["elapsed_ms"].as_f64().unwrap() >= 0.0);
    }

    #[test]
    fn linear_power_request() {
        let req =
            IntegrationRequest::from_json(r#"{"vertices": [[0],[1]], "linear_power": {"form": [1], "exponent": 2}}"#)
                .unwrap();
        assert_eq!(req.run(&IntegrationConfig::default()).unwrap().integral, rat(1, 3));
    }

    #[test]
    fn sparse_request_round_trips() {
        let text = r#"{"vertices": [["0","0"],["1/2","0"],["0","1"]],
            "sparse": [{"coef": "3/2", "exps": [2, 1]}, {"coef": "1", "exps": [0, 0]}],
            "method": "duality"}"#;
        let req = IntegrationRequest::from_json(text).unwrap();
        assert_eq!(IntegrationRequest::from_json(&req.to_json()).unwrap(), req);
    }

    #[test]
    fn rejects_bad_requests() {
        let both = r#"{"vertices": [[0],[1]], "expression": "x1", "sparse": []}"#;
        assert!(matches!(
            IntegrationRequest::from_json(both),
            Err(Error::InvalidInput(_))
        ));
        let none = r#"{"vertices": [[0],[1]]}"#;
        assert!(IntegrationRequest::from_json(none).is_err());
        let degenerate = r#"{"vertices": [[0,0],[1,1],[2,2]], "expression": "x1"}"#;
        let req = IntegrationRequest::from_json(degenerate).unwrap();
        assert_eq!(
            req.run(&IntegrationConfig::default()).unwrap_err(),
            Error::DegenerateSimplex
        );
        let bad_method = r#"{"vertices": [[0],[1]], "expression": "x1", "method": "simpson"}"#;
        assert!(IntegrationRequest::from_json(bad_method).is_err());
    }
}
