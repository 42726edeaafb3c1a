//! JSON presentation documents.

use serde::{Deserialize, Serialize};
use spbw_core::rational::{format_rational, parse_rational};
use spbw_core::{BasePoly, ExtensionPresentation, PresentationParts, Rational};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AffineEntry {
    pub scale: String,
    pub shift: String,
}

/// `p_i`: a coefficient list (constant first) or a single rational.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyEntry {
    Scalar(String),
    Coeffs(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub base_arity: usize,
    pub generators: usize,
    pub sigma: Vec<Vec<AffineEntry>>,
    pub delta_p: Vec<PolyEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<Vec<Vec<Vec<String>>>>,
}

impl PresentationDocument {
    pub fn parse(path: &str, text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Json {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &str) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse(path, &text)
    }

    pub fn to_presentation(&self, path: &str) -> Result<ExtensionPresentation, CliError> {
        let schema = |message: String| CliError::Schema {
            path: path.to_string(),
            message,
        };
        let num = |field: String, s: &str| -> Result<Rational, CliError> {
            parse_rational(s).map_err(|e| schema(format!("{field}: {e}")))
        };
        let (m, n) = (self.base_arity, self.generators);
        let mut scale = Vec::with_capacity(self.sigma.len());
        let mut shift = Vec::with_capacity(self.sigma.len());
        for (i, row) in self.sigma.iter().enumerate() {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for (j, e) in row.iter().enumerate() {
                a.push(num(format!("sigma[{}][{}].scale", i + 1, j + 1), &e.scale)?);
                b.push(num(format!("sigma[{}][{}].shift", i + 1, j + 1), &e.shift)?);
            }
            scale.push(a);
            shift.push(b);
        }
        let mut p = Vec::with_capacity(self.delta_p.len());
        for (i, entry) in self.delta_p.iter().enumerate() {
            let field = format!("delta_p[{}]", i + 1);
            let poly = match entry {
                PolyEntry::Scalar(s) => BasePoly::constant(m.max(1), num(field, s)?),
                PolyEntry::Coeffs(cs) if m == 1 => {
                    let coeffs = cs
                        .iter()
                        .map(|s| num(field.clone(), s))
                        .collect::<Result<Vec<_>, _>>()?;
                    BasePoly::from_coeffs(&coeffs)
                }
                PolyEntry::Coeffs(_) => {
                    return Err(schema(format!(
                        "{field}: base_arity 2 takes a single rational"
                    )))
                }
            };
            p.push(poly);
        }
        let rows = n.saturating_sub(1);
        let c = match &self.c {
            Some(rows) => rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(k, s)| num(format!("c[{}][{}]", i + 1, i + k + 2), s))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?,
            None => (0..rows)
                .map(|i| vec![Rational::from_integer(1.into()); n - i - 1])
                .collect(),
        };
        let q = match &self.q {
            Some(rows) => rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(k, vals)| {
                            vals.iter()
                                .map(|s| num(format!("q[{}][{}]", i + 1, i + k + 2), s))
                                .collect::<Result<Vec<_>, _>>()
                        })
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?,
            None => (0..rows)
                .map(|i| vec![vec![Rational::from_integer(0.into()); n + 1]; n - i - 1])
                .collect(),
        };
        PresentationParts {
            m,
            n,
            scale,
            shift,
            p,
            c,
            q,
        }
        .build()
        .map_err(schema)
    }

    pub fn from_presentation(pres: &ExtensionPresentation) -> Self {
        let parts = pres.to_parts();
        let fmt_row = |row: &Vec<Rational>| row.iter().map(format_rational).collect::<Vec<_>>();
        PresentationDocument {
            description: None,
            base_arity: parts.m,
            generators: parts.n,
            sigma: parts
                .scale
                .iter()
                .zip(&parts.shift)
                .map(|(a, b)| {
                    a.iter()
                        .zip(b)
                        .map(|(a, b)| AffineEntry {
                            scale: format_rational(a),
                            shift: format_rational(b),
                        })
                        .collect()
                })
                .collect(),
            delta_p: parts
                .p
                .iter()
                .map(|p| {
                    if parts.m == 2 {
                        PolyEntry::Scalar(format_rational(&p.constant_term()))
                    } else {
                        PolyEntry::Coeffs(fmt_row(&p.coeffs()))
                    }
                })
                .collect(),
            c: Some(parts.c.iter().map(fmt_row).collect()),
            q: Some(
                parts
                    .q
                    .iter()
                    .map(|row| row.iter().map(fmt_row).collect())
                    .collect(),
            ),
        }
    }
}
