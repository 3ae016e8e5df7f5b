//! Instance documents (JSON): a root system, crossed simple roots per
//! component and σ, or a named fixture, or a Lee extension.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extension::{lee_report, LeeReport};
use crate::fixtures;
use crate::involution::{Involution, SignedEntry};
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::parabolic::ParabolicCRAlgebra;
use crate::report::{analyze_unchecked, AnalysisReport};
use crate::roots::{CartanType, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    #[serde(rename = "type")]
    pub cartan: CartanType,
    pub rank: usize,
}

/// A matrix entry: a JSON integer or a string such as `"-1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Int(i64),
    Text(String),
}

impl RationalText {
    pub fn value(&self) -> Result<Rational> {
        match self {
            RationalText::Int(n) => Ok(Rational::from_integer((*n).into())),
            RationalText::Text(s) => {
                parse_rational(s).ok_or_else(|| Error::Syntax(format!("'{s}' is not a rational number")))
            }
        }
    }

    pub fn from_rational(q: &Rational) -> Self {
        match q.to_integer().try_into() {
            Ok(n) if q.is_integer() => RationalText::Int(n),
            _ => RationalText::Text(format_rational(q)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SigmaSpec {
    /// `e_from ↦ sign·e_to`, basis vectors as `[component, 1-based index]`.
    SignedPermutation { entries: Vec<SignedEntry> },
    /// `rows[i][j]` is the `i`-th coordinate of `σ(e_j)` in the concatenated space.
    Matrix { rows: Vec<Vec<RationalText>> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceSpec {
    /// Overrides every other field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub components: Vec<ComponentSpec>,
    /// 1-based simple-root indices, one list per component.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub crossed: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sigma: Option<SigmaSpec>,
    /// Highest weight of a Lee extension; excludes the root-system fields.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lee_k: Option<usize>,
}

pub enum Instance {
    Parabolic(Box<ParabolicCRAlgebra>),
    LeeExtension(usize),
}

impl InstanceSpec {
    /// The document with any fixture name replaced by the fixture's fields.
    pub fn expanded(&self) -> Result<InstanceSpec> {
        match &self.fixture {
            Some(name) => Ok(fixtures::get(name)?.spec),
            None => Ok(self.clone()),
        }
    }

    pub fn resolve(&self) -> Result<Instance> {
        let spec = self.expanded()?;
        if let Some(k) = spec.lee_k {
            if !spec.components.is_empty() || !spec.crossed.is_empty() || spec.sigma.is_some() {
                return Err(Error::Syntax("lee_k excludes components, crossed and sigma".into()));
            }
            return Ok(Instance::LeeExtension(k));
        }
        let systems =
            spec.components.iter().map(|c| RootSystem::build(c.cartan, c.rank)).collect::<Result<Vec<_>>>()?;
        let rs = Arc::new(RootSystem::direct_sum(&systems)?);
        if spec.crossed.len() != spec.components.len() {
            return Err(Error::Syntax(format!(
                "crossed has {} entries for {} components",
                spec.crossed.len(),
                spec.components.len()
            )));
        }
        let phi = ParabolicCRAlgebra::crossed(&rs, &spec.crossed)?;
        let sigma = match &spec.sigma {
            None => return Err(Error::Syntax("missing field 'sigma'".into())),
            Some(SigmaSpec::SignedPermutation { entries }) => Involution::from_signed_permutation(&rs, entries)?,
            Some(SigmaSpec::Matrix { rows }) => {
                let m = rows
                    .iter()
                    .map(|r| r.iter().map(RationalText::value).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Involution::from_matrix(&rs, m)?
            }
        };
        Ok(Instance::Parabolic(Box::new(ParabolicCRAlgebra::build(rs, &phi, sigma)?)))
    }
}

/// Parses and validates an instance document.
pub fn parse_instance(text: &str) -> Result<InstanceSpec> {
    let spec: InstanceSpec = serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    spec.resolve()?;
    Ok(spec)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Parabolic(AnalysisReport),
    LeeExtension(LeeReport),
}

impl Report {
    pub fn failed_checks(&self) -> Vec<&str> {
        match self {
            Report::Parabolic(r) => r.failed_checks(),
            Report::LeeExtension(r) => r.failed_checks(),
        }
    }
}

/// Machine-readable output: the expanded instance followed by its report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Output {
    #[serde(flatten)]
    pub instance: InstanceSpec,
    pub report: Report,
}

/// Full analysis; failed cross-checks are recorded in the report, not raised.
pub fn analyze_spec(spec: &InstanceSpec) -> Result<Output> {
    let mut instance = spec.expanded()?;
    if let Some(name) = &spec.fixture {
        instance.fixture = Some(name.clone());
    }
    let report = match spec.resolve()? {
        Instance::Parabolic(p) => Report::Parabolic(analyze_unchecked(&p)),
        Instance::LeeExtension(k) => Report::LeeExtension(lee_report(k)?),
    };
    Ok(Output { instance, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::Order;

    const SU13: &str = r#"{
        "components": [{"type": "A", "rank": 3}],
        "crossed": [[2]],
        "sigma": {"kind": "signed_permutation", "entries": [
            {"from": [0, 1], "to": [0, 4], "sign": -1},
            {"from": [0, 2], "to": [0, 2], "sign": -1},
            {"from": [0, 3], "to": [0, 3], "sign": -1},
            {"from": [0, 4], "to": [0, 1], "sign": -1}
        ]}
    }"#;

    #[test]
    fn parses_signed_permutation() {
        let spec = parse_instance(SU13).unwrap();
        let out = analyze_spec(&spec).unwrap();
        let Report::Parabolic(r) = out.report else { panic!() };
        assert_eq!(r.levi_order, Order::Finite(2));
        assert_eq!((r.cr_dim, r.cr_codim), (3, 1));
    }

    #[test]
    fn matrix_form_matches() {
        let m = r#"{
            "components": [{"type": "A", "rank": 3}],
            "crossed": [[2]],
            "sigma": {"kind": "matrix", "rows": [
                [0, 0, 0, -1], [0, -1, 0, 0], [0, 0, "-2/2", 0], [-1, 0, 0, 0]
            ]}
        }"#;
        let a = analyze_spec(&parse_instance(m).unwrap()).unwrap();
        let b = analyze_spec(&parse_instance(SU13).unwrap()).unwrap();
        assert_eq!(a.report, b.report);
    }

    #[test]
    fn errors() {
        let bad_index = SU13.replace("[[2]]", "[[9]]");
        assert!(matches!(parse_instance(&bad_index), Err(Error::IndexOutOfRange(_))));
        assert!(matches!(parse_instance("{\"components\": ["), Err(Error::Syntax(_))));
        assert!(matches!(parse_instance(r#"{"fixture": "nope"}"#), Err(Error::UnknownFixture(_))));
        assert!(matches!(parse_instance(r#"{"colour": 1}"#), Err(Error::Syntax(_))));
        let cyclic = SU13.replace(r#""from": [0, 4], "to": [0, 1]"#, r#""from": [0, 4], "to": [0, 4]"#);
        assert!(parse_instance(&cyclic).unwrap_err().is_invalid_involution());
    }

    #[test]
    fn round_trip() {
        let spec = parse_instance(SU13).unwrap();
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(parse_instance(&text).unwrap(), spec);
    }

    #[test]
    fn lee_instance() {
        let out = analyze_spec(&parse_instance(r#"{"lee_k": 4}"#).unwrap()).unwrap();
        let Report::LeeExtension(r) = out.report else { panic!() };
        assert_eq!(r.levi_order, Order::Finite(2));
        assert!(parse_instance(r#"{"lee_k": 4, "crossed": [[1]]}"#).is_err());
    }
}
