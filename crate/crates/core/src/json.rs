//! JSON records shared by the CLI and downstream consumers.
//!
//! Polynomial coefficients and roots are JSON numbers when they fit in 64
//! bits and decimal strings otherwise. Inequality sides, radii and chain
//! counts are always decimal strings.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::bounds::{BoundCertificate, ChainBound, ClosedChainBound};
use crate::chains::ChainCount;
use crate::enumeration::{EnumerationResult, Solution, TightnessEntry};
use crate::inequalities::CheckReport;
use crate::poly::{IntPolynomial, RootMultiset};
use crate::verify::SweepReport;

/// An exact integer serialized as a number inside `i64` range, else a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub BigInt);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for JsonInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(JsonInt(BigInt::from(v))),
            Raw::Str(s) => s.parse().map(JsonInt).map_err(serde::de::Error::custom),
        }
    }
}

fn ints(values: &[BigInt]) -> Vec<JsonInt> {
    values.iter().cloned().map(JsonInt).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: usize,
    pub coeffs: Vec<JsonInt>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub roots: Option<Vec<JsonInt>>,
}

impl PolynomialJson {
    pub fn new(poly: &IntPolynomial, roots: Option<&RootMultiset>) -> Self {
        Self {
            degree: poly.degree(),
            coeffs: ints(poly.coeffs()),
            roots: roots.map(|r| ints(r.roots())),
        }
    }
}

impl From<&Solution> for PolynomialJson {
    fn from(s: &Solution) -> Self {
        Self::new(&s.poly, Some(&s.roots))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub name: &'static str,
    pub index: usize,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReportJson {
    pub checks: Vec<VerdictJson>,
}

impl From<&CheckReport> for CheckReportJson {
    fn from(r: &CheckReport) -> Self {
        Self {
            checks: r
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    name: v.name.as_str(),
                    index: v.index,
                    pass: v.pass,
                    lhs: v.lhs.to_string(),
                    rhs: v.rhs.to_string(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    /// Decimal radius or `"infeasible"`.
    pub radius: String,
    pub method: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_squared: Option<String>,
}

impl From<&BoundCertificate> for BoundJson {
    fn from(c: &BoundCertificate) -> Self {
        Self {
            radius: c.radius.to_string(),
            method: c.method.as_str(),
            alpha_squared: c.alpha.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationJson {
    pub status: &'static str,
    pub radius: String,
    pub method: &'static str,
    pub nodes: u64,
    pub solutions: Vec<PolynomialJson>,
}

impl From<&EnumerationResult> for EnumerationJson {
    fn from(r: &EnumerationResult) -> Self {
        Self {
            status: r.status.as_str(),
            radius: r.certificate.radius.to_string(),
            method: r.certificate.method.as_str(),
            nodes: r.nodes_visited,
            solutions: r.solutions.iter().map(PolynomialJson::from).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainJson {
    pub n: u32,
    pub good: String,
    pub total: String,
    pub ratio: f64,
}

impl From<&ChainCount> for ChainJson {
    fn from(c: &ChainCount) -> Self {
        Self {
            n: c.n,
            good: c.good.to_string(),
            total: c.total.to_string(),
            ratio: c.ratio(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainBoundJson {
    pub t: usize,
    pub k_product: String,
    /// Closed-form bound, as an integer or `2^(e/4)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_closed: Option<String>,
}

impl ChainBoundJson {
    pub fn new(product: &ChainBound, closed: Option<&ClosedChainBound>) -> Self {
        Self {
            t: product.t,
            k_product: product.value.to_string(),
            k_closed: closed.map(ToString::to_string),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TightnessJson {
    pub roots: Vec<JsonInt>,
    pub coeffs: Vec<JsonInt>,
    pub ratio_squared: String,
}

impl From<&TightnessEntry> for TightnessJson {
    fn from(e: &TightnessEntry) -> Self {
        Self {
            roots: ints(e.roots.roots()),
            coeffs: ints(e.poly.coeffs()),
            ratio_squared: e.ratio_squared.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleJson {
    pub check: String,
    pub index: usize,
    pub lhs: String,
    pub rhs: String,
    pub polynomial: PolynomialJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTallyJson {
    pub name: String,
    pub evaluated: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepJson {
    pub n_max: usize,
    pub radius: u64,
    pub polynomials: u64,
    pub checks: u64,
    pub violations: u64,
    pub per_check: Vec<CheckTallyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<CounterexampleJson>,
}

impl From<&SweepReport> for SweepJson {
    fn from(r: &SweepReport) -> Self {
        Self {
            n_max: r.n_max,
            radius: r.radius,
            polynomials: r.polynomials,
            checks: r.checks(),
            violations: r.violations(),
            per_check: r
                .per_check
                .iter()
                .map(|(name, t)| CheckTallyJson {
                    name: name.clone(),
                    evaluated: t.evaluated,
                    violations: t.violations,
                })
                .collect(),
            counterexample: r.first_counterexample.as_ref().map(|c| CounterexampleJson {
                check: c.check.clone(),
                index: c.index,
                lhs: c.lhs.to_string(),
                rhs: c.rhs.to_string(),
                polynomial: PolynomialJson::new(&c.poly, Some(&c.roots)),
            }),
        }
    }
}
