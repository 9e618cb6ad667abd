//! JSON wire formats for polynomials and points.
//!
//! Coefficients and coordinates travel as decimal strings (`"3"`, `"-1/2"`,
//! `"0.25"`) so no precision is lost. Terms are written leading term first.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point;
use crate::poly::{Coeff, Monomial, Polynomial, VarSpec};

/// Parses `"a"`, `"a/b"` or a finite decimal such as `"-0.125"`.
pub fn parse_coeff(s: &str) -> Result<Coeff> {
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
        let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(Coeff::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_part = if int.is_empty() || int == "-" || int == "+" {
            BigInt::zero()
        } else {
            BigInt::from_str(int).map_err(|_| bad())?
        };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let frac_part = BigInt::from_str(frac).map_err(|_| bad())?;
        let mut num = int_part.abs() * &scale + frac_part;
        if neg {
            num = -num;
        }
        return Ok(Coeff::new(num, scale));
    }
    Ok(Coeff::from_integer(BigInt::from_str(s).map_err(|_| bad())?))
}

/// Display names of the two variable blocks, e.g. `h` / `h'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockNames {
    pub x: String,
    pub y: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub x: Vec<i32>,
    pub y: Vec<i32>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub m: usize,
    pub n: usize,
    pub laurent: bool,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<BlockNames>,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        let VarSpec { m, n, laurent } = p.spec();
        let terms = p
            .terms()
            .rev()
            .map(|(mon, c)| {
                let (x, y) = mon.exps().split_at(m);
                TermJson { c: c.to_string(), x: x.to_vec(), y: y.to_vec() }
            })
            .collect();
        PolynomialJson { m, n, laurent, terms, names: None }
    }
}

impl From<Polynomial> for PolynomialJson {
    fn from(p: Polynomial) -> Self {
        PolynomialJson::from(&p)
    }
}

impl TryFrom<PolynomialJson> for Polynomial {
    type Error = Error;

    fn try_from(j: PolynomialJson) -> Result<Self> {
        let spec = VarSpec::new(j.m, j.n, j.laurent);
        let terms = j
            .terms
            .into_iter()
            .map(|t| {
                if t.x.len() != j.m || t.y.len() != j.n {
                    return Err(Error::Parse(format!(
                        "term exponent lengths ({}, {}) do not match ({}, {})",
                        t.x.len(),
                        t.y.len(),
                        j.m,
                        j.n
                    )));
                }
                Ok((Monomial::from_blocks(&t.x, &t.y), parse_coeff(&t.c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(spec, terms).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl PolynomialJson {
    pub fn with_names(mut self, x: &str, y: &str) -> Self {
        self.names = Some(BlockNames { x: x.into(), y: y.into() });
        self
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PointJson {
    pub x: Vec<String>,
    pub y: Vec<String>,
    #[serde(default)]
    pub multiplicative: bool,
}

impl From<&Point> for PointJson {
    fn from(p: &Point) -> Self {
        PointJson {
            x: p.x().iter().map(|c| c.to_string()).collect(),
            y: p.y().iter().map(|c| c.to_string()).collect(),
            multiplicative: p.is_multiplicative(),
        }
    }
}

impl From<Point> for PointJson {
    fn from(p: Point) -> Self {
        PointJson::from(&p)
    }
}

impl TryFrom<PointJson> for Point {
    type Error = Error;

    fn try_from(j: PointJson) -> Result<Self> {
        let parse = |v: &[String]| v.iter().map(|s| parse_coeff(s)).collect::<Result<Vec<_>>>();
        Point::new(parse(&j.x)?, parse(&j.y)?, j.multiplicative).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolynomialJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolynomialJson::deserialize(d)?;
        Polynomial::try_from(j).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Point {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PointJson::deserialize(d)?;
        Point::try_from(j).map_err(serde::de::Error::custom)
    }
}
