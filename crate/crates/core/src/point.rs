use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Coeff;

/// A point of `k^{m|n}` (additive, case S) or of the torus `k^{*m|n}`
/// (multiplicative, case L) with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    x: Vec<Coeff>,
    y: Vec<Coeff>,
    multiplicative: bool,
}

impl Point {
    pub fn new(x: Vec<Coeff>, y: Vec<Coeff>, multiplicative: bool) -> Result<Self> {
        if multiplicative && x.iter().chain(y.iter()).any(|c| *c == Coeff::from_integer(0.into())) {
            return Err(Error::ZeroCoordinate);
        }
        Ok(Point { x, y, multiplicative })
    }

    /// Additive point from integer coordinates.
    pub fn additive_ints(x: &[i64], y: &[i64]) -> Self {
        Point {
            x: x.iter().map(|&v| Coeff::from_integer(v.into())).collect(),
            y: y.iter().map(|&v| Coeff::from_integer(v.into())).collect(),
            multiplicative: false,
        }
    }

    /// Multiplicative point from integer coordinates.
    pub fn multiplicative_ints(x: &[i64], y: &[i64]) -> Result<Self> {
        Point::new(
            x.iter().map(|&v| Coeff::from_integer(v.into())).collect(),
            y.iter().map(|&v| Coeff::from_integer(v.into())).collect(),
            true,
        )
    }

    pub fn x(&self) -> &[Coeff] {
        &self.x
    }

    pub fn y(&self) -> &[Coeff] {
        &self.y
    }

    pub fn m(&self) -> usize {
        self.x.len()
    }

    pub fn n(&self) -> usize {
        self.y.len()
    }

    pub fn is_multiplicative(&self) -> bool {
        self.multiplicative
    }

    /// Same coordinates with the blocks permuted: coordinate `i` moves to
    /// slot `xperm[i]` (resp. `yperm[j]`).
    pub(crate) fn permuted(&self, xperm: &[usize], yperm: &[usize]) -> Point {
        let mut x = self.x.clone();
        for (i, &t) in xperm.iter().enumerate() {
            x[t] = self.x[i].clone();
        }
        let mut y = self.y.clone();
        for (j, &t) in yperm.iter().enumerate() {
            y[t] = self.y[j].clone();
        }
        Point { x, y, multiplicative: self.multiplicative }
    }

    pub(crate) fn with_coords(&self, x: Vec<Coeff>, y: Vec<Coeff>) -> Point {
        Point { x, y, multiplicative: self.multiplicative }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Coeff]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.x), join(&self.y))
    }
}
