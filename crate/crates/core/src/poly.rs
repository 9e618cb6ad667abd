//! Sparse exact multivariate (optionally Laurent) polynomials over the
//! rationals in two blocks of variables `x_1..x_m` and `y_1..y_n`.
//!
//! Variables are addressed 0-based through [`Var`]. Terms are kept in a
//! `BTreeMap` ordered graded-lexicographically with the x-block before the
//! y-block, so the last entry is the leading term.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::point::Point;

/// Exact rational coefficient.
pub type Coeff = BigRational;

/// Largest block on which [`Polynomial::alternate`] enumerates the full
/// symmetric group.
pub const MAX_ALTERNATION_BLOCK: usize = 8;

pub fn coeff(v: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Coeff {
    Coeff::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integral(c: &Coeff) -> bool {
    c.is_integer()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    X,
    Y,
}

/// A variable, 0-based within its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X(usize),
    Y(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VarSpec {
    pub m: usize,
    pub n: usize,
    pub laurent: bool,
}

impl VarSpec {
    pub fn new(m: usize, n: usize, laurent: bool) -> Self {
        VarSpec { m, n, laurent }
    }

    pub fn polynomial(m: usize, n: usize) -> Self {
        VarSpec::new(m, n, false)
    }

    pub fn laurent(m: usize, n: usize) -> Self {
        VarSpec::new(m, n, true)
    }

    pub fn nvars(&self) -> usize {
        self.m + self.n
    }

    pub fn block_len(&self, block: Block) -> usize {
        match block {
            Block::X => self.m,
            Block::Y => self.n,
        }
    }

    /// Position of `var` in a monomial's exponent vector.
    pub fn index(&self, var: Var) -> Result<usize> {
        match var {
            Var::X(i) if i < self.m => Ok(i),
            Var::Y(j) if j < self.n => Ok(self.m + j),
            _ => Err(Error::IndexOutOfRange(format!("{var:?} in ({}, {})", self.m, self.n))),
        }
    }

    pub fn var_at(&self, idx: usize) -> Var {
        if idx < self.m {
            Var::X(idx)
        } else {
            Var::Y(idx - self.m)
        }
    }
}

impl fmt::Display for VarSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{}{})", self.m, self.n, if self.laurent { ", laurent" } else { "" })
    }
}

/// Exponent vector: x-block followed by y-block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn new(exps: Vec<i32>) -> Self {
        Monomial(exps)
    }

    pub fn from_blocks(x: &[i32], y: &[i32]) -> Self {
        Monomial(x.iter().chain(y).copied().collect())
    }

    pub fn exps(&self) -> &[i32] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// Image under the block permutations: exponent at `i` moves to `perm[i]`.
    fn permuted(&self, m: usize, xperm: &[usize], yperm: &[usize]) -> Monomial {
        let mut out = self.0.clone();
        for (i, &t) in xperm.iter().enumerate() {
            out[t] = self.0[i];
        }
        for (j, &t) in yperm.iter().enumerate() {
            out[m + t] = self.0[m + j];
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Permutations of the two blocks; `xperm[i]` is the image of `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    xperm: Vec<usize>,
    yperm: Vec<usize>,
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

impl GroupElement {
    pub fn new(xperm: Vec<usize>, yperm: Vec<usize>) -> Result<Self> {
        if !is_permutation(&xperm) || !is_permutation(&yperm) {
            return Err(Error::InvalidArgument("not a permutation".into()));
        }
        Ok(GroupElement { xperm, yperm })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        GroupElement { xperm: (0..m).collect(), yperm: (0..n).collect() }
    }

    /// Adjacent transposition swapping positions `i` and `i + 1` of `block`.
    pub fn transposition(m: usize, n: usize, block: Block, i: usize) -> Self {
        let mut g = GroupElement::identity(m, n);
        let p = match block {
            Block::X => &mut g.xperm,
            Block::Y => &mut g.yperm,
        };
        p.swap(i, i + 1);
        g
    }

    pub fn xperm(&self) -> &[usize] {
        &self.xperm
    }

    pub fn yperm(&self) -> &[usize] {
        &self.yperm
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            xperm: other.xperm.iter().map(|&i| self.xperm[i]).collect(),
            yperm: other.yperm.iter().map(|&j| self.yperm[j]).collect(),
        }
    }
}

/// All permutations of `0..k` paired with their signs (Heap's algorithm).
pub fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut sign = 1i8;
    let mut out = vec![(perm.clone(), sign)];
    let mut c = vec![0usize; k];
    let mut i = 1;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            out.push((perm.clone(), sign));
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Value bound to a variable by [`Polynomial::substitute`].
#[derive(Clone, Debug)]
pub enum Binding {
    Scalar(Coeff),
    Poly(Polynomial),
}

impl From<Coeff> for Binding {
    fn from(c: Coeff) -> Self {
        Binding::Scalar(c)
    }
}

impl From<Polynomial> for Binding {
    fn from(p: Polynomial) -> Self {
        Binding::Poly(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    spec: VarSpec,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(spec: VarSpec) -> Self {
        Polynomial { spec, terms: BTreeMap::new() }
    }

    pub fn one(spec: VarSpec) -> Self {
        Polynomial::constant(spec, Coeff::one())
    }

    pub fn constant(spec: VarSpec, c: Coeff) -> Self {
        let mut p = Polynomial::zero(spec);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(spec.nvars()), c);
        }
        p
    }

    pub fn var(spec: VarSpec, var: Var) -> Result<Self> {
        let idx = spec.index(var)?;
        let mut e = vec![0; spec.nvars()];
        e[idx] = 1;
        Ok(Polynomial { spec, terms: BTreeMap::from([(Monomial(e), Coeff::one())]) })
    }

    /// `c · x^xexp · y^yexp`.
    pub fn monomial(spec: VarSpec, c: Coeff, xexp: &[i32], yexp: &[i32]) -> Result<Self> {
        Polynomial::from_terms(spec, [(Monomial::from_blocks(xexp, yexp), c)])
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials and dropping zeros.
    pub fn from_terms<I>(spec: VarSpec, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Coeff)>,
    {
        let mut p = Polynomial::zero(spec);
        for (mon, c) in terms {
            if mon.0.len() != spec.nvars() {
                return Err(Error::InvalidArgument(format!(
                    "monomial of length {} in spec {spec}",
                    mon.0.len()
                )));
            }
            if !spec.laurent && !mon.is_nonnegative() {
                return Err(Error::NegativeExponent);
            }
            p.add_term(mon, c);
        }
        Ok(p)
    }

    fn from_map_unchecked(spec: VarSpec, terms: BTreeMap<Monomial, Coeff>) -> Self {
        Polynomial { spec, terms }
    }

    fn add_term(&mut self, mon: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mon) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn spec(&self) -> VarSpec {
        self.spec
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coeff)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, mon: &Monomial) -> Coeff {
        self.terms.get(mon).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.last_key_value()
    }

    /// Constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<Coeff> {
        match self.terms.len() {
            0 => Some(Coeff::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value().unwrap();
                m.0.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous components keyed by total degree.
    pub fn homogeneous_components(&self) -> BTreeMap<i64, Polynomial> {
        let mut out: BTreeMap<i64, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| Polynomial::zero(self.spec))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(is_integral)
    }

    pub fn depends_on(&self, var: Var) -> Result<bool> {
        let idx = self.spec.index(var)?;
        Ok(self.terms.keys().any(|m| m.0[idx] != 0))
    }

    fn check_spec(&self, other: &Polynomial) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch(self.spec.to_string(), other.spec.to_string()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_spec(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_spec(other)?;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial::from_map_unchecked(self.spec, terms))
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.spec);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        Polynomial::from_map_unchecked(self.spec, terms)
    }

    /// Multiplies by the monomial with exponent vector `shift`.
    pub fn shift(&self, shift: &Monomial) -> Result<Polynomial> {
        let terms = self.terms.iter().map(|(m, c)| (m.mul(shift), c.clone()));
        Polynomial::from_terms(self.spec, terms)
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Polynomial::one(self.spec);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Same terms in a spec with the Laurent flag set.
    pub fn to_laurent(&self) -> Polynomial {
        let spec = VarSpec { laurent: true, ..self.spec };
        Polynomial::from_map_unchecked(spec, self.terms.clone())
    }

    /// Same terms in the non-Laurent spec; fails on negative exponents.
    pub fn to_polynomial(&self) -> Result<Polynomial> {
        if self.terms.keys().any(|m| !m.is_nonnegative()) {
            return Err(Error::NegativeExponent);
        }
        let spec = VarSpec { laurent: false, ..self.spec };
        Ok(Polynomial::from_map_unchecked(spec, self.terms.clone()))
    }

    /// Re-homes the polynomial in a spec with `extra_x` and `extra_y`
    /// additional trailing variables.
    pub fn extend(&self, extra_x: usize, extra_y: usize) -> Polynomial {
        let (m, n) = (self.spec.m, self.spec.n);
        let spec = VarSpec { m: m + extra_x, n: n + extra_y, laurent: self.spec.laurent };
        let terms = self
            .terms
            .iter()
            .map(|(mon, c)| {
                let mut e = mon.0[..m].to_vec();
                e.extend(std::iter::repeat_n(0, extra_x));
                e.extend_from_slice(&mon.0[m..]);
                e.extend(std::iter::repeat_n(0, extra_y));
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial::from_map_unchecked(spec, terms)
    }

    /// Removes the listed variables from the variable spec. Fails with
    /// [`Error::ResidualDependence`] if any of them still occurs.
    pub fn drop_vars(&self, vars: &[Var]) -> Result<Polynomial> {
        let mut drop = vec![false; self.spec.nvars()];
        for &v in vars {
            drop[self.spec.index(v)?] = true;
        }
        let m = (0..self.spec.m).filter(|&i| !drop[i]).count();
        let n = self.spec.nvars() - m - drop.iter().filter(|&&d| d).count();
        let spec = VarSpec { m, n, laurent: self.spec.laurent };
        let mut terms = BTreeMap::new();
        for (mon, c) in &self.terms {
            if mon.0.iter().zip(&drop).any(|(&e, &d)| d && e != 0) {
                return Err(Error::ResidualDependence);
            }
            let e = mon.0.iter().zip(&drop).filter(|(_, &d)| !d).map(|(&e, _)| e).collect();
            terms.insert(Monomial(e), c.clone());
        }
        Ok(Polynomial::from_map_unchecked(spec, terms))
    }

    /// Simultaneous substitution of the bound variables. Unbound variables
    /// are untouched and the variable spec is unchanged; use [`Polynomial::drop_vars`]
    /// to shrink it afterwards.
    pub fn substitute(&self, bindings: &[(Var, Binding)]) -> Result<Polynomial> {
        let mut bound: Vec<Option<&Binding>> = vec![None; self.spec.nvars()];
        for (v, b) in bindings {
            if let Binding::Poly(q) = b {
                self.check_spec(q)?;
            }
            bound[self.spec.index(*v)?] = Some(b);
        }
        let mut powers: HashMap<(usize, i32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero(self.spec);
        for (mon, c) in &self.terms {
            let mut rest = mon.0.clone();
            let mut scalar = c.clone();
            let mut factor: Option<Polynomial> = None;
            for (idx, b) in bound.iter().enumerate() {
                let Some(b) = b else { continue };
                let e = mon.0[idx];
                rest[idx] = 0;
                if e == 0 {
                    continue;
                }
                match b {
                    Binding::Scalar(s) => {
                        if e < 0 && s.is_zero() {
                            return Err(Error::NonUnitBinding(format!("{:?} = 0", self.spec.var_at(idx))));
                        }
                        scalar *= s.pow(e);
                    }
                    Binding::Poly(q) => {
                        let pw = match powers.get(&(idx, e)) {
                            Some(p) => p.clone(),
                            None => {
                                let p = poly_power(q, e, self.spec.var_at(idx))?;
                                powers.insert((idx, e), p.clone());
                                p
                            }
                        };
                        factor = Some(match factor {
                            None => pw,
                            Some(f) => &f * &pw,
                        });
                    }
                }
                if scalar.is_zero() {
                    break;
                }
            }
            if scalar.is_zero() {
                continue;
            }
            let base = Polynomial::from_map_unchecked(self.spec, BTreeMap::from([(Monomial(rest), scalar)]));
            let term = match factor {
                None => base,
                Some(f) => &base * &f,
            };
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn partial_derivative(&self, var: Var) -> Result<Polynomial> {
        let idx = self.spec.index(var)?;
        let mut out = Polynomial::zero(self.spec);
        for (mon, c) in &self.terms {
            let e = mon.0[idx];
            if e == 0 {
                continue;
            }
            let mut d = mon.0.clone();
            d[idx] -= 1;
            out.add_term(Monomial(d), c * coeff(e as i64));
        }
        Ok(out)
    }

    /// `x_i ∂p/∂x_i + y_j ∂p/∂y_j` (0-based `i`, `j`).
    pub fn laurent_derivative(&self, i: usize, j: usize) -> Result<Polynomial> {
        let xi = self.spec.index(Var::X(i))?;
        let yj = self.spec.index(Var::Y(j))?;
        let mut out = Polynomial::zero(self.spec);
        for (mon, c) in &self.terms {
            let w = mon.0[xi] as i64 + mon.0[yj] as i64;
            out.add_term(mon.clone(), c * coeff(w));
        }
        Ok(out)
    }

    /// Exact quotient `p / d`, or [`Error::NotDivisible`].
    ///
    /// In Laurent mode both operands are first multiplied by monomial units
    /// so that every variable has minimum exponent zero; divisibility in the
    /// Laurent ring is then divisibility of the normalized polynomials.
    pub fn divide_exact(&self, d: &Polynomial) -> Result<Polynomial> {
        self.check_spec(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero(self.spec));
        }
        if !self.spec.laurent {
            return divide_nonnegative(&self.terms, &d.terms)
                .map(|t| Polynomial::from_map_unchecked(self.spec, t))
                .ok_or(Error::NotDivisible);
        }
        let pmin = self.min_exponents();
        let dmin = d.min_exponents();
        let pn: BTreeMap<_, _> = self.terms.iter().map(|(m, c)| (m.div(&pmin), c.clone())).collect();
        let dn: BTreeMap<_, _> = d.terms.iter().map(|(m, c)| (m.div(&dmin), c.clone())).collect();
        let q = divide_nonnegative(&pn, &dn).ok_or(Error::NotDivisible)?;
        let unit = pmin.div(&dmin);
        let terms = q.into_iter().map(|(m, c)| (m.mul(&unit), c)).collect();
        Ok(Polynomial::from_map_unchecked(self.spec, terms))
    }

    fn min_exponents(&self) -> Monomial {
        let mut min = vec![i32::MAX; self.spec.nvars()];
        for m in self.terms.keys() {
            for (a, &e) in min.iter_mut().zip(&m.0) {
                *a = (*a).min(e);
            }
        }
        if self.terms.is_empty() {
            min.fill(0);
        }
        Monomial(min)
    }

    /// Exact value at `pt`.
    pub fn evaluate(&self, pt: &Point) -> Result<Coeff> {
        self.evaluate_at(pt.x(), pt.y())
    }

    pub fn evaluate_at(&self, x: &[Coeff], y: &[Coeff]) -> Result<Coeff> {
        if x.len() != self.spec.m || y.len() != self.spec.n {
            return Err(Error::ShapeMismatch(self.spec.m, self.spec.n));
        }
        let vals: Vec<&Coeff> = x.iter().chain(y).collect();
        if self.spec.laurent && vals.iter().any(|v| v.is_zero()) {
            return Err(Error::ZeroCoordinate);
        }
        let mut total = Coeff::zero();
        for (mon, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in vals.iter().zip(&mon.0) {
                if e != 0 {
                    t *= v.pow(e);
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub fn apply_group(&self, w: &GroupElement) -> Result<Polynomial> {
        if w.xperm.len() != self.spec.m || w.yperm.len() != self.spec.n {
            return Err(Error::GroupSize(self.spec.m, self.spec.n));
        }
        let terms = self
            .terms
            .iter()
            .map(|(mon, c)| (mon.permuted(self.spec.m, &w.xperm, &w.yperm), c.clone()))
            .collect();
        Ok(Polynomial::from_map_unchecked(self.spec, terms))
    }

    /// Invariance under the adjacent transpositions of both blocks.
    pub fn is_w_invariant(&self) -> bool {
        let VarSpec { m, n, .. } = self.spec;
        let gens = (0..m.saturating_sub(1))
            .map(|i| GroupElement::transposition(m, n, Block::X, i))
            .chain((0..n.saturating_sub(1)).map(|j| GroupElement::transposition(m, n, Block::Y, j)));
        for g in gens {
            if self.apply_group(&g).expect("sizes match") != *self {
                return false;
            }
        }
        true
    }

    /// Signed orbit sum `Σ_σ sign(σ) σ(p)` over the symmetric group of `block`.
    pub fn alternate(&self, block: Block) -> Result<Polynomial> {
        self.orbit_sum(block, true)
    }

    /// Unsigned orbit sum `Σ_σ σ(p)` over the symmetric group of `block`.
    pub fn symmetrize(&self, block: Block) -> Result<Polynomial> {
        self.orbit_sum(block, false)
    }

    fn orbit_sum(&self, block: Block, signed: bool) -> Result<Polynomial> {
        let VarSpec { m, n, .. } = self.spec;
        let k = self.spec.block_len(block);
        if k > MAX_ALTERNATION_BLOCK {
            return Err(Error::GroupTooLarge(k, MAX_ALTERNATION_BLOCK));
        }
        let perms = signed_permutations(k);
        let ident_x: Vec<usize> = (0..m).collect();
        let ident_y: Vec<usize> = (0..n).collect();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (mon, c) in &self.terms {
            for (perm, sign) in &perms {
                let image = match block {
                    Block::X => mon.permuted(m, perm, &ident_y),
                    Block::Y => mon.permuted(m, &ident_x, perm),
                };
                let entry = acc.entry(image).or_insert_with(Coeff::zero);
                if signed && *sign < 0 {
                    *entry -= c;
                } else {
                    *entry += c;
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial::from_map_unchecked(self.spec, terms))
    }
}

fn poly_power(q: &Polynomial, e: i32, var: Var) -> Result<Polynomial> {
    if e >= 0 {
        return Ok(q.pow(e as u32));
    }
    // Inverting a binding is only possible for a unit, i.e. a single term.
    if q.terms.len() != 1 {
        return Err(Error::NonUnitBinding(format!("{var:?} bound to a non-monomial")));
    }
    let (mon, c) = q.terms.first_key_value().unwrap();
    let inv_mon = Monomial(mon.0.iter().map(|&x| x * e).collect());
    let inv_c = c.pow(e);
    Polynomial::from_terms(q.spec, [(inv_mon, inv_c)])
}

/// Multivariate exact division for polynomials with nonnegative exponents.
/// Returns `None` as soon as the remainder's leading monomial is not
/// divisible by the divisor's.
fn divide_nonnegative(
    p: &BTreeMap<Monomial, Coeff>,
    d: &BTreeMap<Monomial, Coeff>,
) -> Option<BTreeMap<Monomial, Coeff>> {
    let (dlm, dlc) = d.last_key_value()?;
    let mut rem = p.clone();
    let mut quot = BTreeMap::new();
    while let Some((lm, lc)) = rem.last_key_value() {
        if !lm.divisible_by(dlm) {
            return None;
        }
        let qm = lm.div(dlm);
        let qc = lc / dlc;
        for (dm, dc) in d {
            let m = qm.mul(dm);
            let delta = &qc * dc;
            let slot = rem.entry(m.clone()).or_insert_with(Coeff::zero);
            *slot -= delta;
            if slot.is_zero() {
                rem.remove(&m);
            }
        }
        quot.insert(qm, qc);
    }
    Some(quot)
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$call(rhs).expect("polynomial spec mismatch")
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$call(&rhs).expect("polynomial spec mismatch")
            }
        }
        impl $trait<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$call(rhs).expect("polynomial spec mismatch")
            }
        }
        impl $trait<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$call(&rhs).expect("polynomial spec mismatch")
            }
        }
    };
}

impl_binop!(Add, add, try_add);
impl_binop!(Sub, sub, try_sub);
impl_binop!(Mul, mul, try_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Coeff::one())
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

fn fmt_coeff_prefix(c: &Coeff, has_vars: bool, first: bool, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
        (true, false) => {}
    }
    if !has_vars {
        write!(f, "{abs}")
    } else if abs.is_one() {
        Ok(())
    } else if abs.denom().is_one() {
        write!(f, "{abs}*")
    } else {
        write!(f, "({abs})*")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mon, c)) in self.terms.iter().rev().enumerate() {
            let vars: Vec<String> = mon
                .0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(idx, &e)| {
                    let name = match self.spec.var_at(idx) {
                        Var::X(i) => format!("x{}", i + 1),
                        Var::Y(j) => format!("y{}", j + 1),
                    };
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            fmt_coeff_prefix(c, !vars.is_empty(), k == 0, f)?;
            write!(f, "{}", vars.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s11() -> VarSpec {
        VarSpec::polynomial(1, 1)
    }

    fn x(spec: VarSpec, i: usize) -> Polynomial {
        Polynomial::var(spec, Var::X(i)).unwrap()
    }

    fn y(spec: VarSpec, j: usize) -> Polynomial {
        Polynomial::var(spec, Var::Y(j)).unwrap()
    }

    fn c(spec: VarSpec, v: i64) -> Polynomial {
        Polynomial::constant(spec, coeff(v))
    }

    fn mono(spec: VarSpec, k: i64, xe: &[i32], ye: &[i32]) -> Polynomial {
        Polynomial::monomial(spec, coeff(k), xe, ye).unwrap()
    }

    #[test]
    fn add_examples() {
        let s = s11();
        assert_eq!((x(s, 0) + y(s, 0)).len(), 2);
        assert!((x(s, 0) + -x(s, 0)).is_zero());
        let lhs = mono(s, 1, &[2], &[0]) + mono(s, 1, &[1], &[1]);
        let rhs = mono(s, 1, &[1], &[1]) + mono(s, 1, &[0], &[2]);
        let expected = mono(s, 1, &[2], &[0]) + mono(s, 2, &[1], &[1]) + mono(s, 1, &[0], &[2]);
        assert_eq!(lhs + rhs, expected);
    }

    #[test]
    fn spec_mismatch_is_an_error() {
        let a = x(VarSpec::polynomial(1, 1), 0);
        let b = x(VarSpec::polynomial(2, 1), 0);
        assert!(matches!(a.try_add(&b), Err(Error::SpecMismatch(..))));
        assert!(matches!(a.try_mul(&b), Err(Error::SpecMismatch(..))));
    }

    #[test]
    fn mul_examples() {
        let s = s11();
        let p = (x(s, 0) + y(s, 0)) * (x(s, 0) - y(s, 0));
        assert_eq!(p, mono(s, 1, &[2], &[0]) - mono(s, 1, &[0], &[2]));
        let q = x(s, 0) + c(s, 3);
        assert_eq!(&q * &Polynomial::one(s), q);

        let l = VarSpec::laurent(1, 1);
        let f = c(l, 1) - mono(l, 1, &[-1], &[1]);
        assert_eq!(f * x(l, 0), x(l, 0) - y(l, 0));
    }

    #[test]
    fn negative_exponent_requires_laurent() {
        assert_eq!(
            Polynomial::monomial(s11(), coeff(1), &[-1], &[0]).unwrap_err(),
            Error::NegativeExponent
        );
    }

    #[test]
    fn substitute_examples() {
        let s = s11();
        // t is modelled by x1 itself: x1 = t, y1 = -t.
        let t = x(s, 0);
        let b = [(Var::Y(0), Binding::Poly(-&t))];
        assert!((x(s, 0) + y(s, 0)).substitute(&b).unwrap().is_zero());
        let sq = mono(s, 1, &[2], &[0]) + mono(s, 1, &[0], &[2]);
        assert_eq!(sq.substitute(&b).unwrap(), mono(s, 2, &[2], &[0]));

        let l = VarSpec::laurent(1, 1);
        let q = mono(l, 1, &[1], &[-1]);
        let r = q.substitute(&[(Var::X(0), Binding::Poly(y(l, 0)))]).unwrap();
        assert_eq!(r, Polynomial::one(l));
    }

    #[test]
    fn substitute_zero_into_inverse_fails() {
        let l = VarSpec::laurent(1, 1);
        let q = mono(l, 1, &[-1], &[0]);
        let err = q.substitute(&[(Var::X(0), Binding::Scalar(coeff(0)))]).unwrap_err();
        assert!(matches!(err, Error::NonUnitBinding(_)));
        let err = q
            .substitute(&[(Var::X(0), Binding::Poly(x(l, 0) + y(l, 0)))])
            .unwrap_err();
        assert!(matches!(err, Error::NonUnitBinding(_)));
    }

    #[test]
    fn drop_vars_shrinks_spec() {
        let s = VarSpec::polynomial(2, 2);
        let p = x(s, 0) * y(s, 0);
        let q = p.drop_vars(&[Var::X(1), Var::Y(1)]).unwrap();
        assert_eq!(q.spec(), VarSpec::polynomial(1, 1));
        assert_eq!(q, x(s11(), 0) * y(s11(), 0));
        assert_eq!(p.drop_vars(&[Var::X(0)]).unwrap_err(), Error::ResidualDependence);
    }

    #[test]
    fn partial_derivative_examples() {
        let s = s11();
        let p = mono(s, 1, &[2], &[0]) + mono(s, 1, &[1], &[1]);
        assert_eq!(p.partial_derivative(Var::X(0)).unwrap(), mono(s, 2, &[1], &[0]) + y(s, 0));
        assert!(mono(s, 1, &[0], &[2]).partial_derivative(Var::X(0)).unwrap().is_zero());
        let l = VarSpec::laurent(1, 1);
        assert_eq!(
            mono(l, 1, &[-1], &[0]).partial_derivative(Var::X(0)).unwrap(),
            mono(l, -1, &[-2], &[0])
        );
        assert!(p.partial_derivative(Var::Y(3)).is_err());
    }

    #[test]
    fn laurent_derivative_examples() {
        let l = VarSpec::laurent(1, 1);
        assert_eq!(x(l, 0).laurent_derivative(0, 0).unwrap(), x(l, 0));
        let f = mono(l, 1, &[1], &[-1]) + mono(l, 1, &[-1], &[1]);
        assert!(f.laurent_derivative(0, 0).unwrap().is_zero());
        assert!(c(l, 7).laurent_derivative(0, 0).unwrap().is_zero());
        assert!(matches!(f.laurent_derivative(1, 0), Err(Error::IndexOutOfRange(_))));
    }

    #[test]
    fn divide_exact_examples() {
        let s = s11();
        let diff = mono(s, 1, &[2], &[0]) - mono(s, 1, &[0], &[2]);
        assert_eq!(diff.divide_exact(&(x(s, 0) + y(s, 0))).unwrap(), x(s, 0) - y(s, 0));
        let sum = mono(s, 1, &[2], &[0]) + mono(s, 1, &[0], &[2]);
        assert_eq!(sum.divide_exact(&(x(s, 0) + y(s, 0))), Err(Error::NotDivisible));
        assert_eq!(sum.divide_exact(&Polynomial::zero(s)), Err(Error::DivisionByZero));

        let l = VarSpec::laurent(1, 1);
        let f = c(l, 1) - mono(l, 1, &[-1], &[1]);
        assert_eq!(f.divide_exact(&(x(l, 0) - y(l, 0))).unwrap(), mono(l, 1, &[-1], &[0]));
    }

    #[test]
    fn evaluate_examples() {
        let s = s11();
        let p = Point::additive_ints(&[3], &[-3]);
        assert_eq!((x(s, 0) + y(s, 0)).evaluate(&p).unwrap(), coeff(0));
        let l = VarSpec::laurent(1, 1);
        let f = c(l, 1) - mono(l, 1, &[-1], &[1]);
        assert_eq!(f.evaluate(&Point::multiplicative_ints(&[2], &[2]).unwrap()).unwrap(), coeff(0));
        let zero = Point::additive_ints(&[0], &[2]);
        assert_eq!(f.evaluate(&zero), Err(Error::ZeroCoordinate));
    }

    #[test]
    fn group_action_examples() {
        let s = VarSpec::polynomial(2, 0);
        let swap = GroupElement::transposition(2, 0, Block::X, 0);
        assert_eq!(mono(s, 1, &[2, 1], &[]).apply_group(&swap).unwrap(), mono(s, 1, &[1, 2], &[]));
        let s2 = VarSpec::polynomial(1, 2);
        let p = x(s2, 0) + y(s2, 0);
        assert_eq!(p.apply_group(&GroupElement::identity(1, 2)).unwrap(), p);
        let swap_y = GroupElement::transposition(1, 2, Block::Y, 0);
        assert_eq!(p.apply_group(&swap_y).unwrap(), x(s2, 0) + y(s2, 1));
        assert_eq!(p.apply_group(&swap), Err(Error::GroupSize(1, 2)));
    }

    #[test]
    fn invariance_examples() {
        let s = VarSpec::polynomial(2, 0);
        assert!((x(s, 0) + x(s, 1)).is_w_invariant());
        assert!(!(x(s, 0) - x(s, 1)).is_w_invariant());
    }

    #[test]
    fn alternate_examples() {
        let s = VarSpec::polynomial(2, 0);
        let a = mono(s, 1, &[2, 0], &[]).alternate(Block::X).unwrap();
        assert_eq!(a, mono(s, 1, &[2, 0], &[]) - mono(s, 1, &[0, 2], &[]));
        assert!(mono(s, 1, &[1, 1], &[]).alternate(Block::X).unwrap().is_zero());
        let s1 = VarSpec::polynomial(1, 0);
        assert_eq!(x(s1, 0).alternate(Block::X).unwrap(), x(s1, 0));
        let big = Polynomial::one(VarSpec::polynomial(9, 0));
        assert_eq!(big.alternate(Block::X), Err(Error::GroupTooLarge(9, 8)));
    }

    #[test]
    fn signed_permutations_are_complete() {
        let perms = signed_permutations(4);
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().filter(|(_, s)| *s > 0).count(), 12);
        for (p, s) in &perms {
            let inversions = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(*s, if inversions % 2 == 0 { 1 } else { -1 });
        }
    }

    #[test]
    fn display_is_readable() {
        let s = s11();
        let p = mono(s, 1, &[2], &[0]) - mono(s, 3, &[0], &[1]) + c(s, 2);
        assert_eq!(p.to_string(), "x1^2 - 3*y1 + 2");
        assert_eq!(Polynomial::zero(s).to_string(), "0");
    }
}
