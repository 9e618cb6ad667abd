//! Laurent supersymmetric polynomials: the ring `Λ_{m,n}`, the elements
//! `K_{λ,μ}`, the evaluation map `x_m = y_n`, and the four equivalent
//! characterizations of the condition at the pair `(x_1, y_1)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{euler_character_in, IntegerSignature};
use crate::poly::{coeff, ratio, Binding, Block, Coeff, Monomial, Polynomial, Var, VarSpec};

/// A pair `(λ, μ) ∈ ℤ^m × ℤ^n` of weakly decreasing sequences.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PairJson", into = "PairJson")]
pub struct SignaturePair {
    lambda: IntegerSignature,
    mu: IntegerSignature,
}

#[derive(Serialize, Deserialize)]
struct PairJson {
    lambda: Vec<i32>,
    mu: Vec<i32>,
}

impl TryFrom<PairJson> for SignaturePair {
    type Error = Error;

    fn try_from(j: PairJson) -> Result<Self> {
        let wrap = |v| IntegerSignature::new(v).map_err(|e| Error::Parse(e.to_string()));
        Ok(SignaturePair { lambda: wrap(j.lambda)?, mu: wrap(j.mu)? })
    }
}

impl From<SignaturePair> for PairJson {
    fn from(s: SignaturePair) -> Self {
        PairJson { lambda: s.lambda.entries().to_vec(), mu: s.mu.entries().to_vec() }
    }
}

impl SignaturePair {
    pub fn new(lambda: IntegerSignature, mu: IntegerSignature) -> Self {
        SignaturePair { lambda, mu }
    }

    pub fn from_vecs(lambda: Vec<i32>, mu: Vec<i32>) -> Result<Self> {
        Ok(SignaturePair { lambda: IntegerSignature::new(lambda)?, mu: IntegerSignature::new(mu)? })
    }

    pub fn lambda(&self) -> &IntegerSignature {
        &self.lambda
    }

    pub fn mu(&self) -> &IntegerSignature {
        &self.mu
    }

    /// Total degree of `K_{λ,μ}`.
    pub fn degree(&self) -> i64 {
        self.lambda.sum() + self.mu.sum()
    }
}

fn require_laurent(p: &Polynomial) -> Polynomial {
    if p.spec().laurent {
        p.clone()
    } else {
        p.to_laurent()
    }
}

fn x1_minus_y1(spec: VarSpec) -> Polynomial {
    Polynomial::var(spec, Var::X(0)).unwrap() - Polynomial::var(spec, Var::Y(0)).unwrap()
}

/// W-invariant with `x_1 ∂f/∂x_1 + y_1 ∂f/∂y_1 ∈ (x_1 − y_1)`; reduces to
/// W-invariance when `mn = 0`.
pub fn is_laurent_supersymmetric(p: &Polynomial) -> bool {
    let p = require_laurent(p);
    if !p.is_w_invariant() {
        return false;
    }
    let VarSpec { m, n, .. } = p.spec();
    if m == 0 || n == 0 {
        return true;
    }
    derivative_condition(&p)
}

fn derivative_condition(p: &Polynomial) -> bool {
    let d = p.laurent_derivative(0, 0).expect("m, n >= 1");
    d.divide_exact(&x1_minus_y1(p.spec())).is_ok()
}

/// `T = ∏_{i,j} (1 − y_j / x_i)`; `1` when `mn = 0`.
pub fn t_element_l(m: usize, n: usize) -> Polynomial {
    t_element_l_in(VarSpec::laurent(m, n))
}

fn t_element_l_in(spec: VarSpec) -> Polynomial {
    let mut t = Polynomial::one(spec);
    for i in 0..spec.m {
        for j in 0..spec.n {
            let mut e = vec![0; spec.nvars()];
            e[i] = -1;
            e[spec.m + j] = 1;
            let ratio = Polynomial::from_terms(spec, [(Monomial::new(e), coeff(1))]).unwrap();
            t = &t * &(Polynomial::one(spec) - ratio);
        }
    }
    t
}

/// `K_{λ,μ} = ∏ (1 − y_j/x_i) · E_λ(x) · E_μ(y)`.
pub fn k_element(sig: &SignaturePair) -> Result<Polynomial> {
    let spec = VarSpec::laurent(sig.lambda.len(), sig.mu.len());
    let ex = euler_character_in(&sig.lambda, spec, Block::X)?;
    let ey = euler_character_in(&sig.mu, spec, Block::Y)?;
    Ok(t_element_l_in(spec) * ex * ey)
}

/// The evaluation map `x_m = y_n` into `Λ_{m−1,n−1}`.
///
/// Both variables are replaced by a common symbol (realized as `x_m`), and
/// the image is required to be free of it rather than evaluated at `t = 1`.
pub fn phi_l(p: &Polynomial) -> Result<Polynomial> {
    let p = require_laurent(p);
    let VarSpec { m, n, .. } = p.spec();
    if m == 0 || n == 0 {
        return Err(Error::EmptyBlock);
    }
    if !is_laurent_supersymmetric(&p) {
        return Err(Error::NotLaurentSupersymmetric);
    }
    let t = Polynomial::var(p.spec(), Var::X(m - 1))?;
    p.substitute(&[(Var::Y(n - 1), Binding::Poly(t))])?
        .drop_vars(&[Var::X(m - 1), Var::Y(n - 1)])
}

/// Outcome of the four equivalent conditions at the pair `(x_1, y_1)`:
/// (a) `f ∈ R + Sz`, (b) `f(x_1 = y_1 = t)` free of `t`, (c) invariance
/// along the subtorus `(t,1,…|t,1,…)` on `x_1 = y_1` (sampled), and
/// (d) `x_1 ∂f/∂x_1 + y_1 ∂f/∂y_1 ∈ (x_1 − y_1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodCheck {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
}

impl CodCheck {
    pub fn all_equal(&self) -> bool {
        self.a == self.b && self.b == self.c && self.c == self.d
    }

    /// Agreement of the three exact conditions.
    pub fn exact_agree(&self) -> bool {
        self.a == self.b && self.b == self.d
    }

    pub fn all_true(&self) -> bool {
        self.a && self.b && self.c && self.d
    }
}

/// Number of sampled point/scalar pairs used for condition (c) by
/// [`cod_check`].
pub const DEFAULT_TORUS_SAMPLES: usize = 25;

pub fn cod_check(p: &Polynomial, seed: u64) -> Result<CodCheck> {
    cod_check_with_samples(p, seed, DEFAULT_TORUS_SAMPLES)
}

pub fn cod_check_with_samples(p: &Polynomial, seed: u64, samples: usize) -> Result<CodCheck> {
    let p = require_laurent(p);
    let VarSpec { m, n, .. } = p.spec();
    if m == 0 || n == 0 {
        return Err(Error::EmptyBlock);
    }
    let a = decompose_r_sz(&p).is_ok();
    let b = diagonal_is_constant(&p);
    let c = torus_invariant_sampled(&p, seed, samples)?;
    let d = derivative_condition(&p);
    Ok(CodCheck { a, b, c, d })
}

fn diagonal_is_constant(p: &Polynomial) -> bool {
    let t = Polynomial::var(p.spec(), Var::X(0)).unwrap();
    let img = p.substitute(&[(Var::Y(0), Binding::Poly(t))]).expect("unit binding");
    !img.depends_on(Var::X(0)).unwrap()
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Coeff {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-9i64..=9);
    }
    ratio(num, rng.gen_range(1i64..=5))
}

fn torus_invariant_sampled(p: &Polynomial, seed: u64, samples: usize) -> Result<bool> {
    let VarSpec { m, n, .. } = p.spec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let diag = random_nonzero(&mut rng);
        let mut x: Vec<Coeff> = (0..m).map(|_| random_nonzero(&mut rng)).collect();
        let mut y: Vec<Coeff> = (0..n).map(|_| random_nonzero(&mut rng)).collect();
        x[0] = diag.clone();
        y[0] = diag;
        let mut t = random_nonzero(&mut rng);
        while t.is_one() {
            t = random_nonzero(&mut rng);
        }
        let base = p.evaluate_at(&x, &y)?;
        x[0] *= &t;
        y[0] *= &t;
        if p.evaluate_at(&x, &y)? != base {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `z = 1 − x_1 / y_1`.
pub fn z_plus(spec: VarSpec) -> Polynomial {
    let mut e = vec![0; spec.nvars()];
    e[0] = 1;
    e[spec.m] = -1;
    Polynomial::one(spec) - Polynomial::from_terms(spec, [(Monomial::new(e), coeff(1))]).unwrap()
}

/// `1 − y_1 / x_1`.
pub fn z_minus(spec: VarSpec) -> Polynomial {
    let mut e = vec![0; spec.nvars()];
    e[0] = -1;
    e[spec.m] = 1;
    Polynomial::one(spec) - Polynomial::from_terms(spec, [(Monomial::new(e), coeff(1))]).unwrap()
}

/// Splits `f = r + s·z` with `z = 1 − x_1/y_1` and `r` free of `x_1, y_1`,
/// or reports [`Error::NotMember`].
///
/// With `x = x_1` and `w = 1 − z = x_1/y_1`, every term `c·x^a y^b·ρ` (ρ a
/// monomial in the remaining variables) becomes `c·ρ·x^{a+b} w^{−b}`, so
/// `f = Σ r_{i,j} x^i w^j` with `r_{i,j} ∈ R`. Membership holds exactly when
/// `Σ_j r_{i,j} = 0` for every `i ≠ 0`; then `r = Σ_j r_{0,j}` and
/// `s = Σ_{j≠0} r_{i,j} x^i (w^j − 1)/z`.
pub fn decompose_r_sz(p: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let p = require_laurent(p);
    let spec = p.spec();
    if spec.m == 0 || spec.n == 0 {
        return Err(Error::EmptyBlock);
    }
    let yi = spec.m;
    let mut table: BTreeMap<(i32, i32), Polynomial> = BTreeMap::new();
    for (mon, c) in p.terms() {
        let (a, b) = (mon.exps()[0], mon.exps()[yi]);
        let mut rest = mon.exps().to_vec();
        rest[0] = 0;
        rest[yi] = 0;
        let term = Polynomial::from_terms(spec, [(Monomial::new(rest), c.clone())])?;
        let slot = table.entry((a + b, -b)).or_insert_with(|| Polynomial::zero(spec));
        *slot = &*slot + &term;
    }

    let mut row_sums: BTreeMap<i32, Polynomial> = BTreeMap::new();
    for (&(i, _), r) in &table {
        let slot = row_sums.entry(i).or_insert_with(|| Polynomial::zero(spec));
        *slot = &*slot + r;
    }
    if row_sums.iter().any(|(&i, s)| i != 0 && !s.is_zero()) {
        return Err(Error::NotMember);
    }
    let r = row_sums.remove(&0).unwrap_or_else(|| Polynomial::zero(spec));

    // x^i w^l = x_1^{i+l} y_1^{−l}
    let xw = |i: i32, l: i32, sign: i64| {
        let mut e = vec![0; spec.nvars()];
        e[0] = i + l;
        e[yi] = -l;
        (Monomial::new(e), coeff(sign))
    };
    let mut s = Polynomial::zero(spec);
    for (&(i, j), rij) in &table {
        if j == 0 {
            continue;
        }
        // (w^j − 1)/z = −(1 + w + … + w^{j−1}) for j > 0,
        //              w^{−1} + … + w^{j}       for j < 0.
        let quotient = if j > 0 {
            Polynomial::from_terms(spec, (0..j).map(|l| xw(i, l, -1)))?
        } else {
            Polynomial::from_terms(spec, (j..0).map(|l| xw(i, l, 1)))?
        };
        s = s + rij * &quotient;
    }
    debug_assert_eq!(&r + &(&s * &z_plus(spec)), p);
    Ok((r, s))
}

/// Coordinates of a W-invariant Laurent polynomial in the basis
/// `E_λ(x)·E_μ(y)` of `Λ_m ⊗ Λ_n`.
///
/// Exponent vectors of `E_λ` lie between `λ` and its reverse, so the
/// signatures are drawn from the exponent range of `p`.
pub fn euler_decompose(p: &Polynomial) -> Result<BTreeMap<SignaturePair, Coeff>> {
    let p = require_laurent(p);
    if !p.is_w_invariant() {
        return Err(Error::NotWInvariant);
    }
    let VarSpec { m, n, .. } = p.spec();
    let mut out = BTreeMap::new();
    for (_, part) in p.homogeneous_components() {
        let (lo, hi) = part
            .terms()
            .flat_map(|(mon, _)| mon.exps().to_vec())
            .fold((0, 0), |(lo, hi), e| (lo.min(e), hi.max(e)));
        let deg = part.degree().unwrap_or(0);
        let mut basis = Vec::new();
        for lam in IntegerSignature::all_in_range(m, lo, hi) {
            for mu in IntegerSignature::all_in_range(n, lo, hi) {
                let sig = SignaturePair::new(lam.clone(), mu);
                if sig.degree() == deg {
                    basis.push(sig);
                }
            }
        }
        let spec = p.spec();
        let polys = basis
            .iter()
            .map(|s| {
                Ok(euler_character_in(&s.lambda, spec, Block::X)? * euler_character_in(&s.mu, spec, Block::Y)?)
            })
            .collect::<Result<Vec<_>>>()?;
        // Leading coefficients sit on dominant monomials, one per signature.
        let rows: Vec<Monomial> = basis
            .iter()
            .map(|s| Monomial::from_blocks(s.lambda.entries(), s.mu.entries()))
            .collect();
        let a: Vec<Vec<Coeff>> = rows.iter().map(|r| polys.iter().map(|f| f.coefficient(r)).collect()).collect();
        let b: Vec<Coeff> = rows.iter().map(|r| part.coefficient(r)).collect();
        let sol = crate::linalg::solve(&a, &b)?;
        let mut rebuilt = Polynomial::zero(spec);
        for ((sig, c), f) in basis.into_iter().zip(sol).zip(&polys) {
            if !c.is_zero() {
                rebuilt = rebuilt + f.scale(&c);
                out.insert(sig, c);
            }
        }
        if rebuilt != part {
            return Err(Error::Inconsistent);
        }
    }
    Ok(out)
}
