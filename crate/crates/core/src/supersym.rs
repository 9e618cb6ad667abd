//! Supersymmetric polynomials in `x_1..x_m`, `y_1..y_n`: the membership
//! test, power sums, the element `T`, super Schur polynomials `F_λ`, the
//! evaluation map `x_m = y_n = 0`, and decomposition in the `F_λ` basis.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{enumerate_hook, schur_in, vandermonde_in, Partition};
use crate::poly::{coeff, Binding, Block, Coeff, Monomial, Polynomial, Var, VarSpec};

/// Default bound on the total degree accepted by [`decompose`].
pub const DEFAULT_DEGREE_CAP: u32 = 12;

/// W-invariant with `∂f/∂x_1 − ∂f/∂y_1 ∈ (x_1 + y_1)`.
///
/// Only the pair `(x_1, y_1)` is checked; W-invariance carries the condition
/// to every other pair. Polynomials with negative exponents are rejected.
pub fn is_supersymmetric(p: &Polynomial) -> bool {
    let Ok(p) = p.to_polynomial() else {
        return false;
    };
    if !p.is_w_invariant() {
        return false;
    }
    let VarSpec { m, n, .. } = p.spec();
    if m == 0 || n == 0 {
        return true;
    }
    let spec = p.spec();
    let d = p.partial_derivative(Var::X(0)).expect("x1 exists") - p.partial_derivative(Var::Y(0)).expect("y1 exists");
    let x1 = Polynomial::var(spec, Var::X(0)).expect("x1 exists");
    let y1 = Polynomial::var(spec, Var::Y(0)).expect("y1 exists");
    d.divide_exact(&(x1 + y1)).is_ok()
}

/// `Σ x_i^r + (−1)^{r−1} Σ y_j^r`.
pub fn power_sum(r: u32, m: usize, n: usize) -> Result<Polynomial> {
    if r < 1 {
        return Err(Error::InvalidArgument("power sum degree must be >= 1".into()));
    }
    let spec = VarSpec::polynomial(m, n);
    let sign = if r % 2 == 1 { coeff(1) } else { coeff(-1) };
    let mut terms = Vec::with_capacity(m + n);
    for i in 0..m {
        let mut e = vec![0; m + n];
        e[i] = r as i32;
        terms.push((Monomial::new(e), coeff(1)));
    }
    for j in 0..n {
        let mut e = vec![0; m + n];
        e[m + j] = r as i32;
        terms.push((Monomial::new(e), sign.clone()));
    }
    Polynomial::from_terms(spec, terms)
}

/// `T = ∏_{i,j} (x_i + y_j)`; `1` when `mn = 0`.
pub fn t_element(m: usize, n: usize) -> Polynomial {
    t_element_in(VarSpec::polynomial(m, n))
}

pub(crate) fn t_element_in(spec: VarSpec) -> Polynomial {
    let mut t = Polynomial::one(spec);
    for i in 0..spec.m {
        for j in 0..spec.n {
            let f = Polynomial::var(spec, Var::X(i)).unwrap() + Polynomial::var(spec, Var::Y(j)).unwrap();
            t = &t * &f;
        }
    }
    t
}

/// `g_λ = ∏ x_i^{μ_i+m−i} ∏ y_j^{ν_j+n−j} ∏_{(i,j) ∈ D^{m,n}_λ} (x_i + y_j)`.
fn g_lambda(lambda: &Partition, m: usize, n: usize) -> Result<Polynomial> {
    let spec = VarSpec::polynomial(m, n);
    let (mu, nu) = lambda.hook_mu_nu(m, n)?;
    let mut e = Vec::with_capacity(m + n);
    e.extend((0..m).map(|i| (mu.part(i + 1) as usize + m - 1 - i) as i32));
    e.extend((0..n).map(|j| (nu.part(j + 1) as usize + n - 1 - j) as i32));
    let mut g = Polynomial::from_terms(spec, [(Monomial::new(e), coeff(1))])?;
    for (i, j) in lambda.corner_cells(m, n) {
        let f = Polynomial::var(spec, Var::X(i - 1))? + Polynomial::var(spec, Var::Y(j - 1))?;
        g = &g * &f;
    }
    Ok(g)
}

/// Super Schur polynomial `F_λ(X_m / Y_n)`; zero outside the hook.
///
/// Since `w[g/(Δ(X)Δ(Y))] = sign(w)·w(g)/(Δ(X)Δ(Y))`, the symmetrized sum is
/// the double alternation of `g_λ` divided exactly by `Δ(X)Δ(Y)`.
pub fn super_schur(lambda: &Partition, m: usize, n: usize) -> Result<Polynomial> {
    let spec = VarSpec::polynomial(m, n);
    if !lambda.in_hook(m, n) {
        return Ok(Polynomial::zero(spec));
    }
    let alt = g_lambda(lambda, m, n)?.alternate(Block::X)?.alternate(Block::Y)?;
    let delta = vandermonde_in(spec, Block::X) * vandermonde_in(spec, Block::Y);
    alt.divide_exact(&delta)
}

type SchurCache = Mutex<HashMap<(Partition, usize, usize), Polynomial>>;

fn super_schur_cache() -> &'static SchurCache {
    static CACHE: OnceLock<SchurCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Memoized [`super_schur`].
pub(crate) fn super_schur_cached(lambda: &Partition, m: usize, n: usize) -> Result<Polynomial> {
    let key = (lambda.clone(), m, n);
    if let Some(p) = super_schur_cache().lock().unwrap().get(&key) {
        return Ok(p.clone());
    }
    let p = super_schur(lambda, m, n)?;
    super_schur_cache().lock().unwrap().insert(key, p.clone());
    Ok(p)
}

/// `T · S_μ(X_m) · S_ν(Y_n)` for `λ ∈ H⁰_{m,n}`.
pub fn super_schur_factored(lambda: &Partition, m: usize, n: usize) -> Result<Polynomial> {
    if !lambda.in_h0(m, n)? {
        return Err(Error::NotInH0(lambda.to_string(), m, n));
    }
    let spec = VarSpec::polynomial(m, n);
    let (mu, nu) = lambda.hook_mu_nu(m, n)?;
    Ok(t_element(m, n) * schur_in(&mu, spec, Block::X)? * schur_in(&nu, spec, Block::Y)?)
}

/// The evaluation map `x_m = y_n = 0` into `(m−1, n−1)` variables.
pub fn phi_s(p: &Polynomial) -> Result<Polynomial> {
    let VarSpec { m, n, .. } = p.spec();
    if m == 0 || n == 0 {
        return Err(Error::EmptyBlock);
    }
    if !is_supersymmetric(p) {
        return Err(Error::NotSupersymmetric);
    }
    let p = p.to_polynomial()?;
    let zero = Coeff::zero();
    p.substitute(&[
        (Var::X(m - 1), Binding::Scalar(zero.clone())),
        (Var::Y(n - 1), Binding::Scalar(zero)),
    ])?
    .drop_vars(&[Var::X(m - 1), Var::Y(n - 1)])
}

/// For `p` in the kernel of [`phi_s`], the W-invariant `b` with `p = T·b`.
pub fn kernel_witness(p: &Polynomial) -> Result<Polynomial> {
    if !phi_s(p)?.is_zero() {
        return Err(Error::InvalidArgument("polynomial is not in the kernel of phi".into()));
    }
    let p = p.to_polynomial()?;
    let b = p.divide_exact(&t_element_in(p.spec()))?;
    if !b.is_w_invariant() {
        return Err(Error::NotWInvariant);
    }
    Ok(b)
}

/// Coefficients of a supersymmetric polynomial in the `F_λ` basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DecompositionJson", into = "DecompositionJson")]
pub struct BasisDecomposition {
    m: usize,
    n: usize,
    coeffs: BTreeMap<Partition, Coeff>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    m: usize,
    n: usize,
    coeffs: Vec<CoeffEntry>,
}

#[derive(Serialize, Deserialize)]
struct CoeffEntry {
    partition: Partition,
    c: String,
}

impl From<BasisDecomposition> for DecompositionJson {
    fn from(d: BasisDecomposition) -> Self {
        DecompositionJson {
            m: d.m,
            n: d.n,
            coeffs: d
                .coeffs
                .into_iter()
                .map(|(partition, c)| CoeffEntry { partition, c: c.to_string() })
                .collect(),
        }
    }
}

impl TryFrom<DecompositionJson> for BasisDecomposition {
    type Error = Error;

    fn try_from(j: DecompositionJson) -> Result<Self> {
        let coeffs = j
            .coeffs
            .into_iter()
            .map(|e| Ok((e.partition, crate::json::parse_coeff(&e.c)?)));
        BasisDecomposition::new(j.m, j.n, coeffs.collect::<Result<Vec<_>>>()?)
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

impl BasisDecomposition {
    pub fn new<I>(m: usize, n: usize, coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Coeff)>,
    {
        let mut map: BTreeMap<Partition, Coeff> = BTreeMap::new();
        for (lam, c) in coeffs {
            if !lam.in_hook(m, n) {
                return Err(Error::NotInHook(lam.to_string(), m, n));
            }
            *map.entry(lam).or_insert_with(Coeff::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BasisDecomposition { m, n, coeffs: map })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Coeff> {
        &self.coeffs
    }

    pub fn coefficient(&self, lambda: &Partition) -> Coeff {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// `Σ c_λ F_λ`.
    pub fn reconstruct(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(VarSpec::polynomial(self.m, self.n));
        for (lam, c) in &self.coeffs {
            out = out + super_schur_cached(lam, self.m, self.n)?.scale(c);
        }
        Ok(out)
    }
}

fn is_dominant(mon: &Monomial, m: usize) -> bool {
    let (x, y) = mon.exps().split_at(m);
    x.windows(2).all(|w| w[0] >= w[1]) && y.windows(2).all(|w| w[0] >= w[1])
}

/// [`decompose_with_cap`] with [`DEFAULT_DEGREE_CAP`].
pub fn decompose(p: &Polynomial) -> Result<BasisDecomposition> {
    decompose_with_cap(p, DEFAULT_DEGREE_CAP)
}

/// Writes a supersymmetric `p` as `Σ c_λ F_λ`, solving one exact linear
/// system per homogeneous degree.
///
/// Both sides are W-invariant, so only monomials with weakly decreasing
/// exponents in each block are compared.
pub fn decompose_with_cap(p: &Polynomial, degree_cap: u32) -> Result<BasisDecomposition> {
    if !is_supersymmetric(p) {
        return Err(Error::NotSupersymmetric);
    }
    let p = p.to_polynomial()?;
    let VarSpec { m, n, .. } = p.spec();
    if let Some(d) = p.degree() {
        if d > degree_cap as i64 {
            return Err(Error::DegreeCap(d, degree_cap as i64));
        }
    }
    let mut out = Vec::new();
    for (d, part) in p.homogeneous_components() {
        let basis = enumerate_hook(m, n, d as u32);
        let polys = basis
            .iter()
            .map(|lam| super_schur_cached(lam, m, n))
            .collect::<Result<Vec<_>>>()?;
        let rows: BTreeSet<Monomial> = polys
            .iter()
            .chain(std::iter::once(&part))
            .flat_map(|f| f.terms().map(|(mon, _)| mon.clone()))
            .filter(|mon| is_dominant(mon, m))
            .collect();
        let a: Vec<Vec<Coeff>> = rows
            .iter()
            .map(|mon| polys.iter().map(|f| f.coefficient(mon)).collect())
            .collect();
        let b: Vec<Coeff> = rows.iter().map(|mon| part.coefficient(mon)).collect();
        let sol = linalg::solve(&a, &b)?;
        out.extend(basis.into_iter().zip(sol));
    }
    let dec = BasisDecomposition::new(m, n, out)?;
    debug_assert_eq!(dec.reconstruct().ok().as_ref(), Some(&p));
    Ok(dec)
}

/// `Σ c_λ F_λ` for a list of integer weights, a convenience for tests.
pub fn combination(m: usize, n: usize, terms: &[(Partition, i64)]) -> Result<Polynomial> {
    BasisDecomposition::new(m, n, terms.iter().map(|(l, c)| (l.clone(), coeff(*c))))?.reconstruct()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::point::Point;
    use crate::poly::ratio;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn mono(m: usize, n: usize, k: i64, xe: &[i32], ye: &[i32]) -> Polynomial {
        Polynomial::monomial(VarSpec::polynomial(m, n), coeff(k), xe, ye).unwrap()
    }

    fn xv(m: usize, n: usize, i: usize) -> Polynomial {
        Polynomial::var(VarSpec::polynomial(m, n), Var::X(i)).unwrap()
    }

    fn yv(m: usize, n: usize, j: usize) -> Polynomial {
        Polynomial::var(VarSpec::polynomial(m, n), Var::Y(j)).unwrap()
    }

    #[test]
    fn supersymmetry_examples() {
        assert!(is_supersymmetric(&(xv(1, 1, 0) + yv(1, 1, 0))));
        assert!(!is_supersymmetric(&(mono(1, 1, 1, &[2], &[0]) + mono(1, 1, 1, &[0], &[2]))));
        assert!(is_supersymmetric(&t_element(2, 2)));
        assert!(!is_supersymmetric(&xv(2, 1, 0)));
        // Only W-invariance matters with an empty block.
        assert!(is_supersymmetric(&(mono(2, 0, 1, &[2, 0], &[]) + mono(2, 0, 1, &[0, 2], &[]))));
    }

    #[test]
    fn t_is_independent_of_t_on_the_antidiagonal() {
        // Cross-check of the predicate on T(X_2, Y_2): substituting
        // x_1 = t, y_1 = −t at five values of t gives the same polynomial.
        let t2 = t_element(2, 2);
        let images: Vec<Polynomial> = (1..=5)
            .map(|t| {
                t2.substitute(&[
                    (Var::X(0), Binding::Scalar(coeff(t))),
                    (Var::Y(0), Binding::Scalar(coeff(-t))),
                ])
                .unwrap()
            })
            .collect();
        assert!(images.windows(2).all(|w| w[0] == w[1]));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sum(1, 1, 1).unwrap(), xv(1, 1, 0) + yv(1, 1, 0));
        assert_eq!(power_sum(2, 1, 1).unwrap(), mono(1, 1, 1, &[2], &[0]) - mono(1, 1, 1, &[0], &[2]));
        let expected = mono(2, 1, 1, &[3, 0], &[0]) + mono(2, 1, 1, &[0, 3], &[0]) + mono(2, 1, 1, &[0, 0], &[3]);
        assert_eq!(power_sum(3, 2, 1).unwrap(), expected);
        assert!(power_sum(0, 1, 1).is_err());
        for r in 1..=5 {
            assert!(is_supersymmetric(&power_sum(r, 2, 2).unwrap()));
        }
    }

    #[test]
    fn t_element_examples() {
        assert_eq!(t_element(1, 1), xv(1, 1, 0) + yv(1, 1, 0));
        assert_eq!(t_element(2, 1), (xv(2, 1, 0) + yv(2, 1, 0)) * (xv(2, 1, 1) + yv(2, 1, 0)));
        assert_eq!(t_element(0, 3), Polynomial::one(VarSpec::polynomial(0, 3)));
    }

    #[test]
    fn super_schur_examples() {
        assert_eq!(super_schur(&p(&[1]), 1, 1).unwrap(), xv(1, 1, 0) + yv(1, 1, 0));
        assert_eq!(
            super_schur(&p(&[2]), 1, 1).unwrap(),
            mono(1, 1, 1, &[2], &[0]) + mono(1, 1, 1, &[1], &[1])
        );
        assert_eq!(
            super_schur(&p(&[1, 1]), 1, 1).unwrap(),
            mono(1, 1, 1, &[1], &[1]) + mono(1, 1, 1, &[0], &[2])
        );
        assert!(super_schur(&p(&[2, 2]), 1, 1).unwrap().is_zero());
    }

    #[test]
    fn super_schur_reduces_to_schur_with_one_empty_block() {
        // F_λ(X_m / ∅) = S_λ(X_m), F_λ(∅ / Y_n) = S_{λ'}(Y_n)
        let lam = p(&[2, 1]);
        let s = VarSpec::polynomial(2, 0);
        assert_eq!(super_schur(&lam, 2, 0).unwrap(), schur_in(&lam, s, Block::X).unwrap());
        let s = VarSpec::polynomial(0, 2);
        assert_eq!(super_schur(&lam, 0, 2).unwrap(), schur_in(&lam.transpose(), s, Block::Y).unwrap());
    }

    #[test]
    fn super_schur_matches_rational_sum_at_points() {
        let pts = [
            Point::new(vec![coeff(2), ratio(1, 3)], vec![coeff(5), coeff(-7)], false).unwrap(),
            Point::additive_ints(&[-1, 4], &[3, 2]),
        ];
        for d in 0..=5 {
            for lam in enumerate_hook(2, 2, d) {
                let f = super_schur(&lam, 2, 2).unwrap();
                for pt in &pts {
                    let direct = oracle::super_schur_rational_sum(&lam, 2, 2, pt).unwrap();
                    assert_eq!(f.evaluate(pt).unwrap(), direct, "lambda={lam}");
                }
            }
        }
    }

    #[test]
    fn factored_examples() {
        let x = xv(1, 1, 0);
        let y = yv(1, 1, 0);
        assert_eq!(super_schur_factored(&p(&[1]), 1, 1).unwrap(), &x + &y);
        assert_eq!(super_schur_factored(&p(&[2]), 1, 1).unwrap(), (&x + &y) * x.clone());
        assert_eq!(super_schur_factored(&p(&[2, 1]), 1, 1).unwrap(), (&x + &y) * &x * y.clone());
        assert!(matches!(super_schur_factored(&p(&[1]), 2, 1), Err(Error::NotInH0(..))));
        assert!(matches!(super_schur_factored(&p(&[2, 2]), 1, 1), Err(Error::NotInHook(..))));
    }

    #[test]
    fn phi_examples() {
        assert!(phi_s(&super_schur(&p(&[1]), 1, 1).unwrap()).unwrap().is_zero());
        for lam in [p(&[1]), p(&[2, 1]), p(&[1, 1]), p(&[3])] {
            assert_eq!(
                phi_s(&super_schur(&lam, 2, 2).unwrap()).unwrap(),
                super_schur(&lam, 1, 1).unwrap()
            );
        }
        assert_eq!(phi_s(&power_sum(2, 2, 2).unwrap()).unwrap(), power_sum(2, 1, 1).unwrap());
        let bad = mono(1, 1, 1, &[2], &[0]) + mono(1, 1, 1, &[0], &[2]);
        assert_eq!(phi_s(&bad), Err(Error::NotSupersymmetric));
        assert_eq!(phi_s(&power_sum(1, 2, 0).unwrap()), Err(Error::EmptyBlock));
    }

    #[test]
    fn kernel_witness_examples() {
        let x = xv(1, 1, 0);
        let y = yv(1, 1, 0);
        assert_eq!(kernel_witness(&super_schur(&p(&[2]), 1, 1).unwrap()).unwrap(), x.clone());
        assert_eq!(kernel_witness(&t_element(1, 1)).unwrap(), Polynomial::one(VarSpec::polynomial(1, 1)));
        assert_eq!(kernel_witness(&super_schur(&p(&[2, 1]), 1, 1).unwrap()).unwrap(), x * y);
        assert!(kernel_witness(&power_sum(2, 2, 2).unwrap()).is_err());
        assert_eq!(kernel_witness(&power_sum(2, 1, 1).unwrap()).unwrap(), xv(1, 1, 0) - yv(1, 1, 0));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&power_sum(2, 1, 1).unwrap()).unwrap();
        assert_eq!(d.coeffs().len(), 2);
        assert_eq!(d.coefficient(&p(&[2])), coeff(1));
        assert_eq!(d.coefficient(&p(&[1, 1])), coeff(-1));

        let f31 = super_schur(&p(&[3, 1]), 2, 2).unwrap();
        let d = decompose(&f31).unwrap();
        assert_eq!(d.coeffs().len(), 1);
        assert_eq!(d.coefficient(&p(&[3, 1])), coeff(1));

        let sq = power_sum(1, 1, 1).unwrap().pow(2);
        let d = decompose(&sq).unwrap();
        assert_eq!(d.coefficient(&p(&[2])), coeff(1));
        assert_eq!(d.coefficient(&p(&[1, 1])), coeff(1));
        assert_eq!(d.coeffs().len(), 2);
    }

    #[test]
    fn decompose_errors() {
        let bad = mono(1, 1, 1, &[2], &[0]) + mono(1, 1, 1, &[0], &[2]);
        assert_eq!(decompose(&bad), Err(Error::NotSupersymmetric));
        let big = power_sum(5, 1, 1).unwrap();
        assert_eq!(decompose_with_cap(&big, 4), Err(Error::DegreeCap(5, 4)));
    }

    #[test]
    fn decomposition_json_round_trip() {
        let d = decompose(&power_sum(2, 1, 1).unwrap()).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert_eq!(s, r#"{"m":1,"n":1,"coeffs":[{"partition":[1,1],"c":"-1"},{"partition":[2],"c":"1"}]}"#);
        let back: BasisDecomposition = serde_json::from_str(&s).unwrap();
        assert_eq!(back, d);
        assert!(serde_json::from_str::<BasisDecomposition>(r#"{"m":1,"n":1,"coeffs":[{"partition":[2,2],"c":"1"}]}"#).is_err());
    }

    #[test]
    fn stability_under_y_specialization() {
        for d in 0..=4 {
            for lam in enumerate_hook(2, 1, d) {
                let f = super_schur(&lam, 2, 2).unwrap();
                let g = f
                    .substitute(&[(Var::Y(1), Binding::Scalar(coeff(0)))])
                    .unwrap()
                    .drop_vars(&[Var::Y(1)])
                    .unwrap();
                assert_eq!(g, super_schur(&lam, 2, 1).unwrap(), "lambda={lam}");
            }
        }
    }

    #[test]
    fn products_stay_supersymmetric() {
        let a = super_schur(&p(&[2, 1]), 2, 2).unwrap();
        let b = power_sum(3, 2, 2).unwrap();
        assert!(is_supersymmetric(&(a * b)));
    }
}
