//! Invariant polynomials on the Cartan subalgebra for `gl(m,n)`,
//! `osp(2m+1,2n)` and `osp(2m,2n)`.
//!
//! Polynomials use the ordinary `(m, n)` layout: the x-block holds
//! `h_1..h_m`, the y-block holds `h'_1..h'_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{coeff, signed_permutations, Coeff, GroupElement, Monomial, Polynomial, Var, VarSpec};
use crate::supersym::is_supersymmetric;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OspKind {
    Glmn,
    Ospodd,
    Ospeven,
}

impl std::str::FromStr for OspKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "glmn" => Ok(OspKind::Glmn),
            "ospodd" => Ok(OspKind::Ospodd),
            "ospeven" => Ok(OspKind::Ospeven),
            other => Err(Error::Parse(format!("unknown algebra kind {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OspSpec {
    pub kind: OspKind,
    pub m: usize,
    pub n: usize,
}

impl OspSpec {
    pub fn new(kind: OspKind, m: usize, n: usize) -> Self {
        OspSpec { kind, m, n }
    }

    pub fn var_spec(&self) -> VarSpec {
        VarSpec::polynomial(self.m, self.n)
    }
}

/// An element of `W' = (ℤ_2^m ⋊ S_m) × (ℤ_2^n ⋊ S_n)` acting by
/// `h_i ↦ xsigns[i]·h_{xperm[i]}` and `h'_j ↦ ysigns[j]·h'_{yperm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignVector {
    xsigns: Vec<i8>,
    ysigns: Vec<i8>,
    xperm: Vec<usize>,
    yperm: Vec<usize>,
}

impl SignVector {
    pub fn new(xsigns: Vec<i8>, ysigns: Vec<i8>, xperm: Vec<usize>, yperm: Vec<usize>) -> Result<Self> {
        if xsigns.len() != xperm.len() || ysigns.len() != yperm.len() {
            return Err(Error::GroupSize(xsigns.len(), xperm.len()));
        }
        if xsigns.iter().chain(&ysigns).any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidArgument("signs must be ±1".into()));
        }
        GroupElement::new(xperm.clone(), yperm.clone())?;
        Ok(SignVector { xsigns, ysigns, xperm, yperm })
    }

    pub fn identity(m: usize, n: usize) -> Self {
        SignVector { xsigns: vec![1; m], ysigns: vec![1; n], xperm: (0..m).collect(), yperm: (0..n).collect() }
    }

    /// Negates `h_i` (or `h'_i` for the y-block).
    pub fn flip(m: usize, n: usize, x_block: bool, i: usize) -> Self {
        let mut g = SignVector::identity(m, n);
        if x_block {
            g.xsigns[i] = -1;
        } else {
            g.ysigns[i] = -1;
        }
        g
    }

    pub fn swap(m: usize, n: usize, x_block: bool, i: usize) -> Self {
        let mut g = SignVector::identity(m, n);
        if x_block {
            g.xperm.swap(i, i + 1);
        } else {
            g.yperm.swap(i, i + 1);
        }
        g
    }

    /// Number of negated `h_i`.
    pub fn x_flips(&self) -> usize {
        self.xsigns.iter().filter(|&&s| s < 0).count()
    }

    /// `σ(g) = (−1)^{number of h-sign changes}`.
    pub fn sigma(&self) -> i8 {
        if self.x_flips().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

pub fn apply_wprime(g: &SignVector, f: &Polynomial) -> Result<Polynomial> {
    let VarSpec { m, n, .. } = f.spec();
    if g.xsigns.len() != m || g.ysigns.len() != n {
        return Err(Error::GroupSize(g.xsigns.len() + g.ysigns.len(), m + n));
    }
    let signs: Vec<i8> = g.xsigns.iter().chain(&g.ysigns).copied().collect();
    let flipped = Polynomial::from_terms(
        f.spec(),
        f.terms().map(|(mon, c)| {
            let odd = mon.exps().iter().zip(&signs).filter(|(e, s)| **s < 0 && **e % 2 != 0).count();
            (mon.clone(), if odd % 2 == 0 { c.clone() } else { -c.clone() })
        }),
    )?;
    flipped.apply_group(&GroupElement::new(g.xperm.clone(), g.yperm.clone())?)
}

fn generators(kind: OspKind, m: usize, n: usize, full_signs: bool) -> Vec<SignVector> {
    let mut gens: Vec<SignVector> = (0..m.saturating_sub(1))
        .map(|i| SignVector::swap(m, n, true, i))
        .chain((0..n.saturating_sub(1)).map(|j| SignVector::swap(m, n, false, j)))
        .collect();
    let x_single = full_signs || kind == OspKind::Ospodd;
    if kind != OspKind::Glmn || full_signs {
        gens.extend((0..n).map(|j| SignVector::flip(m, n, false, j)));
        if x_single {
            gens.extend((0..m).map(|i| SignVector::flip(m, n, true, i)));
        } else {
            for i in 0..m.saturating_sub(1) {
                let mut g = SignVector::flip(m, n, true, i);
                g.xsigns[i + 1] = -1;
                gens.push(g);
            }
        }
    }
    gens
}

/// Invariance under the Weyl group of the given algebra, tested on
/// generators.
pub fn is_w_invariant(f: &Polynomial, kind: OspKind) -> bool {
    let VarSpec { m, n, .. } = f.spec();
    generators(kind, m, n, false).iter().all(|g| apply_wprime(g, f).as_ref() == Ok(f))
}

/// Invariance under all of `W'`.
pub fn is_wprime_invariant(f: &Polynomial) -> bool {
    let VarSpec { m, n, .. } = f.spec();
    generators(OspKind::Ospeven, m, n, true).iter().all(|g| apply_wprime(g, f).as_ref() == Ok(f))
}

/// Every element of the Weyl group of `kind` (or all of `W'`).
pub fn group_elements(kind: OspKind, m: usize, n: usize, full_signs: bool) -> Vec<SignVector> {
    let sign_vectors = |k: usize, allowed: &dyn Fn(usize) -> bool| -> Vec<Vec<i8>> {
        (0..1usize << k)
            .filter(|mask| allowed(mask.count_ones() as usize))
            .map(|mask| (0..k).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect())
            .collect()
    };
    let (xs, ys) = match (kind, full_signs) {
        (OspKind::Glmn, false) => (vec![vec![1; m]], vec![vec![1; n]]),
        (OspKind::Ospeven, false) => (sign_vectors(m, &|c| c % 2 == 0), sign_vectors(n, &|_| true)),
        _ => (sign_vectors(m, &|_| true), sign_vectors(n, &|_| true)),
    };
    let mut out = Vec::new();
    for (xp, _) in signed_permutations(m) {
        for (yp, _) in signed_permutations(n) {
            for xsg in &xs {
                for ysg in &ys {
                    out.push(SignVector {
                        xsigns: xsg.clone(),
                        ysigns: ysg.clone(),
                        xperm: xp.clone(),
                        yperm: yp.clone(),
                    });
                }
            }
        }
    }
    out
}

/// `Σ_{g} g(f)` over the Weyl group of `kind` (or over `W'`).
pub fn orbit_sum(f: &Polynomial, kind: OspKind, full_signs: bool) -> Result<Polynomial> {
    let VarSpec { m, n, .. } = f.spec();
    let mut acc = Polynomial::zero(f.spec());
    for g in group_elements(kind, m, n, full_signs) {
        acc = acc + apply_wprime(&g, f)?;
    }
    Ok(acc)
}

/// Splits a `W`-invariant `f` (W of `osp(2m,2n)`) into its `W'`-invariant
/// part and its `σ`-skew part using the sign change of `h_1`.
pub fn sigma_decompose(f: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    if !is_w_invariant(f, OspKind::Ospeven) {
        return Err(Error::NotWInvariant);
    }
    let VarSpec { m, n, .. } = f.spec();
    if m == 0 {
        return Ok((f.clone(), Polynomial::zero(f.spec())));
    }
    let sf = apply_wprime(&SignVector::flip(m, n, true, 0), f)?;
    let half = Coeff::new(1.into(), 2.into());
    Ok(((f + &sf).scale(&half), (f - &sf).scale(&half)))
}

/// Rewrites a polynomial in even powers as a polynomial in
/// `u_i = h_i²`, `v_j = −h'_j²`; `None` when some exponent is odd.
pub fn from_squares(f: &Polynomial) -> Option<Polynomial> {
    if f.spec().laurent {
        return None;
    }
    let m = f.spec().m;
    let mut terms = Vec::with_capacity(f.len());
    for (mon, c) in f.terms() {
        if mon.exps().iter().any(|e| e % 2 != 0) {
            return None;
        }
        let ys: i32 = mon.exps()[m..].iter().map(|e| e / 2).sum();
        let e = mon.exps().iter().map(|e| e / 2).collect();
        terms.push((Monomial::new(e), if ys % 2 == 0 { c.clone() } else { -c.clone() }));
    }
    Some(Polynomial::from_terms(f.spec(), terms).expect("nonnegative"))
}

/// Inverse of [`from_squares`]: `u_i ↦ h_i²`, `v_j ↦ −h'_j²`.
pub fn to_squares(g: &Polynomial) -> Polynomial {
    let m = g.spec().m;
    let terms = g.terms().map(|(mon, c)| {
        let ys: i32 = mon.exps()[m..].iter().sum();
        let e = mon.exps().iter().map(|e| 2 * e).collect();
        (Monomial::new(e), if ys % 2 == 0 { c.clone() } else { -c.clone() })
    });
    Polynomial::from_terms(g.spec(), terms).expect("nonnegative")
}

/// Membership in `J = I_k(h_1², …, h_m²; h'_1², …, h'_n²)`.
pub fn j_membership(f: &Polynomial) -> bool {
    from_squares(f).is_some_and(|g| is_supersymmetric(&g))
}

/// `∏_{i,j} (h_i² − h'_j²)`.
pub fn t_osp(m: usize, n: usize) -> Polynomial {
    let spec = VarSpec::polynomial(m, n);
    let mut t = Polynomial::one(spec);
    for i in 0..m {
        for j in 0..n {
            let h = Polynomial::var(spec, Var::X(i)).unwrap();
            let hp = Polynomial::var(spec, Var::Y(j)).unwrap();
            t = t * (h.pow(2) - hp.pow(2));
        }
    }
    t
}

/// `h_1 ⋯ h_m`.
pub fn h_product(m: usize, n: usize) -> Polynomial {
    let mut e = vec![0; m + n];
    e[..m].fill(1);
    Polynomial::from_terms(VarSpec::polynomial(m, n), [(Monomial::new(e), coeff(1))]).unwrap()
}

/// `Φ = (h_1 ⋯ h_m)·T`.
pub fn phi_cap(m: usize, n: usize) -> Polynomial {
    h_product(m, n) * t_osp(m, n)
}

/// Whether `f` lies in the image `I(𝔥)` for the algebra described by `spec`.
pub fn ih_membership(f: &Polynomial, spec: OspSpec) -> Result<bool> {
    if f.spec() != spec.var_spec() {
        return Err(Error::SpecMismatch(format!("{:?}", f.spec()), format!("{:?}", spec.var_spec())));
    }
    match spec.kind {
        OspKind::Glmn => Ok(is_supersymmetric(f)),
        OspKind::Ospodd => Ok(j_membership(f)),
        OspKind::Ospeven => {
            let (f1, fsigma) = sigma_decompose(f)?;
            if !j_membership(&f1) {
                return Ok(false);
            }
            if fsigma.is_zero() {
                return Ok(true);
            }
            Ok(fsigma.divide_exact(&phi_cap(spec.m, spec.n)).is_ok_and(|q| is_wprime_invariant(&q)))
        }
    }
}
