//! Partitions, the `(m,n)`-hook, Vandermonde products, Schur polynomials
//! and Euler characters.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{coeff, Block, Monomial, Polynomial, Var, VarSpec};

/// A weakly decreasing sequence of positive integers (zeros trimmed).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Validates and trims trailing zeros.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return u32::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        Partition((1..=cols).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect())
    }

    /// Cells `(i, j)` of the Young diagram, 1-based.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p as usize).map(move |j| (i + 1, j)))
            .collect()
    }

    /// `λ_{m+1} ≤ n`.
    pub fn in_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) as usize <= n
    }

    /// Whether `(m, n)` is a cell of the diagram, i.e. `λ ∈ H⁰_{m,n}`.
    pub fn in_h0(&self, m: usize, n: usize) -> Result<bool> {
        self.require_hook(m, n)?;
        Ok(m >= 1 && n >= 1 && self.part(m) as usize >= n)
    }

    fn require_hook(&self, m: usize, n: usize) -> Result<()> {
        if self.in_hook(m, n) {
            Ok(())
        } else {
            Err(Error::NotInHook(self.to_string(), m, n))
        }
    }

    /// The partitions `μ_i = max(0, λ_i − n)` and `ν_j = max(0, λ'_j − m)`
    /// describing the diagram outside the `m × n` corner.
    pub fn hook_mu_nu(&self, m: usize, n: usize) -> Result<(Partition, Partition)> {
        self.require_hook(m, n)?;
        let clip = |v: &[u32], k: usize| {
            Partition(v.iter().map(|&p| (p as usize).saturating_sub(k) as u32).filter(|&p| p > 0).collect())
        };
        Ok((clip(&self.0, n), clip(&self.transpose().0, m)))
    }

    /// Cells of the diagram inside the `m × n` corner.
    pub fn corner_cells(&self, m: usize, n: usize) -> Vec<(usize, usize)> {
        self.cells().into_iter().filter(|&(i, j)| i <= m && j <= n).collect()
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        let parts = v
            .into_iter()
            .map(|p| u32::try_from(p).map_err(|_| Error::Parse(format!("bad part {p}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.0.into_iter().map(i64::from).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A weakly decreasing integer sequence of fixed length; entries may be
/// negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SignatureJson", into = "SignatureJson")]
pub struct IntegerSignature(Vec<i32>);

#[derive(Serialize, Deserialize)]
struct SignatureJson {
    entries: Vec<i32>,
}

impl TryFrom<SignatureJson> for IntegerSignature {
    type Error = Error;

    fn try_from(j: SignatureJson) -> Result<Self> {
        IntegerSignature::new(j.entries).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<IntegerSignature> for SignatureJson {
    fn from(s: IntegerSignature) -> Self {
        SignatureJson { entries: s.0 }
    }
}

impl IntegerSignature {
    pub fn new(entries: Vec<i32>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(IntegerSignature(entries))
    }

    pub fn entries(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    /// All weakly decreasing signatures of length `len` with entries in
    /// `[lo, hi]`.
    pub fn all_in_range(len: usize, lo: i32, hi: i32) -> Vec<IntegerSignature> {
        fn rec(len: usize, lo: i32, hi: i32, prefix: &mut Vec<i32>, out: &mut Vec<IntegerSignature>) {
            if prefix.len() == len {
                out.push(IntegerSignature(prefix.clone()));
                return;
            }
            let top = prefix.last().copied().unwrap_or(hi);
            for v in (lo..=top).rev() {
                prefix.push(v);
                rec(len, lo, hi, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, lo, hi, &mut Vec::new(), &mut out);
        out
    }
}

impl From<&Partition> for IntegerSignature {
    fn from(p: &Partition) -> Self {
        IntegerSignature(p.0.iter().map(|&v| v as i32).collect())
    }
}

impl fmt::Display for IntegerSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

/// Partitions of `d` in reverse lexicographic order.
pub fn partitions_of(d: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            prefix.push(p);
            rec(rem - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `d` contained in the `(m,n)`-hook, reverse lexicographic.
pub fn enumerate_hook(m: usize, n: usize, d: u32) -> Vec<Partition> {
    partitions_of(d).into_iter().filter(|p| p.in_hook(m, n)).collect()
}

fn block_var(block: Block, i: usize) -> Var {
    match block {
        Block::X => Var::X(i),
        Block::Y => Var::Y(i),
    }
}

fn block_monomial(spec: VarSpec, block: Block, exps: &[i32]) -> Monomial {
    let mut e = vec![0; spec.nvars()];
    let off = match block {
        Block::X => 0,
        Block::Y => spec.m,
    };
    e[off..off + exps.len()].copy_from_slice(exps);
    Monomial::new(e)
}

/// `∏_{i<j} (v_i − v_j)` over the variables of `block` in `spec`.
pub fn vandermonde_in(spec: VarSpec, block: Block) -> Polynomial {
    let k = spec.block_len(block);
    let mut out = Polynomial::one(spec);
    for i in 0..k {
        for j in i + 1..k {
            let vi = Polynomial::var(spec, block_var(block, i)).expect("in range");
            let vj = Polynomial::var(spec, block_var(block, j)).expect("in range");
            out = &out * &(vi - vj);
        }
    }
    out
}

/// Vandermonde product in a spec consisting of `m` variables of `block`.
pub fn vandermonde(m: usize, block: Block) -> Polynomial {
    let spec = match block {
        Block::X => VarSpec::polynomial(m, 0),
        Block::Y => VarSpec::polynomial(0, m),
    };
    vandermonde_in(spec, block)
}

/// Bialternant `{v^{e+δ}} / Δ` on `block`, with `δ = (k−1, …, 0)`.
fn bialternant(spec: VarSpec, block: Block, exps: &[i32]) -> Result<Polynomial> {
    let k = spec.block_len(block);
    let shifted: Vec<i32> = exps.iter().enumerate().map(|(i, &e)| e + (k - 1 - i) as i32).collect();
    let lead = Polynomial::from_terms(spec, [(block_monomial(spec, block, &shifted), coeff(1))])?;
    lead.alternate(block)?.divide_exact(&vandermonde_in(spec, block))
}

/// Schur polynomial `S_μ` in the variables of `block` of `spec`.
pub fn schur_in(mu: &Partition, spec: VarSpec, block: Block) -> Result<Polynomial> {
    let k = spec.block_len(block);
    if mu.len() > k {
        return Err(Error::PartitionTooLong(mu.to_string(), k));
    }
    let mut exps: Vec<i32> = mu.parts().iter().map(|&p| p as i32).collect();
    exps.resize(k, 0);
    bialternant(spec, block, &exps)
}

/// Schur polynomial `S_μ(x_1, …, x_m)`.
pub fn schur(mu: &Partition, m: usize) -> Result<Polynomial> {
    schur_in(mu, VarSpec::polynomial(m, 0), Block::X)
}

/// Euler character `E_λ` in the variables of `block` of a Laurent `spec`.
pub fn euler_character_in(lambda: &IntegerSignature, spec: VarSpec, block: Block) -> Result<Polynomial> {
    let k = spec.block_len(block);
    if lambda.len() != k {
        return Err(Error::InvalidArgument(format!("signature {lambda} has length != {k}")));
    }
    if !spec.laurent {
        return Err(Error::InvalidArgument("Euler characters live in a Laurent spec".into()));
    }
    bialternant(spec, block, lambda.entries())
}

/// Euler character `E_λ(x_1, …, x_m)` as a Laurent polynomial.
pub fn euler_character(lambda: &IntegerSignature, m: usize) -> Result<Polynomial> {
    euler_character_in(lambda, VarSpec::laurent(m, 0), Block::X)
}
