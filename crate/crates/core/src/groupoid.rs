//! The Weyl groupoid of `gl(m|n)` acting on points, atypicality, and
//! separating witnesses for finite invariant point sets.
//!
//! Additive points live in `k^{m|n}`; the isotropic root `ε_i − δ_j` pairs
//! with a point as `x_i + y_j` and shifts it by `(+1 at x_i | −1 at y_j)`.
//! Multiplicative points live in `k^{*m|n}`; there the hyperplane is
//! `x_i = y_j` and the shift scales both coordinates by 2 (or 1/2).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{is_laurent_supersymmetric, t_element_l};
use crate::point::Point;
use crate::poly::{coeff, ratio, signed_permutations, Block, Coeff, Monomial, Polynomial, VarSpec};
use crate::supersym::{is_supersymmetric, power_sum, t_element};

/// Attempts made by [`separating_polynomial`] before giving up.
pub const SEPARATOR_RETRIES: usize = 32;

/// The isotropic root `sign·(ε_i − δ_j)`, indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

impl Root {
    pub fn new(i: usize, j: usize, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::InvalidArgument(format!("root sign must be ±1, got {sign}")));
        }
        Ok(Root { i, j, sign })
    }

    pub fn positive(i: usize, j: usize) -> Self {
        Root { i, j, sign: 1 }
    }

    pub fn negated(self) -> Self {
        Root { sign: -self.sign, ..self }
    }

    /// All `2mn` isotropic roots.
    pub fn all(m: usize, n: usize) -> Vec<Root> {
        let mut out = Vec::with_capacity(2 * m * n);
        for i in 0..m {
            for j in 0..n {
                out.push(Root { i, j, sign: 1 });
                out.push(Root { i, j, sign: -1 });
            }
        }
        out
    }

    fn check(&self, p: &Point) -> Result<()> {
        if self.i >= p.m() {
            return Err(Error::IndexOutOfRange(format!("x{}", self.i + 1)));
        }
        if self.j >= p.n() {
            return Err(Error::IndexOutOfRange(format!("y{}", self.j + 1)));
        }
        Ok(())
    }

    fn vanishes_at(&self, p: &Point) -> bool {
        if p.is_multiplicative() {
            p.x()[self.i] == p.y()[self.j]
        } else {
            (&p.x()[self.i] + &p.y()[self.j]).is_zero()
        }
    }
}

/// A finite set of points sharing one shape.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Point>", into = "Vec<Point>")]
pub struct PointSet {
    points: BTreeSet<Point>,
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = Error;

    fn try_from(points: Vec<Point>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(s: PointSet) -> Self {
        s.points.into_iter().collect()
    }
}

impl FromIterator<Point> for PointSet {
    /// Panics on mixed shapes; use [`PointSet::new`] for untrusted input.
    fn from_iter<I: IntoIterator<Item = Point>>(iter: I) -> Self {
        PointSet::new(iter).expect("points of one shape")
    }
}

impl PointSet {
    pub fn new<I: IntoIterator<Item = Point>>(points: I) -> Result<Self> {
        let points: BTreeSet<Point> = points.into_iter().collect();
        if let Some(first) = points.first() {
            for p in &points {
                if p.m() != first.m() || p.n() != first.n() || p.is_multiplicative() != first.is_multiplicative() {
                    return Err(Error::ShapeMismatch(first.m(), first.n()));
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn empty() -> Self {
        PointSet::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point> {
        self.points.iter()
    }

    pub fn union(&self, other: &PointSet) -> Result<PointSet> {
        PointSet::new(self.points.iter().chain(&other.points).cloned())
    }

    fn matches_shape(&self, p: &Point) -> bool {
        self.points
            .first()
            .is_none_or(|q| q.m() == p.m() && q.n() == p.n() && q.is_multiplicative() == p.is_multiplicative())
    }
}

/// `sign·(x_i + y_j)`.
pub fn pairing(alpha: Root, p: &Point) -> Result<Coeff> {
    if p.is_multiplicative() {
        return Err(Error::InvalidArgument("the pairing is defined for additive points".into()));
    }
    alpha.check(p)?;
    let v = &p.x()[alpha.i] + &p.y()[alpha.j];
    Ok(if alpha.sign > 0 { v } else { -v })
}

/// `τ_α(p) = p + α` on the hyperplane of `α`; multiplicatively, scales
/// `x_i = y_j` by `2^{sign}`.
pub fn tau_shift(alpha: Root, p: &Point) -> Result<Point> {
    alpha.check(p)?;
    if !alpha.vanishes_at(p) {
        return Err(Error::NotOnHyperplane);
    }
    let mut x = p.x().to_vec();
    let mut y = p.y().to_vec();
    if p.is_multiplicative() {
        let t = if alpha.sign > 0 { coeff(2) } else { ratio(1, 2) };
        x[alpha.i] *= &t;
        y[alpha.j] *= &t;
    } else {
        let s = coeff(alpha.sign as i64);
        x[alpha.i] += &s;
        y[alpha.j] -= &s;
    }
    Ok(p.with_coords(x, y))
}

/// All block permutations of `p`.
pub fn weyl_orbit(p: &Point) -> PointSet {
    let xs = signed_permutations(p.m());
    let ys = signed_permutations(p.n());
    let mut out = BTreeSet::new();
    for (xp, _) in &xs {
        for (yp, _) in &ys {
            out.insert(p.permuted(xp, yp));
        }
    }
    PointSet { points: out }
}

/// Closure of `{p}` under block permutations and isotropic shifts, each
/// chain using at most `depth_cap` shifts. The flag reports whether an
/// unvisited shift target was cut off by the cap.
pub fn groupoid_orbit(p: &Point, depth_cap: usize) -> (PointSet, bool) {
    let mut depth: BTreeMap<Point, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for q in weyl_orbit(p).points {
        depth.insert(q.clone(), 0);
        queue.push_back(q);
    }
    let roots = Root::all(p.m(), p.n());
    let mut truncated = false;
    while let Some(q) = queue.pop_front() {
        let d = depth[&q];
        for &alpha in &roots {
            let Ok(next) = tau_shift(alpha, &q) else { continue };
            if depth.contains_key(&next) {
                continue;
            }
            if d == depth_cap {
                truncated = true;
                continue;
            }
            for r in weyl_orbit(&next).points {
                if !depth.contains_key(&r) {
                    depth.insert(r.clone(), d + 1);
                    queue.push_back(r);
                }
            }
        }
    }
    (PointSet { points: depth.into_keys().collect() }, truncated)
}

/// Closed under block permutations and under every applicable shift.
pub fn is_invariant(v: &PointSet) -> bool {
    v.iter().all(|p| {
        weyl_orbit(p).iter().all(|q| v.contains(q))
            && Root::all(p.m(), p.n())
                .into_iter()
                .filter_map(|alpha| tau_shift(alpha, p).ok())
                .all(|q| v.contains(&q))
    })
}

fn edges(p: &Point) -> Vec<Vec<usize>> {
    (0..p.m())
        .map(|i| (0..p.n()).filter(|&j| Root::positive(i, j).vanishes_at(p)).collect())
        .collect()
}

/// Maximum matching of vanishing pairs `(i, j)`, found by augmenting paths.
pub fn atypical_pairs(p: &Point) -> Vec<(usize, usize)> {
    let adj = edges(p);
    let mut owner: Vec<Option<usize>> = vec![None; p.n()];
    fn augment(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &j in &adj[i] {
            if seen[j] {
                continue;
            }
            seen[j] = true;
            if owner[j].is_none_or(|k| augment(k, adj, seen, owner)) {
                owner[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..p.m() {
        augment(i, &adj, &mut vec![false; p.n()], &mut owner);
    }
    let mut pairs: Vec<(usize, usize)> = owner.iter().enumerate().filter_map(|(j, o)| o.map(|i| (i, j))).collect();
    pairs.sort_unstable();
    pairs
}

/// Degree of atypicality: the size of a maximum set of disjoint vanishing
/// pairs.
pub fn atypicality(p: &Point) -> usize {
    atypical_pairs(p).len()
}

/// A point with its matched pairs moved to the trailing slots
/// `{x_m, y_n}, {x_{m−1}, y_{n−1}}, …` and the same point with those slots
/// removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AtypicalReduction {
    pub r: usize,
    pub arranged: Point,
    pub reduced: Point,
}

pub fn atypical_reduction(p: &Point) -> AtypicalReduction {
    let pairs = atypical_pairs(p);
    let r = pairs.len();
    let (m, n) = (p.m(), p.n());
    let mut xperm = vec![usize::MAX; m];
    let mut yperm = vec![usize::MAX; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        xperm[i] = m - 1 - k;
        yperm[j] = n - 1 - k;
    }
    let fill = |perm: &mut Vec<usize>| {
        for (slot, t) in perm.iter_mut().filter(|t| **t == usize::MAX).enumerate() {
            *t = slot;
        }
    };
    fill(&mut xperm);
    fill(&mut yperm);
    let arranged = p.permuted(&xperm, &yperm);
    let reduced = arranged.with_coords(arranged.x()[..m - r].to_vec(), arranged.y()[..n - r].to_vec());
    AtypicalReduction { r, arranged, reduced }
}

/// Whether `f` vanishes on every point of `v`. `f` must be supersymmetric
/// (Laurent supersymmetric for multiplicative points).
pub fn vanishing_ideal_check(v: &PointSet, f: &Polynomial) -> Result<bool> {
    let multiplicative = v.iter().next().map_or(f.spec().laurent, Point::is_multiplicative);
    if multiplicative {
        if !is_laurent_supersymmetric(f) {
            return Err(Error::NotLaurentSupersymmetric);
        }
    } else if !is_supersymmetric(f) {
        return Err(Error::NotSupersymmetric);
    }
    for p in v.iter() {
        if !f.evaluate(p)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A supersymmetric `f` (Laurent supersymmetric for multiplicative points)
/// with `f = 0` on `v` and `f(p) ≠ 0`.
///
/// For typical `p` this is `T·h`, where `h` symmetrizes a product of affine
/// factors vanishing on `v`. For atypical `p` it is a product over the
/// W-orbits of `v` of `P − P(orbit)`, with `P` a random combination of super
/// power sums; power sums of degree up to `m + n` determine the reduced
/// generating function, so they tell the atypical `p` apart from every
/// (typical) point of `v`.
pub fn separating_polynomial(v: &PointSet, p: &Point, seed: u64) -> Result<Polynomial> {
    if !v.matches_shape(p) {
        let q = v.iter().next().expect("nonempty when shapes differ");
        return Err(Error::ShapeMismatch(q.m(), q.n()));
    }
    if !is_invariant(v) {
        return Err(Error::NotInvariant);
    }
    if v.contains(p) {
        return Err(Error::NoSeparator);
    }
    let spec = VarSpec::new(p.m(), p.n(), p.is_multiplicative());
    if atypicality(p) == 0 {
        typical_separator(v, p, spec, seed)
    } else {
        power_sum_separator(v, p, spec, seed)
    }
}

fn coordinate(spec: VarSpec, k: usize) -> Polynomial {
    Polynomial::var(spec, spec.var_at(k)).expect("index in range")
}

fn coords(p: &Point) -> Vec<Coeff> {
    p.x().iter().chain(p.y()).cloned().collect()
}

fn typical_separator(v: &PointSet, p: &Point, spec: VarSpec, seed: u64) -> Result<Polynomial> {
    let t = if spec.laurent { t_element_l(spec.m, spec.n) } else { t_element(spec.m, spec.n) };
    let pc = coords(p);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..SEPARATOR_RETRIES {
        let mut h0 = Polynomial::one(spec);
        if attempt == 0 {
            for q in v.iter() {
                for (k, (a, b)) in pc.iter().zip(coords(q)).enumerate() {
                    if *a != b {
                        h0 = h0 * (coordinate(spec, k) - Polynomial::constant(spec, b));
                    }
                }
            }
        } else {
            let form: Vec<Coeff> = (0..spec.nvars()).map(|_| coeff(rng.gen_range(-5i64..=5))).collect();
            let eval = |c: &[Coeff]| c.iter().zip(&form).fold(Coeff::zero(), |acc, (a, b)| acc + a * b);
            let ell = (0..spec.nvars()).fold(Polynomial::zero(spec), |acc, k| acc + coordinate(spec, k).scale(&form[k]));
            let target = eval(&pc);
            if v.iter().any(|q| eval(&coords(q)) == target) {
                continue;
            }
            for q in v.iter() {
                h0 = h0 * (&ell - &Polynomial::constant(spec, eval(&coords(q))));
            }
        }
        let h = if h0.is_w_invariant() { h0 } else { h0.symmetrize(Block::X)?.symmetrize(Block::Y)? };
        if h.evaluate(p)?.is_zero() {
            continue;
        }
        return Ok(t * h);
    }
    Err(Error::RetryBudget(SEPARATOR_RETRIES))
}

fn power_sums(spec: VarSpec) -> Result<Vec<Polynomial>> {
    let top = (spec.m + spec.n) as u32;
    (1..=top.max(1))
        .map(|r| {
            if spec.laurent {
                let mut terms = Vec::new();
                for k in 0..spec.nvars() {
                    let mut e = vec![0; spec.nvars()];
                    e[k] = r as i32;
                    terms.push((Monomial::new(e), coeff(if k < spec.m { 1 } else { -1 })));
                }
                Polynomial::from_terms(spec, terms)
            } else {
                power_sum(r, spec.m, spec.n)
            }
        })
        .collect()
}

fn power_sum_separator(v: &PointSet, p: &Point, spec: VarSpec, seed: u64) -> Result<Polynomial> {
    let sums = power_sums(spec)?;
    let at_p = sums.iter().map(|s| s.evaluate(p)).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut f = Polynomial::one(spec);
    let mut seen = BTreeSet::new();
    for q in v.iter() {
        if seen.contains(q) {
            continue;
        }
        seen.extend(weyl_orbit(q).points);
        let at_q = sums.iter().map(|s| s.evaluate(q)).collect::<Result<Vec<_>>>()?;
        if at_q == at_p {
            return Err(Error::NoSeparator);
        }
        let mut factor = None;
        for _ in 0..SEPARATOR_RETRIES {
            let c: Vec<Coeff> = sums.iter().map(|_| coeff(rng.gen_range(-5i64..=5))).collect();
            let diff = c.iter().zip(at_p.iter().zip(&at_q)).fold(Coeff::zero(), |acc, (c, (a, b))| acc + c * (a - b));
            if diff.is_zero() {
                continue;
            }
            let combo = c.iter().zip(&sums).fold(Polynomial::zero(spec), |acc, (c, s)| acc + s.scale(c));
            let level = c.iter().zip(&at_q).fold(Coeff::zero(), |acc, (c, b)| acc + c * b);
            factor = Some(combo - Polynomial::constant(spec, level));
            break;
        }
        f = f * factor.ok_or(Error::RetryBudget(SEPARATOR_RETRIES))?;
    }
    debug_assert!(!f.evaluate(p)?.is_zero());
    Ok(f)
}

/// Applies the evaluation map `r` times, pairing `{x_m, y_n}`, then
/// `{x_{m−1}, y_{n−1}}`, and so on.
pub fn iterated_phi(f: &Polynomial, r: usize) -> Result<Polynomial> {
    let mut g = f.clone();
    for _ in 0..r {
        g = if g.spec().laurent { crate::laurent::phi_l(&g)? } else { crate::supersym::phi_s(&g)? };
    }
    Ok(g)
}

/// `true` when `f` is constant along every sampled line `q + kα`,
/// `k ∈ [−3, 3]`, through `q` on a hyperplane.
pub fn constant_on_lines(f: &Polynomial, points: &[Point]) -> Result<bool> {
    for q in points {
        for alpha in Root::all(q.m(), q.n()) {
            if !alpha.vanishes_at(q) {
                continue;
            }
            let base = f.evaluate(q)?;
            let mut fwd = q.clone();
            let mut back = q.clone();
            for _ in 0..3 {
                fwd = tau_shift(alpha, &fwd)?;
                back = tau_shift(alpha.negated(), &back)?;
                if f.evaluate(&fwd)? != base || f.evaluate(&back)? != base {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A random point on the hyperplane of `alpha`, coordinates rational with
/// numerators in `[−9, 9]` and denominators in `[1, 4]`.
pub fn random_point_on(alpha: Root, m: usize, n: usize, rng: &mut impl Rng) -> Point {
    let mut draw = || ratio(rng.gen_range(-9i64..=9), rng.gen_range(1i64..=4));
    let x: Vec<Coeff> = (0..m).map(|_| draw()).collect();
    let mut y: Vec<Coeff> = (0..n).map(|_| draw()).collect();
    y[alpha.j] = -x[alpha.i].clone();
    Point::new(x, y, false).expect("additive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::atypicality_brute_force;
    use crate::partition::{enumerate_hook, Partition};
    use crate::supersym::super_schur;
    use proptest::prelude::*;

    fn pt(x: &[i64], y: &[i64]) -> Point {
        Point::additive_ints(x, y)
    }

    fn set(points: &[Point]) -> PointSet {
        points.iter().cloned().collect()
    }

    #[test]
    fn pairing_examples() {
        let a = Root::positive(0, 0);
        assert_eq!(pairing(a, &pt(&[3], &[-3])).unwrap(), coeff(0));
        assert_eq!(pairing(a, &pt(&[1], &[2])).unwrap(), coeff(3));
        assert_eq!(pairing(a.negated(), &pt(&[1], &[2])).unwrap(), coeff(-3));
    }

    #[test]
    fn tau_shift_examples() {
        let a = Root::positive(0, 0);
        assert_eq!(tau_shift(a, &pt(&[3], &[-3])).unwrap(), pt(&[4], &[-4]));
        assert_eq!(tau_shift(a.negated(), &pt(&[3], &[-3])).unwrap(), pt(&[2], &[-2]));
        assert_eq!(tau_shift(a, &pt(&[1], &[2])), Err(Error::NotOnHyperplane));
        let q = Point::multiplicative_ints(&[3, 1], &[3]).unwrap();
        let shifted = tau_shift(a, &q).unwrap();
        assert_eq!(shifted, Point::multiplicative_ints(&[6, 1], &[6]).unwrap());
        assert_eq!(tau_shift(a.negated(), &shifted).unwrap(), q);
    }

    #[test]
    fn weyl_orbit_examples() {
        assert_eq!(weyl_orbit(&pt(&[1, 2], &[3, 4])).len(), 4);
        assert_eq!(weyl_orbit(&pt(&[1, 1], &[3, 4])).len(), 2);
        assert_eq!(weyl_orbit(&pt(&[5], &[7])).len(), 1);
    }

    #[test]
    fn groupoid_orbit_examples() {
        let (s, t) = groupoid_orbit(&pt(&[1], &[2]), 5);
        assert_eq!(s, set(&[pt(&[1], &[2])]));
        assert!(!t);
        let (s, t) = groupoid_orbit(&pt(&[3], &[-3]), 2);
        assert_eq!(s, set(&(1..=5).map(|k| pt(&[k], &[-k])).collect::<Vec<_>>()));
        assert!(t);
        let (s, t) = groupoid_orbit(&pt(&[0], &[0]), 0);
        assert_eq!(s.len(), 1);
        assert!(t);
    }

    #[test]
    fn invariance_examples() {
        assert!(is_invariant(&set(&[pt(&[1], &[2])])));
        assert!(!is_invariant(&set(&[pt(&[3], &[-3])])));
        assert!(is_invariant(&weyl_orbit(&pt(&[1, 2], &[3, 4]))));
        assert!(!is_invariant(&set(&[pt(&[1, 2], &[3, 4])])));
    }

    #[test]
    fn atypicality_examples() {
        assert_eq!(atypicality(&pt(&[3], &[-3])), 1);
        assert_eq!(atypicality(&pt(&[1, 2], &[-1, -2])), 2);
        assert_eq!(atypicality(&pt(&[1, 2], &[5, 7])), 0);
        assert_eq!(atypicality(&pt(&[1, 1], &[-1, -1])), 2);
        assert_eq!(atypicality(&Point::multiplicative_ints(&[2, 3], &[3, 3]).unwrap()), 1);
    }

    #[test]
    fn t_vanishes_exactly_on_atypical_points() {
        for p in [pt(&[1, 2], &[-2, 5]), pt(&[1, 2], &[2, 5]), pt(&[0, 0], &[0, 1])] {
            let t = t_element(2, 2).evaluate(&p).unwrap();
            assert_eq!(t.is_zero(), atypicality(&p) >= 1);
        }
    }

    #[test]
    fn vanishing_check_examples() {
        let t = t_element(1, 1);
        assert!(vanishing_ideal_check(&set(&[pt(&[3], &[-3])]), &t).unwrap());
        let f1 = super_schur(&Partition::new(vec![1]).unwrap(), 1, 1).unwrap();
        assert!(!vanishing_ideal_check(&set(&[pt(&[1], &[2])]), &f1).unwrap());
        let zero = Polynomial::zero(VarSpec::polynomial(1, 1));
        assert!(vanishing_ideal_check(&set(&[pt(&[1], &[2]), pt(&[4], &[0])]), &zero).unwrap());
        let bad = Polynomial::monomial(VarSpec::polynomial(1, 1), coeff(1), &[2], &[0]).unwrap();
        assert_eq!(vanishing_ideal_check(&PointSet::empty(), &bad), Err(Error::NotSupersymmetric));
    }

    #[test]
    fn separator_examples() {
        let s = VarSpec::polynomial(1, 1);
        let f = separating_polynomial(&set(&[pt(&[1], &[2])]), &pt(&[3], &[4]), 0).unwrap();
        let x = coordinate(s, 0);
        let y = coordinate(s, 1);
        let one = Polynomial::one(s);
        assert_eq!(f, (&x + &y) * (&x - &one) * (&y - &one.scale(&coeff(2))));
        assert_eq!(f.evaluate(&pt(&[3], &[4])).unwrap(), coeff(28));

        let g = separating_polynomial(&PointSet::empty(), &pt(&[3], &[4]), 0).unwrap();
        assert_eq!(g, t_element(1, 1));
        assert_eq!(separating_polynomial(&set(&[pt(&[1], &[2])]), &pt(&[1], &[2]), 0), Err(Error::NoSeparator));
        assert_eq!(separating_polynomial(&set(&[pt(&[3], &[-3])]), &pt(&[1], &[2]), 0), Err(Error::NotInvariant));
    }

    #[test]
    fn separator_for_atypical_points() {
        let v = weyl_orbit(&pt(&[1, 2], &[3, 4]));
        for p in [pt(&[1, 5], &[-5, 3]), pt(&[1, 2], &[-1, -2]), pt(&[0, 0], &[0, 0])] {
            let f = separating_polynomial(&v, &p, 3).unwrap();
            assert!(is_supersymmetric(&f));
            assert!(vanishing_ideal_check(&v, &f).unwrap());
            assert!(!f.evaluate(&p).unwrap().is_zero());
            let red = atypical_reduction(&p);
            assert_eq!(f.evaluate(&p).unwrap(), iterated_phi(&f, red.r).unwrap().evaluate(&red.reduced).unwrap());
        }
    }

    #[test]
    fn separator_in_the_multiplicative_case() {
        let q = Point::multiplicative_ints(&[1, 2], &[3, 4]).unwrap();
        let v = weyl_orbit(&q);
        for (p, seed) in [
            (Point::multiplicative_ints(&[5, 2], &[3, 4]).unwrap(), 0),
            (Point::multiplicative_ints(&[3, 1], &[3, 2]).unwrap(), 1),
        ] {
            let f = separating_polynomial(&v, &p, seed).unwrap();
            assert!(is_laurent_supersymmetric(&f));
            assert!(vanishing_ideal_check(&v, &f).unwrap());
            assert!(!f.evaluate(&p).unwrap().is_zero());
        }
    }

    #[test]
    fn reduction_moves_pairs_to_the_end() {
        let red = atypical_reduction(&pt(&[7, -2, 5], &[2, 9]));
        assert_eq!(red.r, 1);
        assert_eq!(red.arranged, pt(&[7, 5, -2], &[9, 2]));
        assert_eq!(red.reduced, pt(&[7, 5], &[9]));
    }

    #[test]
    fn super_schur_is_constant_on_groupoid_lines() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let points: Vec<Point> = Root::all(2, 2)
            .into_iter()
            .flat_map(|a| (0..3).map(|_| random_point_on(a, 2, 2, &mut rng)).collect::<Vec<_>>())
            .collect();
        for d in 0..=4 {
            for lam in enumerate_hook(2, 2, d) {
                let f = super_schur(&lam, 2, 2).unwrap();
                assert!(constant_on_lines(&f, &points).unwrap());
            }
        }
        let control = Polynomial::monomial(VarSpec::polynomial(2, 2), coeff(1), &[2, 0], &[0, 0]).unwrap()
            + Polynomial::monomial(VarSpec::polynomial(2, 2), coeff(1), &[0, 0], &[2, 0]).unwrap();
        assert!(!constant_on_lines(&control, &points).unwrap());
    }

    #[test]
    fn point_set_json() {
        let s = set(&[pt(&[1], &[2]), pt(&[3], &[-3])]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"[{"x":["1"],"y":["2"],"multiplicative":false},{"x":["3"],"y":["-3"],"multiplicative":false}]"#);
        assert_eq!(serde_json::from_str::<PointSet>(&text).unwrap(), s);
        assert!(serde_json::from_str::<PointSet>(r#"[{"x":["1"],"y":["2"]},{"x":["1","2"],"y":["2"]}]"#).is_err());
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        (0usize..=4, 0usize..=4, any::<bool>()).prop_flat_map(|(m, n, mult)| {
            let range = if mult { 1i64..=5 } else { -3i64..=3 };
            (proptest::collection::vec(range.clone(), m), proptest::collection::vec(range, n)).prop_map(
                move |(x, y)| if mult { Point::multiplicative_ints(&x, &y).unwrap() } else { Point::additive_ints(&x, &y) },
            )
        })
    }

    proptest! {
        #[test]
        fn matching_agrees_with_brute_force(p in arb_point()) {
            prop_assert_eq!(atypicality(&p), atypicality_brute_force(&p));
        }

        #[test]
        fn atypicality_is_weyl_constant(p in arb_point()) {
            let r = atypicality(&p);
            for q in weyl_orbit(&p).iter() {
                prop_assert_eq!(atypicality(q), r);
            }
        }

        #[test]
        fn finite_orbits_are_typical(x in proptest::collection::vec(-3i64..=3, 1..=3), y in proptest::collection::vec(-3i64..=3, 1..=3)) {
            let p = pt(&x, &y);
            let (_, truncated) = groupoid_orbit(&p, 2);
            prop_assert_eq!(!truncated, atypicality(&p) == 0);
        }

        #[test]
        fn vanishing_respects_unions(a in proptest::collection::vec((-3i64..=3, -3i64..=3), 0..4), b in proptest::collection::vec((-3i64..=3, -3i64..=3), 0..4), k in 0usize..3) {
            let v1 = set(&a.iter().map(|&(x, y)| pt(&[x], &[y])).collect::<Vec<_>>());
            let v2 = set(&b.iter().map(|&(x, y)| pt(&[x], &[y])).collect::<Vec<_>>());
            let f = [t_element(1, 1), power_sum(1, 1, 1).unwrap(), t_element(1, 1) * power_sum(2, 1, 1).unwrap() - power_sum(1, 1, 1).unwrap()][k].clone();
            let both = vanishing_ideal_check(&v1.union(&v2).unwrap(), &f).unwrap();
            prop_assert_eq!(both, vanishing_ideal_check(&v1, &f).unwrap() && vanishing_ideal_check(&v2, &f).unwrap());
        }
    }
}
