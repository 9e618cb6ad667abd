//! The ten acceptance checks, runnable from the library, the CLI and the
//! test suite alike.

use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::groupoid::{
    atypical_reduction, atypicality, constant_on_lines, iterated_phi, random_point_on, separating_polynomial,
    vanishing_ideal_check, weyl_orbit, Root,
};
use crate::laurent::{cod_check_with_samples, k_element, phi_l, z_plus, SignaturePair, DEFAULT_TORUS_SAMPLES};
use crate::linalg;
use crate::oracle::{atypicality_brute_force, super_schur_rational_sum};
use crate::osp::{
    h_product, ih_membership, orbit_sum, phi_cap, sigma_decompose, t_osp, to_squares, OspKind, OspSpec,
};
use crate::partition::{enumerate_hook, IntegerSignature, Partition};
use crate::point::Point;
use crate::poly::{coeff, Binding, Coeff, Monomial, Polynomial, Var, VarSpec};
use crate::supersym::{
    decompose, is_supersymmetric, kernel_witness, phi_s, power_sum, super_schur, super_schur_factored,
};

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {:<32} {} ({}; {} ms)",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.detail,
            self.millis
        )
    }
}

type Check = fn(u64) -> Result<String, String>;

const CRITERIA: [(u32, &str, Check); 10] = [
    (1, "super Schur correctness", super_schur_correctness),
    (2, "factorization identity", factorization_identity),
    (3, "stability and kernel", stability_and_kernel),
    (4, "basis decomposition", basis_decomposition),
    (5, "Laurent condition equivalence", laurent_equivalence),
    (6, "Laurent kernel basis", laurent_kernel),
    (7, "atypicality oracle", atypicality_oracle),
    (8, "groupoid line constancy", groupoid_link),
    (9, "separating witnesses", separating_witness),
    (10, "osp(2,2) membership", osp_membership),
];

pub const CRITERION_COUNT: u32 = CRITERIA.len() as u32;

/// Runs one criterion; `None` for an unknown id.
pub fn run(id: u32, seed: u64) -> Option<CriterionReport> {
    let &(id, name, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check(seed);
    let millis = start.elapsed().as_millis();
    let (passed, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(CriterionReport { id, name, passed, detail, millis })
}

pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|c| run(c.0, seed).expect("known id")).collect()
}

fn rng_for(seed: u64, id: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(id))
}

fn fail<E: fmt::Display>(ctx: impl fmt::Display) -> impl FnOnce(E) -> String {
    move |e| format!("{ctx}: {e}")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hook_upto(m: usize, n: usize, max: u32) -> Vec<Partition> {
    (0..=max).flat_map(|d| enumerate_hook(m, n, d)).collect()
}

fn h0_upto(m: usize, n: usize, max: u32) -> Vec<Partition> {
    hook_upto(m, n, max).into_iter().filter(|l| l.in_h0(m, n).unwrap_or(false)).collect()
}

fn super_schur_correctness(_seed: u64) -> Result<String, String> {
    let mut count = 0;
    let probes = [
        Point::additive_ints(&[2, 5], &[-1, 3]),
        Point::additive_ints(&[-3, 7], &[4, 11]),
        Point::additive_ints(&[3], &[-7]),
    ];
    for (m, n, max) in [(2, 2, 6), (1, 1, 8)] {
        for lam in hook_upto(m, n, max) {
            let f = super_schur(&lam, m, n).map_err(fail(&lam))?;
            ensure(is_supersymmetric(&f), || format!("F_{lam} ({m},{n}) is not supersymmetric"))?;
            ensure(f.is_homogeneous() && f.degree().unwrap_or(0) == lam.size() as i64, || {
                format!("F_{lam} ({m},{n}) is not homogeneous of degree {}", lam.size())
            })?;
            ensure(f.is_integral(), || format!("F_{lam} ({m},{n}) has a non-integer coefficient"))?;
            for p in probes.iter().filter(|p| p.m() == m && p.n() == n) {
                let oracle = super_schur_rational_sum(&lam, m, n, p).ok_or("oracle probe degenerate")?;
                ensure(f.evaluate(p).map_err(|e| e.to_string())? == oracle, || {
                    format!("F_{lam} ({m},{n}) disagrees with the rational-sum oracle at {p}")
                })?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} polynomials, each matched against the rational-sum oracle"))
}

fn factorization_identity(_seed: u64) -> Result<String, String> {
    let family = h0_upto(2, 2, 8);
    for lam in &family {
        let lhs = super_schur(lam, 2, 2).map_err(fail(lam))?;
        let rhs = super_schur_factored(lam, 2, 2).map_err(fail(lam))?;
        ensure(lhs == rhs, || format!("F_{lam} differs from its factored form"))?;
    }
    Ok(format!("{} partitions in H0(2,2)", family.len()))
}

fn stability_and_kernel(_seed: u64) -> Result<String, String> {
    let hook21 = hook_upto(2, 1, 6);
    for lam in &hook21 {
        let big = super_schur(lam, 2, 2).map_err(fail(lam))?;
        let small = super_schur(lam, 2, 1).map_err(fail(lam))?;
        let restricted = big
            .substitute(&[(Var::Y(1), Binding::Scalar(Coeff::zero()))])
            .and_then(|p| p.drop_vars(&[Var::Y(1)]))
            .map_err(fail(lam))?;
        ensure(restricted == small, || format!("F_{lam}(2,2) at y2 = 0 differs from F_{lam}(2,1)"))?;
    }
    let h0 = h0_upto(2, 2, 8);
    for lam in &h0 {
        let f = super_schur(lam, 2, 2).map_err(fail(lam))?;
        ensure(phi_s(&f).map_err(|e| e.to_string())?.is_zero(), || format!("phi(F_{lam}) is nonzero"))?;
        let b = kernel_witness(&f).map_err(fail(lam))?;
        ensure(b.is_w_invariant(), || format!("kernel quotient of F_{lam} is not W-invariant"))?;
    }
    Ok(format!("{} restrictions, {} kernel elements", hook21.len(), h0.len()))
}

fn random_power_sum_product(rng: &mut ChaCha8Rng, max_degree: u32) -> Polynomial {
    let mut f = Polynomial::one(VarSpec::polynomial(2, 2));
    let mut budget = rng.gen_range(1..=max_degree);
    while budget > 0 {
        let r = rng.gen_range(1..=budget.min(4));
        f = f * power_sum(r, 2, 2).expect("r >= 1");
        budget -= r;
    }
    f
}

fn basis_decomposition(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 4);
    let spec = VarSpec::polynomial(2, 2);
    for k in 0..50 {
        let mut f = Polynomial::zero(spec);
        for _ in 0..rng.gen_range(1..=3) {
            let c = coeff(rng.gen_range(-5i64..=5));
            f = f + random_power_sum_product(&mut rng, 8).scale(&c);
        }
        let dec = decompose(&f).map_err(fail(format!("combination {k}")))?;
        ensure(dec.is_integral(), || format!("combination {k} has a non-integer coefficient"))?;
        ensure(dec.reconstruct().map_err(|e| e.to_string())? == f, || format!("combination {k} does not rebuild"))?;
    }
    let s11 = VarSpec::polynomial(1, 1);
    let x2_minus_y2 = Polynomial::monomial(s11, coeff(1), &[2], &[0]).unwrap()
        - Polynomial::monomial(s11, coeff(1), &[0], &[2]).unwrap();
    let dec = decompose(&x2_minus_y2).map_err(|e| e.to_string())?;
    let two = Partition::new(vec![2]).unwrap();
    let one_one = Partition::new(vec![1, 1]).unwrap();
    ensure(dec.coeffs().len() == 2 && dec.coefficient(&two) == coeff(1) && dec.coefficient(&one_one) == coeff(-1), || {
        "x^2 - y^2 is not F_(2) - F_(1,1)".into()
    })?;
    Ok("50 combinations decomposed with integer coefficients; x^2 - y^2 = F_(2) - F_(1,1)".into())
}

fn random_laurent(rng: &mut ChaCha8Rng, spec: VarSpec, max_terms: usize) -> Polynomial {
    let terms: Vec<(Monomial, Coeff)> = (0..rng.gen_range(0..=max_terms))
        .map(|_| {
            let e = (0..spec.nvars()).map(|_| rng.gen_range(-3i32..=3)).collect();
            (Monomial::new(e), coeff(rng.gen_range(-5i64..=5)))
        })
        .collect();
    Polynomial::from_terms(spec, terms).expect("laurent spec")
}

fn laurent_equivalence(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 5);
    let spec = VarSpec::laurent(1, 1);
    let mut members = 0;
    let mut resampled = 0;
    for k in 0..200 {
        // Every fourth instance is a polynomial in x/y + y/x, hence a member.
        let mut f = random_laurent(&mut rng, spec, 6);
        if k % 4 == 0 {
            let sym = Polynomial::monomial(spec, coeff(1), &[1], &[-1]).unwrap()
                + Polynomial::monomial(spec, coeff(1), &[-1], &[1]).unwrap();
            f = Polynomial::constant(spec, coeff(rng.gen_range(-3i64..=3))) + sym.pow(rng.gen_range(0..=3));
        }
        let mut c = cod_check_with_samples(&f, rng.gen(), DEFAULT_TORUS_SAMPLES).map_err(|e| e.to_string())?;
        ensure(c.exact_agree(), || format!("exact conditions disagree on {f}: {c:?}"))?;
        let mut tries = 0;
        while c.c != c.a && tries < 3 {
            resampled += 1;
            tries += 1;
            c = cod_check_with_samples(&f, rng.gen(), DEFAULT_TORUS_SAMPLES).map_err(|e| e.to_string())?;
        }
        ensure(c.all_equal(), || format!("sampled torus condition disagrees on {f}: {c:?}"))?;
        members += c.a as usize;
    }
    for k in 0..50 {
        let r = Polynomial::constant(spec, coeff(rng.gen_range(-5i64..=5)));
        let s = random_laurent(&mut rng, spec, 6);
        let f = &r + &(&s * &z_plus(spec));
        let c = cod_check_with_samples(&f, rng.gen(), DEFAULT_TORUS_SAMPLES).map_err(|e| e.to_string())?;
        ensure(c.all_true(), || format!("constructed r + s z number {k} fails: {c:?}"))?;
    }
    Ok(format!("200 instances ({members} members, {resampled} resampled), 50 constructed members"))
}

fn laurent_kernel(_seed: u64) -> Result<String, String> {
    let sigs = IntegerSignature::all_in_range(1, -2, 2);
    let mut by_degree: std::collections::BTreeMap<i64, Vec<Polynomial>> = Default::default();
    for l in &sigs {
        for m in &sigs {
            let sig = SignaturePair::new(l.clone(), m.clone());
            let k = k_element(&sig).map_err(|e| e.to_string())?;
            ensure(phi_l(&k).map_err(|e| e.to_string())?.is_zero(), || format!("phi(K) nonzero for {sig:?}"))?;
            by_degree.entry(sig.degree()).or_default().push(k);
        }
    }
    for (d, polys) in &by_degree {
        let mons: std::collections::BTreeSet<Monomial> =
            polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
        let rows: Vec<Vec<Coeff>> = polys.iter().map(|p| mons.iter().map(|m| p.coefficient(m)).collect()).collect();
        ensure(linalg::rank(&rows) == polys.len(), || format!("K elements of degree {d} are dependent"))?;
    }
    Ok(format!("{} signature pairs over {} degrees", sigs.len() * sigs.len(), by_degree.len()))
}

fn atypicality_oracle(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 7);
    let mut atypical = 0;
    for _ in 0..1000 {
        let (m, n) = (rng.gen_range(0..=4), rng.gen_range(0..=4));
        let p = if rng.gen_bool(0.5) {
            let x: Vec<i64> = (0..m).map(|_| rng.gen_range(-3..=3)).collect();
            let y: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            Point::additive_ints(&x, &y)
        } else {
            let x: Vec<i64> = (0..m).map(|_| rng.gen_range(1..=5)).collect();
            let y: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=5)).collect();
            Point::multiplicative_ints(&x, &y).map_err(|e| e.to_string())?
        };
        let r = atypicality(&p);
        ensure(r == atypicality_brute_force(&p), || format!("matching disagrees with brute force at {p}"))?;
        atypical += (r > 0) as usize;
    }
    Ok(format!("1000 points ({atypical} atypical)"))
}

fn groupoid_link(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 8);
    let points: Vec<Point> = (0..2)
        .flat_map(|i| (0..2).map(move |j| Root::positive(i, j)))
        .flat_map(|a| (0..20).map(|_| random_point_on(a, 2, 2, &mut rng)).collect::<Vec<_>>())
        .collect();
    let family = hook_upto(2, 2, 4);
    for lam in &family {
        let f = super_schur(lam, 2, 2).map_err(fail(lam))?;
        ensure(constant_on_lines(&f, &points).map_err(|e| e.to_string())?, || {
            format!("F_{lam} varies along a groupoid line")
        })?;
    }
    let spec = VarSpec::polynomial(2, 2);
    let control = Polynomial::monomial(spec, coeff(1), &[2, 0], &[0, 0]).unwrap()
        + Polynomial::monomial(spec, coeff(1), &[0, 0], &[2, 0]).unwrap();
    let control_fails = points
        .iter()
        .filter(|p| !constant_on_lines(&control, std::slice::from_ref(p)).unwrap_or(true))
        .count();
    ensure(control_fails > 0, || "x1^2 + y1^2 is constant on every sampled line".into())?;
    Ok(format!(
        "{} polynomials on {} lines; control fails at {control_fails} points",
        family.len(),
        points.len()
    ))
}

fn random_typical(rng: &mut ChaCha8Rng) -> Point {
    loop {
        let x: Vec<i64> = (0..2).map(|_| rng.gen_range(-6..=6)).collect();
        let y: Vec<i64> = (0..2).map(|_| rng.gen_range(-6..=6)).collect();
        let p = Point::additive_ints(&x, &y);
        if atypicality(&p) == 0 {
            return p;
        }
    }
}

fn check_separator(v: &crate::groupoid::PointSet, p: &Point, seed: u64) -> Result<Polynomial, String> {
    let f = separating_polynomial(v, p, seed).map_err(fail(format!("separating {p}")))?;
    ensure(is_supersymmetric(&f), || format!("separator for {p} is not supersymmetric"))?;
    ensure(vanishing_ideal_check(v, &f).map_err(|e| e.to_string())?, || format!("separator for {p} misses V"))?;
    ensure(!f.evaluate(p).map_err(|e| e.to_string())?.is_zero(), || format!("separator vanishes at {p}"))?;
    Ok(f)
}

fn separating_witness(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 9);
    for _ in 0..25 {
        let v = weyl_orbit(&random_typical(&mut rng));
        let p = loop {
            let p = random_typical(&mut rng);
            if !v.contains(&p) {
                break p;
            }
        };
        check_separator(&v, &p, rng.gen())?;
    }
    let v = weyl_orbit(&Point::additive_ints(&[1, 2], &[3, 4]));
    let p = Point::additive_ints(&[1, 5], &[-5, 3]);
    let f = check_separator(&v, &p, seed)?;
    let red = atypical_reduction(&p);
    let reduced = iterated_phi(&f, red.r).and_then(|g| g.evaluate(&red.reduced)).map_err(|e| e.to_string())?;
    ensure(f.evaluate(&p).map_err(|e| e.to_string())? == reduced, || {
        "separator value at the atypical point differs from its reduced value".into()
    })?;
    Ok("25 typical orbits and one atypical point separated".into())
}

fn random_squares(rng: &mut ChaCha8Rng, max_degree: i32) -> Polynomial {
    let spec = VarSpec::polynomial(1, 1);
    let terms: Vec<(Monomial, Coeff)> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let a = rng.gen_range(0..=max_degree);
            let b = rng.gen_range(0..=max_degree - a);
            (Monomial::new(vec![a, b]), coeff(rng.gen_range(-4i64..=4)))
        })
        .collect();
    to_squares(&Polynomial::from_terms(spec, terms).expect("nonnegative"))
}

fn osp_membership(seed: u64) -> Result<String, String> {
    let mut rng = rng_for(seed, 10);
    let spec = OspSpec::new(OspKind::Ospeven, 1, 1);
    let family = hook_upto(1, 1, 4);
    let phi = phi_cap(1, 1);
    let h1 = Polynomial::monomial(spec.var_spec(), coeff(1), &[1], &[0]).unwrap();
    for k in 0..50 {
        let mut g = Polynomial::zero(spec.var_spec());
        for lam in &family {
            g = g + super_schur(lam, 1, 1).map_err(fail(lam))?.scale(&coeff(rng.gen_range(-3i64..=3)));
        }
        let j = to_squares(&g);
        let s = orbit_sum(&random_squares(&mut rng, 2), OspKind::Ospeven, true).map_err(|e| e.to_string())?;
        let f = &j + &(&phi * &s);
        ensure(ih_membership(&f, spec).map_err(|e| e.to_string())?, || format!("instance {k} is rejected"))?;
        ensure(!ih_membership(&(&f + &h1), spec).unwrap_or(false), || format!("instance {k} + h1 is accepted"))?;
        let (f1, fs) = sigma_decompose(&f).map_err(|e| e.to_string())?;
        let zero = Polynomial::zero(f.spec());
        ensure(&f1 + &fs == f, || format!("instance {k}: parts do not sum back"))?;
        ensure(sigma_decompose(&f1).map_err(|e| e.to_string())? == (f1.clone(), zero.clone()), || {
            format!("instance {k}: invariant part is not fixed")
        })?;
        ensure(sigma_decompose(&fs).map_err(|e| e.to_string())? == (zero, fs.clone()), || {
            format!("instance {k}: skew part is not fixed")
        })?;
    }
    for m in 0..=2 {
        for n in 0..=2 {
            let t = t_osp(m, n);
            ensure(phi_cap(m, n).pow(2) == &t * &(&t * &h_product(m, n).pow(2)), || {
                format!("Phi^2 identity fails for ({m},{n})")
            })?;
        }
    }
    Ok("50 members accepted, 50 perturbations rejected, Phi^2 identity for m,n <= 2".into())
}
