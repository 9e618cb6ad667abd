//! Brute-force reference computations.
//!
//! Nothing in this module is used by the algebra routines themselves; it
//! exists so the self-test and the test suites can check those routines
//! against a route that shares no code with them.

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::point::Point;
use crate::poly::{signed_permutations, Block, Coeff, Monomial, Polynomial, VarSpec};

/// Schur polynomial as the sum over semistandard tableaux of shape `mu`
/// with entries in `1..=k`, where `k` is the size of `block`.
pub fn schur_by_tableaux(mu: &Partition, spec: VarSpec, block: Block) -> Polynomial {
    let k = spec.block_len(block);
    let cells = mu.cells();
    let mut filling = vec![0usize; cells.len()];
    let mut terms = Vec::new();
    fill(mu, &cells, 0, k, &mut filling, &mut |f| {
        let mut e = vec![0i32; spec.nvars()];
        let off = if block == Block::X { 0 } else { spec.m };
        for &v in f {
            e[off + v - 1] += 1;
        }
        terms.push((Monomial::new(e), Coeff::one()));
    });
    Polynomial::from_terms(spec, terms).expect("nonnegative exponents")
}

fn fill(
    mu: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    k: usize,
    filling: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if idx == cells.len() {
        emit(filling);
        return;
    }
    let (i, j) = cells[idx];
    // Cells are listed row by row, so the left and upper neighbours are set.
    let left = if j > 1 { filling[idx - 1] } else { 1 };
    let up = if i > 1 {
        let above: usize = mu.parts()[..i - 2].iter().map(|&p| p as usize).sum::<usize>() + j - 1;
        filling[above] + 1
    } else {
        1
    };
    for v in left.max(up)..=k {
        filling[idx] = v;
        fill(mu, cells, idx + 1, k, filling, emit);
    }
}

/// Maximum number of disjoint vanishing pairs `(i, j)` found by trying every
/// partial injection from the x-block into the y-block.
pub fn atypicality_brute_force(p: &Point) -> usize {
    let vanishes = |i: usize, j: usize| {
        if p.is_multiplicative() {
            p.x()[i] == p.y()[j]
        } else {
            (&p.x()[i] + &p.y()[j]).is_zero()
        }
    };
    fn best(i: usize, used: &mut Vec<bool>, m: usize, vanishes: &dyn Fn(usize, usize) -> bool) -> usize {
        if i == m {
            return 0;
        }
        let mut top = best(i + 1, used, m, vanishes);
        for j in 0..used.len() {
            if !used[j] && vanishes(i, j) {
                used[j] = true;
                top = top.max(1 + best(i + 1, used, m, vanishes));
                used[j] = false;
            }
        }
        top
    }
    best(0, &mut vec![false; p.n()], p.m(), &vanishes)
}

/// Evaluates `Σ_{w ∈ W} w[g_λ / (Δ(X)Δ(Y))]` at `pt` term by term as a sum
/// of rationals. Requires pairwise distinct coordinates within each block.
pub fn super_schur_rational_sum(lambda: &Partition, m: usize, n: usize, pt: &Point) -> Option<Coeff> {
    if !lambda.in_hook(m, n) {
        return Some(Coeff::zero());
    }
    let (mu, nu) = lambda.hook_mu_nu(m, n).ok()?;
    let corner = lambda.corner_cells(m, n);
    let g = |x: &[Coeff], y: &[Coeff]| -> Coeff {
        let mut v = Coeff::one();
        for (i, xi) in x.iter().enumerate().take(m) {
            v *= xi.pow((mu.part(i + 1) as usize + m - 1 - i) as i32);
        }
        for (j, yj) in y.iter().enumerate().take(n) {
            v *= yj.pow((nu.part(j + 1) as usize + n - 1 - j) as i32);
        }
        for &(i, j) in &corner {
            v *= &x[i - 1] + &y[j - 1];
        }
        v
    };
    let delta = |v: &[Coeff]| -> Coeff {
        let mut d = Coeff::one();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                d *= &v[i] - &v[j];
            }
        }
        d
    };
    let mut total = Coeff::zero();
    for (xp, _) in signed_permutations(m) {
        for (yp, _) in signed_permutations(n) {
            // w acts on functions: (w f)(x) = f(w⁻¹ x), i.e. variable x_i is
            // replaced by x_{w(i)}.
            let x: Vec<Coeff> = (0..m).map(|i| pt.x()[xp[i]].clone()).collect();
            let y: Vec<Coeff> = (0..n).map(|j| pt.y()[yp[j]].clone()).collect();
            let den = delta(&x) * delta(&y);
            if den.is_zero() {
                return None;
            }
            total += g(&x, &y) / den;
        }
    }
    Some(total)
}
