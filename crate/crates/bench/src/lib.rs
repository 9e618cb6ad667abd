//! Workloads shared by the criterion benches.

use supersym::poly::coeff;
use supersym::supersym::power_sum;
use supersym::{Partition, Point, Polynomial, VarSpec};

/// `x_1^{k} x_2^{k-1} ⋯ x_k` in `k` x-variables.
pub fn staircase_monomial(k: usize) -> Polynomial {
    let x: Vec<i32> = (0..k).map(|i| (k - i) as i32).collect();
    Polynomial::monomial(VarSpec::polynomial(k, 0), coeff(1), &x, &[]).unwrap()
}

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// `p_1^2 p_2 + 3 p_4 - p_3 p_1` in `(2, 2)` variables.
pub fn power_sum_mix() -> Polynomial {
    let p = |r| power_sum(r, 2, 2).unwrap();
    p(1).pow(2) * p(2) + p(4).scale(&coeff(3)) - p(3) * p(1)
}

/// A point in `(4, 4)` variables with many vanishing pairs.
pub fn dense_atypical_point() -> Point {
    Point::additive_ints(&[1, 2, -1, 3], &[-1, -2, 1, -3])
}
