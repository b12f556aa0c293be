//! Exact rational primal simplex for `max c^T y` subject to `A y <= b`,
//! `y >= 0` with `b >= 0` (the slack basis is feasible, no phase one).
//! Bland's rule guarantees termination.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) struct LpSolution {
    pub value: BigRational,
    /// Optimal `y`.
    pub primal: Vec<BigRational>,
    /// Optimal multipliers of the rows (dual solution).
    pub dual: Vec<BigRational>,
}

/// `a` is `rows x cols`, row-major.
pub(crate) fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpSolution {
    let m = a.len();
    let n = c.len();
    let width = n + m;
    // tableau rows: [A | I | b]
    let mut t: Vec<Vec<BigRational>> = (0..m)
        .map(|i| {
            let mut row: Vec<BigRational> = a[i].clone();
            row.extend((0..m).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row.push(b[i].clone());
            row
        })
        .collect();
    // reduced costs (c_B B^-1 A_j - c_j) and objective value in the last slot
    let mut z: Vec<BigRational> = c.iter().map(|x| -x.clone()).collect();
    z.extend((0..=m).map(|_| BigRational::zero()));
    let mut basis: Vec<usize> = (n..width).collect();

    while let Some(enter) = (0..width).find(|&j| z[j].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // b >= 0 with a covering structure keeps the problem bounded
        let (r, _) = leave.expect("linear program is bounded");
        let pivot = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &pivot;
        }
        let pivot_row = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == r || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        let f = z[enter].clone();
        for (x, p) in z.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x -= &f * p;
            }
        }
        basis[r] = enter;
    }

    let mut primal = vec![BigRational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            primal[bv] = t[i][width].clone();
        }
    }
    LpSolution { value: z[width].clone(), primal, dual: z[n..width].to_vec() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_lp() {
        // max y0 + y1 s.t. y0 + 2 y1 <= 4, 3 y0 + y1 <= 6  ->  (8/5, 6/5), value 14/5
        let a = vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(1, 1)]];
        let sol = maximize(&a, &[q(4, 1), q(6, 1)], &[q(1, 1), q(1, 1)]);
        assert_eq!(sol.value, q(14, 5));
        assert_eq!(sol.primal, vec![q(8, 5), q(6, 5)]);
        // dual: 4 u0 + 6 u1 = 14/5 with u0 + 3 u1 = 1, 2 u0 + u1 = 1
        assert_eq!(sol.dual, vec![q(2, 5), q(1, 5)]);
    }

    #[test]
    fn degenerate_lp_terminates() {
        // redundant constraints with zero right-hand sides
        let a = vec![vec![q(1, 1), q(-1, 1)], vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(1, 1)], vec![q(0, 1), q(1, 1)]];
        let sol = maximize(&a, &[q(0, 1), q(0, 1), q(2, 1), q(1, 1)], &[q(1, 1), q(1, 1)]);
        assert_eq!(sol.value, q(1, 1));
    }
}
