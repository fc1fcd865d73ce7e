//! Exact linear feasibility: phase one of the simplex method over the
//! rationals with Bland's anti-cycling rule.

use num_traits::{Signed, Zero};

use crate::matrix::RatMatrix;
use crate::rational::Rat;

/// Finds `x ≥ 0` with `A x = b`, or `None` when no such `x` exists.
///
/// The returned point is a basic feasible solution. Results are exact and
/// deterministic for a given `(A, b)`.
pub fn nonneg_solution(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let (m, n) = (a.rows(), a.cols());
    // Tableau columns: n structural, m artificial, one right-hand side.
    let width = n + m + 1;
    let rhs = n + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row = vec![Rat::zero(); width];
        for j in 0..n {
            row[j] = if flip {
                -a[(i, j)].clone()
            } else {
                a[(i, j)].clone()
            };
        }
        row[n + i] = Rat::from_integer(1.into());
        row[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
        t.push(row);
    }
    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Rat::zero(); width];
    for row in &t {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Bland: lowest-index entering column, lowest-index basic variable on ties
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rat)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // Phase one is bounded below by zero, so some row always qualifies.
        let (r, _) = leave.expect("phase-one objective is bounded");
        pivot(&mut t, &mut cost, r, enter);
        basis[r] = enter;
    }

    if !cost[rhs].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (i, &j) in basis.iter().enumerate() {
        if j < n {
            x[j] = t[i][rhs].clone();
        }
    }
    Some(x)
}

pub fn is_feasible(a: &RatMatrix, b: &[Rat]) -> bool {
    nonneg_solution(a, b).is_some()
}

fn pivot(t: &mut [Vec<Rat>], cost: &mut [Rat], r: usize, c: usize) {
    let p = t[r][c].clone();
    for x in t[r].iter_mut() {
        *x /= &p;
    }
    let pivot_row = t[r].clone();
    let eliminate = |row: &mut [Rat]| {
        let f = row[c].clone();
        if f.is_zero() {
            return;
        }
        for (x, y) in row.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    };
    for (i, row) in t.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(cost);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn mat(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
            cols,
        )
        .unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn check(a: &RatMatrix, b: &[Rat], x: &[Rat]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        assert_eq!(a.mul_vec(x).unwrap(), b);
    }

    #[test]
    fn simple_feasible() {
        let a = mat(&[&[1, -1], &[1, 1]]);
        let b = ints(&[0, 2]);
        let x = nonneg_solution(&a, &b).unwrap();
        assert_eq!(x, ints(&[1, 1]));
        check(&a, &b, &x);
    }

    #[test]
    fn negative_rhs() {
        let a = mat(&[&[-1, 0, 1], &[0, -1, 1]]);
        let b = ints(&[-2, -3]);
        let x = nonneg_solution(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn infeasible() {
        let a = mat(&[&[1, 0], &[0, 1]]);
        assert!(nonneg_solution(&a, &ints(&[-1, 0])).is_none());
        let a = mat(&[&[1, 1], &[1, 1]]);
        assert!(nonneg_solution(&a, &ints(&[1, 2])).is_none());
    }

    #[test]
    fn redundant_rows_and_degeneracy() {
        let a = mat(&[&[1, 1, 0], &[2, 2, 0], &[0, 0, 1]]);
        let b = ints(&[1, 2, 0]);
        let x = nonneg_solution(&a, &b).unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn empty_systems() {
        assert_eq!(
            nonneg_solution(&RatMatrix::zeros(0, 2), &[]),
            Some(ints(&[0, 0]))
        );
        assert!(nonneg_solution(&RatMatrix::zeros(1, 0), &ints(&[1])).is_none());
        assert_eq!(
            nonneg_solution(&RatMatrix::zeros(1, 0), &ints(&[0])),
            Some(vec![])
        );
    }

    #[test]
    fn brute_force_agreement() {
        // Every 2x3 system with entries in {-1..2}: feasible answers are
        // checked directly, infeasible ones must admit a Farkas certificate
        // y with yA >= 0 and yb < 0 on a small integer grid.
        let vals = [-1i64, 0, 1, 2];
        let mut seen = 0;
        for a0 in vals {
            for a1 in vals {
                for a2 in vals {
                    for a3 in vals {
                        for a4 in vals {
                            let a = mat(&[&[a0, a1, a2], &[a3, a4, 1]]);
                            let b = ints(&[1, 1]);
                            match nonneg_solution(&a, &b) {
                                Some(x) => check(&a, &b, &x),
                                None => {
                                    // Farkas: some y with yA >= 0 and yb < 0 must exist.
                                    let found = (-3..=3).any(|y0| {
                                        (-3..=3).any(|y1| {
                                            let ya = [
                                                y0 * a0 + y1 * a3,
                                                y0 * a1 + y1 * a4,
                                                y0 * a2 + y1,
                                            ];
                                            ya.iter().all(|&v| v >= 0) && y0 + y1 < 0
                                        })
                                    });
                                    assert!(found, "no Farkas certificate for {a:?}");
                                    seen += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert!(seen > 0);
    }
}
