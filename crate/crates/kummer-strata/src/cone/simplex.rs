//! Dense exact-rational simplex used by the cone-weight linear programs.
//!
//! The problems here are small (16 equality rows, 225 columns) and always
//! come with an obvious basic feasible start, so a tableau method with exact
//! arithmetic is enough. One [`Tableau`] serves a whole family of
//! objectives: re-pricing keeps the current basis, which stays feasible, so
//! sweeping nearby objective directions costs few pivots after the first
//! solve. The pivot rule is largest reduced cost; after a run of degenerate
//! pivots it switches to Bland's rule, which guarantees termination.

use crate::rational::Rational;
use num_traits::{Signed, Zero};

pub(crate) struct Solution {
    pub value: Rational,
    pub x: Vec<Rational>,
}

/// Consecutive zero-progress pivots tolerated before switching to Bland.
const DEGENERATE_STREAK_LIMIT: u32 = 24;

/// Simplex state for `a x = b`, `x >= 0` under changing objectives.
pub(crate) struct Tableau {
    /// `B^-1 A`, maintained across pivots.
    t: Vec<Vec<Rational>>,
    /// `B^-1 b`, kept non-negative.
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    /// `init_basis[r]` must name a column equal to the `r`-th unit vector,
    /// and `b` must be non-negative, so the start is basic feasible with
    /// tableau equal to `a` itself.
    pub(crate) fn new(a: &[Vec<Rational>], b: &[Rational], init_basis: &[usize]) -> Tableau {
        debug_assert_eq!(init_basis.len(), a.len());
        debug_assert!(b.iter().all(|v| !v.is_negative()));
        Tableau {
            t: a.to_vec(),
            rhs: b.to_vec(),
            basis: init_basis.to_vec(),
            cols: a.first().map_or(0, |row| row.len()),
        }
    }

    /// Maximizes `c.x` from the current basis. Returns `None` if unbounded.
    pub(crate) fn maximize(&mut self, c: &[Rational]) -> Option<Solution> {
        let rows = self.t.len();
        debug_assert_eq!(c.len(), self.cols);

        // Re-price: z[j] = c[j] - c_B . t[.][j] for the current basis.
        let mut z: Vec<Rational> = c.to_vec();
        let mut value = Rational::zero();
        for r in 0..rows {
            let cb = &c[self.basis[r]];
            if cb.is_zero() {
                continue;
            }
            value += cb * &self.rhs[r];
            for (zj, tj) in z.iter_mut().zip(&self.t[r]) {
                if !tj.is_zero() {
                    *zj -= cb * tj;
                }
            }
        }
        for r in 0..rows {
            z[self.basis[r]] = Rational::zero();
        }

        let mut degenerate_streak = 0u32;
        let mut use_bland = false;
        loop {
            let entering = if use_bland {
                (0..self.cols).find(|&j| z[j].is_positive())
            } else {
                (0..self.cols)
                    .filter(|&j| z[j].is_positive())
                    .max_by(|&i, &j| z[i].cmp(&z[j]).then(j.cmp(&i)))
            };
            let Some(enter) = entering else {
                let mut x = vec![Rational::zero(); self.cols];
                for (r, &col) in self.basis.iter().enumerate() {
                    x[col] = self.rhs[r].clone();
                }
                return Some(Solution { value, x });
            };

            // Ratio test; ties broken by the smallest leaving basis index so
            // the Bland phase is fully Bland.
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..rows {
                if self.t[r][enter].is_positive() {
                    let ratio = &self.rhs[r] / &self.t[r][enter];
                    match &leave {
                        Some((lr, lratio)) => {
                            if ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                            {
                                leave = Some((r, ratio));
                            }
                        }
                        None => leave = Some((r, ratio)),
                    }
                }
            }
            let Some((pivot_row, ratio)) = leave else {
                return None; // unbounded
            };

            if ratio.is_zero() {
                degenerate_streak += 1;
                if degenerate_streak > DEGENERATE_STREAK_LIMIT {
                    use_bland = true;
                }
            } else {
                degenerate_streak = 0;
            }

            self.pivot(&mut z, &mut value, pivot_row, enter);
            self.basis[pivot_row] = enter;
        }
    }

    fn pivot(&mut self, z: &mut [Rational], value: &mut Rational, pr: usize, pc: usize) {
        let rows = self.t.len();

        let p = self.t[pr][pc].clone();
        for j in 0..self.cols {
            if !self.t[pr][j].is_zero() {
                self.t[pr][j] /= &p;
            }
        }
        self.rhs[pr] /= &p;

        for r in 0..rows {
            if r == pr || self.t[r][pc].is_zero() {
                continue;
            }
            let f = std::mem::replace(&mut self.t[r][pc], Rational::zero());
            for j in 0..self.cols {
                if j != pc && !self.t[pr][j].is_zero() {
                    let delta = &f * &self.t[pr][j];
                    self.t[r][j] -= delta;
                }
            }
            let delta = &f * &self.rhs[pr];
            self.rhs[r] -= delta;
        }

        if !z[pc].is_zero() {
            let f = std::mem::replace(&mut z[pc], Rational::zero());
            for (j, (zj, tj)) in z.iter_mut().zip(&self.t[pr]).enumerate() {
                if j != pc && !tj.is_zero() {
                    *zj -= &f * tj;
                }
            }
            let delta = &f * &self.rhs[pr];
            *value += delta;
        }
    }
}

/// One-shot maximization of `c.x` subject to `a x = b`, `x >= 0`.
#[cfg(test)]
pub(crate) fn maximize(
    a: &[Vec<Rational>],
    b: &[Rational],
    c: &[Rational],
    init_basis: &[usize],
) -> Option<Solution> {
    Tableau::new(a, b, init_basis).maximize(c)
}
