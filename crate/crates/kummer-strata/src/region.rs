//! Exact counting of integer points in the plane region
//!
//! ```text
//! R = { (x, y) : x >= 1, y >= 1, x^(g1+c1) y^c2 <= B^2, x^c1 y^(g2+c2) <= B^2 }
//! ```
//!
//! whose cardinality bounds the number of points of height at most `B` off
//! the distinguished curves. The exponents are rationals; the membership
//! test clears them to a common denominator `q` and compares integer powers
//! against `B^(2q)` in arbitrary precision, so counts are exact.
//!
//! The closed-form area of `R` (used only as a cross-check) is evaluated in
//! floating point from the antiderivatives of the two boundary curves, with
//! the `x^-1 -> log` modification on each degenerate branch.

use crate::error::{Error, Result};
use crate::rational::{to_f64, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// Exponent parameters and the height bound for one region.
///
/// Requires `g1 + c1 > 0` and `g2 + c2 > 0` (the fiber degrees); the
/// denominator `g1 g2 + g2 c1 + g1 c2` is only needed positive where a
/// finite enumeration bound or the closed form depends on it.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionParams {
    pub g1: Rational,
    pub g2: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub b: u64,
}

impl RegionParams {
    pub fn new(g1: Rational, g2: Rational, c1: Rational, c2: Rational, b: u64) -> Result<Self> {
        assert!(b >= 1, "height bound must be positive");
        let fiber1 = &g1 + &c1;
        if !fiber1.is_positive() {
            return Err(Error::NonPositiveFiberDegree {
                which: 1,
                value: fiber1,
            });
        }
        let fiber2 = &g2 + &c2;
        if !fiber2.is_positive() {
            return Err(Error::NonPositiveFiberDegree {
                which: 2,
                value: fiber2,
            });
        }
        Ok(RegionParams { g1, g2, c1, c2, b })
    }

    /// Same exponents, different height bound.
    pub fn with_b(&self, b: u64) -> RegionParams {
        assert!(b >= 1, "height bound must be positive");
        RegionParams { b, ..self.clone() }
    }

    /// `g1 g2 + g2 c1 + g1 c2`.
    pub fn denominator(&self) -> Rational {
        &self.g1 * &self.g2 + &self.g2 * &self.c1 + &self.g1 * &self.c2
    }

    /// The mirrored region with `(g1, c1) <-> (g2, c2)`; counting is
    /// invariant under this swap.
    pub fn swapped(&self) -> RegionParams {
        RegionParams {
            g1: self.g2.clone(),
            g2: self.g1.clone(),
            c1: self.c2.clone(),
            c2: self.c1.clone(),
            b: self.b,
        }
    }
}

/// One measurement of the sweep: the exact count at height bound `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CountSample {
    pub b: u64,
    pub count: u64,
}

/// Exponents cleared to a common denominator `q`:
/// the membership test becomes `x^u1 y^v1 <= B^(2q)` and
/// `x^u2 y^v2 <= B^(2q)` over integers, with negative exponents moved to the
/// right-hand side. `u1, v2 > 0` always.
#[derive(Debug, Clone)]
struct Cleared {
    u1: i64,
    v1: i64,
    u2: i64,
    v2: i64,
    b2q: BigInt,
}

fn exponent_to_i64(r: &Rational, q: &BigInt) -> i64 {
    let scaled = r * Rational::from_integer(q.clone());
    debug_assert!(scaled.denom().is_one());
    scaled
        .numer()
        .to_i64()
        .expect("cleared exponent fits in i64")
}

impl Cleared {
    fn new(p: &RegionParams) -> Cleared {
        let fiber1 = &p.g1 + &p.c1;
        let fiber2 = &p.g2 + &p.c2;
        let q = [&fiber1, &p.c2, &p.c1, &fiber2]
            .iter()
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let two_q = (BigInt::from(2) * &q)
            .to_u32()
            .expect("denominator scale fits in u32");
        Cleared {
            u1: exponent_to_i64(&fiber1, &q),
            v1: exponent_to_i64(&p.c2, &q),
            u2: exponent_to_i64(&p.c1, &q),
            v2: exponent_to_i64(&fiber2, &q),
            b2q: BigInt::from(p.b).pow(two_q),
        }
    }

    /// `x^u y^v <= B^(2q)` with signed exponents, for `x, y >= 1`.
    fn power_le(&self, x: u64, u: i64, y: u64, v: i64) -> bool {
        let mut lhs = BigInt::one();
        let mut rhs = self.b2q.clone();
        match u.cmp(&0) {
            std::cmp::Ordering::Greater => lhs *= BigInt::from(x).pow(u as u32),
            std::cmp::Ordering::Less => rhs *= BigInt::from(x).pow((-u) as u32),
            std::cmp::Ordering::Equal => {}
        }
        match v.cmp(&0) {
            std::cmp::Ordering::Greater => lhs *= BigInt::from(y).pow(v as u32),
            std::cmp::Ordering::Less => rhs *= BigInt::from(y).pow((-v) as u32),
            std::cmp::Ordering::Equal => {}
        }
        lhs <= rhs
    }

    fn ineq1(&self, x: u64, y: u64) -> bool {
        self.power_le(x, self.u1, y, self.v1)
    }

    fn ineq2(&self, x: u64, y: u64) -> bool {
        self.power_le(x, self.u2, y, self.v2)
    }

    fn contains(&self, x: u64, y: u64) -> bool {
        self.ineq1(x, y) && self.ineq2(x, y)
    }
}

/// Exact membership test for `(x, y)` in the region, `x, y >= 1`.
pub fn in_region(x: u64, y: u64, p: &RegionParams) -> bool {
    assert!(x >= 1 && y >= 1, "region points have positive coordinates");
    Cleared::new(p).contains(x, y)
}

/// Largest `n >= lo` with `f(n)` true, given `f(lo)` true and `f`
/// monotonically true-then-false; galloping then bisecting. The answer must
/// fit in `u64`.
fn last_true(lo: u64, f: impl Fn(u64) -> bool) -> u64 {
    debug_assert!(f(lo));
    let probe = |n: Option<u64>| n.is_some_and(&f);
    let mut hi = lo;
    let mut step = 1u64;
    while probe(hi.checked_add(step)) {
        hi += step;
        step = step.saturating_mul(2);
    }
    // f(hi) true, f(hi + step) false (or hi + step overflows, in which case
    // the region is far beyond countable range).
    let mut bad = hi
        .checked_add(step)
        .expect("column height exceeds u64; the count is out of supported range");
    while bad - hi > 1 {
        let mid = hi + (bad - hi) / 2;
        if f(mid) {
            hi = mid;
        } else {
            bad = mid;
        }
    }
    hi
}

/// Smallest `n >= 1` with `f(n)` true, given `f` monotonically
/// false-then-true and eventually true within `u64`.
fn first_true(f: impl Fn(u64) -> bool) -> u64 {
    if f(1) {
        return 1;
    }
    let mut bad = 1u64;
    let mut step = 1u64;
    loop {
        let next = bad
            .checked_add(step)
            .expect("search bound exceeds u64; the count is out of supported range");
        if f(next) {
            break;
        }
        bad = next;
        step = step.saturating_mul(2);
    }
    let mut good = bad + step;
    while good - bad > 1 {
        let mid = bad + (good - bad) / 2;
        if f(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}

/// `floor(B^(num/den))` for a positive rational exponent.
fn floor_power(b: u64, exponent: &Rational) -> u64 {
    debug_assert!(exponent.is_positive());
    let num = exponent
        .numer()
        .to_u32()
        .expect("exponent numerator fits in u32");
    let den = exponent
        .denom()
        .to_u32()
        .expect("exponent denominator fits in u32");
    BigInt::from(b)
        .pow(num)
        .nth_root(den)
        .to_u64()
        .expect("x bound fits in u64")
}

/// Count of lattice points in the column over `x`: the feasible `y` form an
/// interval (possibly empty) because both constraints are monotone in `y`.
fn column_count(cl: &Cleared, x: u64) -> u64 {
    // Constraint 2 has a positive y-exponent, so it caps y from above; it is
    // satisfiable at y = 1 unless x alone breaks it.
    if !cl.ineq2(x, 1) {
        return 0;
    }
    let hi2 = last_true(1, |y| cl.ineq2(x, y));

    if cl.v1 > 0 {
        if !cl.ineq1(x, 1) {
            return 0;
        }
        let hi1 = last_true(1, |y| cl.ineq1(x, y));
        hi1.min(hi2)
    } else if cl.v1 == 0 {
        if cl.ineq1(x, 1) {
            hi2
        } else {
            0
        }
    } else {
        // Negative y-exponent: constraint 1 holds from some y upward.
        if cl.ineq1(x, hi2) {
            let lo1 = first_true(|y| cl.ineq1(x, y));
            hi2 - lo1 + 1
        } else {
            0
        }
    }
}

fn enumeration_bound(p: &RegionParams, cl: &Cleared) -> Result<u64> {
    if cl.v1 >= 0 {
        // y >= 1 only tightens constraint 1, so x^(g1+c1) <= B^2.
        let two = Rational::from_integer(BigInt::from(2));
        Ok(floor_power(p.b, &(two / (&p.g1 + &p.c1))))
    } else {
        // With c2 < 0, multiplying constraint 1^(g2+c2) by constraint
        // 2^(-c2) eliminates y and leaves x^den <= B^(2 g2), which needs
        // den > 0 to bound x.
        let den = p.denominator();
        if !den.is_positive() {
            return Err(Error::UnboundedRegion);
        }
        let exp = Rational::from_integer(BigInt::from(2)) * &p.g2 / den;
        Ok(floor_power(p.b, &exp))
    }
}

fn thread_count() -> usize {
    if let Ok(v) = std::env::var("KUMMER_STRATA_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            if n >= 1 {
                return n;
            }
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Exact number of integer points in the region.
///
/// Enumerates `x` up to the derived bound and finds each column's feasible
/// `y` interval by binary search on the exact membership predicate. The `x`
/// range is split into disjoint strips counted concurrently when wide; the
/// total is their sum and independent of the partitioning.
///
/// Fails with `UnboundedRegion` when `c2 < 0` (mirrored: `c1 < 0`) and the
/// denominator is not positive, in which case no finite bound exists.
pub fn count_region(p: &RegionParams) -> Result<u64> {
    let cl = Cleared::new(p);
    // The mirrored bound on y must also be finite for the count to be.
    if cl.u2 < 0 && !p.denominator().is_positive() {
        return Err(Error::UnboundedRegion);
    }
    let xmax = enumeration_bound(p, &cl)?;

    const PARALLEL_THRESHOLD: u64 = 4096;
    let threads = thread_count();
    if xmax < PARALLEL_THRESHOLD || threads == 1 {
        return Ok((1..=xmax).map(|x| column_count(&cl, x)).sum());
    }

    let chunk = xmax.div_ceil(threads as u64);
    let total = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for t in 0..threads as u64 {
            let lo = t * chunk + 1;
            let hi = ((t + 1) * chunk).min(xmax);
            if lo > hi {
                continue;
            }
            let cl = cl.clone();
            handles.push(scope.spawn(move || (lo..=hi).map(|x| column_count(&cl, x)).sum::<u64>()));
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("strip worker panicked"))
            .sum()
    });
    Ok(total)
}

/// Quadratic reference enumeration: a plain double loop over
/// `1 <= x, y <= B^2` applying the membership test, with only the two
/// monotone early exits (`ineq2` fails at `(x, 1)` with a positive
/// x-exponent; `ineq1` fails at `(x, 1)` with `c2 >= 0`). Used by the
/// verification suites as the independent oracle for [`count_region`];
/// intended for small `B`.
pub fn count_region_naive(p: &RegionParams) -> u64 {
    let cl = Cleared::new(p);
    let cap = p.b.checked_mul(p.b).expect("oracle bound B^2 fits in u64");
    let mut count = 0u64;
    for x in 1..=cap {
        if cl.u2 > 0 && !cl.ineq2(x, 1) {
            break;
        }
        if cl.v1 >= 0 && !cl.ineq1(x, 1) {
            break;
        }
        for y in 1..=cap {
            if !cl.ineq2(x, y) {
                break;
            }
            if cl.ineq1(x, y) {
                count += 1;
            }
        }
    }
    count
}

/// One exact count per height bound; `b_list` must be strictly increasing.
pub fn count_sweep(p: &RegionParams, b_list: &[u64]) -> Result<Vec<CountSample>> {
    debug_assert!(
        b_list.windows(2).all(|w| w[0] < w[1]),
        "height bounds must increase"
    );
    b_list
        .iter()
        .map(|&b| {
            Ok(CountSample {
                b,
                count: count_region(&p.with_b(b))?,
            })
        })
        .collect()
}

/// `integral of (B^2 x^-num)^(1/den) dx` from `lo` to `hi`, where the
/// integrand exponent is `m = num/den`; switches to the logarithmic
/// antiderivative exactly when `num == den`.
fn boundary_integral(b: f64, num: &Rational, den: &Rational, lo: f64, hi: f64) -> f64 {
    let beta = b.powf(2.0 / to_f64(den));
    if num == den {
        beta * (hi.ln() - lo.ln())
    } else {
        let m = to_f64(num) / to_f64(den);
        beta * (hi.powf(1.0 - m) - lo.powf(1.0 - m)) / (1.0 - m)
    }
}

/// Closed-form evaluation of the region's boundary integrals plus the two
/// boundary-line terms; a floating-point cross-check for [`count_region`],
/// never used for exact claims.
///
/// Dispatches on the sign of `c2`: positive (two arcs meeting at the
/// crossing point `(B^(d g2), B^(d g1))` with `d = 2/denominator`), zero
/// (one arc against a vertical cut), negative (the upper-bound integral up
/// to the crossing). Each branch degenerates to a logarithmic antiderivative
/// when its integrand exponent hits 1.
pub fn area_closed_form(p: &RegionParams) -> Result<f64> {
    let den = p.denominator();
    if !den.is_positive() {
        return Err(Error::NonPositiveDenominator { value: den });
    }
    let b = p.b as f64;
    let fiber1 = &p.g1 + &p.c1;
    let fiber2 = &p.g2 + &p.c2;
    let delta = to_f64(&(Rational::from_integer(BigInt::from(2)) / &den));
    let x_cross = b.powf(delta * to_f64(&p.g2));
    let x_edge = b.powf(2.0 / to_f64(&fiber1));

    if p.c2.is_positive() {
        let arc2 = boundary_integral(b, &p.c1, &fiber2, 1.0, x_cross);
        let arc1 = boundary_integral(b, &fiber1, &p.c2, x_cross, x_edge);
        Ok(arc2 + arc1 + b.powf(2.0 / to_f64(&fiber1)) + b.powf(2.0 / to_f64(&fiber2)))
    } else if p.c2.is_zero() {
        let arc = boundary_integral(b, &p.c1, &p.g2, 1.0, x_edge);
        Ok(arc + b.powf(2.0 / to_f64(&fiber1)) + b.powf(2.0 / to_f64(&p.g2)))
    } else {
        let arc = boundary_integral(b, &p.c1, &fiber2, 1.0, x_cross);
        Ok(arc + x_cross + b.powf(2.0 / to_f64(&fiber2)))
    }
}

/// Least-squares fit of `log count` against `log B`.
#[derive(Debug, Clone, Serialize)]
pub struct GrowthFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    #[serde(skip_serializing)]
    pub tail_fraction: f64,
    /// Number of samples actually used (positive counts in the tail).
    pub n_tail: usize,
}

/// Ordinary least squares on `(ln B, ln count)` over the `tail_fraction`
/// largest height bounds; zero counts are dropped. Needs at least 3 usable
/// samples.
pub fn fit_exponent(samples: &[CountSample], tail_fraction: f64) -> Result<GrowthFit> {
    assert!(
        tail_fraction > 0.0 && tail_fraction <= 1.0,
        "tail fraction must be in (0, 1]"
    );
    let mut sorted: Vec<CountSample> = samples.to_vec();
    sorted.sort_by_key(|s| s.b);
    let keep = ((tail_fraction * sorted.len() as f64).ceil() as usize).min(sorted.len());
    let tail = &sorted[sorted.len() - keep..];
    let points: Vec<(f64, f64)> = tail
        .iter()
        .filter(|s| s.count >= 1)
        .map(|s| ((s.b as f64).ln(), (s.count as f64).ln()))
        .collect();
    if points.len() < 3 {
        return Err(Error::InsufficientSamples {
            needed: 3,
            got: points.len(),
        });
    }

    let (slope, intercept, r_squared) = linear_regression(&points);
    Ok(GrowthFit {
        slope,
        intercept,
        r_squared,
        tail_fraction,
        n_tail: points.len(),
    })
}

/// Straight-line regression of arbitrary `(x, y)` pairs; also used to test
/// the `count / B^alpha` ratio against `log B` on the log-factor cases.
/// Returns `(slope, intercept, r_squared)` with `r_squared` in `[0, 1]`
/// (1 for constant data).
pub fn linear_regression(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let n = points.len() as f64;
    assert!(points.len() >= 2, "regression needs at least two points");
    let mean_x = points.iter().map(|(x, _)| x).sum::<f64>() / n;
    let mean_y = points.iter().map(|(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = points
        .iter()
        .map(|(x, _)| (x - mean_x) * (x - mean_x))
        .sum();
    let sxy: f64 = points
        .iter()
        .map(|(x, y)| (x - mean_x) * (y - mean_y))
        .sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let intercept = mean_y - slope * mean_x;
    let ss_res: f64 = points
        .iter()
        .map(|(x, y)| {
            let e = y - (intercept + slope * x);
            e * e
        })
        .sum();
    let ss_tot: f64 = points
        .iter()
        .map(|(_, y)| (y - mean_y) * (y - mean_y))
        .sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    (slope, intercept, r_squared)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn params(g1: i64, g2: i64, c1: i64, c2: i64, b: u64) -> RegionParams {
        RegionParams::new(rat_int(g1), rat_int(g2), rat_int(c1), rat_int(c2), b).unwrap()
    }

    #[test]
    fn membership_examples() {
        let p = params(4, 4, 1, 1, 10);
        assert!(in_region(1, 1, &p));
        // x^5 y = 96 <= 100 but x y^5 = 486 > 100.
        assert!(!in_region(2, 3, &p));
        assert!(in_region(2, 2, &p));
        assert!(in_region(1, 1, &params(1, 1, 0, 0, 1)));
    }

    #[test]
    fn membership_with_fractional_exponents() {
        // g1+c1 = 7/2, c2 = 1/2: x^7 y <= B^4 after clearing q = 2.
        let p = RegionParams::new(rat(3, 1), rat(4, 1), rat(1, 2), rat(1, 2), 10).unwrap();
        assert!(in_region(3, 1, &p)); // 3^7 = 2187 <= 10^4
        assert!(!in_region(4, 1, &p)); // 4^7 = 16384 > 10^4
    }

    #[test]
    fn clearing_scale_does_not_change_membership() {
        // Clearing to q or to any multiple k*q raises both sides of each
        // inequality to the k-th power, which preserves order on positive
        // integers; the membership test must not depend on the scale.
        for p in [
            params(4, 4, 5, -1, 17),
            RegionParams::new(rat(4, 3), rat(4, 3), rat(1, 3), rat(1, 3), 17).unwrap(),
        ] {
            let cl = Cleared::new(&p);
            for k in [2i64, 3, 5] {
                let scaled = Cleared {
                    u1: cl.u1 * k,
                    v1: cl.v1 * k,
                    u2: cl.u2 * k,
                    v2: cl.v2 * k,
                    b2q: cl.b2q.pow(k as u32),
                };
                for x in 1..25 {
                    for y in 1..25 {
                        assert_eq!(cl.contains(x, y), scaled.contains(x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_region(&params(4, 4, 1, 1, 1)).unwrap(), 1);
        assert_eq!(count_region(&params(4, 4, 1, 1, 10)).unwrap(), 4);
        let p = params(4, 4, 1, 0, 10);
        assert_eq!(count_region(&p).unwrap(), count_region_naive(&p));
    }

    #[test]
    fn oracle_equivalence_on_a_small_grid() {
        let grid = [
            params(4, 4, 1, 1, 1),
            params(4, 4, 1, 1, 30),
            params(2, 3, 1, 2, 25),
            params(1, 2, 1, 2, 20),
            params(4, 1, 3, 2, 30),
            params(4, 4, 1, 0, 30),
            params(4, 2, 2, 0, 30),
            params(4, 4, 5, -1, 30),
            params(4, 4, 3, -1, 30),
        ];
        for p in grid {
            assert_eq!(
                count_region(&p).unwrap(),
                count_region_naive(&p),
                "params {:?}",
                (&p.g1, &p.g2, &p.c1, &p.c2, p.b)
            );
        }
    }

    #[test]
    fn oracle_equivalence_with_negative_c1() {
        // Mirrored Case III shape: c1 < 0 exercises the lower-bounded x side
        // through the symmetry of the two constraints.
        let p = RegionParams::new(rat_int(4), rat_int(4), rat_int(-1), rat_int(5), 25).unwrap();
        assert_eq!(count_region(&p).unwrap(), count_region_naive(&p));
        let q = RegionParams::new(rat(7, 2), rat_int(4), rat(1, 2), rat(3, 2), 30).unwrap();
        assert_eq!(count_region(&q).unwrap(), count_region_naive(&q));
    }

    #[test]
    fn count_is_monotone_in_b() {
        let p = params(4, 4, 5, -1, 1);
        let mut last = 0;
        for b in [1, 2, 5, 10, 20, 50, 100] {
            let c = count_region(&p.with_b(b)).unwrap();
            assert!(c >= last);
            last = c;
        }
    }

    #[test]
    fn count_is_symmetric_under_swap() {
        for p in [
            params(4, 2, 1, 3, 40),
            params(4, 4, 5, -1, 40),
            params(1, 2, 1, 2, 40),
        ] {
            assert_eq!(
                count_region(&p).unwrap(),
                count_region(&p.swapped()).unwrap()
            );
        }
    }

    #[test]
    fn unbounded_region_is_rejected() {
        // c2 < 0 with denominator = g1 g2 + g2 c1 + g1 c2 <= 0: take
        // g = (1, 1), c = (0, -1/2): denominator = 1 + 0 - 1/2 = 1/2 > 0; so
        // push harder: g = (1, 1), c = (-1/2, -1/2): fibers 1/2 > 0,
        // denominator = 1 - 1/2 - 1/2 = 0.
        let p = RegionParams::new(rat_int(1), rat_int(1), rat(-1, 2), rat(-1, 2), 10).unwrap();
        assert_eq!(count_region(&p).unwrap_err(), Error::UnboundedRegion);
    }

    #[test]
    fn sweep_matches_pointwise_counts() {
        let p = params(4, 4, 1, 1, 1);
        assert_eq!(
            count_sweep(&p, &[1, 10]).unwrap(),
            vec![
                CountSample { b: 1, count: 1 },
                CountSample { b: 10, count: 4 }
            ]
        );
        assert_eq!(count_sweep(&p, &[]).unwrap(), vec![]);
    }

    #[test]
    fn closed_form_branches() {
        // Case by sign of c2; each must be finite and positive.
        let pos = area_closed_form(&params(4, 4, 1, 1, 1000)).unwrap();
        let zero = area_closed_form(&params(4, 4, 1, 0, 1000)).unwrap();
        let neg = area_closed_form(&params(4, 4, 5, -1, 1000)).unwrap();
        for v in [pos, zero, neg] {
            assert!(v.is_finite() && v > 0.0);
        }
        // Degenerate branches run through the log antiderivative.
        let deg1 = area_closed_form(&params(1, 2, 1, 2, 1000)).unwrap(); // g1+c1 = c2
        let deg2 = area_closed_form(&params(4, 1, 3, 2, 1000)).unwrap(); // g2+c2 = c1
        let deg3 = area_closed_form(&params(4, 2, 2, 0, 1000)).unwrap(); // g2 = c1
        let deg4 = area_closed_form(&params(4, 4, 3, -1, 1000)).unwrap(); // g2+c2 = c1
        for v in [deg1, deg2, deg3, deg4] {
            assert!(v.is_finite() && v > 0.0);
        }
        assert_eq!(
            area_closed_form(&params(16, 16, -11, -11, 10)).unwrap_err(),
            Error::NonPositiveDenominator {
                value: rat_int(-96)
            }
        );
    }

    #[test]
    fn closed_form_leading_behavior() {
        // g = (4,4), c = (1,1): the area grows like B^(2/3); quadrupling
        // log B by a factor 100 step multiplies it by ~100^(2/3).
        let p = params(4, 4, 1, 1, 10_000);
        let small = area_closed_form(&p).unwrap();
        let large = area_closed_form(&p.with_b(1_000_000)).unwrap();
        let ratio = large / small;
        let expected = 100f64.powf(2.0 / 3.0);
        assert!(
            (ratio / expected - 1.0).abs() < 0.05,
            "ratio {ratio}, expected {expected}"
        );
    }

    #[test]
    fn closed_form_tracks_the_count() {
        // The area with boundary terms estimates the count to within a small
        // constant factor at moderate B.
        for p in [params(4, 4, 1, 1, 2000), params(4, 4, 5, -1, 2000)] {
            let count = count_region(&p).unwrap() as f64;
            let area = area_closed_form(&p).unwrap();
            assert!(
                area / count < 4.0 && count / area < 4.0,
                "area {area}, count {count}"
            );
        }
    }

    #[test]
    fn fit_recovers_exact_power_laws() {
        let squares: Vec<CountSample> = [10u64, 30, 100, 300, 1000]
            .iter()
            .map(|&b| CountSample { b, count: b * b })
            .collect();
        let fit = fit_exponent(&squares, 1.0).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);

        let constant: Vec<CountSample> = [10u64, 100, 1000]
            .iter()
            .map(|&b| CountSample { b, count: 7 })
            .collect();
        let fit = fit_exponent(&constant, 1.0).unwrap();
        assert_eq!(fit.slope, 0.0);
    }

    #[test]
    fn fit_needs_three_positive_samples() {
        let two: Vec<CountSample> = vec![
            CountSample { b: 10, count: 5 },
            CountSample { b: 20, count: 9 },
        ];
        assert_eq!(
            fit_exponent(&two, 1.0).unwrap_err(),
            Error::InsufficientSamples { needed: 3, got: 2 }
        );
        let zeros: Vec<CountSample> = (1..=5).map(|b| CountSample { b, count: 0 }).collect();
        assert_eq!(
            fit_exponent(&zeros, 1.0).unwrap_err(),
            Error::InsufficientSamples { needed: 3, got: 0 }
        );
    }

    #[test]
    fn region_sweep_slope_stays_under_the_exponent_bound() {
        // g = (4,4), c = (1,1): alpha = 2/3; the tail slope must not exceed
        // it by more than a generous discretization allowance.
        let p = params(4, 4, 1, 1, 1);
        let samples = count_sweep(&p, &[10, 100, 1000, 10_000, 100_000]).unwrap();
        let fit = fit_exponent(&samples, 0.6).unwrap();
        assert!(fit.slope <= 2.0 / 3.0 + 0.08, "slope {}", fit.slope);
    }

    #[test]
    fn invalid_fiber_degrees_are_rejected() {
        assert_eq!(
            RegionParams::new(rat_int(4), rat_int(4), rat_int(-4), rat_int(1), 10).unwrap_err(),
            Error::NonPositiveFiberDegree {
                which: 1,
                value: rat_int(0)
            }
        );
        assert_eq!(
            RegionParams::new(rat_int(4), rat_int(4), rat_int(1), rat_int(-5), 10).unwrap_err(),
            Error::NonPositiveFiberDegree {
                which: 2,
                value: rat_int(-1)
            }
        );
    }
}
