//! Counting rational points of bounded height on the projective line, and
//! the degree-`d` rational-curve model built on it.
//!
//! Heights are multiplicative with the max norm: for a point in canonical
//! form, `H(a : b) = max(|a|, |b|)` with `gcd(|a|, |b|) = 1`. The count
//! grows like `(12/pi^2) B^2`; a curve of degree `d` parameterized by the
//! line sees heights raised to the `d`-th power, so its count at bound `B`
//! is the line's count at `floor(B^(1/d))`, with growth exponent `2/d`.

use num_integer::{Integer, Roots};

/// A point of the projective line over the rationals in canonical form:
/// coprime homogeneous coordinates with `b > 0`, or `(1 : 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    a: i64,
    b: i64,
}

impl ProjPoint {
    /// Canonicalizes `(a : b)`; `None` when both coordinates are zero.
    pub fn new(a: i64, b: i64) -> Option<ProjPoint> {
        if a == 0 && b == 0 {
            return None;
        }
        let g = a.unsigned_abs().gcd(&b.unsigned_abs()) as i64;
        let (mut a, mut b) = (a / g, b / g);
        if b < 0 || (b == 0 && a < 0) {
            a = -a;
            b = -b;
        }
        Some(ProjPoint { a, b })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// `max(|a|, |b|)` on the canonical representative.
    pub fn height(&self) -> u64 {
        self.a.unsigned_abs().max(self.b.unsigned_abs())
    }
}

impl std::fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({} : {})", self.a, self.b)
    }
}

/// Smallest-prime-factor sieve up to `n` inclusive.
fn spf_sieve(n: u64) -> Vec<u32> {
    let n = n as usize;
    let mut spf = vec![0u32; n + 1];
    for i in 2..=n {
        if spf[i] == 0 {
            let mut j = i;
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// `#{1 <= a <= limit : gcd(a, b) = 1}` by inclusion-exclusion over the
/// distinct primes of `b`.
fn coprime_up_to(limit: u64, b: u64, spf: &[u32]) -> u64 {
    let mut primes = Vec::new();
    let mut m = b as usize;
    while m > 1 {
        let p = spf[m] as usize;
        primes.push(p as u64);
        while m.is_multiple_of(p) {
            m /= p;
        }
    }
    // Signed divisor sums stay well within i64 for the sizes used here.
    let mut terms: Vec<(u64, i64)> = vec![(1, 1)];
    for p in primes {
        let len = terms.len();
        for k in 0..len {
            let (d, sign) = terms[k];
            terms.push((d * p, -sign));
        }
    }
    terms
        .iter()
        .map(|&(d, sign)| sign * (limit / d) as i64)
        .sum::<i64>() as u64
}

/// Number of canonical points with `max(|a|, |b|) <= B`.
///
/// Exactly `2 + 2 * sum_{b=1}^{B} #{1 <= a <= B : gcd(a, b) = 1}`: the two
/// special points `(1:0)`, `(0:1)` plus the sign pairs `(a:b)`, `(-a:b)`.
/// The total is always divisible by 4, since points with `0 < |a| != b`
/// group into quadruples `(a:b), (-a:b), (b:a), (-b:a)` and the remaining
/// four points `(1:0), (0:1), (1:1), (-1:1)` stand alone.
pub fn count_p1(b_max: u64) -> u64 {
    assert!(b_max >= 1, "height bound must be positive");
    let spf = spf_sieve(b_max);
    let mut total = 2u64;
    for b in 1..=b_max {
        total += 2 * coprime_up_to(b_max, b, &spf);
    }
    total
}

/// Reference enumeration for [`count_p1`]: canonicalize every pair in the
/// box and collect the distinct points. Quadratic in `B`; used by the
/// verification suites.
pub fn count_p1_naive(b_max: u64) -> u64 {
    assert!(b_max >= 1, "height bound must be positive");
    let bound = b_max as i64;
    let mut seen = std::collections::HashSet::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if let Some(p) = ProjPoint::new(a, b) {
                if p.height() <= b_max {
                    seen.insert(p);
                }
            }
        }
    }
    seen.len() as u64
}

/// Point count of a degree-`d` rational curve at height bound `B`, modeled
/// through its parameterization: `count_p1(floor(B^(1/d)))`. The growth
/// exponent is `2/d`; constants are not claimed.
pub fn count_degree_d(b_max: u64, d: u32) -> u64 {
    assert!(b_max >= 1, "height bound must be positive");
    assert!(d >= 1, "degree must be positive");
    count_p1(b_max.nth_root(d))
}
