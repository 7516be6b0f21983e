//! Cone decompositions of divisors: writing `D = d1 F1 + d2 F2 + sum e_ij E_ij`
//! as `D = sum a_{S,T} A_{S,T} + c1 F1 + c2 F2` with all `a_{S,T} >= 0`.
//!
//! The `E` coordinates pin the weights cell-wise: for every cell `(m,n)`,
//! `sum_{S contains m, T contains n} a_{S,T} = -e_mn`. With 225 weights and
//! 16 cells the decomposition is massively non-unique, so three strategies
//! are exposed: a deterministic `Canonical` peel, the plain `Singleton`
//! assignment, and an exact optimizer that maximizes the counting-exponent
//! denominator over all feasible decompositions.

mod simplex;

use crate::error::{Error, Result};
use crate::lattice::{a_class, curve_class, CurveLabel, DivisorClass, SubsetPair};
use crate::rational::{rat_int, Rational};
use num_traits::{Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// A divisor `d1 F1 + d2 F2 + sum e_ij E_ij` intended to be ample.
///
/// Membership in the cone requires `e[i][j] <= 0` for every cell; a zero
/// cell is tolerated by the decomposition routines but flagged by
/// [`AmpleDivisorInput::has_zero_cells`], since an ample divisor has every
/// `e_ij` strictly negative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmpleDivisorInput {
    pub d1: Rational,
    pub d2: Rational,
    pub e: [[Rational; 4]; 4],
}

impl AmpleDivisorInput {
    pub fn new(d1: Rational, d2: Rational, e: [[Rational; 4]; 4]) -> AmpleDivisorInput {
        AmpleDivisorInput { d1, d2, e }
    }

    /// The divisor class with these coordinates.
    pub fn class(&self) -> DivisorClass {
        DivisorClass::new(self.d1.clone(), self.d2.clone(), self.e.clone())
    }

    /// Fails with `NotInCone` on the first positive `E` coefficient.
    pub fn check_in_cone(&self) -> Result<()> {
        for i in 0..4 {
            for j in 0..4 {
                if self.e[i][j].is_positive() {
                    return Err(Error::NotInCone {
                        i: i as u8 + 1,
                        j: j as u8 + 1,
                        value: self.e[i][j].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// True when some `e_ij` is zero (cone boundary; cannot be ample).
    pub fn has_zero_cells(&self) -> bool {
        self.e.iter().flatten().any(|v| v.is_zero())
    }
}

/// How to pick one decomposition out of the feasible family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecompositionStrategy {
    /// Peel `a_{N4,N4} = min(-e_ij)` off the full block, then finish the
    /// residuals with singletons.
    Canonical,
    /// `a_{{i},{j}} = -e_ij` for every cell; nothing else.
    Singleton,
    /// Maximize the counting-exponent denominator
    /// `d1*g2 + d2*g1 - g1*g2` over all feasible decompositions.
    OptimizeDenominator,
}

impl DecompositionStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            DecompositionStrategy::Canonical => "canonical",
            DecompositionStrategy::Singleton => "singleton",
            DecompositionStrategy::OptimizeDenominator => "optimize",
        }
    }
}

impl std::str::FromStr for DecompositionStrategy {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "canonical" => Ok(DecompositionStrategy::Canonical),
            "singleton" => Ok(DecompositionStrategy::Singleton),
            "optimize" | "optimize-denominator" => Ok(DecompositionStrategy::OptimizeDenominator),
            other => Err(format!(
                "unknown strategy `{other}` (expected canonical, singleton, or optimize)"
            )),
        }
    }
}

/// A non-negative weight per subset pair: one feasible assignment of the
/// cone generators.
pub type WeightAssignment = BTreeMap<SubsetPair, Rational>;

/// A representation `D = sum a_{S,T} A_{S,T} + c1 F1 + c2 F2`.
///
/// Every stored weight is positive (zeros are dropped), and
/// [`ConeDecomposition::reconstruct`] returns the source divisor
/// coordinate-exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeDecomposition {
    a: WeightAssignment,
    pub c1: Rational,
    pub c2: Rational,
}

impl ConeDecomposition {
    /// Builds a decomposition, dropping zero weights.
    ///
    /// Panics if a negative weight is supplied; feasible decompositions are
    /// non-negative by definition.
    pub fn new(weights: WeightAssignment, c1: Rational, c2: Rational) -> ConeDecomposition {
        let a: WeightAssignment = weights.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        assert!(
            a.values().all(|v| v.is_positive()),
            "cone weights must be non-negative"
        );
        ConeDecomposition { a, c1, c2 }
    }

    /// The non-zero weights, ordered by `(S, T)` mask.
    pub fn weights(&self) -> &WeightAssignment {
        &self.a
    }

    /// `(g1, g2) = (sum |S| a_{S,T}, sum |T| a_{S,T})`.
    pub fn gammas(&self) -> (Rational, Rational) {
        let mut g1 = Rational::zero();
        let mut g2 = Rational::zero();
        for (pair, v) in &self.a {
            g1 += rat_int(pair.card_s() as i64) * v;
            g2 += rat_int(pair.card_t() as i64) * v;
        }
        (g1, g2)
    }

    /// `sum a_{S,T} A_{S,T} + c1 F1 + c2 F2` in basis coordinates.
    pub fn reconstruct(&self) -> DivisorClass {
        let mut d = &curve_class(CurveLabel::Fiber1).scaled(&self.c1)
            + &curve_class(CurveLabel::Fiber2).scaled(&self.c2);
        for (pair, v) in &self.a {
            d = &d + &a_class(*pair).scaled(v);
        }
        d
    }

    /// Total weight pinned on cell `(m,n)`:
    /// `sum_{S contains m, T contains n} a_{S,T}` (equals `-e_mn`).
    pub fn cell_weight(&self, m: u8, n: u8) -> Rational {
        self.a
            .iter()
            .filter(|(p, _)| p.s_contains(m) && p.t_contains(n))
            .map(|(_, v)| v.clone())
            .sum()
    }
}

/// The counting-exponent denominator as a function of `(g1, g2)` at fixed
/// fiber coordinates `(d1, d2)`:
/// `g1*g2 + g2*c1 + g1*c2 = d1*g2 + d2*g1 - g1*g2` since `c_i = d_i - g_i`.
pub fn delta_objective(d1: &Rational, d2: &Rational, g1: &Rational, g2: &Rational) -> Rational {
    d1 * g2 + d2 * g1 - g1 * g2
}

/// Decomposes `input` under the chosen strategy.
///
/// Fails with `NotInCone` if some `e_ij > 0`: every cell forces
/// `e_mn = -sum_{S contains m, T contains n} a_{S,T} <= 0`, so no
/// non-negative representation exists.
pub fn decompose(
    input: &AmpleDivisorInput,
    strategy: DecompositionStrategy,
) -> Result<ConeDecomposition> {
    input.check_in_cone()?;
    match strategy {
        DecompositionStrategy::Canonical => {
            let full_weight = (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .map(|(i, j)| -&input.e[i][j])
                .min()
                .expect("4x4 grid is non-empty");
            let mut weights = BTreeMap::new();
            for i in 0..4u8 {
                for j in 0..4u8 {
                    let residual = -&input.e[i as usize][j as usize] - &full_weight;
                    weights.insert(SubsetPair::singleton(i + 1, j + 1), residual);
                }
            }
            weights.insert(SubsetPair::full(), full_weight);
            finish(input, weights)
        }
        DecompositionStrategy::Singleton => {
            let mut weights = BTreeMap::new();
            for i in 0..4u8 {
                for j in 0..4u8 {
                    weights.insert(
                        SubsetPair::singleton(i + 1, j + 1),
                        -&input.e[i as usize][j as usize],
                    );
                }
            }
            finish(input, weights)
        }
        DecompositionStrategy::OptimizeDenominator => optimize_denominator(input),
    }
}

fn finish(
    input: &AmpleDivisorInput,
    weights: BTreeMap<SubsetPair, Rational>,
) -> Result<ConeDecomposition> {
    let mut d = ConeDecomposition::new(weights, Rational::zero(), Rational::zero());
    let (g1, g2) = d.gammas();
    d.c1 = &input.d1 - g1;
    d.c2 = &input.d2 - g2;
    Ok(d)
}

/// The feasible set of `(g1, g2)` over all decompositions of `input`,
/// as a convex polygon with counterclockwise vertices.
///
/// Each vertex is certified by a feasible weight assignment, retrievable via
/// [`GammaPolygon::certificate`]. Degenerate polygons (a segment or a single
/// point) are returned with 2 or 1 vertices.
#[derive(Debug, Clone)]
pub struct GammaPolygon {
    vertices: Vec<(Rational, Rational)>,
    certificates: Vec<WeightAssignment>,
}

impl GammaPolygon {
    /// Counterclockwise vertices, starting from the lexicographically
    /// smallest.
    pub fn vertices(&self) -> &[(Rational, Rational)] {
        &self.vertices
    }

    /// A feasible weight assignment whose gammas equal vertex `i`.
    pub fn certificate(&self, i: usize) -> &WeightAssignment {
        &self.certificates[i]
    }

    /// Exact point-in-polygon test (boundary counts as inside).
    pub fn contains(&self, g1: &Rational, g2: &Rational) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0].0 == *g1 && self.vertices[0].1 == *g2,
            2 => {
                let (a, b) = (&self.vertices[0], &self.vertices[1]);
                if cross(a, b, &(g1.clone(), g2.clone())) != Rational::zero() {
                    return false;
                }
                let within = |lo: &Rational, hi: &Rational, v: &Rational| {
                    (lo.min(hi) <= v) && (v <= lo.max(hi))
                };
                within(&a.0, &b.0, g1) && within(&a.1, &b.1, g2)
            }
            _ => {
                let p = (g1.clone(), g2.clone());
                (0..n).all(|i| {
                    cross(&self.vertices[i], &self.vertices[(i + 1) % n], &p) >= Rational::zero()
                })
            }
        }
    }
}

/// Cross product of `(b - a) x (c - a)`; positive for a left turn.
fn cross(a: &(Rational, Rational), b: &(Rational, Rational), c: &(Rational, Rational)) -> Rational {
    (&b.0 - &a.0) * (&c.1 - &a.1) - (&b.1 - &a.1) * (&c.0 - &a.0)
}

/// Monotone-chain convex hull over exact points; returns strict vertices in
/// counterclockwise order (collinear interior points dropped).
fn convex_hull(points: &[(Rational, Rational)]) -> Vec<(Rational, Rational)> {
    let mut pts: Vec<(Rational, Rational)> = points.to_vec();
    pts.sort();
    pts.dedup();
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let build = |iter: &mut dyn Iterator<Item = &(Rational, Rational)>| {
        let mut chain: Vec<(Rational, Rational)> = Vec::new();
        for p in iter {
            while chain.len() >= 2
                && cross(&chain[chain.len() - 2], &chain[chain.len() - 1], p) <= Rational::zero()
            {
                chain.pop();
            }
            chain.push(p.clone());
        }
        chain
    };
    let lower = build(&mut pts.iter());
    let upper = build(&mut pts.iter().rev());
    let mut hull = lower;
    hull.pop();
    hull.extend(upper);
    hull.pop();
    debug_assert!(hull.len() >= 2);
    hull
}

/// The 16 cells in row-major order as right-hand sides `b_mn = -e_mn`.
fn cell_rhs(input: &AmpleDivisorInput) -> Vec<Rational> {
    let mut b = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            b.push(-&input.e[i][j]);
        }
    }
    b
}

struct ConeLp {
    columns: Vec<SubsetPair>,
    tableau: simplex::Tableau,
}

impl ConeLp {
    fn new(b: Vec<Rational>) -> ConeLp {
        let columns: Vec<SubsetPair> = SubsetPair::all().collect();
        let mut a = vec![vec![Rational::zero(); columns.len()]; 16];
        for (col, pair) in columns.iter().enumerate() {
            for m in 1..=4u8 {
                for n in 1..=4u8 {
                    if pair.s_contains(m) && pair.t_contains(n) {
                        a[cell_row(m, n)][col] = rat_int(1);
                    }
                }
            }
        }
        // Singleton columns form the identity on the 16 cells, so they are a
        // basic feasible start whenever b >= 0.
        let init_basis: Vec<usize> = (1..=4u8)
            .flat_map(|m| (1..=4u8).map(move |n| (m, n)))
            .map(|(m, n)| {
                columns
                    .iter()
                    .position(|p| *p == SubsetPair::singleton(m, n))
                    .expect("singleton column present")
            })
            .collect();
        let tableau = simplex::Tableau::new(&a, &b, &init_basis);
        ConeLp { columns, tableau }
    }

    /// Maximizes `w1*g1 + w2*g2`; returns the gamma point and its
    /// certificate. Solves are warm-started from the previous basis.
    fn solve_direction(
        &mut self,
        w1: &Rational,
        w2: &Rational,
    ) -> ((Rational, Rational), WeightAssignment) {
        let c: Vec<Rational> = self
            .columns
            .iter()
            .map(|p| w1 * rat_int(p.card_s() as i64) + w2 * rat_int(p.card_t() as i64))
            .collect();
        let sol = self
            .tableau
            .maximize(&c)
            .expect("cone weight polytope is bounded");
        let mut g1 = Rational::zero();
        let mut g2 = Rational::zero();
        let mut cert = BTreeMap::new();
        for (col, v) in sol.x.iter().enumerate() {
            if !v.is_zero() {
                let pair = self.columns[col];
                g1 += rat_int(pair.card_s() as i64) * v;
                g2 += rat_int(pair.card_t() as i64) * v;
                cert.insert(pair, v.clone());
            }
        }
        debug_assert_eq!(sol.value, w1 * &g1 + w2 * &g2);
        ((g1, g2), cert)
    }
}

fn cell_row(m: u8, n: u8) -> usize {
    ((m - 1) * 4 + (n - 1)) as usize
}

/// Computes the feasible `(g1, g2)` polygon by exact support-direction LPs.
///
/// Extreme points are gathered by maximizing over outward normals of the
/// current hull until every edge is confirmed; each LP both certifies a
/// vertex and bounds the polygon in its direction.
pub fn gamma_polygon(input: &AmpleDivisorInput) -> Result<GammaPolygon> {
    input.check_in_cone()?;
    let b = cell_rhs(input);
    if b.iter().all(|v| v.is_zero()) {
        // Every weight covers at least one cell, so only a = 0 is feasible.
        return Ok(GammaPolygon {
            vertices: vec![(Rational::zero(), Rational::zero())],
            certificates: vec![BTreeMap::new()],
        });
    }
    let mut lp = ConeLp::new(b);

    let one = rat_int(1);
    let neg = rat_int(-1);
    let zero = Rational::zero();
    let cardinal = [
        (one.clone(), zero.clone()),
        (neg.clone(), zero.clone()),
        (zero.clone(), one.clone()),
        (zero.clone(), neg.clone()),
    ];

    let mut found: BTreeMap<(Rational, Rational), WeightAssignment> = BTreeMap::new();
    let mut extremes = Vec::new();
    for (w1, w2) in &cardinal {
        let (gamma, cert) = lp.solve_direction(w1, w2);
        extremes.push(w1 * &gamma.0 + w2 * &gamma.1);
        found.entry(gamma).or_insert(cert);
    }
    let (g1_max, g1_min, g2_max, g2_min) = (
        extremes[0].clone(),
        -extremes[1].clone(),
        extremes[2].clone(),
        -extremes[3].clone(),
    );

    // Degenerate cases: a single point or an axis-parallel segment.
    if g1_min == g1_max && g2_min == g2_max {
        let point = (g1_max, g2_max);
        let cert = found
            .get(&point)
            .expect("pinned gammas certify the point")
            .clone();
        return Ok(GammaPolygon {
            vertices: vec![point],
            certificates: vec![cert],
        });
    }

    let mut confirmed: BTreeSet<((Rational, Rational), (Rational, Rational))> = BTreeSet::new();
    loop {
        let hull = convex_hull(&found.keys().cloned().collect::<Vec<_>>());
        let n = hull.len();
        let edges: Vec<((Rational, Rational), (Rational, Rational))> = if n == 2 {
            vec![
                (hull[0].clone(), hull[1].clone()),
                (hull[1].clone(), hull[0].clone()),
            ]
        } else {
            (0..n)
                .map(|i| (hull[i].clone(), hull[(i + 1) % n].clone()))
                .collect()
        };

        let mut grew = false;
        for (p, q) in edges {
            if confirmed.contains(&(p.clone(), q.clone())) {
                continue;
            }
            // Outward normal of the counterclockwise edge p -> q.
            let w1 = &q.1 - &p.1;
            let w2 = &p.0 - &q.0;
            let (gamma, cert) = lp.solve_direction(&w1, &w2);
            let best = &w1 * &gamma.0 + &w2 * &gamma.1;
            let here = &w1 * &p.0 + &w2 * &p.1;
            if best > here {
                found.entry(gamma).or_insert(cert);
                grew = true;
                break;
            } else {
                confirmed.insert((p, q));
            }
        }
        if !grew {
            let certificates = hull
                .iter()
                .map(|v| {
                    found
                        .get(v)
                        .expect("hull vertices were found by LPs")
                        .clone()
                })
                .collect();
            return Ok(GammaPolygon {
                vertices: hull,
                certificates,
            });
        }
    }
}

/// Returns a feasible decomposition maximizing the counting-exponent
/// denominator `delta(g1, g2) = d1*g2 + d2*g1 - g1*g2`.
///
/// `delta` is bilinear with an indefinite Hessian, so its maximum over the
/// gamma polygon sits on the boundary: it is compared exactly over all
/// vertices and the interior critical point of each edge (where the
/// restriction is a concave quadratic). Mid-edge optima are certified by
/// mixing the two endpoint certificates.
pub fn optimize_denominator(input: &AmpleDivisorInput) -> Result<ConeDecomposition> {
    let polygon = gamma_polygon(input)?;
    let verts = polygon.vertices();
    let n = verts.len();

    let mut best: Option<(Rational, (Rational, Rational), WeightAssignment)> = None;
    let mut consider = |value: Rational, gamma: (Rational, Rational), cert: WeightAssignment| {
        let better = match &best {
            Some((v, _, _)) => value > *v,
            None => true,
        };
        if better {
            best = Some((value, gamma, cert));
        }
    };

    for (i, v) in verts.iter().enumerate() {
        let value = delta_objective(&input.d1, &input.d2, &v.0, &v.1);
        consider(value, v.clone(), polygon.certificate(i).clone());
    }

    let edge_count = match n {
        0 | 1 => 0,
        2 => 1,
        _ => n,
    };
    for i in 0..edge_count {
        let j = (i + 1) % n;
        let (p, q) = (&verts[i], &verts[j]);
        let d1 = &q.0 - &p.0;
        let d2 = &q.1 - &p.1;
        // delta(p + t*(q-p)) = const + t*lin - t^2*d1*d2; an interior max
        // needs d1*d2 > 0.
        let quad = &d1 * &d2;
        if !quad.is_positive() {
            continue;
        }
        let lin = &input.d1 * &d2 + &input.d2 * &d1 - (&p.0 * &d2 + &p.1 * &d1);
        let t = lin / (rat_int(2) * &quad);
        if t.is_positive() && t < rat_int(1) {
            let gamma = (&p.0 + &t * &d1, &p.1 + &t * &d2);
            let value = delta_objective(&input.d1, &input.d2, &gamma.0, &gamma.1);
            let mut cert = BTreeMap::new();
            let s = rat_int(1) - &t;
            for (pair, v) in polygon.certificate(i) {
                cert.insert(*pair, &s * v);
            }
            for (pair, v) in polygon.certificate(j) {
                let entry = cert.entry(*pair).or_insert_with(Rational::zero);
                *entry += &t * v;
            }
            consider(value, gamma, cert);
        }
    }

    let (_, gamma, cert) = best.expect("polygon has at least one vertex");
    let c1 = &input.d1 - &gamma.0;
    let c2 = &input.d2 - &gamma.1;
    Ok(ConeDecomposition::new(cert, c1, c2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    pub(crate) fn const_e(v: i64) -> [[Rational; 4]; 4] {
        std::array::from_fn(|_| std::array::from_fn(|_| rat_int(v)))
    }

    fn input(d1: i64, d2: i64, e: [[Rational; 4]; 4]) -> AmpleDivisorInput {
        AmpleDivisorInput::new(rat_int(d1), rat_int(d2), e)
    }

    #[test]
    fn canonical_of_the_full_generator() {
        // d1 = d2 = 4, e = -1 is exactly A_{N4,N4}.
        let d = decompose(&input(4, 4, const_e(-1)), DecompositionStrategy::Canonical).unwrap();
        assert_eq!(d.weights().len(), 1);
        assert_eq!(d.weights()[&SubsetPair::full()], rat_int(1));
        assert_eq!(d.c1, rat_int(0));
        assert_eq!(d.c2, rat_int(0));
    }

    #[test]
    fn canonical_and_singleton_of_the_shifted_generator() {
        let inp = input(5, 5, const_e(-1));

        let canonical = decompose(&inp, DecompositionStrategy::Canonical).unwrap();
        assert_eq!(canonical.weights().len(), 1);
        assert_eq!(canonical.weights()[&SubsetPair::full()], rat_int(1));
        assert_eq!(canonical.gammas(), (rat_int(4), rat_int(4)));
        assert_eq!(
            (canonical.c1.clone(), canonical.c2.clone()),
            (rat_int(1), rat_int(1))
        );

        let singleton = decompose(&inp, DecompositionStrategy::Singleton).unwrap();
        assert_eq!(singleton.weights().len(), 16);
        assert!(singleton.weights().values().all(|v| *v == rat_int(1)));
        assert_eq!(singleton.gammas(), (rat_int(16), rat_int(16)));
        assert_eq!(
            (singleton.c1.clone(), singleton.c2.clone()),
            (rat_int(-11), rat_int(-11))
        );
    }

    #[test]
    fn rejects_positive_cells() {
        let mut e = const_e(-1);
        e[2][1] = rat_int(1);
        let err = decompose(&input(4, 4, e), DecompositionStrategy::Singleton).unwrap_err();
        assert_eq!(
            err,
            Error::NotInCone {
                i: 3,
                j: 2,
                value: rat_int(1)
            }
        );
    }

    #[test]
    fn gammas_examples() {
        let mut w = BTreeMap::new();
        w.insert(SubsetPair::full(), rat_int(1));
        let d = ConeDecomposition::new(w, rat_int(0), rat_int(0));
        assert_eq!(d.gammas(), (rat_int(4), rat_int(4)));

        let mut w = BTreeMap::new();
        w.insert(SubsetPair::singleton(1, 2), rat_int(3));
        let d = ConeDecomposition::new(w, rat_int(0), rat_int(0));
        assert_eq!(d.gammas(), (rat_int(3), rat_int(3)));

        let d = ConeDecomposition::new(BTreeMap::new(), rat_int(0), rat_int(0));
        assert_eq!(d.gammas(), (rat_int(0), rat_int(0)));
    }

    #[test]
    fn reconstruct_examples() {
        let inp = input(5, 5, const_e(-1));
        let d = decompose(&inp, DecompositionStrategy::Canonical).unwrap();
        assert_eq!(d.reconstruct(), inp.class());

        let two_f1 = ConeDecomposition::new(BTreeMap::new(), rat_int(2), rat_int(0));
        assert_eq!(
            two_f1.reconstruct(),
            curve_class(CurveLabel::Fiber1).scaled(&rat_int(2))
        );
    }

    #[test]
    fn polygon_of_the_constant_block_is_a_square() {
        let polygon = gamma_polygon(&input(5, 5, const_e(-1))).unwrap();
        let verts = polygon.vertices();
        assert_eq!(verts.len(), 4);
        assert_eq!(
            verts,
            &[
                (rat_int(4), rat_int(4)),
                (rat_int(16), rat_int(4)),
                (rat_int(16), rat_int(16)),
                (rat_int(4), rat_int(16)),
            ]
        );
        assert!(polygon.contains(&rat_int(4), &rat_int(4)));
        assert!(polygon.contains(&rat_int(16), &rat_int(16)));
        assert!(polygon.contains(&rat(9, 2), &rat_int(10)));
        assert!(!polygon.contains(&rat_int(3), &rat_int(4)));

        // Certificates reproduce their vertices.
        for (i, v) in verts.iter().enumerate() {
            let cert = polygon.certificate(i).clone();
            let d = ConeDecomposition::new(cert, rat_int(0), rat_int(0));
            assert_eq!(d.gammas(), *v);
        }
    }

    #[test]
    fn polygon_of_zero_e_is_a_point() {
        let polygon = gamma_polygon(&input(3, 7, const_e(0))).unwrap();
        assert_eq!(polygon.vertices(), &[(rat_int(0), rat_int(0))]);
    }

    #[test]
    fn polygon_of_a_single_row_is_a_segment() {
        // e supported on row 1 only: feasible weights must have S = {1}, so
        // gamma2 = sum of the cell values = 4 is pinned while gamma1 ranges
        // from 1 (T = N4) to 4 (singletons).
        let mut e = const_e(0);
        for cell in &mut e[0] {
            *cell = rat_int(-1);
        }
        let polygon = gamma_polygon(&input(4, 4, e)).unwrap();
        assert_eq!(
            polygon.vertices(),
            &[(rat_int(1), rat_int(4)), (rat_int(4), rat_int(4))]
        );
        for (i, v) in polygon.vertices().iter().enumerate() {
            let d = ConeDecomposition::new(polygon.certificate(i).clone(), rat_int(0), rat_int(0));
            assert_eq!(d.gammas(), *v);
        }
        assert!(polygon.contains(&rat(5, 2), &rat_int(4)));
        assert!(!polygon.contains(&rat(5, 2), &rat(7, 2)));
    }

    #[test]
    fn optimizer_handles_segment_polygons() {
        // Same single-row input: delta(g1, 4) = 4 d1 + g1 (d2 - 4) is linear
        // on the segment, so the optimum sits at an endpoint depending on
        // the sign of d2 - 4.
        let mut e = const_e(0);
        for cell in &mut e[0] {
            *cell = rat_int(-1);
        }
        let grow = decompose(
            &input(3, 9, e.clone()),
            DecompositionStrategy::OptimizeDenominator,
        )
        .unwrap();
        assert_eq!(grow.gammas(), (rat_int(4), rat_int(4))); // d2 > 4: take g1 max
        let shrink =
            decompose(&input(3, 2, e), DecompositionStrategy::OptimizeDenominator).unwrap();
        assert_eq!(shrink.gammas(), (rat_int(1), rat_int(4))); // d2 < 4: take g1 min
    }

    #[test]
    fn polygon_of_a_single_cell_is_a_point() {
        // Only e[1][1] nonzero: every other cell pins its covering weights to
        // zero, and any (S,T) with |S| > 1 or |T| > 1 covers such a cell, so
        // a_{{1},{1}} = 1 is the only feasible assignment.
        let mut e = const_e(0);
        e[0][0] = rat_int(-1);
        let polygon = gamma_polygon(&input(4, 4, e)).unwrap();
        assert_eq!(polygon.vertices(), &[(rat_int(1), rat_int(1))]);
        let cert = polygon.certificate(0);
        assert_eq!(cert.len(), 1);
        assert_eq!(cert[&SubsetPair::singleton(1, 1)], rat_int(1));
    }

    #[test]
    fn optimizer_beats_the_fixed_strategies() {
        let inp = input(5, 5, const_e(-1));
        let opt = decompose(&inp, DecompositionStrategy::OptimizeDenominator).unwrap();
        let (g1, g2) = opt.gammas();
        let best = delta_objective(&inp.d1, &inp.d2, &g1, &g2);
        assert!(best >= rat_int(24));
        assert_eq!(opt.reconstruct(), inp.class());

        for strategy in [
            DecompositionStrategy::Canonical,
            DecompositionStrategy::Singleton,
        ] {
            let d = decompose(&inp, strategy).unwrap();
            let (g1, g2) = d.gammas();
            assert!(best >= delta_objective(&inp.d1, &inp.d2, &g1, &g2));
        }
    }

    #[test]
    fn optimizer_on_zero_e() {
        let inp = input(3, 7, const_e(0));
        let opt = decompose(&inp, DecompositionStrategy::OptimizeDenominator).unwrap();
        assert!(opt.weights().is_empty());
        assert_eq!(opt.c1, rat_int(3));
        assert_eq!(opt.c2, rat_int(7));
        assert_eq!(opt.gammas(), (rat_int(0), rat_int(0)));
    }

    #[test]
    fn cell_identity_holds_for_all_strategies() {
        let mut e = const_e(-1);
        e[0][1] = rat(-7, 2);
        e[3][2] = rat(-5, 3);
        e[2][2] = rat_int(-4);
        let inp = input(6, 9, e);
        for strategy in [
            DecompositionStrategy::Canonical,
            DecompositionStrategy::Singleton,
            DecompositionStrategy::OptimizeDenominator,
        ] {
            let d = decompose(&inp, strategy).unwrap();
            for m in 1..=4u8 {
                for n in 1..=4u8 {
                    assert_eq!(
                        d.cell_weight(m, n),
                        -&inp.e[(m - 1) as usize][(n - 1) as usize],
                        "cell ({m},{n}) under {strategy:?}"
                    );
                }
            }
            assert_eq!(
                d.reconstruct(),
                inp.class(),
                "round-trip under {strategy:?}"
            );
        }
    }
}
