//! The rank-18 sublattice of the Picard group spanned by the two elliptic
//! fibration classes `F1`, `F2` and the sixteen exceptional curves `E_ij`.
//!
//! Coordinates are exact rationals in the fixed basis order
//! `F1, F2, E11, E12, ..., E44` (the `E` block is row-major). The pairing is
//! fixed on the basis by
//!
//! ```text
//! F1.F1 = F2.F2 = 0,   F1.F2 = 2,   Fk.Eij = 0,   Eij.Ekl = -2 [ij = kl]
//! ```
//!
//! and extended bilinearly. `F1.F2 = 2` is forced by the fiber decompositions
//! `F1 = E_i1 + ... + E_i4 + 2 L_i` and `F2 = E_1j + ... + E_4j + 2 M_j`
//! together with the standard intersection table of the 24 curves; the test
//! suite re-derives the whole table from this Gram matrix.

use crate::rational::{rat, rat_int, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Number of coordinates in the fixed basis: `F1, F2, E11..E44`.
pub const BASIS_RANK: usize = 18;

/// One of the distinguished smooth rational curves, or a fiber class.
///
/// Indices are 1-based and must lie in `1..=4`. There are exactly 24 curve
/// labels of kinds `E`, `L`, `M`: the sixteen exceptional curves `E(i,j)`,
/// the four halved fiber components `L(i)` of the first fibration and the
/// four components `M(j)` of the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurveLabel {
    /// Exceptional (-2)-curve over the 2-torsion point `(a_i, b_j)`.
    E(u8, u8),
    /// Halved component of the `i`-th singular fiber of the first fibration.
    L(u8),
    /// Halved component of the `j`-th singular fiber of the second fibration.
    M(u8),
    /// Fiber class of the first elliptic fibration.
    Fiber1,
    /// Fiber class of the second elliptic fibration.
    Fiber2,
}

impl CurveLabel {
    fn assert_valid(self) {
        match self {
            CurveLabel::E(i, j) => {
                assert!(
                    (1..=4).contains(&i) && (1..=4).contains(&j),
                    "curve index out of range"
                )
            }
            CurveLabel::L(i) | CurveLabel::M(i) => {
                assert!((1..=4).contains(&i), "curve index out of range")
            }
            CurveLabel::Fiber1 | CurveLabel::Fiber2 => {}
        }
    }

    /// The 24 curve labels of kinds `E`, `L`, `M`, in a fixed order
    /// (`E` row-major, then `L1..L4`, then `M1..M4`).
    pub fn all_curves() -> impl Iterator<Item = CurveLabel> {
        let es = (1..=4u8).flat_map(|i| (1..=4u8).map(move |j| CurveLabel::E(i, j)));
        let ls = (1..=4u8).map(CurveLabel::L);
        let ms = (1..=4u8).map(CurveLabel::M);
        es.chain(ls).chain(ms)
    }
}

impl fmt::Display for CurveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveLabel::E(i, j) => write!(f, "E{i}{j}"),
            CurveLabel::L(i) => write!(f, "L{i}"),
            CurveLabel::M(j) => write!(f, "M{j}"),
            CurveLabel::Fiber1 => write!(f, "F1"),
            CurveLabel::Fiber2 => write!(f, "F2"),
        }
    }
}

impl std::str::FromStr for CurveLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || format!("unknown curve label `{s}`");
        let idx = |c: char| -> Result<u8, String> {
            c.to_digit(10)
                .filter(|d| (1..=4).contains(d))
                .map(|d| d as u8)
                .ok_or_else(err)
        };
        let chars: Vec<char> = s.chars().collect();
        match (chars.first(), chars.len()) {
            (Some('F'), 2) => match chars[1] {
                '1' => Ok(CurveLabel::Fiber1),
                '2' => Ok(CurveLabel::Fiber2),
                _ => Err(err()),
            },
            (Some('E'), 3) => Ok(CurveLabel::E(idx(chars[1])?, idx(chars[2])?)),
            (Some('L'), 2) => Ok(CurveLabel::L(idx(chars[1])?)),
            (Some('M'), 2) => Ok(CurveLabel::M(idx(chars[1])?)),
            _ => Err(err()),
        }
    }
}

/// A pair of non-empty subsets of `{1,2,3,4}`, encoded as 4-bit masks.
///
/// Bit `k-1` of a mask holds element `k`. Valid masks run `1..=15`, so there
/// are 225 distinct pairs. These index the cone generators `A_{S,T}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetPair {
    s: u8,
    t: u8,
}

impl SubsetPair {
    /// Builds a pair from bitmasks; both must be in `1..=15`.
    pub fn new(s: u8, t: u8) -> Option<SubsetPair> {
        if (1..=15).contains(&s) && (1..=15).contains(&t) {
            Some(SubsetPair { s, t })
        } else {
            None
        }
    }

    /// The pair of full subsets `(N4, N4)`.
    pub fn full() -> SubsetPair {
        SubsetPair {
            s: 0b1111,
            t: 0b1111,
        }
    }

    /// The singleton pair `({i}, {j})` for 1-based indices.
    pub fn singleton(i: u8, j: u8) -> SubsetPair {
        assert!(
            (1..=4).contains(&i) && (1..=4).contains(&j),
            "singleton index out of range"
        );
        SubsetPair {
            s: 1 << (i - 1),
            t: 1 << (j - 1),
        }
    }

    pub fn s_mask(&self) -> u8 {
        self.s
    }

    pub fn t_mask(&self) -> u8 {
        self.t
    }

    pub fn card_s(&self) -> u32 {
        self.s.count_ones()
    }

    pub fn card_t(&self) -> u32 {
        self.t.count_ones()
    }

    /// Does `S` contain the 1-based element `i`?
    pub fn s_contains(&self, i: u8) -> bool {
        self.s & (1 << (i - 1)) != 0
    }

    /// Does `T` contain the 1-based element `j`?
    pub fn t_contains(&self, j: u8) -> bool {
        self.t & (1 << (j - 1)) != 0
    }

    /// All 225 pairs, ordered by `(S, T)` mask.
    pub fn all() -> impl Iterator<Item = SubsetPair> {
        (1..=15u8).flat_map(|s| (1..=15u8).map(move |t| SubsetPair { s, t }))
    }
}

impl fmt::Display for SubsetPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elems = |mask: u8| {
            (1..=4u8)
                .filter(|k| mask & (1 << (k - 1)) != 0)
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({{{}}},{{{}}})", elems(self.s), elems(self.t))
    }
}

/// A divisor class in exact rational coordinates.
///
/// `e[i][j]` (0-based storage) is the coefficient of `E_{i+1,j+1}`. Equality
/// is coordinate-wise exact equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorClass {
    pub f1: Rational,
    pub f2: Rational,
    pub e: [[Rational; 4]; 4],
}

fn zero_e() -> [[Rational; 4]; 4] {
    std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()))
}

impl DivisorClass {
    pub fn zero() -> DivisorClass {
        DivisorClass {
            f1: Rational::zero(),
            f2: Rational::zero(),
            e: zero_e(),
        }
    }

    pub fn new(f1: Rational, f2: Rational, e: [[Rational; 4]; 4]) -> DivisorClass {
        DivisorClass { f1, f2, e }
    }

    /// Coefficient of `E_ij` for 1-based indices.
    pub fn e_coeff(&self, i: u8, j: u8) -> &Rational {
        &self.e[(i - 1) as usize][(j - 1) as usize]
    }

    /// The 18 coordinates in basis order `F1, F2, E11..E44`.
    pub fn coordinates(&self) -> Vec<Rational> {
        let mut v = Vec::with_capacity(BASIS_RANK);
        v.push(self.f1.clone());
        v.push(self.f2.clone());
        for row in &self.e {
            for c in row {
                v.push(c.clone());
            }
        }
        v
    }

    /// The intersection pairing, extended bilinearly from the basis Gram
    /// matrix (`F1.F2 = 2`, `Eij.Eij = -2`, all other basis products zero).
    /// Symmetric in its arguments.
    pub fn pair(&self, other: &DivisorClass) -> Rational {
        let two = rat_int(2);
        let mut acc = (&self.f1 * &other.f2 + &self.f2 * &other.f1) * &two;
        for i in 0..4 {
            for j in 0..4 {
                acc -= &two * (&self.e[i][j] * &other.e[i][j]);
            }
        }
        acc
    }

    /// Degree of the labeled curve with respect to this class:
    /// `deg_D(C) = D.C`.
    pub fn degree(&self, label: CurveLabel) -> Rational {
        self.pair(&curve_class(label))
    }

    /// Scales every coordinate by `k`.
    pub fn scaled(&self, k: &Rational) -> DivisorClass {
        let mut out = self.clone();
        out.f1 *= k;
        out.f2 *= k;
        for row in &mut out.e {
            for c in row.iter_mut() {
                *c *= k;
            }
        }
        out
    }
}

impl Add for &DivisorClass {
    type Output = DivisorClass;

    fn add(self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        out.f1 += &rhs.f1;
        out.f2 += &rhs.f2;
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] += &rhs.e[i][j];
            }
        }
        out
    }
}

impl Sub for &DivisorClass {
    type Output = DivisorClass;

    fn sub(self, rhs: &DivisorClass) -> DivisorClass {
        let mut out = self.clone();
        out.f1 -= &rhs.f1;
        out.f2 -= &rhs.f2;
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] -= &rhs.e[i][j];
            }
        }
        out
    }
}

impl Neg for &DivisorClass {
    type Output = DivisorClass;

    fn neg(self) -> DivisorClass {
        self.scaled(&rat_int(-1))
    }
}

impl Mul<&Rational> for &DivisorClass {
    type Output = DivisorClass;

    fn mul(self, k: &Rational) -> DivisorClass {
        self.scaled(k)
    }
}

/// Serialized as the 18-element array of `"p/q"` strings in basis order.
impl serde::Serialize for DivisorClass {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = ser.serialize_seq(Some(BASIS_RANK))?;
        for coord in self.coordinates() {
            seq.serialize_element(&coord.to_string())?;
        }
        seq.end()
    }
}

impl<'de> serde::Deserialize<'de> for DivisorClass {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let strings = <[String; BASIS_RANK]>::deserialize(de)?;
        let mut coords = Vec::with_capacity(BASIS_RANK);
        for s in &strings {
            coords.push(crate::rational::parse_rational(s).map_err(D::Error::custom)?);
        }
        let e = std::array::from_fn(|i| std::array::from_fn(|j| coords[2 + i * 4 + j].clone()));
        Ok(DivisorClass {
            f1: coords[0].clone(),
            f2: coords[1].clone(),
            e,
        })
    }
}

/// The class of a labeled curve (or fiber) in basis coordinates.
///
/// `E_ij` is a basis vector. The components satisfy the fiber decompositions
/// `F1 = sum_j E_ij + 2 L_i` and `F2 = sum_i E_ij + 2 M_j`, so
/// `L_i = (F1 - sum_j E_ij)/2` and `M_j = (F2 - sum_i E_ij)/2`: their
/// coordinates are half-integers.
pub fn curve_class(label: CurveLabel) -> DivisorClass {
    label.assert_valid();
    let mut d = DivisorClass::zero();
    let half = rat(1, 2);
    match label {
        CurveLabel::E(i, j) => {
            d.e[(i - 1) as usize][(j - 1) as usize] = Rational::one();
        }
        CurveLabel::L(i) => {
            d.f1 = half.clone();
            for j in 0..4 {
                d.e[(i - 1) as usize][j] = -half.clone();
            }
        }
        CurveLabel::M(j) => {
            d.f2 = half.clone();
            for i in 0..4 {
                d.e[i][(j - 1) as usize] = -half.clone();
            }
        }
        CurveLabel::Fiber1 => d.f1 = Rational::one(),
        CurveLabel::Fiber2 => d.f2 = Rational::one(),
    }
    d
}

/// The cone generator `A_{S,T} = |S| F1 + |T| F2 - sum_{i in S, j in T} E_ij`.
pub fn a_class(p: SubsetPair) -> DivisorClass {
    let mut d = DivisorClass::zero();
    d.f1 = rat_int(p.card_s() as i64);
    d.f2 = rat_int(p.card_t() as i64);
    for i in 1..=4u8 {
        for j in 1..=4u8 {
            if p.s_contains(i) && p.t_contains(j) {
                d.e[(i - 1) as usize][(j - 1) as usize] = rat_int(-1);
            }
        }
    }
    d
}

/// Exact rank of the span of the given classes over the rationals.
///
/// Each row of coordinates is cleared to integers, then reduced by
/// fraction-free (Bareiss) elimination so every intermediate value stays an
/// exact integer.
pub fn rank_of_span(classes: &[DivisorClass]) -> usize {
    assert!(!classes.is_empty(), "rank_of_span needs at least one class");
    let mut m: Vec<Vec<BigInt>> = classes
        .iter()
        .map(|c| {
            let coords = c.coordinates();
            let lcm = coords
                .iter()
                .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
            coords
                .iter()
                .map(|r| r.numer() * (&lcm / r.denom()))
                .collect()
        })
        .collect();

    let rows = m.len();
    let cols = BASIS_RANK;
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let numerator = &m[r][c] * &pivot - &m[r][col] * &m[rank][c];
                // Fraction-free step: the previous pivot divides exactly.
                debug_assert!((&numerator % &prev_pivot).is_zero());
                m[r][c] = numerator / &prev_pivot;
            }
            m[r][col] = BigInt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
