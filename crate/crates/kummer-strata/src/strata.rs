//! The counting exponent, its case classification, and the first-layer
//! report for an ample divisor.
//!
//! For a decomposition with gammas `(g1, g2)` and fiber remainders
//! `(c1, c2)`, the exponent governing points off the 24 distinguished curves
//! is
//!
//! ```text
//! alpha = max{ 2(g1+g2) / (g1 g2 + g2 c1 + g1 c2),  2/(g1+c1),  2/(g2+c2) }
//! ```
//!
//! valid when the denominator and both fiber degrees are positive. Cases
//! I-III (which carry an extra log factor) hold when the attaining term is
//! coupled with an equality between `c1` or `c2` and the opposite fiber
//! degree; Case IV otherwise. The first layer of the point count is the
//! union of distinguished curves of minimal degree `A`, provided
//! `A (g1 + g2) < g1 g2 + g2 c1 + g1 c2` (condition (2)); the curves then
//! accumulate with growth exponent `2/A > alpha`.

use crate::cone::{decompose, AmpleDivisorInput, ConeDecomposition, DecompositionStrategy};
use crate::error::{Error, Result};
use crate::lattice::CurveLabel;
use crate::rational::{rat_int, Rational};
use num_traits::Signed;
use serde::{Deserialize, Serialize};

/// Which clause of the exponent theorem applies.
///
/// Cases I-III carry a `B^alpha log B` bound, Case IV a plain `B^alpha`.
/// When several clauses match, the lowest-numbered one is reported; all
/// overlapping matches give the same bound shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremCase {
    I,
    II,
    III,
    IV,
}

impl TheoremCase {
    /// True for cases I-III (the bound carries a log factor).
    pub fn log_factor(&self) -> bool {
        !matches!(self, TheoremCase::IV)
    }

    pub fn label(&self) -> &'static str {
        match self {
            TheoremCase::I => "I",
            TheoremCase::II => "II",
            TheoremCase::III => "III",
            TheoremCase::IV => "IV",
        }
    }
}

impl std::fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for TheoremCase {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for TheoremCase {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        match s.as_str() {
            "I" => Ok(TheoremCase::I),
            "II" => Ok(TheoremCase::II),
            "III" => Ok(TheoremCase::III),
            "IV" => Ok(TheoremCase::IV),
            other => Err(serde::de::Error::custom(format!(
                "unknown case label `{other}`"
            ))),
        }
    }
}

impl Serialize for CurveLabel {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CurveLabel {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The full first-layer stratification report for one divisor and one
/// decomposition strategy.
///
/// All rationals are exact; `error_exponent_q` is `None` when condition (2)
/// fails for the chosen decomposition (a warning explains this).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StrataReport {
    #[serde(with = "crate::rational::rational_string")]
    pub gamma1: Rational,
    #[serde(with = "crate::rational::rational_string")]
    pub gamma2: Rational,
    #[serde(with = "crate::rational::rational_string")]
    pub c1: Rational,
    #[serde(with = "crate::rational::rational_string")]
    pub c2: Rational,
    /// `g1 g2 + g2 c1 + g1 c2`.
    #[serde(with = "crate::rational::rational_string")]
    pub denominator: Rational,
    #[serde(with = "crate::rational::rational_string")]
    pub alpha: Rational,
    pub case: TheoremCase,
    /// True for cases I-III; kept alongside `case` in serialized reports.
    pub log_factor: bool,
    /// `A`: the minimal degree among the 24 distinguished curves.
    #[serde(with = "crate::rational::rational_string")]
    pub min_degree: Rational,
    /// Every curve attaining the minimal degree; non-empty.
    pub minimal_curves: Vec<CurveLabel>,
    /// Whether `A (g1+g2) < g1 g2 + g2 c1 + g1 c2` holds strictly.
    pub condition2_ok: bool,
    /// `(g1 g2 + g2 c1 + g1 c2) - A (g1+g2)`.
    #[serde(with = "crate::rational::rational_string")]
    pub condition2_margin: Rational,
    /// `2/A`: the growth exponent on the minimal-degree curves.
    #[serde(with = "crate::rational::rational_string")]
    pub curve_exponent: Rational,
    /// The error exponent `q < 2/A`, when condition (2) holds.
    #[serde(with = "crate::rational::optional_rational_string", default)]
    pub error_exponent_q: Option<Rational>,
    /// True when the rational-field Schanuel term attains `q`, so the error
    /// bound carries a log factor.
    pub q_log_factor: bool,
    /// The number-field degree parameter `N >= 1` (1 = rationals).
    pub field_degree: u32,
    pub warnings: Vec<String>,
}

fn exponent_terms(
    g1: &Rational,
    g2: &Rational,
    c1: &Rational,
    c2: &Rational,
) -> Result<(Rational, Rational, Rational)> {
    let denom = g1 * g2 + g2 * c1 + g1 * c2;
    if !denom.is_positive() {
        return Err(Error::NonPositiveDenominator { value: denom });
    }
    let fiber1 = g1 + c1;
    if !fiber1.is_positive() {
        return Err(Error::NonPositiveFiberDegree {
            which: 1,
            value: fiber1,
        });
    }
    let fiber2 = g2 + c2;
    if !fiber2.is_positive() {
        return Err(Error::NonPositiveFiberDegree {
            which: 2,
            value: fiber2,
        });
    }
    let two = rat_int(2);
    Ok(((&two * (g1 + g2)) / denom, &two / fiber1, &two / fiber2))
}

/// `alpha = max{2(g1+g2)/(g1 g2 + g2 c1 + g1 c2), 2/(g1+c1), 2/(g2+c2)}`.
pub fn alpha(g1: &Rational, g2: &Rational, c1: &Rational, c2: &Rational) -> Result<Rational> {
    let (t1, t2, t3) = exponent_terms(g1, g2, c1, c2)?;
    Ok(t1.max(t2).max(t3))
}

/// The case classification for the exponent bound.
///
/// Case I needs `alpha` attained by the first term together with
/// `c1 = g2 + c2` or `c2 = g1 + c1`; Case II needs `alpha = 2/(g1+c1)` and
/// `c2 = g1 + c1`; Case III needs `alpha = 2/(g2+c2)` and `c1 = g2 + c2`.
/// The lowest-numbered match wins; Case IV when none match.
pub fn classify_case(
    g1: &Rational,
    g2: &Rational,
    c1: &Rational,
    c2: &Rational,
) -> Result<TheoremCase> {
    let (t1, t2, t3) = exponent_terms(g1, g2, c1, c2)?;
    let a = t1.clone().max(t2.clone()).max(t3.clone());
    let c1_couples = *c1 == g2 + c2;
    let c2_couples = *c2 == g1 + c1;
    if a == t1 && (c1_couples || c2_couples) {
        Ok(TheoremCase::I)
    } else if a == t2 && c2_couples {
        Ok(TheoremCase::II)
    } else if a == t3 && c1_couples {
        Ok(TheoremCase::III)
    } else {
        Ok(TheoremCase::IV)
    }
}

/// Minimal degree `A` over the 24 distinguished curves, with every curve
/// attaining it (in the fixed `E` row-major, `L`, `M` order).
///
/// Fails with `NotAmpleLike` naming the first curve of non-positive degree:
/// an ample divisor meets every curve positively.
pub fn min_degree(d: &crate::lattice::DivisorClass) -> Result<(Rational, Vec<CurveLabel>)> {
    let degrees: Vec<(CurveLabel, Rational)> =
        CurveLabel::all_curves().map(|l| (l, d.degree(l))).collect();
    for (label, deg) in &degrees {
        if !deg.is_positive() {
            return Err(Error::NotAmpleLike {
                label: *label,
                degree: deg.clone(),
            });
        }
    }
    let min = degrees
        .iter()
        .map(|(_, d)| d.clone())
        .min()
        .expect("24 degrees");
    let curves = degrees
        .iter()
        .filter(|(_, d)| *d == min)
        .map(|(l, _)| *l)
        .collect();
    Ok((min, curves))
}

/// Condition (2): `A (g1+g2) < g1 g2 + g2 c1 + g1 c2`, with the exact margin
/// `RHS - LHS`.
pub fn check_condition2(
    a: &Rational,
    g1: &Rational,
    g2: &Rational,
    c1: &Rational,
    c2: &Rational,
) -> (bool, Rational) {
    let margin = g1 * g2 + g2 * c1 + g1 * c2 - a * (g1 + g2);
    (margin.is_positive(), margin)
}

/// The error exponent `q`: the largest of `alpha`, the Schanuel exponents
/// `2/deg` of the non-minimal distinguished curves, and the Schanuel error
/// exponent on the minimal curves (`2/A - 1/(N A)` for `N > 1`, else `1/A`
/// with a log factor).
///
/// Returns `(q, log_flag)`. Requires condition (2) for the supplied data;
/// the result then satisfies `q < 2/A`, which is asserted.
pub fn error_exponent(
    alpha: &Rational,
    min_degree: &Rational,
    degrees: &[(CurveLabel, Rational)],
    field_degree: u32,
) -> (Rational, bool) {
    assert!(field_degree >= 1, "field degree must be at least 1");
    assert!(min_degree.is_positive(), "minimal degree must be positive");
    let two = rat_int(2);
    let curve_exponent = &two / min_degree;

    let mut q = alpha.clone();
    // Non-minimal curves contribute 2/deg < 2/A; minimal ones are covered by
    // the Schanuel term below (empty max when every curve is minimal).
    for (_, deg) in degrees {
        if deg > min_degree {
            q = q.max(&two / deg);
        }
    }
    let schanuel = if field_degree > 1 {
        &curve_exponent - rat_int(1) / (rat_int(field_degree as i64) * min_degree)
    } else {
        rat_int(1) / min_degree
    };
    q = q.max(schanuel.clone());
    let log_flag = field_degree == 1 && q == schanuel;

    assert!(
        q < curve_exponent,
        "error exponent must stay below 2/A; condition (2) is a precondition here"
    );
    (q, log_flag)
}

/// Closed-form degree of a labeled curve from a decomposition, without going
/// through the intersection pairing:
///
/// ```text
/// deg(E_mn) = 2 sum_{S contains m, T contains n} a_{S,T}
/// deg(L_n)  = c2 + sum_{S not containing n} sum_T |T| a_{S,T}
/// deg(M_n)  = c1 + sum_S sum_{T not containing n} |S| a_{S,T}
/// ```
///
/// The pairing route must agree exactly; the verification suites check this
/// on random decompositions.
pub fn closed_form_degree(d: &ConeDecomposition, label: CurveLabel) -> Rational {
    let two = rat_int(2);
    match label {
        CurveLabel::E(m, n) => {
            let sum: Rational = d
                .weights()
                .iter()
                .filter(|(p, _)| p.s_contains(m) && p.t_contains(n))
                .map(|(_, v)| v.clone())
                .sum();
            two * sum
        }
        CurveLabel::L(n) => {
            let sum: Rational = d
                .weights()
                .iter()
                .filter(|(p, _)| !p.s_contains(n))
                .map(|(p, v)| rat_int(p.card_t() as i64) * v)
                .sum();
            &d.c2 + sum
        }
        CurveLabel::M(n) => {
            let sum: Rational = d
                .weights()
                .iter()
                .filter(|(p, _)| !p.t_contains(n))
                .map(|(p, v)| rat_int(p.card_s() as i64) * v)
                .sum();
            &d.c1 + sum
        }
        CurveLabel::Fiber1 => {
            let (_, g2) = d.gammas();
            two * (g2 + &d.c2)
        }
        CurveLabel::Fiber2 => {
            let (g1, _) = d.gammas();
            two * (g1 + &d.c1)
        }
    }
}

/// Runs the whole pipeline for one divisor: decompose, classify, find the
/// minimal-degree curves, test condition (2), and bound the error exponent.
///
/// When condition (2) holds, the report identifies the first layer as
/// exactly `minimal_curves` with growth exponent `2/A > alpha` and error
/// exponent `q`. When it fails, `error_exponent_q` is `None` and a warning
/// notes that the criterion is inconclusive for this decomposition (another
/// strategy, e.g. the denominator optimizer, may still succeed).
pub fn first_layer_report(
    input: &AmpleDivisorInput,
    strategy: DecompositionStrategy,
    field_degree: u32,
) -> Result<StrataReport> {
    assert!(field_degree >= 1, "field degree must be at least 1");
    let decomposition = decompose(input, strategy)?;
    let (g1, g2) = decomposition.gammas();
    let (c1, c2) = (decomposition.c1.clone(), decomposition.c2.clone());

    let a = alpha(&g1, &g2, &c1, &c2)?;
    let case = classify_case(&g1, &g2, &c1, &c2)?;
    let denominator = &g1 * &g2 + &g2 * &c1 + &g1 * &c2;

    let class = input.class();
    let (min_deg, minimal_curves) = min_degree(&class)?;
    let (condition2_ok, condition2_margin) = check_condition2(&min_deg, &g1, &g2, &c1, &c2);
    let curve_exponent = rat_int(2) / &min_deg;

    let mut warnings = Vec::new();
    if input.has_zero_cells() {
        warnings.push(
            "some e_ij is 0: the divisor sits on the cone boundary and cannot be ample".to_owned(),
        );
    }
    warnings.push(
        "curve_exponent is 2/A, the Schanuel growth exponent of one minimal-degree rational \
         curve; the aggregate exponent 8/A sometimes quoted for the full count is not used"
            .to_owned(),
    );

    let (error_exponent_q, q_log_factor) = if condition2_ok {
        // Theorem check: condition (2) plus positive curve degrees force the
        // curve exponent past alpha, so the minimal curves accumulate.
        assert!(curve_exponent > a, "condition (2) must imply 2/A > alpha");
        let degrees: Vec<(CurveLabel, Rational)> = CurveLabel::all_curves()
            .map(|l| (l, class.degree(l)))
            .collect();
        let (q, log_flag) = error_exponent(&a, &min_deg, &degrees, field_degree);
        (Some(q), log_flag)
    } else {
        warnings.push(
            "condition (2) fails for this decomposition, so the first-layer criterion is \
             inconclusive; retry with the optimize strategy, which maximizes the denominator"
                .to_owned(),
        );
        (None, false)
    };

    Ok(StrataReport {
        gamma1: g1,
        gamma2: g2,
        c1,
        c2,
        denominator,
        alpha: a,
        log_factor: case.log_factor(),
        case,
        min_degree: min_deg,
        minimal_curves,
        condition2_ok,
        condition2_margin,
        curve_exponent,
        error_exponent_q,
        q_log_factor,
        field_degree,
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{a_class, curve_class, SubsetPair};
    use crate::rational::rat;

    fn r(n: i64) -> Rational {
        rat_int(n)
    }

    fn const_e(v: i64) -> [[Rational; 4]; 4] {
        std::array::from_fn(|_| std::array::from_fn(|_| rat_int(v)))
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(&r(4), &r(4), &r(1), &r(1)).unwrap(), rat(2, 3));
        assert_eq!(alpha(&r(4), &r(4), &r(0), &r(0)).unwrap(), r(1));
        assert_eq!(alpha(&r(4), &r(4), &r(4), &r(0)).unwrap(), rat(1, 2));
    }

    #[test]
    fn alpha_error_paths() {
        assert_eq!(
            alpha(&r(16), &r(16), &r(-11), &r(-11)).unwrap_err(),
            Error::NonPositiveDenominator { value: r(-96) }
        );
        // Positive denominator but a dead fiber: g = (1, 4), c = (-1, 1).
        // denominator = 4 - 4 + 1 = 1 > 0, g1 + c1 = 0.
        assert_eq!(
            alpha(&r(1), &r(4), &r(-1), &r(1)).unwrap_err(),
            Error::NonPositiveFiberDegree {
                which: 1,
                value: r(0)
            }
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_case(&r(4), &r(4), &r(1), &r(1)).unwrap(),
            TheoremCase::IV
        );
        assert_eq!(
            classify_case(&r(4), &r(4), &r(4), &r(0)).unwrap(),
            TheoremCase::I
        );
        assert_eq!(
            classify_case(&r(4), &r(4), &r(0), &r(4)).unwrap(),
            TheoremCase::I
        );
        assert!(TheoremCase::I.log_factor());
        assert!(!TheoremCase::IV.log_factor());
    }

    #[test]
    fn case_iv_is_independent_of_the_attaining_term() {
        // alpha can be attained by the second or third term with no coupling
        // equality: still Case IV.
        let (g1, g2, c1, c2) = (rat(1, 2), r(8), rat(-1, 4), r(8));
        // terms: 17/6, 8, 1/8.
        assert_eq!(alpha(&g1, &g2, &c1, &c2).unwrap(), r(8));
        assert_eq!(classify_case(&g1, &g2, &c1, &c2).unwrap(), TheoremCase::IV);
        assert_eq!(classify_case(&g2, &g1, &c2, &c1).unwrap(), TheoremCase::IV);
    }

    #[test]
    fn coupling_equalities_tie_the_first_term() {
        // c2 = g1 + c1 forces denominator = (g1+c1)(g1+g2), so the first
        // term equals 2/(g1+c1): whenever Case II's condition holds, Case I's
        // does too, and the lowest-match tie-break reports I. Same for III.
        let (g1, g2, c1, c2) = (r(2), r(4), r(1), r(3)); // c2 = g1 + c1
        let denom = &g1 * &g2 + &g2 * &c1 + &g1 * &c2;
        assert_eq!(denom, (&g1 + &c1) * (&g1 + &g2));
        assert_eq!(classify_case(&g1, &g2, &c1, &c2).unwrap(), TheoremCase::I);
        assert_eq!(classify_case(&g2, &g1, &c2, &c1).unwrap(), TheoremCase::I);
    }

    #[test]
    fn min_degree_examples() {
        // A_{N4,N4} + F1 + F2: E degrees 2, L and M degrees 1.
        let d = &(&a_class(SubsetPair::full()) + &curve_class(CurveLabel::Fiber1))
            + &curve_class(CurveLabel::Fiber2);
        let (a, curves) = min_degree(&d).unwrap();
        assert_eq!(a, r(1));
        let expected: Vec<CurveLabel> = (1..=4)
            .map(CurveLabel::L)
            .chain((1..=4).map(CurveLabel::M))
            .collect();
        assert_eq!(curves, expected);

        let bare = a_class(SubsetPair::full());
        assert_eq!(
            min_degree(&bare).unwrap_err(),
            Error::NotAmpleLike {
                label: CurveLabel::L(1),
                degree: r(0)
            }
        );

        let shrunk = &(&bare - &curve_class(CurveLabel::Fiber1)) - &curve_class(CurveLabel::Fiber2);
        assert_eq!(
            min_degree(&shrunk).unwrap_err(),
            Error::NotAmpleLike {
                label: CurveLabel::L(1),
                degree: r(-1)
            }
        );
    }

    #[test]
    fn condition2_examples() {
        assert_eq!(
            check_condition2(&r(1), &r(4), &r(4), &r(1), &r(1)),
            (true, r(16))
        );
        assert_eq!(
            check_condition2(&r(3), &r(4), &r(4), &r(1), &r(1)),
            (false, r(0))
        );
        assert_eq!(
            check_condition2(&r(2), &r(4), &r(4), &r(0), &r(0)),
            (false, r(0))
        );
    }

    fn degrees_of(class: &crate::lattice::DivisorClass) -> Vec<(CurveLabel, Rational)> {
        CurveLabel::all_curves()
            .map(|l| (l, class.degree(l)))
            .collect()
    }

    #[test]
    fn error_exponent_examples() {
        let d = &(&a_class(SubsetPair::full()) + &curve_class(CurveLabel::Fiber1))
            + &curve_class(CurveLabel::Fiber2);
        let degs = degrees_of(&d);
        let a = alpha(&r(4), &r(4), &r(1), &r(1)).unwrap();

        let (q, log_flag) = error_exponent(&a, &r(1), &degs, 1);
        assert_eq!(q, r(1));
        assert!(log_flag);

        let (q, log_flag) = error_exponent(&a, &r(1), &degs, 2);
        assert_eq!(q, rat(3, 2));
        assert!(!log_flag);
    }

    #[test]
    fn error_exponent_with_all_degrees_minimal() {
        // Synthetic degree list where every curve has the same degree: the
        // non-minimal contribution is an empty max.
        let degs: Vec<(CurveLabel, Rational)> =
            CurveLabel::all_curves().map(|l| (l, r(3))).collect();
        let a = rat(1, 3);
        let (q, log_flag) = error_exponent(&a, &r(3), &degs, 1);
        assert_eq!(q, rat(1, 3));
        // 1/A = 1/3 ties with alpha; the rational-field Schanuel term attains.
        assert!(log_flag);
        let (q, _) = error_exponent(&a, &r(3), &degs, 5);
        assert_eq!(q, rat(3, 5)); // 2/3 - 1/15
    }

    #[test]
    fn closed_form_degrees_match_pairing_on_a_decomposition() {
        let mut weights = std::collections::BTreeMap::new();
        weights.insert(SubsetPair::full(), rat(3, 2));
        weights.insert(SubsetPair::singleton(2, 3), r(2));
        weights.insert(SubsetPair::new(0b0110, 0b1011).unwrap(), rat(1, 3));
        let d = ConeDecomposition::new(weights, rat(-5, 2), r(4));
        let class = d.reconstruct();
        for label in CurveLabel::all_curves().chain([CurveLabel::Fiber1, CurveLabel::Fiber2]) {
            assert_eq!(
                closed_form_degree(&d, label),
                class.degree(label),
                "{label}"
            );
        }
    }

    #[test]
    fn report_for_the_reference_divisor() {
        let input = AmpleDivisorInput::new(r(5), r(5), const_e(-1));
        let report = first_layer_report(&input, DecompositionStrategy::Canonical, 1).unwrap();
        assert_eq!((report.gamma1.clone(), report.gamma2.clone()), (r(4), r(4)));
        assert_eq!((report.c1.clone(), report.c2.clone()), (r(1), r(1)));
        assert_eq!(report.alpha, rat(2, 3));
        assert_eq!(report.case, TheoremCase::IV);
        assert!(!report.log_factor);
        assert_eq!(report.min_degree, r(1));
        assert_eq!(report.minimal_curves.len(), 8);
        assert!(report.condition2_ok);
        assert_eq!(report.condition2_margin, r(16));
        assert_eq!(report.curve_exponent, r(2));
        assert_eq!(report.error_exponent_q, Some(r(1)));
        assert!(report.q_log_factor);
        assert!(report.curve_exponent > report.alpha);
    }

    #[test]
    fn report_errors_mirror_the_pipeline() {
        // d1 = d2 = 4 with e = -1 has deg L_i = 0.
        let input = AmpleDivisorInput::new(r(4), r(4), const_e(-1));
        assert!(matches!(
            first_layer_report(&input, DecompositionStrategy::Canonical, 1),
            Err(Error::NotAmpleLike { .. })
        ));

        // The singleton strategy on d1 = d2 = 5 pushes the denominator to
        // 256 - 176 - 176 = -96.
        let input = AmpleDivisorInput::new(r(5), r(5), const_e(-1));
        assert_eq!(
            first_layer_report(&input, DecompositionStrategy::Singleton, 1).unwrap_err(),
            Error::NonPositiveDenominator { value: r(-96) }
        );

        let mut e = const_e(-1);
        e[0][0] = r(1);
        let input = AmpleDivisorInput::new(r(5), r(5), e);
        assert!(matches!(
            first_layer_report(&input, DecompositionStrategy::Canonical, 1),
            Err(Error::NotInCone { i: 1, j: 1, .. })
        ));
    }

    #[test]
    fn report_survives_serialization() {
        let input = AmpleDivisorInput::new(r(5), r(5), const_e(-1));
        let report = first_layer_report(&input, DecompositionStrategy::Canonical, 1).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let back: StrataReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn scale_covariance() {
        // Scaling D by k scales every degree and gamma by k, divides alpha
        // by k, and leaves condition (2) invariant.
        let input = AmpleDivisorInput::new(r(5), r(5), const_e(-1));
        let k = rat(7, 3);
        let scaled = AmpleDivisorInput::new(
            &input.d1 * &k,
            &input.d2 * &k,
            std::array::from_fn(|i| std::array::from_fn(|j| &input.e[i][j] * &k)),
        );
        let base = first_layer_report(&input, DecompositionStrategy::Canonical, 1).unwrap();
        let big = first_layer_report(&scaled, DecompositionStrategy::Canonical, 1).unwrap();
        assert_eq!(big.alpha, &base.alpha / &k);
        assert_eq!(big.min_degree, &base.min_degree * &k);
        assert_eq!(big.condition2_ok, base.condition2_ok);
        assert_eq!(big.minimal_curves, base.minimal_curves);
    }
}
