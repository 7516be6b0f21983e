//! Decomposes one divisor over the cone generators under all three
//! strategies and compares their exponent denominators.
//!
//! ```text
//! cargo run --release --example decompose_divisor
//! ```

use kummer_strata::cone::{decompose, delta_objective, AmpleDivisorInput, DecompositionStrategy};
use kummer_strata::rational::{rat, rat_int, Rational};

fn main() {
    // d1 = 6, d2 = 7, with an uneven exceptional part.
    let mut e: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rat_int(-1)));
    e[0][1] = rat(-5, 2);
    e[2][2] = rat_int(-3);
    e[3][0] = rat(-3, 2);
    let input = AmpleDivisorInput::new(rat_int(6), rat_int(7), e);

    println!("D = 6 F1 + 7 F2 + sum e_ij E_ij with e[1][2] = -5/2, e[3][3] = -3, e[4][1] = -3/2, else -1\n");

    for strategy in [
        DecompositionStrategy::Canonical,
        DecompositionStrategy::Singleton,
        DecompositionStrategy::OptimizeDenominator,
    ] {
        let d = decompose(&input, strategy).expect("e <= 0, so D lies in the cone");
        let (g1, g2) = d.gammas();
        let delta = delta_objective(&input.d1, &input.d2, &g1, &g2);
        println!("strategy {:<10}", strategy.name());
        println!("  weights: {} nonzero a_(S,T)", d.weights().len());
        for (pair, v) in d.weights().iter().take(6) {
            println!("    a_{pair} = {v}");
        }
        if d.weights().len() > 6 {
            println!("    ...");
        }
        println!("  gamma = ({g1}, {g2}), c = ({}, {})", d.c1, d.c2);
        println!("  denominator g1*g2 + g2*c1 + g1*c2 = {delta}");
        assert_eq!(d.reconstruct(), input.class());
        println!("  reconstructs D exactly: ok\n");
    }
}
