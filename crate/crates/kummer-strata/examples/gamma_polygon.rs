//! Computes the exact polygon of feasible (gamma1, gamma2) pairs for one
//! divisor and locates the decomposition maximizing the exponent
//! denominator on it.
//!
//! ```text
//! cargo run --release --example gamma_polygon
//! ```

use kummer_strata::cone::{
    decompose, delta_objective, gamma_polygon, AmpleDivisorInput, DecompositionStrategy,
};
use kummer_strata::rational::{rat_int, Rational};

fn main() {
    let e: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rat_int(-1)));
    let input = AmpleDivisorInput::new(rat_int(5), rat_int(5), e);
    println!("D = 5 F1 + 5 F2 - sum E_ij\n");

    let polygon = gamma_polygon(&input).expect("D lies in the cone");
    println!("feasible (gamma1, gamma2) polygon, counterclockwise:");
    for (i, (g1, g2)) in polygon.vertices().iter().enumerate() {
        let cert = polygon.certificate(i);
        println!("  ({g1}, {g2})  certified by {} weights", cert.len());
    }

    println!("\ndelta(g1, g2) = d1*g2 + d2*g1 - g1*g2 at the vertices:");
    for (g1, g2) in polygon.vertices() {
        println!(
            "  delta({g1}, {g2}) = {}",
            delta_objective(&input.d1, &input.d2, g1, g2)
        );
    }

    let best = decompose(&input, DecompositionStrategy::OptimizeDenominator).unwrap();
    let (g1, g2) = best.gammas();
    println!(
        "\noptimizer picks gamma = ({g1}, {g2}), c = ({}, {}), delta = {}",
        best.c1,
        best.c2,
        delta_objective(&input.d1, &input.d2, &g1, &g2)
    );
    for strategy in [
        DecompositionStrategy::Canonical,
        DecompositionStrategy::Singleton,
    ] {
        let d = decompose(&input, strategy).unwrap();
        let (g1, g2) = d.gammas();
        println!(
            "{:<10} gives gamma = ({g1}, {g2}), delta = {}",
            strategy.name(),
            delta_objective(&input.d1, &input.d2, &g1, &g2)
        );
    }
}
