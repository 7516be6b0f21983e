//! Runs the whole first-layer pipeline on the reference divisor
//! D = 5 F1 + 5 F2 - sum E_ij and prints the report.
//!
//! ```text
//! cargo run --release --example first_layer
//! ```

use kummer_strata::cone::{AmpleDivisorInput, DecompositionStrategy};
use kummer_strata::rational::{rat_int, Rational};
use kummer_strata::strata::first_layer_report;

fn main() {
    let e: [[Rational; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| rat_int(-1)));
    let input = AmpleDivisorInput::new(rat_int(5), rat_int(5), e);

    let report = first_layer_report(&input, DecompositionStrategy::Canonical, 1)
        .expect("the reference divisor is analyzable");

    println!("D = 5 F1 + 5 F2 - sum E_ij, canonical decomposition, over the rationals\n");
    println!(
        "gamma = ({}, {}), c = ({}, {})",
        report.gamma1, report.gamma2, report.c1, report.c2
    );
    println!("exponent denominator = {}", report.denominator);
    println!(
        "alpha = {} (case {}{})",
        report.alpha,
        report.case,
        if report.log_factor {
            ", with log factor"
        } else {
            ""
        }
    );
    println!("minimal curve degree A = {}", report.min_degree);
    let curves: Vec<String> = report
        .minimal_curves
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("curves of minimal degree: {}", curves.join(", "));
    println!(
        "condition (2): A(g1+g2) < denominator is {} (margin {})",
        report.condition2_ok, report.condition2_margin
    );
    if report.condition2_ok {
        println!("\n=> the first layer is exactly the union of those curves,");
        println!(
            "   growing like B^{} while everything else is O(B^q) with q = {}{}",
            report.curve_exponent,
            report
                .error_exponent_q
                .as_ref()
                .expect("q is present when condition (2) holds"),
            if report.q_log_factor {
                " (log factor)"
            } else {
                ""
            }
        );
    }

    println!(
        "\nfull report as JSON:\n{}",
        serde_json::to_string_pretty(&report).unwrap()
    );

    println!("\nthe singleton strategy fails on the same divisor:");
    match first_layer_report(&input, DecompositionStrategy::Singleton, 1) {
        Err(err) => println!("  {err}"),
        Ok(_) => println!("  unexpectedly succeeded"),
    }
}
