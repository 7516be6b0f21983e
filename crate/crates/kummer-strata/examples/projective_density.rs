//! Counts projective-line points of bounded height, checks the quadratic
//! growth and the 12/pi^2 density, and fits the degree-d curve exponents.
//!
//! ```text
//! cargo run --release --example projective_density
//! ```

use kummer_strata::cli::log_spaced_bounds;
use kummer_strata::projective::{count_degree_d, count_p1};
use kummer_strata::region::{fit_exponent, CountSample};

fn main() {
    let limit = 12.0 / (std::f64::consts::PI * std::f64::consts::PI);
    println!("points of height <= B on the projective line over the rationals\n");
    println!(
        "{:>8} {:>12} {:>12} {:>10}",
        "B", "count", "count/B^2", "12/pi^2"
    );
    for b in [1u64, 2, 10, 100, 1_000, 10_000] {
        let c = count_p1(b);
        println!(
            "{:>8} {:>12} {:>12.5} {:>10.5}",
            b,
            c,
            c as f64 / (b as f64 * b as f64),
            limit
        );
    }

    let b_list = log_spaced_bounds(10, 10_000, 4);
    let samples: Vec<CountSample> = b_list
        .iter()
        .map(|&b| CountSample {
            b,
            count: count_p1(b),
        })
        .collect();
    let fit = fit_exponent(&samples, 1.0).unwrap();
    println!(
        "\nlog-log slope over B = 10..10^4: {:.4} (expected 2)",
        fit.slope
    );

    println!("\ndegree-d rational curves (height = line height to the d-th power):");
    for d in 1..=3u32 {
        let samples: Vec<CountSample> = b_list
            .iter()
            .map(|&b| CountSample {
                b: b.pow(d),
                count: count_degree_d(b.pow(d), d),
            })
            .collect();
        let fit = fit_exponent(&samples, 1.0).unwrap();
        println!(
            "  d = {d}: slope {:.4} (expected {:.4})",
            fit.slope,
            2.0 / d as f64
        );
    }
}
