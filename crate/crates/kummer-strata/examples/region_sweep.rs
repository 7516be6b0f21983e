//! Counts lattice points in the height region for growing B, fits the
//! growth exponent, and compares against the closed-form area.
//!
//! ```text
//! cargo run --release --example region_sweep
//! ```

use kummer_strata::rational::rat_int;
use kummer_strata::region::{area_closed_form, count_sweep, fit_exponent, RegionParams};

fn main() {
    // gamma = (4,4), c = (1,1): alpha = 2/3, no log factor.
    let p = RegionParams::new(rat_int(4), rat_int(4), rat_int(1), rat_int(1), 1).unwrap();
    let b_list = [10u64, 100, 1_000, 10_000, 100_000];

    println!("region: x^5 y <= B^2 and x y^5 <= B^2 (gamma = (4,4), c = (1,1); alpha = 2/3)\n");
    println!(
        "{:>8} {:>10} {:>12} {:>12}",
        "B", "count", "area bound", "count/B^(2/3)"
    );
    let samples = count_sweep(&p, &b_list).expect("region is bounded");
    for s in &samples {
        let area = area_closed_form(&p.with_b(s.b)).unwrap();
        let ratio = s.count as f64 / (s.b as f64).powf(2.0 / 3.0);
        println!("{:>8} {:>10} {:>12.1} {:>12.4}", s.b, s.count, area, ratio);
    }

    let fit = fit_exponent(&samples, 0.6).unwrap();
    println!(
        "\ntail log-log slope over the 3 largest B: {:.4} (R^2 = {:.5}); bound alpha = {:.4}",
        fit.slope,
        fit.r_squared,
        2.0 / 3.0
    );

    // A log-factor case: gamma = (4,4), c = (4,0) has alpha = 1/2 with the
    // coupling c1 = g2 + c2, so counts grow like B^(1/2) log B.
    let p = RegionParams::new(rat_int(4), rat_int(4), rat_int(4), rat_int(0), 1).unwrap();
    let b_list = [10u64, 100, 1_000, 10_000, 100_000, 1_000_000];
    let samples = count_sweep(&p, &b_list).unwrap();
    println!("\nlog-factor region: x^8 <= B^2 and x^4 y^4 <= B^2 (alpha = 1/2, case I)\n");
    println!("{:>8} {:>10} {:>16}", "B", "count", "count/B^(1/2)");
    for s in &samples {
        println!(
            "{:>8} {:>10} {:>16.4}",
            s.b,
            s.count,
            s.count as f64 / (s.b as f64).sqrt()
        );
    }
    println!("\nthe last column grows linearly in log B: that is the log factor.");
}
