//! Prints the intersection table of the distinguished classes and verifies
//! that the cone generators span a rank-18 lattice.
//!
//! ```text
//! cargo run --release --example intersection_table
//! ```

use kummer_strata::lattice::{a_class, curve_class, rank_of_span, CurveLabel, SubsetPair};

fn main() {
    let labels: Vec<CurveLabel> = [CurveLabel::Fiber1, CurveLabel::Fiber2]
        .into_iter()
        .chain((1..=4).map(CurveLabel::L))
        .chain((1..=4).map(CurveLabel::M))
        .chain((1..=4).flat_map(|i| (1..=4).map(move |j| CurveLabel::E(i, j))))
        .collect();

    println!("Intersection numbers of the fibers and the 24 rational curves");
    println!("(rows and columns in the order F1, F2, L1..L4, M1..M4, E11..E44)\n");

    print!("{:>5}", "");
    for l in labels.iter().take(10) {
        print!("{:>5}", l.to_string());
    }
    println!("  ...");
    for a in &labels {
        print!("{:>5}", a.to_string());
        let ca = curve_class(*a);
        for b in labels.iter().take(10) {
            print!("{:>5}", ca.pair(&curve_class(*b)).to_string());
        }
        println!("  ...");
    }

    println!("\nFiber decompositions:");
    for i in 1..=4u8 {
        let mut sum = curve_class(CurveLabel::L(i)).scaled(&kummer_strata::rational::rat_int(2));
        for j in 1..=4u8 {
            sum = &sum + &curve_class(CurveLabel::E(i, j));
        }
        let ok = sum == curve_class(CurveLabel::Fiber1);
        println!(
            "  E{i}1 + E{i}2 + E{i}3 + E{i}4 + 2 L{i} = F1   {}",
            if ok { "ok" } else { "MISMATCH" }
        );
    }

    let mut classes: Vec<_> = SubsetPair::all().map(a_class).collect();
    classes.push(curve_class(CurveLabel::Fiber1));
    classes.push(curve_class(CurveLabel::Fiber2));
    println!(
        "\nrank of span(all {} cone generators A_(S,T), F1, F2) = {}",
        classes.len() - 2,
        rank_of_span(&classes)
    );
}
