//! A configuration annihilated by `(1 + X^2)(1 + Y^2)` with only 7 patterns
//! on a 9-cell shape that is nevertheless not periodic.
//!
//!     cargo run --example sublattice_counterexample

use algsubshift::algebra::sublattice_four_dot;
use algsubshift::complexity::{complexity_count, enumerate_patterns, Shape};
use algsubshift::config::{check_annihilates, detect_periods, sublattice_counterexample, ConfigSource, LineFamily, Region};
use algsubshift::Ring;

fn main() -> algsubshift::Result<()> {
    let c = sublattice_counterexample();
    println!("{}", c.generate_window(Region::new((-2, -3), 12, 8))?);

    let big = Region::centered(128);
    println!("f_T: {}", check_annihilates(&sublattice_four_dot(Ring::F2), &c, big)?);

    let d = Shape::scattered_square(3, 2)?;
    let sample = Region::centered(64);
    println!("D = {d}");
    println!("{}", complexity_count(&c, &d, sample)?);
    for p in &enumerate_patterns(&c, &d, sample)?.patterns {
        println!("  pattern {p:?}");
    }

    println!("periods of c up to 32 on {big}: {}", detect_periods(&c.generate_window(big)?, 32).len());
    for (name, family) in [("h", LineFamily::Horizontal), ("v", LineFamily::Vertical)] {
        let part = ConfigSource::sublattice_lines(family).generate_window(big)?;
        let short: Vec<String> = detect_periods(&part, 2).iter().map(|e| format!("{:?}", e.vector)).collect();
        println!("periods of {name} up to 2: {}", short.join(" "));
    }
    Ok(())
}
