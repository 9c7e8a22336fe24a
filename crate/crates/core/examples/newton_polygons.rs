//! Newton polygons, candidate line directions, line contents and the
//! resulting classification for a few polynomials over F_2.
//!
//!     cargo run --example newton_polygons ["POLY" ...]

use algsubshift::linefactors::{classify_nivat, line_factor_profile};
use algsubshift::newton::{candidate_line_directions, newton_polygon, sublattice_index};
use algsubshift::{LaurentPoly, Ring};

fn main() -> algsubshift::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["1 + X + Y", "1 + X + Y + X*Y", "1 + X^2 + Y^2 + X^2*Y^2", "(1 + X)*(1 + X + Y)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
    }
    for text in inputs {
        // Products are not part of the grammar; expand the one demo product.
        let f = match text.as_str() {
            "(1 + X)*(1 + X + Y)" => {
                &LaurentPoly::parse(Ring::F2, "1 + X")? * &LaurentPoly::parse(Ring::F2, "1 + X + Y")?
            }
            _ => LaurentPoly::parse(Ring::F2, &text)?,
        };
        println!("f = {f}");
        let hull = newton_polygon(&f)?;
        println!("  vertices: {:?}", hull.vertices());
        for e in hull.edges() {
            println!("  edge {:?} -> {:?}, outer normal {:?}", e.start, e.end, e.normal);
        }
        let dirs: Vec<String> = candidate_line_directions(&f)?.iter().map(|d| d.to_string()).collect();
        println!("  parallel-edge directions: [{}]", dirs.join(", "));
        for entry in line_factor_profile(&f)?.candidates() {
            println!("  line content along {}: {}", entry.direction, entry.content);
        }
        println!("  sublattice index of the support differences: {}", sublattice_index(&f)?);
        let class = classify_nivat(&f)?;
        println!("  class: {class}\n  {}\n", class.verdict());
    }
    Ok(())
}
