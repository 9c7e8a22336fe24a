//! Reading annihilators off the kernel of the pattern matrix of a
//! low-complexity configuration, over F_p and over the integers.
//!
//!     cargo run --example kernel_annihilator

use algsubshift::complexity::{annihilator_from_kernel, complexity_count, Shape};
use algsubshift::config::{search_monomial_difference_annihilator, ConfigSource, Region, Window};
use algsubshift::Ring;

fn main() -> algsubshift::Result<()> {
    // A 6x3 torus over F_3 built from a diagonal word: low complexity.
    let word = [0, 1, 1, 2, 0, 2];
    let grid = Window::from_fn(Ring::F3, Region::new((0, 0), 6, 3), |(i, j)| word[(i + 2 * j).rem_euclid(6) as usize])?;
    let src = ConfigSource::torus(grid.clone());
    println!("{grid}");

    let d = Shape::block(3, 3)?;
    let domain = grid.region();
    println!("{}", complexity_count(&src, &d, domain)?);
    for ring in [Ring::F3, Ring::Z] {
        match annihilator_from_kernel(&src, &d, domain, ring)? {
            Some(k) => println!("over {ring}: {} via {}\n  {}", k.polynomial(), k.route, k.certificate),
            None => println!("over {ring}: pattern matrix has full rank"),
        }
    }
    if let Some(found) = search_monomial_difference_annihilator(&src, 2)? {
        println!("shortest product of monomial differences: {} (vectors {:?})", found.polynomial, found.vectors);
    }
    Ok(())
}
