//! The Ledrappier subshift: ideal membership by eliminating `X = 1 + Y`, and
//! the tori obtained by closing space-time diagrams of `c -> (1 + X) c`.
//!
//!     cargo run --example ledrappier

use algsubshift::algebra::ledrappier;
use algsubshift::complexity::{complexity_count, Shape};
use algsubshift::config::{check_annihilates, close_ca_torus};
use algsubshift::pipeline::ledrappier_ideal_membership;
use algsubshift::{LaurentPoly, Ring};

fn main() -> algsubshift::Result<()> {
    let fl = ledrappier(Ring::F2);
    let p = |s: &str| LaurentPoly::parse(Ring::F2, s);
    for g in [&fl * &p("1 + X*Y")?, p("1 + Y")?, &(&fl * &p("X^-2 + Y^3")?) + &p("1")?] {
        let m = ledrappier_ideal_membership(&g)?;
        println!("{g}\n  member: {}, witness after X := 1 + Y: {}", m.member, m.witness);
    }

    println!();
    let rule = p("1 + X")?;
    let block = Shape::block(3, 3)?;
    for n in 1..=6usize {
        let mut closed = 0;
        let mut low = 0;
        for bits in 0u32..(1 << n) {
            let seed: Vec<i64> = (0..n).map(|i| ((bits >> i) & 1) as i64).collect();
            if let Some(torus) = close_ca_torus(&rule, &seed, 256)? {
                closed += 1;
                let grid = torus.torus_view().expect("torus");
                assert!(check_annihilates(&fl, &torus, grid.region())?.is_verified());
                if complexity_count(&torus, &block, grid.region())?.is_low {
                    low += 1;
                }
            }
        }
        println!("width {n}: {closed} of {} seeds close into tori, {low} of low 3x3 complexity", 1 << n);
    }

    let torus = close_ca_torus(&rule, &[1, 1, 0], 64)?.expect("110 recurs");
    println!("\nthe 3x3 torus from seed 110:\n{}", torus.torus_view().expect("torus"));
    Ok(())
}
