//! Space-time diagrams of additive cellular automata are annihilated by
//! `Y - g(X)`, whose support is a triangle as soon as `g` has two terms.
//!
//!     cargo run --example additive_ca ["RULE" SEED]

use algsubshift::config::{apply_poly, ConfigSource, Region};
use algsubshift::linefactors::classify_nivat;
use algsubshift::{LaurentPoly, Ring};

fn main() -> algsubshift::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (rule, seed) = match &args[..] {
        [rule, seed] => (rule.clone(), seed.clone()),
        _ => ("X^-1 + 2*X".to_string(), "0000000001000000000".to_string()),
    };
    let ring = Ring::F3;
    let g = LaurentPoly::parse(ring, &rule)?;
    let seed: Vec<i64> = seed.bytes().map(|b| (b - b'0') as i64).collect();
    let src = ConfigSource::additive_ca(&g, &seed)?;
    let win = src.generate_window(Region::new((0, -9), seed.len(), 10))?;
    println!("{src}\n{win}");

    let f = &LaurentPoly::y(ring) - &g;
    println!("(Y - g) c vanishes on the interior: {}", apply_poly(&f, &win)?.is_zero());
    println!("class of {f}: {}", classify_nivat(&f)?);
    Ok(())
}
