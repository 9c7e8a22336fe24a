//! Resultants, Bezout cofactors and the periods they force on configurations
//! annihilated by two coprime polynomials.
//!
//!     cargo run --example resultants

use algsubshift::elimination::{coprime_periodicity, poly_gcd, resultant};
use algsubshift::{LaurentPoly, Ring, Var};

fn main() -> algsubshift::Result<()> {
    let p = |s: &str| LaurentPoly::parse(Ring::F2, s);
    let fl = p("1 + X + Y")?;
    let fs = p("1 + X + Y + X*Y")?;

    println!("Res_X(1 + X + Y, X)   = {}", resultant(&fl, &p("X")?, Var::X)?);
    println!("Res_X(f_L, f_S)       = {}", resultant(&fl, &fs, Var::X)?);
    println!("Res_Y(f_L, f_S)       = {}", resultant(&fl, &fs, Var::Y)?);
    println!("Res_X(f_S, (1+X) f_L) = {}  (common factor 1 + X)", resultant(&fs, &(&p("1 + X")? * &fl), Var::X)?);
    println!("gcd(f_S, (1+X) f_L)   = {}\n", poly_gcd(&fs, &(&p("1 + X")? * &fl))?);

    // A configuration annihilated by f_L and by 1 + X + X^2 + Y is
    // periodic in both axes.
    let g = p("1 + X + X^2 + Y")?;
    let cp = coprime_periodicity(&fl, &g)?;
    println!("eliminating X:\n{}\n", cp.eliminate_x);
    println!("eliminating Y:\n{}\n", cp.eliminate_y);
    match cp.periods(1 << 12) {
        Some((a, b)) => println!("every common solution has periods ({a},0) and (0,{b})"),
        None => println!("periods exceed the search cap"),
    }
    Ok(())
}
