//! Decomposing an element of the four-dot subshift into a horizontally and a
//! vertically periodic part, over F_2 and over the integers.
//!
//!     cargo run --example four_dot [ROW_WORD COL_WORD]

use algsubshift::algebra::four_dot;
use algsubshift::config::{check_annihilates, fourdot_decompose, ConfigSource, Region};
use algsubshift::Ring;

fn bits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

fn main() -> algsubshift::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (r, s) = match &args[..] {
        [r, s] => (bits(r), bits(s)),
        _ => (bits("011"), bits("0101101")),
    };
    let src = ConfigSource::fourdot(&r, &s)?;
    let region = Region::new((-3, -3), 10, 8);
    println!("{src}");
    println!("{}", check_annihilates(&four_dot(Ring::F2), &src, Region::centered(64))?);

    let c = src.generate_window(region)?;
    let dec = fourdot_decompose(&c)?;
    println!("\nc:\n{c}\nh (row j of the anchor column):\n{}\nv (column i of the anchor row, plus c_00):\n{}\nd = h AND v:\n{}", dec.h, dec.v, dec.d);
    println!("c = h + v over F_2:      {}", dec.field_identity);
    println!("c = h + v - 2d over Z:   {}", dec.integer_identity);
    Ok(())
}
