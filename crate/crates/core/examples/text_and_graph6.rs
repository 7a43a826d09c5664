//! graph6 codes and polynomial text in both directions.
//!
//! Run with `cargo run --example text_and_graph6`.

use pineapple::constructions::pineapple_charpoly;
use pineapple::spectra::char_poly;
use pineapple::{decode_graph6, encode_graph6, pineapple, FactoredPoly, IntPolynomial};

fn main() -> pineapple::Result<()> {
    let g = pineapple(5, 3)?;
    let code = encode_graph6(&g)?;
    println!("K_5^3 = {code}, round trip {}", decode_graph6(&code)? == g);

    match decode_graph6("A__") {
        Err(e) => println!("malformed: {e}"),
        Ok(_) => unreachable!(),
    }

    let expanded = char_poly(&g);
    let factored = pineapple_charpoly(5, 3)?;
    println!("expanded {expanded}");
    println!("factored {factored}");
    let reparsed: IntPolynomial = expanded.to_string().parse()?;
    let refactored: FactoredPoly = factored.to_string().parse()?;
    println!(
        "parsed back: {} {}",
        reparsed == expanded,
        refactored.expand() == expanded
    );
    println!(
        "from a product: {}",
        "x(x - 1)^2 + 3".parse::<IntPolynomial>()?
    );
    Ok(())
}
