//! The smallest pineapple graph with a cospectral mate on the same number
//! of vertices: `K_4^4` and the order-6 graph plus two isolated vertices.
//!
//! Run with `cargo run --example figure_pair`.

use pineapple::constructions::{pineapple_charpoly, prop2_charpoly, prop2_mate};
use pineapple::spectra::{char_poly, cospectral};
use pineapple::{encode_graph6, isomorphic, pineapple, FactoredPoly};

fn main() -> pineapple::Result<()> {
    let g = pineapple(4, 4)?;
    let h = prop2_mate(2)?;
    println!(
        "K_4^4        {}  components {:?}",
        encode_graph6(&g)?,
        g.counts().components
    );
    println!(
        "mate         {}  components {:?}",
        encode_graph6(&h)?,
        h.counts().components
    );

    let p = char_poly(&g);
    println!("p(x)       = {p}");
    println!("closed form  {}", pineapple_charpoly(4, 4)?);

    // the order-6 component times x^2 for the two isolated vertices
    let core = prop2_charpoly(2)?;
    println!("mate core    {core}");
    println!(
        "x^2 * core = p(x): {}",
        &core.expand() * &pineapple::IntPolynomial::x().pow(2) == p
    );
    let shared: FactoredPoly = "x^3(x + 1)^2(x - 1)(x^2 - x - 8)".parse()?;
    println!("shared       {shared}  matches: {}", shared.expand() == p);

    println!(
        "cospectral: {}  isomorphic: {}",
        cospectral(&g, &h),
        isomorphic(&g, &h)
    );
    Ok(())
}
