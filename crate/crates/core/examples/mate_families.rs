//! Both families of cospectral mates and the triples they produce together.
//!
//! Run with `cargo run --example mate_families`.

use pineapple::constructions::{
    corollary_triple, divisor_count, prop2_charpoly, prop2_graph, prop2_mate, prop3_enumerate,
    prop3_mate,
};
use pineapple::spectra::{char_poly, cospectral};
use pineapple::{isomorphic, pineapple};

fn main() -> pineapple::Result<()> {
    println!("order-3k family");
    for k in 2..=5 {
        let core = prop2_graph(k)?;
        let ok = char_poly(&core) == prop2_charpoly(k)?.expand();
        let target = pineapple(2 * k, k * k)?;
        let mate = prop2_mate(k)?;
        println!(
            "  k={k}: {}  closed form {ok}  mate of K_{}^{}: {}",
            prop2_charpoly(k)?,
            2 * k,
            k * k,
            cospectral(&target, &mate) && !isomorphic(&target, &mate)
        );
    }

    println!("complete-multipartite family");
    for k in 2..=4 {
        let all = prop3_enumerate(k)?;
        println!(
            "  k={k}: {} values of p ({} divisors of k(k-1))",
            all.len(),
            divisor_count((k * (k - 1)) as u64)
        );
        for x in all.iter().filter(|x| x.p + x.q <= 40) {
            let target = pineapple(x.p, x.q)?;
            let mate = prop3_mate(x)?;
            println!(
                "    p={:>2} r={:>2} q={:>2}  cospectral {}",
                x.p,
                x.r,
                x.q,
                cospectral(&target, &mate)
            );
        }
    }

    println!("triples");
    for p in [4, 6, 8] {
        let [a, b, c] = corollary_triple(p)?;
        let distinct = !isomorphic(&a, &b) && !isomorphic(&a, &c) && !isomorphic(&b, &c);
        let same = cospectral(&a, &b) && cospectral(&a, &c);
        println!(
            "  p={p}: {} vertices, cospectral {same}, pairwise distinct {distinct}",
            a.order()
        );
    }
    Ok(())
}
