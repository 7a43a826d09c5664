//! Exact eigenvalue location: Sturm counting, root isolation, equitable
//! quotients, and interlacing.
//!
//! Run with `cargo run --example eigenvalue_location`.

use num_rational::BigRational;
use pineapple::pineapple;
use pineapple::spectra::{
    char_poly, count_roots_below, discriminant, interlacing_check, isolate_roots,
    least_eig_gt_minus2, quotient_matrix,
};

fn main() -> pineapple::Result<()> {
    let g = pineapple(4, 4)?;
    let p = char_poly(&g);
    let minus_two = BigRational::from_integer((-2).into());
    println!("p(x) = {p}");
    println!(
        "eigenvalues below -2: {}",
        count_roots_below(&p, &minus_two)?
    );
    println!("d = |p(-2)| = {}", discriminant(&g));

    let isolation = isolate_roots(&p)?;
    for iv in isolation.intervals.iter().rev() {
        println!(
            "  root in ({}, {}]  multiplicity {}",
            iv.lo, iv.hi, iv.multiplicity
        );
    }
    println!("spectrum size {}", isolation.descending().len());

    for q in 1..=4 {
        println!(
            "least eigenvalue of K_5^{q} above -2: {}",
            least_eig_gt_minus2(&pineapple(5, q)?)
        );
    }

    // apex, clique, pendants
    let mut cells = vec![0, 1, 1, 1];
    cells.extend([2; 4]);
    let qm = quotient_matrix(&g, &cells)?;
    println!("quotient {:?}: {}", qm.entries, qm.char_poly);
    println!("cofactor p / q = {}", qm.cofactor);

    let subset: Vec<usize> = (0..6).collect();
    println!(
        "induced subgraph on {subset:?} interlaces: {}",
        interlacing_check(&g, &subset)?
    );
    Ok(())
}
