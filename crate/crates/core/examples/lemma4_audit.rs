//! Discriminant classification of connected graphs with least eigenvalue
//! above -2, and the generalized line graphs of small trees.
//!
//! Run with `cargo run --release --example lemma4_audit`.

use pineapple::census::Lemma4Case;
use pineapple::{glg_variants, isomorphic, lemma4_audit, pineapple, Graph};

fn star_with(k: usize, extra: &[(usize, usize)]) -> pineapple::Result<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    edges.extend_from_slice(extra);
    Graph::from_edges(k + 1 + extra.len(), edges)
}

fn main() -> pineapple::Result<()> {
    let report = lemma4_audit(8)?;
    for (m, c) in report.count_by_order() {
        println!("m={m}: {c} graphs");
    }
    let tally = |case: fn(&Lemma4Case) -> bool| {
        report
            .rows
            .iter()
            .filter(|r| r.cases.iter().any(case))
            .count()
    };
    println!(
        "line graphs of odd unicyclic graphs: {}",
        tally(|c| *c == Lemma4Case::OddUnicyclicLine)
    );
    println!(
        "generalized line graphs of trees:    {}",
        tally(|c| *c == Lemma4Case::TreeGeneralizedLine)
    );
    println!(
        "line graphs of trees:                {}",
        tally(|c| matches!(c, Lemma4Case::TreeLine { .. }))
    );
    println!("violations: {}", report.violations().len());

    let k = 4;
    let p = k;
    for (name, t, p) in [
        ("star K_1,k", star_with(k, &[])?, p),
        (
            "star with one edge subdivided",
            star_with(k, &[(1, k + 1)])?,
            p + 1,
        ),
        (
            "star with a cherry on one leaf",
            star_with(k, &[(1, k + 1), (1, k + 2)])?,
            p + 2,
        ),
        (
            "star with a path on one leaf",
            star_with(k, &[(1, k + 1), (k + 1, k + 2)])?,
            p + 2,
        ),
    ] {
        let variants = glg_variants(&t)?;
        let target = p * (p - 1) * (p - 2) / 6;
        let hits = variants
            .iter()
            .filter(|g| g.triangle_count() == target)
            .count();
        let pine = variants
            .iter()
            .any(|g| isomorphic(g, &pineapple(p, 2).unwrap()));
        println!("{name} (k={k}): {} variants, {hits} with C({p},3) triangles, pineapple among them: {pine}", variants.len());
    }
    Ok(())
}
