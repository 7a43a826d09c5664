//! Exhaustive search for cospectral mates with a re-checkable certificate.
//!
//! Run with `cargo run --release --example verify_ds`.

use pineapple::{pineapple, verify_ds, DsCertificate};

fn main() -> pineapple::Result<()> {
    for (p, q) in [(4, 3), (4, 4), (5, 2), (3, 4)] {
        let cert = verify_ds(&pineapple(p, q)?)?;
        println!(
            "K_{p}^{q}: {:?} after {} candidates, mates {:?}",
            cert.verdict(),
            cert.graphs_scanned,
            cert.mates
        );
    }

    let cert = verify_ds(&pineapple(4, 4)?)?;
    let json = cert.to_json()?;
    println!("{json}");
    let reread = DsCertificate::from_json(&json)?;
    println!("offline re-check: {:?}", reread.reverify()?);
    Ok(())
}
