//! How far is the early-time solution from u0 + t E(u0)? For the
//! oscillatory family the answer depends on how you measure: the plain
//! B^1 distance never drops below O(1) times t |E0|_B1 because transport
//! shifts the carrier phase at order t, while the per-block sup profile
//! is insensitive to that shift and tracks the forcing picture.

use besovch::experiments::early_time_linearization;

fn main() -> besovch::error::Result<()> {
    let report = early_time_linearization(10, None)?;
    println!("N = {}, |E0|_B1 = {:.6}\n", report.n_exp, report.e0_b1);
    println!("{:>12} {:>16} {:>16}", "t", "Eulerian ratio", "block-sup ratio");
    for row in &report.rows {
        println!(
            "{:>12.6} {:>16.4} {:>16.4}",
            row.t, row.r_eulerian, row.r_blocksup
        );
    }
    println!("\nEulerian deviation floors near 2: the carrier moves, the");
    println!("envelope does not. The block-sup ratio stays near 0.9 until");
    println!("the nonlinear time scale is reached.");
    Ok(())
}
