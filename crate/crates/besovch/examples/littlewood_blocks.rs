//! Decompose a field into Littlewood-Paley blocks, print the per-block
//! sup and L2 stats, and verify the blocks sum back to the field.
//!
//! Run with: cargo run --example littlewood_blocks

use besovch::dyadic::FilterBank;
use besovch::grid::{Field, Grid};

fn main() -> besovch::error::Result<()> {
    let grid = Grid::new(std::f64::consts::PI, 1 << 12)?;
    let bank = FilterBank::new(grid)?;
    println!("grid: n = {}, L = pi, covered blocks j = -1..={}", grid.n, bank.jmax);

    // a field with mass at several scales: slow bump + two oscillations
    let f = Field::from_fn(grid, |x| {
        (-x * x).exp() + 0.5 * (24.0 * x).cos() + 0.1 * (301.0 * x).sin()
    });

    println!("{:>4} {:>14} {:>14} {:>14}", "j", "|D_j f|_inf", "|D_j f|_L2", "2^j |D_j|_inf");
    for s in bank.block_stats(&f) {
        if s.linf < 1e-14 {
            continue;
        }
        let weighted = 2f64.powi(s.j) * s.linf;
        println!("{:>4} {:>14.6e} {:>14.6e} {:>14.6e}", s.j, s.linf, s.l2, weighted);
    }

    let rec = bank.decompose(&f).reconstruct();
    let err = rec.sub(&f)?.max_abs();
    println!("reconstruction error: {err:.3e}");
    Ok(())
}
