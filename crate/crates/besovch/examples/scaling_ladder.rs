//! Static scaling ladder for the oscillatory data family
//!
//!   u0 = -a (1-dxx)^{-1} dx [ cos(2^{N+5} x) (1 + a S_N h) ],  a = N^{-1/10}
//!
//! For each N the derivative norm |u0x|_B0 stays O(1) while the squared
//! derivative norm |u0x^2|_B0 grows, so the defect ratio
//! |u0x^2|_B0 / |u0x|_B0^2 climbs with N: products leak norm across
//! frequency blocks and the space fails to be a multiplication algebra.
//!
//! Uses the sparse spectral path, so N = 16 (grid 2^25) runs in seconds.

use besovch::counterexample::algebra_failure_experiment;

fn main() -> besovch::error::Result<()> {
    let ns = [8u32, 10, 12, 14, 16];
    let report = algebra_failure_experiment(&ns)?;

    println!(
        "{:>4} {:>12} {:>12} {:>12} {:>12} {:>10}",
        "N", "|u0|_B1", "|u0x|_B0", "|u0x^2|_B0", "|u0|_B1ww", "defect"
    );
    for r in &report.per_n {
        println!(
            "{:>4} {:>12.6} {:>12.6} {:>12.6} {:>12.6} {:>10.4}",
            r.n_exp, r.u0_b1, r.ux_b0, r.ux2_b0, r.u0_b1ww, r.algebra_ratio
        );
    }

    let s = &report.slopes;
    println!("\nlog2-log2 slopes vs N (with rms residuals):");
    println!("  |u0x|_B0    {:+.4}  (rms {:.1e})", s.ux_b0.slope, s.ux_b0.residual_rms);
    println!("  |u0x^2|_B0  {:+.4}  (rms {:.1e})", s.ux2_b0.slope, s.ux2_b0.residual_rms);
    println!("  |u0|_B1ww   {:+.4}  (rms {:.1e})", s.u0_b1ww.slope, s.u0_b1ww.residual_rms);
    println!("  |u0|_B1     {:+.4}  (rms {:.1e})", s.u0_b1.slope, s.u0_b1.residual_rms);
    Ok(())
}
