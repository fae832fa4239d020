//! Build the oscillatory initial data u0(N) and inspect what makes it
//! work: a two-band spectrum (envelope at low frequency, carrier at
//! 2^{N+5}), a B^1 norm that stays order one, and a Lipschitz-to-B^1
//! ratio pinned at the family's sharp constant 2.

use besovch::besov::{besov_norm, lipschitz_norm, BesovSpec};
use besovch::counterexample::{
    build_e0, build_u0, carrier_index, static_grid, CounterexampleParams,
};
use besovch::dyadic::FilterBank;
use besovch::grid::Grid;

fn main() -> besovch::error::Result<()> {
    let n_exp = 8u32;
    let grid = static_grid(n_exp)?;
    let bank = FilterBank::new(grid)?;
    let kc = carrier_index(grid, n_exp)?;
    println!(
        "N = {n_exp}: window L = pi/32, n = {}, carrier at lattice index {kc} (xi = {})",
        grid.n,
        grid.xi(kc)
    );

    let u0 = build_u0(&CounterexampleParams::new(n_exp, grid))?;
    let b1 = besov_norm(&bank, &u0, &BesovSpec::b1_inf_1())?;
    let lip = lipschitz_norm(&u0);
    println!("|u0|_B1 = {:.6}, |u0|_Lip = {:.6}, ratio = {:.5}", b1.value, lip, lip / b1.value);

    println!("\nblocks holding the mass (j, 2^j |D_j|_inf):");
    for (j, w) in &b1.per_block {
        if *w > 1e-3 * b1.value {
            println!("{j:>4} {w:>12.6}");
        }
    }

    // the forcing seed E(u0) concentrates at low frequency: the square of
    // the carrier rectifies into the envelope band
    let e0 = build_e0(&u0);
    let e0_b1 = besov_norm(&bank, &e0, &BesovSpec::b1_inf_1())?.value;
    println!("\n|E(u0)|_B1 = {e0_b1:.6}");

    // the same construction fits on the coarser evolution grid: the
    // amplitude agrees because both grids resolve the carrier band exactly
    let coarse = Grid::new(std::f64::consts::PI / 32.0, 1usize << (n_exp + 3))?;
    let u0c = build_u0(&CounterexampleParams::new(n_exp, coarse))?;
    println!(
        "sup |u0|: fine grid {:.8}, evolution grid {:.8}",
        u0.max_abs(),
        u0c.max_abs()
    );
    Ok(())
}
