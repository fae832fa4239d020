//! Besov norms of a few landmark fields: a single mode, a Gaussian bump
//! and a peakon. Shows how B^1_{inf,1}, its log-weighted variant and the
//! Lipschitz norm order the same functions differently.

use besovch::besov::{besov_norm, h1_energy, lipschitz_norm, BesovSpec};
use besovch::dyadic::FilterBank;
use besovch::grid::{Field, Grid};
use besovch::peakon::{peakon_field, PeakonState};

fn main() -> besovch::error::Result<()> {
    let grid = Grid::new(std::f64::consts::PI, 1 << 12)?;
    let bank = FilterBank::new(grid)?;

    let cases: Vec<(&str, Field)> = vec![
        ("cos(12x)", Field::from_fn(grid, |x| (12.0 * x).cos())),
        ("gauss bump", Field::from_fn(grid, |x| (-4.0 * x * x).exp())),
        (
            "peakon",
            peakon_field(&PeakonState::new(vec![1.0], vec![0.0])?, grid),
        ),
    ];

    let b0 = BesovSpec::b0_inf_1();
    let b1 = BesovSpec::b1_inf_1();
    let b1w = BesovSpec::b1_log();
    println!(
        "{:<12} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "field", "B0", "B1", "B1 logw", "Lip", "H1"
    );
    for (name, f) in &cases {
        println!(
            "{:<12} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>10.4}",
            name,
            besov_norm(&bank, f, &b0)?.value,
            besov_norm(&bank, f, &b1)?.value,
            besov_norm(&bank, f, &b1w)?.value,
            lipschitz_norm(f),
            h1_energy(f),
        );
    }

    // per-block profile of the peakon: 2^j |D_j|_inf is flat, the signature
    // of exactly-Lipschitz regularity (B^1_{inf,inf} but not better)
    let report = besov_norm(&bank, &cases[2].1, &b1)?;
    println!("\npeakon block profile (j, 2^j |D_j|_inf):");
    for (j, w) in &report.per_block {
        if *w > 1e-12 {
            println!("{j:>4} {w:>12.6}");
        }
    }
    Ok(())
}
