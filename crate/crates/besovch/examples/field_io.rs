//! Field serialization: binary half-spectrum-exact samples, CSV for
//! plotting, JSON reports with a manifest, and the deterministic hash
//! used to compare runs.

use besovch::grid::{Field, Grid};
use besovch::report::{
    read_field_binary, run_manifest, sha256_hex, to_json_string, write_field_binary,
    write_field_csv,
};

fn main() -> besovch::error::Result<()> {
    let dir = std::env::temp_dir().join("besovch_field_io");
    std::fs::create_dir_all(&dir).map_err(|e| besovch::error::Error::io(&dir, e))?;

    let grid = Grid::new(std::f64::consts::PI, 1 << 8)?;
    let u = Field::from_fn(grid, |x| (3.0 * x).sin() * (-x * x).exp());

    let bin = dir.join("u.bin");
    write_field_binary(&bin, &u)?;
    let back = read_field_binary(&bin)?;
    let bitwise = u
        .samples
        .iter()
        .zip(&back.samples)
        .all(|(a, b)| a.to_bits() == b.to_bits());
    println!("binary roundtrip bitwise-exact: {bitwise}");

    let csv = dir.join("u.csv");
    write_field_csv(&csv, &u)?;
    println!("wrote {} and {}", bin.display(), csv.display());

    let manifest = run_manifest("demo", &[("n", grid.n.to_string()), ("l", "pi".into())]);
    let json = to_json_string(&manifest)?;
    println!("\nmanifest:\n{json}");
    println!("report hash: {}", &sha256_hex(json.as_bytes())[..16]);
    Ok(())
}
