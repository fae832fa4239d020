//! Round trips for the on-disk formats and determinism of the experiment
//! reports. The binary field format is the interchange format between the
//! CLI and external tooling; the JSON reports must hash identically across
//! reruns with the same inputs.

use approx::assert_abs_diff_eq;
use besovch::config::ConfigMap;
use besovch::counterexample::algebra_failure_experiment;
use besovch::dyadic::FilterBank;
use besovch::grid::{Field, Grid};
use besovch::peakon::PeakonState;
use besovch::report::{
    json_to_csv, read_field_binary, sha256_hex, to_json_string, write_block_csv,
    write_field_binary, write_field_csv, write_peakon_csv,
};

#[test]
fn field_binary_roundtrip_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.bin");
    let grid = Grid::new(2.5, 64).unwrap();
    let field = Field::from_fn(grid, |x| (3.0 * x).sin() + 0.25 * x);
    write_field_binary(&path, &field).unwrap();
    let back = read_field_binary(&path).unwrap();
    assert_eq!(back.grid.n, 64);
    assert_abs_diff_eq!(back.grid.l, 2.5, epsilon = 0.0);
    for (a, b) in field.samples.iter().zip(back.samples.iter()) {
        assert_eq!(a.to_bits(), b.to_bits());
    }
}

#[test]
fn truncated_binary_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("u.bin");
    let grid = Grid::new(1.0, 16).unwrap();
    write_field_binary(&path, &Field::zeros(grid)).unwrap();
    let bytes = std::fs::read(&path).unwrap();
    std::fs::write(&path, &bytes[..bytes.len() - 9]).unwrap();
    assert!(read_field_binary(&path).is_err());
}

#[test]
fn csv_writers_emit_expected_headers() {
    let dir = tempfile::tempdir().unwrap();
    let grid = Grid::new(std::f64::consts::PI, 32).unwrap();
    let field = Field::from_fn(grid, |x| x.cos());

    let fpath = dir.path().join("field.csv");
    write_field_csv(&fpath, &field).unwrap();
    let text = std::fs::read_to_string(&fpath).unwrap();
    assert!(text.starts_with("x,value\n"));
    assert_eq!(text.lines().count(), 33);

    let bank = FilterBank::new(grid).unwrap();
    let stats = bank.block_stats(&field);
    let bpath = dir.path().join("blocks.csv");
    write_block_csv(&bpath, &stats).unwrap();
    let text = std::fs::read_to_string(&bpath).unwrap();
    assert!(text.starts_with("j,block_linf,block_l2\n"));

    let mut later = PeakonState::new(vec![0.9, -0.4], vec![0.1, 1.9]).unwrap();
    later.t = 0.5;
    let states = vec![PeakonState::new(vec![1.0, -0.5], vec![0.0, 2.0]).unwrap(), later];
    let ppath = dir.path().join("peakon.csv");
    write_peakon_csv(&ppath, &states).unwrap();
    let text = std::fs::read_to_string(&ppath).unwrap();
    assert!(text.starts_with("t,p0,p1,q0,q1\n"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn config_file_overrides_and_types() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.cfg");
    std::fs::write(
        &path,
        "# run parameters\nn_exp = 12\ncfl=0.4\nrecord = true\nt_list = 0.1, 0.2,0.3\n",
    )
    .unwrap();
    let cfg = ConfigMap::load(&path).unwrap();
    assert_eq!(cfg.usize_or("n_exp", 8).unwrap(), 12);
    assert_abs_diff_eq!(cfg.f64_or("cfl", 0.8).unwrap(), 0.4, epsilon = 0.0);
    assert!(cfg.bool_or("record", false).unwrap());
    assert_eq!(cfg.f64_list("t_list").unwrap().unwrap().len(), 3);
    assert_abs_diff_eq!(cfg.f64_or("absent", 7.5).unwrap(), 7.5, epsilon = 0.0);
    assert!(cfg.f64_or("record", 0.0).is_err());
}

#[test]
fn scaling_report_serializes_identically_across_reruns() {
    let a = algebra_failure_experiment(&[6, 8]).unwrap();
    let b = algebra_failure_experiment(&[6, 8]).unwrap();
    let ja = to_json_string(&a).unwrap();
    let jb = to_json_string(&b).unwrap();
    assert_eq!(sha256_hex(ja.as_bytes()), sha256_hex(jb.as_bytes()));
    assert!(ja.ends_with('\n'));
    // flattening keeps every scalar reachable under a dotted path
    let value: serde_json::Value = serde_json::from_str(&ja).unwrap();
    let csv = json_to_csv(&value);
    assert!(csv.starts_with("key,value\n"));
    assert!(csv.contains("per_n[0].n_exp,"));
    assert!(csv.contains("slopes."));
}
