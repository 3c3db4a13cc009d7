//! Longitudinal-field calibration for the acceptance suite.
//!
//! Ignored by default: it diagonalizes 96 chains of 14 sites. Run with
//! `cargo test -p e8ising-cli --test calibration -- --ignored --nocapture`.

use e8ising::ising::{parse_grid, ratio_sweep, Boundary, ChainParams, MemoryBudget};

const TARGET: f64 = 1.618;

/// Must match `CALIBRATED_GZ` in `acceptance.rs`.
const FROZEN_GZ: f64 = 0.040;

#[test]
#[ignore]
fn longitudinal_field_closest_to_the_golden_ratio() {
    let budget = MemoryBudget::default();
    let mut best = (f64::INFINITY, f64::NAN, f64::NAN);
    for gz in parse_grid("0.005:0.1:0.001").unwrap() {
        let base = ChainParams::new(14, 1.0, 1.0, gz, Boundary::Periodic).unwrap();
        let ratio = ratio_sweep(&base, &[1.0], 3, &budget).unwrap().rows[0].ratio;
        println!("gz {gz:.3}  m2/m1 {ratio:.6}");
        if (ratio - TARGET).abs() < best.0 {
            best = ((ratio - TARGET).abs(), gz, ratio);
        }
    }
    println!("best gz {:.3} with m2/m1 {:.6}", best.1, best.2);
    assert!(
        (best.1 - FROZEN_GZ).abs() < 5e-4,
        "calibration moved to {}",
        best.1
    );
}
