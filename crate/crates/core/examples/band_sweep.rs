// Sample bands on a grid and measure how often shifted bands coincide.
//
//     cargo run --example band_sweep

use bloch_periods::bands::{overlap_statistic, sweep_grid, SweepOptions};
use bloch_periods::operator::{build_schrodinger_symbol, SchrodingerSpec};

pub fn main() {
    let spec = SchrodingerSpec::with_integer_potential(vec![2, 1], &[0, 3]).unwrap();
    let a = build_schrodinger_symbol(&spec);
    let grid = sweep_grid(&a, 8, &SweepOptions::default()).unwrap();
    println!("{} points, {} bands", grid.points(), grid.bands());
    for line in grid.to_csv().lines().take(5) {
        println!("  {line}");
    }

    let ov = overlap_statistic(&grid, 1e-8).unwrap();
    println!("rho = {} (tau/10: {}, 10 tau: {})", ov.rho, ov.rho_tau_div_10, ov.rho_tau_times_10);
    for p in &ov.pair_sups {
        println!("  bands {} / {}: sup {} at {:?}", p.s, p.w, p.sup, p.argmax_m);
    }
}
