// Overlap statistic over doubling grid sizes.
//
//     cargo run --example decay_series

use bloch_periods::bands::{decay_series, SweepOptions};
use bloch_periods::operator::{build_symbol, OperatorSpec};

pub fn main() {
    let fixtures = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["schrodinger_q2.json", "period_half.json"] {
        let spec = OperatorSpec::from_path(&fixtures.join(name)).unwrap();
        let table = decay_series(&build_symbol(&spec), &[4, 8, 16, 32], 1e-8, &[1.0], &SweepOptions::default()).unwrap();
        println!("{name}");
        print!("{}", table.to_csv());
        println!("flag: {}", table.flag.as_deref().unwrap_or("none"));
    }
}
