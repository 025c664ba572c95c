// Full symbolic analysis of an operator spec, printed as JSON.
//
//     cargo run --example analyze_criteria

use std::collections::BTreeMap;
use std::path::Path;

use bloch_periods::operator::OperatorSpec;
use bloch_periods::variety::{analyze, AnalyzeOptions, Verdict};

pub fn main() {
    let fixtures = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for name in ["schrodinger_2x2.json", "period_half.json"] {
        let spec = OperatorSpec::from_path(&fixtures.join(name)).unwrap();
        let opts = AnalyzeOptions {
            n_max: 4,
            ..Default::default()
        };
        let report = analyze(&spec, &opts).unwrap();
        println!("{name}: {}", report.operator);
        let mut families: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for t in &report.tests {
            let family = t.name.split('[').next().unwrap_or(&t.name);
            let entry = families.entry(family).or_default();
            entry.0 += 1;
            if t.verdict == Verdict::Holds {
                entry.1 += 1;
            } else if entry.0 - entry.1 <= 3 {
                println!("  {:<28} {:?} ({:?})", t.name, t.verdict, t.method);
            }
        }
        for (family, (total, holding)) in families {
            println!("  {family:<22} {holding}/{total} hold");
        }
    }
}
