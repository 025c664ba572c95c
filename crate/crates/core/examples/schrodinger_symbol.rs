// Floquet symbol of a periodic Schrödinger operator and its dual.
//
//     cargo run --example schrodinger_symbol

use bloch_periods::operator::{build_dual_symbol, build_schrodinger_symbol, dft_potential, SchrodingerSpec};
use bloch_periods::variety::{charpoly, top_component_product};

pub fn main() {
    let spec = SchrodingerSpec::with_integer_potential(vec![3], &[0, 1, -2]).unwrap();

    let a = build_schrodinger_symbol(&spec);
    println!("A(z) =\n{a}");
    let p = charpoly(&a).unwrap();
    println!("det(A - λ) = {}", p.poly());

    let table = dft_potential(&spec);
    println!("potential spectrum:");
    for (m, v) in table.values().iter().enumerate() {
        println!("  V̂({m}) = {v}");
    }

    let dual = build_dual_symbol(&spec);
    let pd = charpoly(&dual).unwrap();
    println!("dual characteristic polynomial = {}", pd.poly());
    println!("top weight component = {}", pd.poly().top_weight_component());
    println!("expected product     = {}", top_component_product(&spec.periods));
}
