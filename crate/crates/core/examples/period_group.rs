// Period group of a polynomial read off its Newton support.
//
//     cargo run --example period_group

use bloch_periods::algebra::{support_period_group, LaurentPoly};

fn show(label: &str, p: &LaurentPoly) {
    let g = support_period_group(p).unwrap();
    println!("{label}: {p}");
    match g.order {
        Some(1) => println!("  trivial"),
        Some(order) => {
            println!("  finite, order {order}");
            for e in g.elements() {
                let e: Vec<String> = e.iter().map(|x| x.to_string()).collect();
                println!("    ({})", e.join(", "));
            }
        }
        None => println!("  continuum of rank {}", g.continuum_rank),
    }
}

pub fn main() {
    let z = |j: usize, e: i32| LaurentPoly::z_pow(2, j, e);
    let lambda = LaurentPoly::lambda(2);

    let generic = &(&(&z(0, 1) + &z(0, -1)) + &(&z(1, 1) + &z(1, -1))) - &lambda;
    show("square lattice", &generic);

    let even = &(&z(0, 2) + &z(0, -2)) + &(&z(1, 1) + &z(1, -1));
    show("even in z1", &(&even - &lambda));

    let checkerboard = &(&z(0, 1) * &z(1, 1)) + &(&z(0, -1) * &z(1, -1));
    show("diagonal only", &(&(&checkerboard * &lambda) + &z(0, 2)));

    show("independent of z2", &(&(&z(0, 1) + &z(0, -1)) - &lambda));
}
