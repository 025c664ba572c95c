// Exact arithmetic on Laurent polynomials with cyclotomic coefficients.
//
//     cargo run --example laurent_arithmetic

use bloch_periods::algebra::{discriminant_lambda, parse_cyclotomic, resultant_lambda, LaurentPoly};

pub fn main() {
    let z = LaurentPoly::z_pow(1, 0, 1);
    let zi = LaurentPoly::z_pow(1, 0, -1);
    let lambda = LaurentPoly::lambda(1);

    // free Laplacian symbol z + 1/z, minus lambda
    let p = &(&z + &zi) - &lambda;
    println!("P(z, λ)      = {p}");
    println!("P²           = {}", p.pow(2));

    // half-period shift z -> -z
    let shifted = p.substitute_shift(&[1], 2).unwrap();
    println!("P(-z, λ)     = {shifted}");

    let r = resultant_lambda(&p, &shifted).unwrap();
    println!("Res_λ        = {r}");

    let q = &(&p * &shifted) - &LaurentPoly::from_integer(1, 1);
    println!("disc_λ(P·P(-z) - 1) = {}", discriminant_lambda(&q).unwrap());

    let i = parse_cyclotomic("cyc(4)[0,1]").unwrap();
    let w = parse_cyclotomic("cyc(3)[0,1]").unwrap();
    println!("i · ω        = {}", i.mul(&w));
    println!("(1 + ω)^-1   = {}", parse_cyclotomic("cyc(3)[1,1]").unwrap().inv().unwrap());
}
