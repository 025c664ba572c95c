mod common;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

use bloch_periods::algebra::{
    discriminant_lambda, parse_cyclotomic, resultant_lambda, Cyclotomic, ExponentVector, LaurentPoly,
};
use bloch_periods::bands::{hermitian_eigenvalues, overlap_statistic, sweep_grid, SweepOptions};
use bloch_periods::operator::{
    build_dual_symbol, build_schrodinger_symbol, dft_potential, FloquetSymbol, OperatorSpec, SchrodingerSpec,
};
use bloch_periods::variety::{c_alpha_test, charpoly, offset_test, squarefree_test, CriteriaConfig, Verdict, Witness};

use common::rat;

fn term_strategy(dim: usize, max_lambda: u32) -> impl Strategy<Value = (Vec<i32>, u32, i64)> {
    (
        proptest::collection::vec(-2i32..=2, dim),
        0..=max_lambda,
        (-5i64..=5).prop_filter("nonzero", |c| *c != 0),
    )
}

fn poly_from(dim: usize, terms: &[(Vec<i32>, u32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(
        dim,
        terms
            .iter()
            .map(|(z, l, c)| (ExponentVector::new(z.clone(), *l), Cyclotomic::from_integer(*c))),
    )
}

fn laurent(dim: usize, max_lambda: u32) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(term_strategy(dim, max_lambda), 1..5).prop_map(move |t| poly_from(dim, &t))
}

/// Polynomial in `λ` of exact degree `deg` with leading coefficient `lead`.
fn monic_like(dim: usize, deg: u32, lead: i64) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(term_strategy(dim, deg.saturating_sub(1)), 0..5).prop_map(move |t| {
        let head = LaurentPoly::monomial(dim, vec![0; dim], deg, Cyclotomic::from_integer(lead));
        &poly_from(dim, &t) + &head
    })
}

fn torus_point(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(0.0f64..1.0, dim)
}

fn complex_det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
            .unwrap();
        if a[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for i in col + 1..n {
            let f = a[i][col] / a[col][col];
            for j in col..n {
                let v = a[col][j];
                a[i][j] -= f * v;
            }
        }
    }
    det
}

/// Numeric `λ`-coefficients (highest first) of `p` at the torus point `k`.
fn lambda_coeffs_at(p: &LaurentPoly, k: &[f64], deg: usize) -> Vec<Complex64> {
    let coeffs = p.lambda_coeffs();
    (0..=deg)
        .rev()
        .map(|i| coeffs.get(i).map(|c| c.eval_torus(k, Complex64::new(0.0, 0.0))).unwrap_or_default())
        .collect()
}

fn sylvester(p: &[Complex64], r: &[Complex64]) -> Vec<Vec<Complex64>> {
    let (m, n) = (p.len() - 1, r.len() - 1);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Complex64::new(0.0, 0.0); size];
        row[i..i + m + 1].copy_from_slice(p);
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Complex64::new(0.0, 0.0); size];
        row[i..i + n + 1].copy_from_slice(r);
        rows.push(row);
    }
    rows
}

fn l1_norm(p: &LaurentPoly) -> f64 {
    p.terms().map(|(_, c)| c.to_complex().norm()).sum()
}

fn schrodinger_spec() -> impl Strategy<Value = SchrodingerSpec> {
    prop_oneof![Just(vec![1usize]), Just(vec![2]), Just(vec![3]), Just(vec![2, 1]), Just(vec![2, 2])].prop_flat_map(
        |q| {
            let n: usize = q.iter().product();
            proptest::collection::vec((-9i64..=9, 1i64..=4), n).prop_map(move |v| {
                SchrodingerSpec::new(q.clone(), v.iter().map(|&(a, b)| rat(a, b)).collect()).unwrap()
            })
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_axioms(a in laurent(2, 2), b in laurent(2, 2), c in laurent(2, 2)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &LaurentPoly::one(2), a.clone());
    }

    #[test]
    fn evaluation_is_multiplicative(a in laurent(2, 2), b in laurent(2, 2), k in torus_point(2), l in -2.0f64..2.0) {
        let z: Vec<Complex64> = k.iter().map(|x| Complex64::from_polar(1.0, std::f64::consts::TAU * x)).collect();
        let lam = Complex64::new(l, 0.3);
        let prod = (&a * &b).eval_numeric(&z, lam).unwrap();
        let sep = a.eval_numeric(&z, lam).unwrap() * b.eval_numeric(&z, lam).unwrap();
        prop_assert!((prod - sep).norm() <= 1e-9 * (1.0 + sep.norm()));
        prop_assert!((a.eval_torus(&k, lam) - a.eval_numeric(&z, lam).unwrap()).norm() <= 1e-9 * (1.0 + l1_norm(&a) * 16.0));
    }

    #[test]
    fn shift_to_the_n_is_identity(a in laurent(2, 1), m in proptest::collection::vec(-6i64..6, 2), n in 1u64..7) {
        let mut x = a.clone();
        for _ in 0..n {
            x = x.substitute_shift(&m, n).unwrap();
        }
        prop_assert_eq!(x, a.clone());
        let twice = a.substitute_shift(&m, n).unwrap().substitute_shift(&m, n).unwrap();
        let doubled: Vec<i64> = m.iter().map(|x| 2 * x).collect();
        prop_assert_eq!(twice, a.substitute_shift(&doubled, n).unwrap());
    }

    #[test]
    fn resultant_matches_sylvester_determinant(
        p in (1u32..=3).prop_flat_map(|d| monic_like(1, d, 1)),
        r in (1u32..=2).prop_flat_map(|d| monic_like(1, d, -2)),
        points in proptest::collection::vec(torus_point(1), 50),
    ) {
        let res = resultant_lambda(&p, &r).unwrap();
        let (dp, dr) = (p.lambda_degree().unwrap() as usize, r.lambda_degree().unwrap() as usize);
        let scale = 1.0 + l1_norm(&res);
        for k in points {
            let syl = sylvester(&lambda_coeffs_at(&p, &k, dp), &lambda_coeffs_at(&r, &k, dr));
            let det = complex_det(syl);
            let val = res.eval_torus(&k, Complex64::new(0.0, 0.0));
            prop_assert!((det - val).norm() <= 1e-9 * scale, "{} vs {} at {:?}", det, val, k);
        }
    }

    #[test]
    fn squares_have_zero_discriminant(p in (1u32..=2).prop_flat_map(|d| monic_like(2, d, 1)), s in (1u32..=2).prop_flat_map(|d| monic_like(2, d, 1))) {
        prop_assert!(discriminant_lambda(&(&p * &p)).unwrap().is_zero());
        let f = &(&p * &p) * &s;
        let t = squarefree_test(&f, &CriteriaConfig::default(), 1).unwrap();
        prop_assert_eq!(t.verdict, Verdict::Fails);
    }

    #[test]
    fn charpoly_matches_numeric_determinant(spec in schrodinger_spec(), pts in proptest::collection::vec((torus_point(2), -4.0f64..4.0), 100)) {
        let a = build_schrodinger_symbol(&spec);
        let p = charpoly(&a).unwrap();
        let d = spec.dimension();
        for (k, l) in pts {
            let k = &k[..d];
            let m = a.eval_symbol(k);
            let n = m.size();
            let rows: Vec<Vec<Complex64>> = (0..n)
                .map(|i| (0..n).map(|j| m.get(i, j) - if i == j { Complex64::new(l, 0.0) } else { Complex64::default() }).collect())
                .collect();
            let scale: f64 = rows.iter().map(|r| 1.0 + r.iter().map(|x| x.norm()).sum::<f64>()).product();
            let det = complex_det(rows);
            let val = p.poly().eval_torus(k, Complex64::new(l, 0.0));
            prop_assert!((det - val).norm() <= 1e-9 * scale, "{} vs {}", det, val);
        }
    }

    #[test]
    fn symbols_are_hermitian_with_real_spectrum(spec in schrodinger_spec(), k in torus_point(2)) {
        let d = spec.dimension();
        for a in [build_schrodinger_symbol(&spec), build_dual_symbol(&spec)] {
            prop_assert!(a.validate_hermitian().is_pass());
            let m = a.eval_symbol(&k[..d]);
            prop_assert!(m.hermitian_deviation() == 0.0);
            let eig = hermitian_eigenvalues(&m).unwrap();
            prop_assert!((eig.iter().sum::<f64>() - m.trace().re).abs() <= 1e-9);
        }
    }

    #[test]
    fn dft_roundtrip(spec in schrodinger_spec()) {
        let t = dft_potential(&spec);
        for (x, v) in t.inverse().iter().zip(&spec.potential) {
            prop_assert_eq!(x, &Cyclotomic::from_rational(v.clone()));
        }
    }

    #[test]
    fn spec_json_roundtrip(spec in schrodinger_spec()) {
        let spec = OperatorSpec::Schrodinger(spec);
        let back = OperatorSpec::from_json_str(&spec.to_canonical_string()).unwrap();
        prop_assert_eq!(back.content_hash(), spec.content_hash());
        prop_assert_eq!(back, spec);
    }

    #[test]
    fn offset_difference_is_minus_q_a(spec in schrodinger_spec(), a in (-6i64..=6, 1i64..=4).prop_filter("nonzero", |x| x.0 != 0), m in 0i64..6, n in 1u64..7) {
        let p = charpoly(&build_schrodinger_symbol(&spec)).unwrap();
        let q = p.size() as i64;
        let a = rat(a.0, a.1);
        let mv = vec![m; spec.dimension()];
        let t = offset_test(p.poly(), &a, &mv, n).unwrap();
        let Some(Witness::CoefficientPair { difference, .. }) = t.witness else { panic!("no witness") };
        let expect = -&a * BigRational::from_integer(BigInt::from(q));
        prop_assert_eq!(difference, Cyclotomic::from_rational(expect).to_string());
    }

    #[test]
    fn c_alpha_is_unit_invariant(spec in schrodinger_spec(), c in proptest::collection::vec(-2i32..=2, 2), m in 1i64..6, n in 2u64..7) {
        prop_assume!(m % n as i64 != 0);
        let p = charpoly(&build_schrodinger_symbol(&spec)).unwrap().into_poly();
        let d = spec.dimension();
        let unit = LaurentPoly::monomial(d, c[..d].to_vec(), 0, Cyclotomic::from_integer(-3));
        let mv: Vec<i64> = (0..d as i64).map(|j| m + j).collect();
        let cfg = CriteriaConfig::default();
        let a = c_alpha_test(&p, &mv, n, &cfg, 5).unwrap();
        let b = c_alpha_test(&(&p * &unit), &mv, n, &cfg, 5).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
    }
}

/// Diagonal symbol `diag(e_i)`; `P = ∏ (e_i − λ)`.
fn diagonal_symbol(entries: &[LaurentPoly]) -> FloquetSymbol {
    let n = entries.len();
    let mut all = vec![LaurentPoly::zero(1); n * n];
    for (i, e) in entries.iter().enumerate() {
        all[i * n + i] = e.clone();
    }
    FloquetSymbol::from_entries(1, n, all).unwrap()
}

fn cosine(a: i64, k: i32, v: i64) -> LaurentPoly {
    let c = &LaurentPoly::z_pow(1, 0, k) + &LaurentPoly::z_pow(1, 0, -k);
    &c.scale(&Cyclotomic::from_integer(a)) + &LaurentPoly::from_integer(1, v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn c_alpha_matches_factor_pairs(entries in proptest::collection::vec((-2i64..=2, 1i32..=3, -2i64..=2).prop_filter("nonconstant", |e| e.0 != 0), 1..=3)) {
        let diag: Vec<LaurentPoly> = entries.iter().map(|&(a, k, v)| cosine(a, k, v)).collect();
        let p = charpoly(&diagonal_symbol(&diag)).unwrap().into_poly();
        let cfg = CriteriaConfig::default();
        for n in 2..=6u64 {
            for m in 1..n as i64 {
                let brute = diag.iter().any(|ei| {
                    let moved = ei.substitute_shift(&[m], n).unwrap();
                    diag.contains(&moved)
                });
                let t = c_alpha_test(&p, &[m], n, &cfg, 0).unwrap();
                prop_assert_eq!(t.verdict == Verdict::Fails, brute, "m={} N={} {:?}", m, n, t);
            }
        }
    }

    #[test]
    fn overlap_counts_are_shift_symmetric(spec in schrodinger_spec(), n in 1usize..9) {
        let a = build_schrodinger_symbol(&spec);
        let g = sweep_grid(&a, n, &SweepOptions::default()).unwrap();
        let ov = overlap_statistic(&g, 1e-8).unwrap();
        prop_assert!((0.0..=1.0).contains(&ov.rho));
        let q = g.bands();
        let d = g.dim();
        for mi in 0..g.points() {
            let m = g.unravel(mi);
            let neg: Vec<usize> = m.iter().map(|&x| (n - x) % n).collect();
            for s in 1..=q {
                for w in 1..=q {
                    prop_assert_eq!(ov.count(s, w, &m), ov.count(w, s, &neg));
                }
            }
        }
        prop_assert_eq!(d, spec.dimension());
    }

    #[test]
    fn grid_restriction_is_exact(spec in schrodinger_spec(), half in 1usize..6) {
        let a = build_schrodinger_symbol(&spec);
        let fine = sweep_grid(&a, 2 * half, &SweepOptions::default()).unwrap();
        let coarse = sweep_grid(&a, half, &SweepOptions::default()).unwrap();
        for ci in 0..coarse.points() {
            let r = coarse.unravel(ci);
            let fi = r.iter().fold(0, |acc, &x| acc * 2 * half + 2 * x);
            prop_assert_eq!(fine.at(fi), coarse.at(ci));
        }
    }
}

#[test]
fn cyclotomic_field_identities() {
    let x = parse_cyclotomic("cyc(5)[1,2,0,-1]").unwrap();
    let y = parse_cyclotomic("cyc(12)[0,1,1/2]").unwrap();
    for v in [&x, &y, &x.mul(&y), &x.add(&y)] {
        assert_eq!(v.mul(&v.inv().unwrap()), Cyclotomic::from_integer(1));
        assert_eq!(v.conj().conj(), *v);
        let prod = v.mul(&v.conj()).to_complex();
        assert!(prod.im.abs() < 1e-12 && (prod.re - v.to_complex().norm_sqr()).abs() < 1e-9);
    }
    let zx = x.mul(&y).to_complex();
    assert!((zx - x.to_complex() * y.to_complex()).norm() < 1e-12);
}
