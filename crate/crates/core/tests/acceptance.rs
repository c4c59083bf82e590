//! Acceptance suite: one test per golden criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every tolerance is pinned here, in code.

use mathbook_core::applied::{wind_triangle, deg_to_rad};
use mathbook_core::combinatorics::{binomial, binomial_pmf, comb_rep, perm, BernoulliSpec};
use mathbook_core::complexnum::{nth_roots, phasor_sum, to_rect, Complex, Polar};
use mathbook_core::crypto::{
    affine_crack, affine_encrypt, hill_decrypt, hill_encrypt, letter_frequencies, rsa_decrypt_text,
    rsa_encrypt_text, rsa_keypair, AffineKey,
};
use mathbook_core::imaging::{
    blend, flip_horizontal, negate, pgm_read, pgm_write, transpose_image, Image,
};
use mathbook_core::information::{sequence_entropy, uniform_information, Distribution};
use mathbook_core::linalg::{
    determinant, fit_poly, friction_coefficient, gauss_solve, invert, mat_inv_mod, mat_mod,
    path_count, Matrix, SolveOutcome,
};
use mathbook_core::numtheory::{
    crt_solve, digit_divisibility, factorize, gcd_euclid, isbn10_check_digit, isbn10_validate,
    lcm, mod_pow, mod_reduce, Congruence, Isbn10,
};
use mathbook_core::polynomials::{
    complete_square, lagrange_interpolate, poly_gcd, quadratic_roots, rs_correct, rs_encode,
    rs_verify, Polynomial, RsCodeword,
};
use mathbook_core::scalar::{parse_rational, rat, ratio, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::time::Instant;

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

fn rats(values: &[&str]) -> Vec<Rational> {
    values.iter().map(|v| parse_rational(v).unwrap()).collect()
}

fn int_matrix(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
    Matrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
    )
    .unwrap()
}

fn rational_matrix(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
    Matrix::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(rat).collect())
            .collect(),
    )
    .unwrap()
}

fn report(criterion: &str) {
    println!("acceptance: {} ... pass", criterion);
}

#[test]
fn criterion_01_isbn_check_digits() {
    assert_eq!(isbn10_check_digit("968-12-0618").unwrap(), '5');
    assert_eq!(isbn10_check_digit("0-486-45844").unwrap(), 'X');
    let wrong = Isbn10::parse("968-12-0618-4").unwrap();
    assert!(!isbn10_validate(&wrong));
    let right = Isbn10::parse("968-12-0618-5").unwrap();
    assert!(isbn10_validate(&right));
    report("1 ISBN check digits");
}

#[test]
fn criterion_02_rsa_toy_scheme() {
    let kp = rsa_keypair(&big(11), &big(13), &big(17)).unwrap();
    assert_eq!(kp.d, big(113));
    assert_eq!(kp.n, big(143));

    // The worked message encodes as ASCII 072 111 108 097, i.e. "Hola".
    let blocks = rsa_encrypt_text("Hola", &kp.n, &kp.e).unwrap();
    assert_eq!(blocks, vec![big(63), big(89), big(114), big(15)]);
    assert_eq!(rsa_decrypt_text(&blocks, &kp.n, &kp.d).unwrap(), "Hola");

    // Lowercase text roundtrips identically.
    let lower = rsa_encrypt_text("hola", &kp.n, &kp.e).unwrap();
    assert_eq!(rsa_decrypt_text(&lower, &kp.n, &kp.d).unwrap(), "hola");

    // Exhaustive roundtrip over every residue class mod 143.
    for m in 0..143i64 {
        let c = mod_pow(&big(m), &kp.e, &kp.n).unwrap();
        assert_eq!(mod_pow(&c, &kp.d, &kp.n).unwrap(), big(m));
    }
    report("2 RSA keypair, golden blocks, exhaustive roundtrip");
}

#[test]
fn criterion_03_hill_cipher() {
    let key = int_matrix(vec![vec![3, 2], vec![5, 3]]);
    assert_eq!(hill_encrypt("hola", &key).unwrap(), "XZHD");

    let inverse = mat_inv_mod(&key, &big(26)).unwrap().unwrap();
    assert_eq!(inverse, int_matrix(vec![vec![23, 2], vec![5, 23]]));
    let product = mat_mod(&key.matmul(&inverse).unwrap(), &big(26)).unwrap();
    assert_eq!(product, Matrix::<BigInt>::identity(2));

    assert_eq!(hill_decrypt("XZHD", &key).unwrap(), "hola");
    report("3 Hill cipher and modular key inverse");
}

#[test]
fn criterion_04_affine_cipher_and_crack() {
    let caesar = AffineKey::new(1, 3).unwrap();
    let cipher = affine_encrypt("notenemosreservadeagua", &caesar).unwrap();
    assert_eq!(cipher, "QRWHQHPRVUHVHUYDGHDJXD");

    let freqs = letter_frequencies(&cipher).unwrap();
    assert_eq!(freqs[0], ('H', 5));
    assert_eq!(freqs[1], ('D', 3));

    let keys = affine_crack(&cipher, ('e', 'a')).unwrap();
    assert_eq!((keys[0].a(), keys[0].b()), (1, 3));
    report("4 affine cipher, frequencies, crack");
}

#[test]
fn criterion_05_reed_solomon() {
    // Encode: redundancy extends the data exactly.
    let data = rats(&["1.2", "-3.2", "-5.4", "-1.1"]);
    let cw = rs_encode(&data).unwrap();
    assert_eq!(
        cw.values()[4..].to_vec(),
        rats(&["14", "44.2", "93.8", "167.1"])
    );

    // Verify: the corrupted word fails the degree test with the printed
    // degree-7 interpolant, exactly.
    let corrupted = RsCodeword::from_values(rats(&[
        "1.2", "3.2", "-5.4", "-1.1", "12.8", "44.2", "93.8", "167.1",
    ]))
    .unwrap();
    assert!(!rs_verify(&corrupted).unwrap());
    let points: Vec<(Rational, Rational)> = corrupted
        .values()
        .iter()
        .enumerate()
        .map(|(i, v)| (rat(i as i64 + 1), v.clone()))
        .collect();
    let interpolant = lagrange_interpolate(&points).unwrap();
    let expected = Polynomial::new(rats(&[
        "-437220/1800",
        "1020282/1800",
        "-886516/1800",
        "389074/1800",
        "-95995/1800",
        "13513/1800",
        "-1009/1800",
        "31/1800",
    ]));
    assert_eq!(interpolant, expected);

    // Correct: omission search repairs positions 2 and 5.
    let fix = rs_correct(&corrupted, 2).unwrap().unwrap();
    assert_eq!(fix.error_positions, vec![2, 5]);
    assert_eq!(fix.corrected_values, rats(&["-3.2", "14"]));
    assert_eq!(fix.data, data);
    report("5 interpolation code: encode, verify, correct");
}

#[test]
fn criterion_06_entropy() {
    let h = sequence_entropy("AGCTTTTCATTCTGACTGCAACGGGCAATATG").unwrap();
    assert!((h - 4.5736).abs() < 1e-4, "entropy {}", h);

    let uniform64 = Distribution::new(vec![1.0 / 64.0; 64]).unwrap();
    assert_eq!(
        mathbook_core::information::shannon_entropy(&uniform64),
        6.0
    );
    assert_eq!(uniform_information(64).unwrap(), 6.0);
    report("6 codon entropy and uniform information");
}

#[test]
fn criterion_07_linear_algebra() {
    // Gaussian elimination on the worked 3x3 system.
    let a = rational_matrix(vec![vec![0, -1, 3], vec![1, 2, -1], vec![-2, 3, 1]]);
    let b = vec![rat(2), rat(-2), rat(0)];
    assert_eq!(
        gauss_solve(&a, &b).unwrap(),
        SolveOutcome::Unique(vec![ratio(-1, 2), ratio(-1, 2), ratio(1, 2)])
    );

    // Exact inverse of the worked 2x2.
    let m = rational_matrix(vec![vec![2, -1], vec![0, 3]]);
    let inv = invert(&m).unwrap().unwrap();
    assert_eq!(
        inv,
        Matrix::from_rows(vec![
            vec![ratio(1, 2), ratio(1, 6)],
            vec![rat(0), ratio(1, 3)],
        ])
        .unwrap()
    );

    // Falk 3x2 * 2x3 product.
    let a = rational_matrix(vec![vec![2, 1], vec![-1, 0], vec![4, 3]]);
    let b = Matrix::from_rows(vec![
        vec![rat(-1), rat(1), ratio(-3, 2)],
        vec![rat(0), ratio(1, 2), rat(1)],
    ])
    .unwrap();
    assert_eq!(
        a.matmul(&b).unwrap(),
        Matrix::from_rows(vec![
            vec![rat(-2), ratio(5, 2), rat(-2)],
            vec![rat(1), rat(-1), ratio(3, 2)],
            vec![rat(-4), ratio(11, 2), rat(-3)],
        ])
        .unwrap()
    );

    // Incidence matrix squared and the one-stop count.
    let lambda = int_matrix(vec![
        vec![0, 2, 0, 1, 3],
        vec![2, 0, 1, 0, 1],
        vec![0, 1, 0, 1, 0],
        vec![1, 0, 1, 0, 2],
        vec![3, 1, 0, 2, 0],
    ]);
    let squared = lambda.pow(2).unwrap();
    assert_eq!(
        squared,
        int_matrix(vec![
            vec![14, 3, 3, 6, 4],
            vec![3, 6, 0, 5, 6],
            vec![3, 0, 2, 0, 3],
            vec![6, 5, 0, 6, 3],
            vec![4, 6, 3, 3, 14],
        ])
    );
    assert_eq!(path_count(&lambda, 5, 3, 2).unwrap(), big(3));
    report("7 exact solve, inverse, Falk product, path counts");
}

#[test]
fn criterion_08_braking_fits() {
    let speeds_kmh = [50.0, 55.0, 60.0, 65.0, 70.0, 75.0, 80.0];
    let distances = [35.0, 40.0, 45.0, 50.0, 55.0, 65.0, 70.0];
    let points: Vec<(f64, f64)> = speeds_kmh
        .iter()
        .zip(&distances)
        .map(|(&v, &d)| (v / 3.6, d))
        .collect();

    let through_origin = fit_poly(&points, 1, true).unwrap();
    assert!(
        (through_origin.coefficients[1] - 2.881).abs() < 0.005,
        "slope {}",
        through_origin.coefficients[1]
    );

    let ratio_points: Vec<(f64, f64)> = points.iter().map(|&(v, d)| (v, d / v)).collect();
    let ratio_fit = fit_poly(&ratio_points, 1, false).unwrap();
    let a = ratio_fit.coefficients[1];
    let b = ratio_fit.coefficients[0];
    assert!((a - 0.078).abs() < 0.001, "a = {}", a);
    assert!((b - 1.412).abs() < 0.01, "b = {}", b);

    let mu = friction_coefficient(a).unwrap();
    assert!((mu - 0.653).abs() < 0.005, "mu = {}", mu);
    report("8 braking fits and friction coefficient");
}

#[test]
fn criterion_09_wind_triangle() {
    let sol = wind_triangle(143.0, 120.0, 140.0, 11.0).unwrap();
    assert!((sol.ground_speed - 109.01).abs() < 0.05, "gs {}", sol.ground_speed);
    assert!((sol.drift_angle - 0.27).abs() < 0.02, "drift {}", sol.drift_angle);

    // Recomposition: ground vector plus the vector toward the wind source
    // rebuilds the air vector within 1e-6 kt.
    let course = deg_to_rad(143.0);
    let wind_from = deg_to_rad(140.0);
    let ge = sol.ground_speed * course.sin() + 11.0 * wind_from.sin();
    let gn = sol.ground_speed * course.cos() + 11.0 * wind_from.cos();
    assert!((ge.hypot(gn) - 120.0).abs() < 1e-6);
    report("9 wind triangle and recomposition");
}

#[test]
fn criterion_10_complex_values() {
    // (2 - 2i) / (1 + 3i): the exact-rational route as the oracle.
    // z / w = z * conj(w) / (w * conj(w)) over rationals:
    let (re_num, im_num) = (rat(2) * rat(1) + rat(-2) * rat(3), rat(-2) * rat(1) - rat(2) * rat(3));
    let denom = rat(1) * rat(1) + rat(3) * rat(3);
    assert_eq!(&re_num / &denom, ratio(-2, 5));
    assert_eq!(&im_num / &denom, ratio(-4, 5));
    // The floating path agrees to machine precision.
    let q = Complex::new(2.0, -2.0)
        .div(&Complex::new(1.0, 3.0))
        .unwrap();
    assert!((q.re - (-0.4)).abs() < 1e-15);
    assert!((q.im - (-0.8)).abs() < 1e-15);

    // Square roots of -1.
    let roots = nth_roots(&Complex::new(-1.0, 0.0), 2).unwrap();
    let r0 = to_rect(&roots[0]);
    let r1 = to_rect(&roots[1]);
    assert!((r0.re).abs() < 1e-12 && (r0.im - 1.0).abs() < 1e-12);
    assert!((r1.re).abs() < 1e-12 && (r1.im + 1.0).abs() < 1e-12);

    // Phasor sum.
    let sum = phasor_sum(&[
        Polar::from_degrees(10.0, 60.0),
        Polar::from_degrees(5.0, 45.0),
    ])
    .unwrap();
    assert!((sum.modulus() - 14.89).abs() < 0.01);
    assert!((sum.argument_degrees() - 55.0).abs() < 0.5);
    report("10 complex division, roots of -1, phasor sum");
}

#[test]
fn criterion_11_counting_values() {
    assert_eq!(binomial(9, 4), big(126));
    assert_eq!(perm(26, 3).unwrap(), big(15_600));
    assert_eq!(comb_rep(5, 3), big(35));
    assert_eq!(binomial(49, 6), big(13_983_816));
    let pmf = binomial_pmf(&BernoulliSpec::new(30, 0.5, 13).unwrap()).unwrap();
    assert!((pmf - 0.1115).abs() < 5e-4, "pmf {}", pmf);
    report("11 counting formulas and Bernoulli pmf");
}

/// Deterministic inline property sweeps mirroring the module property
/// suites; the whole bundle must finish in under 60 seconds.
#[test]
fn criterion_12_property_suites() {
    let start = Instant::now();
    let mut lcg: u64 = 0x2545F4914F6CDD1D;
    let mut next = move || {
        lcg ^= lcg << 13;
        lcg ^= lcg >> 7;
        lcg ^= lcg << 17;
        lcg
    };
    let mut rand_range = move |lo: i64, hi: i64| lo + (next() % (hi - lo) as u64) as i64;

    // gcd * lcm identity.
    for _ in 0..300 {
        let a = big(rand_range(-5000, 5000));
        let b = big(rand_range(-5000, 5000));
        assert_eq!(gcd_euclid(&a, &b) * lcm(&a, &b), (&a * &b).abs());
    }

    // Factorization reconstruction.
    for _ in 0..200 {
        let n = rand_range(2, 100_000);
        let f = factorize(&big(n)).unwrap();
        assert_eq!(f.value(), big(n));
    }

    // Digit criteria match the mod oracle for n <= 1e4.
    for n in 0..=10_000i64 {
        for d in [2u32, 3, 4, 5, 8, 9, 10, 11] {
            let expected = mod_reduce(&big(n), &big(d as i64)).unwrap().is_zero();
            assert_eq!(digit_divisibility(&big(n), d).unwrap(), expected);
        }
    }

    // CRT agrees with brute force.
    for _ in 0..150 {
        let (m1, m2) = (rand_range(2, 25), rand_range(2, 25));
        let (r1, r2) = (rand_range(0, m1), rand_range(0, m2));
        let system = vec![
            Congruence::new(big(r1), big(m1)).unwrap(),
            Congruence::new(big(r2), big(m2)).unwrap(),
        ];
        let solved = crt_solve(&system).unwrap();
        let l = lcm(&big(m1), &big(m2));
        let mut brute = Vec::new();
        let mut x = big(0);
        while x < l {
            if (&x % m1) == big(r1) && (&x % m2) == big(r2) {
                brute.push(x.clone());
            }
            x += 1;
        }
        match solved {
            Some((r, m)) => {
                assert_eq!(m, l);
                assert_eq!(brute, vec![r]);
            }
            None => assert!(brute.is_empty()),
        }
    }

    // Pascal rule.
    for p in 1..60u64 {
        for q in 1..=p {
            assert_eq!(binomial(p, q - 1) + binomial(p, q), binomial(p + 1, q));
        }
    }

    // PMF normalization.
    for n in [0u64, 1, 7, 23, 40] {
        for p in [0.0, 0.17, 0.5, 0.93, 1.0] {
            let total: f64 = (0..=n)
                .map(|x| binomial_pmf(&BernoulliSpec::new(n, p, x).unwrap()).unwrap())
                .sum();
            assert!((total - 1.0).abs() < 1e-12);
        }
    }

    // Polynomial divmod recomposition.
    for _ in 0..100 {
        let num = Polynomial::new((0..6).map(|_| rat(rand_range(-9, 9))).collect());
        let den = Polynomial::new((0..3).map(|_| rat(rand_range(-9, 9))).collect());
        if den.is_zero() {
            continue;
        }
        let (q, r) = num.divmod(&den).unwrap();
        assert_eq!(q.mul(&den).add(&r), num);
    }

    // Interpolation pass-through.
    for trial in 0..60 {
        let n = 1 + trial % 7;
        let pts: Vec<(Rational, Rational)> = (0..n)
            .map(|i| (rat(i as i64 * 3 + trial as i64 % 3), rat(rand_range(-30, 30))))
            .collect();
        let l = lagrange_interpolate(&pts).unwrap();
        for (x, y) in &pts {
            assert_eq!(&l.eval(x), y);
        }
    }

    // Single-error repair for random data, k in 2..=5.
    for trial in 0..40 {
        let k = 2 + trial % 4;
        let data: Vec<Rational> = (0..k).map(|_| rat(rand_range(-20, 20))).collect();
        let cw = rs_encode(&data).unwrap();
        let mut corrupted = cw.values().to_vec();
        let pos = (rand_range(0, 2 * k as i64)) as usize;
        corrupted[pos] += rat(rand_range(1, 9));
        let corrupted = RsCodeword::from_values(corrupted).unwrap();
        assert!(!rs_verify(&corrupted).unwrap());
        let fix = rs_correct(&corrupted, 1).unwrap().unwrap();
        assert_eq!(fix.data, data);
    }

    // Cipher roundtrips: affine over all valid a, Hill on random keys.
    let message = "lasmatematicassonutiles";
    for a in [1i64, 3, 5, 7, 9, 11, 15, 17, 19, 21, 23, 25] {
        for b in 0..26 {
            let key = AffineKey::new(a, b).unwrap();
            let cipher = affine_encrypt(message, &key).unwrap();
            assert_eq!(
                mathbook_core::crypto::affine_decrypt(&cipher, &key).unwrap(),
                message
            );
        }
    }
    let mut hill_keys = 0;
    while hill_keys < 40 {
        let key = int_matrix(vec![
            vec![rand_range(0, 26), rand_range(0, 26)],
            vec![rand_range(0, 26), rand_range(0, 26)],
        ]);
        let det = determinant(&key.map(|x| Rational::from_integer(x.clone())))
            .unwrap()
            .to_integer();
        if !gcd_euclid(&det, &big(26)).is_one() {
            continue;
        }
        hill_keys += 1;
        let cipher = hill_encrypt(message, &key).unwrap();
        let clear = hill_decrypt(&cipher, &key).unwrap();
        assert_eq!(&clear[..message.len()], message);
    }

    // Exact inverse roundtrip and determinant multiplicativity.
    for _ in 0..60 {
        let m = Matrix::new(3, 3, (0..9).map(|_| rat(rand_range(-10, 10))).collect()).unwrap();
        let n = Matrix::new(3, 3, (0..9).map(|_| rat(rand_range(-10, 10))).collect()).unwrap();
        match invert(&m).unwrap() {
            Some(inv) => {
                assert_eq!(m.matmul(&inv).unwrap(), Matrix::<Rational>::identity(3));
            }
            None => assert!(determinant(&m).unwrap().is_zero()),
        }
        assert_eq!(
            determinant(&m.matmul(&n).unwrap()).unwrap(),
            determinant(&m).unwrap() * determinant(&n).unwrap()
        );
    }

    // Conic re-expansion.
    for _ in 0..120 {
        let coeffs = [
            rat(rand_range(-9, 9)),
            rat(rand_range(-9, 9)),
            rat(rand_range(-9, 9)),
            rat(rand_range(-9, 9)),
            rat(rand_range(-9, 9)),
        ];
        if coeffs[..4].iter().all(Zero::is_zero) {
            continue;
        }
        let conic = mathbook_core::applied::conic_canonical(
            &coeffs[0], &coeffs[1], &coeffs[2], &coeffs[3], &coeffs[4],
        )
        .unwrap();
        if let Some((a, c, d, e, f)) = conic.coefficients() {
            let expanded = [a, c, d, e, f];
            let idx = coeffs.iter().position(|v| !v.is_zero()).unwrap();
            let scale = &coeffs[idx] / &expanded[idx];
            for (orig, exp) in coeffs.iter().zip(&expanded) {
                assert_eq!(orig, &(exp * &scale));
            }
        }
    }

    // Image involutions and PGM roundtrip.
    for seed in 0..50u64 {
        let img = Image::from_rows(
            (0..5)
                .map(|i| {
                    (0..7)
                        .map(|j| ((i * 13 + j * 7 + seed as usize) % 2) as f64)
                        .collect()
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(flip_horizontal(&flip_horizontal(&img)), img);
        assert_eq!(transpose_image(&transpose_image(&img)), img);
        assert_eq!(negate(&negate(&img).unwrap()).unwrap(), img);
        assert_eq!(pgm_read(&pgm_write(&img, 255)).unwrap(), img);
        let gray = blend(&img, &negate(&img).unwrap(), 0.5).unwrap();
        assert!(gray.matrix().entries().iter().all(|&v| v == 0.5));
    }

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "property bundle took {:?}",
        elapsed
    );
    report("12 property suites under 60 s");
}

#[test]
fn criterion_13_golden_quadratic() {
    let (plus, _) = quadratic_roots(&rat(1), &rat(-1), &rat(-1)).unwrap();
    assert!((plus.re - 1.618033988749895).abs() < 1e-12);
    assert_eq!(plus.im, 0.0);

    // The same value through the vertex form: x = h + sqrt(k/a).
    let v = complete_square(&rat(1), &rat(-1), &rat(-1)).unwrap();
    assert_eq!(v.h, ratio(1, 2));
    assert_eq!(v.k, ratio(5, 4));
    report("13 golden ratio root");
}

#[test]
fn polynomial_gcd_still_euclidean() {
    // Companion check used by the CLI examples: gcd of the worked pair.
    let p = Polynomial::new(rats(&["-2", "3", "2", "2", "1"]));
    let q = Polynomial::new(rats(&["4", "4", "-7", "-4", "2", "1"]));
    assert_eq!(poly_gcd(&p, &q).unwrap(), Polynomial::new(rats(&["2", "1"])));
}
