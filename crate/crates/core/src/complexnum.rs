//! Complex arithmetic in rectangular and polar forms, principal arguments,
//! powers and n-th roots, and phasor analysis of a series RLC circuit.

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum CxError {
    #[error("DivisionByZero: complex division or inversion by zero")]
    DivisionByZero,
    #[error("ZeroInput: the zero complex number has no roots of this kind")]
    ZeroInput,
    #[error("EmptyList: phasor sum needs at least one phasor")]
    EmptyList,
    #[error("InvalidCircuit: {0}")]
    InvalidCircuit(String),
}

/// Rectangular form `re + im*i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub fn zero() -> Self {
        Complex { re: 0.0, im: 0.0 }
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }

    pub fn add(&self, other: &Complex) -> Complex {
        Complex::new(self.re + other.re, self.im + other.im)
    }

    pub fn sub(&self, other: &Complex) -> Complex {
        Complex::new(self.re - other.re, self.im - other.im)
    }

    /// `(a, b)(c, d) = (ac - bd, ad + bc)`.
    pub fn mul(&self, other: &Complex) -> Complex {
        Complex::new(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )
    }

    pub fn scale(&self, factor: f64) -> Complex {
        Complex::new(self.re * factor, self.im * factor)
    }

    pub fn conj(&self) -> Complex {
        Complex::new(self.re, -self.im)
    }

    /// `1/z = conj(z) / (z conj(z))`.
    pub fn inv(&self) -> Result<Complex, CxError> {
        if self.is_zero() {
            return Err(CxError::DivisionByZero);
        }
        let norm = self.re * self.re + self.im * self.im;
        Ok(Complex::new(self.re / norm, -self.im / norm))
    }

    pub fn div(&self, other: &Complex) -> Result<Complex, CxError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn magnitude(&self) -> f64 {
        self.re.hypot(self.im)
    }

    /// Principal argument in `(-pi, pi]`; the argument of 0 is defined as 0.
    pub fn argument(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let theta = self.im.atan2(self.re);
        // atan2 returns -pi for (-x, -0.0); fold onto the principal branch.
        if theta <= -std::f64::consts::PI {
            theta + 2.0 * std::f64::consts::PI
        } else {
            theta
        }
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im >= 0.0 {
            write!(f, "{}+{}i", self.re, self.im)
        } else {
            write!(f, "{}{}i", self.re, self.im)
        }
    }
}

/// Polar form `modulus * e^(i argument)` with the argument on the principal
/// branch `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Polar {
    modulus: f64,
    argument: f64,
}

impl Polar {
    /// Normalizes: a negative modulus flips the argument by pi, and the
    /// argument is folded into `(-pi, pi]`.
    pub fn new(modulus: f64, argument: f64) -> Self {
        let (m, a) = if modulus < 0.0 {
            (-modulus, argument + std::f64::consts::PI)
        } else {
            (modulus, argument)
        };
        Polar {
            modulus: m,
            argument: if m == 0.0 { 0.0 } else { principal(a) },
        }
    }

    pub fn from_degrees(modulus: f64, degrees: f64) -> Self {
        Polar::new(modulus, degrees.to_radians())
    }

    pub fn modulus(&self) -> f64 {
        self.modulus
    }

    pub fn argument(&self) -> f64 {
        self.argument
    }

    pub fn argument_degrees(&self) -> f64 {
        self.argument.to_degrees()
    }
}

/// Folds an angle into `(-pi, pi]`.
fn principal(theta: f64) -> f64 {
    use std::f64::consts::PI;
    let two_pi = 2.0 * PI;
    let mut t = theta % two_pi;
    if t <= -PI {
        t += two_pi;
    } else if t > PI {
        t -= two_pi;
    }
    // The boundary -pi maps to +pi.
    if t == -PI {
        PI
    } else {
        t
    }
}

/// `|z| = sqrt(a^2 + b^2)`, argument on the principal branch.
pub fn to_polar(z: &Complex) -> Polar {
    Polar {
        modulus: z.magnitude(),
        argument: z.argument(),
    }
}

pub fn to_rect(p: &Polar) -> Complex {
    Complex::new(
        p.modulus * p.argument.cos(),
        p.modulus * p.argument.sin(),
    )
}

/// `z^n = |z|^n e^(i n theta)`, renormalized to the principal branch.
pub fn de_moivre_pow(p: &Polar, n: i32) -> Result<Polar, CxError> {
    if p.modulus == 0.0 && n < 0 {
        return Err(CxError::DivisionByZero);
    }
    Ok(Polar::new(p.modulus.powi(n), p.argument * n as f64))
}

/// The `n` distinct n-th roots `|z|^(1/n) e^(i (theta + 2 k pi)/n)` for
/// `k = 0..n-1`.
pub fn nth_roots(z: &Complex, n: u32) -> Result<Vec<Polar>, CxError> {
    if z.is_zero() {
        return Err(CxError::ZeroInput);
    }
    if n == 0 {
        return Err(CxError::ZeroInput);
    }
    let p = to_polar(z);
    let root_modulus = p.modulus.powf(1.0 / n as f64);
    Ok((0..n)
        .map(|k| {
            let angle =
                (p.argument + 2.0 * std::f64::consts::PI * k as f64) / n as f64;
            Polar::new(root_modulus, angle)
        })
        .collect())
}

/// Adds phasors through rectangular form and repolarizes.
pub fn phasor_sum(phasors: &[Polar]) -> Result<Polar, CxError> {
    if phasors.is_empty() {
        return Err(CxError::EmptyList);
    }
    let total = phasors
        .iter()
        .fold(Complex::zero(), |acc, p| acc.add(&to_rect(p)));
    Ok(to_polar(&total))
}

/// Series RLC circuit driven by the current `i(t) = I0 sin(w t)`.
///
/// A missing capacitor is modeled as zero reactance (a short), matching the
/// convention that absent elements drop out of the series sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircuitSpec {
    /// Current amplitude, amperes.
    pub i0: f64,
    /// Angular frequency, rad/s.
    pub w: f64,
    /// Resistance, ohms.
    pub r: f64,
    /// Inductance, henries.
    pub l: f64,
    /// Capacitance, farads; `None` when there is no capacitor.
    pub c: Option<f64>,
}

impl CircuitSpec {
    pub fn new(i0: f64, w: f64, r: f64, l: f64, c: Option<f64>) -> Result<Self, CxError> {
        if w <= 0.0 {
            return Err(CxError::InvalidCircuit(format!(
                "angular frequency must be positive, got {}",
                w
            )));
        }
        if r < 0.0 || l < 0.0 {
            return Err(CxError::InvalidCircuit(
                "resistance and inductance must be non-negative".into(),
            ));
        }
        if let Some(c) = c {
            if c <= 0.0 {
                return Err(CxError::InvalidCircuit(format!(
                    "capacitance must be positive when present, got {}",
                    c
                )));
            }
        }
        Ok(CircuitSpec { i0, w, r, l, c })
    }

    /// Impedances of the three elements: `Z_R = R`, `Z_L = jwL`,
    /// `Z_C = -j/(wC)`.
    pub fn element_impedances(&self) -> (Complex, Complex, Complex) {
        let z_r = Complex::new(self.r, 0.0);
        let z_l = Complex::new(0.0, self.w * self.l);
        let z_c = match self.c {
            Some(c) => Complex::new(0.0, -1.0 / (self.w * c)),
            None => Complex::zero(),
        };
        (z_r, z_l, z_c)
    }
}

/// Source voltage of the series circuit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RlcSolution {
    /// Total impedance `Z = R + j(wL - 1/(wC))`.
    pub impedance: Complex,
    /// Source phasor `V_s = I0 Z`.
    pub source_phasor: Polar,
    /// Amplitude of `V_s(t)`.
    pub amplitude: f64,
    /// Phase of `V_s(t)` relative to the current, radians.
    pub phase: f64,
}

/// `V_s = I0 (R + j(wL - 1/(wC)))` from Ohm and Kirchhoff laws.
pub fn series_rlc_source(spec: &CircuitSpec) -> Result<RlcSolution, CxError> {
    let (z_r, z_l, z_c) = spec.element_impedances();
    let impedance = z_r.add(&z_l).add(&z_c);
    let source = impedance.scale(spec.i0);
    let source_phasor = to_polar(&source);
    Ok(RlcSolution {
        impedance,
        source_phasor,
        amplitude: source_phasor.modulus(),
        phase: source_phasor.argument(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() < tol, "{} vs {} (tol {})", a, b, tol);
    }

    #[test]
    fn product_worked_values() {
        let z = Complex::new(1.0, -2.0).mul(&Complex::new(3.0, 4.0));
        assert_eq!((z.re, z.im), (11.0, -2.0));
        let i_squared = Complex::new(0.0, 1.0).mul(&Complex::new(0.0, 1.0));
        assert_eq!((i_squared.re, i_squared.im), (-1.0, 0.0));
    }

    #[test]
    fn division_and_inverse_worked_values() {
        // (2 - 2i) / (1 + 3i) = -2/5 - 4/5 i
        let q = Complex::new(2.0, -2.0)
            .div(&Complex::new(1.0, 3.0))
            .unwrap();
        assert_close(q.re, -0.4, 1e-12);
        assert_close(q.im, -0.8, 1e-12);

        // 1 / (1 - 3i) = 1/10 + 3/10 i
        let inv = Complex::new(1.0, -3.0).inv().unwrap();
        assert_close(inv.re, 0.1, 1e-12);
        assert_close(inv.im, 0.3, 1e-12);

        assert!(Complex::zero().inv().is_err());
        assert!(Complex::new(1.0, 1.0).div(&Complex::zero()).is_err());
    }

    #[test]
    fn polar_worked_values() {
        // 1 - i = sqrt(2) e^(-i pi/4)
        let p = to_polar(&Complex::new(1.0, -1.0));
        assert_close(p.modulus(), 2f64.sqrt(), 1e-12);
        assert_close(p.argument(), -PI / 4.0, 1e-12);

        // 2 + 2i = 2 sqrt(2) e^(i pi/4)
        let p = to_polar(&Complex::new(2.0, 2.0));
        assert_close(p.modulus(), 2.0 * 2f64.sqrt(), 1e-12);
        assert_close(p.argument(), PI / 4.0, 1e-12);

        let r = to_rect(&Polar::new(1.0, 0.0));
        assert_eq!((r.re, r.im), (1.0, 0.0));

        // Argument of zero is 0 by convention.
        assert_eq!(to_polar(&Complex::zero()).argument(), 0.0);
    }

    #[test]
    fn de_moivre_worked_values() {
        // (1 - i)^3 = -2 - 2i = 2^(3/2) e^(-3 i pi / 4)
        let z = to_polar(&Complex::new(1.0, -1.0));
        let cubed = de_moivre_pow(&z, 3).unwrap();
        assert_close(cubed.modulus(), 2f64.powf(1.5), 1e-12);
        assert_close(cubed.argument(), -3.0 * PI / 4.0, 1e-12);
        let rect = to_rect(&cubed);
        assert_close(rect.re, -2.0, 1e-12);
        assert_close(rect.im, -2.0, 1e-12);

        // z^1 = z
        let once = de_moivre_pow(&z, 1).unwrap();
        assert_close(once.modulus(), z.modulus(), 1e-15);
        assert_close(once.argument(), z.argument(), 1e-15);

        // Euler: 1 e^(i pi) to the first power is -1.
        let euler = to_rect(&de_moivre_pow(&Polar::new(1.0, PI), 1).unwrap());
        assert_close(euler.re, -1.0, 1e-12);
        assert_close(euler.im, 0.0, 1e-12);

        assert!(de_moivre_pow(&Polar::new(0.0, 0.0), -1).is_err());
    }

    #[test]
    fn square_roots_of_minus_one() {
        let roots = nth_roots(&Complex::new(-1.0, 0.0), 2).unwrap();
        assert_eq!(roots.len(), 2);
        let rects: Vec<Complex> = roots.iter().map(to_rect).collect();
        assert_close(rects[0].re, 0.0, 1e-12);
        assert_close(rects[0].im, 1.0, 1e-12);
        assert_close(rects[1].re, 0.0, 1e-12);
        assert_close(rects[1].im, -1.0, 1e-12);
    }

    #[test]
    fn fourth_roots_of_unity() {
        let roots = nth_roots(&Complex::new(1.0, 0.0), 4).unwrap();
        let expected = [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)];
        for (root, (re, im)) in roots.iter().zip(expected) {
            let r = to_rect(root);
            assert_close(r.re, re, 1e-12);
            assert_close(r.im, im, 1e-12);
        }
    }

    #[test]
    fn single_root_is_identity() {
        let z = Complex::new(3.0, 4.0);
        let roots = nth_roots(&z, 1).unwrap();
        let r = to_rect(&roots[0]);
        assert_close(r.re, 3.0, 1e-12);
        assert_close(r.im, 4.0, 1e-12);
        assert!(nth_roots(&Complex::zero(), 2).is_err());
    }

    #[test]
    fn phasor_sum_worked_value() {
        // 10@60 + 5@45 = 14.89@55
        let sum = phasor_sum(&[
            Polar::from_degrees(10.0, 60.0),
            Polar::from_degrees(5.0, 45.0),
        ])
        .unwrap();
        assert_close(sum.modulus(), 14.89, 0.01);
        assert_close(sum.argument_degrees(), 55.0, 0.5);

        // z + (-z) has modulus 0.
        let z = Polar::from_degrees(3.0, 20.0);
        let neg = Polar::from_degrees(-3.0, 20.0);
        let zero = phasor_sum(&[z, neg]).unwrap();
        assert_close(zero.modulus(), 0.0, 1e-12);

        assert!(phasor_sum(&[]).is_err());
    }

    #[test]
    fn phasor_product_and_quotient_worked_values() {
        // X = 10@60, Y = 5@45: X*Y = 50@105, X/Y = 2@15.
        let x = Polar::from_degrees(10.0, 60.0);
        let y = Polar::from_degrees(5.0, 45.0);
        let product = Polar::new(x.modulus() * y.modulus(), x.argument() + y.argument());
        assert_close(product.modulus(), 50.0, 1e-9);
        assert_close(product.argument_degrees(), 105.0, 1e-9);
        let quotient = Polar::new(x.modulus() / y.modulus(), x.argument() - y.argument());
        assert_close(quotient.modulus(), 2.0, 1e-9);
        assert_close(quotient.argument_degrees(), 15.0, 1e-9);
    }

    #[test]
    fn rlc_multimeter_circuit() {
        // 120 V @ 60 Hz source, R = 12, L = 0.15 H, C = 100 uF; the source
        // amplitude fixes I0 = 120/|Z|.
        let w = 2.0 * PI * 60.0;
        let probe = CircuitSpec::new(1.0, w, 12.0, 0.15, Some(100e-6)).unwrap();
        let z = series_rlc_source(&probe).unwrap().impedance;
        let i0 = 120.0 / z.magnitude();
        let spec = CircuitSpec::new(i0, w, 12.0, 0.15, Some(100e-6)).unwrap();
        let solution = series_rlc_source(&spec).unwrap();
        assert_close(solution.amplitude, 120.0, 1e-9);

        // Kirchhoff: the element voltages sum back to the source.
        let (z_r, z_l, z_c) = spec.element_impedances();
        let v_total = z_r.add(&z_l).add(&z_c).scale(i0);
        assert_close(v_total.magnitude(), 120.0, 1e-6);

        // Multimeter reading across the inductor.
        let v_l = z_l.scale(i0).magnitude();
        assert_close(v_l, i0 * w * 0.15, 1e-9);
    }

    #[test]
    fn rlc_degenerate_circuits() {
        // Pure resistor: voltage in phase with the current.
        let spec = CircuitSpec::new(2.0, 100.0, 50.0, 0.0, None).unwrap();
        let solution = series_rlc_source(&spec).unwrap();
        assert_eq!(solution.phase, 0.0);
        assert_close(solution.amplitude, 100.0, 1e-12);

        // Resonance: wL = 1/(wC) leaves a purely real impedance.
        let w = 1000.0;
        let l = 0.1;
        let c = 1.0 / (w * w * l);
        let spec = CircuitSpec::new(1.0, w, 7.0, l, Some(c)).unwrap();
        let solution = series_rlc_source(&spec).unwrap();
        assert_close(solution.impedance.im, 0.0, 1e-9);
        assert_close(solution.impedance.re, 7.0, 1e-12);

        assert!(CircuitSpec::new(1.0, 0.0, 1.0, 1.0, None).is_err());
        assert!(CircuitSpec::new(1.0, 100.0, 1.0, 1.0, Some(0.0)).is_err());
    }

    proptest! {
        #[test]
        fn product_multiplies_moduli_and_adds_arguments(
            a in -50.0f64..50.0, b in -50.0f64..50.0,
            c in -50.0f64..50.0, d in -50.0f64..50.0,
        ) {
            let z = Complex::new(a, b);
            let w = Complex::new(c, d);
            if z.magnitude() > 1e-6 && w.magnitude() > 1e-6 {
                let zw = z.mul(&w);
                prop_assert!((zw.magnitude() - z.magnitude() * w.magnitude()).abs()
                    < 1e-10 * z.magnitude() * w.magnitude());
                let expected = principal(z.argument() + w.argument());
                let got = zw.argument();
                let diff = principal(got - expected).abs();
                prop_assert!(diff < 1e-10);
            }
        }

        #[test]
        fn roots_power_back_and_form_regular_polygon(
            a in -20.0f64..20.0, b in -20.0f64..20.0, n in 1u32..8,
        ) {
            let z = Complex::new(a, b);
            if z.magnitude() > 1e-3 {
                let roots = nth_roots(&z, n).unwrap();
                prop_assert_eq!(roots.len(), n as usize);
                for (k, root) in roots.iter().enumerate() {
                    let back = to_rect(&de_moivre_pow(root, n as i32).unwrap());
                    prop_assert!(back.sub(&z).magnitude() < 1e-10 * z.magnitude().max(1.0));
                    prop_assert!((root.modulus() - roots[0].modulus()).abs() < 1e-12);
                    if k > 0 {
                        let gap = principal(root.argument() - roots[k - 1].argument());
                        let step = 2.0 * PI / n as f64;
                        prop_assert!((gap.abs() - step).abs() < 1e-9);
                    }
                }
            }
        }

        #[test]
        fn conjugation_distributes_and_involutes(
            a in -50.0f64..50.0, b in -50.0f64..50.0,
            c in -50.0f64..50.0, d in -50.0f64..50.0,
        ) {
            let z = Complex::new(a, b);
            let w = Complex::new(c, d);
            let lhs = z.mul(&w).conj();
            let rhs = z.conj().mul(&w.conj());
            prop_assert!((lhs.re - rhs.re).abs() < 1e-9);
            prop_assert!((lhs.im - rhs.im).abs() < 1e-9);
            prop_assert_eq!(z.conj().conj(), z);
        }

        #[test]
        fn polar_rect_roundtrip(a in -100.0f64..100.0, b in -100.0f64..100.0) {
            let z = Complex::new(a, b);
            if !z.is_zero() {
                let back = to_rect(&to_polar(&z));
                prop_assert!(back.sub(&z).magnitude() < 1e-12 * z.magnitude().max(1.0));
            }
        }
    }
}
