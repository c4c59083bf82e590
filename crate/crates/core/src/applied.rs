//! Worked applications: angle conversion, projectile motion, triangle
//! solving by the sine/cosine laws, wind-triangle navigation, seismic and
//! astronomical ratios, conic canonicalization and the chimney ellipse.

use crate::scalar::{rational_to_f64, Rational};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AppliedError {
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("WindExceedsTas: wind speed {wind} is not below airspeed {tas}")]
    WindExceedsTas { wind: f64, tas: f64 },
    #[error("NotAConic: all quadratic and linear coefficients vanish")]
    NotAConic,
}

pub fn deg_to_rad(degrees: f64) -> f64 {
    degrees.to_radians()
}

pub fn rad_to_deg(radians: f64) -> f64 {
    radians.to_degrees()
}

pub fn sin_deg(degrees: f64) -> f64 {
    deg_to_rad(degrees).sin()
}

pub fn cos_deg(degrees: f64) -> f64 {
    deg_to_rad(degrees).cos()
}

/// Range and flight time of a projectile launched at `v0` m/s under gravity
/// `g`: `x = v0^2 sin(2 alpha) / g`, `t = 2 v0 sin(alpha) / g`.
pub fn projectile(v0: f64, alpha_deg: f64, g: f64) -> Result<(f64, f64), AppliedError> {
    if v0 <= 0.0 {
        return Err(AppliedError::OutOfRange(format!(
            "launch speed must be positive, got {}",
            v0
        )));
    }
    if !(0.0 < alpha_deg && alpha_deg < 90.0) {
        return Err(AppliedError::OutOfRange(format!(
            "launch angle must be in (0, 90) degrees, got {}",
            alpha_deg
        )));
    }
    if g <= 0.0 {
        return Err(AppliedError::OutOfRange(format!(
            "gravity must be positive, got {}",
            g
        )));
    }
    let range = v0 * v0 / g * sin_deg(2.0 * alpha_deg);
    let time = 2.0 * v0 * sin_deg(alpha_deg) / g;
    Ok((range, time))
}

/// Ground speed and drift angle solving the wind triangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindSolution {
    /// Speed over ground, knots.
    pub ground_speed: f64,
    /// Angle from heading to course in degrees; positive when the wind blows
    /// from the left of the course, so the nose points left of the track
    /// (`heading = course - drift`).
    pub drift_angle: f64,
}

/// Solves the wind triangle: the aircraft flies `tas` knots through the air
/// and must track `true_course` against a wind blowing *from* `wind_from`
/// (meteorological convention) at `wind_speed` knots.
pub fn wind_triangle(
    true_course: f64,
    tas: f64,
    wind_from: f64,
    wind_speed: f64,
) -> Result<WindSolution, AppliedError> {
    if tas <= 0.0 || wind_speed < 0.0 {
        return Err(AppliedError::OutOfRange(format!(
            "need tas > 0 and wind >= 0, got tas={} wind={}",
            tas, wind_speed
        )));
    }
    if wind_speed >= tas {
        return Err(AppliedError::WindExceedsTas {
            wind: wind_speed,
            tas,
        });
    }
    // Law of sines across the triangle, written for general angles:
    // sin(drift) = (w / tas) sin(course - wind_from).
    let delta = deg_to_rad(true_course - wind_from);
    let drift = ((wind_speed / tas) * delta.sin()).asin();
    // Along-course components of the air and wind vectors.
    let ground_speed = tas * drift.cos() - wind_speed * delta.cos();
    Ok(WindSolution {
        ground_speed,
        drift_angle: rad_to_deg(drift),
    })
}

/// Side `a` opposite `alpha`, from `a^2 = b^2 + c^2 - 2 b c cos(alpha)`.
pub fn law_of_cosines(b: f64, c: f64, alpha_deg: f64) -> Result<f64, AppliedError> {
    if b < 0.0 || c < 0.0 {
        return Err(AppliedError::OutOfRange(
            "sides must be non-negative".into(),
        ));
    }
    let squared = b * b + c * c - 2.0 * b * c * cos_deg(alpha_deg);
    Ok(squared.max(0.0).sqrt())
}

/// Side `b` from `a / sin(alpha) = b / sin(beta)`.
pub fn law_of_sines(a: f64, alpha_deg: f64, beta_deg: f64) -> Result<f64, AppliedError> {
    let s = sin_deg(alpha_deg);
    if s == 0.0 {
        return Err(AppliedError::OutOfRange(
            "alpha must not be a multiple of 180 degrees".into(),
        ));
    }
    Ok(a * sin_deg(beta_deg) / s)
}

/// Sun-to-Moon distance ratio from the half-moon timing: with
/// `psi = pi * half / cycle` and `phi = pi/2 - psi`, the ratio is
/// `1 / sin(phi)` under uniform lunar motion.
pub fn aristarchus_ratio(half_to_half_days: f64, cycle_days: f64) -> Result<f64, AppliedError> {
    if !(0.0 < half_to_half_days && half_to_half_days < cycle_days) {
        return Err(AppliedError::OutOfRange(format!(
            "need 0 < half ({}) < cycle ({})",
            half_to_half_days, cycle_days
        )));
    }
    let psi = std::f64::consts::PI * half_to_half_days / cycle_days;
    let phi = std::f64::consts::FRAC_PI_2 - psi;
    if phi <= 0.0 {
        return Err(AppliedError::OutOfRange(
            "half-to-half span reaches half the cycle; geometry degenerates".into(),
        ));
    }
    let ratio = 1.0 / phi.sin();
    if ratio > 1e6 {
        return Err(AppliedError::OutOfRange(
            "grazing geometry: ratio exceeds 1e6".into(),
        ));
    }
    Ok(ratio)
}

/// Amplitude ratio of two quakes on a base-10 magnitude scale: `10^(m1-m2)`.
pub fn richter_ratio(m1: f64, m2: f64) -> f64 {
    10f64.powf(m1 - m2)
}

/// Canonical description of a non-rotated conic
/// `A x^2 + C y^2 + D x + E y + F = 0`.
///
/// Squared lengths stay exact rationals; only eccentricity, focus positions
/// and line coefficients go through floating point.
#[derive(Debug, Clone, PartialEq)]
pub enum ConicCanonical {
    Circle {
        center: (Rational, Rational),
        radius_sq: Rational,
    },
    Ellipse {
        center: (Rational, Rational),
        /// Squared semi-axis along x.
        semi_x_sq: Rational,
        /// Squared semi-axis along y.
        semi_y_sq: Rational,
    },
    /// `(x-x0)^2/a^2 - (y-y0)^2/b^2 = 1`.
    HyperbolaH {
        center: (Rational, Rational),
        a_sq: Rational,
        b_sq: Rational,
    },
    /// `(y-y0)^2/b^2 - (x-x0)^2/a^2 = 1`.
    HyperbolaV {
        center: (Rational, Rational),
        a_sq: Rational,
        b_sq: Rational,
    },
    /// `y = a (x-h)^2 - k` when vertical, `x = a (y-h)^2 - k` otherwise.
    Parabola {
        a: Rational,
        h: Rational,
        k: Rational,
        vertical: bool,
    },
    DegeneratePoint {
        point: (Rational, Rational),
    },
    /// One or two lines, each as `(p, q, r)` meaning `p x + q y + r = 0`.
    DegenerateLines {
        lines: Vec<(f64, f64, f64)>,
    },
    Empty,
}

impl ConicCanonical {
    pub fn kind_name(&self) -> &'static str {
        match self {
            ConicCanonical::Circle { .. } => "Circle",
            ConicCanonical::Ellipse { .. } => "Ellipse",
            ConicCanonical::HyperbolaH { .. } => "HyperbolaH",
            ConicCanonical::HyperbolaV { .. } => "HyperbolaV",
            ConicCanonical::Parabola { .. } => "Parabola",
            ConicCanonical::DegeneratePoint { .. } => "DegeneratePoint",
            ConicCanonical::DegenerateLines { .. } => "DegenerateLines",
            ConicCanonical::Empty => "Empty",
        }
    }

    /// Squared center-to-focus distance, exact, where defined.
    pub fn focal_sq(&self) -> Option<Rational> {
        match self {
            ConicCanonical::Circle { .. } => Some(Rational::zero()),
            ConicCanonical::Ellipse {
                semi_x_sq,
                semi_y_sq,
                ..
            } => {
                let (major, minor) = if semi_x_sq >= semi_y_sq {
                    (semi_x_sq, semi_y_sq)
                } else {
                    (semi_y_sq, semi_x_sq)
                };
                Some(major - minor)
            }
            ConicCanonical::HyperbolaH { a_sq, b_sq, .. }
            | ConicCanonical::HyperbolaV { a_sq, b_sq, .. } => Some(a_sq + b_sq),
            _ => None,
        }
    }

    /// Eccentricity, where defined.
    pub fn eccentricity(&self) -> Option<f64> {
        match self {
            ConicCanonical::Circle { .. } => Some(0.0),
            ConicCanonical::Ellipse {
                semi_x_sq,
                semi_y_sq,
                ..
            } => {
                let major = rational_to_f64(semi_x_sq.max(semi_y_sq));
                let focal = rational_to_f64(&self.focal_sq().unwrap());
                Some((focal / major).sqrt())
            }
            ConicCanonical::HyperbolaH { a_sq, b_sq, .. } => {
                Some((rational_to_f64(&(a_sq + b_sq)) / rational_to_f64(a_sq)).sqrt())
            }
            ConicCanonical::HyperbolaV { a_sq, b_sq, .. } => {
                Some((rational_to_f64(&(a_sq + b_sq)) / rational_to_f64(b_sq)).sqrt())
            }
            _ => None,
        }
    }

    /// Foci as floating points, where defined.
    pub fn foci(&self) -> Vec<(f64, f64)> {
        match self {
            ConicCanonical::Ellipse {
                center,
                semi_x_sq,
                semi_y_sq,
            } => {
                let f = rational_to_f64(&self.focal_sq().unwrap()).sqrt();
                let (cx, cy) = (rational_to_f64(&center.0), rational_to_f64(&center.1));
                if semi_x_sq >= semi_y_sq {
                    vec![(cx - f, cy), (cx + f, cy)]
                } else {
                    vec![(cx, cy - f), (cx, cy + f)]
                }
            }
            ConicCanonical::HyperbolaH { center, .. } => {
                let f = rational_to_f64(&self.focal_sq().unwrap()).sqrt();
                let (cx, cy) = (rational_to_f64(&center.0), rational_to_f64(&center.1));
                vec![(cx - f, cy), (cx + f, cy)]
            }
            ConicCanonical::HyperbolaV { center, .. } => {
                let f = rational_to_f64(&self.focal_sq().unwrap()).sqrt();
                let (cx, cy) = (rational_to_f64(&center.0), rational_to_f64(&center.1));
                vec![(cx, cy - f), (cx, cy + f)]
            }
            ConicCanonical::Parabola { a, h, k, vertical } => {
                // Focus sits 1/(4a) from the vertex along the axis.
                let offset = 1.0 / (4.0 * rational_to_f64(a));
                let (vx, vy) = vertex_point(h, k, *vertical);
                if *vertical {
                    vec![(vx, vy + offset)]
                } else {
                    vec![(vx + offset, vy)]
                }
            }
            _ => Vec::new(),
        }
    }

    /// Re-expands the canonical parameters to conic coefficients
    /// `(A, C, D, E, F)`, exact; `None` for kinds carried in floating form.
    pub fn coefficients(&self) -> Option<(Rational, Rational, Rational, Rational, Rational)> {
        let two = Rational::from_integer(2.into());
        match self {
            ConicCanonical::Circle { center, radius_sq } => {
                let (x0, y0) = center;
                Some((
                    Rational::one(),
                    Rational::one(),
                    -(&two * x0),
                    -(&two * y0),
                    x0 * x0 + y0 * y0 - radius_sq,
                ))
            }
            ConicCanonical::Ellipse {
                center,
                semi_x_sq,
                semi_y_sq,
            } => {
                // sb (x-x0)^2 + sa (y-y0)^2 = sa sb
                let (x0, y0) = center;
                let (sa, sb) = (semi_x_sq, semi_y_sq);
                Some((
                    sb.clone(),
                    sa.clone(),
                    -(&two * sb * x0),
                    -(&two * sa * y0),
                    sb * x0 * x0 + sa * y0 * y0 - sa * sb,
                ))
            }
            ConicCanonical::HyperbolaH { center, a_sq, b_sq } => {
                let (x0, y0) = center;
                Some((
                    b_sq.clone(),
                    -a_sq.clone(),
                    -(&two * b_sq * x0),
                    &two * a_sq * y0,
                    b_sq * x0 * x0 - a_sq * y0 * y0 - a_sq * b_sq,
                ))
            }
            ConicCanonical::HyperbolaV { center, a_sq, b_sq } => {
                let (x0, y0) = center;
                Some((
                    -b_sq.clone(),
                    a_sq.clone(),
                    &two * b_sq * x0,
                    -(&two * a_sq * y0),
                    a_sq * y0 * y0 - b_sq * x0 * x0 - a_sq * b_sq,
                ))
            }
            ConicCanonical::Parabola { a, h, k, vertical } => {
                if *vertical {
                    // a x^2 - 2 a h x - y + (a h^2 - k) = 0
                    Some((
                        a.clone(),
                        Rational::zero(),
                        -(&two * a * h),
                        -Rational::one(),
                        a * h * h - k,
                    ))
                } else {
                    Some((
                        Rational::zero(),
                        a.clone(),
                        -Rational::one(),
                        -(&two * a * h),
                        a * h * h - k,
                    ))
                }
            }
            // A point, lines and the empty set do not retain the quadratic
            // form that produced them, so they cannot be re-expanded.
            _ => None,
        }
    }
}

fn vertex_point(h: &Rational, k: &Rational, vertical: bool) -> (f64, f64) {
    if vertical {
        (rational_to_f64(h), -rational_to_f64(k))
    } else {
        (-rational_to_f64(k), rational_to_f64(h))
    }
}

/// Classifies `A x^2 + C y^2 + D x + E y + F = 0` by completing squares,
/// entirely in exact rationals.
pub fn conic_canonical(
    a: &Rational,
    c: &Rational,
    d: &Rational,
    e: &Rational,
    f: &Rational,
) -> Result<ConicCanonical, AppliedError> {
    if a.is_zero() && c.is_zero() && d.is_zero() && e.is_zero() {
        return Err(AppliedError::NotAConic);
    }
    let two = Rational::from_integer(2.into());
    let four = Rational::from_integer(4.into());

    if !a.is_zero() && !c.is_zero() {
        // Complete both squares; flip signs so the x^2 coefficient is positive.
        let flip = a.is_negative();
        let (a, c, d, e, f) = if flip {
            (-a.clone(), -c.clone(), -d.clone(), -e.clone(), -f.clone())
        } else {
            (a.clone(), c.clone(), d.clone(), e.clone(), f.clone())
        };
        let x0 = -(&d / (&two * &a));
        let y0 = -(&e / (&two * &c));
        let g = &d * &d / (&four * &a) + &e * &e / (&four * &c) - &f;
        let center = (x0.clone(), y0.clone());

        if c.is_positive() {
            // Ellipse family: a (x-x0)^2 + c (y-y0)^2 = g.
            return Ok(if g.is_zero() {
                ConicCanonical::DegeneratePoint { point: center }
            } else if g.is_negative() {
                ConicCanonical::Empty
            } else {
                let semi_x_sq = &g / &a;
                let semi_y_sq = &g / &c;
                if a == c {
                    ConicCanonical::Circle {
                        center,
                        radius_sq: semi_x_sq,
                    }
                } else {
                    ConicCanonical::Ellipse {
                        center,
                        semi_x_sq,
                        semi_y_sq,
                    }
                }
            });
        }

        // Hyperbola family: a (x-x0)^2 - |c| (y-y0)^2 = g.
        let c_abs = -c;
        return Ok(if g.is_zero() {
            // Crossing lines through the center with slopes +-sqrt(a/|c|).
            let sa = rational_to_f64(&a).sqrt();
            let sc = rational_to_f64(&c_abs).sqrt();
            let (x0f, y0f) = (rational_to_f64(&x0), rational_to_f64(&y0));
            ConicCanonical::DegenerateLines {
                lines: vec![
                    (sa, -sc, sc * y0f - sa * x0f),
                    (sa, sc, -(sa * x0f + sc * y0f)),
                ],
            }
        } else if g.is_positive() {
            ConicCanonical::HyperbolaH {
                center,
                a_sq: &g / &a,
                b_sq: &g / &c_abs,
            }
        } else {
            let neg_g = -&g;
            ConicCanonical::HyperbolaV {
                center,
                a_sq: &neg_g / &a,
                b_sq: &neg_g / &c_abs,
            }
        });
    }

    if !a.is_zero() {
        // No y^2 term.
        if !e.is_zero() {
            // Vertical parabola y = -(A x^2 + D x + F)/E.
            let qa = -(a / e);
            let qb = -(d / e);
            let qc = -(f / e);
            let v = crate::polynomials::complete_square(&qa, &qb, &qc)
                .expect("leading coefficient is nonzero");
            return Ok(ConicCanonical::Parabola {
                a: v.a,
                h: v.h,
                k: v.k,
                vertical: true,
            });
        }
        return Ok(single_variable_lines(a, d, f, true));
    }

    if !c.is_zero() {
        if !d.is_zero() {
            // Horizontal parabola x = -(C y^2 + E y + F)/D.
            let qa = -(c / d);
            let qb = -(e / d);
            let qc = -(f / d);
            let v = crate::polynomials::complete_square(&qa, &qb, &qc)
                .expect("leading coefficient is nonzero");
            return Ok(ConicCanonical::Parabola {
                a: v.a,
                h: v.h,
                k: v.k,
                vertical: false,
            });
        }
        return Ok(single_variable_lines(c, e, f, false));
    }

    // Purely linear: D x + E y + F = 0.
    Ok(ConicCanonical::DegenerateLines {
        lines: vec![(rational_to_f64(d), rational_to_f64(e), rational_to_f64(f))],
    })
}

/// Lines from `q t^2 + l t + f = 0` in one variable (`t = x` when
/// `x_axis`, else `t = y`).
fn single_variable_lines(q: &Rational, l: &Rational, f: &Rational, x_axis: bool) -> ConicCanonical {
    let disc = l * l - Rational::from_integer(4.into()) * q * f;
    if disc.is_negative() {
        return ConicCanonical::Empty;
    }
    let qf = rational_to_f64(q);
    let lf = rational_to_f64(l);
    let root = rational_to_f64(&disc).sqrt();
    let r1 = (-lf + root) / (2.0 * qf);
    let r2 = (-lf - root) / (2.0 * qf);
    let mut lines = Vec::new();
    let mk = |r: f64| {
        if x_axis {
            (1.0, 0.0, -r)
        } else {
            (0.0, 1.0, -r)
        }
    };
    lines.push(mk(r1));
    if !disc.is_zero() {
        lines.push(mk(r2));
    }
    ConicCanonical::DegenerateLines { lines }
}

/// Elliptical cut of a radius-`R` cylinder by a roof pitched `alpha`
/// degrees: semi-major, focus offset and string length for drawing it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChimneyCut {
    /// Semi-major axis `S = R sqrt(1 + sin^2 alpha)`.
    pub semi_major: f64,
    /// Focus offset `F = R sin(alpha)` from the center.
    pub focal: f64,
    /// String length `L = 2 S` for the two-nail construction.
    pub string_length: f64,
}

pub fn cylinder_ellipse(r: f64, alpha_deg: f64) -> Result<ChimneyCut, AppliedError> {
    if r <= 0.0 {
        return Err(AppliedError::OutOfRange(format!(
            "tube radius must be positive, got {}",
            r
        )));
    }
    if !(0.0..90.0).contains(&alpha_deg) {
        return Err(AppliedError::OutOfRange(format!(
            "roof pitch must be in [0, 90) degrees, got {}",
            alpha_deg
        )));
    }
    let s = sin_deg(alpha_deg);
    let semi_major = r * (1.0 + s * s).sqrt();
    Ok(ChimneyCut {
        semi_major,
        focal: r * s,
        string_length: 2.0 * semi_major,
    })
}
