//! `mathbook nav|geo|phys ...`: the worked-application commands.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::applied as ap;
use serde_json::json;

#[derive(Subcommand)]
pub enum NavCmd {
    /// Ground speed and drift angle for a course flown against wind
    Wind {
        /// True course, degrees
        course: f64,
        /// True airspeed, knots
        tas: f64,
        /// Direction the wind blows from (METAR convention), degrees
        wind_from: f64,
        /// Wind speed, knots
        wind_speed: f64,
    },
}

#[derive(Subcommand)]
pub enum GeoCmd {
    /// Canonical form of A x^2 + C y^2 + D x + E y + F = 0
    Conic {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
        #[arg(allow_hyphen_values = true)]
        e: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Elliptical roof cut for a cylindrical pipe: radius and pitch
    Chimney { radius: f64, pitch_deg: f64 },
}

#[derive(Subcommand)]
pub enum PhysCmd {
    /// Range and flight time for launch speed and angle
    Projectile {
        v0: f64,
        alpha_deg: f64,
        #[arg(long, default_value_t = 9.80)]
        g: f64,
    },
    /// Amplitude ratio 10^(m1 - m2) between two magnitudes
    Richter {
        #[arg(allow_negative_numbers = true)]
        m1: f64,
        #[arg(allow_negative_numbers = true)]
        m2: f64,
    },
    /// Sun/Moon distance ratio from half-moon timing
    Aristarchus { half_days: f64, cycle_days: f64 },
}

pub fn run_nav(cmd: &NavCmd) -> CliResult {
    match cmd {
        NavCmd::Wind {
            course,
            tas,
            wind_from,
            wind_speed,
        } => {
            let sol = ap::wind_triangle(*course, *tas, *wind_from, *wind_speed).map_err(domain)?;
            Ok(Outcome::new(
                format!(
                    "ground speed: {} kt\ndrift: {} deg ({} rad)\nheading: {} deg",
                    format_f64(sol.ground_speed),
                    format_f64(sol.drift_angle),
                    format_f64(sol.drift_angle.to_radians()),
                    format_f64(course - sol.drift_angle),
                ),
                json!({
                    "ground_speed": sol.ground_speed,
                    "drift_deg": sol.drift_angle,
                    "drift_rad": sol.drift_angle.to_radians(),
                    "heading_deg": course - sol.drift_angle,
                }),
            ))
        }
    }
}

pub fn run_geo(cmd: &GeoCmd) -> CliResult {
    match cmd {
        GeoCmd::Conic { a, c, d, e, f } => {
            let conic = ap::conic_canonical(
                &parse_rat(a)?,
                &parse_rat(c)?,
                &parse_rat(d)?,
                &parse_rat(e)?,
                &parse_rat(f)?,
            )
            .map_err(domain)?;
            let mut plain = format!("kind: {}", conic.kind_name());
            let mut payload = json!({ "kind": conic.kind_name() });
            let body = payload.as_object_mut().unwrap();
            describe_conic(&conic, &mut plain, body);
            if let Some(e) = conic.eccentricity() {
                plain.push_str(&format!("\neccentricity: {}", format_f64(e)));
                body.insert("eccentricity".into(), json!(e));
            }
            let foci = conic.foci();
            if !foci.is_empty() {
                let rendered = foci
                    .iter()
                    .map(|(x, y)| format!("({}, {})", format_f64(*x), format_f64(*y)))
                    .collect::<Vec<_>>()
                    .join(" ");
                plain.push_str(&format!("\nfoci: {}", rendered));
                body.insert(
                    "foci".into(),
                    serde_json::Value::Array(foci.iter().map(|(x, y)| json!([x, y])).collect()),
                );
            }
            Ok(Outcome::new(plain, payload))
        }
        GeoCmd::Chimney { radius, pitch_deg } => {
            let cut = ap::cylinder_ellipse(*radius, *pitch_deg).map_err(domain)?;
            Ok(Outcome::new(
                format!(
                    "semi-major: {}\nsemi-minor: {}\nfocal offset: {}\nstring length: {}",
                    format_f64(cut.semi_major),
                    format_f64(*radius),
                    format_f64(cut.focal),
                    format_f64(cut.string_length),
                ),
                json!({
                    "semi_major": cut.semi_major,
                    "semi_minor": radius,
                    "focal": cut.focal,
                    "string_length": cut.string_length,
                }),
            ))
        }
    }
}

fn describe_conic(
    conic: &ap::ConicCanonical,
    plain: &mut String,
    body: &mut serde_json::Map<String, serde_json::Value>,
) {
    use mathbook_core::scalar::format_rational;
    match conic {
        ap::ConicCanonical::Circle { center, radius_sq } => {
            plain.push_str(&format!(
                "\ncenter: ({}, {})\nradius^2: {}",
                format_rational(&center.0),
                format_rational(&center.1),
                format_rational(radius_sq)
            ));
            body.insert("center".into(), json!([rat_json(&center.0), rat_json(&center.1)]));
            body.insert("radius_sq".into(), rat_json(radius_sq));
        }
        ap::ConicCanonical::Ellipse {
            center,
            semi_x_sq,
            semi_y_sq,
        } => {
            plain.push_str(&format!(
                "\ncenter: ({}, {})\nsemi_x^2: {}\nsemi_y^2: {}",
                format_rational(&center.0),
                format_rational(&center.1),
                format_rational(semi_x_sq),
                format_rational(semi_y_sq)
            ));
            body.insert("center".into(), json!([rat_json(&center.0), rat_json(&center.1)]));
            body.insert("semi_x_sq".into(), rat_json(semi_x_sq));
            body.insert("semi_y_sq".into(), rat_json(semi_y_sq));
        }
        ap::ConicCanonical::HyperbolaH { center, a_sq, b_sq }
        | ap::ConicCanonical::HyperbolaV { center, a_sq, b_sq } => {
            plain.push_str(&format!(
                "\ncenter: ({}, {})\na^2: {}\nb^2: {}",
                format_rational(&center.0),
                format_rational(&center.1),
                format_rational(a_sq),
                format_rational(b_sq)
            ));
            body.insert("center".into(), json!([rat_json(&center.0), rat_json(&center.1)]));
            body.insert("a_sq".into(), rat_json(a_sq));
            body.insert("b_sq".into(), rat_json(b_sq));
        }
        ap::ConicCanonical::Parabola { a, h, k, vertical } => {
            plain.push_str(&format!(
                "\na: {}\nh: {}\nk: {}\naxis: {}",
                format_rational(a),
                format_rational(h),
                format_rational(k),
                if *vertical { "vertical" } else { "horizontal" }
            ));
            body.insert("a".into(), rat_json(a));
            body.insert("h".into(), rat_json(h));
            body.insert("k".into(), rat_json(k));
            body.insert("vertical".into(), json!(vertical));
        }
        ap::ConicCanonical::DegeneratePoint { point } => {
            plain.push_str(&format!(
                "\npoint: ({}, {})",
                format_rational(&point.0),
                format_rational(&point.1)
            ));
            body.insert("point".into(), json!([rat_json(&point.0), rat_json(&point.1)]));
        }
        ap::ConicCanonical::DegenerateLines { lines } => {
            for (p, q, r) in lines {
                plain.push_str(&format!(
                    "\nline: {}x + {}y + {} = 0",
                    format_f64(*p),
                    format_f64(*q),
                    format_f64(*r)
                ));
            }
            body.insert(
                "lines".into(),
                serde_json::Value::Array(lines.iter().map(|(p, q, r)| json!([p, q, r])).collect()),
            );
        }
        ap::ConicCanonical::Empty => {}
    }
}

pub fn run_phys(cmd: &PhysCmd) -> CliResult {
    match cmd {
        PhysCmd::Projectile { v0, alpha_deg, g } => {
            let (range, time) = ap::projectile(*v0, *alpha_deg, *g).map_err(domain)?;
            Ok(Outcome::new(
                format!(
                    "range: {} m\nflight time: {} s",
                    format_f64(range),
                    format_f64(time)
                ),
                json!({ "range_m": range, "flight_time_s": time }),
            ))
        }
        PhysCmd::Richter { m1, m2 } => {
            let ratio = ap::richter_ratio(*m1, *m2);
            Ok(Outcome::new(format_f64(ratio), json!(ratio)))
        }
        PhysCmd::Aristarchus {
            half_days,
            cycle_days,
        } => {
            let ratio = ap::aristarchus_ratio(*half_days, *cycle_days).map_err(domain)?;
            Ok(Outcome::new(format_f64(ratio), json!(ratio)))
        }
    }
}
