//! `mathbook cx ...`: complex arithmetic and phasors. Literals are `a+bi`
//! for rectangular values and `M@DEG` / `M@DEGdeg` / `M@RADrad` for phasors;
//! angle output always shows both units.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::complexnum as cx;
use serde_json::json;

#[derive(Subcommand)]
pub enum CxCmd {
    /// Product of two complex numbers
    Mul {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Quotient z / w
    Div {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_hyphen_values = true)]
        w: String,
    },
    /// Polar form of a rectangular value
    Polar {
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Rectangular form of a phasor
    Rect {
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Integer power by De Moivre's formula
    Pow {
        #[arg(allow_hyphen_values = true)]
        z: String,
        #[arg(allow_negative_numbers = true)]
        n: i32,
    },
    /// All n-th roots, as phasors
    Roots {
        #[arg(allow_hyphen_values = true)]
        z: String,
        n: u32,
    },
    /// Sum of phasors through rectangular form
    PhasorSum {
        #[arg(allow_hyphen_values = true)]
        phasors: Vec<String>,
    },
    /// Series RLC circuit driven by i(t) = I0 sin(w t)
    Rlc {
        /// Current amplitude, amperes
        #[arg(long)]
        i0: f64,
        /// Source frequency in Hz (alternative to --w)
        #[arg(long, conflicts_with = "w")]
        freq: Option<f64>,
        /// Angular frequency in rad/s
        #[arg(long)]
        w: Option<f64>,
        /// Resistance, ohms
        #[arg(long, default_value_t = 0.0)]
        r: f64,
        /// Inductance, henries
        #[arg(long, default_value_t = 0.0)]
        l: f64,
        /// Capacitance, farads (omit for no capacitor)
        #[arg(long)]
        c: Option<f64>,
    },
}

pub fn run(cmd: &CxCmd) -> CliResult {
    match cmd {
        CxCmd::Mul { z, w } => {
            let product = parse_complex(z)?.mul(&parse_complex(w)?);
            Ok(Outcome::new(format_complex(&product), complex_json(&product)))
        }
        CxCmd::Div { z, w } => {
            let quotient = parse_complex(z)?
                .div(&parse_complex(w)?)
                .map_err(domain)?;
            Ok(Outcome::new(format_complex(&quotient), complex_json(&quotient)))
        }
        CxCmd::Polar { z } => {
            let p = cx::to_polar(&parse_complex(z)?);
            Ok(Outcome::new(format_polar(&p), polar_json(&p)))
        }
        CxCmd::Rect { p } => {
            let z = cx::to_rect(&parse_phasor(p)?);
            Ok(Outcome::new(format_complex(&z), complex_json(&z)))
        }
        CxCmd::Pow { z, n } => {
            let base = cx::to_polar(&parse_complex(z)?);
            let powered = cx::de_moivre_pow(&base, *n).map_err(domain)?;
            let rect = cx::to_rect(&powered);
            Ok(Outcome::new(
                format!("{} = {}", format_polar(&powered), format_complex(&rect)),
                json!({ "polar": polar_json(&powered), "rect": complex_json(&rect) }),
            ))
        }
        CxCmd::Roots { z, n } => {
            let roots = cx::nth_roots(&parse_complex(z)?, *n).map_err(domain)?;
            let plain = roots
                .iter()
                .map(format_polar)
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome::new(
                plain,
                serde_json::Value::Array(roots.iter().map(polar_json).collect()),
            ))
        }
        CxCmd::PhasorSum { phasors } => {
            let parsed: Vec<cx::Polar> = phasors
                .iter()
                .map(|p| parse_phasor(p))
                .collect::<Result<_, _>>()?;
            let sum = cx::phasor_sum(&parsed).map_err(domain)?;
            Ok(Outcome::new(format_polar(&sum), polar_json(&sum)))
        }
        CxCmd::Rlc {
            i0,
            freq,
            w,
            r,
            l,
            c,
        } => {
            let angular = match (freq, w) {
                (Some(f), None) => 2.0 * std::f64::consts::PI * f,
                (None, Some(w)) => *w,
                _ => {
                    return Err(CliError::new(
                        "InvalidCircuit: provide exactly one of --freq or --w".to_string(),
                    ))
                }
            };
            let spec = cx::CircuitSpec::new(*i0, angular, *r, *l, *c).map_err(domain)?;
            let solution = cx::series_rlc_source(&spec).map_err(domain)?;
            Ok(Outcome::new(
                format!(
                    "impedance: {}\n|Z|: {}\nV_s: {}\namplitude: {}\nphase: {} rad ({} deg)",
                    format_complex(&solution.impedance),
                    format_f64(solution.impedance.magnitude()),
                    format_polar(&solution.source_phasor),
                    format_f64(solution.amplitude),
                    format_f64(solution.phase),
                    format_f64(solution.phase.to_degrees()),
                ),
                json!({
                    "impedance": complex_json(&solution.impedance),
                    "source": polar_json(&solution.source_phasor),
                    "amplitude": solution.amplitude,
                    "phase_rad": solution.phase,
                    "phase_deg": solution.phase.to_degrees(),
                }),
            ))
        }
    }
}
