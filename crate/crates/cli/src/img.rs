//! `mathbook img ...`: image transforms. Inputs are files or `-` (stdin),
//! auto-detected as PGM (leading `P2`) or whitespace matrix text; the output
//! format follows the input, except for the explicit converters.

use crate::util::*;
use clap::Subcommand;
use mathbook_core::imaging as img;
use serde_json::json;

#[derive(Subcommand)]
pub enum ImgCmd {
    /// Mirror left-right
    Flip { input: String },
    /// Swap rows and columns
    Transpose { input: String },
    /// Binary negative (pixels must be 0/1)
    Negate { input: String },
    /// Black out everything outside a 1-based inclusive rectangle
    Window {
        input: String,
        top: usize,
        left: usize,
        bottom: usize,
        right: usize,
    },
    /// Convex blend of two same-shape images
    Blend {
        a: String,
        b: String,
        /// Blend parameter in [0,1] (single frame to stdout)
        #[arg(long, conflicts_with = "steps")]
        t: Option<f64>,
        /// Emit an N-frame PGM fade instead of a single frame
        #[arg(long)]
        steps: Option<usize>,
        /// Filename prefix for --steps output
        #[arg(long, default_value = "frame_")]
        out_prefix: String,
    },
    /// Convert matrix text to PGM
    Topgm {
        input: String,
        #[arg(long, default_value_t = 255)]
        maxval: u16,
    },
    /// Convert PGM to matrix text
    Frompgm { input: String },
}

enum Format {
    Pgm,
    Text,
}

fn load(input: &str) -> Result<(img::Image, Format), CliError> {
    let path = input.strip_prefix('@').unwrap_or(input);
    let bytes = if input == "-" || input.starts_with('@') || std::path::Path::new(path).exists() {
        read_bytes(path)?
    } else {
        input.as_bytes().to_vec()
    };
    if bytes.starts_with(b"P2") {
        Ok((img::pgm_read(&bytes).map_err(domain)?, Format::Pgm))
    } else {
        let text = String::from_utf8(bytes)
            .map_err(|_| CliError::new("MalformedPgm: input is not text"))?;
        Ok((img::Image::parse(&text).map_err(domain)?, Format::Text))
    }
}

fn emit(image: &img::Image, format: &Format) -> Outcome {
    let plain = match format {
        Format::Pgm => String::from_utf8(img::pgm_write(image, 255)).unwrap(),
        Format::Text => render_text(image),
    };
    Outcome::new(plain, image_json(image))
}

fn render_text(image: &img::Image) -> String {
    (0..image.rows())
        .map(|i| {
            (0..image.cols())
                .map(|j| format_f64(image.at(i, j)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn image_json(image: &img::Image) -> serde_json::Value {
    serde_json::Value::Array(
        (0..image.rows())
            .map(|i| {
                serde_json::Value::Array(
                    (0..image.cols()).map(|j| json!(image.at(i, j))).collect(),
                )
            })
            .collect(),
    )
}

pub fn run(cmd: &ImgCmd) -> CliResult {
    match cmd {
        ImgCmd::Flip { input } => {
            let (image, format) = load(input)?;
            Ok(emit(&img::flip_horizontal(&image), &format))
        }
        ImgCmd::Transpose { input } => {
            let (image, format) = load(input)?;
            Ok(emit(&img::transpose_image(&image), &format))
        }
        ImgCmd::Negate { input } => {
            let (image, format) = load(input)?;
            Ok(emit(&img::negate(&image).map_err(domain)?, &format))
        }
        ImgCmd::Window {
            input,
            top,
            left,
            bottom,
            right,
        } => {
            let (image, format) = load(input)?;
            let out = img::window(&image, *top, *left, *bottom, *right).map_err(domain)?;
            Ok(emit(&out, &format))
        }
        ImgCmd::Blend {
            a,
            b,
            t,
            steps,
            out_prefix,
        } => {
            let (first, format) = load(a)?;
            let (second, _) = load(b)?;
            match (t, steps) {
                (Some(t), None) => {
                    let out = img::blend(&first, &second, *t).map_err(domain)?;
                    Ok(emit(&out, &format))
                }
                (None, Some(steps)) => {
                    if *steps < 2 {
                        return Err(CliError::new("BadT: --steps needs at least 2 frames"));
                    }
                    let mut files = Vec::new();
                    for i in 0..*steps {
                        let t = i as f64 / (*steps - 1) as f64;
                        let frame = img::blend(&first, &second, t).map_err(domain)?;
                        let path = format!("{}{:03}.pgm", out_prefix, i);
                        std::fs::write(&path, img::pgm_write(&frame, 255))
                            .map_err(|e| CliError::new(format!("IoError: {}: {}", path, e)))?;
                        files.push(path);
                    }
                    Ok(Outcome::new(files.join("\n"), json!(files)))
                }
                _ => Err(CliError::new(
                    "BadT: provide exactly one of --t or --steps".to_string(),
                )),
            }
        }
        ImgCmd::Topgm { input, maxval } => {
            let (image, _) = load(input)?;
            if *maxval == 0 {
                return Err(CliError::new("MalformedPgm: maxval must be positive"));
            }
            let bytes = img::pgm_write(&image, *maxval);
            Ok(Outcome::new(
                String::from_utf8(bytes).unwrap(),
                image_json(&image),
            ))
        }
        ImgCmd::Frompgm { input } => {
            let (image, _) = load(input)?;
            Ok(Outcome::new(render_text(&image), image_json(&image)))
        }
    }
}
