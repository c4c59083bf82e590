//! Matrix-backed grayscale images: flips, transposition, binary negation,
//! rectangular windows, convex blends, and ASCII PGM (P2) serialization.
//! Intensities live in [0,1] with (row 1, col 1) at the top left.

use crate::linalg::Matrix;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ImgError {
    #[error("InvalidIntensity: {0} outside [0, 1]")]
    InvalidIntensity(f64),
    #[error("NonBinary: pixel value {0} is neither 0 nor 1")]
    NonBinary(f64),
    #[error("BadRectangle: {0}")]
    BadRectangle(String),
    #[error("BadT: blend parameter {0} outside [0, 1]")]
    BadT(f64),
    #[error("DimensionMismatch: {0}")]
    DimensionMismatch(String),
    #[error("MalformedPgm: {0}")]
    MalformedPgm(String),
}

/// Grayscale image; all intensities in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Image {
    pixels: Matrix<f64>,
}

impl Image {
    pub fn new(pixels: Matrix<f64>) -> Result<Self, ImgError> {
        for &v in pixels.entries() {
            if !(0.0..=1.0).contains(&v) || !v.is_finite() {
                return Err(ImgError::InvalidIntensity(v));
            }
        }
        Ok(Image { pixels })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self, ImgError> {
        let m = Matrix::from_rows(rows)
            .map_err(|e| ImgError::DimensionMismatch(e.to_string()))?;
        Image::new(m)
    }

    pub fn rows(&self) -> usize {
        self.pixels.rows()
    }

    pub fn cols(&self) -> usize {
        self.pixels.cols()
    }

    /// 0-based pixel access.
    pub fn at(&self, i: usize, j: usize) -> f64 {
        *self.pixels.at(i, j)
    }

    pub fn matrix(&self) -> &Matrix<f64> {
        &self.pixels
    }

    pub fn is_binary(&self) -> bool {
        self.pixels.entries().iter().all(|&v| v == 0.0 || v == 1.0)
    }

    /// Parses the whitespace matrix text format (one row per line, or
    /// `;`-separated for inline literals).
    pub fn parse(text: &str) -> Result<Self, ImgError> {
        let rows: Vec<Vec<f64>> = text
            .split(['\n', ';'])
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<f64>()
                            .map_err(|_| ImgError::MalformedPgm(format!("bad value {:?}", tok)))
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Image::from_rows(rows)
    }
}

/// Mirrors left-right: `out[i][j] = in[i][cols+1-j]` in 1-based terms.
pub fn flip_horizontal(img: &Image) -> Image {
    let (r, c) = (img.rows(), img.cols());
    let mut rows = Vec::with_capacity(r);
    for i in 0..r {
        rows.push((0..c).map(|j| img.at(i, c - 1 - j)).collect());
    }
    Image::from_rows(rows).expect("intensities unchanged")
}

/// Swaps rows and columns (reflect plus quarter turn).
pub fn transpose_image(img: &Image) -> Image {
    Image {
        pixels: img.pixels.transpose(),
    }
}

/// Binary negative: adds 1 mod 2 to every pixel.
pub fn negate(img: &Image) -> Result<Image, ImgError> {
    if let Some(&bad) = img
        .pixels
        .entries()
        .iter()
        .find(|&&v| v != 0.0 && v != 1.0)
    {
        return Err(ImgError::NonBinary(bad));
    }
    Ok(Image {
        pixels: img.pixels.map(|&v| if v == 0.0 { 1.0 } else { 0.0 }),
    })
}

/// Keeps the 1-based inclusive rectangle and blacks out the rest, as a
/// Hadamard product with a 0/1 mask.
pub fn window(
    img: &Image,
    top: usize,
    left: usize,
    bottom: usize,
    right: usize,
) -> Result<Image, ImgError> {
    if !(1 <= top && top <= bottom && bottom <= img.rows()) {
        return Err(ImgError::BadRectangle(format!(
            "rows {}..{} outside 1..{}",
            top,
            bottom,
            img.rows()
        )));
    }
    if !(1 <= left && left <= right && right <= img.cols()) {
        return Err(ImgError::BadRectangle(format!(
            "cols {}..{} outside 1..{}",
            left,
            right,
            img.cols()
        )));
    }
    let mask = mask_matrix(img.rows(), img.cols(), top, left, bottom, right);
    let pixels = img
        .pixels
        .hadamard(&mask)
        .expect("mask shape matches by construction");
    Ok(Image { pixels })
}

/// The 0/1 window mask itself (1 inside the 1-based inclusive rectangle).
pub fn mask_matrix(
    rows: usize,
    cols: usize,
    top: usize,
    left: usize,
    bottom: usize,
    right: usize,
) -> Matrix<f64> {
    let mut mask = Matrix::<f64>::zero(rows, cols);
    for i in top..=bottom {
        for j in left..=right {
            *mask.at_mut(i - 1, j - 1) = 1.0;
        }
    }
    mask
}

/// Convex blend `(1-t) A + t B`, clamped to [0,1] against rounding residue.
pub fn blend(a: &Image, b: &Image, t: f64) -> Result<Image, ImgError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(ImgError::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if !(0.0..=1.0).contains(&t) {
        return Err(ImgError::BadT(t));
    }
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        rows.push(
            (0..a.cols())
                .map(|j| ((1.0 - t) * a.at(i, j) + t * b.at(i, j)).clamp(0.0, 1.0))
                .collect(),
        );
    }
    Image::from_rows(rows)
}

/// Serializes as ASCII PGM (P2): intensity `x` maps to `round(x * maxval)`.
pub fn pgm_write(img: &Image, maxval: u16) -> Vec<u8> {
    let mut out = format!("P2\n{} {}\n{}\n", img.cols(), img.rows(), maxval);
    for i in 0..img.rows() {
        let row: Vec<String> = (0..img.cols())
            .map(|j| ((img.at(i, j) * maxval as f64).round() as u32).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

/// Parses ASCII PGM (P2) with `#` comments; intensities come back as
/// `value / maxval`.
pub fn pgm_read(bytes: &[u8]) -> Result<Image, ImgError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| ImgError::MalformedPgm("not valid UTF-8".into()))?;
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace);
    let magic = tokens.next().ok_or_else(|| ImgError::MalformedPgm("empty stream".into()))?;
    if magic != "P2" {
        return Err(ImgError::MalformedPgm(format!(
            "expected magic P2, got {:?}",
            magic
        )));
    }
    let mut next_number = |name: &str| -> Result<u64, ImgError> {
        tokens
            .next()
            .ok_or_else(|| ImgError::MalformedPgm(format!("missing {}", name)))?
            .parse::<u64>()
            .map_err(|_| ImgError::MalformedPgm(format!("bad {}", name)))
    };
    let width = next_number("width")? as usize;
    let height = next_number("height")? as usize;
    let maxval = next_number("maxval")?;
    if width == 0 || height == 0 || maxval == 0 {
        return Err(ImgError::MalformedPgm(
            "width, height and maxval must be positive".into(),
        ));
    }
    let mut rows = Vec::with_capacity(height);
    for _ in 0..height {
        let mut row = Vec::with_capacity(width);
        for _ in 0..width {
            let v = next_number("pixel value")?;
            if v > maxval {
                return Err(ImgError::MalformedPgm(format!(
                    "pixel {} exceeds maxval {}",
                    v, maxval
                )));
            }
            row.push(v as f64 / maxval as f64);
        }
        rows.push(row);
    }
    if tokens.next().is_some() {
        return Err(ImgError::MalformedPgm("trailing data after pixels".into()));
    }
    Image::from_rows(rows)
}
