//! Separable 2-D transform for grayscale images.
//!
//! Analysis runs the 1-D bank along every row, then along every column of
//! both half-images; synthesis inverts in the opposite order (columns, then
//! rows). For these two-tap filters the two separable orders commute
//! mathematically; one order is fixed so outputs are bit-stable.

use crate::count::OpCounter;
use crate::error::HaarError;
use crate::haar::{analyze, synthesize, Mode};
use crate::signal::{Signal, SubbandPair};

/// A grayscale image with real-valued pixels, stored row-major.
///
/// Pixels stay in double precision through every transform; quantization to
/// 8 bits happens only at image export.
#[derive(Debug, Clone, PartialEq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<f64>,
}

impl GrayImage {
    pub fn new(width: usize, height: usize, pixels: Vec<f64>) -> Result<Self, HaarError> {
        if width == 0 || height == 0 {
            return Err(HaarError::EmptyImage);
        }
        if width
            .checked_mul(height)
            .map(|n| n != pixels.len())
            .unwrap_or(true)
        {
            return Err(HaarError::BadPixelCount {
                width,
                height,
                len: pixels.len(),
            });
        }
        if let Some(index) = pixels.iter().position(|p| !p.is_finite()) {
            return Err(HaarError::NonFinite { index });
        }
        Ok(Self {
            width,
            height,
            pixels,
        })
    }

    /// Image of one value everywhere.
    pub fn constant(width: usize, height: usize, value: f64) -> Result<Self, HaarError> {
        Self::new(width, height, vec![value; width * height])
    }

    /// Image built from `f(x, y)`.
    pub fn from_fn(
        width: usize,
        height: usize,
        mut f: impl FnMut(usize, usize) -> f64,
    ) -> Result<Self, HaarError> {
        let mut pixels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                pixels.push(f(x, y));
            }
        }
        Self::new(width, height, pixels)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[f64] {
        &self.pixels
    }

    pub fn pixel(&self, x: usize, y: usize) -> f64 {
        self.pixels[y * self.width + x]
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    /// Sum of squared pixels.
    pub fn energy(&self) -> f64 {
        self.pixels.iter().map(|p| p * p).sum()
    }

    /// Largest absolute pixel value.
    pub fn max_abs(&self) -> f64 {
        self.pixels.iter().fold(0.0, |m, p| m.max(p.abs()))
    }

    fn row_signal(&self, y: usize) -> Signal {
        Signal::new(self.pixels[y * self.width..(y + 1) * self.width].to_vec())
            .expect("image pixels are finite")
    }

    fn column_signal(&self, x: usize) -> Signal {
        Signal::new((0..self.height).map(|y| self.pixel(x, y)).collect())
            .expect("image pixels are finite")
    }
}

/// The four subbands of one 2-D analysis level, each half the source size.
///
/// `ll` is lowpass in both directions; `lh` is lowpass along rows and
/// highpass along columns; `hl` the reverse; `hh` highpass in both.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadSubbands {
    pub ll: GrayImage,
    pub lh: GrayImage,
    pub hl: GrayImage,
    pub hh: GrayImage,
}

impl QuadSubbands {
    pub fn new(
        ll: GrayImage,
        lh: GrayImage,
        hl: GrayImage,
        hh: GrayImage,
    ) -> Result<Self, HaarError> {
        for band in [&lh, &hl, &hh] {
            if band.dimensions() != ll.dimensions() {
                return Err(HaarError::DimensionMismatch {
                    left: ll.dimensions(),
                    right: band.dimensions(),
                });
            }
        }
        Ok(Self { ll, lh, hl, hh })
    }

    pub fn band_width(&self) -> usize {
        self.ll.width()
    }

    pub fn band_height(&self) -> usize {
        self.ll.height()
    }

    /// Combined energy of all four bands.
    pub fn energy(&self) -> f64 {
        self.ll.energy() + self.lh.energy() + self.hl.energy() + self.hh.energy()
    }
}

fn check_even_dims(img: &GrayImage) -> Result<(), HaarError> {
    if !img.width().is_multiple_of(2) || !img.height().is_multiple_of(2) {
        return Err(HaarError::OddDimension {
            width: img.width(),
            height: img.height(),
        });
    }
    Ok(())
}

/// One 2-D analysis level: rows first, then columns of each half-image.
/// Operation counts accumulate across every 1-D call.
pub fn analyze2d(
    img: &GrayImage,
    mode: Mode,
    mut sink: Option<&mut OpCounter>,
) -> Result<QuadSubbands, HaarError> {
    check_even_dims(img)?;
    let half_w = img.width() / 2;
    let half_h = img.height() / 2;

    // Row pass: full-height half-images of row-approximations and row-details.
    let mut low = Vec::with_capacity(half_w * img.height());
    let mut high = Vec::with_capacity(half_w * img.height());
    for y in 0..img.height() {
        let sb = analyze(&img.row_signal(y), mode, sink.as_deref_mut())?;
        let (approx, detail) = sb.into_parts();
        low.extend_from_slice(approx.samples());
        high.extend_from_slice(detail.samples());
    }
    let low = GrayImage::new(half_w, img.height(), low)?;
    let high = GrayImage::new(half_w, img.height(), high)?;

    // Column pass over each half.
    let split_columns = |half: &GrayImage,
                             sink: &mut Option<&mut OpCounter>|
     -> Result<(GrayImage, GrayImage), HaarError> {
        let mut approx = vec![0.0; half_w * half_h];
        let mut detail = vec![0.0; half_w * half_h];
        for x in 0..half_w {
            let sb = analyze(&half.column_signal(x), mode, sink.as_deref_mut())?;
            for k in 0..half_h {
                approx[k * half_w + x] = sb.approx().samples()[k];
                detail[k * half_w + x] = sb.detail().samples()[k];
            }
        }
        Ok((
            GrayImage::new(half_w, half_h, approx)?,
            GrayImage::new(half_w, half_h, detail)?,
        ))
    };

    let (ll, lh) = split_columns(&low, &mut sink)?;
    let (hl, hh) = split_columns(&high, &mut sink)?;
    QuadSubbands::new(ll, lh, hl, hh)
}

/// Inverts [`analyze2d`]: column synthesis on both half-images, then row
/// synthesis.
pub fn synthesize2d(
    q: &QuadSubbands,
    mode: Mode,
    mut sink: Option<&mut OpCounter>,
) -> Result<GrayImage, HaarError> {
    // Bands are public fields, so re-check agreement here.
    for band in [&q.lh, &q.hl, &q.hh] {
        if band.dimensions() != q.ll.dimensions() {
            return Err(HaarError::DimensionMismatch {
                left: q.ll.dimensions(),
                right: band.dimensions(),
            });
        }
    }
    let half_w = q.band_width();
    let half_h = q.band_height();
    let height = half_h * 2;
    let width = half_w * 2;

    let merge_columns = |approx_band: &GrayImage,
                             detail_band: &GrayImage,
                             sink: &mut Option<&mut OpCounter>|
     -> Result<GrayImage, HaarError> {
        let mut half = vec![0.0; half_w * height];
        for x in 0..half_w {
            let sb = SubbandPair::new(
                approx_band.column_signal(x),
                detail_band.column_signal(x),
            )?;
            let column = synthesize(&sb, mode, sink.as_deref_mut())?;
            for (y, v) in column.samples().iter().enumerate() {
                half[y * half_w + x] = *v;
            }
        }
        GrayImage::new(half_w, height, half)
    };

    let low = merge_columns(&q.ll, &q.lh, &mut sink)?;
    let high = merge_columns(&q.hl, &q.hh, &mut sink)?;

    let mut pixels = Vec::with_capacity(width * height);
    for y in 0..height {
        let sb = SubbandPair::new(low.row_signal(y), high.row_signal(y))?;
        let row = synthesize(&sb, mode, sink.as_deref_mut())?;
        pixels.extend_from_slice(row.samples());
    }
    GrayImage::new(width, height, pixels)
}

/// Maps the lowpass band back to display range: halve (one 2-D level doubles
/// a flat region's intensity) and clamp to `[0, 255]`.
pub fn lowpass_display(q: &QuadSubbands) -> GrayImage {
    let pixels = q
        .ll
        .pixels()
        .iter()
        .map(|p| (p * 0.5).clamp(0.0, 255.0))
        .collect();
    GrayImage::new(q.band_width(), q.band_height(), pixels)
        .expect("scaled band keeps valid dimensions")
}

/// Signed pixelwise difference `a - b`, not clamped.
pub fn difference_image(a: &GrayImage, b: &GrayImage) -> Result<GrayImage, HaarError> {
    if a.dimensions() != b.dimensions() {
        return Err(HaarError::DimensionMismatch {
            left: a.dimensions(),
            right: b.dimensions(),
        });
    }
    let pixels = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(x, y)| x - y)
        .collect();
    GrayImage::new(a.width(), a.height(), pixels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::haar::fast_analysis;
    use crate::rng::SeededRng;

    fn random_image(width: usize, height: usize, seed: u64) -> GrayImage {
        let mut rng = SeededRng::new(seed);
        GrayImage::from_fn(width, height, |_, _| 255.0 * rng.next_unit_f64()).unwrap()
    }

    #[test]
    fn construction_validates_dimensions_and_pixels() {
        assert_eq!(
            GrayImage::new(0, 4, vec![]),
            Err(HaarError::EmptyImage)
        );
        assert_eq!(
            GrayImage::new(2, 2, vec![0.0; 3]),
            Err(HaarError::BadPixelCount {
                width: 2,
                height: 2,
                len: 3
            })
        );
        assert_eq!(
            GrayImage::new(1, 2, vec![0.0, f64::NAN]),
            Err(HaarError::NonFinite { index: 1 })
        );
    }

    #[test]
    fn constant_image_concentrates_in_the_lowpass_band() {
        let img = GrayImage::constant(4, 4, 100.0).unwrap();
        for mode in [Mode::Direct, Mode::Fast] {
            let q = analyze2d(&img, mode, None).unwrap();
            for p in q.ll.pixels() {
                // One 2-D level scales a constant by 2, up to rounding.
                assert!((p - 200.0).abs() < 1e-12 * 200.0);
            }
            for band in [&q.lh, &q.hl, &q.hh] {
                for p in band.pixels() {
                    assert_eq!(*p, 0.0);
                }
            }
        }
    }

    #[test]
    fn two_by_two_matches_the_composed_butterflies() {
        let (a, b, c, d) = (3.0, 1.0, 4.0, 1.5);
        let img = GrayImage::new(2, 2, vec![a, b, c, d]).unwrap();
        let q = analyze2d(&img, Mode::Fast, None).unwrap();
        assert!((q.ll.pixels()[0] - (a + b + c + d) / 2.0).abs() < 1e-12);
        assert!((q.lh.pixels()[0] - (a + b - c - d) / 2.0).abs() < 1e-12);
        assert!((q.hl.pixels()[0] - (a - b + c - d) / 2.0).abs() < 1e-12);
        assert!((q.hh.pixels()[0] - (a - b - c + d) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_odd_dimensions() {
        let img = GrayImage::constant(3, 4, 1.0).unwrap();
        assert_eq!(
            analyze2d(&img, Mode::Fast, None),
            Err(HaarError::OddDimension {
                width: 3,
                height: 4
            })
        );
    }

    #[test]
    fn modes_agree_on_every_band() {
        let img = random_image(64, 64, 21);
        let direct = analyze2d(&img, Mode::Direct, None).unwrap();
        let fast = analyze2d(&img, Mode::Fast, None).unwrap();
        for (d, f) in [
            (&direct.ll, &fast.ll),
            (&direct.lh, &fast.lh),
            (&direct.hl, &fast.hl),
            (&direct.hh, &fast.hh),
        ] {
            let diff = difference_image(d, f).unwrap();
            assert!(diff.max_abs() <= 1e-10, "band diff {}", diff.max_abs());
        }
    }

    #[test]
    fn rank_one_images_factor_through_the_1d_transform() {
        let u: Vec<f64> = vec![1.0, 4.0, 2.0, 8.0, 5.0, 7.0];
        let v: Vec<f64> = vec![3.0, 0.5, 6.0, 2.0];
        let img = GrayImage::from_fn(u.len(), v.len(), |x, y| u[x] * v[y]).unwrap();
        let q = analyze2d(&img, Mode::Fast, None).unwrap();

        let ua = fast_analysis(&Signal::new(u).unwrap(), None).unwrap();
        let va = fast_analysis(&Signal::new(v).unwrap(), None).unwrap();
        for y in 0..q.band_height() {
            for x in 0..q.band_width() {
                let want = ua.approx().samples()[x] * va.approx().samples()[y];
                assert!((q.ll.pixel(x, y) - want).abs() <= 1e-10);
            }
        }
    }

    #[test]
    fn roundtrip_restores_the_image() {
        let img = random_image(32, 32, 23);
        let tol = 1e-10 * img.max_abs().max(1.0);
        for mode in [Mode::Direct, Mode::Fast] {
            let q = analyze2d(&img, mode, None).unwrap();
            let back = synthesize2d(&q, mode, None).unwrap();
            let diff = difference_image(&img, &back).unwrap();
            assert!(diff.max_abs() <= tol);
        }

        let constant = GrayImage::constant(4, 4, 100.0).unwrap();
        let q = analyze2d(&constant, Mode::Fast, None).unwrap();
        let back = synthesize2d(&q, Mode::Fast, None).unwrap();
        let diff = difference_image(&constant, &back).unwrap();
        assert!(diff.max_abs() <= 1e-12);
    }

    #[test]
    fn lowpass_only_quad_restores_a_constant_image() {
        let ll = GrayImage::constant(1, 1, 2.0 * 42.0).unwrap();
        let zero = GrayImage::constant(1, 1, 0.0).unwrap();
        let q = QuadSubbands::new(ll, zero.clone(), zero.clone(), zero).unwrap();
        let img = synthesize2d(&q, Mode::Fast, None).unwrap();
        assert_eq!(img.dimensions(), (2, 2));
        for p in img.pixels() {
            assert!((p - 42.0).abs() < 1e-12 * 42.0);
        }
    }

    #[test]
    fn energy_is_conserved_across_the_quad() {
        let img = random_image(64, 64, 29);
        let q = analyze2d(&img, Mode::Fast, None).unwrap();
        let rel = (q.energy() - img.energy()).abs() / img.energy();
        assert!(rel < 1e-9, "relative energy error {rel}");
    }

    #[test]
    fn display_scaling_halves_and_clamps() {
        let ll = GrayImage::new(2, 1, vec![200.0, 600.0]).unwrap();
        let zero = GrayImage::constant(2, 1, 0.0).unwrap();
        let q = QuadSubbands::new(ll, zero.clone(), zero.clone(), zero.clone()).unwrap();
        let shown = lowpass_display(&q);
        assert_eq!(shown.pixels(), &[100.0, 255.0]);

        let ll = GrayImage::new(1, 1, vec![-10.0]).unwrap();
        let zero = GrayImage::constant(1, 1, 0.0).unwrap();
        let q = QuadSubbands::new(ll, zero.clone(), zero.clone(), zero).unwrap();
        assert_eq!(lowpass_display(&q).pixels(), &[0.0]);
    }

    #[test]
    fn difference_image_is_signed_and_checks_dimensions() {
        let a = GrayImage::new(1, 1, vec![1.0]).unwrap();
        let b = GrayImage::new(1, 1, vec![3.0]).unwrap();
        assert_eq!(difference_image(&a, &b).unwrap().pixels(), &[-2.0]);
        assert_eq!(difference_image(&a, &a).unwrap().pixels(), &[0.0]);

        let c = GrayImage::new(2, 1, vec![0.0, 0.0]).unwrap();
        assert_eq!(
            difference_image(&a, &c),
            Err(HaarError::DimensionMismatch {
                left: (1, 1),
                right: (2, 1)
            })
        );
    }
}
