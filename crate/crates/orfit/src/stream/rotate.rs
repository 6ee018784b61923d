//! Image rotation about the center with inverse-mapping bilinear
//! interpolation and zero fill outside the source bounds.

use crate::stream::{RawImage, IMAGE_SIDE};

/// Rotates `img` by `theta` radians about the image center.
///
/// `theta` is clamped into `[0, pi]` (non-finite inputs become 0). Each
/// destination pixel pulls its value from the inversely rotated source
/// location, blending the four surrounding source pixels bilinearly;
/// locations outside the image contribute zero. A zero angle reproduces
/// the input bit for bit.
pub fn rotate_image(img: &RawImage, theta: f64) -> RawImage {
    let theta = if theta.is_finite() {
        theta.clamp(0.0, std::f64::consts::PI)
    } else {
        0.0
    };
    let center = (IMAGE_SIDE as f64 - 1.0) / 2.0;
    let (sin_t, cos_t) = theta.sin_cos();
    let mut pixels = [0u8; IMAGE_SIDE * IMAGE_SIDE];
    for row in 0..IMAGE_SIDE {
        let dy = row as f64 - center;
        for col in 0..IMAGE_SIDE {
            let dx = col as f64 - center;
            // Inverse rotation: where in the source does this
            // destination pixel come from?
            let src_x = cos_t * dx + sin_t * dy + center;
            let src_y = -sin_t * dx + cos_t * dy + center;
            let value = bilinear(img, src_x, src_y);
            pixels[row * IMAGE_SIDE + col] = value.round().clamp(0.0, 255.0) as u8;
        }
    }
    RawImage::new(pixels)
}

/// Forward map of a source pixel center under the same rotation
/// convention as [`rotate_image`]; used by tests as a coordinate oracle.
#[cfg(test)]
pub(crate) fn forward_map(row: usize, col: usize, theta: f64) -> (f64, f64) {
    let center = (IMAGE_SIDE as f64 - 1.0) / 2.0;
    let (sin_t, cos_t) = theta.sin_cos();
    let dx = col as f64 - center;
    let dy = row as f64 - center;
    let out_x = cos_t * dx - sin_t * dy + center;
    let out_y = sin_t * dx + cos_t * dy + center;
    (out_y, out_x)
}

fn bilinear(img: &RawImage, x: f64, y: f64) -> f64 {
    let x0 = x.floor();
    let y0 = y.floor();
    let fx = x - x0;
    let fy = y - y0;
    let x0 = x0 as i64;
    let y0 = y0 as i64;
    let sample = |yy: i64, xx: i64| -> f64 {
        if (0..IMAGE_SIDE as i64).contains(&yy) && (0..IMAGE_SIDE as i64).contains(&xx) {
            f64::from(img.get(yy as usize, xx as usize))
        } else {
            0.0
        }
    };
    let top = sample(y0, x0) * (1.0 - fx) + sample(y0, x0 + 1) * fx;
    let bottom = sample(y0 + 1, x0) * (1.0 - fx) + sample(y0 + 1, x0 + 1) * fx;
    top * (1.0 - fy) + bottom * fy
}

#[cfg(test)]
mod tests {
    use super::*;

    fn blank() -> [u8; IMAGE_SIDE * IMAGE_SIDE] {
        [0u8; IMAGE_SIDE * IMAGE_SIDE]
    }

    #[test]
    fn zero_angle_is_a_pixel_identical_copy() {
        let mut pixels = blank();
        for (i, px) in pixels.iter_mut().enumerate() {
            *px = (i * 7 % 256) as u8;
        }
        let img = RawImage::new(pixels);
        assert_eq!(rotate_image(&img, 0.0), img);
        // Non-finite angles clamp to zero.
        assert_eq!(rotate_image(&img, f64::NAN), img);
    }

    #[test]
    fn half_turn_of_a_centrally_symmetric_image_is_near_identity() {
        let mut pixels = blank();
        let side = IMAGE_SIDE;
        // Paint a symmetric pattern: value depends only on the distance
        // classes invariant under 180-degree rotation.
        for r in 0..side {
            for c in 0..side {
                let rr = side - 1 - r;
                let cc = side - 1 - c;
                let key = (r.min(rr), c.min(cc));
                pixels[r * side + c] = ((key.0 * 11 + key.1 * 5) % 256) as u8;
            }
        }
        let img = RawImage::new(pixels);
        let rotated = rotate_image(&img, std::f64::consts::PI);
        let max_diff = img
            .as_bytes()
            .iter()
            .zip(rotated.as_bytes())
            .map(|(a, b)| (i16::from(*a) - i16::from(*b)).unsigned_abs())
            .max()
            .unwrap();
        assert!(max_diff <= 2, "max pixel difference {max_diff}");
    }

    #[test]
    fn quarter_turn_moves_a_bright_pixel_to_the_mapped_position() {
        let theta = std::f64::consts::FRAC_PI_2;
        let (src_r, src_c) = (5usize, 20usize);
        let mut pixels = blank();
        pixels[src_r * IMAGE_SIDE + src_c] = 255;
        let img = RawImage::new(pixels);
        let rotated = rotate_image(&img, theta);
        // Where the coordinate map sends the bright pixel.
        let (exp_r, exp_c) = forward_map(src_r, src_c, theta);
        // Brightest output pixel.
        let (best_idx, best) = rotated
            .as_bytes()
            .iter()
            .enumerate()
            .max_by_key(|(_, v)| **v)
            .unwrap();
        assert!(*best >= 128, "mass dissipated: brightest is {best}");
        let (got_r, got_c) = (best_idx / IMAGE_SIDE, best_idx % IMAGE_SIDE);
        assert!(
            (got_r as f64 - exp_r).abs() <= 1.0 && (got_c as f64 - exp_c).abs() <= 1.0,
            "expected near ({exp_r:.2}, {exp_c:.2}), got ({got_r}, {got_c})"
        );
    }

    #[test]
    fn rotation_preserves_total_mass_away_from_borders() {
        // A blob comfortably inside the image keeps its total intensity
        // within a few percent under rotation (bilinear is an average).
        let mut pixels = blank();
        for r in 10..18 {
            for c in 10..18 {
                pixels[r * IMAGE_SIDE + c] = 200;
            }
        }
        let img = RawImage::new(pixels);
        let mass = |im: &RawImage| -> f64 { im.as_bytes().iter().map(|v| f64::from(*v)).sum() };
        let m0 = mass(&img);
        for theta in [0.3, 1.0, 2.2, 3.0] {
            let m = mass(&rotate_image(&img, theta));
            assert!(
                (m - m0).abs() / m0 <= 0.05,
                "theta {theta}: mass {m} vs {m0}"
            );
        }
    }

    #[test]
    fn angles_beyond_the_range_are_clamped() {
        let mut pixels = blank();
        pixels[3 * IMAGE_SIDE + 7] = 255;
        let img = RawImage::new(pixels);
        assert_eq!(rotate_image(&img, -0.5), rotate_image(&img, 0.0));
        assert_eq!(
            rotate_image(&img, 4.0),
            rotate_image(&img, std::f64::consts::PI)
        );
    }
}
