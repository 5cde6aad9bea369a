//! Image quality measures: MSE, PSNR, image fidelity, standard deviation.
//!
//! All sums are accumulated exactly in integers and converted to the
//! floating type only for the final division, so results do not depend
//! on traversal order. MSE and fidelity aggregate over all three
//! channels; PSNR uses peak 255.

use num_traits::Float;

use crate::error::{Error, Result};
use crate::image::RgbImage;

const PEAK_SQUARED: u32 = 255 * 255;

fn check_dims(a: &RgbImage, b: &RgbImage) -> Result<()> {
    if a.width != b.width || a.height != b.height {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} vs {}x{}",
            a.width, a.height, b.width, b.height
        )));
    }
    Ok(())
}

fn squared_error_sum(a: &RgbImage, b: &RgbImage) -> u64 {
    let planes = [(&a.red, &b.red), (&a.green, &b.green), (&a.blue, &b.blue)];
    planes
        .iter()
        .flat_map(|(x, y)| x.iter().zip(y.iter()))
        .map(|(&x, &y)| {
            let d = x as i64 - y as i64;
            (d * d) as u64
        })
        .sum()
}

fn cast<F: Float>(n: u128) -> F {
    F::from(n).expect("integer converts to float")
}

/// Mean squared error over all three channels and pixels.
pub fn mse<F: Float>(orig: &RgbImage, stego: &RgbImage) -> Result<F> {
    check_dims(orig, stego)?;
    let sum = squared_error_sum(orig, stego);
    let samples = 3 * orig.pixel_count();
    Ok(cast::<F>(sum as u128) / cast(samples as u128))
}

/// Peak signal-to-noise ratio in dB for a given MSE; infinite at zero.
pub fn psnr<F: Float>(mse: F) -> F {
    if mse <= F::zero() {
        return F::infinity();
    }
    let ten = F::from(10).expect("small integer converts to float");
    ten * (F::from(PEAK_SQUARED).unwrap() / mse).log10()
}

/// Image fidelity `1 - sum(diff^2) / sum(orig^2)`, over all channels.
pub fn image_fidelity<F: Float>(orig: &RgbImage, stego: &RgbImage) -> Result<F> {
    check_dims(orig, stego)?;
    let reference: u64 = [&orig.red, &orig.green, &orig.blue]
        .iter()
        .flat_map(|p| p.iter())
        .map(|&x| (x as u64) * (x as u64))
        .sum();
    if reference == 0 {
        return Err(Error::ZeroReference);
    }
    let diff = squared_error_sum(orig, stego);
    Ok(F::one() - cast::<F>(diff as u128) / cast(reference as u128))
}

/// Population standard deviation over all `3 * width * height` samples.
///
/// The variance numerator `n * sum(x^2) - sum(x)^2` is formed exactly in
/// 128-bit integers before the single float division. Empty images
/// report zero.
pub fn std_dev<F: Float>(img: &RgbImage) -> F {
    let n = 3 * img.pixel_count() as u128;
    if n == 0 {
        return F::zero();
    }
    let planes = [&img.red, &img.green, &img.blue];
    let sum: u128 = planes.iter().flat_map(|p| p.iter()).map(|&x| x as u128).sum();
    let sum_squares: u128 = planes
        .iter()
        .flat_map(|p| p.iter())
        .map(|&x| (x as u128) * (x as u128))
        .sum();
    let numerator = n * sum_squares - sum * sum;
    (cast::<F>(numerator) / cast(n * n)).sqrt()
}
