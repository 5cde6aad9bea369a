//! Encode and verify pipelines.
//!
//! Encoding reduces the red and green planes to quarter-size digests
//! (the LL subbands of a one-level integer Haar transform) and hides
//! them in the blue plane's low nibbles. Verification needs no side
//! data: it recomputes the digests from the visible red/green planes,
//! extracts the hidden copy from blue, and attributes every byte
//! disagreement to its 2x2 source block and two carrier pixels.

use crate::embed::{self, EmbedKey};
use crate::error::Result;
use crate::image::{self, RgbImage};
use crate::wavelet;
use crate::Coeff;

/// Which digest half a mismatched byte belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    Red,
    Green,
}

/// One payload byte disagreement, located in image space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MismatchedBlock {
    pub channel: Channel,
    /// 2x2 source block coordinates within the channel (half resolution).
    pub block_row: usize,
    pub block_col: usize,
    /// Linear indices of the two blue pixels carrying the byte.
    pub carriers: (usize, usize),
}

/// Outcome of [`verify`]: verdict, counts, and localization data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub width: usize,
    pub height: usize,
    /// True exactly when every payload byte matched.
    pub authentic: bool,
    pub total_payload_bytes: usize,
    pub mismatched_bytes: usize,
    /// Row-major width x height plane; 1 marks a suspect pixel.
    pub tamper_map: Vec<u8>,
    pub mismatched_blocks: Vec<MismatchedBlock>,
}

fn ll_digests(img: &RgbImage) -> Result<(Vec<Coeff>, Vec<Coeff>)> {
    let red = wavelet::forward_2d::<Coeff>(&img.red, img.width, img.height)?;
    let green = wavelet::forward_2d::<Coeff>(&img.green, img.width, img.height)?;
    Ok((red.ll, green.ll))
}

/// Produces the self-authenticating image: red and green pass through
/// bit-identical, blue carries their serialized LL digests.
pub fn encode(cover: &RgbImage, key: EmbedKey) -> Result<RgbImage> {
    cover.require_even()?;
    let red = wavelet::forward_2d::<Coeff>(&cover.red, cover.width, cover.height)?;
    let green = wavelet::forward_2d::<Coeff>(&cover.green, cover.width, cover.height)?;

    // The transform is exactly invertible, so the output carries the
    // cover planes themselves; the synthesis run keeps that guarantee
    // checked on every encode.
    let restored_red = wavelet::inverse_2d(&red)?;
    let restored_green = wavelet::inverse_2d(&green)?;
    assert!(restored_red == cover.red, "red plane failed round trip");
    assert!(restored_green == cover.green, "green plane failed round trip");

    let payload = embed::serialize_ll(&red.ll, &green.ll)?;
    let blue = embed::embed(&cover.blue, &payload, key)?;
    RgbImage::new(
        cover.width,
        cover.height,
        cover.red.clone(),
        cover.green.clone(),
        blue,
    )
}

/// Recomputes the digests, extracts the hidden copy, and compares.
///
/// Authentic means zero mismatched bytes. Every mismatch marks its 2x2
/// source block and both carrier pixels in the tamper map; whether the
/// block or a carrier changed cannot be told apart from one image, so
/// both regions are flagged.
pub fn verify(candidate: &RgbImage, key: EmbedKey) -> Result<VerificationReport> {
    candidate.require_even()?;
    let (ll_red, ll_green) = ll_digests(candidate)?;
    let expected = embed::serialize_ll(&ll_red, &ll_green)?;
    let actual = embed::extract(&candidate.blue, key)?;
    debug_assert_eq!(expected.len(), actual.len());

    let width = candidate.width;
    let half_area = ll_red.len();
    let half_width = width / 2;
    let mut tamper_map = vec![0u8; candidate.pixel_count()];
    let mut mismatched_blocks = Vec::new();

    for (i, (&want, &got)) in expected.iter().zip(actual.iter()).enumerate() {
        if want == got {
            continue;
        }
        let (channel, j) = if i < half_area {
            (Channel::Red, i)
        } else {
            (Channel::Green, i - half_area)
        };
        let block_row = j / half_width;
        let block_col = j % half_width;
        for dr in 0..2 {
            for dc in 0..2 {
                tamper_map[(2 * block_row + dr) * width + 2 * block_col + dc] = 1;
            }
        }
        let carriers = (2 * i, 2 * i + 1);
        tamper_map[carriers.0] = 1;
        tamper_map[carriers.1] = 1;
        mismatched_blocks.push(MismatchedBlock { channel, block_row, block_col, carriers });
    }

    Ok(VerificationReport {
        width,
        height: candidate.height,
        authentic: mismatched_blocks.is_empty(),
        total_payload_bytes: expected.len(),
        mismatched_bytes: mismatched_blocks.len(),
        tamper_map,
        mismatched_blocks,
    })
}

/// Renders the tamper map as binary PGM: 0 clean, 255 suspect.
pub fn tamper_mask_to_pgm(report: &VerificationReport) -> Vec<u8> {
    let samples: Vec<u8> = report
        .tamper_map
        .iter()
        .map(|&m| if m != 0 { 255 } else { 0 })
        .collect();
    image::write_pgm(report.width, report.height, &samples)
}
