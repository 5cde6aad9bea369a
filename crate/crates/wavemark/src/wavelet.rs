//! One-level 2D Haar analysis and synthesis on byte planes.
//!
//! The averaging/differencing filters are realized as the integer lifting
//! pair `low = floor((a+b)/2)`, `high = a - b`, which inverts exactly in
//! integer arithmetic: fractional half-band filters truncated to bytes
//! would not. The low output of a 2x2 block is its floored average and
//! still fits in one byte, so the LL plane can serve directly as payload.
//!
//! Forward order is rows then columns; the inverse undoes columns first,
//! then rows.

use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};

/// Signed integer scalar for subband coefficients.
///
/// One decomposition level on byte input spans [-510, 510], so `i16` and
/// anything wider works; [`crate::Coeff`] is the crate default.
pub trait Coefficient: PrimInt + Signed {}

impl<T: PrimInt + Signed> Coefficient for T {}

/// The four half-resolution planes of a one-level decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubbandSet<C> {
    pub half_width: usize,
    pub half_height: usize,
    /// Low-pass both ways: floored 2x2 block averages, in [0, 255].
    pub ll: Vec<C>,
    /// Column low-pass of the row detail half, in [-255, 255].
    pub hl: Vec<C>,
    /// Column detail of the row low-pass half, in [-255, 255].
    pub lh: Vec<C>,
    /// Detail both ways, in [-510, 510].
    pub hh: Vec<C>,
}

impl<C> SubbandSet<C> {
    fn check_consistent(&self) -> Result<()> {
        let expected = self.half_width * self.half_height;
        for (name, plane) in
            [("ll", &self.ll), ("hl", &self.hl), ("lh", &self.lh), ("hh", &self.hh)]
        {
            if plane.len() != expected {
                return Err(Error::DimensionMismatch(format!(
                    "{name} subband has {} samples, {}x{} needs {expected}",
                    plane.len(),
                    self.half_width,
                    self.half_height
                )));
            }
        }
        Ok(())
    }
}

/// Lifting step: `(floor((a+b)/2), a - b)`.
///
/// The shift is arithmetic, so the average floors toward negative
/// infinity for any signed inputs.
#[inline]
pub fn forward_pair<C: Coefficient>(a: C, b: C) -> (C, C) {
    ((a + b) >> 1, a - b)
}

/// Exact inverse of [`forward_pair`]: `a = low + floor((high+1)/2)`, `b = a - high`.
#[inline]
pub fn inverse_pair<C: Coefficient>(low: C, high: C) -> (C, C) {
    let a = low + ((high + C::one()) >> 1);
    (a, a - high)
}

#[inline]
fn lift<C: Coefficient>(sample: u8) -> C {
    C::from(sample).expect("coefficient type must represent [-510, 510]")
}

/// One analysis level: row pass into low/high halves, then a column pass
/// within each half. Requires even dimensions.
pub fn forward_2d<C: Coefficient>(plane: &[u8], width: usize, height: usize) -> Result<SubbandSet<C>> {
    if width < 2 || height < 2 || width % 2 != 0 || height % 2 != 0 {
        return Err(Error::OddDimensions { width, height });
    }
    if plane.len() != width * height {
        return Err(Error::DimensionMismatch(format!(
            "plane has {} samples, {width}x{height} needs {}",
            plane.len(),
            width * height
        )));
    }
    let hw = width / 2;
    let hh = height / 2;

    // Row pass: full-height halves of row averages and row details.
    let mut row_low = vec![C::zero(); hw * height];
    let mut row_high = vec![C::zero(); hw * height];
    for r in 0..height {
        for c in 0..hw {
            let a = lift::<C>(plane[r * width + 2 * c]);
            let b = lift::<C>(plane[r * width + 2 * c + 1]);
            let (low, high) = forward_pair(a, b);
            row_low[r * hw + c] = low;
            row_high[r * hw + c] = high;
        }
    }

    // Column pass within each half.
    let mut sb = SubbandSet {
        half_width: hw,
        half_height: hh,
        ll: vec![C::zero(); hw * hh],
        hl: vec![C::zero(); hw * hh],
        lh: vec![C::zero(); hw * hh],
        hh: vec![C::zero(); hw * hh],
    };
    for r in 0..hh {
        for c in 0..hw {
            let (low, high) = forward_pair(row_low[2 * r * hw + c], row_low[(2 * r + 1) * hw + c]);
            sb.ll[r * hw + c] = low;
            sb.lh[r * hw + c] = high;
            let (low, high) =
                forward_pair(row_high[2 * r * hw + c], row_high[(2 * r + 1) * hw + c]);
            sb.hl[r * hw + c] = low;
            sb.hh[r * hw + c] = high;
        }
    }
    Ok(sb)
}

/// One synthesis level: column inverse first, then row inverse.
///
/// Exact inverse of [`forward_2d`]; reconstructed samples must land in
/// [0, 255].
pub fn inverse_2d<C: Coefficient>(sb: &SubbandSet<C>) -> Result<Vec<u8>> {
    sb.check_consistent()?;
    let hw = sb.half_width;
    let hh = sb.half_height;
    let width = hw * 2;
    let height = hh * 2;

    // Column inverse rebuilds the row-pass halves.
    let mut row_low = vec![C::zero(); hw * height];
    let mut row_high = vec![C::zero(); hw * height];
    for r in 0..hh {
        for c in 0..hw {
            let (top, bottom) = inverse_pair(sb.ll[r * hw + c], sb.lh[r * hw + c]);
            row_low[2 * r * hw + c] = top;
            row_low[(2 * r + 1) * hw + c] = bottom;
            let (top, bottom) = inverse_pair(sb.hl[r * hw + c], sb.hh[r * hw + c]);
            row_high[2 * r * hw + c] = top;
            row_high[(2 * r + 1) * hw + c] = bottom;
        }
    }

    // Row inverse restores adjacent sample pairs.
    let mut plane = vec![0u8; width * height];
    for r in 0..height {
        for c in 0..hw {
            let (a, b) = inverse_pair(row_low[r * hw + c], row_high[r * hw + c]);
            for (offset, value) in [(0, a), (1, b)] {
                let index = r * width + 2 * c + offset;
                plane[index] = value.to_u8().ok_or_else(|| Error::SampleOutOfRange {
                    index,
                    value: value.to_i64().unwrap_or(i64::MAX),
                })?;
            }
        }
    }
    Ok(plane)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Independent blockwise oracle: computes each output coefficient
    /// straight from its 2x2 source block with `div_euclid` flooring,
    /// no separable passes.
    fn blockwise_oracle(plane: &[u8], width: usize, height: usize) -> SubbandSet<i32> {
        let hw = width / 2;
        let hh = height / 2;
        let mut sb = SubbandSet {
            half_width: hw,
            half_height: hh,
            ll: vec![0i32; hw * hh],
            hl: vec![0i32; hw * hh],
            lh: vec![0i32; hw * hh],
            hh: vec![0i32; hw * hh],
        };
        for r in 0..hh {
            for c in 0..hw {
                let p = |dr: usize, dc: usize| plane[(2 * r + dr) * width + 2 * c + dc] as i32;
                let (low0, high0) = ((p(0, 0) + p(0, 1)).div_euclid(2), p(0, 0) - p(0, 1));
                let (low1, high1) = ((p(1, 0) + p(1, 1)).div_euclid(2), p(1, 0) - p(1, 1));
                sb.ll[r * hw + c] = (low0 + low1).div_euclid(2);
                sb.lh[r * hw + c] = low0 - low1;
                sb.hl[r * hw + c] = (high0 + high1).div_euclid(2);
                sb.hh[r * hw + c] = high0 - high1;
            }
        }
        sb
    }

    #[test]
    fn pair_examples() {
        assert_eq!(forward_pair(100i32, 100), (100, 0));
        assert_eq!(forward_pair(5i32, 2), (3, 3));
        assert_eq!(forward_pair(2i32, 5), (3, -3));
        assert_eq!(inverse_pair(100i32, 0), (100, 100));
        assert_eq!(inverse_pair(3i32, 3), (5, 2));
        assert_eq!(inverse_pair(3i32, -3), (2, 5));
    }

    #[test]
    fn pair_round_trip_exhaustive() {
        for a in 0..=255i32 {
            for b in 0..=255i32 {
                let (low, high) = forward_pair(a, b);
                assert!((0..=255).contains(&low));
                assert_eq!(inverse_pair(low, high), (a, b));
            }
        }
    }

    #[test]
    fn constant_plane_has_zero_details() {
        let sb = forward_2d::<i32>(&[255u8; 4], 2, 2).unwrap();
        assert_eq!(sb.ll, vec![255]);
        assert_eq!(sb.lh, vec![0]);
        assert_eq!(sb.hl, vec![0]);
        assert_eq!(sb.hh, vec![0]);
    }

    #[test]
    fn two_by_two_matches_oracle() {
        // Row pass gives L = [3; 2], H = [3; 2]; the column pass lifts
        // each to (2, 1), so hl (the low output of H) is 2.
        let plane = [5u8, 2, 3, 1];
        let sb = forward_2d::<i32>(&plane, 2, 2).unwrap();
        assert_eq!(sb.ll, vec![2]);
        assert_eq!(sb.lh, vec![1]);
        assert_eq!(sb.hl, vec![2]);
        assert_eq!(sb.hh, vec![1]);
        let oracle = blockwise_oracle(&plane, 2, 2);
        assert_eq!(sb, oracle);
    }

    #[test]
    fn two_by_two_inverse_restores_plane() {
        let sb = SubbandSet {
            half_width: 1,
            half_height: 1,
            ll: vec![2i32],
            lh: vec![1],
            hl: vec![2],
            hh: vec![1],
        };
        assert_eq!(inverse_2d(&sb).unwrap(), vec![5, 2, 3, 1]);

        let constant = SubbandSet {
            half_width: 1,
            half_height: 1,
            ll: vec![255i32],
            lh: vec![0],
            hl: vec![0],
            hh: vec![0],
        };
        assert_eq!(inverse_2d(&constant).unwrap(), vec![255; 4]);
    }

    #[test]
    fn matches_oracle_on_random_planes() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..50 {
            let (w, h) = (2 * rng.random_range(1..=8usize), 2 * rng.random_range(1..=8usize));
            let plane: Vec<u8> = (0..w * h).map(|_| rng.random()).collect();
            let sb = forward_2d::<i32>(&plane, w, h).unwrap();
            assert_eq!(sb, blockwise_oracle(&plane, w, h));
            assert_eq!(inverse_2d(&sb).unwrap(), plane);
        }
    }

    #[test]
    fn ll_closed_form_and_range() {
        let mut rng = StdRng::seed_from_u64(12);
        let (w, h) = (8usize, 6usize);
        let plane: Vec<u8> = (0..w * h).map(|_| rng.random()).collect();
        let sb = forward_2d::<i32>(&plane, w, h).unwrap();
        for r in 0..h / 2 {
            for c in 0..w / 2 {
                let p = |dr: usize, dc: usize| plane[(2 * r + dr) * w + 2 * c + dc] as i32;
                let expected = ((p(0, 0) + p(0, 1)).div_euclid(2)
                    + (p(1, 0) + p(1, 1)).div_euclid(2))
                .div_euclid(2);
                let ll = sb.ll[r * (w / 2) + c];
                assert_eq!(ll, expected);
                assert!((0..=255).contains(&ll));
                // Floored average sits within 1 of the true block mean.
                let mean = (p(0, 0) + p(0, 1) + p(1, 0) + p(1, 1)) as f64 / 4.0;
                assert!((ll as f64 - mean).abs() < 1.0);
            }
        }
    }

    #[test]
    fn narrow_and_wide_coefficient_types_agree() {
        let mut rng = StdRng::seed_from_u64(13);
        let plane: Vec<u8> = (0..16).map(|_| rng.random()).collect();
        let sixteen = forward_2d::<i16>(&plane, 4, 4).unwrap();
        let sixtyfour = forward_2d::<i64>(&plane, 4, 4).unwrap();
        assert_eq!(
            sixteen.ll.iter().map(|&v| v as i64).collect::<Vec<_>>(),
            sixtyfour.ll
        );
        assert_eq!(
            sixteen.hh.iter().map(|&v| v as i64).collect::<Vec<_>>(),
            sixtyfour.hh
        );
        assert_eq!(inverse_2d(&sixteen).unwrap(), plane);
        assert_eq!(inverse_2d(&sixtyfour).unwrap(), plane);
    }

    #[test]
    fn rejects_odd_dimensions() {
        assert_eq!(
            forward_2d::<i32>(&[0; 6], 3, 2),
            Err(Error::OddDimensions { width: 3, height: 2 })
        );
        assert_eq!(
            forward_2d::<i32>(&[0; 2], 2, 1),
            Err(Error::OddDimensions { width: 2, height: 1 })
        );
    }

    #[test]
    fn rejects_inconsistent_subbands() {
        let sb = SubbandSet {
            half_width: 2,
            half_height: 1,
            ll: vec![0i32; 2],
            lh: vec![0; 2],
            hl: vec![0; 1],
            hh: vec![0; 2],
        };
        assert!(matches!(inverse_2d(&sb), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn rejects_out_of_range_reconstruction() {
        let sb = SubbandSet {
            half_width: 1,
            half_height: 1,
            ll: vec![400i32],
            lh: vec![0],
            hl: vec![0],
            hh: vec![0],
        };
        assert!(matches!(inverse_2d(&sb), Err(Error::SampleOutOfRange { .. })));
    }
}
