//! Payload serialization and the keyed low-nibble hiding scheme.
//!
//! Payload byte `i` always rides in blue pixels `2i` (bits 0..3) and
//! `2i+1` (bits 4..7). Within a pixel, bit `k` lands in low-nibble slot
//! `((k mod 4) + (i mod s)) mod 4`: the key `s` rotates the slot
//! assignment per byte, so the four bits of a nibble always occupy four
//! distinct slots and high nibbles are never touched. Capacity is exact:
//! a plane of `n` pixels carries `n/2` payload bytes, no more, no less.

use crate::error::{Error, Result};
use crate::wavelet::Coefficient;

/// Serialized digest bytes: the red LL plane row-major, then the green.
pub type Payload = Vec<u8>;

/// Secret parameter driving the slot rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbedKey {
    s: u8,
}

impl EmbedKey {
    /// Accepts `s` in [2, 7].
    pub fn new(s: u8) -> Result<Self> {
        if (2..=7).contains(&s) {
            Ok(Self { s })
        } else {
            Err(Error::KeyOutOfRange(s))
        }
    }

    pub fn s(self) -> u8 {
        self.s
    }
}

impl Default for EmbedKey {
    fn default() -> Self {
        Self { s: 4 }
    }
}

/// Carrier position of payload bit (`byte_index`, `bit_index`): the blue
/// pixel offset and the low-nibble slot (bit 0..3) within it.
///
/// Bit index 0 is the least significant bit of the payload byte.
#[inline]
pub fn bit_position(byte_index: usize, bit_index: u8, key: EmbedKey) -> (usize, u8) {
    assert!(bit_index < 8, "payload bytes have bits 0..8");
    let pixel = 2 * byte_index + (bit_index / 4) as usize;
    let rotation = (byte_index % key.s as usize) as u8;
    let slot = ((bit_index % 4) + rotation) % 4;
    (pixel, slot)
}

/// Writes the payload into the low nibbles of a copy of `blue`.
///
/// Every low-nibble bit is overwritten; high nibbles pass through
/// untouched. The payload must fill the plane exactly.
pub fn embed(blue: &[u8], payload: &[u8], key: EmbedKey) -> Result<Vec<u8>> {
    if payload.len() * 2 != blue.len() {
        return Err(Error::CapacityMismatch {
            plane_len: blue.len(),
            payload_len: payload.len(),
        });
    }
    let mut out: Vec<u8> = blue.iter().map(|&b| b & 0xF0).collect();
    for (i, &byte) in payload.iter().enumerate() {
        for k in 0..8 {
            let (pixel, slot) = bit_position(i, k, key);
            out[pixel] |= ((byte >> k) & 1) << slot;
        }
    }
    Ok(out)
}

/// Reads the payload back out of the low nibbles; exact inverse of
/// [`embed`]'s placement under the same key.
pub fn extract(blue: &[u8], key: EmbedKey) -> Result<Payload> {
    if blue.len() % 2 != 0 {
        return Err(Error::OddPlaneLength(blue.len()));
    }
    let mut payload = Vec::with_capacity(blue.len() / 2);
    for i in 0..blue.len() / 2 {
        let mut byte = 0u8;
        for k in 0..8 {
            let (pixel, slot) = bit_position(i, k, key);
            byte |= ((blue[pixel] >> slot) & 1) << k;
        }
        payload.push(byte);
    }
    Ok(payload)
}

/// Concatenates the red and green LL planes into payload bytes.
///
/// Both planes must have equal length and every sample must fit in a
/// byte.
pub fn serialize_ll<C: Coefficient>(ll_red: &[C], ll_green: &[C]) -> Result<Payload> {
    if ll_red.len() != ll_green.len() {
        return Err(Error::DimensionMismatch(format!(
            "red LL has {} samples, green LL has {}",
            ll_red.len(),
            ll_green.len()
        )));
    }
    ll_red
        .iter()
        .chain(ll_green.iter())
        .enumerate()
        .map(|(index, &value)| {
            value.to_u8().ok_or_else(|| Error::RangeViolation {
                index,
                value: value.to_i64().unwrap_or(i64::MAX),
            })
        })
        .collect()
}
