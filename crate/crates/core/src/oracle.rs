//! Exhaustive reference implementations. Exponential by design; they use
//! codeword enumeration and the scalar arithmetic, and nothing else.
//!
//! Ambient vectors are packed into integers: binary coordinate `j` is bit
//! `j`, quaternary coordinate `k` occupies bits `alpha + 2k` and
//! `alpha + 2k + 1`. Scans run in integer order.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::code::{Cap, Z2Z4Code};
use crate::error::{Error, Result};
use crate::zring::{BinaryVector, MixedVector, Z4};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `alpha + 2 beta` (or binary length) for ambient scans.
    pub ambient_bit_cap: u32,
    /// Largest number of pairs visited by a pair scan.
    pub pair_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { ambient_bit_cap: 20, pair_cap: 1 << 20 }
    }
}

impl OracleConfig {
    fn check_bits(&self, bits: u32) -> Result<()> {
        if bits > self.ambient_bit_cap {
            return Err(Error::CapExceeded { required_log2: bits, cap: 1u64 << self.ambient_bit_cap });
        }
        Ok(())
    }

    fn enumeration_cap(&self) -> Cap {
        Cap(1u64 << self.ambient_bit_cap)
    }
}

pub fn unpack(index: u64, alpha: usize, beta: usize) -> MixedVector {
    let binary = (0..alpha).map(|j| index >> j & 1 == 1).collect();
    let quaternary = (0..beta).map(|k| Z4::new((index >> (alpha + 2 * k)) as u8)).collect();
    MixedVector::new(binary, quaternary)
}

fn unpack_bits(index: u64, n: usize) -> BinaryVector {
    BinaryVector::new((0..n).map(|j| index >> j & 1 == 1).collect())
}

/// Every ambient vector orthogonal to every generator, in packed order.
pub fn brute_dual(c: &Z2Z4Code, cfg: &OracleConfig) -> Result<Vec<MixedVector>> {
    let (alpha, beta) = c.shape();
    let bits = (alpha + 2 * beta) as u32;
    cfg.check_bits(bits)?;
    let gens = c.generators();
    Ok((0..1u64 << bits)
        .into_par_iter()
        .map(|i| unpack(i, alpha, beta))
        .filter(|v| gens.iter().all(|g| g.dot(v).is_zero()))
        .collect())
}

/// Literal intersection of the codeword list with [`brute_dual`].
pub fn brute_is_acd(c: &Z2Z4Code, cfg: &OracleConfig) -> Result<bool> {
    let words: HashSet<MixedVector> = c.codewords(cfg.enumeration_cap())?.into_iter().collect();
    Ok(brute_dual(c, cfg)?.iter().all(|v| v.is_zero() || !words.contains(v)))
}

/// Contains zero and is closed under every pairwise sum.
pub fn brute_linearity(s: &[BinaryVector], cfg: &OracleConfig) -> Result<bool> {
    let pairs = (s.len() as u64).saturating_mul(s.len() as u64);
    if pairs > cfg.pair_cap {
        return Err(Error::CapExceeded { required_log2: 64 - pairs.leading_zeros(), cap: cfg.pair_cap });
    }
    let set: HashSet<&BinaryVector> = s.iter().collect();
    if !s.iter().any(BinaryVector::is_zero) {
        return Ok(false);
    }
    Ok(s.par_iter().all(|a| s.iter().all(|b| set.contains(&a.xor(b)))))
}

/// All length-`n` vectors with even overlap against every element of `s`.
pub fn brute_binary_dual(s: &[BinaryVector], n: usize, cfg: &OracleConfig) -> Result<Vec<BinaryVector>> {
    cfg.check_bits(n as u32)?;
    Ok((0..1u64 << n)
        .into_par_iter()
        .map(|i| unpack_bits(i, n))
        .filter(|v| s.iter().all(|w| !w.dot(v)))
        .collect())
}

/// `Phi(C)` as a set, from the codeword list.
pub fn brute_image(c: &Z2Z4Code, cfg: &OracleConfig) -> Result<Vec<BinaryVector>> {
    Ok(c.codewords(cfg.enumeration_cap())?.iter().map(MixedVector::gray).collect())
}

/// `Phi(brute_dual(C))` set-equals `brute_binary_dual(Phi(C))`.
pub fn brute_dual_image_is_binary_dual(c: &Z2Z4Code, cfg: &OracleConfig) -> Result<bool> {
    let n = c.alpha() + 2 * c.beta();
    let lhs: HashSet<BinaryVector> = brute_dual(c, cfg)?.iter().map(MixedVector::gray).collect();
    let rhs: HashSet<BinaryVector> = brute_binary_dual(&brute_image(c, cfg)?, n, cfg)?.into_iter().collect();
    Ok(lhs == rhs)
}
