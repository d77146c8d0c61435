//! Scalars and vectors of the mixed alphabet `Z2^alpha x Z4^beta`.
//!
//! Binary coordinates are kept as bits. They are lifted into `{0, 1} ⊂ Z4`
//! only where the two alphabets meet: the inner product and the dual solver.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element of `Z4`, always reduced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);
    pub const ONE: Z4 = Z4(1);
    pub const TWO: Z4 = Z4(2);
    pub const THREE: Z4 = Z4(3);

    /// Reduces `value` modulo 4.
    pub const fn new(value: u8) -> Self {
        Z4(value & 3)
    }

    /// Parses a digit, rejecting anything outside `0..=3`.
    pub fn from_digit(value: u8) -> Option<Self> {
        (value < 4).then_some(Z4(value))
    }

    pub const fn from_bit(bit: bool) -> Self {
        Z4(bit as u8)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Units of `Z4` are exactly 1 and 3.
    pub const fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }

    pub const fn is_even(self) -> bool {
        self.0 & 1 == 0
    }

    /// Reduction modulo 2.
    pub const fn parity(self) -> bool {
        self.0 & 1 == 1
    }

    /// Multiplicative inverse of a unit. Every unit is its own inverse.
    pub fn inverse(self) -> Option<Self> {
        self.is_unit().then_some(self)
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 + rhs.0)
    }
}

impl AddAssign for Z4 {
    fn add_assign(&mut self, rhs: Z4) {
        *self = *self + rhs;
    }
}

impl Sub for Z4 {
    type Output = Z4;
    fn sub(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 + 4 - rhs.0)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4::new(4 - self.0)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4::new(self.0 * rhs.0)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The quaternary Gray map `phi`: 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
pub const fn gray_phi(s: Z4) -> [bool; 2] {
    match s.0 {
        0 => [false, false],
        1 => [false, true],
        2 => [true, true],
        _ => [true, false],
    }
}

/// Inverse of [`gray_phi`].
pub const fn gray_phi_inverse(bits: [bool; 2]) -> Z4 {
    match bits {
        [false, false] => Z4::ZERO,
        [false, true] => Z4::ONE,
        [true, true] => Z4::TWO,
        [true, false] => Z4::THREE,
    }
}

/// A binary vector, the codomain of the Gray map.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinaryVector {
    bits: Vec<bool>,
}

impl BinaryVector {
    pub fn new(bits: Vec<bool>) -> Self {
        BinaryVector { bits }
    }

    pub fn zeros(len: usize) -> Self {
        BinaryVector { bits: vec![false; len] }
    }

    /// Builds a vector from `0`/`1` digits.
    pub fn from_digits(digits: &[u8]) -> Result<Self> {
        digits
            .iter()
            .map(|&d| match d {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::InvalidDigit { digit: d as u32, modulus: 2 }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BinaryVector::new)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Bitwise XOR. Panics if lengths differ.
    pub fn xor(&self, other: &BinaryVector) -> BinaryVector {
        assert_eq!(self.len(), other.len(), "binary vector length mismatch");
        BinaryVector::new(self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect())
    }

    pub fn xor_assign(&mut self, other: &BinaryVector) {
        assert_eq!(self.len(), other.len(), "binary vector length mismatch");
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
    }

    /// Binary dot product.
    pub fn dot(&self, other: &BinaryVector) -> bool {
        assert_eq!(self.len(), other.len(), "binary vector length mismatch");
        self.bits.iter().zip(&other.bits).fold(false, |acc, (a, b)| acc ^ (a & b))
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, self.bits.iter().map(|&b| b as u8))
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = parse_digits(s, 0, 2)?;
        BinaryVector::from_digits(&digits)
    }
}

/// An element `(u | u')` of `Z2^alpha x Z4^beta`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedVector {
    binary: Vec<bool>,
    quaternary: Vec<Z4>,
}

impl MixedVector {
    pub fn new(binary: Vec<bool>, quaternary: Vec<Z4>) -> Self {
        MixedVector { binary, quaternary }
    }

    pub fn zeros(alpha: usize, beta: usize) -> Self {
        MixedVector { binary: vec![false; alpha], quaternary: vec![Z4::ZERO; beta] }
    }

    /// Builds a vector from raw digits, rejecting binary digits above 1 and
    /// quaternary digits above 3.
    pub fn from_digits(binary: &[u8], quaternary: &[u8]) -> Result<Self> {
        let binary = BinaryVector::from_digits(binary)?.bits;
        let quaternary = quaternary
            .iter()
            .map(|&d| Z4::from_digit(d).ok_or(Error::InvalidDigit { digit: d as u32, modulus: 4 }))
            .collect::<Result<Vec<_>>>()?;
        Ok(MixedVector { binary, quaternary })
    }

    pub fn alpha(&self) -> usize {
        self.binary.len()
    }

    pub fn beta(&self) -> usize {
        self.quaternary.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.alpha(), self.beta())
    }

    pub fn binary(&self) -> &[bool] {
        &self.binary
    }

    pub fn quaternary(&self) -> &[Z4] {
        &self.quaternary
    }

    pub fn binary_part(&self) -> BinaryVector {
        BinaryVector::new(self.binary.clone())
    }

    pub(crate) fn binary_mut(&mut self) -> &mut [bool] {
        &mut self.binary
    }

    pub(crate) fn quaternary_mut(&mut self) -> &mut [Z4] {
        &mut self.quaternary
    }

    pub fn is_zero(&self) -> bool {
        self.binary.iter().all(|&b| !b) && self.quaternary.iter().all(|q| q.is_zero())
    }

    /// True when `2v = 0`, i.e. every quaternary coordinate is even.
    pub fn has_order_at_most_two(&self) -> bool {
        self.quaternary.iter().all(|q| q.is_even())
    }

    /// Additive order: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.is_zero() {
            1
        } else if self.has_order_at_most_two() {
            2
        } else {
            4
        }
    }

    /// `lambda * v`. The binary part is scaled by `lambda mod 2`.
    pub fn scale(&self, lambda: Z4) -> MixedVector {
        let odd = lambda.parity();
        MixedVector {
            binary: self.binary.iter().map(|&b| b & odd).collect(),
            quaternary: self.quaternary.iter().map(|&q| q * lambda).collect(),
        }
    }

    /// `self += lambda * other`, in place.
    pub(crate) fn add_scaled(&mut self, lambda: Z4, other: &MixedVector) {
        debug_assert_eq!(self.shape(), other.shape());
        if lambda.parity() {
            for (a, b) in self.binary.iter_mut().zip(&other.binary) {
                *a ^= b;
            }
        }
        for (a, &b) in self.quaternary.iter_mut().zip(&other.quaternary) {
            *a += lambda * b;
        }
    }

    /// Inner product `2[u, v]_2 + [u', v']_4`. Panics on shape mismatch.
    pub fn dot(&self, other: &MixedVector) -> Z4 {
        assert_eq!(self.shape(), other.shape(), "mixed vector shape mismatch");
        let binary = self.binary.iter().zip(&other.binary).fold(false, |acc, (a, b)| acc ^ (a & b));
        let quaternary =
            self.quaternary.iter().zip(&other.quaternary).fold(Z4::ZERO, |acc, (&a, &b)| acc + a * b);
        Z4::TWO * Z4::from_bit(binary) + quaternary
    }

    /// The doubled componentwise product `2(u * v)`. Panics on shape mismatch.
    pub fn twice_star(&self, other: &MixedVector) -> MixedVector {
        assert_eq!(self.shape(), other.shape(), "mixed vector shape mismatch");
        MixedVector {
            binary: vec![false; self.alpha()],
            quaternary: self
                .quaternary
                .iter()
                .zip(&other.quaternary)
                .map(|(&a, &b)| Z4::TWO * a * b)
                .collect(),
        }
    }

    /// Coordinatewise negation; binary coordinates are unchanged.
    pub fn negate(&self) -> MixedVector {
        self.scale(Z4::THREE)
    }

    /// The Gray image `Phi(v)` of length `alpha + 2 beta`.
    pub fn gray(&self) -> BinaryVector {
        let mut bits = Vec::with_capacity(self.alpha() + 2 * self.beta());
        bits.extend_from_slice(&self.binary);
        for &q in &self.quaternary {
            bits.extend_from_slice(&gray_phi(q));
        }
        BinaryVector::new(bits)
    }

    /// Inverts the Gray map for the given shape.
    pub fn from_gray(bits: &BinaryVector, alpha: usize, beta: usize) -> Result<MixedVector> {
        if bits.len() != alpha + 2 * beta {
            return Err(Error::LengthMismatch { expected: alpha + 2 * beta, found: bits.len() });
        }
        let b = bits.bits();
        Ok(MixedVector {
            binary: b[..alpha].to_vec(),
            quaternary: b[alpha..].chunks(2).map(|p| gray_phi_inverse([p[0], p[1]])).collect(),
        })
    }
}

impl Add for &MixedVector {
    type Output = MixedVector;

    /// Panics on shape mismatch; see [`vector_add`] for the checked form.
    fn add(self, rhs: &MixedVector) -> MixedVector {
        assert_eq!(self.shape(), rhs.shape(), "mixed vector shape mismatch");
        let mut out = self.clone();
        out.add_scaled(Z4::ONE, rhs);
        out
    }
}

impl Sub for &MixedVector {
    type Output = MixedVector;

    fn sub(self, rhs: &MixedVector) -> MixedVector {
        assert_eq!(self.shape(), rhs.shape(), "mixed vector shape mismatch");
        let mut out = self.clone();
        out.add_scaled(Z4::THREE, rhs);
        out
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_digits(f, self.binary.iter().map(|&b| b as u8))?;
        match (self.binary.is_empty(), self.quaternary.is_empty()) {
            (true, true) => f.write_str("|"),
            (true, false) => f.write_str("| "),
            (false, true) => f.write_str(" |"),
            (false, false) => f.write_str(" | "),
        }?;
        write_digits(f, self.quaternary.iter().map(|q| q.value()))
    }
}

impl FromStr for MixedVector {
    type Err = Error;

    /// Parses `b1 b2 ... | q1 q2 ...`. Exactly one `|` is required.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.splitn(3, '|');
        let (left, right) = match (parts.next(), parts.next(), parts.next()) {
            (Some(l), Some(r), None) => (l, r),
            (_, None, _) => {
                return Err(Error::Syntax { column: s.len() + 1, message: "missing `|` separator".into() })
            }
            _ => {
                let column = s.match_indices('|').nth(1).map_or(0, |(i, _)| i) + 1;
                return Err(Error::Syntax { column, message: "more than one `|` separator".into() });
            }
        };
        let binary = parse_digits(left, 0, 2)?;
        let quaternary = parse_digits(right, left.len() + 1, 4)?;
        MixedVector::from_digits(&binary, &quaternary)
    }
}

fn write_digits(f: &mut fmt::Formatter<'_>, digits: impl Iterator<Item = u8>) -> fmt::Result {
    for (i, d) in digits.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

/// Splits on whitespace and checks each token is a digit below `modulus`.
/// Columns in errors are 1-based and offset by `offset` bytes.
fn parse_digits(s: &str, offset: usize, modulus: u8) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    let mut start = None;
    let bytes = s.as_bytes();
    for i in 0..=bytes.len() {
        let boundary = i == bytes.len() || bytes[i].is_ascii_whitespace();
        match (boundary, start) {
            (false, None) => start = Some(i),
            (true, Some(st)) => {
                let token = &s[st..i];
                let column = offset + st + 1;
                let digit: u8 = token.parse().map_err(|_| Error::Syntax {
                    column,
                    message: format!("`{token}` is not a digit"),
                })?;
                if digit >= modulus {
                    return Err(Error::Syntax {
                        column,
                        message: format!("digit {digit} out of range for Z{modulus}"),
                    });
                }
                out.push(digit);
                start = None;
            }
            _ => {}
        }
    }
    Ok(out)
}

fn check_shapes(u: &MixedVector, v: &MixedVector) -> Result<()> {
    if u.shape() != v.shape() {
        return Err(Error::ShapeMismatch { expected: u.shape(), found: v.shape() });
    }
    Ok(())
}

/// Gray map `Phi: Z2^alpha x Z4^beta -> Z2^(alpha + 2 beta)`.
pub fn gray_map(v: &MixedVector) -> BinaryVector {
    v.gray()
}

pub fn inner_product(u: &MixedVector, v: &MixedVector) -> Result<Z4> {
    check_shapes(u, v)?;
    Ok(u.dot(v))
}

pub fn twice_star(u: &MixedVector, v: &MixedVector) -> Result<MixedVector> {
    check_shapes(u, v)?;
    Ok(u.twice_star(v))
}

pub fn scalar_multiple(lambda: Z4, v: &MixedVector) -> MixedVector {
    v.scale(lambda)
}

pub fn vector_add(u: &MixedVector, v: &MixedVector) -> Result<MixedVector> {
    check_shapes(u, v)?;
    Ok(u + v)
}
