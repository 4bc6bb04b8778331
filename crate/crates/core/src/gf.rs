//! Arithmetic in GF(2^r) using a polynomial basis over GF(2).
//!
//! An element is a bitmask: bit `i` is the coefficient of `z^i`. Every
//! operation is relative to a [`GaloisField`], which pins the extension degree
//! and the irreducible modulus. The context is two integers, so it is `Copy`
//! and can be handed to worker threads freely.

use std::fmt;

use thiserror::Error;

/// Smallest supported extension degree.
pub const MIN_DEGREE: u32 = 2;
/// Largest supported extension degree.
pub const MAX_DEGREE: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("extension degree {0} is outside {MIN_DEGREE}..={MAX_DEGREE}")]
    UnsupportedDegree(u32),
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    WrongDegree { modulus: u32, degree: u32 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    Reducible(u32),
    #[error("value {value} is not an element of GF(2^{degree})")]
    ForeignElement { value: u32, degree: u32 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// An element of some GF(2^r), as a polynomial-basis bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() {
            write!(f, "{:#x}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Default irreducible modulus for each supported degree.
///
/// Degrees 2 through 8 follow the usual table (the AES polynomial at 8);
/// the larger ones are low-weight irreducibles.
pub fn default_modulus(degree: u32) -> Option<u32> {
    let m = match degree {
        2 => 0b111,
        3 => 0b1011,
        4 => 0b1_0011,
        5 => 0b10_0101,
        6 => 0b100_0011,
        7 => 0b1000_0011,
        8 => 0x11b,
        9 => 0x211,
        10 => 0x409,
        11 => 0x805,
        12 => 0x1053,
        13 => 0x201b,
        14 => 0x4443,
        15 => 0x8003,
        16 => 0x1100b,
        _ => return None,
    };
    Some(m)
}

/// Degree of a GF(2)[z] polynomial given as a bitmask; `None` for zero.
fn poly_degree(p: u32) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(31 - p.leading_zeros())
    }
}

/// Remainder of `a` modulo `b` in GF(2)[z].
fn poly_rem(mut a: u32, b: u32) -> u32 {
    let db = poly_degree(b).expect("division by the zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over GF(2) by trial division against every polynomial of
/// degree `1..=deg/2`.
pub fn is_irreducible(p: u32) -> bool {
    let Some(deg) = poly_degree(p) else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for divisor in (1u32 << d)..(1u32 << (d + 1)) {
            if poly_rem(p, divisor) == 0 {
                return false;
            }
        }
    }
    true
}

/// The field GF(2^r) with a fixed irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisField {
    degree: u32,
    modulus: u32,
}

impl GaloisField {
    /// GF(2^degree) over its default modulus.
    pub fn new(degree: u32) -> Result<Self, FieldError> {
        let modulus = default_modulus(degree).ok_or(FieldError::UnsupportedDegree(degree))?;
        Self::with_modulus(degree, modulus)
    }

    /// GF(2^degree) over an explicit modulus, which is checked for degree
    /// and irreducibility.
    pub fn with_modulus(degree: u32, modulus: u32) -> Result<Self, FieldError> {
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(FieldError::UnsupportedDegree(degree));
        }
        if poly_degree(modulus) != Some(degree) {
            return Err(FieldError::WrongDegree { modulus, degree });
        }
        if !is_irreducible(modulus) {
            return Err(FieldError::Reducible(modulus));
        }
        Ok(GaloisField { degree, modulus })
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Number of elements, `2^r`.
    #[inline]
    pub fn order(&self) -> usize {
        1usize << self.degree
    }

    /// Validates a raw value as an element of this field.
    pub fn element(&self, value: u32) -> Result<FieldElement, FieldError> {
        if (value as usize) < self.order() {
            Ok(FieldElement(value as u16))
        } else {
            Err(FieldError::ForeignElement { value, degree: self.degree })
        }
    }

    /// Checks that `a` could belong to this field.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        self.element(a.value())
    }

    #[inline]
    fn owns(&self, a: FieldElement) -> bool {
        (a.0 as usize) < self.order()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.owns(a) && self.owns(b));
        FieldElement(a.0 ^ b.0)
    }

    /// `add` with both operands validated against this field.
    pub fn try_add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.add(self.check(a)?, self.check(b)?))
    }

    /// Shift-and-add product, reduced as it goes.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(self.owns(a) && self.owns(b));
        let top = 1u32 << self.degree;
        let mut x = a.0 as u32;
        let mut y = b.0 as u32;
        let mut acc = 0u32;
        while y != 0 {
            if y & 1 != 0 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & top != 0 {
                x ^= self.modulus;
            }
        }
        FieldElement(acc as u16)
    }

    pub fn try_mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Square-and-multiply; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via `a^(2^r - 2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, (self.order() - 2) as u64))
    }

    /// Absolute trace to GF(2): `a + a^2 + a^4 + ... + a^(2^(r-1))`.
    pub fn trace(&self, a: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        let mut t = a;
        for _ in 0..self.degree {
            acc = self.add(acc, t);
            t = self.square(t);
        }
        acc
    }

    /// All elements in ascending value order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.order()).map(|v| FieldElement(v as u16))
    }
}
