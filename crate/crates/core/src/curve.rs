//! The generalized Hermitian curve over GF(2^r),
//!
//! ```text
//! y^(2^(r-1)) + ... + y^2 + y = sum_{0 <= j < i <= r-1} x^(2^i + 2^j)
//! ```
//!
//! The left side is the absolute trace of `y`, the right side the second
//! elementary symmetric polynomial in the conjugates of `x`. For `r = 2` this
//! is the Hermitian curve `y^2 + y = x^3` over GF(4).
//!
//! Functions regular away from the point at infinity are spanned by
//! `x^i y^j theta^k` with `theta = x^3 + y^2 + xy`; the pole orders of `x`,
//! `y`, `theta` are `2^(r-1)`, `2^(r-1) + 2^(r-2)` and `2^r + 1`.

use thiserror::Error;

use crate::gf::{FieldElement, FieldError, GaloisField};
use crate::semigroup::{gh_generators, NumericalSemigroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("operation needs r >= 3, the curve has r = {0}")]
    NeedsGeneralized(u32),
    #[error("operation needs the Hermitian case r = 2, the curve has r = {0}")]
    NeedsHermitian(u32),
}

/// A rational point `(alpha, beta)` other than the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePoint {
    pub alpha: FieldElement,
    pub beta: FieldElement,
}

/// The monomial `x^i y^j theta^k` and its pole order at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialExponent {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub order: usize,
}

/// Pole orders of `x`, `y`, `theta`.
pub fn pole_orders(r: u32) -> [usize; 3] {
    let h = 1usize << (r - 1);
    [h, h + h / 2, 2 * h + 1]
}

impl MonomialExponent {
    pub fn new(r: u32, i: usize, j: usize, k: usize) -> Self {
        let [ox, oy, ot] = pole_orders(r);
        MonomialExponent { i, j, k, order: i * ox + j * oy + k * ot }
    }
}

/// Curve genus `2^(2r-3) - 2^(r-2)`.
pub fn genus(r: u32) -> usize {
    (1usize << (2 * r - 3)) - (1usize << (r - 2))
}

/// Number of affine rational points, `2^(2r-1)`.
pub fn affine_point_count(r: u32) -> usize {
    1usize << (2 * r - 1)
}

#[derive(Debug, Clone)]
pub struct GhCurve {
    field: GaloisField,
    weierstrass: NumericalSemigroup,
}

impl GhCurve {
    /// Curve over GF(2^r) with the default modulus.
    pub fn new(r: u32) -> Result<Self, CurveError> {
        Ok(Self::over(GaloisField::new(r)?))
    }

    pub fn over(field: GaloisField) -> Self {
        let r = field.degree();
        let gens: Vec<usize> = if r == 2 { vec![2, 3] } else { gh_generators(r).unwrap().to_vec() };
        let weierstrass = NumericalSemigroup::new(&gens).expect("pole orders are coprime");
        GhCurve { field, weierstrass }
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    pub fn r(&self) -> u32 {
        self.field.degree()
    }

    pub fn genus(&self) -> usize {
        genus(self.r())
    }

    /// Code length `n = 2^(2r-1)`.
    pub fn length(&self) -> usize {
        affine_point_count(self.r())
    }

    /// Weierstrass semigroup of the point at infinity.
    pub fn weierstrass(&self) -> &NumericalSemigroup {
        &self.weierstrass
    }

    /// `sum_{0 <= j < i <= r-1} alpha^(2^i + 2^j)`, term by term.
    pub fn rhs(&self, alpha: FieldElement) -> FieldElement {
        let f = &self.field;
        let r = self.r();
        let mut acc = FieldElement::ZERO;
        for i in 1..r {
            for j in 0..i {
                acc = f.add(acc, f.pow(alpha, (1u64 << i) + (1u64 << j)));
            }
        }
        acc
    }

    pub fn contains(&self, p: AffinePoint) -> bool {
        self.field.trace(p.beta) == self.rhs(p.alpha)
    }

    /// All affine rational points, ordered by `(alpha, beta)` value.
    pub fn points(&self) -> Vec<AffinePoint> {
        let f = &self.field;
        let mut out = Vec::with_capacity(self.length());
        // Trace fibres, computed once.
        let (mut t0, mut t1) = (Vec::new(), Vec::new());
        for b in f.elements() {
            if f.trace(b).is_zero() {
                t0.push(b);
            } else {
                t1.push(b);
            }
        }
        for alpha in f.elements() {
            let fibre = if self.rhs(alpha).is_zero() { &t0 } else { &t1 };
            out.extend(fibre.iter().map(|&beta| AffinePoint { alpha, beta }));
        }
        out
    }

    /// `theta = alpha^3 + beta^2 + alpha * beta`.
    pub fn theta(&self, p: AffinePoint) -> FieldElement {
        let f = &self.field;
        let a3 = f.mul(f.square(p.alpha), p.alpha);
        f.add(f.add(a3, f.square(p.beta)), f.mul(p.alpha, p.beta))
    }

    pub fn evaluate(&self, m: &MonomialExponent, p: AffinePoint) -> FieldElement {
        let f = &self.field;
        let xi = f.pow(p.alpha, m.i as u64);
        let yj = f.pow(p.beta, m.j as u64);
        let tk = f.pow(self.theta(p), m.k as u64);
        f.mul(f.mul(xi, yj), tk)
    }

    /// Monomial basis of `L(s Q)` for `r >= 3`, ascending by pole order.
    ///
    /// Exponents range over `j in {0, 1}` and `0 <= k < 2^(r-2)`. Leaving
    /// `k` unbounded repeats orders (at `r = 3`, `x^3 y` and `theta^2` both
    /// have order 18); this range is the unique-representation form for the
    /// telescopic generators and reaches every element of the semigroup.
    pub fn lbasis(&self, s: usize) -> Result<Vec<MonomialExponent>, CurveError> {
        let r = self.r();
        if r < 3 {
            return Err(CurveError::NeedsGeneralized(r));
        }
        let [ox, oy, ot] = pole_orders(r);
        let k_bound = 1usize << (r - 2);
        let mut out = Vec::new();
        for k in 0..k_bound {
            for j in 0..2 {
                let base = k * ot + j * oy;
                if base > s {
                    continue;
                }
                for i in 0..=(s - base) / ox {
                    out.push(MonomialExponent::new(r, i, j, k));
                }
            }
        }
        out.sort_by_key(|m| m.order);
        Ok(out)
    }

    /// Hermitian basis `x^i y^j`, `j <= 1`, `2i + 3j <= s` (only for `r = 2`).
    pub fn hermitian_basis(&self, s: usize) -> Result<Vec<MonomialExponent>, CurveError> {
        let r = self.r();
        if r != 2 {
            return Err(CurveError::NeedsHermitian(r));
        }
        let mut out: Vec<_> = (0..2)
            .filter(|&j| 3 * j <= s)
            .flat_map(|j| (0..=(s - 3 * j) / 2).map(move |i| MonomialExponent::new(2, i, j, 0)))
            .collect();
        out.sort_by_key(|m| m.order);
        Ok(out)
    }

    /// [`Self::lbasis`] or [`Self::hermitian_basis`], whichever fits `r`.
    pub fn basis(&self, s: usize) -> Vec<MonomialExponent> {
        if self.r() == 2 {
            self.hermitian_basis(s).unwrap()
        } else {
            self.lbasis(s).unwrap()
        }
    }
}
