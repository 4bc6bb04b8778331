//! One-point evaluation codes `GH_s` on the generalized Hermitian curve.
//!
//! `GH_s` evaluates the monomial basis of `L(s Q)` at every affine rational
//! point. Its dual is again such a code, `GH_s^⊥ = GH_(n + 2g - 2 - s)`, which
//! is how the residue codes `C_Ω(D, rho_m Q)` are realized here.

use std::fmt;

use thiserror::Error;

use crate::curve::{AffinePoint, CurveError, GhCurve, MonomialExponent};
use crate::gf::FieldElement;
use crate::linalg::CodeMatrix;
use crate::semigroup::SemigroupError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("s = {s} is at least the length {n}, the bound n - s is vacuous")]
    GoppaVacuous { s: usize, n: usize },
    #[error("s = {s} exceeds n + 2g - 2 = {max}, the dual is not a code of this family")]
    DualOutOfRange { s: usize, max: usize },
    #[error("GH_{s} was expected to be self-orthogonal but G * G^T is nonzero")]
    OrthogonalityFailed { s: usize },
}

/// A curve together with its fixed point ordering.
#[derive(Debug, Clone)]
pub struct CodeFamily {
    curve: GhCurve,
    points: Vec<AffinePoint>,
}

/// The code `GH_s` with its generator matrix.
#[derive(Debug, Clone)]
pub struct GhCode {
    pub r: u32,
    pub s: usize,
    pub n: usize,
    pub basis: Vec<MonomialExponent>,
    /// One row per basis monomial, one column per point.
    pub generator: CodeMatrix,
    /// Rank of the generator matrix.
    pub dimension: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelfFlags {
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

impl CodeFamily {
    pub fn new(r: u32) -> Result<Self, CodeError> {
        Ok(Self::for_curve(GhCurve::new(r)?))
    }

    pub fn for_curve(curve: GhCurve) -> Self {
        let points = curve.points();
        CodeFamily { curve, points }
    }

    pub fn curve(&self) -> &GhCurve {
        &self.curve
    }

    pub fn points(&self) -> &[AffinePoint] {
        &self.points
    }

    pub fn r(&self) -> u32 {
        self.curve.r()
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    /// `n + 2g - 2`: the parameter sum of a code and its dual.
    pub fn dual_sum(&self) -> usize {
        self.length() + 2 * self.genus() - 2
    }

    /// Generator matrix: row `l` evaluates the `l`-th basis monomial (by
    /// ascending pole order) at every point.
    pub fn generator_matrix(&self, s: usize) -> CodeMatrix {
        self.matrix_for(&self.curve.basis(s))
    }

    fn matrix_for(&self, basis: &[MonomialExponent]) -> CodeMatrix {
        let f = *self.curve.field();
        let mut m = CodeMatrix::zeros(f, basis.len(), self.points.len());
        // theta is shared by every row
        let thetas: Vec<FieldElement> = self.points.iter().map(|&p| self.curve.theta(p)).collect();
        for (row, mono) in basis.iter().enumerate() {
            for (col, (p, &t)) in self.points.iter().zip(&thetas).enumerate() {
                let v = f.mul(
                    f.mul(f.pow(p.alpha, mono.i as u64), f.pow(p.beta, mono.j as u64)),
                    f.pow(t, mono.k as u64),
                );
                m[(row, col)] = v;
            }
        }
        m
    }

    pub fn code(&self, s: usize) -> GhCode {
        let basis = self.curve.basis(s);
        let generator = self.matrix_for(&basis);
        let dimension = generator.rank();
        GhCode { r: self.r(), s, n: self.length(), basis, generator, dimension }
    }

    /// `dim GH_s`: the non-gap count `|S ∩ [0, s]|` for `0 < s < n`,
    /// otherwise the generator rank.
    pub fn dimension(&self, s: usize) -> usize {
        if s > 0 && s < self.length() {
            self.curve.weierstrass().count_up_to(s)
        } else {
            self.generator_matrix(s).rank()
        }
    }

    /// Goppa bound `d >= n - s`.
    pub fn goppa_bound(&self, s: usize) -> Result<usize, CodeError> {
        let n = self.length();
        if s >= n {
            return Err(CodeError::GoppaVacuous { s, n });
        }
        Ok(n - s)
    }

    /// `s'` with `GH_s^⊥ = GH_s'`.
    pub fn dual_parameter(&self, s: usize) -> Result<usize, CodeError> {
        let max = self.dual_sum();
        max.checked_sub(s).ok_or(CodeError::DualOutOfRange { s, max })
    }

    /// Self-orthogonality and self-duality from the dual parameter. A claimed
    /// self-orthogonal code is checked through `G * G^T = 0`.
    pub fn self_flags(&self, s: usize) -> Result<SelfFlags, CodeError> {
        let max = self.dual_sum();
        let self_orthogonal = 2 * s <= max;
        let self_dual = 2 * s == max;
        if self_orthogonal {
            let g = self.generator_matrix(s);
            if !g.mul_transpose(&g).expect("same shape").is_zero() {
                return Err(CodeError::OrthogonalityFailed { s });
            }
        }
        Ok(SelfFlags { self_orthogonal, self_dual })
    }

    /// The residue code `C_Ω(D, rho_m Q) = C_L(D, rho_m Q)^⊥`, built as
    /// `GH_(n + 2g - 2 - rho_m)`.
    pub fn omega_code(&self, m: usize) -> Result<GhCode, CodeError> {
        let rho = self.curve.weierstrass().rho(m)?;
        let s = self.dual_parameter(rho)?;
        Ok(self.code(s))
    }

    /// Feng-Rao lower bound on `d(GH_s)`, read through the dual: `GH_s` is
    /// `C_L(D, rho_m Q)^⊥` with `rho_m` the largest non-gap `<= n + 2g - 2 - s`.
    pub fn feng_rao_bound(&self, s: usize) -> Result<usize, CodeError> {
        let dual = self.dual_parameter(s)?;
        let ws = self.curve.weierstrass();
        let m = ws.count_up_to(dual);
        Ok(ws.feng_rao(m)?)
    }

    /// Best available designed distance: the larger of the Goppa and
    /// Feng-Rao bounds where they apply, at least 1.
    pub fn lower_bound(&self, s: usize) -> usize {
        let goppa = self.goppa_bound(s).unwrap_or(0);
        let fr = self.feng_rao_bound(s).unwrap_or(0);
        goppa.max(fr).max(1)
    }

    pub fn report(&self, s: usize) -> Result<CodeReport, CodeError> {
        let flags = self.self_flags(s)?;
        Ok(CodeReport {
            r: self.r(),
            n: self.length(),
            k: self.dimension(s),
            s,
            goppa_distance_lower_bound: self.goppa_bound(s).ok(),
            feng_rao_lower_bound: self.feng_rao_bound(s).ok(),
            dual_s: self.dual_parameter(s).ok(),
            self_orthogonal: flags.self_orthogonal,
            self_dual: flags.self_dual,
        })
    }
}

/// Hermitian code `H_s` of length 8 over GF(4).
pub fn hermitian_code(s: usize) -> Result<GhCode, CodeError> {
    Ok(CodeFamily::new(2)?.code(s))
}

/// Parameter summary of one code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeReport {
    pub r: u32,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub goppa_distance_lower_bound: Option<usize>,
    pub feng_rao_lower_bound: Option<usize>,
    pub dual_s: Option<usize>,
    pub self_orthogonal: bool,
    pub self_dual: bool,
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl CodeReport {
    fn fields(&self) -> [(&'static str, String); 9] {
        [
            ("r", self.r.to_string()),
            ("n", self.n.to_string()),
            ("k", self.k.to_string()),
            ("s", self.s.to_string()),
            ("goppa_bound", opt(self.goppa_distance_lower_bound)),
            ("feng_rao_bound", opt(self.feng_rao_lower_bound)),
            ("dual_s", opt(self.dual_s)),
            ("self_orthogonal", self.self_orthogonal.to_string()),
            ("self_dual", self.self_dual.to_string()),
        ]
    }

    pub fn to_csv(&self) -> String {
        let f = self.fields();
        let head: Vec<&str> = f.iter().map(|(k, _)| *k).collect();
        let vals: Vec<&str> = f.iter().map(|(_, v)| v.as_str()).collect();
        format!("{}\n{}\n", head.join(","), vals.join(","))
    }
}

impl fmt::Display for CodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.fields() {
            writeln!(f, "{k} = {v}")?;
        }
        Ok(())
    }
}

/// Outcome of the duality check for one `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualityCheck {
    pub l: usize,
    pub dual: usize,
    pub rank: usize,
    pub dual_rank: usize,
    pub orthogonal: bool,
    /// Kernel of `GHM_l` spans the same space as `GHM_dual`.
    pub kernel_matches: bool,
}

impl DualityCheck {
    pub fn passed(&self, n: usize) -> bool {
        self.orthogonal && self.rank + self.dual_rank == n && self.kernel_matches
    }
}

/// Checks `GHM_l * GHM_(n+2g-2-l)^T = 0`, the rank sum and the kernel for
/// every `0 <= l <= n + 2g - 2`.
pub fn duality_sweep(family: &CodeFamily) -> Vec<DualityCheck> {
    let max = family.dual_sum();
    let mats: Vec<CodeMatrix> = (0..=max).map(|s| family.generator_matrix(s)).collect();
    (0..=max)
        .map(|l| {
            let dual = max - l;
            let (a, b) = (&mats[l], &mats[dual]);
            let orthogonal = a.mul_transpose(b).expect("same length").is_zero();
            DualityCheck {
                l,
                dual,
                rank: a.rank(),
                dual_rank: b.rank(),
                orthogonal,
                kernel_matches: a.kernel_basis().same_row_space(b),
            }
        })
        .collect()
}
