//! Tropical descent data and tropicalized nonarchimedean theta series.
//!
//! Only valuations are tracked. A series is a finite list of monomials
//! `χᵘ` with exponents `u ∈ M` in the basis `eᵢ = λ₁(f′ᵢ)` and the
//! valuation of their coefficients; its tropicalization at `v ∈ N_ℝ` is the
//! minimum of `⟨u, v⟩ + val`, with `⟨eᵢ, v⟩ = (G v)ᵢ`.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactcore::{gram_eval, half, int, rat, Matrix2, Rational, Vec2};
use crate::lattice::PrincipallyPolarizedSurface;
use crate::theta::ThetaCharacteristic;

/// A pair `(λ, γ)` with `λ : M′ → M` and `γ : M′ → ℝ` satisfying
/// `γ(u₁ + u₂) − γ(u₁) − γ(u₂) = ⟨λ(u₂), u₁⟩`.
///
/// `γ(u′) = ½⟨λ(u′), u′⟩ + ℓ(u′)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropicalDescentDatum {
    /// Matrix of `λ` from the `f′`-basis to the `e`-basis.
    pub lambda: Matrix2,
    /// `⟨eᵢ, f′ⱼ⟩`.
    pub pairing: Matrix2,
    /// Coefficients of the linear form `ℓ` on `f′₁, f′₂`.
    pub ell: Vec2,
}

impl TropicalDescentDatum {
    /// The datum attached to a symmetric bilinear form `B` on `M′` (Gram
    /// matrix in the `f′`-basis) and a linear form `ℓ`, so that
    /// `⟨λ(u₂), u₁⟩ = B(u₂, u₁)`.
    pub fn from_form(form: &Matrix2, ell: Vec2, pairing: &Matrix2) -> Result<Self> {
        if !form.is_symmetric() {
            return Err(Error::NonSymmetric(
                form.get(0, 1).to_string(),
                form.get(1, 0).to_string(),
            ));
        }
        let inv = pairing
            .transpose()
            .inverse()
            .ok_or_else(|| Error::Invariant("pairing is degenerate".into()))?;
        Ok(TropicalDescentDatum {
            lambda: inv.mul(form),
            pairing: pairing.clone(),
            ell,
        })
    }

    /// `⟨λ(a), b⟩`.
    pub fn lambda_pairing(&self, a: &Vec2, b: &Vec2) -> Rational {
        let la = self.lambda.mul_vec(a);
        let pb = self.pairing.mul_vec(b);
        &la.x * &pb.x + &la.y * &pb.y
    }

    pub fn gamma(&self, u: &Vec2) -> Rational {
        self.lambda_pairing(u, u) * half() + &self.ell.x * &u.x + &self.ell.y * &u.y
    }

    /// `γ(u₁ + u₂) − γ(u₁) − γ(u₂) − ⟨λ(u₂), u₁⟩`, zero for a descent datum.
    pub fn cocycle_defect(&self, u1: &Vec2, u2: &Vec2) -> Rational {
        self.gamma(&(u1 + u2)) - self.gamma(u1) - self.gamma(u2) - self.lambda_pairing(u2, u1)
    }

    /// `γ` is even exactly when `ℓ = 0`.
    pub fn is_even(&self) -> bool {
        self.ell.is_zero()
    }
}

/// The datum of `(2Q, 0)`: `λ = 2·id`, `γ(u′) = Q(u′, u′)`.
pub fn descent_datum(s: &PrincipallyPolarizedSurface) -> TropicalDescentDatum {
    TropicalDescentDatum {
        lambda: Matrix2::identity().scale(&int(2)),
        pairing: s.gram().clone(),
        ell: Vec2::zero(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTerm {
    /// Exponent in the `e`-basis.
    pub exponent: Vec2,
    pub valuation: Rational,
}

/// A truncated theta series, recorded by valuations only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalThetaSeries {
    pub characteristic: ThetaCharacteristic,
    pub cutoff: u64,
    pub support: Vec<SeriesTerm>,
    pub constant_shift: Rational,
    /// `⟨eᵢ, f′ⱼ⟩`, used to pair exponents with points.
    pub pairing: Matrix2,
}

impl FormalThetaSeries {
    /// Adds `c` to every coefficient valuation.
    pub fn shift_valuations(&self, c: &Rational) -> FormalThetaSeries {
        let mut out = self.clone();
        for t in &mut out.support {
            t.valuation += c;
        }
        out
    }

    pub fn exponents_distinct(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.support
            .iter()
            .all(|t| seen.insert((t.exponent.x.clone(), t.exponent.y.clone())))
    }
}

/// Terms `(b + 2u′, γ(u′) + ⟨b, u′⟩)` for `|u′ᵢ| ≤ cutoff`, where
/// `b = j₁u + j₂v` is taken in the reduced basis so that the series
/// tropicalizes to the theta function of the same characteristic.
pub fn build_series(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    cutoff: u64,
) -> FormalThetaSeries {
    let datum = descent_datum(s);
    let b = chi.lattice_vector(s.reduced_basis());
    let r = cutoff as i64;
    let mut support = Vec::with_capacity(((2 * r + 1) * (2 * r + 1)) as usize);
    for a1 in -r..=r {
        for a2 in -r..=r {
            let up = Vec2::from_ints(a1, a2);
            support.push(SeriesTerm {
                exponent: &b + &datum.lambda.mul_vec(&up),
                valuation: datum.gamma(&up) + s.q(&b, &up),
            });
        }
    }
    FormalThetaSeries {
        characteristic: chi,
        cutoff,
        support,
        constant_shift: s.norm(&b) * rat(1, 4),
        pairing: s.gram().clone(),
    }
}

pub fn tropicalize_series(series: &FormalThetaSeries, v: &Vec2) -> Result<Rational> {
    let gv = series.pairing.mul_vec(v);
    series
        .support
        .iter()
        .map(|t| &t.exponent.x * &gv.x + &t.exponent.y * &gv.y + &t.valuation)
        .min()
        .map(|m| m + &series.constant_shift)
        .ok_or(Error::EmptySupport)
}

/// A cutoff `R ≥ 1` such that for every `v` with `‖v‖∞ ≤ region_bound` the
/// minimizing `u′` lies in the box `|u′ᵢ| ≤ R`.
///
/// The term at `u′` equals `Q(u′ + s, u′ + s) − Q(s, s)` plus a constant,
/// with `s = v + ½b`. With `c ≥ ‖s‖∞`, the term at `u′ = 0` is at most
/// `λ_high c²` above that constant, while any `u′` outside the box has
/// `Q(u′ + s, u′ + s) ≥ λ_low (R + 1 − c)²`.
pub fn safe_cutoff(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    region_bound: &Rational,
) -> u64 {
    let bound = if region_bound.is_negative() {
        Rational::zero()
    } else {
        region_bound.clone()
    };
    let c = chi.half_period(s.reduced_basis()).sup_norm() + bound;
    let upper = s.lambda_high() * &c * &c;
    let lam = s.lambda_low();
    let mut r: u64 = 0;
    loop {
        let gap = int(r as i64 + 1) - &c;
        if gap.is_positive() && &lam * &gap * &gap > upper {
            break;
        }
        r += 1;
    }
    r.max(1)
}

/// `γ(u′)` for the datum of `(2Q, 0)`, i.e. `Q(u′, u′)`.
pub fn gamma(s: &PrincipallyPolarizedSurface, u: &Vec2) -> Rational {
    gram_eval(s.gram(), u, u)
}
