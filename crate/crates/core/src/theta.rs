//! Tropical theta functions of second order.
//!
//! For a characteristic `χ = (j₁, j₂)` and the reduced basis `u, v`,
//!
//! ```text
//! ϑ[χ](x) = min_{a ∈ ℤ²} Q(a + s, a + s) − Q(x, x),   s = x + ½(j₁u + j₂v),
//! ```
//!
//! the theta function with respect to `(2Q, 0)` attached to
//! `b = λ(j₁u + j₂v)`. The minimum is found by moving `s` into the Voronoi
//! cell, where the minimizing lattice point is the origin.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactcore::{int, rat, Rational, Vec2};
use crate::lattice::{PrincipallyPolarizedSurface, ReducedBasis};

/// Index `(j₁, j₂) ∈ {0,1}²` of one of the four second-order theta functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaCharacteristic {
    j1: u8,
    j2: u8,
}

impl ThetaCharacteristic {
    pub const B0: ThetaCharacteristic = ThetaCharacteristic { j1: 0, j2: 0 };
    pub const B1: ThetaCharacteristic = ThetaCharacteristic { j1: 1, j2: 0 };
    pub const B2: ThetaCharacteristic = ThetaCharacteristic { j1: 0, j2: 1 };
    pub const B3: ThetaCharacteristic = ThetaCharacteristic { j1: 1, j2: 1 };

    /// `b₀, b₁, b₂, b₃` in coordinate order of `TP³`.
    pub const ALL: [ThetaCharacteristic; 4] = [Self::B0, Self::B1, Self::B2, Self::B3];

    pub fn new(j1: u8, j2: u8) -> Option<Self> {
        (j1 <= 1 && j2 <= 1).then_some(ThetaCharacteristic { j1, j2 })
    }

    pub fn j1(&self) -> u8 {
        self.j1
    }

    pub fn j2(&self) -> u8 {
        self.j2
    }

    /// Position `0..=3` in [`ThetaCharacteristic::ALL`].
    pub fn index(&self) -> usize {
        (self.j1 + 2 * self.j2) as usize
    }

    /// `j₁u + j₂v`, the lattice vector with `b = λ(j₁u + j₂v)`.
    pub fn lattice_vector(&self, rb: &ReducedBasis) -> Vec2 {
        let mut out = Vec2::zero();
        if self.j1 == 1 {
            out += &rb.u;
        }
        if self.j2 == 1 {
            out += &rb.v;
        }
        out
    }

    /// `½(j₁u + j₂v)`.
    pub fn half_period(&self, rb: &ReducedBasis) -> Vec2 {
        self.lattice_vector(rb).halve()
    }
}

impl fmt::Display for ThetaCharacteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.j1, self.j2)
    }
}

impl FromStr for ThetaCharacteristic {
    type Err = String;

    /// Parses `"00"`, `"10"`, `"01"` or `"11"`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let b = s.trim().as_bytes();
        let bit = |c: u8| match c {
            b'0' => Some(0),
            b'1' => Some(1),
            _ => None,
        };
        match b {
            [a, c] => bit(*a)
                .zip(bit(*c))
                .map(|(j1, j2)| ThetaCharacteristic { j1, j2 })
                .ok_or_else(|| format!("invalid characteristic {s:?}")),
            _ => Err(format!("invalid characteristic {s:?}")),
        }
    }
}

/// A theta value together with a lattice point `a` attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaValue {
    pub value: Rational,
    pub minimizer: Vec2,
}

impl ThetaValue {
    /// Recomputes `Q(a + s, a + s) − Q(x, x)` at the reported minimizer.
    pub fn reproduces(
        &self,
        s: &PrincipallyPolarizedSurface,
        chi: ThetaCharacteristic,
        x: &Vec2,
    ) -> bool {
        let shifted = x + &chi.half_period(s.reduced_basis()) + &self.minimizer;
        s.norm(&shifted) - s.norm(x) == self.value
    }
}

pub fn theta_eval(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
) -> ThetaValue {
    let shifted = x + &chi.half_period(s.reduced_basis());
    let (in_cell, p) = s.reduce_point(&shifted);
    ThetaValue {
        value: s.norm(&in_cell) - s.norm(x),
        minimizer: -p,
    }
}

/// Direct enumeration over the box `|aᵢ| ≤ radius`, with a certificate that
/// no lattice point outside the box does better.
///
/// Outside the box `‖a + s‖∞ ≥ radius + 1 − ‖s‖∞`, and
/// `Q(y, y) ≥ λ_low ‖y‖∞²` with `λ_low = det G / tr G`.
pub fn theta_eval_bruteforce(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
    radius: u64,
) -> Result<ThetaValue> {
    let shift = x + &chi.half_period(s.reduced_basis());
    let r = radius as i64;
    let mut best: Option<(Rational, Vec2)> = None;
    for a1 in -r..=r {
        for a2 in -r..=r {
            let a = Vec2::from_ints(a1, a2);
            let val = s.norm(&(&a + &shift));
            if best.as_ref().is_none_or(|(b, _)| val < *b) {
                best = Some((val, a));
            }
        }
    }
    let (min, minimizer) = best.expect("box is nonempty");
    let gap = int(r + 1) - shift.sup_norm();
    if !gap.is_positive() || s.lambda_low() * &gap * &gap <= min {
        return Err(Error::RadiusTooSmall { radius });
    }
    Ok(ThetaValue {
        value: min - s.norm(x),
        minimizer,
    })
}

/// Smallest box radius for which [`theta_eval_bruteforce`] certifies at `x`.
///
/// Uses the rounding of `s` (not the Voronoi descent) for the upper bound
/// on the minimum, so the oracle stays independent of [`theta_eval`].
pub fn certified_radius(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
) -> u64 {
    let shift = x + &chi.half_period(s.reduced_basis());
    let rounded = shift.round();
    let upper = s.norm(&(&shift - &rounded));
    let c = shift.sup_norm();
    let lam = s.lambda_low();
    let mut r = rounded.sup_norm().to_integer();
    loop {
        let gap = Rational::from_integer(r.clone() + 1) - &c;
        if gap.is_positive() && &lam * &gap * &gap > upper {
            break;
        }
        r += 1;
    }
    u64::try_from(r).expect("radius fits in u64")
}

/// `(θ₁₀, θ₀₁, θ₁₁) = (¼Q(u,u), ¼Q(v,v), ¼Q(w,w))`.
pub fn theta_constants(s: &PrincipallyPolarizedSurface) -> Result<(Rational, Rational, Rational)> {
    s.require_irreducible()?;
    let rb = s.reduced_basis();
    let quarter = rat(1, 4);
    Ok((
        &rb.norms.0 * &quarter,
        &rb.norms.1 * &quarter,
        s.norm(&rb.w()) * &quarter,
    ))
}

/// All four theta values at `x`, in the order `b₀, b₁, b₂, b₃`.
pub fn theta_all(s: &PrincipallyPolarizedSurface, x: &Vec2) -> [Rational; 4] {
    ThetaCharacteristic::ALL.map(|chi| theta_eval(s, chi, x).value)
}

/// `ϑ[χ](x + u′) − ϑ[χ](x) + 2Q(x, u′) + Q(u′, u′)`, zero by quasi-periodicity.
pub fn quasi_periodicity_defect(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
    period: &Vec2,
) -> Rational {
    let lhs = theta_eval(s, chi, &(x + period)).value;
    let rhs = theta_eval(s, chi, x).value - s.q(x, period) * int(2) - s.norm(period);
    lhs - rhs
}

/// Checks `ϑ[χ](x) = ϑ[00](x ± ½q) ± Q(x, q) + ¼Q(q, q)` for the relevant
/// vector `q` attached to `χ` (`u`, `v`, or `−w` for `11`), both signs.
pub fn translation_identity_holds(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
) -> bool {
    if chi == ThetaCharacteristic::B0 {
        return true;
    }
    let q = chi.lattice_vector(s.reduced_basis());
    let target = theta_eval(s, chi, x).value;
    let quarter = s.norm(&q) * rat(1, 4);
    let half_q = q.halve();
    let plus = theta_eval(s, ThetaCharacteristic::B0, &(x + &half_q)).value + s.q(x, &q) + &quarter;
    let minus =
        theta_eval(s, ThetaCharacteristic::B0, &(x - &half_q)).value - s.q(x, &q) + &quarter;
    plus == target && minus == target
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Matrix2;
    use crate::lattice::make_surface;
    use num_traits::Zero;

    fn surface(rows: [[i64; 2]; 2]) -> PrincipallyPolarizedSurface {
        make_surface(Matrix2::from_ints(rows)).unwrap()
    }

    fn hex() -> PrincipallyPolarizedSurface {
        surface([[2, -1], [-1, 2]])
    }

    #[test]
    fn characteristic_parsing_and_index() {
        assert_eq!(
            "10".parse::<ThetaCharacteristic>().unwrap(),
            ThetaCharacteristic::B1
        );
        assert!("12".parse::<ThetaCharacteristic>().is_err());
        assert!("1".parse::<ThetaCharacteristic>().is_err());
        for (i, chi) in ThetaCharacteristic::ALL.iter().enumerate() {
            assert_eq!(chi.index(), i);
        }
        assert!(ThetaCharacteristic::new(2, 0).is_none());
    }

    #[test]
    fn theta_eval_examples() {
        let s = hex();
        let x = Vec2::new(rat(1, 10), rat(1, 10));
        assert_eq!(theta_eval(&s, ThetaCharacteristic::B0, &x).value, int(0));
        assert_eq!(
            theta_eval(&s, ThetaCharacteristic::B1, &Vec2::zero()).value,
            rat(1, 2)
        );
        let half_u = Vec2::new(rat(1, 2), int(0));
        assert_eq!(
            theta_eval(&s, ThetaCharacteristic::B1, &half_u).value,
            rat(-1, 2)
        );
        for chi in ThetaCharacteristic::ALL {
            let tv = theta_eval(&s, chi, &x);
            assert!(tv.reproduces(&s, chi, &x));
        }
    }

    #[test]
    fn bruteforce_examples() {
        let s = hex();
        let cases = [
            (
                ThetaCharacteristic::B0,
                Vec2::new(rat(1, 10), rat(1, 10)),
                int(0),
            ),
            (ThetaCharacteristic::B1, Vec2::zero(), rat(1, 2)),
            (
                ThetaCharacteristic::B1,
                Vec2::new(rat(1, 2), int(0)),
                rat(-1, 2),
            ),
        ];
        for (chi, x, expected) in cases {
            assert_eq!(
                theta_eval_bruteforce(&s, chi, &x, 5).unwrap().value,
                expected
            );
        }
        assert_eq!(
            theta_eval_bruteforce(&s, ThetaCharacteristic::B0, &Vec2::zero(), 1)
                .unwrap()
                .value,
            int(0)
        );
        let far = Vec2::from_ints(10, 10);
        assert_eq!(
            theta_eval_bruteforce(&s, ThetaCharacteristic::B0, &far, 0),
            Err(Error::RadiusTooSmall { radius: 0 })
        );
    }

    #[test]
    fn certified_radius_certifies() {
        let s = surface([[9, 4], [4, 2]]);
        let x = Vec2::new(rat(-37, 8), rat(19, 5));
        for chi in ThetaCharacteristic::ALL {
            let r = certified_radius(&s, chi, &x);
            let brute = theta_eval_bruteforce(&s, chi, &x, r).unwrap();
            assert_eq!(brute.value, theta_eval(&s, chi, &x).value);
        }
    }

    #[test]
    fn theta_constants_examples() {
        assert_eq!(
            theta_constants(&hex()).unwrap(),
            (rat(1, 2), rat(1, 2), rat(1, 2))
        );
        assert_eq!(
            theta_constants(&surface([[2, -1], [-1, 3]])).unwrap(),
            (rat(1, 2), rat(3, 4), rat(3, 4))
        );
        assert_eq!(
            theta_constants(&surface([[4, -2], [-2, 4]])).unwrap(),
            (int(1), int(1), int(1))
        );
        assert_eq!(
            theta_constants(&surface([[1, 0], [0, 1]])),
            Err(Error::ProductType)
        );
    }

    #[test]
    fn theta_constants_agree_with_evaluation_at_origin() {
        let s = surface([[2, -1], [-1, 3]]);
        let (t10, t01, t11) = theta_constants(&s).unwrap();
        let vals = theta_all(&s, &Vec2::zero());
        assert_eq!(vals, [int(0), t10, t01, t11]);
    }

    #[test]
    fn identities_on_a_few_points() {
        let s = surface([[3, -1], [-1, 2]]);
        let pts = [
            Vec2::new(rat(1, 3), rat(-2, 7)),
            Vec2::new(rat(-5, 2), rat(9, 4)),
            Vec2::new(rat(0, 1), rat(1, 2)),
        ];
        for x in &pts {
            for chi in ThetaCharacteristic::ALL {
                assert_eq!(theta_eval(&s, chi, x).value, theta_eval(&s, chi, &-x).value);
                assert!(quasi_periodicity_defect(&s, chi, x, &Vec2::from_ints(2, -3)).is_zero());
                assert!(translation_identity_holds(&s, chi, x));
            }
        }
    }
}
