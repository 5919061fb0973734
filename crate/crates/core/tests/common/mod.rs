#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use tropical_kummer::exactcore::{rat, Matrix2};
use tropical_kummer::{PrincipallyPolarizedSurface, Vec2};

/// Integer Gram matrices `[[a, b], [b, c]]` with `1 ≤ a, c ≤ 8`, `|b| ≤ a`
/// and positive determinant.
pub fn gram_strategy() -> impl Strategy<Value = [[i64; 2]; 2]> {
    (1i64..=8, 1i64..=8, -8i64..=8)
        .prop_filter("positive definite, |b| <= a", |&(a, c, b)| {
            b.abs() <= a && a * c - b * b > 0
        })
        .prop_map(|(a, c, b)| [[a, b], [b, c]])
}

pub fn surface_strategy() -> impl Strategy<Value = PrincipallyPolarizedSurface> {
    gram_strategy().prop_map(|g| PrincipallyPolarizedSurface::new(Matrix2::from_ints(g)).unwrap())
}

pub fn irreducible_strategy() -> impl Strategy<Value = PrincipallyPolarizedSurface> {
    surface_strategy().prop_filter("irreducible", |s| s.is_irreducible())
}

pub fn point_strategy() -> impl Strategy<Value = Vec2> {
    (-60i64..=60, 1i64..=13, -60i64..=60, 1i64..=13)
        .prop_map(|(a, b, c, d)| Vec2::new(rat(a, b), rat(c, d)))
}

pub fn lattice_strategy() -> impl Strategy<Value = Vec2> {
    (-6i64..=6, -6i64..=6).prop_map(|(a, b)| Vec2::from_ints(a, b))
}

pub fn random_gram<R: Rng>(rng: &mut R) -> [[i64; 2]; 2] {
    loop {
        let a = rng.random_range(1..=8i64);
        let c = rng.random_range(1..=8i64);
        let b = rng.random_range(-a..=a);
        if a * c - b * b > 0 {
            return [[a, b], [b, c]];
        }
    }
}

pub fn random_point<R: Rng>(rng: &mut R, span: i64) -> Vec2 {
    let d1 = rng.random_range(1..=17i64);
    let d2 = rng.random_range(1..=17i64);
    Vec2::new(
        rat(rng.random_range(-span * d1..=span * d1), d1),
        rat(rng.random_range(-span * d2..=span * d2), d2),
    )
}

pub fn surface(g: [[i64; 2]; 2]) -> PrincipallyPolarizedSurface {
    PrincipallyPolarizedSurface::new(Matrix2::from_ints(g)).unwrap()
}
