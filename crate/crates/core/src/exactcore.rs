//! Exact rational and integer linear algebra in dimension two.
//!
//! Every value in the crate is a [`Rational`] (an arbitrary-precision
//! fraction kept in lowest terms). Points of `N_ℝ` and lattice vectors of
//! `M′` are [`Vec2`] in the coordinates of a fixed basis `f′₁, f′₂` of `M′`;
//! the polarization is carried by its Gram matrix in that basis.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `"p/q"` or `"n"` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let parsed: std::result::Result<Rational, _> = t.parse();
    match parsed {
        Ok(r) => Ok(r),
        Err(_) => Err(Error::InvalidRational(s.to_string())),
    }
}

/// Serializes as `"p/q"`, or `"n"` for integers.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// A vector in `ℝ²` with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: Rational,
    pub y: Rational,
}

impl Vec2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vec2::new(int(x), int(y))
    }

    pub fn zero() -> Self {
        Vec2::new(Rational::zero(), Rational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    pub fn halve(&self) -> Vec2 {
        self.scale(&half())
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// Componentwise rounding to the nearest integer (halves away from zero).
    pub fn round(&self) -> Vec2 {
        Vec2::new(self.x.round(), self.y.round())
    }

    pub fn sup_norm(&self) -> Rational {
        let (a, b) = (self.x.abs(), self.y.abs());
        if a >= b {
            a
        } else {
            b
        }
    }

    /// Determinant of the 2×2 matrix with columns `self`, `other`.
    pub fn det(&self, other: &Vec2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    /// `+1` if the first nonzero coordinate is positive, `-1` if negative,
    /// `0` for the zero vector.
    pub fn leading_sign(&self) -> i32 {
        if !self.x.is_zero() {
            if self.x.is_positive() {
                1
            } else {
                -1
            }
        } else if self.y.is_zero() {
            0
        } else if self.y.is_positive() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

macro_rules! vec_binop {
    ($ty:ident, $tr:ident, $m:ident, $op:tt, $($field:ident),+) => {
        impl<'a> $tr<&'a $ty> for &'a $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                $ty { $($field: &self.$field $op &rhs.$field),+ }
            }
        }
        impl $tr<$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $ty { $($field: self.$field $op rhs.$field),+ }
            }
        }
        impl<'a> $tr<&'a $ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &'a $ty) -> $ty {
                $ty { $($field: self.$field $op &rhs.$field),+ }
            }
        }
    };
}

vec_binop!(Vec2, Add, add, +, x, y);
vec_binop!(Vec2, Sub, sub, -, x, y);

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl AddAssign<&Vec2> for Vec2 {
    fn add_assign(&mut self, rhs: &Vec2) {
        self.x += &rhs.x;
        self.y += &rhs.y;
    }
}

impl SubAssign<&Vec2> for Vec2 {
    fn sub_assign(&mut self, rhs: &Vec2) {
        self.x -= &rhs.x;
        self.y -= &rhs.y;
    }
}

/// A point of `ℝ³`, read as `(0 : x : y : z)` in tropical projective space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Vec3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Vec3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vec3::new(Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn components(&self) -> [&Rational; 3] {
        [&self.x, &self.y, &self.z]
    }

    pub fn scale(&self, s: &Rational) -> Vec3 {
        Vec3::new(&self.x * s, &self.y * s, &self.z * s)
    }

    pub fn dot(&self, other: &Vec3) -> Rational {
        &self.x * &other.x + &self.y * &other.y + &self.z * &other.z
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }
}

impl fmt::Display for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

vec_binop!(Vec3, Add, add, +, x, y, z);
vec_binop!(Vec3, Sub, sub, -, x, y, z);

impl Neg for Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-self.x, -self.y, -self.z)
    }
}

impl Neg for &Vec3 {
    type Output = Vec3;
    fn neg(self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }
}

/// A 2×2 rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2 {
    pub rows: [[Rational; 2]; 2],
}

impl Matrix2 {
    pub fn new(a11: Rational, a12: Rational, a21: Rational, a22: Rational) -> Self {
        Matrix2 {
            rows: [[a11, a12], [a21, a22]],
        }
    }

    pub fn from_ints(rows: [[i64; 2]; 2]) -> Self {
        Matrix2::new(
            int(rows[0][0]),
            int(rows[0][1]),
            int(rows[1][0]),
            int(rows[1][1]),
        )
    }

    pub fn identity() -> Self {
        Matrix2::from_ints([[1, 0], [0, 1]])
    }

    /// Matrix whose columns are `c1`, `c2`.
    pub fn from_columns(c1: &Vec2, c2: &Vec2) -> Self {
        Matrix2::new(c1.x.clone(), c2.x.clone(), c1.y.clone(), c2.y.clone())
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec2 {
        Vec2::new(self.rows[0][j].clone(), self.rows[1][j].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows[0][1] == self.rows[1][0]
    }

    pub fn det(&self) -> Rational {
        &self.rows[0][0] * &self.rows[1][1] - &self.rows[0][1] * &self.rows[1][0]
    }

    pub fn trace(&self) -> Rational {
        &self.rows[0][0] + &self.rows[1][1]
    }

    pub fn transpose(&self) -> Matrix2 {
        let r = &self.rows;
        Matrix2::new(
            r[0][0].clone(),
            r[1][0].clone(),
            r[0][1].clone(),
            r[1][1].clone(),
        )
    }

    pub fn inverse(&self) -> Option<Matrix2> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        let r = &self.rows;
        Some(Matrix2::new(
            &r[1][1] / &d,
            -&r[0][1] / &d,
            -&r[1][0] / &d,
            &r[0][0] / &d,
        ))
    }

    pub fn mul_vec(&self, v: &Vec2) -> Vec2 {
        let r = &self.rows;
        Vec2::new(
            &r[0][0] * &v.x + &r[0][1] * &v.y,
            &r[1][0] * &v.x + &r[1][1] * &v.y,
        )
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        let a = &self.rows;
        let b = &o.rows;
        let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
        Matrix2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn scale(&self, s: &Rational) -> Matrix2 {
        let r = &self.rows;
        Matrix2::new(&r[0][0] * s, &r[0][1] * s, &r[1][0] * s, &r[1][1] * s)
    }

    /// Solves `self · x = rhs`; `None` if singular.
    pub fn solve(&self, rhs: &Vec2) -> Option<Vec2> {
        self.inverse().map(|inv| inv.mul_vec(rhs))
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.rows;
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            r[0][0], r[0][1], r[1][0], r[1][1]
        )
    }
}

fn require_symmetric(g: &Matrix2) -> Result<()> {
    if g.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NonSymmetric(
            g.rows[0][1].to_string(),
            g.rows[1][0].to_string(),
        ))
    }
}

/// Sylvester's criterion: `G₁₁ > 0` and `det G > 0`.
pub fn is_positive_definite(g: &Matrix2) -> Result<bool> {
    require_symmetric(g)?;
    Ok(g.rows[0][0].is_positive() && g.det().is_positive())
}

/// `xᵀ G y`.
pub fn gram_eval(g: &Matrix2, x: &Vec2, y: &Vec2) -> Rational {
    let r = &g.rows;
    &x.x * (&r[0][0] * &y.x + &r[0][1] * &y.y) + &x.y * (&r[1][0] * &y.x + &r[1][1] * &y.y)
}

/// An `m × 2` integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub rows: Vec<[BigInt; 2]>,
}

impl IntMatrix {
    pub fn new(rows: Vec<[BigInt; 2]>) -> Self {
        IntMatrix { rows }
    }

    pub fn from_i64(rows: &[[i64; 2]]) -> Self {
        IntMatrix::new(
            rows.iter()
                .map(|r| [BigInt::from(r[0]), BigInt::from(r[1])])
                .collect(),
        )
    }

    /// Converts a rational matrix, returning `None` if any entry is not an integer.
    pub fn from_rational_rows(rows: &[[Rational; 2]]) -> Option<Self> {
        rows.iter()
            .map(|r| {
                if r[0].is_integer() && r[1].is_integer() {
                    Some([r[0].to_integer(), r[1].to_integer()])
                } else {
                    None
                }
            })
            .collect::<Option<Vec<_>>>()
            .map(IntMatrix::new)
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// All 2×2 minors, taken over row pairs `i < j`.
    pub fn minors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            for j in i + 1..self.rows.len() {
                let (a, b) = (&self.rows[i], &self.rows[j]);
                out.push(&a[0] * &b[1] - &a[1] * &b[0]);
            }
        }
        out
    }

    /// Rank 2 with torsion-free cokernel: the gcd of the 2×2 minors is 1.
    pub fn is_unimodular(&self) -> bool {
        let g = self
            .minors()
            .iter()
            .fold(BigInt::zero(), |acc, m| acc.gcd(m));
        g.is_one()
    }

    /// `self · m` for a 2×2 integer matrix `m`.
    pub fn mul_right(&self, m: &[[BigInt; 2]; 2]) -> IntMatrix {
        IntMatrix::new(
            self.rows
                .iter()
                .map(|r| {
                    [
                        &r[0] * &m[0][0] + &r[1] * &m[1][0],
                        &r[0] * &m[0][1] + &r[1] * &m[1][1],
                    ]
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> IntMatrix {
        IntMatrix::new(self.rows.iter().map(|r| [-&r[0], -&r[1]]).collect())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[{}, {}]", r[0], r[1])?;
        }
        write!(f, "]")
    }
}

pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_unimodular()
}
