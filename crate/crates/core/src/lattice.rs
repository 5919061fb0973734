//! Principally polarized tropical abelian surfaces and the Voronoi geometry
//! of their period lattice.
//!
//! A surface `X = N_ℝ / M′` with principal polarization `Q` is stored as the
//! Gram matrix `G` of `Q` on a basis `f′₁, f′₂` of `M′`. All points are kept in
//! these coordinates, so `M′` is `ℤ²` and the Voronoi cell is taken with
//! respect to the norm `Q(x, x) = xᵀ G x`. The dual lattice `N` has basis the
//! columns of `G⁻¹`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactcore::{gram_eval, half, int, is_positive_definite, Matrix2, Rational, Vec2};

/// `(X, Q)` given by a symmetric positive-definite rational Gram matrix.
///
/// The Lagrange-reduced basis and the Voronoi relevant vectors are computed
/// once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipallyPolarizedSurface {
    gram: Matrix2,
    n_basis: Matrix2,
    reduced: ReducedBasis,
    relevant: Vec<RelevantVector>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct RelevantVector {
    vector: Vec2,
    /// `G r`, so that `Q(x, r)` is a dot product.
    dual: Vec2,
    norm: Rational,
}

/// A Lagrange-reduced basis `u, v` of `M′ = ℤ²` with `Q(u, v) ≤ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBasis {
    pub u: Vec2,
    pub v: Vec2,
    /// `(Q(u,u), Q(v,v), Q(u,v))`.
    pub norms: (Rational, Rational, Rational),
}

impl ReducedBasis {
    /// `w = −u − v`.
    pub fn w(&self) -> Vec2 {
        -(&self.u + &self.v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SurfaceClass {
    /// Hexagonal Voronoi cell.
    Irreducible,
    /// Rectangular Voronoi cell; the surface is a product of elliptic curves.
    ProductType,
}

impl SurfaceClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            SurfaceClass::Irreducible => "irreducible",
            SurfaceClass::ProductType => "product_type",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    Hexagon,
    Rectangle,
}

impl CellKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            CellKind::Hexagon => "hexagon",
            CellKind::Rectangle => "rectangle",
        }
    }
}

/// The Voronoi cell `V` of `M′` around the origin.
///
/// Facets are listed cyclically by their relevant vector. For a hexagon the
/// cycle is `w, −v, u, −w, v, −u` and vertex `mᵢ` is the intersection of
/// facets `i` and `i + 1` (1-based), so `m₁ = H_w ∩ H_{−v}`,
/// `m₂ = H_{−v} ∩ H_u`, and so on. For a rectangle the cycle is `−v, u, v, −u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoronoiCell {
    pub kind: CellKind,
    /// `u, v, w, −u, −v, −w` (hexagon) or `u, v, −u, −v` (rectangle).
    pub relevant_vectors: Vec<Vec2>,
    /// Relevant vectors in facet order; `vertices[i]` is the intersection of
    /// facets `i` and `i + 1` (indices mod the cycle length).
    pub facets: Vec<Vec2>,
    pub vertices: Vec<Vec2>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PieceKind {
    Sigma,
    Tau,
    Rho,
}

/// Label of a closed 2-cell: its kind and the index `1..=6` of the
/// quadrilateral `Qᵢ` containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellLabel {
    pub kind: PieceKind,
    pub quadrant: u8,
}

impl CellLabel {
    pub fn new(kind: PieceKind, quadrant: u8) -> Self {
        CellLabel { kind, quadrant }
    }

    /// The label of `−cell`: quadrant `i` is sent to `i ± 3`.
    pub fn antipode(&self) -> CellLabel {
        CellLabel::new(self.kind, (self.quadrant + 2) % 6 + 1)
    }
}

impl fmt::Display for CellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            PieceKind::Sigma => "sigma",
            PieceKind::Tau => "tau",
            PieceKind::Rho => "rho",
        };
        write!(f, "{}{}", k, self.quadrant)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub label: CellLabel,
    /// Vertices in cyclic order.
    pub vertices: Vec<Vec2>,
    /// Index `1..=6` of the containing quadrilateral.
    pub quadrilateral: u8,
}

impl Cell {
    /// Twice the signed area in `M′`-coordinates.
    pub fn signed_double_area(&self) -> Rational {
        signed_double_area(&self.vertices)
    }

    pub fn area(&self) -> Rational {
        self.signed_double_area().abs() * half()
    }

    /// Closed-polygon membership by exact half-plane tests.
    pub fn contains(&self, p: &Vec2) -> bool {
        convex_polygon_contains(&self.vertices, p)
    }
}

/// The subdivision of a hexagonal `V` into the six quadrilaterals `Qᵢ`, each
/// cut into a triangle `σ`, a parallelogram `τ` and a triangle `ρ`.
///
/// In `Qᵢ` with boundary rays through the facet midpoints `aᵢ` (before `mᵢ`)
/// and `bᵢ` (after `mᵢ`), put `nᵢ = aᵢ + bᵢ − mᵢ`. Then `σᵢ = [0, nᵢ, aᵢ]`,
/// `τᵢ = [aᵢ, mᵢ, bᵢ, nᵢ]`, `ρᵢ = [0, bᵢ, nᵢ]`. For `Q₁` this gives
/// `n₁ = ½(m₂ + m₆)` and `σ₁ = [0, n₁, ½w]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellComplex {
    pub cells: Vec<Cell>,
}

impl CellComplex {
    pub fn get(&self, label: CellLabel) -> Option<&Cell> {
        self.cells.iter().find(|c| c.label == label)
    }

    pub fn total_area(&self) -> Rational {
        self.cells.iter().map(Cell::area).sum()
    }
}

pub(crate) fn signed_double_area(poly: &[Vec2]) -> Rational {
    let n = poly.len();
    (0..n).map(|i| poly[i].det(&poly[(i + 1) % n])).sum()
}

/// Closed membership in a convex polygon given in cyclic order (either
/// orientation).
pub(crate) fn convex_polygon_contains(poly: &[Vec2], p: &Vec2) -> bool {
    let n = poly.len();
    let mut seen_pos = false;
    let mut seen_neg = false;
    for i in 0..n {
        let a = &poly[i];
        let b = &poly[(i + 1) % n];
        let side = (b - a).det(&(p - a));
        if side.is_positive() {
            seen_pos = true;
        } else if side.is_negative() {
            seen_neg = true;
        }
        if seen_pos && seen_neg {
            return false;
        }
    }
    true
}

impl PrincipallyPolarizedSurface {
    /// Builds the surface for a symmetric positive-definite Gram matrix.
    pub fn new(gram: Matrix2) -> Result<Self> {
        if !is_positive_definite(&gram)? {
            return Err(Error::NotPositiveDefinite);
        }
        let n_basis = gram.inverse().ok_or(Error::NotPositiveDefinite)?;
        let reduced = gauss_reduce(&gram);
        let vectors = relevant_vectors(&reduced);
        let relevant = vectors
            .into_iter()
            .map(|r| RelevantVector {
                dual: gram.mul_vec(&r),
                norm: gram_eval(&gram, &r, &r),
                vector: r,
            })
            .collect();
        Ok(PrincipallyPolarizedSurface {
            gram,
            n_basis,
            reduced,
            relevant,
        })
    }

    pub fn gram(&self) -> &Matrix2 {
        &self.gram
    }

    /// Columns are a basis of `N` in `M′`-coordinates; equals `G⁻¹`.
    pub fn n_basis(&self) -> &Matrix2 {
        &self.n_basis
    }

    pub fn q(&self, x: &Vec2, y: &Vec2) -> Rational {
        gram_eval(&self.gram, x, y)
    }

    pub fn norm(&self, x: &Vec2) -> Rational {
        gram_eval(&self.gram, x, x)
    }

    /// Coordinates of `x` with respect to the `N`-basis, i.e. `G x`.
    pub fn n_coordinates(&self, x: &Vec2) -> Vec2 {
        self.gram.mul_vec(x)
    }

    /// `det G / tr G`, a lower bound for the smallest eigenvalue of `G`, so
    /// that `Q(y, y) ≥ λ_low · ‖y‖∞²`.
    pub fn lambda_low(&self) -> Rational {
        self.gram.det() / self.gram.trace()
    }

    /// `G₁₁ + 2|G₁₂| + G₂₂`, so that `Q(y, y) ≤ λ_high · ‖y‖∞²`.
    pub fn lambda_high(&self) -> Rational {
        let r = &self.gram.rows;
        &r[0][0] + &r[1][1] + r[0][1].abs() * int(2)
    }

    /// Checks the tropical Riemann relation `Q(f′ᵢ, nⱼ) = δᵢⱼ ∈ ℤ`.
    pub fn riemann_relation_holds(&self) -> bool {
        let f = [Vec2::from_ints(1, 0), Vec2::from_ints(0, 1)];
        (0..2).all(|i| {
            (0..2).all(|j| {
                let val = self.q(&f[i], &self.n_basis.column(j));
                val.is_integer() && val == int(if i == j { 1 } else { 0 })
            })
        })
    }

    pub fn reduced_basis(&self) -> &ReducedBasis {
        &self.reduced
    }

    pub fn classify(&self) -> SurfaceClass {
        if self.reduced.norms.2.is_negative() {
            SurfaceClass::Irreducible
        } else {
            SurfaceClass::ProductType
        }
    }

    pub fn is_irreducible(&self) -> bool {
        self.classify() == SurfaceClass::Irreducible
    }

    pub(crate) fn require_irreducible(&self) -> Result<()> {
        if self.is_irreducible() {
            Ok(())
        } else {
            Err(Error::ProductType)
        }
    }

    pub fn relevant_vectors(&self) -> impl Iterator<Item = &Vec2> {
        self.relevant.iter().map(|r| &r.vector)
    }

    /// Closed membership in `V`: `2 Q(x, r) ≤ Q(r, r)` for every relevant `r`.
    pub fn in_voronoi(&self, x: &Vec2) -> bool {
        self.relevant
            .iter()
            .all(|r| dot(x, &r.dual) * int(2) <= r.norm)
    }

    /// Writes `x = x₀ + p` with `p ∈ ℤ²` and `x₀ ∈ V`.
    ///
    /// A rounding step in the reduced basis brings `x` near the cell, then
    /// relevant vectors are subtracted while they strictly decrease the
    /// `Q`-norm. The result lies in `V`, which is cut out by exactly these
    /// inequalities.
    pub fn reduce_point(&self, x: &Vec2) -> (Vec2, Vec2) {
        let basis = Matrix2::from_columns(&self.reduced.u, &self.reduced.v);
        let coords = basis.solve(x).expect("reduced basis is a basis of Z^2");
        let coords = Vec2::new(round_half_down(&coords.x), round_half_down(&coords.y));
        let mut p = basis.mul_vec(&coords);
        let mut y = x - &p;
        loop {
            let mut improved = false;
            for r in &self.relevant {
                if dot(&y, &r.dual) * int(2) > r.norm {
                    y -= &r.vector;
                    p += &r.vector;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        (y, p)
    }

    pub fn voronoi_cell(&self) -> VoronoiCell {
        let rb = &self.reduced;
        let (u, v, w) = (rb.u.clone(), rb.v.clone(), rb.w());
        let (kind, relevant_vectors, facets) = match self.classify() {
            SurfaceClass::Irreducible => (
                CellKind::Hexagon,
                vec![u.clone(), v.clone(), w.clone(), -&u, -&v, -&w],
                vec![w.clone(), -&v, u.clone(), -&w, v.clone(), -&u],
            ),
            SurfaceClass::ProductType => (
                CellKind::Rectangle,
                vec![u.clone(), v.clone(), -&u, -&v],
                vec![-&v, u.clone(), v.clone(), -&u],
            ),
        };
        let k = facets.len();
        let vertices = (0..k)
            .map(|i| self.facet_intersection(&facets[i], &facets[(i + 1) % k]))
            .collect();
        VoronoiCell {
            kind,
            relevant_vectors,
            facets,
            vertices,
        }
    }

    /// The point `m` with `Q(m, a) = ½Q(a, a)` and `Q(m, b) = ½Q(b, b)`.
    fn facet_intersection(&self, a: &Vec2, b: &Vec2) -> Vec2 {
        let ga = self.gram.mul_vec(a);
        let gb = self.gram.mul_vec(b);
        let system = Matrix2::new(ga.x, ga.y, gb.x, gb.y);
        let rhs = Vec2::new(self.norm(a) * half(), self.norm(b) * half());
        system
            .solve(&rhs)
            .expect("adjacent facets of the Voronoi cell are not parallel")
    }

    /// Splits a hexagonal Voronoi cell into 18 cells.
    pub fn subdivide(&self) -> Result<CellComplex> {
        self.require_irreducible()?;
        let cell = self.voronoi_cell();
        let mut cells = Vec::with_capacity(18);
        for i in 0..6 {
            let quadrant = (i + 1) as u8;
            let a = cell.facets[i].halve();
            let b = cell.facets[(i + 1) % 6].halve();
            let m = cell.vertices[i].clone();
            let n = &(&a + &b) - &m;
            let origin = Vec2::zero();
            cells.push(Cell {
                label: CellLabel::new(PieceKind::Sigma, quadrant),
                vertices: vec![origin.clone(), n.clone(), a.clone()],
                quadrilateral: quadrant,
            });
            cells.push(Cell {
                label: CellLabel::new(PieceKind::Tau, quadrant),
                vertices: vec![a.clone(), m, b.clone(), n.clone()],
                quadrilateral: quadrant,
            });
            cells.push(Cell {
                label: CellLabel::new(PieceKind::Rho, quadrant),
                vertices: vec![origin, b, n],
                quadrilateral: quadrant,
            });
        }
        Ok(CellComplex { cells })
    }
}

/// Nearest integer, ties toward zero, so that boundary points such as `(3/2, 0)`
/// are settled by the descent rather than overshooting.
fn round_half_down(c: &Rational) -> Rational {
    let r = c.round();
    if (&r - c).abs() == half() {
        c.trunc()
    } else {
        r
    }
}

fn dot(a: &Vec2, b: &Vec2) -> Rational {
    &a.x * &b.x + &a.y * &b.y
}

/// Lagrange–Gauss reduction followed by sign normalization.
///
/// The loop keeps `Q(u,u) ≤ Q(v,v)` and stops once `2|Q(u,v)| ≤ Q(u,u)`.
/// Afterwards `u` is given a positive leading coordinate and `v` is chosen
/// with `Q(u,v) ≤ 0` (positive leading coordinate when `Q(u,v) = 0`).
fn gauss_reduce(g: &Matrix2) -> ReducedBasis {
    let mut u = Vec2::from_ints(1, 0);
    let mut v = Vec2::from_ints(0, 1);
    loop {
        if gram_eval(g, &u, &u) > gram_eval(g, &v, &v) {
            std::mem::swap(&mut u, &mut v);
        }
        let nu = gram_eval(g, &u, &u);
        let uv = gram_eval(g, &u, &v);
        if uv.abs() * int(2) <= nu {
            break;
        }
        let mu = (uv / &nu).round();
        v = &v - &u.scale(&mu);
    }
    if u.leading_sign() < 0 {
        u = -u;
    }
    let uv = gram_eval(g, &u, &v);
    if uv.is_positive() || (uv.is_zero() && v.leading_sign() < 0) {
        v = -v;
    }
    let norms = (
        gram_eval(g, &u, &u),
        gram_eval(g, &v, &v),
        gram_eval(g, &u, &v),
    );
    ReducedBasis { u, v, norms }
}

fn relevant_vectors(rb: &ReducedBasis) -> Vec<Vec2> {
    let (u, v) = (&rb.u, &rb.v);
    if rb.norms.2.is_negative() {
        let w = rb.w();
        vec![u.clone(), v.clone(), w.clone(), -u, -v, -&w]
    } else {
        vec![u.clone(), v.clone(), -u, -v]
    }
}

pub fn make_surface(gram: Matrix2) -> Result<PrincipallyPolarizedSurface> {
    PrincipallyPolarizedSurface::new(gram)
}

pub fn lagrange_reduce(s: &PrincipallyPolarizedSurface) -> ReducedBasis {
    s.reduced_basis().clone()
}

pub fn classify(s: &PrincipallyPolarizedSurface) -> SurfaceClass {
    s.classify()
}

pub fn voronoi_cell(s: &PrincipallyPolarizedSurface) -> VoronoiCell {
    s.voronoi_cell()
}

pub fn reduce_point(s: &PrincipallyPolarizedSurface, x: &Vec2) -> (Vec2, Vec2) {
    s.reduce_point(x)
}

pub fn subdivide(s: &PrincipallyPolarizedSurface) -> Result<CellComplex> {
    s.subdivide()
}

impl VoronoiCell {
    /// Verifies the vertex/facet incidences and, for hexagons, the
    /// antipodality and perpendicular-bisector identities.
    pub fn check_invariants(&self, s: &PrincipallyPolarizedSurface) -> Result<()> {
        let k = self.facets.len();
        for (i, m) in self.vertices.iter().enumerate() {
            let mut tight = 0;
            for r in &self.relevant_vectors {
                let lhs = s.q(m, r);
                let bound = s.norm(r) * half();
                if lhs > bound {
                    return Err(Error::Invariant(format!(
                        "vertex {} = {} violates facet {}",
                        i + 1,
                        m,
                        r
                    )));
                }
                if lhs == bound {
                    tight += 1;
                }
            }
            let expected = 2;
            if tight != expected {
                return Err(Error::Invariant(format!(
                    "vertex {} = {} lies on {} facets",
                    i + 1,
                    m,
                    tight
                )));
            }
        }
        if self.kind == CellKind::Hexagon {
            for i in 0..3 {
                if !(&self.vertices[i] + &self.vertices[i + 3]).is_zero() {
                    return Err(Error::Invariant(format!("m{} + m{} != 0", i + 1, i + 4)));
                }
            }
            for i in 0..k {
                let (mi, mj) = (&self.vertices[(i + k - 1) % k], &self.vertices[i]);
                // The facet of q is bisected by the line ℝq at ½q, so q = mᵢ + mⱼ.
                if mi + mj != self.facets[i] {
                    return Err(Error::Invariant(format!(
                        "facet vector {} is not the sum of its vertices",
                        self.facets[i]
                    )));
                }
            }
            let (u, v, w) = (
                &self.relevant_vectors[0],
                &self.relevant_vectors[1],
                &self.relevant_vectors[2],
            );
            for (a, b) in [(u, v), (v, w), (w, u)] {
                if a.det(b).abs() != int(1) {
                    return Err(Error::Invariant(format!(
                        "{} and {} do not form a basis",
                        a, b
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn area(&self) -> Rational {
        signed_double_area(&self.vertices).abs() * half()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;

    fn surface(rows: [[i64; 2]; 2]) -> PrincipallyPolarizedSurface {
        make_surface(Matrix2::from_ints(rows)).unwrap()
    }

    fn v(x: Rational, y: Rational) -> Vec2 {
        Vec2::new(x, y)
    }

    #[test]
    fn make_surface_examples() {
        let s = surface([[2, -1], [-1, 2]]);
        assert_eq!(
            *s.n_basis(),
            Matrix2::new(rat(2, 3), rat(1, 3), rat(1, 3), rat(2, 3))
        );
        assert!(s.riemann_relation_holds());
        assert_eq!(*surface([[1, 0], [0, 1]]).n_basis(), Matrix2::identity());
        assert_eq!(
            make_surface(Matrix2::from_ints([[1, 2], [2, 1]])),
            Err(Error::NotPositiveDefinite)
        );
        assert!(matches!(
            make_surface(Matrix2::from_ints([[1, 2], [0, 1]])),
            Err(Error::NonSymmetric(_, _))
        ));
    }

    #[test]
    fn lagrange_reduce_examples() {
        let rb = lagrange_reduce(&surface([[2, -1], [-1, 2]]));
        assert_eq!(
            (rb.u.clone(), rb.v.clone()),
            (Vec2::from_ints(1, 0), Vec2::from_ints(0, 1))
        );
        assert_eq!(rb.norms, (int(2), int(2), int(-1)));

        let rb = lagrange_reduce(&surface([[1, 0], [0, 1]]));
        assert_eq!(
            (rb.u.clone(), rb.v.clone()),
            (Vec2::from_ints(1, 0), Vec2::from_ints(0, 1))
        );
        assert_eq!(rb.norms, (int(1), int(1), int(0)));

        let rb = lagrange_reduce(&surface([[5, 3], [3, 2]]));
        assert_eq!(rb.u, Vec2::from_ints(1, -2));
        assert_eq!(rb.v, Vec2::from_ints(1, -1));
        assert_eq!(rb.norms, (int(1), int(1), int(0)));
    }

    #[test]
    fn lagrange_reduce_matches_brute_force_minima() {
        // Successive minima of [[5,3],[3,2]] over |a|,|b| <= 10.
        let s = surface([[5, 3], [3, 2]]);
        let mut norms: Vec<Rational> = Vec::new();
        for a in -10..=10 {
            for b in -10..=10 {
                if (a, b) != (0, 0) {
                    norms.push(s.norm(&Vec2::from_ints(a, b)));
                }
            }
        }
        norms.sort();
        assert_eq!(norms[0], int(1));
        // ±(1,-2), ±(1,-1) all have norm 1.
        assert_eq!(norms[3], int(1));
        assert!(norms[4] > int(1));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify(&surface([[2, -1], [-1, 2]])),
            SurfaceClass::Irreducible
        );
        assert_eq!(
            classify(&surface([[1, 0], [0, 1]])),
            SurfaceClass::ProductType
        );
        assert_eq!(
            classify(&surface([[5, 3], [3, 2]])),
            SurfaceClass::ProductType
        );
        assert_eq!(
            classify(&surface([[2, 1], [1, 2]])),
            SurfaceClass::Irreducible
        );
    }

    #[test]
    fn voronoi_cell_symmetric_hexagon() {
        let s = surface([[2, -1], [-1, 2]]);
        let cell = voronoi_cell(&s);
        assert_eq!(cell.kind, CellKind::Hexagon);
        let expected = [
            v(rat(-1, 3), rat(-2, 3)),
            v(rat(1, 3), rat(-1, 3)),
            v(rat(2, 3), rat(1, 3)),
            v(rat(1, 3), rat(2, 3)),
            v(rat(-1, 3), rat(1, 3)),
            v(rat(-2, 3), rat(-1, 3)),
        ];
        assert_eq!(cell.vertices, expected);
        // m1 + m2 = -v
        assert_eq!(
            &cell.vertices[0] + &cell.vertices[1],
            Vec2::from_ints(0, -1)
        );
        cell.check_invariants(&s).unwrap();
        assert_eq!(cell.area(), int(1));
    }

    #[test]
    fn voronoi_cell_square() {
        let s = surface([[1, 0], [0, 1]]);
        let cell = voronoi_cell(&s);
        assert_eq!(cell.kind, CellKind::Rectangle);
        assert_eq!(cell.relevant_vectors.len(), 4);
        let mut verts = cell.vertices.clone();
        verts.sort();
        let mut expected = vec![
            v(rat(-1, 2), rat(-1, 2)),
            v(rat(-1, 2), rat(1, 2)),
            v(rat(1, 2), rat(-1, 2)),
            v(rat(1, 2), rat(1, 2)),
        ];
        expected.sort();
        assert_eq!(verts, expected);
        cell.check_invariants(&s).unwrap();
    }

    #[test]
    fn voronoi_cell_relevant_norms() {
        let s = surface([[2, -1], [-1, 3]]);
        let cell = voronoi_cell(&s);
        assert_eq!(cell.kind, CellKind::Hexagon);
        let norms: Vec<Rational> = cell.relevant_vectors[..3]
            .iter()
            .map(|r| s.norm(r))
            .collect();
        assert_eq!(norms, vec![int(2), int(3), int(3)]);
        cell.check_invariants(&s).unwrap();
    }

    #[test]
    fn reduce_point_examples() {
        let s = surface([[2, -1], [-1, 2]]);
        let (x0, p) = reduce_point(&s, &v(rat(3, 2), int(0)));
        assert_eq!(x0, v(rat(1, 2), int(0)));
        assert_eq!(p, Vec2::from_ints(1, 0));

        let (x0, p) = reduce_point(&s, &Vec2::zero());
        assert!(x0.is_zero() && p.is_zero());

        let x = v(rat(1, 10), rat(1, 10));
        for r in s.relevant_vectors() {
            assert!(s.norm(&(&x - r)) > s.norm(&x));
        }
        let (x0, p) = reduce_point(&s, &x);
        assert_eq!(x0, x);
        assert!(p.is_zero());
    }

    #[test]
    fn reduce_point_far_away() {
        let s = surface([[7, 3], [3, 2]]);
        let x = v(rat(100_001, 3), rat(-77_777, 7));
        let (x0, p) = reduce_point(&s, &x);
        assert!(p.is_integral());
        assert_eq!(&x0 + &p, x);
        assert!(s.in_voronoi(&x0));
    }

    #[test]
    fn subdivide_symmetric() {
        let s = surface([[2, -1], [-1, 2]]);
        let cx = subdivide(&s).unwrap();
        assert_eq!(cx.cells.len(), 18);
        let sigma = cx.get(CellLabel::new(PieceKind::Sigma, 1)).unwrap();
        assert_eq!(
            sigma.vertices,
            vec![
                Vec2::zero(),
                v(rat(-1, 6), rat(-1, 3)),
                v(rat(-1, 2), rat(-1, 2))
            ]
        );
        let cell = s.voronoi_cell();
        let n = (&cell.vertices[1] + &cell.vertices[5]).halve();
        assert_eq!(sigma.vertices[1], n);
        assert_eq!(cx.total_area(), int(1));
        assert_eq!(
            subdivide(&surface([[1, 0], [0, 1]])),
            Err(Error::ProductType)
        );
    }

    #[test]
    fn antipodal_labels() {
        let l = CellLabel::new(PieceKind::Tau, 1);
        assert_eq!(l.antipode().quadrant, 4);
        assert_eq!(CellLabel::new(PieceKind::Rho, 6).antipode().quadrant, 3);
        assert_eq!(l.antipode().antipode(), l);
    }
}
