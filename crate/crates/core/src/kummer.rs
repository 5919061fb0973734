//! The map `ψ : X → TP³` and its image, the tropical Kummer quartic.
//!
//! Points of `TP³` with finite coordinates are written in the chart
//! `(x₁, x₂, x₃) ↦ (0 : x₁ : x₂ : x₃)`, so
//! `ψ(x) = (ϑ₁₀(x) − ϑ₀₀(x), ϑ₀₁(x) − ϑ₀₀(x), ϑ₁₁(x) − ϑ₀₀(x))`.
//!
//! For an irreducible surface the image is a parallelepiped with vertices
//! the orbit of `τ₀ = (θ₁₀, θ₀₁, θ₁₁)` under `V₄ × ⟨ι⟩`, where `V₄` permutes
//! the four homogeneous coordinates and `ι` negates them.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactcore::{int, IntMatrix, Matrix2, Rational, Vec2, Vec3};
use crate::lattice::{
    convex_polygon_contains, Cell, CellLabel, PieceKind, PrincipallyPolarizedSurface,
};
use crate::theta::{theta_all, theta_constants, ThetaCharacteristic};

pub fn psi_eval(s: &PrincipallyPolarizedSurface, x: &Vec2) -> Vec3 {
    let [t00, t10, t01, t11] = theta_all(s, x);
    Vec3::new(t10 - &t00, t01 - &t00, t11 - t00)
}

/// Elements of the Klein four-group acting on the coordinates `0, 1, 2, 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum V4 {
    Identity,
    /// `(0 1)(2 3)`
    Swap01,
    /// `(0 2)(1 3)`
    Swap02,
    /// `(0 3)(1 2)`
    Swap03,
}

impl V4 {
    pub const ALL: [V4; 4] = [V4::Identity, V4::Swap01, V4::Swap02, V4::Swap03];

    /// The image of coordinate `i`.
    pub fn apply(&self, i: usize) -> usize {
        match self {
            V4::Identity => i,
            V4::Swap01 => i ^ 1,
            V4::Swap02 => i ^ 2,
            V4::Swap03 => i ^ 3,
        }
    }

    pub fn index(&self) -> usize {
        match self {
            V4::Identity => 0,
            V4::Swap01 => 1,
            V4::Swap02 => 2,
            V4::Swap03 => 3,
        }
    }
}

/// An element of `V₄ × ⟨ι⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub perm: V4,
    pub iota: bool,
}

impl GroupElement {
    pub fn new(perm: V4, iota: bool) -> Self {
        GroupElement { perm, iota }
    }

    pub fn all() -> impl Iterator<Item = GroupElement> {
        [false, true].into_iter().flat_map(|iota| {
            V4::ALL
                .into_iter()
                .map(move |perm| GroupElement { perm, iota })
        })
    }
}

/// Acts on homogeneous coordinates and returns the result in the chart.
pub fn g_action(g: GroupElement, p: &[Rational; 4]) -> Vec3 {
    let mut q: [Rational; 4] = Default::default();
    for (i, c) in p.iter().enumerate() {
        q[g.perm.apply(i)] = if g.iota { -c } else { c.clone() };
    }
    Vec3::new(&q[1] - &q[0], &q[2] - &q[0], &q[3] - &q[0])
}

/// Homogeneous coordinates `(0 : x : y : z)` of a chart point.
pub fn homogenize(p: &Vec3) -> [Rational; 4] {
    [Rational::zero(), p.x.clone(), p.y.clone(), p.z.clone()]
}

/// `τᵢ` (`tilde = false`) or `τ̃ᵢ = ι·τᵢ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexLabel {
    pub index: u8,
    pub tilde: bool,
}

impl VertexLabel {
    pub const fn tau(index: u8) -> Self {
        VertexLabel {
            index,
            tilde: false,
        }
    }

    pub const fn tau_tilde(index: u8) -> Self {
        VertexLabel { index, tilde: true }
    }

    pub fn negated(&self) -> Self {
        VertexLabel {
            index: self.index,
            tilde: !self.tilde,
        }
    }

    /// Position in [`KummerQuartic::vertices`].
    pub fn slot(&self) -> usize {
        self.index as usize + if self.tilde { 4 } else { 0 }
    }

    pub fn group_element(&self) -> GroupElement {
        GroupElement::new(V4::ALL[self.index as usize], self.tilde)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tilde {
            write!(f, "tau~{}", self.index)
        } else {
            write!(f, "tau{}", self.index)
        }
    }
}

/// A face `n · T = offset` of the parallelepiped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacePlane {
    pub normal: [i64; 3],
    pub offset: Rational,
    /// The four corners in cyclic order.
    pub vertex_ids: [VertexLabel; 4],
    /// Cells of the subdivision of `V` whose image is this face.
    pub source_cells: Vec<CellLabel>,
}

impl FacePlane {
    pub fn normal_vec(&self) -> Vec3 {
        Vec3::new(
            int(self.normal[0]),
            int(self.normal[1]),
            int(self.normal[2]),
        )
    }

    pub fn evaluate(&self, p: &Vec3) -> Rational {
        self.normal_vec().dot(p)
    }

    pub fn on_plane(&self, p: &Vec3) -> bool {
        self.evaluate(p) == self.offset
    }
}

impl fmt::Display for FacePlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["T1", "T2", "T3"];
        let mut lhs = String::new();
        for (i, c) in self.normal.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if i > 0 {
                "+"
            } else {
                ""
            };
            lhs.push_str(sign);
            lhs.push_str(names[i]);
        }
        write!(f, "{} = {}", lhs, self.offset)
    }
}

/// `ψ(Y)` for an irreducible surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerQuartic {
    /// `τ₀, τ₁, τ₂, τ₃, τ̃₀, τ̃₁, τ̃₂, τ̃₃`.
    pub vertices: [Vec3; 8],
    pub faces: Vec<FacePlane>,
    pub theta_constants: (Rational, Rational, Rational),
}

type FaceRow = ([i64; 3], Rational, [VertexLabel; 4], Vec<CellLabel>);

fn table_faces(a: &Rational, b: &Rational, c: &Rational) -> Vec<FacePlane> {
    use PieceKind::{Rho, Sigma, Tau};
    let t = VertexLabel::tau;
    let tt = VertexLabel::tau_tilde;
    let cells = |list: &[(PieceKind, u8)]| -> Vec<CellLabel> {
        let mut out: Vec<CellLabel> = list
            .iter()
            .flat_map(|&(k, q)| {
                let l = CellLabel::new(k, q);
                [l, l.antipode()]
            })
            .collect();
        out.sort();
        out
    };
    let rows: [FaceRow; 6] = [
        (
            [1, 1, -1],
            a + b - c,
            [t(0), t(3), tt(1), tt(2)],
            cells(&[(Sigma, 1), (Rho, 3)]),
        ),
        (
            [1, -1, -1],
            -a + b + c,
            [t(2), t(3), tt(0), tt(1)],
            cells(&[(Tau, 1)]),
        ),
        (
            [1, -1, 1],
            a - b + c,
            [t(0), t(2), tt(1), tt(3)],
            cells(&[(Rho, 1), (Sigma, 2)]),
        ),
        (
            [1, 1, -1],
            -a - b + c,
            [t(1), t(2), tt(0), tt(3)],
            cells(&[(Tau, 2)]),
        ),
        (
            [1, -1, -1],
            a - b - c,
            [t(0), t(1), tt(2), tt(3)],
            cells(&[(Rho, 2), (Sigma, 3)]),
        ),
        (
            [1, -1, 1],
            -a + b - c,
            [t(1), t(3), tt(0), tt(2)],
            cells(&[(Tau, 3)]),
        ),
    ];
    rows.into_iter()
        .map(|(normal, offset, vertex_ids, source_cells)| FacePlane {
            normal,
            offset,
            vertex_ids,
            source_cells,
        })
        .collect()
}

/// Reorders four coplanar parallelogram corners cyclically: the corner
/// opposite the first is the one sharing its midpoint with the other two.
fn cyclic_order(ids: [VertexLabel; 4], pts: &[Vec3; 8]) -> Option<[VertexLabel; 4]> {
    let p = |l: &VertexLabel| &pts[l.slot()];
    for k in 1..4 {
        let others: Vec<usize> = (1..4).filter(|&j| j != k).collect();
        let (i, j) = (others[0], others[1]);
        if p(&ids[0]) + p(&ids[k]) == p(&ids[i]) + p(&ids[j]) {
            return Some([ids[0], ids[i], ids[k], ids[j]]);
        }
    }
    None
}

pub fn build_quartic(s: &PrincipallyPolarizedSurface) -> Result<KummerQuartic> {
    let (a, b, c) = theta_constants(s)?;
    let tau0 = Vec3::new(a.clone(), b.clone(), c.clone());
    let h = homogenize(&tau0);
    let vertices: [Vec3; 8] = std::array::from_fn(|slot| {
        let label = VertexLabel {
            index: (slot % 4) as u8,
            tilde: slot >= 4,
        };
        g_action(label.group_element(), &h)
    });
    let mut faces = table_faces(&a, &b, &c);
    for face in &mut faces {
        face.vertex_ids = cyclic_order(face.vertex_ids, &vertices).ok_or_else(|| {
            Error::Invariant(format!(
                "corners of face {face} do not form a parallelogram"
            ))
        })?;
    }
    let k = KummerQuartic {
        vertices,
        faces,
        theta_constants: (a, b, c),
    };
    k.check_invariants()?;
    Ok(k)
}

impl KummerQuartic {
    pub fn vertex(&self, label: VertexLabel) -> &Vec3 {
        &self.vertices[label.slot()]
    }

    pub fn labelled_vertices(&self) -> impl Iterator<Item = (VertexLabel, &Vec3)> {
        self.vertices.iter().enumerate().map(|(slot, p)| {
            (
                VertexLabel {
                    index: (slot % 4) as u8,
                    tilde: slot >= 4,
                },
                p,
            )
        })
    }

    pub fn is_vertex(&self, p: &Vec3) -> bool {
        self.vertices.iter().any(|v| v == p)
    }

    /// `τᵢ − τ̃₀` for `i = 1, 2, 3`.
    pub fn edge_vectors(&self) -> [Vec3; 3] {
        let base = self.vertex(VertexLabel::tau_tilde(0));
        std::array::from_fn(|i| self.vertex(VertexLabel::tau(i as u8 + 1)) - base)
    }

    /// Checks the parallelepiped structure, the face equations and the
    /// symmetry `p ↦ −p` of the vertex set.
    pub fn check_invariants(&self) -> Result<()> {
        let base = self.vertex(VertexLabel::tau_tilde(0));
        let e = self.edge_vectors();
        if e[0].dot(&e[1].cross(&e[2])).is_zero() {
            return Err(Error::Invariant("degenerate parallelepiped".into()));
        }
        let mut corners = BTreeSet::new();
        for mask in 0..8u8 {
            let mut p = base.clone();
            for (i, ei) in e.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    p = &p + ei;
                }
            }
            corners.insert(p);
        }
        let verts: BTreeSet<Vec3> = self.vertices.iter().cloned().collect();
        if corners != verts {
            return Err(Error::Invariant(
                "vertex set is not the parallelepiped spanned at tau~0".into(),
            ));
        }
        let negated: BTreeSet<Vec3> = self.vertices.iter().map(|v| -v).collect();
        if negated != verts {
            return Err(Error::Invariant(
                "vertex set is not symmetric under negation".into(),
            ));
        }
        for face in &self.faces {
            for id in &face.vertex_ids {
                if !face.on_plane(self.vertex(*id)) {
                    return Err(Error::Invariant(format!(
                        "vertex {id} = {} is not on face {face}",
                        self.vertex(*id)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Membership in the union of the six closed faces.
    pub fn contains(&self, p: &Vec3) -> bool {
        self.faces.iter().any(|f| self.face_contains(f, p))
    }

    /// Membership in one closed face. Every normal has a nonzero third
    /// entry, so projecting to `(T₁, T₂)` is injective on the plane.
    pub fn face_contains(&self, face: &FacePlane, p: &Vec3) -> bool {
        if !face.on_plane(p) {
            return false;
        }
        let poly: Vec<Vec2> = face
            .vertex_ids
            .iter()
            .map(|id| {
                let v = self.vertex(*id);
                Vec2::new(v.x.clone(), v.y.clone())
            })
            .collect();
        convex_polygon_contains(&poly, &Vec2::new(p.x.clone(), p.y.clone()))
    }

    /// Indices of the faces containing `p`.
    pub fn faces_containing(&self, p: &Vec3) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.face_contains(&self.faces[i], p))
            .collect()
    }
}

pub fn contains(k: &KummerQuartic, p: &Vec3) -> bool {
    k.contains(p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `y′ = y + p`.
    EquivalentPlus(Vec2),
    /// `y′ = −y + p`.
    EquivalentMinus(Vec2),
    /// `ψ(y) ≠ ψ(y′)`, witnessed by a characteristic whose difference with
    /// `ϑ₀₀` disagrees.
    Distinct(ThetaCharacteristic),
}

impl Verdict {
    pub fn is_equivalent(&self) -> bool {
        !matches!(self, Verdict::Distinct(_))
    }
}

/// Decides `y′ ≡ ±y mod ℤ²` and cross-checks the answer against `ψ`.
pub fn injectivity_check(
    s: &PrincipallyPolarizedSurface,
    y: &Vec2,
    y_prime: &Vec2,
) -> Result<Verdict> {
    s.require_irreducible()?;
    let plus = y_prime - y;
    let minus = y_prime + y;
    let lattice = if plus.is_integral() {
        Some(Verdict::EquivalentPlus(plus))
    } else if minus.is_integral() {
        Some(Verdict::EquivalentMinus(minus))
    } else {
        None
    };
    let p1 = psi_eval(s, y);
    let p2 = psi_eval(s, y_prime);
    let witness = [p1.x != p2.x, p1.y != p2.y, p1.z != p2.z]
        .iter()
        .position(|&d| d)
        .map(|i| ThetaCharacteristic::ALL[i + 1]);
    let inconsistent = |detail: &str| Error::InternalInconsistency {
        y: y.to_string(),
        y_prime: y_prime.to_string(),
        detail: detail.to_string(),
    };
    match (lattice, witness) {
        (Some(v), None) => Ok(v),
        (None, Some(chi)) => Ok(Verdict::Distinct(chi)),
        (Some(_), Some(chi)) => Err(inconsistent(&format!(
            "points agree modulo ±Z^2 but theta difference {chi} differs"
        ))),
        (None, None) => Err(inconsistent(
            "psi values agree but points differ modulo ±Z^2",
        )),
    }
}

/// `ψ` restricted to one cell of the subdivision: `ψ(x) = L·x + offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinePiece {
    pub cell: Cell,
    /// `L` in `M′`-coordinates, three rows of two entries.
    pub linear_part: [[Rational; 2]; 3],
    /// `L` with respect to the `N`-basis: `ψ(x) = L_N·(G x) + offset`.
    pub linear_part_n: IntMatrix,
    pub offset: Vec3,
    pub unimodular: bool,
}

impl AffinePiece {
    pub fn apply(&self, x: &Vec2) -> Vec3 {
        let row = |r: &[Rational; 2]| &r[0] * &x.x + &r[1] * &x.y;
        Vec3::new(
            row(&self.linear_part[0]) + &self.offset.x,
            row(&self.linear_part[1]) + &self.offset.y,
            row(&self.linear_part[2]) + &self.offset.z,
        )
    }
}

fn centroid(pts: &[Vec2]) -> Vec2 {
    let mut c = Vec2::zero();
    for p in pts {
        c += p;
    }
    c.scale(&Rational::new(1.into(), (pts.len() as i64).into()))
}

fn fit_piece(s: &PrincipallyPolarizedSurface, cell: &Cell) -> Result<AffinePiece> {
    let not_affine = |detail: String| Error::NotAffineOnCell {
        cell: cell.label.to_string(),
        detail,
    };
    let c = centroid(&cell.vertices);
    let third = Rational::new(1.into(), 3.into());
    let inner = |v: &Vec2| (&c.scale(&int(2)) + v).scale(&third);
    let samples: Vec<Vec2> = cell.vertices.iter().take(3).map(inner).collect();
    let check = match cell.vertices.get(3) {
        Some(v) => inner(v),
        None => c.clone(),
    };
    let vals: Vec<Vec3> = samples.iter().map(|p| psi_eval(s, p)).collect();
    let d = Matrix2::from_columns(&(&samples[1] - &samples[0]), &(&samples[2] - &samples[0]));
    let d_inv = d
        .inverse()
        .ok_or_else(|| not_affine("sample points are collinear".into()))?;
    let dv1 = &vals[1] - &vals[0];
    let dv2 = &vals[2] - &vals[0];
    let row = |a: &Rational, b: &Rational| -> [Rational; 2] {
        [
            a * d_inv.get(0, 0) + b * d_inv.get(1, 0),
            a * d_inv.get(0, 1) + b * d_inv.get(1, 1),
        ]
    };
    let linear_part = [
        row(&dv1.x, &dv2.x),
        row(&dv1.y, &dv2.y),
        row(&dv1.z, &dv2.z),
    ];
    let mut piece = AffinePiece {
        cell: cell.clone(),
        linear_part,
        linear_part_n: IntMatrix::new(Vec::new()),
        offset: Vec3::zero(),
        unimodular: false,
    };
    piece.offset = &vals[0] - &piece.apply(&samples[0]);
    for p in std::iter::once(&check).chain(cell.vertices.iter()) {
        let expected = psi_eval(s, p);
        let got = piece.apply(p);
        if expected != got {
            return Err(not_affine(format!(
                "psi{p} = {expected} but the fitted map gives {got}"
            )));
        }
    }
    let nb = s.n_basis();
    let rows_n: Vec<[Rational; 2]> = piece
        .linear_part
        .iter()
        .map(|r| {
            [
                &r[0] * nb.get(0, 0) + &r[1] * nb.get(1, 0),
                &r[0] * nb.get(0, 1) + &r[1] * nb.get(1, 1),
            ]
        })
        .collect();
    piece.linear_part_n = IntMatrix::from_rational_rows(&rows_n)
        .ok_or_else(|| not_affine("linear part is not integral in N-coordinates".into()))?;
    piece.unimodular = piece.linear_part_n.is_unimodular();
    Ok(piece)
}

/// Fits `ψ` on each of the 18 cells of the subdivision of `V`.
pub fn affine_pieces(s: &PrincipallyPolarizedSurface) -> Result<Vec<AffinePiece>> {
    let complex = s.subdivide()?;
    complex.cells.iter().map(|c| fit_piece(s, c)).collect()
}

/// Which cells land on which face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceSources {
    pub face: FacePlane,
    /// Cells whose image lies in this face, as found by evaluation.
    pub observed: Vec<CellLabel>,
}

impl FaceSources {
    pub fn matches_table(&self) -> bool {
        self.observed == self.face.source_cells
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoplanarityReport {
    pub faces: Vec<FaceSources>,
    /// Cells whose image lies on no single face.
    pub unassigned: Vec<CellLabel>,
}

impl CoplanarityReport {
    pub fn matches_table(&self) -> bool {
        self.unassigned.is_empty() && self.faces.iter().all(FaceSources::matches_table)
    }

    /// Faces come in three parallel pairs with opposite offsets.
    pub fn parallel_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.faces.len() {
            for j in i + 1..self.faces.len() {
                let (a, b) = (&self.faces[i].face, &self.faces[j].face);
                if a.normal == b.normal && a.offset == -&b.offset {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

pub fn coplanarity_report(s: &PrincipallyPolarizedSurface) -> Result<CoplanarityReport> {
    let k = build_quartic(s)?;
    let pieces = affine_pieces(s)?;
    let mut faces: Vec<FaceSources> = k
        .faces
        .iter()
        .map(|f| FaceSources {
            face: f.clone(),
            observed: Vec::new(),
        })
        .collect();
    let mut unassigned = Vec::new();
    for piece in &pieces {
        let images: Vec<Vec3> = piece.cell.vertices.iter().map(|p| piece.apply(p)).collect();
        let hit = k
            .faces
            .iter()
            .position(|f| images.iter().all(|q| k.face_contains(f, q)));
        match hit {
            Some(i) => faces[i].observed.push(piece.cell.label),
            None => unassigned.push(piece.cell.label),
        }
    }
    for f in &mut faces {
        f.observed.sort();
    }
    Ok(CoplanarityReport { faces, unassigned })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoTorsionImage {
    pub representative: Vec2,
    pub image: Vec3,
    pub is_vertex: bool,
}

/// `ψ` at `0, ½u, ½v, ½(u + v)`.
pub fn two_torsion_images(s: &PrincipallyPolarizedSurface) -> Result<Vec<TwoTorsionImage>> {
    let k = build_quartic(s)?;
    let rb = s.reduced_basis();
    Ok(ThetaCharacteristic::ALL
        .iter()
        .map(|chi| {
            let representative = chi.half_period(rb);
            let image = psi_eval(s, &representative);
            let is_vertex = k.is_vertex(&image);
            TwoTorsionImage {
                representative,
                image,
                is_vertex,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rat;
    use crate::lattice::make_surface;
    use num_traits::Signed;

    fn surface(rows: [[i64; 2]; 2]) -> PrincipallyPolarizedSurface {
        make_surface(Matrix2::from_ints(rows)).unwrap()
    }

    fn within(p: &Vec3, bound: &Rational) -> bool {
        p.components().iter().all(|c| c.abs() <= *bound)
    }

    fn v3(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> Vec3 {
        Vec3::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1))
    }

    #[test]
    fn psi_examples() {
        let s = surface([[2, -1], [-1, 2]]);
        assert_eq!(psi_eval(&s, &Vec2::zero()), v3((1, 2), (1, 2), (1, 2)));
        assert_eq!(
            psi_eval(&s, &Vec2::new(rat(1, 2), int(0))),
            v3((-1, 2), (0, 1), (0, 1))
        );
        let x = Vec2::new(rat(2, 7), rat(-3, 11));
        assert_eq!(
            psi_eval(&s, &x),
            psi_eval(&s, &(&x + &Vec2::from_ints(4, -9)))
        );
    }

    #[test]
    fn build_quartic_symmetric() {
        let k = build_quartic(&surface([[2, -1], [-1, 2]])).unwrap();
        let expected: BTreeSet<Vec3> = [
            v3((1, 2), (1, 2), (1, 2)),
            v3((-1, 2), (0, 1), (0, 1)),
            v3((0, 1), (-1, 2), (0, 1)),
            v3((0, 1), (0, 1), (-1, 2)),
            v3((-1, 2), (-1, 2), (-1, 2)),
            v3((1, 2), (0, 1), (0, 1)),
            v3((0, 1), (1, 2), (0, 1)),
            v3((0, 1), (0, 1), (1, 2)),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<Vec3> = k.vertices.iter().cloned().collect();
        assert_eq!(got, expected);
        let edges: BTreeSet<Vec3> = k.edge_vectors().into_iter().collect();
        let expected_edges: BTreeSet<Vec3> = [
            v3((0, 1), (1, 2), (1, 2)),
            v3((1, 2), (0, 1), (1, 2)),
            v3((1, 2), (1, 2), (0, 1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(edges, expected_edges);
    }

    #[test]
    fn build_quartic_other_examples() {
        assert_eq!(
            build_quartic(&surface([[1, 0], [0, 1]])),
            Err(Error::ProductType)
        );
        let k = build_quartic(&surface([[2, -1], [-1, 3]])).unwrap();
        assert_eq!(k.vertex(VertexLabel::tau(0)), &v3((1, 2), (3, 4), (3, 4)));
    }

    #[test]
    fn g_action_examples() {
        let p = [int(0), rat(1, 2), rat(1, 2), rat(1, 2)];
        let id = GroupElement::new(V4::Identity, false);
        assert_eq!(g_action(id, &p), v3((1, 2), (1, 2), (1, 2)));
        assert_eq!(
            g_action(GroupElement::new(V4::Swap01, false), &p),
            v3((-1, 2), (0, 1), (0, 1))
        );
        assert_eq!(
            g_action(GroupElement::new(V4::Identity, true), &p),
            v3((-1, 2), (-1, 2), (-1, 2))
        );
    }

    #[test]
    fn contains_examples() {
        let s = surface([[2, -1], [-1, 2]]);
        let k = build_quartic(&s).unwrap();
        assert!(k.contains(k.vertex(VertexLabel::tau(0))));
        assert!(!k.contains(&Vec3::zero()));
        assert!(contains(
            &k,
            &psi_eval(&s, &Vec2::new(rat(1, 5), rat(1, 7)))
        ));
        assert!(!k.contains(&v3((3, 1), (5, 2), (0, 1))));
    }

    #[test]
    fn injectivity_examples() {
        let s = surface([[2, -1], [-1, 2]]);
        let y = Vec2::new(rat(1, 5), rat(-2, 9));
        assert_eq!(
            injectivity_check(&s, &y, &(&y + &Vec2::from_ints(3, -2))).unwrap(),
            Verdict::EquivalentPlus(Vec2::from_ints(3, -2))
        );
        assert_eq!(
            injectivity_check(&s, &y, &-&y).unwrap(),
            Verdict::EquivalentMinus(Vec2::zero())
        );
        let v = injectivity_check(
            &s,
            &Vec2::new(rat(1, 5), int(0)),
            &Vec2::new(int(0), rat(1, 5)),
        )
        .unwrap();
        assert!(matches!(v, Verdict::Distinct(_)));
        assert_eq!(
            injectivity_check(&surface([[1, 0], [0, 1]]), &y, &y),
            Err(Error::ProductType)
        );
    }

    #[test]
    fn affine_pieces_symmetric() {
        let s = surface([[2, -1], [-1, 2]]);
        let pieces = affine_pieces(&s).unwrap();
        assert_eq!(pieces.len(), 18);
        let sigma1 = pieces
            .iter()
            .find(|p| p.cell.label == CellLabel::new(PieceKind::Sigma, 1))
            .unwrap();
        assert_eq!(
            sigma1.linear_part_n,
            IntMatrix::from_i64(&[[1, 0], [0, 1], [1, 1]])
        );
        assert!(pieces.iter().all(|p| p.unimodular));
        for p in &pieces {
            let anti = pieces
                .iter()
                .find(|q| q.cell.label == p.cell.label.antipode())
                .unwrap();
            assert_eq!(anti.linear_part_n, p.linear_part_n.neg());
        }
    }

    #[test]
    fn coplanarity_matches_table() {
        for g in [[[2, -1], [-1, 2]], [[2, -1], [-1, 3]], [[5, 2], [2, 3]]] {
            let report = coplanarity_report(&surface(g)).unwrap();
            assert!(report.matches_table(), "{g:?}: {report:?}");
            assert_eq!(report.parallel_pairs().len(), 3);
        }
        let report = coplanarity_report(&surface([[2, -1], [-1, 3]])).unwrap();
        let tau_row = report
            .faces
            .iter()
            .find(|f| f.face.normal == [1, -1, -1] && f.face.offset == int(1))
            .unwrap();
        assert!(tau_row
            .observed
            .contains(&CellLabel::new(PieceKind::Tau, 1)));
    }

    #[test]
    fn two_torsion_symmetric() {
        let s = surface([[2, -1], [-1, 2]]);
        let imgs = two_torsion_images(&s).unwrap();
        assert_eq!(imgs[0].image, v3((1, 2), (1, 2), (1, 2)));
        assert!(imgs[0].is_vertex);
        assert_eq!(imgs[1].image, v3((-1, 2), (0, 1), (0, 1)));
        assert!(imgs.iter().all(|t| t.is_vertex));
        assert!(imgs.iter().all(|t| within(&t.image, &rat(1, 2))));
    }
}
