//! The anticanonical model: cubics through the blowup centers, the map to
//! `P^4`, the Weyl action there, the eight boundary lines and the two
//! quadrics cutting out the image.
//!
//! Tangency of a cubic `f` to a line `L` at a point `p` is encoded as
//! `D_d f(p) = 0` for one direction `d` on `L` other than `p`. Together with
//! `f(p) = 0`, Euler's relation `sum x_i df/dx_i = 3f` makes the derivative
//! along `p` itself vanish, so the full restriction of `f` to `L` has a
//! double root at `p`.

use itertools::Itertools;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cremona::{
    boundary_curves, compose, gcd_all, monomials, p1, p2, r1_map, r2_map, Center, Locus, Poly, RatMapPn,
};
use crate::error::{Error, Result};
use crate::ratlin::{
    clear_denominators, int_to_rat_vec, ints, kernel_basis, primitive_line, rank, rref, same_row_space, solve, to_rat,
    IntVec, Rat, RatMat, RatVec,
};
use crate::weylc2::BoundaryLabel;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinSysCondition {
    pub point: IntVec,
    pub tangent_line: Option<Poly>,
}

impl LinSysCondition {
    pub fn through(point: &[i64]) -> Self {
        LinSysCondition { point: ints(point), tangent_line: None }
    }

    pub fn tangent(point: &[i64], line: Poly) -> Result<Self> {
        let p: RatVec = ints(point).iter().map(to_rat).collect();
        if line.degree() != Some(1) || !line.eval(&p).is_zero() {
            return Err(Error::Degenerate("tangent line must be linear and pass through the point".into()));
        }
        Ok(LinSysCondition { point: ints(point), tangent_line: Some(line) })
    }

    /// Linear functionals on the coefficient vectors of degree-`d` forms.
    fn rows(&self, d: u32) -> Vec<RatVec> {
        let p: RatVec = self.point.iter().map(to_rat).collect();
        let monos = monomials(3, d);
        let mono = |m: &Vec<u32>| Poly::monomial(3, m.clone(), Rat::from_integer(1.into()));
        let mut out = vec![monos.iter().map(|m| mono(m).eval(&p)).collect()];
        if let Some(l) = &self.tangent_line {
            let coeffs: RatVec = (0..3)
                .map(|i| {
                    let mut e = vec![0; 3];
                    e[i] = 1;
                    l.coeff(&e)
                })
                .collect();
            let dir = kernel_basis(&RatMat::from_rows(vec![coeffs]))
                .into_iter()
                .map(|v| int_to_rat_vec(&v))
                .find(|v| rank(&RatMat::from_rows(vec![v.clone(), p.clone()])) == 2)
                .expect("a line has a direction off any of its points");
            out.push(
                monos
                    .iter()
                    .map(|m| {
                        let f = mono(m);
                        (0..3).map(|i| &dir[i] * f.derivative(i).eval(&p)).sum()
                    })
                    .collect(),
            );
        }
        out
    }
}

/// Coefficients of a form on the descending graded-lex monomial basis.
pub fn coeff_vector(f: &Poly, d: u32) -> RatVec {
    monomials(f.nvars(), d).iter().map(|m| f.coeff(m)).collect()
}

fn form_from_coeffs(nvars: usize, d: u32, v: &[Rat]) -> Poly {
    Poly::from_terms(nvars, monomials(nvars, d).into_iter().zip(v.iter().cloned()))
}

/// Basis of the cubics satisfying all conditions.
pub fn conditioned_cubics(conds: &[LinSysCondition]) -> Vec<Poly> {
    let rows: Vec<RatVec> = conds.iter().flat_map(|c| c.rows(3)).collect();
    if rows.is_empty() {
        return monomials(3, 3).into_iter().map(|m| Poly::monomial(3, m, Rat::from_integer(1.into()))).collect();
    }
    kernel_basis(&RatMat::from_rows(rows)).iter().map(|v| form_from_coeffs(3, 3, &int_to_rat_vec(v))).collect()
}

/// `A1` simple, `B12` tangent to `A4`, `B41` tangent to `A2`.
pub fn anticanonical_conditions() -> Vec<LinSysCondition> {
    vec![
        LinSysCondition::through(&[1, 0, 0]),
        LinSysCondition::tangent(&[1, 1, 0], p1()).expect("B12 lies on A4"),
        LinSysCondition::tangent(&[0, 0, 1], Poly::var(3, 0)).expect("B41 lies on A2"),
    ]
}

/// `x y p1, x z^2, x p2, y p2, z p2`.
pub fn basis_cubics() -> Vec<Poly> {
    let [x, y, z] = [Poly::var(3, 0), Poly::var(3, 1), Poly::var(3, 2)];
    vec![&(&x * &y) * &p1(), &x * &(&z * &z), &x * &p2(), &y * &p2(), &z * &p2()]
}

fn span_matrix(fs: &[Poly], d: u32) -> RatMat {
    RatMat::from_rows(fs.iter().map(|f| coeff_vector(f, d)).collect())
}

pub fn same_span(a: &[Poly], b: &[Poly], d: u32) -> bool {
    same_row_space(&span_matrix(a, d), &span_matrix(b, d))
}

pub fn in_span(f: &Poly, basis: &[Poly], d: u32) -> bool {
    let m = span_matrix(basis, d);
    rank(&m.vstack(&RatMat::from_rows(vec![coeff_vector(f, d)]))) == rank(&m)
}

pub fn phi_prime() -> RatMapPn {
    RatMapPn::new(basis_cubics()).expect("basis cubics define a map")
}

/// The projection `(X2 : X3 : X4)` composed with `phi'` is the identity.
pub fn projection_is_identity() -> bool {
    let proj = RatMapPn::linear(&[vec![0, 0, 1, 0, 0], vec![0, 0, 0, 1, 0], vec![0, 0, 0, 0, 1]]).expect("projection");
    compose(&proj, &phi_prime()).map(|m| m.is_identity()).unwrap_or(false)
}

/// Cubic conditions expressing membership in the local ideal at a center:
/// the chart coefficients of the monomials outside the ideal vanish.
fn local_ideal_rows(center: Center) -> Vec<RatVec> {
    let (subs, _) = center.chart();
    // Standard monomials of (u, v) resp. (u, v^2).
    let outside: Vec<[u32; 2]> = match center {
        Center::A1 => vec![[0, 0]],
        Center::B12 | Center::B41 => vec![[0, 0], [0, 1]],
    };
    let chart_forms: Vec<Poly> = monomials(3, 3)
        .into_iter()
        .map(|m| Poly::monomial(3, m, Rat::from_integer(1.into())).substitute(&subs))
        .collect();
    outside.iter().map(|e| chart_forms.iter().map(|f| f.coeff(e)).collect()).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BaseIdealReport {
    pub intersection_dim: usize,
    pub equals_basis_span: bool,
    /// `x z^2`, `(x - y) y z`, `(x - y + z) y^2` lie in the span.
    pub generators_in_span: bool,
}

impl BaseIdealReport {
    pub fn ok(&self) -> bool {
        self.intersection_dim == 5 && self.equals_basis_span && self.generators_in_span
    }
}

pub fn base_ideal_report() -> BaseIdealReport {
    let rows: Vec<RatVec> = Center::ALL.iter().flat_map(|&c| local_ideal_rows(c)).collect();
    let inter: Vec<Poly> =
        kernel_basis(&RatMat::from_rows(rows)).iter().map(|v| form_from_coeffs(3, 3, &int_to_rat_vec(v))).collect();
    let basis = basis_cubics();
    let [x, y, z] = [Poly::var(3, 0), Poly::var(3, 1), Poly::var(3, 2)];
    let gens = [&x * &(&z * &z), &(&(&x - &y) * &y) * &z, &p1() * &(&y * &y)];
    BaseIdealReport {
        intersection_dim: inter.len(),
        equals_basis_span: same_span(&inter, &basis, 3),
        generators_in_span: gens.iter().all(|g| in_span(g, &basis, 3)),
    }
}

pub fn base_ideal_check() -> bool {
    base_ideal_report().ok()
}

/// A line of `P^4`, stored as the reduced row echelon basis of its
/// 2-dimensional span with each row cleared to primitive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct P4Line {
    pub rows: [IntVec; 2],
}

impl P4Line {
    pub fn through(a: &[Rat], b: &[Rat]) -> Result<Self> {
        P4Line::span(&[a.to_vec(), b.to_vec()])
    }

    /// The span of the given points, which must have rank 2.
    pub fn span(points: &[RatVec]) -> Result<Self> {
        let m = RatMat::from_rows(points.to_vec());
        let (r, piv) = rref(&m);
        if piv.len() != 2 {
            return Err(Error::Verification(format!("span of rank {} is not a line", piv.len())));
        }
        Ok(P4Line { rows: [clear_denominators(r.row(0)), clear_denominators(r.row(1))] })
    }

    pub fn points(&self) -> [RatVec; 2] {
        [int_to_rat_vec(&self.rows[0]), int_to_rat_vec(&self.rows[1])]
    }

    pub fn transform(&self, m: &RatMat) -> Result<P4Line> {
        let [a, b] = self.points();
        P4Line::through(&m.mul_vec(&a), &m.mul_vec(&b))
    }

    pub fn contains(&self, p: &[Rat]) -> bool {
        let [a, b] = self.points();
        rank(&RatMat::from_rows(vec![a, b, p.to_vec()])) == 2
    }

    /// The meeting point, if the lines are distinct and meet.
    pub fn meet(&self, other: &P4Line) -> Option<IntVec> {
        let [a, b] = self.points();
        let [c, d] = other.points();
        let cols = [&a, &b, &c, &d];
        let m = RatMat::from_rows((0..5).map(|i| cols.iter().map(|v| v[i].clone()).collect()).collect());
        let ker = kernel_basis(&m);
        if ker.len() != 1 {
            return None;
        }
        let k = int_to_rat_vec(&ker[0]);
        let p: RatVec = (0..5).map(|i| &k[0] * &a[i] + &k[1] * &b[i]).collect();
        Some(primitive_line(&p))
    }
}

/// Image of a parametrized curve under a map to `P^4`, required to be a line.
fn image_line(m: &RatMapPn, param: &[Poly]) -> Result<P4Line> {
    let forms = m.pull_back_forms(param);
    let g = gcd_all(&forms).ok_or(Error::MapUndefined)?;
    if g.is_zero() {
        return Err(Error::MapUndefined);
    }
    let reduced: Vec<Poly> = forms.iter().map(|f| f.div_exact(&g).expect("gcd divides")).collect();
    let d = reduced.iter().find_map(Poly::degree).unwrap_or(0);
    let pts: Vec<RatVec> = monomials(2, d).iter().map(|e| reduced.iter().map(|f| f.coeff(e)).collect()).collect();
    P4Line::span(&pts)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LineReport {
    pub lines: Vec<(BoundaryLabel, P4Line)>,
    /// Meeting points of distinct lines, for `i < j` in label order.
    pub meetings: Vec<(BoundaryLabel, BoundaryLabel, IntVec)>,
}

impl LineReport {
    pub fn line(&self, l: BoundaryLabel) -> &P4Line {
        &self.lines[l.index()].1
    }

    pub fn meeting(&self, a: BoundaryLabel, b: BoundaryLabel) -> Option<&IntVec> {
        let (a, b) = if a.index() <= b.index() { (a, b) } else { (b, a) };
        self.meetings.iter().find(|(x, y, _)| *x == a && *y == b).map(|(_, _, p)| p)
    }

    /// Number of lines of each type met by the line of `l`: `(A, B)`.
    pub fn degree_by_type(&self, l: BoundaryLabel) -> (usize, usize) {
        let partners: Vec<BoundaryLabel> = self
            .meetings
            .iter()
            .filter_map(|(a, b, _)| {
                if *a == l {
                    Some(*b)
                } else if *b == l {
                    Some(*a)
                } else {
                    None
                }
            })
            .collect();
        (partners.iter().filter(|p| p.is_a()).count(), partners.iter().filter(|p| !p.is_a()).count())
    }
}

/// Images of the boundary curves in `P^4`. Curves are pushed through
/// `phi'`; the exceptional ones are obtained with the projectivities,
/// `A1 = R2(A2)`, `B41 = R2(B23)`, `B12 = R1(B41)`.
pub fn curve_images_in_p4() -> Result<LineReport> {
    use BoundaryLabel::*;
    let phi = phi_prime();
    let (r1, r2) = weyl_p4_matrices()?;
    let mut found: Vec<Option<P4Line>> = vec![None; 8];
    for c in boundary_curves() {
        if let (Locus::Curve(_), Some(param)) = (&c.locus, &c.parametrization) {
            found[c.label.index()] = Some(image_line(&phi, param)?);
        }
    }
    let get = |f: &Vec<Option<P4Line>>, l: BoundaryLabel| f[l.index()].clone().expect("computed earlier");
    found[A1.index()] = Some(get(&found, A2).transform(&r2)?);
    found[B41.index()] = Some(get(&found, B23).transform(&r2)?);
    found[B12.index()] = Some(get(&found, B41).transform(&r1)?);
    let lines: Vec<(BoundaryLabel, P4Line)> = BoundaryLabel::ALL.iter().map(|&l| (l, get(&found, l))).collect();
    if lines.iter().map(|(_, l)| l).unique().count() != 8 {
        return Err(Error::Verification("boundary lines are not distinct".into()));
    }
    let mut meetings = Vec::new();
    for (i, j) in (0..8).tuple_combinations() {
        if let Some(p) = lines[i].1.meet(&lines[j].1) {
            meetings.push((lines[i].0, lines[j].0, p));
        }
    }
    Ok(LineReport { lines, meetings })
}

/// Reference incidences: meeting points for the twelve meeting pairs.
pub fn reference_incidences() -> Vec<(BoundaryLabel, BoundaryLabel, IntVec)> {
    use BoundaryLabel::*;
    let rows: [(BoundaryLabel, BoundaryLabel, [i64; 5]); 12] = [
        (A1, A3, [1, 0, 0, 0, 0]),
        (A1, B23, [0, 0, 1, 0, 0]),
        (A1, B34, [1, 0, 1, 0, 0]),
        (A2, A4, [0, 0, 0, 1, 1]),
        (A2, B34, [0, 0, 0, 1, 0]),
        (A2, B41, [0, 0, 0, 0, 1]),
        (A3, B12, [1, 1, 0, 0, 0]),
        (A3, B41, [0, 1, 0, 0, 0]),
        (A4, B12, [0, 1, -1, -1, 0]),
        (A4, B23, [0, 1, -1, 0, 1]),
        (B12, B34, [1, 0, 1, 1, 0]),
        (B23, B41, [0, 1, 0, 0, 1]),
    ];
    rows.iter().map(|(a, b, p)| (*a, *b, ints(p))).collect()
}

fn express_in_basis(f: &Poly, basis: &[Poly]) -> Option<RatVec> {
    let m = span_matrix(basis, 3).transpose();
    solve(&m, &coeff_vector(f, 3))
}

/// Matrix `R` with `phi' o r = R phi'`: pull the basis cubics back along
/// `r`, divide by their common factor, and express in the basis (row `j`
/// holds the coefficients of the pullback of cubic `j`).
pub fn p4_matrix_of(r: &RatMapPn) -> Result<RatMat> {
    let basis = basis_cubics();
    let pulled: Vec<Poly> = basis.iter().map(|b| b.substitute(r.components())).collect();
    let g = gcd_all(&pulled).ok_or(Error::MapUndefined)?;
    let rows = pulled
        .iter()
        .map(|f| {
            let q = f.div_exact(&g).expect("gcd divides");
            if q.degree() != Some(3) {
                return Err(Error::Verification("pullback does not reduce to a cubic".into()));
            }
            express_in_basis(&q, &basis)
                .ok_or_else(|| Error::Verification("pullback is not in the anticanonical system".into()))
        })
        .collect::<Result<Vec<RatVec>>>()?;
    Ok(RatMat::from_rows(rows))
}

pub fn weyl_p4_matrices() -> Result<(RatMat, RatMat)> {
    Ok((p4_matrix_of(&r1_map())?, p4_matrix_of(&r2_map())?))
}

pub fn reference_r1() -> RatMat {
    RatMat::from_i64(&[&[-1, 1, 1, 0, 0], &[0, 1, 0, 1, -1], &[0, 0, 1, -1, 1], &[0, 0, 0, 0, 1], &[0, 0, 0, 1, 0]])
}

pub fn reference_r2() -> RatMat {
    RatMat::from_i64(&[&[0, 0, 0, -1, 0], &[0, 1, 0, 0, 0], &[0, -1, 0, -1, 1], &[-1, 0, 0, 0, 0], &[-1, 1, 1, 0, 0]])
}

/// Equality up to a nonzero scalar.
pub fn projectively_equal(a: &RatMat, b: &RatMat) -> bool {
    let av: RatVec = a.to_rows().concat();
    let bv: RatVec = b.to_rows().concat();
    av.len() == bv.len() && rank(&RatMat::from_rows(vec![av.clone(), bv])) == 1 && av.iter().any(|x| !x.is_zero())
}

pub fn is_scalar(m: &RatMat) -> bool {
    projectively_equal(m, &RatMat::identity(m.rows()))
}

/// A linear map with rational matrix, as a map of projective spaces.
pub fn projectivity(m: &RatMat) -> Result<RatMapPn> {
    let n = m.cols();
    let comps = m
        .to_rows()
        .iter()
        .map(|r| {
            Poly::from_terms(
                n,
                r.iter().enumerate().map(|(j, c)| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, c.clone())
                }),
            )
        })
        .collect();
    RatMapPn::new(comps)
}

/// `R_i o phi' = phi' o r_i` as reduced maps.
pub fn equivariance_holds() -> Result<bool> {
    let phi = phi_prime();
    let (m1, m2) = weyl_p4_matrices()?;
    let ok1 = compose(&projectivity(&m1)?, &phi)? == compose(&phi, &r1_map())?;
    let ok2 = compose(&projectivity(&m2)?, &phi)? == compose(&phi, &r2_map())?;
    Ok(ok1 && ok2)
}

/// `(X0 - X2) X4 + X1 (X2 - X3)`.
pub fn reference_q1() -> Poly {
    Poly::from_i64(5, &[(1, &[1, 0, 0, 0, 1]), (-1, &[0, 0, 1, 0, 1]), (1, &[0, 1, 1, 0, 0]), (-1, &[0, 1, 0, 1, 0])])
}

/// `(X0 - X2) X3 + X2 (X4 - X1)`.
pub fn reference_q2() -> Poly {
    Poly::from_i64(5, &[(1, &[1, 0, 0, 1, 0]), (-1, &[0, 0, 1, 1, 0]), (1, &[0, 0, 1, 0, 1]), (-1, &[0, 1, 1, 0, 0])])
}

/// Singular locus of a quadric cone as a point, when it is one.
pub fn quadric_vertex(q: &Poly) -> Option<IntVec> {
    let n = q.nvars();
    let grad_rows: Vec<RatVec> = (0..n).map(|i| coeff_vector(&q.derivative(i), 1)).collect();
    let ker = kernel_basis(&RatMat::from_rows(grad_rows));
    (ker.len() == 1).then(|| primitive_line(&int_to_rat_vec(&ker[0])))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuadricReport {
    /// Kernel basis of quadrics vanishing on the image.
    pub basis: Vec<Poly>,
    pub spans_reference: bool,
    /// Vertices of the reference `Q1` and `Q2`, in that order.
    pub vertices: [IntVec; 2],
    pub joining_line: P4Line,
    /// The joining line lies on both quadrics.
    pub line_in_quadrics: bool,
    /// The joining line is the image of `x = y`.
    pub line_is_image_of_diagonal: bool,
}

pub fn quadric_relations() -> Result<QuadricReport> {
    let phi = phi_prime();
    let quad = monomials(5, 2);
    let sextics = monomials(3, 6);
    let images: Vec<Poly> = quad
        .iter()
        .map(|m| Poly::monomial(5, m.clone(), Rat::from_integer(1.into())).substitute(phi.components()))
        .collect();
    let mat = RatMat::from_rows(sextics.iter().map(|s| images.iter().map(|f| f.coeff(s)).collect()).collect());
    let basis: Vec<Poly> =
        kernel_basis(&mat).iter().map(|v| form_from_coeffs(5, 2, &int_to_rat_vec(v)).normalized()).collect();
    for q in &basis {
        if !q.substitute(phi.components()).is_zero() {
            return Err(Error::Verification("quadric does not vanish on the image".into()));
        }
    }
    let (q1, q2) = (reference_q1(), reference_q2());
    let spans_reference = same_span(&basis, &[q1.clone(), q2.clone()], 2);
    let v1 = quadric_vertex(&q1).ok_or_else(|| Error::Verification("Q1 is not a cone over a point".into()))?;
    let v2 = quadric_vertex(&q2).ok_or_else(|| Error::Verification("Q2 is not a cone over a point".into()))?;
    let joining_line = P4Line::through(&int_to_rat_vec(&v1), &int_to_rat_vec(&v2))?;
    let s = Poly::var(2, 0);
    let t = Poly::var(2, 1);
    let [a, b] = joining_line.points();
    let on_line: Vec<Poly> = (0..5).map(|i| &s.scale(&a[i]) + &t.scale(&b[i])).collect();
    let line_in_quadrics = basis.iter().chain([&q1, &q2]).all(|q| q.substitute(&on_line).is_zero());
    let diagonal = image_line(&phi, &[s.clone(), s.clone(), t.clone()])?;
    Ok(QuadricReport {
        basis,
        spans_reference,
        vertices: [v1, v2],
        line_is_image_of_diagonal: diagonal == joining_line,
        joining_line,
        line_in_quadrics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::rats;
    use BoundaryLabel::*;

    #[test]
    fn conditioned_system() {
        let sys = conditioned_cubics(&anticanonical_conditions());
        assert_eq!(sys.len(), 5);
        assert!(same_span(&sys, &basis_cubics(), 3));
        assert_eq!(conditioned_cubics(&[]).len(), 10);
        assert_eq!(conditioned_cubics(&[LinSysCondition::through(&[1, 0, 0])]).len(), 9);
        assert!(LinSysCondition::tangent(&[1, 0, 0], p1()).is_err());
    }

    #[test]
    fn phi_evaluation() {
        let phi = phi_prime();
        assert_eq!(phi.apply_point(&rats(&[0, 1, 1])).unwrap(), ints(&[0, 0, 0, 1, 1]));
        assert_eq!(phi.apply_point(&rats(&[1, 0, 0])), Err(Error::IndeterminateImage));
        assert!(projection_is_identity());
    }

    #[test]
    fn base_ideal() {
        let r = base_ideal_report();
        assert_eq!(r.intersection_dim, 5);
        assert!(r.ok());
    }

    #[test]
    fn p4_matrices() {
        let (m1, m2) = weyl_p4_matrices().unwrap();
        assert!(projectively_equal(&m1, &reference_r1()));
        assert!(projectively_equal(&m2, &reference_r2()));
        assert!(is_scalar(&m1.mul(&m1)));
        assert!(is_scalar(&m2.mul(&m2)));
        let m12 = m1.mul(&m2);
        assert!(is_scalar(&m12.mul(&m12).mul(&m12).mul(&m12)));
        assert!(!is_scalar(&m12.mul(&m12)));
        assert!(equivariance_holds().unwrap());
    }

    #[test]
    fn lines_and_incidences() {
        let r = curve_images_in_p4().unwrap();
        assert_eq!(r.meeting(A1, A3), Some(&ints(&[1, 0, 0, 0, 0])));
        assert_eq!(r.meeting(B23, B41), Some(&ints(&[0, 1, 0, 0, 1])));
        assert_eq!(r.meetings, reference_incidences());
        for l in BoundaryLabel::ALL {
            assert_eq!(r.degree_by_type(l), if l.is_a() { (1, 2) } else { (2, 1) });
        }
    }

    #[test]
    fn quadrics() {
        let q = quadric_relations().unwrap();
        assert_eq!(q.basis.len(), 2);
        assert!(q.spans_reference);
        assert_eq!(q.vertices, [ints(&[1, 0, 1, 1, 0]), ints(&[0, 1, 0, 0, 1])]);
        assert!(q.line_in_quadrics);
        assert!(q.line_is_image_of_diagonal);
        let v = int_to_rat_vec(&q.vertices[0]);
        assert!((0..5).all(|i| reference_q1().derivative(i).eval(&v).is_zero()));
    }
}
