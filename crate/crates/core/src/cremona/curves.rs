use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::map::RatMapPn;
use super::poly::{gcd_all, monomials, Poly};
use crate::error::{Error, Result};
use crate::ratlin::{ints, kernel_basis, primitive_line, rats, to_rat, IntVec, Rat, RatMat};
use crate::weylc2::BoundaryLabel;

/// A locus in the plane: a point (primitive integer coordinates, first
/// nonzero entry positive) or an irreducible curve (normalized equation).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Locus {
    Point(IntVec),
    Curve(Poly),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Point(p) => {
                let s: Vec<String> = p.iter().map(ToString::to_string).collect();
                write!(f, "({})", s.join(":"))
            }
            Locus::Curve(c) => write!(f, "{} = 0", c),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedCurve {
    pub label: BoundaryLabel,
    pub locus: Locus,
    /// Binary forms in `(s, t)` parametrizing a curve locus.
    pub parametrization: Option<Vec<Poly>>,
}

impl NamedCurve {
    fn point(label: BoundaryLabel, p: &[i64]) -> Result<Self> {
        Ok(NamedCurve { label, locus: Locus::Point(ints(p)), parametrization: None })
    }

    fn curve(label: BoundaryLabel, eq: Poly, param: Vec<Poly>) -> Result<Self> {
        let c = NamedCurve { label, locus: Locus::Curve(eq.normalized()), parametrization: Some(param) };
        c.check()?;
        Ok(c)
    }

    /// The parametrization lies on the curve (symbolic check).
    pub fn check(&self) -> Result<()> {
        if let (Locus::Curve(eq), Some(param)) = (&self.locus, &self.parametrization) {
            if !eq.substitute(param).is_zero() {
                return Err(Error::Verification(format!("parametrization of {} is off the curve", self.label.name())));
            }
        }
        Ok(())
    }
}

/// `p1 = x - y + z`.
pub fn p1() -> Poly {
    Poly::from_i64(3, &[(1, &[1, 0, 0]), (-1, &[0, 1, 0]), (1, &[0, 0, 1])])
}

/// `p2 = xy - y^2 + xz`.
pub fn p2() -> Poly {
    Poly::from_i64(3, &[(1, &[1, 1, 0]), (-1, &[0, 2, 0]), (1, &[1, 0, 1])])
}

fn binary(terms: &[(i64, &[u32])]) -> Poly {
    Poly::from_i64(2, terms)
}

/// The eight boundary loci in the plane, in label order.
pub fn boundary_curves() -> Vec<NamedCurve> {
    use BoundaryLabel::*;
    let (x, y, z) = (Poly::var(3, 0), Poly::var(3, 1), Poly::var(3, 2));
    let s = binary(&[(1, &[1, 0])]);
    let t = binary(&[(1, &[0, 1])]);
    let zero = Poly::zero(2);
    // p2 = x(y + z) - y^2 is linear in x: y = s(s + t), z = t(s + t), x = s^2.
    let conic =
        vec![binary(&[(1, &[2, 0])]), binary(&[(1, &[2, 0]), (1, &[1, 1])]), binary(&[(1, &[1, 1]), (1, &[0, 2])])];
    let line = |a: Poly, b: Poly, c: Poly| vec![a, b, c];
    vec![
        NamedCurve::point(A1, &[1, 0, 0]),
        NamedCurve::curve(A2, x, line(zero.clone(), s.clone(), t.clone())),
        NamedCurve::curve(A3, p2(), conic),
        NamedCurve::curve(A4, p1(), line(s.clone(), &s + &t, t.clone())),
        NamedCurve::point(B12, &[1, 1, 0]),
        NamedCurve::curve(B23, y, line(s.clone(), zero.clone(), t.clone())),
        NamedCurve::curve(B34, z, line(s.clone(), t.clone(), zero.clone())),
        NamedCurve::point(B41, &[0, 0, 1]),
    ]
    .into_iter()
    .map(|c| match c {
        Ok(c) => c,
        Err(e) => panic!("hard-coded boundary curve fails its check: {e}"),
    })
    .collect()
}

pub fn boundary_curve(label: BoundaryLabel) -> NamedCurve {
    boundary_curves().swap_remove(label.index())
}

/// Smallest-degree form vanishing on a parametrized curve.
///
/// Samples the parametrization at `(1, k)` for enough `k` to pin down every
/// candidate of degree `d`, solves for the coefficients at increasing `d`,
/// and verifies the first kernel vector symbolically.
pub fn implicitize(param: &[Poly]) -> Result<Poly> {
    let n = param.len();
    let e = param.iter().find_map(Poly::degree).ok_or_else(|| Error::Polynomial("zero parametrization".into()))?;
    for d in 1..=2 * e + 2 {
        let monos = monomials(n, d);
        let samples = (d * e + 1) as i64;
        let rows: Vec<Vec<Rat>> = (0..samples)
            .map(|k| {
                let pt: Vec<Rat> = param.iter().map(|p| p.eval(&rats(&[1, k]))).collect();
                monos.iter().map(|m| Poly::monomial(n, m.clone(), Rat::one()).eval(&pt)).collect()
            })
            .collect();
        let ker = kernel_basis(&RatMat::from_rows(rows));
        if let Some(v) = ker.first() {
            let f = Poly::from_terms(n, monos.iter().cloned().zip(v.iter().map(to_rat)));
            if !f.substitute(param).is_zero() {
                return Err(Error::Verification("interpolated equation does not vanish on the curve".into()));
            }
            return Ok(f.normalized());
        }
    }
    Err(Error::Polynomial("no implicit equation found".into()))
}

/// Image of a boundary locus. Points are evaluated; curves are pushed
/// through their parametrization and implicitized. A contracted curve
/// yields a point.
pub fn curve_image(m: &RatMapPn, c: &NamedCurve) -> Result<Locus> {
    match (&c.locus, &c.parametrization) {
        (Locus::Point(p), _) => {
            let pr: Vec<Rat> = p.iter().map(to_rat).collect();
            Ok(Locus::Point(m.apply_point(&pr)?))
        }
        (Locus::Curve(_), Some(param)) => {
            let forms = m.pull_back_forms(param);
            if forms.iter().all(Poly::is_zero) {
                return Err(Error::IndeterminateImage);
            }
            let g = gcd_all(&forms).expect("nonempty");
            let reduced: Vec<Poly> = forms.iter().map(|f| f.div_exact(&g).expect("gcd divides")).collect();
            if reduced.iter().all(Poly::is_constant) {
                let v: Vec<Rat> = reduced.iter().map(|f| f.coeff(&[0, 0])).collect();
                return Ok(Locus::Point(primitive_line(&v)));
            }
            Ok(Locus::Curve(implicitize(&reduced)?))
        }
        (Locus::Curve(_), None) => Err(Error::Polynomial(format!("{} has no parametrization", c.label.name()))),
    }
}

/// Blowup centers of the weighted resolution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Center {
    A1,
    B12,
    B41,
}

impl Center {
    pub const ALL: [Center; 3] = [Center::A1, Center::B12, Center::B41];

    pub fn label(self) -> BoundaryLabel {
        match self {
            Center::A1 => BoundaryLabel::A1,
            Center::B12 => BoundaryLabel::B12,
            Center::B41 => BoundaryLabel::B41,
        }
    }

    /// Substitution `(x, y, z)` in chart coordinates `(u, v)` and the weights of `(u, v)`.
    pub fn chart(self) -> (Vec<Poly>, [u32; 2]) {
        let u = Poly::var(2, 0);
        let v = Poly::var(2, 1);
        let one = Poly::one(2);
        match self {
            Center::A1 => (vec![one, u, v], [1, 1]),
            Center::B41 => (vec![u, v, one], [2, 1]),
            // p1/y = u, z/y = v, y = 1, so x = u + 1 - v
            Center::B12 => (vec![&(&u + &one) - &v, one, v], [2, 1]),
        }
    }
}

/// Minimal weighted order of `f` at a blowup center.
pub fn weighted_multiplicity(f: &Poly, center: Center) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::Polynomial("multiplicity of the zero polynomial".into()));
    }
    if f.nvars() != 3 {
        return Err(Error::DimensionMismatch { expected: 3, got: f.nvars() });
    }
    let (subs, w) = center.chart();
    let g = f.substitute(&subs);
    Ok(g.terms().map(|(e, _)| w[0] * e[0] + w[1] * e[1]).min().expect("nonzero after chart change"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cremona::map::{r1_map, r2_map, weyl_cremona};
    use crate::weylc2::{edge_permutation, weyl_elements};

    fn locus(l: BoundaryLabel) -> Locus {
        boundary_curve(l).locus
    }

    #[test]
    fn table_rows() {
        use BoundaryLabel::*;
        let cs = boundary_curves();
        assert_eq!(cs.len(), 8);
        assert_eq!(locus(A3).to_string(), "x*y + x*z - y^2 = 0");
        assert_eq!(locus(B12), Locus::Point(ints(&[1, 1, 0])));
        assert_eq!(locus(B34).to_string(), "z = 0");
        for (c, l) in cs.iter().zip(BoundaryLabel::ALL) {
            assert_eq!(c.label, l);
        }
    }

    #[test]
    fn quoted_images() {
        use BoundaryLabel::*;
        assert_eq!(curve_image(&r1_map(), &boundary_curve(A2)).unwrap(), locus(A4));
        assert_eq!(curve_image(&r1_map(), &boundary_curve(B23)).unwrap(), locus(B34));
        assert_eq!(curve_image(&r2_map(), &boundary_curve(A4)).unwrap(), locus(A3));
        // A2 is contracted by r2 onto A1
        assert_eq!(curve_image(&r2_map(), &boundary_curve(A2)).unwrap(), locus(A1));
        assert_eq!(curve_image(&r2_map(), &boundary_curve(A1)), Err(Error::IndeterminateImage));
    }

    #[test]
    fn equivariance_with_edge_permutation() {
        for w in weyl_elements() {
            let m = weyl_cremona(&w);
            let minv = weyl_cremona(&w.inverse());
            let perm = edge_permutation(&w);
            for l in BoundaryLabel::ALL {
                let target = locus(perm[l.index()]);
                match curve_image(&m, &boundary_curve(l)) {
                    Ok(img) => assert_eq!(img, target, "{} on {}", w.name(), l.name()),
                    Err(Error::IndeterminateImage) => {
                        let back = curve_image(&minv, &boundary_curve(perm[l.index()])).unwrap();
                        assert_eq!(back, locus(l), "{} on {} via inverse", w.name(), l.name());
                    }
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }

    #[test]
    fn multiplicities() {
        let x = Poly::var(3, 0);
        let y = Poly::var(3, 1);
        assert_eq!(weighted_multiplicity(&x, Center::B41).unwrap(), 2);
        assert_eq!(weighted_multiplicity(&p2(), Center::B41).unwrap(), 2);
        assert_eq!(weighted_multiplicity(&y, Center::A1).unwrap(), 1);
        assert_eq!(weighted_multiplicity(&p2(), Center::B12).unwrap(), 2);
        assert_eq!(weighted_multiplicity(&p2(), Center::A1).unwrap(), 1);
        assert_eq!(weighted_multiplicity(&p1(), Center::B12).unwrap(), 2);
    }

    #[test]
    fn implicitization_of_a_conic() {
        let param = boundary_curve(BoundaryLabel::A3).parametrization.unwrap();
        assert_eq!(implicitize(&param).unwrap(), p2());
    }
}
