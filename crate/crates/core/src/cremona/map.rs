use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{gcd, gcd_all, resultant, Poly};
use crate::error::{Error, Result};
use crate::ratlin::{primitive_line, to_rat, Int, IntVec, Rat, RatVec};
use crate::weylc2::WeylElt;

/// Rational map `P^(n-1) --> P^(m-1)` given by `m` forms of equal degree in
/// `n` variables without common factor. The representative is canonical:
/// jointly primitive integer coefficients, the graded-lex leading
/// coefficient of the first nonzero component positive. Equality of maps
/// is therefore plain structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RatMapPn {
    nvars: usize,
    components: Vec<Poly>,
}

impl RatMapPn {
    /// Validates, divides out the gcd of the components and normalizes.
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let first = components.first().ok_or_else(|| Error::Polynomial("map without components".into()))?;
        let nvars = first.nvars();
        if components.iter().all(Poly::is_zero) {
            return Err(Error::MapUndefined);
        }
        let mut degree = None;
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::DimensionMismatch { expected: nvars, got: c.nvars() });
            }
            if !c.is_homogeneous() {
                return Err(Error::Polynomial(format!("component {c} is not homogeneous")));
            }
            if let Some(d) = c.degree() {
                if *degree.get_or_insert(d) != d {
                    return Err(Error::Polynomial("components of unequal degree".into()));
                }
            }
        }
        let g = gcd_all(&components).expect("nonempty");
        let reduced: Vec<Poly> = components.iter().map(|c| c.div_exact(&g).expect("gcd divides")).collect();
        Ok(RatMapPn { nvars, components: joint_normalize(reduced) })
    }

    /// Linear map with the given integer matrix rows.
    pub fn linear(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, Vec::len);
        let comps = rows
            .iter()
            .map(|r| {
                Poly::from_terms(
                    n,
                    r.iter().enumerate().map(|(j, &c)| {
                        let mut e = vec![0; n];
                        e[j] = 1;
                        (e, Rat::from_integer(c.into()))
                    }),
                )
            })
            .collect();
        RatMapPn::new(comps)
    }

    pub fn identity(n: usize) -> Self {
        RatMapPn { nvars: n, components: Poly::vars(n) }
    }

    pub fn source_vars(&self) -> usize {
        self.nvars
    }

    pub fn target_vars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().find_map(Poly::degree).unwrap_or(0)
    }

    pub fn is_identity(&self) -> bool {
        *self == RatMapPn::identity(self.nvars)
    }

    /// Image of a point; fails when every component vanishes there.
    pub fn apply_point(&self, p: &[Rat]) -> Result<IntVec> {
        if p.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, got: p.len() });
        }
        let v: RatVec = self.components.iter().map(|c| c.eval(p)).collect();
        if v.iter().all(Zero::is_zero) {
            return Err(Error::IndeterminateImage);
        }
        Ok(primitive_line(&v))
    }

    /// Substitutes forms (in any variable count) into the components,
    /// without reduction.
    pub fn pull_back_forms(&self, subs: &[Poly]) -> Vec<Poly> {
        self.components.iter().map(|c| c.substitute(subs)).collect()
    }

    pub fn to_texts(&self) -> Vec<String> {
        self.components.iter().map(Poly::to_text).collect()
    }
}

impl fmt::Display for RatMapPn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_texts().join(" : "))
    }
}

fn joint_normalize(comps: Vec<Poly>) -> Vec<Poly> {
    let mut l = Int::one();
    let mut g = Int::zero();
    for c in &comps {
        for (_, v) in c.terms() {
            l = l.lcm(v.denom());
        }
    }
    for c in &comps {
        for (_, v) in c.terms() {
            g = g.gcd(&(v * to_rat(&l)).to_integer());
        }
    }
    let mut s = Rat::new(l, g);
    let lead = comps.iter().find_map(|c| c.leading_term().map(|(_, v)| v.clone())).expect("nonzero map");
    if lead.is_negative() {
        s = -s;
    }
    comps.iter().map(|c| c.scale(&s)).collect()
}

/// `f ∘ g`, reduced.
pub fn compose(f: &RatMapPn, g: &RatMapPn) -> Result<RatMapPn> {
    if f.nvars != g.target_vars() {
        return Err(Error::DimensionMismatch { expected: f.nvars, got: g.target_vars() });
    }
    RatMapPn::new(f.pull_back_forms(&g.components))
}

/// `r1 = (x - y + z : z : y)`.
pub fn r1_map() -> RatMapPn {
    RatMapPn::linear(&[vec![1, -1, 1], vec![0, 0, 1], vec![0, 1, 0]]).expect("valid map")
}

/// `r2 = (y^2 : xy : -xz)`.
pub fn r2_map() -> RatMapPn {
    RatMapPn::new(vec![
        Poly::from_i64(3, &[(1, &[0, 2, 0])]),
        Poly::from_i64(3, &[(1, &[1, 1, 0])]),
        Poly::from_i64(3, &[(-1, &[1, 0, 1])]),
    ])
    .expect("valid map")
}

/// The Cremona representation of `W` on the plane, evaluated on the reduced
/// word of `w` (letters composed left to right as maps).
pub fn weyl_cremona(w: &WeylElt) -> RatMapPn {
    w.word.iter().fold(RatMapPn::identity(3), |acc, &i| {
        let gen = if i == 1 { r1_map() } else { r2_map() };
        compose(&acc, &gen).expect("Cremona maps are dominant")
    })
}

fn univariate_rational_roots(p: &Poly) -> Vec<Rat> {
    // p is a polynomial in variable 0 of a one-variable ring.
    let mut roots = Vec::new();
    if p.is_zero() {
        return roots;
    }
    let d = p.degree_in(0) as usize;
    let mut coeffs: Vec<Rat> = (0..=d).map(|k| p.coeff(&[k as u32])).collect();
    let low = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Rat::zero());
        coeffs.drain(..low);
    }
    let l = coeffs.iter().fold(Int::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<Int> = coeffs.iter().map(|c| (c * to_rat(&l)).to_integer()).collect();
    if ints.len() <= 1 {
        return roots;
    }
    let a0 = ints[0].abs();
    let an = ints[ints.len() - 1].abs();
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1, -1] {
                let r = Rat::new(&p * Int::from(sign), q.clone());
                let v = ints.iter().rev().fold(Rat::zero(), |acc, c| acc * &r + to_rat(c));
                if v.is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots
}

fn divisors(n: &Int) -> Vec<Int> {
    let mut out = Vec::new();
    let mut k = Int::one();
    while &k * &k <= *n {
        if (n % &k).is_zero() {
            out.push(k.clone());
            let other = n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out
}

/// Rational points of the base locus of a plane map (common zeros of the
/// components), found by elimination: the line `z = 0` through a binary gcd,
/// the chart `z = 1` through resultants in `y` and back-substitution.
/// Candidates are verified against every component.
pub fn base_points(m: &RatMapPn) -> Result<Vec<IntVec>> {
    if m.nvars != 3 {
        return Err(Error::UnsupportedDimension(m.nvars));
    }
    let comps = m.components();
    let mut pts: Vec<IntVec> = Vec::new();
    let push = |p: RatVec, pts: &mut Vec<IntVec>| {
        if comps.iter().all(|c| c.eval(&p).is_zero()) {
            let q = primitive_line(&p);
            if !pts.contains(&q) {
                pts.push(q);
            }
        }
    };
    // z = 0: binary forms in (x, y); dehomogenize at y = 1 and x = 1.
    let t = Poly::var(1, 0);
    let one = Poly::one(1);
    let zero = Poly::zero(1);
    let on_line: Vec<Poly> = comps.iter().map(|c| c.substitute(&[t.clone(), one.clone(), zero.clone()])).collect();
    let g = gcd_all(&on_line).expect("nonempty");
    if !g.is_zero() {
        for r in univariate_rational_roots(&g) {
            push(vec![r, Rat::one(), Rat::zero()], &mut pts);
        }
    }
    push(vec![Rat::one(), Rat::zero(), Rat::zero()], &mut pts);
    // z = 1 chart in variables (x, y).
    let x2 = Poly::var(2, 0);
    let y2 = Poly::var(2, 1);
    let one2 = Poly::one(2);
    let aff: Vec<Poly> = comps.iter().map(|c| c.substitute(&[x2.clone(), y2.clone(), one2.clone()])).collect();
    let mut pool = aff.clone();
    let weights: [[i64; 3]; 2] = [[1, 2, 3], [1, -1, 5]];
    for w in weights {
        let mut s = Poly::zero(2);
        for (c, &k) in aff.iter().zip(w.iter().chain(std::iter::repeat(&1))) {
            s = &s + &c.scale(&Rat::from_integer(k.into()));
        }
        pool.push(s);
    }
    let mut elim = Poly::zero(2);
    for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            let r = resultant(&pool[i], &pool[j], 1);
            if !r.is_zero() {
                elim = gcd(&elim, &r);
            }
        }
    }
    if elim.is_zero() {
        return Err(Error::Polynomial("base locus is not zero-dimensional".into()));
    }
    debug_assert_eq!(elim.degree_in(1), 0, "eliminant still involves y");
    // Either keep x as the single variable or fix x and keep y.
    let to_uni = |p: &Poly, xv: Option<&Rat>| -> Poly {
        match xv {
            None => p.substitute(&[Poly::var(1, 0), Poly::zero(1)]),
            Some(a) => p.substitute(&[Poly::constant(1, a.clone()), Poly::var(1, 0)]),
        }
    };
    for xr in univariate_rational_roots(&to_uni(&elim, None)) {
        let fibers: Vec<Poly> = aff.iter().map(|p| to_uni(p, Some(&xr))).collect();
        let g = gcd_all(&fibers).expect("nonempty");
        for yr in univariate_rational_roots(&g) {
            push(vec![xr.clone(), yr, Rat::one()], &mut pts);
        }
    }
    pts.sort();
    Ok(pts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratlin::ints;
    use crate::weylc2::{weyl_elements, WeylElt};

    #[test]
    fn generators_are_involutions() {
        assert!(compose(&r1_map(), &r1_map()).unwrap().is_identity());
        assert!(compose(&r2_map(), &r2_map()).unwrap().is_identity());
        assert_eq!(r2_map().to_string(), "(y^2 : x*y : -x*z)");
        assert_eq!(r1_map().to_string(), "(x - y + z : z : y)");
    }

    #[test]
    fn gcd_of_unreduced_square() {
        // Oracle: r2 o r2 before reduction is (cofactor * x, cofactor * y, cofactor * z).
        let raw = r2_map().pull_back_forms(r2_map().components());
        let g = gcd_all(&raw).unwrap();
        assert_eq!(g.degree(), Some(3));
        for (c, v) in raw.iter().zip(Poly::vars(3)) {
            assert_eq!(c.div_exact(&v).unwrap().normalized(), g);
        }
    }

    #[test]
    fn coxeter_relation() {
        let r12 = compose(&r1_map(), &r2_map()).unwrap();
        let mut acc = RatMapPn::identity(3);
        for k in 1..=4 {
            acc = compose(&acc, &r12).unwrap();
            assert_eq!(acc.is_identity(), k == 4);
        }
    }

    #[test]
    fn homomorphism_on_all_pairs() {
        let els = weyl_elements();
        for a in &els {
            for b in &els {
                let lhs = compose(&weyl_cremona(a), &weyl_cremona(b)).unwrap();
                assert_eq!(lhs, weyl_cremona(&a.mul(b)), "{} * {}", a.name(), b.name());
            }
        }
        let w0: WeylElt = "w0".parse().unwrap();
        assert!(compose(&weyl_cremona(&w0), &weyl_cremona(&w0)).unwrap().is_identity());
    }

    #[test]
    fn undefined_composition() {
        let zero = RatMapPn::new(vec![Poly::zero(3), Poly::zero(3), Poly::zero(3)]);
        assert_eq!(zero, Err(Error::MapUndefined));
    }

    #[test]
    fn r2_base_locus() {
        assert_eq!(base_points(&r2_map()).unwrap(), vec![ints(&[0, 0, 1]), ints(&[1, 0, 0])]);
        assert!(base_points(&r1_map()).unwrap().is_empty());
        assert_eq!(r2_map().apply_point(&crate::ratlin::rats(&[1, 0, 0])), Err(Error::IndeterminateImage));
    }
}
