//! The Picard lattice of the quotient surface `X`, modeled as the plane
//! blown up smoothly at `A1` and with weights `(2, 1)` at `B12` and `B41`.
//!
//! Basis `(H, E, e12, e41)`, intersection form `diag(1, -1, -1/2, -1/2)`.
//! Everything here is linear algebra in that lattice: boundary classes,
//! the intersection table, relations, Mori and nef cones, automorphisms.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cremona::{boundary_curves, weighted_multiplicity, Center, Locus};
use crate::error::{Error, Result};
use crate::polyhedra::{dual_cone, hull_3d, FaceLattice3};
use crate::ratlin::{
    clear_denominators, int_to_rat_vec, kernel_basis, primitive_line, rank, rat, rat_int, same_row_space, IntVec, Rat,
    RatMat, RatVec,
};
use crate::weylc2::{edge_permutation, weyl_elements, BoundaryLabel};

pub const BASIS: [&str; 4] = ["H", "E", "e12", "e41"];

/// Divisor class in the basis `(H, E, e12, e41)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DivClass(pub RatVec);

impl DivClass {
    pub fn from_i64(v: [i64; 4]) -> Self {
        DivClass(v.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn zero() -> Self {
        DivClass::from_i64([0; 4])
    }

    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn add(&self, other: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, s: &Rat) -> DivClass {
        DivClass(self.0.iter().map(|a| a * s).collect())
    }

    /// Intersection product.
    pub fn dot(&self, other: &DivClass) -> Rat {
        let w = form_diagonal();
        self.0.iter().zip(&other.0).zip(&w).map(|((a, b), c)| a * b * c).sum()
    }

    /// The class as a linear functional on classes, `D -> self . D`.
    pub fn functional(&self) -> RatVec {
        self.0.iter().zip(form_diagonal()).map(|(a, c)| a * c).collect()
    }

    /// Primitive integer vector on the ray of the class.
    pub fn ray(&self) -> IntVec {
        primitive_line(&self.0)
    }
}

fn form_diagonal() -> [Rat; 4] {
    [rat_int(1), rat_int(-1), rat(-1, 2), rat(-1, 2)]
}

pub fn pic_form() -> RatMat {
    let d = form_diagonal();
    let mut m = RatMat::zeros(4, 4);
    for (i, v) in d.into_iter().enumerate() {
        m[(i, i)] = v;
    }
    m
}

/// Linear combination of boundary classes with integer coefficients.
pub fn combination(terms: &[(i64, BoundaryLabel)]) -> DivClass {
    let cls = boundary_classes();
    terms.iter().fold(DivClass::zero(), |acc, &(c, l)| acc.add(&cls[l.index()].1.scale(&rat_int(c))))
}

/// Class of every boundary curve, in label order. Exceptional curves are
/// basis vectors; strict transforms are `deg H - sum m_c e_c` with the
/// weighted multiplicities of their plane equations.
pub fn boundary_classes() -> Vec<(BoundaryLabel, DivClass)> {
    boundary_curves()
        .into_iter()
        .map(|c| {
            let class = match &c.locus {
                Locus::Point(_) => {
                    let i = Center::ALL.iter().position(|z| z.label() == c.label).expect("point loci are centers");
                    let mut v = [0; 4];
                    v[i + 1] = 1;
                    DivClass::from_i64(v)
                }
                Locus::Curve(f) => {
                    let mut v = vec![rat_int(i64::from(f.degree().expect("nonzero equation")))];
                    for z in Center::ALL {
                        let m = weighted_multiplicity(f, z).expect("nonzero equation");
                        v.push(rat_int(-i64::from(m)));
                    }
                    DivClass(v)
                }
            };
            (c.label, class)
        })
        .collect()
}

pub fn anticanonical_class() -> DivClass {
    DivClass::from_i64([3, -1, -2, -2])
}

/// Gram matrix of the boundary classes.
pub fn intersection_table() -> RatMat {
    let cls: Vec<DivClass> = boundary_classes().into_iter().map(|(_, c)| c).collect();
    RatMat::from_rows(cls.iter().map(|a| cls.iter().map(|b| a.dot(b)).collect()).collect())
}

/// Reference values of the intersection table.
pub fn reference_intersection_table() -> RatMat {
    // doubled entries
    const T2: [[i64; 8]; 8] = [
        [-2, 0, 2, 0, 0, 2, 2, 0],
        [0, -2, 0, 2, 0, 0, 2, 2],
        [2, 0, -2, 0, 2, 0, 0, 2],
        [0, 2, 0, -2, 2, 2, 0, 0],
        [0, 0, 2, 2, -1, 0, 1, 0],
        [2, 0, 0, 2, 0, -1, 0, 1],
        [2, 2, 0, 0, 1, 0, -1, 0],
        [0, 2, 2, 0, 0, 1, 0, -1],
    ];
    RatMat::from_rows(T2.iter().map(|r| r.iter().map(|&x| rat(x, 2)).collect()).collect())
}

/// Primitive integer basis of the numerical relations among boundary classes.
pub fn relations() -> Vec<IntVec> {
    kernel_basis(&intersection_table())
}

/// The four reference relations: `A1-A2+A3-A4`, `B12-B23+B34-B41`,
/// `A1-A4-B12+B34`, `A1-A2+B23-B41`.
pub fn reference_relations() -> Vec<IntVec> {
    [[1, -1, 1, -1, 0, 0, 0, 0], [0, 0, 0, 0, 1, -1, 1, -1], [1, 0, 0, -1, -1, 0, 1, 0], [1, -1, 0, 0, 0, 1, 0, -1]]
        .iter()
        .map(|r| r.iter().map(|&x| x.into()).collect())
        .collect()
}

pub fn relations_match_reference() -> bool {
    let to_mat = |vs: &[IntVec]| RatMat::from_rows(vs.iter().map(|v| int_to_rat_vec(v)).collect());
    same_row_space(&to_mat(&relations()), &to_mat(&reference_relations()))
}

/// Reference `4 x 8` coordinate matrix of the boundary classes.
pub fn reference_coordinate_matrix() -> RatMat {
    RatMat::from_i64(&[
        &[1, 1, 1, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 1, 1, 1, 1],
        &[1, 0, -1, 0, 0, -1, -1, 0],
        &[0, -1, 0, 1, -1, -1, 0, 0],
    ])
}

/// Reference form in those coordinates, factor `1/2` applied.
pub fn reference_coordinate_form() -> RatMat {
    RatMat::from_i64(&[&[0, 1, 0, 0], &[1, -1, -1, -1], &[0, -1, -2, 0], &[0, -1, 0, -2]]).scale(&rat(1, 2))
}

/// `M^T G M == Table`.
pub fn coordinates_check(m: &RatMat, g: &RatMat) -> bool {
    m.transpose().mul(g).mul(m) == reference_intersection_table()
}

pub fn reference_coordinates_check() -> bool {
    coordinates_check(&reference_coordinate_matrix(), &reference_coordinate_form())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MoriFacet {
    pub labels: Vec<BoundaryLabel>,
    /// Primitive nef class vanishing exactly on the facet.
    pub support: DivClass,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MoriReport {
    pub generators: Vec<(BoundaryLabel, DivClass)>,
    /// `-K` as a functional; every generator evaluates to 1.
    pub hyperplane: RatVec,
    pub lattice: FaceLattice3,
    pub facets: Vec<MoriFacet>,
}

impl MoriReport {
    pub fn f_vector(&self) -> (usize, usize, usize) {
        self.lattice.f_vector()
    }

    pub fn facet_label_sets(&self) -> Vec<Vec<BoundaryLabel>> {
        self.facets.iter().map(|f| f.labels.clone()).collect()
    }
}

/// Slice of the cone in the chart that forgets coordinate `drop`.
fn slice_chart(classes: &[DivClass], drop: usize) -> Result<FaceLattice3> {
    let pts: Vec<RatVec> = classes
        .iter()
        .map(|c| c.0.iter().enumerate().filter(|(i, _)| *i != drop).map(|(_, x)| x.clone()).collect())
        .collect();
    hull_3d(&pts)
}

/// The cone spanned by the boundary classes, sliced by `-K . x = 1`.
pub fn mori_cone() -> Result<MoriReport> {
    let generators = boundary_classes();
    let classes: Vec<DivClass> = generators.iter().map(|(_, c)| c.clone()).collect();
    let k = anticanonical_class();
    let hyperplane = k.functional();
    for (l, c) in &generators {
        if !k.dot(c).is_one() {
            return Err(Error::Verification(format!("-K . {} != 1", l.name())));
        }
    }
    // On the slice a coordinate with nonzero functional weight is determined
    // by the other three, so dropping it is an affine chart.
    let usable: Vec<usize> = (0..4).filter(|&i| !hyperplane[i].is_zero()).collect();
    let lattice = slice_chart(&classes, usable[0])?;
    let second = slice_chart(&classes, *usable.last().expect("nonzero functional"))?;
    if lattice.facet_input_sets() != second.facet_input_sets() || lattice.f_vector() != second.f_vector() {
        return Err(Error::Verification("face lattice depends on the slicing chart".into()));
    }
    let nef = nef_generators();
    let mut facets = Vec::new();
    for set in lattice.facet_input_sets() {
        let labels: Vec<BoundaryLabel> = set.iter().map(|&i| BoundaryLabel::ALL[i]).collect();
        let support = nef
            .iter()
            .find(|d| (0..8).all(|i| d.dot(&classes[i]).is_zero() == set.contains(&i)))
            .cloned()
            .ok_or_else(|| Error::Verification("facet without a supporting nef class".into()))?;
        facets.push(MoriFacet { labels, support });
    }
    Ok(MoriReport { generators, hyperplane, lattice, facets })
}

/// Extremal rays of the nef cone, the dual of the Mori cone under the
/// intersection form, as primitive integer classes.
pub fn nef_generators() -> Vec<DivClass> {
    let gens: Vec<IntVec> = boundary_classes().iter().map(|(_, c)| clear_denominators(&c.0)).collect();
    // y . x >= 0 with y = Q D; Q^{-1} = diag(1, -1, -2, -2).
    let inv = [1, -1, -2, -2];
    dual_cone(4, &gens)
        .into_iter()
        .map(|y| {
            let d: RatVec = y.coords().iter().zip(inv).map(|(a, s)| Rat::from_integer(a * s)).collect();
            DivClass(int_to_rat_vec(&primitive_line(&d)))
        })
        .collect()
}

/// The ten reference nef divisors, grouped by Weyl orbit.
pub fn reference_nef_divisors() -> Vec<DivClass> {
    use BoundaryLabel::*;
    let rows: [&[(i64, BoundaryLabel)]; 10] = [
        &[(1, A1), (1, A3), (2, B41), (2, B12)],
        &[(1, A2), (1, A4), (2, B12), (2, B23)],
        &[(1, A1), (1, A3), (2, B23), (2, B34)],
        &[(1, A2), (1, A4), (2, B34), (2, B41)],
        &[(1, B12), (1, B23), (1, B34), (1, B41)],
        &[(1, A1), (1, A2), (1, B23), (1, B41)],
        &[(1, A2), (1, A3), (1, B12), (1, B34)],
        &[(1, A3), (1, A4), (1, B23), (1, B41)],
        &[(1, A4), (1, A1), (1, B12), (1, B34)],
        &[(1, A1), (1, A2), (1, A3), (1, A4)],
    ];
    rows.iter().map(|r| combination(r)).collect()
}

/// Rays as sorted primitive vectors, for basis-free comparisons.
pub fn ray_set(classes: &[DivClass]) -> Vec<IntVec> {
    classes.iter().map(DivClass::ray).sorted().dedup().collect()
}

pub type LabelPerm = [usize; 8];

fn preserves(gram: &RatMat, p: &[usize]) -> bool {
    (0..8).all(|i| (0..8).all(|j| gram[(p[i], p[j])] == gram[(i, j)]))
}

/// All permutations of the boundary labels preserving the intersection
/// table, by exhaustive search over the 8! candidates.
pub fn automorphisms() -> Vec<LabelPerm> {
    let gram = intersection_table();
    (0..8).permutations(8).filter(|p| preserves(&gram, p)).map(|p| p.try_into().expect("length 8")).collect()
}

/// Same search restricted to type-preserving permutations (4! * 4!).
pub fn automorphisms_type_preserving() -> Vec<LabelPerm> {
    let gram = intersection_table();
    let mut out = Vec::new();
    for a in (0..4).permutations(4) {
        for b in (4..8).permutations(4) {
            let p: Vec<usize> = a.iter().chain(&b).copied().collect();
            if preserves(&gram, &p) {
                out.push(p.try_into().expect("length 8"));
            }
        }
    }
    out.sort();
    out
}

/// Label permutation of a Weyl element as an index permutation.
pub fn weyl_label_perm(w: &crate::weylc2::WeylElt) -> LabelPerm {
    let e = edge_permutation(w);
    let mut p = [0; 8];
    for (i, l) in e.iter().enumerate() {
        p[i] = l.index();
    }
    p
}

/// Automorphisms coincide with the images of the Weyl group.
pub fn automorphisms_are_weyl() -> bool {
    let mut weyl: Vec<LabelPerm> = weyl_elements().iter().map(weyl_label_perm).collect();
    weyl.sort();
    weyl == automorphisms()
}

/// Rank of the intersection table (the Picard number).
pub fn picard_rank() -> usize {
    rank(&intersection_table())
}

/// `(-K)^2`.
pub fn anticanonical_degree() -> Rat {
    let k = anticanonical_class();
    k.dot(&k)
}

/// Nonnegativity of a class against every boundary class.
pub fn is_nef(d: &DivClass) -> bool {
    boundary_classes().iter().all(|(_, c)| !d.dot(c).is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use BoundaryLabel::*;

    fn class(l: BoundaryLabel) -> DivClass {
        boundary_classes()[l.index()].1.clone()
    }

    #[test]
    fn classes_from_multiplicities() {
        assert_eq!(class(A2), DivClass::from_i64([1, 0, 0, -2]));
        assert_eq!(class(A3), DivClass::from_i64([2, -1, -2, -2]));
        assert_eq!(class(B23), DivClass::from_i64([1, -1, 0, -1]));
        assert_eq!(class(A4), DivClass::from_i64([1, 0, -2, 0]));
        assert_eq!(class(A1), DivClass::from_i64([0, 1, 0, 0]));
        assert_eq!(class(A2).dot(&class(A2)), rat_int(-1));
        assert_eq!(class(B23).dot(&class(B23)), rat(-1, 2));
    }

    #[test]
    fn table_matches_transcription() {
        let t = intersection_table();
        assert_eq!(t, reference_intersection_table());
        assert_eq!(t[(0, 2)], rat_int(1));
        assert_eq!(t[(7, 5)], rat(1, 2));
        assert_eq!(t[(1, 4)], rat_int(0));
    }

    #[test]
    fn relations_span() {
        assert_eq!(relations().len(), 4);
        assert_eq!(picard_rank(), 4);
        assert!(relations_match_reference());
        let t = intersection_table();
        for r in reference_relations() {
            assert!(t.mul_vec(&int_to_rat_vec(&r)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn coordinates() {
        assert!(reference_coordinates_check());
        let g = reference_coordinate_form();
        assert_eq!(g, g.transpose());
        let mut m = reference_coordinate_matrix();
        m[(0, 0)] = rat_int(2);
        assert!(!coordinates_check(&m, &g));
    }

    #[test]
    fn anticanonical() {
        let k = anticanonical_class();
        assert_eq!(k, combination(&[(1, A2), (1, A3), (2, B41)]));
        let all: Vec<(i64, BoundaryLabel)> = BoundaryLabel::ALL.iter().map(|&l| (1, l)).collect();
        assert_eq!(k, combination(&all).scale(&rat(1, 2)));
        assert_eq!(anticanonical_degree(), rat_int(4));
        for (_, c) in boundary_classes() {
            assert!(k.dot(&c).is_one());
        }
    }

    #[test]
    fn pullback_of_lines_is_orthogonal_to_exceptionals() {
        for d in [
            combination(&[(1, A2), (2, B41)]),
            combination(&[(1, A4), (2, B12)]),
            combination(&[(1, B23), (1, A1), (1, B41)]),
            combination(&[(1, B34), (1, A1), (1, B12)]),
        ] {
            assert_eq!(d, DivClass::from_i64([1, 0, 0, 0]));
            for e in [A1, B12, B41] {
                assert!(d.dot(&class(e)).is_zero());
            }
            assert!(d.dot(&d).is_one());
        }
    }

    #[test]
    fn antiprism() {
        let r = mori_cone().unwrap();
        assert_eq!(r.f_vector(), (8, 16, 10));
        let sets = r.facet_label_sets();
        assert!(sets.contains(&vec![A1, A2, A3, A4]));
        assert!(sets.contains(&vec![B12, B23, B34, B41]));
        assert!(sets.contains(&vec![A1, B12, B41]));
        assert_eq!(sets.iter().filter(|s| s.len() == 3).count(), 8);
    }

    #[test]
    fn nef_cone() {
        let nef = nef_generators();
        assert_eq!(nef.len(), 10);
        assert_eq!(ray_set(&nef), ray_set(&reference_nef_divisors()));
        assert!(nef.iter().all(is_nef));
        assert!(reference_nef_divisors().iter().all(is_nef));
        // double dual gives back the boundary rays
        let ys: Vec<IntVec> = nef.iter().map(|d| clear_denominators(&d.functional())).collect();
        let back: Vec<IntVec> = dual_cone(4, &ys).into_iter().map(|p| p.into_inner()).sorted().collect();
        let mori: Vec<IntVec> = boundary_classes().iter().map(|(_, c)| c.ray()).sorted().collect();
        assert_eq!(back, mori);
    }

    #[test]
    fn automorphism_group() {
        let all = automorphisms();
        assert_eq!(all.len(), 8);
        assert_eq!(all, automorphisms_type_preserving());
        assert!(automorphisms_are_weyl());
    }
}
