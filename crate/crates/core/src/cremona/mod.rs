//! Homogeneous polynomials, plane rational maps and the Cremona
//! representation of the Weyl group on the plane.

mod curves;
mod map;
mod poly;

pub use curves::{
    boundary_curve, boundary_curves, curve_image, implicitize, p1, p2, weighted_multiplicity, Center, Locus, NamedCurve,
};
pub use map::{base_points, compose, r1_map, r2_map, weyl_cremona, RatMapPn};
pub use poly::{default_names, det_poly, gcd, gcd_all, monomials, resultant, HPoly, Poly};

/// Alias kept for callers that prefer the descriptive name.
pub fn gcd_hpoly(f: &HPoly, g: &HPoly) -> HPoly {
    gcd(f, g)
}
