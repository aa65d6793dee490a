//! Inputs shared by the benchmarks in `benches/`.

use flagquot::cremona::Poly;
use flagquot::ratlin::{ints, rats, IntVec, RatVec};

/// Vertices of a cube with its face centers pushed out, a 3-polytope with
/// coplanar quadruples and non-simplicial faces.
pub fn hull_points() -> Vec<RatVec> {
    let mut pts: Vec<RatVec> = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                pts.push(rats(&[x, y, z]));
            }
        }
    }
    for axis in 0..3 {
        for s in [-2, 2] {
            let mut v = [0, 0, 0];
            v[axis] = s;
            pts.push(rats(&v));
        }
    }
    pts
}

/// Generators of a pointed cone in four dimensions.
pub fn cone_generators() -> Vec<IntVec> {
    [[1, 0, 0, 1], [0, 1, 0, 1], [-1, 0, 0, 1], [0, -1, 0, 1], [0, 0, 1, 1], [0, 0, -1, 1], [1, 1, 1, 2]]
        .iter()
        .map(|v| ints(v))
        .collect()
}

/// Two ternary forms with a common quadratic factor.
pub fn gcd_pair() -> (Poly, Poly) {
    let x = Poly::var(3, 0);
    let y = Poly::var(3, 1);
    let z = Poly::var(3, 2);
    let common = &(&x * &y) - &(&z * &z);
    let a = &common * &(&(&x + &y) * &(&x - &z));
    let b = &common * &(&(&y * &y) + &(&x * &z));
    (a, b)
}
