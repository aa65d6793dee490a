//! Acceptance suite: one line per criterion, exact comparisons throughout.
//!
//! Criteria 1-10 are read off the shared check registry; criterion 11 runs
//! seeded property suites.

use std::collections::BTreeSet;
use std::process::ExitCode;

use flagquot::cremona::{compose, gcd, implicitize, weyl_cremona, Poly, RatMapPn};
use flagquot::polyhedra::{dual_cone, hull_3d, primitive, Cone, Fan2D, PrimVec};
use flagquot::ratlin::{int_to_rat_vec, ints, rank, rats, Rat, RatMat};
use flagquot::toricsurf::resolve;
use flagquot::verify::{self, Check};
use flagquot::weylc2::weyl_elements;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestError, TestRng, TestRunner};

const SEED: [u8; 32] = *b"flagquot-acceptance-seed-0000001";
const CASES: u32 = 1000;

struct Criterion {
    number: u32,
    title: &'static str,
    ids: fn(&str) -> bool,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        number: 1,
        title: "quotient fan",
        ids: |id| {
            [
                "fans.projection_equivalent",
                "fans.quotient_rays",
                "fans.quotient_complete",
                "fans.quotient_singularities",
                "fans.cokernel_singularities",
            ]
            .contains(&id)
        },
    },
    Criterion {
        number: 2,
        title: "GIT charts",
        ids: |id| id.starts_with("fans.subfan_") || id == "fans.common_refinement",
    },
    Criterion {
        number: 3,
        title: "octagon and subdivisions",
        ids: |id| id.starts_with("subdiv.") || ["toric.octagon", "toric.f2_piece", "toric.f1_piece"].contains(&id),
    },
    Criterion { number: 4, title: "toric seeds", ids: |id| id.starts_with("toric.xe_") },
    Criterion {
        number: 5,
        title: "Cremona representation",
        ids: |id| id.starts_with("weyl.") || id.starts_with("cremona."),
    },
    Criterion {
        number: 6,
        title: "intersection table",
        ids: |id| id.starts_with("table.") || id.starts_with("relations."),
    },
    Criterion { number: 7, title: "anticanonical class", ids: |id| id.starts_with("antican.k_") },
    Criterion { number: 8, title: "Mori and nef cones", ids: |id| id.starts_with("mori.") || id.starts_with("nef.") },
    Criterion {
        number: 9,
        title: "anticanonical embedding",
        ids: |id| (id.starts_with("antican.") && !id.starts_with("antican.k_")) || id.starts_with("quadrics."),
    },
    Criterion { number: 10, title: "automorphisms", ids: |id| id.starts_with("aut.") },
];

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

fn outcome<T: std::fmt::Debug>(name: &str, r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| format!("{name}: {e}"))
}

fn vec3() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 3)
}

/// Pointed cones: every generator has positive last coordinate.
fn hull_and_dual() -> Result<(), String> {
    let gens = prop::collection::vec((-3i64..=3, -3i64..=3, 1i64..=3), 3..7);
    outcome(
        "dual cone round trip",
        runner().run(&gens, |g| {
            let gens: Vec<_> = g.iter().map(|&(a, b, c)| ints(&[a, b, c])).collect();
            let m = RatMat::from_rows(gens.iter().map(|v| int_to_rat_vec(v)).collect());
            prop_assume!(rank(&m) == 3);
            let cone = Cone::new(3, &gens).unwrap();
            let dual: Vec<_> = dual_cone(3, &gens).into_iter().map(PrimVec::into_inner).collect();
            let back = dual_cone(3, &dual);
            let mut want = cone.generators().to_vec();
            want.sort();
            prop_assert_eq!(back, want);
            Ok(())
        }),
    )?;
    let points = prop::collection::vec(vec3(), 4..10);
    outcome(
        "hull round trip",
        runner().run(&points, |pts| {
            let pts: Vec<Vec<Rat>> = pts.iter().map(|p| rats(p)).collect();
            let diffs: Vec<Vec<Rat>> =
                pts.iter().map(|p| p.iter().zip(&pts[0]).map(|(a, b)| a - b).collect()).collect();
            prop_assume!(rank(&RatMat::from_rows(diffs)) == 3);
            let h = hull_3d(&pts).unwrap();
            let (v, e, f) = h.f_vector();
            prop_assert_eq!(v + f, e + 2);
            for facet in &h.facets {
                let n = int_to_rat_vec(&facet.normal);
                let val = |p: &[Rat]| -> Rat { p.iter().zip(&n).map(|(a, b)| a * b).sum() };
                prop_assert!(pts.iter().all(|p| val(p) >= facet.offset));
                prop_assert!(facet.vertices.len() >= 3);
                prop_assert!(facet.vertices.iter().all(|&i| val(&h.vertices[i]) == facet.offset));
            }
            let again = hull_3d(&h.vertices).unwrap();
            prop_assert_eq!(again.f_vector(), (v, e, f));
            prop_assert_eq!(again.vertices.len(), h.vertices.len());
            Ok(())
        }),
    )
}

fn small_poly(nvars: usize, max_deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec((-3i64..=3, prop::collection::vec(0..=max_deg, nvars)), 1..4).prop_map(move |terms| {
        Poly::from_terms(nvars, terms.into_iter().map(|(c, e)| (e, Rat::from_integer(c.into()))))
    })
}

fn linear_map() -> impl Strategy<Value = RatMapPn> {
    prop::collection::vec(-2i64..=2, 9).prop_filter_map("singular matrix", |v| {
        let rows: Vec<Vec<i64>> = v.chunks(3).map(<[i64]>::to_vec).collect();
        let m = RatMat::from_rows(rows.iter().map(|r| rats(r)).collect());
        if rank(&m) < 3 {
            return None;
        }
        RatMapPn::linear(&rows).ok()
    })
}

fn plane_map() -> impl Strategy<Value = RatMapPn> {
    let weyl = (0..8usize).prop_map(|i| weyl_cremona(&weyl_elements()[i]));
    prop_oneof![linear_map(), weyl]
}

fn gcd_and_compose() -> Result<(), String> {
    let triple = (small_poly(3, 2), small_poly(3, 2), small_poly(3, 2));
    outcome(
        "gcd(ac, bc) = gcd(a, b) c",
        runner().run(&triple, |(a, b, c)| {
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let g = gcd(&(&a * &c), &(&b * &c));
            prop_assert_eq!(g.normalized(), (&gcd(&a, &b) * &c).normalized());
            prop_assert!((&a * &c).div_exact(&g).is_some());
            prop_assert!((&b * &c).div_exact(&g).is_some());
            Ok(())
        }),
    )?;
    let maps = (plane_map(), plane_map(), plane_map(), small_poly(3, 1));
    outcome(
        "composition identities",
        runner().run(&maps, |(f, g, h, factor)| {
            let id = RatMapPn::identity(3);
            prop_assert_eq!(&compose(&f, &id).unwrap(), &f);
            prop_assert_eq!(&compose(&id, &f).unwrap(), &f);
            let left = compose(&compose(&f, &g).unwrap(), &h).unwrap();
            let right = compose(&f, &compose(&g, &h).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            // a common factor is divided out again
            if !factor.is_zero() && factor.is_homogeneous() {
                let scaled: Vec<Poly> = f.components().iter().map(|c| c * &factor).collect();
                prop_assert_eq!(&RatMapPn::new(scaled).unwrap(), &f);
            }
            Ok(())
        }),
    )?;
    let pair = (0..8usize, 0..8usize, linear_map());
    outcome(
        "Weyl homomorphism, projectivity prefix",
        runner().run(&pair, |(i, j, a)| {
            let els = weyl_elements();
            let (u, v) = (&els[i], &els[j]);
            let prod = compose(&weyl_cremona(u), &weyl_cremona(v)).unwrap();
            prop_assert_eq!(&prod, &weyl_cremona(&u.mul(v)));
            // a projectivity in front does not disturb the rule
            let lhs = compose(&compose(&a, &weyl_cremona(u)).unwrap(), &weyl_cremona(v)).unwrap();
            prop_assert_eq!(lhs, compose(&a, &prod).unwrap());
            Ok(())
        }),
    )
}

fn binary_form(deg: u32) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-3i64..=3, (deg + 1) as usize).prop_map(move |c| {
        Poly::from_terms(
            2,
            c.into_iter().enumerate().map(|(i, v)| (vec![deg - i as u32, i as u32], Rat::from_integer(v.into()))),
        )
    })
}

fn implicitization() -> Result<(), String> {
    let param = (1u32..=3).prop_flat_map(|d| prop::collection::vec(binary_form(d), 3));
    outcome(
        "implicitization verified",
        runner().run(&param, |p| {
            prop_assume!(p.iter().any(|f| !f.is_zero()));
            let f = implicitize(&p).unwrap();
            let e = p.iter().find_map(Poly::degree).unwrap();
            prop_assert!(f.is_homogeneous());
            prop_assert!(f.degree().unwrap() <= e);
            prop_assert!(f.substitute(&p).is_zero());
            Ok(())
        }),
    )
}

fn fan_resolution() -> Result<(), String> {
    let extra = prop::collection::vec((-5i64..=5, -5i64..=5), 0..6);
    outcome(
        "resolution is idempotent",
        runner().run(&extra, |extra| {
            let mut rays: BTreeSet<PrimVec> =
                [(1, 0), (0, 1), (-1, -1)].iter().map(|&(a, b)| PrimVec::from_i64(&[a, b]).unwrap()).collect();
            rays.extend(extra.iter().filter_map(|&(a, b)| primitive(&ints(&[a, b])).ok()));
            let f = Fan2D::complete(rays.into_iter().collect()).unwrap();
            let res = resolve(&f).unwrap();
            prop_assert!(res.fan.is_smooth());
            prop_assert_eq!(res.provenance.len(), f.rays().len());
            for (i, &j) in res.provenance.iter().enumerate() {
                prop_assert_eq!(&res.fan.rays()[j], &f.rays()[i]);
            }
            let again = resolve(&res.fan).unwrap();
            prop_assert_eq!(&again.fan, &res.fan);
            prop_assert!(again.exceptional().is_empty());
            Ok(())
        }),
    )
}

type Suite = fn() -> Result<(), String>;

fn report(number: u32, title: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] criterion {number:>2}: {title} ({detail})");
}

fn main() -> ExitCode {
    let checks = verify::all();
    let mut ok = true;
    for c in &CRITERIA {
        let mine: Vec<&Check> = checks.iter().filter(|k| (c.ids)(&k.id)).collect();
        let failed: Vec<&str> = mine.iter().filter(|k| !k.pass).map(|k| k.id.as_str()).collect();
        let pass = !mine.is_empty() && failed.is_empty();
        let detail =
            if failed.is_empty() { format!("{} checks", mine.len()) } else { format!("failed: {}", failed.join(", ")) };
        report(c.number, c.title, pass, &detail);
        for k in mine.iter().filter(|k| !k.pass) {
            println!("    {}: expected {:?}, got {:?}", k.id, k.expected, k.actual);
        }
        ok &= pass;
    }
    let stray: Vec<&str> =
        checks.iter().filter(|k| !CRITERIA.iter().any(|c| (c.ids)(&k.id))).map(|k| k.id.as_str()).collect();
    if !stray.is_empty() {
        println!("[FAIL] unassigned checks: {}", stray.join(", "));
        ok = false;
    }

    let suites: [(&str, Suite); 4] = [
        ("hull/dual cone", hull_and_dual),
        ("gcd/compose", gcd_and_compose),
        ("implicitization", implicitization),
        ("fan resolution", fan_resolution),
    ];
    let errors: Vec<String> = suites.iter().filter_map(|(_, s)| s().err()).collect();
    let detail = if errors.is_empty() {
        format!("{} suites x {CASES} cases, 0 failures", suites.len())
    } else {
        errors.join("; ")
    };
    report(11, "property suites", errors.is_empty(), &detail);
    ok &= errors.is_empty();

    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
