use criterion::{black_box, criterion_group, criterion_main, Criterion};
use flagquot::antican::{curve_images_in_p4, quadric_relations};
use flagquot::chowx::{automorphisms, intersection_table, mori_cone, nef_generators};
use flagquot::cremona::{boundary_curve, curve_image, gcd, weyl_cremona};
use flagquot::polyhedra::{dual_cone, hull_3d};
use flagquot::quotfan::reference_quotient_fan;
use flagquot::toricsurf::surface_invariants;
use flagquot::verify;
use flagquot::weylc2::{weyl_elements, BoundaryLabel};
use flagquot_bench::{cone_generators, gcd_pair, hull_points};

fn polyhedra(c: &mut Criterion) {
    let pts = hull_points();
    c.bench_function("hull_3d/14 points", |b| b.iter(|| hull_3d(black_box(&pts)).unwrap()));
    let gens = cone_generators();
    c.bench_function("dual_cone/4d", |b| b.iter(|| dual_cone(4, black_box(&gens))));
    c.bench_function("quotient_fan/orthant", |b| b.iter(reference_quotient_fan));
    let f = reference_quotient_fan().unwrap();
    c.bench_function("surface_invariants/xe", |b| b.iter(|| surface_invariants(black_box(&f)).unwrap()));
}

fn cremona(c: &mut Criterion) {
    let (a, g) = gcd_pair();
    c.bench_function("gcd/ternary quintics", |b| b.iter(|| gcd(black_box(&a), black_box(&g))));
    let w0 = weyl_elements().pop().unwrap();
    c.bench_function("weyl_cremona/w0", |b| b.iter(|| weyl_cremona(black_box(&w0))));
    let m = weyl_cremona(&w0);
    let conic = boundary_curve(BoundaryLabel::A3);
    c.bench_function("curve_image/w0 conic", |b| b.iter(|| curve_image(black_box(&m), black_box(&conic)).unwrap()));
}

fn surface(c: &mut Criterion) {
    c.bench_function("intersection_table", |b| b.iter(intersection_table));
    c.bench_function("mori_cone", |b| b.iter(|| mori_cone().unwrap()));
    c.bench_function("nef_generators", |b| b.iter(nef_generators));
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("automorphisms/8! search", |b| b.iter(automorphisms));
    g.bench_function("curve_images_in_p4", |b| b.iter(|| curve_images_in_p4().unwrap()));
    g.bench_function("quadric_relations", |b| b.iter(|| quadric_relations().unwrap()));
    g.bench_function("verify/all", |b| b.iter(verify::all));
    g.finish();
}

criterion_group!(benches, polyhedra, cremona, surface);
criterion_main!(benches);
