use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hyperball::coxbraid::{check_relators, relator_suite, Assignment};
use hyperball::exactnum::{CycElem, Rat, RealQuad};
use hyperball::geometry::batches::{self, BoundedEnumerator};
use hyperball::geometry::classify::Polygon;
use hyperball::geometry::cosh_sq_dist;
use hyperball::lattice::{a4_graph, enumerate_by_norm, gram_from_graph, GramLattice};
use hyperball::model::{Model, PolygonCase};

fn field(c: &mut Criterion) {
    let x = CycElem::new(RealQuad::frac(3, 7, -2, 5), RealQuad::frac(-1, 3, 4, 9));
    let y = CycElem::new(RealQuad::frac(5, 2, 1, 11), RealQuad::frac(7, 4, -3, 8));
    c.bench_function("cyc_mul", |b| b.iter(|| black_box(&x) * black_box(&y)));
    c.bench_function("cyc_inv", |b| b.iter(|| black_box(&x).inv()));
    let m = Model::get();
    c.bench_function("cosh_sq_dist", |b| b.iter(|| cosh_sq_dist(black_box(&m.tau), black_box(&m.rho))));
}

fn lattice(c: &mut Criterion) {
    let l4 = GramLattice::from_gram(gram_from_graph(&a4_graph()));
    let mut g = c.benchmark_group("lattice");
    g.sample_size(10);
    g.bench_function("l4_norm_6_shell", |b| b.iter(|| enumerate_by_norm(&l4, &Rat::int(6)).unwrap().len()));
    g.finish();
}

fn batches(c: &mut Criterion) {
    let center = batches::named_center("c").unwrap();
    let en = BoundedEnumerator::new(&center).unwrap();
    let norms = en.critical_norms(7);
    let mut g = c.benchmark_group("batches");
    g.sample_size(10);
    g.bench_function("c_batch_1", |b| b.iter(|| en.classes_with_pi_norm(norms[1]).len()));
    g.bench_function("batch_table_rows_b2", |b| b.iter(|| batches::enumerate_batch_table(2).len()));
    g.finish();
}

fn classify(c: &mut Criterion) {
    let m = Model::get();
    let p = Polygon::new(m.polygon(PolygonCase::Quadrilateral).vertices).unwrap();
    let roots = batches::batch("c", 1, None).unwrap().roots;
    c.bench_function("classify_quadrilateral_c_batch_1", |b| {
        b.iter(|| roots.iter().filter(|r| !p.classify_root(&r[..]).is_miss()).count())
    });
}

fn relators(c: &mut Criterion) {
    let rs = relator_suite("artin_a11").unwrap();
    let s12 = Assignment::transpositions();
    let mut g = c.benchmark_group("relators");
    g.sample_size(10);
    g.bench_function("artin_a11_in_s12", |b| b.iter(|| check_relators(&rs, &s12).unwrap().all_pass()));
    g.bench_function("artin_a11_triflections", |b| {
        b.iter(|| check_relators(&rs, &Assignment::Triflections).unwrap().all_pass())
    });
    g.finish();
}

criterion_group!(benches, field, lattice, batches, classify, relators);
criterion_main!(benches);
