use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use matroid_kl::closedforms::{p_kh, z_uniform};
use matroid_kl::lab::{random_sparse_paving, verify_appendix};
use matroid_kl::matroid::{projective_geometry, thagomizer, uniform};
use matroid_kl::tableaux::{enumerate_fillings, TableauShape};
use matroid_kl::{tutte, KlCache};

fn kl_recursion(c: &mut Criterion) {
    let mut g = c.benchmark_group("kl_recursion");
    for (k, n) in [(3, 8), (4, 10), (5, 12)] {
        let m = uniform(k, n).unwrap();
        g.bench_with_input(
            BenchmarkId::new("uniform", format!("{k},{n}")),
            &m,
            |b, m| b.iter(|| KlCache::new(black_box(m)).z()),
        );
    }
    let pg = projective_geometry(3, 2).unwrap();
    g.bench_function("PG(3,2)", |b| {
        b.iter(|| KlCache::new(black_box(&pg)).gamma().unwrap())
    });
    let sp = random_sparse_paving(5, 11, 30, 1).unwrap().matroid();
    g.bench_function("sparse paving k=5 n=11", |b| {
        b.iter(|| KlCache::new(black_box(&sp)).p())
    });
    g.finish();
}

fn tutte_expansion(c: &mut Criterion) {
    let mut g = c.benchmark_group("tutte");
    for n in [2, 3, 4] {
        let m = thagomizer(n).unwrap();
        g.bench_with_input(BenchmarkId::new("thagomizer", n), &m, |b, m| {
            b.iter(|| tutte(black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn closed_forms(c: &mut Criterion) {
    c.bench_function("z_uniform(6,14)", |b| {
        b.iter(|| z_uniform(black_box(6), black_box(14)).unwrap())
    });
    c.bench_function("p_kh(7,12)", |b| {
        b.iter(|| p_kh(black_box(7), black_box(12)).unwrap())
    });
    c.bench_function("verify_appendix(20)", |b| {
        b.iter(|| verify_appendix(black_box(20)))
    });
}

fn tableau_walks(c: &mut Criterion) {
    // counts are memoised process-wide, so time the filling walk instead
    let shape = TableauShape::syt(4, 2, 5);
    c.bench_function("enumerate syt(4,2,5)", |b| {
        b.iter(|| enumerate_fillings(black_box(&shape)).unwrap().count())
    });
    let skew = TableauShape::skyt(4, 2, 6).barred();
    c.bench_function("enumerate barred skyt(4,2,6)", |b| {
        b.iter(|| enumerate_fillings(black_box(&skew)).unwrap().count())
    });
}

criterion_group!(
    benches,
    kl_recursion,
    tutte_expansion,
    closed_forms,
    tableau_walks
);
criterion_main!(benches);
