use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hv_core::operators::FOperator;
use hv_core::verifier::{check_conjecture, check_toda};
use hv_core::wronskian::{build_psi, determinant, wronskian_matrix, DetAlgorithm, FamilyKind};
use hv_core::TauFamily;

fn family_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("family_build");
    group.sample_size(10);
    for n in 2..=4 {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| TauFamily::build(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn determinants(c: &mut Criterion) {
    let psi = build_psi();
    let mut group = c.benchmark_group("determinant");
    group.sample_size(10);
    for n in 2..=3 {
        let m = wronskian_matrix(&psi, n);
        group.bench_with_input(BenchmarkId::new("fraction_free", n), &m, |b, m| {
            b.iter(|| determinant(black_box(m), DetAlgorithm::FractionFree).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("cofactor", n), &m, |b, m| {
            b.iter(|| determinant(black_box(m), DetAlgorithm::Cofactor).unwrap())
        });
    }
    group.finish();
}

fn identities(c: &mut Criterion) {
    let fam = TauFamily::build(4).unwrap();
    let mut group = c.benchmark_group("identities");
    group.sample_size(10);
    for n in 1..=3 {
        group.bench_with_input(BenchmarkId::new("toda", n), &n, |b, &n| {
            b.iter(|| check_toda(&fam, n, FamilyKind::G))
        });
        group.bench_with_input(BenchmarkId::new("conjecture", n), &n, |b, &n| {
            b.iter(|| check_conjecture(&fam, n))
        });
    }
    let (g, f) = (fam.g(3).coeff_of_t(0), fam.f(3).coeff_of_t(0));
    group.bench_function("f_operator_n3", |b| {
        b.iter(|| FOperator::new(3).apply(black_box(&g), black_box(&f)))
    });
    group.finish();
}

criterion_group!(benches, family_build, determinants, identities);
criterion_main!(benches);
